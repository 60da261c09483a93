// The acceptance criteria, one entry per verified statement, shared by the
// standalone acceptance runner and the CLI self test.  Every check is exact:
// GF(2) ranks, cell counts, and element-for-element group comparisons.

#ifndef SMC_ACCEPTANCE_HPP
#define SMC_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace smc {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the criteria whose name contains the filter substring (all when
// empty).  Never throws; an exception inside a criterion marks it failed
// with the message in detail.
std::vector<CriterionResult> run_acceptance(const std::string& filter = "");

}  // namespace smc

#endif
