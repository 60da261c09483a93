// Bundled example covers used by the CLI, the self test, and the acceptance
// suite: the real projective family over simplices, tori over cubes, the
// orientable genus-2 surface over the hexagon, and non-orientable controls.

#ifndef SMC_FIXTURES_HPP
#define SMC_FIXTURES_HPP

#include <vector>

#include "smallcover/json_io.hpp"

namespace smc {

const std::vector<Fixture>& bundled_fixtures();

const Fixture& fixture_by_name(const std::string& name);  // throws if absent

}  // namespace smc

#endif
