#pragma once

#include <string>

#include "regdepth/dataset.hpp"

namespace regdepth {

// Embedded datasets:
//   stars     - 47 stars of the CYG OB1 cluster (Hertzsprung-Russell data,
//               Rousseeuw & Leroy 1987, ch. 2 table 3): x = log effective
//               surface temperature, y = log light intensity.
//   abc       - the three points (-1,0), (0,1), (1,0).
//   two_lines - 20 points, half on y = x and half on y = -x, carriers
//               +-1..+-5 (make_two_lines(10)).
//   symm30    - 30 points symmetric under (x,y) -> (-x,-y) and (x,y) -> (x,-y).
// Unknown names throw std::invalid_argument.
Dataset load_fixture(const std::string& name);

// m/2 points on y = x and m/2 on y = -x at carriers +-1..+-(m/2); m even.
Dataset make_two_lines(int m);

std::vector<std::string> fixture_names();

}  // namespace regdepth
