#pragma once

#include <iosfwd>
#include <span>

#include "regdepth/dataset.hpp"
#include "regdepth/types.hpp"

namespace regdepth {

// Square grid of candidate (beta1, beta2) values: steps points per axis from
// lo to hi inclusive, steps^2 total.
struct GridSpec {
  double lo = -3.0;
  double hi = 3.0;
  int steps = 31;
};

struct GridRow {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double depth = 0.0;
};

// Depth of every grid point treated as a candidate fit, row-major with beta1
// as the outer (ascending) axis.  notion must be RD or PRD and the dataset
// p = 2.  threads > 1 evaluates grid points concurrently; the output order
// is always the same.
std::vector<GridRow> depth_gridmap(const Dataset& d, Notion notion,
                                   const GridSpec& spec, int threads = 1);

// Header "beta1,beta2,depth", values formatted %.7g.
void write_gridmap_csv(std::span<const GridRow> rows, std::ostream& out);

}  // namespace regdepth
