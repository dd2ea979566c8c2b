#include "regdepth/gridmap.hpp"

#include <future>
#include <ostream>

#include "regdepth/csv.hpp"
#include "regdepth/prd.hpp"
#include "regdepth/rd.hpp"

namespace regdepth {

std::vector<GridRow> depth_gridmap(const Dataset& d, Notion notion,
                                   const GridSpec& spec, int threads) {
  if (notion != Notion::RD && notion != Notion::PRD) {
    throw std::invalid_argument("depth_gridmap: notion must be rd or prd");
  }
  if (d.p() != 2) {
    throw std::invalid_argument("depth_gridmap: needs a p = 2 dataset");
  }
  if (spec.steps < 2 || !(spec.lo < spec.hi)) {
    throw std::invalid_argument("depth_gridmap: need steps >= 2 and lo < hi");
  }

  const int steps = spec.steps;
  const double h = (spec.hi - spec.lo) / (steps - 1);
  const std::size_t total = static_cast<std::size_t>(steps) * steps;
  std::vector<GridRow> rows(total);

  auto compute = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const int i = static_cast<int>(k) / steps;
      const int j = static_cast<int>(k) % steps;
      const Coefficients b{spec.lo + i * h, spec.lo + j * h};
      GridRow& row = rows[k];
      row.beta1 = b[0];
      row.beta2 = b[1];
      row.depth = (notion == Notion::RD) ? rd_depth(d, b).depth.value : prd(d, b);
    }
  };

  threads = std::max(1, threads);
  if (threads == 1) {
    compute(0, total);
    return rows;
  }

  const std::size_t chunk = (total + threads - 1) / threads;
  std::vector<std::future<void>> work;
  for (std::size_t begin = 0; begin < total; begin += chunk) {
    const std::size_t end = std::min(total, begin + chunk);
    work.push_back(std::async(std::launch::async, compute, begin, end));
  }
  for (auto& w : work) w.get();
  return rows;
}

void write_gridmap_csv(std::span<const GridRow> rows, std::ostream& out) {
  out << "beta1,beta2,depth\n";
  for (const auto& row : rows) {
    out << format_g7(row.beta1) << "," << format_g7(row.beta2) << ","
        << format_g7(row.depth) << "\n";
  }
}

}  // namespace regdepth
