#pragma once

#include <iosfwd>
#include <string>

#include "regdepth/dataset.hpp"
#include "regdepth/fit.hpp"

namespace regdepth {

// %.7g, the fixed float format for all CSV output.
std::string format_g7(double v);

// Dataset CSV: header "x1,...,x{p-1},y" (just "y" when p = 1), one
// observation per row, '.' decimal point.  Throws std::invalid_argument on
// malformed input.
Dataset load_dataset_csv(const std::string& path);
Dataset parse_dataset_csv(std::istream& in, const std::string& origin = "<stream>");
void write_dataset_csv(const Dataset& d, std::ostream& out);

// Columns: i,x1,...,x{p-1},y,yhat_<name>...,r_<name>...
void write_residual_table_csv(const ResidualTable& table, std::ostream& out);

}  // namespace regdepth
