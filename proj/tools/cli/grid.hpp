#pragma once

#include <string_view>
#include <vector>

namespace orthopara::cli {

/// "lin:start:stop:count" or "log:start:stop:count".  Linear grids include
/// both end points; logarithmic grids need 0 < start, stop.
std::vector<double> parse_grid(std::string_view spec);

std::vector<double> linear_grid(double start, double stop, std::size_t count);
std::vector<double> log_grid(double start, double stop, std::size_t count);

}  // namespace orthopara::cli
