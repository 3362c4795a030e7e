#include "cli/grid.hpp"

#include "orthopara/error.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace orthopara::cli {

namespace {

Error bad_grid(std::string_view spec, const std::string& why)
{
    return Error(ErrorCode::InvalidArgument, "invalid grid '" + std::string(spec) + "': " + why);
}

}  // namespace

std::vector<double> linear_grid(double start, double stop, std::size_t count)
{
    if (count == 0)
        throw Error(ErrorCode::InvalidArgument, "grid needs at least one point");
    std::vector<double> grid(count);
    if (count == 1) {
        grid[0] = start;
        return grid;
    }
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = start + step * static_cast<double>(i);
    grid.back() = stop;
    return grid;
}

std::vector<double> log_grid(double start, double stop, std::size_t count)
{
    if (!(start > 0.0) || !(stop > 0.0))
        throw Error(ErrorCode::InvalidArgument, "logarithmic grid needs positive end points");
    auto exponents = linear_grid(std::log10(start), std::log10(stop), count);
    for (auto& x : exponents)
        x = std::pow(10.0, x);
    exponents.front() = start;
    if (count > 1)
        exponents.back() = stop;
    return exponents;
}

std::vector<double> parse_grid(std::string_view spec)
{
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    while (true) {
        const auto colon = spec.find(':', begin);
        parts.push_back(spec.substr(begin, colon - begin));
        if (colon == std::string_view::npos)
            break;
        begin = colon + 1;
    }
    if (parts.size() != 4)
        throw bad_grid(spec, "expected kind:start:stop:count");

    double bounds[2];
    for (int i = 0; i < 2; ++i) {
        const auto part = parts[1 + i];
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), bounds[i]);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || !std::isfinite(bounds[i]))
            throw bad_grid(spec, "'" + std::string(part) + "' is not a number");
    }
    std::size_t count = 0;
    const auto part = parts[3];
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), count);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || count == 0)
        throw bad_grid(spec, "count must be a positive integer");

    if (parts[0] == "lin")
        return linear_grid(bounds[0], bounds[1], count);
    if (parts[0] == "log")
        return log_grid(bounds[0], bounds[1], count);
    throw bad_grid(spec, "kind must be 'lin' or 'log'");
}

}  // namespace orthopara::cli
