#include "orthopara/spectra.hpp"

#include "orthopara/constants.hpp"
#include "orthopara/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

namespace orthopara {

namespace {

constexpr std::string_view orbital_letters = "SPDFGHIKLMNOQRTUV";

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view s, int& out)
{
    if (s.empty())
        return false;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

std::vector<std::string_view> split(std::string_view line, char delimiter)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(delimiter, start);
        fields.push_back(trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return fields;
}

double parse_energy(std::string_view field, const ParserConfig& config)
{
    const auto split_at = field.find_first_of(" \t");
    const auto number = field.substr(0, split_at);
    const auto unit_token =
        split_at == std::string_view::npos ? std::string_view{} : trim(field.substr(split_at));

    double value = 0.0;
    const auto* end = number.data() + number.size();
    auto [ptr, ec] = std::from_chars(number.data(), end, value);
    if (number.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw Error(ErrorCode::MalformedRow, "energy '" + std::string(number) + "' is not a finite number");

    EnergyUnit unit = config.default_unit;
    if (unit_token == "eV")
        unit = EnergyUnit::ElectronVolt;
    else if (unit_token == "cm-1")
        unit = EnergyUnit::InverseCentimeter;
    else if (!unit_token.empty())
        throw Error(ErrorCode::UnknownUnit, "unknown energy unit '" + std::string(unit_token) + "'");
    else if (!config.allow_missing_unit)
        throw Error(ErrorCode::UnknownUnit, "energy field has no unit token");

    if (value < 0.0)
        throw Error(ErrorCode::NegativeEnergy, "negative energy " + std::string(number));
    return to_electron_volts(value, unit);
}

EnergyLevel parse_row(std::string_view line, const ParserConfig& config)
{
    const auto fields = split(line, config.delimiter);
    if (fields.size() != 4)
        throw Error(ErrorCode::MalformedRow,
                    "expected 4 fields, found " + std::to_string(fields.size()));
    if (fields[0].empty())
        throw Error(ErrorCode::MalformedRow, "empty configuration");

    EnergyLevel level;
    level.configuration = std::string(fields[0]);
    level.term = std::string(fields[1]);
    const auto term = parse_term(fields[1]);
    level.multiplicity = term.multiplicity;
    level.orbital_l = term.orbital_l;
    level.j = HalfInteger::parse(fields[2]);
    level.energy_ev = parse_energy(fields[3], config);
    return level;
}

}  // namespace

HalfInteger HalfInteger::parse(std::string_view text)
{
    text = trim(text);
    const auto slash = text.find('/');
    int numerator = 0;
    int denominator = 1;
    bool ok = false;
    if (slash == std::string_view::npos)
        ok = parse_int(text, numerator);
    else
        ok = parse_int(text.substr(0, slash), numerator) && parse_int(text.substr(slash + 1), denominator);

    if (!ok || denominator <= 0 || numerator < 0 || numerator > 1000000 || (2 * numerator) % denominator != 0)
        throw Error(ErrorCode::MalformedJ,
                    "J '" + std::string(text) + "' is not a non-negative multiple of 1/2");
    return HalfInteger(2 * numerator / denominator);
}

std::string HalfInteger::to_string() const
{
    if (is_integer())
        return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

TermSymbol parse_term(std::string_view term)
{
    term = trim(term);
    const auto bad = [&](const std::string& why) {
        return Error(ErrorCode::MalformedTerm, "term '" + std::string(term) + "': " + why);
    };

    std::size_t pos = 0;
    while (pos < term.size() && term[pos] >= '0' && term[pos] <= '9')
        ++pos;
    int multiplicity = 0;
    if (!parse_int(term.substr(0, pos), multiplicity))
        throw bad("missing multiplicity");
    if (multiplicity != 1 && multiplicity != 3)
        throw bad("multiplicity must be 1 or 3");
    if (pos >= term.size())
        throw bad("missing L letter");

    const auto letter = orbital_letters.find(term[pos]);
    if (letter == std::string_view::npos)
        throw bad("unknown L letter");
    ++pos;

    TermSymbol out{multiplicity, static_cast<int>(letter), false};
    const auto parity = term.substr(pos);
    if (parity == "*" || parity == "o" || parity == "\xC2\xB0")
        out.odd_parity = true;
    else if (!parity.empty())
        throw bad("unexpected trailing '" + std::string(parity) + "'");
    return out;
}

char orbital_letter(int l)
{
    if (l < 0 || l >= static_cast<int>(orbital_letters.size()))
        throw Error(ErrorCode::InvalidArgument, "no spectroscopic letter for L = " + std::to_string(l));
    return orbital_letters[static_cast<std::size_t>(l)];
}

double to_electron_volts(double value, EnergyUnit unit)
{
    switch (unit) {
    case EnergyUnit::ElectronVolt: return value;
    case EnergyUnit::InverseCentimeter: return value * constants::ev_per_inverse_cm;
    }
    return value;
}

std::vector<EnergyLevel> parse_level_table(std::istream& source, const ParserConfig& config)
{
    std::vector<EnergyLevel> levels;
    std::vector<RowError> errors;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(source, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        try {
            levels.push_back(parse_row(line, config));
        }
        catch (const Error& e) {
            errors.push_back({line_no, e.code(), e.what()});
        }
    }
    if (!errors.empty())
        throw ParseError(std::move(errors));
    return levels;
}

std::vector<EnergyLevel> parse_level_table(std::string_view text, const ParserConfig& config)
{
    std::istringstream in{std::string(text)};
    return parse_level_table(in, config);
}

std::vector<EnergyLevel> load_level_table(const std::string& path, const ParserConfig& config)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot open level table '" + path + "'");
    return parse_level_table(in, config);
}

void write_level_table(std::ostream& out, std::span<const EnergyLevel> levels)
{
    char energy[64];
    for (const auto& level : levels) {
        std::snprintf(energy, sizeof energy, "%.17g", level.energy_ev);
        out << level.configuration << " | " << level.term << " | " << level.j.to_string() << " | "
            << energy << " eV\n";
    }
}

std::string format_level_table(std::span<const EnergyLevel> levels)
{
    std::ostringstream os;
    write_level_table(os, levels);
    return os.str();
}

double broadening_from_lifetime(double tau_s)
{
    if (!(tau_s > 0.0) || !std::isfinite(tau_s))
        throw Error(ErrorCode::NonPositiveLifetime, "lifetime must be positive and finite");
    return constants::hbar_ev_s / tau_s;
}

std::vector<DegeneratePair> find_degenerate_pairs(std::span<const EnergyLevel> levels,
                                                  double broadening_ev,
                                                  const PairSearchOptions& options)
{
    if (!(broadening_ev > 0.0))
        throw Error(ErrorCode::NonPositiveBroadening, "broadening must be positive");

    std::vector<DegeneratePair> pairs;
    for (const auto& ortho : levels) {
        if (!ortho.is_ortho())
            continue;
        for (const auto& para : levels) {
            if (!para.is_para())
                continue;
            if (options.require_same_configuration && ortho.configuration != para.configuration)
                continue;
            const double delta = std::abs(ortho.energy_ev - para.energy_ev);
            if (delta <= broadening_ev)
                pairs.push_back({ortho, para, delta, broadening_ev});
        }
    }

    const auto key = [](const DegeneratePair& p) {
        return std::tie(p.delta_e, p.ortho.energy_ev, p.para.energy_ev, p.ortho.configuration,
                        p.ortho.term, p.ortho.j, p.para.configuration, p.para.term, p.para.j);
    };
    std::sort(pairs.begin(), pairs.end(),
              [&](const DegeneratePair& a, const DegeneratePair& b) { return key(a) < key(b); });
    return pairs;
}

}  // namespace orthopara
