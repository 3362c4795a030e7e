#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orthopara {

/// Non-negative multiple of 1/2, stored as twice its value.
class HalfInteger
{
  public:
    constexpr HalfInteger() = default;

    static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }

    /// Parse "2", "5/2" or "4/2".  Throws Error(MalformedJ) on anything that
    /// is not a non-negative multiple of 1/2.
    static HalfInteger parse(std::string_view text);

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    std::string to_string() const;

    friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

  private:
    constexpr explicit HalfInteger(int twice) : twice_(twice) {}

    int twice_ = 0;
};

enum class EnergyUnit { ElectronVolt, InverseCentimeter };

/// One row of a spectroscopic level table.
struct EnergyLevel
{
    std::string configuration;  // e.g. "1s4f"
    std::string term;           // e.g. "3F*"; '*' (or 'o') marks odd parity
    HalfInteger j;
    double energy_ev = 0.0;
    int multiplicity = 1;  // 1 = para (singlet), 3 = ortho (triplet)
    int orbital_l = 0;

    bool is_ortho() const { return multiplicity == 3; }
    bool is_para() const { return multiplicity == 1; }

    friend bool operator==(const EnergyLevel&, const EnergyLevel&) = default;
};

struct ParserConfig
{
    /// Unit assumed for energy fields with no unit token.
    EnergyUnit default_unit = EnergyUnit::ElectronVolt;
    /// When false, an energy field without a unit token is a row error.
    bool allow_missing_unit = false;
    char delimiter = '|';
};

/// Multiplicity and total L decoded from a term symbol such as "3F*".
struct TermSymbol
{
    int multiplicity = 1;
    int orbital_l = 0;
    bool odd_parity = false;
};

/// Throws Error(MalformedTerm) unless the multiplicity is 1 or 3 and the L
/// letter is a spectroscopic letter.
TermSymbol parse_term(std::string_view term);

/// Spectroscopic letter for L (S, P, D, F, G, H, I, K, ...).
char orbital_letter(int l);

double to_electron_volts(double value, EnergyUnit unit);

/// Parse a pipe-delimited `configuration | term | J | energy unit` table.
/// Rows are returned in source order.  All row errors are collected and
/// reported together in a ParseError.
std::vector<EnergyLevel> parse_level_table(std::istream& source, const ParserConfig& config = {});
std::vector<EnergyLevel> parse_level_table(std::string_view text, const ParserConfig& config = {});
std::vector<EnergyLevel> load_level_table(const std::string& path, const ParserConfig& config = {});

/// Emit levels in the same format parse_level_table reads.  Energies are
/// written in eV with enough digits to round-trip exactly.
void write_level_table(std::ostream& out, std::span<const EnergyLevel> levels);
std::string format_level_table(std::span<const EnergyLevel> levels);

/// Natural linewidth hbar / tau in eV.
double broadening_from_lifetime(double tau_s);

struct DegeneratePair
{
    EnergyLevel ortho;
    EnergyLevel para;
    double delta_e = 0.0;     // |E_ortho - E_para| in eV
    double broadening = 0.0;  // tolerance used for the decision, eV

    friend bool operator==(const DegeneratePair&, const DegeneratePair&) = default;
};

struct PairSearchOptions
{
    /// Only pair levels that share a configuration label.
    bool require_same_configuration = false;
};

/// Every ortho/para cross pair with |E_ortho - E_para| <= broadening, sorted
/// by delta_e, then ortho energy, then para energy.  J is not required to
/// match.
std::vector<DegeneratePair> find_degenerate_pairs(std::span<const EnergyLevel> levels,
                                                  double broadening_ev,
                                                  const PairSearchOptions& options = {});

}  // namespace orthopara
