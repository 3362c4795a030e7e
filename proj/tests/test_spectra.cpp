#include "doctest.h"

#include "orthopara/constants.hpp"
#include "orthopara/error.hpp"
#include "orthopara/spectra.hpp"

#include <algorithm>
#include <random>
#include <cctype>
#include <cstdio>

using namespace orthopara;

namespace {

const std::string bundled_table = std::string(ORTHOPARA_DATA_DIR) + "/helium_levels.txt";

ErrorCode row_code(std::string_view text, std::size_t expected_line)
{
    try {
        parse_level_table(text);
    }
    catch (const ParseError& e) {
        REQUIRE(e.rows().size() == 1);
        CHECK(e.rows().front().line == expected_line);
        return e.rows().front().code;
    }
    FAIL("expected a ParseError");
    return ErrorCode::InvalidArgument;
}

const DegeneratePair* find_pair(const std::vector<DegeneratePair>& pairs, std::string_view config, int ortho_twice_j,
                                int para_twice_j)
{
    for (const auto& p : pairs)
        if (p.ortho.configuration == config && p.para.configuration == config &&
            p.ortho.j.twice() == ortho_twice_j && p.para.j.twice() == para_twice_j)
            return &p;
    return nullptr;
}

EnergyLevel random_level(std::mt19937_64& gen, double lo, double hi)
{
    std::uniform_real_distribution<double> energy(lo, hi);
    std::uniform_int_distribution<int> l(0, 4), twice_j(0, 12), coin(0, 1);
    const int mult = coin(gen) ? 3 : 1;
    const int orbital = l(gen);
    EnergyLevel level;
    level.configuration = "1s" + std::to_string(orbital + 2) + static_cast<char>(std::tolower(orbital_letter(orbital)));
    level.term = std::to_string(mult) + orbital_letter(orbital) + (orbital % 2 ? "*" : "");
    level.multiplicity = mult;
    level.orbital_l = orbital;
    level.j = HalfInteger::from_twice(twice_j(gen));
    level.energy_ev = energy(gen);
    return level;
}

}  // namespace

TEST_CASE("inverse centimetres are converted to eV")
{
    const auto levels = parse_level_table("1s4f | 3F* | 2 | 191492.711 cm-1\n");
    REQUIRE(levels.size() == 1);
    const auto& level = levels.front();
    CHECK(level.configuration == "1s4f");
    CHECK(level.term == "3F*");
    CHECK(level.multiplicity == 3);
    CHECK(level.is_ortho());
    CHECK(level.orbital_l == 3);
    CHECK(level.j == HalfInteger::from_twice(4));
    // 191492.711 * 1.239841984e-4 evaluated by hand in 40-digit arithmetic.
    CHECK(level.energy_ev == doctest::Approx(23.7420702727778624).epsilon(1e-15));
}

TEST_CASE("empty and comment-only tables parse to nothing")
{
    CHECK(parse_level_table("").empty());
    CHECK(parse_level_table("# only a comment\n\n   \n# another\n").empty());
}

TEST_CASE("row order is preserved and both units are accepted")
{
    const auto levels = parse_level_table("a | 1S | 0 | 2 eV\n"
                                          "b | 3S | 1 | 1 eV\n"
                                          "c | 1P* | 1 | 10000 cm-1\r\n");
    REQUIRE(levels.size() == 3);
    CHECK(levels[0].configuration == "a");
    CHECK(levels[1].configuration == "b");
    CHECK(levels[2].configuration == "c");
    CHECK(levels[2].energy_ev == doctest::Approx(1.239841984));
}

TEST_CASE("bad rows are rejected with their line number")
{
    CHECK(row_code("# header\n1s4f | 2F* | 3 | 1 eV\n", 2) == ErrorCode::MalformedTerm);
    CHECK(row_code("x | 5S | 2 | 1 eV\n", 1) == ErrorCode::MalformedTerm);
    CHECK(row_code("x | 3 | 2 | 1 eV\n", 1) == ErrorCode::MalformedTerm);
    CHECK(row_code("x | 3J | 2 | 1 eV\n", 1) == ErrorCode::MalformedTerm);
    CHECK(row_code("x | 3Fx | 2 | 1 eV\n", 1) == ErrorCode::MalformedTerm);
    CHECK(row_code("x | 3F | 1/3 | 1 eV\n", 1) == ErrorCode::MalformedJ);
    CHECK(row_code("x | 3F | -1 | 1 eV\n", 1) == ErrorCode::MalformedJ);
    CHECK(row_code("x | 3F | 2.5 | 1 eV\n", 1) == ErrorCode::MalformedJ);
    CHECK(row_code("x | 3F | 2 | 1 kJ\n", 1) == ErrorCode::UnknownUnit);
    CHECK(row_code("x | 3F | 2 | 1\n", 1) == ErrorCode::UnknownUnit);
    CHECK(row_code("x | 3F | 2 | -1 eV\n", 1) == ErrorCode::NegativeEnergy);
    CHECK(row_code("x | 3F | 2\n", 1) == ErrorCode::MalformedRow);
    CHECK(row_code("x | 3F | 2 | nan eV\n", 1) == ErrorCode::MalformedRow);
    CHECK(row_code(" | 3F | 2 | 1 eV\n", 1) == ErrorCode::MalformedRow);
}

TEST_CASE("every bad row is reported, not just the first")
{
    try {
        parse_level_table("ok | 1S | 0 | 1 eV\nbad | 2S | 0 | 1 eV\nok | 3S | 1 | 2 eV\nbad | 3S | 1/5 | 1 eV\n");
        FAIL("expected ParseError");
    }
    catch (const ParseError& e) {
        REQUIRE(e.rows().size() == 2);
        CHECK(e.rows()[0].line == 2);
        CHECK(e.rows()[0].code == ErrorCode::MalformedTerm);
        CHECK(e.rows()[1].line == 4);
        CHECK(e.rows()[1].code == ErrorCode::MalformedJ);
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("missing unit tokens can fall back to a configured unit")
{
    ParserConfig config;
    config.allow_missing_unit = true;
    config.default_unit = EnergyUnit::InverseCentimeter;
    const auto levels = parse_level_table("x | 1S | 0 | 1000\n", config);
    REQUIRE(levels.size() == 1);
    CHECK(levels[0].energy_ev == doctest::Approx(0.1239841984));
}

TEST_CASE("J accepts integers and p/q multiples of one half")
{
    CHECK(HalfInteger::parse("0").twice() == 0);
    CHECK(HalfInteger::parse("3").twice() == 6);
    CHECK(HalfInteger::parse("5/2").twice() == 5);
    CHECK(HalfInteger::parse("4/2").twice() == 4);
    CHECK(HalfInteger::parse("7/2").to_string() == "7/2");
    CHECK(HalfInteger::parse("6/2").to_string() == "3");
    CHECK_THROWS_AS(HalfInteger::parse("3/0"), Error);
    CHECK_THROWS_AS(HalfInteger::parse(""), Error);
    CHECK_THROWS_AS(HalfInteger::parse("a"), Error);
}

TEST_CASE("term symbols decode multiplicity, L and parity")
{
    CHECK(parse_term("1S").orbital_l == 0);
    CHECK(parse_term("3P*").odd_parity);
    CHECK(parse_term("3P*").orbital_l == 1);
    CHECK(parse_term("1F\xC2\xB0").odd_parity);
    CHECK(parse_term("1Fo").multiplicity == 1);
    CHECK(parse_term("3K").orbital_l == 7);
    CHECK_FALSE(parse_term("1D").odd_parity);
}

TEST_CASE("broadening is hbar over the lifetime")
{
    CHECK(broadening_from_lifetime(1e-9) == doctest::Approx(6.582119569e-7).epsilon(1e-15));
    // Same order as the ~1e-6 eV uncertainty quoted for ~1 ns lifetimes.
    CHECK(broadening_from_lifetime(1e-9) > 1e-7);
    CHECK(broadening_from_lifetime(1e-9) < 1e-5);
    CHECK(broadening_from_lifetime(constants::hbar_ev_s) == 1.0);
    CHECK(broadening_from_lifetime(2e-9) == doctest::Approx(0.5 * broadening_from_lifetime(1e-9)).epsilon(1e-15));
    CHECK_THROWS_AS(broadening_from_lifetime(0.0), Error);
    CHECK_THROWS_AS(broadening_from_lifetime(-1e-9), Error);
}

TEST_CASE("bundled table yields the 1s4f and 1s5f near-degenerate pairs")
{
    const auto levels = load_level_table(bundled_table);
    const auto pairs = find_degenerate_pairs(levels, 1e-6);

    const auto* f4 = find_pair(pairs, "1s4f", 4, 6);
    REQUIRE(f4 != nullptr);
    CHECK(f4->ortho.term == "3F*");
    CHECK(f4->para.term == "1F*");
    CHECK(f4->delta_e == doctest::Approx(9e-7).epsilon(1e-6));
    CHECK(std::abs(f4->delta_e - 9e-7) < 1e-12);
    CHECK(f4->broadening == 1e-6);

    CHECK(find_pair(pairs, "1s5f", 4, 6) != nullptr);

    // The 1s2s levels are ~0.8 eV apart.
    for (const auto& p : pairs)
        CHECK(p.ortho.configuration != "1s2s");

    CHECK(std::is_sorted(pairs.begin(), pairs.end(),
                         [](const auto& a, const auto& b) { return a.delta_e < b.delta_e; }));
}

TEST_CASE("levels of equal multiplicity never pair")
{
    const auto levels = parse_level_table("a | 3S | 1 | 1 eV\nb | 3P* | 2 | 1 eV\nc | 1S | 0 | 5 eV\nd | 1D | 2 | 5 eV\n");
    CHECK(find_degenerate_pairs(levels, 1e-3).empty());
}

TEST_CASE("pair search edge cases")
{
    CHECK(find_degenerate_pairs({}, 1e-6).empty());
    const auto levels = parse_level_table("a | 3S | 1 | 1 eV\nb | 1S | 0 | 1.0000005 eV\n");
    CHECK_THROWS_AS(find_degenerate_pairs(levels, 0.0), Error);
    CHECK(find_degenerate_pairs(levels, 1e-6).size() == 1);
    CHECK(find_degenerate_pairs(levels, 1e-6, {true}).empty());
    CHECK(find_degenerate_pairs(levels, 1e-7).empty());

    // Exact boundary: delta_e == broadening is accepted.
    const auto boundary = parse_level_table("a | 3S | 1 | 0.5 eV\nb | 1S | 0 | 0.75 eV\n");
    CHECK(find_degenerate_pairs(boundary, 0.25).size() == 1);
}

TEST_CASE("pair search properties on random tables")
{
    std::mt19937_64 gen(12345);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<EnergyLevel> levels;
        const int count = 2 + static_cast<int>(gen() % 30);
        for (int i = 0; i < count; ++i)
            levels.push_back(random_level(gen, 10.0, 10.0 + 1e-5));

        const double b1 = 1e-7 * static_cast<double>(1 + gen() % 20);
        const double b2 = b1 * 1.7;
        const auto base = find_degenerate_pairs(levels, b1);

        // permutation invariance
        auto shuffled = levels;
        std::shuffle(shuffled.begin(), shuffled.end(), gen);
        CHECK(find_degenerate_pairs(shuffled, b1) == base);

        // monotone in the broadening
        const auto wider = find_degenerate_pairs(levels, b2);
        for (const auto& p : base)
            CHECK(std::find(wider.begin(), wider.end(), DegeneratePair{p.ortho, p.para, p.delta_e, b2}) !=
                  wider.end());

        for (const auto& p : wider) {
            CHECK(p.delta_e <= p.broadening);
            CHECK(p.ortho.multiplicity == 3);
            CHECK(p.para.multiplicity == 1);
        }
    }
}

TEST_CASE("parse, write, parse is the identity")
{
    std::mt19937_64 gen(777);
    for (int trial = 0; trial < 20; ++trial) {
        std::string table;
        for (int i = 0; i < 15; ++i) {
            const auto level = random_level(gen, 0.0, 30.0);
            const bool wavenumber = gen() % 2;
            char energy[64];
            std::snprintf(energy, sizeof energy, "%.9f %s", wavenumber ? level.energy_ev * 8065.5 : level.energy_ev,
                          wavenumber ? "cm-1" : "eV");
            table += level.configuration + " | " + level.term + " | " + level.j.to_string() + " | " + energy + "\n";
        }
        const auto first = parse_level_table(table);
        const auto second = parse_level_table(format_level_table(first));
        CHECK(first == second);
    }
}
