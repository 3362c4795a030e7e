#include "doctest.h"

#include "oracles.hpp"
#include "orthopara/constants.hpp"
#include "orthopara/dynamics.hpp"
#include "orthopara/error.hpp"
#include "orthopara/spectra.hpp"

#include <cmath>
#include <random>

using namespace orthopara;

namespace {

const double pi = constants::pi;
const double r = 1.0 / std::sqrt(2.0);
const double helium_gamma_or = 1e-8;
const double helium_gamma_pa = 1.0 / 0.0197;

BeatModel model(SuperpositionState s, double g_or, double g_pa, double omega)
{
    return BeatModel::with_omega(s, g_or, g_pa, omega);
}

}  // namespace

TEST_CASE("decay channels store the real matrix element")
{
    const auto c = DecayChannel::make(Branch::Para, 20.6, 50.0);
    CHECK(c.matrix_element == doctest::Approx(std::sqrt(50.0)).epsilon(1e-15));
    CHECK_THROWS_AS(DecayChannel::make(Branch::Ortho, 0.0, 0.0), Error);
    CHECK_THROWS_AS(DecayChannel::make(Branch::Ortho, 0.0, -1.0), Error);
}

TEST_CASE("beat frequency follows the level energies")
{
    const BeatModel m(SuperpositionState(r, r), DecayChannel::make(Branch::Ortho, 19.8, 1.0),
                      DecayChannel::make(Branch::Para, 20.6, 2.0));
    CHECK(m.omega() == doctest::Approx(0.8 / constants::hbar_ev_s).epsilon(1e-12));
    CHECK_THROWS_AS(BeatModel(SuperpositionState(r, r), DecayChannel::make(Branch::Para, 0, 1),
                              DecayChannel::make(Branch::Para, 0, 1)),
                    Error);

    const auto scaled = model(SuperpositionState(r, r), 1.0, 2.0, 1234.5);
    CHECK(scaled.omega() == 1234.5);
    CHECK(beat_omega_from_levels(scaled.ortho().energy_ev, scaled.para().energy_ev) ==
          doctest::Approx(1234.5).epsilon(1e-12));
}

TEST_CASE("omega from levels")
{
    CHECK(beat_omega_from_levels(3.0, 3.0) == 0.0);
    CHECK(beat_omega_from_levels(0.0, constants::hbar_ev_s) == 1.0);
    CHECK(beat_omega_from_levels(1.0, 0.5) < 0.0);

    const auto levels = load_level_table(std::string(ORTHOPARA_DATA_DIR) + "/helium_levels.txt");
    double e_or = 0, e_pa = 0;
    for (const auto& l : levels)
        if (l.configuration == "1s2s")
            (l.is_ortho() ? e_or : e_pa) = l.energy_ev;
    const double w = beat_omega_from_levels(e_or, e_pa);
    // (166277.4403014 - 159855.9743297) cm-1 in rad/s, 40-digit evaluation.
    CHECK(w == doctest::Approx(1209580443970967.9).epsilon(1e-12));
    CHECK(std::floor(std::log10(w)) == 15.0);
}

TEST_CASE("instantaneous rate examples")
{
    const auto pure = model(SuperpositionState(1.0, 0.0), 3.0, 7.0, 100.0);
    for (double t : {0.0, 0.01, 0.5, 10.0})
        CHECK(instantaneous_rate(pure, t) == doctest::Approx(3.0).epsilon(1e-15));

    const auto half = model(SuperpositionState(r, r), 2.0, 10.0, 100.0);
    // |M_or + M_pa|^2 / 2 at t = 0.
    CHECK(instantaneous_rate(half, 0.0) == doctest::Approx(6.0 + std::sqrt(20.0)).epsilon(1e-14));
    CHECK(instantaneous_rate(half, 0.0) ==
          doctest::Approx(oracle::rate_from_amplitudes(r, r, 2.0, 10.0, 100.0, 0.0)).epsilon(1e-14));

    const double omega = 50.0;
    const auto equal = model(SuperpositionState(r, r), 4.0, 4.0, omega);
    CHECK(std::abs(instantaneous_rate(equal, pi / omega)) < 1e-12);
    CHECK_THROWS_AS(instantaneous_rate(equal, -1.0), Error);
}

TEST_CASE("time-averaged rate examples")
{
    const auto state = SuperpositionState(r, r);
    const auto fast = model(state, helium_gamma_or, helium_gamma_pa, 1e15);
    const double weighted = fast.weighted_rate();
    CHECK(std::abs(averaged_rate(fast, 1.0) - weighted) <= std::abs(fast.interference_coefficient()) * 1e-15);

    const auto slow = model(state, 5.0, 5.0, 1e-9);
    CHECK(averaged_rate(slow, 1e-3) == doctest::Approx(10.0).epsilon(1e-15));

    const double T = 0.37;
    const auto full_period = model(amplitudes_from_weights(0.3), 2.0, 10.0, 2.0 * pi / T);
    CHECK(averaged_rate(full_period, T) == doctest::Approx(full_period.weighted_rate()).epsilon(1e-14));

    CHECK_THROWS_AS(averaged_rate(slow, 0.0), Error);
    CHECK_THROWS_AS(averaged_rate(slow, -1.0), Error);
}

TEST_CASE("sinc series branch agrees with the direct branch at the threshold")
{
    const double below = std::nextafter(sinc_series_threshold, 0.0);
    const double above = sinc_series_threshold;
    CHECK(std::abs(sinc(below) - std::sin(below) / below) < 1e-15);
    CHECK(std::abs(sinc(below) - sinc(above)) < 1e-12);
    CHECK(sinc(0.0) == 1.0);
    CHECK(sinc(pi) == doctest::Approx(0.0));

    const auto m = model(amplitudes_from_weights(0.4, 0.3), 2.0, 10.0, 1.0);
    const double t_below = std::nextafter(sinc_series_threshold, 0.0);
    const double t_above = std::nextafter(sinc_series_threshold, 1.0);
    CHECK(averaged_rate(m, t_below) == doctest::Approx(averaged_rate(m, t_above)).epsilon(1e-12));
}

TEST_CASE("averaged rate limits")
{
    const auto m = model(amplitudes_from_weights(0.4, 0.9), 2.0, 10.0, 3.0);
    CHECK(averaged_rate(m, 1e-12) == doctest::Approx(instantaneous_rate(m, 0.0)).epsilon(1e-11));
    CHECK(averaged_rate(m, 1e9) == doctest::Approx(m.weighted_rate()).epsilon(1e-9));
}

TEST_CASE("closed-form average matches quadrature of the instantaneous rate")
{
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> w(0.0, 1.0), phase(-pi, pi), log_rate(-1.0, 2.0), log_x(-3.0, 3.0);
    for (int trial = 0; trial < 40; ++trial) {
        const auto state = amplitudes_from_weights(w(gen), phase(gen));
        const double g_or = std::pow(10.0, log_rate(gen));
        const double g_pa = std::pow(10.0, log_rate(gen));
        const double T = 0.5;
        const double omega = std::pow(10.0, log_x(gen)) / T;
        const auto m = model(state, g_or, g_pa, omega);
        const double quad = oracle::gauss_legendre_average(
            [&](double t) { return oracle::rate_from_amplitudes(state.alpha(), state.beta(), g_or, g_pa, omega, t); },
            T, 4000);
        CHECK(averaged_rate(m, T) == doctest::Approx(quad).epsilon(1e-9));
    }
}

TEST_CASE("instantaneous rate stays inside the interference bound")
{
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> w(0.0, 1.0), phase(-pi, pi), t(0.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = amplitudes_from_weights(w(gen), phase(gen));
        const auto m = model(s, 2.0, 10.0, 17.0);
        const double bound = 2.0 * std::abs(s.alpha()) * std::abs(s.beta()) * std::sqrt(20.0);
        for (int k = 0; k < 20; ++k) {
            const double tt = t(gen);
            REQUIRE(std::abs(instantaneous_rate(m, tt) - m.weighted_rate()) <= bound * (1 + 1e-12));
            REQUIRE(instantaneous_rate(m, tt) ==
                    doctest::Approx(oracle::rate_from_amplitudes(s.alpha(), s.beta(), 2.0, 10.0, 17.0, tt)).epsilon(1e-12));
        }
    }
}

TEST_CASE("lifetime examples")
{
    CHECK(lifetime(SuperpositionState(0.0, 1.0), helium_gamma_or, helium_gamma_pa) ==
          doctest::Approx(0.0197).epsilon(1e-12));
    CHECK(lifetime(SuperpositionState(1.0, 0.0), helium_gamma_or, helium_gamma_pa) == doctest::Approx(1e8).epsilon(1e-12));
    // 1 / (0.5e-8 + 0.5 / 0.0197), 40-digit evaluation.
    CHECK(lifetime(SuperpositionState(r, r), helium_gamma_or, helium_gamma_pa) ==
          doctest::Approx(0.0393999999922382).epsilon(1e-12));
    CHECK_THROWS_AS(lifetime(SuperpositionState(r, r), 0.0, 1.0), Error);
    CHECK_THROWS_AS(lifetime(SuperpositionState(r, r), 1.0, -1.0), Error);
}

TEST_CASE("lifetime is monotone in the weight and phase independent")
{
    double previous = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const auto s = amplitudes_from_weights(i / 100.0, 0.4);
        const double tau = lifetime(s, helium_gamma_or, helium_gamma_pa);
        CHECK(tau >= previous);
        CHECK(tau == doctest::Approx(lifetime(s.with_global_phase(1.3), helium_gamma_or, helium_gamma_pa)).epsilon(1e-14));
        CHECK(tau >= 0.0197 * (1 - 1e-12));
        CHECK(tau <= 1e8 * (1 + 1e-12));
        previous = tau;
    }
}

TEST_CASE("beat signal examples")
{
    const double g_or = 3.0, g_pa = 11.0, omega = 2.0 * pi * 40.0;
    const auto s = amplitudes_from_weights(0.35);
    const auto m = model(s, g_or, g_pa, omega);
    const double a_or = s.alpha().real() * std::sqrt(g_or);
    const double a_pa = s.beta().real() * std::sqrt(g_pa);

    const std::vector<double> zero{0.0};
    CHECK(beat_signal(m, zero).front().value == doctest::Approx((a_or + a_pa) * (a_or + a_pa)).epsilon(1e-14));

    const auto single = model(SuperpositionState(1.0, 0.0), g_or, g_pa, omega);
    std::vector<double> grid;
    for (int i = 0; i < 500; ++i)
        grid.push_back(i * 1e-3);
    for (const auto& p : beat_signal(single, grid))
        CHECK(p.value == doctest::Approx(g_or * std::exp(-2.0 * g_or * p.t)).epsilon(1e-14));

    // At omega t = 2 pi k the signal sits on (A_or e^{-G_or t} + A_pa e^{-G_pa t})^2.
    std::vector<double> peaks;
    for (int k = 0; k < 40; ++k)
        peaks.push_back(2.0 * pi * k / omega);
    for (const auto& p : beat_signal(m, peaks)) {
        const double env = a_or * std::exp(-g_or * p.t) + a_pa * std::exp(-g_pa * p.t);
        CHECK(p.value == doctest::Approx(env * env).epsilon(1e-12));
    }

    const std::vector<double> bad{0.0, -1e-3};
    CHECK_THROWS_AS(beat_signal(m, bad), Error);
    CHECK(beat_signal(m, std::vector<double>{}).empty());
}

TEST_CASE("beat signal matches the modulus-squared amplitude and is non-negative")
{
    const double g_or = 2.0, g_pa = 10.0, omega = 2.0 * pi * 100.0;
    std::vector<double> grid;
    for (int i = 0; i < 20000; ++i)
        grid.push_back(i * 2.5e-5);
    for (double w : {0.0, 0.1, 0.5, 0.83, 1.0}) {
        const auto s = amplitudes_from_weights(w);
        const auto samples = beat_signal(model(s, g_or, g_pa, omega), grid);
        REQUIRE(samples.size() == grid.size());
        for (const auto& p : samples) {
            const auto amp = s.alpha() * std::sqrt(g_or) * std::exp(-g_or * p.t) +
                             s.beta() * std::sqrt(g_pa) * std::exp(-g_pa * p.t) * std::polar(1.0, -omega * p.t);
            REQUIRE(p.value >= -1e-15);
            REQUIRE(p.value == doctest::Approx(std::norm(amp)).epsilon(1e-10).scale(1e-14));
        }
    }
}

TEST_CASE("beat signal does not depend on the worker count")
{
    const auto m = model(amplitudes_from_weights(0.6, 0.2), 2.0, 10.0, 12345.0);
    std::vector<double> grid;
    for (int i = 0; i < 10001; ++i)
        grid.push_back(i * 1e-5);
    const auto serial = beat_signal(m, grid, 1);
    for (unsigned workers : {2u, 3u, 8u, 64u})
        CHECK(beat_signal(m, grid, workers) == serial);
}
