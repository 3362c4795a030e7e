#include "cli/app.hpp"

#include "cli/grid.hpp"
#include "cli/json_io.hpp"
#include "orthopara/constants.hpp"
#include "orthopara/counting.hpp"
#include "orthopara/discrimination.hpp"
#include "orthopara/dynamics.hpp"
#include "orthopara/error.hpp"
#include "orthopara/spectra.hpp"
#include "orthopara/states.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace orthopara::cli {

namespace {

// 17 significant digits, so every value written to CSV round-trips.
std::string sci(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

std::string brief(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

struct GlobalOptions
{
    std::string format = "csv";
    std::string output;
    std::uint64_t seed = 20081014;
    unsigned workers = 1;
    int verbosity = 0;
};

/// What a subcommand produces: human-readable summary lines plus one
/// machine-readable document in each format.
struct Document
{
    std::vector<std::string> summary;
    std::string csv;
    json doc;
};

void emit(const Document& document, const GlobalOptions& globals, std::ostream& out)
{
    const bool json_mode = globals.format == "json";
    const std::string machine = json_mode ? document.doc.dump(2) + "\n" : document.csv;

    if (!globals.output.empty()) {
        std::ofstream file(globals.output, std::ios::binary);
        if (!file)
            throw Error(ErrorCode::InvalidArgument, "cannot write '" + globals.output + "'");
        file << machine;
        for (const auto& line : document.summary)
            out << line << '\n';
        return;
    }
    if (!json_mode)
        for (const auto& line : document.summary)
            out << "# " << line << '\n';
    out << machine;
}

std::string key_value_csv(const std::vector<std::pair<std::string, std::string>>& rows)
{
    std::string csv = "quantity,value\n";
    for (const auto& [key, value] : rows)
        csv += key + "," + value + "\n";
    return csv;
}

/// Superposition weight, phase, and decay rates shared by most subcommands.
struct ModelOptions
{
    double w_or = 0.5;
    double phase = 0.0;
    std::optional<double> gamma_or, tau_or, gamma_pa, tau_pa;
    double fallback_gamma_or = 1.0;
    double fallback_gamma_pa = 1.0;

    ModelOptions(double default_gamma_or, double default_gamma_pa)
        : fallback_gamma_or(default_gamma_or), fallback_gamma_pa(default_gamma_pa)
    {
    }

    void attach(CLI::App& cmd)
    {
        cmd.add_option("--w-or", w_or, "Ortho weight |alpha|^2")->check(CLI::Range(0.0, 1.0))->capture_default_str();
        cmd.add_option("--phase", phase, "Relative phase of beta (rad)")->capture_default_str();
        auto* g_or = cmd.add_option("--gamma-or", gamma_or, "Ortho decay rate (1/s)")->check(CLI::PositiveNumber);
        auto* t_or = cmd.add_option("--tau-or", tau_or, "Ortho lifetime (s)")->check(CLI::PositiveNumber);
        auto* g_pa = cmd.add_option("--gamma-pa", gamma_pa, "Para decay rate (1/s)")->check(CLI::PositiveNumber);
        auto* t_pa = cmd.add_option("--tau-pa", tau_pa, "Para lifetime (s)")->check(CLI::PositiveNumber);
        g_or->excludes(t_or);
        g_pa->excludes(t_pa);
    }

    SuperpositionState state() const { return amplitudes_from_weights(w_or, phase); }

    double rate_or() const { return gamma_or ? *gamma_or : tau_or ? 1.0 / *tau_or : fallback_gamma_or; }
    double rate_pa() const { return gamma_pa ? *gamma_pa : tau_pa ? 1.0 / *tau_pa : fallback_gamma_pa; }
};

constexpr double helium_gamma_or = 1e-8;         // 1s2s ortho lifetime ~1e8 s
constexpr double helium_gamma_pa = 1.0 / 0.0197;  // 1s2s para lifetime 19.7 ms
constexpr double demo_omega = 2.0 * constants::pi * 1e3;
constexpr double desk_gamma_or = 2.0;
constexpr double desk_gamma_pa = 10.0;

/// Beat frequency from --omega, --delta-e, or a level table.
struct OmegaOptions
{
    std::optional<double> omega, delta_e;
    std::string levels_file;
    std::string levels_configuration = "1s2s";

    void attach(CLI::App& cmd)
    {
        auto* w = cmd.add_option("--omega", omega, "Beat angular frequency (rad/s); default 2*pi*1e3");
        auto* d = cmd.add_option("--delta-e", delta_e, "E_pa - E_or (eV)");
        auto* l = cmd.add_option("--levels", levels_file, "Take E_or, E_pa from a level table")->check(CLI::ExistingFile);
        cmd.add_option("--levels-config", levels_configuration, "Configuration used with --levels")->capture_default_str();
        w->excludes(d)->excludes(l);
        d->excludes(l);
    }

    double resolve() const
    {
        if (omega)
            return *omega;
        if (delta_e)
            return beat_omega_from_levels(0.0, *delta_e);
        if (levels_file.empty())
            return demo_omega;

        const auto levels = load_level_table(levels_file);
        const EnergyLevel* ortho = nullptr;
        const EnergyLevel* para = nullptr;
        for (const auto& level : levels) {
            if (level.configuration != levels_configuration)
                continue;
            auto*& slot = level.is_ortho() ? ortho : para;
            if (!slot || level.energy_ev < slot->energy_ev)
                slot = &level;
        }
        if (!ortho || !para)
            throw Error(ErrorCode::InvalidArgument,
                        "no ortho/para levels with configuration '" + levels_configuration + "' in " + levels_file);
        return beat_omega_from_levels(ortho->energy_ev, para->energy_ev);
    }
};

void check_invariant(bool ok, const std::string& what)
{
    if (!ok)
        throw InvariantViolation(what);
}

// --- find-degenerate --------------------------------------------------------

struct FindDegenerate
{
    std::string level_file;
    std::optional<double> broadening, lifetime_s;
    std::string default_unit;
    bool same_configuration = false;

    void attach(CLI::App& cmd)
    {
        cmd.add_option("level_file", level_file, "Pipe-delimited level table")->required();
        auto* b = cmd.add_option("--broadening", broadening, "Tolerance in eV (default 1e-6)")->check(CLI::PositiveNumber);
        auto* l = cmd.add_option("--lifetime", lifetime_s, "Derive the tolerance as hbar/tau (s)")->check(CLI::PositiveNumber);
        b->excludes(l);
        cmd.add_option("--default-unit", default_unit, "Unit for energies without a unit token")
            ->check(CLI::IsMember({"eV", "cm-1"}));
        cmd.add_flag("--same-configuration", same_configuration, "Only pair levels sharing a configuration");
    }

    Document run() const
    {
        ParserConfig config;
        if (!default_unit.empty()) {
            config.allow_missing_unit = true;
            config.default_unit = default_unit == "cm-1" ? EnergyUnit::InverseCentimeter : EnergyUnit::ElectronVolt;
        }
        const auto levels = load_level_table(level_file, config);
        const double tolerance = lifetime_s ? broadening_from_lifetime(*lifetime_s) : broadening.value_or(1e-6);
        const auto pairs = find_degenerate_pairs(levels, tolerance, {same_configuration});

        Document d;
        d.summary.push_back("broadening_ev = " + sci(tolerance) +
                            (lifetime_s ? " (hbar / " + brief(*lifetime_s) + " s)" : ""));
        d.summary.push_back("levels = " + std::to_string(levels.size()) + ", pairs = " + std::to_string(pairs.size()));
        d.csv = "ortho_configuration,ortho_term,ortho_j,ortho_energy_ev,para_configuration,para_term,para_j,"
                "para_energy_ev,delta_e_ev,broadening_ev\n";
        d.doc = {{"source", level_file}, {"levels", levels.size()}, {"broadening_ev", tolerance},
                 {"pairs", json::array()}};

        char line[256];
        for (const auto& p : pairs) {
            check_invariant(p.delta_e <= p.broadening && p.ortho.is_ortho() && p.para.is_para(),
                            "degenerate pair violates delta_e <= broadening");
            std::snprintf(line, sizeof line, "%-8s %-4s J=%-4s %.9f eV  <->  %-8s %-4s J=%-4s %.9f eV  dE = %.3e eV",
                          p.ortho.configuration.c_str(), p.ortho.term.c_str(), p.ortho.j.to_string().c_str(),
                          p.ortho.energy_ev, p.para.configuration.c_str(), p.para.term.c_str(),
                          p.para.j.to_string().c_str(), p.para.energy_ev, p.delta_e);
            d.summary.emplace_back(line);
            d.csv += p.ortho.configuration + "," + p.ortho.term + "," + p.ortho.j.to_string() + "," +
                     sci(p.ortho.energy_ev) + "," + p.para.configuration + "," + p.para.term + "," +
                     p.para.j.to_string() + "," + sci(p.para.energy_ev) + "," + sci(p.delta_e) + "," +
                     sci(p.broadening) + "\n";
            d.doc["pairs"].push_back(p);
        }
        return d;
    }
};

// --- prepare ----------------------------------------------------------------

struct Prepare
{
    std::string axis;
    double up_re = 1.0, up_im = 0.0, down_re = 0.0, down_im = 0.0;
    int l_ortho = 0, l_para = 0;

    void attach(CLI::App& cmd)
    {
        auto* a = cmd.add_option("--axis", axis, "Incident spin eigenstate")
                      ->check(CLI::IsMember({"+z", "-z", "+x", "-x", "+y", "-y"}));
        for (auto* o : {cmd.add_option("--up-re", up_re), cmd.add_option("--up-im", up_im),
                        cmd.add_option("--down-re", down_re), cmd.add_option("--down-im", down_im)})
            o->excludes(a);
        cmd.add_option("--l-ortho", l_ortho, "Orbital l of the ortho branch")->check(CLI::NonNegativeNumber);
        cmd.add_option("--l-para", l_para, "Orbital l of the para branch")->check(CLI::NonNegativeNumber);
    }

    SpinState incident() const
    {
        if (axis == "+z") return SpinState::up_z();
        if (axis == "-z") return SpinState::down_z();
        if (axis == "+x") return SpinState::up_x();
        if (axis == "-x") return SpinState::down_x();
        if (axis == "+y") return SpinState::up_y();
        if (axis == "-y") return SpinState::down_y();
        return {Complex(up_re, up_im), Complex(down_re, down_im)};
    }

    Document run() const
    {
        const auto state = prepare_superposition(incident());
        const auto parity = superselection_allowed(l_ortho, l_para);
        Document d;
        d.summary.push_back("alpha = " + brief(state.alpha().real()) + " + " + brief(state.alpha().imag()) +
                            "i, beta = " + brief(state.beta().real()) + " + " + brief(state.beta().imag()) + "i");
        d.summary.push_back("weights: ortho " + brief(state.ortho_weight()) + ", para " + brief(state.para_weight()));
        d.summary.push_back("superselection: 2J_or = " + std::to_string(parity.two_j_ortho) +
                            ", 2J_pa = " + std::to_string(parity.two_j_para) +
                            (parity.allowed ? ", allowed" : ", forbidden"));
        d.csv = key_value_csv({
            {"alpha_re", sci(state.alpha().real())},
            {"alpha_im", sci(state.alpha().imag())},
            {"beta_re", sci(state.beta().real())},
            {"beta_im", sci(state.beta().imag())},
            {"ortho_weight", sci(state.ortho_weight())},
            {"para_weight", sci(state.para_weight())},
            {"two_j_ortho", std::to_string(parity.two_j_ortho)},
            {"two_j_para", std::to_string(parity.two_j_para)},
            {"superselection_allowed", parity.allowed ? "true" : "false"},
        });
        d.doc = {{"state", state},
                 {"superselection",
                  {{"allowed", parity.allowed},
                   {"two_j_ortho", parity.two_j_ortho},
                   {"two_j_para", parity.two_j_para},
                   {"ortho_odd", parity.ortho_odd},
                   {"para_odd", parity.para_odd}}}};
        return d;
    }
};

// --- lifetime ---------------------------------------------------------------

struct Lifetime
{
    ModelOptions model{helium_gamma_or, helium_gamma_pa};

    void attach(CLI::App& cmd) { model.attach(cmd); }

    Document run() const
    {
        const auto state = model.state();
        const double g_or = model.rate_or();
        const double g_pa = model.rate_pa();
        const double tau = lifetime(state, g_or, g_pa);
        const double mean_rate = 1.0 / tau;
        check_invariant(tau >= std::min(1.0 / g_or, 1.0 / g_pa) * (1 - 1e-12) &&
                            tau <= std::max(1.0 / g_or, 1.0 / g_pa) * (1 + 1e-12),
                        "lifetime outside [tau_or, tau_pa]");

        Document d;
        d.summary.push_back("lifetime = " + brief(tau) + " s (" + brief(tau * 1e3) + " ms)");
        d.summary.push_back("mean decay rate = " + brief(mean_rate) + " 1/s");
        d.csv = key_value_csv({
            {"ortho_weight", sci(state.ortho_weight())},
            {"gamma_or", sci(g_or)},
            {"gamma_pa", sci(g_pa)},
            {"lifetime_s", sci(tau)},
            {"mean_rate_per_s", sci(mean_rate)},
        });
        d.doc = {{"state", state}, {"gamma_or", g_or}, {"gamma_pa", g_pa}, {"lifetime_s", tau},
                 {"mean_rate_per_s", mean_rate}};
        return d;
    }
};

// --- rate -------------------------------------------------------------------

struct Rate
{
    ModelOptions model{helium_gamma_or, helium_gamma_pa};
    OmegaOptions omega;
    std::string grid = "lin:0:0.005:11";
    double window = 1.0;

    void attach(CLI::App& cmd)
    {
        model.attach(cmd);
        omega.attach(cmd);
        cmd.add_option("--grid", grid, "Times for the instantaneous rate")->capture_default_str();
        cmd.add_option("--window", window, "Averaging window T (s)")->check(CLI::PositiveNumber)->capture_default_str();
    }

    Document run() const
    {
        const auto beat = BeatModel::with_omega(model.state(), model.rate_or(), model.rate_pa(), omega.resolve());
        const auto times = parse_grid(grid);
        const double averaged = averaged_rate(beat, window);

        Document d;
        d.summary.push_back("omega = " + brief(beat.omega()) + " rad/s");
        d.summary.push_back("weighted rate = " + brief(beat.weighted_rate()) + " 1/s, Gamma_ab = " +
                            brief(beat.interference_coefficient()) + " 1/s");
        d.summary.push_back("averaged rate over T = " + brief(window) + " s: " + brief(averaged) + " 1/s");
        d.csv = "t,instantaneous_rate\n";
        json rates = json::array();
        for (double t : times) {
            const double r = instantaneous_rate(beat, t);
            d.csv += sci(t) + "," + sci(r) + "\n";
            rates.push_back(r);
        }
        d.doc = {{"state", beat.state()},
                 {"gamma_or", beat.ortho().gamma},
                 {"gamma_pa", beat.para().gamma},
                 {"omega", beat.omega()},
                 {"window_T", window},
                 {"weighted_rate", beat.weighted_rate()},
                 {"interference_coefficient", beat.interference_coefficient()},
                 {"averaged_rate", averaged},
                 {"t", times},
                 {"instantaneous_rate", rates}};
        return d;
    }
};

// --- beats ------------------------------------------------------------------

struct Beats
{
    ModelOptions model{helium_gamma_or, helium_gamma_pa};
    OmegaOptions omega;
    std::string grid = "lin:0:0.02:2001";
    std::string single_branch;

    void attach(CLI::App& cmd)
    {
        model.attach(cmd);
        omega.attach(cmd);
        cmd.add_option("--grid", grid, "lin:start:stop:count or log:start:stop:count")->capture_default_str();
        cmd.add_option("--single-branch", single_branch, "Keep only one branch (pure exponential)")
            ->check(CLI::IsMember({"ortho", "para"}));
    }

    Document run(unsigned workers) const
    {
        auto state = model.state();
        if (single_branch == "ortho")
            state = SuperpositionState(1.0, 0.0);
        else if (single_branch == "para")
            state = SuperpositionState(0.0, 1.0);
        const auto beat = BeatModel::with_omega(state, model.rate_or(), model.rate_pa(), omega.resolve());
        const auto times = parse_grid(grid);
        const auto samples = beat_signal(beat, times, workers);

        Document d;
        d.summary.push_back("omega = " + brief(beat.omega()) + " rad/s, gamma_or = " + brief(beat.ortho().gamma) +
                            " 1/s, gamma_pa = " + brief(beat.para().gamma) + " 1/s");
        d.summary.push_back("points = " + std::to_string(samples.size()));
        d.csv = "t,signal\n";
        json values = json::array();
        for (const auto& s : samples) {
            check_invariant(std::isfinite(s.value), "beat signal is not finite");
            d.csv += sci(s.t) + "," + sci(s.value) + "\n";
            values.push_back(s.value);
        }
        d.doc = {{"state", state},
                 {"gamma_or", beat.ortho().gamma},
                 {"gamma_pa", beat.para().gamma},
                 {"omega", beat.omega()},
                 {"t", times},
                 {"signal", values}};
        return d;
    }
};

// --- counts / discriminate --------------------------------------------------

struct CountOptions
{
    ModelOptions model{desk_gamma_or, desk_gamma_pa};
    double window = 1.0;
    std::optional<std::size_t> n_max;

    void attach(CLI::App& cmd)
    {
        model.attach(cmd);
        cmd.add_option("--window", window, "Observation window T (s)")->check(CLI::PositiveNumber)->capture_default_str();
        cmd.add_option("--n-max", n_max, "Truncate the pmfs at this count");
    }

    CountModel build() const { return {model.state(), model.rate_or(), model.rate_pa(), window}; }
};

json model_json(const CountModel& model)
{
    return {{"state", model.state}, {"gamma_or", model.gamma_or}, {"gamma_pa", model.gamma_pa},
            {"window_T", model.window_T}};
}

std::string verdict_name(Verdict v)
{
    return json(v).get<std::string>();
}

void report_summary(Document& d, const DiscriminationReport& report)
{
    d.summary.push_back("windows = " + std::to_string(report.windows) + ", n_max = " + std::to_string(report.n_max));
    d.summary.push_back("log likelihood ratio (superposition / mixture) = " + brief(report.log_likelihood_ratio));
    d.summary.push_back("chi2 vs superposition: " + brief(report.chi2_superposition.statistic) + " on " +
                        std::to_string(report.chi2_superposition.dof) +
                        " dof, p = " + brief(report.chi2_superposition.p_value));
    d.summary.push_back("chi2 vs mixture: " + brief(report.chi2_mixture.statistic) + " on " +
                        std::to_string(report.chi2_mixture.dof) + " dof, p = " + brief(report.chi2_mixture.p_value));
    d.summary.push_back(std::string("verdict = ") + verdict_name(report.verdict) +
                        (report.degenerate_model ? " (degenerate model)" : ""));
}

std::string histogram_csv(const CountSample& sample, const CountDistribution& sup, const CountDistribution& mix)
{
    const auto occurrences = histogram(sample.counts);
    const std::size_t rows = std::max({occurrences.size(), sup.pmf.size(), mix.pmf.size()});
    const double total = static_cast<double>(sample.counts.size());
    std::string csv = "n,observed,superposition_pmf,mixture_pmf,expected_superposition,expected_mixture\n";
    for (std::size_t n = 0; n < rows; ++n) {
        const auto seen = n < occurrences.size() ? occurrences[n] : 0;
        csv += std::to_string(n) + "," + std::to_string(seen) + "," + sci(sup.at(n)) + "," + sci(mix.at(n)) + "," +
               sci(total * sup.at(n)) + "," + sci(total * mix.at(n)) + "\n";
    }
    return csv;
}

struct Counts
{
    std::string hypothesis;
    CountOptions options;
    std::size_t windows = 10000;

    void attach(CLI::App& cmd)
    {
        cmd.add_option("hypothesis", hypothesis, "superposition or mixture")
            ->required()
            ->check(CLI::IsMember({"superposition", "mixture"}));
        options.attach(cmd);
        cmd.add_option("--windows", windows, "Number of observation windows")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    }

    Document run(const GlobalOptions& globals) const
    {
        const auto model = options.build();
        const auto hyp = hypothesis == "mixture" ? Hypothesis::Mixture : Hypothesis::Superposition;
        const auto sample = sample_counts(model, windows, hyp, globals.seed, globals.workers);
        const auto report = discriminate(sample, model, options.n_max);
        const auto sup = decompose_superposition_pmf(model, report.n_max);
        const auto mix = mixture_pmf(model, MixtureVariant::Normalized, report.n_max);
        for (const auto* dist : {&sup, &mix})
            for (double p : dist->pmf)
                check_invariant(p >= 0.0 && p <= 1.0, "pmf entry outside [0, 1]");

        Document d;
        d.summary.push_back("sampled hypothesis = " + hypothesis + ", seed = " + std::to_string(globals.seed));
        report_summary(d, report);
        d.csv = histogram_csv(sample, sup, mix);
        d.doc = {{"hypothesis", hyp},
                 {"model", model_json(model)},
                 {"sample", sample},
                 {"histogram", histogram(sample.counts)},
                 {"superposition_pmf", sup},
                 {"mixture_pmf", mix},
                 {"report", report}};
        return d;
    }
};

CountSample read_sample(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot open sample file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            const auto doc = json::parse(text);
            return doc.contains("sample") ? doc.at("sample").get<CountSample>() : doc.get<CountSample>();
        }
        catch (const json::exception& e) {
            throw Error(ErrorCode::InvalidArgument, "bad sample JSON in '" + path + "': " + e.what());
        }
    }

    // Plain text: integers separated by whitespace or commas, '#' comments.
    CountSample sample;
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        line = line.substr(0, line.find('#'));
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        std::string token;
        while (fields >> token) {
            std::size_t used = 0;
            unsigned long long value = 0;
            try {
                value = std::stoull(token, &used);
            }
            catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size() || token.front() == '-')
                throw Error(ErrorCode::InvalidArgument,
                            path + ":" + std::to_string(line_no) + ": '" + token + "' is not a count");
            sample.counts.push_back(value);
        }
    }
    return sample;
}

struct Discriminate
{
    std::string sample_file;
    CountOptions options;

    void attach(CLI::App& cmd)
    {
        cmd.add_option("sample_file", sample_file, "Counts as JSON or whitespace/comma separated integers")
            ->required()
            ->check(CLI::ExistingFile);
        options.attach(cmd);
    }

    Document run() const
    {
        const auto model = options.build();
        const auto sample = read_sample(sample_file);
        const auto report = discriminate(sample, model, options.n_max);
        Document d;
        report_summary(d, report);
        d.csv = key_value_csv({
            {"windows", std::to_string(report.windows)},
            {"n_max", std::to_string(report.n_max)},
            {"log_likelihood_ratio", sci(report.log_likelihood_ratio)},
            {"chi2_superposition", sci(report.chi2_superposition.statistic)},
            {"chi2_superposition_dof", std::to_string(report.chi2_superposition.dof)},
            {"p_value_superposition", sci(report.chi2_superposition.p_value)},
            {"chi2_mixture", sci(report.chi2_mixture.statistic)},
            {"chi2_mixture_dof", std::to_string(report.chi2_mixture.dof)},
            {"p_value_mixture", sci(report.chi2_mixture.p_value)},
            {"degenerate_model", report.degenerate_model ? "true" : "false"},
            {"verdict", verdict_name(report.verdict)},
        });
        d.doc = {{"model", model_json(model)}, {"report", report}};
        return d;
    }
};

}  // namespace

int exit_code_for(const std::exception_ptr& error, std::ostream& err)
{
    try {
        std::rethrow_exception(error);
    }
    catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return exit_usage;
    }
    catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    catch (...) {
        err << "internal error: unknown exception\n";
        return exit_internal;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Ortho/para-helium superposition toolkit: degeneracy search, decay rates, "
                 "quantum beats and photocount statistics."};
    app.name(args.empty() ? "orthopara" : args.front());
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions globals;
    app.add_option("--format", globals.format, "Machine output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", globals.output, "Write machine output to PATH");
    app.add_option("--seed", globals.seed, "RNG seed for sampling")->capture_default_str();
    app.add_option("--workers", globals.workers, "Worker threads (output does not depend on it)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("-v,--verbose", globals.verbosity, "Print diagnostics to stderr");

    FindDegenerate find_cmd;
    Prepare prepare_cmd;
    Lifetime lifetime_cmd;
    Rate rate_cmd;
    Beats beats_cmd;
    Counts counts_cmd;
    Discriminate discriminate_cmd;

    auto* find_app = app.add_subcommand("find-degenerate", "Ortho/para level pairs within the line broadening");
    find_cmd.attach(*find_app);
    auto* prepare_app = app.add_subcommand("prepare", "Superposition amplitudes from the incident spin state");
    prepare_cmd.attach(*prepare_app);
    auto* lifetime_app = app.add_subcommand("lifetime", "Lifetime of the superposition state");
    lifetime_cmd.attach(*lifetime_app);
    auto* rate_app = app.add_subcommand("rate", "Instantaneous and time-averaged decay rate");
    rate_cmd.attach(*rate_app);
    auto* beats_app = app.add_subcommand("beats", "Quantum-beat transition probability on a time grid");
    beats_cmd.attach(*beats_app);
    auto* counts_app = app.add_subcommand("counts", "Sample photocounts and discriminate the hypotheses");
    counts_cmd.attach(*counts_app);
    auto* discriminate_app = app.add_subcommand("discriminate", "Superposition vs mixture verdict for a sample");
    discriminate_cmd.attach(*discriminate_app);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty())
        argv.push_back("orthopara");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        Document document;
        if (*find_app)
            document = find_cmd.run();
        else if (*prepare_app)
            document = prepare_cmd.run();
        else if (*lifetime_app)
            document = lifetime_cmd.run();
        else if (*rate_app)
            document = rate_cmd.run();
        else if (*beats_app)
            document = beats_cmd.run(globals.workers);
        else if (*counts_app)
            document = counts_cmd.run(globals);
        else if (*discriminate_app)
            document = discriminate_cmd.run();

        if (globals.verbosity > 0)
            err << "format = " << globals.format << ", workers = " << globals.workers << '\n';
        emit(document, globals, out);
    }
    catch (...) {
        return exit_code_for(std::current_exception(), err);
    }
    return exit_ok;
}

}  // namespace orthopara::cli
