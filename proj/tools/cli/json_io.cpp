#include "cli/json_io.hpp"

#include "orthopara/error.hpp"

namespace orthopara {

json complex_to_json(Complex z)
{
    return {{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from_json(const json& j)
{
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

void to_json(json& j, const EnergyLevel& level)
{
    j = {
        {"configuration", level.configuration},
        {"term", level.term},
        {"j", level.j.to_string()},
        {"energy_ev", level.energy_ev},
        {"multiplicity", level.multiplicity},
        {"orbital_l", level.orbital_l},
    };
}

void from_json(const json& j, EnergyLevel& level)
{
    level.configuration = j.at("configuration").get<std::string>();
    level.term = j.at("term").get<std::string>();
    level.j = HalfInteger::parse(j.at("j").get<std::string>());
    level.energy_ev = j.at("energy_ev").get<double>();
    const auto term = parse_term(level.term);
    level.multiplicity = j.value("multiplicity", term.multiplicity);
    level.orbital_l = j.value("orbital_l", term.orbital_l);
    if (level.multiplicity != term.multiplicity || level.orbital_l != term.orbital_l)
        throw Error(ErrorCode::MalformedTerm, "multiplicity/orbital_l disagree with term '" + level.term + "'");
}

void to_json(json& j, const DegeneratePair& pair)
{
    j = {{"ortho", pair.ortho}, {"para", pair.para}, {"delta_e_ev", pair.delta_e},
         {"broadening_ev", pair.broadening}};
}

void from_json(const json& j, DegeneratePair& pair)
{
    j.at("ortho").get_to(pair.ortho);
    j.at("para").get_to(pair.para);
    pair.delta_e = j.at("delta_e_ev").get<double>();
    pair.broadening = j.at("broadening_ev").get<double>();
}

void to_json(json& j, const CountDistribution& dist)
{
    j = {{"kind", dist.kind}, {"window_T", dist.window_T}, {"pmf", dist.pmf}};
}

void from_json(const json& j, CountDistribution& dist)
{
    j.at("kind").get_to(dist.kind);
    dist.window_T = j.at("window_T").get<double>();
    j.at("pmf").get_to(dist.pmf);
}

void to_json(json& j, const CountSample& sample)
{
    j = {{"seed", sample.seed}, {"counts", sample.counts}};
}

void from_json(const json& j, CountSample& sample)
{
    sample.seed = j.value("seed", std::uint64_t{0});
    j.at("counts").get_to(sample.counts);
}

void to_json(json& j, const ChiSquareResult& result)
{
    j = {{"statistic", result.statistic}, {"dof", result.dof}, {"p_value", result.p_value},
         {"bins", result.bins}};
}

void from_json(const json& j, ChiSquareResult& result)
{
    result.statistic = j.at("statistic").get<double>();
    result.dof = j.at("dof").get<std::size_t>();
    result.p_value = j.at("p_value").get<double>();
    result.bins = j.at("bins").get<std::size_t>();
}

void to_json(json& j, const DiscriminationReport& report)
{
    j = {
        {"log_likelihood_ratio", report.log_likelihood_ratio},
        {"chi2_superposition", report.chi2_superposition},
        {"chi2_mixture", report.chi2_mixture},
        {"verdict", report.verdict},
        {"degenerate_model", report.degenerate_model},
        {"windows", report.windows},
        {"n_max", report.n_max},
    };
}

void from_json(const json& j, DiscriminationReport& report)
{
    report.log_likelihood_ratio = j.at("log_likelihood_ratio").get<double>();
    j.at("chi2_superposition").get_to(report.chi2_superposition);
    j.at("chi2_mixture").get_to(report.chi2_mixture);
    j.at("verdict").get_to(report.verdict);
    report.degenerate_model = j.at("degenerate_model").get<bool>();
    report.windows = j.at("windows").get<std::size_t>();
    report.n_max = j.at("n_max").get<std::size_t>();
}

}  // namespace orthopara

namespace nlohmann {

void adl_serializer<orthopara::SuperpositionState>::to_json(json& j, const orthopara::SuperpositionState& state)
{
    j = {
        {"alpha", orthopara::complex_to_json(state.alpha())},
        {"beta", orthopara::complex_to_json(state.beta())},
        {"ortho_weight", state.ortho_weight()},
        {"para_weight", state.para_weight()},
    };
}

orthopara::SuperpositionState adl_serializer<orthopara::SuperpositionState>::from_json(const json& j)
{
    return {orthopara::complex_from_json(j.at("alpha")), orthopara::complex_from_json(j.at("beta"))};
}

}  // namespace nlohmann
