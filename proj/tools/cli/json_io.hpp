#pragma once

#include "orthopara/counting.hpp"
#include "orthopara/discrimination.hpp"
#include "orthopara/spectra.hpp"
#include "orthopara/states.hpp"

#include "json.hpp"

namespace orthopara {

using nlohmann::json;

NLOHMANN_JSON_SERIALIZE_ENUM(DistributionKind, {
    {DistributionKind::Superposition, "superposition"},
    {DistributionKind::Mixture, "mixture"},
    {DistributionKind::SingleChannel, "single_channel"},
})

NLOHMANN_JSON_SERIALIZE_ENUM(Verdict, {
    {Verdict::Superposition, "superposition"},
    {Verdict::Mixture, "mixture"},
    {Verdict::Inconclusive, "inconclusive"},
})

NLOHMANN_JSON_SERIALIZE_ENUM(Hypothesis, {
    {Hypothesis::Superposition, "superposition"},
    {Hypothesis::Mixture, "mixture"},
})

void to_json(json& j, const EnergyLevel& level);
void from_json(const json& j, EnergyLevel& level);

void to_json(json& j, const DegeneratePair& pair);
void from_json(const json& j, DegeneratePair& pair);

void to_json(json& j, const CountDistribution& dist);
void from_json(const json& j, CountDistribution& dist);

void to_json(json& j, const CountSample& sample);
void from_json(const json& j, CountSample& sample);

void to_json(json& j, const ChiSquareResult& result);
void from_json(const json& j, ChiSquareResult& result);

void to_json(json& j, const DiscriminationReport& report);
void from_json(const json& j, DiscriminationReport& report);

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

}  // namespace orthopara

namespace nlohmann {

template<>
struct adl_serializer<orthopara::SuperpositionState>
{
    static void to_json(json& j, const orthopara::SuperpositionState& state);
    static orthopara::SuperpositionState from_json(const json& j);
};

}  // namespace nlohmann
