#pragma once

#include <nlohmann/json.hpp>

#include "frameforge/envelopes.hpp"
#include "frameforge/frames.hpp"
#include "frameforge/graded.hpp"
#include "frameforge/hermite.hpp"
#include "frameforge/jaffard.hpp"
#include "frameforge/weights.hpp"

namespace frameforge {

using Json = nlohmann::ordered_json;

/// Finite numbers as-is; infinities as the strings "inf" / "-inf".
Json json_number(double x);
double number_from_json(const Json& j);

/// Complex values are a number or [re, im].
Complex complex_from_json(const Json& j);
Json to_json(Complex z);

// Descriptors. Parsers throw InvalidArgument on schema violations.
TestFunction test_function_from_json(const Json& j);
Json to_json(const TestFunction& f);

PerturbationSpec perturbation_spec_from_json(const Json& j);
Json to_json(const PerturbationSpec& s);

Weight weight_from_json(const Json& j);
Json to_json(const Weight& w);

DecayEnvelope envelope_from_json(const Json& j);
Json to_json(const DecayEnvelope& e);

NormFamily family_from_json(const Json& j);
Json to_json(const NormFamily& f);

// Reports.
Json to_json(const DecayFit& fit);
Json to_json(const ImplicationChain& chain);
Json to_json(const FrameBounds& b);
Json to_json(const ExampleReport& r);
Json to_json(const PermutationStability& r);
Json to_json(const WeightedOperatorNorms& r);
Json to_json(const DualLocalization& r);
Json to_json(const JaffardReport& r);
Json to_json(const InverseDecayCheck& r);
Json to_json(const GradedNormProfile& p);
Json to_json(const FFrameInterval& r);
Json to_json(const Pairing& p);
Json to_json(const PgReport& r);
Json to_json(const FixedLevelContinuity& r);
Json to_json(const ProductCheck& r);

}  // namespace frameforge
