#pragma once

#include <json.hpp>

#include "fiberosc/approximation.hpp"
#include "fiberosc/day_norm.hpp"
#include "fiberosc/quotients.hpp"

namespace fiberosc {

// All rationals travel as canonical "p/q" strings so downstream tools never
// coerce them to floats. ordered_json keeps field order deterministic.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const PLFunction& f);
PLFunction pl_from_json(const Json& j);

Json to_json(const FiberedSpaceModel& m);
FiberedSpaceModel space_from_json(const Json& j);

Json to_json(const RepresentableFunction& h);
RepresentableFunction function_from_json(const Json& j);

Json to_json(const SparseVector& v);
SparseVector vector_from_json(const Json& j);

Json to_json(const std::vector<Violation>& v);
Json to_json(const OscillationProfile& p);
Json to_json(const LevelSet& s);
Json to_json(const C0Certificate& c);
Json to_json(const FullClosednessResult& r);

Json to_json(const BaseInterval& iv);
Json to_json(const BaseSubset& s);
Json to_json(const OpenSet& u);

Json to_json(const QuotientModel& q);
Json to_json(const TransferResult& t);
Json to_json(const ApproximationPlan& p);
Json to_json(const DistBounds& d);
Json to_json(const ChainReport& c);
Json to_json(const ProbeReport& p);

}  // namespace fiberosc
