#pragma once

#include "json.hpp"

#include "grlab/ainfty.hpp"
#include "grlab/covering.hpp"
#include "grlab/holder.hpp"
#include "grlab/oscillation.hpp"
#include "grlab/rearrangement.hpp"

namespace grlab::cli {

using nlohmann::json;

json to_json(const Cube& q);
json to_json(const GRResult& r);
json to_json(const MarginReport& r);
json to_json(const AlphaProfile& r);
json to_json(const StepFunction& sf);
json to_json(const CoveringResult& r);
json to_json(const CoveringConstants& c);
json to_json(const Thm2Report& r);
json to_json(const RhConstant& r);
json to_json(const RhOptimum& r);

}  // namespace grlab::cli
