#pragma once

#include <nlohmann/json.hpp>

#include "sympbranch/branching.hpp"
#include "sympbranch/dims.hpp"
#include "sympbranch/inductive.hpp"
#include "sympbranch/labels.hpp"
#include "sympbranch/weyl.hpp"

// nlohmann::json serializers (found by ADL). Objects use sorted keys and
// arrays follow index order, so output is deterministic.

namespace sympbranch {

void to_json(nlohmann::json& j, const OmegaLabel& label);
void to_json(nlohmann::json& j, const PiLabel& label);

template <class Label>
void to_json(nlohmann::json& j, const LabelMultiset<Label>& ms) {
  j = nlohmann::json::array();
  for (const auto& [label, mult] : ms) j.push_back({{"label", label}, {"mult", mult}});
}

template <class Label>
void to_json(nlohmann::json& j, const SocleSeries<Label>& series) {
  j = nlohmann::json::array();
  for (const auto& layer : series.layers) j.push_back(layer);
}

void to_json(nlohmann::json& j, const Interval& iv);
void to_json(nlohmann::json& j, const QSet& q);
void to_json(nlohmann::json& j, const AdmissibleTuple& sigma);
void to_json(nlohmann::json& j, const FamilySpec& spec);
void to_json(nlohmann::json& j, const LevelSet& level);

/// Big integers are rendered as decimal strings.
nlohmann::json big_to_json(const BigDim& value);

namespace inductive {
void to_json(nlohmann::json& j, const VerifyReport& report);
}  // namespace inductive

}  // namespace sympbranch
