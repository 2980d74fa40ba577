#include "sympbranch/json.hpp"

namespace sympbranch {

void to_json(nlohmann::json& j, const OmegaLabel& label) {
  j = {{"coords", "omega"}, {"n", label.n}, {"index", label.i}};
}

void to_json(nlohmann::json& j, const PiLabel& label) {
  j = {{"coords", "pi"}, {"n", label.n}, {"index", label.m}};
}

void to_json(nlohmann::json& j, const Interval& iv) { j = nlohmann::json::array({iv.lo, iv.hi}); }

void to_json(nlohmann::json& j, const QSet& q) {
  j = nlohmann::json::array();
  for (const auto& iv : q.intervals()) j.push_back(iv);
}

void to_json(nlohmann::json& j, const AdmissibleTuple& sigma) { j = sigma.lambdas(); }

void to_json(nlohmann::json& j, const FamilySpec& spec) { j = to_string(spec); }

void to_json(nlohmann::json& j, const LevelSet& level) {
  j = nlohmann::json::array();
  for (Int i : level.reps) j.push_back(OmegaLabel{level.n, i});
}

nlohmann::json big_to_json(const BigDim& value) { return value.str(); }

namespace inductive {

void to_json(nlohmann::json& j, const VerifyReport& report) {
  j = {{"spec", report.spec},
       {"p", report.p},
       {"n_range", nlohmann::json::array({report.n_min, report.n_max})},
       {"holds", report.holds},
       {"first_failure", nullptr}};
  if (report.first_failure) {
    const auto& f = *report.first_failure;
    j["first_failure"] = {{"n", f.n}, {"expected", f.expected}, {"got", f.got}};
  }
}

}  // namespace inductive
}  // namespace sympbranch
