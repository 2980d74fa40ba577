#include "sympbranch/inductive.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <vector>

#include "sympbranch/branching.hpp"

namespace sympbranch {

FamilySpec FamilySpec::left(Int s) {
  if (s < 0) throw std::invalid_argument("L(s) needs s >= 0");
  return {Kind::L, s, 0};
}

FamilySpec FamilySpec::right(Int u) {
  if (u < 1) throw std::invalid_argument("R(u) needs u >= 1");
  return {Kind::R, 0, u};
}

FamilySpec FamilySpec::left_right(Int s, Int u) {
  if (s < 0 || u < 1) throw std::invalid_argument("LR(s,u) needs s >= 0 and u >= 1");
  return {Kind::LR, s, u};
}

std::string to_string(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::F:
      return "F";
    case FamilySpec::Kind::L:
      return "L(" + std::to_string(spec.s) + ")";
    case FamilySpec::Kind::R:
      return "R(" + std::to_string(spec.u) + ")";
    case FamilySpec::Kind::LR:
      return "LR(" + std::to_string(spec.s) + "," + std::to_string(spec.u) + ")";
  }
  return "?";
}

FamilySpec parse_family(std::string_view text) {
  const auto fail = [&] {
    return std::invalid_argument("bad family spec '" + std::string(text) +
                                 "' (expected F, L:s, R:u or LR:s:u)");
  };
  std::string_view head = text;
  std::vector<Int> args;
  if (auto pos = text.find_first_of(":("); pos != std::string_view::npos) {
    head = text.substr(0, pos);
    std::string_view rest = text.substr(pos + 1);
    if (text[pos] == '(') {
      if (rest.empty() || rest.back() != ')') throw fail();
      rest.remove_suffix(1);
    }
    while (true) {
      const auto sep = rest.find_first_of(":,");
      const auto tok = rest.substr(0, sep);
      Int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) throw fail();
      args.push_back(v);
      if (sep == std::string_view::npos) break;
      rest.remove_prefix(sep + 1);
    }
  }
  if (head == "F" && args.empty()) return FamilySpec::full();
  if (head == "L" && args.size() == 1) return FamilySpec::left(args[0]);
  if (head == "R" && args.size() == 1) return FamilySpec::right(args[0]);
  if (head == "LR" && args.size() == 2) return FamilySpec::left_right(args[0], args[1]);
  throw fail();
}

namespace inductive {

LevelSet family_level(const FamilySpec& spec, Int n) {
  if (n < 1) throw std::out_of_range("rank n must be >= 1");
  LevelSet level{n, {}};
  auto add_range = [&](Int lo, Int hi) {
    for (Int i = std::max<Int>(lo, 0); i <= std::min(hi, n); ++i) level.reps.insert(i);
  };
  using K = FamilySpec::Kind;
  if (spec.kind == K::F) add_range(0, n);
  if (spec.kind == K::L || spec.kind == K::LR) add_range(0, spec.s);
  if (spec.kind == K::R || spec.kind == K::LR) add_range(n + 1 - spec.u, n);
  return level;
}

LevelSet branch_set(const LevelSet& level, Prime p) {
  if (level.n < 2) throw std::out_of_range("branch_set needs rank n >= 2");
  LevelSet out{level.n - 1, {}};
  for (Int i : level.reps) {
    for (const auto& [label, mult] : branching::branch_omega(level.n, i, p)) out.reps.insert(label.i);
  }
  return out;
}

VerifyReport verify_family(const FamilySpec& spec, Prime p, Int n_max) {
  if (n_max < 2) throw std::invalid_argument("verify_family needs n_max >= 2");
  VerifyReport report{spec, p.value(), 1, n_max, true, std::nullopt};
  for (Int n = 1; n + 1 <= n_max; ++n) {
    auto expected = family_level(spec, n);
    auto got = branch_set(family_level(spec, n + 1), p);
    if (expected != got) {
      report.holds = false;
      report.first_failure = Failure{n, std::move(expected), std::move(got)};
      break;
    }
  }
  return report;
}

bool is_R_inductive(Int u, Prime p, Int n_max) {
  return verify_family(FamilySpec::right(u), p, n_max).holds;
}

bool is_power_of(Int x, Prime p) {
  if (x < p.value()) return false;
  while (x % p.value() == 0) x /= p.value();
  return x == 1;
}

Classification classify_truncation(std::span<const LevelSet> levels, Prime p) {
  if (levels.empty()) throw std::invalid_argument("classify_truncation: no levels");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k].reps.empty()) throw std::invalid_argument("classify_truncation: empty level");
    if (k > 0 && levels[k].n != levels[k - 1].n + 1) {
      throw std::invalid_argument("classify_truncation: ranks are not consecutive");
    }
  }
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    if (levels[k + 1].n >= 2 && branch_set(levels[k + 1], p) != levels[k]) {
      return {std::nullopt, "closure fails between ranks " + std::to_string(levels[k].n) + " and " +
                                std::to_string(levels[k + 1].n)};
    }
  }

  const Int top = levels.back().n;
  std::vector<FamilySpec> catalogue{FamilySpec::full()};
  for (Int s = 0; s < top; ++s) catalogue.push_back(FamilySpec::left(s));
  std::vector<Int> us;
  for (Int pt = p.value(); pt - 1 <= top; pt *= p.value()) us.push_back(pt - 1);
  for (Int u : us) catalogue.push_back(FamilySpec::right(u));
  for (Int u : us)
    for (Int s = 0; s + u < top; ++s) catalogue.push_back(FamilySpec::left_right(s, u));

  for (const auto& spec : catalogue) {
    const bool match = std::all_of(levels.begin(), levels.end(), [&](const LevelSet& lv) {
      return family_level(spec, lv.n) == lv;
    });
    if (match) return {spec, ""};
  }
  return {std::nullopt, "closed truncation matches no catalogue family"};
}

Int max_reach(Int i, Prime p) {
  if (i < 1) throw std::invalid_argument("max_reach: index must be positive");
  Int reach = i;
  const Int d = padic::lp(i, p);
  for (Int t = 0; t <= d; ++t) {
    if (branching::b_coeff(t, i, p) != 0) reach = std::max(reach, i - 1 + 2 * padic::ipow(p.value(), t));
  }
  return reach;
}

Int r_closure(Int u, Prime p) {
  if (u < 1) throw std::invalid_argument("r_closure: u must be >= 1");
  while (true) {
    Int next = u;
    for (Int i = 1; i <= u; ++i) next = std::max(next, max_reach(i, p));
    if (next == u) return u;
    u = next;
  }
}

Int escalation_step(Int l, Prime p) {
  if (l < 1) throw std::invalid_argument("escalation_step: l must be >= 1");
  Int s = 0;
  while (padic::digit(l, s, p) == p.value() - 1) ++s;
  const Int ps = padic::ipow(p.value(), s);
  const Int i = l - l % ps;
  return i - 1 + 2 * ps;
}

}  // namespace inductive
}  // namespace sympbranch
