#include "selftest.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>

#include "format.hpp"
#include "sympbranch/branching.hpp"
#include "sympbranch/dims.hpp"
#include "sympbranch/inductive.hpp"
#include "sympbranch/weyl.hpp"

namespace sympbranch::selftest {
namespace {

std::vector<Prime> primes_up_to(Int pmax) {
  std::vector<Prime> out;
  for (Int p = 2; p <= pmax; ++p)
    if (padic::is_prime(p)) out.emplace_back(p);
  return out;
}

std::string str(const std::vector<Int>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s + "}";
}

std::optional<Counterexample> factor_equivalence(Prime p, const GridBounds& g) {
  for (Int n = 1; n <= g.nmax_factors; ++n)
    for (Int l = 1; l <= n + 1; ++l) {
      auto a = weyl::factors_lucas(n, l, p);
      auto b = weyl::factors_reflections(n, l, p);
      if (a != b) return Counterexample{p.value(), n, l, str(a), str(b)};
    }
  return std::nullopt;
}

// Exact binomials by Pascal's rule, sharing nothing with the digit code.
std::optional<Counterexample> lucas_oracle(Prime p, const GridBounds& g) {
  std::vector<BigDim> row{1};
  for (Int m = 0; m <= g.lucas_max; ++m) {
    if (m > 0 && m <= g.exact_binomial_max) {
      std::vector<BigDim> next(row.size() + 1);
      next.front() = next.back() = 1;
      for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
      row = std::move(next);
    }
    for (Int k = 0; k <= m; ++k) {
      const bool digits = padic::contains(k, m, p);
      const int lucas = padic::binom_mod_p(m, k, p);
      // k ⊂_p m forces a nonzero binomial; the converse only holds for p = 2
      // (C(2,1) = 2 at p = 3 is the smallest gap).
      if ((digits && lucas == 0) || (p.value() == 2 && digits != (lucas != 0))) {
        return Counterexample{p.value(), m, k, "binom_mod_p=" + std::to_string(lucas),
                              std::string("contains=") + (digits ? "true" : "false")};
      }
      if (m <= g.exact_binomial_max) {
        const BigDim exact = row[static_cast<std::size_t>(k)] % p.value();
        if (exact != lucas) return Counterexample{p.value(), m, k, exact.str(), std::to_string(lucas)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> sigma_max_check(Prime p, const GridBounds& g) {
  for (Int n = 1; n <= g.nmax; ++n)
    for (Int l = 1; l <= n + 1; ++l) {
      const auto f = weyl::factors_lucas(n, l, p);
      const auto sigma = weyl::sigma_max(n, l, p);
      const Int top = weyl::apply_tuple(sigma);
      if (top != f.back()) return Counterexample{p.value(), n, l, std::to_string(f.back()), std::to_string(top)};
      const bool irr = weyl::is_irreducible(n, l, p);
      if (irr != (f.size() == 1) || irr != sigma.is_empty()) {
        return Counterexample{p.value(), n, l, "irreducible=" + std::to_string(f.size() == 1),
                              "is_irreducible=" + std::to_string(irr) +
                                  ", sigma_max_empty=" + std::to_string(sigma.is_empty())};
      }
    }
  return std::nullopt;
}

std::optional<Counterexample> socle_minimum(Prime p, const GridBounds& g) {
  for (Int n = 1; n <= g.nmax; ++n)
    for (Int l = 1; l <= n + 1; ++l) {
      const auto poset = weyl::factor_poset(n, l, p);
      const auto mins = poset.minimal_elements();
      const Int soc = weyl::socle_factor(n, l, p);
      if (mins.size() != 1 || mins.front() != soc) {
        return Counterexample{p.value(), n, l, "minimal=" + str(mins), std::to_string(soc)};
      }
    }
  return std::nullopt;
}

std::optional<Counterexample> filtration(Prime p, const GridBounds& g) {
  for (Int n = 2; n <= g.nmax; ++n)
    for (Int l = 1; l <= n + 1; ++l) {
      auto [lhs, rhs] = dims::filtration_sides(n, l, p);
      if (lhs != rhs) return Counterexample{p.value(), n, l, cli::format_multiset(rhs), cli::format_multiset(lhs)};
    }
  return std::nullopt;
}

std::optional<Counterexample> dimensions(Prime p, const GridBounds& g) {
  for (Int n = 1; n <= g.nmax; ++n)
    for (Int i = 0; i <= n; ++i) {
      if (n >= 2) {
        const auto want = dims::irr_dim(n, i, p);
        const auto got = dims::total_dim(branching::branch_omega(n, i, p), p);
        if (want != got) return Counterexample{p.value(), n, i, want.str(), got.str()};
      }
      BigDim sum = 0;
      for (Int m : weyl::factors_lucas(n, n + 1 - i, p)) sum += dims::irr_dim(n, n + 1 - m, p);
      if (sum != dims::weyl_dim(n, i)) return Counterexample{p.value(), n, i, dims::weyl_dim(n, i).str(), sum.str()};
    }
  return std::nullopt;
}

std::optional<Counterexample> socle_series(Prime p, const GridBounds& g) {
  for (Int n = 2; n <= g.nmax; ++n)
    for (Int i = 1; i <= n; ++i) {
      const auto rs = branching::restriction_structure(n, i, p);
      const auto flat = rs.flatten();
      const auto branch = branching::branch_omega(n, i, p);
      if (flat != branch) return Counterexample{p.value(), n, i, cli::format_multiset(branch), cli::format_multiset(flat)};
      if (!rs.d_part.is_palindromic()) return Counterexample{p.value(), n, i, "palindrome", "asymmetric layers"};
    }
  return std::nullopt;
}

std::optional<Counterexample> complete_reducibility(Prime p, const GridBounds& g) {
  for (Int n = 2; n <= g.nmax; ++n)
    for (Int i = 1; i <= n; ++i) {
      const bool ccr = branching::is_completely_reducible(n, i, p);
      const auto layers = branching::restriction_structure(n, i, p).d_part.length();
      if (ccr != (layers <= 1)) {
        return Counterexample{p.value(), n, i, std::string("completely_reducible=") + (ccr ? "true" : "false"),
                              std::to_string(layers) + " layers"};
      }
    }
  return std::nullopt;
}

std::optional<Counterexample> d_submodules(Prime p, const GridBounds& g) {
  for (Int n = 2; n <= g.nmax; ++n)
    for (Int i = 1; i <= n; ++i) {
      const auto rs = branching::restriction_structure(n, i, p);
      const auto counted = static_cast<Int>(layer_poset(rs.d_part).count_order_ideals(weyl::kDefaultIdealCap));
      const Int formula = branching::d_submodule_count(n, i, p);
      if (counted != formula) return Counterexample{p.value(), n, i, std::to_string(counted), std::to_string(formula)};
    }
  return std::nullopt;
}

std::vector<FamilySpec> catalogue(Prime p) {
  std::vector<FamilySpec> out{FamilySpec::full()};
  std::vector<Int> us;
  for (Int pt = p.value(); pt <= 31; pt *= p.value()) us.push_back(pt - 1);
  for (Int s = 0; s <= 6; ++s) out.push_back(FamilySpec::left(s));
  for (Int u : us) out.push_back(FamilySpec::right(u));
  for (Int s = 0; s <= 6; ++s)
    for (Int u : us) out.push_back(FamilySpec::left_right(s, u));
  return out;
}

std::optional<Counterexample> inductive_catalogue(Prime p, const GridBounds& g) {
  for (const auto& spec : catalogue(p)) {
    const auto report = inductive::verify_family(spec, p, g.inductive_nmax);
    if (!report.holds) {
      const auto& f = *report.first_failure;
      return Counterexample{p.value(), f.n, spec.kind == FamilySpec::Kind::L ? spec.s : spec.u,
                            to_string(spec) + " " + cli::format_level(f.expected), cli::format_level(f.got)};
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> r_obstruction(Prime p, const GridBounds& g) {
  for (Int u = 1; u <= 30; ++u) {
    // The escalation witness for a non-closed R(u) lives at rank escalation_step(u),
    // which can exceed the catalogue bound when u is close to it.
    const Int n_max = std::max(g.inductive_nmax, inductive::escalation_step(u, p));
    const bool closed = inductive::is_R_inductive(u, p, n_max);
    const bool power = inductive::is_power_of(u + 1, p);
    if (closed != power) {
      return Counterexample{p.value(), n_max, u, std::string("inductive=") + (power ? "true" : "false"),
                            std::string("inductive=") + (closed ? "true" : "false")};
    }
  }
  return std::nullopt;
}

}  // namespace

GridBounds parse_grid(const std::string& text, GridBounds base) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("grid must look like pmax:nmax");
  try {
    std::size_t used = 0;
    base.pmax = std::stoll(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("pmax");
    const auto rest = text.substr(colon + 1);
    base.nmax = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("nmax");
  } catch (const std::exception&) {
    throw std::invalid_argument("grid must look like pmax:nmax, got '" + text + "'");
  }
  if (base.pmax < 2 || base.nmax < 2) throw std::invalid_argument("grid bounds must be >= 2");
  return base;
}

std::vector<CheckResult> run(const GridBounds& grid, unsigned jobs,
                             const std::function<void(const CheckResult&)>& on_done) {
  using Fn = std::optional<Counterexample> (*)(Prime, const GridBounds&);
  const std::vector<std::pair<std::string, Fn>> checks{
      {"factor-algorithm equivalence", factor_equivalence},
      {"Lucas oracle", lucas_oracle},
      {"sigma_max and irreducibility", sigma_max_check},
      {"socle = poset minimum", socle_minimum},
      {"filtration identity", filtration},
      {"dimension conservation", dimensions},
      {"socle series flatten + palindrome", socle_series},
      {"complete reducibility", complete_reducibility},
      {"D submodule count", d_submodules},
      {"inductive catalogue", inductive_catalogue},
      {"R(u) obstruction", r_obstruction},
  };
  const auto primes = primes_up_to(grid.pmax);
  jobs = std::max(1u, jobs);

  std::vector<CheckResult> results;
  for (const auto& [name, fn] : checks) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::optional<Counterexample>> per_prime(primes.size());
    for (std::size_t base = 0; base < primes.size(); base += jobs) {
      std::vector<std::future<std::optional<Counterexample>>> futures;
      for (std::size_t k = base; k < std::min(primes.size(), base + jobs); ++k)
        futures.push_back(std::async(std::launch::async, fn, primes[k], std::cref(grid)));
      for (std::size_t k = 0; k < futures.size(); ++k) per_prime[base + k] = futures[k].get();
    }
    CheckResult result{name, std::nullopt, 0};
    for (auto& f : per_prime) {
      if (f) {
        result.failure = std::move(f);
        break;
      }
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_done) on_done(result);
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace sympbranch::selftest
