#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <thread>

#include "format.hpp"
#include "selftest.hpp"
#include "sympbranch/branching.hpp"
#include "sympbranch/dims.hpp"
#include "sympbranch/inductive.hpp"
#include "sympbranch/json.hpp"
#include "sympbranch/weyl.hpp"

namespace sympbranch::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  Int p = 0;
  Int n = 0;
  std::optional<Int> i;
  std::optional<Int> l;
  std::string coords = "omega";
  std::string format = "text";
  std::string family;
  Int nmax = 30;
  std::optional<Int> grid_pmax;
  std::optional<Int> grid_nmax;
  Int nmax_factors = 60;
  unsigned jobs = 0;
};

bool pi_coords(const Options& o) { return o.coords == "pi"; }

// V_l^n for the Weyl-module commands: --l is the π-index, --i the ω-index.
Int weyl_index(const Options& o) {
  if (o.i.has_value() == o.l.has_value()) throw UsageError("give exactly one of --i or --l");
  if (o.n < 1) throw UsageError("--n must be >= 1");
  const Int l = o.l ? *o.l : o.n + 1 - *o.i;
  if (o.i && (*o.i < 0 || *o.i > o.n)) throw UsageError("--i must lie in [0, n]");
  weyl::check_weyl_range(o.n, l);
  return l;
}

// ω-index of the module being restricted.
Int branch_index(const Options& o, Int lo) {
  if (o.i.has_value() == o.l.has_value()) throw UsageError("give exactly one of --i or --l");
  if (o.n < 2) throw UsageError("--n must be >= 2 for branching");
  const Int i = o.i ? *o.i : o.n + 1 - *o.l;
  if (i < lo || i > o.n) {
    throw UsageError("index out of range for rank " + std::to_string(o.n));
  }
  return i;
}

std::string weyl_name(const Options& o, Int l) {
  return pi_coords(o) ? "V_" + std::to_string(l) + "^" + std::to_string(o.n)
                      : "W_" + std::to_string(o.n + 1 - l) + "^" + std::to_string(o.n);
}

json weyl_label(const Options& o, Int l) {
  if (pi_coords(o)) return PiLabel{o.n, l};
  return pi_to_omega(PiLabel{o.n, l});
}

std::string factor_name(const Options& o, Int n, Int m) {
  return pi_coords(o) ? format_label(PiLabel{n, m}) : format_label(pi_to_omega(PiLabel{n, m}));
}

void cmd_factors(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  const Int l = weyl_index(o);
  auto idx = weyl::factors_lucas(o.n, l, p);
  if (!pi_coords(o)) std::reverse(idx.begin(), idx.end());  // ascending ω-index
  if (o.format == "json") {
    json j{{"p", o.p}, {"weyl_module", weyl_label(o, l)}, {"factors", json::array()}};
    for (Int m : idx) j["factors"].push_back(weyl_label(o, m));
    out << j.dump(2) << '\n';
    return;
  }
  out << weyl_name(o, l) << ":";
  for (std::size_t k = 0; k < idx.size(); ++k) out << (k ? ", " : " ") << factor_name(o, o.n, idx[k]);
  out << '\n';
}

std::string tuple_text(const AdmissibleTuple& sigma) {
  std::string s = "(";
  for (std::size_t k = 0; k < sigma.lambdas().size(); ++k)
    s += (k ? ";" : "") + std::to_string(sigma.lambdas()[k]);
  return s + ")";
}

std::string qset_text(const QSet& q) {
  if (q.empty()) return "∅";
  std::string s;
  for (const auto& iv : q.intervals()) {
    if (!s.empty()) s += " ∪ ";
    s += "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
  }
  return s;
}

std::string node_text(Int n, Int m) {
  return format_label(PiLabel{n, m}) + " = " + format_label(pi_to_omega(PiLabel{n, m}));
}

void cmd_poset(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  const Int l = weyl_index(o);
  const auto poset = weyl::factor_poset(o.n, l, p);
  const Int socle = weyl::socle_factor(o.n, l, p);
  if (o.format == "dot") {
    out << "digraph V_" << l << "_" << o.n << " {\n";
    out << "  rankdir=BT;\n";
    for (const auto& f : poset.factors())
      out << "  \"" << f.index << "\" [label=\"" << node_text(o.n, f.index) << "\"];\n";
    for (auto [lo, hi] : poset.covers()) out << "  \"" << lo << "\" -> \"" << hi << "\";\n";
    out << "}\n";
    return;
  }
  if (o.format == "json") {
    json j{{"p", o.p}, {"weyl_module", weyl_label(o, l)}, {"top", weyl_label(o, poset.top())},
           {"socle", weyl_label(o, socle)}, {"factors", json::array()}, {"covers", json::array()}};
    for (const auto& f : poset.factors())
      j["factors"].push_back({{"label", weyl_label(o, f.index)}, {"tuple", f.tuple}, {"qset", f.qset}});
    for (auto [lo, hi] : poset.covers())
      j["covers"].push_back({{"lower", weyl_label(o, lo)}, {"upper", weyl_label(o, hi)}});
    out << j.dump(2) << '\n';
    return;
  }
  out << weyl_name(o, l) << " (p=" << o.p << "): " << poset.factors().size() << " composition factors, top "
      << factor_name(o, o.n, l) << ", socle " << factor_name(o, o.n, socle) << '\n';
  for (const auto& f : poset.factors()) {
    out << "  " << std::left << std::setw(8) << factor_name(o, o.n, f.index) << " σ=" << tuple_text(f.tuple)
        << "  Q=" << qset_text(f.qset) << '\n';
  }
  out << "covering relations (lower ≺ upper):\n";
  for (auto [lo, hi] : poset.covers())
    out << "  " << factor_name(o, o.n, lo) << " ≺ " << factor_name(o, o.n, hi) << '\n';
}

void cmd_socle_weyl(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  const Int l = weyl_index(o);
  const bool irr = weyl::is_irreducible(o.n, l, p);
  const auto sigma = weyl::sigma_max(o.n, l, p);
  const Int socle = weyl::socle_factor(o.n, l, p);
  const Int top = weyl::apply_tuple(sigma);
  if (o.format == "json") {
    out << json{{"p", o.p},
                {"weyl_module", weyl_label(o, l)},
                {"irreducible", irr},
                {"sigma_max", sigma},
                {"max_factor", weyl_label(o, top)},
                {"socle", weyl_label(o, socle)}}
               .dump(2)
        << '\n';
    return;
  }
  out << weyl_name(o, l) << " (p=" << o.p << "): " << (irr ? "irreducible" : "reducible") << '\n'
      << "  σ^max = " << tuple_text(sigma) << ", largest factor " << factor_name(o, o.n, top) << '\n'
      << "  socle " << factor_name(o, o.n, socle) << '\n';
}

template <class Label>
json restriction_json(const Options& o, const RestrictionStructure<Label>& rs, Int i, Prime p) {
  return {{"p", o.p},
          {"source", rs.source},
          {"split", rs.split},
          {"socle_series", rs.d_part},
          {"completely_reducible", branching::is_completely_reducible(o.n, i, p)},
          {"d_submodule_count", branching::d_submodule_count(o.n, i, p)}};
}

std::string source_text(const Options& o, Int i) {
  const OmegaLabel w{o.n, i};
  const std::string name = pi_coords(o) ? format_label(omega_to_pi(w)) : format_label(w);
  return name + "^" + std::to_string(o.n) + "↓G_" + std::to_string(o.n - 1);
}

void cmd_branch(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  const Int i = branch_index(o, 0);
  const auto omega = branching::branch_omega(o.n, i, p);
  if (o.format == "json") {
    json j{{"p", o.p}};
    if (pi_coords(o)) {
      j["source"] = omega_to_pi(OmegaLabel{o.n, i});
      j["factors"] = to_pi(omega);
    } else {
      j["source"] = OmegaLabel{o.n, i};
      j["factors"] = omega;
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << source_text(o, i) << " ~ " << (pi_coords(o) ? format_sum(to_pi(omega)) : format_sum(omega)) << '\n';
}

template <class Label>
void print_restriction(const RestrictionStructure<Label>& rs, std::ostream& out) {
  out << "  split part: " << format_sum(rs.split, " ⊕ ") << '\n';
  if (rs.d_part.empty()) {
    out << "  D = 0\n";
    return;
  }
  out << "  socle series of D (socle first):\n";
  for (const auto& layer : rs.d_part.layers) out << "    " << format_sum(layer, " ⊕ ") << '\n';
}

void cmd_socle_branch(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  const Int i = branch_index(o, 1);
  if (o.format == "json") {
    json j = pi_coords(o) ? restriction_json(o, branching::restriction_structure_pi(o.n, o.n + 1 - i, p), i, p)
                          : restriction_json(o, branching::restriction_structure(o.n, i, p), i, p);
    out << j.dump(2) << '\n';
    return;
  }
  out << source_text(o, i) << " (p=" << o.p << ")\n";
  if (pi_coords(o)) {
    print_restriction(branching::restriction_structure_pi(o.n, o.n + 1 - i, p), out);
  } else {
    print_restriction(branching::restriction_structure(o.n, i, p), out);
  }
  out << "  completely reducible: " << (branching::is_completely_reducible(o.n, i, p) ? "yes" : "no") << '\n'
      << "  submodules of D: " << branching::d_submodule_count(o.n, i, p) << '\n';
}

void cmd_dims(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  if (o.n < 1) throw UsageError("--n must be >= 1");
  const auto table = dims::dims_table(o.n, p);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : table)
      rows.push_back({{"i", r.i}, {"weyl_dim", big_to_json(r.weyl)}, {"irr_dim", big_to_json(r.irr)}});
    out << json{{"p", o.p}, {"n", o.n}, {"rows", rows}}.dump(2) << '\n';
    return;
  }
  out << "Sp_" << 2 * o.n << " fundamental modules, p=" << o.p << '\n';
  out << std::right << std::setw(4) << "i" << "  " << std::setw(28) << "dim W_i" << "  " << std::setw(28)
      << "dim ω_i" << '\n';
  for (const auto& r : table)
    out << std::setw(4) << r.i << "  " << std::setw(28) << r.weyl.str() << "  " << std::setw(28) << r.irr.str()
        << '\n';
}

void cmd_inductive(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  FamilySpec spec;
  try {
    spec = parse_family(o.family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.nmax < 2) throw UsageError("--nmax must be >= 2");
  const auto report = inductive::verify_family(spec, p, o.nmax);
  if (o.format == "json") {
    out << json(report).dump(2) << '\n';
    return;
  }
  out << to_string(spec) << " at p=" << o.p << ", ranks 1.." << o.nmax << ": "
      << (report.holds ? "inductive" : "not inductive") << '\n';
  if (report.first_failure) {
    const auto& f = *report.first_failure;
    out << "  rank " << f.n << ": expected " << format_level(f.expected) << ", restriction gives "
        << format_level(f.got) << '\n';
  }
}

int cmd_selftest(const Options& o, std::ostream& out) {
  selftest::GridBounds grid;
  if (const char* env = std::getenv("SYMPBRANCH_GRID"); env && *env) {
    try {
      grid = selftest::parse_grid(env, grid);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("SYMPBRANCH_GRID: ") + e.what());
    }
  }
  if (o.grid_pmax) grid.pmax = *o.grid_pmax;
  if (o.grid_nmax) grid.nmax = *o.grid_nmax;
  grid.nmax_factors = std::max(o.nmax_factors, grid.nmax);
  if (grid.pmax < 2 || grid.nmax < 2) throw UsageError("grid bounds must be >= 2");
  const unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());

  out << "selftest grid: p <= " << grid.pmax << ", n <= " << grid.nmax << " (factor equivalence n <= "
      << grid.nmax_factors << ")\n";
  const auto results = selftest::run(grid, jobs, [&](const selftest::CheckResult& r) {
    out << (r.failure ? "[FAIL] " : "[ ok ] ") << r.name << "  (" << std::fixed << std::setprecision(2)
        << r.seconds << " s)\n"
        << std::flush;
  });
  for (const auto& r : results) {
    if (!r.failure) continue;
    const auto& c = *r.failure;
    out << "first counterexample (" << r.name << "): p=" << c.p << " n=" << c.n << " index=" << c.index
        << " expected=" << c.expected << " got=" << c.got << '\n';
    return 1;
  }
  out << "all invariants hold\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Modular branching combinatorics for fundamental modules of Sp_2n", "sympbranch"};
  app.require_subcommand(1);

  const std::vector<std::string> text_json{"text", "json"};
  auto add_core = [&](CLI::App* sub, bool with_index, bool with_coords, std::vector<std::string> formats) {
    sub->add_option("--p", o.p, "characteristic (prime)")->required();
    sub->add_option("--n", o.n, "rank of Sp_2n")->required();
    if (with_index) {
      sub->add_option("--i", o.i, "ω-index");
      sub->add_option("--l", o.l, "π-index");
    }
    if (with_coords) sub->add_option("--coords", o.coords, "omega or pi")->check(CLI::IsMember({"omega", "pi"}));
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
  };

  auto* factors = app.add_subcommand("factors", "composition factors of a Weyl module");
  add_core(factors, true, true, text_json);
  auto* poset = app.add_subcommand("poset", "submodule poset of a Weyl module");
  add_core(poset, true, true, {"text", "json", "dot"});
  auto* socle_weyl = app.add_subcommand("socle-weyl", "socle and irreducibility of a Weyl module");
  add_core(socle_weyl, true, true, text_json);
  auto* branch = app.add_subcommand("branch", "composition factors of the restriction to G_{n-1}");
  add_core(branch, true, true, text_json);
  auto* socle_branch = app.add_subcommand("socle-branch", "direct-sum split and socle series of the restriction");
  add_core(socle_branch, true, true, text_json);
  auto* dims_cmd = app.add_subcommand("dims", "Weyl and irreducible dimensions for a rank");
  add_core(dims_cmd, false, false, text_json);

  auto* inductive_cmd = app.add_subcommand("inductive", "verify a family on ranks 1..nmax");
  inductive_cmd->add_option("--p", o.p, "characteristic (prime)")->required();
  inductive_cmd->add_option("--family", o.family, "F, L:s, R:u or LR:s:u")->required();
  inductive_cmd->add_option("--nmax", o.nmax, "largest rank checked")->capture_default_str();
  inductive_cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(text_json));

  auto* selftest_cmd = app.add_subcommand("selftest", "check every invariant over a grid");
  selftest_cmd->add_option("--pmax", o.grid_pmax, "largest prime");
  selftest_cmd->add_option("--nmax", o.grid_nmax, "largest rank");
  selftest_cmd->add_option("--nmax-factors", o.nmax_factors, "largest rank for factor equivalence")
      ->capture_default_str();
  selftest_cmd->add_option("--jobs", o.jobs, "worker threads (0 = hardware)");

  std::vector<std::string> owned{"sympbranch"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : owned) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*factors) cmd_factors(o, out);
    else if (*poset) cmd_poset(o, out);
    else if (*socle_weyl) cmd_socle_weyl(o, out);
    else if (*branch) cmd_branch(o, out);
    else if (*socle_branch) cmd_socle_branch(o, out);
    else if (*dims_cmd) cmd_dims(o, out);
    else if (*inductive_cmd) cmd_inductive(o, out);
    else if (*selftest_cmd) return cmd_selftest(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace sympbranch::cli
