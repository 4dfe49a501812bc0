// e8jac: expansions, lattice tables and verification suites from the command line.
// Exit codes: 0 success, 1 verification failure, 2 usage or resource error.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "e8jac/checks.hpp"
#include "e8jac/serialize.hpp"

using namespace e8jac;

namespace {

struct Options {
  std::string format = "text";
  long long budget = 0;
  std::string form;
  int order = -1;
  long long norm = 2;
  int t = 2;
  int max = 14;
  int max_weight = 40;
  int w0 = 0;
  int max_norm = -1;
  std::string suite = "all";
};

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int cmd_expand(const Options& o) {
  const FormInfo& info = form_info(o.form);
  const int order = o.order < 0 ? default_order(info.index) : o.order;
  const auto f = build(info.name, order);
  if (o.format == "json") {
    emit(form_json(info.name, f));
    return 0;
  }
  std::cout << "# " << info.name << "  weight " << info.weight << "  index " << info.index << "  "
            << to_string(info.kind) << "\n";
  for (int n = 0; n <= f.order(); ++n) std::cout << "q^" << n << ": " << display_text(f[n]) << "\n";
  std::cout << "# recipe: " << info.recipe << "\n# normalization: " << to_string(info.normalization)
            << "\n# reference: " << info.reference << "\n";
  if (auto c = resolved_constant(info.name)) std::cout << "# resolved constant: " << to_string(*c) << "\n";
  if (!info.note.empty()) std::cout << "# note: " << info.note << "\n";
  return 0;
}

int cmd_orbits(const Options& o) {
  const auto s = shell(o.norm);
  if (o.format == "json") {
    Json a = Json::array();
    for (const auto& x : s)
      a.push_back(Json{{"fw", fw_json(x.rep.fw)}, {"label", sigma_label(x.rep)}, {"size", x.size}});
    emit(Json{{"norm", o.norm}, {"orbits", a}});
    return 0;
  }
  for (const auto& x : s) {
    std::cout << sigma_label(x.rep) << "  fw";
    for (int c : x.rep.fw) std::cout << " " << c;
    std::cout << "  size " << x.size << "\n";
  }
  return 0;
}

int cmd_coset_minima(const Options& o) {
  if (o.t < 1) throw std::invalid_argument("--t must be positive");
  const long long m = max_coset_min_norm(o.t);
  if (o.format == "json") emit(Json{{"t", o.t}, {"max_coset_min_norm", m}});
  else std::cout << m << "\n";
  return 0;
}

int cmd_rank(const Options& o) {
  const auto r = rank_series(o.max);
  if (o.format == "json") {
    Json a = Json::array();
    for (int t = 1; t <= o.max; ++t) a.push_back(Json{{"t", t}, {"rank", r[static_cast<std::size_t>(t)].get_str()}});
    emit(a);
    return 0;
  }
  for (int t = 1; t <= o.max; ++t) std::cout << (t > 1 ? " " : "") << r[static_cast<std::size_t>(t)].get_str();
  std::cout << "\n";
  return 0;
}

int cmd_bounds(const Options& o) {
  const auto rows = dimension_bound_table(o.max_weight);
  if (o.format == "json") {
    Json a = Json::array();
    for (const auto& b : rows) a.push_back(to_json(b));
    emit(a);
    return 0;
  }
  for (const auto& b : rows) {
    std::cout << b.weight << " " << b.upper;
    if (!b.notes.empty()) std::cout << "  (" << b.notes << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_pullback(const Options& o) {
  const auto t = pullback_max_table();
  if (o.format == "json") {
    Json a = Json::array();
    for (const auto& [l, v] : t) a.push_back(Json{{"label", l}, {"max", v}});
    emit(a);
    return 0;
  }
  for (const auto& [l, v] : t) std::cout << "Σ_" << l << " " << v << "\n";
  return 0;
}

int cmd_cascade(const Options& o) {
  std::vector<long long> norms;
  if (o.t < 1) throw std::invalid_argument("--t must be positive");
  const long long hi = o.max_norm < 0 ? max_coset_min_norm(o.t) : o.max_norm;
  for (long long n = 0; n <= hi; n += 2) norms.push_back(n);
  const auto s = solve_cascade(o.t, o.w0, norms);
  if (o.format == "json") {
    emit(to_json(s));
    return 0;
  }
  std::cout << "unknowns: c_0/240";
  for (std::size_t i = 1; i < norms.size(); ++i) std::cout << ", Σ_" << norms[i];
  std::cout << "\nrows: " << s.matrix.size() << "\nnullity: " << s.nullspace.size() << "\n";
  for (const auto& v : s.nullspace) {
    std::cout << "(";
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << to_string(v[i]);
    std::cout << ")\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  const auto& suites = verify_suites();
  auto it = suites.find(o.suite);
  if (it == suites.end()) throw std::invalid_argument("unknown suite " + o.suite);
  Json a = Json::array();
  const CheckResult* first_failure = nullptr;
  std::vector<CheckResult> results;
  for (int id : it->second) results.push_back(run_check(id));
  for (const auto& r : results) {
    if (o.format == "json")
      a.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    else
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail << std::endl;
    if (!r.pass && !first_failure) first_failure = &r;
  }
  if (o.format == "json") emit(Json{{"suite", o.suite}, {"checks", a}, {"pass", first_failure == nullptr}});
  if (first_failure) {
    std::cerr << "first counterexample (check " << first_failure->id << "): " << first_failure->detail << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact W(E8)-invariant Jacobi forms"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--budget", o.budget, "Element budget for orbit and shell enumeration (env E8JAC_BUDGET)")
      ->check(CLI::PositiveNumber);

  auto* expand = app.add_subcommand("expand", "q-expansion of a catalog form");
  expand->add_option("--form", o.form, "Form name, e.g. phi_-4_2 or B2")->required();
  expand->add_option("--order", o.order, "Truncation order (default 3, or 2 for index >= 4)")
      ->check(CLI::NonNegativeNumber);
  auto* orbits = app.add_subcommand("orbits", "W(E8)-orbits of the lattice vectors of a given norm");
  orbits->add_option("--norm", o.norm, "Even norm 2n")->required()->check(CLI::NonNegativeNumber);
  auto* coset = app.add_subcommand("coset-minima", "max over E8/tE8 of the minimal coset norm");
  coset->add_option("--t", o.t, "Index t")->required();
  auto* rank = app.add_subcommand("rank", "Generator counts r(1..max)");
  rank->add_option("--max", o.max, "Largest index")->capture_default_str()->check(CLI::NonNegativeNumber);
  auto* bounds = app.add_subcommand("bounds", "Dimension upper bounds by weight, 4..max");
  bounds->add_option("--max", o.max_weight, "Largest even weight (at most 40)")->capture_default_str();
  app.add_subcommand("pullback-max", "max (Σ_m, v) over norm-4 vectors v");
  auto* cascade = app.add_subcommand("solve-cascade", "Pole-cancellation system on q^0 orbit coefficients");
  cascade->add_option("--t", o.t, "Index")->required();
  cascade->add_option("--w0", o.w0, "Starting (negative, even) weight")->required();
  cascade->add_option("--max-norm", o.max_norm, "Largest orbit norm (default: max coset minimum for t)");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite name")
      ->check(CLI::IsMember({"index2", "index3", "index4", "systems", "identities", "lf", "lattice", "bounds", "all"}))
      ->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (o.budget > 0) set_element_budget(o.budget);
    if (*expand) return cmd_expand(o);
    if (*orbits) return cmd_orbits(o);
    if (*coset) return cmd_coset_minima(o);
    if (*rank) return cmd_rank(o);
    if (*bounds) return cmd_bounds(o);
    if (*cascade) return cmd_cascade(o);
    if (*verify) return cmd_verify(o);
    return cmd_pullback(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
