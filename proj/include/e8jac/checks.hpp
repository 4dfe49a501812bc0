#ifndef E8JAC_CHECKS_HPP
#define E8JAC_CHECKS_HPP

// The fourteen reference checks behind `e8jac verify`. Each one recomputes a
// published value and reports the first disagreement it finds.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "e8jac/catalog.hpp"

namespace e8jac {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample, or a short summary on success
};

namespace detail {

inline std::string fw_text(const Fw& x) {
  std::string s = "[";
  for (int i = 0; i < 8; ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + "]";
}

inline std::vector<long long> norms_to(int hi) {
  std::vector<long long> v;
  for (int n = 0; n <= hi; n += 2) v.push_back(n);
  return v;
}

struct Expect {
  const char* form;
  int n;
  const char* text;
};

inline std::string compare_displays(const std::vector<Expect>& rows) {
  for (const auto& e : rows) {
    const auto f = build(e.form, std::max(e.n, default_order(form_info(e.form).index)));
    const auto want = parse_display(e.text);
    if (f[e.n] != want)
      return std::string(e.form) + " q^" + std::to_string(e.n) + ": got " + display_text(f[e.n]) + ", expected " +
             e.text;
  }
  return {};
}

}  // namespace detail

/// Samples the elliptic transformation law f(n, l) = f(n + (l,v) + t(v,v)/2, l + t v)
/// with v a root or a norm-4 vector; returns the first violation or "".
inline std::string quasi_periodicity_violation(const JacobiQExpansion& f, int samples, std::uint64_t seed) {
  const long long t = f.index();
  if (t == 0) return {};
  std::vector<E8Vector> shifts = orbit(w(8));
  for (const auto& v : orbit(w(1))) shifts.push_back(v);
  std::vector<std::pair<int, DominantWeight>> support;
  for (int n = 0; n <= f.order(); ++n)
    for (const auto& [m, c] : f[n].terms()) support.push_back({n, m});
  if (support.empty()) return {};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_s(0, support.size() - 1), pick_v(0, shifts.size() - 1);
  std::uniform_int_distribution<int> pick_r(0, 7);
  int done = 0;
  for (int attempt = 0; attempt < 200 * samples && done < samples; ++attempt) {
    const auto& [n, m] = support[pick_s(rng)];
    E8Vector l = m.v;
    for (int s = 0; s < 40; ++s) {
      const E8Vector& a = simple_roots()[static_cast<std::size_t>(pick_r(rng))];
      l = l - pairing(l, a) * a;
    }
    const E8Vector& v = shifts[pick_v(rng)];
    const long long n2 = n + pairing(l, v) + t * v.norm() / 2;
    if (n2 > f.order()) continue;
    ++done;
    const Rational lhs = f.coefficient(n, l);
    const Rational rhs = n2 < 0 ? Rational(0) : f.coefficient(static_cast<int>(n2), l + t * v);
    if (lhs != rhs)
      return "q^" + std::to_string(n) + " " + sigma_label(m) + ": " + to_string(lhs) + " vs q^" + std::to_string(n2) +
             " " + to_string(rhs);
  }
  return {};
}

// 1. Generator counts of the free modules.
inline CheckResult check_rank_series() {
  CheckResult r{1, "rank series through t = 14", true, {}};
  const long expect[] = {1, 1, 3, 5, 10, 15, 27, 39, 63, 90, 135, 187, 270, 364, 505};
  auto s = rank_series(14);
  for (int i = 0; i <= 14; ++i)
    if (s[static_cast<std::size_t>(i)] != expect[i]) {
      r.pass = false;
      r.detail = "t=" + std::to_string(i) + ": " + s[static_cast<std::size_t>(i)].get_str() + " vs " +
                 std::to_string(expect[i]);
      return r;
    }
  r.detail = "r(14) = 505";
  return r;
}

/// Dominant representatives of each shell orbit, 2n = 2..24.
inline const std::map<int, std::set<Fw>>& shell_orbit_table() {
  auto f = [](int i, int a = 1) {
    Fw x{};
    x[static_cast<std::size_t>(i - 1)] += a;
    return x;
  };
  auto sum = [](Fw a, const Fw& b) {
    for (int i = 0; i < 8; ++i) a[i] += b[i];
    return a;
  };
  static const std::map<int, std::set<Fw>> t = {
      {2, {f(8)}},
      {4, {f(1)}},
      {6, {f(7)}},
      {8, {f(8, 2), f(2)}},
      {10, {sum(f(1), f(8))}},
      {12, {f(6)}},
      {14, {f(3), sum(f(7), f(8))}},
      {16, {f(1, 2), sum(f(2), f(8))}},
      {18, {sum(f(1), f(7)), f(8, 3)}},
      {20, {f(5), sum(f(1), f(8, 2))}},
      {22, {sum(f(6), f(8)), sum(f(1), f(2))}},
      {24, {f(7, 2), sum(f(3), f(8))}},
  };
  return t;
}

// 2. Orbit decomposition of the shells by exhaustive enumeration.
inline CheckResult check_shell_orbits() {
  CheckResult r{2, "shell orbits 2n = 2..24", true, {}};
  for (const auto& [two_n, want] : shell_orbit_table()) {
    std::set<Fw> got;
    for (const auto& o : shell(two_n)) got.insert(o.rep.fw);
    if (got != want) {
      r.pass = false;
      r.detail = "norm " + std::to_string(two_n) + ": got";
      for (const auto& x : got) r.detail += " " + detail::fw_text(x);
      return r;
    }
  }
  r.detail = "12 shells";
  return r;
}

// 3. Shell sizes against 240 sigma_3(n).
inline CheckResult check_shell_sizes() {
  CheckResult r{3, "|R_2n| = 240 sigma_3(n), n = 1..12", true, {}};
  for (int n = 1; n <= 12; ++n) {
    std::uint64_t total = 0;
    for (const auto& o : shell(2 * n)) total += o.size;
    const Integer want = 240 * sigma(n, 3);
    if (Integer(static_cast<unsigned long>(total)) != want) {
      r.pass = false;
      r.detail = "n=" + std::to_string(n) + ": " + std::to_string(total) + " vs " + want.get_str();
      return r;
    }
  }
  r.detail = "|R_24| = 490560";
  return r;
}

// 4. Largest coset minimum of E8 / tE8.
inline CheckResult check_coset_minima() {
  CheckResult r{4, "max coset minimum, t = 2..6", true, {}};
  const long long expect[] = {4, 8, 16, 22, 36};
  for (int t = 2; t <= 6; ++t) {
    const long long got = max_coset_min_norm(t);
    if (got != expect[t - 2]) {
      r.pass = false;
      r.detail = "t=" + std::to_string(t) + ": " + std::to_string(got) + " vs " + std::to_string(expect[t - 2]);
      return r;
    }
  }
  r.detail = "4, 8, 16, 22, 36";
  return r;
}

// 5. Index-2 catalog.
inline CheckResult check_index2() {
  CheckResult r{5, "index-2 catalog through q^2", true, {}};
  r.detail = detail::compare_displays({
      {"phi_-4_2", 0, "2Σ_2 − Σ_4 − 240"},
      {"phi_-2_2", 0, "Σ_2 + Σ_4 − 480"},
      {"phi_0_2", 0, "Σ_2 + 120"},
      {"A2", 0, "1"},
      {"A2", 1, "Σ_4"},
      {"B2", 0, "1"},
      {"B2", 1, "−(8/5)Σ_2 − (3/5)Σ_4 + 24"},
      {"B2", 2, "Σ_8'' − (24/5)Σ_8' − (224/5)Σ_6 − (72/5)Σ_4 − (32/5)Σ_2 + 24"},
      {"U_12_2", 1, "Σ_2 + 120"},
      {"V_14_2", 1, "Σ_2 − 240"},
      {"W_16_2", 1, "Σ_2 − 240"},
  });
  if (r.detail.empty() && value_at_zero(build("B2", 3)) != eisenstein(6, 3)) r.detail = "B2(tau, 0) is not E6";
  r.pass = r.detail.empty();
  if (r.pass) r.detail = "11 coefficients, B2(tau, 0) = E6";
  return r;
}

// 6. theta^2 - (1/9) E4 theta|T_-(2) = Delta phi_-4_2 through q^10.
inline CheckResult check_theta_relation() {
  CheckResult r{6, "theta^2 relation through q^10", true, {}};
  const int order = 10;
  const auto th = theta_e8(order);
  const auto lhs = jf_mul(th, th) - jf_scale(hecke_t_minus(theta_e8(2 * order), 2), eisenstein(4, order)) * ratio(1, 9);
  const auto rhs = jf_scale(build("phi_-4_2", order - 1), delta(order));
  if (lhs.order() != order || rhs.order() != order) {
    r.pass = false;
    r.detail = "orders " + std::to_string(lhs.order()) + " and " + std::to_string(rhs.order());
    return r;
  }
  for (int n = 0; n <= order; ++n)
    if (lhs[n] != rhs[n]) {
      r.pass = false;
      r.detail = "q^" + std::to_string(n) + ": " + display_text(lhs[n]) + " vs " + display_text(rhs[n]);
      return r;
    }
  r.detail = "11 coefficients";
  return r;
}

// 7. Pole-cancellation systems.
inline CheckResult check_cascades() {
  CheckResult r{7, "cascade systems", true, {}};
  struct Case {
    int t, w0, hi;
    RVector want;  // empty: only the trivial solution
  };
  const std::vector<Case> cases = {
      {2, -4, 4, {1, -2, 1}},
      {3, -8, 8, {1, -4, 6, -4, 1}},
      {3, -10, 8, {}},
      {3, -6, 6, {}},
      {4, -16, 16, {1, -8, 28, -56, 70, -56, 28, -8, 1}},
      {4, -18, 16, {}},
      {4, -14, 14, {}},
  };
  for (const auto& c : cases) {
    const auto s = solve_cascade(c.t, c.w0, detail::norms_to(c.hi));
    const bool ok = c.want.empty() ? s.nullspace.empty() : (s.nullspace.size() == 1 && s.nullspace[0] == c.want);
    if (!ok) {
      r.pass = false;
      r.detail = "t=" + std::to_string(c.t) + " w0=" + std::to_string(c.w0) + ": nullity " +
                 std::to_string(s.nullspace.size());
      return r;
    }
  }
  r.detail = "7 systems";
  return r;
}

// 8. Index-3 catalog.
inline CheckResult check_index3() {
  CheckResult r{8, "index-3 catalog", true, {}};
  r.detail = detail::compare_displays({
      {"B_-2_3", 0, "3Σ_2 + 3Σ_4 + 5Σ_6 − 2640"},
      {"phi_-4_3", 0, "Σ_2 + Σ_4 − Σ_6 − 240"},
      {"phi_-2_3", 0, "Σ_2 + Σ_6 − 480"},
      {"phi_0_3", 0, "Σ_2"},
      {"phi_-8_3", 0, "Σ_8' − 4Σ_6 + 6Σ_4 − 4Σ_2 + 240"},
      {"phi_-6_3", 0, "Σ_8' − 6Σ_4 + 8Σ_2 − 720"},
      {"A3", 1, "Σ_6"},
      {"B3", 1, "−(7/20)Σ_6 − (27/20)Σ_4 − (9/20)Σ_2 + 12"},
      {"U_10_3", 1, "Σ_4 − (2/3)Σ_2 − 80"},
      {"U_12_3", 1, "Σ_4 − 2Σ_2 + 240"},
      {"V_12_3", 1, "Σ_2"},
      {"U_14_3", 1, "Σ_4 + 2Σ_2 − 720"},
      {"U_16_3", 0, "0"},
      {"U_16_3", 1, "0"},
  });
  r.pass = r.detail.empty();
  if (r.pass) r.detail = "14 coefficients";
  return r;
}

// 9. Index-4 catalog and the removal of Sigma_16' from the holomorphic combinations.
inline CheckResult check_index4() {
  CheckResult r{9, "index-4 catalog and cancellation", true, {}};
  r.detail = detail::compare_displays({
      {"phi_-16_4", 0, "Σ_16' − 8Σ_14' + 28Σ_12 − 56Σ_10 + 14Σ_8'' + 56Σ_8' − 56Σ_6 + 28Σ_4 − 8Σ_2 + 240"},
      {"phi_-14_4", 0, "Σ_16' − 2Σ_14' − 14Σ_12 + 70Σ_10 − 28Σ_8'' − 112Σ_8' + 154Σ_6 − 98Σ_4 + 34Σ_2 − 1200"},
      {"phi_-12_4", 0, "Σ_14' − 4Σ_12 + 3Σ_10 + 2Σ_8'' + 8Σ_8' − 25Σ_6 + 24Σ_4 − 11Σ_2 + 480"},
      {"phi_-10_4", 0, "Σ_12 − 4Σ_10 + Σ_8'' + 4Σ_8' − 5Σ_4 + 4Σ_2 − 240"},
      {"phi_-8_4", 0, "Σ_10 − (7/10)Σ_8'' − (28/10)Σ_8' + 4Σ_6 − Σ_4 − Σ_2 + 120"},
      {"phi_-6_4", 0, "Σ_8'' + 4Σ_8' − 14Σ_6 + 12Σ_4 − 2Σ_2 − 240"},
      {"phi_-4_4", 0, "Σ_6 − 2Σ_4 + Σ_2"},
      {"phi_-2_4", 0, "−7Σ_4 + 8Σ_2 − 240"},
      {"phi_0_4", 0, "2Σ_2 − 120"},
      {"psi_-8_4", 0, "Σ_8' − Σ_8''"},
      {"A4", 1, "Σ_8''"},
      {"B4", 1, "(1/15)Σ_8'' − (28/15)Σ_6 − (4/15)Σ_2 − 8"},
      {"C_8_4", 1, "(1/5)Σ_8'' + (4/5)Σ_8' − 4Σ_6 + 6Σ_4 − 4Σ_2 + 240"},
      {"U_10_4", 1, "Σ_6 − 3Σ_4 + 3Σ_2 − 240"},
      {"U_12_4", 1, "Σ_6 − 3Σ_4 + 3Σ_2 − 240"},
  });
  if (r.detail.empty()) {
    const DominantWeight m16 = sigma_weight("16'");
    for (const auto& name : {"U_10_4", "U_12_4", "cusp_8_4", "cusp_10_4", "cusp_12_4"}) {
      const auto f = build(name, 2);
      if (f[2].coeff(m16) != 0) {
        r.detail = std::string(name) + " keeps Σ_16' at q^2";
        break;
      }
    }
  }
  r.pass = r.detail.empty();
  if (r.pass) r.detail = "15 coefficients, Σ_16' cancelled in 5 forms";
  return r;
}

// 10. Holomorphic dimensions at weight 4 and the free-module structure.
inline CheckResult check_free_modules() {
  CheckResult r{10, "holomorphic dims and free modules, t = 1..4", true, {}};
  const std::size_t dims[] = {1, 1, 1, 2};
  const auto rs = rank_series(4);
  for (int t = 1; t <= 4; ++t) {
    const auto b = holomorphic_subspace(4, t, 3);
    if (b.size() != dims[t - 1]) {
      r.pass = false;
      r.detail = "weight 4 index " + std::to_string(t) + ": dimension " + std::to_string(b.size());
      return r;
    }
    const auto rep = verify_free_module(t, 16, default_order(t));
    if (Integer(static_cast<unsigned long>(rep.generators)) != rs[static_cast<std::size_t>(t)]) {
      r.pass = false;
      r.detail = "index " + std::to_string(t) + ": " + std::to_string(rep.generators) + " generators";
      return r;
    }
    for (const auto& row : rep.rows)
      if (!row.ok()) {
        r.pass = false;
        r.detail = "index " + std::to_string(t) + " weight " + std::to_string(row.weight) + ": rank " +
                   std::to_string(row.rank) + " of " + std::to_string(row.predicted);
        return r;
      }
  }
  r.detail = "dims 1, 1, 1, 2; ranks through weight 16";
  return r;
}

// 11. Structural properties of every constructible catalog form.
inline CheckResult check_form_properties(int samples = 100, std::uint64_t seed = 12345) {
  CheckResult r{11, "property suites on every form", true, {}};
  int count = 0;
  for (const auto& info : catalog_forms()) {
    if (!info.constructible) continue;
    const auto f = build(info.name, default_order(info.index));
    auto fail = [&](const std::string& why) {
      r.pass = false;
      r.detail = info.name + ": " + why;
    };
    const auto c = classify(f);
    if (c.kind != info.kind) fail(std::string("classified ") + to_string(c.kind));
    else if (!t_support_check(f[0], info.index).ok) fail("q^0 support exceeds the index");
    else if (!coset_bound_violations(f).empty()) fail("coefficient below the coset bound");
    else if (info.weight == 0 && !weight0_identity(f)) fail("weight-0 identity");
    else if (info.weight == 0 && !value_at_zero(heat(f)).is_zero()) fail("heat image does not vanish at z = 0");
    else if (auto qp = quasi_periodicity_violation(f, samples, seed); !qp.empty()) fail(qp);
    if (!r.pass) return r;
    ++count;
  }
  r.detail = std::to_string(count) + " forms";
  return r;
}

// 12. Orbit products against the double loop over both orbits.
inline CheckResult check_orbit_products(std::uint64_t max_pairs = 10'000'000) {
  CheckResult r{12, "orbit products vs double loop", true, {}};
  std::vector<DominantWeight> reps;
  for (long long two_n = 2; two_n <= 8; two_n += 2)
    for (const auto& o : shell(two_n)) reps.push_back(o.rep);
  int checked = 0;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i; j < reps.size(); ++j) {
      const auto &a = reps[i], &b = reps[j];
      if (orbit_size(a) * orbit_size(b) > max_pairs) continue;
      std::map<DominantWeight, std::uint64_t> counts;
      const auto oa = orbit(a), ob = orbit(b);
      for (const auto& x : oa)
        for (const auto& y : ob) ++counts[dominant_reduce(x + y)];
      const auto prod = inv_mul(InvariantElement::orb(a), InvariantElement::orb(b));
      InvariantElement brute;
      for (const auto& [m, n] : counts)
        brute.add_term(m, ratio(Integer(static_cast<unsigned long>(n)), Integer(static_cast<unsigned long>(orbit_size(m)))));
      if (prod != brute) {
        r.pass = false;
        r.detail = "orb" + detail::fw_text(a.fw) + " * orb" + detail::fw_text(b.fw);
        return r;
      }
      ++checked;
    }
  r.detail = std::to_string(checked) + " products";
  return r;
}

// 13. Largest pairing of each dictionary orbit with a norm-4 vector.
inline CheckResult check_pullback_table() {
  CheckResult r{13, "pull-back maxima", true, {}};
  const std::map<std::string, long long> want = {
      {"2", 2},     {"4", 4},     {"6", 4},     {"8'", 5},    {"8''", 4},   {"10", 6},    {"12", 6},
      {"14'", 7},   {"14''", 6},  {"16'", 8},   {"16''", 7},  {"18'", 8},   {"18''", 6},  {"20'", 8},
      {"20''", 8},  {"22'", 9},   {"22''", 8},  {"24'", 8},   {"24''", 9},  {"26'", 10},  {"26''", 9},
      {"28'", 10},  {"30'", 10},  {"32'", 11},  {"32''", 10}, {"36'", 12}};
  const auto got = pullback_max_table();
  if (got.size() != want.size()) {
    r.pass = false;
    r.detail = std::to_string(got.size()) + " entries";
    return r;
  }
  for (const auto& [label, v] : got) {
    auto it = want.find(label);
    if (it == want.end() || it->second != v) {
      r.pass = false;
      r.detail = label + ": " + std::to_string(v);
      return r;
    }
  }
  r.detail = "26 entries";
  return r;
}

// 14. Dimension upper bounds, weights 4..40.
inline CheckResult check_bounds() {
  CheckResult r{14, "dimension bounds, weights 4..40", true, {}};
  const int want[] = {1, 0, 1, 1, 2, 1, 3, 2, 4, 4, 6, 5, 9, 8, 12, 13, 17, 17, 24};
  const auto t = dimension_bound_table(40);
  for (std::size_t i = 0; i < 19; ++i)
    if (i >= t.size() || t[i].upper != want[i]) {
      r.pass = false;
      r.detail = "weight " + std::to_string(4 + 2 * i);
      return r;
    }
  r.detail = "19 weights";
  return r;
}

/// Runs a check, turning any library exception into a failure.
inline CheckResult run_check(int id, const std::function<CheckResult()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return CheckResult{id, "check " + std::to_string(id), false, std::string("error: ") + e.what()};
  }
}

inline const std::map<std::string, std::vector<int>>& verify_suites() {
  static const std::map<std::string, std::vector<int>> s = {
      {"lattice", {2, 3, 4, 12, 13}}, {"bounds", {1, 14}},   {"systems", {7, 10}},
      {"index2", {5}},                {"identities", {6}},   {"index3", {8}},
      {"index4", {9}},                {"lf", {11}},
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}}};
  return s;
}

inline CheckResult run_check(int id) {
  static const std::map<int, std::function<CheckResult()>> table = {
      {1, [] { return check_rank_series(); }},     {2, [] { return check_shell_orbits(); }},
      {3, [] { return check_shell_sizes(); }},     {4, [] { return check_coset_minima(); }},
      {5, [] { return check_index2(); }},          {6, [] { return check_theta_relation(); }},
      {7, [] { return check_cascades(); }},        {8, [] { return check_index3(); }},
      {9, [] { return check_index4(); }},          {10, [] { return check_free_modules(); }},
      {11, [] { return check_form_properties(); }}, {12, [] { return check_orbit_products(); }},
      {13, [] { return check_pullback_table(); }}, {14, [] { return check_bounds(); }}};
  auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("no check " + std::to_string(id));
  return run_check(id, it->second);
}

}  // namespace e8jac

#endif  // E8JAC_CHECKS_HPP
