#ifndef E8JAC_CATALOG_HPP
#define E8JAC_CATALOG_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "e8jac/e8.hpp"
#include "e8jac/invring.hpp"
#include "e8jac/jacobi.hpp"
#include "e8jac/linalg.hpp"
#include "e8jac/qseries.hpp"
#include "e8jac/rational.hpp"

namespace e8jac {

/// How an otherwise free scalar in a recipe is pinned down.
enum class Normalization {
  none,           // the recipe is fully explicit
  value_at_zero,  // z = 0 restriction equals E4 (weight 4) or E6 (weight 6)
  leading_orbit,  // a named q^0 orbit has display coefficient 1
  cancellation,   // a multiple of a correction term kills a named q^2 coefficient
};

inline const char* to_string(Normalization n) {
  switch (n) {
    case Normalization::none: return "none";
    case Normalization::value_at_zero: return "value_at_zero";
    case Normalization::leading_orbit: return "leading_orbit";
    case Normalization::cancellation: return "cancellation";
  }
  return "?";
}

struct FormInfo {
  std::string name;
  int weight = 0;
  int index = 0;
  FormKind kind = FormKind::weak;
  std::string recipe;
  Normalization normalization = Normalization::none;
  std::string reference;  // expected leading terms in display notation
  bool constructible = true;
  std::string note;
};

/// Default truncation: q^3 through index 3, q^2 at index 4 and above.
inline int default_order(int index) { return index >= 4 ? 2 : 3; }

namespace detail {

using Recipe = std::function<JacobiQExpansion(int)>;

struct CatalogEntry {
  FormInfo info;
  Recipe recipe;
};

struct CatalogState {
  std::recursive_mutex mu;
  std::map<std::string, CatalogEntry> entries;
  std::vector<std::string> order;  // registration order
  std::map<std::string, JacobiQExpansion> cache;  // longest expansion built so far
  std::map<std::string, Rational> constants;      // resolved free scalars
};

inline CatalogState& catalog_state();

}  // namespace detail

// ---------------------------------------------------------------------------
// Names.

/// Accepts "phi_{-4,2}", "φ_{-4,2}", "phi_-4_2", "A_2", "A2", "ψ_{-8,4}".
inline std::string canonical_name(std::string_view raw) {
  std::string s;
  for (std::size_t i = 0; i < raw.size();) {
    if (raw.compare(i, 2, "φ") == 0) {
      s += "phi_";
      i += 2;
    } else if (raw.compare(i, 2, "ψ") == 0) {
      s += "psi_";
      i += 2;
    } else if (raw.compare(i, 2, "θ") == 0) {
      s += "theta_e8";
      i += 2;
    } else {
      char c = raw[i++];
      if (c == '{' || c == '}') continue;
      s += (c == ',') ? '_' : c;
    }
  }
  std::string out;
  for (char c : s)
    if (!(c == '_' && !out.empty() && out.back() == '_')) out += c;
  // single capital letter + "_" + digits: "A_2" -> "A2"
  if (out.size() >= 3 && out[1] == '_' && std::isupper(static_cast<unsigned char>(out[0])) &&
      std::all_of(out.begin() + 2, out.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    out.erase(1, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Registry access.

inline const FormInfo& form_info(std::string_view name) {
  auto& st = detail::catalog_state();
  std::lock_guard lock(st.mu);
  auto it = st.entries.find(canonical_name(name));
  if (it == st.entries.end()) throw std::invalid_argument("unknown form: " + std::string(name));
  return it->second.info;
}

inline std::vector<FormInfo> catalog_forms() {
  auto& st = detail::catalog_state();
  std::lock_guard lock(st.mu);
  std::vector<FormInfo> out;
  for (const auto& n : st.order) out.push_back(st.entries.at(n).info);
  return out;
}

/// The named form through q^order. Results are memoized; a longer cached
/// expansion is truncated rather than rebuilt.
inline JacobiQExpansion build(std::string_view name, int order) {
  if (order < 0) throw std::invalid_argument("build: negative order");
  auto& st = detail::catalog_state();
  std::lock_guard lock(st.mu);
  const std::string key = canonical_name(name);
  auto it = st.entries.find(key);
  if (it == st.entries.end()) throw std::invalid_argument("unknown form: " + std::string(name));
  if (!it->second.info.constructible)
    throw Error(key + " is declared but not constructible here: " + it->second.info.note);
  auto c = st.cache.find(key);
  if (c != st.cache.end() && c->second.order() >= order) return c->second.truncated(order);
  JacobiQExpansion f = it->second.recipe(order);
  if (f.order() < order) throw InsufficientOrderError("recipe for " + key + " fell short", order);
  f = f.truncated(order);
  const FormInfo& info = it->second.info;
  if (f.weight() != info.weight || f.index() != info.index)
    throw std::logic_error("recipe for " + key + " produced the wrong weight or index");
  st.cache.insert_or_assign(key, f);
  return f;
}

/// Scalar fixed by the normalization rule of a recipe, once it has been built.
inline std::optional<Rational> resolved_constant(std::string_view name) {
  auto& st = detail::catalog_state();
  std::lock_guard lock(st.mu);
  auto it = st.constants.find(canonical_name(name));
  if (it == st.constants.end()) return std::nullopt;
  return it->second;
}

inline void clear_catalog_cache() {
  auto& st = detail::catalog_state();
  std::lock_guard lock(st.mu);
  st.cache.clear();
  st.constants.clear();
}

// ---------------------------------------------------------------------------
// phi_{-16,4} as a theta quotient.

namespace detail {

// Laurent monomial table: key packs (q-power, 8 exponents), value is an integer coefficient.
using RawSeries = std::unordered_map<std::uint64_t, long long>;

inline std::uint64_t pack_raw(int q, const std::array<int, 8>& e) {
  std::uint64_t k = static_cast<std::uint64_t>(q);
  for (int x : e) {
    if (x < -60 || x > 60) throw std::logic_error("theta quotient exponent out of range");
    k = (k << 7) | static_cast<std::uint64_t>(x + 64);
  }
  return k;
}

inline std::pair<int, std::array<int, 8>> unpack_raw(std::uint64_t k) {
  std::array<int, 8> e{};
  for (int i = 7; i >= 0; --i) {
    e[static_cast<std::size_t>(i)] = static_cast<int>(k & 127U) - 64;
    k >>= 7;
  }
  return {static_cast<int>(k), e};
}

inline RawSeries raw_product(const RawSeries& a, const RawSeries& b, int max_q) {
  RawSeries out;
  for (const auto& [ka, ca] : a) {
    auto [qa, ea] = unpack_raw(ka);
    for (const auto& [kb, cb] : b) {
      auto [qb, eb] = unpack_raw(kb);
      if (qa + qb > max_q) continue;
      std::array<int, 8> e{};
      for (int i = 0; i < 8; ++i) e[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
      out[pack_raw(qa + qb, e)] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace detail

/// (1/Delta^2) prod_{i=1..4} theta(z_{2i-1}+z_{2i})^2 theta(z_{2i-1}-z_{2i})^2,
/// projected onto W(E8)-invariants and scaled so Sigma_16' has coefficient 1.
/// theta(tau, u) = sum_n (-1)^n q^((n+1/2)^2/2) zeta^(n+1/2); the overall sign
/// convention is irrelevant after normalization.
inline JacobiQExpansion build_phi16_4(int order) {
  if (order < 0 || order > 3) throw std::invalid_argument("build_phi16_4: order must be in 0..3");
  // (n+1/2)^2/2 = n(n+1)/2 + 1/8; the sixteen 1/8's give exactly the q^2 of Delta^2.
  auto tri = [](int n) { return n * (n + 1) / 2; };
  std::vector<int> ns;
  for (int n = -order - 2; n <= order + 1; ++n)
    if (tri(n) <= order) ns.push_back(n);
  std::vector<detail::RawSeries> blocks(4);
  for (int blk = 0; blk < 4; ++blk)
    for (int a : ns)
      for (int b : ns)
        for (int c : ns)
          for (int d : ns) {
            const int q = tri(a) + tri(b) + tri(c) + tri(d);
            if (q > order) continue;
            const int p = a + b + 1, r = c + d + 1;  // exponents of u = z1+z2 and v = z1-z2
            std::array<int, 8> e{};
            e[static_cast<std::size_t>(2 * blk)] = p + r;
            e[static_cast<std::size_t>(2 * blk + 1)] = p - r;
            blocks[static_cast<std::size_t>(blk)][detail::pack_raw(q, e)] += ((a + b + c + d) % 2 == 0) ? 1 : -1;
          }
  detail::RawSeries prod = detail::raw_product(detail::raw_product(blocks[0], blocks[1], order),
                                               detail::raw_product(blocks[2], blocks[3], order), order);
  // bin raw coefficients by Weyl orbit
  std::vector<std::map<DominantWeight, Integer>> binned(static_cast<std::size_t>(order) + 1);
  for (const auto& [k, c] : prod) {
    auto [q, e] = detail::unpack_raw(k);
    int sum = 0;
    std::array<int, 8> dbl{};
    for (int i = 0; i < 8; ++i) {
      sum += e[static_cast<std::size_t>(i)];
      dbl[static_cast<std::size_t>(i)] = 2 * e[static_cast<std::size_t>(i)];
    }
    if (sum % 2 != 0) throw std::logic_error("theta quotient exponent outside D8");
    binned[static_cast<std::size_t>(q)][dominant_reduce(E8Vector::from_doubled(dbl))] += Integer(static_cast<long>(c));
  }
  std::vector<InvariantElement> proj(static_cast<std::size_t>(order) + 1);
  for (int q = 0; q <= order; ++q)
    for (const auto& [m, s] : binned[static_cast<std::size_t>(q)])
      proj[static_cast<std::size_t>(q)].add_term(m, ratio(s, Integer(static_cast<unsigned long>(orbit_size(m)))));
  // 1/prod(1-q^n)^48 = q^2/Delta^2
  ModularQSeries d = delta(order + 1);
  std::vector<Rational> eta48(static_cast<std::size_t>(order) + 1);
  {
    ModularQSeries d2 = series_mul(d, d);  // q^2 prod(1-q^n)^48
    std::vector<Rational> p(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) p[static_cast<std::size_t>(n)] = d2[n + 2];
    eta48[0] = 1;
    for (int n = 1; n <= order; ++n) {
      Rational acc = 0;
      for (int i = 1; i <= n; ++i) acc -= p[static_cast<std::size_t>(i)] * eta48[static_cast<std::size_t>(n - i)];
      eta48[static_cast<std::size_t>(n)] = acc;
    }
  }
  std::vector<InvariantElement> terms(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n)
    for (int i = 0; i <= n; ++i) terms[static_cast<std::size_t>(n)] += proj[static_cast<std::size_t>(i)] * eta48[static_cast<std::size_t>(n - i)];
  const DominantWeight lead = sigma_weight("16'");
  const Rational shown = terms[0].coeff(lead) * ratio(Integer(static_cast<unsigned long>(orbit_size(lead))), Integer(240));
  if (sgn(shown) == 0) throw std::logic_error("theta quotient lost its Sigma_16' term");
  const Rational scale = Rational(1) / shown;
  for (auto& t : terms) t *= scale;
  {
    auto& st = detail::catalog_state();
    std::lock_guard lock(st.mu);
    st.constants.insert_or_assign("phi_-16_4", scale);
  }
  return JacobiQExpansion(-16, 4, std::move(terms));
}

// ---------------------------------------------------------------------------
// q^0 cascades.

struct CascadeSystem {
  int t = 0;
  int w0 = 0;
  std::vector<long long> norms;
  RMatrix matrix;
  std::vector<RVector> nullspace;
};

/// Unknowns c_j are the display coefficients of the merged norm-nu_j orbits
/// of the q^0 term (the constant is 240 c_0). Each heat step multiplies c_j by
/// (4 - w)/12 - nu_j/(2t); every negative weight reached gives a z = 0 row,
/// and weight 0 gives the row weighted by 2t - 3 nu_j.
inline CascadeSystem solve_cascade(int t, int w0, const std::vector<long long>& norms) {
  if (t < 1) throw std::invalid_argument("solve_cascade: index must be positive");
  if (w0 > -2 || w0 % 2 != 0) throw std::invalid_argument("solve_cascade: start weight must be even and <= -2");
  if (norms.empty() || norms[0] != 0) throw std::invalid_argument("solve_cascade: norms must start at 0");
  for (std::size_t j = 1; j < norms.size(); ++j)
    if (norms[j] <= norms[j - 1] || norms[j] % 2 != 0)
      throw std::invalid_argument("solve_cascade: norms must be even and strictly increasing");
  CascadeSystem s;
  s.t = t;
  s.w0 = w0;
  s.norms = norms;
  RVector m(norms.size(), Rational(1));
  for (int w = w0;; w += 2) {
    if (w > w0) {
      const Rational base = ratio(4 - (w - 2), 12);
      for (std::size_t j = 0; j < norms.size(); ++j) m[j] *= base - ratio(static_cast<long>(norms[j]), 2L * t);
    }
    if (w < 0) {
      s.matrix.push_back(m);
      continue;
    }
    RVector row(norms.size());
    for (std::size_t j = 0; j < norms.size(); ++j) row[j] = m[j] * Rational(static_cast<long>(2L * t - 3 * norms[j]));
    s.matrix.push_back(row);
    break;
  }
  s.nullspace = nullspace(s.matrix, norms.size());
  return s;
}

// ---------------------------------------------------------------------------
// Holomorphic subspaces and free-module checks.

/// Names of the weak generators of index t (t = 1..4), by increasing weight.
inline std::vector<std::string> weak_generators(int t) {
  switch (t) {
    case 1: return {"theta_e8"};
    case 2: return {"phi_-4_2", "phi_-2_2", "phi_0_2"};
    case 3: return {"phi_-8_3", "phi_-6_3", "phi_-4_3", "phi_-2_3", "phi_0_3"};
    case 4:
      return {"phi_-16_4", "phi_-14_4", "phi_-12_4", "phi_-10_4", "phi_-8_4",
              "psi_-8_4",  "phi_-6_4",  "phi_-4_4",  "phi_-2_4",  "phi_0_4"};
    default: throw std::invalid_argument("weak generators are known for index 1..4 only");
  }
}

inline std::vector<int> weak_generator_weights(int t) {
  std::vector<int> w;
  for (const auto& n : weak_generators(t)) w.push_back(form_info(n).weight);
  return w;
}

/// Largest n for which holomorphy can fail at q^n after reduction by
/// quasi-periodicity: 2nt < max coset minimum. -1 when no condition exists.
inline int holomorphy_depth(int t) {
  static std::map<int, long long> memo;
  static std::mutex mu;
  long long mx;
  {
    std::lock_guard lock(mu);
    auto it = memo.find(t);
    if (it == memo.end()) it = memo.emplace(t, max_coset_min_norm(t)).first;
    mx = it->second;
  }
  return static_cast<int>((mx + 2LL * t - 1) / (2LL * t)) - 1;
}

/// Same for the cusp condition 2nt <= max coset minimum.
inline int cusp_depth(int t) { return static_cast<int>(max_coset_min_norm(t) / (2LL * t)); }

namespace detail {

struct Candidate {
  std::string label;  // e.g. "E4^2*phi_-4_2"
  JacobiQExpansion form;
};

inline std::string monomial_label(int a, int b) {
  std::string s;
  if (a) s += a == 1 ? "E4" : "E4^" + std::to_string(a);
  if (b) s += (s.empty() ? "" : "*") + std::string(b == 1 ? "E6" : "E6^" + std::to_string(b));
  return s;
}

inline std::vector<Candidate> module_candidates(int weight, int t, int order) {
  std::vector<Candidate> out;
  for (const auto& g : weak_generators(t)) {
    const int wg = form_info(g).weight;
    const auto monos = eisenstein_monomials(weight - wg);
    if (monos.empty()) continue;
    JacobiQExpansion f = build(g, order);
    for (auto [a, b] : monos) {
      std::string lab = monomial_label(a, b);
      out.push_back({lab.empty() ? g : lab + "*" + g, jf_scale(f, eisenstein_monomial(a, b, order))});
    }
  }
  return out;
}

using CoeffKey = std::pair<int, DominantWeight>;

inline std::vector<CoeffKey> support_keys(const std::vector<Candidate>& cs) {
  std::set<CoeffKey> keys;
  for (const auto& c : cs)
    for (int n = 0; n <= c.form.order(); ++n)
      for (const auto& [m, v] : c.form[n].terms()) keys.insert({n, m});
  return {keys.begin(), keys.end()};
}

}  // namespace detail

/// Basis of the holomorphic forms of the given weight and index among the
/// M_*-combinations of weak generators, checked on q^0..q^order.
inline std::vector<JacobiQExpansion> holomorphic_subspace(int weight, int t, int order) {
  if (t < 1 || t > 4) throw std::invalid_argument("holomorphic_subspace: index must be 1..4");
  if (weight % 2 != 0) throw std::invalid_argument("holomorphic_subspace: weight must be even");
  const int need = holomorphy_depth(t);
  if (order < need)
    throw InsufficientOrderError("holomorphic_subspace: conditions reach q^" + std::to_string(need) +
                                     " but only q^" + std::to_string(order) + " was requested",
                                 need);
  auto cs = detail::module_candidates(weight, t, order);
  if (cs.empty()) return {};
  RMatrix rows;
  for (const auto& [n, m] : detail::support_keys(cs)) {
    if (2LL * n * t - m.norm() >= 0) continue;
    RVector row;
    for (const auto& c : cs) row.push_back(c.form[n].coeff(m));
    rows.push_back(std::move(row));
  }
  auto basis = nullspace(rows, cs.size());
  std::vector<JacobiQExpansion> out;
  for (const auto& v : basis) {
    JacobiQExpansion f = JacobiQExpansion::zero(weight, t, order);
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (sgn(v[i]) != 0) f = f + cs[i].form * v[i];
    out.push_back(std::move(f));
  }
  if (out.size() == 1 && (weight == 4 || weight == 6)) {
    const Rational z = value_at_zero(out[0])[0];
    if (sgn(z) != 0) out[0] *= Rational(1) / z;
  }
  return out;
}

struct FreeModuleRow {
  int weight = 0;
  std::size_t predicted = 0;  // sum over generators of dim M_(w - w_g)
  std::size_t rank = 0;
  std::vector<std::string> labels;
  std::optional<RVector> relation;  // a vanishing combination when rank < predicted
  bool ok() const { return rank == predicted; }
};

struct FreeModuleReport {
  int index = 0;
  int order = 0;
  std::size_t generators = 0;
  std::vector<FreeModuleRow> rows;
  bool ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const FreeModuleRow& r) { return r.ok(); });
  }
};

/// Independence of the M_*-monomial multiples of the weak generators, weight by weight.
inline FreeModuleReport verify_free_module(int t, int max_weight, int order) {
  FreeModuleReport rep;
  rep.index = t;
  rep.order = order;
  const auto weights = weak_generator_weights(t);
  rep.generators = weights.size();
  const int lo = *std::min_element(weights.begin(), weights.end());
  for (int w = lo; w <= max_weight; w += 2) {
    FreeModuleRow row;
    row.weight = w;
    for (int wg : weights) row.predicted += static_cast<std::size_t>(dim_modular(w - wg));
    auto cs = detail::module_candidates(w, t, order);
    auto keys = detail::support_keys(cs);
    RMatrix m;
    for (const auto& c : cs) {
      row.labels.push_back(c.label);
      RVector v;
      for (const auto& [n, mm] : keys) v.push_back(c.form[n].coeff(mm));
      m.push_back(std::move(v));
    }
    row.rank = m.empty() ? 0 : rank(m, keys.size());
    if (row.rank < cs.size()) {
      auto deps = row_dependencies(m, keys.size());
      if (!deps.empty()) row.relation = deps.front();
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Tables.

/// Coefficients r(0..t_max) of 1/((1-x)(1-x^2)^2(1-x^3)^2(1-x^4)^2(1-x^5)(1-x^6)).
inline std::vector<Integer> rank_series(int t_max) {
  if (t_max < 0) throw std::invalid_argument("rank_series: negative length");
  std::vector<Integer> r(static_cast<std::size_t>(t_max) + 1, Integer(0));
  r[0] = 1;
  for (int f : {1, 2, 2, 3, 3, 4, 4, 5, 6})
    for (int n = f; n <= t_max; ++n) r[static_cast<std::size_t>(n)] += r[static_cast<std::size_t>(n - f)];
  return r;
}

/// dim of weak forms of weight w and index r; r <= 4 from the free-module
/// structure, r = 5 only where it is known to vanish (w <= -20).
inline std::optional<int> dim_weak(int w, int r) {
  if (r == 0) return dim_modular(w);
  if (r <= 4) {
    int s = 0;
    for (int wg : weak_generator_weights(r)) s += dim_modular(w - wg);
    return s;
  }
  if (r == 5 && w <= -20) return 0;
  return std::nullopt;
}

struct BoundRow {
  int weight = 0;
  int upper = 0;
  std::string notes;
};

/// Upper bounds sum_{0 <= r <= k/7} dim_weak(k - 12r, r) for k = 4..k_max.
inline std::vector<BoundRow> dimension_bound_table(int k_max) {
  if (k_max % 2 != 0) throw std::invalid_argument("dimension_bound_table: k_max must be even");
  if (k_max > 40)
    throw std::invalid_argument(
        "dimension_bound_table: weight 42 needs dim of weak forms of weight -18 and index 5, which is open");
  std::vector<BoundRow> out;
  for (int k = 4; k <= k_max; k += 2) {
    BoundRow row;
    row.weight = k;
    std::vector<std::string> parts;
    for (int r = 0; 7 * r <= k; ++r) {
      auto d = dim_weak(k - 12 * r, r);
      if (!d) throw std::logic_error("dimension_bound_table: unknown weak dimension");
      row.upper += *d;
      if (r == 5 && k - 12 * r <= -20) parts.push_back("index 5 term vanishes (weight <= -20)");
    }
    if (k == 6) {
      row.upper = 0;
      parts.push_back("override: no nonzero holomorphic form of weight 6 and index 1");
    }
    for (std::size_t i = 0; i < parts.size(); ++i) row.notes += (i ? "; " : "") + parts[i];
    out.push_back(std::move(row));
  }
  return out;
}

/// max (m, v) over norm-4 vectors v, for every dictionary orbit.
inline std::vector<std::pair<std::string, long long>> pullback_max_table() {
  std::vector<std::pair<std::string, long long>> out;
  for (const auto& e : sigma_dictionary()) out.emplace_back(e.label, max_pairing(DominantWeight::from_fw(e.fw), 4));
  return out;
}

// ---------------------------------------------------------------------------
// Recipes.

namespace detail {

inline JacobiQExpansion get(const char* name, int order) { return build(name, std::max(order, 0)); }

inline ModularQSeries E(int k, int order) { return eisenstein(k, std::max(order, 0)); }
inline ModularQSeries Dl(int order) { return delta(std::max(order, 1)); }
inline ModularQSeries Dl2(int order) { return series_mul(Dl(order), Dl(order)); }
inline ModularQSeries E4p(int a, int b, int order) { return eisenstein_monomial(a, b, std::max(order, 0)); }

inline JacobiQExpansion sc(const JacobiQExpansion& f, const ModularQSeries& g) { return jf_scale(f, g); }

inline void record(const std::string& name, const Rational& c) {
  auto& st = catalog_state();
  std::lock_guard lock(st.mu);
  st.constants.insert_or_assign(name, c);
}

inline Rational display_coeff(const InvariantElement& x, const char* label) {
  const DominantWeight m = sigma_weight(label);
  return x.coeff(m) * ratio(Integer(static_cast<unsigned long>(orbit_size(m))), Integer(240));
}

/// f scaled so that the display coefficient of `label` in the q^0 term is 1.
inline JacobiQExpansion lead_normalize(const std::string& name, JacobiQExpansion f, const char* label) {
  const Rational c = display_coeff(f[0], label);
  if (sgn(c) == 0) throw std::logic_error(name + ": normalizing orbit is absent");
  record(name, Rational(1) / c);
  return f * (Rational(1) / c);
}

/// f scaled so its z = 0 value has constant term 1 (E4 or E6 for the relevant weights).
inline JacobiQExpansion zero_normalize(const std::string& name, JacobiQExpansion f) {
  const Rational c = value_at_zero(f)[0];
  if (sgn(c) == 0) throw std::logic_error(name + ": vanishes at z = 0");
  record(name, Rational(1) / c);
  return f * (Rational(1) / c);
}

/// base - s * corr with s chosen to remove Sigma_16' from the q^2 term.
inline JacobiQExpansion cancel_16(const std::string& name, const JacobiQExpansion& base, const JacobiQExpansion& corr) {
  const Rational cb = display_coeff(base[2], "16'"), cc = display_coeff(corr[2], "16'");
  if (sgn(cc) == 0) throw std::logic_error(name + ": correction term has no q^2 Sigma_16'");
  const Rational s = cb / cc;
  record(name, s);
  return base - corr * s;
}

inline JacobiQExpansion x_family(int t, int n) {
  JacobiQExpansion th = theta_e8(t * n);
  return zero_normalize("X" + std::to_string(t), t == 1 ? th : hecke_t_minus(th, t, n));
}

/// Index-4 building block shared by C_{8,4}, U_{10,4}, U_{12,4}:
/// Delta * (f16 phi_-16 - f14 phi_-14 + 6 f12 phi_-12 - 18 f10 phi_-10 + 36 f8 phi_-8 [- 54/5 f6 phi_-6])
/// with f* the modular monomials given as exponent pairs.
struct Mono {
  int a, b;
};

inline JacobiQExpansion index4_combo(int n, Mono f16, Mono f14, Mono f12, Mono f10, Mono f8, std::optional<Mono> f6) {
  const int m = n - 1;
  JacobiQExpansion s = sc(get("phi_-16_4", m), E4p(f16.a, f16.b, m)) - sc(get("phi_-14_4", m), E4p(f14.a, f14.b, m)) +
                       sc(get("phi_-12_4", m), E4p(f12.a, f12.b, m)) * Rational(6) -
                       sc(get("phi_-10_4", m), E4p(f10.a, f10.b, m)) * Rational(18) +
                       sc(get("phi_-8_4", m), E4p(f8.a, f8.b, m)) * Rational(36);
  if (f6) s = s - sc(get("phi_-6_4", m), E4p(f6->a, f6->b, m)) * ratio(54, 5);
  return sc(s, Dl(n));
}

inline void add(CatalogState& st, FormInfo info, Recipe r) {
  std::string key = info.name;
  st.order.push_back(key);
  st.entries.emplace(key, CatalogEntry{std::move(info), std::move(r)});
}

inline void add_declared(CatalogState& st, std::string name, int weight, int index, FormKind kind, std::string note) {
  FormInfo i{name, weight, index, kind, "", Normalization::value_at_zero, "", false, std::move(note)};
  add(st, std::move(i), nullptr);
}

inline void register_forms(CatalogState& st) {
  using FK = FormKind;
  using N = Normalization;
  const auto holo = FK::holomorphic;
  const auto cusp = FK::cusp;
  const auto weak = FK::weak;

  // index 1 and the weight-4 family
  add(st, {"theta_e8", 4, 1, holo, "sum over E8 of q^((l,l)/2) zeta^l", N::none, "1 + q Σ_2 + 9q^2 Σ_4 + O(q^3)"},
      [](int n) { return theta_e8(n); });
  for (int t = 1; t <= 6; ++t) {
    std::string x = "X" + std::to_string(t);
    add(st, {x, 4, t, holo, "* theta_e8|T_-(" + std::to_string(t) + ")", N::value_at_zero, "value at z=0 is E4; 1 + O(q)"},
        [t](int n) { return x_family(t, n); });
  }
  add(st, {"A1", 4, 1, holo, "X1 = theta_e8", N::value_at_zero, "1 + q Σ_2 + O(q^2)"}, [](int n) { return get("X1", n); });
  add(st, {"A2", 4, 2, holo, "X2 = (1/9) theta_e8|T_-(2)", N::value_at_zero, "1 + q Σ_4 + O(q^2)"},
      [](int n) { return get("X2", n); });
  add(st, {"A3", 4, 3, holo, "X3 = (1/28) theta_e8|T_-(3)", N::value_at_zero, "1 + q Σ_6 + O(q^2)"},
      [](int n) { return get("X3", n); });
  add(st, {"A4", 4, 4, holo, "theta_e8(tau, 2z)", N::none, "1 + q Σ_8'' + O(q^2)"},
      [](int n) { return rescale_z(theta_e8(n), 2); });
  add(st, {"A5", 4, 5, holo, "X5", N::value_at_zero, "1 + O(q)"}, [](int n) { return get("X5", n); });

  // index 2
  add(st, {"phi_-4_2", -4, 2, weak, "(theta^2 - (1/9) E4 theta|T_-(2)) / Delta", N::none, "2Σ_2 − Σ_4 − 240 + O(q)"},
      [](int n) {
        JacobiQExpansion th = theta_e8(n + 1);
        JacobiQExpansion num = jf_mul(th, th) - sc(hecke_t_minus(theta_e8(2 * n + 2), 2, n + 1), E(4, n + 1)) * ratio(1, 9);
        return jf_div_modular(num, Dl(n + 1));
      });
  add(st, {"phi_-2_2", -2, 2, weak, "3 H(phi_-4_2)", N::none, "Σ_2 + Σ_4 − 480 + O(q)"},
      [](int n) { return heat(get("phi_-4_2", n)) * Rational(3); });
  add(st, {"phi_0_2", 0, 2, weak, "(1/2) E4 phi_-4_2 - H(phi_-2_2)", N::none, "Σ_2 + 120 + O(q)"},
      [](int n) { return sc(get("phi_-4_2", n), E(4, n)) * ratio(1, 2) - heat(get("phi_-2_2", n)); });
  add(st, {"B2", 6, 2, holo, "(1/1080)(3 E6 phi_0_2 - E4 E6 phi_-4_2 - E4^2 phi_-2_2)", N::none,
           "1 + q(−(8/5)Σ_2 − (3/5)Σ_4 + 24) + q^2(Σ_8'' − (24/5)Σ_8' − (224/5)Σ_6 − (72/5)Σ_4 − (32/5)Σ_2 + 24)"},
      [](int n) {
        return (sc(get("phi_0_2", n), E(6, n)) * Rational(3) - sc(get("phi_-4_2", n), E4p(1, 1, n)) -
                sc(get("phi_-2_2", n), E4p(2, 0, n))) *
               ratio(1, 1080);
      });
  add(st, {"U_12_2", 12, 2, cusp, "Delta phi_0_2", N::none, "q(Σ_2 + 120) + O(q^2)"},
      [](int n) { return sc(get("phi_0_2", n - 1), Dl(n)); });
  add(st, {"V_14_2", 14, 2, cusp, "(1/3) Delta (E6 phi_-4_2 + E4 phi_-2_2)", N::none, "q(Σ_2 − 240) + O(q^2)"},
      [](int n) {
        return sc(sc(get("phi_-4_2", n - 1), E(6, n - 1)) + sc(get("phi_-2_2", n - 1), E(4, n - 1)), Dl(n)) * ratio(1, 3);
      });
  add(st, {"W_16_2", 16, 2, cusp, "(1/3) Delta (E4^2 phi_-4_2 + E6 phi_-2_2)", N::none, "q(Σ_2 − 240) + O(q^2)"},
      [](int n) {
        return sc(sc(get("phi_-4_2", n - 1), E4p(2, 0, n - 1)) + sc(get("phi_-2_2", n - 1), E(6, n - 1)), Dl(n)) *
               ratio(1, 3);
      });

  // products used at index 3
  add(st, {"theta_e8^2", 8, 2, holo, "theta_e8^2", N::none, "1 + 2q Σ_2 + O(q^2)"}, [](int n) {
    JacobiQExpansion th = theta_e8(n);
    return jf_mul(th, th);
  });
  add(st, {"theta_e8^3", 12, 3, holo, "theta_e8^3", N::none, "1 + 3q Σ_2 + O(q^2)"},
      [](int n) { return jf_mul(get("theta_e8^2", n), theta_e8(n)); });
  add(st, {"A2*theta_e8", 8, 3, holo, "A2 theta_e8", N::none, "1 + q(Σ_2 + Σ_4) + O(q^2)"},
      [](int n) { return jf_mul(get("A2", n), theta_e8(n)); });
  add(st, {"B2*theta_e8", 10, 3, holo, "B2 theta_e8", N::none, "1 + q(−(3/5)Σ_2 − (3/5)Σ_4 + 24) + O(q^2)"},
      [](int n) { return jf_mul(get("B2", n), theta_e8(n)); });

  // index 3
  add(st, {"B_-2_3", -2, 3, weak, "-5 (theta B2 - (1/28) E6 theta|T_-(3)) / Delta", N::none,
           "3Σ_2 + 3Σ_4 + 5Σ_6 − 2640 + O(q)"},
      [](int n) {
        JacobiQExpansion num = get("B2*theta_e8", n + 1) -
                               sc(hecke_t_minus(theta_e8(3 * n + 3), 3, n + 1), E(6, n + 1)) * ratio(1, 28);
        return jf_div_modular(num, Dl(n + 1)) * Rational(-5);
      });
  add(st, {"phi_-4_3", -4, 3, weak, "(theta A2 - (1/28) E4 theta|T_-(3)) / Delta", N::none,
           "Σ_2 + Σ_4 − Σ_6 − 240 + O(q)"},
      [](int n) {
        JacobiQExpansion num = get("A2*theta_e8", n + 1) -
                               sc(hecke_t_minus(theta_e8(3 * n + 3), 3, n + 1), E(4, n + 1)) * ratio(1, 28);
        return jf_div_modular(num, Dl(n + 1));
      });
  add(st, {"A_0_3", 0, 3, weak, "theta phi_-4_2", N::none, "2Σ_2 − Σ_4 − 240 + O(q)"},
      [](int n) { return jf_mul(theta_e8(n), get("phi_-4_2", n)); });
  add(st, {"phi_-2_3", -2, 3, weak, "3 H(phi_-4_3)", N::none, "Σ_2 + Σ_6 − 480 + O(q)"},
      [](int n) { return heat(get("phi_-4_3", n)) * Rational(3); });
  add(st, {"phi_0_3", 0, 3, weak, "(3/8)(A_0_3 + E4 phi_-4_3 - 2 H(phi_-2_3))", N::none, "Σ_2 + O(q)"}, [](int n) {
    return (get("A_0_3", n) + sc(get("phi_-4_3", n), E(4, n)) - heat(get("phi_-2_3", n)) * Rational(2)) * ratio(3, 8);
  });
  add(st, {"phi_-8_3", -8, 3, weak, "* (E4^2 phi_-4_3 + 6 E6 phi_-2_3 - 2 E4 A_0_3 - E6 B_-2_3) / Delta",
           N::leading_orbit, "Σ_8' − 4Σ_6 + 6Σ_4 − 4Σ_2 + 240 + O(q)"},
      [](int n) {
        const int m = n + 1;
        JacobiQExpansion num = sc(get("phi_-4_3", m), E4p(2, 0, m)) + sc(get("phi_-2_3", m), E(6, m)) * Rational(6) -
                               sc(get("A_0_3", m), E(4, m)) * Rational(2) - sc(get("B_-2_3", m), E(6, m));
        return lead_normalize("phi_-8_3", jf_div_modular(num, Dl(m)), "8'");
      });
  add(st, {"phi_-6_3", -6, 3, weak, "-3 H(phi_-8_3)", N::none, "Σ_8' − 6Σ_4 + 8Σ_2 − 720 + O(q)"},
      [](int n) { return heat(get("phi_-8_3", n)) * Rational(-3); });
  add(st, {"B3", 6, 3, holo, "holomorphic subspace of weight 6, index 3", N::value_at_zero,
           "1 + q(−(7/20)Σ_6 − (27/20)Σ_4 − (9/20)Σ_2 + 12) + O(q^2)"},
      [](int n) {
        auto basis = holomorphic_subspace(6, 3, std::max(n, holomorphy_depth(3)));
        if (basis.size() != 1) throw std::logic_error("B3: holomorphic subspace is not one-dimensional");
        return basis[0];
      });
  add(st, {"U_10_3", 10, 3, cusp, "-(35/54) E6 A3 - (50/27) E4 B3 + (5/2) B2 theta", N::none,
           "q(Σ_4 − (2/3)Σ_2 − 80) + O(q^2)"},
      [](int n) {
        return sc(get("A3", n), E(6, n)) * ratio(-35, 54) - sc(get("B3", n), E(4, n)) * ratio(50, 27) +
               get("B2*theta_e8", n) * ratio(5, 2);
      });
  add(st, {"U_12_3", 12, 3, cusp, "E4 A2 theta - theta^3", N::none, "q(Σ_4 − 2Σ_2 + 240) + O(q^2)"},
      [](int n) { return sc(get("A2*theta_e8", n), E(4, n)) - get("theta_e8^3", n); });
  add(st, {"V_12_3", 12, 3, cusp, "Delta phi_0_3", N::none, "q Σ_2 + O(q^2)"},
      [](int n) { return sc(get("phi_0_3", n - 1), Dl(n)); });
  add(st, {"U_14_3", 14, 3, cusp, "Delta (E4 phi_-2_3 + E6 phi_-4_3)", N::none, "q(Σ_4 + 2Σ_2 − 720) + O(q^2)"},
      [](int n) {
        return sc(sc(get("phi_-2_3", n - 1), E(4, n - 1)) + sc(get("phi_-4_3", n - 1), E(6, n - 1)), Dl(n));
      });
  add(st, {"U_16_3", 16, 3, cusp, "Delta^2 phi_-8_3", N::none, "O(q^2)"},
      [](int n) { return sc(get("phi_-8_3", n - 2), Dl2(n)); });

  // index 4: heat cascade from the theta quotient
  add(st, {"phi_-16_4", -16, 4, weak, "* (1/Delta^2) prod theta(z_2i-1 + z_2i)^2 theta(z_2i-1 - z_2i)^2, W(E8)-averaged",
           N::leading_orbit,
           "Σ_16' − 8Σ_14' + 28Σ_12 − 56Σ_10 + 14Σ_8'' + 56Σ_8' − 56Σ_6 + 28Σ_4 − 8Σ_2 + 240 + O(q)"},
      [](int n) { return build_phi16_4(n); });
  add(st, {"phi_-14_4", -14, 4, weak, "-3 H(phi_-16_4)", N::none,
           "Σ_16' − 2Σ_14' − 14Σ_12 + 70Σ_10 − 28Σ_8'' − 112Σ_8' + 154Σ_6 − 98Σ_4 + 34Σ_2 − 1200 + O(q)"},
      [](int n) { return heat(get("phi_-16_4", n)) * Rational(-3); });
  add(st, {"phi_-12_4", -12, 4, weak, "-(2/7) H(phi_-14_4) - (1/7) E4 phi_-16_4", N::none,
           "Σ_14' − 4Σ_12 + 3Σ_10 + 2Σ_8'' + 8Σ_8' − 25Σ_6 + 24Σ_4 − 11Σ_2 + 480 + O(q)"},
      [](int n) { return heat(get("phi_-14_4", n)) * ratio(-2, 7) - sc(get("phi_-16_4", n), E(4, n)) * ratio(1, 7); });
  add(st, {"phi_-10_4", -10, 4, weak, "-(4/9) H(phi_-12_4) - (5/162)(E4 phi_-14_4 - E6 phi_-16_4)", N::none,
           "Σ_12 − 4Σ_10 + Σ_8'' + 4Σ_8' − 5Σ_4 + 4Σ_2 − 240 + O(q)"},
      [](int n) {
        return heat(get("phi_-12_4", n)) * ratio(-4, 9) -
               (sc(get("phi_-14_4", n), E(4, n)) - sc(get("phi_-16_4", n), E(6, n))) * ratio(5, 162);
      });
  add(st, {"phi_-8_4", -8, 4, weak,
           "-(3/5) H(phi_-10_4) - (1/15) E4 phi_-12_4 + (1/90) E6 phi_-14_4 - (1/90) E4^2 phi_-16_4", N::none,
           "Σ_10 − (7/10)Σ_8'' − (14/5)Σ_8' + 4Σ_6 − Σ_4 − Σ_2 + 120 + O(q)"},
      [](int n) {
        return heat(get("phi_-10_4", n)) * ratio(-3, 5) - sc(get("phi_-12_4", n), E(4, n)) * ratio(1, 15) +
               sc(get("phi_-14_4", n), E(6, n)) * ratio(1, 90) - sc(get("phi_-16_4", n), E4p(2, 0, n)) * ratio(1, 90);
      });
  add(st, {"phi_-6_4", -6, 4, weak,
           "-(1/2) E4 phi_-10_4 + (1/6) E6 phi_-12_4 - (1/36)(E4^2 phi_-14_4 - E4 E6 phi_-16_4) - 4 H(phi_-8_4)",
           N::none, "Σ_8'' + 4Σ_8' − 14Σ_6 + 12Σ_4 − 2Σ_2 − 240 + O(q)"},
      [](int n) {
        return sc(get("phi_-10_4", n), E(4, n)) * ratio(-1, 2) + sc(get("phi_-12_4", n), E(6, n)) * ratio(1, 6) -
               (sc(get("phi_-14_4", n), E4p(2, 0, n)) - sc(get("phi_-16_4", n), E4p(1, 1, n))) * ratio(1, 36) -
               heat(get("phi_-8_4", n)) * Rational(4);
      });
  add(st, {"phi_-4_4", -4, 4, weak,
           "-(10/81) E4 phi_-8_4 + (5/81) E6 phi_-10_4 + (5/1458)(E4 E6 phi_-14_4 - E4^3 phi_-16_4) "
           "- (5/243) E4^2 phi_-12_4 - (2/9) H(phi_-6_4)",
           N::none, "Σ_6 − 2Σ_4 + Σ_2 + O(q)"},
      [](int n) {
        return sc(get("phi_-8_4", n), E(4, n)) * ratio(-10, 81) + sc(get("phi_-10_4", n), E(6, n)) * ratio(5, 81) +
               (sc(get("phi_-14_4", n), E4p(1, 1, n)) - sc(get("phi_-16_4", n), E4p(3, 0, n))) * ratio(5, 1458) -
               sc(get("phi_-12_4", n), E4p(2, 0, n)) * ratio(5, 243) - heat(get("phi_-6_4", n)) * ratio(2, 9);
      });
  add(st, {"phi_-2_4", -2, 4, weak,
           "-(5/9) E6 phi_-8_4 + (5/18) E4^2 phi_-10_4 + (5/324)(E4^3 phi_-14_4 - E4^2 E6 phi_-16_4) "
           "- (5/54) E4 E6 phi_-12_4 + (1/6) E4 phi_-6_4 + 12 H(phi_-4_4)",
           N::none, "−7Σ_4 + 8Σ_2 − 240 + O(q)"},
      [](int n) {
        return sc(get("phi_-8_4", n), E(6, n)) * ratio(-5, 9) + sc(get("phi_-10_4", n), E4p(2, 0, n)) * ratio(5, 18) +
               (sc(get("phi_-14_4", n), E4p(3, 0, n)) - sc(get("phi_-16_4", n), E4p(2, 1, n))) * ratio(5, 324) -
               sc(get("phi_-12_4", n), E4p(1, 1, n)) * ratio(5, 54) + sc(get("phi_-6_4", n), E(4, n)) * ratio(1, 6) +
               heat(get("phi_-4_4", n)) * Rational(12);
      });
  add(st, {"phi_0_4", 0, 4, weak, "H(phi_-2_4)", N::none, "2Σ_2 − 120 + O(q)"},
      [](int n) { return heat(get("phi_-2_4", n)); });
  add(st, {"psi_-8_4", -8, 4, weak, "(73/72)((1/73) theta|T_-(4) - theta(tau, 2z)) / Delta", N::leading_orbit,
           "Σ_8' − Σ_8'' + O(q)"},
      [](int n) {
        JacobiQExpansion num = hecke_t_minus(theta_e8(4 * n + 4), 4, n + 1) * ratio(1, 73) - rescale_z(theta_e8(n + 1), 2);
        JacobiQExpansion f = jf_div_modular(num, Dl(n + 1)) * ratio(73, 72);
        record("psi_-8_4", ratio(73, 72));
        return f;
      });
  add(st, {"B4", 6, 4, holo, "(1/33) B2|T_-(2) + (2/55) Delta phi_-6_4", N::value_at_zero,
           "1 + q((1/15)Σ_8'' − (28/15)Σ_6 − (4/15)Σ_2 − 8) + O(q^2)"},
      [](int n) {
        return hecke_t_minus(get("B2", 2 * n), 2, n) * ratio(1, 33) + sc(get("phi_-6_4", n - 1), Dl(n)) * ratio(2, 55);
      });
  add(st, {"C_8_4", 8, 4, holo,
           "(1/54) Delta (E4^3 phi_-16_4 - E4 E6 phi_-14_4 + 6 E4^2 phi_-12_4 - 18 E6 phi_-10_4 + 36 E4 phi_-8_4)",
           N::none, "q((1/5)Σ_8'' + (4/5)Σ_8' − 4Σ_6 + 6Σ_4 − 4Σ_2 + 240) + O(q^2)"},
      [](int n) { return index4_combo(n, {3, 0}, {1, 1}, {2, 0}, {0, 1}, {1, 0}, std::nullopt) * ratio(1, 54); });
  add(st, {"U_10_4", 10, 4, cusp,
           "-(5/324) Delta (E4^2 E6 phi_-16_4 - E4^3 phi_-14_4 + 6 E4 E6 phi_-12_4 - 18 E4^2 phi_-10_4 "
           "+ 36 E6 phi_-8_4 - (54/5) E4 phi_-6_4) - * Delta^2 phi_-14_4",
           N::cancellation, "q(Σ_6 − 3Σ_4 + 3Σ_2 − 240) + O(q^2)"},
      [](int n) {
        const int m = std::max(n, 2);
        JacobiQExpansion base = index4_combo(m, {2, 1}, {3, 0}, {1, 1}, {2, 0}, {0, 1}, Mono{1, 0}) * ratio(-5, 324);
        return cancel_16("U_10_4", base, sc(get("phi_-14_4", m - 2), Dl2(m)));
      });
  add(st, {"U_12_4", 12, 4, cusp,
           "-(5/324) Delta (E4 E6^2 phi_-16_4 - E4^2 E6 phi_-14_4 + 6 E6^2 phi_-12_4 - 18 E4 E6 phi_-10_4 "
           "+ 36 E4^2 phi_-8_4 - (54/5) E6 phi_-6_4) - * Delta^2 E4 phi_-16_4",
           N::cancellation, "q(Σ_6 − 3Σ_4 + 3Σ_2 − 240) + O(q^2)"},
      [](int n) {
        const int m = std::max(n, 2);
        JacobiQExpansion base = index4_combo(m, {1, 2}, {2, 1}, {0, 2}, {1, 1}, {2, 0}, Mono{0, 1}) * ratio(-5, 324);
        return cancel_16("U_12_4", base, sc(sc(get("phi_-16_4", m - 2), E(4, m - 2)), Dl2(m)));
      });

  // index 4 holomorphic basis members not named above
  add(st, {"Delta*psi_-8_4", 4, 4, holo, "Delta psi_-8_4", N::none, "q(Σ_8' − Σ_8'') + O(q^2)"},
      [](int n) { return sc(get("psi_-8_4", n - 1), Dl(n)); });
  add(st, {"Delta*phi_-6_4", 6, 4, holo, "Delta phi_-6_4", N::none, "q(Σ_8'' + 4Σ_8' − 14Σ_6 + 12Σ_4 − 2Σ_2 − 240) + O(q^2)"},
      [](int n) { return sc(get("phi_-6_4", n - 1), Dl(n)); });
  add(st, {"Delta*phi_-4_4", 8, 4, holo, "Delta phi_-4_4", N::none, "q(Σ_6 − 2Σ_4 + Σ_2) + O(q^2)"},
      [](int n) { return sc(get("phi_-4_4", n - 1), Dl(n)); });
  add(st, {"Delta^2*phi_-16_4", 8, 4, holo, "Delta^2 phi_-16_4", N::none, "q^2(Σ_16' + ...) + O(q^3)"},
      [](int n) { return sc(get("phi_-16_4", n - 2), Dl2(n)); });
  add(st, {"Delta*phi_-2_4", 10, 4, holo, "Delta phi_-2_4", N::none, "q(−7Σ_4 + 8Σ_2 − 240) + O(q^2)"},
      [](int n) { return sc(get("phi_-2_4", n - 1), Dl(n)); });
  add(st, {"Delta^2*phi_-14_4", 10, 4, holo, "Delta^2 phi_-14_4", N::none, "q^2(Σ_16' + ...) + O(q^3)"},
      [](int n) { return sc(get("phi_-14_4", n - 2), Dl2(n)); });

  // index 4 cusp basis
  add(st, {"cusp_8_4", 8, 4, cusp, "Delta phi_-4_4 - * Delta^2 phi_-16_4", N::cancellation, "q(Σ_6 − 2Σ_4 + Σ_2) + O(q^2)"},
      [](int n) {
        const int m = std::max(n, 2);
        return cancel_16("cusp_8_4", get("Delta*phi_-4_4", m), get("Delta^2*phi_-16_4", m));
      });
  add(st, {"cusp_10_4", 10, 4, cusp, "Delta phi_-2_4 - * Delta^2 phi_-14_4", N::cancellation,
           "q(−7Σ_4 + 8Σ_2 − 240) + O(q^2)"},
      [](int n) {
        const int m = std::max(n, 2);
        return cancel_16("cusp_10_4", get("Delta*phi_-2_4", m), get("Delta^2*phi_-14_4", m));
      });
  add(st, {"cusp_12_4", 12, 4, cusp, "Delta phi_0_4 - * Delta^2 E4 phi_-16_4", N::cancellation,
           "q(2Σ_2 − 120) + O(q^2)"},
      [](int n) {
        const int m = std::max(n, 2);
        return cancel_16("cusp_12_4", sc(get("phi_0_4", m - 1), Dl(m)),
                         sc(sc(get("phi_-16_4", m - 2), E(4, m - 2)), Dl2(m)));
      });
  add(st, {"Delta^2*phi_-12_4", 12, 4, cusp, "Delta^2 phi_-12_4", N::none, "q^2(Σ_14' − 4Σ_12 + ...) + O(q^3)"},
      [](int n) { return sc(get("phi_-12_4", n - 2), Dl2(n)); });
  add(st, {"cusp_14_4", 14, 4, cusp, "Delta^2 (E4 phi_-14_4 - E6 phi_-16_4)", N::none, "O(q^2)"},
      [](int n) {
        const int m = n - 2;
        return sc(sc(get("phi_-14_4", m), E(4, m)) - sc(get("phi_-16_4", m), E(6, m)), Dl2(n));
      });
  add(st, {"Delta^2*phi_-10_4", 14, 4, cusp, "Delta^2 phi_-10_4", N::none, "q^2(Σ_12 − 4Σ_10 + ...) + O(q^3)"},
      [](int n) { return sc(get("phi_-10_4", n - 2), Dl2(n)); });
  add(st, {"Delta^2*phi_-8_4", 16, 4, cusp, "Delta^2 phi_-8_4", N::none, "q^2(Σ_10 + ...) + O(q^3)"},
      [](int n) { return sc(get("phi_-8_4", n - 2), Dl2(n)); });
  add(st, {"Delta^2*psi_-8_4", 16, 4, cusp, "Delta^2 psi_-8_4", N::none, "q^2(Σ_8' − Σ_8'') + O(q^3)"},
      [](int n) { return sc(get("psi_-8_4", n - 2), Dl2(n)); });

  add_declared(st, "B6", 6, 6, holo, "needs a trace from a congruence subgroup; declared, not constructible here");
  add_declared(st, "phi_-18_5", -18, 5, weak,
               "existence of a weak form of weight -18 and index 5 is open; declared, not constructible here");
}

inline CatalogState& catalog_state() {
  static CatalogState* st = [] {
    auto* s = new CatalogState;
    register_forms(*s);
    return s;
  }();
  return *st;
}

}  // namespace detail

/// Holomorphic basis of index 4 (ten forms) and the cusp basis (ten forms).
inline std::vector<std::string> index4_holomorphic_basis() {
  return {"A4", "Delta*psi_-8_4", "B4", "Delta*phi_-6_4", "C_8_4", "Delta*phi_-4_4", "Delta^2*phi_-16_4",
          "Delta*phi_-2_4", "Delta^2*phi_-14_4", "Delta^2*phi_-12_4"};
}

inline std::vector<std::string> index4_cusp_basis() {
  return {"cusp_8_4", "cusp_10_4", "U_10_4", "cusp_12_4", "U_12_4", "Delta^2*phi_-12_4", "cusp_14_4",
          "Delta^2*phi_-10_4", "Delta^2*phi_-8_4", "Delta^2*psi_-8_4"};
}

}  // namespace e8jac

#endif  // E8JAC_CATALOG_HPP
