#ifndef E8JAC_E8_HPP
#define E8JAC_E8_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "e8jac/rational.hpp"

namespace e8jac {

// ---------------------------------------------------------------------------
// Element budget shared by every orbit and shell enumeration.

namespace detail {
inline long long initial_budget() {
  if (const char* env = std::getenv("E8JAC_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 2'000'000;
}
inline std::atomic<long long>& budget_slot() {
  static std::atomic<long long> b{initial_budget()};
  return b;
}
}  // namespace detail

inline long long element_budget() { return detail::budget_slot().load(); }
inline void set_element_budget(long long n) {
  if (n <= 0) throw std::invalid_argument("budget must be positive");
  detail::budget_slot().store(n);
}

inline void check_budget(long long count, const std::string& what) {
  if (count > element_budget())
    throw BudgetExceededError(what + " needs " + std::to_string(count) +
                              " elements, budget is " + std::to_string(element_budget()));
}

// ---------------------------------------------------------------------------
// Lattice vectors.

/// A point of E8 stored as doubled coordinates: the true coordinate is d[i]/2.
struct E8Vector {
  std::array<int, 8> d{};

  E8Vector() = default;

  /// Validating constructor; throws unless d describes a point of E8.
  static E8Vector from_doubled(const std::array<int, 8>& d) {
    if (!is_lattice_point(d)) throw std::invalid_argument("not an E8 lattice point");
    E8Vector v;
    v.d = d;
    return v;
  }

  static bool is_lattice_point(const std::array<int, 8>& d) {
    const int parity = d[0] & 1;
    long long sum = 0;
    for (int x : d) {
      if ((x & 1) != parity) return false;
      sum += x;
    }
    return ((sum % 4) + 4) % 4 == 0;
  }

  /// (v, v); always even.
  long long norm() const {
    long long s = 0;
    for (int x : d) s += static_cast<long long>(x) * x;
    return s / 4;
  }

  bool is_zero() const {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
  }

  friend E8Vector operator+(const E8Vector& a, const E8Vector& b) {
    E8Vector r;
    for (int i = 0; i < 8; ++i) r.d[i] = a.d[i] + b.d[i];
    return r;
  }
  friend E8Vector operator-(const E8Vector& a, const E8Vector& b) {
    E8Vector r;
    for (int i = 0; i < 8; ++i) r.d[i] = a.d[i] - b.d[i];
    return r;
  }
  friend E8Vector operator-(const E8Vector& a) {
    E8Vector r;
    for (int i = 0; i < 8; ++i) r.d[i] = -a.d[i];
    return r;
  }
  friend E8Vector operator*(long long c, const E8Vector& a) {
    E8Vector r;
    for (int i = 0; i < 8; ++i) r.d[i] = static_cast<int>(c * a.d[i]);
    return r;
  }

  friend bool operator==(const E8Vector& a, const E8Vector& b) { return a.d == b.d; }
  friend bool operator!=(const E8Vector& a, const E8Vector& b) { return a.d != b.d; }
  friend bool operator<(const E8Vector& a, const E8Vector& b) { return a.d < b.d; }
};

inline long long pairing(const E8Vector& a, const E8Vector& b) {
  long long s = 0;
  for (int i = 0; i < 8; ++i) s += static_cast<long long>(a.d[i]) * b.d[i];
  return s / 4;  // exact: E8 is integral
}

using Fw = std::array<int, 8>;

namespace detail {

inline E8Vector raw(std::array<int, 8> d) {
  E8Vector v;
  v.d = d;
  return v;
}

// Bourbaki numbering: 1-3-4-5-6-7-8 is a chain and 2 hangs off 4.
inline const std::array<E8Vector, 8>& simple_roots_table() {
  static const std::array<E8Vector, 8> t = {
      raw({1, -1, -1, -1, -1, -1, -1, 1}), raw({2, 2, 0, 0, 0, 0, 0, 0}),
      raw({-2, 2, 0, 0, 0, 0, 0, 0}),      raw({0, -2, 2, 0, 0, 0, 0, 0}),
      raw({0, 0, -2, 2, 0, 0, 0, 0}),      raw({0, 0, 0, -2, 2, 0, 0, 0}),
      raw({0, 0, 0, 0, -2, 2, 0, 0}),      raw({0, 0, 0, 0, 0, -2, 2, 0})};
  return t;
}

inline const std::array<E8Vector, 8>& fundamental_weights_table() {
  static const std::array<E8Vector, 8> t = {
      raw({0, 0, 0, 0, 0, 0, 0, 4}),   raw({1, 1, 1, 1, 1, 1, 1, 5}),
      raw({-1, 1, 1, 1, 1, 1, 1, 7}),  raw({0, 0, 2, 2, 2, 2, 2, 10}),
      raw({0, 0, 0, 2, 2, 2, 2, 8}),   raw({0, 0, 0, 0, 2, 2, 2, 6}),
      raw({0, 0, 0, 0, 0, 2, 2, 4}),   raw({0, 0, 0, 0, 0, 0, 2, 2})};
  return t;
}

inline const std::array<std::array<int, 8>, 8>& cartan_table() {
  static const auto t = [] {
    std::array<std::array<int, 8>, 8> a{};
    const auto& r = simple_roots_table();
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) a[i][j] = static_cast<int>(pairing(r[i], r[j]));
    return a;
  }();
  return t;
}

inline const std::array<std::array<long long, 8>, 8>& weight_gram_table() {
  static const auto t = [] {
    std::array<std::array<long long, 8>, 8> g{};
    const auto& w = fundamental_weights_table();
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) g[i][j] = pairing(w[i], w[j]);
    return g;
  }();
  return t;
}

/// Reflection in the i-th simple root, acting on fundamental-weight coordinates.
inline void reflect_fw(Fw& x, int i) {
  const int c = x[i];
  if (c == 0) return;
  const auto& a = cartan_table();
  for (int j = 0; j < 8; ++j) x[j] -= c * a[i][j];
}

inline void reduce_fw(Fw& x) {
  for (;;) {
    int i = 0;
    while (i < 8 && x[i] >= 0) ++i;
    if (i == 8) return;
    reflect_fw(x, i);
  }
}

inline std::uint64_t pack_fw(const Fw& x) {
  std::uint64_t k = 0;
  for (int i = 0; i < 8; ++i) {
    if (x[i] < -128 || x[i] > 127) throw std::overflow_error("weight coordinates too large to pack");
    k |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(static_cast<std::int8_t>(x[i]))) << (8 * i);
  }
  return k;
}

inline Fw unpack_fw(std::uint64_t k) {
  Fw x;
  for (int i = 0; i < 8; ++i) x[i] = static_cast<std::int8_t>(static_cast<std::uint8_t>(k >> (8 * i)));
  return x;
}

}  // namespace detail

inline const std::array<E8Vector, 8>& simple_roots() { return detail::simple_roots_table(); }
inline const std::array<E8Vector, 8>& fundamental_weights() { return detail::fundamental_weights_table(); }
inline const std::array<std::array<int, 8>, 8>& cartan_matrix() { return detail::cartan_table(); }

inline constexpr std::uint64_t weyl_group_order = 696729600ULL;

/// Coordinates x_i = (alpha_i, v).
inline Fw to_fw(const E8Vector& v) {
  Fw x;
  for (int i = 0; i < 8; ++i) x[i] = static_cast<int>(pairing(simple_roots()[i], v));
  return x;
}

inline E8Vector from_fw(const Fw& x) {
  E8Vector v;
  const auto& w = fundamental_weights();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) v.d[j] += x[i] * w[i].d[j];
  return v;
}

/// Norm computed from fundamental-weight coordinates.
inline long long norm_fw(const Fw& x) {
  const auto& g = detail::weight_gram_table();
  long long s = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) s += g[i][j] * x[i] * x[j];
  return s;
}

// ---------------------------------------------------------------------------
// Dominant weights.

/// A point of the closed fundamental chamber, kept together with its
/// fundamental-weight coordinates.
struct DominantWeight {
  E8Vector v;
  Fw fw{};

  static DominantWeight from_fw(const Fw& x) {
    for (int c : x)
      if (c < 0) throw std::invalid_argument("fundamental-weight coordinates must be non-negative");
    return DominantWeight{e8jac::from_fw(x), x};
  }

  static DominantWeight zero() { return DominantWeight{}; }

  long long norm() const { return v.norm(); }
  bool is_zero() const { return v.is_zero(); }

  friend bool operator==(const DominantWeight& a, const DominantWeight& b) { return a.v == b.v; }
  friend bool operator!=(const DominantWeight& a, const DominantWeight& b) { return a.v != b.v; }
  friend bool operator<(const DominantWeight& a, const DominantWeight& b) { return a.v < b.v; }
};

/// w_{i}, 1-based as in the usual numbering.
inline DominantWeight w(int i) {
  if (i < 1 || i > 8) throw std::out_of_range("fundamental weight index is 1..8");
  Fw x{};
  x[static_cast<std::size_t>(i - 1)] = 1;
  return DominantWeight::from_fw(x);
}

inline DominantWeight dominant_reduce(const E8Vector& v) {
  Fw x = to_fw(v);
  detail::reduce_fw(x);
  return DominantWeight::from_fw(x);
}

inline DominantWeight dominant_reduce_fw(Fw x) {
  detail::reduce_fw(x);
  return DominantWeight::from_fw(x);
}

/// T(m) = (m, w_8), the height statistic bounding q^0 supports.
inline long long t_statistic(const DominantWeight& m) { return pairing(m.v, w(8).v); }

// ---------------------------------------------------------------------------
// Orbit sizes through the stabilizer, a standard parabolic subgroup.

namespace detail {

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// Order of the Weyl group of the Dynkin subdiagram on the nodes in `nodes`.
inline std::uint64_t parabolic_order(const std::vector<int>& nodes) {
  const auto& a = cartan_table();
  std::vector<bool> in(8, false), seen(8, false);
  for (int i : nodes) in[static_cast<std::size_t>(i)] = true;
  std::uint64_t order = 1;
  for (int start : nodes) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp{start};
    seen[static_cast<std::size_t>(start)] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int j = 0; j < 8; ++j)
        if (in[static_cast<std::size_t>(j)] && !seen[static_cast<std::size_t>(j)] && a[comp[k]][j] != 0 && j != comp[k]) {
          seen[static_cast<std::size_t>(j)] = true;
          comp.push_back(j);
        }
    auto degree = [&](int i) {
      int d = 0;
      for (int j : comp)
        if (j != i && a[i][j] != 0) ++d;
      return d;
    };
    const int n = static_cast<int>(comp.size());
    int center = -1;
    for (int i : comp)
      if (degree(i) == 3) center = i;
    if (center < 0) {
      order *= factorial(n + 1);  // A_n
      continue;
    }
    std::vector<int> arms;
    for (int nb : comp) {
      if (nb == center || a[center][nb] == 0) continue;
      int len = 1, prev = center, cur = nb;
      for (;;) {
        int next = -1;
        for (int j : comp)
          if (j != cur && j != prev && a[cur][j] != 0) next = j;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
      order *= (std::uint64_t{1} << (n - 1)) * factorial(n);  // D_n
    else if (arms == std::vector<int>{1, 2, 2})
      order *= 51840ULL;
    else if (arms == std::vector<int>{1, 2, 3})
      order *= 2903040ULL;
    else if (arms == std::vector<int>{1, 2, 4})
      order *= weyl_group_order;
    else
      throw std::logic_error("unexpected Dynkin component");
  }
  return order;
}

}  // namespace detail

inline std::uint64_t orbit_size(const DominantWeight& m) {
  std::vector<int> zeros;
  for (int i = 0; i < 8; ++i)
    if (m.fw[static_cast<std::size_t>(i)] == 0) zeros.push_back(i);
  return weyl_group_order / detail::parabolic_order(zeros);
}

// ---------------------------------------------------------------------------
// Orbit enumeration.

using FwPoint = std::array<std::int8_t, 8>;

namespace detail {

struct OrbitCache {
  std::mutex mu;
  std::unordered_map<std::uint64_t, std::shared_ptr<const std::vector<FwPoint>>> map;
};

inline OrbitCache& orbit_cache() {
  static OrbitCache c;
  return c;
}

inline std::vector<FwPoint> bfs_orbit(const Fw& start) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> frontier{pack_fw(start)};
  seen.insert(frontier[0]);
  std::vector<FwPoint> out;
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    Fw x = unpack_fw(frontier[k]);
    FwPoint p;
    for (int i = 0; i < 8; ++i) p[i] = static_cast<std::int8_t>(x[i]);
    out.push_back(p);
    for (int i = 0; i < 8; ++i) {
      if (x[i] == 0) continue;  // fixed by this reflection
      Fw y = x;
      reflect_fw(y, i);
      std::uint64_t key = pack_fw(y);
      if (seen.insert(key).second) frontier.push_back(key);
    }
  }
  return out;
}

}  // namespace detail

/// The orbit of m in fundamental-weight coordinates (BFS order), cached.
inline std::shared_ptr<const std::vector<FwPoint>> orbit_fw(const DominantWeight& m) {
  const std::uint64_t key = detail::pack_fw(m.fw);
  auto& cache = detail::orbit_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.map.find(key);
    if (it != cache.map.end()) return it->second;
  }
  const std::uint64_t predicted = orbit_size(m);
  check_budget(static_cast<long long>(predicted), "orbit");
  auto pts = std::make_shared<const std::vector<FwPoint>>(detail::bfs_orbit(m.fw));
  if (pts->size() != predicted) throw std::logic_error("orbit enumeration disagrees with stabilizer count");
  std::lock_guard<std::mutex> lock(cache.mu);
  return cache.map.emplace(key, std::move(pts)).first->second;
}

inline void clear_orbit_cache() {
  auto& cache = detail::orbit_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.map.clear();
}

inline Fw widen(const FwPoint& p) {
  Fw x;
  for (int i = 0; i < 8; ++i) x[i] = p[i];
  return x;
}

/// The full Weyl orbit, sorted lexicographically on doubled coordinates.
inline std::vector<E8Vector> orbit(const DominantWeight& m) {
  auto pts = orbit_fw(m);
  std::vector<E8Vector> out;
  out.reserve(pts->size());
  for (const auto& p : *pts) out.push_back(from_fw(widen(p)));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Shells.

/// Dominant weights of norm two_n, found by solving x^T G x = two_n over x >= 0
/// (G is the Gram matrix of the fundamental weights; all its entries are positive).
/// Sorted by doubled coordinates.
inline std::vector<DominantWeight> dominant_weights_of_norm(long long two_n) {
  if (two_n < 0 || two_n % 2 != 0) throw std::invalid_argument("norm must be even and non-negative");
  std::vector<DominantWeight> out;
  Fw x{};
  // Partial quadratic form only grows as coordinates are added.
  std::function<void(int, long long)> rec = [&](int i, long long partial) {
    if (i == 8) {
      if (partial == two_n) out.push_back(DominantWeight::from_fw(x));
      return;
    }
    for (int c = 0;; ++c) {
      x[static_cast<std::size_t>(i)] = c;
      long long q = norm_fw(x);
      if (q > two_n) break;
      rec(i + 1, q);
    }
    x[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

struct ShellOrbit {
  DominantWeight rep;
  std::uint64_t size;
};

/// All lattice points of norm two_n, enumerated exhaustively and grouped by
/// their dominant representative.
inline std::vector<ShellOrbit> shell(long long two_n) {
  if (two_n < 0 || two_n % 2 != 0) throw std::invalid_argument("shell: norm must be even and non-negative");
  if (two_n == 0) return {ShellOrbit{DominantWeight::zero(), 1}};
  const long long n = two_n / 2;
  long long expected = 0;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) expected += d * d * d;
  expected *= 240;
  check_budget(expected, "shell");
  const long long target = 4 * two_n;  // sum of squared doubled coordinates
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  std::array<int, 8> d{};
  for (int parity = 0; parity < 2; ++parity) {
    std::function<void(int, long long, long long)> rec = [&](int i, long long sq, long long sum) {
      if (i == 8) {
        if (sq == target && ((sum % 4) + 4) % 4 == 0) {
          Fw x = to_fw(detail::raw(d));
          detail::reduce_fw(x);
          ++counts[detail::pack_fw(x)];
        }
        return;
      }
      const long long rest = target - sq;
      int lim = 0;
      while (static_cast<long long>(lim + 1) * (lim + 1) <= rest) ++lim;
      for (int c = -lim; c <= lim; ++c) {
        if ((c & 1) != parity) continue;
        d[static_cast<std::size_t>(i)] = c;
        rec(i + 1, sq + static_cast<long long>(c) * c, sum + c);
      }
      d[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, 0, 0);
  }
  std::vector<ShellOrbit> out;
  for (const auto& [k, c] : counts) out.push_back({DominantWeight::from_fw(detail::unpack_fw(k)), c});
  std::sort(out.begin(), out.end(), [](const ShellOrbit& a, const ShellOrbit& b) { return a.rep < b.rep; });
  return out;
}

// ---------------------------------------------------------------------------
// Coset minima.

namespace detail {

// min over k in Z^8 with sum(k) even of sum (c_i + 2 t k_i)^2.
inline long long even_sum_closest(const std::array<long long, 8>& c, long long t) {
  const long long step = 2 * t;
  long long total = 0;
  long long parity = 0;
  long long best_fix = std::numeric_limits<long long>::max();
  for (int i = 0; i < 8; ++i) {
    // candidate k near -c/step
    long long k0 = -c[i] / step;
    long long best = std::numeric_limits<long long>::max(), bestk = 0;
    for (long long k = k0 - 2; k <= k0 + 2; ++k) {
      long long r = c[i] + step * k;
      if (r * r < best) {
        best = r * r;
        bestk = k;
      }
    }
    long long alt = std::numeric_limits<long long>::max();
    for (long long k : {bestk - 1, bestk + 1}) {
      long long r = c[i] + step * k;
      alt = std::min(alt, r * r);
    }
    total += best;
    parity += bestk;
    best_fix = std::min(best_fix, alt - best);
  }
  if (((parity % 2) + 2) % 2 != 0) total += best_fix;
  return total;
}

}  // namespace detail

/// min{(v,v) : v in l + t E8}, by closest-vector decoding against D8 and its
/// half-integral coset.
inline long long coset_min_norm(const E8Vector& l, long long t) {
  if (t < 1) throw std::invalid_argument("coset_min_norm: t must be positive");
  std::array<long long, 8> c, h;
  for (int i = 0; i < 8; ++i) {
    c[i] = l.d[i];
    h[i] = l.d[i] + t;  // translate by t * (1/2,...,1/2)
  }
  long long best = std::min(detail::even_sum_closest(c, t), detail::even_sum_closest(h, t));
  return best / 4;
}

/// Maximum of coset_min_norm over all t^8 classes of E8 / tE8.
inline long long max_coset_min_norm(long long t) {
  if (t < 1) throw std::invalid_argument("max_coset_min_norm: t must be positive");
  const auto& roots = simple_roots();
  std::array<long long, 8> digits{};
  E8Vector l;
  long long best = 0;
  for (;;) {
    best = std::max(best, coset_min_norm(l, t));
    int i = 0;
    for (; i < 8; ++i) {
      if (++digits[i] < t) {
        l = l + roots[i];
        break;
      }
      l = l - static_cast<long long>(t - 1) * roots[i];
      digits[i] = 0;
    }
    if (i == 8) break;
  }
  return best;
}

/// max (m, l) over the norm-two_n shell. The maximum over an orbit is reached
/// at its dominant member, so only dominant weights of that norm are scanned.
inline long long max_pairing(const DominantWeight& m, long long two_n) {
  auto reps = dominant_weights_of_norm(two_n);
  if (reps.empty()) throw std::invalid_argument("max_pairing: empty shell");
  long long best = std::numeric_limits<long long>::min();
  for (const auto& r : reps) best = std::max(best, pairing(m.v, r.v));
  return best;
}

}  // namespace e8jac

#endif  // E8JAC_E8_HPP
