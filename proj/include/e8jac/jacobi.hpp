#ifndef E8JAC_JACOBI_HPP
#define E8JAC_JACOBI_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "e8jac/e8.hpp"
#include "e8jac/invring.hpp"
#include "e8jac/qseries.hpp"
#include "e8jac/rational.hpp"

namespace e8jac {

/// W(E8)-invariant Jacobi form known through q^order: terms[n] is the
/// coefficient of q^n, an invariant finite Fourier sum in z.
class JacobiQExpansion {
 public:
  JacobiQExpansion() : weight_(0), index_(0), terms_(1) {}

  JacobiQExpansion(int weight, int index, std::vector<InvariantElement> terms)
      : weight_(weight), index_(index), terms_(std::move(terms)) {
    if (weight_ % 2 != 0) throw std::invalid_argument("Jacobi forms here have even weight");
    if (index_ < 0) throw std::invalid_argument("negative index");
    if (terms_.empty()) throw std::invalid_argument("need at least the q^0 term");
    if (index_ == 0)
      for (const auto& t : terms_)
        for (const auto& [m, c] : t.terms())
          if (!m.is_zero()) throw std::invalid_argument("index 0 forms cannot depend on z");
  }

  static JacobiQExpansion zero(int weight, int index, int order) {
    return JacobiQExpansion(weight, index, std::vector<InvariantElement>(static_cast<std::size_t>(order) + 1));
  }

  /// A modular form viewed as a Jacobi form of index 0.
  static JacobiQExpansion from_modular(const ModularQSeries& f) {
    std::vector<InvariantElement> t;
    for (const auto& c : f.coeffs()) t.push_back(InvariantElement::constant(c));
    return JacobiQExpansion(f.weight(), 0, std::move(t));
  }

  int weight() const noexcept { return weight_; }
  int index() const noexcept { return index_; }
  int order() const noexcept { return static_cast<int>(terms_.size()) - 1; }
  const std::vector<InvariantElement>& terms() const noexcept { return terms_; }
  const InvariantElement& operator[](int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("q-power beyond truncation");
    return terms_[static_cast<std::size_t>(n)];
  }

  bool is_zero() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const InvariantElement& x) { return x.is_zero(); });
  }

  /// Fourier coefficient f(n, l).
  Rational coefficient(int n, const E8Vector& l) const { return (*this)[n].coeff(dominant_reduce(l)); }

  JacobiQExpansion truncated(int order) const {
    if (order > this->order()) throw InsufficientOrderError("cannot extend a truncated form", order);
    return JacobiQExpansion(weight_, index_, std::vector<InvariantElement>(terms_.begin(), terms_.begin() + order + 1));
  }

  JacobiQExpansion& operator*=(const Rational& c) {
    for (auto& t : terms_) t *= c;
    return *this;
  }
  friend JacobiQExpansion operator*(JacobiQExpansion a, const Rational& c) { return a *= c; }
  friend JacobiQExpansion operator*(const Rational& c, JacobiQExpansion a) { return a *= c; }
  friend JacobiQExpansion operator+(const JacobiQExpansion& a, const JacobiQExpansion& b) { return combine(a, b, 1); }
  friend JacobiQExpansion operator-(const JacobiQExpansion& a, const JacobiQExpansion& b) { return combine(a, b, -1); }

  friend bool operator==(const JacobiQExpansion& a, const JacobiQExpansion& b) {
    return a.weight_ == b.weight_ && a.index_ == b.index_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const JacobiQExpansion& a, const JacobiQExpansion& b) { return !(a == b); }

 private:
  static JacobiQExpansion combine(const JacobiQExpansion& a, const JacobiQExpansion& b, int sign) {
    if (a.weight_ != b.weight_ || a.index_ != b.index_)
      throw std::invalid_argument("adding Jacobi forms of different weight or index");
    const int n = std::min(a.order(), b.order());
    std::vector<InvariantElement> t(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) t[static_cast<std::size_t>(i)] = sign > 0 ? a[i] + b[i] : a[i] - b[i];
    return JacobiQExpansion(a.weight_, a.index_, std::move(t));
  }

  int weight_;
  int index_;
  std::vector<InvariantElement> terms_;
};

/// Theta series of E8: weight 4, index 1, q^n-term = sum of orb(m) over the norm-2n shell.
inline JacobiQExpansion theta_e8(int order) {
  if (order < 0) throw std::invalid_argument("theta_e8: negative order");
  std::vector<InvariantElement> t(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n)
    for (const auto& m : dominant_weights_of_norm(2LL * n)) t[static_cast<std::size_t>(n)].add_term(m, 1);
  return JacobiQExpansion(4, 1, std::move(t));
}

/// First q-power with a nonzero term, or order()+1.
inline int valuation(const JacobiQExpansion& a) {
  for (int n = 0; n <= a.order(); ++n)
    if (!a[n].is_zero()) return n;
  return a.order() + 1;
}

/// Product; as for q-series, the result is known through
/// min(order_a + val_b, order_b + val_a).
inline JacobiQExpansion jf_mul(const JacobiQExpansion& a, const JacobiQExpansion& b) {
  const int n = std::min(a.order() + valuation(b), b.order() + valuation(a));
  std::vector<InvariantElement> t(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= std::min(n, a.order()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n && j <= b.order(); ++j)
      if (!b[j].is_zero()) t[static_cast<std::size_t>(i + j)] += inv_mul(a[i], b[j]);
  }
  return JacobiQExpansion(a.weight() + b.weight(), a.index() + b.index(), std::move(t));
}

/// f * a for a modular form f.
inline JacobiQExpansion jf_scale(const JacobiQExpansion& a, const ModularQSeries& f) {
  const int n = std::min(a.order() + f.valuation(), f.order() + valuation(a));
  std::vector<InvariantElement> t(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= std::min(n, f.order()); ++i) {
    if (sgn(f[i]) == 0) continue;
    for (int j = 0; i + j <= n && j <= a.order(); ++j) t[static_cast<std::size_t>(i + j)] += a[j] * f[i];
  }
  return JacobiQExpansion(a.weight() + f.weight(), a.index(), std::move(t));
}

/// Exact quotient a / f; the low-order terms of a must vanish.
inline JacobiQExpansion jf_div_modular(const JacobiQExpansion& a, const ModularQSeries& f) {
  const int v = f.valuation();
  if (v > f.order()) throw std::invalid_argument("jf_div_modular: divisor vanishes to its truncation");
  for (int i = 0; i < v; ++i)
    if (i > a.order() || !a[i].is_zero())
      throw NotDivisibleError("not divisible: q^" + std::to_string(i) + " term is nonzero, quotient would have a pole");
  const int n = std::min(a.order(), f.order()) - v;
  if (n < 0) throw InsufficientOrderError("jf_div_modular: dividend too short", v);
  std::vector<InvariantElement> c(static_cast<std::size_t>(n) + 1);
  const Rational inv_lead = Rational(1) / f[v];
  for (int k = 0; k <= n; ++k) {
    InvariantElement acc = a[k + v];
    for (int i = 0; i < k; ++i)
      if (sgn(f[k + v - i]) != 0) acc -= c[static_cast<std::size_t>(i)] * f[k + v - i];
    c[static_cast<std::size_t>(k)] = acc * inv_lead;
  }
  return JacobiQExpansion(a.weight() - f.weight(), a.index(), std::move(c));
}

/// H_k(phi) = H(phi) + ((4-k)/12) E_2 phi, where H multiplies f(n, l) by n - (l,l)/(2t).
inline JacobiQExpansion heat(const JacobiQExpansion& a) {
  const int t = a.index();
  if (t < 1) throw std::invalid_argument("heat operator needs index >= 1");
  std::vector<InvariantElement> out(static_cast<std::size_t>(a.order()) + 1);
  for (int n = 0; n <= a.order(); ++n)
    for (const auto& [m, c] : a[n].terms()) out[static_cast<std::size_t>(n)].add_term(m, c * (Rational(n) - ratio(m.norm(), 2L * t)));
  JacobiQExpansion h(a.weight() + 2, t, std::move(out));
  const Rational shift = ratio(4 - a.weight(), 12);
  if (sgn(shift) == 0) return h;
  return h + jf_scale(a, eisenstein(2, a.order())) * shift;
}

/// Index-raising operator T_-(s). The output is known through q^(order/s);
/// asking for more raises InsufficientOrderError carrying the needed input order.
inline JacobiQExpansion hecke_t_minus(const JacobiQExpansion& a, int s, std::optional<int> out_order = std::nullopt) {
  if (s < 1) throw std::invalid_argument("hecke_t_minus: s must be positive");
  const int n_out = out_order.value_or(a.order() / s);
  if (static_cast<long long>(s) * n_out > a.order())
    throw InsufficientOrderError("hecke_t_minus: input known through q^" + std::to_string(a.order()) +
                                     ", need q^" + std::to_string(s * n_out),
                                 s * n_out);
  std::vector<InvariantElement> out(static_cast<std::size_t>(n_out) + 1);
  for (int n = 0; n <= n_out; ++n) {
    const int g = std::gcd(n, s);
    for (int d = 1; d <= g; ++d) {
      if (g % d != 0) continue;
      const Rational dk = pow_rational(Rational(d), a.weight() - 1);
      for (const auto& [m, c] : a[n * s / (d * d)].terms()) {
        Fw x = m.fw;
        for (int& xi : x) xi *= d;
        out[static_cast<std::size_t>(n)].add_term(DominantWeight::from_fw(x), dk * c);
      }
    }
  }
  return JacobiQExpansion(a.weight(), a.index() * s, std::move(out));
}

/// phi(tau, c z): orb(m) -> orb(c m), index multiplied by c^2.
inline JacobiQExpansion rescale_z(const JacobiQExpansion& a, int c) {
  if (c < 1) throw std::invalid_argument("rescale_z: c must be positive");
  std::vector<InvariantElement> out(static_cast<std::size_t>(a.order()) + 1);
  for (int n = 0; n <= a.order(); ++n)
    for (const auto& [m, k] : a[n].terms()) {
      Fw x = m.fw;
      for (int& xi : x) xi *= c;
      out[static_cast<std::size_t>(n)].add_term(DominantWeight::from_fw(x), k);
    }
  return JacobiQExpansion(a.weight(), a.index() * c * c, std::move(out));
}

/// Restriction to z = 0.
inline ModularQSeries value_at_zero(const JacobiQExpansion& a) {
  std::vector<Rational> c;
  for (const auto& t : a.terms()) c.push_back(eval_zero(t));
  return ModularQSeries(a.weight(), std::move(c));
}

enum class FormKind { weak, holomorphic, cusp };

inline const char* to_string(FormKind k) {
  switch (k) {
    case FormKind::weak: return "weak";
    case FormKind::holomorphic: return "holomorphic";
    case FormKind::cusp: return "cusp";
  }
  return "?";
}

struct Witness {
  int n;
  DominantWeight m;
};

struct Classification {
  FormKind kind = FormKind::cusp;
  std::optional<Witness> witness;  // first (n, l) with 2nt - (l,l) < 0 (weak) or = 0 (holomorphic)
  int order = 0;                   // the verdict only covers q^0..q^order
  bool singular = false;           // every coefficient sits on 2nt = (l,l)
};

inline Classification classify(const JacobiQExpansion& a) {
  const long long t = a.index();
  if (t < 1) throw std::invalid_argument("classify needs index >= 1");
  Classification r;
  r.order = a.order();
  std::optional<std::tuple<int, long long, DominantWeight>> neg, zero;
  bool all_on_boundary = true, any = false;
  for (int n = 0; n <= a.order(); ++n)
    for (const auto& [m, c] : a[n].terms()) {
      any = true;
      const long long disc = 2LL * n * t - m.norm();
      auto key = std::make_tuple(n, m.norm(), m);
      if (disc != 0) all_on_boundary = false;
      if (disc < 0 && (!neg || key < *neg)) neg = key;
      if (disc == 0 && (!zero || key < *zero)) zero = key;
    }
  if (neg) {
    r.kind = FormKind::weak;
    r.witness = Witness{std::get<0>(*neg), std::get<2>(*neg)};
  } else if (zero) {
    r.kind = FormKind::holomorphic;
    r.witness = Witness{std::get<0>(*zero), std::get<2>(*zero)};
  }
  r.singular = any && all_on_boundary;
  return r;
}

/// For weight 0: sum over the q^0-term of f(0,l) (2t - 3 (l,l)) vanishes.
inline bool weight0_identity(const JacobiQExpansion& a) {
  if (a.weight() != 0) throw std::invalid_argument("weight0_identity applies to weight 0 only");
  Rational s = 0;
  for (const auto& [m, c] : a[0].terms())
    s += c * Rational(Integer(static_cast<unsigned long>(orbit_size(m)))) * Rational(static_cast<long>(2L * a.index() - 3 * m.norm()));
  return sgn(s) == 0;
}

/// Support points violating 2nt - (l,l) >= -min{(v,v) : v in l + tE8}.
inline std::vector<Witness> coset_bound_violations(const JacobiQExpansion& a) {
  std::vector<Witness> bad;
  const long long t = a.index();
  if (t < 1) return bad;
  for (int n = 0; n <= a.order(); ++n)
    for (const auto& [m, c] : a[n].terms())
      if (2LL * n * t - m.norm() < -coset_min_norm(m.v, t)) bad.push_back({n, m});
  return bad;
}

}  // namespace e8jac

#endif  // E8JAC_JACOBI_HPP
