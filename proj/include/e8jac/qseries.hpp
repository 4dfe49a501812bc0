#ifndef E8JAC_QSERIES_HPP
#define E8JAC_QSERIES_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "e8jac/rational.hpp"

namespace e8jac {

/// Truncated q-expansion of a level-1 (quasi-)modular form: coefficients of
/// q^0..q^order are known exactly, nothing beyond.
class ModularQSeries {
 public:
  ModularQSeries() : weight_(0), coeffs_(1, Rational(0)) {}

  ModularQSeries(int weight, std::vector<Rational> coeffs)
      : weight_(weight), coeffs_(std::move(coeffs)) {
    if (weight_ % 2 != 0) throw std::invalid_argument("modular series must have even weight");
    if (coeffs_.empty()) throw std::invalid_argument("modular series needs at least q^0");
  }

  static ModularQSeries constant(const Rational& c, int order) {
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1, Rational(0));
    v[0] = c;
    return ModularQSeries(0, std::move(v));
  }

  int weight() const noexcept { return weight_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("q-power beyond truncation");
    return coeffs_[static_cast<std::size_t>(n)];
  }

  /// First index with a nonzero coefficient, or order()+1 if none is known.
  int valuation() const noexcept {
    for (int n = 0; n <= order(); ++n)
      if (sgn(coeffs_[static_cast<std::size_t>(n)]) != 0) return n;
    return order() + 1;
  }

  bool is_zero() const noexcept { return valuation() > order(); }

  ModularQSeries truncated(int order) const {
    if (order > this->order()) throw std::out_of_range("cannot extend a truncated series");
    return ModularQSeries(weight_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  ModularQSeries& operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  friend ModularQSeries operator*(ModularQSeries a, const Rational& c) { return a *= c; }
  friend ModularQSeries operator*(const Rational& c, ModularQSeries a) { return a *= c; }

  friend ModularQSeries operator+(const ModularQSeries& a, const ModularQSeries& b) {
    return combine(a, b, 1);
  }
  friend ModularQSeries operator-(const ModularQSeries& a, const ModularQSeries& b) {
    return combine(a, b, -1);
  }

  friend bool operator==(const ModularQSeries& a, const ModularQSeries& b) {
    return a.weight_ == b.weight_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static ModularQSeries combine(const ModularQSeries& a, const ModularQSeries& b, int sign) {
    if (a.weight_ != b.weight_) throw std::invalid_argument("adding series of different weights");
    int n = std::min(a.order(), b.order());
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
      v[static_cast<std::size_t>(i)] = sign > 0 ? Rational(a[i] + b[i]) : Rational(a[i] - b[i]);
    return ModularQSeries(a.weight_, std::move(v));
  }

  int weight_;
  std::vector<Rational> coeffs_;
};

namespace detail {

inline Rational bernoulli(int k) {
  // B_0..B_k by the recurrence sum_{j<=m} C(m+1, j) B_j = 0.
  std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
  b[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += Rational(binom) * b[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return b[static_cast<std::size_t>(k)];
}

inline Integer divisor_power_sum(long n, unsigned long power) {
  Integer s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), power);
    s += t;
    long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e), power);
      s += t;
    }
  }
  return s;
}

}  // namespace detail

/// sigma_p(n) = sum of d^p over the divisors d of n.
inline Integer sigma(long n, unsigned long p) { return detail::divisor_power_sum(n, p); }

/// Weight-k Eisenstein series normalized to constant term 1.
/// E_2 is included (quasi-modular); it is only consumed by the heat operator.
inline ModularQSeries eisenstein(int k, int order) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("eisenstein: weight must be even and >= 2");
  if (order < 0) throw std::invalid_argument("eisenstein: negative order");
  Rational factor = Rational(-2 * k) / detail::bernoulli(k);
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int n = 1; n <= order; ++n)
    c[static_cast<std::size_t>(n)] = factor * Rational(sigma(n, static_cast<unsigned long>(k - 1)));
  return ModularQSeries(k, std::move(c));
}

/// Delta = eta^24 = q prod (1-q^n)^24, built from Euler's pentagonal series.
inline ModularQSeries delta(int order) {
  if (order < 0) throw std::invalid_argument("delta: negative order");
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
  if (order == 0) return ModularQSeries(12, std::move(out));
  const int m = order - 1;  // need prod(1-q^n)^24 through q^m
  std::vector<Integer> euler(static_cast<std::size_t>(m) + 1, Integer(0));
  for (long k = 0;; ++k) {
    bool any = false;
    for (long s : {k, -k}) {
      long e = s * (3 * s - 1) / 2;
      if (e <= m) {
        any = true;
        euler[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
      }
      if (k == 0) break;
    }
    if (!any && k > 0) break;
  }
  std::vector<Integer> power(static_cast<std::size_t>(m) + 1, Integer(0));
  power[0] = 1;
  for (int rep = 0; rep < 24; ++rep) {
    std::vector<Integer> next(static_cast<std::size_t>(m) + 1, Integer(0));
    for (int i = 0; i <= m; ++i) {
      if (power[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; i + j <= m; ++j)
        if (euler[static_cast<std::size_t>(j)] != 0)
          next[static_cast<std::size_t>(i + j)] += power[static_cast<std::size_t>(i)] * euler[static_cast<std::size_t>(j)];
    }
    power = std::move(next);
  }
  for (int n = 1; n <= order; ++n) out[static_cast<std::size_t>(n)] = Rational(power[static_cast<std::size_t>(n - 1)]);
  return ModularQSeries(12, std::move(out));
}

/// Cauchy product; weights add. A factor vanishing to order v extends the
/// reliable range of the other by v, so the result is known through
/// min(order_a + val_b, order_b + val_a).
inline ModularQSeries series_mul(const ModularQSeries& a, const ModularQSeries& b) {
  int n = std::min(a.order() + b.valuation(), b.order() + a.valuation());
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= std::min(n, a.order()); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= n && j <= b.order(); ++j)
      if (sgn(b[j]) != 0) c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return ModularQSeries(a.weight() + b.weight(), std::move(c));
}

/// Exact quotient a/b. The result is known through q^(min order - val(b)).
inline ModularQSeries series_div(const ModularQSeries& a, const ModularQSeries& b) {
  const int v = b.valuation();
  if (v > b.order()) throw std::invalid_argument("series_div: divisor is zero to its truncation");
  for (int i = 0; i < v; ++i)
    if (i > a.order() || sgn(a[i]) != 0)
      throw NotDivisibleError("not divisible: would produce a pole at q^" + std::to_string(i - v));
  const int n = std::min(a.order(), b.order()) - v;
  if (n < 0) throw InsufficientOrderError("series_div: dividend too short", v);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  const Rational& lead = b[v];
  for (int k = 0; k <= n; ++k) {
    Rational acc = a[k + v];
    for (int i = 0; i < k; ++i) acc -= c[static_cast<std::size_t>(i)] * b[k + v - i];
    c[static_cast<std::size_t>(k)] = acc / lead;
  }
  return ModularQSeries(a.weight() - b.weight(), std::move(c));
}

inline ModularQSeries series_pow(const ModularQSeries& a, int e, int order) {
  ModularQSeries r = ModularQSeries::constant(1, order);
  for (int i = 0; i < e; ++i) r = series_mul(r, a);
  return r;
}

/// dim M_k(SL2(Z)).
inline int dim_modular(int k) {
  if (k < 0 || k % 2 != 0) return 0;
  if (k % 12 == 2) return k / 12;
  return k / 12 + 1;
}

/// Exponent pairs (a, b) with 4a + 6b = k, ordered by decreasing a.
inline std::vector<std::pair<int, int>> eisenstein_monomials(int k) {
  std::vector<std::pair<int, int>> out;
  if (k < 0 || k % 2 != 0) return out;
  for (int a = k / 4; a >= 0; --a) {
    int rest = k - 4 * a;
    if (rest % 6 == 0) out.emplace_back(a, rest / 6);
  }
  return out;
}

/// E4^a E6^b to the given order.
inline ModularQSeries eisenstein_monomial(int a, int b, int order) {
  ModularQSeries e4 = eisenstein(4, order), e6 = eisenstein(6, order);
  return series_mul(series_pow(e4, a, order), series_pow(e6, b, order));
}

}  // namespace e8jac

#endif  // E8JAC_QSERIES_HPP
