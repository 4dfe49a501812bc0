#ifndef E8JAC_INVRING_HPP
#define E8JAC_INVRING_HPP

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "e8jac/e8.hpp"
#include "e8jac/rational.hpp"

namespace e8jac {

/// Finite W(E8)-invariant Fourier sum: sum of c(m) orb(m) over dominant m,
/// where orb(m) is the plain (unnormalized) orbit sum.
class InvariantElement {
 public:
  using Map = std::map<DominantWeight, Rational>;

  InvariantElement() = default;

  static InvariantElement orb(const DominantWeight& m, const Rational& c = 1) {
    InvariantElement x;
    x.add_term(m, c);
    return x;
  }
  static InvariantElement constant(const Rational& c) { return orb(DominantWeight::zero(), c); }

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coeff(const DominantWeight& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const DominantWeight& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  InvariantElement& operator+=(const InvariantElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  InvariantElement& operator-=(const InvariantElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  InvariantElement& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend InvariantElement operator+(InvariantElement a, const InvariantElement& b) { return a += b; }
  friend InvariantElement operator-(InvariantElement a, const InvariantElement& b) { return a -= b; }
  friend InvariantElement operator*(InvariantElement a, const Rational& s) { return a *= s; }
  friend InvariantElement operator*(const Rational& s, InvariantElement a) { return a *= s; }
  friend bool operator==(const InvariantElement& a, const InvariantElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const InvariantElement& a, const InvariantElement& b) { return !(a == b); }

 private:
  Map terms_;
};

inline InvariantElement inv_add(const InvariantElement& a, const InvariantElement& b) { return a + b; }
inline InvariantElement inv_scale(const InvariantElement& a, const Rational& s) { return a * s; }

// ---------------------------------------------------------------------------
// Products of orbit sums.

namespace detail {

struct ProductCache {
  std::mutex mu;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::shared_ptr<const InvariantElement>> map;
};

inline ProductCache& product_cache() {
  static ProductCache c;
  return c;
}

// orb(moving) * orb(fixed): walk the orbit of `moving`, bin a + fixed by its
// dominant representative, then rescale by |orb(fixed)| / |orb(m)|.
inline InvariantElement orbit_product_uncached(const DominantWeight& moving, const DominantWeight& fixed) {
  auto pts = orbit_fw(moving);
  std::unordered_map<std::uint64_t, long long> counts;
  for (const auto& p : *pts) {
    Fw x;
    for (int i = 0; i < 8; ++i) x[i] = p[i] + fixed.fw[i];
    reduce_fw(x);
    ++counts[pack_fw(x)];
  }
  const Integer fixed_size = static_cast<unsigned long>(orbit_size(fixed));
  InvariantElement out;
  for (const auto& [k, u] : counts) {
    DominantWeight m = DominantWeight::from_fw(unpack_fw(k));
    out.add_term(m, ratio(fixed_size * Integer(static_cast<long>(u)), Integer(static_cast<unsigned long>(orbit_size(m)))));
  }
  return out;
}

}  // namespace detail

/// orb(a) * orb(b) decomposed into orbit sums (memoized).
inline std::shared_ptr<const InvariantElement> orbit_product(const DominantWeight& a, const DominantWeight& b) {
  const bool a_small = orbit_size(a) < orbit_size(b) || (orbit_size(a) == orbit_size(b) && !(b < a));
  const DominantWeight& moving = a_small ? a : b;
  const DominantWeight& fixed = a_small ? b : a;
  const auto key = std::make_pair(detail::pack_fw(moving.fw), detail::pack_fw(fixed.fw));
  auto& cache = detail::product_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.map.find(key);
    if (it != cache.map.end()) return it->second;
  }
  auto value = std::make_shared<const InvariantElement>(detail::orbit_product_uncached(moving, fixed));
  std::lock_guard<std::mutex> lock(cache.mu);
  return cache.map.emplace(key, std::move(value)).first->second;
}

inline InvariantElement inv_mul(const InvariantElement& x, const InvariantElement& y) {
  InvariantElement out;
  for (const auto& [m1, c1] : x.terms()) {
    for (const auto& [m2, c2] : y.terms()) {
      if (m1.is_zero() || m2.is_zero()) {
        out.add_term(m1.is_zero() ? m2 : m1, c1 * c2);
        continue;
      }
      const Rational c = c1 * c2;
      for (const auto& [m, u] : orbit_product(m1, m2)->terms()) out.add_term(m, c * u);
    }
  }
  return out;
}

/// Value at z = 0.
inline Rational eval_zero(const InvariantElement& x) {
  Rational s = 0;
  for (const auto& [m, c] : x.terms()) s += c * Rational(Integer(static_cast<unsigned long>(orbit_size(m))));
  return s;
}

struct SupportCheck {
  bool ok = true;
  std::vector<DominantWeight> offending;
};

/// Every support point m must satisfy T(m) = (m, w_8) <= t.
inline SupportCheck t_support_check(const InvariantElement& x, long long t) {
  SupportCheck r;
  for (const auto& [m, c] : x.terms())
    if (t_statistic(m) > t) {
      r.ok = false;
      r.offending.push_back(m);
    }
  return r;
}

// ---------------------------------------------------------------------------
// Pull-back to one variable.

/// Laurent polynomial in zeta with rational coefficients.
class LaurentPoly {
 public:
  using Map = std::map<long long, Rational>;

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coeff(long long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(long long e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  long long max_exponent() const {
    if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
  }

  bool is_palindromic() const {
    for (const auto& [e, c] : terms_)
      if (coeff(-e) != c) return false;
    return true;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

/// Substitutes z -> z v: each orbit element a contributes zeta^{(a, v)}.
/// Walks whichever of orb(m), orb(v) is smaller, using
/// #{a in orb(m) : (a,v)=e} |orb(v)| = |orb(m)| #{b in orb(v) : (m,b)=e}.
inline LaurentPoly pullback(const InvariantElement& x, const E8Vector& v) {
  LaurentPoly out;
  const DominantWeight vdom = dominant_reduce(v);
  const std::uint64_t vsize = orbit_size(vdom);
  std::array<long long, 8> pv;
  for (int i = 0; i < 8; ++i) pv[i] = pairing(fundamental_weights()[i], v);
  for (const auto& [m, c] : x.terms()) {
    const std::uint64_t msize = orbit_size(m);
    std::map<long long, long long> counts;
    if (msize <= vsize) {
      for (const auto& p : *orbit_fw(m)) {
        long long e = 0;
        for (int i = 0; i < 8; ++i) e += p[i] * pv[i];
        ++counts[e];
      }
      for (const auto& [e, n] : counts) out.add_term(e, c * Rational(Integer(static_cast<long>(n))));
    } else {
      std::array<long long, 8> pm;
      for (int i = 0; i < 8; ++i) pm[i] = pairing(fundamental_weights()[i], m.v);
      for (const auto& p : *orbit_fw(vdom)) {
        long long e = 0;
        for (int i = 0; i < 8; ++i) e += p[i] * pm[i];
        ++counts[e];
      }
      const Rational scale = ratio(Integer(static_cast<unsigned long>(msize)), Integer(static_cast<unsigned long>(vsize)));
      for (const auto& [e, n] : counts) out.add_term(e, c * scale * Rational(Integer(static_cast<long>(n))));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normalized orbit sums: Sigma_m = (240 / |orb(m)|) orb(m).

struct SigmaEntry {
  std::string label;  // e.g. "8''"
  Fw fw;
};

inline const std::vector<SigmaEntry>& sigma_dictionary() {
  static const std::vector<SigmaEntry> d = {
      {"2", {0, 0, 0, 0, 0, 0, 0, 1}},    {"4", {1, 0, 0, 0, 0, 0, 0, 0}},
      {"6", {0, 0, 0, 0, 0, 0, 1, 0}},    {"8'", {0, 1, 0, 0, 0, 0, 0, 0}},
      {"8''", {0, 0, 0, 0, 0, 0, 0, 2}},  {"10", {1, 0, 0, 0, 0, 0, 0, 1}},
      {"12", {0, 0, 0, 0, 0, 1, 0, 0}},   {"14'", {0, 0, 1, 0, 0, 0, 0, 0}},
      {"14''", {0, 0, 0, 0, 0, 0, 1, 1}}, {"16'", {2, 0, 0, 0, 0, 0, 0, 0}},
      {"16''", {0, 1, 0, 0, 0, 0, 0, 1}}, {"18'", {1, 0, 0, 0, 0, 0, 1, 0}},
      {"18''", {0, 0, 0, 0, 0, 0, 0, 3}}, {"20'", {0, 0, 0, 0, 1, 0, 0, 0}},
      {"20''", {1, 0, 0, 0, 0, 0, 0, 2}}, {"22'", {1, 1, 0, 0, 0, 0, 0, 0}},
      {"22''", {0, 0, 0, 0, 0, 1, 0, 1}}, {"24'", {0, 0, 0, 0, 0, 0, 2, 0}},
      {"24''", {0, 0, 1, 0, 0, 0, 0, 1}}, {"26'", {2, 0, 0, 0, 0, 0, 0, 1}},
      {"26''", {0, 1, 0, 0, 0, 0, 1, 0}}, {"28'", {1, 0, 0, 0, 0, 1, 0, 0}},
      {"30'", {0, 0, 0, 1, 0, 0, 0, 0}},  {"32'", {1, 0, 1, 0, 0, 0, 0, 0}},
      {"32''", {0, 2, 0, 0, 0, 0, 0, 0}}, {"36'", {3, 0, 0, 0, 0, 0, 0, 0}}};
  return d;
}

/// Dictionary label of m ("8''"), or its coordinates in brackets if unnamed.
inline std::string sigma_label(const DominantWeight& m) {
  for (const auto& e : sigma_dictionary())
    if (e.fw == m.fw) return e.label;
  std::string s = "[";
  for (int i = 0; i < 8; ++i) s += (i ? "," : "") + std::to_string(m.fw[i]);
  return s + "]";
}

inline DominantWeight sigma_weight(std::string_view label) {
  for (const auto& e : sigma_dictionary())
    if (e.label == label) return DominantWeight::from_fw(e.fw);
  if (label.size() >= 2 && label.front() == '[' && label.back() == ']') {
    Fw x{};
    std::stringstream ss{std::string(label.substr(1, label.size() - 2))};
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
      if (i >= 8) throw std::invalid_argument("too many coordinates in " + std::string(label));
      x[static_cast<std::size_t>(i++)] = std::stoi(part);
    }
    if (i != 8) throw std::invalid_argument("need 8 coordinates in " + std::string(label));
    return DominantWeight::from_fw(x);
  }
  throw std::invalid_argument("unknown orbit label " + std::string(label));
}

struct DisplayTerm {
  std::string label;  // empty for the constant term
  Rational coeff;
  friend bool operator==(const DisplayTerm& a, const DisplayTerm& b) {
    return a.label == b.label && a.coeff == b.coeff;
  }
};

/// Normalized-orbit form: nonconstant terms by increasing norm (primed
/// before double-primed), then the constant.
inline std::vector<DisplayTerm> to_display(const InvariantElement& x) {
  std::vector<std::pair<std::pair<long long, std::string>, DisplayTerm>> keyed;
  std::optional<Rational> constant;
  for (const auto& [m, c] : x.terms()) {
    if (m.is_zero()) {
      constant = c;
      continue;
    }
    Rational shown = c * ratio(Integer(static_cast<unsigned long>(orbit_size(m))), Integer(240));
    std::string label = sigma_label(m);
    keyed.push_back({{m.norm(), label}, DisplayTerm{label, shown}});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first < b.first.first;
    if (a.first.second.size() != b.first.second.size()) return a.first.second.size() < b.first.second.size();
    return a.first.second < b.first.second;
  });
  std::vector<DisplayTerm> out;
  for (auto& k : keyed) out.push_back(std::move(k.second));
  if (constant) out.push_back(DisplayTerm{"", *constant});
  return out;
}

inline InvariantElement from_display(const std::vector<DisplayTerm>& terms) {
  InvariantElement x;
  for (const auto& t : terms) {
    if (t.label.empty()) {
      x.add_term(DominantWeight::zero(), t.coeff);
      continue;
    }
    DominantWeight m = sigma_weight(t.label);
    x.add_term(m, t.coeff * ratio(Integer(240), Integer(static_cast<unsigned long>(orbit_size(m)))));
  }
  return x;
}

inline constexpr std::string_view kSigma = "Σ";
inline constexpr std::string_view kMinus = "−";

/// e.g. "2Σ_2 − Σ_4 − 240".
inline std::string display_text(const InvariantElement& x) {
  auto terms = to_display(x);
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms) {
    const bool neg = sgn(t.coeff) < 0;
    Rational mag = abs(t.coeff);
    if (first)
      s += neg ? std::string(kMinus) : "";
    else
      s += neg ? " " + std::string(kMinus) + " " : " + ";
    first = false;
    if (t.label.empty()) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")";
    s += std::string(kSigma) + "_" + t.label;
  }
  return s;
}

/// Inverse of display_text. Also accepts ASCII '-' and 'S' for the sigma sign.
inline InvariantElement parse_display(std::string_view text) {
  std::vector<DisplayTerm> terms;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto starts = [&](std::string_view p) { return text.substr(i, p.size()) == p; };
  bool first = true;
  for (;;) {
    skip_space();
    if (i >= text.size()) break;
    int sign = 1;
    if (starts(kMinus)) {
      sign = -1;
      i += kMinus.size();
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
    } else if (text[i] == '+') {
      ++i;
    } else if (!first) {
      throw std::invalid_argument("expected + or - in display text");
    }
    first = false;
    skip_space();
    Rational coeff = 1;
    bool have_coeff = false;
    if (i < text.size() && text[i] == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) throw std::invalid_argument("unbalanced parenthesis");
      coeff = parse_rational(text.substr(i + 1, close - i - 1));
      i = close + 1;
      have_coeff = true;
    } else {
      std::size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
      if (j > i) {
        coeff = parse_rational(text.substr(i, j - i));
        i = j;
        have_coeff = true;
      }
    }
    skip_space();
    std::string label;
    if (starts(kSigma) || (i < text.size() && text[i] == 'S')) {
      i += starts(kSigma) ? kSigma.size() : 1;
      if (i < text.size() && text[i] == '_') ++i;
      std::size_t j = i;
      if (j < text.size() && text[j] == '[') {
        j = text.find(']', j);
        if (j == std::string_view::npos) throw std::invalid_argument("unbalanced bracket");
        ++j;
      } else {
        while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '\'')) ++j;
      }
      label = std::string(text.substr(i, j - i));
      if (label.empty()) throw std::invalid_argument("missing orbit label");
      i = j;
    } else if (!have_coeff) {
      throw std::invalid_argument("empty term in display text");
    }
    terms.push_back({label, sign * coeff});
  }
  return from_display(terms);
}

inline std::ostream& operator<<(std::ostream& os, const InvariantElement& x) { return os << display_text(x); }

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    os << (first ? "" : " + ") << "(" << c.get_str() << ")z^" << e;
    first = false;
  }
  return first ? os << "0" : os;
}

}  // namespace e8jac

#endif  // E8JAC_INVRING_HPP
