#pragma once

#include "partmat/bigint.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace partmat {

// Auxiliary variables of a truncated series, besides the grading variable t.
enum class Var { x, y, z, mu1, mu2, mu3, nu, omega };

inline constexpr int kAuxVars = 8;

inline const char* var_name(Var v) {
  static constexpr const char* names[] = {"x", "y", "z", "mu1", "mu2", "mu3", "nu", "omega"};
  return names[static_cast<int>(v)];
}

inline std::optional<Var> parse_var(const std::string& s) {
  for (int i = 0; i < kAuxVars; ++i)
    if (s == var_name(static_cast<Var>(i))) return static_cast<Var>(i);
  return std::nullopt;
}

// Exponent of t first, then the auxiliary exponents; ordering is by t and
// then lexicographic in (x, y, z, mu1, ...).
using Monomial = std::array<int, kAuxVars + 1>;

/// Multivariate series truncated at grade T in t. Terms of higher grade are
/// dropped by every operation; zero coefficients are never stored.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  }

  static TruncatedSeries constant(int order, const BigInt& c) {
    TruncatedSeries s(order);
    s.add_term(Monomial{}, c);
    return s;
  }
  static TruncatedSeries t(int order, int power = 1) {
    TruncatedSeries s(order);
    Monomial m{};
    m[0] = power;
    s.add_term(m, 1);
    return s;
  }
  static TruncatedSeries var(int order, Var v, int power = 1) {
    TruncatedSeries s(order);
    Monomial m{};
    m[1 + static_cast<int>(v)] = power;
    s.add_term(m, 1);
    return s;
  }

  int order() const noexcept { return order_; }
  const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Monomial& m, const BigInt& c) {
    if (m[0] < 0) throw std::invalid_argument("negative power of t");
    if (m[0] > order_ || c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Terms of t-grade exactly k.
  TruncatedSeries grade(int k) const {
    TruncatedSeries s(order_);
    for (const auto& [m, c] : terms_)
      if (m[0] == k) s.terms_.emplace(m, c);
    return s;
  }

  /// Smallest t-exponent present; nullopt for the zero series.
  std::optional<int> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first[0];
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  TruncatedSeries operator-() const {
    TruncatedSeries s(order_);
    for (const auto& [m, c] : terms_) s.terms_.emplace(m, -c);
    return s;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    a.order_ = std::min(a.order_, b.order_);
    a.truncate();
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    a.order_ = std::min(a.order_, b.order_);
    a.truncate();
    return a -= b;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order_, b.order_));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        if (ma[0] + mb[0] > s.order_) break;
        Monomial m;
        for (int i = 0; i <= kAuxVars; ++i) m[i] = ma[i] + mb[i];
        s.add_term(m, ca * cb);
      }
    return s;
  }
  friend TruncatedSeries operator*(const BigInt& k, const TruncatedSeries& a) {
    TruncatedSeries s(a.order_);
    for (const auto& [m, c] : a.terms_) s.add_term(m, k * c);
    return s;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Replaces auxiliary variables by series; variables without an entry stay.
  TruncatedSeries substitute(const std::map<Var, TruncatedSeries>& values) const {
    TruncatedSeries out(order_);
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      TruncatedSeries term = constant(order_, c);
      for (const auto& [v, s] : values) {
        const int i = 1 + static_cast<int>(v);
        for (int k = 0; k < m[i]; ++k) term = term * s;
        rest[i] = 0;
      }
      TruncatedSeries mono(order_);
      mono.add_term(rest, 1);
      out += term * mono;
    }
    return out;
  }

  /// Sets auxiliary variables to integers.
  TruncatedSeries specialize(const std::map<Var, BigInt>& values) const {
    std::map<Var, TruncatedSeries> s;
    for (const auto& [v, c] : values) s.emplace(v, constant(order_, c));
    return substitute(s);
  }

 private:
  void truncate() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->first[0] > order_ ? terms_.erase(it) : std::next(it);
  }

  int order_;
  std::map<Monomial, BigInt> terms_;
};

namespace detail {

// Grade-0 part as an integer; throws unless it is a plain constant.
inline BigInt unit_constant(const TruncatedSeries& s, const char* what) {
  const TruncatedSeries g = s.grade(0);
  if (g.terms().size() == 1 && g.terms().begin()->first == Monomial{}) return g.terms().begin()->second;
  if (g.is_zero()) return 0;
  throw std::domain_error(std::string(what) + ": grade-0 part is not a constant");
}

}  // namespace detail

/// 1/s by Newton iteration r <- r(2 - s r); the grade-0 part must be +1 or -1.
inline TruncatedSeries reciprocal(const TruncatedSeries& s) {
  const BigInt c0 = detail::unit_constant(s, "reciprocal");
  if (c0 != 1 && c0 != -1) throw std::domain_error("reciprocal: constant term is not a unit");
  const TruncatedSeries two = TruncatedSeries::constant(s.order(), 2);
  TruncatedSeries r = TruncatedSeries::constant(s.order(), c0);
  for (int precision = 1; precision <= s.order(); precision *= 2) r = r * (two - s * r);
  return r;
}

/// Square root with constant term 1, solved grade by grade:
/// h_k = (s_k - sum_{0<i<k} h_i h_{k-i}) / 2, with exact division checked.
inline TruncatedSeries sqrt_series(const TruncatedSeries& s) {
  if (detail::unit_constant(s, "sqrt_series") != 1)
    throw std::domain_error("sqrt_series: constant term must be 1");
  if (s.grade(0).terms().size() != 1) throw std::domain_error("sqrt_series: grade-0 part must be 1");
  const int T = s.order();
  std::vector<TruncatedSeries> h(T + 1, TruncatedSeries(T));
  h[0] = TruncatedSeries::constant(T, 1);
  for (int k = 1; k <= T; ++k) {
    TruncatedSeries rhs = s.grade(k);
    for (int i = 1; i < k; ++i) rhs -= h[i] * h[k - i];
    TruncatedSeries hk(T);
    for (const auto& [m, c] : rhs.terms()) {
      if (c % 2 != 0) throw std::domain_error("sqrt_series: coefficient not divisible by 2");
      hk.add_term(m, c / 2);
    }
    h[k] = std::move(hk);
  }
  TruncatedSeries out(T);
  for (const auto& part : h) out += part;
  return out;
}

/// Human-readable grade-k coefficient, e.g. "2x + 2x^2 + x^3".
inline std::string grade_to_string(const TruncatedSeries& s, int k) {
  std::string out;
  const TruncatedSeries g = s.grade(k);
  for (const auto& [m, c0] : g.terms()) {
    BigInt c = c0;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (c < 0) c = -c;
    std::string mono;
    for (int i = 1; i <= kAuxVars; ++i) {
      if (m[i] == 0) continue;
      mono += var_name(static_cast<Var>(i - 1));
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (c != 1 || mono.empty()) out += to_decimal(c);
    out += mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace partmat
