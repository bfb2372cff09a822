#pragma once

#include "partmat/bigint.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace partmat {

/// Dense univariate polynomial with BigInt coefficients, lowest power first.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(std::initializer_list<BigInt> coeffs) : c_(coeffs) { trim(); }
  explicit QPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPolynomial constant(const BigInt& v) { return QPolynomial(std::vector<BigInt>{v}); }
  static QPolynomial monomial(int power, const BigInt& v = 1) {
    std::vector<BigInt> c(power + 1, 0);
    c[power] = v;
    return QPolynomial(std::move(c));
  }

  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  BigInt coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : BigInt(0); }

  BigInt evaluate(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return QPolynomial(std::move(c));
  }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// a / b where b divides a exactly over the integers; throws otherwise.
inline QPolynomial divide_exact(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (a.is_zero()) return {};
  const int db = *b.degree();
  std::vector<BigInt> rem = a.coeffs();
  if (static_cast<int>(rem.size()) - 1 < db) throw std::domain_error("divide_exact: nonzero remainder");
  std::vector<BigInt> q(rem.size() - db, 0);
  const BigInt& lead = b.coeffs().back();
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    const BigInt& top = rem[k + db];
    if (top % lead != 0) throw std::domain_error("divide_exact: leading coefficient does not divide");
    q[k] = top / lead;
    for (int i = 0; i <= db; ++i) rem[k + i] -= q[k] * b.coeffs()[i];
  }
  for (const BigInt& r : rem)
    if (r != 0) throw std::domain_error("divide_exact: nonzero remainder");
  return QPolynomial(std::move(q));
}

/// Human-readable form such as "5 + q" or "3z^2 + z^3".
inline std::string to_string(const QPolynomial& p, const std::string& var = "q") {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    BigInt c = p.coeffs()[k];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (c < 0) c = -c;
    if (k == 0 || c != 1) out += to_decimal(c);
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace partmat
