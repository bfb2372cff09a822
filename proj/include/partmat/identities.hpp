#pragma once

#include "partmat/bigint.hpp"
#include "partmat/enumerate.hpp"
#include "partmat/polynomial.hpp"
#include "partmat/series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace partmat {

// ---------------------------------------------------------------------------
// Numbers and polynomials

/// S(n, m) via S(n,m) = m S(n-1,m) + S(n-1,m-1).
inline BigInt stirling2(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("stirling2: negative argument");
  if (m > n) return 0;
  std::vector<BigInt> row(m + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = std::min(i, m); k >= 0; --k) row[k] = k == 0 ? BigInt(0) : k * row[k] + row[k - 1];
  return row[m];
}

/// Eulerian polynomial by the Frobenius sum  E_n(x) = sum_j j! S(n,j) (x-1)^{n-j}.
inline QPolynomial eulerian_poly(int n) {
  if (n < 1) throw std::invalid_argument("eulerian_poly: n must be at least 1");
  const QPolynomial x_minus_1{-1, 1};
  QPolynomial out;
  for (int j = 1; j <= n; ++j) {
    QPolynomial term = QPolynomial::constant(factorial(j) * stirling2(n, j));
    for (int k = 0; k < n - j; ++k) term *= x_minus_1;
    out += term;
  }
  return out;
}

// [k]_q = 1 + q + ... + q^{k-1}
inline QPolynomial q_integer(int k) {
  return QPolynomial(std::vector<BigInt>(static_cast<std::size_t>(k), 1));
}

inline QPolynomial q_factorial(int k) {
  QPolynomial r = QPolynomial::constant(1);
  for (int i = 2; i <= k; ++i) r *= q_integer(i);
  return r;
}

inline QPolynomial q_multinomial(const std::vector<int>& parts) {
  int total = 0;
  for (int a : parts) {
    if (a < 0) throw std::invalid_argument("q_multinomial: negative part");
    total += a;
  }
  QPolynomial r = q_factorial(total);
  for (int a : parts) r = divide_exact(r, q_factorial(a));
  return r;
}

/// S_n(q) as a sum over Fishburn matrices of the product, over columns, of
/// the q-multinomial of the column entries.
inline QPolynomial s_poly_fishburn(int n) {
  std::map<std::vector<int>, QPolynomial> cache;
  QPolynomial out;
  for_each(fishburn_matrices(n), [&](const FishburnMatrix& a) {
    QPolynomial term = QPolynomial::constant(1);
    for (int j = 1; j <= a.dim(); ++j) {
      std::vector<int> col;
      for (int i = 1; i <= j; ++i)
        if (a.at(i, j) > 0) col.push_back(a.at(i, j));
      auto it = cache.find(col);
      if (it == cache.end()) it = cache.emplace(col, q_multinomial(col)).first;
      term *= it->second;
    }
    out += term;
  });
  return out;
}

/// S_n(q) as the inv-generating polynomial of partition matrices.
inline QPolynomial s_poly_inv(int n) {
  std::vector<BigInt> c;
  for_each(partition_matrices(n), [&](const PartitionMatrix& p) {
    const int k = inv(p);
    if (k >= static_cast<int>(c.size())) c.resize(k + 1, 0);
    c[k] += 1;
  });
  return QPolynomial(std::move(c));
}

/// sum_{j=1}^{n+1} (j-1)! S(n+2-j, j) z^{n+1-j}
inline QPolynomial dist_rhs_poly(int n) {
  if (n < 1) throw std::invalid_argument("dist_rhs_poly: n must be at least 1");
  QPolynomial out;
  for (int j = 1; j <= n + 1; ++j)
    out += QPolynomial::monomial(n + 1 - j, factorial(j - 1) * stirling2(n + 2 - j, j));
  return out;
}

namespace detail {

template <class T, class F>
QPolynomial stat_poly(Stream<T> s, F stat) {
  std::vector<BigInt> c;
  for_each(std::move(s), [&](const T& obj) {
    const int k = stat(obj);
    if (k >= static_cast<int>(c.size())) c.resize(k + 1, 0);
    c[k] += 1;
  });
  return QPolynomial(std::move(c));
}

}  // namespace detail

/// sum of z^v over improper matrices of weight n.
inline QPolynomial v_dist_poly(int n) {
  return detail::stat_poly(improper_matrices(n, Strategy::Structural), [](const PartitionMatrix& p) { return semi_weight(p); });
}

/// sum of z^dist over the pattern class of length n.
inline QPolynomial dist_poly(int n) {
  return detail::stat_poly(pattern_class(n), [](const InversionSequence& e) { return dist(e); });
}

/// sum of x^dim over partition matrices of weight n.
inline QPolynomial dim_poly(int n) {
  return detail::stat_poly(partition_matrices(n), [](const PartitionMatrix& p) { return p.dim(); });
}

// ---------------------------------------------------------------------------
// Series

namespace detail {

inline TruncatedSeries mono(int order, int t_pow, std::initializer_list<std::pair<Var, int>> vars = {}) {
  Monomial m{};
  m[0] = t_pow;
  for (auto [v, e] : vars) m[1 + static_cast<int>(v)] = e;
  TruncatedSeries s(order);
  s.add_term(m, 1);
  return s;
}

inline TruncatedSeries one(int order) { return TruncatedSeries::constant(order, 1); }

}  // namespace detail

/// The continued fraction F(mu1, mu2, mu3, nu, omega) evaluated at series
/// arguments: G = 1/(1 - mu3 - mu1 mu2 G) by fixed-point iteration, then
/// F = 1/(1 - mu3 omega - mu1 mu2 nu G). mu1*mu2 must have positive t-order.
inline TruncatedSeries motzkin_F(const TruncatedSeries& mu1, const TruncatedSeries& mu2,
                                 const TruncatedSeries& mu3, const TruncatedSeries& nu,
                                 const TruncatedSeries& omega) {
  const int T = std::min({mu1.order(), mu2.order(), mu3.order(), nu.order(), omega.order()});
  const TruncatedSeries one = detail::one(T);
  const TruncatedSeries m12 = mu1 * mu2;
  if (!m12.is_zero() && *m12.valuation() < 1)
    throw std::domain_error("motzkin_F: mu1*mu2 must have positive t-order");
  TruncatedSeries g = one;
  for (;;) {
    TruncatedSeries next = reciprocal(one - mu3 - m12 * g);
    if (next == g) break;
    g = std::move(next);
  }
  return reciprocal(one - mu3 * omega - m12 * nu * g);
}

/// Named series and residuals of one identity check; passes when every
/// residual is the zero series.
struct SeriesReport {
  std::string name;
  int order = 0;
  std::vector<std::pair<std::string, TruncatedSeries>> series;
  std::vector<std::pair<std::string, TruncatedSeries>> residuals;

  bool all_zero() const {
    for (const auto& [label, r] : residuals)
      if (!r.is_zero()) return false;
    return true;
  }
  const TruncatedSeries& primary() const { return series.front().second; }
};

/// sum x^comp y^level t^len over Motzkin words of length 1..T.
inline TruncatedSeries motzkin_stat_enumerated(int T) {
  TruncatedSeries s(T);
  for (int n = 1; n <= T; ++n)
    for_each(motzkin_words(n), [&](const MotzkinWord& m) {
      const MotzkinStats st = motzkin_stats(m);
      Monomial mono{};
      mono[0] = n;
      mono[1 + static_cast<int>(Var::x)] = st.comp;
      mono[1 + static_cast<int>(Var::y)] = st.level;
      s.add_term(mono, 1);
    });
  return s;
}

/// Motzkin statistic series three ways: enumeration, F(t,t,yt,x,x) - 1, and
/// the square-root closed form (denominator cleared).
inline SeriesReport motzkin_stat_series(int T) {
  using detail::mono;
  const TruncatedSeries enumerated = motzkin_stat_enumerated(T);
  const TruncatedSeries t = mono(T, 1), x = mono(T, 0, {{Var::x, 1}});
  const TruncatedSeries yt = mono(T, 1, {{Var::y, 1}});
  const TruncatedSeries one = detail::one(T);
  const TruncatedSeries F = motzkin_F(t, t, yt, x, x);
  const TruncatedSeries root = sqrt_series((one - yt) * (one - yt) - BigInt(4) * mono(T, 2));
  const TruncatedSeries closed =
      (F * (BigInt(2) * (one - x * yt) - x * (one - yt - root))) - BigInt(2) * one;
  SeriesReport r{"motzkin-stats", T, {}, {}};
  r.series.emplace_back("enumerated", enumerated);
  r.series.emplace_back("continued-fraction", F - one);
  r.residuals.emplace_back("enumerated - continued-fraction", enumerated - (F - one));
  r.residuals.emplace_back("closed-form", closed);
  r.residuals.emplace_back("sqrt-squared", root * root - ((one - yt) * (one - yt) - BigInt(4) * mono(T, 2)));
  return r;
}

/// sum x^blk y^odd t^w over nondecreasing (improper) matrices of weight 1..T.
inline TruncatedSeries nd_stat_enumerated(int T, bool improper) {
  TruncatedSeries s(T);
  for (int n = 1; n <= T; ++n)
    for_each(nondecreasing_matrices(n, improper), [&](const PartitionMatrix& p) {
      Monomial mono{};
      mono[0] = n;
      mono[1 + static_cast<int>(Var::x)] = block_count(p);
      if (improper) mono[1 + static_cast<int>(Var::y)] = odd_count(p);
      s.add_term(mono, 1);
    });
  return s;
}

/// Nondecreasing improper matrices by (blk, odd): enumeration against the
/// closed form and against x a F(b, a, a, 1, x) with a = (yt + t^2)/(1 - t^2),
/// b = t^2/(1 - t^2).
inline SeriesReport ndippm_gf_check(int T) {
  using detail::mono;
  const TruncatedSeries E = nd_stat_enumerated(T, true);
  const TruncatedSeries one = detail::one(T), x = mono(T, 0, {{Var::x, 1}});
  const TruncatedSeries t = mono(T, 1), t2 = mono(T, 2), yt = mono(T, 1, {{Var::y, 1}});
  const TruncatedSeries x2 = x * x;
  const TruncatedSeries root = sqrt_series((one - yt) * (one - yt) - BigInt(4) * t2);
  const TruncatedSeries den = BigInt(2) * one - BigInt(2) * x - BigInt(2) * x * yt + BigInt(2) * x2 * yt +
                              BigInt(2) * x2 * t2;
  const TruncatedSeries num = x + x * yt - BigInt(2) * x2 * yt - BigInt(2) * x2 * t2 - x * root;
  const TruncatedSeries inv1mt2 = reciprocal(one - t2);
  const TruncatedSeries a = (yt + t2) * inv1mt2, b = t2 * inv1mt2;
  const TruncatedSeries substituted = x * a * motzkin_F(b, a, a, one, x);
  SeriesReport r{"ndippm-gf", T, {}, {}};
  r.series.emplace_back("enumerated", E);
  r.series.emplace_back("substituted", substituted);
  r.residuals.emplace_back("closed-form", den * E - num);
  r.residuals.emplace_back("enumerated - substituted", E - substituted);
  r.residuals.emplace_back("enumerated - motzkin", E - motzkin_stat_enumerated(T));
  return r;
}

/// sum x^touch t^semilength over Dyck words of semilength 1..T.
inline TruncatedSeries dyck_touch_enumerated(int T) {
  TruncatedSeries s(T);
  for (int n = 1; n <= T; ++n)
    for_each(dyck_words(n), [&](const DyckWord& w) {
      Monomial mono{};
      mono[0] = n;
      mono[1 + static_cast<int>(Var::x)] = dyck_touch(w);
      s.add_term(mono, 1);
    });
  return s;
}

/// Nondecreasing matrices by blk: enumeration against the closed form, the
/// Dyck touch series, F(t,1,0,x,1) - 1, and x c F(c, c, c, 1, x), c = t/(1-t).
inline SeriesReport ndpm_gf_check(int T) {
  using detail::mono;
  const TruncatedSeries E = nd_stat_enumerated(T, false);
  const TruncatedSeries one = detail::one(T), x = mono(T, 0, {{Var::x, 1}}), t = mono(T, 1);
  const TruncatedSeries x2 = x * x;
  const TruncatedSeries root = sqrt_series(one - BigInt(4) * t);
  const TruncatedSeries den = BigInt(2) * one - BigInt(2) * x + BigInt(2) * x2 * t;
  const TruncatedSeries num = x - BigInt(2) * x2 * t - x * root;
  const TruncatedSeries dyck = dyck_touch_enumerated(T);
  const TruncatedSeries zero(T);
  const TruncatedSeries dyck_cf = motzkin_F(t, one, zero, x, one) - one;
  const TruncatedSeries c = t * reciprocal(one - t);
  const TruncatedSeries substituted = x * c * motzkin_F(c, c, c, one, x);
  SeriesReport r{"ndpm-gf", T, {}, {}};
  r.series.emplace_back("enumerated", E);
  r.series.emplace_back("dyck", dyck);
  r.residuals.emplace_back("closed-form", den * E - num);
  r.residuals.emplace_back("enumerated - dyck", E - dyck);
  r.residuals.emplace_back("dyck - continued-fraction", dyck - dyck_cf);
  r.residuals.emplace_back("enumerated - substituted", E - substituted);
  return r;
}

/// sum z^v t^w over improper matrices of weight <= T against
/// sum z^w t^{2w - dim} (1 + t)^dim over all partition matrices.
inline SeriesReport lemma31_check(int T) {
  using detail::mono;
  TruncatedSeries lhs(T), rhs(T);
  for (int n = 1; n <= T; ++n)
    for_each(improper_matrices(n, Strategy::Filter), [&](const PartitionMatrix& q) {
      lhs += mono(T, n, {{Var::z, semi_weight(q)}});
    });
  const TruncatedSeries one_plus_t = detail::one(T) + mono(T, 1);
  for (int w = 1; w <= T; ++w) {
    // dim <= w, so 2w - dim >= w; weights above T contribute nothing.
    std::map<int, BigInt> by_dim;
    for_each(partition_matrices(w), [&](const PartitionMatrix& p) { by_dim[p.dim()] += 1; });
    for (const auto& [dim, count] : by_dim) {
      TruncatedSeries term = count * mono(T, 2 * w - dim, {{Var::z, w}});
      for (int k = 0; k < dim; ++k) term = term * one_plus_t;
      rhs += term;
    }
  }
  SeriesReport r{"lemma31", T, {}, {}};
  r.series.emplace_back("improper", lhs);
  r.series.emplace_back("doubled", rhs);
  r.residuals.emplace_back("improper - doubled", lhs - rhs);
  return r;
}

}  // namespace partmat
