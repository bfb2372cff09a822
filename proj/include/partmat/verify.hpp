#pragma once

#include "partmat/cdk.hpp"
#include "partmat/enumerate.hpp"
#include "partmat/golden.hpp"
#include "partmat/identities.hpp"
#include "partmat/io.hpp"
#include "partmat/maps.hpp"
#include "partmat/phi.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace partmat {

enum class CheckId {
  SMinusOne,
  ThetaInvolution,
  Doubling,
  SemiWeight,
  BlkOdd,
  NdpmDyck,
  PhiRoundtrip,
  ParityAppend,
  STable,
  EtaBijective,
  GfClosedForms,
};

enum class BoundKind { Weight, Order };

struct CheckInfo {
  CheckId id;
  const char* name;
  BoundKind bound_kind;
  int default_bound;
  int max_bound;  // largest bound the check supports (golden data, feasibility)
  const char* statement;
};

inline const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> r = {
      {CheckId::SMinusOne, "theorem-1-1", BoundKind::Weight, 8, 10,
       "S_n(-1) equals the size of the pattern class I_n(-,-,=)"},
      {CheckId::ThetaInvolution, "theorem-2-3", BoundKind::Weight, 8, 9,
       "Theta is a weight-preserving involution fixing exactly the improper matrices, "
       "changing inv by 1 elsewhere; inv is even on fixed points"},
      {CheckId::Doubling, "lemma-3-1", BoundKind::Order, 7, 8,
       "sum z^v t^w over improper matrices equals sum z^w t^(2w) (1+1/t)^dim over all partition matrices; "
       "doubling and contraction are inverse"},
      {CheckId::SemiWeight, "theorem-3-2", BoundKind::Weight, 8, 9,
       "v over improper matrices, dist over the pattern class and the Stirling formula agree"},
      {CheckId::BlkOdd, "theorem-4-blk-odd", BoundKind::Weight, 12, 14,
       "(blk, odd) over nondecreasing improper matrices is distributed as (comp, level) over Motzkin words"},
      {CheckId::NdpmDyck, "theorem-4-ndpm-dyck", BoundKind::Weight, 10, 12,
       "blk over nondecreasing matrices is distributed as touch over Dyck paths; closed form holds"},
      {CheckId::PhiRoundtrip, "phi-roundtrip", BoundKind::Weight, 12, 14,
       "phi is a bijection onto Motzkin words carrying (w, blk, odd) to (len, comp, level)"},
      {CheckId::ParityAppend, "lemma-5-1", BoundKind::Weight, 7, 8,
       "appending maps are statistic-preserving bijections from the minus to the plus classes"},
      {CheckId::STable, "s-table", BoundKind::Weight, 8, 8,
       "both routes to S_n(q) reproduce the tabulated polynomials and their specializations"},
      {CheckId::EtaBijective, "eta-bijective", BoundKind::Weight, 7, 8,
       "the induced inversion sequence map is a bijection preserving nondecreasingness"},
      {CheckId::GfClosedForms, "gf-closed-forms", BoundKind::Order, 10, 14,
       "enumeration, continued fraction and square-root closed forms agree for the Motzkin and "
       "nondecreasing improper series"},
  };
  return r;
}

inline std::optional<CheckInfo> find_check(const std::string& name) {
  for (const CheckInfo& c : check_registry())
    if (name == c.name) return c;
  return std::nullopt;
}

struct CheckResult {
  bool passed = true;
  std::string detail;              // what was checked, or what failed
  std::optional<Json> counterexample;

  static CheckResult ok(std::string what) { return {true, std::move(what), std::nullopt}; }
  static CheckResult fail(std::string what, Json example) { return {false, std::move(what), std::move(example)}; }
};

namespace detail {

inline Json poly_pair(const QPolynomial& a, const QPolynomial& b) {
  return {{"left", to_json(a)}, {"right", to_json(b)}};
}

inline std::optional<std::string> first_nonzero_residual(const SeriesReport& r) {
  for (const auto& [label, s] : r.residuals)
    if (!s.is_zero()) return label;
  return std::nullopt;
}

inline CheckResult check_s_minus_one(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const BigInt lhs = s_poly_fishburn(n).evaluate(-1);
    const BigInt rhs = count(pattern_class(n));
    if (lhs != rhs)
      return CheckResult::fail("S_n(-1) differs from the pattern-class count",
                               {{"n", n}, {"S(-1)", to_decimal(lhs)}, {"pattern", to_decimal(rhs)}});
  }
  return CheckResult::ok("n <= " + std::to_string(max_n));
}

inline CheckResult check_theta(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    std::optional<CheckResult> bad;
    for_each(partition_matrices(n), [&](const PartitionMatrix& p) {
      if (bad) return;
      const PartitionMatrix q = theta(p);
      auto fail = [&](const char* why) { bad = CheckResult::fail(why, to_json(p)); };
      if (q.weight() != p.weight()) return fail("theta changes the weight");
      if (theta(q) != p) return fail("theta is not an involution");
      const bool fixed = q == p;
      if (fixed != is_improper(p)) return fail("fixed points differ from improper matrices");
      if (fixed) {
        if (inv(p) % 2 != 0) return fail("odd inv on an improper matrix");
        return;
      }
      const int diff = inv(q) - inv(p);
      if (diff != 1 && diff != -1) return fail("theta changes inv by more than one");
      StepKind first{};
      for (const StepEvent& ev : step_events(p))
        if (ev.proper) {
          first = ev.kind;
          break;
        }
      if ((diff == 1) != (first == StepKind::Ascent)) return fail("inv moves against the event kind");
    });
    if (bad) return *bad;
  }
  return CheckResult::ok("n <= " + std::to_string(max_n));
}

inline CheckResult check_doubling(int max_t) {
  const SeriesReport r = lemma31_check(max_t);
  if (auto label = first_nonzero_residual(r))
    return CheckResult::fail("residual " + *label + " is nonzero", to_json(r.residuals.front().second));
  for (int n = 1; n <= std::min(max_t, 6); ++n) {
    std::optional<CheckResult> bad;
    for_each(partition_matrices(n), [&](const PartitionMatrix& p) {
      if (bad) return;
      const auto images = double_expand(p);
      std::set<PartitionMatrix> distinct(images.begin(), images.end());
      if (distinct.size() != images.size()) bad = CheckResult::fail("doubling images collide", to_json(p));
      for (const PartitionMatrix& q : images) {
        if (bad) return;
        if (!is_improper(q) || semi_weight(q) != p.weight()) {
          bad = CheckResult::fail("doubling image is not improper of semi-weight w(P)", to_json(q));
          return;
        }
        if (double_contract(q).source != p) bad = CheckResult::fail("contraction does not invert doubling", to_json(q));
      }
    });
    if (bad) return *bad;
  }
  return CheckResult::ok("T <= " + std::to_string(max_t));
}

inline CheckResult check_semi_weight(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const QPolynomial v = v_dist_poly(n), d = dist_poly(n), rhs = dist_rhs_poly(n);
    if (v != rhs) return CheckResult::fail("v-distribution differs from the formula", poly_pair(v, rhs));
    if (d != rhs) return CheckResult::fail("dist-distribution differs from the formula", poly_pair(d, rhs));
  }
  // The Stirling rearrangement used in the proof.
  for (int N = 2; N <= std::max(12, max_n); ++N) {
    QPolynomial right;
    for (int j = 1; j <= N - 1; ++j)
      right += QPolynomial::monomial(N - j, factorial(j) * stirling2(N - j, j));
    for (int j = 1; j <= N; ++j)
      right += QPolynomial::monomial(N + 1 - j, factorial(j) * stirling2(N + 1 - j, j));
    if (dist_rhs_poly(N) != right)
      return CheckResult::fail("Stirling rearrangement fails", poly_pair(dist_rhs_poly(N), right));
  }
  return CheckResult::ok("n <= " + std::to_string(max_n));
}

inline CheckResult check_blk_odd(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    std::map<std::pair<int, int>, std::uint64_t> left, right;
    for_each(nondecreasing_matrices(n, true),
             [&](const PartitionMatrix& b) { ++left[{block_count(b), odd_count(b)}]; });
    for_each(motzkin_words(n), [&](const MotzkinWord& m) {
      const MotzkinStats s = motzkin_stats(m);
      ++right[{s.comp, s.level}];
    });
    if (left != right) {
      Json l = Json::array(), r = Json::array();
      for (auto [k, c] : left) l.push_back({k.first, k.second, c});
      for (auto [k, c] : right) r.push_back({k.first, k.second, c});
      return CheckResult::fail("joint distributions differ", {{"n", n}, {"blk-odd", l}, {"comp-level", r}});
    }
  }
  return CheckResult::ok("n <= " + std::to_string(max_n));
}

inline BigInt catalan(int n) {
  BigInt c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

inline CheckResult check_ndpm_dyck(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const QPolynomial blk =
        stat_poly(nondecreasing_matrices(n, false), [](const PartitionMatrix& a) { return block_count(a); });
    const QPolynomial touch = stat_poly(dyck_words(n), [](const DyckWord& w) { return dyck_touch(w); });
    if (blk != touch) return CheckResult::fail("blk and touch distributions differ", poly_pair(blk, touch));
    if (blk.evaluate(1) != catalan(n))
      return CheckResult::fail("count is not the Catalan number", {{"n", n}, {"count", to_decimal(blk.evaluate(1))}});
  }
  const SeriesReport r = ndpm_gf_check(max_n);
  if (auto label = first_nonzero_residual(r))
    return CheckResult::fail("residual " + *label + " is nonzero", to_json(r.primary()));
  return CheckResult::ok("n <= " + std::to_string(max_n));
}

inline CheckResult check_phi(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    std::optional<CheckResult> bad;
    for_each(nondecreasing_matrices(n, true), [&](const PartitionMatrix& b) {
      if (bad) return;
      const MotzkinWord m = phi(b);
      const MotzkinStats s = motzkin_stats(m);
      if (s.len != b.weight() || s.comp != block_count(b) || s.level != odd_count(b))
        bad = CheckResult::fail("phi does not carry (w, blk, odd)", to_json(b));
      else if (phi_inv(m) != b)
        bad = CheckResult::fail("phi_inv(phi(B)) differs from B", to_json(b));
    });
    if (bad) return *bad;
    for_each(motzkin_words(n), [&](const MotzkinWord& m) {
      if (bad) return;
      if (phi(phi_inv(m)) != m) bad = CheckResult::fail("phi(phi_inv(M)) differs from M", to_json(m));
    });
    if (bad) return *bad;
  }
  return CheckResult::ok("n <= " + std::to_string(max_n));
}

inline CheckResult check_parity_append(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    std::uint64_t minus = 0, plus_next = 0;
    std::optional<CheckResult> bad;
    for_each(improper_matrices(n, Strategy::Filter), [&](const PartitionMatrix& q) {
      if (bad || parity_class(q) != ParityClass::Minus) return;
      ++minus;
      const PartitionMatrix r = parity_append(q);
      if (!is_improper(r) || parity_class(r) != ParityClass::Plus || semi_weight(r) != semi_weight(q) ||
          parity_remove(r) != q)
        bad = CheckResult::fail("matrix appending fails", to_json(q));
    });
    if (bad) return *bad;
    for_each(improper_matrices(n + 1, Strategy::Filter), [&](const PartitionMatrix& q) {
      if (parity_class(q) == ParityClass::Plus) ++plus_next;
    });
    if (minus != plus_next)
      return CheckResult::fail("minus and plus classes of matrices differ in size", {{"n", n}});
    minus = plus_next = 0;
    for_each(pattern_class(n), [&](const InversionSequence& e) {
      if (bad || parity_class(e) != ParityClass::Minus) return;
      ++minus;
      const InversionSequence f = seq_append(e);
      if (!in_pattern_class(f) || parity_class(f) != ParityClass::Plus || dist(f) != dist(e) || seq_remove(f) != e)
        bad = CheckResult::fail("sequence appending fails", to_json(e));
    });
    if (bad) return *bad;
    for_each(pattern_class(n + 1), [&](const InversionSequence& e) {
      if (parity_class(e) == ParityClass::Plus) ++plus_next;
    });
    if (minus != plus_next)
      return CheckResult::fail("minus and plus classes of sequences differ in size", {{"n", n}});
  }
  return CheckResult::ok("n <= " + std::to_string(max_n));
}

inline CheckResult check_s_table(int max_n) {
  const auto& table = golden::s_table();
  for (int n = 1; n <= max_n && n <= static_cast<int>(table.size()); ++n) {
    std::vector<BigInt> c(table[n - 1].begin(), table[n - 1].end());
    const QPolynomial expected(std::move(c));
    const QPolynomial fm = s_poly_fishburn(n), pm = s_poly_inv(n);
    if (fm != expected) return CheckResult::fail("Fishburn route differs from the table", poly_pair(fm, expected));
    if (pm != expected) return CheckResult::fail("inv route differs from the table", poly_pair(pm, expected));
    if (fm.evaluate(0) != golden::fishburn_numbers()[n - 1] || fm.evaluate(1) != factorial(n) ||
        fm.evaluate(-1) != golden::pattern_class_counts()[n - 1])
      return CheckResult::fail("specializations at 0, 1, -1 are wrong", to_json(fm));
  }
  return CheckResult::ok("n <= " + std::to_string(max_n));
}

inline CheckResult check_eta(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    std::set<std::vector<int>> images;
    std::optional<CheckResult> bad;
    for_each(partition_matrices(n), [&](const PartitionMatrix& p) {
      if (bad) return;
      const InversionSequence e = cdk_eta(p);
      if (!images.insert(e.values()).second) bad = CheckResult::fail("two matrices share an image", to_json(p));
      else if (is_nondecreasing(p) && !is_nondecreasing(e))
        bad = CheckResult::fail("nondecreasing matrix with a decreasing image", to_json(p));
      else if (cdk_eta_inverse(e) != p)
        bad = CheckResult::fail("inverse does not recover the matrix", to_json(p));
    });
    if (bad) return *bad;
    if (BigInt(images.size()) != factorial(n))
      return CheckResult::fail("image is not all of IS_n", {{"n", n}, {"images", images.size()}});
  }
  return CheckResult::ok("n <= " + std::to_string(max_n));
}

inline CheckResult check_gf(int max_t) {
  for (const SeriesReport& r : {motzkin_stat_series(max_t), ndippm_gf_check(max_t)})
    if (auto label = first_nonzero_residual(r))
      return CheckResult::fail(r.name + ": residual " + *label + " is nonzero", to_json(r.primary()));
  return CheckResult::ok("T <= " + std::to_string(max_t));
}

}  // namespace detail

inline CheckResult run_check(CheckId id, int bound) {
  switch (id) {
    case CheckId::SMinusOne: return detail::check_s_minus_one(bound);
    case CheckId::ThetaInvolution: return detail::check_theta(bound);
    case CheckId::Doubling: return detail::check_doubling(bound);
    case CheckId::SemiWeight: return detail::check_semi_weight(bound);
    case CheckId::BlkOdd: return detail::check_blk_odd(bound);
    case CheckId::NdpmDyck: return detail::check_ndpm_dyck(bound);
    case CheckId::PhiRoundtrip: return detail::check_phi(bound);
    case CheckId::ParityAppend: return detail::check_parity_append(bound);
    case CheckId::STable: return detail::check_s_table(bound);
    case CheckId::EtaBijective: return detail::check_eta(bound);
    case CheckId::GfClosedForms: return detail::check_gf(bound);
  }
  return CheckResult::fail("unknown check", Json());
}

}  // namespace partmat
