// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "partmat/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace partmat;

namespace {

const std::vector<std::vector<long long>> kS = {
    {1},
    {2},
    {5, 1},
    {15, 7, 2},
    {53, 41, 20, 5, 1},
    {217, 240, 161, 68, 24, 8, 2},
    {1014, 1475, 1253, 716, 334, 154, 62, 22, 9, 1},
    {5335, 9677, 9950, 7066, 4034, 2192, 1098, 527, 271, 108, 40, 18, 4},
};
const std::vector<long long> kFishburn = {1, 2, 5, 15, 53, 217, 1014, 5335};
const std::vector<long long> kPattern = {1, 2, 4, 10, 28, 88, 304, 1144};
const std::vector<long long> kMotzkin = {1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511};

QPolynomial poly(const std::vector<long long>& c) { return QPolynomial(std::vector<BigInt>(c.begin(), c.end())); }

struct Outcome {
  bool ok;
  std::string note;
};

Outcome run(CheckId id, int bound) {
  const CheckResult r = run_check(id, bound);
  std::string note;
  for (const CheckInfo& c : check_registry())
    if (c.id == id) note = std::string(c.name) + ": ";
  note += r.detail;
  if (r.counterexample) note += " " + r.counterexample->dump();
  return {r.passed, note};
}

Outcome ac1() {
  for (int n = 1; n <= 8; ++n) {
    if (s_poly_fishburn(n) != poly(kS[n - 1])) return {false, "Fishburn route, n = " + std::to_string(n)};
    if (s_poly_inv(n) != poly(kS[n - 1])) return {false, "inv route, n = " + std::to_string(n)};
  }
  return {true, "S_1..S_8 by both routes"};
}

Outcome ac2() {
  for (int n = 1; n <= 8; ++n) {
    const QPolynomial s = s_poly_inv(n);
    if (s.evaluate(0) != kFishburn[n - 1] || s.evaluate(1) != factorial(n) || s.evaluate(-1) != kPattern[n - 1])
      return {false, "n = " + std::to_string(n)};
  }
  return {true, "S_n(0), S_n(1), S_n(-1) for n <= 8"};
}

Outcome ac3() {
  for (int n = 1; n <= 8; ++n) {
    const std::uint64_t c = count(pattern_class(n));
    if (BigInt(c) != s_poly_fishburn(n).evaluate(-1) || static_cast<long long>(c) != kPattern[n - 1])
      return {false, "n = " + std::to_string(n)};
  }
  return {true, "pattern class size equals S_n(-1) for n <= 8"};
}

Outcome ac4() { return run(CheckId::ThetaInvolution, 8); }

Outcome ac5() {
  const SeriesReport r = lemma31_check(7);
  return {r.all_zero(), "improper-vs-doubled residual to t^7"};
}

Outcome ac6() {
  for (int n = 1; n <= 8; ++n) {
    const QPolynomial rhs = dist_rhs_poly(n);
    if (v_dist_poly(n) != rhs || dist_poly(n) != rhs) return {false, "n = " + std::to_string(n)};
  }
  return {true, "v, dist and the Stirling formula for n <= 8"};
}

Outcome ac7() {
  for (int n = 1; n <= 12; ++n)
    if (static_cast<long long>(count(nondecreasing_matrices(n, true))) != kMotzkin[n - 1])
      return {false, "count differs from the Motzkin number, n = " + std::to_string(n)};
  return run(CheckId::BlkOdd, 12);
}

Outcome ac8() { return run(CheckId::PhiRoundtrip, 12); }

Outcome ac9() { return run(CheckId::NdpmDyck, 10); }

Outcome ac10() {
  if (!motzkin_stat_series(10).all_zero()) return {false, "Motzkin statistic residual"};
  if (!ndippm_gf_check(10).all_zero()) return {false, "nondecreasing improper residual"};
  return {true, "residuals zero to t^10"};
}

Outcome ac11() { return run(CheckId::EtaBijective, 7); }

Outcome ac12() { return run(CheckId::ParityAppend, 7); }

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {ac1, ac2, ac3, ac4,  ac5,  ac6,
                                                          ac7, ac8, ac9, ac10, ac11, ac12};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("AC%zu %s %s (%.2fs)\n", i + 1, o.ok ? "PASS" : "FAIL", o.note.c_str(), secs);
    std::fflush(stdout);
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
