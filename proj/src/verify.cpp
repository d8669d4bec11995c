#include "diagcount/verify.hpp"

#include <chrono>

#include "diagcount/charsum.hpp"
#include "diagcount/counting.hpp"
#include "diagcount/oracle.hpp"

namespace diagcount {

namespace {

template <typename Fn>
CountReport timed(Fn&& fn, bool want_timing) {
  auto start = std::chrono::steady_clock::now();
  CountReport rep = fn();
  if (want_timing) {
    auto end = std::chrono::steady_clock::now();
    rep.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                     end - start)
                     .count();
  }
  return rep;
}

}  // namespace

VerifyResult verify_instance(const Equation& eq, const RouteOptions& opts) {
  const FieldCtx& F = *eq.ctx;
  Applicability ap = classify(eq);

  std::vector<CountReport> runs;
  if (ap.linear_reduced)
    runs.push_back(timed([&] { return count_linear(eq); }, opts.timing));
  if (ap.zero_form)
    runs.push_back(
        timed([&] { return count_diagonal_zero(eq); }, opts.timing));
  if (ap.equal_d_literal)
    runs.push_back(
        timed([&] { return count_diagonal_equal_d(eq); }, opts.timing));
  if (ap.square_reduced) {
    Equation sq = eq;
    for (Term& t : sq.terms) t.d = 2;
    runs.push_back(timed([&] { return count_quadratic(sq); }, opts.timing));
  }
  if (ap.charsum_work <= opts.budget)
    runs.push_back(
        timed([&] { return count_via_charsum(eq); }, opts.timing));
  if (ap.domain <= opts.budget)
    runs.push_back(timed(
        [&] {
          return CountReport{brute_count(eq, opts.budget), "brute", {},
                             std::nullopt};
        },
        opts.timing));

  if (runs.empty())
    throw BudgetExceeded("no counting path fits the work budget");

  VerifyResult out;
  bool consistent = true;
  json counts = json::object();
  json errata = json::array();
  for (const CountReport& r : runs) {
    counts[r.method] = count_report_to_json(r);
    if (r.count != runs.front().count) consistent = false;
    for (const std::string& e : r.errata) {
      bool seen = false;
      for (const json& prev : errata) seen = seen || prev == e;
      if (!seen) errata.push_back(e);
    }
  }
  out.report["counts"] = counts;
  out.report["consistent"] = consistent;
  out.report["errata_corrected"] = errata;

  const BigInt& count = runs.front().count;

  // Divisibility by p^{sum t - 2n} comes with the homogeneous form.
  if (ap.zero_form) {
    u64 sum_t = 0;
    for (const Term& t : eq.terms) sum_t += t.m / 2;
    if (sum_t >= F.deg()) {
      BigInt mod = ipow_big(F.p(), sum_t - F.deg());
      out.report["divisibility"] = {
          {"modulus", mod.str()}, {"holds", count % mod == 0}};
      if (count % mod != 0) consistent = false;
    }
  }

  bool full_field = true;
  for (const Term& t : eq.terms) full_field = full_field && t.m == F.deg();
  if (full_field && F.is_zero(eq.b)) {
    WeilReport w = weil_bound_check(eq, count);
    out.report["weil"] = weil_report_to_json(w);
    if (!w.holds) consistent = false;
  }
  if (ap.zero_form) {
    ExistenceReport ex = existence_check(eq);
    out.report["existence"] = existence_report_to_json(ex);
    if (!ex.display_holds) consistent = false;
  }

  out.report["consistent"] = consistent;
  out.consistent = consistent;
  return out;
}

}  // namespace diagcount
