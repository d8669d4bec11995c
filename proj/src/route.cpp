#include "diagcount/route.hpp"

#include <chrono>

#include "diagcount/charsum.hpp"
#include "diagcount/counting.hpp"
#include "diagcount/oracle.hpp"

namespace diagcount {

namespace {

bool all_even_m(const Equation& eq) {
  for (const Term& t : eq.terms)
    if (t.m % 2 != 0) return false;
  return true;
}

bool zero_form_applicable(const Equation& eq) {
  const FieldCtx& F = *eq.ctx;
  if (!F.is_zero(eq.b) || !all_even_m(eq)) return false;
  for (const Term& t : eq.terms) {
    u64 d_red = reduce_exponent(t.d, F.p(), t.m);
    if (!find_r(F.p(), t.m / 2, d_red)) return false;
  }
  return true;
}

bool equal_d_applicable(const Equation& eq) {
  const FieldCtx& F = *eq.ctx;
  if (F.is_zero(eq.b) || !all_even_m(eq)) return false;
  u64 d = eq.terms[0].d;
  std::vector<unsigned> rs;
  for (const Term& t : eq.terms) {
    if (t.d != d) return false;
    auto r = find_r(F.p(), t.m / 2, d);
    if (!r) return false;
    rs.push_back(*r);
  }
  try {
    find_t_l(F.p(), d, rs);
  } catch (const NoSuchExponent&) {
    return false;
  }
  return true;
}

bool literal_linear_applicable(const Equation& eq) {
  if (!all_even_m(eq)) return false;
  for (const Term& t : eq.terms)
    if (t.d != 1) return false;
  return true;
}

u128 domain_size(const Equation& eq) {
  u128 total = 1;
  for (const Term& t : eq.terms) {
    total *= ipow_u64(eq.ctx->p(), t.m);
    if (total > (u128(1) << 100)) return u128(1) << 100;
  }
  return total;
}

u128 charsum_work(const Equation& eq) {
  u128 per_c = 1;
  for (const Term& t : eq.terms) per_c += ipow_u64(eq.ctx->p(), t.m);
  return u128(eq.ctx->q()) * per_c;
}

CountReport closed_dispatch(const Equation& eq) {
  const FieldCtx& F = *eq.ctx;
  // Reduction is count-preserving, so the explicit closed request may
  // reduce before testing the linear and square shapes.
  bool reduced_linear = all_even_m(eq);
  bool reduced_square = true;
  for (const Term& t : eq.terms) {
    u64 d_red = reduce_exponent(t.d, F.p(), t.m);
    reduced_linear = reduced_linear && d_red == 1;
    reduced_square = reduced_square && d_red == 2;
  }
  if (reduced_linear) return count_linear(eq);
  if (zero_form_applicable(eq)) return count_diagonal_zero(eq);
  if (equal_d_applicable(eq)) return count_diagonal_equal_d(eq);
  if (reduced_square) {
    Equation sq = eq;
    for (Term& t : sq.terms) t.d = 2;
    return count_quadratic(sq);
  }
  // Let the most specific path explain why it does not apply.
  if (eq.ctx->is_zero(eq.b)) return count_diagonal_zero(eq);
  return count_diagonal_equal_d(eq);
}

CountReport auto_dispatch(const Equation& eq, const RouteOptions& opts) {
  if (literal_linear_applicable(eq)) return count_linear(eq);
  if (zero_form_applicable(eq)) {
    bool literal_ok = true;
    for (const Term& t : eq.terms)
      literal_ok =
          literal_ok && reduce_exponent(t.d, eq.ctx->p(), t.m) == t.d;
    if (literal_ok) return count_diagonal_zero(eq);
  }
  if (equal_d_applicable(eq)) {
    bool literal_ok = true;
    for (const Term& t : eq.terms)
      literal_ok =
          literal_ok && reduce_exponent(t.d, eq.ctx->p(), t.m) == t.d;
    if (literal_ok) return count_diagonal_equal_d(eq);
  }
  {
    bool all_square = true;
    for (const Term& t : eq.terms) all_square = all_square && t.d == 2;
    if (all_square) return count_quadratic(eq);
  }
  if (charsum_work(eq) <= opts.budget) return count_via_charsum(eq);
  if (domain_size(eq) <= opts.budget) {
    BigInt n = brute_count(eq, opts.budget);
    return CountReport{n, "brute", {}, std::nullopt};
  }
  throw BudgetExceeded(
      "no closed form applies and both enumeration paths exceed the work "
      "budget " +
      std::to_string(opts.budget));
}

}  // namespace

CountReport route_count(const Equation& eq, const RouteOptions& opts) {
  validate_equation(eq);
  auto start = std::chrono::steady_clock::now();
  CountReport rep;
  switch (opts.method) {
    case Method::kAuto:
      rep = auto_dispatch(eq, opts);
      break;
    case Method::kClosed:
      rep = closed_dispatch(eq);
      break;
    case Method::kCharsum:
      rep = count_via_charsum(eq);
      break;
    case Method::kBrute:
      rep = CountReport{brute_count(eq, opts.budget), "brute", {},
                        std::nullopt};
      break;
  }
  if (opts.timing) {
    auto end = std::chrono::steady_clock::now();
    rep.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                     end - start)
                     .count();
  }
  return rep;
}

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::kAuto;
  if (name == "closed") return Method::kClosed;
  if (name == "charsum") return Method::kCharsum;
  if (name == "brute") return Method::kBrute;
  throw InvalidInput("unknown method \"" + name + "\"");
}

Applicability classify(const Equation& eq) {
  validate_equation(eq);
  const FieldCtx& F = *eq.ctx;
  Applicability ap;
  ap.linear_reduced = all_even_m(eq);
  ap.square_reduced = true;
  for (const Term& t : eq.terms) {
    u64 d_red = reduce_exponent(t.d, F.p(), t.m);
    ap.linear_reduced = ap.linear_reduced && d_red == 1;
    ap.square_reduced = ap.square_reduced && d_red == 2;
  }
  ap.zero_form = zero_form_applicable(eq);
  ap.equal_d_literal = equal_d_applicable(eq);
  ap.charsum_work = charsum_work(eq);
  ap.domain = domain_size(eq);
  return ap;
}

}  // namespace diagcount
