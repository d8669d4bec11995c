#include "diagcount/io.hpp"

namespace diagcount {

namespace {

i64 get_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<i64>();
}

u64 get_uint(const json& j, const char* what) {
  i64 v = get_int(j, what);
  if (v < 0) throw InvalidInput(std::string(what) + " must be nonnegative");
  return u64(v);
}

}  // namespace

FieldElem parse_element(const FieldCtx& ctx, const json& j) {
  if (j.is_number_integer()) return ctx.from_int(j.get<i64>());
  if (!j.is_object())
    throw InvalidInput("element must be an integer or an object");
  if (j.contains("int")) return ctx.from_int(get_int(j["int"], "int"));
  if (j.contains("pow")) return ctx.from_pow(get_int(j["pow"], "pow"));
  if (j.contains("poly")) {
    const json& arr = j["poly"];
    if (!arr.is_array()) throw InvalidInput("poly must be an array");
    std::vector<i64> coeffs;
    for (const json& c : arr) coeffs.push_back(get_int(c, "poly entry"));
    return ctx.from_coeffs(coeffs);
  }
  throw InvalidInput("element needs one of: int, pow, poly");
}

json element_to_json(const FieldCtx& ctx, const FieldElem& e) {
  json arr = json::array();
  for (u64 c : e.c) arr.push_back(c);
  (void)ctx;
  return json{{"poly", arr}};
}

Equation parse_equation(const json& j) {
  if (!j.is_object()) throw InvalidInput("equation must be an object");
  for (const char* key : {"p", "N", "terms", "b"})
    if (!j.contains(key))
      throw InvalidInput(std::string("equation needs \"") + key + "\"");
  u64 p = get_uint(j["p"], "p");
  u64 N = get_uint(j["N"], "N");
  if (N == 0 || N > 64) throw InvalidInput("N out of range");
  unsigned max_bits = 40;
  if (j.contains("max_bits"))
    max_bits = unsigned(get_uint(j["max_bits"], "max_bits"));

  Equation eq;
  eq.ctx = build_field(p, unsigned(N), max_bits);
  if (!j["terms"].is_array() || j["terms"].empty())
    throw InvalidInput("terms must be a nonempty array");
  for (const json& tj : j["terms"]) {
    if (!tj.is_object()) throw InvalidInput("term must be an object");
    for (const char* key : {"a", "d", "m"})
      if (!tj.contains(key))
        throw InvalidInput(std::string("term needs \"") + key + "\"");
    Term t;
    t.a = parse_element(*eq.ctx, tj["a"]);
    t.d = get_uint(tj["d"], "d");
    t.m = unsigned(get_uint(tj["m"], "m"));
    eq.terms.push_back(std::move(t));
  }
  eq.b = parse_element(*eq.ctx, j["b"]);
  validate_equation(eq);
  return eq;
}

json count_report_to_json(const CountReport& rep) {
  json j;
  j["count"] = rep.count.str();
  j["method"] = rep.method;
  j["errata"] = rep.errata;
  if (rep.micros) j["micros"] = *rep.micros;
  return j;
}

json weil_report_to_json(const WeilReport& rep) {
  json j;
  j["I"] = rep.I.str();
  j["d_reduced"] = rep.d_reduced;
  j["lhs_sq"] = rep.lhs_sq.str();
  j["rhs_sq"] = rep.rhs_sq.str();
  j["holds"] = rep.holds;
  return j;
}

std::string rat_to_string(const BigRat& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

json existence_report_to_json(const ExistenceReport& rep) {
  json j;
  j["lambda"] = rep.lambda.str();
  j["count"] = rep.main_lhs.str();
  j["lower_bound"] = rep.main_rhs.str();
  j["display_holds"] = rep.display_holds;
  j["pairwise_trivial"] = rep.pairwise_trivial;
  j["sufficient_lhs"] = rat_to_string(rep.sufficient_lhs);
  j["sufficient_rhs"] = rat_to_string(rep.sufficient_rhs);
  j["sufficient"] = rep.sufficient;
  if (rep.guaranteed_min) j["guaranteed_min"] = rep.guaranteed_min->str();
  return j;
}

json curve_report_to_json(const CurveBoundReport& rep) {
  json j;
  j["count"] = rep.count.str();
  j["center"] = rep.center.str();
  j["radius"] = rep.radius.str();
  j["contains"] = rep.contains;
  return j;
}

json field_info_to_json(const FieldCtx& ctx) {
  json j;
  j["p"] = ctx.p();
  j["N"] = ctx.deg();
  j["q"] = ctx.q();
  json mod = json::array();
  for (u64 c : ctx.modulus()) mod.push_back(c);
  j["modulus"] = mod;
  j["modulus_pretty"] = format_poly(ctx.modulus());
  json gen = json::array();
  for (u64 c : ctx.generator().c) gen.push_back(c);
  j["generator"] = gen;
  j["generator_pretty"] = format_poly(ctx.generator().c);
  json fact = json::array();
  for (const auto& [prime, e] : ctx.unit_order_factorization().primes)
    fact.push_back(json::array({prime, e}));
  j["unit_order_factorization"] = fact;
  return j;
}

}  // namespace diagcount
