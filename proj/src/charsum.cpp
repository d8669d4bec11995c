#include "diagcount/charsum.hpp"

#include <algorithm>

#include "diagcount/counting.hpp"

namespace diagcount {

namespace {

BigInt exact_count_div(const BigInt& numer, u64 q) {
  BigInt c = numer / q;
  if (c * q != numer)
    throw IntegralityViolation("character sum total is not divisible by q");
  if (c < 0) throw IntegralityViolation("negative solution count");
  return c;
}

}  // namespace

CycloInt s_i_enumerated(const FieldCtx& F, const FieldElem& c,
                        const FieldElem& a, u64 d, unsigned m) {
  if (d == 0) throw InvalidInput("exponent must be positive");
  CycloRing R(F.p(), false);
  CycloInt s = R.zero();
  FieldElem ca = F.mul(c, a);
  for (const FieldElem& x : F.subfield_elements(m)) {
    u64 lam = F.trace_to_prime(F.mul(ca, F.pow(x, BigInt(d))));
    s = R.add(s, R.zeta_pow(i64(lam)));
  }
  return s;
}

CharsumEngine::CharsumEngine(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw InvalidInput("engine needs a field context");
}

const std::unordered_map<u64, u32>& CharsumEngine::ord_map(unsigned m) {
  auto it = ord_maps_.find(m);
  if (it != ord_maps_.end()) return it->second;
  const FieldCtx& F = *ctx_;
  std::unordered_map<u64, u32> om;
  u32 ord = 0;
  for (const FieldElem& e : F.subfield_elements(m)) om[F.index(e)] = ord++;
  return ord_maps_.emplace(m, std::move(om)).first->second;
}

const std::unordered_map<u64, u64>& CharsumEngine::sub_trace(unsigned m) {
  auto it = sub_traces_.find(m);
  if (it != sub_traces_.end()) return it->second;
  const FieldCtx& F = *ctx_;
  std::unordered_map<u64, u64> st;
  for (const FieldElem& e : F.subfield_elements(m))
    st[F.index(e)] = F.subfield_trace_to_prime(e, m);
  return sub_traces_.emplace(m, std::move(st)).first->second;
}

const CharsumEngine::TermTable& CharsumEngine::table_for(unsigned m,
                                                         u64 d_red) {
  auto key = std::make_pair(m, d_red);
  auto it = tables_.find(key);
  if (it != tables_.end()) return it->second;

  const FieldCtx& F = *ctx_;
  const u64 p = F.p();
  TermTable tt;
  tt.m = m;
  tt.d_red = d_red;
  tt.p_m = ipow_u64(p, m);
  tt.hist.assign(tt.p_m * p, 0);

  std::vector<FieldElem> elems = F.subfield_elements(m);
  std::vector<FieldElem> dth(elems.size());
  for (size_t i = 0; i < elems.size(); ++i)
    dth[i] = F.pow(elems[i], BigInt(d_red));

  // lambda is the trace within F_{p^m}: the full-field trace of ca*x^d
  // equals tr_{p^m -> p}(x^d * tr_{N -> p^m}(ca)), so the table rows must
  // bucket by the subfield trace, not its N -> p counterpart.
  const std::unordered_map<u64, u64>& st = sub_trace(m);
  for (u64 ord = 0; ord < tt.p_m; ++ord) {
    const FieldElem& ahat = elems[ord];
    u64* row = &tt.hist[ord * p];
    if (F.is_zero(ahat)) {
      row[0] = tt.p_m;
      continue;
    }
    for (const FieldElem& v : dth)
      ++row[st.at(F.index(F.mul(ahat, v)))];
  }
  return tables_.emplace(key, std::move(tt)).first->second;
}

u64 CharsumEngine::ahat_ord(const TermTable& tt, const FieldElem& ca) {
  const FieldCtx& F = *ctx_;
  FieldElem ahat = F.trace(ca, tt.m);
  return ord_map(tt.m).at(F.index(ahat));
}

CountReport CharsumEngine::count(const std::vector<Term>& terms,
                                 const FieldElem& b) {
  const FieldCtx& F = *ctx_;
  Equation eq{ctx_, terms, b};
  validate_equation(eq);
  const u64 p = F.p();
  const size_t s = terms.size();

  std::vector<const TermTable*> tts;
  BigInt l1 = F.q();
  for (const Term& t : terms) {
    u64 d_red = reduce_exponent(t.d, p, t.m);
    tts.push_back(&table_for(t.m, d_red));
    l1 *= ipow_u64(p, t.m);
  }

  // Work in Z[x]/(x^p - 1); reduce modulo Phi_p once at the end. All
  // histogram coefficients are nonnegative, so the L1 norm q prod p^{m_i}
  // bounds every intermediate coefficient.
  if (l1 >= (BigInt(1) << 126))
    throw SizeExceeded("character sum coefficients exceed the fast path");

  std::vector<i128> acc(p, 0);
  std::vector<i128> prod(p), tmp(p);
  FieldElem nb = F.neg(b);

  const bool fast = F.has_tables();
  u64 q1 = F.q() - 1;
  std::vector<u64> log_a(s, 0), step_m(s, 0);
  if (fast) {
    for (size_t i = 0; i < s; ++i) {
      log_a[i] = F.dlog(terms[i].a);
      step_m[i] = q1 / (tts[i]->p_m - 1);
    }
  }
  u64 log_nb = 0;
  bool b_zero = F.is_zero(b);
  if (fast && !b_zero) log_nb = F.dlog(nb);

  FieldElem c_walk = F.one();
  for (u64 kc = 0; kc <= q1; ++kc) {
    bool c_is_zero = kc == q1;  // final slot handles c = 0
    u64 t0 = 0;
    for (size_t i = 0; i < s; ++i) {
      u64 ord;
      if (c_is_zero) {
        ord = 0;
      } else if (fast) {
        u64 idx = F.index_of_pow((kc + log_a[i]) % q1);
        u64 idx_ahat = F.trace_index(idx, tts[i]->m);
        ord = idx_ahat == 0 ? 0 : 1 + F.log_by_index(idx_ahat) / step_m[i];
      } else {
        ord = ahat_ord(*tts[i], F.mul(c_walk, terms[i].a));
      }
      const u64* row = &tts[i]->hist[ord * p];
      if (i == 0) {
        for (u64 j = 0; j < p; ++j) prod[j] = i128(row[j]);
      } else {
        std::fill(tmp.begin(), tmp.end(), i128(0));
        for (u64 j = 0; j < p; ++j) {
          if (prod[j] == 0) continue;
          for (u64 k = 0; k < p; ++k) {
            u64 idx = j + k;
            if (idx >= p) idx -= p;
            tmp[idx] += prod[j] * i128(row[k]);
          }
        }
        std::swap(prod, tmp);
      }
    }
    if (!c_is_zero && !b_zero) {
      if (fast) {
        u64 idx = F.index_of_pow((kc + log_nb) % q1);
        t0 = F.trace_index(idx, 1);
      } else {
        t0 = F.trace_to_prime(F.mul(c_walk, nb));
      }
    }
    for (u64 j = 0; j < p; ++j) {
      u64 idx = j + t0;
      if (idx >= p) idx -= p;
      acc[idx] += prod[j];
    }
    if (!c_is_zero && !fast) c_walk = F.mul(c_walk, F.generator());
  }

  // Reduce mod Phi_p: rational integer iff coefficients 1..p-2 all equal
  // the top one; the value is then acc[0] - acc[p-1].
  for (u64 j = 1; j + 1 < p; ++j)
    if (acc[j] != acc[p - 1])
      throw NotRationalInteger("character sum total is not rational");
  BigInt total = BigInt(acc[0]) - BigInt(acc[p - 1]);
  BigInt count = exact_count_div(total, F.q());
  return CountReport{count, "charsum", {}, std::nullopt};
}

std::vector<BigInt> CharsumEngine::count_all_b(
    const std::vector<Term>& terms) {
  const FieldCtx& F = *ctx_;
  if (F.q() > 8192 || !F.has_tables())
    throw InvalidInput("full rhs sweep needs an enumeration-scale field");
  Equation eq{ctx_, terms, F.zero()};
  validate_equation(eq);
  const u64 p = F.p();
  const size_t s = terms.size();
  const u64 q = F.q(), q1 = q - 1, half = q1 / 2;

  std::vector<const TermTable*> tts;
  BigInt l1 = q;
  for (const Term& t : terms) {
    tts.push_back(&table_for(t.m, reduce_exponent(t.d, p, t.m)));
    l1 *= ipow_u64(p, t.m);
  }
  if (l1 >= (BigInt(1) << 126))
    throw SizeExceeded("character sum coefficients exceed the fast path");

  std::vector<u64> log_a(s, 0), step_m(s, 0);
  for (size_t i = 0; i < s; ++i) {
    log_a[i] = F.dlog(terms[i].a);
    step_m[i] = q1 / (tts[i]->p_m - 1);
  }

  std::vector<std::vector<i128>> acc(q, std::vector<i128>(p, 0));
  std::vector<i128> prod(p), tmp(p);

  for (u64 kc = 0; kc <= q1; ++kc) {
    bool c_is_zero = kc == q1;
    for (size_t i = 0; i < s; ++i) {
      u64 ord = 0;
      if (!c_is_zero) {
        u64 idx = F.index_of_pow((kc + log_a[i]) % q1);
        u64 idx_ahat = F.trace_index(idx, tts[i]->m);
        ord = idx_ahat == 0 ? 0 : 1 + F.log_by_index(idx_ahat) / step_m[i];
      }
      const u64* row = &tts[i]->hist[ord * p];
      if (i == 0) {
        for (u64 j = 0; j < p; ++j) prod[j] = i128(row[j]);
      } else {
        std::fill(tmp.begin(), tmp.end(), i128(0));
        for (u64 j = 0; j < p; ++j) {
          if (prod[j] == 0) continue;
          for (u64 k = 0; k < p; ++k) {
            u64 idx = j + k;
            if (idx >= p) idx -= p;
            tmp[idx] += prod[j] * i128(row[k]);
          }
        }
        std::swap(prod, tmp);
      }
    }
    // b = 0 row: psi factor is 1.
    for (u64 j = 0; j < p; ++j) acc[0][j] += prod[j];
    if (c_is_zero) {
      // c = 0 contributes prod with psi = 1 to every b.
      for (u64 kb = 0; kb < q1; ++kb) {
        std::vector<i128>& row = acc[F.index_of_pow(kb)];
        for (u64 j = 0; j < p; ++j) row[j] += prod[j];
      }
      continue;
    }
    for (u64 kb = 0; kb < q1; ++kb) {
      u64 idx = F.index_of_pow((kb + half + kc) % q1);
      u64 t0 = F.trace_index(idx, 1);
      std::vector<i128>& row = acc[F.index_of_pow(kb)];
      for (u64 j = 0; j < p; ++j) {
        u64 jj = j + t0;
        if (jj >= p) jj -= p;
        row[jj] += prod[j];
      }
    }
  }

  std::vector<BigInt> out(q, 0);
  for (u64 bi = 0; bi < q; ++bi) {
    const std::vector<i128>& row = acc[bi];
    for (u64 j = 1; j + 1 < p; ++j)
      if (row[j] != row[p - 1])
        throw NotRationalInteger("character sum total is not rational");
    out[bi] = exact_count_div(BigInt(row[0]) - BigInt(row[p - 1]), q);
  }
  return out;
}

CountReport count_via_charsum(const Equation& eq) {
  CharsumEngine engine(eq.ctx);
  return engine.count(eq.terms, eq.b);
}

CycloInt s_j_quadratic(const FieldCtx& F, const CycloRing& R,
                       const FieldElem& c, const FieldElem& a, unsigned m) {
  if (R.conductor() != 4 * F.p())
    throw ConductorMismatch("square-term values live in Z[zeta_4p]");
  FieldElem ahat = F.trace(F.mul(c, a), m);
  const u64 p = F.p();
  if (F.is_zero(ahat)) return R.from_int(ipow_big(p, m));

  int chi = F.quadratic_character(ahat, m);
  unsigned t = m;
  if (t % 2 == 0) {
    int unit = p % 4 == 1 ? -1 : ((t / 2) % 2 == 0 ? -1 : 1);
    return R.from_int(BigInt(unit * chi) * ipow_big(p, t / 2));
  }
  CycloInt root = sqrt_p(R);
  CycloInt val = R.mul_int(root, BigInt(chi) * ipow_big(p, (t - 1) / 2));
  if (p % 4 == 3) val = R.mul(R.zeta_pow(i64(p) * i64(t)), val);
  return val;
}

CountReport count_quadratic(const Equation& eq) {
  validate_equation(eq);
  const FieldCtx& F = *eq.ctx;
  for (const Term& t : eq.terms)
    if (t.d != 2)
      throw HypothesisViolated("every literal exponent must equal 2");

  CycloRing R(F.p(), true);
  CycloInt acc = R.zero();
  FieldElem nb = F.neg(eq.b);

  FieldElem c = F.zero();
  for (u64 idx = 0; idx < F.q(); ++idx) {
    c = F.from_index(idx);
    CycloInt prod = R.zeta_pow(4 * i64(F.trace_to_prime(F.mul(c, nb))));
    for (const Term& t : eq.terms)
      prod = R.mul(prod, s_j_quadratic(F, R, c, t.a, t.m));
    acc = R.add(acc, prod);
  }

  BigInt total = R.to_integer(acc);
  BigInt count = exact_count_div(total, F.q());
  return CountReport{
      count, "quadratic", {"gamma_trace_zero", "prop_star"}, std::nullopt};
}

BigInt n_lambda_quadratic(const FieldCtx& F, const FieldElem& a, unsigned m,
                          u64 lambda) {
  if (!F.divides_degree(m))
    throw NotADivisor("m = " + std::to_string(m) + " does not divide " +
                      std::to_string(F.deg()));
  if (lambda >= F.p()) throw InvalidInput("lambda must lie in [0, p)");
  const u64 p = F.p();
  FieldElem ahat = F.trace(a, m);
  if (F.is_zero(ahat))
    return lambda == 0 ? ipow_big(p, m) : BigInt(0);

  unsigned t = m;
  int chi = F.quadratic_character(ahat, m);
  BigInt main = ipow_big(p, t - 1);
  if (t % 2 == 0) {
    int sgn = p % 4 == 1 ? 1 : ((t / 2) % 2 == 0 ? 1 : -1);
    BigInt half = ipow_big(p, t / 2 - 1);
    if (lambda == 0) return main - (BigInt(p) - 1) * sgn * chi * half;
    return main + sgn * chi * half;
  }
  if (lambda == 0) return main;
  BigInt half = ipow_big(p, (t - 1) / 2);
  FieldElem arg = F.mul(F.from_int(-i64(lambda)), ahat);
  int chi_arg = F.quadratic_character(arg, m);
  if (p % 4 == 1) return main + chi_arg * half;
  int sgn = (t + 1) / 2 % 2 == 0 ? 1 : -1;
  return main + sgn * chi_arg * half;
}

}  // namespace diagcount
