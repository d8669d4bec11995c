#include "diagcount/oracle.hpp"

#include <unordered_map>

namespace diagcount {

namespace {

// Per-term value list a x^d over the literal domain F_{p^m}, as packed
// indices. No exponent reduction on purpose.
std::vector<u64> term_values(const FieldCtx& F, const Term& t) {
  std::vector<u64> vals;
  for (const FieldElem& x : F.subfield_elements(t.m)) {
    FieldElem v = F.mul(t.a, F.pow(x, BigInt(t.d)));
    vals.push_back(F.index(v));
  }
  return vals;
}

void check_budget(const FieldCtx& F, const std::vector<Term>& terms,
                  u64 budget) {
  u128 total = 1;
  for (const Term& t : terms) {
    total *= ipow_u64(F.p(), t.m);
    if (total > budget)
      throw BudgetExceeded("enumeration domain exceeds budget " +
                           std::to_string(budget));
  }
}

}  // namespace

BigInt brute_count(const Equation& eq, u64 budget) {
  validate_equation(eq);
  const FieldCtx& F = *eq.ctx;
  check_budget(F, eq.terms, budget);
  const size_t s = eq.terms.size();

  if (s <= 3) {
    std::vector<std::vector<FieldElem>> vals;
    for (const Term& t : eq.terms) {
      std::vector<FieldElem> v;
      for (const FieldElem& x : F.subfield_elements(t.m))
        v.push_back(F.mul(t.a, F.pow(x, BigInt(t.d))));
      vals.push_back(std::move(v));
    }
    u64 hits = 0;
    if (s == 1) {
      for (const FieldElem& v0 : vals[0])
        if (v0 == eq.b) ++hits;
    } else if (s == 2) {
      for (const FieldElem& v0 : vals[0]) {
        FieldElem need = F.sub(eq.b, v0);
        for (const FieldElem& v1 : vals[1])
          if (v1 == need) ++hits;
      }
    } else {
      for (const FieldElem& v0 : vals[0]) {
        FieldElem r0 = F.sub(eq.b, v0);
        for (const FieldElem& v1 : vals[1]) {
          FieldElem need = F.sub(r0, v1);
          for (const FieldElem& v2 : vals[2])
            if (v2 == need) ++hits;
        }
      }
    }
    return BigInt(hits);
  }

  // Convolve value histograms term by term; finish against the last term's
  // multiset so only b's fiber is materialized.
  std::unordered_map<u64, u64> acc;
  acc[F.index(F.zero())] = 1;
  for (size_t i = 0; i + 1 < s; ++i) {
    std::vector<u64> vals = term_values(F, eq.terms[i]);
    std::unordered_map<u64, u64> next;
    for (const auto& [idx, cnt] : acc) {
      FieldElem base = F.from_index(idx);
      for (u64 v : vals) next[F.index(F.add(base, F.from_index(v)))] += cnt;
    }
    acc = std::move(next);
  }
  std::unordered_map<u64, u64> last;
  for (u64 v : term_values(F, eq.terms[s - 1])) ++last[v];
  BigInt hits = 0;
  for (const auto& [idx, cnt] : acc) {
    FieldElem need = F.sub(eq.b, F.from_index(idx));
    auto it = last.find(F.index(need));
    if (it != last.end()) hits += BigInt(cnt) * it->second;
  }
  return hits;
}

std::vector<BigInt> brute_count_all_b(const FieldCtx& F,
                                      const std::vector<Term>& terms,
                                      u64 budget) {
  if (F.q() > (u64(1) << 22))
    throw InvalidInput("full histogram requested over a field too large");
  check_budget(F, terms, budget);
  std::vector<BigInt> acc(F.q(), 0);
  acc[F.index(F.zero())] = 1;
  for (const Term& t : terms) {
    std::vector<u64> vals = term_values(F, t);
    std::vector<BigInt> next(F.q(), 0);
    for (u64 idx = 0; idx < F.q(); ++idx) {
      if (acc[idx] == 0) continue;
      FieldElem base = F.from_index(idx);
      for (u64 v : vals) {
        u64 j = F.index(F.add(base, F.from_index(v)));
        next[j] += acc[idx];
      }
    }
    acc = std::move(next);
  }
  return acc;
}

u64 brute_trace_count(const FieldCtx& F, const FieldElem& a, u64 d,
                      unsigned m, u64 lambda) {
  if (lambda >= F.p()) throw InvalidInput("lambda must lie in [0, p)");
  u64 hits = 0;
  for (const FieldElem& x : F.subfield_elements(m)) {
    FieldElem v = F.mul(a, F.pow(x, BigInt(d)));
    if (F.trace_to_prime(v) == lambda) ++hits;
  }
  return hits;
}

unsigned bilinear_kernel_dim(const FieldCtx& F, const FieldElem& a,
                             unsigned t, unsigned r) {
  if (!F.divides_degree(2 * t))
    throw NotADivisor("2t = " + std::to_string(2 * t) +
                      " does not divide " + std::to_string(F.deg()));
  if (r == 0 || t % r != 0)
    throw NotADivisor("r = " + std::to_string(r) + " does not divide t = " +
                      std::to_string(t));
  const unsigned n = 2 * t;
  const u64 pr = ipow_u64(F.p(), r);

  // Power basis of F_{p^{2t}} over F_p and its image under x -> x^{p^r}.
  FieldElem beta = F.subfield_generator(n);
  std::vector<FieldElem> bas(n), frob(n);
  FieldElem cur = F.one();
  for (unsigned i = 0; i < n; ++i) {
    bas[i] = cur;
    frob[i] = F.pow(cur, BigInt(pr));
    cur = F.mul(cur, beta);
  }

  // B(x, y) = tr(a (x^{p^r} y + x y^{p^r})) on that basis.
  std::vector<std::vector<u64>> M(n, std::vector<u64>(n, 0));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      FieldElem w = F.add(F.mul(frob[i], bas[j]), F.mul(bas[i], frob[j]));
      M[i][j] = F.trace_to_prime(F.mul(a, w));
    }

  // Row reduction mod p.
  const u64 p = F.p();
  unsigned rank = 0;
  for (unsigned col = 0; col < n && rank < n; ++col) {
    unsigned piv = rank;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(M[piv], M[rank]);
    u64 inv = powmod(M[rank][col], p - 2, p);
    for (unsigned j = 0; j < n; ++j) M[rank][j] = mulmod(M[rank][j], inv, p);
    for (unsigned i = 0; i < n; ++i) {
      if (i == rank || M[i][col] == 0) continue;
      u64 f = M[i][col];
      for (unsigned j = 0; j < n; ++j)
        M[i][j] = (M[i][j] + p - mulmod(f, M[rank][j], p)) % p;
    }
    ++rank;
  }
  unsigned dim = n - rank;
  if (dim % 2 != 0)
    throw OddDimension("bilinear radical has odd dimension " +
                       std::to_string(dim));
  return dim;
}

}  // namespace diagcount
