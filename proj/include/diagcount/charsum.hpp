#pragma once

#include <map>
#include <unordered_map>

#include "diagcount/cyclotomic.hpp"
#include "diagcount/equation.hpp"

namespace diagcount {

// S(c) = sum over x in F_{p^m} of zeta_p^{tr_{p^N -> p}(c a x^d)}, by
// literal enumeration, in Z[zeta_p]. The exponent is used as given.
CycloInt s_i_enumerated(const FieldCtx& ctx, const FieldElem& c,
                        const FieldElem& a, u64 d, unsigned m);

// Orthogonality counter:
//   N = q^{-1} sum_{c in F_q} psi_c(-b) prod_i S_i(c)
// where psi_c is the additive character zeta_p^{tr(c .)}. S_i(c) depends
// on c only through tr_{p^N -> p^{m_i}}(c a_i), so per-(m, reduced d)
// histogram tables make each S_i a row lookup. The engine caches those
// tables; reuse one engine across many equations over the same field.
class CharsumEngine {
 public:
  explicit CharsumEngine(FieldCtxPtr ctx);

  CountReport count(const std::vector<Term>& terms, const FieldElem& b);

  // Counts for every right-hand side at once, indexed by packed b.
  // Requires an enumeration-scale field (q <= 8192).
  std::vector<BigInt> count_all_b(const std::vector<Term>& terms);

 private:
  struct TermTable {
    unsigned m;
    u64 d_red;
    u64 p_m;
    // hist[ord * p + lambda], ord the subfield ordinal of ahat
    std::vector<u64> hist;
  };

  const TermTable& table_for(unsigned m, u64 d_red);
  const std::unordered_map<u64, u32>& ord_map(unsigned m);
  // packed index of a subfield element -> tr_{p^m -> p} of it
  const std::unordered_map<u64, u64>& sub_trace(unsigned m);
  u64 ahat_ord(const TermTable& tt, const FieldElem& ca);

  FieldCtxPtr ctx_;
  std::map<std::pair<unsigned, u64>, TermTable> tables_;
  std::map<unsigned, std::unordered_map<u64, u32>> ord_maps_;
  std::map<unsigned, std::unordered_map<u64, u64>> sub_traces_;
};

CountReport count_via_charsum(const Equation& eq);

// Closed value of S(c) for a square term a x^2 on F_{p^m}, in Z[zeta_4p]:
// p^m when ahat = tr_{p^N -> p^m}(c a) = 0, otherwise a fourth-root-of-
// unity multiple of chi(ahat) p^{m/2} (resp. p^{(m-1)/2} sqrt(p) for odd
// m), with the unit fixed by p mod 4 and m.
CycloInt s_j_quadratic(const FieldCtx& ctx, const CycloRing& ring,
                       const FieldElem& c, const FieldElem& a, unsigned m);

// Orthogonality count with every S_j replaced by its closed value; needs
// every literal exponent equal to 2. Works for odd and even m alike.
CountReport count_quadratic(const Equation& eq);

// #{ x in F_{p^m} : tr_{p^N -> p}(a x^2) = lambda } in closed form.
BigInt n_lambda_quadratic(const FieldCtx& ctx, const FieldElem& a,
                          unsigned m, u64 lambda);

}  // namespace diagcount
