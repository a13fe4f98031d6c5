#ifndef QJ_ALGREC_HPP
#define QJ_ALGREC_HPP

#include <optional>

#include "qj/laurent.hpp"

namespace qj {

// A polynomial dependence sum_i c_i(T) x^i = 0 certified on a
// coefficient window.  Coefficients live in F_q[T], so the hunt is
// exact nullspace computation over F_q -- no rounding anywhere.
struct AlgRelation {
  std::vector<Poly> coeffs;    // c_0 ... c_D with c_D != 0, c_D monic
  int deg_bound = 0;           // coefficient-degree bound B used
  long long residual_exp = 0;  // |sum c_i x^i| <= q^residual_exp
  long long found_prec = 0;    // window floor of x at search time
};

// Minimal relation for x: degree D ascends from 1, and for each D the
// coefficient bound ascends from 0 to B_max, so the first hit is the
// canonical (D, B)-minimal one.  Every candidate system is required to
// be overdetermined by a fixed safety margin; pairs the window cannot
// overdetermine are skipped, and if not even (1, 0) fits, throws
// precision_error.  Returns nullopt when no affordable pair admits a
// relation.
std::optional<AlgRelation> minpoly_search(const Laurent& x, int d_max,
                                          int b_max);

// Evaluate the relation against a recomputation of its subject (same
// series, deeper window).  True iff no determined coefficient of
// sum c_i x2^i is nonzero.
bool verify_relation(const AlgRelation& rel, const Laurent& x2);

} // namespace qj

#endif
