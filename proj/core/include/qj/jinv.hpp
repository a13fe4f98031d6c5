#ifndef QJ_JINV_HPP
#define QJ_JINV_HPP

#include "qj/zeta.hpp"

namespace qj {

// Modular invariants assembled from the zeta values z1 = zeta(q-1) and
// z2 = zeta(q^2-1) of a lattice or ideal (monic sums):
//
//   J = (T^(q^2) - T)/(T^q - T)^(q+1) * z2 / z1^(q+1)
//   j = 1 / (1/(T^q - T) - J)
//     = (T^q - T)^(q+2) * z1^(q+1) / Delta
//   Delta = (T^q - T)^(q+1) z1^(q+1) - (T^q - T)(T^(q^2) - T) z2
//
// Both J and j are unchanged when (z1, z2) is rescaled to
// (c^(1-q) z1, c^(1-q^2) z2), so they do not depend on how the source
// lattice was normalized.  The denominator vanishes identically
// (j = infinity) exactly when the source series lies in F_q(T).

struct JValue {
  // finite: the invariant itself.  infinite: a window marker recording
  // to what depth the denominator was checked to vanish.
  Laurent value;
  bool infinity = false;
};

// T^(q^k) - T as an exact series, k = 1 or 2
Laurent tqk_minus_t(const FieldPtr& F, int k);

// largest internal zeta window the layer engine can certify before its
// exponent arithmetic could overflow; j computations clamp their
// internal depth here, and callers sizing a unit's expansion for a full
// pipeline should budget at least this many coefficients plus slack
long long zeta_prec_cap(const FieldPtr& F);

// Delta.  (T^q - T)^q - (T^(q^2) - T) = -(T^q - T) exactly, so the
// leading terms of the two halves cancel and |Delta| is set by how far
// the ladder's second element sits from a polynomial: |Delta| = q^(2q)
// when that element's fractional part has size >= 1, and smaller --
// sometimes by many orders -- when it is a polynomial plus a small tail
Laurent delta_from_zeta(const Laurent& z1, const Laurent& z2);

// the ratio J (second route, used for cross-checks)
Laurent j_ratio(const Laurent& z1, const Laurent& z2);

// assemble j; throws precision_error when z1 is zero to precision
JValue j_from_zeta(const Laurent& z1, const Laurent& z2);

// epsilon route at eps = q^-(Nd+l) over the rescaled lattice ladder.
// Here and in j_ideal, `prec` asks for that many coefficients past the
// lead; internal zeta depth grows as needed (within the engine's
// exponent ceiling) and the returned window is honest either way.
JValue j_eps(const QuadUnit& u, int N, int l, long long prec);

// brute-force route for an arbitrary series x: enumerate the lattice of
// approximations of degree <= deg_bound with error below q^-eps_exp,
// normalize by its smallest element, and sum.  The only route that can
// see x in F_q(T), where the invariant is infinite.
JValue j_element(const Laurent& x, long long eps_exp, int deg_bound,
                 long long prec);

// ideal route
JValue j_ideal(const Order& O, const IdealHNF& a, long long prec);

// one residue class of the full invariant: the ideal-route value for
// a_i is the canonical one, certified against the epsilon route at
// l = d-1-i
struct JqtValue {
  int i = 0;
  JValue ideal;
  JValue eps;
  // routes certified equal above this exponent; LLONG_MAX when both
  // routes reported infinity and no coefficient was certified at all
  long long agreed_exp = 0;
};

struct JqtReport {
  std::vector<JqtValue> values;
  int n_used = 0;                     // epsilon route evaluated at N = n_used
  long long max_disagreement_exp = 0; // worst agreed_exp over the classes
};

// the d-valued quantum invariant by both routes.  With n_max < 0 the
// level starts at prec/(2d)+1 and doubles until the routes agree on
// every coefficient both have determined; an explicit n_max pins the
// level.  Throws consistency_error if agreement is never reached.
JqtReport jqt(const QuadUnit& u, long long prec, int n_max = -1);

// product of j over the translated ideal family {b a_i}, i = 0..d-1
Laurent norm_family(const Order& O, const IdealHNF& b, long long prec);

// norm of the invariant: the product over the plain family {a_i}
Laurent norm_jqt(const QuadUnit& u, long long prec);

} // namespace qj

#endif
