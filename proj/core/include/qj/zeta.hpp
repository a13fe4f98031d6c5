#ifndef QJ_ZETA_HPP
#define QJ_ZETA_HPP

#include "qj/ideals.hpp"
#include "qj/lattice.hpp"

namespace qj {

// Zeta values at exponents q^n - 1 of an F_q-lattice given by a monic
// ladder: elems[j] is monic with |elems[j]| = q^leads[j], the leads
// strictly increasing from 0.  "Monic" lattice elements decompose into
// layers lambda = elems[j] + (span of earlier elems), and
//
//   zeta = sum_j Omega_j,   Omega_j = sum over layer j of lambda^(1-q^n),
//
// with Omega_0 = elems[0]^(1-q^n).  Each layer is computed two ways: a
// brute-force sum over q^j translates, and the additive-polynomial route
// (the vanishing polynomial e_W of the Frobenius image of the span plus a
// Moore-matrix interpolation), which is the one that scales.
struct ZetaLadder {
  std::vector<Laurent> elems;
  std::vector<long long> leads;
};

// ladder of a fractional ideal: g^-1 a via its normalized basis
ZetaLadder ladder_from_ideal(const Order& O, const IdealHNF& a,
                             std::size_t count);

// ladder of the approximation lattice of level e, rescaled by
// sqrt(D) f^-(N+1) so the leads start at 0 (e = N d + l)
ZetaLadder ladder_from_lattice(const QuadUnit& u, long long e,
                               std::size_t count);

// layer sum via the additive kernel; `cap` clamps Frobenius windows
Laurent omega_layer(const ZetaLadder& lad, int n, std::size_t j,
                    long long cap);
// the same sum term by term (q^j inversions; guarded by resource_error)
Laurent omega_layer_direct(const ZetaLadder& lad, int n, std::size_t j,
                           long long cap);
// closed form of the first layer when elems[0] = 1
Laurent omega1_closed(const Laurent& alpha, int n, long long cap);

// full zeta value at q^n - 1: layers while q^(-leads[j](q^n-1)) >=
// q^(-prec), then a tail window; throws domain_error if the ladder is too
// short to reach the requested precision
Laurent zeta_value(const ZetaLadder& lad, int n, long long prec);

Laurent zeta_ideal(const Order& O, const IdealHNF& a, int n, long long prec);
Laurent zeta_eps(const QuadUnit& u, long long e, int n, long long prec);

} // namespace qj

#endif
