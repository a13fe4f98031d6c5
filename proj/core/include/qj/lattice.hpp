#ifndef QJ_LATTICE_HPP
#define QJ_LATTICE_HPP

#include "qj/quadunit.hpp"

namespace qj {

// F_q-lattices attached to the unit f.
//
// Lam(e) = { P in F_q[T] : ||P f|| < q^(-e) }, i.e. the coefficients of
// P f at T^-1 .. T^-e all vanish.  Writing e = N d + l (0 <= l < d), the
// structural description says Lam(e) is spanned by the polynomials
// T^j Q_n with n > N (0 <= j <= d-1) together with the partial block
// T^j Q_N (0 <= j <= d-1-l); each generator's error is known exactly:
// ||T^j Q_n f|| = q^(j-(n+1)d).
//
// Rescaling by sqrtD f^-N turns Lam(e) into a sharp approximation of the
// monomial ideal spanned by f T^j (j <= d-1-l) and f^i T^j (i >= 2): the
// generator-wise gap is |T^j fstar^{n+1} f^-N| and peaks at q^-(2Nd+l+1).

// Kernel route: Gaussian elimination on the vanishing conditions, then a
// canonical degree-echelon form (one monic generator per degree, each
// reduced against all lower-degree generators).  Unique per subspace.
// The Laurent overload accepts any series x (including elements of k,
// whose lattices are eventually all of a principal ideal of F_q[T]).
std::vector<Poly> lam_bruteforce(const Laurent& x, long long e, int deg_bound);
std::vector<Poly> lam_bruteforce(const QuadUnit& u, long long e, int deg_bound);

// Block route: the T^j Q_n spanning set for e = Nd + l, same canonical
// echelon form, so equal subspaces compare as equal vectors.
std::vector<Poly> lam_structural(const QuadUnit& u, long long e, int deg_bound);

// Canonical degree-echelon form of a polynomial spanning set.
std::vector<Poly> degree_echelon(std::vector<Poly> gens);

// Greedy ultrametric triangularization: monic leading coefficients, one
// generator per leading exponent, sorted by decreasing exponent.
// Generators that collapse below their windows are dropped.
std::vector<Laurent> triangular_basis(std::vector<Laurent> gens);

// Distance witness: subtract matching-lead generators until the lead has
// no match (exact distance q^lead) or the value sinks below its window
// (distance bounded by the window).  `tri` must be triangular.
Laurent reduce_against(Laurent x, const std::vector<Laurent>& tri);

// One generator of the rescaled lattice sqrtD f^-N Lam(Nd+l).
struct RenormGen {
  int n = 0, j = 0;   // source polynomial T^j Q_n
  Laurent val;        // sqrtD f^-N T^j Q_n
  Laurent target;     // T^j f^(n-N+1), the monomial it approximates
  AbsValue dist;      // |val - target| = q^(j-(n+1+N)d), read off the windows
};

// Rescaled lattice generators for blocks n = N .. nmax.  Each generator
// carries its monomial target and the exact distance to it; the largest
// distance over the basis is q^-(2Nd+l+1), attained at n = N, j = d-1-l.
std::vector<RenormGen> renorm_basis(const QuadUnit& u, int N, int l, int nmax);

// Laurent realizations of the monomial ideal spanned by f T^j
// (j <= d-1-l) and f^i T^j (2 <= i <= imax, j <= d-1).
std::vector<Laurent> ideal_model_basis(const QuadUnit& u, int l, int imax);

// max over generators of both sets of the distance to the other lattice
// (ultrametric Hausdorff bound at the generators' shared resolution).
AbsValue hausdorff_bound(const std::vector<Laurent>& A,
                         const std::vector<Laurent>& B);

// Near-stability of the rescaled lattice under multiplication:
// alpha * Lam^ sits inside Lam^ up to |alpha| * delta, delta = q^-(2Nd+l).
// Only products that stay inside the generated window are tested.
struct ShiftCheck {
  AbsValue worst;     // largest residual over tested products
  AbsValue allowed;   // |alpha| * delta
  int tested = 0;
  bool ok = false;
};
ShiftCheck approx_action_check(const QuadUnit& u, int N, int l,
                               const Laurent& alpha, int nmax);

} // namespace qj

#endif
