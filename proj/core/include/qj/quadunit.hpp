#ifndef QJ_QUADUNIT_HPP
#define QJ_QUADUNIT_HPP

#include <deque>
#include <mutex>

#include "qj/laurent.hpp"

namespace qj {

// The large root f of X^2 - a(T) X - b, a monic of degree d >= 1,
// b a nonzero scalar.  |f| = q^d and the conjugate a - f has |a-f| = q^-d,
// so f is a unit of the T-degree filtration: truncations of its expansion
// are extremely well approximated by polynomial ratios Q_{n+1}/Q_n.
//
// The expansion is found by Newton iteration from X0 = a; the instance
// keeps enough window (prec + 2d coefficients) that the conjugate and
// the square-root of the discriminant retain `prec` known coefficients.
class QuadUnit {
public:
  QuadUnit(FieldPtr F, Poly a, fe_t b, long long prec);

  const FieldPtr& field() const { return F_; }
  const Poly& a() const { return a_; }
  fe_t b() const { return b_; }
  int d() const { return d_; }
  long long prec() const { return prec_; }
  const Poly& disc() const { return D_; }       // a^2 + 4b
  const Laurent& f() const { return f_; }       // window prec + 2d
  const Laurent& fstar() const { return fs_; }  // a - f
  const Laurent& sqrtD() const { return sD_; }  // 2f - a; exact a in char 2

  // Denominator sequence: Q_0 = 1, Q_1 = a, Q_{n+1} = a Q_n + b Q_{n-1}.
  // Monic of degree n*d.  Memoized; extending the table is guarded.
  const Poly& Q(std::size_t n) const;

  // ||T^l Q_n f|| with its witness: the nearest polynomial is T^l Q_{n+1}
  // and the distance is exactly q^(l-(n+1)d).  Throws consistency_error on
  // any mismatch and precision_error when the window cannot reach the
  // deciding coefficient.
  struct ErrorWitness {
    AbsValue dist;
    Poly nearest;
  };
  ErrorWitness error(std::size_t n, int l) const;

  // |sqrtD * Q_n - (f^{n+1} - fstar^{n+1})| upper bound; the difference is
  // zero, so the bound reflects only the working window.  Used as a
  // cross-check that the recurrence and the expansion agree.
  AbsValue binet_residual_bound(std::size_t n) const;

private:
  FieldPtr F_;
  Poly a_;
  fe_t b_;
  int d_;
  long long prec_;
  Poly D_;
  Laurent f_, fs_, sD_;
  mutable std::deque<Poly> qtab_;
  mutable std::mutex qmu_;
};

} // namespace qj

#endif
