#ifndef QJ_IDEALS_HPP
#define QJ_IDEALS_HPP

#include <map>
#include <optional>

#include "qj/quadunit.hpp"

namespace qj {

// The order O = F_q[f, fT, ..., fT^(d-1)], a free rank-d module over
// R = F_q[f] with basis e_0 = 1, e_i = f T^i (1 <= i < d).
//
// An element is stored by its R-coordinates: rc[0] is a polynomial in f
// multiplying 1, and rc[j] (j >= 1) a polynomial in f multiplying f T^j.
// Every monomial f^i T^j (i >= 1, j < d) has a distinct size q^(id+j), so
// leading exponents, leading coefficients and the whole ultrametric
// structure are exact polynomial data -- no series windows involved.
struct RingElem {
  std::vector<Poly> rc;
  bool is_zero() const {
    for (const Poly& p : rc)
      if (!p.is_zero()) return false;
    return true;
  }
  bool operator==(const RingElem& o) const { return rc == o.rc; }
  bool operator!=(const RingElem& o) const { return !(*this == o); }
};

// Arithmetic context for O.  Holds a reference to the unit; keep the
// QuadUnit alive for the lifetime of the Order.
class Order {
public:
  explicit Order(const QuadUnit& u);

  const QuadUnit& unit() const { return u_; }
  const FieldPtr& field() const { return F_; }
  int d() const { return d_; }

  RingElem zero() const;
  RingElem one() const;
  // c f^i T^j with i >= 1, 0 <= j < d (or the constant c when i = j = 0)
  RingElem monomial(int i, int j, fe_t c = 1) const;
  RingElem from_rcoords(std::vector<Poly> rc) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem scale(const RingElem& a, fe_t c) const;
  // multiply by r(f), an R-scalar
  RingElem scale_poly(const RingElem& a, const Poly& r) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;

  // size exponent: |v| = q^lead_exp; throws domain_error on zero
  long long lead_exp(const RingElem& a) const;
  fe_t lead_coeff(const RingElem& a) const;

  // series value of the element under f -> its expansion
  Laurent to_laurent(const RingElem& a) const;

  // v = X(T) + Y(T) f
  std::pair<Poly, Poly> kform(const RingElem& a) const;
  // inverse direction; nullopt when X + Y f does not lie in O
  std::optional<RingElem> from_kform(const Poly& X, const Poly& Y) const;

private:
  RingElem reduce_monomial(int fpow, int tpow) const;
  std::pair<Poly, Poly> fpow_T(int i) const; // f^i = u_i(T) + v_i(T) f

  const QuadUnit& u_;
  FieldPtr F_;
  int d_;
  std::vector<std::vector<RingElem>> tab_; // e_i e_j, 1 <= i, j < d
};

// Integral O-ideal in row-style Hermite normal form over R = F_q[f]:
// row i has its first nonzero entry (a monic pivot) at column i, and the
// entries above each pivot are reduced to lower degree.  The form is
// canonical, so ideal equality is matrix equality.
class IdealHNF {
public:
  // R-module closure of explicit row vectors
  static IdealHNF from_module_gens(const Order& O, std::vector<RingElem> gens);
  // ideal generated by `gens`: closes under the module basis first
  static IdealHNF from_ideal_gens(const Order& O,
                                  const std::vector<RingElem>& gens);
  static IdealHNF principal(const Order& O, const RingElem& v);
  static IdealHNF whole(const Order& O);
  // a_i = (f, fT, ..., fT^i), 0 <= i <= d-1
  static IdealHNF family(const Order& O, int i);

  IdealHNF mul(const Order& O, const IdealHNF& other) const;
  IdealHNF pow(const Order& O, int e) const;

  // dim_Fq(O / ideal) = sum of pivot degrees; throws domain_error if the
  // module has rank < d
  long long idx() const;
  std::vector<RingElem> basis(const Order& O) const;
  const std::vector<std::vector<Poly>>& rows() const { return m_; }

  bool operator==(const IdealHNF& o) const { return m_ == o.m_; }
  bool operator!=(const IdealHNF& o) const { return !(*this == o); }

private:
  std::vector<std::vector<Poly>> m_;
};

// Triangular-by-size F_q-basis of { v in a : |v| <= q^max_lead }, one
// monic element per occurring size.  Verified complete by counting the
// missing sizes against idx(a); throws consistency_error on mismatch
// when max_lead is large enough for the count to be conclusive.
std::map<long long, RingElem> lead_slots(const Order& O, const IdealHNF& a,
                                         long long max_lead);

// the monic element of minimal size (the "g" of the normalized basis)
RingElem minimal_generator(const Order& O, const IdealHNF& a);

// g^-1 a as series values: a ladder of monic elements with leads[0] = 0.
struct NormalizedBasis {
  RingElem g;                   // minimal generator of a
  Laurent gen;                  // its series value
  std::vector<long long> leads; // exponent ladder (strictly increasing)
  std::vector<Laurent> elems;   // values, elems[k] has size q^leads[k]
  long long alpha1 = 0;         // leads[1], the first nontrivial size
};
NormalizedBasis normalized_basis(const Order& O, const IdealHNF& a,
                                 std::size_t count);

// monic v with (v) = a, if one exists within the forced size |v| = q^idx(a)
std::optional<RingElem> principal_generator(const Order& O, const IdealHNF& a);

} // namespace qj

#endif
