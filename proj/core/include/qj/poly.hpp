#ifndef QJ_POLY_HPP
#define QJ_POLY_HPP

#include <string>
#include <vector>

#include "qj/field.hpp"

namespace qj {

// Sentinel degree of the zero polynomial ("minus infinity").
constexpr int kNegInfDeg = INT32_MIN;

// Dense univariate polynomial over F_q, coefficients ascending.
// Canonical form: no stored trailing (high-degree) zero coefficients;
// the zero polynomial stores nothing.  The same type serves for
// polynomials in T and for polynomials in f (the coefficient ring of
// the order treated in ideals.hpp); the variable is contextual.
class Poly {
public:
  Poly() = default;
  explicit Poly(FieldPtr F) : F_(std::move(F)) {}
  Poly(FieldPtr F, std::vector<fe_t> coeffs);

  static Poly zero(FieldPtr F) { return Poly(std::move(F)); }
  static Poly constant(FieldPtr F, fe_t c);
  static Poly variable(FieldPtr F); // the monomial X
  static Poly monomial(FieldPtr F, int deg, fe_t c = 1);

  const FieldPtr& field() const { return F_; }
  const std::vector<fe_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int deg() const { return c_.empty() ? kNegInfDeg : static_cast<int>(c_.size()) - 1; }
  fe_t lead() const { return c_.empty() ? 0 : c_.back(); }
  fe_t coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[i];
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(fe_t c) const;
  Poly shifted(int k) const; // multiply by X^k, k >= 0
  Poly monic() const;        // scale so the leading coefficient is 1

  // Euclidean division: *this = q * d + r with deg r < deg d.
  // Throws domain_error when d is zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  bool divides(const Poly& multiple) const;

  Poly derivative() const;
  Poly pow(std::uint32_t e) const;

  fe_t eval(fe_t x) const;
  // Evaluate after mapping every coefficient through `lift` into the field
  // of x (used with subfield embeddings).
  template <typename Map>
  fe_t eval_mapped(const Field& big, fe_t x, Map lift) const {
    fe_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = big.add(big.mul(acc, x), lift(c_[i]));
    return acc;
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // "d2,d1,d0" style is not used; the text form is ascending digit strings
  // joined by commas: "c0,c1,...,cdeg".  Zero polynomial prints as "0".
  std::string to_string() const;
  static Poly parse(FieldPtr F, const std::string& s);

private:
  void trim();
  FieldPtr F_;
  std::vector<fe_t> c_;
};

Poly gcd(const Poly& a, const Poly& b); // monic gcd, gcd(0,0) = 0
// g = u*a + v*b with g the monic gcd.
struct Egcd {
  Poly g, u, v;
};
Egcd egcd(const Poly& a, const Poly& b);

bool is_squarefree(const Poly& a);

} // namespace qj

#endif
