#ifndef QJ_LAURENT_HPP
#define QJ_LAURENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qj/poly.hpp"

namespace qj {

// Absolute value in q^Z union {0}: either zero or q^e.
struct AbsValue {
  bool zero = true;
  long long e = 0;

  static AbsValue null() { return AbsValue{true, 0}; }
  static AbsValue pw(long long e) { return AbsValue{false, e}; }

  bool operator==(const AbsValue& o) const {
    return zero == o.zero && (zero || e == o.e);
  }
  bool operator!=(const AbsValue& o) const { return !(*this == o); }
  bool operator<(const AbsValue& o) const {
    if (zero) return !o.zero;
    if (o.zero) return false;
    return e < o.e;
  }
  bool operator<=(const AbsValue& o) const { return *this < o || *this == o; }
  std::string to_string() const;
};

// An element of F_q((1/T)) known through a finite window of coefficients.
//
//   value = c_[0] T^lead + c_[1] T^(lead-1) + ... + (tail)
//
// `unknown` is the largest exponent whose coefficient is NOT determined;
// every stored coefficient sits at an exponent > unknown.  A value with
// unknown == kExact is known exactly (its tail is exactly zero): sums and
// products of polynomials in T and 1/T stay exact, while inversions,
// square roots and Frobenius powers of inexact inputs propagate windows.
//
// Representations:
//   exact zero        : no coefficients, unknown == kExact
//   zero to precision : no coefficients, unknown == u   (|value| <= q^u)
//   nonzero           : c_[0] != 0; if inexact the stored window is dense
//                       over exponents lead .. unknown+1
class Laurent {
public:
  static constexpr long long kExact = INT64_MIN;

  Laurent() = default;

  static Laurent zero(FieldPtr F);
  static Laurent zero_to_prec(FieldPtr F, long long unknown);
  // exact monomial c*T^e
  static Laurent monomial(FieldPtr F, long long e, fe_t c);
  // exact value of a polynomial in T
  static Laurent from_poly(const Poly& a);
  // window constructor: coefficients descending from exponent `lead`;
  // unknown defaults to lead - #coeffs (i.e. exactly the given window)
  static Laurent window(FieldPtr F, long long lead, std::vector<fe_t> coeffs,
                        long long unknown);

  const FieldPtr& field() const { return F_; }
  bool is_exact() const { return unknown_ == kExact; }
  bool is_zero_exact() const { return c_.empty() && is_exact(); }
  bool is_zero_to_prec() const { return c_.empty() && !is_exact(); }
  // true when the sign of |value| is decided (nonzero, or exactly zero)
  bool distinguishable() const { return !c_.empty() || is_exact(); }

  long long lead_exp() const;    // throws domain_error on empty
  fe_t lead_coeff() const;       // throws domain_error on empty
  long long unknown_exp() const { return unknown_; }
  // number of known coefficients for inexact nonzero values
  long long prec() const;

  AbsValue abs() const;          // throws precision_error if undecidable
  AbsValue abs_bound() const;    // upper bound, never throws

  bool coeff_known(long long e) const { return is_exact() || e > unknown_; }
  fe_t coeff_at(long long e) const; // throws precision_error when unknown

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent scaled(fe_t c) const;
  Laurent shifted(long long e) const;  // multiply by T^e

  // Inverse. `prec_hint` sets the result window when *this is exact and
  // not a monomial (for inexact inputs the window carries over, optionally
  // clamped by the hint).
  Laurent inv(long long prec_hint = 0) const;
  // Square root on the canonical branch: the leading coefficient of the
  // result is Field::sqrt of the input's leading coefficient (char 2: the
  // unique root).  Throws domain_error when no root exists in F_q((1/T)).
  Laurent sqrt(long long prec_hint = 0) const;
  // value^(p^s); `cap` clamps the (rapidly widening) result window.
  Laurent frobenius_pow(std::uint32_t s, long long cap) const;
  // small non-negative integer power by repeated squaring
  Laurent pow_int(std::uint32_t n) const;

  // Forget coefficients beyond the first `window` (no-op if fewer known).
  Laurent truncated(long long window) const;

  // Split into (polynomial part, distance to it).  The distance is the
  // absolute value of the fractional tail; it is exact when a nonzero
  // fractional coefficient is visible or the value is exact, otherwise a
  // precision_error is thrown.
  std::pair<Poly, AbsValue> nearest_poly() const;
  // ||value|| < q^(-e)?  Decidable from the window alone; throws
  // precision_error when the window does not reach exponent -e.
  bool frac_vanishes_through(long long e) const;

  // representation equality (value and window)
  bool operator==(const Laurent& o) const {
    return lead_ == o.lead_ && c_ == o.c_ && unknown_ == o.unknown_;
  }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // canonical text form  T^e:[c0,c1,...]:prec=P   (zero: "0", bounded
  // zero: "0:O(T^u)")
  std::string to_canonical() const;
  static Laurent parse_canonical(FieldPtr F, const std::string& s);

private:
  void normalize();
  FieldPtr F_;
  long long lead_ = 0;
  std::vector<fe_t> c_;
  long long unknown_ = kExact;
};

} // namespace qj

#endif
