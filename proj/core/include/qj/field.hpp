#ifndef QJ_FIELD_HPP
#define QJ_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qj/errors.hpp"

namespace qj {

// An element of F_q is stored as a uint32 code: the base-p digits of the
// code are the coordinates on the power basis 1, x, ..., x^(m-1) of
// F_q = F_p[x]/(modulus).  Digit i (value of floor(code/p^i) mod p) is the
// coefficient of x^i.
using fe_t = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Immutable description of F_q, q = p^m, with multiplication done through
// exp/log tables relative to a fixed generator.  Instances are created
// once and shared via FieldPtr.
class Field {
public:
  // Deterministic modulus: the first monic primitive polynomial of degree m
  // over F_p, scanning coefficient tuples (a_{m-1},...,a_0) in lexicographic
  // order.  With this choice x itself generates the multiplicative group.
  // For m = 1 the modulus is the placeholder "x" and the generator is the
  // smallest primitive root mod p.
  static FieldPtr make(std::uint32_t p, std::uint32_t m);

  // Same, but with a caller-supplied monic irreducible modulus
  // (coefficients ascending, length m+1, mod p).  Throws domain_error if
  // the polynomial is not monic irreducible of degree m.
  static FieldPtr make(std::uint32_t p, std::uint32_t m,
                       const std::vector<std::uint32_t>& modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  fe_t generator() const { return gen_; }

  fe_t zero() const { return 0; }
  fe_t one() const { return 1; }

  // Scalar from an integer (reduces mod p, embeds the prime field).
  fe_t from_int(std::int64_t n) const;

  fe_t add(fe_t a, fe_t b) const;
  fe_t sub(fe_t a, fe_t b) const;
  fe_t neg(fe_t a) const;
  fe_t mul(fe_t a, fe_t b) const;
  fe_t inv(fe_t a) const;          // throws domain_error on 0
  fe_t div(fe_t a, fe_t b) const { return mul(a, inv(b)); }
  fe_t pow(fe_t a, std::int64_t e) const;

  // Discrete log with respect to generator(); throws domain_error on 0.
  std::uint32_t dlog(fe_t a) const;

  bool is_square(fe_t a) const;    // true for 0
  // Square root; the returned branch is the one whose discrete log lies in
  // [0, (q-1)/2) (char 2: the unique root).  Throws domain_error if no root
  // exists.
  fe_t sqrt(fe_t a) const;

  fe_t frobenius(fe_t a, std::uint32_t s = 1) const; // a^(p^s)

  // Digit string, most significant coordinate first, fixed width m.
  // Defined for p <= 7 (single-character digits); larger p throws.
  std::string to_string(fe_t a) const;
  fe_t parse(const std::string& s) const;

  // All q elements in code order 0,1,...,q-1 (handy for desk-scale scans).
  std::vector<fe_t> elements() const;

  bool same(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

private:
  Field() = default;
  void init_tables();
  fe_t mul_raw(fe_t a, fe_t b) const; // table-free polynomial multiply
  fe_t pow_raw(fe_t a, std::uint64_t e) const;
  std::uint32_t order_raw(fe_t a) const;

  std::uint32_t p_ = 0, m_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_; // ascending, length m+1, monic
  fe_t gen_ = 0;
  std::vector<fe_t> exp_;          // exp_[i] = gen^i, i in [0, q-1)
  std::vector<std::uint32_t> log_; // log_[code], code != 0
};

} // namespace qj

#endif
