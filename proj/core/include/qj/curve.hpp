#ifndef QJ_CURVE_HPP
#define QJ_CURVE_HPP

#include <optional>

#include "qj/quadunit.hpp"

namespace qj {

// The function field K = k(f) is the function field of a curve over F_q:
// in odd characteristic the hyperelliptic model Y^2 = S with S the
// squarefree part of a^2 + 4b, in characteristic 2 the Artin-Schreier
// model w^2 + w = sqrt(b)/a.  Point counts refer to the smooth projective
// model in either case, so degenerate inputs (non-squarefree a^2 + 4b,
// resp. non-squarefree a) still count correctly -- they just flag
// `degenerate` and drop the genus below d - 1.

struct CurveData {
  bool char2 = false;
  bool degenerate = false;
  int genus = 0;
  Poly model; // odd char: the squarefree S; char 2: the denominator a
};

CurveData curve_model(const QuadUnit& u);

// number of points of the smooth model over F_{q^r}
long long count_points(const QuadUnit& u, int r);

struct ClassNumbers {
  CurveData curve;
  std::vector<long long> N; // N_1 .. N_genus
  std::vector<long long> L; // numerator coefficients c_0 .. c_{2 genus}
  long long h_K = 0;        // = L(1), the divisor class number of K
  // h_K / d when that division is exact; for a non-degenerate curve a
  // failed division throws consistency_error instead
  std::optional<long long> h_O;
};

ClassNumbers class_numbers(const QuadUnit& u);

// code-indexed table embedding `from` into `into`; requires the degree of
// `into` over the common prime field to be a multiple of that of `from`
std::vector<fe_t> embedding(const FieldPtr& from, const FieldPtr& into);

// squarefree part (radical), monic; works in any characteristic
Poly radical(const Poly& p);

} // namespace qj

#endif
