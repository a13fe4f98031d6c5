#include "qj/quadunit.hpp"

#include <cmath>

namespace qj {

QuadUnit::QuadUnit(FieldPtr F, Poly a, fe_t b, long long prec)
    : F_(std::move(F)), a_(std::move(a)), b_(b) {
  if (a_.is_zero() || !a_.is_monic() || a_.deg() < 1)
    throw domain_error("quadunit: a must be monic of degree >= 1");
  if (!b_) throw domain_error("quadunit: b must be nonzero");
  if (prec < 4) throw domain_error("quadunit: prec too small");
  d_ = a_.deg();
  prec_ = prec;
  D_ = a_ * a_ + Poly::constant(F_, F_->mul(F_->from_int(4), b_));

  const long long W = prec_ + 2 * d_;          // working window
  const Laurent la = Laurent::from_poly(a_);
  const Laurent lb = Laurent::monomial(F_, 0, b_);
  const fe_t two = F_->from_int(2);

  Laurent x = la; // X0 = a; first correction lands at size q^-d
  int iters = static_cast<int>(std::ceil(std::log2(static_cast<double>(W)))) + 2;
  for (int it = 0; it < iters; ++it) {
    Laurent num = x * x - la * x - lb;
    if (!num.distinguishable() && num.abs_bound() < AbsValue::pw(d_ - W)) break;
    Laurent den = x.scaled(two) - la;
    x = x - num * den.inv(W + 2 * d_ + 4);
    // keep a uniform working window; otherwise fully exact iterates (char 2
    // with sparse a) would carry an exact tiny residual forever
    x = x.truncated(W + 2 * d_ + 4);
  }
  Laurent resid = x * x - la * x - lb;
  if (resid.distinguishable() && !resid.is_zero_exact())
    throw consistency_error("quadunit: Newton iteration failed to converge");
  if (x.prec() < W)
    throw consistency_error("quadunit: converged root lost precision");
  f_ = x.truncated(W);
  fs_ = la - f_;
  if (F_->p() == 2)
    sD_ = la; // f - fstar = f + fstar = a exactly
  else
    sD_ = f_.scaled(two) - la;

  // sanity: |f| = q^d, |fstar| = q^-d, sqrtD^2 = D
  if (f_.abs() != AbsValue::pw(d_) || fs_.abs() != AbsValue::pw(-d_))
    throw consistency_error("quadunit: root sizes are wrong");
  Laurent chk = sD_ * sD_ - Laurent::from_poly(D_);
  if (chk.distinguishable() && !chk.is_zero_exact())
    throw consistency_error("quadunit: sqrtD does not square to the discriminant");

  qtab_.push_back(Poly::constant(F_, 1));
  qtab_.push_back(a_);
}

const Poly& QuadUnit::Q(std::size_t n) const {
  std::lock_guard<std::mutex> lock(qmu_);
  while (qtab_.size() <= n) {
    std::size_t k = qtab_.size();
    qtab_.push_back(a_ * qtab_[k - 1] + qtab_[k - 2].scaled(b_));
  }
  return qtab_[n];
}

QuadUnit::ErrorWitness QuadUnit::error(std::size_t n, int l) const {
  if (l < 0) throw domain_error("quadunit: need l >= 0");
  const long long target = static_cast<long long>(l) -
                           static_cast<long long>(n + 1) * d_;
  Laurent v = (Laurent::from_poly(Q(n)) * f_).shifted(l);
  if (!v.coeff_known(target))
    throw precision_error("quadunit: window too small for the error law at n=" +
                          std::to_string(n));
  auto [nearest, dist] = v.nearest_poly();
  Poly expect = Q(n + 1).shifted(l);
  if (nearest != expect)
    throw consistency_error("quadunit: nearest polynomial is not T^l Q_{n+1}");
  if (dist != AbsValue::pw(target))
    throw consistency_error("quadunit: error size violates q^(l-(n+1)d)");
  return {dist, nearest};
}

AbsValue QuadUnit::binet_residual_bound(std::size_t n) const {
  Laurent lhs = sD_ * Laurent::from_poly(Q(n));
  Laurent rhs = f_.pow_int(static_cast<std::uint32_t>(n + 1)) -
                fs_.pow_int(static_cast<std::uint32_t>(n + 1));
  Laurent diff = lhs - rhs;
  if (diff.distinguishable() && !diff.is_zero_exact())
    throw consistency_error("quadunit: recurrence disagrees with the root expansion");
  return diff.abs_bound();
}

} // namespace qj
