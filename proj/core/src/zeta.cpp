#include "qj/zeta.hpp"

#include <algorithm>

namespace qj {

namespace {

void check_layer(const ZetaLadder& lad, std::size_t j) {
  if (lad.elems.empty() || lad.elems.size() != lad.leads.size())
    throw domain_error("zeta: malformed ladder");
  if (j >= lad.elems.size()) throw domain_error("zeta: layer beyond ladder");
  if (lad.leads[0] != 0) throw domain_error("zeta: ladder must start at size 1");
}

// q^n as a Frobenius step count p^s
std::uint32_t frob_steps(const FieldPtr& F, int n) {
  if (n < 1 || n > 8) throw domain_error("zeta: exponent index out of range");
  return F->m() * static_cast<std::uint32_t>(n);
}

long long qn_minus_1(const FieldPtr& F, int n) {
  long long v = 1;
  for (int i = 0; i < n; ++i) {
    v *= F->q();
    if (v > (1LL << 40)) throw resource_error("zeta: q^n too large");
  }
  return v - 1;
}

// sum_i coeffs[i] * zp[i] (an additive polynomial against a q-power chain)
Laurent dot_chain(const std::vector<Laurent>& coeffs,
                  const std::vector<Laurent>& zp) {
  Laurent acc = coeffs[0] * zp[0];
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    acc = acc + coeffs[i] * zp[i];
  return acc;
}

// Shared state for the layers of one ladder at one exponent q^n - 1.
//
// Layer j sums lambda^(1-q^n) over lambda = alpha + span(w_0..w_{j-1}),
// alpha = elems[j].  Writing e_W for the additive vanishing polynomial of
// the span's q^n-image and B = alpha^(q^n), partial fractions give
//   Omega_j = a_0 (alpha - L(B)) / e_W(B)
// where a_0 is the linear coefficient of e_W and L is the additive
// polynomial interpolating L(w_t^(q^n)) = w_t.  L is computed in the
// triangular basis of prefix vanishing polynomials e_{W_0}, ..., whose
// coefficients (gamma) extend incrementally from layer to layer; the
// triangular form keeps every division exactly sized, where a dense
// monomial-basis solve cancels below the coefficient window.
struct LayerEngine {
  const ZetaLadder& lad;
  FieldPtr F;
  int n;
  std::uint32_t s;  // p-power steps for q^n
  std::uint32_t m;  // p-power steps for q
  long long cap;
  std::vector<Laurent> basis;                // elems[t]^(q^n)
  std::vector<std::vector<Laurent>> stages;  // stages[t] = coeffs of e_{W_t}
  std::vector<std::vector<Laurent>> evb;     // evb[t][u] = e_{W_u}(basis[t])
  std::vector<Laurent> gamma;                // interpolation coefficients

  LayerEngine(const ZetaLadder& l, int n_, long long cap_)
      : lad(l), F(l.elems[0].field()), n(n_), s(frob_steps(F, n_)),
        m(F->m()), cap(cap_) {
    stages.push_back({Laurent::monomial(F, 0, 1)});
  }

  // q-power chain z, z^q, ..., z^(q^len)
  std::vector<Laurent> chain(const Laurent& z, std::size_t len) const {
    std::vector<Laurent> zp{z};
    for (std::size_t i = 0; i < len; ++i)
      zp.push_back(zp.back().frobenius_pow(m, cap));
    return zp;
  }

  void grow(std::size_t upto) {
    while (basis.size() < upto) {
      std::size_t t = basis.size();
      basis.push_back(lad.elems[t].frobenius_pow(s, cap));
      std::vector<Laurent> bt = chain(basis[t], t);
      std::vector<Laurent> ev;
      for (std::size_t u = 0; u <= t; ++u)
        ev.push_back(dot_chain(stages[u], bt));
      // e_{W+b}(z) = e_W(z)^q - e_W(b)^(q-1) e_W(z)
      Laurent g = ev[t].pow_int(F->q() - 1);
      const std::vector<Laurent>& ew = stages[t];
      std::vector<Laurent> next(ew.size() + 1, Laurent::zero(F));
      for (std::size_t i = 0; i < ew.size(); ++i) {
        next[i + 1] = ew[i].frobenius_pow(m, cap);
        next[i] = next[i] - g * ew[i];
      }
      stages.push_back(std::move(next));
      // forward substitution for L(basis[t]) = elems[t]
      Laurent v = lad.elems[t];
      for (std::size_t u = 0; u < t; ++u) v = v - gamma[u] * ev[u];
      gamma.push_back(v * ev[t].inv(cap));
      evb.push_back(std::move(ev));
    }
  }

  Laurent omega(std::size_t j) {
    grow(j);
    const Laurent& alpha = lad.elems[j];
    std::vector<Laurent> bp = chain(alpha.frobenius_pow(s, cap), j);
    Laurent lphi = Laurent::zero(F);
    for (std::size_t t = 0; t < j; ++t)
      lphi = lphi + gamma[t] * dot_chain(stages[t], bp);
    const Laurent& a0 = stages[j][0];
    Laurent den = dot_chain(stages[j], bp);
    Laurent result = a0 * (alpha - lphi) * den.inv(cap);
    if (j == 1 &&
        (lad.elems[0] - Laurent::monomial(F, 0, 1)).is_zero_exact() &&
        (result - omega1_closed(alpha, n, cap)).distinguishable())
      throw consistency_error("zeta: first layer disagrees with closed form");
    return result;
  }
};

} // namespace

Laurent omega_layer(const ZetaLadder& lad, int n, std::size_t j,
                    long long cap) {
  check_layer(lad, j);
  LayerEngine eng(lad, n, cap);
  return eng.omega(j);
}

Laurent omega_layer_direct(const ZetaLadder& lad, int n, std::size_t j,
                           long long cap) {
  check_layer(lad, j);
  const FieldPtr& F = lad.elems[0].field();
  std::uint32_t s = frob_steps(F, n);
  double total_d = 1;
  for (std::size_t i = 0; i < j; ++i) total_d *= F->q();
  if (total_d > 2e5)
    throw resource_error("zeta: direct layer sum too large");
  long long total = static_cast<long long>(total_d);
  Laurent acc = Laurent::zero(F);
  for (long long code = 0; code < total; ++code) {
    Laurent lambda = lad.elems[j];
    long long rest = code;
    for (std::size_t t = 0; t < j; ++t) {
      fe_t ct = static_cast<fe_t>(rest % F->q());
      rest /= F->q();
      if (ct) lambda = lambda + lad.elems[t].scaled(ct);
    }
    acc = acc + lambda * lambda.frobenius_pow(s, cap).inv(cap);
  }
  return acc;
}

Laurent omega1_closed(const Laurent& alpha, int n, long long cap) {
  const FieldPtr& F = alpha.field();
  std::uint32_t s = frob_steps(F, n);
  Laurent ap = alpha.frobenius_pow(s, cap);
  return (ap - alpha) * (ap.frobenius_pow(F->m(), cap) - ap).inv(cap);
}

Laurent zeta_value(const ZetaLadder& lad, int n, long long prec) {
  check_layer(lad, 0);
  const FieldPtr& F = lad.elems[0].field();
  if (prec < 1) throw domain_error("zeta: precision must be >= 1");
  long long qn = qn_minus_1(F, n) + 1;
  // each layer is a union of scalar lines c + w; summing a line gives the
  // closed form (w^{q^n}-w)/((w^{q^n})^q - w^{q^n}), of size |w|^{q^n(1-q)},
  // so the whole layer at lead L is bounded by q^{-L q^n (q-1)}
  long long rate = qn * (static_cast<long long>(F->q()) - 1);
  long long cap = prec + 8;
  LayerEngine eng(lad, n, cap);
  Laurent acc = Laurent::zero(F);
  for (std::size_t j = 0;; ++j) {
    if (j >= lad.elems.size())
      throw domain_error("zeta: ladder too short for requested precision");
    if (lad.leads[j] * rate > prec) {
      // remaining layers are bounded by the first omitted one
      acc = acc + Laurent::zero_to_prec(F, -lad.leads[j] * rate);
      break;
    }
    acc = acc + eng.omega(j);
  }
  return acc;
}

ZetaLadder ladder_from_ideal(const Order& O, const IdealHNF& a,
                             std::size_t count) {
  NormalizedBasis nb = normalized_basis(O, a, count);
  return ZetaLadder{std::move(nb.elems), std::move(nb.leads)};
}

ZetaLadder ladder_from_lattice(const QuadUnit& u, long long e,
                               std::size_t count) {
  if (e < 0) throw domain_error("zeta: lattice level must be >= 0");
  if (count < 1) throw domain_error("zeta: ladder needs at least one element");
  const int d = u.d();
  long long N = e / d, l = e % d;
  Laurent mu = u.sqrtD() * u.f().inv().pow_int(static_cast<std::uint32_t>(N + 1));
  ZetaLadder lad;
  for (long long nn = N; static_cast<long long>(lad.elems.size()) <
                         static_cast<long long>(count);
       ++nn) {
    int jmax = (nn == N) ? static_cast<int>(d - 1 - l) : d - 1;
    for (int j = 0; j <= jmax && lad.elems.size() < count; ++j) {
      Laurent v =
          (mu * Laurent::from_poly(u.Q(static_cast<std::size_t>(nn)))).shifted(j);
      long long lead = (nn - N) * d + j;
      if (v.lead_exp() != lead || v.lead_coeff() != 1)
        throw consistency_error("zeta: rescaled lattice generator is not monic");
      lad.elems.push_back(std::move(v));
      lad.leads.push_back(lead);
    }
  }
  return lad;
}

Laurent zeta_ideal(const Order& O, const IdealHNF& a, int n, long long prec) {
  long long rate = (qn_minus_1(O.field(), n) + 1) *
                   (static_cast<long long>(O.field()->q()) - 1);
  std::size_t count =
      static_cast<std::size_t>(prec / rate + a.idx() + 2 * O.d() + 3);
  return zeta_value(ladder_from_ideal(O, a, count), n, prec);
}

Laurent zeta_eps(const QuadUnit& u, long long e, int n, long long prec) {
  long long rate = (qn_minus_1(u.field(), n) + 1) *
                   (static_cast<long long>(u.field()->q()) - 1);
  std::size_t count = static_cast<std::size_t>(prec / rate + u.d() + 3);
  return zeta_value(ladder_from_lattice(u, e, count), n, prec);
}

} // namespace qj
