#include "qj/jinv.hpp"

#include "qj/lattice.hpp"

#include <algorithm>
#include <limits>

namespace qj {

namespace {

// inverse that works for exact and window values alike; `depth` is used
// only when the value carries no window of its own
Laurent inv_any(const Laurent& x, long long depth) {
  return x.is_exact() ? x.inv(depth) : x.inv();
}

} // namespace

// largest internal zeta precision whose layer ladders keep coefficient
// exponents inside 64-bit range: layer t holds exponents up to about
// (t q(q-1) + slack) * q^(t+3), and the layer count tracks prec / (q(q-1))
long long zeta_prec_cap(const FieldPtr& F) {
  const long long q = F->q();
  const long long rate = q * (q - 1);
  long double power = 1;
  for (int i = 0; i < 3; ++i) power *= static_cast<long double>(q);
  long long t = 0;
  while (static_cast<long double>(t * rate + 72) * power < 2.0e18L) {
    ++t;
    power *= static_cast<long double>(q);
  }
  return (t - 1) * rate;
}

namespace {

// The discriminant may cancel far below the leading sizes of its two
// halves, so a fixed internal zeta precision cannot promise a fixed
// number of j coefficients.  Retry with deeper zetas until the value
// carries `prec` coefficients past its lead, the engine's exponent
// ceiling is reached, or the attempt budget runs out; the final window
// is honest in every case.
template <typename ZetaAt>
JValue j_adaptive(const FieldPtr& F, long long prec, ZetaAt&& zeta_at) {
  const long long q = F->q();
  const long long cap = zeta_prec_cap(F);
  long long pz = std::min(prec + 6 * q + 10, cap);
  for (int attempt = 0;; ++attempt) {
    JValue v = j_from_zeta(zeta_at(1, pz), zeta_at(2, pz));
    bool deep = !v.infinity &&
                v.value.lead_exp() - v.value.unknown_exp() >= prec;
    long long next = std::min(2 * pz + 6 * q, cap);
    if (deep || attempt >= 4 || next <= pz) return v;
    pz = next;
  }
}

} // namespace

Laurent tqk_minus_t(const FieldPtr& F, int k) {
  if (k < 1 || k > 2) throw domain_error("jinv: only T^q - T and T^(q^2) - T");
  long long qk = F->q();
  if (k == 2) qk *= F->q();
  std::vector<fe_t> c(static_cast<std::size_t>(qk) + 1, 0);
  c[1] = F->sub(0, 1);
  c[static_cast<std::size_t>(qk)] = 1;
  return Laurent::from_poly(Poly(F, std::move(c)));
}

Laurent delta_from_zeta(const Laurent& z1, const Laurent& z2) {
  const FieldPtr& F = z1.field();
  std::uint32_t q = F->q();
  Laurent A = tqk_minus_t(F, 1);
  Laurent B = tqk_minus_t(F, 2);
  return A.pow_int(q + 1) * z1.pow_int(q + 1) - A * B * z2;
}

Laurent j_ratio(const Laurent& z1, const Laurent& z2) {
  const FieldPtr& F = z1.field();
  std::uint32_t q = F->q();
  if (!z1.distinguishable())
    throw precision_error("jinv: zeta(q-1) is zero to precision");
  Laurent den = tqk_minus_t(F, 1).pow_int(q + 1) * z1.pow_int(q + 1);
  return tqk_minus_t(F, 2) * z2 * inv_any(den, 4LL * q * q + 64);
}

JValue j_from_zeta(const Laurent& z1, const Laurent& z2) {
  const FieldPtr& F = z1.field();
  std::uint32_t q = F->q();
  if (!z1.distinguishable())
    throw precision_error("jinv: zeta(q-1) is zero to precision");
  Laurent delta = delta_from_zeta(z1, z2);
  JValue out;
  if (!delta.distinguishable()) {
    // the window of the vanished denominator is the precision caveat
    out.infinity = true;
    out.value = Laurent::zero_to_prec(F, delta.unknown_exp());
    return out;
  }
  out.value = tqk_minus_t(F, 1).pow_int(q + 2) * z1.pow_int(q + 1) *
              inv_any(delta, 4LL * q * q + 64);
  return out;
}

JValue j_eps(const QuadUnit& u, int N, int l, long long prec) {
  if (l < 0 || l >= u.d()) throw domain_error("jinv: l out of range");
  if (N < 0) throw domain_error("jinv: N must be >= 0");
  if (prec < 1) throw domain_error("jinv: precision must be >= 1");
  long long e = static_cast<long long>(N) * u.d() + l;
  return j_adaptive(u.field(), prec, [&](int n, long long pz) {
    return zeta_eps(u, e, n, pz);
  });
}

JValue j_element(const Laurent& x, long long eps_exp, int deg_bound,
                 long long prec) {
  const FieldPtr& F = x.field();
  if (prec < 1) throw domain_error("jinv: precision must be >= 1");
  std::vector<Poly> gens = lam_bruteforce(x, eps_exp, deg_bound);
  if (gens.empty())
    throw domain_error("jinv: approximation lattice is trivial at this cut");
  Laurent g0i = Laurent::from_poly(gens[0]).inv(prec + 2LL * deg_bound + 8);
  ZetaLadder lad;
  for (const Poly& g : gens) {
    lad.elems.push_back(Laurent::from_poly(g) * g0i);
    lad.leads.push_back(g.deg() - gens[0].deg());
  }
  long long pz = prec + 6LL * F->q() + 10;
  Laurent z1 = zeta_value(lad, 1, pz);
  Laurent z2 = zeta_value(lad, 2, pz);
  return j_from_zeta(z1, z2);
}

JValue j_ideal(const Order& O, const IdealHNF& a, long long prec) {
  if (prec < 1) throw domain_error("jinv: precision must be >= 1");
  return j_adaptive(O.field(), prec, [&](int n, long long pz) {
    return zeta_ideal(O, a, n, pz);
  });
}

JqtReport jqt(const QuadUnit& u, long long prec, int n_max) {
  const int d = u.d();
  if (prec < 1) throw domain_error("jinv: precision must be >= 1");
  const bool adaptive = n_max < 0;
  int N = adaptive ? static_cast<int>(prec / (2 * d) + 1) : n_max;
  Order O(u);
  std::vector<JValue> ideal_vals;
  for (int i = 0; i < d; ++i)
    ideal_vals.push_back(j_ideal(O, IdealHNF::family(O, i), prec));
  // deeper discriminant cancellation slows the lattice's convergence to
  // its ideal class, so the default level is grown until both routes
  // agree everywhere they are both determined.  A value can come out
  // infinite when the denominator cancels past the engine's reach; that
  // is consistent only if both routes report it.
  for (int attempt = 0;; ++attempt) {
    JqtReport rep;
    rep.n_used = N;
    rep.max_disagreement_exp = std::numeric_limits<long long>::min();
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      JqtValue v;
      v.i = i;
      v.ideal = ideal_vals[static_cast<std::size_t>(i)];
      v.eps = j_eps(u, N, d - 1 - i, prec);
      if (v.ideal.infinity != v.eps.infinity) {
        ok = false;
        break;
      }
      if (v.ideal.infinity) {
        v.agreed_exp = std::numeric_limits<long long>::max();
      } else {
        Laurent diff = v.eps.value - v.ideal.value;
        if (diff.distinguishable()) {
          ok = false;
          break;
        }
        v.agreed_exp = diff.unknown_exp();
      }
      rep.max_disagreement_exp =
          std::max(rep.max_disagreement_exp, v.agreed_exp);
      rep.values.push_back(std::move(v));
    }
    if (ok) return rep;
    if (!adaptive || attempt >= 4)
      throw consistency_error("jinv: epsilon and ideal routes disagree");
    N *= 2;
  }
}

Laurent norm_family(const Order& O, const IdealHNF& b, long long prec) {
  Laurent acc = Laurent::monomial(O.field(), 0, 1);
  for (int i = 0; i < O.d(); ++i) {
    JValue v = j_ideal(O, b.mul(O, IdealHNF::family(O, i)), prec);
    if (v.infinity)
      throw precision_error("jinv: infinite value inside a norm product");
    acc = acc * v.value;
  }
  return acc;
}

Laurent norm_jqt(const QuadUnit& u, long long prec) {
  Order O(u);
  return norm_family(O, IdealHNF::whole(O), prec);
}

} // namespace qj
