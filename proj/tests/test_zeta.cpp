#include "doctest.h"

#include "qj/zeta.hpp"

using namespace qj;

namespace {

Poly P(const FieldPtr& F, std::vector<fe_t> c) { return Poly(F, std::move(c)); }

// the polynomial ring itself as a ladder: exact monomials T^j
ZetaLadder poly_ladder(const FieldPtr& F, std::size_t count) {
  ZetaLadder lad;
  for (std::size_t j = 0; j < count; ++j) {
    lad.elems.push_back(Laurent::monomial(F, static_cast<long long>(j), 1));
    lad.leads.push_back(static_cast<long long>(j));
  }
  return lad;
}

bool same_value(const Laurent& a, const Laurent& b) {
  return !(a - b).distinguishable();
}

} // namespace

TEST_CASE("layer sums: closed forms over the polynomial ladder") {
  FieldPtr F = Field::make(3, 1);
  ZetaLadder lad = poly_ladder(F, 8);

  // layer 0 of a ladder starting at 1 is exactly 1
  Laurent o0 = omega_layer(lad, 1, 0, 40);
  CHECK((o0 - Laurent::monomial(F, 0, 1)).is_zero_exact());

  // sum of (T+c)^(1-q) over c: equals (T^3 - T)^(-(q-1))
  Laurent o1 = omega_layer(lad, 1, 1, 40);
  CHECK(o1.lead_exp() == -6);
  CHECK(o1.lead_coeff() == 1);
  CHECK(o1.coeff_at(-7) == 0);
  CHECK(o1.coeff_at(-8) == 2);
  CHECK(o1.coeff_at(-10) == 0);
  CHECK(o1.coeff_at(-12) == 1);
  CHECK(o1.coeff_at(-14) == 2);
  Laurent l1sq = Laurent::from_poly(P(F, {0, 2, 0, 1})) *
                 Laurent::from_poly(P(F, {0, 2, 0, 1}));
  CHECK(same_value(o1 * l1sq, Laurent::monomial(F, 0, 1)));

  // exponent q^2 - 1: (T^9 - T)/(T^3 - T)^9
  Laurent o1b = omega_layer(lad, 2, 1, 40);
  CHECK(o1b.lead_exp() == -18);
  Laurent l1p9 = Laurent::from_poly(P(F, {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0,
                                          0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                                          0, 0, 1})); // T^27 + 2 T^9
  Laurent t9 = Laurent::from_poly(P(F, {0, 2, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(same_value(o1b * l1p9, t9));
}

TEST_CASE("layer sums: additive kernel agrees with brute force") {
  FieldPtr F3 = Field::make(3, 1);
  ZetaLadder lad = poly_ladder(F3, 8);
  for (std::size_t j = 1; j <= 4; ++j) {
    Laurent fast = omega_layer(lad, 1, j, 40);
    Laurent direct = omega_layer_direct(lad, 1, j, 40);
    CHECK(same_value(fast, direct));
  }
  CHECK(same_value(omega_layer(lad, 2, 2, 60), omega_layer_direct(lad, 2, 2, 60)));

  // first-layer closed form
  CHECK(same_value(omega1_closed(Laurent::monomial(F3, 1, 1), 1, 40),
                   omega_layer(lad, 1, 1, 40)));
  CHECK(same_value(omega1_closed(Laurent::monomial(F3, 1, 1), 2, 40),
                   omega_layer(lad, 2, 1, 40)));

  FieldPtr F5 = Field::make(5, 1);
  ZetaLadder lad5 = poly_ladder(F5, 6);
  Laurent o = omega_layer(lad5, 1, 1, 40);
  CHECK(o.lead_exp() == -20); // (T^5 - T)^(-4)
  CHECK(same_value(o, omega_layer_direct(lad5, 1, 1, 40)));
  Laurent l14 = Laurent::from_poly(P(F5, {0, 4, 0, 0, 0, 1})).pow_int(4);
  CHECK(same_value(o * l14, Laurent::monomial(F5, 0, 1)));

  FieldPtr F2 = Field::make(2, 1);
  ZetaLadder lad2 = poly_ladder(F2, 10);
  for (std::size_t j = 1; j <= 5; ++j)
    CHECK(same_value(omega_layer(lad2, 1, j, 40),
                     omega_layer_direct(lad2, 1, j, 40)));
}

TEST_CASE("zeta over the polynomial ladder matches global summation") {
  FieldPtr F = Field::make(3, 1);
  Laurent z = zeta_value(poly_ladder(F, 10), 1, 12);
  CHECK(z.lead_exp() == 0);
  CHECK((z - Laurent::monomial(F, 0, 1)).abs() == AbsValue::pw(-6));
  CHECK(z.coeff_known(-12));

  // every monic polynomial of degree <= 6, summed one by one
  Laurent direct = Laurent::zero(F);
  for (int deg = 0; deg <= 6; ++deg) {
    long long total = 1;
    for (int i = 0; i < deg; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
      std::vector<fe_t> c(static_cast<std::size_t>(deg) + 1, 0);
      long long rest = code;
      for (int i = 0; i < deg; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<fe_t>(rest % 3);
        rest /= 3;
      }
      c.back() = 1;
      Laurent lam = Laurent::from_poly(P(F, std::move(c)));
      direct = direct + lam * lam.frobenius_pow(1, 30).inv(30);
    }
  }
  direct = direct + Laurent::zero_to_prec(F, -14); // degrees >= 7
  CHECK(same_value(z, direct));
}

TEST_CASE("ideal zeta: deviation from 1 is set by the first ladder jump") {
  FieldPtr F = Field::make(3, 1);
  QuadUnit u(F, Poly::monomial(F, 2), 1, 40);
  Order O(u);
  IdealHNF a0 = IdealHNF::family(O, 0);
  IdealHNF a1 = IdealHNF::family(O, 1);

  // alpha_1 sizes q and q^2 produce |zeta - 1| = q^(q^n (1-q) log_q alpha_1)
  Laurent z1 = zeta_ideal(O, a1, 1, 20);
  CHECK((z1 - Laurent::monomial(F, 0, 1)).abs() == AbsValue::pw(-6));
  Laurent z0 = zeta_ideal(O, a0, 1, 20);
  CHECK((z0 - Laurent::monomial(F, 0, 1)).abs() == AbsValue::pw(-12));

  Laurent z1b = zeta_ideal(O, a1, 2, 20);
  CHECK((z1b - Laurent::monomial(F, 0, 1)).abs() == AbsValue::pw(-18));
  Laurent z0b = zeta_ideal(O, a0, 2, 38);
  CHECK((z0b - Laurent::monomial(F, 0, 1)).abs() == AbsValue::pw(-36));

  // the whole order behaves like the ideal with ladder 0, d, d+1, ...
  Laurent zw = zeta_ideal(O, IdealHNF::whole(O), 1, 20);
  CHECK((zw - Laurent::monomial(F, 0, 1)).abs() == AbsValue::pw(-12));

  // the q-1 deviation dominates the q^2-1 deviation
  Laurent one = Laurent::monomial(F, 0, 1);
  CHECK((z1b - one).abs() < (z1 - one).abs());
  CHECK((z0b - one).abs() < (z0 - one).abs());

  // layer duality on a genuine ideal ladder
  ZetaLadder lad = ladder_from_ideal(O, a1, 6);
  for (std::size_t j = 1; j <= 3; ++j)
    CHECK(same_value(omega_layer(lad, 1, j, 48),
                     omega_layer_direct(lad, 1, j, 48)));
}

TEST_CASE("zeta: homogeneity and the scalar-sum constant") {
  FieldPtr F = Field::make(3, 1);

  // sum of c^(n(1-q)) over nonzero scalars c is -1
  for (int n : {1, 2}) {
    long long e = 1;
    for (int i = 0; i < n; ++i) e *= F->q();
    fe_t s = 0;
    for (fe_t c = 1; c < F->q(); ++c) s = F->add(s, F->pow(c, 1 - e));
    CHECK(s == F->sub(0, 1));
  }

  // scaling every ladder element by a common series multiplies each
  // layer by c^(1-q^n)
  ZetaLadder lad = poly_ladder(F, 6);
  Laurent c = Laurent::from_poly(P(F, {1, 1}));
  ZetaLadder scaled;
  scaled.leads = lad.leads;
  for (const Laurent& w : lad.elems) scaled.elems.push_back(w * c);
  Laurent ratio = c * c.frobenius_pow(1, 40).inv(40);
  for (std::size_t j = 1; j <= 3; ++j)
    CHECK(same_value(omega_layer(scaled, 1, j, 40),
                     omega_layer(lad, 1, j, 40) * ratio));
  CHECK(same_value(omega_layer_direct(scaled, 1, 2, 40),
                   omega_layer_direct(lad, 1, 2, 40) * ratio));
  Laurent ratio2 = c * c.frobenius_pow(2, 40).inv(40);
  CHECK(same_value(omega_layer(scaled, 2, 1, 40),
                   omega_layer(lad, 2, 1, 40) * ratio2));
}

TEST_CASE("lattice zeta: rescaled ladders and their leads") {
  FieldPtr F = Field::make(3, 1);
  QuadUnit u(F, Poly::monomial(F, 2), 1, 40);

  ZetaLadder l2 = ladder_from_lattice(u, 2, 6); // N=1, l=0
  CHECK(l2.leads == std::vector<long long>{0, 1, 2, 3, 4, 5});
  ZetaLadder l3 = ladder_from_lattice(u, 3, 6); // N=1, l=1: partial block
  CHECK(l3.leads == std::vector<long long>{0, 2, 3, 4, 5, 6});
  for (const Laurent& w : l3.elems) CHECK(w.lead_coeff() == 1);

  // first element is 1 - (fstar/f)^(N+1), within q^(-2(N+1)d) of 1
  Laurent w0 = l2.elems[0];
  CHECK((w0 - Laurent::monomial(F, 0, 1)).abs() == AbsValue::pw(-8));

  for (std::size_t j = 1; j <= 2; ++j)
    CHECK(same_value(omega_layer(l2, 1, j, 48),
                     omega_layer_direct(l2, 1, j, 48)));

  // zeta deviation: dominated by Omega_1 at l=0, by the rescaling at l=1
  Laurent z2 = zeta_eps(u, 2, 1, 12);
  CHECK((z2 - Laurent::monomial(F, 0, 1)).abs() == AbsValue::pw(-6));
  Laurent z3 = zeta_eps(u, 3, 1, 12);
  CHECK((z3 - Laurent::monomial(F, 0, 1)).abs() == AbsValue::pw(-8));

  // d = 1 ladders are plain
  QuadUnit u1(F, Poly::variable(F), 1, 30);
  ZetaLadder l1 = ladder_from_lattice(u1, 3, 5);
  CHECK(l1.leads == std::vector<long long>{0, 1, 2, 3, 4});
  Laurent ze = zeta_eps(u1, 3, 1, 10);
  CHECK((ze - Laurent::monomial(F, 0, 1)).abs() == AbsValue::pw(-6));
}

TEST_CASE("zeta: guard rails") {
  FieldPtr F = Field::make(3, 1);
  ZetaLadder lad = poly_ladder(F, 3);
  CHECK_THROWS_AS((void)zeta_value(lad, 1, 100), domain_error);
  CHECK_THROWS_AS((void)zeta_value(lad, 0, 10), domain_error);
  CHECK_THROWS_AS((void)omega_layer(lad, 1, 7, 40), domain_error);
  ZetaLadder bad;
  bad.elems.push_back(Laurent::monomial(F, 1, 1));
  bad.leads.push_back(1);
  CHECK_THROWS_AS((void)zeta_value(bad, 1, 10), domain_error);
  ZetaLadder wide = poly_ladder(F, 13);
  CHECK_THROWS_AS((void)omega_layer_direct(wide, 1, 12, 20), resource_error);
}
