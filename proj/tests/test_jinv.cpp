#include "doctest.h"

#include "qj/jinv.hpp"

using namespace qj;

namespace {

bool same_value(const Laurent& a, const Laurent& b) {
  return !(a - b).distinguishable();
}

// unit f = root of X^2 - T^d X - b, deep enough for every test here
struct GridUnit {
  FieldPtr F;
  QuadUnit u;
  GridUnit(std::uint32_t q, int d, long long uprec, fe_t b = 1)
      : F(Field::make(q, 1)),
        u(F, Poly::monomial(F, static_cast<std::size_t>(d)), b, uprec) {}
};

long long uprec_for(std::uint32_t q) {
  return q == 2 ? 260 : q == 3 ? 320 : 520;
}

void check_coeffs(const Laurent& v, long long lead,
                  const std::vector<fe_t>& cs) {
  REQUIRE(v.lead_exp() == lead);
  for (std::size_t k = 0; k < cs.size(); ++k)
    CHECK(v.coeff_at(lead - static_cast<long long>(k)) == cs[k]);
}

} // namespace

TEST_CASE("jinv: the building blocks T^(q^k) - T") {
  FieldPtr F = Field::make(3, 1);
  Laurent A = tqk_minus_t(F, 1);
  Laurent B = tqk_minus_t(F, 2);
  CHECK(A.is_exact());
  CHECK(A.lead_exp() == 3);
  CHECK(A.coeff_at(1) == 2);
  CHECK(A.coeff_at(0) == 0);
  CHECK(B.lead_exp() == 9);
  CHECK(B.coeff_at(1) == 2);
  CHECK_THROWS_AS(tqk_minus_t(F, 0), domain_error);
  CHECK_THROWS_AS(tqk_minus_t(F, 3), domain_error);

  // the exact relation A^q = B - A that drives the discriminant
  // cancellation: both halves of Delta share their leading block
  CHECK((A.pow_int(3) - B + A).is_zero_exact());
  FieldPtr F2 = Field::make(2, 1);
  Laurent A2 = tqk_minus_t(F2, 1);
  CHECK((A2.pow_int(2) - tqk_minus_t(F2, 2) + A2).is_zero_exact());
}

TEST_CASE("jinv: J and j ignore zeta rescaling") {
  GridUnit g(3, 1, 320);
  Order O(g.u);
  IdealHNF one = IdealHNF::whole(O);
  Laurent z1 = zeta_ideal(O, one, 1, 40);
  Laurent z2 = zeta_ideal(O, one, 2, 40);
  JValue base = j_from_zeta(z1, z2);
  Laurent baseJ = j_ratio(z1, z2);
  REQUIRE_FALSE(base.infinity);

  // scale the pair the way a different lattice normalization would:
  // z1 by c^(1-q), z2 by c^(1-q^2)
  for (long long ce : {1LL, 3LL}) {
    Laurent c = Laurent::monomial(g.F, ce, 2);
    Laurent ci = c.inv(60);
    Laurent z1s = z1 * ci.pow_int(2);
    Laurent z2s = z2 * ci.pow_int(8);
    JValue scaled = j_from_zeta(z1s, z2s);
    REQUIRE_FALSE(scaled.infinity);
    CHECK(same_value(base.value, scaled.value));
    CHECK(same_value(baseJ, j_ratio(z1s, z2s)));
  }
}

TEST_CASE("jinv: reciprocal formula through J matches the direct one") {
  GridUnit g(3, 2, 320);
  Order O(g.u);
  Laurent z1 = zeta_ideal(O, IdealHNF::family(O, 0), 1, 40);
  Laurent z2 = zeta_ideal(O, IdealHNF::family(O, 0), 2, 40);
  JValue direct = j_from_zeta(z1, z2);
  REQUIRE_FALSE(direct.infinity);
  Laurent J = j_ratio(z1, z2);
  Laurent via_ratio = (tqk_minus_t(g.F, 1).inv(60) - J).inv();
  CHECK(same_value(direct.value, via_ratio));
}

TEST_CASE("jinv: invariant leads across the class family") {
  // leads of the d values, canonical units a = T^d, b = 1; -1 marks a
  // value whose denominator cancels below the engine's reach
  struct Row {
    std::uint32_t q;
    int d;
    std::vector<long long> leads;
  };
  const std::vector<Row> rows = {
      {2, 1, {7}},          {2, 2, {4, 16}},  {2, 3, {4, 8, 33}},
      {3, 1, {13}},         {3, 2, {9, 41}},  {3, 3, {9, 27, 123}},
      {5, 1, {31}},         {5, 2, {25, 157}}, {5, 3, {25, 125, -1}},
  };
  for (const Row& r : rows) {
    CAPTURE(r.q);
    CAPTURE(r.d);
    GridUnit g(r.q, r.d, uprec_for(r.q));
    JqtReport rep = jqt(g.u, 20);
    REQUIRE(rep.values.size() == static_cast<std::size_t>(r.d));
    CHECK(rep.n_used >= 1);
    for (int i = 0; i < r.d; ++i) {
      const JqtValue& v = rep.values[static_cast<std::size_t>(i)];
      CHECK(v.i == i);
      if (r.leads[static_cast<std::size_t>(i)] < 0) {
        CHECK(v.ideal.infinity);
        CHECK(v.eps.infinity);
        continue;
      }
      REQUIRE_FALSE(v.ideal.infinity);
      REQUIRE_FALSE(v.eps.infinity);
      CHECK(v.ideal.value.lead_exp() == r.leads[static_cast<std::size_t>(i)]);
      CHECK(v.eps.value.lead_exp() == r.leads[static_cast<std::size_t>(i)]);
      // the agreement was certified past the lead
      CHECK(v.agreed_exp < v.ideal.value.lead_exp());
    }
    // pairwise distinct wherever both are finite; the difference leads
    // with the larger of the two values
    for (std::size_t a = 0; a < rep.values.size(); ++a)
      for (std::size_t b = a + 1; b < rep.values.size(); ++b) {
        if (rep.values[a].ideal.infinity || rep.values[b].ideal.infinity)
          continue;
        Laurent diff =
            rep.values[a].ideal.value - rep.values[b].ideal.value;
        REQUIRE(diff.distinguishable());
        CHECK(diff.lead_exp() == std::max(rep.values[a].ideal.value.lead_exp(),
                                          rep.values[b].ideal.value.lead_exp()));
      }
  }
}

TEST_CASE("jinv: frozen leading coefficients") {
  {
    GridUnit g(3, 1, 320);
    Order O(g.u);
    JValue j = j_ideal(O, IdealHNF::whole(O), 20);
    REQUIRE_FALSE(j.infinity);
    check_coeffs(j.value, 13, {2, 0, 2, 0, 0, 0, 0, 0, 1, 0, 2, 0});
  }
  {
    GridUnit g(3, 2, 320);
    Order O(g.u);
    JValue j0 = j_ideal(O, IdealHNF::family(O, 0), 20);
    JValue j1 = j_ideal(O, IdealHNF::family(O, 1), 20);
    check_coeffs(j0.value, 9, {2, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0});
    check_coeffs(j1.value, 41, {1, 0, 2, 0, 2, 0, 1, 0, 1, 0, 0, 0});
    check_coeffs(norm_jqt(g.u, 20), 50, {2, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0});
  }
  {
    GridUnit g(2, 2, 260);
    Order O(g.u);
    JValue j0 = j_ideal(O, IdealHNF::family(O, 0), 20);
    JValue j1 = j_ideal(O, IdealHNF::family(O, 1), 20);
    check_coeffs(j0.value, 4, {1, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1, 0});
    check_coeffs(j1.value, 16, {1, 1, 1, 0, 0, 1, 0, 1, 1, 1, 1, 1});
  }
}

TEST_CASE("jinv: values persist when precision doubles") {
  for (std::uint32_t q : {2u, 3u}) {
    CAPTURE(q);
    GridUnit g(q, 2, uprec_for(q));
    JqtReport lo = jqt(g.u, 20);
    JqtReport hi = jqt(g.u, 40);
    REQUIRE(lo.values.size() == 2);
    REQUIRE(hi.values.size() == 2);
    for (int i = 0; i < 2; ++i) {
      const Laurent& a = lo.values[static_cast<std::size_t>(i)].ideal.value;
      const Laurent& b = hi.values[static_cast<std::size_t>(i)].ideal.value;
      CHECK(a.lead_exp() == b.lead_exp());
      CHECK(same_value(a, b));
      // the deeper run really carries more coefficients
      CHECK(b.unknown_exp() <= a.unknown_exp());
      CHECK(b.lead_exp() - b.unknown_exp() >= 40);
    }
  }
}

TEST_CASE("jinv: ideal route is a class invariant") {
  GridUnit g(3, 2, 320);
  Order O(g.u);
  IdealHNF a1 = IdealHNF::family(O, 1);
  JValue base = j_ideal(O, a1, 20);

  // multiply by principal ideals (x): same class, same invariant
  for (const RingElem& x :
       {O.monomial(1, 1), O.add(O.one(), O.monomial(1, 0)),
        O.add(O.monomial(2, 1), O.monomial(1, 0, 2))}) {
    IdealHNF scaled = IdealHNF::principal(O, x).mul(O, a1);
    REQUIRE(scaled != a1);
    JValue moved = j_ideal(O, scaled, 20);
    REQUIRE_FALSE(moved.infinity);
    CHECK(moved.value.lead_exp() == base.value.lead_exp());
    CHECK(same_value(moved.value, base.value));
  }
  // and the whole ring matches the principal ideal (f)
  JValue one = j_ideal(O, IdealHNF::whole(O), 20);
  JValue ff = j_ideal(O, IdealHNF::principal(O, O.monomial(1, 0)), 20);
  CHECK(same_value(one.value, ff.value));
}

TEST_CASE("jinv: rational series have an infinite invariant") {
  FieldPtr F = Field::make(3, 1);
  Laurent t = Laurent::monomial(F, 1, 1);
  Laurent tinv = Laurent::monomial(F, -1, 1);
  Laurent ratio = Laurent::from_poly(Poly(F, {1, 0, 1})) *
                  Laurent::from_poly(Poly(F, {1, 1})).inv(80);
  for (const Laurent& x : {t, tinv, ratio}) {
    JValue v = j_element(x, 6, 12, 8);
    CHECK(v.infinity);
    // the caveat records how deep the vanishing was checked
    CHECK(v.value.unknown_exp() < 0);
  }
}

TEST_CASE("jinv: element route matches the unit pipeline") {
  GridUnit g(3, 1, 320);
  JValue direct = j_element(g.u.f(), 4, 14, 8);
  REQUIRE_FALSE(direct.infinity);
  JValue via_eps = j_eps(g.u, 4, 0, 8);
  REQUIRE_FALSE(via_eps.infinity);
  CHECK(direct.value.lead_exp() == 13);
  CHECK(same_value(direct.value, via_eps.value));
}

TEST_CASE("jinv: shifted units keep the same invariant set") {
  // f and f + c generate the same quadratic extension and the same
  // lattice tower, so the element route sees identical values
  GridUnit g(3, 1, 320);
  Laurent f = g.u.f();
  JValue base = j_element(f, 4, 14, 8);
  for (fe_t c : {1u, 2u}) {
    Laurent shifted = f + Laurent::monomial(g.F, 0, c);
    JValue moved = j_element(shifted, 4, 14, 8);
    REQUIRE_FALSE(moved.infinity);
    CHECK(same_value(base.value, moved.value));
  }
}

TEST_CASE("jinv: explicit level must clear the agreement threshold") {
  GridUnit g(3, 2, 320);
  // the adaptive default settles on a workable level
  JqtReport rep = jqt(g.u, 20);
  CHECK(rep.n_used >= 6);
  CHECK(rep.max_disagreement_exp <
        rep.values[0].ideal.value.lead_exp());
  // pinning the level too low leaves a visible route mismatch
  CHECK_THROWS_AS(jqt(g.u, 20, 6), consistency_error);
  // pinning it at the settled level reproduces the report
  JqtReport pinned = jqt(g.u, 20, rep.n_used);
  CHECK(pinned.n_used == rep.n_used);
  CHECK(same_value(pinned.values[1].ideal.value,
                   rep.values[1].ideal.value));
}

TEST_CASE("jinv: norm products") {
  {
    GridUnit g(3, 1, 320);
    Order O(g.u);
    Laurent n = norm_jqt(g.u, 20);
    JValue single = j_ideal(O, IdealHNF::whole(O), 20);
    CHECK(same_value(n, single.value));
  }
  {
    GridUnit g(2, 2, 260);
    Laurent n = norm_jqt(g.u, 20);
    CHECK(n.lead_exp() == 20);  // 4 + 16
    Order O(g.u);
    CHECK(same_value(n, norm_family(O, IdealHNF::whole(O), 20)));
  }
}

TEST_CASE("jinv: discriminant cancellation depths") {
  // putative leading sizes of Delta: the family ideal a_0 keeps the
  // full q^(2q), classes whose ladder reaches T exactly cancel far
  // deeper, and d = 1 lands at q^(q-1)
  auto delta_lead = [](const Order& O, const IdealHNF& a, long long pz) {
    Laurent z1 = zeta_ideal(O, a, 1, pz);
    Laurent z2 = zeta_ideal(O, a, 2, pz);
    return delta_from_zeta(z1, z2).lead_exp();
  };
  {
    GridUnit g(3, 1, 320);
    Order O(g.u);
    CHECK(delta_lead(O, IdealHNF::whole(O), 60) == 2);
  }
  {
    GridUnit g(2, 1, 260);
    Order O(g.u);
    CHECK(delta_lead(O, IdealHNF::whole(O), 40) == 1);
  }
  {
    GridUnit g(5, 1, 520);
    Order O(g.u);
    CHECK(delta_lead(O, IdealHNF::whole(O), 80) == 4);
  }
  {
    GridUnit g(3, 2, 320);
    Order O(g.u);
    CHECK(delta_lead(O, IdealHNF::family(O, 0), 60) == 6);
    CHECK(delta_lead(O, IdealHNF::family(O, 1), 60) == -26);
  }
  {
    GridUnit g(2, 2, 260);
    Order O(g.u);
    CHECK(delta_lead(O, IdealHNF::family(O, 0), 40) == 4);
    CHECK(delta_lead(O, IdealHNF::family(O, 1), 40) == -8);
  }
  {
    GridUnit g(5, 2, 520);
    Order O(g.u);
    CHECK(delta_lead(O, IdealHNF::family(O, 0), 80) == 10);
    CHECK(delta_lead(O, IdealHNF::family(O, 1), 160) == -122);
  }
}

TEST_CASE("jinv: argument guards") {
  GridUnit g(3, 1, 320);
  CHECK_THROWS_AS(j_eps(g.u, 2, 1, 20), domain_error);   // l >= d
  CHECK_THROWS_AS(j_eps(g.u, -1, 0, 20), domain_error);
  CHECK_THROWS_AS(j_eps(g.u, 2, 0, 0), domain_error);
  CHECK_THROWS_AS(jqt(g.u, 0), domain_error);
  Laurent dead = Laurent::zero_to_prec(g.F, -5);
  CHECK_THROWS_AS(j_from_zeta(dead, dead), precision_error);
}
