#include "doctest.h"

#include "qj/algrec.hpp"
#include "qj/quadunit.hpp"

using namespace qj;

namespace {

// generic-looking series with no small algebraic relation
Laurent scrambled_series(const FieldPtr& F, long long prec) {
  Laurent x = Laurent::zero_to_prec(F, -prec - 1);
  std::uint32_t s = 12345;
  for (long long e = 0; e > -prec; --e) {
    s = s * 1103515245u + 12345u;
    x = x + Laurent::monomial(F, e, (s >> 16) % F->q());
  }
  return x + Laurent::monomial(F, 1, 1); // pin a clean leading term
}

} // namespace

TEST_CASE("algrec: recovers the defining quadratic of a unit") {
  FieldPtr F = Field::make(3, 1);
  QuadUnit u(F, Poly::monomial(F, 2), 1, 80);
  auto rel = minpoly_search(u.f(), 3, 4);
  REQUIRE(rel.has_value());
  REQUIRE(rel->coeffs.size() == 3);   // degree 2, found before degree 3
  CHECK(rel->deg_bound == 2);         // and with the smallest usable bound
  CHECK(rel->coeffs[0].coeffs() == std::vector<fe_t>{2});       // -b
  CHECK(rel->coeffs[1].coeffs() == std::vector<fe_t>{0, 0, 2}); // -a
  CHECK(rel->coeffs[2].coeffs() == std::vector<fe_t>{1});
  CHECK(verify_relation(*rel, u.f()));

  QuadUnit u2(F, Poly::monomial(F, 2), 1, 160);
  CHECK(verify_relation(*rel, u2.f())); // survives a deeper window
}

TEST_CASE("algrec: linear relation for a polynomial subject") {
  FieldPtr F = Field::make(3, 1);
  Laurent x = Laurent::from_poly(Poly(F, {1, 1})); // T + 1, exact
  auto rel = minpoly_search(x, 2, 3);
  REQUIRE(rel.has_value());
  REQUIRE(rel->coeffs.size() == 2);
  CHECK(rel->deg_bound == 1);
  CHECK(rel->coeffs[0].coeffs() == std::vector<fe_t>{2, 2}); // -(T+1)
  CHECK(rel->coeffs[1].coeffs() == std::vector<fe_t>{1});
  CHECK(verify_relation(*rel, x));
}

TEST_CASE("algrec: corrupted relations are rejected") {
  FieldPtr F = Field::make(3, 1);
  QuadUnit u(F, Poly::monomial(F, 2), 1, 80);
  auto rel = minpoly_search(u.f(), 2, 3);
  REQUIRE(rel.has_value());
  AlgRelation bad = *rel;
  bad.coeffs[0] = Poly::constant(F, 1);
  CHECK_FALSE(verify_relation(bad, u.f()));
  AlgRelation empty;
  CHECK_FALSE(verify_relation(empty, u.f()));
}

TEST_CASE("algrec: generic series admit no small relation") {
  FieldPtr F = Field::make(3, 1);
  Laurent x = scrambled_series(F, 60);
  CHECK_FALSE(minpoly_search(x, 2, 2).has_value());
}

TEST_CASE("algrec: window too shallow to decide") {
  FieldPtr F = Field::make(3, 1);
  Laurent thin = Laurent::monomial(F, 0, 1) + Laurent::zero_to_prec(F, -3);
  CHECK_THROWS_AS(minpoly_search(thin, 2, 2), precision_error);
  CHECK_THROWS_AS(minpoly_search(Laurent::zero_to_prec(F, -5), 2, 2),
                  precision_error);
  CHECK_THROWS_AS(minpoly_search(thin, 0, 2), domain_error);
}

TEST_CASE("algrec: minimal degree comes first") {
  FieldPtr F = Field::make(3, 1);
  // subject already polynomial: degree-2 bounds must still report degree 1
  Laurent x = Laurent::from_poly(Poly(F, {0, 2, 1})); // T^2 + 2T
  auto rel = minpoly_search(x, 3, 4);
  REQUIRE(rel.has_value());
  CHECK(rel->coeffs.size() == 2);
  CHECK(rel->deg_bound == 2);
  CHECK(rel->coeffs[1].coeffs() == std::vector<fe_t>{1});
  CHECK(rel->coeffs[0].coeffs() == std::vector<fe_t>{0, 1, 2}); // -x
}
