#include "doctest.h"

#include "qj/lattice.hpp"

using namespace qj;

namespace {

Poly P(const FieldPtr& F, std::initializer_list<int> ascending) {
  std::vector<fe_t> c;
  for (int v : ascending)
    c.push_back(F->from_int(v));
  return Poly(F, std::move(c));
}

} // namespace

TEST_CASE("degree echelon form is canonical") {
  auto F = Field::make(3, 1);
  std::vector<Poly> gens = {P(F, {0, 1, 1}), P(F, {1, 1}), P(F, {0, 0, 2})};
  auto e = degree_echelon(gens);
  REQUIRE(e.size() == 3);
  CHECK(e[0] == Poly::constant(F, 1));
  CHECK(e[1] == P(F, {0, 1}));
  CHECK(e[2] == P(F, {0, 0, 1}));
  // order and scaling of the input must not matter
  std::vector<Poly> gens2 = {P(F, {0, 0, 2}), P(F, {2, 2}), P(F, {0, 2, 2})};
  CHECK(degree_echelon(gens2) == e);
  // dependent generators collapse
  std::vector<Poly> dep = {P(F, {1, 1}), P(F, {2, 2})};
  CHECK(degree_echelon(dep).size() == 1);
}

TEST_CASE("vanishing-condition kernel matches the block description") {
  auto F = Field::make(3, 1);
  QuadUnit u1(F, P(F, {0, 1}), 1, 40); // d = 1
  for (long long e = 1; e <= 5; ++e) {
    auto kernel = lam_bruteforce(u1, e, 8);
    auto blocks = lam_structural(u1, e, 8);
    CHECK(kernel == blocks);
    // d = 1: one generator per degree N..8
    CHECK(kernel.size() == static_cast<std::size_t>(8 - e + 1));
  }

  QuadUnit u2(F, P(F, {0, 0, 1}), 1, 40); // d = 2
  for (long long e = 1; e <= 5; ++e) {
    auto kernel = lam_bruteforce(u2, e, 8);
    auto blocks = lam_structural(u2, e, 8);
    CHECK(kernel == blocks);
  }
  // e = 3 = 1*2+1: N = 1, l = 1: degrees 2 (partial block), then 4,5,6,7,8
  CHECK(lam_bruteforce(u2, 3, 8).size() == 6);

  QuadUnit u3(F, P(F, {0, 1, 0, 1}), 1, 40); // d = 3
  for (long long e = 1; e <= 6; ++e)
    CHECK(lam_bruteforce(u3, e, 9) == lam_structural(u3, e, 9));
}

TEST_CASE("kernel members really satisfy the defining conditions") {
  auto F = Field::make(3, 1);
  QuadUnit u(F, P(F, {0, 0, 1}), 1, 40);
  for (long long e = 1; e <= 4; ++e)
    for (const Poly& g : lam_bruteforce(u, e, 7)) {
      Laurent v = Laurent::from_poly(g) * u.f();
      CHECK(v.frac_vanishes_through(e));
    }
}

TEST_CASE("triangularization and reduction in the Laurent realization") {
  auto F = Field::make(3, 1);
  std::vector<Laurent> gens = {Laurent::from_poly(P(F, {0, 1, 1})),
                               Laurent::from_poly(P(F, {1, 1})),
                               Laurent::from_poly(P(F, {0, 2, 2}))};
  auto tri = triangular_basis(gens);
  REQUIRE(tri.size() == 2); // the third is dependent
  CHECK(tri[0].lead_exp() == 2);
  CHECK(tri[0].lead_coeff() == 1);
  CHECK(tri[1].lead_exp() == 1);

  Laurent r = reduce_against(Laurent::from_poly(P(F, {0, 0, 1})), tri);
  // T^2 - (T^2+T) = -T, then -T + (T+1) = 1: stuck at exponent 0
  CHECK(r.abs() == AbsValue::pw(0));
  CHECK(reduce_against(Laurent::from_poly(P(F, {0, 2, 2})), tri).is_zero_exact());
}

TEST_CASE("rescaled lattice approximates the monomial ideal generator-wise") {
  auto F = Field::make(3, 1);
  QuadUnit u(F, P(F, {0, 1}), 1, 40); // d = 1
  auto gens = renorm_basis(u, 2, 0, 5);
  REQUIRE(gens.size() == 4); // n = 2..5
  for (const auto& g : gens)
    CHECK(g.dist == AbsValue::pw(g.j - (g.n + 3)));
  // the worst generator sits at the base block
  CHECK(gens[0].dist == AbsValue::pw(-5)); // q^-(2Nd+l+1)

  QuadUnit v(F, P(F, {0, 0, 1}), 1, 40); // d = 2
  for (int l = 0; l <= 1; ++l) {
    auto g2 = renorm_basis(v, 1, l, 4);
    AbsValue worst = AbsValue::null();
    for (const auto& g : g2)
      if (worst < g.dist) worst = g.dist;
    CHECK(worst == AbsValue::pw(-(4 + l + 1)));
  }

  // windows too small for the deep blocks: refuse, don't guess
  QuadUnit tight(F, P(F, {0, 1}), 1, 8);
  CHECK_THROWS_AS(renorm_basis(tight, 1, 0, 6), precision_error);
}

TEST_CASE("Hausdorff bound against the ideal model") {
  auto F = Field::make(3, 1);
  QuadUnit u(F, P(F, {0, 1}), 1, 40);
  for (int N = 1; N <= 3; ++N) {
    auto gens = renorm_basis(u, N, 0, N + 3);
    std::vector<Laurent> A;
    for (auto& g : gens) A.push_back(g.val);
    auto B = ideal_model_basis(u, 0, 4);
    CHECK(hausdorff_bound(A, B) == AbsValue::pw(-(2 * N + 1)));
  }

  QuadUnit v(F, P(F, {0, 0, 1}), 1, 44); // d = 2
  for (int N = 1; N <= 2; ++N)
    for (int l = 0; l <= 1; ++l) {
      auto gens = renorm_basis(v, N, l, N + 3);
      std::vector<Laurent> A;
      for (auto& g : gens) A.push_back(g.val);
      auto B = ideal_model_basis(v, l, 4);
      CHECK(hausdorff_bound(A, B) == AbsValue::pw(-(4 * N + l + 1)));
    }
}

TEST_CASE("multiplication nearly preserves the rescaled lattice") {
  auto F = Field::make(3, 1);
  QuadUnit u(F, P(F, {0, 1}), 1, 40); // d = 1
  for (const Laurent& alpha :
       {u.f(), u.f().pow_int(2), u.f() + u.f().shifted(1)}) {
    auto chk = approx_action_check(u, 2, 0, alpha, 8);
    CHECK(chk.ok);
    CHECK(chk.tested > 0);
    CHECK(chk.worst <= chk.allowed);
  }

  QuadUnit v(F, P(F, {0, 0, 1}), 1, 40); // d = 2
  for (int l = 0; l <= 1; ++l)
    for (const Laurent& alpha : {v.f(), v.f().shifted(1), v.f().pow_int(2),
                                 v.f() + v.f().shifted(1)}) {
      auto chk = approx_action_check(v, 1, l, alpha, 5);
      CHECK(chk.ok);
    }

  CHECK_THROWS_AS(approx_action_check(u, 2, 0, Laurent::zero(F), 6),
                  domain_error);
}

TEST_CASE("input validation") {
  auto F = Field::make(3, 1);
  QuadUnit u(F, P(F, {0, 1}), 1, 20);
  CHECK_THROWS_AS(lam_bruteforce(u, 0, 5), domain_error);
  CHECK_THROWS_AS(lam_structural(u, 0, 5), domain_error);
  CHECK_THROWS_AS(lam_bruteforce(u, 1, -1), domain_error);
  CHECK_THROWS_AS(renorm_basis(u, -1, 0, 3), domain_error);
  CHECK_THROWS_AS(renorm_basis(u, 1, 1, 3), domain_error); // l >= d
  CHECK_THROWS_AS(renorm_basis(u, 2, 0, 1), domain_error); // nmax < N
  CHECK_THROWS_AS(ideal_model_basis(u, 1, 3), domain_error);
  CHECK_THROWS_AS(ideal_model_basis(u, 0, 0), domain_error);
  // window cannot certify the conditions: precision error, not garbage
  CHECK_THROWS_AS(lam_bruteforce(u, 30, 8), precision_error);
}
