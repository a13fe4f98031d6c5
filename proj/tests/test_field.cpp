#include "doctest.h"

#include "qj/field.hpp"

using namespace qj;

TEST_CASE("prime field F_3 basics") {
  auto F = Field::make(3, 1);
  CHECK(F->q() == 3);
  CHECK(F->add(1, 2) == 0);
  CHECK(F->sub(0, 1) == 2);
  CHECK(F->neg(2) == 1);
  CHECK(F->mul(2, 2) == 1);
  CHECK(F->inv(2) == 2);
  CHECK(F->pow(2, -1) == 2);
  CHECK(F->pow(2, 2) == 1);
  CHECK(F->from_int(-1) == 2);
  CHECK(F->from_int(7) == 1);
  CHECK_THROWS_AS(F->inv(0), domain_error);
}

TEST_CASE("deterministic modulus choices are frozen") {
  // First monic primitive polynomial in the documented scan order.
  auto F4 = Field::make(2, 2);
  CHECK(F4->modulus() == std::vector<std::uint32_t>{1, 1, 1}); // x^2+x+1
  auto F8 = Field::make(2, 3);
  CHECK(F8->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1}); // x^3+x+1
  auto F9 = Field::make(3, 2);
  // x^2+1 is irreducible but x has order 4 there; the scan must skip to
  // x^2+x+2, where x generates all 8 nonzero elements.
  CHECK(F9->modulus() == std::vector<std::uint32_t>{2, 1, 1});
  CHECK(F9->generator() == 3); // the class of x
}

TEST_CASE("F_4 multiplication on the power basis") {
  auto F = Field::make(2, 2);
  fe_t x = 2, xp1 = 3;
  CHECK(F->mul(x, x) == xp1);        // x^2 = x+1
  CHECK(F->mul(x, xp1) == 1);        // x^3 = 1
  CHECK(F->inv(x) == xp1);
  CHECK(F->add(x, xp1) == 1);
}

TEST_CASE("F_9 frobenius and powers") {
  auto F = Field::make(3, 2);
  fe_t x = 3;
  // x^3 = x * x^2 = x*(2x+1) = 2x^2+x = 2(2x+1)+x = 2x+2, code 8.
  CHECK(F->frobenius(x, 1) == 8);
  CHECK(F->pow(x, 3) == 8);
  CHECK(F->frobenius(x, 2) == x); // q-power fixes everything
  for (fe_t a : F->elements())
    CHECK(F->frobenius(a, 1) == F->pow(a, 3));
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (auto F : {Field::make(2, 2), Field::make(3, 2), Field::make(5, 1)}) {
    auto els = F->elements();
    CHECK(els.size() == F->q());
    for (fe_t a : els)
      for (fe_t b : els) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        if (b != 0)
          CHECK(F->mul(F->div(a, b), b) == a);
        for (fe_t c : els) {
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
          CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
        }
      }
  }
}

TEST_CASE("squares and canonical square roots") {
  auto F3 = Field::make(3, 1);
  CHECK(F3->is_square(1));
  CHECK(!F3->is_square(2));
  CHECK(F3->sqrt(1) == 1); // even-dlog branch, not -1
  CHECK_THROWS_AS(F3->sqrt(2), domain_error);

  auto F9 = Field::make(3, 2);
  int squares = 0;
  for (fe_t a : F9->elements())
    if (F9->is_square(a)) {
      ++squares;
      fe_t r = F9->sqrt(a);
      CHECK(F9->mul(r, r) == a);
      if (a != 0)
        CHECK(F9->dlog(r) < (F9->q() - 1) / 2); // canonical branch
    }
  CHECK(squares == 5); // 0 plus (q-1)/2 nonzero squares

  // Char 2: everything is a square, root is unique.
  auto F8 = Field::make(2, 3);
  for (fe_t a : F8->elements()) {
    CHECK(F8->is_square(a));
    fe_t r = F8->sqrt(a);
    CHECK(F8->mul(r, r) == a);
  }
}

TEST_CASE("element strings round trip") {
  auto F9 = Field::make(3, 2);
  CHECK(F9->to_string(7) == "21"); // 2x+1, most significant first
  CHECK(F9->parse("21") == 7);
  CHECK(F9->to_string(0) == "00");
  for (fe_t a : F9->elements())
    CHECK(F9->parse(F9->to_string(a)) == a);
  CHECK_THROWS_AS(F9->parse("3x"), domain_error);
  CHECK_THROWS_AS(F9->parse("2"), domain_error); // wrong width
}

TEST_CASE("caller-supplied modulus is validated") {
  // x^2+1 over F_3 is irreducible: accepted even though x is not primitive.
  auto F = Field::make(3, 2, {1, 0, 1});
  CHECK(F->q() == 9);
  fe_t x = 3;
  CHECK(F->mul(x, x) == 2); // x^2 = -1
  CHECK(F->pow(F->generator(), 4) != 1);
  // x^2+2 = (x-1)(x+1): rejected.
  CHECK_THROWS_AS(Field::make(3, 2, {2, 0, 1}), domain_error);
  CHECK_THROWS_AS(Field::make(3, 2, {1, 0, 2}), domain_error); // not monic
}

TEST_CASE("dlog is consistent with the generator") {
  for (auto F : {Field::make(3, 2), Field::make(2, 3), Field::make(7, 1)}) {
    fe_t g = F->generator();
    for (fe_t a : F->elements())
      if (a != 0)
        CHECK(F->pow(g, F->dlog(a)) == a);
    CHECK_THROWS_AS(F->dlog(0), domain_error);
  }
}
