#include <random>

#include "doctest.h"
#include "lefkit/text_io.hpp"
#include "support.hpp"

using namespace lefkit;
using namespace lefkit::testing;

TEST_CASE("polynomial parsing basics") {
  RingPtr r = ring3();
  CHECK(poly(r, "x^2*y - 3/2*z^3") ==
        Polynomial::term(r, mono(r, "x^2*y"), 1) +
            Polynomial::term(r, mono(r, "z^3"), mpq_class(-3, 2)));
  CHECK(poly(r, "0").is_zero());
  CHECK(poly(r, "-x + x").is_zero());
  CHECK(poly(r, "2*x*x") == poly(r, "2*x^2"));
  CHECK(poly(r, "  x \t+ y ") == poly(r, "x + y"));
  CHECK(poly(r, "5") == Polynomial::constant(r, 5));
  CHECK_THROWS_AS(poly(r, "x - - y"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  RingPtr r = ring3();
  CHECK_THROWS_AS(poly(r, "x +"), ParseError);
  CHECK_THROWS_AS(poly(r, "q^2"), ParseError);
  CHECK_THROWS_AS(poly(r, "x^"), ParseError);
  CHECK_THROWS_AS(poly(r, "x^-2"), ParseError);
  CHECK_THROWS_AS(poly(r, "3/0"), ParseError);
  CHECK_THROWS_AS(poly(r, ""), ParseError);
  try {
    poly(r, "x + q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    CHECK(std::string(e.what()).find("column 5") != std::string::npos);
  }
}

TEST_CASE("polynomial list splits on commas and newlines") {
  RingPtr r = ring3();
  std::vector<Polynomial> gens =
      parse_polynomial_list("x^2 - y^2, x*y\n# a comment\ny*z", r);
  REQUIRE(gens.size() == 3);
  CHECK(gens[2] == poly(r, "y*z"));
  CHECK_THROWS_AS(parse_polynomial_list("x,,y", r), ParseError);
}

TEST_CASE("monomial parsing accepts single terms only") {
  RingPtr r = ring3();
  CHECK(parse_monomial("x^2*y", r) == mono(r, "x^2*y"));
  CHECK(parse_monomial("1", r).is_one());
  CHECK_THROWS_AS(parse_monomial("x + y", r), ParseError);
  std::vector<Monomial> gens = parse_monomial_list("x^2, x*y, y^2", r);
  CHECK(gens.size() == 3);
}

TEST_CASE("vars header parsing") {
  RingPtr r = parse_vars(" x , y , z ");
  CHECK(r->nvars() == 3);
  CHECK(r->var_name(1) == "y");
  CHECK_THROWS_AS(parse_vars(""), ParseError);
  CHECK_THROWS_AS(parse_vars("x,,z"), ParseError);
}

TEST_CASE("formatting round trips") {
  RingPtr r = ring3();
  const char* samples[] = {"x^2*y - 3/2*z^3 + 1", "-x + y", "0", "7",
                           "x*y*z - x^3 + 2/5*z^3"};
  for (const char* s : samples) {
    Polynomial f = poly(r, s);
    CHECK(poly(r, format_polynomial(f)) == f);
  }
}

TEST_CASE("formatting round trips on random polynomials") {
  std::mt19937_64 rng(17);
  RingPtr r = ring3();
  for (int it = 0; it < 200; ++it) {
    std::uniform_int_distribution<int> deg(0, 5);
    Polynomial f = random_homogeneous_polynomial(rng, r, deg(rng), 4);
    Polynomial g = random_homogeneous_polynomial(rng, r, deg(rng), 4);
    Polynomial h = f - g.scaled(mpq_class(2, 3));
    CHECK(poly(r, format_polynomial(h)) == h);
  }
}
