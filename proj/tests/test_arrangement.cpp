#include <random>

#include "doctest.h"
#include "lefkit/arrangement.hpp"
#include "lefkit/lefschetz.hpp"
#include "support.hpp"

using namespace lefkit;
using namespace lefkit::testing;

namespace {

Arrangement arr(const RingPtr& ring, const std::string& forms) {
  return Arrangement(ring, parse_polynomial_list(forms, ring));
}

}  // namespace

TEST_CASE("arrangement construction and validation") {
  RingPtr r = ring3();
  Arrangement a = arr(r, "x, y, z, x + y + z");
  CHECK(a.size() == 4);
  CHECK(a.is_central());
  Arrangement affine = arr(r, "x, y + 1");
  CHECK_FALSE(affine.is_central());
  CHECK_THROWS_AS(arr(r, "x, 2*x"), PreconditionError);          // proportional
  CHECK_THROWS_AS(arr(r, "x^2"), PreconditionError);             // degree 2
  CHECK_THROWS_AS(arr(r, "x, 0"), PreconditionError);            // zero form
  CHECK_THROWS_AS(arr(r, "x + 1, 2*x + 2"), PreconditionError);  // proportional affine
  CHECK_THROWS_AS(defining_polynomial(affine), CentralityError);
}

TEST_CASE("defining polynomial and jacobian ideal") {
  RingPtr r = ring3();
  Arrangement braid = arr(r, "x, y, z, x - y, x - z, y - z");
  Polynomial q = defining_polynomial(braid);
  CHECK(q.degree() == 6);
  CHECK(q == poly(r, "x^3*y^2*z - x^2*y^3*z - x^3*y*z^2 + x*y^3*z^2 + x^2*y*z^3 - x*y^2*z^3"));
  Ideal J = jacobian_ideal(braid);
  CHECK(J.generators().size() == 4);
  CHECK(hilbert_function_ideal(J, 1) == 3);

  RingPtr r2 = ring2();
  Arrangement boolean2 = arr(r2, "x, y");
  Ideal J2 = jacobian_ideal(boolean2);
  // Q = xy with partials y and x.
  CHECK(J2.generators().size() == 3);
  CHECK(leading_term_ideal(buchberger(J2)) == mono_ideal(r2, "x, y"));
}

TEST_CASE("freeness verdicts pinned") {
  RingPtr r = ring3();
  FreenessVerdict braid = is_free(arr(r, "x, y, z, x - y, x - z, y - z"));
  CHECK(braid.free);
  CHECK(braid.lambda == std::vector<int>{1, 2, 4, 5, 7});
  CHECK(braid.gin == mono_ideal(r, "x^5, x^4*y, x^3*y^2, x^2*y^4, x*y^5, y^7"));

  FreenessVerdict notfree = is_free(arr(r, "x, y, z, x + y + z"));
  CHECK_FALSE(notfree.free);
  REQUIRE(notfree.violating_generator.has_value());
  CHECK(*notfree.violating_generator == mono(r, "y^3*z"));
  CHECK(notfree.gin == mono_ideal(r, "x^3, x^2*y, x*y^2, y^4, y^3*z"));

  RingPtr r2 = ring2();
  FreenessVerdict boolean2 = is_free(arr(r2, "x, y"));
  CHECK(boolean2.free);
  CHECK(boolean2.lambda == std::vector<int>{1});

  // A single hyperplane has a unit jacobian ideal: free through that branch.
  FreenessVerdict single = is_free(arr(r2, "x"));
  CHECK(single.free);
  CHECK(single.gin.is_unit());
}

TEST_CASE("shape check on pinned arrangements") {
  RingPtr r = ring3();
  ShapeCheck braid = rgin_shape_check(arr(r, "x, y, z, x - y, x - z, y - z"));
  CHECK(braid.ok);
  CHECK(braid.has_x1_power);
  CHECK(braid.has_pure_x2_power);
  CHECK(braid.tail_only_generators.empty());
  ShapeCheck nf = rgin_shape_check(arr(r, "x, y, z, x + y + z"));
  CHECK(nf.ok);
  ShapeCheck single = rgin_shape_check(arr(r, "x"));
  CHECK(single.ok);
  CHECK(single.unit_branch);
}

TEST_CASE("conjecture reports pinned") {
  RingPtr r = ring3();
  ConjectureReport a = check_conjecture(arr(r, "x, y, z, x + y + z"));
  CHECK(a.holds);
  CHECK_FALSE(a.vacuous);
  CHECK(a.d0 == 4);
  CHECK(a.offenders.empty());

  ConjectureReport braid = check_conjecture(arr(r, "x, y, z, x - y, x - z, y - z"));
  CHECK(braid.holds);
  CHECK(braid.d0 == 7);

  ConjectureReport single = check_conjecture(arr(r, "x"));
  CHECK(single.holds);
  CHECK(single.vacuous);
  CHECK(single.d0 == 0);

  RingPtr r2 = ring2();
  CHECK_THROWS_AS(check_conjecture(arr(r2, "x, y")), PreconditionError);
}

TEST_CASE("arrangement file parsing, forms mode") {
  Arrangement a = parse_arrangement_file(
      "# comment first\nvars: x, y, z\nx\n# interior comment\ny\nz\nx + y + z\n");
  CHECK(a.size() == 4);
  CHECK(a.ring()->nvars() == 3);
  CHECK(a.is_central());
  CHECK_THROWS_AS(parse_arrangement_file("x\ny\n"), ParseError);
  CHECK_THROWS_AS(parse_arrangement_file("vars: x, y\n"), ParseError);
  try {
    parse_arrangement_file("vars: x, y\nx\ny + q\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("arrangement file parsing, matrix mode") {
  Arrangement named = parse_arrangement_file(
      "matrix: x, y, z\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n");
  CHECK(named.size() == 4);
  CHECK(named.forms()[3] == poly(named.ring(), "x + y + z"));
  Arrangement counted = parse_arrangement_file("matrix: 2\n1 0\n-1/2 3\n");
  CHECK(counted.size() == 2);
  CHECK(counted.ring()->var_name(0) == "x1");
  CHECK(counted.forms()[1] == poly(counted.ring(), "-1/2*x1 + 3*x2"));
  CHECK_THROWS_AS(parse_arrangement_file("matrix: 2\n1 0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_arrangement_file("matrix: 2\n1 bad\n"), ParseError);
  CHECK_THROWS_AS(parse_arrangement_file("matrix: 0\n"), ParseError);
}

TEST_CASE("arrangement file formatting round trips") {
  RingPtr r = ring3();
  Arrangement a = arr(r, "x, y - 2*z, z, x + y + z");
  std::string text = format_arrangement_file(a, {"sample file"});
  CHECK(text.find("# sample file") != std::string::npos);
  Arrangement back = parse_arrangement_file(text);
  REQUIRE(back.size() == a.size());
  for (int i = 0; i < a.size(); ++i) {
    CHECK(format_polynomial(back.forms()[i]) == format_polynomial(a.forms()[i]));
  }
}

TEST_CASE("random central arrangements are deterministic and valid") {
  RingPtr r = ring3();
  Arrangement a = random_central_arrangement(r, 5, 99, 5);
  Arrangement b = random_central_arrangement(r, 5, 99, 5);
  REQUIRE(a.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(a.forms()[i] == b.forms()[i]);
  CHECK(a.is_central());
  Arrangement c = random_central_arrangement(r, 5, 100, 5);
  bool all_equal = true;
  for (int i = 0; i < 5; ++i) all_equal = all_equal && a.forms()[i] == c.forms()[i];
  CHECK_FALSE(all_equal);
  // Infeasible request: more hyperplanes than distinct directions exist.
  CHECK_THROWS_AS(random_central_arrangement(ring2(), 5, 1, 1), GenerationError);
}

TEST_CASE("conjecture search is deterministic and worker independent") {
  ConjectureSearchParams p;
  p.count = 30;
  p.seed = 2024;
  ConjectureSearchSummary a = run_conjecture_search(p);
  ConjectureSearchSummary b = run_conjecture_search(p);
  ConjectureSearchParams pw = p;
  pw.workers = 4;
  ConjectureSearchSummary c = run_conjecture_search(pw);
  REQUIRE(a.outcomes.size() == 30);
  CHECK(a.holds + a.vacuous + a.counterexamples + a.gin_failures == 30);
  for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
    CHECK(a.outcomes[i].kind == b.outcomes[i].kind);
    CHECK(a.outcomes[i].kind == c.outcomes[i].kind);
    CHECK(a.outcomes[i].n == c.outcomes[i].n);
    CHECK(a.outcomes[i].index == static_cast<int>(i));
  }
  CHECK(a.counterexamples == 0);
}

TEST_CASE("conjecture samples replay") {
  ConjectureSearchParams p;
  p.count = 10;
  p.seed = 5150;
  ConjectureSearchSummary s = run_conjecture_search(p);
  for (const SampleOutcome& o : s.outcomes) {
    Arrangement a = conjecture_sample(p, o.index);
    CHECK(a.size() == o.n);
    CHECK(a.is_central());
    if (o.kind == SampleOutcome::Kind::kHolds) {
      GinOptions g = p.gin;
      g.seed = o.gin_seed;
      ConjectureReport rep = check_conjecture(a, g);
      CHECK(rep.holds);
      REQUIRE(o.report.has_value());
      CHECK(rep.d0 == o.report->d0);
    }
  }
}

TEST_CASE("sampled free arrangements have the full SLP") {
  // Freeness implies the l-SLP for arrangement jacobian algebras.
  std::mt19937_64 rng(139);
  RingPtr r = ring3();
  int free_seen = 0;
  for (int it = 0; it < 60; ++it) {
    std::uniform_int_distribution<int> nn(1, 5);
    Arrangement a = random_central_arrangement(r, nn(rng), 9000 + it, 3);
    GinOptions o;
    o.seed = 333 + static_cast<std::uint64_t>(it);
    FreenessVerdict v = is_free(a, o);
    if (!v.free) continue;
    ++free_seen;
    CHECK(has_k_slp(v.gin, 3).holds);
  }
  CHECK(free_seen > 10);
}
