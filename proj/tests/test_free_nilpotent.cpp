#include "homlie/free_nilpotent.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "fixtures.hpp"
#include "homlie/errors.hpp"
#include "homlie/linalg.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace homlie;
using fixtures::heisenberg;
using fixtures::swap2;

namespace {

Polynomial poly(std::initializer_list<int> coeffs) {
  std::vector<Rational> c;
  for (int x : coeffs) c.push_back(Rational(x));
  return Polynomial(std::move(c));
}

const Polynomial t_minus_1 = poly({-1, 1});

}  // namespace

TEST_CASE("bracket words order and print") {
  const BracketWord x1 = BracketWord::leaf(0, 0);
  const BracketWord ax1 = BracketWord::leaf(0, 1);
  const BracketWord x2 = BracketWord::leaf(1, 0);
  CHECK(word_less(x1, ax1));
  CHECK(word_less(ax1, x2));
  CHECK_FALSE(word_less(x2, x2));

  const BracketWord w = BracketWord::bracket(x1, BracketWord::bracket(ax1, x2));
  CHECK(w.degree() == 3);
  CHECK(w.str() == "[x1,[a(x1),x2]]");
  CHECK(BracketWord::leaf(2, 2).str() == "a^2(x3)");

  // any leaf sorts before any bracket, and left subtrees decide first
  CHECK(word_less(x2, BracketWord::bracket(x1, x2)));
  CHECK(word_less(BracketWord::bracket(x1, BracketWord::bracket(x1, x2)),
                  BracketWord::bracket(BracketWord::bracket(x1, x2), x1)));
}

TEST_CASE("free algebra, two generators, abelian truncation") {
  auto [alg, pres] = free_multiplicative_nilpotent(2, 2, t_minus_1);
  CHECK(alg.dim() == 2);
  CHECK(structurally_equal(alg, abelian(2, identity(2))));
  CHECK(pres.degree_basis.size() == 1);
  CHECK(pres.degree_of == std::vector<Index>{1, 1});
  CHECK(alg.names() == std::vector<std::string>{"x1", "x2"});
}

TEST_CASE("free algebra, rank two, class two") {
  auto [alg, pres] = free_multiplicative_nilpotent(2, 3, t_minus_1);
  REQUIRE(alg.dim() == 3);
  REQUIRE(pres.degree_basis[1].size() == 1);
  CHECK(pres.degree_basis[1][0].str() == "[x1,x2]");
  CHECK(alg.product(0, 1) == fixtures::unit(3, 2));
  CHECK(alg.product(1, 0) == Vec(-fixtures::unit(3, 2)));
  CHECK(alg.twist() == identity(3));
  CHECK(structurally_equal(alg, heisenberg()));
}

TEST_CASE("free algebra, one generator, quadratic twist polynomial") {
  auto [alg, pres] = free_multiplicative_nilpotent(1, 3, poly({-2, 0, 1}));
  REQUIRE(alg.dim() == 3);
  CHECK(pres.degree_basis[0].size() == 2);
  CHECK(pres.degree_basis[1].size() == 1);
  CHECK(pres.degree_basis[1][0].str() == "[x1,a(x1)]");
  // twist on leaves is the companion matrix: x1 -> a(x1) -> 2 x1
  CHECK(alg.twist().col(0) == fixtures::unit(3, 1));
  CHECK(alg.twist().col(1) == Vec(2 * fixtures::unit(3, 0)));
  // the alpha-orbit of [x1,a(x1)] collapses to the scalar -2
  CHECK(alg.twist()(2, 2) == Rational(-2));
  CHECK(alg.product(0, 1) == fixtures::unit(3, 2));
  CHECK(check_nondegenerate(alg));
}

TEST_CASE("classical dimensions match the necklace counts") {
  for (long k = 1; k <= 3; ++k)
    for (long n = 2; n <= 4; ++n) {
      auto [alg, pres] = free_multiplicative_nilpotent(k, n, t_minus_1);
      long expected = 0;
      for (long d = 1; d < n; ++d) {
        const long wd = oracles::witt_dimension(k, d);
        CHECK(static_cast<long>(pres.degree_basis[d - 1].size()) == wd);
        expected += wd;
      }
      CHECK(static_cast<long>(alg.dim()) == expected);
      CHECK(check_nondegenerate(alg));
    }
}

TEST_CASE("grading law and twist blocks") {
  auto [alg, pres] = free_multiplicative_nilpotent(2, 4, poly({-1, 0, 1}));
  const Index d = alg.dim();
  REQUIRE(static_cast<Index>(pres.degree_of.size()) == d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Index sum = pres.degree_of[i] + pres.degree_of[j];
      const Vec p = alg.product(i, j);
      for (Index r = 0; r < d; ++r)
        if (!p(r).is_zero()) CHECK(pres.degree_of[r] == sum);
      if (sum >= pres.nilindex_bound) CHECK(p == Vec::Zero(d));
    }
  for (Index r = 0; r < d; ++r)
    for (Index c = 0; c < d; ++c)
      if (!alg.twist()(r, c).is_zero())
        CHECK(pres.degree_of[r] == pres.degree_of[c]);
  CHECK(check_nondegenerate(alg));
}

TEST_CASE("vanishing free term degenerates the twist") {
  auto [alg, pres] = free_multiplicative_nilpotent(2, 3, poly({0, 1}));
  CHECK_FALSE(check_nondegenerate(alg));
  // alpha kills the leaves, so Hom-Jacobi imposes nothing at degree 2
  CHECK(pres.degree_basis[1].size() == 1);
}

TEST_CASE("relation rows vanish under any universal map") {
  auto [alg, pres] = free_multiplicative_nilpotent(2, 3, poly({-1, 0, 1}));
  std::mt19937 rng(331);
  const HomAlgebra targets_alg[] = {heisenberg(), abelian(2, swap2())};
  for (const HomAlgebra& l : targets_alg) {
    for (int iter = 0; iter < 5; ++iter) {
      std::vector<Vec> targets;
      for (Index i = 0; i < 2; ++i)
        targets.push_back(testutil::rnd_vector(rng, l.dim()));
      for (Index deg = 2; deg < pres.nilindex_bound; ++deg) {
        const auto cand = candidate_words(pres, deg);
        const Subspace& rel = pres.degree_relations[deg - 1];
        REQUIRE(rel.ambient() == static_cast<Index>(cand.size()));
        for (Index r = 0; r < rel.dim(); ++r) {
          Vec acc = Vec::Zero(l.dim());
          for (Index c = 0; c < rel.ambient(); ++c)
            if (!rel.basis()(r, c).is_zero())
              acc += rel.basis()(r, c) * evaluate_word(cand[c], l, targets);
          CHECK(acc == Vec::Zero(l.dim()));
        }
      }
    }
  }
}

TEST_CASE("universal_map") {
  auto [alg, pres] = free_multiplicative_nilpotent(2, 3, t_minus_1);

  SECTION("zero targets give the zero map") {
    const std::vector<Vec> targets(2, Vec::Zero(3));
    CHECK(universal_map(pres, heisenberg(), targets) == Mat::Zero(3, 3));
  }
  SECTION("basis targets hit the whole algebra") {
    std::vector<Vec> targets = {fixtures::unit(3, 0), fixtures::unit(3, 1)};
    const Mat phi = universal_map(pres, heisenberg(), targets);
    CHECK(rank(phi) == 3);
    CHECK(phi.col(2) == fixtures::unit(3, 2));  // [x1,x2] -> [e1,e2]
  }
  SECTION("random targets always give homomorphisms") {
    std::mt19937 rng(47);
    for (int iter = 0; iter < 10; ++iter) {
      std::vector<Vec> targets;
      for (Index i = 0; i < 2; ++i)
        targets.push_back(testutil::rnd_vector(rng, 3));
      CHECK_NOTHROW(universal_map(pres, heisenberg(), targets));
    }
  }
  SECTION("twist polynomial of the target is enforced") {
    const std::vector<Vec> targets(2, Vec::Zero(2));
    try {
      universal_map(pres, abelian(2, swap2()), targets);
      FAIL("expected PolynomialNotSatisfied");
    } catch (const HomError& e) {
      CHECK(e.code() == Err::PolynomialNotSatisfied);
    }
  }
  SECTION("nilindex above the truncation is rejected") {
    auto [alg2, pres2] = free_multiplicative_nilpotent(3, 2, t_minus_1);
    const std::vector<Vec> targets(3, Vec::Zero(3));
    try {
      universal_map(pres2, heisenberg(), targets);
      FAIL("expected NilindexExceeded");
    } catch (const HomError& e) {
      CHECK(e.code() == Err::NilindexExceeded);
    }
  }
  SECTION("non-nilpotent target is rejected") {
    const std::vector<Vec> targets(2, Vec::Zero(2));
    try {
      universal_map(pres, fixtures::solvable2(), targets);
      FAIL("expected NilindexExceeded");
    } catch (const HomError& e) {
      CHECK(e.code() == Err::NilindexExceeded);
    }
  }
  SECTION("one target per generator") {
    const std::vector<Vec> targets(1, Vec::Zero(3));
    try {
      universal_map(pres, heisenberg(), targets);
      FAIL("expected DimensionMismatch");
    } catch (const HomError& e) {
      CHECK(e.code() == Err::DimensionMismatch);
    }
  }
}

TEST_CASE("present_as_quotient") {
  SECTION("abelian pair with the swap twist") {
    const auto q = present_as_quotient(abelian(2, swap2()));
    CHECK(q.generators == 2);
    CHECK(q.nilindex == 2);
    CHECK(q.twist_poly == Polynomial(std::vector<Rational>{-1, 0, 1}));
    CHECK(q.free_presentation.algebra.dim() == 4);
    CHECK(rank(q.surjection) == 2);
    CHECK(q.kernel_ideal.dim() == 2);
  }
  SECTION("heisenberg with the identity twist") {
    const auto q = present_as_quotient(heisenberg());
    CHECK(q.generators == 3);
    CHECK(q.nilindex == 3);
    CHECK(q.twist_poly == t_minus_1);
    CHECK(q.free_presentation.algebra.dim() == 6);
    CHECK(q.kernel_ideal.dim() == 3);
  }
  SECTION("twisted heisenberg needs the full minimal polynomial") {
    const HomAlgebra l = fixtures::h3_lambda();
    const auto q = present_as_quotient(l);
    CHECK(q.generators == 3);
    CHECK(q.nilindex == 3);
    CHECK(q.twist_poly.degree() == 3);
    for (int root : {2, 3, 6}) CHECK(q.twist_poly(Rational(root)).is_zero());
    // 9 leaves plus C(9,2) independent degree-2 brackets
    CHECK(q.free_presentation.algebra.dim() == 45);
    CHECK(rank(q.surjection) == 3);
    CHECK(q.kernel_ideal.dim() == 42);
  }
  SECTION("an algebra that already is free has zero kernel") {
    const auto q = present_as_quotient(abelian(3, identity(3)));
    CHECK(q.free_presentation.algebra.dim() == 3);
    CHECK(q.kernel_ideal.is_zero());
  }
  SECTION("preconditions") {
    std::vector<Mat> left(3, Mat::Zero(3, 3));
    fixtures::set_bracket(left, 0, 1, fixtures::unit(3, 2));
    try {
      present_as_quotient(
          HomAlgebra(Flavor::lie, left, fixtures::diag({1, 1, 5})));
      FAIL("expected PreconditionFailed");
    } catch (const HomError& e) {
      CHECK(e.code() == Err::PreconditionFailed);
    }
    try {
      present_as_quotient(abelian(2, fixtures::diag({1, 0})));
      FAIL("expected DegenerateTwist");
    } catch (const HomError& e) {
      CHECK(e.code() == Err::DegenerateTwist);
    }
    try {
      present_as_quotient(fixtures::solvable2());
      FAIL("expected NotNilpotent");
    } catch (const HomError& e) {
      CHECK(e.code() == Err::NotNilpotent);
    }
  }
}

TEST_CASE("free construction preconditions") {
  CHECK_THROWS_AS(free_multiplicative_nilpotent(0, 3, t_minus_1), HomError);
  CHECK_THROWS_AS(free_multiplicative_nilpotent(2, 1, t_minus_1), HomError);
  CHECK_THROWS_AS(free_multiplicative_nilpotent(2, 3, poly({-1, 2})), HomError);
}
