#include "homlie/linalg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "homlie/errors.hpp"
#include "homlie/polynomial.hpp"
#include "homlie/subspace.hpp"
#include "test_util.hpp"

using namespace homlie;

namespace {
Mat from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  Mat m(static_cast<Index>(rows.size()),
        static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}
}  // namespace

TEST_CASE("kernel") {
  CHECK(kernel(Mat::Identity(2, 2)).is_zero());

  const Subspace k = kernel(from_rows({{1, 1}, {1, 1}}));
  REQUIRE(k.dim() == 1);
  Vec v(2);
  v << 1, -1;
  CHECK(k.basis().row(0).transpose() == v);

  CHECK(kernel(Mat::Zero(3, 3)).is_full());
}

TEST_CASE("kernel rank-nullity on random matrices") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 50; ++iter) {
    std::uniform_int_distribution<Index> d(1, 5);
    const Index r = d(rng), c = d(rng);
    const Mat m = testutil::rnd_matrix(rng, r, c);
    CHECK(rank(m) + kernel(m).dim() == c);
    // every kernel basis row is annihilated
    const Mat kb = kernel_basis(m);
    CHECK(is_zero(m * kb.transpose()));
  }
}

TEST_CASE("rref is idempotent and canonical") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    const Mat m = testutil::rnd_matrix(rng, 4, 4);
    const Rref r1 = rref(m);
    const Rref r2 = rref(r1.mat);
    CHECK(r1.mat == r2.mat);
    CHECK(r1.pivots == r2.pivots);
    // row space unchanged under invertible row mixing
    const Mat g = testutil::rnd_invertible(rng, 4);
    CHECK(rref(g * m).mat == r1.mat);
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 25; ++iter) {
    const Mat m = testutil::rnd_invertible(rng, 3);
    CHECK(mul(inverse(m), m) == Mat::Identity(3, 3));
    const Vec b = testutil::rnd_vector(rng, 3);
    Vec x;
    REQUIRE(solve(m, b, x));
    CHECK(m * x == b);
  }
  Mat sing = from_rows({{1, 2}, {2, 4}});
  CHECK_THROWS_AS(inverse(sing), HomError);
  Vec bad(2);
  bad << 1, 0;
  Vec x;
  CHECK_FALSE(solve(sing, bad, x));
}

TEST_CASE("tensor product of maps") {
  CHECK(kron(Mat::Identity(2, 2), Mat::Identity(3, 3)) == Mat::Identity(6, 6));

  const Mat a = from_rows({{1, 2}, {3, 4}});
  CHECK(is_zero(kron(a, Mat::Zero(2, 2))));

  const Mat n = from_rows({{0, 1}, {0, 0}});
  const Mat nn = kron(n, n);
  CHECK(nn(0, 3) == 1);
  CHECK(nn.cwiseAbs().sum() == 1);
}

TEST_CASE("tensor product identities on random matrices") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 30; ++iter) {
    const Mat a = testutil::rnd_matrix(rng, 2, 2);
    const Mat b = testutil::rnd_matrix(rng, 3, 3);
    const Mat c = testutil::rnd_matrix(rng, 2, 2);
    const Mat d = testutil::rnd_matrix(rng, 3, 3);
    // mixed product law
    CHECK(mul(kron(a, b), kron(c, d)) == kron(mul(a, c), mul(b, d)));
    // bilinearity
    CHECK(kron(a + c, b) == Mat(kron(a, b) + kron(c, b)));
    const Rational s(5, 3);
    CHECK(kron(Mat(s * a), b) == Mat(s * kron(a, b)));
  }
}

TEST_CASE("mul matches operator*") {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 20; ++iter) {
    const Mat a = testutil::rnd_matrix(rng, 3, 4);
    const Mat b = testutil::rnd_matrix(rng, 4, 2);
    CHECK(mul(a, b) == Mat(a * b));
  }
}

TEST_CASE("rational eigenvectors") {
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 3;
  auto ev = rational_eigenvectors(d);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].first == 2);
  CHECK(ev[1].first == 3);
  Vec e1 = Vec::Zero(2), e2 = Vec::Zero(2);
  e1(0) = 1;
  e2(1) = 1;
  CHECK(ev[0].second == e1);
  CHECK(ev[1].second == e2);

  const Mat swap = from_rows({{0, 1}, {1, 0}});
  ev = rational_eigenvectors(swap);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].first == -1);
  CHECK(ev[1].first == 1);

  const Mat rot = from_rows({{0, -1}, {1, 0}});
  CHECK(rational_eigenvectors(rot).empty());  // needs a field extension
}

TEST_CASE("eigenvector property on random triangular matrices") {
  std::mt19937 rng(19);
  for (int iter = 0; iter < 30; ++iter) {
    Mat m = testutil::rnd_matrix(rng, 4, 4);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < i; ++j) m(i, j) = 0;
    const auto ev = rational_eigenvectors(m);
    REQUIRE(!ev.empty());  // triangular: diagonal gives rational eigenvalues
    for (const auto& [lambda, v] : ev) {
      CHECK(!is_zero(v));
      CHECK(Vec(m * v) == Vec(lambda * v));
    }
  }
}

TEST_CASE("characteristic and minimal polynomials") {
  const Mat n = from_rows({{0, 1}, {0, 0}});
  CHECK(char_poly(n) == Polynomial::from_string("T^2"));
  CHECK(min_poly(n) == Polynomial::from_string("T^2"));
  CHECK(min_poly(Mat::Identity(3, 3)) == Polynomial::from_string("T-1"));
  CHECK(char_poly(Mat::Identity(3, 3)) ==
        Polynomial::from_string("T^3-3T^2+3T-1"));

  std::mt19937 rng(23);
  for (int iter = 0; iter < 20; ++iter) {
    const Mat m = testutil::rnd_matrix(rng, 4, 4);
    const Polynomial cp = char_poly(m), mp = min_poly(m);
    CHECK(is_zero(mp(m)));
    Polynomial rem;
    cp.divide(mp, &rem);
    CHECK(rem.is_zero());  // minimal divides characteristic
  }
}

TEST_CASE("companion matrix round trip") {
  const Polynomial f = Polynomial::from_string("T^3 - 2 T + 5/2");
  const Mat c = f.companion();
  CHECK(char_poly(c) == f);
  CHECK(min_poly(c) == f);
}

TEST_CASE("polynomial parsing, printing, roots") {
  CHECK(Polynomial::from_string("T-1").str() == "T - 1");
  CHECK(Polynomial::from_string("T^2-2").str() == "T^2 - 2");
  CHECK(Polynomial::from_string("3T^2 + 1/2 T") ==
        Polynomial({Rational(0), make_rational(1, 2), Rational(3)}));
  const Polynomial f = Polynomial::from_string("T^2 - 2");
  CHECK(Polynomial::from_string(f.str()) == f);
  CHECK(f.rational_roots().empty());

  const Polynomial g =
      Polynomial::from_string("T^3 - T");  // roots 0, 1, -1
  auto roots = g.rational_roots();
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == -1);
  CHECK(roots[1] == 0);
  CHECK(roots[2] == 1);

  const Polynomial h = Polynomial::from_string("2T^2 - 3T + 1");  // 1/2, 1
  roots = h.rational_roots();
  REQUIRE(roots.size() == 2);
  // scalar order compares numerators first, so 1 = 1/1 precedes 1/2
  CHECK(roots[0] == 1);
  CHECK(roots[1] == make_rational(1, 2));

  CHECK_THROWS_AS(Polynomial::from_string("x+1"), HomError);
}

TEST_CASE("flatten round trip") {
  std::mt19937 rng(29);
  const Mat m = testutil::rnd_matrix(rng, 3, 4);
  CHECK(unflatten(flatten(m), 3, 4) == m);
  // index convention matches kron: vec(A X B) = kron(A, B^T) vec(X)
  const Mat a = testutil::rnd_matrix(rng, 3, 3);
  const Mat b = testutil::rnd_matrix(rng, 4, 4);
  CHECK(Vec(kron(a, b.transpose()) * flatten(m)) == flatten(a * m * b));
}
