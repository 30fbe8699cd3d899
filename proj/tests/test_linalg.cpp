#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "openbook/charpoly.hpp"
#include "openbook/poly.hpp"
#include "openbook/signature.hpp"
#include "openbook/smith.hpp"
#include "test_util.hpp"

using namespace openbook;

namespace {

bool smith_shape_ok(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  std::vector<Int> diag;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) diag.push_back(d(i, i));
  bool seen_zero = false;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (diag[i] == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    if (i > 0 && diag[i - 1] != 0 && diag[i] % diag[i - 1] != 0) return false;
  }
  return true;
}

RatMatrix random_symmetric(std::mt19937& rng, std::size_t n) {
  IntMatrix a = testutil::random_matrix(rng, n, n, -4, 4);
  return to_rational(a + a.transpose());
}

}  // namespace

TEST_CASE("snf satisfies its contract on random shapes", "[smith]") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> dims(0, 6);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t r = dims(rng), c = dims(rng);
    IntMatrix a = testutil::random_matrix(rng, r, c, -9, 9);
    SnfResult s = snf(a);
    REQUIRE(s.U * a * s.V == s.D);
    REQUIRE(is_unimodular(s.U));
    REQUIRE(is_unimodular(s.V));
    REQUIRE(smith_shape_ok(s.D));
    if (r == c && r > 0) {
      Int da = determinant(a);
      if (da < 0) da = -da;
      REQUIRE(determinant(s.D) == da);
    }
  }
}

TEST_CASE("snf pinned diagonals", "[smith]") {
  IntMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 4;
  a(1, 0) = 6;
  a(1, 1) = 8;
  SnfResult s = snf(a);
  REQUIRE(s.D(0, 0) == 2);
  REQUIRE(s.D(1, 1) == 4);

  SnfResult id = snf(IntMatrix::identity(3));
  REQUIRE(id.D == IntMatrix::identity(3));

  IntMatrix z(1, 1);
  SnfResult zs = snf(z);
  REQUIRE(zs.D(0, 0) == 0);
}

TEST_CASE("cokernel_structure matches hand computations", "[smith]") {
  IntMatrix d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 4;
  AbelianGroup g = cokernel_structure(d);
  REQUIRE(g.free_rank == 0);
  REQUIRE(g.torsion == std::vector<Int>{2, 4});

  IntMatrix zero_row(1, 2);
  AbelianGroup f = cokernel_structure(zero_row);
  REQUIRE(f.free_rank == 2);
  REQUIRE(f.torsion.empty());

  // circulant relation matrix of the six-fold trefoil cover, cokernel Z^2
  IntMatrix c(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    c(i, i) = 1;
    c(i, (i + 1) % 6) = -1;
    c(i, (i + 2) % 6) = 1;
  }
  AbelianGroup h = cokernel_structure(c);
  REQUIRE(h.free_rank == 2);
  REQUIRE(h.torsion.empty());
}

TEST_CASE("cokernel_structure is invariant under unimodular changes", "[smith]") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> dims(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = dims(rng), c = dims(rng);
    IntMatrix a = testutil::random_matrix(rng, r, c, -6, 6);
    IntMatrix u = testutil::random_unimodular(rng, r);
    IntMatrix v = testutil::random_unimodular(rng, c);
    REQUIRE(cokernel_structure(a) == cokernel_structure(u * a * v));
  }
}

TEST_CASE("is_unimodular accepts exactly det +-1", "[smith]") {
  REQUIRE(is_unimodular(IntMatrix::identity(4)));
  IntMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  REQUIRE(is_unimodular(a));
  a(0, 0) = 3;
  REQUIRE_FALSE(is_unimodular(a));
  REQUIRE_THROWS_AS(is_unimodular(IntMatrix(2, 3)), NonSquare);
}

TEST_CASE("char_poly pinned values and determinant term", "[charpoly]") {
  IntMatrix a(2, 2);
  a(0, 0) = 0;
  a(0, 1) = -1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  REQUIRE(char_poly(a) == IntPoly{1, -1, 1});

  REQUIRE(char_poly(IntMatrix::identity(3)) == IntPoly{-1, 3, -3, 1});

  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> dims(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = dims(rng);
    IntMatrix m = testutil::random_matrix(rng, n, n, -5, 5);
    IntPoly p = char_poly(m);
    REQUIRE(p.size() == n + 1);
    REQUIRE(p.back() == 1);
    Int sign = n % 2 == 0 ? 1 : -1;
    REQUIRE(p.front() == sign * determinant(m));
  }
}

TEST_CASE("modular char poly agrees with the interpolation route", "[charpoly]") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<std::size_t> dims(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = dims(rng);
    IntMatrix m = testutil::random_matrix(rng, n, n, -30, 30);
    REQUIRE(detail::char_poly_crt(m) == char_poly(m));
  }
}

TEST_CASE("rank_bareiss agrees with the Smith rank", "[charpoly]") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> dims(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = dims(rng), c = dims(rng), k = dims(rng);
    // product of an r x k and a k x c matrix forces rank <= k
    IntMatrix a = testutil::random_matrix(rng, r, k, -4, 4) *
                  testutil::random_matrix(rng, k, c, -4, 4);
    REQUIRE(detail::rank_bareiss(a) == rank(a));
  }
  REQUIRE(detail::rank_bareiss(IntMatrix(3, 3)) == 0);
}

TEST_CASE("signature_symmetric pinned forms", "[signature]") {
  RatMatrix pos = to_rational(IntMatrix::identity(2));
  REQUIRE(signature_symmetric(pos) == SignatureTriple{2, 0, 0});

  IntMatrix h(2, 2);
  h(0, 1) = 1;
  h(1, 0) = 1;
  REQUIRE(signature_symmetric(to_rational(h)) == SignatureTriple{1, 1, 0});
  REQUIRE(signature_symmetric(to_rational(h)).sigma() == 0);

  IntMatrix mixed(3, 3);
  mixed(0, 0) = -2;
  mixed(1, 1) = 5;
  REQUIRE(signature_symmetric(to_rational(mixed)) == SignatureTriple{1, 1, 1});

  REQUIRE(signature_symmetric(RatMatrix(0, 0)) == SignatureTriple{0, 0, 0});
}

TEST_CASE("signature_symmetric rejects bad input", "[signature]") {
  REQUIRE_THROWS_AS(signature_symmetric(RatMatrix(2, 3)), NonSquare);
  IntMatrix a(2, 2);
  a(0, 1) = 1;
  REQUIRE_THROWS_AS(signature_symmetric(to_rational(a)), NotSymmetric);
}

TEST_CASE("signature is a congruence invariant", "[signature]") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<std::size_t> dims(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = dims(rng);
    RatMatrix q = random_symmetric(rng, n);
    SignatureTriple s = signature_symmetric(q);
    REQUIRE(s.positive + s.negative + s.null == n);

    RatMatrix p = to_rational(testutil::random_unimodular(rng, n));
    REQUIRE(signature_symmetric(p.transpose() * q * p) == s);
  }
}
