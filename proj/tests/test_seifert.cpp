#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "openbook/cyclotomic.hpp"
#include "openbook/hermitian.hpp"
#include "openbook/poly.hpp"
#include "openbook/seifert.hpp"
#include "test_util.hpp"

using namespace openbook;

namespace {

IntMatrix trefoil() {
  IntMatrix l(2, 2);
  l(0, 0) = -1;
  l(0, 1) = 1;
  l(1, 1) = -1;
  return l;
}

IntMatrix from_rows(std::vector<std::vector<int>> rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

// Independent route to the same inertia: build B(w) over Q[t]/Phi_m, run the
// exact congruence elimination, and certify each pivot sign by interval
// evaluation of the real embedding.
SignatureTriple exact_tl(const IntMatrix& l, unsigned long a, unsigned long m) {
  CycloField f(m);
  using Elem = CycloField::Elem;
  const std::size_t n = l.rows();
  const Elem one = f.from_int(1);
  const Elem c1 = f.sub(one, f.power(a % m));
  const Elem c2 = f.sub(one, f.power(m - a % m));
  std::vector<std::vector<Elem>> b(n, std::vector<Elem>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b[i][j] = f.add(f.mul(c1, f.from_int(l(i, j))), f.mul(c2, f.from_int(l(j, i))));
  detail::ExactHermitianPivots piv = detail::hermitian_eliminate_exact(f, std::move(b));
  SignatureTriple out;
  out.null = piv.null;
  for (const Elem& p : piv.pivots) {
    int s = 0;
    for (mpfr_prec_t prec = 128; prec <= 16384 && s == 0; prec *= 2)
      s = f.real_embedding(p, prec).certified_sign();
    REQUIRE(s != 0);
    if (s > 0)
      ++out.positive;
    else
      ++out.negative;
  }
  return out;
}

std::optional<unsigned long> brute_force_d(const SeifertData& sd, unsigned long d_max) {
  for (unsigned long d = 1; d <= d_max; ++d)
    if (variation_power(sd, d).is_zero()) return d;
  return std::nullopt;
}

}  // namespace

TEST_CASE("trefoil invariants have the fixed conventions", "[seifert]") {
  SeifertData sd(trefoil(), 1);
  REQUIRE(sd.mu() == 2);
  REQUIRE(is_fibered(sd));
  OpenBookInvariants inv = invariants(sd);
  REQUIRE(inv.S == from_rows({{0, 1}, {-1, 0}}));
  REQUIRE(inv.h == from_rows({{0, 1}, {-1, 1}}));
  REQUIRE(inv.V == from_rows({{1, 1}, {0, 1}}));
  REQUIRE(char_poly(inv.h) == IntPoly{1, -1, 1});
}

TEST_CASE("SeifertData rejects non-square matrices", "[seifert]") {
  REQUIRE_THROWS_AS(SeifertData(IntMatrix(2, 3), 1), NonSquare);
}

TEST_CASE("non-unit determinant is not fibered", "[seifert]") {
  SeifertData sd(from_rows({{2, 0}, {0, 1}}), 2);
  REQUIRE_FALSE(is_fibered(sd));
  REQUIRE_THROWS_AS(invariants(sd), NotFibered);
  REQUIRE_THROWS_AS(cover_signature(sd, 3), NotFibered);
  REQUIRE(intersection_form(sd) == from_rows({{4, 0}, {0, 2}}));
  REQUIRE_FALSE(is_homotopy_sphere_link(sd));
}

TEST_CASE("intersection form symmetrizes by page parity", "[seifert]") {
  IntMatrix l = trefoil();
  REQUIRE(intersection_form(SeifertData(l, 1)) == l - l.transpose());
  REQUIRE(intersection_form(SeifertData(l, 2)) == l + l.transpose());
}

TEST_CASE("h - I = V * S on random fibered data", "[seifert]") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::size_t> dims(0, 5);
  std::uniform_int_distribution<unsigned long> page(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    SeifertData sd = testutil::random_fibered(rng, dims(rng), page(rng));
    OpenBookInvariants inv = invariants(sd);
    const std::size_t mu = sd.mu();
    REQUIRE(inv.h - IntMatrix::identity(mu) == inv.V * inv.S);
    REQUIRE(is_unimodular(inv.h));
    REQUIRE(is_unimodular(inv.V));
  }
}

TEST_CASE("variation_power pinned values and cocycle rule", "[seifert]") {
  SeifertData sd(trefoil(), 1);
  OpenBookInvariants inv = invariants(sd);
  REQUIRE(variation_power(sd, 1) == inv.V);
  REQUIRE(variation_power(sd, 6).is_zero());
  REQUIRE_FALSE(variation_power(sd, 5).is_zero());
  REQUIRE_THROWS_AS(variation_power(sd, 0), OutOfRange);

  std::mt19937 rng(29);
  std::uniform_int_distribution<std::size_t> dims(1, 5);
  std::uniform_int_distribution<unsigned long> expo(1, 6);
  std::uniform_int_distribution<unsigned long> page(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    SeifertData r = testutil::random_fibered(rng, dims(rng), page(rng));
    unsigned long a = expo(rng), b = expo(rng);
    IntMatrix ha = invariants(r).h.pow(a);
    REQUIRE(variation_power(r, a + b) ==
            variation_power(r, a) + ha * variation_power(r, b));
  }
}

TEST_CASE("min_trivializing_power matches a brute-force scan", "[seifert]") {
  SeifertData sd(trefoil(), 1);
  REQUIRE(min_trivializing_power(sd, 64) == 6u);
  REQUIRE_FALSE(min_trivializing_power(sd, 5).has_value());

  std::mt19937 rng(31);
  std::uniform_int_distribution<std::size_t> dims(1, 4);
  std::uniform_int_distribution<unsigned long> page(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    SeifertData r = testutil::random_fibered(rng, dims(rng), page(rng));
    REQUIRE(min_trivializing_power(r, 24) == brute_force_d(r, 24));
  }
}

TEST_CASE("trefoil cover homology over one period", "[seifert]") {
  SeifertData sd(trefoil(), 1);
  const std::vector<AbelianGroup> expected = {
      AbelianGroup{},           AbelianGroup{0, {3}}, AbelianGroup{0, {2, 2}},
      AbelianGroup{0, {3}},     AbelianGroup{},       AbelianGroup{2, {}},
      AbelianGroup{},           AbelianGroup{0, {3}}};
  for (unsigned long k = 1; k <= 8; ++k) {
    CoverHomology ch = cover_homology(sd, k);
    REQUIRE(ch.k == k);
    REQUIRE(ch.h_n == expected[k - 1]);
    REQUIRE(ch.h_n_plus_1.torsion.empty());
    REQUIRE(ch.h_n_plus_1.free_rank == ch.h_n.free_rank);
  }
  // at k = d the variation power vanishes, so both groups are Z^mu
  CoverHomology at_d = cover_homology(sd, 6);
  REQUIRE(at_d.h_n == AbelianGroup{2, {}});
  REQUIRE(at_d.h_n_plus_1 == AbelianGroup{2, {}});
}

TEST_CASE("is_homotopy_sphere_link and double_homology", "[seifert]") {
  SeifertData sd(trefoil(), 1);
  REQUIRE(is_homotopy_sphere_link(sd));
  REQUIRE(is_homotopy_sphere_link(SeifertData(IntMatrix(0, 0), 3)));

  auto dh = double_homology(sd);
  REQUIRE(dh.size() == 3);
  REQUIRE(dh[0] == std::pair<unsigned long, AbelianGroup>{0, AbelianGroup{1, {}}});
  REQUIRE(dh[1] == std::pair<unsigned long, AbelianGroup>{1, AbelianGroup{4, {}}});
  REQUIRE(dh[2] == std::pair<unsigned long, AbelianGroup>{2, AbelianGroup{1, {}}});
}

TEST_CASE("tristram_levine pinned trefoil values", "[tristram-levine]") {
  SeifertData sd(trefoil(), 1);
  REQUIRE(tristram_levine_signature(sd, 1, 6) == SignatureTriple{0, 1, 1});
  REQUIRE(tristram_levine_signature(sd, 1, 7) == SignatureTriple{1, 1, 0});
  REQUIRE(tristram_levine_signature(sd, 1, 2) == SignatureTriple{0, 2, 0});
  REQUIRE(tristram_levine_signature(sd, 2, 6) == SignatureTriple{0, 2, 0});

  REQUIRE_THROWS_AS(tristram_levine_signature(sd, 0, 5), InvalidRoot);
  REQUIRE_THROWS_AS(tristram_levine_signature(sd, 10, 5), InvalidRoot);
  REQUIRE_THROWS_AS(tristram_levine_signature(sd, 1, 0), OutOfRange);

  SeifertData disk(IntMatrix(0, 0), 1);
  REQUIRE(tristram_levine_signature(disk, 1, 4) == SignatureTriple{0, 0, 0});
}

TEST_CASE("tristram_levine is invariant under conjugate roots", "[tristram-levine]") {
  SeifertData sd(trefoil(), 1);
  for (long j = 1; j <= 5; ++j)
    REQUIRE(tristram_levine_signature(sd, j, 6) ==
            tristram_levine_signature(sd, 6 - j, 6));

  std::mt19937 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    SeifertData r = testutil::random_fibered(rng, 3, 1);
    for (long j : {1, 2, 3})
      REQUIRE(tristram_levine_signature(r, j, 7) ==
              tristram_levine_signature(r, 7 - j, 7));
  }
}

TEST_CASE("tristram_levine agrees with the exact cyclotomic oracle",
          "[tristram-levine]") {
  const std::vector<unsigned long> orders = {2, 3, 4, 5, 6, 8, 12};

  SeifertData sd(trefoil(), 1);
  CoverSignatureEngine engine(sd);
  for (unsigned long m : orders) {
    REQUIRE(engine.tristram_levine(1, m) == exact_tl(sd.L, 1, m));
    REQUIRE(engine.tristram_levine(long(m) - 1, m) == exact_tl(sd.L, m - 1, m));
  }

  std::mt19937 rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    SeifertData r = testutil::random_fibered(rng, 4, 1);
    CoverSignatureEngine e(r);
    for (unsigned long m : orders) {
      REQUIRE(e.tristram_levine(1, m) == exact_tl(r.L, 1, m));
      REQUIRE(e.tristram_levine(long(m) - 1, m) == exact_tl(r.L, m - 1, m));
    }
  }
}

TEST_CASE("engine and free functions agree", "[tristram-levine]") {
  SeifertData sd(trefoil(), 1);
  CoverSignatureEngine engine(sd);
  for (unsigned long k = 1; k <= 8; ++k) {
    CoverSignature a = engine.cover_signature(k);
    CoverSignature b = cover_signature(sd, k);
    REQUIRE(a.value == b.value);
    REQUIRE(a.meaningful == b.meaningful);
  }
  // memoized lookups reproduce the first answer
  REQUIRE(engine.tristram_levine(1, 6) == engine.tristram_levine(1, 6));
}

TEST_CASE("cover_signature pinned values and parity gate", "[tristram-levine]") {
  SeifertData sd(trefoil(), 1);
  CoverSignature s1 = cover_signature(sd, 1);
  REQUIRE(s1.value == 0);
  REQUIRE(s1.meaningful);
  for (unsigned long k : {5, 6, 7}) {
    CoverSignature s = cover_signature(sd, k);
    REQUIRE(s.value == -8);
    REQUIRE(s.meaningful);
  }
  REQUIRE_THROWS_AS(cover_signature(sd, 0), OutOfRange);

  SeifertData even(trefoil(), 2);
  CoverSignature se = cover_signature(even, 6);
  REQUIRE(se.value == 0);
  REQUIRE_FALSE(se.meaningful);
}

TEST_CASE("precision cap below the first rung is reported", "[tristram-levine]") {
  CoverSignatureEngine engine(SeifertData(trefoil(), 1), 64);
  // the form at a 6th root is singular, so machine intervals cannot finish
  REQUIRE_THROWS_AS(engine.tristram_levine(1, 6), PrecisionExhausted);
  // nondegenerate roots still succeed on the machine-interval rung
  REQUIRE(engine.tristram_levine(1, 7) == SignatureTriple{1, 1, 0});
}

TEST_CASE("det_pencil factors through the monodromy char poly", "[tristram-levine]") {
  REQUIRE(det_pencil(trefoil()) == IntPoly{1, -1, 1});

  std::mt19937 rng(43);
  std::uniform_int_distribution<std::size_t> dims(1, 5);
  for (int trial = 0; trial < 25; ++trial) {
    SeifertData r = testutil::random_fibered(rng, dims(rng), 1);
    auto m = to_integral(inverse(to_rational(r.L)) * to_rational(r.L.transpose()));
    REQUIRE(m.has_value());
    IntPoly cp = char_poly(*m);
    Int scale = determinant(r.L) * (r.mu() % 2 == 0 ? 1 : -1);
    IntPoly expect(cp.size());
    for (std::size_t i = 0; i < cp.size(); ++i) expect[i] = scale * cp[i];
    REQUIRE(det_pencil(r.L) == expect);
  }
}
