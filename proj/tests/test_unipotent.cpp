#include <doctest.h>

#include <functional>
#include <vector>

#include "oracles.hpp"
#include "pcovers/errors.hpp"
#include "pcovers/unipotent/lang.hpp"
#include "pcovers/unipotent/matrix.hpp"
#include "pcovers/unipotent/orbits.hpp"
#include "support.hpp"

using namespace pcov;
using pcov::testing::Rng;
using FqMat = UnipotentMatrix<Fq>;
using SerMat = UnipotentMatrix<LaurentSeries>;

namespace {

FqMat random_matrix(int n, Field f, Rng& rng) {
  std::vector<Fq> e;
  for (std::size_t k = 0; k < FqMat::entry_count(n); ++k) e.push_back(pcov::testing::random_fq(f, rng));
  return FqMat(n, RingKind::kFiniteField, std::move(e));
}

SerMat random_series_matrix(int n, Field f, long lo, long prec, Rng& rng) {
  std::vector<LaurentSeries> e;
  for (std::size_t k = 0; k < SerMat::entry_count(n); ++k) e.push_back(pcov::testing::random_series(f, lo, prec, rng));
  return SerMat(n, RingKind::kLaurent, std::move(e));
}

FqMat mat2(const Fq& a) { return FqMat(2, RingKind::kFiniteField, {a}); }

FqMat identity(int n, Field f) { return FqMat::identity(n, RingKind::kFiniteField, f.zero()); }

std::vector<FqMat> all_matrices(int n, Field f) {
  std::vector<FqMat> out;
  const std::uint64_t total = orbit_universe_size(n, f);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(matrix_from_index(n, f, i));
  return out;
}

bool exists_conjugator(const FqMat& m, const FqMat& m_prime) {
  for (const auto& c : all_matrices(m.dim(), m.field()))
    if (p_conjugate(c, m_prime).entries() == m.entries()) return true;
  return false;
}

}  // namespace

TEST_CASE("umul and uinv basics") {
  const Field f5 = Field::prime(5);
  Rng rng(1);
  const FqMat w = random_matrix(3, f5, rng);
  CHECK(umul(w, identity(3, f5)).entries() == w.entries());
  CHECK(umul(identity(3, f5), w).entries() == w.entries());
  CHECK(umul(mat2(f5.from_int(2)), mat2(f5.from_int(4))).at(0, 1) == f5.from_int(1));
  for (int trial = 0; trial < 30; ++trial) {
    const FqMat r = random_matrix(4, f5, rng);
    CHECK(umul(r, uinv(r)).entries() == identity(4, f5).entries());
    CHECK(umul(uinv(r), r).entries() == identity(4, f5).entries());
  }
}

TEST_CASE("group axioms exhaustively on U_3(F_2)") {
  const Field f2 = Field::prime(2);
  const auto all = all_matrices(3, f2);
  REQUIRE(all.size() == 8);
  for (const auto& a : all) {
    CHECK(umul(a, uinv(a)).entries() == identity(3, f2).entries());
    for (const auto& b : all) {
      const auto dense = oracle::fq_mul(oracle::fq_dense(3, a.entries()), oracle::fq_dense(3, b.entries()));
      CHECK(oracle::fq_dense(3, umul(a, b).entries()) == dense);
      for (const auto& c : all) CHECK(umul(umul(a, b), c).entries() == umul(a, umul(b, c)).entries());
    }
  }
}

TEST_CASE("shape, field and ring mismatches are usage errors") {
  const Field f2 = Field::prime(2);
  const Field f3 = Field::prime(3);
  CHECK_THROWS_AS(umul(identity(2, f2), identity(3, f2)), UsageError);
  CHECK_THROWS_AS(umul(identity(2, f2), identity(2, f3)), UsageError);
  CHECK_THROWS_AS(FqMat(7, RingKind::kFiniteField, std::vector<Fq>(21, f2.zero())), UsageError);
  CHECK_THROWS_AS(FqMat(2, RingKind::kFiniteField, std::vector<Fq>(2, f2.zero())), UsageError);
  CHECK_THROWS_AS(FqMat(2, RingKind::kLaurent, {f2.zero()}), UsageError);
  CHECK_THROWS_AS(SerMat(2, RingKind::kGlobalP1, {t_power(f2, 1)}), UsageError);

  const SerMat glob(2, RingKind::kGlobalP1, {t_power(f2, -1)});
  const SerMat ell(2, RingKind::kEllipticGlobal, {t_power(f2, -2, 10)});
  const SerMat loc(2, RingKind::kLaurent, {t_power(f2, 1, 10)});
  CHECK(umul(glob, glob).ring() == RingKind::kGlobalP1);
  CHECK(umul(glob, loc).ring() == RingKind::kLaurent);
  CHECK(umul(loc, ell).ring() == RingKind::kLaurent);
  CHECK_THROWS_AS(umul(glob, ell), UsageError);
}

TEST_CASE("frobenius_entrywise examples") {
  const Field f4 = Field::extension(2, 2);
  CHECK(frobenius_entrywise(identity(3, f4)).entries() == identity(3, f4).entries());
  CHECK(frobenius_entrywise(mat2(f4.generator())).at(0, 1) == f4.generator() + f4.one());
  const Field f2 = Field::prime(2);
  const SerMat s(2, RingKind::kLaurent, {t_power(f2, -1)});
  CHECK(frobenius_entrywise(s).at(0, 1) == t_power(f2, -2));
}

TEST_CASE("lang_map examples and dense oracle") {
  const Field f3 = Field::prime(3);
  CHECK(lang_map(identity(3, f3)).entries() == identity(3, f3).entries());
  const Field f9 = Field::extension(3, 2);
  const Fq b = f9.generator() + f9.one();
  CHECK(lang_map(mat2(b)).at(0, 1) == frobenius(b) - b);

  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const FqMat bm = random_matrix(3, f3, rng);
    // L(B) B = B^(p), checked with dense products.
    const auto lhs = oracle::fq_mul(oracle::fq_dense(3, lang_map(bm).entries()), oracle::fq_dense(3, bm.entries()));
    CHECK(lhs == oracle::fq_frobenius(oracle::fq_dense(3, bm.entries())));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const FqMat bm = random_matrix(4, f9, rng);
    const auto lhs = oracle::fq_mul(oracle::fq_dense(4, lang_map(bm).entries()), oracle::fq_dense(4, bm.entries()));
    CHECK(lhs == oracle::fq_frobenius(oracle::fq_dense(4, bm.entries())));
  }
}

TEST_CASE("p_conjugate examples and action law") {
  const Field f4 = Field::extension(2, 2);
  Rng rng(4);
  const FqMat m = random_matrix(3, f4, rng);
  CHECK(p_conjugate(identity(3, f4), m).entries() == m.entries());

  const Field f5 = Field::prime(5);
  const Field f25 = Field::extension(5, 2);
  const Fq c = f25.generator() * 3 + f25.one();
  const Fq mm = f25.generator() + f25.from_int(2);
  CHECK(p_conjugate(mat2(c), mat2(mm)).at(0, 1) == mm + frobenius(c) - c);
  (void)f5;

  for (int trial = 0; trial < 100; ++trial) {
    const FqMat c1 = random_matrix(3, f4, rng);
    const FqMat c2 = random_matrix(3, f4, rng);
    const FqMat x = random_matrix(3, f4, rng);
    CHECK(p_conjugate(c1, p_conjugate(c2, x)).entries() == p_conjugate(umul(c1, c2), x).entries());
  }
}

TEST_CASE("Lang map intertwines left multiplication and p-conjugation") {
  Rng rng(5);
  for (Field f : {Field::prime(3), Field::extension(2, 2), Field::extension(5, 2)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const FqMat c = random_matrix(4, f, rng);
      const FqMat b = random_matrix(4, f, rng);
      CHECK(lang_map(umul(c, b)).entries() == p_conjugate(c, lang_map(b)).entries());
    }
  }
  const Field f3 = Field::prime(3);
  for (int trial = 0; trial < 10; ++trial) {
    const SerMat c = random_series_matrix(3, f3, -2, 20, rng);
    const SerMat b = random_series_matrix(3, f3, -2, 20, rng);
    CHECK(agrees(lang_map(umul(c, b)), p_conjugate(c, lang_map(b))));
  }
}

TEST_CASE("entry correction depends only on smaller diagonals") {
  Rng rng(6);
  const Field f2 = Field::prime(2);
  const std::function<Fq()> rand2 = [&] { return pcov::testing::random_fq(f2, rng); };

  // B = I: the correction vanishes on every diagonal.
  for (int trial = 0; trial < 10; ++trial) {
    const FqMat mp = random_matrix(4, f2, rng);
    const FqMat id = identity(4, f2);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) CHECK(correction_residual(id, mp, i, j).is_zero());
    for (int d = 1; d < 4; ++d) CHECK(entry_correction_check(id, mp, d, rand2));
  }

  // n = 2 has no smaller diagonal, so the residual is always zero.
  for (int trial = 0; trial < 10; ++trial) {
    const FqMat b = random_matrix(2, f2, rng);
    const FqMat mp = random_matrix(2, f2, rng);
    CHECK(correction_residual(b, mp, 0, 1).is_zero());
    CHECK(entry_correction_check(b, mp, 1, rand2));
  }

  // n = 3, corner entry: expand B^(p) M' B^{-1} by hand.
  for (int trial = 0; trial < 40; ++trial) {
    const FqMat b = random_matrix(3, f2, rng);
    const FqMat mp = random_matrix(3, f2, rng);
    const Fq b12 = b.at(0, 1), b23 = b.at(1, 2);
    const Fq expect = frobenius(b12) * mp.at(1, 2) - mp.at(0, 1) * b23 - (frobenius(b12) - b12) * b23;
    CHECK(correction_residual(b, mp, 0, 2) == expect);
    CHECK(entry_correction_check(b, mp, 2, rand2));
    FqMat b2 = b;
    b2.at(0, 2) = rand2();
    CHECK(correction_residual(b2, mp, 0, 2) == expect);
  }

  // Larger matrices and other rings.
  const Field f9 = Field::extension(3, 2);
  const std::function<Fq()> rand9 = [&] { return pcov::testing::random_fq(f9, rng); };
  for (int trial = 0; trial < 10; ++trial) {
    const FqMat b = random_matrix(5, f9, rng);
    const FqMat mp = random_matrix(5, f9, rng);
    for (int d = 1; d < 5; ++d) CHECK(entry_correction_check(b, mp, d, rand9, 3));
  }
  const Field f3 = Field::prime(3);
  const std::function<LaurentSeries()> rand_series = [&] { return pcov::testing::random_series(f3, -3, 25, rng); };
  for (int trial = 0; trial < 5; ++trial) {
    const SerMat b = random_series_matrix(4, f3, -3, 25, rng);
    const SerMat mp = random_series_matrix(4, f3, -3, 25, rng);
    for (int d = 1; d < 4; ++d) CHECK(entry_correction_check(b, mp, d, rand_series, 3));
  }

  CHECK_THROWS_AS(entry_correction_check(identity(3, f2), identity(3, f2), 3, rand2), UsageError);
}

TEST_CASE("p_equiv_decide examples") {
  const Field f2 = Field::prime(2);
  const Field f4 = Field::extension(2, 2);
  Rng rng(7);
  const FqMat m = random_matrix(3, f4, rng);
  const auto same = p_equiv_decide(m, m);
  REQUIRE(same.has_value());
  CHECK(same->entries() == identity(3, f4).entries());

  CHECK_FALSE(p_equiv_decide(mat2(f2.one()), mat2(f2.zero())).has_value());
  const auto c = p_equiv_decide(mat2(f4.one()), mat2(f4.zero()));
  REQUIRE(c.has_value());
  CHECK(c->at(0, 1) == f4.generator());

  const SerMat g(2, RingKind::kGlobalP1, {t_power(f2, -1)});
  CHECK_THROWS_AS(p_equiv_decide(g, g), UsageError);
}

TEST_CASE("p_equiv_decide for n = 2 matches the trace criterion, q <= 9") {
  for (Field f : {Field::prime(2), Field::prime(3), Field::extension(2, 2), Field::prime(5), Field::prime(7),
                  Field::extension(2, 3), Field::extension(3, 2)}) {
    const auto elems = enumerate_field(f);
    for (const Fq& a : elems)
      for (const Fq& b : elems) {
        const auto c = p_equiv_decide(mat2(a), mat2(b));
        CHECK(c.has_value() == (trace_to_prime(a - b) == 0));
        if (c) CHECK(p_conjugate(*c, mat2(b)).entries() == mat2(a).entries());
        CHECK(c.has_value() == classically_equivalent(as_polynomial_n2(mat2(a)), as_polynomial_n2(mat2(b))));
      }
  }
}

TEST_CASE("p_equiv_decide agrees with exhaustive conjugator search") {
  const Field f2 = Field::prime(2);
  const auto all = all_matrices(3, f2);
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto c = p_equiv_decide(a, b);
      if (c) CHECK(p_conjugate(*c, b).entries() == a.entries());
      CHECK(c.has_value() == exists_conjugator(a, b));
    }

  Rng rng(8);
  for (Field f : {Field::prime(3), Field::extension(2, 2)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const FqMat a = random_matrix(3, f, rng);
      // Half the pairs are equivalent by construction.
      const FqMat b = trial % 2 == 0 ? p_conjugate(random_matrix(3, f, rng), a) : random_matrix(3, f, rng);
      const auto c = p_equiv_decide(a, b);
      if (c) CHECK(p_conjugate(*c, b).entries() == a.entries());
      CHECK(c.has_value() == exists_conjugator(a, b));
      if (trial % 2 == 0) CHECK(c.has_value());
    }
  }
}

TEST_CASE("p_equiv_decide over Laurent series") {
  Rng rng(9);
  for (Field f : {Field::prime(2), Field::prime(3), Field::extension(2, 2)}) {
    for (int trial = 0; trial < 15; ++trial) {
      const SerMat mp = random_series_matrix(3, f, -4, 30, rng);
      const SerMat c = random_series_matrix(3, f, -2, 30, rng);
      const SerMat m = p_conjugate(c, mp);
      const auto found = p_equiv_decide(m, mp);
      REQUIRE(found.has_value());
      CHECK(agrees(p_conjugate(*found, mp), m));
    }
  }
  const Field f2 = Field::prime(2);
  const SerMat a(2, RingKind::kLaurent, {t_power(f2, -1, 20)});
  const SerMat z(2, RingKind::kLaurent, {LaurentSeries::zero(f2, 20)});
  CHECK_FALSE(p_equiv_decide(a, z).has_value());
}

TEST_CASE("orbit counts match conjugacy classes of U_n(F_p)") {
  struct Case {
    int n, p;
    std::uint64_t expect;
  };
  for (const Case& c : {Case{2, 2, 2}, Case{2, 3, 3}, Case{2, 5, 5}, Case{3, 2, 5}, Case{3, 3, 11}}) {
    CAPTURE(c.n);
    CAPTURE(c.p);
    const OrbitReport r = orbit_classes(c.n, Field::prime(c.p));
    CHECK(r.class_count == c.expect);
    CHECK(r.class_count == oracle::unipotent_conjugacy_classes(c.n, c.p));
    std::uint64_t sum = 0;
    for (auto s : r.class_sizes) sum += s;
    CHECK(sum == orbit_universe_size(c.n, Field::prime(c.p)));
    CHECK(r.representatives.size() == r.class_count);
  }
  CHECK(oracle::unipotent_conjugacy_classes(4, 2) == 16);
}

TEST_CASE("parallel and serial orbit enumeration agree") {
  for (auto [n, f] : {std::pair{2, Field::extension(2, 2)}, std::pair{3, Field::extension(2, 2)},
                      std::pair{4, Field::prime(2)}, std::pair{3, Field::prime(5)}, std::pair{2, Field::extension(3, 2)}}) {
    const OrbitReport a = orbit_classes(n, f);
    const OrbitReport b = orbit_classes_serial(n, f);
    CHECK(a.class_count == b.class_count);
    CHECK(a.class_sizes == b.class_sizes);
    for (std::size_t k = 0; k < a.representatives.size(); ++k)
      CHECK(a.representatives[k].entries() == b.representatives[k].entries());
  }
  // Over F_4 with n = 2 the classes are the cosets of wp(F_4), which has 2 elements.
  const OrbitReport r = orbit_classes(2, Field::extension(2, 2));
  CHECK(r.class_count == 2);
  CHECK(r.class_sizes == std::vector<std::uint64_t>{2, 2});
  CHECK_THROWS_AS(orbit_classes(6, Field::prime(3)), UsageError);
  CHECK_THROWS_AS(orbit_classes_serial(5, Field::prime(5)), UsageError);
}

TEST_CASE("orbit representatives are pairwise inequivalent") {
  const OrbitReport r = orbit_classes(3, Field::prime(3));
  for (std::size_t a = 0; a < r.representatives.size(); ++a)
    for (std::size_t b = a + 1; b < r.representatives.size(); ++b)
      CHECK_FALSE(p_equiv_decide(r.representatives[a], r.representatives[b]).has_value());
}

TEST_CASE("lang_section examples") {
  const Field f2 = Field::prime(2);
  const Field f4 = Field::extension(2, 2);
  {
    const LangSection ls = lang_section(identity(3, f2));
    CHECK(ls.s == 1);
    CHECK(ls.b.entries() == identity(3, f2).entries());
  }
  {
    const LangSection ls = lang_section(mat2(f2.one()));
    CHECK(ls.s == 2);
    CHECK(ls.b.field() == f4);
    CHECK(ls.b.at(0, 1) == f4.generator());
  }
  {
    const LangSection ls = lang_section(mat2(f4.one()));
    CHECK(ls.s == 1);
    CHECK(ls.b.at(0, 1) == f4.generator());
  }
}

TEST_CASE("lang_section inverts the Lang map") {
  auto is_power_of = [](int s, int p) {
    while (s % p == 0) s /= p;
    return s == 1;
  };
  const Field f2 = Field::prime(2);
  for (const auto& m : all_matrices(3, f2)) {
    const LangSection ls = lang_section(m);
    CHECK(lang_map(ls.b).entries() == embed(ls.embedding, m).entries());
    CHECK(is_power_of(ls.s, 2));
    CHECK(ls.s <= 8);
  }
  Rng rng(10);
  for (Field f : {Field::prime(3), Field::extension(2, 2), Field::prime(5)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const FqMat m = random_matrix(3, f, rng);
      const LangSection ls = lang_section(m);
      CHECK(lang_map(ls.b).entries() == embed(ls.embedding, m).entries());
      CHECK(is_power_of(ls.s, f.characteristic()));
    }
  }
}

TEST_CASE("as_polynomial_n2") {
  const Field f2 = Field::prime(2);
  CHECK(is_split(as_polynomial_n2(mat2(f2.zero()))));
  CHECK_FALSE(is_split(as_polynomial_n2(mat2(f2.one()))));
  const SerMat s(2, RingKind::kLaurent, {t_power(f2, -1, 20)});
  CHECK(as_polynomial_n2(s).parameter == t_power(f2, -1, 20));
  CHECK_FALSE(is_split(as_polynomial_n2(s)));
  CHECK_THROWS_AS(as_polynomial_n2(identity(3, f2)), UsageError);
}
