#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "abcross/error.hpp"
#include "abcross/fingroup.hpp"
#include "abcross/hom.hpp"
#include "abcross/matrix.hpp"
#include "doctest.h"

using namespace abcross;

namespace {

void check_smith_invariants(const IntMat& a) {
  SmithNormalForm n = smith_normal_form(a);
  CHECK(n.u * a * n.v == n.s);
  CHECK(n.u * n.u_inv == IntMat::identity(a.rows()));
  CHECK(n.u_inv * n.u == IntMat::identity(a.rows()));
  Int du = determinant(n.u);
  CHECK((du == 1 || du == -1));
  Int dv = determinant(n.v);
  CHECK((dv == 1 || dv == -1));
  auto d = n.diagonal();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i + 1] == 0) continue;
    CHECK(d[i] != 0);
    CHECK(d[i + 1] % d[i] == 0);
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) CHECK(n.s.at(i, j) == 0);
}

std::vector<std::int64_t> brute_least_solution(
    const IntMat& t, const std::vector<std::int64_t>& t_moduli,
    const std::vector<std::int64_t>& x_moduli,
    const std::vector<std::int64_t>& rhs) {
  std::int64_t total = 1;
  for (auto c : x_moduli) total *= c;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::vector<std::int64_t> x(x_moduli.size());
    std::int64_t rem = idx;
    for (std::size_t i = x_moduli.size(); i-- > 0;) {
      x[i] = rem % x_moduli[i];
      rem /= x_moduli[i];
    }
    // Index order equals lexicographic order with coordinate 0 most
    // significant, so the first hit is the least one.
    std::vector<std::int64_t> lex(x.begin(), x.end());
    bool ok = true;
    for (std::size_t i = 0; i < t_moduli.size() && ok; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < x_moduli.size(); ++j)
        acc += t.at(i, j) * lex[j];
      if ((acc - rhs[i]) % t_moduli[i] != 0) ok = false;
    }
    if (ok) return lex;
  }
  return {};
}

std::vector<GroupElement> all_elements(const FinAbGroup& g) {
  std::vector<GroupElement> out;
  out.reserve(g.order());
  for (std::int64_t i = 0; i < g.order(); ++i) out.push_back(g.at(i));
  return out;
}

}  // namespace

TEST_CASE("smith form reaches the expected invariant factors") {
  SmithNormalForm n = smith_normal_form(IntMat::from_rows({{2, 0}, {0, 3}}));
  CHECK(n.diagonal() == std::vector<Int>{1, 6});
  CHECK(n.rank == 2);

  n = smith_normal_form(IntMat::from_rows({{4, 2}, {2, 2}}));
  CHECK(n.diagonal() == std::vector<Int>{2, 2});

  n = smith_normal_form(IntMat::from_rows({{2, 4}, {6, 8}}));
  CHECK(n.diagonal() == std::vector<Int>{2, 4});

  n = smith_normal_form(IntMat::from_rows({{2, 0, 0}, {0, 3, 0}}));
  CHECK(n.diagonal() == std::vector<Int>{1, 6});
  CHECK(n.rank == 2);

  n = smith_normal_form(IntMat(0, 0));
  CHECK(n.rank == 0);
  n = smith_normal_form(IntMat(2, 0));
  CHECK(n.rank == 0);
  CHECK(n.u * n.u_inv == IntMat::identity(2));
}

TEST_CASE("smith form transforms are unimodular and consistent") {
  check_smith_invariants(IntMat::from_rows({{2, 0}, {0, 3}}));
  check_smith_invariants(IntMat::from_rows({{4, 2}, {2, 2}}));
  check_smith_invariants(IntMat::from_rows({{0, 0}, {0, 0}}));
  check_smith_invariants(IntMat::from_rows({{6, 10, 15}}));
  check_smith_invariants(IntMat::from_rows({{1, 2}, {3, 4}, {5, 6}}));
  check_smith_invariants(IntMat::from_rows({{-4, 6}, {2, -8}}));

  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<int> dim(1, 4), val(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    IntMat a(dim(rng), dim(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = val(rng);
    check_smith_invariants(a);
  }
}

TEST_CASE("column hermite basis is triangular and spans the lattice") {
  IntMat gens(2, 2);
  gens.at(0, 0) = 2;
  gens.at(0, 1) = 1;
  gens.at(1, 1) = 1;
  IntMat h = column_hermite_basis(gens);
  CHECK(h.at(0, 0) == 1);
  CHECK(h.at(0, 1) == 0);
  CHECK(h.at(1, 1) == 2);
  CHECK(h.at(1, 0) >= 0);
  CHECK(h.at(1, 0) < 2);

  // Same lattice in both directions: each generator solves in the basis.
  for (std::size_t j = 0; j < gens.cols(); ++j)
    CHECK(solve_lower_triangular(h, gens.column_vector(j)).has_value());

  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> val(-6, 6), mod(1, 8);
  for (int trial = 0; trial < 40; ++trial) {
    // Random 3x5 generators padded with a diagonal to force full rank.
    IntMat g(3, 8);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 5; ++j) g.at(i, j) = val(rng);
      g.at(i, 5 + i) = mod(rng);
    }
    IntMat b = column_hermite_basis(g);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(b.at(i, i) > 0);
      for (std::size_t j = i + 1; j < 3; ++j) CHECK(b.at(i, j) == 0);
      for (std::size_t j = 0; j < i; ++j) {
        CHECK(b.at(i, j) >= 0);
        CHECK(b.at(i, j) < b.at(i, i));
      }
    }
    for (std::size_t j = 0; j < g.cols(); ++j)
      CHECK(solve_lower_triangular(b, g.column_vector(j)).has_value());
    // And the basis columns lie in the generated lattice: determinant of the
    // basis equals the lattice index, so membership of generators suffices
    // together with equal determinant up to sign of any spanning square part.
    CHECK(determinant(b) > 0);
  }
}

TEST_CASE("triangular solve detects non-membership") {
  IntMat l = IntMat::from_rows({{2, 0}, {1, 3}});
  auto x = solve_lower_triangular(l, {4, 8});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 2);
  CHECK_FALSE(solve_lower_triangular(l, {3, 0}).has_value());
  CHECK_FALSE(solve_lower_triangular(l, {2, 0}).has_value());
}

TEST_CASE("determinant matches cofactor values") {
  CHECK(determinant(IntMat::from_rows({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(IntMat::from_rows({{2, 4}, {6, 8}})) == -8);
  CHECK(determinant(IntMat::from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(determinant(IntMat::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})) == 1);
  CHECK(determinant(IntMat(0, 0)) == 1);
}

TEST_CASE("congruence solver returns the least and greatest solutions") {
  IntMat t = IntMat::from_rows({{2}});
  auto least = solve_congruences(t, {4}, {4}, {2}, false);
  REQUIRE(least.has_value());
  CHECK(*least == std::vector<std::int64_t>{1});
  auto greatest = solve_congruences(t, {4}, {4}, {2}, true);
  REQUIRE(greatest.has_value());
  CHECK(*greatest == std::vector<std::int64_t>{3});
  CHECK_FALSE(solve_congruences(t, {4}, {4}, {1}, false).has_value());

  // No conditions: least solution is the origin.
  auto fr = solve_congruences(IntMat(0, 2), {}, {3, 5}, {}, false);
  REQUIRE(fr.has_value());
  CHECK(*fr == std::vector<std::int64_t>({0, 0}));
  auto fg = solve_congruences(IntMat(0, 2), {}, {3, 5}, {}, true);
  CHECK(*fg == std::vector<std::int64_t>({2, 4}));

  // No variables: solvable exactly when the right side vanishes.
  CHECK(solve_congruences(IntMat(2, 0), {2, 3}, {}, {0, 0}, false).has_value());
  CHECK_FALSE(solve_congruences(IntMat(2, 0), {2, 3}, {}, {0, 1}, false).has_value());
}

TEST_CASE("congruence solver agrees with brute force") {
  std::mt19937_64 rng(424242);
  std::vector<std::int64_t> pool{2, 3, 4, 6};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<std::int64_t> t_mod{pool[pick(rng)], pool[pick(rng)]};
    std::vector<std::int64_t> x_mod{pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]};
    IntMat t(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        // Entries must descend to the quotient: multiples of t_i / gcd(t_i, c_j).
        std::int64_t step = t_mod[i] / std::gcd(t_mod[i], x_mod[j]);
        std::uniform_int_distribution<std::int64_t> mul(0, t_mod[i] / step - 1);
        t.at(i, j) = step * mul(rng);
      }
    std::vector<std::int64_t> rhs{
        std::uniform_int_distribution<std::int64_t>(0, t_mod[0] - 1)(rng),
        std::uniform_int_distribution<std::int64_t>(0, t_mod[1] - 1)(rng)};
    auto got = solve_congruences(t, t_mod, x_mod, rhs, false);
    auto want = brute_least_solution(t, t_mod, x_mod, rhs);
    if (want.empty()) {
      CHECK_FALSE(got.has_value());
    } else {
      REQUIRE(got.has_value());
      CHECK(*got == want);
    }
  }
}

TEST_CASE("group moduli are canonicalized to a divisibility chain") {
  CHECK(FinAbGroup({4, 2}).moduli() == std::vector<std::int64_t>({2, 4}));
  CHECK(FinAbGroup({2, 3}).moduli() == std::vector<std::int64_t>({6}));
  CHECK(FinAbGroup({1, 5}).moduli() == std::vector<std::int64_t>({5}));
  CHECK(FinAbGroup({6, 4}).moduli() == std::vector<std::int64_t>({2, 12}));
  CHECK(FinAbGroup({2, 2, 3}).moduli() == std::vector<std::int64_t>({2, 6}));
  CHECK(FinAbGroup::cyclic(1).is_trivial());
  CHECK(FinAbGroup::cyclic(12).order() == 12);
  CHECK(FinAbGroup(std::vector<std::int64_t>{}).order() == 1);
  CHECK_THROWS_AS(FinAbGroup({0}), Error);
}

TEST_CASE("element indexing is lexicographic with leading coordinate first") {
  FinAbGroup g({2, 4});
  CHECK(g.at(0).coords() == std::vector<std::int64_t>({0, 0}));
  CHECK(g.at(1).coords() == std::vector<std::int64_t>({0, 1}));
  CHECK(g.at(3).coords() == std::vector<std::int64_t>({0, 3}));
  CHECK(g.at(4).coords() == std::vector<std::int64_t>({1, 0}));
  for (std::int64_t i = 0; i < g.order(); ++i) {
    CHECK(g.index_of(g.at(i)) == i);
    if (i > 0) CHECK(g.at(i - 1) < g.at(i));
  }
}

TEST_CASE("element arithmetic wraps modulo the invariant factors") {
  FinAbGroup g({2, 4});
  GroupElement a = g.element({1, 3}), b = g.element({1, 2});
  CHECK((a + b).coords() == std::vector<std::int64_t>({0, 1}));
  CHECK((a - b).coords() == std::vector<std::int64_t>({0, 1}));
  CHECK((-a).coords() == std::vector<std::int64_t>({1, 1}));
  CHECK(a.scaled(3).coords() == std::vector<std::int64_t>({1, 1}));
  CHECK(a.scaled(-1) == -a);
  CHECK(g.element({-1, -1}).coords() == std::vector<std::int64_t>({1, 3}));
  CHECK(g.zero().is_zero());
  FinAbGroup h({3});
  CHECK_THROWS_AS((void)(a + h.element({1})), Error);
}

TEST_CASE("hom construction rejects maps that ignore generator orders") {
  FinAbGroup z2 = FinAbGroup::cyclic(2), z4 = FinAbGroup::cyclic(4);
  CHECK_NOTHROW(GroupHom(z4, z2, {{1}}));
  CHECK_THROWS_AS(GroupHom(z2, z4, {{1}}), Error);
  CHECK_NOTHROW(GroupHom(z2, z4, {{2}}));
  try {
    GroupHom(z2, z4, {{3}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ill_defined_hom);
  }
}

TEST_CASE("hom application and composition") {
  FinAbGroup z24({2, 4}), z4 = FinAbGroup::cyclic(4);
  GroupHom f(z4, z24, {{1}, {2}});
  CHECK(f.apply(z4.element({3})).coords() == std::vector<std::int64_t>({1, 2}));
  GroupHom g(z24, z4, {{2, 1}});
  GroupHom gf = compose(g, f);
  CHECK(gf.src() == z4);
  CHECK(gf.tgt() == z4);
  for (std::int64_t i = 0; i < 4; ++i)
    CHECK(gf.apply(z4.at(i)) == g.apply(f.apply(z4.at(i))));
  CHECK(compose(GroupHom::identity(z24), f) == f);
  CHECK(compose(f, GroupHom::identity(z4)) == f);
  CHECK_THROWS_AS(compose(g, g), Error);  // shapes collide
}

TEST_CASE("exact decomposition of doubling on Z/4") {
  FinAbGroup z4 = FinAbGroup::cyclic(4);
  GroupHom h(z4, z4, {{2}});
  ExactDecomposition d = exact_decomposition(h);
  CHECK(d.ker.moduli() == std::vector<std::int64_t>({2}));
  CHECK(d.img.moduli() == std::vector<std::int64_t>({2}));
  CHECK(d.coker.moduli() == std::vector<std::int64_t>({2}));
  CHECK(d.ker_incl.apply(d.ker.element({1})) == z4.element({2}));
  CHECK(d.img_incl.apply(d.img.element({1})) == z4.element({2}));
  CHECK(d.coker_proj.apply(z4.element({1})) == d.coker.element({1}));
}

TEST_CASE("exact decomposition across mixed groups") {
  FinAbGroup z24({2, 4}), z2 = FinAbGroup::cyclic(2);
  GroupHom h(z24, z2, {{1, 1}});
  ExactDecomposition d = exact_decomposition(h);
  CHECK(d.img.moduli() == std::vector<std::int64_t>({2}));
  CHECK(d.coker.is_trivial());
  CHECK(d.ker.moduli() == std::vector<std::int64_t>({4}));
  GroupElement gen = d.ker_incl.apply(d.ker.element({1}));
  CHECK(h.apply(gen).is_zero());
  CHECK_FALSE(gen.scaled(2).is_zero());

  FinAbGroup z6 = FinAbGroup::cyclic(6), z4 = FinAbGroup::cyclic(4);
  GroupHom k(z6, z4, {{2}});
  ExactDecomposition e = exact_decomposition(k);
  CHECK(e.ker.moduli() == std::vector<std::int64_t>({3}));
  CHECK(e.img.moduli() == std::vector<std::int64_t>({2}));
  CHECK(e.coker.moduli() == std::vector<std::int64_t>({2}));
}

TEST_CASE("exact decomposition satisfies the exactness bookkeeping") {
  std::vector<FinAbGroup> groups{FinAbGroup::cyclic(1), FinAbGroup::cyclic(2),
                                 FinAbGroup::cyclic(4), FinAbGroup({2, 2}),
                                 FinAbGroup({2, 4}),    FinAbGroup::cyclic(6)};
  std::mt19937_64 rng(1337);
  for (const auto& a : groups)
    for (const auto& b : groups) {
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<std::vector<std::int64_t>> m(
            b.rank(), std::vector<std::int64_t>(a.rank()));
        for (std::size_t i = 0; i < b.rank(); ++i)
          for (std::size_t j = 0; j < a.rank(); ++j) {
            std::int64_t step =
                b.moduli()[i] / std::gcd(b.moduli()[i], a.moduli()[j]);
            std::uniform_int_distribution<std::int64_t> mul(
                0, b.moduli()[i] / step - 1);
            m[i][j] = step * mul(rng);
          }
        GroupHom h(a, b, m);
        ExactDecomposition d = exact_decomposition(h);
        CHECK(d.ker.order() * d.img.order() == a.order());
        CHECK(d.coker.order() * d.img.order() == b.order());
        // Inclusions are injective with the right images.
        std::vector<GroupElement> seen;
        for (const auto& x : all_elements(d.ker)) {
          GroupElement v = d.ker_incl.apply(x);
          CHECK(h.apply(v).is_zero());
          CHECK(std::find(seen.begin(), seen.end(), v) == seen.end());
          seen.push_back(v);
        }
        seen.clear();
        for (const auto& x : all_elements(d.img)) {
          GroupElement v = d.img_incl.apply(x);
          CHECK(d.coker_proj.apply(v).is_zero());
          CHECK(std::find(seen.begin(), seen.end(), v) == seen.end());
          seen.push_back(v);
        }
        for (const auto& x : all_elements(a)) {
          GroupElement v = h.apply(x);
          CHECK(std::find(seen.begin(), seen.end(), v) != seen.end());
        }
      }
    }
}

TEST_CASE("cokernel sections are exact lexicographic extremes") {
  FinAbGroup z24({2, 4});
  GroupHom h(FinAbGroup::cyclic(2), z24, {{0}, {2}});
  ExactDecomposition d = exact_decomposition(h);
  CHECK(d.coker.order() == 4);
  for (const auto& cls : all_elements(d.coker)) {
    std::optional<GroupElement> least, greatest;
    for (const auto& y : all_elements(z24)) {
      if (!(d.coker_proj.apply(y) == cls)) continue;
      if (!least || y < *least) least = y;
      if (!greatest || *greatest < y) greatest = y;
    }
    REQUIRE(least.has_value());
    CHECK(d.section(cls, SectionChoice::least_representative) == *least);
    CHECK(d.section(cls, SectionChoice::greatest_representative) == *greatest);
  }
}

TEST_CASE("preimage solving matches enumeration") {
  FinAbGroup z4 = FinAbGroup::cyclic(4);
  GroupHom h(z4, z4, {{2}});
  auto p = solve_preimage(h, z4.element({2}));
  REQUIRE(p.has_value());
  CHECK(*p == z4.element({1}));
  auto pg = solve_preimage(h, z4.element({2}),
                           SectionChoice::greatest_representative);
  CHECK(*pg == z4.element({3}));
  CHECK_FALSE(solve_preimage(h, z4.element({1})).has_value());

  FinAbGroup z24({2, 4}), z2 = FinAbGroup::cyclic(2);
  GroupHom k(z24, z2, {{1, 1}});
  for (const auto& y : all_elements(z2)) {
    std::optional<GroupElement> want;
    for (const auto& x : all_elements(z24))
      if (k.apply(x) == y && (!want || x < *want)) want = x;
    auto got = solve_preimage(k, y);
    REQUIRE(got.has_value() == want.has_value());
    if (want) CHECK(*got == *want);
  }
}
