#include <random>
#include <vector>

#include "abcross/cochain.hpp"
#include "abcross/error.hpp"
#include "doctest.h"

using namespace abcross;

namespace {

FinAbGroup grp(std::vector<std::int64_t> moduli) {
  return FinAbGroup(std::move(moduli));
}

template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::internal_error;
}

Cochain1 random_cochain1(const FinAbGroup& m, const FinAbGroup& n,
                         std::mt19937_64& rng) {
  std::vector<std::int64_t> coords((m.order() - 1) * n.rank());
  for (auto& c : coords) c = static_cast<std::int64_t>(rng() % 97);
  return Cochain1::from_free_coords(m, n, coords);
}

Cochain2 random_cochain2(const FinAbGroup& m, const FinAbGroup& n,
                         std::mt19937_64& rng) {
  std::vector<std::int64_t> coords((m.order() - 1) * (m.order() - 1) *
                                   n.rank());
  for (auto& c : coords) c = static_cast<std::int64_t>(rng() % 97);
  return Cochain2::from_free_coords(m, n, coords);
}

const std::vector<std::pair<std::vector<std::int64_t>,
                            std::vector<std::int64_t>>>
    kGroupPairs = {
        {{2}, {2}}, {{2}, {4}}, {{4}, {2}},    {{3}, {3}},
        {{6}, {3}}, {{4}, {6}}, {{2, 2}, {2}}, {{2, 4}, {2, 2}},
};

}  // namespace

TEST_CASE("normalized tables pin zero arguments to zero values") {
  FinAbGroup z4 = FinAbGroup::cyclic(4);
  FinAbGroup z2 = FinAbGroup::cyclic(2);
  GroupElement one = z2.at(1);

  Cochain1 g(z4, z2);
  CHECK(kind_of([&] { g.set(z4.zero(), one); }) ==
        ErrorKind::validation_error);
  g.set(z4.zero(), z2.zero());  // zero value is fine
  g.set(z4.at(1), one);
  CHECK(g.at(z4.at(1)) == one);
  CHECK(g.at(z4.zero()).is_zero());

  Cochain2 f(z4, z2);
  CHECK(kind_of([&] { f.set(z4.zero(), z4.at(2), one); }) ==
        ErrorKind::validation_error);
  CHECK(kind_of([&] { f.set(z4.at(2), z4.zero(), one); }) ==
        ErrorKind::validation_error);

  Cochain3Pair k(z4, z2);
  CHECK(kind_of([&] { k.set_xi(z4.at(1), z4.zero(), z4.at(1), one); }) ==
        ErrorKind::validation_error);
  CHECK(kind_of([&] { k.set_eta(z4.zero(), z4.at(1), one); }) ==
        ErrorKind::validation_error);

  // Arguments from the wrong group are a domain error, not a value error.
  CHECK(kind_of([&] { g.set(z2.at(1), one); }) == ErrorKind::domain_mismatch);
}

TEST_CASE("free coordinates round-trip through every table shape") {
  std::mt19937_64 rng(2024);
  for (const auto& [mm, nm] : kGroupPairs) {
    FinAbGroup m = grp(mm), n = grp(nm);
    Cochain1 g = random_cochain1(m, n, rng);
    CHECK(Cochain1::from_free_coords(m, n, g.free_coords()) == g);
    Cochain2 f = random_cochain2(m, n, rng);
    CHECK(Cochain2::from_free_coords(m, n, f.free_coords()) == f);
    Cochain3Pair k3 = coboundary2(f);
    CHECK(Cochain3Pair::from_free_coords(m, n, k3.free_coords()) == k3);
  }
}

TEST_CASE("first-difference formula gives explicit tables") {
  FinAbGroup z4 = FinAbGroup::cyclic(4);
  Cochain1 g(z4, z4);
  g.set(z4.at(1), z4.at(1));
  g.set(z4.at(2), z4.at(0));
  g.set(z4.at(3), z4.at(1));
  Cochain2 d = coboundary(g);
  CHECK(d.at(z4.at(1), z4.at(1)) == z4.at(2));  // 1 + 1 - g(2)
  CHECK(d.at(z4.at(1), z4.at(2)) == z4.at(0));  // 1 + 0 - g(3)
  CHECK(d.at(z4.at(1), z4.at(3)) == z4.at(2));  // 1 + 1 - g(0)
  CHECK(d.at(z4.at(2), z4.at(3)) == z4.at(0));  // 0 + 1 - g(1)
  CHECK(d.at(z4.at(3), z4.at(3)) == z4.at(2));  // 1 + 1 - g(2)
  CHECK(d.at(z4.at(2), z4.at(2)) == z4.at(0));  // 0 + 0 - g(0)
  CHECK(d.is_symmetric());
  CHECK(is_sym_2cocycle(d));

  // An additive g has a vanishing difference table.
  Cochain1 idlike(z4, z4);
  for (std::int64_t i = 1; i < 4; ++i) idlike.set(z4.at(i), z4.at(i));
  CHECK(coboundary(idlike).is_zero());

  // Doubling on order two gives zero as well.
  FinAbGroup z2 = FinAbGroup::cyclic(2);
  Cochain1 h(z2, z2);
  h.set(z2.at(1), z2.at(1));
  CHECK(coboundary(h).is_zero());
}

TEST_CASE("differences of 1-cochains always satisfy the degree-2 conditions") {
  std::mt19937_64 rng(7);
  for (const auto& [mm, nm] : kGroupPairs) {
    FinAbGroup m = grp(mm), n = grp(nm);
    for (int trial = 0; trial < 25; ++trial) {
      Cochain2 d = coboundary(random_cochain1(m, n, rng));
      CHECK(is_sym_2cocycle(d));
    }
  }
}

TEST_CASE("differences of 2-cochains always satisfy the degree-3 conditions") {
  std::mt19937_64 rng(11);
  for (const auto& [mm, nm] : kGroupPairs) {
    FinAbGroup m = grp(mm), n = grp(nm);
    for (int trial = 0; trial < 25; ++trial) {
      // Arbitrary tables, symmetric or not.
      Cochain3Pair k3 = coboundary2(random_cochain2(m, n, rng));
      auto viol = check_sym_3cocycle(k3);
      if (viol)
        FAIL("condition '" << viol->condition << "' failed over "
                           << m.to_string());
      CHECK(!viol);
    }
  }
}

TEST_CASE("symmetric sources drop the antisymmetric half") {
  std::mt19937_64 rng(13);
  FinAbGroup m = FinAbGroup::cyclic(6), n = grp({2, 4});
  for (int trial = 0; trial < 20; ++trial) {
    Cochain2 f = random_cochain2(m, n, rng);
    // Symmetrize by copying the upper triangle down.
    for (std::int64_t i = 0; i < m.order(); ++i)
      for (std::int64_t j = i + 1; j < m.order(); ++j)
        f.set(m.at(j), m.at(i), f.at(m.at(i), m.at(j)));
    REQUIRE(f.is_symmetric());
    Cochain3Pair k3 = coboundary2(f);
    for (std::int64_t i = 0; i < m.order(); ++i)
      for (std::int64_t j = 0; j < m.order(); ++j)
        CHECK(k3.eta(m.at(i), m.at(j)).is_zero());
  }
}

TEST_CASE("a difference of a difference is zero") {
  std::mt19937_64 rng(17);
  // Exhaustive over the smallest domains, sampled over the rest.
  for (const auto& [mm, nm] : kGroupPairs) {
    FinAbGroup m = grp(mm), n = grp(nm);
    for (int trial = 0; trial < 30; ++trial)
      CHECK(coboundary2(coboundary(random_cochain1(m, n, rng))).is_zero());
  }
}

TEST_CASE("degree-3 truth table over order two") {
  FinAbGroup z2 = FinAbGroup::cyclic(2);
  GroupElement e = z2.at(1);
  // All four (triple value, pair value) fillings; exactly the two with a
  // zero triple table pass.
  for (int xi = 0; xi < 2; ++xi)
    for (int eta = 0; eta < 2; ++eta) {
      Cochain3Pair k(z2, z2);
      k.set_xi(e, e, e, z2.at(xi));
      k.set_eta(e, e, z2.at(eta));
      auto viol = check_sym_3cocycle(k);
      if (xi == 0) {
        CHECK(!viol);
      } else {
        REQUIRE(viol.has_value());
        CHECK(viol->condition == "mixed");
      }
    }
}

TEST_CASE("violation reports name the first failing condition") {
  FinAbGroup z3 = FinAbGroup::cyclic(3);
  Cochain2 f(z3, z3);
  f.set(z3.at(1), z3.at(2), z3.at(1));  // asymmetric single cell
  auto viol = check_sym_2cocycle(f);
  REQUIRE(viol.has_value());
  // The associativity defect of this table already fails before the
  // symmetry scan runs.
  CHECK(viol->condition == "cocycle");
  CHECK(viol->args.size() == 3);

  // A bilinear pairing satisfies every associativity row, so an asymmetric
  // one is caught by the symmetry scan specifically.
  FinAbGroup v4 = grp({2, 2});
  FinAbGroup z2 = FinAbGroup::cyclic(2);
  Cochain2 pairing(v4, z2);
  for (std::int64_t i = 1; i < 4; ++i)
    for (std::int64_t j = 1; j < 4; ++j) {
      auto u = v4.at(i), v = v4.at(j);
      pairing.set(u, v, z2.at((u.coords()[0] * v.coords()[1]) % 2));
    }
  auto vs = check_sym_2cocycle(pairing);
  REQUIRE(vs.has_value());
  CHECK(vs->condition == "symmetry");

  // Over order two the cocycle rows are vacuous and a 1x1 free block cannot
  // be asymmetric, so exercise the pair-table condition instead.
  Cochain3Pair k(z2, grp({4}));
  k.set_eta(z2.at(1), z2.at(1), FinAbGroup::cyclic(4).at(1));
  auto viol3 = check_sym_3cocycle(k);
  REQUIRE(viol3.has_value());
  CHECK(viol3->condition == "eta-antisymmetry");
}

TEST_CASE("transport along homs preserves structure") {
  std::mt19937_64 rng(23);
  FinAbGroup z2 = FinAbGroup::cyclic(2);
  FinAbGroup z4 = FinAbGroup::cyclic(4);
  GroupHom incl(z2, z4, {{2}});        // times two
  GroupHom proj(z4, z2, {{1}});        // reduction
  for (int trial = 0; trial < 20; ++trial) {
    Cochain1 g = random_cochain1(z4, z4, rng);
    // Precomposition commutes with the difference operator.
    CHECK(pullback(coboundary(g), incl) == coboundary(pullback(g, incl)));
    // Postcomposition does too.
    CHECK(pushforward(proj, coboundary(g)) ==
          coboundary(pushforward(proj, g)));
    Cochain2 f = random_cochain2(z4, z4, rng);
    CHECK(pullback(coboundary2(f), incl) == coboundary2(pullback(f, incl)));
    CHECK(pushforward(proj, coboundary2(f)) ==
          coboundary2(pushforward(proj, f)));
    // Additivity of both transports.
    Cochain2 f2 = random_cochain2(z4, z4, rng);
    CHECK(pullback(f + f2, incl) == pullback(f, incl) + pullback(f2, incl));
    CHECK(pushforward(proj, f + f2) ==
          pushforward(proj, f) + pushforward(proj, f2));
  }
  Cochain2 f = random_cochain2(z4, z4, rng);
  CHECK_THROWS_AS((void)pullback(f, proj), Error);  // lands in z2, not z4
}

TEST_CASE("table arithmetic respects the group structure") {
  std::mt19937_64 rng(29);
  FinAbGroup m = grp({2, 4}), n = grp({2, 6});
  Cochain2 a = random_cochain2(m, n, rng);
  Cochain2 b = random_cochain2(m, n, rng);
  CHECK(a + b == b + a);
  CHECK((a + b) - b == a);
  CHECK(a - a == Cochain2(m, n));
  Cochain2 zero(m, n);
  CHECK(zero.is_zero());
  CHECK(a + zero == a);
  CHECK(kind_of([&] {
          (void)(a + random_cochain2(grp({4}), n, rng));
        }) == ErrorKind::domain_mismatch);
}
