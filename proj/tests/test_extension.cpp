#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abcross/cohomology.hpp"
#include "abcross/error.hpp"
#include "abcross/extension.hpp"
#include "abcross/picard.hpp"
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

GroupHom hom1(std::int64_t a, std::int64_t b, std::int64_t entry) {
  FinAbGroup src = grp({a}), tgt = grp({b});
  std::vector<std::vector<std::int64_t>> m(
      tgt.rank(), std::vector<std::int64_t>(src.rank(), entry));
  return GroupHom(src, tgt, std::move(m));
}

AbCrossedModule xmod(std::int64_t a, std::int64_t b, std::int64_t entry) {
  return AbCrossedModule(hom1(a, b, entry));
}

std::vector<GroupHom> all_homs(const FinAbGroup& src, const FinAbGroup& tgt) {
  const std::size_t r = tgt.rank(), c = src.rank();
  std::vector<GroupHom> out;
  std::vector<std::int64_t> flat(r * c, 0);
  while (true) {
    std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m[i][j] = flat[i * c + j];
    try {
      out.push_back(GroupHom(src, tgt, std::move(m)));
    } catch (const Error&) {
    }
    if (flat.empty()) return out;
    std::size_t k = flat.size();
    bool carried = false;
    while (k-- > 0) {
      if (++flat[k] < tgt.moduli()[k / c]) {
        carried = true;
        break;
      }
      flat[k] = 0;
    }
    if (!carried) return out;
  }
}

// All strict symmetric monoidal functors out of the one-object-group
// category of q: a bottom homomorphism plus a symmetric 2-cocycle.
std::vector<RegularSMFunctor> functors_from_discrete(const FinAbGroup& q,
                                                     const StrictPicard& p) {
  StrictPicard dis = discrete_picard(q);
  const FinAbGroup& p0 = dis.base().pi0();
  const FinAbGroup& p1 = p.base().pi1();
  Oracle2Result oracle = oracle_enumerate2(p0, p1);
  std::vector<RegularSMFunctor> out;
  for (const GroupHom& f0 : all_homs(q, p.objects()))
    for (const Cochain2& phi : oracle.cocycles) {
      RegularSMFunctor f;
      f.source = dis;
      f.target = p;
      f.f0 = f0;
      f.f1 = GroupHom::zero(FinAbGroup::trivial(), p.arrows());
      f.phi = phi;
      out.push_back(std::move(f));
    }
  return out;
}

// Re-checks an equivalence witness directly against the defining equations:
// it must be pointed, push down to the difference of the section tables, and
// have coboundary equal to the difference of the cocycle tables.
bool is_equivalence_witness(const Extension& a, const Extension& b,
                            const Cochain1& al) {
  const GroupHom& d = a.base.boundary();
  if (al.domain() != a.q || al.values() != d.src()) return false;
  if (!al.at(a.q.zero()).is_zero()) return false;
  for (std::int64_t i = 0; i < a.q.order(); ++i) {
    const GroupElement u = a.q.at(i);
    if (d.apply(al.at(u)) != a.fmap.at(u) - b.fmap.at(u)) return false;
    for (std::int64_t j = 0; j < a.q.order(); ++j) {
      const GroupElement v = a.q.at(j);
      if (al.at(u) + al.at(v) - al.at(u + v) != a.f.at(u, v) - b.f.at(u, v))
        return false;
    }
  }
  return true;
}

// Splits a list of extensions into equivalence classes and returns the sizes.
std::vector<std::size_t> equivalence_partition(const std::vector<Extension>& xs) {
  std::vector<std::vector<std::size_t>> cells;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool placed = false;
    for (std::vector<std::size_t>& cell : cells) {
      std::optional<Cochain1> w = are_equivalent(xs[cell.front()], xs[i]);
      if (w) {
        CHECK(is_equivalence_witness(xs[cell.front()], xs[i], *w));
        cell.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) cells.push_back({i});
  }
  std::vector<std::size_t> sizes;
  for (const std::vector<std::size_t>& cell : cells) sizes.push_back(cell.size());
  return sizes;
}

// The extension with the given module and quotient whose tables are all zero.
Extension split_extension(const AbCrossedModule& m, const FinAbGroup& q) {
  return Extension{m, q,
                   Cochain2(q, m.boundary().src()),
                   Cochain1(q, m.boundary().tgt())};
}

}  // namespace

TEST_CASE("extension data validation") {
  AbCrossedModule m1 = xmod(2, 2, 0);
  FinAbGroup z2 = grp({2}), z4 = grp({4});
  std::string why;

  Extension split = split_extension(m1, z2);
  CHECK(validate_extension(split, &why));

  Extension twisted = split;
  twisted.f.set(z2.at(1), z2.at(1), z2.at(1));
  CHECK(validate_extension(twisted, &why));

  SUBCASE("tables over the wrong groups are refused") {
    Extension bad = split;
    bad.f = Cochain2(z2, z4);
    CHECK_FALSE(validate_extension(bad, &why));
    CHECK(why.find("cocycle table") != std::string::npos);
    CHECK(why.find("groups") != std::string::npos);

    bad = split;
    bad.fmap = Cochain1(z2, z4);
    CHECK_FALSE(validate_extension(bad, &why));
    CHECK(why.find("section table") != std::string::npos);
  }

  SUBCASE("a non-cocycle table is refused with the failing condition") {
    Extension bad{m1, z4, Cochain2(z4, z2), Cochain1(z4, z2)};
    bad.f.set(z4.at(1), z4.at(2), z2.at(1));  // not symmetric
    CHECK_FALSE(validate_extension(bad, &why));
    CHECK(why.find("fails condition") != std::string::npos);
  }

  SUBCASE("the cocycle must push down to the section defect") {
    AbCrossedModule m2 = xmod(2, 4, 2);
    Extension bad = split_extension(m2, z2);
    bad.fmap.set(z2.at(1), z4.at(1));  // defect 2, but the cocycle is zero
    CHECK_FALSE(validate_extension(bad, &why));
    CHECK(why.find("section defect") != std::string::npos);
  }
}

TEST_CASE("induced quotient map and total group size") {
  AbCrossedModule m2 = xmod(2, 4, 2);
  Extension canon = canonical_extension(m2);
  CHECK(validate_extension(canon));
  CHECK(canon.q == m2.pi0());
  CHECK(induced_psi(canon) == GroupHom::identity(m2.pi0()));
  // The boundary here is injective, so the canonical total group is the
  // bottom group itself.
  CHECK(total_group_type(canon) == grp({4}));

  Extension back_to_split = pullback_extension(canon, GroupHom::zero(m2.pi0(), m2.pi0()));
  CHECK(induced_psi(back_to_split) == GroupHom::zero(m2.pi0(), m2.pi0()));

  SUBCASE("the total group order is always the product of the two layers") {
    std::vector<Extension> corpus = {
        canon,
        back_to_split,
        split_extension(xmod(2, 2, 0), grp({2})),
        split_extension(xmod(6, 6, 3), grp({2, 2})),
        canonical_extension(AbCrossedModule(
            GroupHom(grp({2, 4}), grp({2, 4}), {{1, 0}, {0, 2}}))),
    };
    for (const Extension& e : corpus) {
      REQUIRE(validate_extension(e));
      CHECK(total_group_type(e).order() ==
            e.base.boundary().src().order() * e.q.order());
    }
  }
}

TEST_CASE("classification by the torsor of the second cohomology") {
  SUBCASE("two classes over the zero boundary on order two") {
    AbCrossedModule m1 = xmod(2, 2, 0);
    GroupHom psi = GroupHom::identity(m1.pi0());
    ClassificationResult r = classify_extensions(m1, psi);
    CHECK(r.obstruction.is_zero());
    CHECK_FALSE(r.obstructed());
    REQUIRE(r.h2.has_value());
    CHECK(r.h2->group().order() == 2);
    REQUIRE(r.classes.size() == 2);
    for (const Extension& e : r.classes) {
      CHECK(validate_extension(e));
      CHECK(induced_psi(e) == psi);
      CHECK(e.base == m1);
    }
    // The base realization splits; the twisted class glues a cyclic group.
    CHECK(r.classes[0].f.is_zero());
    CHECK(total_group_type(r.classes[0]) == grp({2, 2}));
    CHECK(total_group_type(r.classes[1]) == grp({4}));
    CHECK_FALSE(are_equivalent(r.classes[0], r.classes[1]).has_value());
  }

  SUBCASE("an injective boundary leaves a single class") {
    AbCrossedModule m2 = xmod(2, 4, 2);
    ClassificationResult r = classify_extensions(m2, GroupHom::identity(m2.pi0()));
    REQUIRE(r.h2.has_value());
    CHECK(r.h2->group().order() == 1);
    REQUIRE(r.classes.size() == 1);
    CHECK(r.classes[0] == canonical_extension(m2));
    CHECK(total_group_type(r.classes[0]) == grp({4}));
  }

  SUBCASE("inequivalent classes can share one abstract total group") {
    AbCrossedModule m3 = xmod(9, 9, 3);
    GroupHom id0 = GroupHom::identity(m3.pi0());
    ClassificationResult r = classify_extensions(m3, id0);
    REQUIRE(r.classes.size() == 3);
    for (const Extension& e : r.classes) {
      CHECK(validate_extension(e));
      CHECK(induced_psi(e) == id0);
      // Forced: every compatible section lifts a generator to an element of
      // order nine away from the image, so the glued group is cyclic.
      CHECK(total_group_type(e) == grp({27}));
    }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        CHECK_FALSE(are_equivalent(r.classes[i], r.classes[j]).has_value());
  }

  SUBCASE("the same module over the zero map glues split totals") {
    AbCrossedModule m3 = xmod(9, 9, 3);
    GroupHom z = GroupHom::zero(m3.pi0(), m3.pi0());
    ClassificationResult r = classify_extensions(m3, z);
    REQUIRE(r.classes.size() == 3);
    CHECK(r.classes[0].f.is_zero());
    CHECK(r.classes[0].fmap.is_zero());
    for (const Extension& e : r.classes) CHECK(total_group_type(e) == grp({3, 9}));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        CHECK_FALSE(are_equivalent(r.classes[i], r.classes[j]).has_value());
  }

  SUBCASE("a trivial quotient admits exactly the bottom group") {
    AbCrossedModule m1 = xmod(2, 2, 0);
    GroupHom psi = GroupHom::zero(FinAbGroup::trivial(), m1.pi0());
    ClassificationResult r = classify_extensions(m1, psi);
    REQUIRE(r.classes.size() == 1);
    CHECK(total_group_type(r.classes[0]) == grp({2}));
  }

  SUBCASE("a rank-two bottom group") {
    AbCrossedModule m5(GroupHom(grp({2, 4}), grp({2, 4}), {{1, 0}, {0, 2}}));
    GroupHom psi = GroupHom::identity(m5.pi0());
    ClassificationResult r = classify_extensions(m5, psi);
    REQUIRE(r.h2.has_value());
    CHECK(r.classes.size() == r.h2->group().order());
    for (const Extension& e : r.classes) {
      CHECK(validate_extension(e));
      CHECK(induced_psi(e) == psi);
      CHECK(total_group_type(e).order() == 16);
    }
  }
}

TEST_CASE("the obstruction class vanishes for every realizable type") {
  std::vector<AbCrossedModule> corpus = {
      xmod(2, 2, 0), xmod(2, 4, 2), xmod(9, 9, 3), xmod(4, 4, 1),
      xmod(4, 2, 1), xmod(6, 6, 3),
      AbCrossedModule(GroupHom(grp({2, 4}), grp({2, 4}), {{1, 0}, {0, 2}}))};
  for (const AbCrossedModule& m : corpus) {
    CAPTURE(m.boundary().src().to_string());
    CAPTURE(m.boundary().tgt().to_string());
    CHECK(obstruction_class(m, GroupHom::identity(m.pi0())).is_zero());
    for (const GroupHom& psi : all_homs(grp({2}), m.pi0()))
      CHECK(obstruction_class(m, psi).is_zero());
  }
}

TEST_CASE("exhaustive search agrees with the classification") {
  struct Setup {
    AbCrossedModule m;
    GroupHom psi;
    std::int64_t expect;  // expected number of raw tables, -1 to skip the pin
  };
  AbCrossedModule m1 = xmod(2, 2, 0), m2 = xmod(2, 4, 2), m4 = xmod(4, 4, 1);
  std::vector<Setup> setups;
  setups.push_back({m1, GroupHom::identity(m1.pi0()), 2});
  setups.push_back({m1, GroupHom::zero(grp({2}), m1.pi0()), 2});
  setups.push_back({m2, GroupHom::identity(m2.pi0()), 2});
  setups.push_back({m4, GroupHom::zero(grp({2}), m4.pi0()), 4});
  setups.push_back({m1, GroupHom::zero(grp({2, 2}), m1.pi0()), -1});

  for (const Setup& s : setups) {
    CAPTURE(s.psi.src().to_string());
    std::vector<Extension> found = enumerate_extensions(s.m, s.psi);
    if (s.expect >= 0) CHECK(found.size() == static_cast<std::size_t>(s.expect));
    for (const Extension& e : found) {
      CHECK(validate_extension(e));
      CHECK(induced_psi(e) == s.psi);
    }
    ClassificationResult r = classify_extensions(s.m, s.psi);
    CHECK(equivalence_partition(found).size() == r.classes.size());
    // Every listed class is realized by some raw table, and no two classes
    // collide: matching against the list is a bijection on cells.
    for (const Extension& cls : r.classes) {
      std::size_t hits = 0;
      std::vector<Extension> reps;
      for (const Extension& e : found)
        if (are_equivalent(cls, e).has_value()) ++hits;
      CHECK(hits > 0);
    }
  }
}

TEST_CASE("equivalence of extensions is a congruence") {
  AbCrossedModule m1 = xmod(2, 2, 0);
  FinAbGroup z2 = grp({2});
  Extension split = split_extension(m1, z2);
  Extension twisted = split;
  twisted.f.set(z2.at(1), z2.at(1), z2.at(1));

  SUBCASE("reflexive with the zero witness") {
    std::optional<Cochain1> w = are_equivalent(split, split);
    REQUIRE(w.has_value());
    CHECK(w->is_zero());
  }

  SUBCASE("translating by a pointed table preserves the class") {
    AbCrossedModule m2 = xmod(2, 4, 2);
    Extension canon = canonical_extension(m2);
    Cochain1 g(canon.q, m2.boundary().src());
    g.set(canon.q.at(1), m2.boundary().src().at(1));
    Extension moved = canon;
    moved.f = canon.f + coboundary(g);
    for (std::int64_t i = 0; i < canon.q.order(); ++i) {
      const GroupElement u = canon.q.at(i);
      moved.fmap.set(u, canon.fmap.at(u) + m2.boundary().apply(g.at(u)));
    }
    REQUIRE(validate_extension(moved));
    std::optional<Cochain1> w = are_equivalent(moved, canon);
    REQUIRE(w.has_value());
    CHECK(is_equivalence_witness(moved, canon, *w));
    std::optional<Cochain1> back = are_equivalent(canon, moved);
    REQUIRE(back.has_value());
    CHECK(is_equivalence_witness(canon, moved, *back));
  }

  SUBCASE("distinct classes never admit a witness, in either order") {
    CHECK_FALSE(are_equivalent(split, twisted).has_value());
    CHECK_FALSE(are_equivalent(twisted, split).has_value());
  }

  SUBCASE("mismatched module or quotient is an error") {
    Extension other = split_extension(xmod(2, 4, 2), z2);
    CHECK(kind_of([&] { (void)are_equivalent(split, other); }) ==
          ErrorKind::base_mismatch);
    Extension narrow = split_extension(m1, FinAbGroup::trivial());
    CHECK(kind_of([&] { (void)are_equivalent(split, narrow); }) ==
          ErrorKind::base_mismatch);
  }
}

TEST_CASE("extensions and functors classify together") {
  AbCrossedModule m1 = xmod(2, 2, 0);
  StrictPicard p = picard_of(m1);
  for (const FinAbGroup& q : {grp({2}), grp({4}), grp({2, 2})}) {
    CAPTURE(q.to_string());
    std::vector<RegularSMFunctor> pool = functors_from_discrete(q, p);
    std::vector<Extension> exts;
    for (const RegularSMFunctor& f : pool) {
      Extension e = extension_of_functor(f);
      CHECK(validate_extension(e));
      exts.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = 0; j < pool.size(); ++j) {
        std::optional<Cochain1> hm = are_homotopic(pool[i], pool[j]);
        std::optional<Cochain1> eq = are_equivalent(exts[i], exts[j]);
        CHECK(hm.has_value() == eq.has_value());
        if (hm && eq) CHECK(*hm == *eq);
      }
  }
}

TEST_CASE("pointed sections beyond the additive ones") {
  // An invertible boundary: every pointed section normalizes away.
  AbCrossedModule m4 = xmod(4, 4, 1);
  FinAbGroup z4 = grp({4});
  Cochain1 sect(z4, z4);
  sect.set(z4.at(1), z4.at(1));
  sect.set(z4.at(2), z4.at(3));
  sect.set(z4.at(3), z4.at(2));
  Extension e4{m4, z4, coboundary(sect), sect};
  REQUIRE(validate_extension(e4));
  CHECK(total_group_type(e4) == grp({4, 4}));

  SUBCASE("the functor of a normalizable extension, and back") {
    RegularSMFunctor f = functor_of_extension(e4);
    CHECK(validate_functor(f));
    CHECK(f.f0 == GroupHom::identity(z4));
    Extension back = extension_of_functor(f);
    CHECK(validate_extension(back));
    std::optional<Cochain1> w = are_equivalent(back, e4);
    REQUIRE(w.has_value());
    CHECK(is_equivalence_witness(back, e4, *w));
  }

  SUBCASE("a class with no additive section is refused faithfully") {
    AbCrossedModule m2 = xmod(2, 4, 2);
    ClassificationResult r = classify_extensions(m2, GroupHom::identity(m2.pi0()));
    REQUIRE(r.classes.size() == 1);
    CHECK(kind_of([&] { (void)functor_of_extension(r.classes[0]); }) ==
          ErrorKind::invalid_extension);
  }

  SUBCASE("only one-object source categories flatten to extensions") {
    RegularSMFunctor idp = RegularSMFunctor::identity(picard_of(m4));
    CHECK(kind_of([&] { (void)extension_of_functor(idp); }) ==
          ErrorKind::invalid_functor);
  }
}

TEST_CASE("pullback along a homomorphism into the quotient") {
  AbCrossedModule m2 = xmod(2, 4, 2);
  Extension canon = canonical_extension(m2);

  SUBCASE("the identity pullback is the extension itself") {
    CHECK(pullback_extension(canon, GroupHom::identity(m2.pi0())) == canon);
  }

  SUBCASE("the zero pullback is split") {
    Extension z = pullback_extension(canon, GroupHom::zero(m2.pi0(), m2.pi0()));
    CHECK(validate_extension(z));
    CHECK(z.f.is_zero());
    CHECK(z.fmap.is_zero());
    CHECK(total_group_type(z) == grp({2, 2}));
  }

  SUBCASE("reindexing classifies only for injective boundaries") {
    AbCrossedModule m1 = xmod(2, 2, 0);
    Extension split = split_extension(m1, m1.pi0());
    CHECK(kind_of([&] {
            (void)pullback_extension(split, GroupHom::identity(m1.pi0()));
          }) == ErrorKind::not_mono);
  }

  SUBCASE("the ambient extension must live over the boundary quotient") {
    AbCrossedModule m4 = xmod(4, 4, 1);
    FinAbGroup z4 = grp({4});
    Extension e4 = split_extension(m4, z4);  // quotient is not the cokernel
    CHECK(kind_of([&] {
            (void)pullback_extension(e4, GroupHom::zero(z4, z4));
          }) == ErrorKind::domain_mismatch);
  }

  SUBCASE("the map must land in the quotient of the boundary") {
    CHECK(kind_of([&] {
            (void)pullback_extension(canon, GroupHom::identity(grp({4})));
          }) == ErrorKind::domain_mismatch);
  }
}

TEST_CASE("resource limits bound every extension search") {
  AbCrossedModule m1 = xmod(2, 2, 0);
  GroupHom psi = GroupHom::identity(m1.pi0());

  Limits tiny;
  tiny.max_candidates = 1;
  CHECK(kind_of([&] { (void)enumerate_extensions(m1, psi, tiny); }) ==
        ErrorKind::size_exceeded);
  CHECK(kind_of([&] { (void)classify_extensions(m1, psi, tiny); }) ==
        ErrorKind::size_exceeded);

  Limits rows;
  rows.max_solver_rows = 1;
  Extension split = split_extension(m1, grp({2}));
  CHECK(kind_of([&] { (void)are_equivalent(split, split, rows); }) ==
        ErrorKind::size_exceeded);
  CHECK(kind_of([&] { (void)functor_of_extension(split, rows); }) ==
        ErrorKind::size_exceeded);
}
