#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abcross/cohomology.hpp"
#include "abcross/error.hpp"
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

// Every homomorphism between two small groups, by exhausting matrices.
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

// The nontrivial invariant triple over (Z/2, Z/2): trivial associator,
// sign-flip symmetry. Generates the degree-3 classification group there.
ReducedPicard sign_triple() {
  FinAbGroup z2 = grp({2});
  Cochain3Pair k(z2, z2);
  k.set_eta(z2.at(1), z2.at(1), z2.at(1));
  return ReducedPicard{z2, z2, k};
}

// Direct re-check of every natural-transformation condition, independent of
// the affine solver inside are_homotopic.
bool is_homotopy(const RegularSMFunctor& f, const RegularSMFunctor& fp,
                 const Cochain1& th) {
  const FinAbGroup& objs = f.source.objects();
  const FinAbGroup& arrs = f.source.arrows();
  const GroupHom& d = f.source.base().boundary();
  const GroupHom& dp = f.target.base().boundary();
  const GroupHom& incl = f.target.base().decomposition().ker_incl;
  const GroupHom& proj = f.source.base().decomposition().coker_proj;
  if (th.domain() != objs || th.values() != f.target.arrows()) return false;
  if (!th.at(objs.zero()).is_zero()) return false;
  for (std::int64_t i = 0; i < objs.order(); ++i) {
    const GroupElement x = objs.at(i);
    if (dp.apply(th.at(x)) != f.f0.apply(x) - fp.f0.apply(x)) return false;
    for (std::int64_t j = 0; j < arrs.order(); ++j) {
      const GroupElement b = arrs.at(j);
      const GroupElement y = x - d.apply(b);
      if (f.f1.apply(b) + th.at(y) != th.at(x) + fp.f1.apply(b)) return false;
    }
    for (std::int64_t j = 0; j < objs.order(); ++j) {
      const GroupElement y = objs.at(j);
      const GroupElement px = proj.apply(x), py = proj.apply(y);
      if (incl.apply(f.phi.at(px, py)) + th.at(x + y) !=
          th.at(x) + th.at(y) + incl.apply(fp.phi.at(px, py)))
        return false;
    }
  }
  return true;
}

// Every homotopy between two functors, found by exhausting pointed tables.
std::vector<Cochain1> all_homotopies(const RegularSMFunctor& f,
                                     const RegularSMFunctor& fp) {
  const FinAbGroup& objs = f.source.objects();
  const FinAbGroup& tb = f.target.arrows();
  const std::size_t slots =
      static_cast<std::size_t>(objs.order() - 1) * tb.rank();
  std::vector<Cochain1> out;
  std::vector<std::int64_t> fc(slots, 0);
  while (true) {
    Cochain1 th = Cochain1::from_free_coords(objs, tb, fc);
    if (is_homotopy(f, fp, th)) out.push_back(th);
    if (slots == 0) return out;
    std::size_t k = slots;
    bool carried = false;
    while (k-- > 0) {
      if (++fc[k] < tb.moduli()[k % tb.rank()]) {
        carried = true;
        break;
      }
      fc[k] = 0;
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

}  // namespace

TEST_CASE("hom sets of the strict symmetric category") {
  StrictPicard p1 = picard_of(xmod(4, 2, 1));
  const FinAbGroup& o1 = p1.objects();
  const FinAbGroup& a1 = p1.arrows();
  // Arrows x -> y are the solutions of d(b) = x - y inside the top group.
  auto h00 = hom_set(p1, o1.zero(), o1.zero());
  REQUIRE(h00.size() == 2);
  CHECK(h00[0] == a1.zero());
  CHECK(h00[1] == a1.element({2}));
  CHECK(hom_set(p1, o1.at(1), o1.at(1)) == h00);
  CHECK(hom_set(p1, o1.at(1), o1.zero()).size() == 2);

  StrictPicard p2 = picard_of(xmod(2, 4, 2));
  const FinAbGroup& o2 = p2.objects();
  const FinAbGroup& a2 = p2.arrows();
  auto h20 = hom_set(p2, o2.element({2}), o2.zero());
  REQUIRE(h20.size() == 1);
  CHECK(h20[0] == a2.at(1));
  CHECK(hom_set(p2, o2.element({1}), o2.zero()).empty());
  auto h31 = hom_set(p2, o2.element({3}), o2.element({1}));
  REQUIRE(h31.size() == 1);
  CHECK(h31[0] == a2.at(1));

  for (const StrictPicard& p : {p1, p2}) {
    const std::size_t ker =
        static_cast<std::size_t>(p.base().pi1().order());
    for (std::int64_t i = 0; i < p.objects().order(); ++i) {
      const GroupElement x = p.objects().at(i);
      // The identity arrow sits in every endomorphism set.
      auto hxx = hom_set(p, x, x);
      CHECK(std::find(hxx.begin(), hxx.end(), p.arrows().zero()) != hxx.end());
      std::size_t total = 0;
      for (std::int64_t j = 0; j < p.objects().order(); ++j) {
        auto h = hom_set(p, x, p.objects().at(j));
        CHECK((h.empty() || h.size() == ker));
        total += h.size();
      }
      // Every arrow out of x hits exactly one target.
      CHECK(total == static_cast<std::size_t>(p.arrows().order()));
    }
  }

  CHECK(kind_of([&] { hom_set(p1, o2.zero(), o1.zero()); }) ==
        ErrorKind::domain_mismatch);
}

TEST_CASE("round trips between modules, categories, functors, morphisms") {
  AbCrossedModule m = xmod(4, 4, 2);
  StrictPicard p = picard_of(m);
  CHECK(base_of(p) == m);
  CHECK(p.objects() == m.bottom());
  CHECK(p.arrows() == m.top());
  CHECK(discrete_picard(grp({3})).arrows() == FinAbGroup::trivial());
  CHECK(discrete_picard(grp({3})).objects() == grp({3}));

  RegularSMFunctor idf = RegularSMFunctor::identity(p);
  CHECK(validate_functor(idf));
  AbCrossMorphism raw = morphism_of_functor(idf);
  CHECK(raw == AbCrossMorphism::identity(m));
  CHECK(functor_of_morphism(raw) == idf);

  // A broken square must be refused in both directions.
  AbCrossMorphism bad = AbCrossMorphism::identity(m);
  bad.f1 = hom1(4, 4, 2);
  CHECK(kind_of([&] { functor_of_morphism(bad); }) ==
        ErrorKind::invalid_morphism);
  RegularSMFunctor badf = idf;
  badf.f1 = hom1(4, 4, 2);
  std::string why;
  CHECK(!validate_functor(badf, &why));
  CHECK(why.find("square") != std::string::npos);
  CHECK(kind_of([&] { morphism_of_functor(badf); }) ==
        ErrorKind::invalid_functor);

  // Composition is inherited from morphism composition.
  StrictPicard q = picard_of(xmod(2, 4, 2));
  AbCrossMorphism step;
  step.src = base_of(p);
  step.tgt = base_of(q);
  step.f1 = hom1(4, 2, 1);
  step.f0 = hom1(4, 4, 1);
  step.phi = Cochain2(base_of(p).pi0(), base_of(q).pi1());
  REQUIRE(validate_morphism(step));
  RegularSMFunctor sf = functor_of_morphism(step);
  RegularSMFunctor back = compose_functors(sf, idf);
  CHECK(back.f0 == sf.f0);
  CHECK(back.f1 == sf.f1);
  CHECK(back.phi == sf.phi);
  CHECK(compose_functors(RegularSMFunctor::identity(q), sf) == sf);
  CHECK(kind_of([&] { compose_functors(sf, sf); }) ==
        ErrorKind::domain_mismatch);
}

TEST_CASE("reduction yields a valid invariant triple with vanishing class") {
  GroupHom rank2(grp({2, 4}), grp({2, 4}), {{1, 0}, {0, 2}});
  const std::vector<AbCrossedModule> corpus = {
      xmod(2, 2, 0),  xmod(2, 2, 1),  xmod(4, 2, 1),
      xmod(2, 4, 2),  xmod(4, 4, 2),  xmod(4, 4, 0),
      xmod(6, 6, 3),  AbCrossedModule(rank2)};
  for (const AbCrossedModule& m : corpus) {
    StrictPicard p = picard_of(m);
    for (SectionChoice choice : {SectionChoice::least_representative,
                                 SectionChoice::greatest_representative}) {
      ReducedPicard red = reduce(p, choice);
      CHECK(red.m == m.pi0());
      CHECK(red.n == m.pi1());
      std::string why;
      CHECK_MESSAGE(validate_reduced(red, &why), m.to_string(), ": ", why);
      // The two sections are preimages of each other up to coboundary, so
      // they must land in the same class.
      if (red.m.order() <= 8 && red.n.order() <= 8) {
        CohomologyGroup h3 = sym_cohomology(3, red.m, red.n);
        CHECK(h3.class_of(red.k).is_zero());
      }
      // Chosen preimages of a symmetric defect are symmetric, so the
      // symmetry table of the output is identically zero.
      for (std::int64_t i = 1; i < red.m.order(); ++i)
        for (std::int64_t j = 1; j < red.m.order(); ++j)
          CHECK(red.k.eta(red.m.at(i), red.m.at(j)).is_zero());
    }
  }

  // Benchmarks with a forced answer.
  for (const AbCrossedModule& m :
       {xmod(2, 4, 2), xmod(2, 2, 0), xmod(4, 4, 2)}) {
    ReducedPicard red = reduce(picard_of(m));
    CHECK(red.k == Cochain3Pair(red.m, red.n));
  }
  ReducedPicard dis = reduce(discrete_picard(grp({6})));
  CHECK(dis.m == grp({6}));
  CHECK(dis.n == FinAbGroup::trivial());
  CHECK(dis.k == Cochain3Pair(dis.m, dis.n));

  Limits tight;
  tight.max_table_cells = 1;
  CHECK(kind_of([&] { reduce(picard_of(xmod(4, 4, 2)),
                             SectionChoice::least_representative, tight); }) ==
        ErrorKind::size_exceeded);
}

TEST_CASE("invariant triple validation") {
  ReducedPicard sp = sign_triple();
  std::string why;
  CHECK(validate_reduced(sp, &why));

  // The classical carry table solves the associativity identity but not the
  // braiding compatibility, so it is not an invariant of any category here.
  FinAbGroup z2 = grp({2});
  Cochain3Pair carry(z2, z2);
  carry.set_xi(z2.at(1), z2.at(1), z2.at(1), z2.at(1));
  ReducedPicard bad{z2, z2, carry};
  CHECK(!validate_reduced(bad, &why));
  CHECK(why.find("cocycle") != std::string::npos);

  ReducedPicard mis{grp({4}), z2, Cochain3Pair(z2, z2)};
  CHECK(!validate_reduced(mis, &why));
  CHECK(why.find("group") != std::string::npos);

  // Oracle agreement: over (Z/2, Z/2) the cocycles are exactly the zero pair
  // and the sign flip, and they are not cohomologous.
  Oracle3Result oracle = oracle_enumerate3(z2, z2);
  REQUIRE(oracle.cocycles.size() == 2);
  CHECK(oracle.class_reps.size() == 2);
  CHECK(oracle.cocycles[0] == Cochain3Pair(z2, z2));
  CHECK(oracle.cocycles[1] == sp.k);
}

TEST_CASE("reduced type of a functor") {
  // Identity functors induce identities on both homotopy groups.
  StrictPicard p = picard_of(xmod(4, 4, 2));
  FunctorTypePair t = reduced_type(RegularSMFunctor::identity(p));
  CHECK(t.phi0 == GroupHom::identity(base_of(p).pi0()));
  CHECK(t.f == GroupHom::identity(base_of(p).pi1()));

  // The mod-2 / times-2 commuting square runs between a category with only
  // inner structure and one with only outer structure.
  AbCrossMorphism square;
  square.src = xmod(4, 2, 1);
  square.tgt = xmod(2, 4, 2);
  square.f1 = hom1(4, 2, 1);
  square.f0 = hom1(2, 4, 2);
  square.phi = Cochain2(square.src.pi0(), square.tgt.pi1());
  REQUIRE(validate_morphism(square));
  FunctorTypePair ts = reduced_type(functor_of_morphism(square));
  CHECK(ts.phi0.src() == FinAbGroup::trivial());
  CHECK(ts.phi0.tgt() == grp({2}));
  CHECK(ts.f.src() == grp({2}));
  CHECK(ts.f.tgt() == FinAbGroup::trivial());

  // Zero components induce zero.
  AbCrossMorphism zero;
  zero.src = xmod(2, 2, 0);
  zero.tgt = xmod(4, 4, 0);
  zero.f1 = hom1(2, 4, 0);
  zero.f0 = hom1(2, 4, 0);
  zero.phi = Cochain2(zero.src.pi0(), zero.tgt.pi1());
  REQUIRE(validate_morphism(zero));
  FunctorTypePair tz = reduced_type(functor_of_morphism(zero));
  CHECK(tz.phi0 == GroupHom::zero(grp({2}), grp({4})));
  CHECK(tz.f == GroupHom::zero(grp({2}), grp({4})));
}

TEST_CASE("obstruction, realizability, and the solution set") {
  ReducedPicard sp = sign_triple();
  FinAbGroup z2 = grp({2});
  GroupHom idm = GroupHom::identity(z2);

  SUBCASE("equal categories under the identity type") {
    FunctorTypePair tid{idm, idm};
    Cochain3Pair obs = obstruction(tid, sp, sp);
    CHECK(obs == Cochain3Pair(z2, z2));
    CHECK(is_realizable(tid, sp, sp));
    auto classes = functor_classes(tid, sp, sp);
    // One comparison cochain per element of the degree-2 group.
    CHECK(classes.size() ==
          static_cast<std::size_t>(
              sym_cohomology(2, z2, z2).group().order()));
    REQUIRE(classes.size() == 2);
    std::string why;
    for (const ReducedFunctor& f : classes) {
      CHECK(f.type == tid);
      CHECK_MESSAGE(validate_reduced_functor(f, sp, sp, &why), why);
    }
    CHECK(!are_homotopic(classes[0], classes[1]).has_value());
    auto self = are_homotopic(classes[0], classes[0]);
    REQUIRE(self.has_value());
    CHECK(self->is_zero());
    CHECK(coboundary(*self) == classes[0].g - classes[0].g);
  }

  SUBCASE("the sign flip is not the image of a one-point category") {
    ReducedPicard dis = reduce(discrete_picard(z2));
    GroupHom zf = GroupHom::zero(dis.n, sp.n);
    FunctorTypePair t{idm, zf};
    Cochain3Pair obs = obstruction(t, dis, sp);
    CHECK(obs == sp.k);
    CHECK(!sym_cohomology(3, z2, z2).class_of(obs).is_zero());
    CHECK(!is_realizable(t, dis, sp));
    CHECK(functor_classes(t, dis, sp).empty());
    std::string why;
    ReducedFunctor guess{t, Cochain2(z2, z2)};
    CHECK(!validate_reduced_functor(guess, dis, sp, &why));
    CHECK(why.find("coherence") != std::string::npos);
  }

  SUBCASE("trivial value group leaves exactly one solution") {
    ReducedPicard dis = reduce(discrete_picard(grp({4})));
    ReducedPicard tgt{grp({2}), FinAbGroup::trivial(),
                      Cochain3Pair(grp({2}), FinAbGroup::trivial())};
    FunctorTypePair t{hom1(4, 2, 1),
                      GroupHom::zero(dis.n, FinAbGroup::trivial())};
    CHECK(is_realizable(t, dis, tgt));
    auto classes = functor_classes(t, dis, tgt);
    REQUIRE(classes.size() == 1);
    std::string why;
    CHECK_MESSAGE(validate_reduced_functor(classes[0], dis, tgt, &why), why);
  }

  SUBCASE("shape mismatches are refused") {
    ReducedPicard dis = reduce(discrete_picard(grp({4})));
    FunctorTypePair t{idm, idm};
    CHECK(kind_of([&] { obstruction(t, dis, sp); }) ==
          ErrorKind::domain_mismatch);
    std::string why;
    ReducedFunctor f{t, Cochain2(z2, z2)};
    CHECK(!validate_reduced_functor(f, dis, sp, &why));
    CHECK(why.find("type pair") != std::string::npos);
  }

  SUBCASE("shifting an invariant by a coboundary changes nothing") {
    ReducedPicard base = reduce(picard_of(xmod(4, 4, 2)));
    Cochain2 g(base.m, base.n);
    g.set(base.m.at(1), base.m.at(1), base.n.at(1));
    ReducedPicard shifted{base.m, base.n, base.k + coboundary2(g)};
    std::string why;
    REQUIRE(validate_reduced(shifted, &why));
    FunctorTypePair tid{GroupHom::identity(base.m),
                        GroupHom::identity(base.n)};
    CHECK(is_realizable(tid, base, shifted));
    CHECK(is_realizable(tid, shifted, base));
    CHECK(functor_classes(tid, base, shifted).size() ==
          functor_classes(tid, base, base).size());
  }
}

TEST_CASE("strict and reduced homotopy classification agree") {
  struct Setup {
    FinAbGroup q;
    AbCrossedModule target;
  };
  const std::vector<Setup> setups = {
      {grp({2}), xmod(2, 2, 0)},    {grp({2}), xmod(4, 4, 2)},
      {grp({4}), xmod(2, 2, 0)},    {grp({4}), xmod(4, 4, 2)},
      {grp({2, 2}), xmod(2, 2, 0)}, {grp({2}), xmod(2, 4, 2)},
      {grp({3}), xmod(6, 6, 3)}};
  for (const Setup& s : setups) {
    CAPTURE(s.q.to_string());
    CAPTURE(s.target.to_string());
    StrictPicard p = picard_of(s.target);
    std::vector<RegularSMFunctor> pool = functors_from_discrete(s.q, p);
    for (const RegularSMFunctor& f : pool) REQUIRE(validate_functor(f));

    ReducedPicard src = reduce(discrete_picard(s.q));
    ReducedPicard tgt = reduce(p);

    // Partition the pool by type, then by homotopy, keeping representatives.
    std::vector<FunctorTypePair> types;
    std::vector<std::vector<RegularSMFunctor>> reps;
    for (const RegularSMFunctor& f : pool) {
      FunctorTypePair t = reduced_type(f);
      std::size_t ti = types.size();
      for (std::size_t i = 0; i < types.size(); ++i)
        if (types[i] == t) {
          ti = i;
          break;
        }
      if (ti == types.size()) {
        types.push_back(t);
        reps.emplace_back();
      }
      bool fresh = true;
      for (const RegularSMFunctor& r : reps[ti]) {
        auto th = are_homotopic(r, f);
        if (th) {
          CHECK(is_homotopy(r, f, *th));
          fresh = false;
          break;
        }
      }
      if (fresh) reps[ti].push_back(f);
    }

    for (std::size_t i = 0; i < types.size(); ++i) {
      CAPTURE(i);
      // A type that occurs strictly must be realizable, and the number of
      // homotopy classes must match the reduced solution count.
      CHECK(is_realizable(types[i], src, tgt));
      CHECK(reps[i].size() == functor_classes(types[i], src, tgt).size());
      // Representatives are pairwise non-homotopic in both orders.
      for (std::size_t a = 0; a < reps[i].size(); ++a)
        for (std::size_t b = a + 1; b < reps[i].size(); ++b) {
          CHECK(!are_homotopic(reps[i][a], reps[i][b]).has_value());
          CHECK(!are_homotopic(reps[i][b], reps[i][a]).has_value());
        }
    }
  }
}

TEST_CASE("homotopy witnesses against exhaustive search") {
  StrictPicard p = picard_of(xmod(2, 2, 0));
  std::vector<RegularSMFunctor> pool = functors_from_discrete(grp({2}), p);
  REQUIRE(pool.size() == 4);
  for (const RegularSMFunctor& f : pool)
    for (const RegularSMFunctor& g : pool) {
      std::vector<Cochain1> found = all_homotopies(f, g);
      auto th = are_homotopic(f, g);
      CHECK(th.has_value() == !found.empty());
      if (th) {
        CHECK(is_homotopy(f, g, *th));
        // The affine solver commits to the least table.
        CHECK(*th == found.front());
      }
    }

  // Symmetry and transitivity on a pool with inner structure.
  StrictPicard p2 = picard_of(xmod(4, 4, 2));
  std::vector<RegularSMFunctor> pool2 = functors_from_discrete(grp({2}), p2);
  for (std::size_t i = 0; i < pool2.size(); ++i)
    for (std::size_t j = i; j < pool2.size(); ++j) {
      auto ij = are_homotopic(pool2[i], pool2[j]);
      auto ji = are_homotopic(pool2[j], pool2[i]);
      CHECK(ij.has_value() == ji.has_value());
      if (ij) {
        CHECK(is_homotopy(pool2[i], pool2[j], *ij));
        CHECK(is_homotopy(pool2[j], pool2[i], *ji));
      }
    }

  // Identity self-homotopy is the zero table.
  auto self = are_homotopic(RegularSMFunctor::identity(p2),
                            RegularSMFunctor::identity(p2));
  REQUIRE(self.has_value());
  CHECK(self->is_zero());

  CHECK(kind_of([&] {
          are_homotopic(RegularSMFunctor::identity(p),
                        RegularSMFunctor::identity(p2));
        }) == ErrorKind::domain_mismatch);

  Limits tight;
  tight.max_solver_rows = 1;
  CHECK(kind_of([&] {
          are_homotopic(RegularSMFunctor::identity(p2),
                        RegularSMFunctor::identity(p2), tight);
        }) == ErrorKind::size_exceeded);
}

TEST_CASE("reduced homotopy is coboundary translation") {
  FinAbGroup z4 = grp({4}), z2 = grp({2});
  ReducedPicard dis = reduce(discrete_picard(z4));
  ReducedPicard tgt{z2, z2, Cochain3Pair(z2, z2)};
  FunctorTypePair t{hom1(4, 2, 1), GroupHom::zero(dis.n, z2)};
  auto classes = functor_classes(t, dis, tgt);
  REQUIRE(classes.size() == 2);

  // Shifting by a coboundary stays in the class, with the exact witness.
  Cochain1 g(z4, z2);
  g.set(z4.at(1), z2.at(1));
  g.set(z4.at(3), z2.at(1));
  ReducedFunctor shifted{classes[0].type, classes[0].g + coboundary(g)};
  auto th = are_homotopic(shifted, classes[0]);
  REQUIRE(th.has_value());
  CHECK(coboundary(*th) == shifted.g - classes[0].g);

  // Distinct classes never connect; distinct types never connect.
  CHECK(!are_homotopic(classes[0], classes[1]).has_value());
  ReducedFunctor other{FunctorTypePair{hom1(4, 2, 0), t.f}, classes[0].g};
  CHECK(!are_homotopic(classes[0], other).has_value());
  ReducedFunctor foreign{t, Cochain2(z2, z2)};
  CHECK(kind_of([&] { are_homotopic(classes[0], foreign); }) ==
        ErrorKind::domain_mismatch);
}
