#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abcross/cochain.hpp"
#include "abcross/cohomology.hpp"
#include "abcross/crossed_module.hpp"
#include "abcross/fingroup.hpp"
#include "abcross/hom.hpp"
#include "abcross/limits.hpp"

namespace abcross {

// The strict symmetric monoidal groupoid of a crossed module: objects are
// the elements of the bottom group, the morphisms x -> y are the top-group
// elements b with x = d(b) + y, composition and tensor are addition.
class StrictPicard {
 public:
  StrictPicard() = default;
  explicit StrictPicard(AbCrossedModule base) : base_(std::move(base)) {}

  const AbCrossedModule& base() const { return base_; }
  const FinAbGroup& objects() const { return base_.bottom(); }
  const FinAbGroup& arrows() const { return base_.top(); }

  bool operator==(const StrictPicard& rhs) const { return base_ == rhs.base_; }
  bool operator!=(const StrictPicard& rhs) const { return !(*this == rhs); }

 private:
  AbCrossedModule base_;
};

StrictPicard picard_of(const AbCrossedModule& m);
AbCrossedModule base_of(const StrictPicard& p);

// The discrete category on a group: only identity arrows, realized by the
// zero boundary out of the trivial group.
StrictPicard discrete_picard(const FinAbGroup& q);

// All arrows x -> y, i.e. solutions b of d(b) = x - y, in index order.
std::vector<GroupElement> hom_set(const StrictPicard& p, const GroupElement& x,
                                  const GroupElement& y);

// A category presented by its reduced invariant: objects form the group m,
// every object's automorphisms form n, and k records the associativity and
// commutativity data.
struct ReducedPicard {
  FinAbGroup m, n;
  Cochain3Pair k;

  bool operator==(const ReducedPicard& rhs) const {
    return m == rhs.m && n == rhs.n && k == rhs.k;
  }
  bool operator!=(const ReducedPicard& rhs) const { return !(*this == rhs); }
};

// True iff k is a symmetric 3-cocycle over (m, n) of the right shape. On
// failure a description is stored in *why.
bool validate_reduced(const ReducedPicard& s, std::string* why = nullptr);

// Symmetric monoidal functor between two strict categories whose object map
// is a homomorphism: f0 on objects, f1 on arrows, and the comparison
// cochain phi giving the arrow F(x)+F(y) -> F(x+y) in kernel coordinates.
struct RegularSMFunctor {
  StrictPicard source, target;
  GroupHom f0;   // objects() -> objects()
  GroupHom f1;   // arrows() -> arrows()
  Cochain2 phi;  // over (pi0 of source base, pi1 of target base)

  static RegularSMFunctor identity(const StrictPicard& p);

  bool operator==(const RegularSMFunctor& rhs) const;
  bool operator!=(const RegularSMFunctor& rhs) const { return !(*this == rhs); }
};

// True iff the underlying triple is a valid morphism of the base crossed
// modules; the monoidal coherence then holds identically.
bool validate_functor(const RegularSMFunctor& f, std::string* why = nullptr);

// The functor with the same triple as a morphism of crossed modules, and
// back. Mutually inverse; both reject invalid input.
RegularSMFunctor functor_of_morphism(const AbCrossMorphism& m);
AbCrossMorphism morphism_of_functor(const RegularSMFunctor& f);

// g after f; the comparison cochains combine exactly as for morphisms.
RegularSMFunctor compose_functors(const RegularSMFunctor& g,
                                  const RegularSMFunctor& f);

// Reduced invariant of a strict category: with the pointed section u of the
// object classes (u(0) = 0) and the pointed family b(s,t) of boundary
// preimages of u(s)+u(t)-u(s+t), the invariant is
//   xi(s,t,r) = b(s,t) + b(s+t,r) - b(t,r) - b(s,t+r),
//   eta(s,t)  = b(t,s) - b(s,t),
// both expressed in kernel coordinates. The section choice only moves the
// result within its cohomology class.
ReducedPicard reduce(const StrictPicard& p,
                     SectionChoice choice = SectionChoice::least_representative,
                     const Limits& limits = Limits{});

// The pair of maps a functor induces on object classes and automorphisms.
struct FunctorTypePair {
  GroupHom phi0;  // pi0 of source -> pi0 of target
  GroupHom f;     // pi1 of source -> pi1 of target

  bool operator==(const FunctorTypePair& rhs) const {
    return phi0 == rhs.phi0 && f == rhs.f;
  }
  bool operator!=(const FunctorTypePair& rhs) const { return !(*this == rhs); }
};

FunctorTypePair reduced_type(const RegularSMFunctor& f);

// The invariant-level defect of a candidate type: the pullback of the
// target invariant along phi0 minus the pushforward of the source invariant
// along f. A functor of this type exists iff the defect's class vanishes.
Cochain3Pair obstruction(const FunctorTypePair& t, const ReducedPicard& s,
                         const ReducedPicard& sp);

bool is_realizable(const FunctorTypePair& t, const ReducedPicard& s,
                   const ReducedPicard& sp, const Limits& limits = Limits{});

// Functor between two reduced categories: objects map by type.phi0,
// automorphisms by type.f, and g is the comparison cochain.
struct ReducedFunctor {
  FunctorTypePair type;
  Cochain2 g;  // over (source m, target n)

  bool operator==(const ReducedFunctor& rhs) const {
    return type == rhs.type && g == rhs.g;
  }
  bool operator!=(const ReducedFunctor& rhs) const { return !(*this == rhs); }
};

// True iff the comparison cochain g solves the coherence equations of the
// two invariants: the obstruction of the type must equal
// (delta g, g - g-transpose). On failure a description is stored in *why.
bool validate_reduced_functor(const ReducedFunctor& f, const ReducedPicard& s,
                              const ReducedPicard& sp,
                              std::string* why = nullptr);

// All homotopy classes of functors s -> sp of the given type: empty when the
// obstruction class is nonzero, otherwise one representative per element of
// the degree-2 cohomology group, based at the least witness.
std::vector<ReducedFunctor> functor_classes(const FunctorTypePair& t,
                                            const ReducedPicard& s,
                                            const ReducedPicard& sp,
                                            const Limits& limits = Limits{});

// Least table th: objects -> target arrows with
//   (a) d'(th(x)) = F(x) - F'(x),
//   (b) f1(b) + th(y) = th(x) + f1'(b) for every arrow b : x -> y,
//   (c) phi(x,y) + th(x+y) = th(x) + th(y) + phi'(x,y),
//   (d) th(0) = 0;
// absent when the functors are not homotopic.
std::optional<Cochain1> are_homotopic(const RegularSMFunctor& f,
                                      const RegularSMFunctor& fp,
                                      const Limits& limits = Limits{});

// Homotopy of reduced functors: same type and g - g' a coboundary; the
// witness is the least th with (delta th) = g - g'.
std::optional<Cochain1> are_homotopic(const ReducedFunctor& f,
                                      const ReducedFunctor& fp,
                                      const Limits& limits = Limits{});

}  // namespace abcross
