#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abcross/cohomology.hpp"
#include "abcross/crossed_module.hpp"
#include "abcross/limits.hpp"
#include "abcross/picard.hpp"

namespace abcross {

// A group extension of the bottom-sequence type of a crossed module B -> D,
// held in cocycle normal form. The total group is the set B x Q with
//   (b, u) + (c, v) = (b + c + f(u, v), u + v),
// so B embeds as (b, 0), the quotient by that copy is Q, and
// eps(b, u) = d(b) + fmap(u) is a homomorphism into D tying the extension
// to the crossed module.
struct Extension {
  AbCrossedModule base;
  FinAbGroup q;
  // Symmetric 2-cocycle over (q, top group of base).
  Cochain2 f;
  // Pointed (not necessarily additive) section table q -> bottom group.
  Cochain1 fmap;

  bool operator==(const Extension& rhs) const {
    return base == rhs.base && q == rhs.q && f == rhs.f && fmap == rhs.fmap;
  }
  bool operator!=(const Extension& rhs) const { return !(*this == rhs); }
};

// True when f is a symmetric 2-cocycle of the right shape and its boundary
// d(f(u,v)) matches the section defect fmap(u) + fmap(v) - fmap(u+v)
// everywhere; on failure `why` names the first broken condition.
bool validate_extension(const Extension& e, std::string* why = nullptr);

// The homomorphism Q -> coker d induced on the quotient: u maps to the
// class of fmap(u). Always additive for a valid extension, and invariant
// under equivalence.
GroupHom induced_psi(const Extension& e);

// Invariant factors of the total group, computed from the presentation on
// the generators of B and the section elements of Q's generators, whose
// orders twist by telescoping sums of f.
FinAbGroup total_group_type(const Extension& e);

// A functor out of the one-object-per-class category of Q packs the same
// data: the object map becomes the section table and the comparison cochain,
// pushed into the top group, becomes the cocycle.
Extension extension_of_functor(const RegularSMFunctor& f);

// Inverse direction. The stored section need not be additive, so the least
// pointed correction making it additive is solved for first; when no
// equivalent extension has an additive section, there is no such functor and
// the call refuses.
RegularSMFunctor functor_of_extension(const Extension& e,
                                      const Limits& limits = Limits{});

// Least pointed alpha: Q -> B with
//   f(u,v) - f'(u,v) = alpha(u) + alpha(v) - alpha(u+v) and
//   d(alpha(u)) = fmap(u) - fmap'(u),
// i.e. the witness that (b, u) -> (b + alpha(u), u) is an isomorphism over
// B and Q; absent when the extensions are inequivalent.
std::optional<Cochain1> are_equivalent(const Extension& a, const Extension& b,
                                       const Limits& limits = Limits{});

// Class of the quotient-map invariant pulled back along psi, inside the
// degree-3 group over (psi's source, ker d). Vanishing is equivalent to the
// existence of an extension inducing psi.
GroupElement obstruction_class(const AbCrossedModule& m, const GroupHom& psi,
                               const Limits& limits = Limits{});

struct ClassificationResult {
  // Coordinates in the degree-3 classification group; zero means realizable.
  GroupElement obstruction;
  // One representative per equivalence class, empty when obstructed.
  std::vector<Extension> classes;
  // The degree-2 group acting simply transitively on the classes.
  std::optional<CohomologyGroup> h2;

  bool obstructed() const { return !obstruction.is_zero(); }
};

// All equivalence classes of extensions of the type of m inducing psi:
// either the nonzero obstruction class, or one representative per element
// of the degree-2 group, pairwise inequivalent, sharing a deterministic
// least section table.
ClassificationResult classify_extensions(const AbCrossedModule& m,
                                         const GroupHom& psi,
                                         const Limits& limits = Limits{});

// The bottom sequence B -> D -> coker d of m itself, in normal form with
// the least section.
Extension canonical_extension(const AbCrossedModule& m);

// Induced extension along psi: Q -> coker d, reindexing the tables of the
// canonical extension. Requires an injective boundary, where the canonical
// extension is the unique class over the identity.
Extension pullback_extension(const Extension& dext, const GroupHom& psi);

// Brute-force route: every valid (f, fmap) pair inducing psi, by exhausting
// symmetric tables and section lifts. Guarded by limits.max_candidates.
std::vector<Extension> enumerate_extensions(const AbCrossedModule& m,
                                            const GroupHom& psi,
                                            const Limits& limits = Limits{});

}  // namespace abcross
