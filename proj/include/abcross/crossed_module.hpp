#pragma once

#include <string>
#include <vector>

#include "abcross/cochain.hpp"
#include "abcross/fingroup.hpp"
#include "abcross/hom.hpp"

namespace abcross {

// A homomorphism between finite abelian groups packaged as one object with
// its kernel/cokernel data cached. The kernel (pi1) and the cokernel (pi0)
// of the boundary are the two invariants everything downstream consumes.
class AbCrossedModule {
 public:
  AbCrossedModule() = default;
  explicit AbCrossedModule(GroupHom boundary);

  const GroupHom& boundary() const { return d_; }
  // The group the boundary maps out of.
  const FinAbGroup& top() const { return d_.src(); }
  // The group the boundary maps into.
  const FinAbGroup& bottom() const { return d_.tgt(); }
  const ExactDecomposition& decomposition() const { return dec_; }
  // Cokernel of the boundary.
  const FinAbGroup& pi0() const { return dec_.coker; }
  // Kernel of the boundary.
  const FinAbGroup& pi1() const { return dec_.ker; }

  std::string to_string() const;

  bool operator==(const AbCrossedModule& rhs) const { return d_ == rhs.d_; }
  bool operator!=(const AbCrossedModule& rhs) const { return !(*this == rhs); }

 private:
  GroupHom d_;
  ExactDecomposition dec_;
};

// The two invariants of a crossed module, with the maps that attach them to
// the underlying groups.
struct HomotopyGroups {
  FinAbGroup pi0;
  GroupHom pi0_proj;  // bottom -> pi0
  FinAbGroup pi1;
  GroupHom pi1_incl;  // pi1 -> top
};

HomotopyGroups homotopy_groups(const AbCrossedModule& m);

// A boundary map together with an explicit twisting table pi0 x pi1 -> pi1.
// Zero twisting characterizes the abelian objects; this type validates a
// proposed table and bridges back to AbCrossedModule when the table is zero.
class CrossedData {
 public:
  CrossedData() = default;
  // Starts from the zero twisting.
  explicit CrossedData(AbCrossedModule m);
  explicit CrossedData(GroupHom boundary);

  const AbCrossedModule& module() const { return m_; }
  GroupElement twist(const GroupElement& s, const GroupElement& a) const;
  void set_twist(const GroupElement& s, const GroupElement& a,
                 const GroupElement& value);
  const std::vector<GroupElement>& table() const { return tab_; }

 private:
  AbCrossedModule m_;
  std::vector<GroupElement> tab_;  // |pi0| * |pi1| values, row-major in (s, a)
};

// True iff the twisting table vanishes whenever an argument is zero and is
// additive in each argument separately. On failure a description of the
// first violation is stored in *why.
bool validate_crossed_data(const CrossedData& c, std::string* why = nullptr);

// True iff the twisting table is identically zero.
bool is_abelian(const CrossedData& c);

// Forgets a zero twisting. Throws invalid_twisting when the table fails
// validation or is nonzero.
AbCrossedModule as_abelian_module(const CrossedData& c);

// Morphism of crossed modules: a map on each level making the evident square
// commute, plus a symmetric 2-cocycle on pi0 of the source with values in
// pi1 of the target.
struct AbCrossMorphism {
  AbCrossedModule src;
  AbCrossedModule tgt;
  GroupHom f1;   // src.top() -> tgt.top()
  GroupHom f0;   // src.bottom() -> tgt.bottom()
  Cochain2 phi;  // over (src.pi0(), tgt.pi1())

  static AbCrossMorphism identity(const AbCrossedModule& m);

  bool operator==(const AbCrossMorphism& rhs) const;
  bool operator!=(const AbCrossMorphism& rhs) const { return !(*this == rhs); }
};

// True iff the component shapes line up, the square commutes on every
// element of the top source group, and phi is a symmetric 2-cocycle. On
// failure a description of the first violation is stored in *why.
bool validate_morphism(const AbCrossMorphism& m, std::string* why = nullptr);

// Map induced on cokernels by the bottom component of a commuting square.
// Throws invalid_morphism when the component does not carry the boundary
// image of the source into the boundary image of the target.
GroupHom induced_pi0(const GroupHom& f0, const AbCrossedModule& src,
                     const AbCrossedModule& tgt);
GroupHom induced_pi0(const AbCrossMorphism& m);

// Map induced on kernels by the top component of a commuting square. Throws
// invalid_morphism when the component does not carry the kernel of the
// source boundary into the kernel of the target boundary.
GroupHom induced_pi1(const GroupHom& f1, const AbCrossedModule& src,
                     const AbCrossedModule& tgt);
GroupHom induced_pi1(const AbCrossMorphism& m);

// n after m. The level maps compose levelwise; the cochain of the composite
// pushes m's cochain forward along the kernel map of n and adds n's cochain
// pulled back along the cokernel map of m.
AbCrossMorphism compose_morphism(const AbCrossMorphism& n,
                                 const AbCrossMorphism& m);

}  // namespace abcross
