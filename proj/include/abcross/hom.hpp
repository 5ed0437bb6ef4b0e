#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abcross/fingroup.hpp"

namespace abcross {

// Homomorphism between finite abelian groups in coordinate form: a matrix
// with rows indexed by target coordinates and columns by source coordinates.
// Construction rejects matrices that do not descend to the quotients.
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(FinAbGroup src, FinAbGroup tgt,
           std::vector<std::vector<std::int64_t>> matrix);

  static GroupHom identity(const FinAbGroup& g);
  static GroupHom zero(const FinAbGroup& src, const FinAbGroup& tgt);

  const FinAbGroup& src() const { return src_; }
  const FinAbGroup& tgt() const { return tgt_; }
  std::int64_t entry(std::size_t i, std::size_t j) const {
    return mat_[i * src_.rank() + j];
  }
  std::vector<std::vector<std::int64_t>> matrix() const;

  GroupElement apply(const GroupElement& x) const;
  bool is_zero_map() const;
  std::string to_string() const;

  bool operator==(const GroupHom& rhs) const;
  bool operator!=(const GroupHom& rhs) const { return !(*this == rhs); }

 private:
  FinAbGroup src_, tgt_;
  std::vector<std::int64_t> mat_;  // row-major, reduced mod target moduli
};

// g after f.
GroupHom compose(const GroupHom& g, const GroupHom& f);

enum class SectionChoice { least_representative, greatest_representative };

// Kernel, image and cokernel of a homomorphism, each in canonical form and
// attached to the original groups by an inclusion or projection.
struct ExactDecomposition {
  FinAbGroup ker, img, coker;
  GroupHom ker_incl;    // ker  -> src
  GroupHom img_incl;    // img  -> tgt
  GroupHom coker_proj;  // tgt  -> coker
  // Deterministic representative in the target for a cokernel class.
  GroupElement section(const GroupElement& cls, SectionChoice choice) const;
};

ExactDecomposition exact_decomposition(const GroupHom& h);

// Least (or greatest) x with h(x) = y, if any.
std::optional<GroupElement> solve_preimage(
    const GroupHom& h, const GroupElement& y,
    SectionChoice choice = SectionChoice::least_representative);

}  // namespace abcross
