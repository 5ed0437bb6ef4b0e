#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace abcross {

class GroupElement;

// Finite abelian group held in invariant-factor form: a list of moduli
// n_1 | n_2 | ... with every n_i >= 2. The empty list is the trivial group.
// Arbitrary moduli lists are accepted and canonicalized on construction.
// Elements are coordinate tuples; the enumeration index treats the FIRST
// coordinate as most significant, so index order equals lexicographic order.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<std::int64_t> moduli);

  static FinAbGroup trivial() { return FinAbGroup(); }
  static FinAbGroup cyclic(std::int64_t n);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  std::int64_t order() const { return order_; }
  bool is_trivial() const { return moduli_.empty(); }

  GroupElement zero() const;
  GroupElement element(std::vector<std::int64_t> coords) const;
  GroupElement at(std::int64_t index) const;
  std::int64_t index_of(const GroupElement& g) const;
  GroupElement generator(std::size_t i) const;

  std::string to_string() const;

  bool operator==(const FinAbGroup& rhs) const { return moduli_ == rhs.moduli_; }
  bool operator!=(const FinAbGroup& rhs) const { return !(*this == rhs); }

 private:
  std::vector<std::int64_t> moduli_;
  std::int64_t order_ = 1;
};

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(FinAbGroup group, std::vector<std::int64_t> coords);

  const FinAbGroup& group() const { return group_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  bool is_zero() const;

  GroupElement operator+(const GroupElement& rhs) const;
  GroupElement operator-(const GroupElement& rhs) const;
  GroupElement operator-() const;
  GroupElement scaled(std::int64_t k) const;

  bool operator==(const GroupElement& rhs) const;
  bool operator!=(const GroupElement& rhs) const { return !(*this == rhs); }
  // Lexicographic coordinate order; used wherever a canonical pick is needed.
  bool operator<(const GroupElement& rhs) const;

  std::string to_string() const;

 private:
  FinAbGroup group_;
  std::vector<std::int64_t> coords_;
};

// Canonical invariant factors of Z^k / (column lattice of rel), where rel's
// columns are relations among k generators.
std::vector<std::int64_t> invariant_factors_of_presentation(
    std::size_t num_generators, const std::vector<std::vector<std::int64_t>>& relation_columns);

}  // namespace abcross
