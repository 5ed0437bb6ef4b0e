#include "abcross/fingroup.hpp"

#include <algorithm>
#include <sstream>

#include "abcross/error.hpp"
#include "abcross/matrix.hpp"

namespace abcross {

namespace {

constexpr std::int64_t kMaxOrder = std::int64_t(1) << 62;

bool is_canonical(const std::vector<std::int64_t>& moduli) {
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < 2) return false;
    if (i + 1 < moduli.size() && moduli[i + 1] % moduli[i] != 0) return false;
  }
  return true;
}

std::vector<std::int64_t> canonicalize(const std::vector<std::int64_t>& moduli) {
  for (std::int64_t n : moduli)
    if (n < 1)
      fail(ErrorKind::validation_error,
           "group modulus must be positive, got " + std::to_string(n));
  if (is_canonical(moduli)) return moduli;
  IntMat rel = IntMat::diagonal(std::vector<Int>(moduli.begin(), moduli.end()));
  SmithNormalForm snf = smith_normal_form(rel);
  std::vector<std::int64_t> out;
  for (const Int& d : snf.diagonal())
    if (d > 1) out.push_back(d.convert_to<std::int64_t>());
  return out;
}

}  // namespace

FinAbGroup::FinAbGroup(std::vector<std::int64_t> moduli)
    : moduli_(canonicalize(moduli)) {
  for (std::int64_t n : moduli_) {
    if (order_ > kMaxOrder / n)
      fail(ErrorKind::validation_error, "group order overflows 64-bit range");
    order_ *= n;
  }
}

FinAbGroup FinAbGroup::cyclic(std::int64_t n) {
  if (n < 1) fail(ErrorKind::validation_error, "cyclic order must be positive");
  if (n == 1) return FinAbGroup();
  return FinAbGroup({n});
}

GroupElement FinAbGroup::zero() const {
  return GroupElement(*this, std::vector<std::int64_t>(rank(), 0));
}

GroupElement FinAbGroup::element(std::vector<std::int64_t> coords) const {
  return GroupElement(*this, std::move(coords));
}

GroupElement FinAbGroup::at(std::int64_t index) const {
  if (index < 0 || index >= order_)
    fail(ErrorKind::validation_error, "element index out of range");
  std::vector<std::int64_t> coords(rank());
  for (std::size_t i = rank(); i-- > 0;) {
    coords[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  return GroupElement(*this, std::move(coords));
}

std::int64_t FinAbGroup::index_of(const GroupElement& g) const {
  if (g.group() != *this)
    fail(ErrorKind::domain_mismatch, "element of a different group");
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx = idx * moduli_[i] + g.coords()[i];
  return idx;
}

GroupElement FinAbGroup::generator(std::size_t i) const {
  if (i >= rank()) fail(ErrorKind::validation_error, "generator index out of range");
  std::vector<std::int64_t> coords(rank(), 0);
  coords[i] = 1;
  return GroupElement(*this, std::move(coords));
}

std::string FinAbGroup::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    os << (i ? "," : "") << moduli_[i];
  os << "]";
  return os.str();
}

GroupElement::GroupElement(FinAbGroup group, std::vector<std::int64_t> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.rank())
    fail(ErrorKind::validation_error, "element coordinate count mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    std::int64_t m = group_.moduli()[i];
    coords_[i] %= m;
    if (coords_[i] < 0) coords_[i] += m;
  }
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](std::int64_t c) { return c == 0; });
}

GroupElement GroupElement::operator+(const GroupElement& rhs) const {
  if (group_ != rhs.group_)
    fail(ErrorKind::domain_mismatch, "sum of elements of different groups");
  std::vector<std::int64_t> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out[i] = (coords_[i] + rhs.coords_[i]) % group_.moduli()[i];
  return GroupElement(group_, std::move(out));
}

GroupElement GroupElement::operator-(const GroupElement& rhs) const {
  return *this + (-rhs);
}

GroupElement GroupElement::operator-() const {
  std::vector<std::int64_t> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out[i] = coords_[i] == 0 ? 0 : group_.moduli()[i] - coords_[i];
  return GroupElement(group_, std::move(out));
}

GroupElement GroupElement::scaled(std::int64_t k) const {
  std::vector<std::int64_t> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    std::int64_t m = group_.moduli()[i];
    std::int64_t r = static_cast<std::int64_t>(
        (static_cast<__int128>(coords_[i]) * k) % m);
    out[i] = r < 0 ? r + m : r;
  }
  return GroupElement(group_, std::move(out));
}

bool GroupElement::operator==(const GroupElement& rhs) const {
  return group_ == rhs.group_ && coords_ == rhs.coords_;
}

bool GroupElement::operator<(const GroupElement& rhs) const {
  if (group_ != rhs.group_)
    fail(ErrorKind::domain_mismatch, "comparing elements of different groups");
  return coords_ < rhs.coords_;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i)
    os << (i ? "," : "") << coords_[i];
  os << ")";
  return os.str();
}

std::vector<std::int64_t> invariant_factors_of_presentation(
    std::size_t num_generators,
    const std::vector<std::vector<std::int64_t>>& relation_columns) {
  IntMat rel(num_generators, relation_columns.size());
  for (std::size_t j = 0; j < relation_columns.size(); ++j) {
    if (relation_columns[j].size() != num_generators)
      fail(ErrorKind::internal_error, "relation column length mismatch");
    for (std::size_t i = 0; i < num_generators; ++i)
      rel.at(i, j) = relation_columns[j][i];
  }
  SmithNormalForm snf = smith_normal_form(rel);
  std::vector<std::int64_t> out;
  for (const Int& d : snf.diagonal())
    if (d > 1) out.push_back(d.convert_to<std::int64_t>());
  // Rank below the generator count would mean an infinite quotient; callers
  // only present finite groups, so treat that as a logic error.
  if (snf.rank < num_generators)
    fail(ErrorKind::internal_error, "presentation has infinite quotient");
  return out;
}

}  // namespace abcross
