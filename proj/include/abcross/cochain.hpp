#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abcross/fingroup.hpp"
#include "abcross/hom.hpp"

namespace abcross {

// Precomputed index arithmetic for one group; keeps the table loops free of
// coordinate vectors.
class AdditionTable {
 public:
  explicit AdditionTable(const FinAbGroup& g);
  std::int64_t order() const { return n_; }
  std::int64_t add(std::int64_t i, std::int64_t j) const {
    return add_[i * n_ + j];
  }
  std::int64_t neg(std::int64_t i) const { return neg_[i]; }

 private:
  std::int64_t n_;
  std::vector<std::int64_t> add_, neg_;
};

// Normalized 1-cochain: a pointed map M -> N stored as one N-coordinate block
// per element of M, with the block at 0 pinned to zero.
class Cochain1 {
 public:
  Cochain1() = default;
  Cochain1(FinAbGroup m, FinAbGroup n);

  const FinAbGroup& domain() const { return m_; }
  const FinAbGroup& values() const { return n_; }
  GroupElement at(const GroupElement& u) const;
  void set(const GroupElement& u, const GroupElement& value);
  bool is_zero() const;

  Cochain1 operator+(const Cochain1& rhs) const;
  Cochain1 operator-(const Cochain1& rhs) const;
  bool operator==(const Cochain1& rhs) const;
  bool operator!=(const Cochain1& rhs) const { return !(*this == rhs); }

  // Coordinates of the entries with nonzero argument, in argument-index then
  // coordinate order; the shared currency of the cohomology solvers.
  std::vector<std::int64_t> free_coords() const;
  static Cochain1 from_free_coords(const FinAbGroup& m, const FinAbGroup& n,
                                   const std::vector<std::int64_t>& coords);

  const std::vector<std::int64_t>& raw() const { return tab_; }

 private:
  FinAbGroup m_, n_;
  std::vector<std::int64_t> tab_;  // |M| * rank(N)
};

// Normalized 2-cochain: total table M x M -> N, zero whenever an argument is
// zero. Symmetry is NOT part of the type; the cocycle tests check it.
class Cochain2 {
 public:
  Cochain2() = default;
  Cochain2(FinAbGroup m, FinAbGroup n);

  const FinAbGroup& domain() const { return m_; }
  const FinAbGroup& values() const { return n_; }
  GroupElement at(const GroupElement& u, const GroupElement& v) const;
  void set(const GroupElement& u, const GroupElement& v,
           const GroupElement& value);
  bool is_zero() const;
  bool is_symmetric() const;

  Cochain2 operator+(const Cochain2& rhs) const;
  Cochain2 operator-(const Cochain2& rhs) const;
  bool operator==(const Cochain2& rhs) const;
  bool operator!=(const Cochain2& rhs) const { return !(*this == rhs); }

  std::vector<std::int64_t> free_coords() const;
  static Cochain2 from_free_coords(const FinAbGroup& m, const FinAbGroup& n,
                                   const std::vector<std::int64_t>& coords);

  const std::vector<std::int64_t>& raw() const { return tab_; }

 private:
  FinAbGroup m_, n_;
  std::vector<std::int64_t> tab_;  // |M|^2 * rank(N)
};

// Degree-3 datum: a normalized 3-table xi together with a normalized 2-table
// eta, the shape that the symmetric cocycle conditions constrain jointly.
class Cochain3Pair {
 public:
  Cochain3Pair() = default;
  Cochain3Pair(FinAbGroup m, FinAbGroup n);

  const FinAbGroup& domain() const { return m_; }
  const FinAbGroup& values() const { return n_; }
  GroupElement xi(const GroupElement& x, const GroupElement& y,
                  const GroupElement& z) const;
  GroupElement eta(const GroupElement& x, const GroupElement& y) const;
  void set_xi(const GroupElement& x, const GroupElement& y,
              const GroupElement& z, const GroupElement& value);
  void set_eta(const GroupElement& x, const GroupElement& y,
               const GroupElement& value);
  bool is_zero() const;

  Cochain3Pair operator+(const Cochain3Pair& rhs) const;
  Cochain3Pair operator-(const Cochain3Pair& rhs) const;
  bool operator==(const Cochain3Pair& rhs) const;
  bool operator!=(const Cochain3Pair& rhs) const { return !(*this == rhs); }

  // xi entries (all arguments nonzero) first, then eta entries.
  std::vector<std::int64_t> free_coords() const;
  static Cochain3Pair from_free_coords(const FinAbGroup& m,
                                       const FinAbGroup& n,
                                       const std::vector<std::int64_t>& coords);

  const std::vector<std::int64_t>& raw_xi() const { return xi_; }
  const std::vector<std::int64_t>& raw_eta() const { return eta_; }

 private:
  FinAbGroup m_, n_;
  std::vector<std::int64_t> xi_;   // |M|^3 * rank(N)
  std::vector<std::int64_t> eta_;  // |M|^2 * rank(N)
};

// First violated condition of a cocycle test, with the witnessing arguments.
struct CocycleViolation {
  std::string condition;
  std::vector<GroupElement> args;
};

std::optional<CocycleViolation> check_sym_2cocycle(const Cochain2& f);
inline bool is_sym_2cocycle(const Cochain2& f) {
  return !check_sym_2cocycle(f).has_value();
}

std::optional<CocycleViolation> check_sym_3cocycle(const Cochain3Pair& k);
inline bool is_sym_3cocycle(const Cochain3Pair& k) {
  return !check_sym_3cocycle(k).has_value();
}

// (dg)(u,v) = g(u) + g(v) - g(u+v).
Cochain2 coboundary(const Cochain1& g);
// xi(x,y,z) = g(y,z) - g(x+y,z) + g(x,y+z) - g(x,y);
// eta(x,y) = g(y,x) - g(x,y).
Cochain3Pair coboundary2(const Cochain2& g);

// Transport along a domain hom (precomposition) or a value hom (
// postcomposition); both preserve normalization and the cocycle conditions.
Cochain1 pullback(const Cochain1& g, const GroupHom& phi);
Cochain2 pullback(const Cochain2& f, const GroupHom& phi);
Cochain3Pair pullback(const Cochain3Pair& k, const GroupHom& phi);
Cochain1 pushforward(const GroupHom& h, const Cochain1& g);
Cochain2 pushforward(const GroupHom& h, const Cochain2& f);
Cochain3Pair pushforward(const GroupHom& h, const Cochain3Pair& k);

}  // namespace abcross
