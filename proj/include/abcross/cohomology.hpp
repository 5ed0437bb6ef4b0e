#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "abcross/cochain.hpp"
#include "abcross/limits.hpp"

namespace abcross {

// Symmetric cohomology of M with coefficients in N in degree 2 or 3, with a
// classifier that maps any cocycle to its coordinates in the quotient group.
// Cheap to copy; all state is immutable and shared.
class CohomologyGroup {
 public:
  int degree() const;
  const FinAbGroup& domain() const;
  const FinAbGroup& values() const;
  const FinAbGroup& group() const;

  // One cocycle per generator of group(), lexicographically least in its
  // class; classifier(generator i) is the i-th unit coordinate vector.
  const std::vector<Cochain2>& generators2() const;
  const std::vector<Cochain3Pair>& generators3() const;

  GroupElement class_of(const Cochain2& z) const;
  GroupElement class_of(const Cochain3Pair& z) const;

  // Lexicographically least cocycle in an arbitrary class.
  Cochain2 representative2(const GroupElement& cls) const;
  Cochain3Pair representative3(const GroupElement& cls) const;

  // Least g with coboundary(g) = a - b, if the two are cohomologous.
  std::optional<Cochain1> cohomologous_witness(const Cochain2& a,
                                               const Cochain2& b) const;
  std::optional<Cochain2> cohomologous_witness(const Cochain3Pair& a,
                                               const Cochain3Pair& b) const;

  struct Impl;

 private:
  explicit CohomologyGroup(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
  friend CohomologyGroup sym_cohomology(int degree, const FinAbGroup& m,
                                        const FinAbGroup& n,
                                        const Limits& limits);
};

CohomologyGroup sym_cohomology(int degree, const FinAbGroup& m,
                               const FinAbGroup& n,
                               const Limits& limits = Limits{});

// Least g with coboundary(g) = target / coboundary2(g) = target. These skip
// the quotient-group pipeline entirely, so they stay cheap on domains where
// building the full cohomology group would not.
std::optional<Cochain1> coboundary_witness(const Cochain2& target,
                                           const Limits& limits = Limits{});
std::optional<Cochain2> coboundary2_witness(const Cochain3Pair& target,
                                            const Limits& limits = Limits{});

// Brute-force route: every normalized table in enumeration order, filtered by
// the cocycle test and partitioned into classes by coboundary translation.
// cocycles are sorted lexicographically; each class representative is the
// least member of its class.
struct Oracle2Result {
  std::vector<Cochain2> cocycles;
  std::vector<std::size_t> cocycle_class;
  std::vector<Cochain2> class_reps;
};

struct Oracle3Result {
  std::vector<Cochain3Pair> cocycles;
  std::vector<std::size_t> cocycle_class;
  std::vector<Cochain3Pair> class_reps;
};

Oracle2Result oracle_enumerate2(const FinAbGroup& m, const FinAbGroup& n,
                                const Limits& limits = Limits{});
Oracle3Result oracle_enumerate3(const FinAbGroup& m, const FinAbGroup& n,
                                const Limits& limits = Limits{});

}  // namespace abcross
