#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace abcross {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix. Entries are arbitrary precision so elimination
/// never overflows.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMat identity(std::size_t n);
  static IntMat diagonal(const std::vector<Int>& entries);
  static IntMat from_rows(
      std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  bool operator==(const IntMat&) const = default;

  IntMat operator*(const IntMat& rhs) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;
  std::vector<Int> column_vector(std::size_t j) const;
  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

/// [a | b] side by side; row counts must agree.
IntMat hstack(const IntMat& a, const IntMat& b);

/// Remainder in [0, |m|) regardless of the sign of a.
Int mod_floor(const Int& a, const Int& m);

/// u * a * v = s with u, v unimodular and s diagonal, each diagonal entry
/// nonnegative and dividing the next. u_inv satisfies u_inv * u = I.
struct SmithNormalForm {
  IntMat u, s, v, u_inv;
  std::size_t rank = 0;
  std::vector<Int> diagonal() const;
};

SmithNormalForm smith_normal_form(const IntMat& a);

/// Square lower-triangular basis (positive diagonal, reduced off-diagonal
/// columns) of the full-rank lattice spanned by the columns of gens.
IntMat column_hermite_basis(const IntMat& gens);

/// Exact solve of l * x = b for lower-triangular l with positive diagonal;
/// nullopt when some division is inexact (b outside the lattice).
std::optional<std::vector<Int>> solve_lower_triangular(
    const IntMat& l, const std::vector<Int>& b);

/// Fraction-free determinant (Bareiss); used by tests to certify
/// unimodularity of accumulated transforms.
Int determinant(IntMat a);

/// Lexicographically least point of (x + column lattice of gens), with
/// coordinates taken modulo c componentwise. diag(c) must lie inside the
/// lattice spanned by gens' columns extended by the diag(c) block, which
/// holds whenever the lattice is the solution set of a system over Z/c.
std::vector<std::int64_t> lex_min_in_coset(std::vector<Int> x,
                                           const IntMat& gens,
                                           const std::vector<std::int64_t>& c);

/// Solutions x of t_matrix * x == rhs (mod t_moduli), with x taken modulo
/// x_moduli componentwise. Requires the system to descend to finite groups:
/// every column scaled by its modulus must vanish mod t_moduli. Returns the
/// lexicographically least solution (coordinate 0 most significant), or the
/// greatest when `greatest` is set; nullopt when unsolvable.
std::optional<std::vector<std::int64_t>> solve_congruences(
    const IntMat& t_matrix, const std::vector<std::int64_t>& t_moduli,
    const std::vector<std::int64_t>& x_moduli,
    const std::vector<std::int64_t>& rhs, bool greatest = false);

}  // namespace abcross
