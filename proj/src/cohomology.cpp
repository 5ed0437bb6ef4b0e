#include "abcross/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "abcross/error.hpp"
#include "abcross/matrix.hpp"

namespace abcross {

namespace {

// Hard budget on the number of free table entries the lattice pipeline will
// handle. Beyond it the elimination cost grows cubically, so refuse early
// and honestly instead of stalling.
constexpr std::int64_t kLatticeBudget = 512;

std::int64_t free_entry_count(int degree, std::int64_t m) {
  const std::int64_t q = m - 1;
  return degree == 2 ? q * q : q * q * q + q * q;
}

std::int64_t ext_gcd64(std::int64_t a, std::int64_t b, std::int64_t& x,
                       std::int64_t& y) {
  std::int64_t old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * xx;
    old_x = xx;
    xx = t;
    t = old_y - q * yy;
    old_y = yy;
    yy = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

// A linear term list over free table entries; the same rows serve every
// coefficient factor, reduced by its own modulus.
using SparseRow = std::vector<std::pair<std::int64_t, std::int64_t>>;

void add_term(std::map<std::int64_t, std::int64_t>& acc, std::int64_t pos,
              std::int64_t coeff) {
  acc[pos] += coeff;
}

SparseRow finish_row(std::map<std::int64_t, std::int64_t>& acc) {
  SparseRow row;
  for (const auto& [pos, coeff] : acc)
    if (coeff != 0) row.emplace_back(pos, coeff);
  acc.clear();
  return row;
}

// Rows annihilated exactly by the degree-2 cocycle tables: the associativity
// defect and the symmetry defect, one row per argument tuple with every
// argument nonzero (tuples with a zero argument give identically-zero rows).
std::vector<SparseRow> condition_rows2(const FinAbGroup& mg) {
  const std::int64_t m = mg.order();
  AdditionTable at(mg);
  auto pair_idx = [m](std::int64_t i, std::int64_t j) {
    return (i - 1) * (m - 1) + (j - 1);
  };
  std::vector<SparseRow> rows;
  std::map<std::int64_t, std::int64_t> acc;
  for (std::int64_t u = 1; u < m; ++u)
    for (std::int64_t v = 1; v < m; ++v)
      for (std::int64_t w = 1; w < m; ++w) {
        add_term(acc, pair_idx(v, w), 1);
        std::int64_t vw = at.add(v, w);
        if (vw != 0) add_term(acc, pair_idx(u, vw), 1);
        add_term(acc, pair_idx(u, v), -1);
        std::int64_t uv = at.add(u, v);
        if (uv != 0) add_term(acc, pair_idx(uv, w), -1);
        rows.push_back(finish_row(acc));
      }
  for (std::int64_t u = 1; u < m; ++u)
    for (std::int64_t v = u + 1; v < m; ++v) {
      add_term(acc, pair_idx(u, v), 1);
      add_term(acc, pair_idx(v, u), -1);
      rows.push_back(finish_row(acc));
    }
  return rows;
}

// Rows annihilated exactly by the degree-3 data: the four-argument recursion
// on the triple table, antisymmetry of the pair table, and the mixed
// condition binding the two tables.
std::vector<SparseRow> condition_rows3(const FinAbGroup& mg) {
  const std::int64_t m = mg.order();
  AdditionTable at(mg);
  const std::int64_t q = m - 1;
  auto xi_idx = [q](std::int64_t i, std::int64_t j, std::int64_t l) {
    return ((i - 1) * q + (j - 1)) * q + (l - 1);
  };
  auto eta_idx = [q](std::int64_t i, std::int64_t j) {
    return q * q * q + (i - 1) * q + (j - 1);
  };
  std::vector<SparseRow> rows;
  std::map<std::int64_t, std::int64_t> acc;
  for (std::int64_t x = 1; x < m; ++x)
    for (std::int64_t y = 1; y < m; ++y)
      for (std::int64_t z = 1; z < m; ++z)
        for (std::int64_t w = 1; w < m; ++w) {
          add_term(acc, xi_idx(y, z, w), 1);
          std::int64_t xy = at.add(x, y);
          if (xy != 0) add_term(acc, xi_idx(xy, z, w), -1);
          std::int64_t yz = at.add(y, z);
          if (yz != 0) add_term(acc, xi_idx(x, yz, w), 1);
          std::int64_t zw = at.add(z, w);
          if (zw != 0) add_term(acc, xi_idx(x, y, zw), -1);
          add_term(acc, xi_idx(x, y, z), 1);
          rows.push_back(finish_row(acc));
        }
  for (std::int64_t x = 1; x < m; ++x)
    for (std::int64_t y = x; y < m; ++y) {
      add_term(acc, eta_idx(x, y), 1);
      add_term(acc, eta_idx(y, x), 1);
      rows.push_back(finish_row(acc));
    }
  for (std::int64_t x = 1; x < m; ++x)
    for (std::int64_t y = 1; y < m; ++y)
      for (std::int64_t z = 1; z < m; ++z) {
        add_term(acc, xi_idx(x, y, z), 1);
        add_term(acc, xi_idx(y, x, z), -1);
        add_term(acc, xi_idx(y, z, x), 1);
        std::int64_t yz = at.add(y, z);
        if (yz != 0) add_term(acc, eta_idx(x, yz), 1);
        add_term(acc, eta_idx(x, y), -1);
        add_term(acc, eta_idx(x, z), -1);
        rows.push_back(finish_row(acc));
      }
  return rows;
}

// Row r of the result is free entry r of the degree-(deg) table expressed in
// the free entries of a degree-(deg-1) table, matching the coboundary
// formulas entry for entry.
std::vector<SparseRow> coboundary_entry_rows(int degree,
                                             const FinAbGroup& mg) {
  const std::int64_t m = mg.order();
  AdditionTable at(mg);
  const std::int64_t q = m - 1;
  std::vector<SparseRow> rows;
  std::map<std::int64_t, std::int64_t> acc;
  if (degree == 2) {
    // (dg)(u,v) = g(u) + g(v) - g(u+v); source entries indexed by u-1.
    for (std::int64_t u = 1; u < m; ++u)
      for (std::int64_t v = 1; v < m; ++v) {
        add_term(acc, u - 1, 1);
        add_term(acc, v - 1, 1);
        std::int64_t uv = at.add(u, v);
        if (uv != 0) add_term(acc, uv - 1, -1);
        rows.push_back(finish_row(acc));
      }
    return rows;
  }
  auto pair_idx = [q](std::int64_t i, std::int64_t j) {
    return (i - 1) * q + (j - 1);
  };
  // Triple-table rows: g(y,z) - g(x+y,z) + g(x,y+z) - g(x,y).
  for (std::int64_t x = 1; x < m; ++x)
    for (std::int64_t y = 1; y < m; ++y)
      for (std::int64_t z = 1; z < m; ++z) {
        add_term(acc, pair_idx(y, z), 1);
        std::int64_t xy = at.add(x, y);
        if (xy != 0) add_term(acc, pair_idx(xy, z), -1);
        std::int64_t yz = at.add(y, z);
        if (yz != 0) add_term(acc, pair_idx(x, yz), 1);
        add_term(acc, pair_idx(x, y), -1);
        rows.push_back(finish_row(acc));
      }
  // Pair-table rows: g(y,x) - g(x,y).
  for (std::int64_t x = 1; x < m; ++x)
    for (std::int64_t y = 1; y < m; ++y) {
      add_term(acc, pair_idx(y, x), 1);
      add_term(acc, pair_idx(x, y), -1);
      rows.push_back(finish_row(acc));
    }
  return rows;
}

// Incremental row elimination over Z/n. Unimodular row combinations and
// dropping implied rows preserve the solution set, so the surviving rows are
// an equivalent system with at most one row per variable.
class ModEchelon {
 public:
  ModEchelon(std::int64_t n, std::int64_t vars, bool augmented)
      : n_(n), vars_(vars), augmented_(augmented), pivot_row_at_(vars, -1) {}

  bool unsat() const { return unsat_; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

  void insert(std::vector<std::int64_t> r) {
    for (std::int64_t pos = 0; pos < vars_; ++pos) {
      r[pos] %= n_;
      if (r[pos] < 0) r[pos] += n_;
      if (r[pos] == 0) continue;
      std::int64_t pr = pivot_row_at_[pos];
      if (pr < 0) {
        pivot_row_at_[pos] = static_cast<std::int64_t>(rows_.size());
        rows_.push_back(std::move(r));
        return;
      }
      auto& p = rows_[pr];
      const std::int64_t a = p[pos], b = r[pos];
      if (b % a == 0) {
        const std::int64_t k = b / a;
        for (std::size_t t = pos; t < r.size(); ++t) {
          r[t] = (r[t] - k * p[t]) % n_;
          if (r[t] < 0) r[t] += n_;
        }
      } else {
        std::int64_t x, y;
        const std::int64_t g = ext_gcd64(a, b, x, y);
        const std::int64_t ag = a / g, bg = b / g;
        for (std::size_t t = pos; t < r.size(); ++t) {
          const std::int64_t pt = p[t], rt = r[t];
          std::int64_t np = (x * pt + y * rt) % n_;
          if (np < 0) np += n_;
          std::int64_t nr = (ag * rt - bg * pt) % n_;
          if (nr < 0) nr += n_;
          p[t] = np;
          r[t] = nr;
        }
      }
    }
    if (augmented_) {
      std::int64_t v = r[vars_] % n_;
      if (v < 0) v += n_;
      if (v != 0) unsat_ = true;
    }
  }

  void insert_sparse(const SparseRow& sparse, std::int64_t rhs) {
    std::vector<std::int64_t> dense(vars_ + (augmented_ ? 1 : 0), 0);
    for (const auto& [pos, coeff] : sparse) dense[pos] = coeff;
    if (augmented_) dense[vars_] = rhs;
    insert(std::move(dense));
  }

 private:
  std::int64_t n_;
  std::int64_t vars_;
  bool augmented_;
  bool unsat_ = false;
  std::vector<std::int64_t> pivot_row_at_;
  std::vector<std::vector<std::int64_t>> rows_;
};

// Factor-coordinate plumbing: free coordinate vectors interleave the value
// group's cyclic factors entry-major, so factor k occupies positions
// entry * rank + k.
std::vector<std::int64_t> factor_slice(const std::vector<std::int64_t>& free,
                                       std::size_t k, std::size_t rank,
                                       std::int64_t entries) {
  std::vector<std::int64_t> out(entries);
  for (std::int64_t e = 0; e < entries; ++e) out[e] = free[e * rank + k];
  return out;
}

void factor_scatter(std::vector<std::int64_t>& free,
                    const std::vector<std::int64_t>& part, std::size_t k,
                    std::size_t rank) {
  for (std::size_t e = 0; e < part.size(); ++e) free[e * rank + k] = part[e];
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp,
                         std::int64_t cap, const char* what) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base)
      fail(ErrorKind::size_exceeded, std::string(what) +
                                         " needs more than " +
                                         std::to_string(cap) + " candidates");
    r *= base;
  }
  return r;
}

bool next_tuple(std::vector<std::int64_t>& t, std::int64_t base) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

std::int64_t mod64(std::int64_t v, std::int64_t n) {
  v %= n;
  return v < 0 ? v + n : v;
}

using Mat64 = std::vector<std::vector<std::int64_t>>;

Mat64 identity64(std::int64_t n) {
  Mat64 m(n, std::vector<std::int64_t>(n, 0));
  for (std::int64_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Diagonalization over Z/n by integer-unimodular row and column operations,
// with the matrix and all four transforms kept reduced mod n throughout.
// Reducing mod n is sound for every caller here because each lattice involved
// contains n times the standard basis, so generators may be shifted by
// multiples of n freely.  The diagonal is not forced into a divisibility
// chain; callers only read gcd(diagonal, n) per position.
struct ModDiag {
  Mat64 a;        // rows x cols, zero off the diagonal on exit
  Mat64 p, pinv;  // rows x rows
  Mat64 q, qinv;  // cols x cols; a_out = p * a_in * q (mod n)
};

ModDiag mod_diag(Mat64 a0, std::int64_t rows, std::int64_t cols,
                 std::int64_t n) {
  ModDiag d;
  d.a = std::move(a0);
  d.p = identity64(rows);
  d.pinv = identity64(rows);
  d.q = identity64(cols);
  d.qinv = identity64(cols);

  auto row_axpy = [&](std::int64_t dst, std::int64_t src, std::int64_t k) {
    if (k == 0) return;
    for (std::int64_t t = 0; t < cols; ++t)
      d.a[dst][t] = mod64(d.a[dst][t] + k * d.a[src][t], n);
    for (std::int64_t t = 0; t < rows; ++t)
      d.p[dst][t] = mod64(d.p[dst][t] + k * d.p[src][t], n);
    for (std::int64_t t = 0; t < rows; ++t)
      d.pinv[t][src] = mod64(d.pinv[t][src] - k * d.pinv[t][dst], n);
  };
  // Rows (i, j) <- (x*r_i + y*r_j, -bg*r_i + ag*r_j); the block determinant
  // is x*ag + y*bg = 1, with inverse [[ag, -y], [bg, x]].
  auto row_combine = [&](std::int64_t i, std::int64_t j, std::int64_t x,
                         std::int64_t y, std::int64_t ag, std::int64_t bg) {
    for (std::int64_t t = 0; t < cols; ++t) {
      const std::int64_t ri = d.a[i][t], rj = d.a[j][t];
      d.a[i][t] = mod64(x * ri + y * rj, n);
      d.a[j][t] = mod64(ag * rj - bg * ri, n);
    }
    for (std::int64_t t = 0; t < rows; ++t) {
      const std::int64_t ri = d.p[i][t], rj = d.p[j][t];
      d.p[i][t] = mod64(x * ri + y * rj, n);
      d.p[j][t] = mod64(ag * rj - bg * ri, n);
    }
    for (std::int64_t t = 0; t < rows; ++t) {
      const std::int64_t ci = d.pinv[t][i], cj = d.pinv[t][j];
      d.pinv[t][i] = mod64(ag * ci + bg * cj, n);
      d.pinv[t][j] = mod64(x * cj - y * ci, n);
    }
  };
  auto row_swap = [&](std::int64_t i, std::int64_t j) {
    if (i == j) return;
    d.a[i].swap(d.a[j]);
    d.p[i].swap(d.p[j]);
    for (std::int64_t t = 0; t < rows; ++t)
      std::swap(d.pinv[t][i], d.pinv[t][j]);
  };
  auto col_axpy = [&](std::int64_t dst, std::int64_t src, std::int64_t k) {
    if (k == 0) return;
    for (std::int64_t t = 0; t < rows; ++t)
      d.a[t][dst] = mod64(d.a[t][dst] + k * d.a[t][src], n);
    for (std::int64_t t = 0; t < cols; ++t)
      d.q[t][dst] = mod64(d.q[t][dst] + k * d.q[t][src], n);
    for (std::int64_t t = 0; t < cols; ++t)
      d.qinv[src][t] = mod64(d.qinv[src][t] - k * d.qinv[dst][t], n);
  };
  // Columns (i, j) <- (x*c_i + y*c_j, -bg*c_i + ag*c_j); inverse acts on the
  // left of qinv as rows (i, j) <- (ag*r_i + bg*r_j, -y*r_i + x*r_j).
  auto col_combine = [&](std::int64_t i, std::int64_t j, std::int64_t x,
                         std::int64_t y, std::int64_t ag, std::int64_t bg) {
    for (std::int64_t t = 0; t < rows; ++t) {
      const std::int64_t ci = d.a[t][i], cj = d.a[t][j];
      d.a[t][i] = mod64(x * ci + y * cj, n);
      d.a[t][j] = mod64(ag * cj - bg * ci, n);
    }
    for (std::int64_t t = 0; t < cols; ++t) {
      const std::int64_t ci = d.q[t][i], cj = d.q[t][j];
      d.q[t][i] = mod64(x * ci + y * cj, n);
      d.q[t][j] = mod64(ag * cj - bg * ci, n);
    }
    for (std::int64_t t = 0; t < cols; ++t) {
      const std::int64_t ri = d.qinv[i][t], rj = d.qinv[j][t];
      d.qinv[i][t] = mod64(ag * ri + bg * rj, n);
      d.qinv[j][t] = mod64(x * rj - y * ri, n);
    }
  };
  auto col_swap = [&](std::int64_t i, std::int64_t j) {
    if (i == j) return;
    for (std::int64_t t = 0; t < rows; ++t) std::swap(d.a[t][i], d.a[t][j]);
    for (std::int64_t t = 0; t < cols; ++t) std::swap(d.q[t][i], d.q[t][j]);
    d.qinv[i].swap(d.qinv[j]);
  };

  const std::int64_t steps = std::min(rows, cols);
  for (std::int64_t k = 0; k < steps; ++k) {
    std::int64_t pi = -1, pj = -1;
    for (std::int64_t i = k; i < rows && pi < 0; ++i)
      for (std::int64_t j = k; j < cols; ++j)
        if (d.a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    row_swap(k, pi);
    col_swap(k, pj);
    // Clear column k, then row k; a bezout column step can re-dirty the
    // column, but each such step replaces the pivot by a proper divisor, so
    // the loop ends after at most log2(n) passes.
    for (;;) {
      for (std::int64_t i = k + 1; i < rows; ++i) {
        const std::int64_t b = d.a[i][k];
        if (b == 0) continue;
        const std::int64_t aa = d.a[k][k];
        if (b % aa == 0) {
          row_axpy(i, k, -(b / aa));
        } else {
          std::int64_t x, y;
          const std::int64_t g = ext_gcd64(aa, b, x, y);
          row_combine(k, i, x, y, aa / g, b / g);
        }
      }
      bool dirty = false;
      for (std::int64_t j = k + 1; j < cols; ++j) {
        const std::int64_t b = d.a[k][j];
        if (b == 0) continue;
        const std::int64_t aa = d.a[k][k];
        if (b % aa == 0) {
          col_axpy(j, k, -(b / aa));
        } else {
          std::int64_t x, y;
          const std::int64_t g = ext_gcd64(aa, b, x, y);
          col_combine(k, j, x, y, aa / g, b / g);
          dirty = true;
        }
      }
      if (!dirty) break;
    }
  }
  return d;
}

// Greedy coordinate-by-coordinate lexicographic minimization of x inside its
// coset of the lattice spanned by the given columns together with n times the
// standard basis, all arithmetic mod n.  Mirrors the exact coset minimizer in
// the matrix module; the n*e_i generators are implicit in the mod-n
// arithmetic except for the pivot fold, which is spelled out.
std::vector<std::int64_t> lexmin_coset_mod(std::vector<std::int64_t> x,
                                           Mat64 cols, std::int64_t n) {
  const std::int64_t fdim = static_cast<std::int64_t>(x.size());
  for (std::int64_t i = 0; i < fdim; ++i) {
    std::size_t piv = cols.size();
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j][i] == 0) continue;
      if (piv == cols.size()) {
        piv = j;
        continue;
      }
      auto& p = cols[piv];
      auto& c = cols[j];
      const std::int64_t a = p[i], b = c[i];
      if (b % a == 0) {
        const std::int64_t k = b / a;
        for (std::int64_t r = i; r < fdim; ++r)
          c[r] = mod64(c[r] - k * p[r], n);
      } else {
        std::int64_t xx, yy;
        const std::int64_t g = ext_gcd64(a, b, xx, yy);
        const std::int64_t ag = a / g, bg = b / g;
        for (std::int64_t r = i; r < fdim; ++r) {
          const std::int64_t pr = p[r], cr = c[r];
          p[r] = mod64(xx * pr + yy * cr, n);
          c[r] = mod64(ag * cr - bg * pr, n);
        }
      }
    }
    std::int64_t g = n;
    if (piv != cols.size()) {
      auto& p = cols[piv];
      std::int64_t xx, yy;
      g = ext_gcd64(p[i], n, xx, yy);
      if (g != p[i]) {
        // Fold the modulus into the pivot; keep the complementary output of
        // the fold as a fresh generator so no lattice vector is lost.
        std::vector<std::int64_t> rest(fdim, 0);
        const std::int64_t scale = n / g;
        for (std::int64_t r = i; r < fdim; ++r) {
          rest[r] = mod64(-scale * p[r], n);
          p[r] = mod64(xx * p[r], n);
        }
        cols.push_back(std::move(rest));
      }
      const std::int64_t k = (x[i] - mod64(x[i], g)) / g;
      if (k != 0)
        for (std::int64_t r = i; r < fdim; ++r)
          x[r] = mod64(x[r] - k * cols[piv][r], n);
      // Remaining freedom at this coordinate is multiples of n: scale the
      // pivot column so its tail stays available to later coordinates.
      const std::int64_t scale = n / g;
      for (std::int64_t r = i; r < fdim; ++r)
        cols[piv][r] = mod64(scale * cols[piv][r], n);
    } else {
      x[i] = mod64(x[i], n);
    }
    // Drop columns that became zero; they carry no further freedom.
    std::size_t w = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      bool zero = true;
      for (std::int64_t r = i; r < fdim && zero; ++r) zero = cols[j][r] == 0;
      if (!zero) {
        if (w != j) cols[w] = std::move(cols[j]);
        ++w;
      }
    }
    cols.resize(w);
  }
  return x;
}

}  // namespace

struct CohomologyGroup::Impl {
  int degree = 0;
  FinAbGroup m, n, h;
  std::int64_t entries = 0;  // free entries per value coordinate

  struct Factor {
    std::int64_t modulus = 0;
    std::vector<std::int64_t> t;  // per-coordinate solution strides
    Mat64 qinv;                   // entries x entries: coords -> strides
    Mat64 pw_kept;                // one quotient row per kept position
    std::vector<std::int64_t> s;  // quotient invariant factors (full diag)
    std::vector<std::size_t> kept;  // positions with s > 1
    Mat64 bcols;                  // coboundary generator columns, mod modulus
    std::vector<std::vector<std::int64_t>> gen_coords;  // per kept position
  };
  std::vector<Factor> factors;

  // Assembly of the per-factor quotients into one canonical group.
  std::vector<std::int64_t> lmoduli;
  IntMat hu, hu_inv;
  std::vector<Int> hs_full;
  std::vector<std::size_t> hkept;

  std::vector<Cochain2> gens2;
  std::vector<Cochain3Pair> gens3;

  std::vector<std::int64_t> classify(
      const std::vector<std::int64_t>& free) const {
    std::vector<std::int64_t> x;
    const std::size_t rank = n.rank();
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const Factor& f = factors[k];
      if (f.kept.empty()) continue;
      const std::vector<std::int64_t> zk =
          factor_slice(free, k, rank, entries);
      std::vector<std::int64_t> w(entries);
      for (std::int64_t i = 0; i < entries; ++i) {
        std::int64_t acc = 0;
        for (std::int64_t t = 0; t < entries; ++t) acc += f.qinv[i][t] * zk[t];
        acc = mod64(acc, f.modulus);
        if (acc % f.t[i] != 0)
          fail(ErrorKind::internal_error,
               "verified cocycle fell outside the cocycle lattice");
        w[i] = acc / f.t[i];
      }
      for (std::size_t j = 0; j < f.kept.size(); ++j) {
        std::int64_t acc = 0;
        for (std::int64_t t = 0; t < entries; ++t)
          acc += f.pw_kept[j][t] * w[t];
        x.push_back(mod64(acc, f.s[f.kept[j]]));
      }
    }
    std::vector<std::int64_t> out;
    out.reserve(hkept.size());
    for (std::size_t row : hkept) {
      Int acc = 0;
      for (std::size_t t = 0; t < lmoduli.size(); ++t)
        acc += hu.at(row, t) * Int(x[t]);
      out.push_back(mod_floor(acc, hs_full[row]).convert_to<std::int64_t>());
    }
    return out;
  }

  std::vector<std::int64_t> rep_coords(const GroupElement& cls) const {
    const std::size_t p = lmoduli.size();
    std::vector<Int> ypad(p, 0);
    for (std::size_t i = 0; i < hkept.size(); ++i)
      ypad[hkept[i]] = cls.coords()[i];
    std::vector<std::int64_t> x(p, 0);
    for (std::size_t i = 0; i < p; ++i) {
      Int acc = 0;
      for (std::size_t t = 0; t < p; ++t) acc += hu_inv.at(i, t) * ypad[t];
      x[i] = mod_floor(acc, Int(lmoduli[i])).convert_to<std::int64_t>();
    }
    const std::size_t rank = n.rank();
    std::vector<std::int64_t> free(entries * rank, 0);
    std::size_t offset = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const Factor& f = factors[k];
      std::vector<std::int64_t> coords(entries, 0);
      bool nonzero = false;
      for (std::size_t j = 0; j < f.kept.size(); ++j) {
        const std::int64_t c = x[offset + j];
        if (c == 0) continue;
        nonzero = true;
        for (std::int64_t t = 0; t < entries; ++t)
          coords[t] = (coords[t] + c * f.gen_coords[j][t]) % f.modulus;
      }
      offset += f.kept.size();
      if (nonzero)
        coords = lexmin_coset_mod(std::move(coords), f.bcols, f.modulus);
      factor_scatter(free, coords, k, rank);
    }
    return free;
  }
};

namespace {

CohomologyGroup::Impl::Factor build_factor(
    const std::vector<SparseRow>& cond, const std::vector<SparseRow>& cob,
    std::int64_t entries, std::int64_t src_entries, std::int64_t n) {
  CohomologyGroup::Impl::Factor f;
  f.modulus = n;
  if (entries == 0) return f;

  // Cocycle lattice: compress the condition rows over Z/n, then diagonalize
  // so the solutions split into one stride per transformed coordinate.
  ModEchelon ech(n, entries, false);
  for (const SparseRow& row : cond) ech.insert_sparse(row, 0);
  const std::int64_t rc = static_cast<std::int64_t>(ech.rows().size());
  ModDiag kd = mod_diag(ech.rows(), rc, entries, n);
  f.t.assign(entries, 1);
  for (std::int64_t j = 0; j < std::min(rc, entries); ++j)
    f.t[j] = n / std::gcd(kd.a[j][j], n);
  f.qinv = kd.qinv;

  // Coboundary generators as columns mod n, each certified to satisfy the
  // compressed condition rows.
  f.bcols.assign(src_entries, std::vector<std::int64_t>(entries, 0));
  for (std::int64_t r = 0; r < entries; ++r)
    for (const auto& [pos, coeff] : cob[r]) f.bcols[pos][r] = mod64(coeff, n);
  for (const auto& bc : f.bcols)
    for (std::int64_t i = 0; i < rc; ++i) {
      std::int64_t acc = 0;
      for (std::int64_t t = 0; t < entries; ++t)
        acc += ech.rows()[i][t] * bc[t];
      if (acc % n != 0)
        fail(ErrorKind::internal_error,
             "coboundary escaped the cocycle lattice");
    }

  // Quotient of the solution lattice by the coboundaries, in stride
  // coordinates: divide each coboundary through by the strides, append the
  // per-coordinate relation moduli, and diagonalize once more.
  const std::int64_t a2cols = src_entries + entries;
  Mat64 a2(entries, std::vector<std::int64_t>(a2cols, 0));
  for (std::int64_t c = 0; c < src_entries; ++c)
    for (std::int64_t i = 0; i < entries; ++i) {
      std::int64_t acc = 0;
      for (std::int64_t t = 0; t < entries; ++t)
        acc += kd.qinv[i][t] * f.bcols[c][t];
      acc = mod64(acc, n);
      if (acc % f.t[i] != 0)
        fail(ErrorKind::internal_error,
             "coboundary escaped the cocycle lattice");
      a2[i][c] = acc / f.t[i];
    }
  for (std::int64_t i = 0; i < entries; ++i)
    a2[i][src_entries + i] = mod64(n / f.t[i], n);
  ModDiag qd = mod_diag(std::move(a2), entries, a2cols, n);

  f.s.resize(entries);
  for (std::int64_t i = 0; i < entries; ++i) {
    f.s[i] = std::gcd(qd.a[i][i], n);
    if (f.s[i] > 1) f.kept.push_back(i);
  }
  for (std::size_t j : f.kept) f.pw_kept.push_back(qd.p[j]);

  for (std::size_t j : f.kept) {
    // Unit-class member: map the j-th quotient unit back through the stride
    // coordinates, then take the least member of its coboundary coset.
    std::vector<std::int64_t> z(entries);
    for (std::int64_t i = 0; i < entries; ++i)
      z[i] = mod64(f.t[i] * qd.pinv[i][j], n);
    std::vector<std::int64_t> coords(entries);
    for (std::int64_t i = 0; i < entries; ++i) {
      std::int64_t acc = 0;
      for (std::int64_t t = 0; t < entries; ++t) acc += kd.q[i][t] * z[t];
      coords[i] = mod64(acc, n);
    }
    f.gen_coords.push_back(lexmin_coset_mod(std::move(coords), f.bcols, n));
  }
  return f;
}

}  // namespace

CohomologyGroup::CohomologyGroup(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

int CohomologyGroup::degree() const { return impl_->degree; }
const FinAbGroup& CohomologyGroup::domain() const { return impl_->m; }
const FinAbGroup& CohomologyGroup::values() const { return impl_->n; }
const FinAbGroup& CohomologyGroup::group() const { return impl_->h; }

const std::vector<Cochain2>& CohomologyGroup::generators2() const {
  if (impl_->degree != 2)
    fail(ErrorKind::validation_error,
         "degree-2 generators requested from a degree-3 group");
  return impl_->gens2;
}

const std::vector<Cochain3Pair>& CohomologyGroup::generators3() const {
  if (impl_->degree != 3)
    fail(ErrorKind::validation_error,
         "degree-3 generators requested from a degree-2 group");
  return impl_->gens3;
}

GroupElement CohomologyGroup::class_of(const Cochain2& z) const {
  if (impl_->degree != 2)
    fail(ErrorKind::validation_error, "degree-2 table in a degree-3 group");
  if (z.domain() != impl_->m || z.values() != impl_->n)
    fail(ErrorKind::domain_mismatch, "table over the wrong groups");
  if (auto viol = check_sym_2cocycle(z))
    fail(ErrorKind::not_a_cocycle,
         "condition '" + viol->condition + "' fails");
  return impl_->h.element(impl_->classify(z.free_coords()));
}

GroupElement CohomologyGroup::class_of(const Cochain3Pair& z) const {
  if (impl_->degree != 3)
    fail(ErrorKind::validation_error, "degree-3 data in a degree-2 group");
  if (z.domain() != impl_->m || z.values() != impl_->n)
    fail(ErrorKind::domain_mismatch, "table over the wrong groups");
  if (auto viol = check_sym_3cocycle(z))
    fail(ErrorKind::not_a_cocycle,
         "condition '" + viol->condition + "' fails");
  return impl_->h.element(impl_->classify(z.free_coords()));
}

Cochain2 CohomologyGroup::representative2(const GroupElement& cls) const {
  if (impl_->degree != 2)
    fail(ErrorKind::validation_error,
         "degree-2 representative requested from a degree-3 group");
  if (cls.group() != impl_->h)
    fail(ErrorKind::domain_mismatch, "class outside the quotient group");
  return Cochain2::from_free_coords(impl_->m, impl_->n,
                                    impl_->rep_coords(cls));
}

Cochain3Pair CohomologyGroup::representative3(const GroupElement& cls) const {
  if (impl_->degree != 3)
    fail(ErrorKind::validation_error,
         "degree-3 representative requested from a degree-2 group");
  if (cls.group() != impl_->h)
    fail(ErrorKind::domain_mismatch, "class outside the quotient group");
  return Cochain3Pair::from_free_coords(impl_->m, impl_->n,
                                        impl_->rep_coords(cls));
}

std::optional<Cochain1> CohomologyGroup::cohomologous_witness(
    const Cochain2& a, const Cochain2& b) const {
  if (impl_->degree != 2)
    fail(ErrorKind::validation_error, "degree-2 tables in a degree-3 group");
  if (a.domain() != impl_->m || a.values() != impl_->n)
    fail(ErrorKind::domain_mismatch, "table over the wrong groups");
  return coboundary_witness(a - b);
}

std::optional<Cochain2> CohomologyGroup::cohomologous_witness(
    const Cochain3Pair& a, const Cochain3Pair& b) const {
  if (impl_->degree != 3)
    fail(ErrorKind::validation_error, "degree-3 data in a degree-2 group");
  if (a.domain() != impl_->m || a.values() != impl_->n)
    fail(ErrorKind::domain_mismatch, "data over the wrong groups");
  return coboundary2_witness(a - b);
}

CohomologyGroup sym_cohomology(int degree, const FinAbGroup& m,
                               const FinAbGroup& n, const Limits& limits) {
  if (degree != 2 && degree != 3)
    fail(ErrorKind::validation_error,
         "cohomology degree must be 2 or 3, got " + std::to_string(degree));
  if (m.order() > kCohomologyMaxBase)
    fail(ErrorKind::size_exceeded,
         "cohomology base group order " + std::to_string(m.order()) +
             " exceeds the limit of " + std::to_string(kCohomologyMaxBase));
  (void)limits;
  auto impl = std::make_shared<CohomologyGroup::Impl>();
  impl->degree = degree;
  impl->m = m;
  impl->n = n;
  impl->entries = free_entry_count(degree, m.order());
  if (impl->entries > kLatticeBudget)
    fail(ErrorKind::size_exceeded,
         "free entry space of size " + std::to_string(impl->entries) +
             " exceeds the lattice budget of " +
             std::to_string(kLatticeBudget));

  if (impl->entries > 0 && n.rank() > 0) {
    const auto cond =
        degree == 2 ? condition_rows2(m) : condition_rows3(m);
    const auto cob = coboundary_entry_rows(degree, m);
    const std::int64_t q = m.order() - 1;
    const std::int64_t src = degree == 2 ? q : q * q;
    for (std::int64_t nk : n.moduli())
      impl->factors.push_back(
          build_factor(cond, cob, impl->entries, src, nk));
  } else {
    for (std::int64_t nk : n.moduli()) {
      CohomologyGroup::Impl::Factor f;
      f.modulus = nk;
      impl->factors.push_back(std::move(f));
    }
  }

  for (const auto& f : impl->factors)
    for (std::size_t j : f.kept) impl->lmoduli.push_back(f.s[j]);
  const std::size_t p = impl->lmoduli.size();
  std::vector<Int> ldiag(impl->lmoduli.begin(), impl->lmoduli.end());
  SmithNormalForm hsnf = smith_normal_form(IntMat::diagonal(ldiag));
  impl->hu = hsnf.u;
  impl->hu_inv = hsnf.u_inv;
  impl->hs_full.resize(p);
  std::vector<std::int64_t> hmod;
  for (std::size_t i = 0; i < p; ++i) {
    impl->hs_full[i] = hsnf.s.at(i, i);
    if (impl->hs_full[i] > 1) {
      impl->hkept.push_back(i);
      hmod.push_back(impl->hs_full[i].convert_to<std::int64_t>());
    }
  }
  impl->h = FinAbGroup(hmod);

  for (std::size_t i = 0; i < impl->h.rank(); ++i) {
    GroupElement unit = impl->h.generator(i);
    if (degree == 2)
      impl->gens2.push_back(
          Cochain2::from_free_coords(m, n, impl->rep_coords(unit)));
    else
      impl->gens3.push_back(
          Cochain3Pair::from_free_coords(m, n, impl->rep_coords(unit)));
  }
  return CohomologyGroup(std::move(impl));
}

namespace {

// Shared core of the least-witness solvers: per value factor, eliminate the
// tall uniform-modulus system down to at most one row per source entry, then
// hand the compact system to the exact congruence solver.
std::optional<std::vector<std::int64_t>> solve_coboundary_system(
    const std::vector<SparseRow>& rows, std::int64_t tgt_entries,
    std::int64_t src_entries, const FinAbGroup& n,
    const std::vector<std::int64_t>& rhs_free) {
  const std::size_t rank = n.rank();
  std::vector<std::int64_t> out(src_entries * rank, 0);
  for (std::size_t k = 0; k < rank; ++k) {
    const std::int64_t nk = n.moduli()[k];
    ModEchelon ech(nk, src_entries, true);
    for (std::int64_t r = 0; r < tgt_entries; ++r)
      ech.insert_sparse(rows[r], rhs_free[r * rank + k]);
    if (ech.unsat()) return std::nullopt;
    const std::size_t rc = ech.rows().size();
    IntMat t(rc, src_entries);
    std::vector<std::int64_t> tmod(rc, nk), rhs(rc);
    for (std::size_t i = 0; i < rc; ++i) {
      for (std::int64_t j = 0; j < src_entries; ++j)
        t.at(i, j) = ech.rows()[i][j];
      rhs[i] = ech.rows()[i][src_entries];
    }
    auto sol = solve_congruences(
        t, tmod, std::vector<std::int64_t>(src_entries, nk), rhs, false);
    if (!sol) return std::nullopt;
    factor_scatter(out, *sol, k, rank);
  }
  return out;
}

}  // namespace

std::optional<Cochain1> coboundary_witness(const Cochain2& target,
                                           const Limits& limits) {
  (void)limits;
  const FinAbGroup& m = target.domain();
  const FinAbGroup& n = target.values();
  if (m.order() > kCohomologyMaxBase)
    fail(ErrorKind::size_exceeded,
         "witness base group order exceeds the limit");
  const std::int64_t q = m.order() - 1;
  auto sol = solve_coboundary_system(coboundary_entry_rows(2, m), q * q, q, n,
                                     target.free_coords());
  if (!sol) return std::nullopt;
  return Cochain1::from_free_coords(m, n, *sol);
}

std::optional<Cochain2> coboundary2_witness(const Cochain3Pair& target,
                                            const Limits& limits) {
  (void)limits;
  const FinAbGroup& m = target.domain();
  const FinAbGroup& n = target.values();
  if (m.order() > kCohomologyMaxBase)
    fail(ErrorKind::size_exceeded,
         "witness base group order exceeds the limit");
  const std::int64_t q = m.order() - 1;
  if (q * q > kLatticeBudget)
    fail(ErrorKind::size_exceeded,
         "witness source space exceeds the lattice budget");
  auto sol = solve_coboundary_system(coboundary_entry_rows(3, m),
                                     q * q * q + q * q, q * q, n,
                                     target.free_coords());
  if (!sol) return std::nullopt;
  return Cochain2::from_free_coords(m, n, *sol);
}

// ---------------------------------------------------------------------------
// Brute-force enumeration.

namespace {

bool index_table_is_2cocycle(const std::vector<std::int64_t>& tab,
                             const AdditionTable& am,
                             const AdditionTable& an) {
  const std::int64_t m = am.order();
  for (std::int64_t u = 1; u < m; ++u)
    for (std::int64_t v = 1; v < m; ++v) {
      if (tab[u * m + v] != tab[v * m + u]) return false;
      for (std::int64_t w = 1; w < m; ++w) {
        std::int64_t lhs =
            an.add(tab[v * m + w], tab[u * m + am.add(v, w)]);
        std::int64_t rhs =
            an.add(tab[u * m + v], tab[am.add(u, v) * m + w]);
        if (lhs != rhs) return false;
      }
    }
  return true;
}

bool index_tables_are_3cocycle(const std::vector<std::int64_t>& xi,
                               const std::vector<std::int64_t>& eta,
                               const AdditionTable& am,
                               const AdditionTable& an) {
  const std::int64_t m = am.order();
  auto x3 = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    return xi[(a * m + b) * m + c];
  };
  for (std::int64_t x = 1; x < m; ++x)
    for (std::int64_t y = 1; y < m; ++y) {
      if (an.add(eta[x * m + y], eta[y * m + x]) != 0) return false;
      for (std::int64_t z = 1; z < m; ++z) {
        std::int64_t lhs = an.add(x3(x, y, z), an.add(x3(y, z, x),
                                                      eta[x * m + am.add(y, z)]));
        std::int64_t rhs = an.add(x3(y, x, z),
                                  an.add(eta[x * m + y], eta[x * m + z]));
        if (lhs != rhs) return false;
        for (std::int64_t w = 1; w < m; ++w) {
          std::int64_t l2 = an.add(x3(y, z, w),
                                   an.add(x3(x, am.add(y, z), w), x3(x, y, z)));
          std::int64_t r2 = an.add(x3(am.add(x, y), z, w),
                                   x3(x, y, am.add(z, w)));
          if (l2 != r2) return false;
        }
      }
    }
  return true;
}

Cochain2 cochain2_from_index_table(const FinAbGroup& mg, const FinAbGroup& ng,
                                   const std::vector<std::int64_t>& tab) {
  const std::int64_t m = mg.order();
  std::vector<std::int64_t> free;
  free.reserve((m - 1) * (m - 1) * ng.rank());
  for (std::int64_t i = 1; i < m; ++i)
    for (std::int64_t j = 1; j < m; ++j) {
      const std::vector<std::int64_t> c = ng.at(tab[i * m + j]).coords();
      free.insert(free.end(), c.begin(), c.end());
    }
  return Cochain2::from_free_coords(mg, ng, free);
}

Cochain3Pair cochain3_from_index_tables(const FinAbGroup& mg,
                                        const FinAbGroup& ng,
                                        const std::vector<std::int64_t>& xi,
                                        const std::vector<std::int64_t>& eta) {
  const std::int64_t m = mg.order();
  std::vector<std::int64_t> free;
  for (std::int64_t i = 1; i < m; ++i)
    for (std::int64_t j = 1; j < m; ++j)
      for (std::int64_t l = 1; l < m; ++l) {
        const std::vector<std::int64_t> c =
            ng.at(xi[(i * m + j) * m + l]).coords();
        free.insert(free.end(), c.begin(), c.end());
      }
  for (std::int64_t i = 1; i < m; ++i)
    for (std::int64_t j = 1; j < m; ++j) {
      const std::vector<std::int64_t> c = ng.at(eta[i * m + j]).coords();
      free.insert(free.end(), c.begin(), c.end());
    }
  return Cochain3Pair::from_free_coords(mg, ng, free);
}

// Sorted unique tables of all coboundaries of 1-cochains.
std::vector<std::vector<std::int64_t>> coboundary_tables2(
    const FinAbGroup& mg, const AdditionTable& am, const AdditionTable& an,
    std::int64_t max_candidates) {
  const std::int64_t m = am.order();
  const std::int64_t nvals = an.order();
  checked_pow(nvals, m - 1, max_candidates, "coboundary enumeration");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> g(m, 0);
  std::vector<std::int64_t> slots(m >= 1 ? m - 1 : 0, 0);
  (void)mg;
  do {
    for (std::int64_t u = 1; u < m; ++u) g[u] = slots[u - 1];
    std::vector<std::int64_t> tab(m * m, 0);
    for (std::int64_t u = 1; u < m; ++u)
      for (std::int64_t v = 1; v < m; ++v)
        tab[u * m + v] =
            an.add(an.add(g[u], g[v]), an.neg(g[am.add(u, v)]));
    out.push_back(std::move(tab));
  } while (next_tuple(slots, nvals));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Sorted unique concatenated (triple table, pair table) coboundaries of
// 2-cochains.
std::vector<std::vector<std::int64_t>> coboundary_tables3(
    const AdditionTable& am, const AdditionTable& an,
    std::int64_t max_candidates) {
  const std::int64_t m = am.order();
  const std::int64_t nvals = an.order();
  const std::int64_t slots_n = (m - 1) * (m - 1);
  checked_pow(nvals, slots_n, max_candidates, "coboundary enumeration");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> slots(slots_n, 0);
  std::vector<std::int64_t> g(m * m, 0);
  do {
    for (std::int64_t u = 1; u < m; ++u)
      for (std::int64_t v = 1; v < m; ++v)
        g[u * m + v] = slots[(u - 1) * (m - 1) + (v - 1)];
    std::vector<std::int64_t> cat(m * m * m + m * m, 0);
    for (std::int64_t x = 1; x < m; ++x)
      for (std::int64_t y = 1; y < m; ++y) {
        for (std::int64_t z = 1; z < m; ++z)
          cat[(x * m + y) * m + z] =
              an.add(an.add(g[y * m + z], an.neg(g[am.add(x, y) * m + z])),
                     an.add(g[x * m + am.add(y, z)], an.neg(g[x * m + y])));
        cat[m * m * m + x * m + y] =
            an.add(g[y * m + x], an.neg(g[x * m + y]));
      }
    out.push_back(std::move(cat));
  } while (next_tuple(slots, nvals));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Partition sorted cocycle tables into classes by sweeping in order and
// translating each fresh representative by every coboundary; also checks
// that translation never leaves the cocycle list.
void partition_classes(const std::vector<std::vector<std::int64_t>>& zs,
                       const std::vector<std::vector<std::int64_t>>& bs,
                       const AdditionTable& an,
                       std::vector<std::size_t>& cls,
                       std::vector<std::size_t>& rep_idx) {
  cls.assign(zs.size(), static_cast<std::size_t>(-1));
  rep_idx.clear();
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (cls[i] != static_cast<std::size_t>(-1)) continue;
    const std::size_t id = rep_idx.size();
    rep_idx.push_back(i);
    for (const auto& b : bs) {
      std::vector<std::int64_t> member(zs[i].size());
      for (std::size_t t = 0; t < member.size(); ++t)
        member[t] = an.add(zs[i][t], b[t]);
      auto it = std::lower_bound(zs.begin(), zs.end(), member);
      if (it == zs.end() || *it != member)
        fail(ErrorKind::internal_error,
             "coboundary translation left the cocycle list");
      const std::size_t j = static_cast<std::size_t>(it - zs.begin());
      if (cls[j] != static_cast<std::size_t>(-1) && cls[j] != id)
        fail(ErrorKind::internal_error, "cocycle classes overlap");
      cls[j] = id;
    }
  }
}

}  // namespace

Oracle2Result oracle_enumerate2(const FinAbGroup& m, const FinAbGroup& n,
                                const Limits& limits) {
  AdditionTable am(m), an(n);
  const std::int64_t mm = m.order();
  const std::int64_t nvals = n.order();
  std::vector<std::vector<std::int64_t>> tables;

  if (m.rank() <= 1) {
    // One generator: a table is determined by its first row, every entry of
    // which is free.
    checked_pow(nvals, mm - 1, limits.max_candidates, "table enumeration");
    std::vector<std::int64_t> slots(mm >= 1 ? mm - 1 : 0, 0);
    do {
      std::vector<std::int64_t> tab(mm * mm, 0);
      for (std::int64_t t = 1; t < mm; ++t) tab[mm + t] = slots[t - 1];
      for (std::int64_t x = 1; x + 1 < mm; ++x) {
        const std::int64_t nx = am.add(x, 1);
        for (std::int64_t t = 1; t < mm; ++t)
          tab[nx * mm + t] =
              an.add(an.add(tab[x * mm + t], tab[mm + am.add(x, t)]),
                     an.neg(tab[mm + x]));
      }
      if (index_table_is_2cocycle(tab, am, an))
        tables.push_back(std::move(tab));
    } while (next_tuple(slots, nvals));
  } else {
    // Symmetric free entries: one slot per unordered pair of nonzero
    // arguments.
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t u = 1; u < mm; ++u)
      for (std::int64_t v = u; v < mm; ++v) pairs.emplace_back(u, v);
    checked_pow(nvals, static_cast<std::int64_t>(pairs.size()),
                limits.max_candidates, "table enumeration");
    std::vector<std::int64_t> slots(pairs.size(), 0);
    do {
      std::vector<std::int64_t> tab(mm * mm, 0);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        tab[pairs[i].first * mm + pairs[i].second] = slots[i];
        tab[pairs[i].second * mm + pairs[i].first] = slots[i];
      }
      if (index_table_is_2cocycle(tab, am, an))
        tables.push_back(std::move(tab));
    } while (next_tuple(slots, nvals));
  }

  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  auto bs = coboundary_tables2(m, am, an, limits.max_candidates);

  std::vector<std::size_t> cls, rep_idx;
  partition_classes(tables, bs, an, cls, rep_idx);

  Oracle2Result out;
  out.cocycles.reserve(tables.size());
  for (const auto& tab : tables)
    out.cocycles.push_back(cochain2_from_index_table(m, n, tab));
  out.cocycle_class = std::move(cls);
  for (std::size_t i : rep_idx)
    out.class_reps.push_back(out.cocycles[i]);
  return out;
}

Oracle3Result oracle_enumerate3(const FinAbGroup& m, const FinAbGroup& n,
                                const Limits& limits) {
  AdditionTable am(m), an(n);
  const std::int64_t mm = m.order();
  const std::int64_t nvals = n.order();
  const std::int64_t q = mm - 1;
  std::vector<std::vector<std::int64_t>> tables;  // xi table ++ eta table
  auto xi_at = [mm](std::vector<std::int64_t>& cat, std::int64_t a,
                    std::int64_t b, std::int64_t c) -> std::int64_t& {
    return cat[(a * mm + b) * mm + c];
  };
  auto eta_at = [mm](std::vector<std::int64_t>& cat, std::int64_t a,
                     std::int64_t b) -> std::int64_t& {
    return cat[mm * mm * mm + a * mm + b];
  };

  if (m.rank() <= 1) {
    // One generator: the triple table is determined by its first slab and
    // the pair table by its first column.
    checked_pow(nvals, q * q + q, limits.max_candidates, "table enumeration");
    std::vector<std::int64_t> slots(q * q + q, 0);
    do {
      std::vector<std::int64_t> cat(mm * mm * mm + mm * mm, 0);
      for (std::int64_t y = 1; y < mm; ++y)
        for (std::int64_t z = 1; z < mm; ++z)
          xi_at(cat, 1, y, z) = slots[(y - 1) * q + (z - 1)];
      for (std::int64_t x = 1; x + 1 < mm; ++x) {
        const std::int64_t nx = am.add(x, 1);
        for (std::int64_t z = 1; z < mm; ++z)
          for (std::int64_t t = 1; t < mm; ++t)
            xi_at(cat, nx, z, t) =
                an.add(an.add(xi_at(cat, x, z, t),
                              xi_at(cat, 1, am.add(x, z), t)),
                       an.add(an.neg(xi_at(cat, 1, x, am.add(z, t))),
                              xi_at(cat, 1, x, z)));
      }
      for (std::int64_t x = 1; x < mm; ++x)
        eta_at(cat, x, 1) = slots[q * q + (x - 1)];
      for (std::int64_t y = 1; y + 1 < mm; ++y) {
        const std::int64_t ny = am.add(y, 1);
        for (std::int64_t x = 1; x < mm; ++x)
          eta_at(cat, x, ny) =
              an.add(an.add(eta_at(cat, x, y), eta_at(cat, x, 1)),
                     an.add(an.neg(xi_at(cat, x, y, 1)),
                            an.add(xi_at(cat, y, x, 1),
                                   an.neg(xi_at(cat, y, 1, x)))));
      }
      std::vector<std::int64_t> xi(cat.begin(), cat.begin() + mm * mm * mm);
      std::vector<std::int64_t> eta(cat.begin() + mm * mm * mm, cat.end());
      if (index_tables_are_3cocycle(xi, eta, am, an))
        tables.push_back(std::move(cat));
    } while (next_tuple(slots, nvals));
  } else {
    checked_pow(nvals, q * q * q + q * q, limits.max_candidates,
                "table enumeration");
    std::vector<std::int64_t> slots(q * q * q + q * q, 0);
    do {
      std::vector<std::int64_t> cat(mm * mm * mm + mm * mm, 0);
      std::size_t pos = 0;
      for (std::int64_t x = 1; x < mm; ++x)
        for (std::int64_t y = 1; y < mm; ++y)
          for (std::int64_t z = 1; z < mm; ++z)
            xi_at(cat, x, y, z) = slots[pos++];
      for (std::int64_t x = 1; x < mm; ++x)
        for (std::int64_t y = 1; y < mm; ++y)
          eta_at(cat, x, y) = slots[pos++];
      std::vector<std::int64_t> xi(cat.begin(), cat.begin() + mm * mm * mm);
      std::vector<std::int64_t> eta(cat.begin() + mm * mm * mm, cat.end());
      if (index_tables_are_3cocycle(xi, eta, am, an))
        tables.push_back(std::move(cat));
    } while (next_tuple(slots, nvals));
  }

  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  auto bs = coboundary_tables3(am, an, limits.max_candidates);

  std::vector<std::size_t> cls, rep_idx;
  partition_classes(tables, bs, an, cls, rep_idx);

  Oracle3Result out;
  out.cocycles.reserve(tables.size());
  for (const auto& cat : tables) {
    std::vector<std::int64_t> xi(cat.begin(), cat.begin() + mm * mm * mm);
    std::vector<std::int64_t> eta(cat.begin() + mm * mm * mm, cat.end());
    out.cocycles.push_back(cochain3_from_index_tables(m, n, xi, eta));
  }
  out.cocycle_class = std::move(cls);
  for (std::size_t i : rep_idx)
    out.class_reps.push_back(out.cocycles[i]);
  return out;
}

}  // namespace abcross
