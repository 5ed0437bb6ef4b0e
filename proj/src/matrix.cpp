#include "abcross/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "abcross/error.hpp"

namespace abcross {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::diagonal(const std::vector<Int>& entries) {
  IntMat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

IntMat IntMat::from_rows(
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) fail(ErrorKind::internal_error, "ragged row list");
    std::size_t j = 0;
    for (std::int64_t v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  if (cols_ != rhs.rows_)
    fail(ErrorKind::internal_error, "matrix product shape mismatch");
  IntMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& f = at(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += f * rhs.at(k, j);
    }
  return out;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& x) const {
  if (x.size() != cols_)
    fail(ErrorKind::internal_error, "matrix apply shape mismatch");
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * x[j];
  return out;
}

std::vector<Int> IntMat::column_vector(std::size_t j) const {
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

bool IntMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v == 0; });
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

IntMat hstack(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows())
    fail(ErrorKind::internal_error, "hstack row mismatch");
  IntMat out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

std::vector<Int> SmithNormalForm::diagonal() const {
  std::vector<Int> d;
  std::size_t n = std::min(s.rows(), s.cols());
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d.push_back(s.at(i, i));
  return d;
}

Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += (m < 0 ? -m : m);
  return r;
}

namespace {

// g = x*a + y*b with g >= 0.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_x = 1, cx = 0;
  Int old_y = 0, cy = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * cx;
    old_x = cx;
    cx = tmp;
    tmp = old_y - q * cy;
    old_y = cy;
    cy = tmp;
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

Int div_floor(const Int& a, const Int& m) { return (a - mod_floor(a, m)) / m; }

// Elimination state for the Smith form; row operations mirror into u and
// (inverted) into u_inv, column operations into v.
struct SmithWork {
  IntMat& s;
  IntMat& u;
  IntMat& ui;
  IntMat& v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < s.cols(); ++c) std::swap(s.at(i, c), s.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    for (std::size_t r = 0; r < ui.rows(); ++r)
      std::swap(ui.at(r, i), ui.at(r, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < s.rows(); ++r) std::swap(s.at(r, i), s.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < s.cols(); ++c) s.at(i, c) = -s.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    for (std::size_t r = 0; r < ui.rows(); ++r) ui.at(r, i) = -ui.at(r, i);
  }

  // row_dst += k * row_src
  void row_addmul(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < s.cols(); ++c) s.at(dst, c) += k * s.at(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(dst, c) += k * u.at(src, c);
    for (std::size_t r = 0; r < ui.rows(); ++r)
      ui.at(r, src) -= k * ui.at(r, dst);
  }

  // Replace rows (t, i) by ((x t + y i), (-b/g t + a/g i)) where
  // a = s(t,t), b = s(i,t), g = gcd; leaves s(t,t) = g, s(i,t) = 0.
  void bezout_rows(std::size_t t, std::size_t i) {
    Int a = s.at(t, t), b = s.at(i, t), x, y;
    Int g = ext_gcd(a, b, x, y);
    Int alpha = a / g, beta = b / g;
    auto combine = [&](IntMat& m, bool rows_mode) {
      if (rows_mode) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          Int mt = m.at(t, c), mi = m.at(i, c);
          m.at(t, c) = x * mt + y * mi;
          m.at(i, c) = -beta * mt + alpha * mi;
        }
      } else {
        for (std::size_t r = 0; r < m.rows(); ++r) {
          Int mt = m.at(r, t), mi = m.at(r, i);
          m.at(r, t) = alpha * mt + beta * mi;
          m.at(r, i) = -y * mt + x * mi;
        }
      }
    };
    combine(s, true);
    combine(u, true);
    combine(ui, false);
  }

  // col_dst += k * col_src
  void col_addmul(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < s.rows(); ++r) s.at(r, dst) += k * s.at(r, src);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, dst) += k * v.at(r, src);
  }

  void bezout_cols(std::size_t t, std::size_t j) {
    Int a = s.at(t, t), b = s.at(t, j), x, y;
    Int g = ext_gcd(a, b, x, y);
    Int alpha = a / g, beta = b / g;
    auto combine = [&](IntMat& m) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Int mt = m.at(r, t), mj = m.at(r, j);
        m.at(r, t) = x * mt + y * mj;
        m.at(r, j) = -beta * mt + alpha * mj;
      }
    };
    combine(s);
    combine(v);
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMat& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  SmithNormalForm out;
  out.s = a;
  out.u = IntMat::identity(rows);
  out.u_inv = IntMat::identity(rows);
  out.v = IntMat::identity(cols);
  SmithWork w{out.s, out.u, out.u_inv, out.v};
  IntMat& s = out.s;

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing submatrix becomes the pivot;
      // keeps growth down and makes the elimination order deterministic.
      std::size_t bi = rows, bj = cols;
      Int best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const Int& e = s.at(i, j);
          if (e == 0) continue;
          Int mag = e < 0 ? Int(-e) : e;
          if (bi == rows || mag < best) {
            best = mag;
            bi = i;
            bj = j;
          }
        }
      if (bi == rows) {
        t = steps;  // trailing block is zero
        break;
      }
      w.swap_rows(t, bi);
      w.swap_cols(t, bj);

      for (std::size_t i = t + 1; i < rows; ++i) {
        const Int& b = s.at(i, t);
        if (b == 0) continue;
        if (b % s.at(t, t) == 0)
          w.row_addmul(i, t, -(b / s.at(t, t)));
        else
          w.bezout_rows(t, i);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Int& b = s.at(t, j);
        if (b == 0) continue;
        if (b % s.at(t, t) == 0)
          w.col_addmul(j, t, -(b / s.at(t, t)));
        else
          w.bezout_cols(t, j);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        if (s.at(i, t) != 0) clean = false;
      for (std::size_t j = t + 1; j < cols && clean; ++j)
        if (s.at(t, j) != 0) clean = false;
      if (!clean) continue;

      // Pivot must divide the whole trailing block for the divisibility
      // chain; folding an offending row in strictly shrinks the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            w.row_addmul(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (t >= steps) break;
  }
  for (std::size_t t = 0; t < steps; ++t)
    if (s.at(t, t) < 0) w.negate_row(t);
  out.rank = 0;
  for (std::size_t t = 0; t < steps; ++t)
    if (s.at(t, t) != 0) ++out.rank;
  return out;
}

IntMat column_hermite_basis(const IntMat& gens) {
  const std::size_t n = gens.rows();
  IntMat w = gens;

  auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < n; ++r) w.at(r, dst) += k * w.at(r, src);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < n; ++r) std::swap(w.at(r, i), w.at(r, j));
  };

  for (std::size_t r = 0; r < n; ++r) {
    std::size_t piv = w.cols();
    for (std::size_t j = r; j < w.cols(); ++j)
      if (w.at(r, j) != 0) {
        piv = j;
        break;
      }
    if (piv == w.cols())
      fail(ErrorKind::internal_error, "column lattice is not full rank");
    swap_cols(r, piv);
    for (std::size_t j = r + 1; j < w.cols(); ++j) {
      if (w.at(r, j) == 0) continue;
      const Int &a = w.at(r, r), &b = w.at(r, j);
      if (b % a == 0) {
        col_addmul(j, r, -(b / a));
      } else {
        Int x, y;
        Int g = ext_gcd(a, b, x, y);
        Int alpha = a / g, beta = b / g;
        for (std::size_t rr = 0; rr < n; ++rr) {
          Int mr = w.at(rr, r), mj = w.at(rr, j);
          w.at(rr, r) = x * mr + y * mj;
          w.at(rr, j) = -beta * mr + alpha * mj;
        }
      }
    }
    if (w.at(r, r) < 0)
      for (std::size_t rr = 0; rr < n; ++rr) w.at(rr, r) = -w.at(rr, r);
    for (std::size_t j = 0; j < r; ++j)
      col_addmul(j, r, -div_floor(w.at(r, j), w.at(r, r)));
  }

  IntMat basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis.at(i, j) = w.at(i, j);
  return basis;
}

std::optional<std::vector<Int>> solve_lower_triangular(
    const IntMat& l, const std::vector<Int>& b) {
  const std::size_t n = l.rows();
  if (l.cols() != n || b.size() != n)
    fail(ErrorKind::internal_error, "triangular solve shape mismatch");
  std::vector<Int> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int acc = b[i];
    for (std::size_t j = 0; j < i; ++j) acc -= l.at(i, j) * x[j];
    if (acc % l.at(i, i) != 0) return std::nullopt;
    x[i] = acc / l.at(i, i);
  }
  return x;
}

Int determinant(IntMat a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) fail(ErrorKind::internal_error, "determinant of non-square");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::vector<std::int64_t> lex_min_in_coset(std::vector<Int> x,
                                           const IntMat& gens,
                                           const std::vector<std::int64_t>& c) {
  const std::size_t n = c.size();
  const std::size_t active = gens.cols();
  // The lattice contains c[r]*e_r for every r, so each row of the working
  // basis stays reduced modulo its coordinate modulus. This caps every entry
  // at the largest modulus no matter how large the incoming basis is; without
  // it the Bezout column sweeps compound entries into the thousands of words.
  IntMat w(n, active);
  for (std::size_t i = 0; i < n; ++i) {
    const Int ci(c[i]);
    for (std::size_t j = 0; j < active; ++j)
      w.at(i, j) = mod_floor(gens.at(i, j), ci);
    x[i] = mod_floor(x[i], ci);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Int ci(c[i]);
    // Fold every column with a nonzero row-i entry into one pivot column.
    std::size_t piv = active;
    for (std::size_t j = 0; j < active; ++j) {
      if (w.at(i, j) == 0) continue;
      if (piv == active) {
        piv = j;
        continue;
      }
      const Int a = w.at(i, piv), b = w.at(i, j);
      if (b % a == 0) {
        Int k = -(b / a);
        for (std::size_t r = 0; r < n; ++r)
          w.at(r, j) = mod_floor(w.at(r, j) + k * w.at(r, piv), Int(c[r]));
      } else {
        Int x1, y1;
        Int g = ext_gcd(a, b, x1, y1);
        Int alpha = a / g, beta = b / g;
        for (std::size_t r = 0; r < n; ++r) {
          Int mp = w.at(r, piv), mj = w.at(r, j);
          w.at(r, piv) = mod_floor(x1 * mp + y1 * mj, Int(c[r]));
          w.at(r, j) = mod_floor(alpha * mj - beta * mp, Int(c[r]));
        }
      }
    }
    // The diagonal block contributes a step of c[i] at this row, so the
    // reachable set of x[i] values is the subgroup generated by the pivot
    // and c[i]; drop x[i] to its least residue.
    const Int p = piv == active ? ci : w.at(i, piv);
    Int s1, s2;
    const Int g = ext_gcd(p, ci, s1, s2);
    const Int residue = g == 0 ? Int(0) : mod_floor(x[i], g);
    const Int k = g == 0 ? Int(0) : Int((x[i] - residue) / g);
    if (k != 0 && piv != active) {
      const Int step = k * s1;
      for (std::size_t r = 0; r < n; ++r)
        x[r] = mod_floor(x[r] - step * w.at(r, piv), Int(c[r]));
    }
    x[i] = residue;
    // Keep the pivot column usable for later rows: only multiples that leave
    // this coordinate unchanged mod c[i] remain legal.
    if (piv != active) {
      const Int scale = ci / g;
      if (scale != 1)
        for (std::size_t r = 0; r < n; ++r)
          w.at(r, piv) = mod_floor(w.at(r, piv) * scale, Int(c[r]));
    }
  }

  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = mod_floor(x[i], Int(c[i])).convert_to<std::int64_t>();
  return out;
}

std::optional<std::vector<std::int64_t>> solve_congruences(
    const IntMat& t_matrix, const std::vector<std::int64_t>& t_moduli,
    const std::vector<std::int64_t>& x_moduli,
    const std::vector<std::int64_t>& rhs, bool greatest) {
  const std::size_t nvars = x_moduli.size();
  const std::size_t nrows = t_moduli.size();
  if (t_matrix.rows() != nrows || t_matrix.cols() != nvars ||
      rhs.size() != nrows)
    fail(ErrorKind::internal_error, "congruence system shape mismatch");

  if (greatest) {
    // Greatest representative via the coordinate flip x -> (c - 1) - x.
    std::vector<std::int64_t> flipped_rhs(nrows);
    for (std::size_t i = 0; i < nrows; ++i) {
      Int acc = -Int(rhs[i]);
      for (std::size_t j = 0; j < nvars; ++j)
        acc += t_matrix.at(i, j) * Int(x_moduli[j] - 1);
      flipped_rhs[i] = mod_floor(acc, Int(t_moduli[i])).convert_to<std::int64_t>();
    }
    auto flipped = solve_congruences(t_matrix, t_moduli, x_moduli, flipped_rhs,
                                     false);
    if (!flipped) return std::nullopt;
    std::vector<std::int64_t> out(nvars);
    for (std::size_t j = 0; j < nvars; ++j)
      out[j] = x_moduli[j] - 1 - (*flipped)[j];
    return out;
  }

  for (std::size_t j = 0; j < nvars; ++j)
    for (std::size_t i = 0; i < nrows; ++i)
      if ((t_matrix.at(i, j) * x_moduli[j]) % t_moduli[i] != 0)
        fail(ErrorKind::internal_error,
             "congruence system does not descend to the quotient");

  IntMat a(nrows, nvars + nrows);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < nvars; ++j) a.at(i, j) = t_matrix.at(i, j);
    a.at(i, nvars + i) = t_moduli[i];
  }
  SmithNormalForm snf = smith_normal_form(a);

  std::vector<Int> rhs_int(nrows);
  for (std::size_t i = 0; i < nrows; ++i) rhs_int[i] = rhs[i];
  std::vector<Int> w = snf.u.apply(rhs_int);
  std::vector<Int> y(nvars + nrows);
  for (std::size_t i = 0; i < nrows; ++i) {
    if (i < snf.rank) {
      if (w[i] % snf.s.at(i, i) != 0) return std::nullopt;
      y[i] = w[i] / snf.s.at(i, i);
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Int> z0 = snf.v.apply(y);
  std::vector<Int> x0(z0.begin(), z0.begin() + nvars);

  std::size_t kernel_cols = nvars + nrows - snf.rank;
  IntMat gens(nvars, kernel_cols);
  for (std::size_t j = 0; j < kernel_cols; ++j)
    for (std::size_t i = 0; i < nvars; ++i)
      gens.at(i, j) = snf.v.at(i, snf.rank + j);

  return lex_min_in_coset(std::move(x0), gens, x_moduli);
}

}  // namespace abcross
