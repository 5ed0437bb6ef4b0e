#include "abcross/hom.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "abcross/error.hpp"
#include "abcross/matrix.hpp"

namespace abcross {

GroupHom::GroupHom(FinAbGroup src, FinAbGroup tgt,
                   std::vector<std::vector<std::int64_t>> matrix)
    : src_(std::move(src)), tgt_(std::move(tgt)) {
  if (matrix.size() != tgt_.rank())
    fail(ErrorKind::validation_error,
         "hom matrix has " + std::to_string(matrix.size()) + " rows, target rank is " +
             std::to_string(tgt_.rank()));
  mat_.resize(tgt_.rank() * src_.rank());
  for (std::size_t i = 0; i < tgt_.rank(); ++i) {
    if (matrix[i].size() != src_.rank())
      fail(ErrorKind::validation_error,
           "hom matrix row " + std::to_string(i) + " has wrong length");
    std::int64_t m = tgt_.moduli()[i];
    for (std::size_t j = 0; j < src_.rank(); ++j) {
      std::int64_t e = matrix[i][j] % m;
      if (e < 0) e += m;
      mat_[i * src_.rank() + j] = e;
    }
  }
  // A generator of order n must map to an element killed by n.
  for (std::size_t j = 0; j < src_.rank(); ++j) {
    std::int64_t n = src_.moduli()[j];
    for (std::size_t i = 0; i < tgt_.rank(); ++i) {
      std::int64_t m = tgt_.moduli()[i];
      if ((static_cast<__int128>(entry(i, j)) * n) % m != 0)
        fail(ErrorKind::ill_defined_hom,
             "matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                 ") does not kill the generator order " + std::to_string(n));
    }
  }
}

GroupHom GroupHom::identity(const FinAbGroup& g) {
  std::vector<std::vector<std::int64_t>> m(g.rank(),
                                           std::vector<std::int64_t>(g.rank(), 0));
  for (std::size_t i = 0; i < g.rank(); ++i) m[i][i] = 1;
  return GroupHom(g, g, std::move(m));
}

GroupHom GroupHom::zero(const FinAbGroup& src, const FinAbGroup& tgt) {
  return GroupHom(src, tgt,
                  std::vector<std::vector<std::int64_t>>(
                      tgt.rank(), std::vector<std::int64_t>(src.rank(), 0)));
}

std::vector<std::vector<std::int64_t>> GroupHom::matrix() const {
  std::vector<std::vector<std::int64_t>> out(tgt_.rank(),
                                             std::vector<std::int64_t>(src_.rank()));
  for (std::size_t i = 0; i < tgt_.rank(); ++i)
    for (std::size_t j = 0; j < src_.rank(); ++j) out[i][j] = entry(i, j);
  return out;
}

GroupElement GroupHom::apply(const GroupElement& x) const {
  if (x.group() != src_)
    fail(ErrorKind::domain_mismatch, "hom applied outside its source group");
  std::vector<std::int64_t> out(tgt_.rank());
  for (std::size_t i = 0; i < tgt_.rank(); ++i) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < src_.rank(); ++j)
      acc += static_cast<__int128>(entry(i, j)) * x.coords()[j];
    out[i] = static_cast<std::int64_t>(acc % tgt_.moduli()[i]);
  }
  return GroupElement(tgt_, std::move(out));
}

bool GroupHom::is_zero_map() const {
  return std::all_of(mat_.begin(), mat_.end(),
                     [](std::int64_t e) { return e == 0; });
}

std::string GroupHom::to_string() const {
  std::ostringstream os;
  os << src_.to_string() << " -> " << tgt_.to_string() << " via [";
  for (std::size_t i = 0; i < tgt_.rank(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < src_.rank(); ++j)
      os << (j ? "," : "") << entry(i, j);
  }
  os << "]";
  return os.str();
}

bool GroupHom::operator==(const GroupHom& rhs) const {
  return src_ == rhs.src_ && tgt_ == rhs.tgt_ && mat_ == rhs.mat_;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (f.tgt() != g.src())
    fail(ErrorKind::domain_mismatch, "composition of non-composable homs");
  std::vector<std::vector<std::int64_t>> m(
      g.tgt().rank(), std::vector<std::int64_t>(f.src().rank(), 0));
  for (std::size_t i = 0; i < g.tgt().rank(); ++i) {
    std::int64_t mod = g.tgt().moduli()[i];
    for (std::size_t j = 0; j < f.src().rank(); ++j) {
      __int128 acc = 0;
      for (std::size_t k = 0; k < f.tgt().rank(); ++k)
        acc += static_cast<__int128>(g.entry(i, k)) * f.entry(k, j);
      m[i][j] = static_cast<std::int64_t>(acc % mod);
    }
  }
  return GroupHom(f.src(), g.tgt(), std::move(m));
}

namespace {

IntMat hom_int_matrix(const GroupHom& h) {
  IntMat m(h.tgt().rank(), h.src().rank());
  for (std::size_t i = 0; i < h.tgt().rank(); ++i)
    for (std::size_t j = 0; j < h.src().rank(); ++j) m.at(i, j) = h.entry(i, j);
  return m;
}

std::vector<std::int64_t> reduce_mod(const std::vector<Int>& v,
                                     const std::vector<std::int64_t>& moduli) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Int r = v[i] % moduli[i];
    if (r < 0) r += moduli[i];
    out[i] = r.convert_to<std::int64_t>();
  }
  return out;
}

}  // namespace

GroupElement ExactDecomposition::section(const GroupElement& cls,
                                         SectionChoice choice) const {
  if (cls.group() != coker)
    fail(ErrorKind::domain_mismatch, "section argument is not a cokernel class");
  auto x = solve_preimage(coker_proj, cls, choice);
  if (!x)
    fail(ErrorKind::internal_error, "cokernel projection failed to be onto");
  return *x;
}

ExactDecomposition exact_decomposition(const GroupHom& h) {
  const FinAbGroup& a = h.src();
  const FinAbGroup& b = h.tgt();
  const std::size_t ka = a.rank(), kb = b.rank();

  // Everything below works with the integral lattices sitting over the two
  // groups: relations diag(a), diag(b) and the lifted matrix of h.
  IntMat hm = hom_int_matrix(h);
  IntMat mb(kb, ka + kb);
  for (std::size_t i = 0; i < kb; ++i) {
    for (std::size_t j = 0; j < ka; ++j) mb.at(i, j) = hm.at(i, j);
    mb.at(i, ka + i) = b.moduli()[i];
  }
  SmithNormalForm nb = smith_normal_form(mb);

  // Cokernel: quotient of Z^kb by the column lattice of [h | diag(b)].
  std::vector<std::int64_t> coker_moduli;
  std::vector<std::size_t> kept_rows;
  for (std::size_t i = 0; i < kb; ++i)
    if (nb.s.at(i, i) > 1) {
      coker_moduli.push_back(nb.s.at(i, i).convert_to<std::int64_t>());
      kept_rows.push_back(i);
    }
  ExactDecomposition out;
  out.coker = FinAbGroup(coker_moduli);
  {
    std::vector<std::vector<std::int64_t>> proj(kept_rows.size(),
                                                std::vector<std::int64_t>(kb));
    for (std::size_t r = 0; r < kept_rows.size(); ++r)
      for (std::size_t j = 0; j < kb; ++j) {
        Int e = nb.u.at(kept_rows[r], j) % coker_moduli[r];
        if (e < 0) e += coker_moduli[r];
        proj[r][j] = e.convert_to<std::int64_t>();
      }
    out.coker_proj = GroupHom(b, out.coker, std::move(proj));
  }

  // Lattice of x in Z^ka with h(x) = 0 in B: project the kernel of
  // [h | diag(b)] to the first ka coordinates, then force diag(a) in.
  const std::size_t nker = ka + kb - nb.rank;
  IntMat lker(ka, nker + ka);
  for (std::size_t j = 0; j < nker; ++j)
    for (std::size_t i = 0; i < ka; ++i)
      lker.at(i, j) = nb.v.at(i, nb.rank + j);
  for (std::size_t i = 0; i < ka; ++i) lker.at(i, nker + i) = a.moduli()[i];
  IntMat uk = column_hermite_basis(lker);

  // Image: Z^ka modulo that lattice, pushed into B along h.
  SmithNormalForm ni = smith_normal_form(uk);
  std::vector<std::int64_t> img_moduli;
  std::vector<std::size_t> img_rows;
  for (std::size_t i = 0; i < ka; ++i)
    if (ni.s.at(i, i) > 1) {
      img_moduli.push_back(ni.s.at(i, i).convert_to<std::int64_t>());
      img_rows.push_back(i);
    }
  out.img = FinAbGroup(img_moduli);
  {
    std::vector<std::vector<std::int64_t>> incl(
        kb, std::vector<std::int64_t>(img_rows.size()));
    for (std::size_t c = 0; c < img_rows.size(); ++c) {
      std::vector<Int> gen = ni.u_inv.column_vector(img_rows[c]);
      std::vector<std::int64_t> im = reduce_mod(hm.apply(gen), b.moduli());
      for (std::size_t i = 0; i < kb; ++i) incl[i][c] = im[i];
    }
    out.img_incl = GroupHom(out.img, b, std::move(incl));
  }

  // Kernel subgroup of A: the same lattice modulo diag(a).
  IntMat c(ka, ka);
  for (std::size_t j = 0; j < ka; ++j) {
    std::vector<Int> rhs(ka);
    rhs[j] = a.moduli()[j];
    auto col = solve_lower_triangular(uk, rhs);
    if (!col)
      fail(ErrorKind::internal_error, "relation lattice escaped the kernel lattice");
    for (std::size_t i = 0; i < ka; ++i) c.at(i, j) = (*col)[i];
  }
  SmithNormalForm nk = smith_normal_form(c);
  std::vector<std::int64_t> ker_moduli;
  std::vector<std::size_t> ker_rows;
  for (std::size_t i = 0; i < ka; ++i)
    if (nk.s.at(i, i) > 1) {
      ker_moduli.push_back(nk.s.at(i, i).convert_to<std::int64_t>());
      ker_rows.push_back(i);
    }
  out.ker = FinAbGroup(ker_moduli);
  {
    std::vector<std::vector<std::int64_t>> incl(
        ka, std::vector<std::int64_t>(ker_rows.size()));
    for (std::size_t col_i = 0; col_i < ker_rows.size(); ++col_i) {
      std::vector<Int> y = nk.u_inv.column_vector(ker_rows[col_i]);
      std::vector<std::int64_t> x = reduce_mod(uk.apply(y), a.moduli());
      for (std::size_t i = 0; i < ka; ++i) incl[i][col_i] = x[i];
    }
    out.ker_incl = GroupHom(out.ker, a, std::move(incl));
  }
  return out;
}

std::optional<GroupElement> solve_preimage(const GroupHom& h,
                                           const GroupElement& y,
                                           SectionChoice choice) {
  if (y.group() != h.tgt())
    fail(ErrorKind::domain_mismatch, "preimage target is not in the hom's target");
  auto x = solve_congruences(
      hom_int_matrix(h), h.tgt().moduli(), h.src().moduli(), y.coords(),
      choice == SectionChoice::greatest_representative);
  if (!x) return std::nullopt;
  return h.src().element(std::move(*x));
}

}  // namespace abcross
