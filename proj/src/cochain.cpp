#include "abcross/cochain.hpp"

#include <algorithm>

#include "abcross/error.hpp"
#include "abcross/limits.hpp"

namespace abcross {

namespace {

void check_table_budget(const FinAbGroup& m, int degree,
                        const FinAbGroup& n) {
  const std::int64_t budget = Limits{}.max_table_cells;
  std::int64_t cells = std::max<std::size_t>(n.rank(), 1);
  for (int i = 0; i < degree; ++i) {
    if (m.order() != 0 && cells > budget / std::max<std::int64_t>(m.order(), 1))
      fail(ErrorKind::size_exceeded, "cochain table over " + m.to_string() +
                                         " would exceed the cell budget");
    cells *= m.order();
  }
}

// Componentwise mod-n_i arithmetic on coordinate blocks.
void block_add(std::int64_t* dst, const std::int64_t* src,
               const std::vector<std::int64_t>& moduli) {
  for (std::size_t i = 0; i < moduli.size(); ++i)
    dst[i] = (dst[i] + src[i]) % moduli[i];
}

void block_sub(std::int64_t* dst, const std::int64_t* src,
               const std::vector<std::int64_t>& moduli) {
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    dst[i] -= src[i];
    if (dst[i] < 0) dst[i] += moduli[i];
  }
}

}  // namespace

AdditionTable::AdditionTable(const FinAbGroup& g) : n_(g.order()) {
  if (n_ > Limits{}.max_enumeration_order)
    fail(ErrorKind::size_exceeded,
         "addition table over a group of order " + std::to_string(n_));
  add_.resize(n_ * n_);
  neg_.resize(n_);
  for (std::int64_t i = 0; i < n_; ++i) {
    GroupElement a = g.at(i);
    neg_[i] = g.index_of(-a);
    for (std::int64_t j = 0; j < n_; ++j)
      add_[i * n_ + j] = g.index_of(a + g.at(j));
  }
}

Cochain1::Cochain1(FinAbGroup m, FinAbGroup n)
    : m_(std::move(m)), n_(std::move(n)) {
  check_table_budget(m_, 1, n_);
  tab_.assign(m_.order() * n_.rank(), 0);
}

GroupElement Cochain1::at(const GroupElement& u) const {
  if (u.group() != m_)
    fail(ErrorKind::domain_mismatch, "cochain argument outside its domain");
  std::int64_t i = m_.index_of(u);
  return n_.element(std::vector<std::int64_t>(
      tab_.begin() + i * n_.rank(), tab_.begin() + (i + 1) * n_.rank()));
}

void Cochain1::set(const GroupElement& u, const GroupElement& value) {
  if (u.group() != m_ || value.group() != n_)
    fail(ErrorKind::domain_mismatch, "cochain entry outside its groups");
  if (u.is_zero() && !value.is_zero())
    fail(ErrorKind::validation_error,
         "normalized cochain requires a zero value at the zero argument");
  std::int64_t i = m_.index_of(u);
  std::copy(value.coords().begin(), value.coords().end(),
            tab_.begin() + i * n_.rank());
}

bool Cochain1::is_zero() const {
  return std::all_of(tab_.begin(), tab_.end(),
                     [](std::int64_t v) { return v == 0; });
}

Cochain1 Cochain1::operator+(const Cochain1& rhs) const {
  if (m_ != rhs.m_ || n_ != rhs.n_)
    fail(ErrorKind::domain_mismatch, "cochain sum across different groups");
  Cochain1 out = *this;
  for (std::int64_t i = 0; i < m_.order(); ++i)
    block_add(out.tab_.data() + i * n_.rank(), rhs.tab_.data() + i * n_.rank(),
              n_.moduli());
  return out;
}

Cochain1 Cochain1::operator-(const Cochain1& rhs) const {
  if (m_ != rhs.m_ || n_ != rhs.n_)
    fail(ErrorKind::domain_mismatch, "cochain difference across different groups");
  Cochain1 out = *this;
  for (std::int64_t i = 0; i < m_.order(); ++i)
    block_sub(out.tab_.data() + i * n_.rank(), rhs.tab_.data() + i * n_.rank(),
              n_.moduli());
  return out;
}

bool Cochain1::operator==(const Cochain1& rhs) const {
  return m_ == rhs.m_ && n_ == rhs.n_ && tab_ == rhs.tab_;
}

std::vector<std::int64_t> Cochain1::free_coords() const {
  std::vector<std::int64_t> out;
  out.reserve((m_.order() - 1) * n_.rank());
  for (std::int64_t i = 1; i < m_.order(); ++i)
    for (std::size_t k = 0; k < n_.rank(); ++k)
      out.push_back(tab_[i * n_.rank() + k]);
  return out;
}

Cochain1 Cochain1::from_free_coords(const FinAbGroup& m, const FinAbGroup& n,
                                    const std::vector<std::int64_t>& coords) {
  Cochain1 out(m, n);
  if (coords.size() != static_cast<std::size_t>((m.order() - 1) * n.rank()))
    fail(ErrorKind::validation_error, "free coordinate count mismatch");
  for (std::int64_t i = 1; i < m.order(); ++i)
    for (std::size_t k = 0; k < n.rank(); ++k) {
      std::int64_t v = coords[(i - 1) * n.rank() + k] % n.moduli()[k];
      if (v < 0) v += n.moduli()[k];
      out.tab_[i * n.rank() + k] = v;
    }
  return out;
}

Cochain2::Cochain2(FinAbGroup m, FinAbGroup n)
    : m_(std::move(m)), n_(std::move(n)) {
  check_table_budget(m_, 2, n_);
  tab_.assign(m_.order() * m_.order() * n_.rank(), 0);
}

GroupElement Cochain2::at(const GroupElement& u, const GroupElement& v) const {
  if (u.group() != m_ || v.group() != m_)
    fail(ErrorKind::domain_mismatch, "cochain argument outside its domain");
  std::int64_t i = m_.index_of(u) * m_.order() + m_.index_of(v);
  return n_.element(std::vector<std::int64_t>(
      tab_.begin() + i * n_.rank(), tab_.begin() + (i + 1) * n_.rank()));
}

void Cochain2::set(const GroupElement& u, const GroupElement& v,
                   const GroupElement& value) {
  if (u.group() != m_ || v.group() != m_ || value.group() != n_)
    fail(ErrorKind::domain_mismatch, "cochain entry outside its groups");
  if ((u.is_zero() || v.is_zero()) && !value.is_zero())
    fail(ErrorKind::validation_error,
         "normalized cochain requires zero values at zero arguments");
  std::int64_t i = m_.index_of(u) * m_.order() + m_.index_of(v);
  std::copy(value.coords().begin(), value.coords().end(),
            tab_.begin() + i * n_.rank());
}

bool Cochain2::is_zero() const {
  return std::all_of(tab_.begin(), tab_.end(),
                     [](std::int64_t v) { return v == 0; });
}

bool Cochain2::is_symmetric() const {
  const std::int64_t m = m_.order();
  const std::size_t r = n_.rank();
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (tab_[(i * m + j) * r + k] != tab_[(j * m + i) * r + k])
          return false;
  return true;
}

Cochain2 Cochain2::operator+(const Cochain2& rhs) const {
  if (m_ != rhs.m_ || n_ != rhs.n_)
    fail(ErrorKind::domain_mismatch, "cochain sum across different groups");
  Cochain2 out = *this;
  std::int64_t cells = m_.order() * m_.order();
  for (std::int64_t i = 0; i < cells; ++i)
    block_add(out.tab_.data() + i * n_.rank(), rhs.tab_.data() + i * n_.rank(),
              n_.moduli());
  return out;
}

Cochain2 Cochain2::operator-(const Cochain2& rhs) const {
  if (m_ != rhs.m_ || n_ != rhs.n_)
    fail(ErrorKind::domain_mismatch, "cochain difference across different groups");
  Cochain2 out = *this;
  std::int64_t cells = m_.order() * m_.order();
  for (std::int64_t i = 0; i < cells; ++i)
    block_sub(out.tab_.data() + i * n_.rank(), rhs.tab_.data() + i * n_.rank(),
              n_.moduli());
  return out;
}

bool Cochain2::operator==(const Cochain2& rhs) const {
  return m_ == rhs.m_ && n_ == rhs.n_ && tab_ == rhs.tab_;
}

std::vector<std::int64_t> Cochain2::free_coords() const {
  const std::int64_t m = m_.order();
  const std::size_t r = n_.rank();
  std::vector<std::int64_t> out;
  out.reserve((m - 1) * (m - 1) * r);
  for (std::int64_t i = 1; i < m; ++i)
    for (std::int64_t j = 1; j < m; ++j)
      for (std::size_t k = 0; k < r; ++k)
        out.push_back(tab_[(i * m + j) * r + k]);
  return out;
}

Cochain2 Cochain2::from_free_coords(const FinAbGroup& m, const FinAbGroup& n,
                                    const std::vector<std::int64_t>& coords) {
  Cochain2 out(m, n);
  const std::int64_t mm = m.order();
  const std::size_t r = n.rank();
  if (coords.size() != static_cast<std::size_t>((mm - 1) * (mm - 1)) * r)
    fail(ErrorKind::validation_error, "free coordinate count mismatch");
  std::size_t pos = 0;
  for (std::int64_t i = 1; i < mm; ++i)
    for (std::int64_t j = 1; j < mm; ++j)
      for (std::size_t k = 0; k < r; ++k, ++pos) {
        std::int64_t v = coords[pos] % n.moduli()[k];
        if (v < 0) v += n.moduli()[k];
        out.tab_[(i * mm + j) * r + k] = v;
      }
  return out;
}

Cochain3Pair::Cochain3Pair(FinAbGroup m, FinAbGroup n)
    : m_(std::move(m)), n_(std::move(n)) {
  check_table_budget(m_, 3, n_);
  xi_.assign(m_.order() * m_.order() * m_.order() * n_.rank(), 0);
  eta_.assign(m_.order() * m_.order() * n_.rank(), 0);
}

GroupElement Cochain3Pair::xi(const GroupElement& x, const GroupElement& y,
                              const GroupElement& z) const {
  if (x.group() != m_ || y.group() != m_ || z.group() != m_)
    fail(ErrorKind::domain_mismatch, "cochain argument outside its domain");
  std::int64_t i =
      (m_.index_of(x) * m_.order() + m_.index_of(y)) * m_.order() +
      m_.index_of(z);
  return n_.element(std::vector<std::int64_t>(
      xi_.begin() + i * n_.rank(), xi_.begin() + (i + 1) * n_.rank()));
}

GroupElement Cochain3Pair::eta(const GroupElement& x,
                               const GroupElement& y) const {
  if (x.group() != m_ || y.group() != m_)
    fail(ErrorKind::domain_mismatch, "cochain argument outside its domain");
  std::int64_t i = m_.index_of(x) * m_.order() + m_.index_of(y);
  return n_.element(std::vector<std::int64_t>(
      eta_.begin() + i * n_.rank(), eta_.begin() + (i + 1) * n_.rank()));
}

void Cochain3Pair::set_xi(const GroupElement& x, const GroupElement& y,
                          const GroupElement& z, const GroupElement& value) {
  if (x.group() != m_ || y.group() != m_ || z.group() != m_ ||
      value.group() != n_)
    fail(ErrorKind::domain_mismatch, "cochain entry outside its groups");
  if ((x.is_zero() || y.is_zero() || z.is_zero()) && !value.is_zero())
    fail(ErrorKind::validation_error,
         "normalized cochain requires zero values at zero arguments");
  std::int64_t i =
      (m_.index_of(x) * m_.order() + m_.index_of(y)) * m_.order() +
      m_.index_of(z);
  std::copy(value.coords().begin(), value.coords().end(),
            xi_.begin() + i * n_.rank());
}

void Cochain3Pair::set_eta(const GroupElement& x, const GroupElement& y,
                           const GroupElement& value) {
  if (x.group() != m_ || y.group() != m_ || value.group() != n_)
    fail(ErrorKind::domain_mismatch, "cochain entry outside its groups");
  if ((x.is_zero() || y.is_zero()) && !value.is_zero())
    fail(ErrorKind::validation_error,
         "normalized cochain requires zero values at zero arguments");
  std::int64_t i = m_.index_of(x) * m_.order() + m_.index_of(y);
  std::copy(value.coords().begin(), value.coords().end(),
            eta_.begin() + i * n_.rank());
}

bool Cochain3Pair::is_zero() const {
  auto z = [](std::int64_t v) { return v == 0; };
  return std::all_of(xi_.begin(), xi_.end(), z) &&
         std::all_of(eta_.begin(), eta_.end(), z);
}

Cochain3Pair Cochain3Pair::operator+(const Cochain3Pair& rhs) const {
  if (m_ != rhs.m_ || n_ != rhs.n_)
    fail(ErrorKind::domain_mismatch, "cochain sum across different groups");
  Cochain3Pair out = *this;
  std::int64_t m = m_.order();
  for (std::int64_t i = 0; i < m * m * m; ++i)
    block_add(out.xi_.data() + i * n_.rank(), rhs.xi_.data() + i * n_.rank(),
              n_.moduli());
  for (std::int64_t i = 0; i < m * m; ++i)
    block_add(out.eta_.data() + i * n_.rank(), rhs.eta_.data() + i * n_.rank(),
              n_.moduli());
  return out;
}

Cochain3Pair Cochain3Pair::operator-(const Cochain3Pair& rhs) const {
  if (m_ != rhs.m_ || n_ != rhs.n_)
    fail(ErrorKind::domain_mismatch, "cochain difference across different groups");
  Cochain3Pair out = *this;
  std::int64_t m = m_.order();
  for (std::int64_t i = 0; i < m * m * m; ++i)
    block_sub(out.xi_.data() + i * n_.rank(), rhs.xi_.data() + i * n_.rank(),
              n_.moduli());
  for (std::int64_t i = 0; i < m * m; ++i)
    block_sub(out.eta_.data() + i * n_.rank(), rhs.eta_.data() + i * n_.rank(),
              n_.moduli());
  return out;
}

bool Cochain3Pair::operator==(const Cochain3Pair& rhs) const {
  return m_ == rhs.m_ && n_ == rhs.n_ && xi_ == rhs.xi_ && eta_ == rhs.eta_;
}

std::vector<std::int64_t> Cochain3Pair::free_coords() const {
  const std::int64_t m = m_.order();
  const std::size_t r = n_.rank();
  std::vector<std::int64_t> out;
  out.reserve(((m - 1) * (m - 1) * (m - 1) + (m - 1) * (m - 1)) * r);
  for (std::int64_t i = 1; i < m; ++i)
    for (std::int64_t j = 1; j < m; ++j)
      for (std::int64_t l = 1; l < m; ++l)
        for (std::size_t k = 0; k < r; ++k)
          out.push_back(xi_[((i * m + j) * m + l) * r + k]);
  for (std::int64_t i = 1; i < m; ++i)
    for (std::int64_t j = 1; j < m; ++j)
      for (std::size_t k = 0; k < r; ++k)
        out.push_back(eta_[(i * m + j) * r + k]);
  return out;
}

Cochain3Pair Cochain3Pair::from_free_coords(
    const FinAbGroup& m, const FinAbGroup& n,
    const std::vector<std::int64_t>& coords) {
  Cochain3Pair out(m, n);
  const std::int64_t mm = m.order();
  const std::size_t r = n.rank();
  std::size_t want =
      static_cast<std::size_t>((mm - 1) * (mm - 1) * (mm - 1) +
                               (mm - 1) * (mm - 1)) *
      r;
  if (coords.size() != want)
    fail(ErrorKind::validation_error, "free coordinate count mismatch");
  std::size_t pos = 0;
  for (std::int64_t i = 1; i < mm; ++i)
    for (std::int64_t j = 1; j < mm; ++j)
      for (std::int64_t l = 1; l < mm; ++l)
        for (std::size_t k = 0; k < r; ++k, ++pos) {
          std::int64_t v = coords[pos] % n.moduli()[k];
          if (v < 0) v += n.moduli()[k];
          out.xi_[((i * mm + j) * mm + l) * r + k] = v;
        }
  for (std::int64_t i = 1; i < mm; ++i)
    for (std::int64_t j = 1; j < mm; ++j)
      for (std::size_t k = 0; k < r; ++k, ++pos) {
        std::int64_t v = coords[pos] % n.moduli()[k];
        if (v < 0) v += n.moduli()[k];
        out.eta_[(i * mm + j) * r + k] = v;
      }
  return out;
}

namespace {

std::vector<GroupElement> witness_args(const FinAbGroup& m,
                                       std::initializer_list<std::int64_t> idx) {
  std::vector<GroupElement> out;
  for (std::int64_t i : idx) out.push_back(m.at(i));
  return out;
}

}  // namespace

std::optional<CocycleViolation> check_sym_2cocycle(const Cochain2& f) {
  const FinAbGroup& mg = f.domain();
  const std::int64_t m = mg.order();
  const std::size_t r = f.values().rank();
  const auto& mod = f.values().moduli();
  const auto& t = f.raw();
  AdditionTable at(mg);
  auto cell = [&](std::int64_t i, std::int64_t j) {
    return t.data() + (i * m + j) * r;
  };
  // f(v,t) + f(u, v+t) = f(u,v) + f(u+v, t)
  for (std::int64_t u = 1; u < m; ++u)
    for (std::int64_t v = 1; v < m; ++v)
      for (std::int64_t w = 1; w < m; ++w) {
        const std::int64_t* a = cell(v, w);
        const std::int64_t* b = cell(u, at.add(v, w));
        const std::int64_t* c = cell(u, v);
        const std::int64_t* d = cell(at.add(u, v), w);
        for (std::size_t k = 0; k < r; ++k)
          if ((a[k] + b[k] - c[k] - d[k]) % mod[k] != 0)
            return CocycleViolation{"cocycle", witness_args(mg, {u, v, w})};
      }
  for (std::int64_t u = 1; u < m; ++u)
    for (std::int64_t v = u + 1; v < m; ++v) {
      const std::int64_t* a = cell(u, v);
      const std::int64_t* b = cell(v, u);
      for (std::size_t k = 0; k < r; ++k)
        if (a[k] != b[k])
          return CocycleViolation{"symmetry", witness_args(mg, {u, v})};
    }
  return std::nullopt;
}

std::optional<CocycleViolation> check_sym_3cocycle(const Cochain3Pair& kk) {
  const FinAbGroup& mg = kk.domain();
  const std::int64_t m = mg.order();
  const std::size_t r = kk.values().rank();
  const auto& mod = kk.values().moduli();
  const auto& xs = kk.raw_xi();
  const auto& es = kk.raw_eta();
  AdditionTable at(mg);
  auto xi = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    return xs.data() + ((x * m + y) * m + z) * r;
  };
  auto eta = [&](std::int64_t x, std::int64_t y) {
    return es.data() + (x * m + y) * r;
  };
  // i) xi(y,z,t) - xi(x+y,z,t) + xi(x,y+z,t) - xi(x,y,z+t) + xi(x,y,z) = 0
  for (std::int64_t x = 1; x < m; ++x)
    for (std::int64_t y = 1; y < m; ++y)
      for (std::int64_t z = 1; z < m; ++z)
        for (std::int64_t w = 1; w < m; ++w) {
          const std::int64_t* a = xi(y, z, w);
          const std::int64_t* b = xi(at.add(x, y), z, w);
          const std::int64_t* c = xi(x, at.add(y, z), w);
          const std::int64_t* d = xi(x, y, at.add(z, w));
          const std::int64_t* e = xi(x, y, z);
          for (std::size_t k = 0; k < r; ++k)
            if ((a[k] - b[k] + c[k] - d[k] + e[k]) % mod[k] != 0)
              return CocycleViolation{"xi-cocycle",
                                      witness_args(mg, {x, y, z, w})};
        }
  // ii) eta(x,y) + eta(y,x) = 0
  for (std::int64_t x = 1; x < m; ++x)
    for (std::int64_t y = x; y < m; ++y) {
      const std::int64_t* a = eta(x, y);
      const std::int64_t* b = eta(y, x);
      for (std::size_t k = 0; k < r; ++k)
        if ((a[k] + b[k]) % mod[k] != 0)
          return CocycleViolation{"eta-antisymmetry", witness_args(mg, {x, y})};
    }
  // iii) xi(x,y,z) - xi(y,x,z) + xi(y,z,x) + eta(x,y+z) - eta(x,y) - eta(x,z) = 0
  for (std::int64_t x = 1; x < m; ++x)
    for (std::int64_t y = 1; y < m; ++y)
      for (std::int64_t z = 1; z < m; ++z) {
        const std::int64_t* a = xi(x, y, z);
        const std::int64_t* b = xi(y, x, z);
        const std::int64_t* c = xi(y, z, x);
        const std::int64_t* d = eta(x, at.add(y, z));
        const std::int64_t* e = eta(x, y);
        const std::int64_t* f = eta(x, z);
        for (std::size_t k = 0; k < r; ++k)
          if ((a[k] - b[k] + c[k] + d[k] - e[k] - f[k]) % mod[k] != 0)
            return CocycleViolation{"mixed", witness_args(mg, {x, y, z})};
      }
  return std::nullopt;
}

Cochain2 coboundary(const Cochain1& g) {
  const FinAbGroup& mg = g.domain();
  const FinAbGroup& ng = g.values();
  const std::int64_t m = mg.order();
  const std::size_t r = ng.rank();
  const auto& mod = ng.moduli();
  AdditionTable at(mg);
  Cochain2 out(mg, ng);
  const auto& gt = g.raw();
  // Writing through set() keeps the normalization certificate live: the
  // formula itself must vanish on zero arguments or construction fails.
  for (std::int64_t u = 0; u < m; ++u)
    for (std::int64_t v = 0; v < m; ++v) {
      std::int64_t s = at.add(u, v);
      std::vector<std::int64_t> coords(r);
      for (std::size_t k = 0; k < r; ++k) {
        std::int64_t val =
            (gt[u * r + k] + gt[v * r + k] - gt[s * r + k]) % mod[k];
        coords[k] = val < 0 ? val + mod[k] : val;
      }
      out.set(mg.at(u), mg.at(v), ng.element(std::move(coords)));
    }
  return out;
}

Cochain3Pair coboundary2(const Cochain2& g) {
  const FinAbGroup& mg = g.domain();
  const FinAbGroup& ng = g.values();
  const std::int64_t m = mg.order();
  const std::size_t r = ng.rank();
  const auto& mod = ng.moduli();
  AdditionTable at(mg);
  Cochain3Pair out(mg, ng);
  const auto& gt = g.raw();
  auto cell = [&](std::int64_t i, std::int64_t j) {
    return gt.data() + (i * m + j) * r;
  };
  for (std::int64_t x = 0; x < m; ++x)
    for (std::int64_t y = 0; y < m; ++y) {
      for (std::int64_t z = 0; z < m; ++z) {
        const std::int64_t* a = cell(y, z);
        const std::int64_t* b = cell(at.add(x, y), z);
        const std::int64_t* c = cell(x, at.add(y, z));
        const std::int64_t* d = cell(x, y);
        std::vector<std::int64_t> coords(r);
        for (std::size_t k = 0; k < r; ++k) {
          std::int64_t val = (a[k] - b[k] + c[k] - d[k]) % mod[k];
          coords[k] = val < 0 ? val + mod[k] : val;
        }
        out.set_xi(mg.at(x), mg.at(y), mg.at(z), ng.element(std::move(coords)));
      }
      const std::int64_t* p = cell(y, x);
      const std::int64_t* q = cell(x, y);
      std::vector<std::int64_t> coords(r);
      for (std::size_t k = 0; k < r; ++k) {
        std::int64_t val = (p[k] - q[k]) % mod[k];
        coords[k] = val < 0 ? val + mod[k] : val;
      }
      out.set_eta(mg.at(x), mg.at(y), ng.element(std::move(coords)));
    }
  return out;
}

Cochain1 pullback(const Cochain1& g, const GroupHom& phi) {
  if (phi.tgt() != g.domain())
    fail(ErrorKind::domain_mismatch, "pullback hom does not land in the domain");
  Cochain1 out(phi.src(), g.values());
  for (std::int64_t i = 1; i < phi.src().order(); ++i) {
    GroupElement u = phi.src().at(i);
    GroupElement val = g.at(phi.apply(u));
    if (!val.is_zero()) out.set(u, val);
  }
  return out;
}

Cochain2 pullback(const Cochain2& f, const GroupHom& phi) {
  if (phi.tgt() != f.domain())
    fail(ErrorKind::domain_mismatch, "pullback hom does not land in the domain");
  Cochain2 out(phi.src(), f.values());
  for (std::int64_t i = 1; i < phi.src().order(); ++i)
    for (std::int64_t j = 1; j < phi.src().order(); ++j) {
      GroupElement u = phi.src().at(i), v = phi.src().at(j);
      GroupElement val = f.at(phi.apply(u), phi.apply(v));
      if (!val.is_zero()) out.set(u, v, val);
    }
  return out;
}

Cochain3Pair pullback(const Cochain3Pair& k, const GroupHom& phi) {
  if (phi.tgt() != k.domain())
    fail(ErrorKind::domain_mismatch, "pullback hom does not land in the domain");
  const FinAbGroup& q = phi.src();
  Cochain3Pair out(q, k.values());
  for (std::int64_t i = 1; i < q.order(); ++i)
    for (std::int64_t j = 1; j < q.order(); ++j) {
      GroupElement x = q.at(i), y = q.at(j);
      GroupElement e = k.eta(phi.apply(x), phi.apply(y));
      if (!e.is_zero()) out.set_eta(x, y, e);
      for (std::int64_t l = 1; l < q.order(); ++l) {
        GroupElement z = q.at(l);
        GroupElement v = k.xi(phi.apply(x), phi.apply(y), phi.apply(z));
        if (!v.is_zero()) out.set_xi(x, y, z, v);
      }
    }
  return out;
}

Cochain1 pushforward(const GroupHom& h, const Cochain1& g) {
  if (h.src() != g.values())
    fail(ErrorKind::domain_mismatch, "pushforward hom does not take the values");
  Cochain1 out(g.domain(), h.tgt());
  for (std::int64_t i = 1; i < g.domain().order(); ++i) {
    GroupElement u = g.domain().at(i);
    GroupElement val = h.apply(g.at(u));
    if (!val.is_zero()) out.set(u, val);
  }
  return out;
}

Cochain2 pushforward(const GroupHom& h, const Cochain2& f) {
  if (h.src() != f.values())
    fail(ErrorKind::domain_mismatch, "pushforward hom does not take the values");
  Cochain2 out(f.domain(), h.tgt());
  for (std::int64_t i = 1; i < f.domain().order(); ++i)
    for (std::int64_t j = 1; j < f.domain().order(); ++j) {
      GroupElement u = f.domain().at(i), v = f.domain().at(j);
      GroupElement val = h.apply(f.at(u, v));
      if (!val.is_zero()) out.set(u, v, val);
    }
  return out;
}

Cochain3Pair pushforward(const GroupHom& h, const Cochain3Pair& k) {
  if (h.src() != k.values())
    fail(ErrorKind::domain_mismatch, "pushforward hom does not take the values");
  const FinAbGroup& mg = k.domain();
  Cochain3Pair out(mg, h.tgt());
  for (std::int64_t i = 1; i < mg.order(); ++i)
    for (std::int64_t j = 1; j < mg.order(); ++j) {
      GroupElement x = mg.at(i), y = mg.at(j);
      GroupElement e = h.apply(k.eta(x, y));
      if (!e.is_zero()) out.set_eta(x, y, e);
      for (std::int64_t l = 1; l < mg.order(); ++l) {
        GroupElement z = mg.at(l);
        GroupElement v = h.apply(k.xi(x, y, z));
        if (!v.is_zero()) out.set_xi(x, y, z, v);
      }
    }
  return out;
}

}  // namespace abcross
