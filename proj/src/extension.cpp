#include "abcross/extension.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "abcross/error.hpp"
#include "abcross/matrix.hpp"

namespace abcross {
namespace {

GroupElement section_defect(const Cochain1& t, const GroupElement& u,
                            const GroupElement& v) {
  return t.at(u) + t.at(v) - t.at(u + v);
}

std::string pair_text(const GroupElement& u, const GroupElement& v) {
  return "(" + u.to_string() + ", " + v.to_string() + ")";
}

// Shared assembler for the affine systems on pointed tables q -> values:
// rows are pushed as (dense coefficients, modulus, right-hand side); the
// solution, when it exists, is the lexicographically least table.
class PointedSystem {
 public:
  PointedSystem(const FinAbGroup& q, const FinAbGroup& values)
      : q_(q), values_(values), vars_(static_cast<std::size_t>(q.order()) *
                                      values.rank()) {
    // The zero argument is pinned to zero.
    for (std::size_t c = 0; c < values_.rank(); ++c) {
      std::vector<std::int64_t> row(vars_, 0);
      row[c] = 1;
      push(std::move(row), values_.moduli()[c], 0);
    }
  }

  std::size_t var(std::int64_t arg, std::size_t coord) const {
    return static_cast<std::size_t>(arg) * values_.rank() + coord;
  }

  void push(std::vector<std::int64_t> row, std::int64_t modulus,
            std::int64_t rhs) {
    rows_.push_back(std::move(row));
    moduli_.push_back(modulus);
    rhs_.push_back(rhs);
  }

  std::size_t rows() const { return rows_.size(); }

  std::optional<Cochain1> solve() const {
    IntMat a(rows_.size(), vars_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < vars_; ++c) a.at(r, c) = rows_[r][c];
    std::vector<std::int64_t> x_moduli(vars_);
    for (std::int64_t i = 0; i < q_.order(); ++i)
      for (std::size_t c = 0; c < values_.rank(); ++c)
        x_moduli[var(i, c)] = values_.moduli()[c];
    auto sol = solve_congruences(a, moduli_, x_moduli, rhs_);
    if (!sol) return std::nullopt;
    Cochain1 out(q_, values_);
    for (std::int64_t i = 1; i < q_.order(); ++i) {
      std::vector<std::int64_t> coords(
          sol->begin() + static_cast<std::ptrdiff_t>(var(i, 0)),
          sol->begin() + static_cast<std::ptrdiff_t>(var(i, 0)) +
              static_cast<std::ptrdiff_t>(values_.rank()));
      GroupElement value = values_.element(std::move(coords));
      if (!value.is_zero()) out.set(q_.at(i), value);
    }
    return out;
  }

 private:
  const FinAbGroup& q_;
  const FinAbGroup& values_;
  std::size_t vars_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::int64_t> moduli_;
  std::vector<std::int64_t> rhs_;
};

// Deterministic extension with the least section and least cocycle
// correction among the torsor base points constructed here.
Extension least_realization(const AbCrossedModule& m, const GroupHom& psi,
                            const Limits& limits) {
  const FinAbGroup& q = psi.src();
  const ExactDecomposition& dec = m.decomposition();
  ReducedPicard red =
      reduce(picard_of(m), SectionChoice::least_representative, limits);
  Cochain3Pair pk = pullback(red.k, psi);
  // The section-defect preimages below have coboundary equal to minus the
  // pulled-back invariant, so a symmetric corrector with coboundary plus it
  // closes the cocycle condition. One exists exactly when the class is zero.
  auto corrector = coboundary2_witness(pk, limits);
  if (!corrector)
    fail(ErrorKind::internal_error,
         "pulled-back invariant admits no symmetric corrector");
  const GroupHom& incl = dec.ker_incl;
  Extension e{m, q, Cochain2(q, m.top()), Cochain1(q, m.bottom())};
  for (std::int64_t i = 1; i < q.order(); ++i) {
    const GroupElement u = q.at(i);
    GroupElement s =
        dec.section(psi.apply(u), SectionChoice::least_representative);
    if (!s.is_zero()) e.fmap.set(u, s);
  }
  for (std::int64_t i = 1; i < q.order(); ++i)
    for (std::int64_t j = 1; j < q.order(); ++j) {
      const GroupElement u = q.at(i), v = q.at(j);
      auto pre = solve_preimage(m.boundary(), section_defect(e.fmap, u, v));
      if (!pre)
        fail(ErrorKind::internal_error,
             "section defect left the boundary image");
      GroupElement val = *pre + incl.apply(corrector->at(u, v));
      if (!val.is_zero()) e.f.set(u, v, val);
    }
  return e;
}

}  // namespace

bool validate_extension(const Extension& e, std::string* why) {
  auto bad = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (e.f.domain() != e.q || e.f.values() != e.base.top())
    return bad("cocycle table is over the wrong groups");
  if (e.fmap.domain() != e.q || e.fmap.values() != e.base.bottom())
    return bad("section table is over the wrong groups");
  if (auto v = check_sym_2cocycle(e.f)) {
    std::string msg = "cocycle table fails condition '" + v->condition +
                      "' at (";
    for (std::size_t i = 0; i < v->args.size(); ++i) {
      if (i) msg += ", ";
      msg += v->args[i].to_string();
    }
    return bad(msg + ")");
  }
  const GroupHom& d = e.base.boundary();
  for (std::int64_t i = 0; i < e.q.order(); ++i)
    for (std::int64_t j = 0; j < e.q.order(); ++j) {
      const GroupElement u = e.q.at(i), v = e.q.at(j);
      if (d.apply(e.f.at(u, v)) != section_defect(e.fmap, u, v))
        return bad(
            "boundary of the cocycle does not match the section defect at " +
            pair_text(u, v));
    }
  return true;
}

GroupHom induced_psi(const Extension& e) {
  const GroupHom& proj = e.base.decomposition().coker_proj;
  const FinAbGroup& p0 = e.base.pi0();
  std::vector<std::vector<std::int64_t>> mat(
      p0.rank(), std::vector<std::int64_t>(e.q.rank(), 0));
  for (std::size_t j = 0; j < e.q.rank(); ++j) {
    std::vector<std::int64_t> unit(e.q.rank(), 0);
    unit[j] = 1;
    const std::vector<std::int64_t> img =
        proj.apply(e.fmap.at(e.q.element(std::move(unit)))).coords();
    for (std::size_t r = 0; r < p0.rank(); ++r) mat[r][j] = img[r];
  }
  return GroupHom(e.q, p0, std::move(mat));
}

FinAbGroup total_group_type(const Extension& e) {
  const FinAbGroup& b = e.base.top();
  const std::size_t rb = b.rank(), rq = e.q.rank();
  const std::size_t n = rb + rq;
  if (n == 0) return FinAbGroup::trivial();
  // Present the total group on the images of b's generators and the section
  // elements over q's generators; a q-generator of order m collapses to a
  // telescoped sum of cocycle values inside b.
  IntMat rel(n, n);
  for (std::size_t i = 0; i < rb; ++i) rel.at(i, i) = b.moduli()[i];
  for (std::size_t j = 0; j < rq; ++j) {
    const std::int64_t mj = e.q.moduli()[j];
    rel.at(rb + j, rb + j) = mj;
    std::vector<std::int64_t> unit(rq, 0);
    unit[j] = 1;
    const GroupElement uj = e.q.element(std::move(unit));
    GroupElement sum = b.zero();
    GroupElement acc = uj;
    for (std::int64_t t = 1; t < mj; ++t) {
      sum = sum + e.f.at(acc, uj);
      acc = acc + uj;
    }
    const std::vector<std::int64_t> sc = sum.coords();
    for (std::size_t i = 0; i < rb; ++i) rel.at(rb + j, i) = -Int(sc[i]);
  }
  SmithNormalForm snf = smith_normal_form(rel);
  std::vector<std::int64_t> factors;
  for (const Int& dgl : snf.diagonal()) {
    if (dgl == 0)
      fail(ErrorKind::internal_error, "total group presentation lost rank");
    factors.push_back(dgl.convert_to<std::int64_t>());
  }
  return FinAbGroup(std::move(factors));
}

Extension extension_of_functor(const RegularSMFunctor& fn) {
  std::string why;
  if (!validate_functor(fn, &why)) fail(ErrorKind::invalid_functor, why);
  if (fn.source.arrows().order() != 1)
    fail(ErrorKind::invalid_functor,
         "source category has arrows other than identities");
  const FinAbGroup& q = fn.source.objects();
  const GroupHom& psrc = fn.source.base().decomposition().coker_proj;
  const GroupHom& incl = fn.target.base().decomposition().ker_incl;
  Extension e{base_of(fn.target), q, Cochain2(q, fn.target.arrows()),
              Cochain1(q, fn.target.objects())};
  for (std::int64_t i = 1; i < q.order(); ++i) {
    const GroupElement u = q.at(i);
    GroupElement val = fn.f0.apply(u);
    if (!val.is_zero()) e.fmap.set(u, val);
  }
  for (std::int64_t i = 1; i < q.order(); ++i)
    for (std::int64_t j = 1; j < q.order(); ++j) {
      const GroupElement u = q.at(i), v = q.at(j);
      GroupElement val =
          incl.apply(fn.phi.at(psrc.apply(u), psrc.apply(v)));
      if (!val.is_zero()) e.f.set(u, v, val);
    }
  return e;
}

RegularSMFunctor functor_of_extension(const Extension& e,
                                      const Limits& limits) {
  std::string why;
  if (!validate_extension(e, &why)) fail(ErrorKind::invalid_extension, why);
  const FinAbGroup& q = e.q;
  const FinAbGroup& bg = e.base.top();
  const GroupHom& d = e.base.boundary();
  const std::int64_t nq = q.order();

  // Least pointed correction alpha with fmap - d(alpha) additive: for every
  // pair, d applied to alpha's defect must reproduce the section defect.
  PointedSystem sys(q, bg);
  const std::size_t dr = e.base.bottom().rank();
  if (static_cast<std::int64_t>(sys.rows()) +
          nq * nq * static_cast<std::int64_t>(dr) >
      static_cast<std::int64_t>(limits.max_solver_rows))
    fail(ErrorKind::size_exceeded,
         "section correction system exceeds the solver row budget");
  for (std::int64_t i = 0; i < nq; ++i)
    for (std::int64_t j = 0; j < nq; ++j) {
      const GroupElement u = q.at(i), v = q.at(j);
      const std::int64_t s = q.index_of(u + v);
      const std::vector<std::int64_t> rhs =
          section_defect(e.fmap, u, v).coords();
      for (std::size_t r = 0; r < dr; ++r) {
        std::vector<std::int64_t> row(
            static_cast<std::size_t>(nq) * bg.rank(), 0);
        for (std::size_t c = 0; c < bg.rank(); ++c) {
          row[sys.var(i, c)] += d.entry(r, c);
          row[sys.var(j, c)] += d.entry(r, c);
          row[sys.var(s, c)] -= d.entry(r, c);
        }
        sys.push(std::move(row), e.base.bottom().moduli()[r], rhs[r]);
      }
    }
  auto alpha = sys.solve();
  if (!alpha)
    fail(ErrorKind::invalid_extension,
         "no equivalent extension has an additive section");

  std::vector<std::vector<std::int64_t>> mat(
      e.base.bottom().rank(), std::vector<std::int64_t>(q.rank(), 0));
  for (std::size_t j = 0; j < q.rank(); ++j) {
    std::vector<std::int64_t> unit(q.rank(), 0);
    unit[j] = 1;
    const GroupElement uj = q.element(std::move(unit));
    const std::vector<std::int64_t> img =
        (e.fmap.at(uj) - d.apply(alpha->at(uj))).coords();
    for (std::size_t r = 0; r < e.base.bottom().rank(); ++r)
      mat[r][j] = img[r];
  }

  RegularSMFunctor fn;
  fn.source = discrete_picard(q);
  fn.target = picard_of(e.base);
  fn.f0 = GroupHom(q, e.base.bottom(), std::move(mat));
  fn.f1 = GroupHom::zero(FinAbGroup::trivial(), bg);
  const GroupHom& psrc = fn.source.base().decomposition().coker_proj;
  const GroupHom& incl = e.base.decomposition().ker_incl;
  Cochain2 phi(fn.source.base().pi0(), e.base.pi1());
  for (std::int64_t i = 1; i < nq; ++i)
    for (std::int64_t j = 1; j < nq; ++j) {
      const GroupElement u = q.at(i), v = q.at(j);
      GroupElement val =
          e.f.at(u, v) - (alpha->at(u) + alpha->at(v) - alpha->at(u + v));
      auto kc = solve_preimage(incl, val);
      if (!kc)
        fail(ErrorKind::internal_error, "corrected cocycle left the kernel");
      if (!kc->is_zero()) phi.set(psrc.apply(u), psrc.apply(v), *kc);
    }
  fn.phi = std::move(phi);
  return fn;
}

std::optional<Cochain1> are_equivalent(const Extension& a, const Extension& b,
                                       const Limits& limits) {
  if (a.base != b.base || a.q != b.q)
    fail(ErrorKind::base_mismatch,
         "extensions are not over the same module and quotient");
  const FinAbGroup& q = a.q;
  const FinAbGroup& bg = a.base.top();
  const GroupHom& d = a.base.boundary();
  const std::int64_t nq = q.order();
  const std::size_t dr = a.base.bottom().rank();

  PointedSystem sys(q, bg);
  const std::int64_t extra =
      nq * static_cast<std::int64_t>(dr) +
      nq * nq * static_cast<std::int64_t>(bg.rank());
  if (static_cast<std::int64_t>(sys.rows()) + extra >
      static_cast<std::int64_t>(limits.max_solver_rows))
    fail(ErrorKind::size_exceeded,
         "equivalence system exceeds the solver row budget");

  // d(alpha(u)) closes the gap between the section tables.
  for (std::int64_t i = 0; i < nq; ++i) {
    const GroupElement u = q.at(i);
    const std::vector<std::int64_t> rhs =
        (a.fmap.at(u) - b.fmap.at(u)).coords();
    for (std::size_t r = 0; r < dr; ++r) {
      std::vector<std::int64_t> row(static_cast<std::size_t>(nq) * bg.rank(),
                                    0);
      for (std::size_t c = 0; c < bg.rank(); ++c)
        row[sys.var(i, c)] = d.entry(r, c);
      sys.push(std::move(row), a.base.bottom().moduli()[r], rhs[r]);
    }
  }
  // alpha's defect closes the gap between the cocycle tables.
  for (std::int64_t i = 0; i < nq; ++i)
    for (std::int64_t j = 0; j < nq; ++j) {
      const GroupElement u = q.at(i), v = q.at(j);
      const std::int64_t s = q.index_of(u + v);
      const std::vector<std::int64_t> rhs =
          (a.f.at(u, v) - b.f.at(u, v)).coords();
      for (std::size_t c = 0; c < bg.rank(); ++c) {
        std::vector<std::int64_t> row(
            static_cast<std::size_t>(nq) * bg.rank(), 0);
        row[sys.var(i, c)] += 1;
        row[sys.var(j, c)] += 1;
        row[sys.var(s, c)] -= 1;
        sys.push(std::move(row), bg.moduli()[c], rhs[c]);
      }
    }
  return sys.solve();
}

GroupElement obstruction_class(const AbCrossedModule& m, const GroupHom& psi,
                               const Limits& limits) {
  if (psi.tgt() != m.pi0())
    fail(ErrorKind::domain_mismatch,
         "psi does not land in the quotient of the boundary");
  ReducedPicard red =
      reduce(picard_of(m), SectionChoice::least_representative, limits);
  return sym_cohomology(3, psi.src(), m.pi1(), limits)
      .class_of(pullback(red.k, psi));
}

ClassificationResult classify_extensions(const AbCrossedModule& m,
                                         const GroupHom& psi,
                                         const Limits& limits) {
  if (psi.tgt() != m.pi0())
    fail(ErrorKind::domain_mismatch,
         "psi does not land in the quotient of the boundary");
  const FinAbGroup& q = psi.src();
  ClassificationResult out{obstruction_class(m, psi, limits), {}, std::nullopt};
  if (!out.obstruction.is_zero()) return out;
  Extension base = least_realization(m, psi, limits);
  CohomologyGroup h2 = sym_cohomology(2, q, m.pi1(), limits);
  const GroupHom& incl = m.decomposition().ker_incl;
  const FinAbGroup& cg = h2.group();
  if (cg.order() > limits.max_candidates)
    fail(ErrorKind::size_exceeded,
         "class enumeration would exceed the candidate budget");
  out.classes.reserve(static_cast<std::size_t>(cg.order()));
  for (std::int64_t i = 0; i < cg.order(); ++i) {
    Extension e = base;
    e.f = base.f + pushforward(incl, h2.representative2(cg.at(i)));
    out.classes.push_back(std::move(e));
  }
  out.h2 = std::move(h2);
  return out;
}

Extension canonical_extension(const AbCrossedModule& m) {
  return least_realization(m, GroupHom::identity(m.pi0()), Limits{});
}

Extension pullback_extension(const Extension& dext, const GroupHom& psi) {
  std::string why;
  if (!validate_extension(dext, &why)) fail(ErrorKind::invalid_extension, why);
  if (dext.base.pi1().order() != 1)
    fail(ErrorKind::not_mono,
         "boundary has a kernel, so reindexing does not classify");
  if (dext.q != dext.base.pi0())
    fail(ErrorKind::domain_mismatch,
         "ambient extension is not over the boundary quotient");
  if (psi.tgt() != dext.q)
    fail(ErrorKind::domain_mismatch,
         "psi does not land in the boundary quotient");
  const FinAbGroup& q = psi.src();
  Extension e{dext.base, q, Cochain2(q, dext.base.top()),
              Cochain1(q, dext.base.bottom())};
  for (std::int64_t i = 1; i < q.order(); ++i) {
    const GroupElement u = q.at(i);
    GroupElement val = dext.fmap.at(psi.apply(u));
    if (!val.is_zero()) e.fmap.set(u, val);
  }
  for (std::int64_t i = 1; i < q.order(); ++i)
    for (std::int64_t j = 1; j < q.order(); ++j) {
      const GroupElement u = q.at(i), v = q.at(j);
      GroupElement val = dext.f.at(psi.apply(u), psi.apply(v));
      if (!val.is_zero()) e.f.set(u, v, val);
    }
  return e;
}

std::vector<Extension> enumerate_extensions(const AbCrossedModule& m,
                                            const GroupHom& psi,
                                            const Limits& limits) {
  if (psi.tgt() != m.pi0())
    fail(ErrorKind::domain_mismatch,
         "psi does not land in the quotient of the boundary");
  const FinAbGroup& q = psi.src();
  const FinAbGroup& bg = m.top();
  const FinAbGroup& dg = m.bottom();
  const GroupHom& proj = m.decomposition().coker_proj;
  const std::int64_t nq = q.order();
  const std::int64_t kfree = nq - 1;
  const std::int64_t slots = kfree * (kfree + 1) / 2;

  // Candidate sections per argument: every bottom element over psi's class.
  std::vector<std::vector<GroupElement>> lifts;
  lifts.reserve(static_cast<std::size_t>(nq));
  for (std::int64_t i = 0; i < nq; ++i) {
    std::vector<GroupElement> row;
    if (i > 0) {
      const GroupElement cls = psi.apply(q.at(i));
      for (std::int64_t x = 0; x < dg.order(); ++x)
        if (proj.apply(dg.at(x)) == cls) row.push_back(dg.at(x));
    }
    lifts.push_back(std::move(row));
  }
  const std::int64_t per_lift = kfree > 0 ? static_cast<std::int64_t>(
                                                lifts[1].size())
                                          : 1;
  std::int64_t cand = 1;
  auto mul = [&](std::int64_t x) {
    if (x <= 0) x = 1;
    if (cand > limits.max_candidates / x)
      cand = limits.max_candidates + 1;
    else
      cand *= x;
  };
  for (std::int64_t s = 0; s < slots; ++s) mul(bg.order());
  for (std::int64_t s = 0; s < kfree; ++s) mul(per_lift);
  if (cand > limits.max_candidates)
    fail(ErrorKind::size_exceeded,
         "exhaustive table search exceeds the candidate budget");

  std::vector<std::pair<std::int64_t, std::int64_t>> slot;
  for (std::int64_t i = 1; i < nq; ++i)
    for (std::int64_t j = i; j < nq; ++j) slot.emplace_back(i, j);

  const GroupHom& d = m.boundary();
  std::vector<Extension> out;
  std::vector<std::int64_t> fdig(slot.size(), 0);
  while (true) {
    Cochain2 f(q, bg);
    for (std::size_t s = 0; s < slot.size(); ++s) {
      const GroupElement val = bg.at(fdig[s]);
      if (!val.is_zero()) {
        f.set(q.at(slot[s].first), q.at(slot[s].second), val);
        f.set(q.at(slot[s].second), q.at(slot[s].first), val);
      }
    }
    if (is_sym_2cocycle(f)) {
      std::vector<std::int64_t> mdig(static_cast<std::size_t>(kfree), 0);
      while (true) {
        Cochain1 fm(q, dg);
        for (std::int64_t i = 1; i < nq; ++i) {
          const GroupElement val =
              lifts[i][static_cast<std::size_t>(mdig[i - 1])];
          if (!val.is_zero()) fm.set(q.at(i), val);
        }
        bool ok = true;
        for (std::int64_t i = 0; ok && i < nq; ++i)
          for (std::int64_t j = 0; ok && j < nq; ++j) {
            const GroupElement u = q.at(i), v = q.at(j);
            if (d.apply(f.at(u, v)) != section_defect(fm, u, v)) ok = false;
          }
        if (ok) out.push_back(Extension{m, q, f, fm});
        std::size_t t = mdig.size();
        bool carried = false;
        while (t-- > 0) {
          if (++mdig[t] < per_lift) {
            carried = true;
            break;
          }
          mdig[t] = 0;
        }
        if (!carried) break;
      }
    }
    std::size_t t = fdig.size();
    bool carried = false;
    while (t-- > 0) {
      if (++fdig[t] < bg.order()) {
        carried = true;
        break;
      }
      fdig[t] = 0;
    }
    if (!carried) break;
  }
  return out;
}

}  // namespace abcross
