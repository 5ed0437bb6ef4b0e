#include "abcross/picard.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "abcross/error.hpp"
#include "abcross/matrix.hpp"

namespace abcross {
namespace {

AbCrossMorphism raw_morphism(const RegularSMFunctor& f) {
  AbCrossMorphism m;
  m.src = f.source.base();
  m.tgt = f.target.base();
  m.f1 = f.f1;
  m.f0 = f.f0;
  m.phi = f.phi;
  return m;
}

// Same tables with the degree-2 part negated; turning the coherence
// equations of a comparison cochain into a plain coboundary equation.
Cochain3Pair flip_eta(const Cochain3Pair& k) {
  const FinAbGroup& m = k.domain();
  Cochain3Pair out(m, k.values());
  for (std::int64_t i = 1; i < m.order(); ++i)
    for (std::int64_t j = 1; j < m.order(); ++j) {
      const GroupElement x = m.at(i), y = m.at(j);
      for (std::int64_t l = 1; l < m.order(); ++l) {
        GroupElement v = k.xi(x, y, m.at(l));
        if (!v.is_zero()) out.set_xi(x, y, m.at(l), v);
      }
      GroupElement e = k.eta(x, y);
      if (!e.is_zero()) out.set_eta(x, y, -e);
    }
  return out;
}

}  // namespace

StrictPicard picard_of(const AbCrossedModule& m) { return StrictPicard(m); }

AbCrossedModule base_of(const StrictPicard& p) { return p.base(); }

StrictPicard discrete_picard(const FinAbGroup& q) {
  return StrictPicard(
      AbCrossedModule(GroupHom::zero(FinAbGroup::trivial(), q)));
}

std::vector<GroupElement> hom_set(const StrictPicard& p, const GroupElement& x,
                                  const GroupElement& y) {
  if (x.group() != p.objects() || y.group() != p.objects())
    fail(ErrorKind::domain_mismatch, "objects outside the category");
  const GroupElement diff = x - y;
  const FinAbGroup& b = p.arrows();
  std::vector<GroupElement> out;
  for (std::int64_t i = 0; i < b.order(); ++i) {
    GroupElement cand = b.at(i);
    if (p.base().boundary().apply(cand) == diff) out.push_back(cand);
  }
  return out;
}

bool validate_reduced(const ReducedPicard& s, std::string* why) {
  auto bad = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (s.k.domain() != s.m || s.k.values() != s.n)
    return bad("invariant tables are over the wrong groups");
  if (auto v = check_sym_3cocycle(s.k)) {
    std::string msg =
        "invariant fails the symmetric cocycle condition '" + v->condition +
        "' at (";
    for (std::size_t i = 0; i < v->args.size(); ++i) {
      if (i) msg += ", ";
      msg += v->args[i].to_string();
    }
    return bad(msg + ")");
  }
  return true;
}

RegularSMFunctor RegularSMFunctor::identity(const StrictPicard& p) {
  return functor_of_morphism(AbCrossMorphism::identity(p.base()));
}

bool RegularSMFunctor::operator==(const RegularSMFunctor& rhs) const {
  return source == rhs.source && target == rhs.target && f0 == rhs.f0 &&
         f1 == rhs.f1 && phi == rhs.phi;
}

bool validate_functor(const RegularSMFunctor& f, std::string* why) {
  return validate_morphism(raw_morphism(f), why);
}

RegularSMFunctor functor_of_morphism(const AbCrossMorphism& m) {
  std::string why;
  if (!validate_morphism(m, &why)) fail(ErrorKind::invalid_morphism, why);
  RegularSMFunctor f;
  f.source = StrictPicard(m.src);
  f.target = StrictPicard(m.tgt);
  f.f0 = m.f0;
  f.f1 = m.f1;
  f.phi = m.phi;
  return f;
}

AbCrossMorphism morphism_of_functor(const RegularSMFunctor& f) {
  AbCrossMorphism m = raw_morphism(f);
  std::string why;
  if (!validate_morphism(m, &why)) fail(ErrorKind::invalid_functor, why);
  return m;
}

RegularSMFunctor compose_functors(const RegularSMFunctor& g,
                                  const RegularSMFunctor& f) {
  AbCrossMorphism c = compose_morphism(raw_morphism(g), raw_morphism(f));
  RegularSMFunctor out;
  out.source = f.source;
  out.target = g.target;
  out.f0 = c.f0;
  out.f1 = c.f1;
  out.phi = c.phi;
  return out;
}

ReducedPicard reduce(const StrictPicard& p, SectionChoice choice,
                     const Limits& limits) {
  const AbCrossedModule& base = p.base();
  const ExactDecomposition& dec = base.decomposition();
  const FinAbGroup& p0 = base.pi0();
  const FinAbGroup& p1 = base.pi1();
  const std::int64_t n0 = p0.order();
  const std::int64_t cells =
      n0 * n0 * n0 * std::max<std::int64_t>(1, p1.rank());
  if (cells > limits.max_table_cells)
    fail(ErrorKind::size_exceeded, "invariant table would exceed the budget");

  std::vector<GroupElement> u;
  u.reserve(static_cast<std::size_t>(n0));
  u.push_back(base.bottom().zero());
  for (std::int64_t i = 1; i < n0; ++i)
    u.push_back(dec.section(p0.at(i), choice));

  std::vector<GroupElement> b(static_cast<std::size_t>(n0 * n0),
                              base.top().zero());
  for (std::int64_t s = 1; s < n0; ++s)
    for (std::int64_t t = 1; t < n0; ++t) {
      const std::int64_t st = p0.index_of(p0.at(s) + p0.at(t));
      GroupElement defect = u[s] + u[t] - u[st];
      auto pre = solve_preimage(base.boundary(), defect, choice);
      if (!pre)
        fail(ErrorKind::internal_error,
             "section defect left the boundary image");
      b[static_cast<std::size_t>(s * n0 + t)] = *pre;
    }

  auto ker_coords = [&](const GroupElement& v) {
    auto a = solve_preimage(dec.ker_incl, v);
    if (!a)
      fail(ErrorKind::internal_error, "invariant entry fell outside the kernel");
    return *a;
  };
  auto bat = [&](std::int64_t s, std::int64_t t) {
    return b[static_cast<std::size_t>(s * n0 + t)];
  };

  Cochain3Pair k(p0, p1);
  for (std::int64_t s = 1; s < n0; ++s)
    for (std::int64_t t = 1; t < n0; ++t) {
      const std::int64_t st = p0.index_of(p0.at(s) + p0.at(t));
      for (std::int64_t r = 1; r < n0; ++r) {
        const std::int64_t tr = p0.index_of(p0.at(t) + p0.at(r));
        GroupElement xi_b = bat(s, t) + bat(st, r) - bat(t, r) - bat(s, tr);
        if (!xi_b.is_zero())
          k.set_xi(p0.at(s), p0.at(t), p0.at(r), ker_coords(xi_b));
      }
      GroupElement eta_b = bat(t, s) - bat(s, t);
      if (!eta_b.is_zero()) k.set_eta(p0.at(s), p0.at(t), ker_coords(eta_b));
    }
  return ReducedPicard{p0, p1, std::move(k)};
}

FunctorTypePair reduced_type(const RegularSMFunctor& f) {
  AbCrossMorphism m = raw_morphism(f);
  return FunctorTypePair{induced_pi0(m), induced_pi1(m)};
}

Cochain3Pair obstruction(const FunctorTypePair& t, const ReducedPicard& s,
                         const ReducedPicard& sp) {
  if (t.phi0.src() != s.m || t.phi0.tgt() != sp.m || t.f.src() != s.n ||
      t.f.tgt() != sp.n)
    fail(ErrorKind::domain_mismatch,
         "type pair does not run between the two invariants");
  return pullback(sp.k, t.phi0) - pushforward(t.f, s.k);
}

bool is_realizable(const FunctorTypePair& t, const ReducedPicard& s,
                   const ReducedPicard& sp, const Limits& limits) {
  return sym_cohomology(3, s.m, sp.n, limits)
      .class_of(obstruction(t, s, sp))
      .is_zero();
}

bool validate_reduced_functor(const ReducedFunctor& f, const ReducedPicard& s,
                              const ReducedPicard& sp, std::string* why) {
  auto bad = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (f.type.phi0.src() != s.m || f.type.phi0.tgt() != sp.m ||
      f.type.f.src() != s.n || f.type.f.tgt() != sp.n)
    return bad("type pair does not run between the two invariants");
  if (f.g.domain() != s.m || f.g.values() != sp.n)
    return bad("comparison cochain is over the wrong groups");
  if (coboundary2(f.g) != flip_eta(obstruction(f.type, s, sp)))
    return bad("comparison cochain does not solve the coherence equations");
  return true;
}

std::vector<ReducedFunctor> functor_classes(const FunctorTypePair& t,
                                            const ReducedPicard& s,
                                            const ReducedPicard& sp,
                                            const Limits& limits) {
  const Cochain3Pair k = obstruction(t, s, sp);
  if (!sym_cohomology(3, s.m, sp.n, limits).class_of(k).is_zero()) return {};
  auto g0 = coboundary2_witness(flip_eta(k), limits);
  if (!g0)
    fail(ErrorKind::internal_error,
         "vanishing obstruction class without a coherence witness");
  CohomologyGroup h2 = sym_cohomology(2, s.m, sp.n, limits);
  const FinAbGroup& cls = h2.group();
  if (cls.order() > limits.max_candidates)
    fail(ErrorKind::size_exceeded,
         "class enumeration would exceed the candidate budget");
  std::vector<ReducedFunctor> out;
  out.reserve(static_cast<std::size_t>(cls.order()));
  for (std::int64_t i = 0; i < cls.order(); ++i)
    out.push_back(ReducedFunctor{t, *g0 + h2.representative2(cls.at(i))});
  return out;
}

std::optional<Cochain1> are_homotopic(const RegularSMFunctor& f,
                                      const RegularSMFunctor& fp,
                                      const Limits& limits) {
  if (f.source != fp.source || f.target != fp.target)
    fail(ErrorKind::domain_mismatch, "functors do not share endpoints");
  const FinAbGroup& objs = f.source.objects();
  const FinAbGroup& arrs = f.source.arrows();
  const FinAbGroup& tb = f.target.arrows();
  const FinAbGroup& td = f.target.objects();
  const GroupHom& d = f.source.base().boundary();
  const GroupHom& dp = f.target.base().boundary();
  const GroupHom& incl = f.target.base().decomposition().ker_incl;
  const GroupHom& proj = f.source.base().decomposition().coker_proj;

  const std::int64_t no = objs.order();
  const std::size_t rb = tb.rank();
  const std::size_t vars = static_cast<std::size_t>(no) * rb;
  const std::int64_t row_groups = 1 + no + no * arrs.order() + no * no;
  if (row_groups * static_cast<std::int64_t>(rb) +
          no * static_cast<std::int64_t>(td.rank()) >
      limits.max_solver_rows)
    fail(ErrorKind::size_exceeded,
         "homotopy system exceeds the solver row budget");

  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> row_mod, rhs;
  auto push_row = [&](std::vector<std::int64_t> row, std::int64_t mod,
                      std::int64_t b) {
    rows.push_back(std::move(row));
    row_mod.push_back(mod);
    rhs.push_back(b);
  };

  // th(0) = 0.
  for (std::size_t c = 0; c < rb; ++c) {
    std::vector<std::int64_t> row(vars, 0);
    row[c] = 1;
    push_row(std::move(row), tb.moduli()[c], 0);
  }
  // d'(th(x)) = F(x) - F'(x) for every object x.
  for (std::int64_t o = 0; o < no; ++o) {
    const GroupElement x = objs.at(o);
    const GroupElement delta = f.f0.apply(x) - fp.f0.apply(x);
    const std::vector<std::int64_t> dc = delta.coords();
    for (std::size_t r = 0; r < td.rank(); ++r) {
      std::vector<std::int64_t> row(vars, 0);
      for (std::size_t c = 0; c < rb; ++c)
        row[static_cast<std::size_t>(o) * rb + c] = dp.entry(r, c);
      push_row(std::move(row), td.moduli()[r], dc[r]);
    }
  }
  // Naturality across every arrow b : x -> x - d(b).
  for (std::int64_t o = 0; o < no; ++o) {
    const GroupElement x = objs.at(o);
    for (std::int64_t bi = 0; bi < arrs.order(); ++bi) {
      const GroupElement arrow = arrs.at(bi);
      const std::int64_t oy = objs.index_of(x - d.apply(arrow));
      const GroupElement delta = fp.f1.apply(arrow) - f.f1.apply(arrow);
      const std::vector<std::int64_t> dc = delta.coords();
      for (std::size_t c = 0; c < rb; ++c) {
        std::vector<std::int64_t> row(vars, 0);
        row[static_cast<std::size_t>(oy) * rb + c] += 1;
        row[static_cast<std::size_t>(o) * rb + c] -= 1;
        push_row(std::move(row), tb.moduli()[c], dc[c]);
      }
    }
  }
  // Monoidality across every pair of objects.
  for (std::int64_t o1 = 0; o1 < no; ++o1)
    for (std::int64_t o2 = 0; o2 < no; ++o2) {
      const GroupElement x = objs.at(o1), y = objs.at(o2);
      const std::int64_t o12 = objs.index_of(x + y);
      const GroupElement px = proj.apply(x), py = proj.apply(y);
      const GroupElement delta =
          incl.apply(fp.phi.at(px, py)) - incl.apply(f.phi.at(px, py));
      const std::vector<std::int64_t> dc = delta.coords();
      for (std::size_t c = 0; c < rb; ++c) {
        std::vector<std::int64_t> row(vars, 0);
        row[static_cast<std::size_t>(o12) * rb + c] += 1;
        row[static_cast<std::size_t>(o1) * rb + c] -= 1;
        row[static_cast<std::size_t>(o2) * rb + c] -= 1;
        push_row(std::move(row), tb.moduli()[c], dc[c]);
      }
    }

  IntMat a(rows.size(), vars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < vars; ++c) a.at(r, c) = rows[r][c];
  std::vector<std::int64_t> x_moduli(vars);
  for (std::int64_t o = 0; o < no; ++o)
    for (std::size_t c = 0; c < rb; ++c)
      x_moduli[static_cast<std::size_t>(o) * rb + c] = tb.moduli()[c];

  auto sol = solve_congruences(a, row_mod, x_moduli, rhs);
  if (!sol) return std::nullopt;
  Cochain1 th(objs, tb);
  for (std::int64_t o = 1; o < no; ++o) {
    std::vector<std::int64_t> coords(
        sol->begin() + static_cast<std::ptrdiff_t>(o) * rb,
        sol->begin() + static_cast<std::ptrdiff_t>(o + 1) * rb);
    GroupElement value = tb.element(std::move(coords));
    if (!value.is_zero()) th.set(objs.at(o), value);
  }
  return th;
}

std::optional<Cochain1> are_homotopic(const ReducedFunctor& f,
                                      const ReducedFunctor& fp,
                                      const Limits& limits) {
  if (f.g.domain() != fp.g.domain() || f.g.values() != fp.g.values())
    fail(ErrorKind::domain_mismatch, "functors do not share endpoints");
  if (f.type != fp.type) return std::nullopt;
  return coboundary_witness(f.g - fp.g, limits);
}

}  // namespace abcross
