#include "abcross/crossed_module.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "abcross/error.hpp"

namespace abcross {

AbCrossedModule::AbCrossedModule(GroupHom boundary)
    : d_(std::move(boundary)), dec_(exact_decomposition(d_)) {}

std::string AbCrossedModule::to_string() const { return d_.to_string(); }

HomotopyGroups homotopy_groups(const AbCrossedModule& m) {
  return HomotopyGroups{m.pi0(), m.decomposition().coker_proj, m.pi1(),
                        m.decomposition().ker_incl};
}

CrossedData::CrossedData(AbCrossedModule m) : m_(std::move(m)) {
  const std::int64_t slots = m_.pi0().order() * m_.pi1().order();
  tab_.assign(static_cast<std::size_t>(slots), m_.pi1().zero());
}

CrossedData::CrossedData(GroupHom boundary)
    : CrossedData(AbCrossedModule(std::move(boundary))) {}

GroupElement CrossedData::twist(const GroupElement& s,
                                const GroupElement& a) const {
  const std::int64_t i = m_.pi0().index_of(s);
  const std::int64_t j = m_.pi1().index_of(a);
  return tab_[static_cast<std::size_t>(i * m_.pi1().order() + j)];
}

void CrossedData::set_twist(const GroupElement& s, const GroupElement& a,
                            const GroupElement& value) {
  if (value.group() != m_.pi1())
    fail(ErrorKind::domain_mismatch,
         "twist value does not live in the kernel of the boundary");
  const std::int64_t i = m_.pi0().index_of(s);
  const std::int64_t j = m_.pi1().index_of(a);
  tab_[static_cast<std::size_t>(i * m_.pi1().order() + j)] = value;
}

bool validate_crossed_data(const CrossedData& c, std::string* why) {
  const FinAbGroup& p0 = c.module().pi0();
  const FinAbGroup& p1 = c.module().pi1();
  auto bad = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (std::int64_t j = 0; j < p1.order(); ++j)
    if (!c.twist(p0.zero(), p1.at(j)).is_zero())
      return bad("twisting does not vanish at the zero class, argument " +
                 p1.at(j).to_string());
  for (std::int64_t i = 0; i < p0.order(); ++i)
    if (!c.twist(p0.at(i), p1.zero()).is_zero())
      return bad("twisting does not vanish at the zero kernel element, class " +
                 p0.at(i).to_string());
  for (std::int64_t i = 0; i < p0.order(); ++i)
    for (std::int64_t i2 = 0; i2 < p0.order(); ++i2)
      for (std::int64_t j = 0; j < p1.order(); ++j) {
        const GroupElement s = p0.at(i), s2 = p0.at(i2), a = p1.at(j);
        if (c.twist(s + s2, a) != c.twist(s, a) + c.twist(s2, a))
          return bad("twisting is not additive in the class argument at (" +
                     s.to_string() + ", " + s2.to_string() + "; " +
                     a.to_string() + ")");
      }
  for (std::int64_t i = 0; i < p0.order(); ++i)
    for (std::int64_t j = 0; j < p1.order(); ++j)
      for (std::int64_t j2 = 0; j2 < p1.order(); ++j2) {
        const GroupElement s = p0.at(i), a = p1.at(j), a2 = p1.at(j2);
        if (c.twist(s, a + a2) != c.twist(s, a) + c.twist(s, a2))
          return bad("twisting is not additive in the kernel argument at (" +
                     s.to_string() + "; " + a.to_string() + ", " +
                     a2.to_string() + ")");
      }
  return true;
}

bool is_abelian(const CrossedData& c) {
  for (const GroupElement& v : c.table())
    if (!v.is_zero()) return false;
  return true;
}

AbCrossedModule as_abelian_module(const CrossedData& c) {
  std::string why;
  if (!validate_crossed_data(c, &why)) fail(ErrorKind::invalid_twisting, why);
  if (!is_abelian(c))
    fail(ErrorKind::invalid_twisting,
         "twisting table is nonzero; the object is not abelian");
  return c.module();
}

AbCrossMorphism AbCrossMorphism::identity(const AbCrossedModule& m) {
  AbCrossMorphism r;
  r.src = m;
  r.tgt = m;
  r.f1 = GroupHom::identity(m.top());
  r.f0 = GroupHom::identity(m.bottom());
  r.phi = Cochain2(m.pi0(), m.pi1());
  return r;
}

bool AbCrossMorphism::operator==(const AbCrossMorphism& rhs) const {
  return src == rhs.src && tgt == rhs.tgt && f1 == rhs.f1 && f0 == rhs.f0 &&
         phi == rhs.phi;
}

bool validate_morphism(const AbCrossMorphism& m, std::string* why) {
  auto bad = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (m.f1.src() != m.src.top() || m.f1.tgt() != m.tgt.top())
    return bad("top component does not map the top groups");
  if (m.f0.src() != m.src.bottom() || m.f0.tgt() != m.tgt.bottom())
    return bad("bottom component does not map the bottom groups");
  if (m.phi.domain() != m.src.pi0() || m.phi.values() != m.tgt.pi1())
    return bad(
        "cochain is not over the source cokernel with target kernel values");
  const FinAbGroup& b = m.src.top();
  for (std::int64_t i = 0; i < b.order(); ++i) {
    const GroupElement x = b.at(i);
    if (m.f0.apply(m.src.boundary().apply(x)) !=
        m.tgt.boundary().apply(m.f1.apply(x)))
      return bad("square does not commute at " + x.to_string());
  }
  if (auto v = check_sym_2cocycle(m.phi)) {
    std::string msg = "cochain fails the symmetric cocycle condition '" +
                      v->condition + "' at (";
    for (std::size_t i = 0; i < v->args.size(); ++i) {
      if (i) msg += ", ";
      msg += v->args[i].to_string();
    }
    return bad(msg + ")");
  }
  return true;
}

GroupHom induced_pi0(const GroupHom& f0, const AbCrossedModule& src,
                     const AbCrossedModule& tgt) {
  if (f0.src() != src.bottom() || f0.tgt() != tgt.bottom())
    fail(ErrorKind::domain_mismatch,
         "bottom component does not run between the two bottom groups");
  const ExactDecomposition& ds = src.decomposition();
  const ExactDecomposition& dt = tgt.decomposition();
  // The induced map is well defined only when the boundary image is carried
  // into the boundary image; checking generators suffices.
  for (std::size_t j = 0; j < ds.img.rank(); ++j) {
    const GroupElement y = f0.apply(ds.img_incl.apply(ds.img.generator(j)));
    if (!solve_preimage(dt.img_incl, y))
      fail(ErrorKind::invalid_morphism,
           "bottom component does not carry the boundary image into the "
           "boundary image");
  }
  std::vector<std::vector<std::int64_t>> mat(
      dt.coker.rank(), std::vector<std::int64_t>(ds.coker.rank(), 0));
  for (std::size_t j = 0; j < ds.coker.rank(); ++j) {
    const GroupElement rep =
        ds.section(ds.coker.generator(j), SectionChoice::least_representative);
    const GroupElement cls = dt.coker_proj.apply(f0.apply(rep));
    const std::vector<std::int64_t> cc = cls.coords();
    for (std::size_t i = 0; i < dt.coker.rank(); ++i) mat[i][j] = cc[i];
  }
  return GroupHom(ds.coker, dt.coker, std::move(mat));
}

GroupHom induced_pi0(const AbCrossMorphism& m) {
  return induced_pi0(m.f0, m.src, m.tgt);
}

GroupHom induced_pi1(const GroupHom& f1, const AbCrossedModule& src,
                     const AbCrossedModule& tgt) {
  if (f1.src() != src.top() || f1.tgt() != tgt.top())
    fail(ErrorKind::domain_mismatch,
         "top component does not run between the two top groups");
  const ExactDecomposition& ds = src.decomposition();
  const ExactDecomposition& dt = tgt.decomposition();
  std::vector<std::vector<std::int64_t>> mat(
      dt.ker.rank(), std::vector<std::int64_t>(ds.ker.rank(), 0));
  for (std::size_t j = 0; j < ds.ker.rank(); ++j) {
    const GroupElement y = f1.apply(ds.ker_incl.apply(ds.ker.generator(j)));
    const auto a = solve_preimage(dt.ker_incl, y);
    if (!a)
      fail(ErrorKind::invalid_morphism,
           "top component does not carry the kernel into the kernel");
    const std::vector<std::int64_t> cc = a->coords();
    for (std::size_t i = 0; i < dt.ker.rank(); ++i) mat[i][j] = cc[i];
  }
  return GroupHom(ds.ker, dt.ker, std::move(mat));
}

GroupHom induced_pi1(const AbCrossMorphism& m) {
  return induced_pi1(m.f1, m.src, m.tgt);
}

AbCrossMorphism compose_morphism(const AbCrossMorphism& n,
                                 const AbCrossMorphism& m) {
  if (m.tgt != n.src)
    fail(ErrorKind::domain_mismatch,
         "inner objects of the composition differ");
  AbCrossMorphism r;
  r.src = m.src;
  r.tgt = n.tgt;
  r.f1 = compose(n.f1, m.f1);
  r.f0 = compose(n.f0, m.f0);
  r.phi = pushforward(induced_pi1(n), m.phi) +
          pullback(n.phi, induced_pi0(m));
  return r;
}

}  // namespace abcross
