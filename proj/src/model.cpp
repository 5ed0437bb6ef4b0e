#include "abcross/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "abcross/cohomology.hpp"
#include "abcross/error.hpp"
#include "abcross/extension.hpp"
#include "abcross/picard.hpp"
#include "abcross/verify.hpp"

namespace abcross {
namespace {

using nlohmann::json;

[[noreturn]] void model_fail(const std::string& msg) {
  fail(ErrorKind::validation_error, msg);
}

const json& require_field(const json& obj, const std::string& key,
                          const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) model_fail(where + ": missing field '" + key + "'");
  return *it;
}

std::string string_field(const json& obj, const std::string& key,
                         const std::string& where) {
  const json& v = require_field(obj, key, where);
  if (!v.is_string())
    model_fail(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::int64_t int_value(const json& v, const std::string& where) {
  if (!v.is_number_integer())
    model_fail(where + ": expected an integer, got " +
               std::string(v.type_name()));
  return v.get<std::int64_t>();
}

void check_known_keys(const json& obj,
                      std::initializer_list<const char*> allowed,
                      const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok) model_fail(where + ": unknown field '" + it.key() + "'");
  }
}

std::vector<std::int64_t> int_list(const json& v, const std::string& where) {
  if (!v.is_array()) model_fail(where + ": expected a list of integers");
  std::vector<std::int64_t> out;
  for (const json& e : v) out.push_back(int_value(e, where));
  return out;
}

GroupElement element_from_json(const FinAbGroup& g, const json& v,
                               const std::string& where) {
  std::vector<std::int64_t> coords = int_list(v, where);
  if (coords.size() != g.rank())
    model_fail(where + ": expected " + std::to_string(g.rank()) +
               " coordinates for a value in " + g.to_string() + ", got " +
               std::to_string(coords.size()));
  return g.element(std::move(coords));
}

const json& table_row(const json& table, std::int64_t i,
                      const std::string& where) {
  if (!table.is_array())
    model_fail(where + ": expected a nested list table");
  if (i >= static_cast<std::int64_t>(table.size()))
    model_fail(where + ": table has too few rows");
  return table[static_cast<std::size_t>(i)];
}

void check_table_length(const json& table, std::int64_t want,
                        const std::string& where) {
  if (!table.is_array() || static_cast<std::int64_t>(table.size()) != want)
    model_fail(where + ": expected a list of length " + std::to_string(want));
}

// ---------------------------------------------------------------------------
// Declaration parsing.

FinAbGroup group_from_json(const json& v, const std::string& where) {
  std::vector<std::int64_t> mods = int_list(v, where);
  for (std::int64_t m : mods)
    if (m < 1) model_fail(where + ": invariant factors must be positive");
  try {
    return FinAbGroup(std::move(mods));
  } catch (const Error& e) {
    model_fail(where + ": " + e.what());
  }
}

NamedCochain cochain_from_json(const json& v, const std::string& where,
                               const std::map<std::string, FinAbGroup>& groups) {
  if (!v.is_object()) model_fail(where + ": expected an object");
  auto resolve = [&](const std::string& key) -> const FinAbGroup& {
    std::string name = string_field(v, key, where);
    auto it = groups.find(name);
    if (it == groups.end())
      model_fail(where + ": unknown group '" + name + "'");
    return it->second;
  };
  NamedCochain out;
  const json& deg = require_field(v, "degree", where);
  out.degree = static_cast<int>(int_value(deg, where));
  const FinAbGroup& m = resolve("dom");
  const FinAbGroup& n = resolve("cod");
  const std::int64_t mo = m.order();
  try {
    if (out.degree == 1) {
      check_known_keys(v, {"degree", "dom", "cod", "table"}, where);
      const json& tab = require_field(v, "table", where);
      check_table_length(tab, mo, where + ".table");
      out.c1 = Cochain1(m, n);
      for (std::int64_t i = 0; i < mo; ++i)
        out.c1.set(m.at(i), element_from_json(n, tab[i], where + ".table"));
    } else if (out.degree == 2) {
      check_known_keys(v, {"degree", "dom", "cod", "table"}, where);
      const json& tab = require_field(v, "table", where);
      check_table_length(tab, mo, where + ".table");
      out.c2 = Cochain2(m, n);
      for (std::int64_t i = 0; i < mo; ++i) {
        const json& row = table_row(tab, i, where + ".table");
        check_table_length(row, mo, where + ".table");
        for (std::int64_t j = 0; j < mo; ++j)
          out.c2.set(m.at(i), m.at(j),
                     element_from_json(n, row[j], where + ".table"));
      }
    } else if (out.degree == 3) {
      check_known_keys(v, {"degree", "dom", "cod", "xi", "eta"}, where);
      const json& xi = require_field(v, "xi", where);
      const json& eta = require_field(v, "eta", where);
      check_table_length(xi, mo, where + ".xi");
      check_table_length(eta, mo, where + ".eta");
      out.c3 = Cochain3Pair(m, n);
      for (std::int64_t i = 0; i < mo; ++i) {
        const json& slab = table_row(xi, i, where + ".xi");
        check_table_length(slab, mo, where + ".xi");
        for (std::int64_t j = 0; j < mo; ++j) {
          const json& row = table_row(slab, j, where + ".xi");
          check_table_length(row, mo, where + ".xi");
          for (std::int64_t k = 0; k < mo; ++k)
            out.c3.set_xi(m.at(i), m.at(j), m.at(k),
                          element_from_json(n, row[k], where + ".xi"));
        }
        const json& erow = table_row(eta, i, where + ".eta");
        check_table_length(erow, mo, where + ".eta");
        for (std::int64_t j = 0; j < mo; ++j)
          out.c3.set_eta(m.at(i), m.at(j),
                         element_from_json(n, erow[j], where + ".eta"));
      }
    } else {
      model_fail(where + ": degree must be 1, 2, or 3");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::validation_error) throw;
    model_fail(where + ": " + std::string(error_kind_name(e.kind())) + ": " +
               e.what());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Task validation (parse time): kinds, fields, and name resolution.

void require_name(const ModelFile& model, const json& task,
                  const std::string& key, const char* section,
                  const std::string& where) {
  const std::string name = string_field(task, key, where);
  bool found = false;
  if (std::string(section) == "groups")
    found = model.groups.count(name) != 0;
  else if (std::string(section) == "homs")
    found = model.homs.count(name) != 0;
  else
    found = model.crossed_modules.count(name) != 0;
  if (!found)
    model_fail(where + ": unknown " + std::string(section) + " entry '" +
               name + "'");
}

void validate_task(const ModelFile& model, const json& task,
                   std::size_t index) {
  const std::string where = "task " + std::to_string(index);
  if (!task.is_object()) model_fail(where + ": expected an object");
  const std::string kind = string_field(task, "kind", where);
  if (kind == "cohomology") {
    check_known_keys(task, {"kind", "degree", "M", "N"}, where);
    const std::int64_t degree =
        int_value(require_field(task, "degree", where), where);
    if (degree != 2 && degree != 3)
      model_fail(where + ": degree must be 2 or 3");
    require_name(model, task, "M", "groups", where);
    require_name(model, task, "N", "groups", where);
  } else if (kind == "reduce") {
    check_known_keys(task, {"kind", "module", "section"}, where);
    require_name(model, task, "module", "crossed_modules", where);
    if (task.contains("section")) {
      const std::string s = string_field(task, "section", where);
      if (s != "least" && s != "greatest")
        model_fail(where + ": section must be 'least' or 'greatest'");
    }
  } else if (kind == "obstruction" || kind == "functor-classes") {
    check_known_keys(task, {"kind", "source", "target", "phi0", "f"}, where);
    require_name(model, task, "source", "crossed_modules", where);
    require_name(model, task, "target", "crossed_modules", where);
    require_name(model, task, "phi0", "homs", where);
    require_name(model, task, "f", "homs", where);
  } else if (kind == "classify" || kind == "show-extension") {
    check_known_keys(task, {"kind", "module", "Q", "psi"}, where);
    require_name(model, task, "module", "crossed_modules", where);
    require_name(model, task, "Q", "groups", where);
    if (task.contains("psi")) require_name(model, task, "psi", "homs", where);
  } else if (kind == "verify") {
    check_known_keys(task, {"kind", "suite"}, where);
    if (task.contains("suite")) {
      const std::string suite = string_field(task, "suite", where);
      const std::vector<std::string> names = verify_suite_names();
      if (suite != "all" &&
          std::find(names.begin(), names.end(), suite) == names.end())
        model_fail(where + ": unknown verify suite '" + suite + "'");
    }
  } else {
    model_fail(where + ": unknown task kind '" + kind + "'");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Shared JSON shapes.

json group_to_json(const FinAbGroup& g) { return json(g.moduli()); }

json matrix_to_json(const GroupHom& h) { return json(h.matrix()); }

json cochain1_table(const Cochain1& c) {
  json rows = json::array();
  for (std::int64_t i = 0; i < c.domain().order(); ++i)
    rows.push_back(json(c.at(c.domain().at(i)).coords()));
  return rows;
}

json cochain2_table(const Cochain2& c) {
  const std::int64_t mo = c.domain().order();
  json rows = json::array();
  for (std::int64_t i = 0; i < mo; ++i) {
    json row = json::array();
    for (std::int64_t j = 0; j < mo; ++j)
      row.push_back(json(c.at(c.domain().at(i), c.domain().at(j)).coords()));
    rows.push_back(std::move(row));
  }
  return rows;
}

json cochain3_xi_table(const Cochain3Pair& c) {
  const std::int64_t mo = c.domain().order();
  json slabs = json::array();
  for (std::int64_t i = 0; i < mo; ++i) {
    json slab = json::array();
    for (std::int64_t j = 0; j < mo; ++j) {
      json row = json::array();
      for (std::int64_t k = 0; k < mo; ++k)
        row.push_back(json(
            c.xi(c.domain().at(i), c.domain().at(j), c.domain().at(k)).coords()));
      slab.push_back(std::move(row));
    }
    slabs.push_back(std::move(slab));
  }
  return slabs;
}

json cochain3_eta_table(const Cochain3Pair& c) {
  const std::int64_t mo = c.domain().order();
  json rows = json::array();
  for (std::int64_t i = 0; i < mo; ++i) {
    json row = json::array();
    for (std::int64_t j = 0; j < mo; ++j)
      row.push_back(json(c.eta(c.domain().at(i), c.domain().at(j)).coords()));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Parsing.

ModelFile parse_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse_error, e.what());
  }
  if (!doc.is_object())
    fail(ErrorKind::parse_error, "model document must be an object");
  check_known_keys(doc,
                   {"groups", "homs", "crossed_modules", "cochains", "tasks",
                    "header", "results"},
                   "model");

  ModelFile model;
  if (doc.contains("groups")) {
    const json& sec = doc["groups"];
    if (!sec.is_object()) model_fail("groups: expected an object");
    for (auto it = sec.begin(); it != sec.end(); ++it)
      model.groups.emplace(it.key(),
                           group_from_json(it.value(), "group " + it.key()));
  }
  if (doc.contains("homs")) {
    const json& sec = doc["homs"];
    if (!sec.is_object()) model_fail("homs: expected an object");
    for (auto it = sec.begin(); it != sec.end(); ++it) {
      const std::string where = "hom " + it.key();
      const json& v = it.value();
      if (!v.is_object()) model_fail(where + ": expected an object");
      check_known_keys(v, {"dom", "cod", "matrix"}, where);
      const std::string dom = string_field(v, "dom", where);
      const std::string cod = string_field(v, "cod", where);
      if (!model.groups.count(dom))
        model_fail(where + ": unknown group '" + dom + "'");
      if (!model.groups.count(cod))
        model_fail(where + ": unknown group '" + cod + "'");
      const json& mat = require_field(v, "matrix", where);
      if (!mat.is_array()) model_fail(where + ": matrix must be a list of rows");
      std::vector<std::vector<std::int64_t>> entries;
      for (const json& row : mat)
        entries.push_back(int_list(row, where + ".matrix"));
      try {
        model.homs.emplace(it.key(), GroupHom(model.groups.at(dom),
                                              model.groups.at(cod),
                                              std::move(entries)));
      } catch (const Error& e) {
        model_fail(where + ": " + std::string(error_kind_name(e.kind())) +
                   ": " + e.what());
      }
    }
  }
  if (doc.contains("crossed_modules")) {
    const json& sec = doc["crossed_modules"];
    if (!sec.is_object()) model_fail("crossed_modules: expected an object");
    for (auto it = sec.begin(); it != sec.end(); ++it) {
      const std::string where = "crossed module " + it.key();
      const json& v = it.value();
      if (!v.is_object()) model_fail(where + ": expected an object");
      check_known_keys(v, {"B", "D", "d"}, where);
      const std::string bn = string_field(v, "B", where);
      const std::string dn = string_field(v, "D", where);
      const std::string hn = string_field(v, "d", where);
      if (!model.groups.count(bn))
        model_fail(where + ": unknown group '" + bn + "'");
      if (!model.groups.count(dn))
        model_fail(where + ": unknown group '" + dn + "'");
      auto hom = model.homs.find(hn);
      if (hom == model.homs.end())
        model_fail(where + ": unknown hom '" + hn + "'");
      if (hom->second.src() != model.groups.at(bn))
        model_fail(where + ": boundary domain does not match B");
      if (hom->second.tgt() != model.groups.at(dn))
        model_fail(where + ": boundary codomain does not match D");
      try {
        model.crossed_modules.emplace(it.key(), AbCrossedModule(hom->second));
      } catch (const Error& e) {
        model_fail(where + ": " + std::string(error_kind_name(e.kind())) +
                   ": " + e.what());
      }
    }
  }
  if (doc.contains("cochains")) {
    const json& sec = doc["cochains"];
    if (!sec.is_object()) model_fail("cochains: expected an object");
    for (auto it = sec.begin(); it != sec.end(); ++it)
      model.cochains.emplace(
          it.key(),
          cochain_from_json(it.value(), "cochain " + it.key(), model.groups));
  }
  model.tasks = json::array();
  if (doc.contains("tasks")) {
    if (!doc["tasks"].is_array()) model_fail("tasks: expected a list");
    model.tasks = doc["tasks"];
  }
  for (std::size_t i = 0; i < model.tasks.size(); ++i)
    validate_task(model, model.tasks[i], i);
  return model;
}

// ---------------------------------------------------------------------------
// Task execution and report assembly.

namespace {

struct Emitter {
  json groups = json::object();
  json homs = json::object();
  json cochains = json::object();

  void group(const std::string& name, const FinAbGroup& g) {
    groups[name] = group_to_json(g);
  }
  void hom(const std::string& name, const GroupHom& h) {
    group(name + ".dom", h.src());
    group(name + ".cod", h.tgt());
    homs[name] = json{{"dom", name + ".dom"},
                      {"cod", name + ".cod"},
                      {"matrix", matrix_to_json(h)}};
  }
  void pair_names(const std::string& name, const FinAbGroup& dom,
                  const FinAbGroup& cod, json& out) {
    group(name + ".dom", dom);
    group(name + ".cod", cod);
    out["dom"] = name + ".dom";
    out["cod"] = name + ".cod";
  }
  void cochain1(const std::string& name, const Cochain1& c) {
    json d{{"degree", 1}, {"table", cochain1_table(c)}};
    pair_names(name, c.domain(), c.values(), d);
    cochains[name] = std::move(d);
  }
  void cochain2(const std::string& name, const Cochain2& c) {
    json d{{"degree", 2}, {"table", cochain2_table(c)}};
    pair_names(name, c.domain(), c.values(), d);
    cochains[name] = std::move(d);
  }
  void cochain3(const std::string& name, const Cochain3Pair& c) {
    json d{{"degree", 3},
           {"xi", cochain3_xi_table(c)},
           {"eta", cochain3_eta_table(c)}};
    pair_names(name, c.domain(), c.values(), d);
    cochains[name] = std::move(d);
  }
};

struct TaskRunner {
  const ModelFile& model;
  const Limits& limits;
  Emitter em;
  json results = json::array();
  std::vector<std::string> human;

  const FinAbGroup& group(const json& task, const std::string& key) const {
    return model.groups.at(task.at(key).get<std::string>());
  }
  const GroupHom& hom(const json& task, const std::string& key) const {
    return model.homs.at(task.at(key).get<std::string>());
  }
  const AbCrossedModule& module(const json& task,
                                const std::string& key) const {
    return model.crossed_modules.at(task.at(key).get<std::string>());
  }

  void line(const std::string& s) { human.push_back(s); }

  json run_cohomology(const json& task, const std::string& prefix) {
    const FinAbGroup& m = group(task, "M");
    const FinAbGroup& n = group(task, "N");
    const int degree = task.at("degree").get<int>();
    CohomologyGroup h = sym_cohomology(degree, m, n, limits);
    em.group(prefix + ".group", h.group());
    line("  group: " + h.group().to_string() + " (order " +
         std::to_string(h.group().order()) + ")");
    return json{{"degree", degree},
                {"group", group_to_json(h.group())},
                {"order", h.group().order()}};
  }

  json run_reduce(const json& task, const std::string& prefix) {
    const AbCrossedModule& m = module(task, "module");
    SectionChoice choice = SectionChoice::least_representative;
    if (task.contains("section") && task.at("section") == "greatest")
      choice = SectionChoice::greatest_representative;
    ReducedPicard r = reduce(picard_of(m), choice, limits);
    em.cochain3(prefix + ".k", r.k);
    line("  pi0: " + r.m.to_string() + "  pi1: " + r.n.to_string() +
         "  k zero: " + (r.k.is_zero() ? "yes" : "no"));
    return json{{"pi0", group_to_json(r.m)},
                {"pi1", group_to_json(r.n)},
                {"k-is-zero", r.k.is_zero()}};
  }

  // Reduced data of source and target with the least sections, the functor
  // type from the named homs, and its degree-3 obstruction class.
  json run_obstruction(const json& task, const std::string& prefix) {
    ReducedPicard s = reduce(picard_of(module(task, "source")),
                             SectionChoice::least_representative, limits);
    ReducedPicard sp = reduce(picard_of(module(task, "target")),
                              SectionChoice::least_representative, limits);
    FunctorTypePair t{hom(task, "phi0"), hom(task, "f")};
    Cochain3Pair obs = obstruction(t, s, sp);
    CohomologyGroup h3 = sym_cohomology(3, s.m, sp.n, limits);
    GroupElement cls = h3.class_of(obs);
    const bool realizable = is_realizable(t, s, sp, limits);
    em.cochain3(prefix + ".obstruction", obs);
    em.group(prefix + ".h3", h3.group());
    line(std::string("  obstruction class: ") +
         (cls.is_zero() ? "zero" : cls.to_string()) + " in " +
         h3.group().to_string() +
         (realizable ? " (realizable)" : " (not realizable)"));
    return json{{"class", json(cls.coords())},
                {"h3", group_to_json(h3.group())},
                {"zero", cls.is_zero()},
                {"realizable", realizable}};
  }

  GroupHom classify_psi(const json& task, const AbCrossedModule& m,
                        const std::string& where) {
    if (task.contains("psi")) return hom(task, "psi");
    const FinAbGroup& q = group(task, "Q");
    if (q != m.pi0())
      model_fail(where +
                 ": psi omitted but Q differs from the quotient invariant " +
                 m.pi0().to_string());
    return GroupHom::identity(m.pi0());
  }

  json run_classify(const json& task, const std::string& prefix,
                    const std::string& where) {
    const AbCrossedModule& m = module(task, "module");
    const FinAbGroup& q = group(task, "Q");
    GroupHom psi = classify_psi(task, m, where);
    if (psi.src() != q)
      model_fail(where + ": psi domain " + psi.src().to_string() +
                 " does not match Q " + q.to_string());
    ClassificationResult cr = classify_extensions(m, psi, limits);
    json out{{"obstructed", cr.obstructed()},
             {"count", cr.classes.size()}};
    if (cr.h2) {
      out["h2"] = group_to_json(cr.h2->group());
      em.group(prefix + ".h2", cr.h2->group());
    }
    line(std::string("  obstruction: ") +
         (cr.obstructed() ? "nonzero (no extensions)" : "zero"));
    json classes = json::array();
    for (std::size_t i = 0; i < cr.classes.size(); ++i) {
      const Extension& e = cr.classes[i];
      const std::string base = prefix + ".class" + std::to_string(i);
      em.cochain2(base + ".f", e.f);
      em.cochain1(base + ".fmap", e.fmap);
      FinAbGroup total = total_group_type(e);
      classes.push_back(json{{"label", i},
                             {"total", group_to_json(total)},
                             {"f", base + ".f"},
                             {"fmap", base + ".fmap"}});
      line("  class " + std::to_string(i) + ": total " + total.to_string() +
           (e.f.is_zero() ? " (split cocycle)" : ""));
    }
    out["classes"] = std::move(classes);
    return out;
  }

  json run_show_extension(const json& task, const std::string& prefix,
                          const std::string& where) {
    const AbCrossedModule& m = module(task, "module");
    const FinAbGroup& q = group(task, "Q");
    GroupHom psi = classify_psi(task, m, where);
    if (psi.src() != q)
      model_fail(where + ": psi domain " + psi.src().to_string() +
                 " does not match Q " + q.to_string());
    ClassificationResult cr = classify_extensions(m, psi, limits);
    if (cr.obstructed()) {
      line("  obstructed: no extensions of this type exist");
      return json{{"obstructed", true}};
    }
    const Extension& e = cr.classes.at(0);
    em.cochain2(prefix + ".f", e.f);
    em.cochain1(prefix + ".fmap", e.fmap);
    em.hom(prefix + ".psi", induced_psi(e));
    FinAbGroup total = total_group_type(e);
    line("  total group: " + total.to_string());
    line(std::string("  cocycle: ") + (e.f.is_zero() ? "zero" : "nonzero") +
         "  section additive: " + (e.f.is_zero() ? "yes" : "no"));
    return json{{"obstructed", false},
                {"total", group_to_json(total)},
                {"f", prefix + ".f"},
                {"fmap", prefix + ".fmap"},
                {"psi", prefix + ".psi"}};
  }

  json run_functor_classes(const json& task, const std::string& prefix) {
    ReducedPicard s = reduce(picard_of(module(task, "source")),
                             SectionChoice::least_representative, limits);
    ReducedPicard sp = reduce(picard_of(module(task, "target")),
                              SectionChoice::least_representative, limits);
    FunctorTypePair t{hom(task, "phi0"), hom(task, "f")};
    std::vector<ReducedFunctor> fc = functor_classes(t, s, sp, limits);
    json names = json::array();
    for (std::size_t i = 0; i < fc.size(); ++i) {
      const std::string name = prefix + ".class" + std::to_string(i) + ".g";
      em.cochain2(name, fc[i].g);
      names.push_back(name);
    }
    line("  homotopy classes: " + std::to_string(fc.size()));
    return json{{"count", fc.size()}, {"classes", std::move(names)}};
  }

  json run_verify(const json& task) {
    const std::string suite =
        task.contains("suite") ? task.at("suite").get<std::string>() : "all";
    std::vector<PropertyResult> rs;
    if (suite == "all")
      rs = run_verify_suites(limits);
    else
      rs.push_back(run_verify_suite(suite, limits));
    json suites = json::array();
    for (const PropertyResult& r : rs) {
      json values = json::object();
      for (const auto& [k, v] : r.values) values[k] = v;
      suites.push_back(json{{"name", r.name},
                            {"pass", r.pass},
                            {"detail", r.detail},
                            {"values", std::move(values)}});
      line(std::string("  ") + (r.pass ? "PASS " : "FAIL ") + r.name);
      if (!r.pass) line("    counterexample: " + r.detail);
      for (const auto& [k, v] : r.values) line("    " + k + " = " + v);
    }
    return json{{"suites", std::move(suites)}};
  }
};

std::string task_summary(const json& task) {
  std::ostringstream os;
  os << task.at("kind").get<std::string>();
  for (auto it = task.begin(); it != task.end(); ++it) {
    if (it.key() == "kind") continue;
    os << " " << it.key() << "=";
    if (it.value().is_string())
      os << it.value().get<std::string>();
    else
      os << it.value().dump();
  }
  return os.str();
}

}  // namespace

std::string run_model(const ModelFile& model, bool machine,
                      const Limits& limits) {
  TaskRunner runner{model, limits};
  runner.human.push_back(std::string(kToolName) + " " + kToolVersion);
  for (std::size_t i = 0; i < model.tasks.size(); ++i) {
    const json& task = model.tasks[i];
    const std::string kind = task.at("kind").get<std::string>();
    const std::string prefix = "t" + std::to_string(i);
    const std::string where = "task " + std::to_string(i) + " (" + kind + ")";
    runner.line("task " + std::to_string(i) + ": " + task_summary(task));
    json payload;
    try {
      if (kind == "cohomology")
        payload = runner.run_cohomology(task, prefix);
      else if (kind == "reduce")
        payload = runner.run_reduce(task, prefix);
      else if (kind == "obstruction")
        payload = runner.run_obstruction(task, prefix);
      else if (kind == "classify")
        payload = runner.run_classify(task, prefix, where);
      else if (kind == "show-extension")
        payload = runner.run_show_extension(task, prefix, where);
      else if (kind == "functor-classes")
        payload = runner.run_functor_classes(task, prefix);
      else
        payload = runner.run_verify(task);
    } catch (const Error& e) {
      fail(e.kind(), where + ": " + e.what());
    }
    payload["task"] = i;
    payload["kind"] = kind;
    runner.results.push_back(std::move(payload));
  }

  if (!machine) {
    std::ostringstream os;
    for (const std::string& l : runner.human) os << l << "\n";
    return os.str();
  }
  json report = json::object();
  report["header"] = json{{"tool", kToolName}, {"version", kToolVersion}};
  if (!runner.em.groups.empty()) report["groups"] = runner.em.groups;
  if (!runner.em.homs.empty()) report["homs"] = runner.em.homs;
  if (!runner.em.cochains.empty()) report["cochains"] = runner.em.cochains;
  report["results"] = runner.results;
  return report.dump(2) + "\n";
}

std::string seed_corpus_text() {
  json doc;
  doc["groups"] = json{{"B2", {2}}, {"D2", {2}}, {"D4", {4}},
                       {"Q2", {2}}, {"N3", {3}}};
  doc["homs"] = json{
      {"zero", {{"dom", "B2"}, {"cod", "D2"}, {"matrix", {{0}}}}},
      {"twice", {{"dom", "B2"}, {"cod", "D4"}, {"matrix", {{2}}}}},
      {"idq", {{"dom", "Q2"}, {"cod", "Q2"}, {"matrix", {{1}}}}}};
  doc["crossed_modules"] =
      json{{"flat", {{"B", "B2"}, {"D", "D2"}, {"d", "zero"}}},
           {"embed", {{"B", "B2"}, {"D", "D4"}, {"d", "twice"}}}};
  doc["cochains"] = json{{"point",
                          {{"degree", 2},
                           {"dom", "Q2"},
                           {"cod", "B2"},
                           {"table", {{{0}, {0}}, {{0}, {1}}}}}}};
  doc["tasks"] = json::array(
      {json{{"kind", "cohomology"}, {"degree", 2}, {"M", "Q2"}, {"N", "B2"}},
       json{{"kind", "cohomology"}, {"degree", 3}, {"M", "Q2"}, {"N", "B2"}},
       json{{"kind", "cohomology"}, {"degree", 2}, {"M", "Q2"}, {"N", "N3"}},
       json{{"kind", "reduce"}, {"module", "embed"}},
       json{{"kind", "reduce"}, {"module", "flat"}, {"section", "greatest"}},
       json{{"kind", "obstruction"},
            {"source", "flat"},
            {"target", "flat"},
            {"phi0", "idq"},
            {"f", "idq"}},
       json{{"kind", "classify"},
            {"module", "flat"},
            {"Q", "Q2"},
            {"psi", "idq"}},
       json{{"kind", "classify"}, {"module", "embed"}, {"Q", "Q2"}},
       json{{"kind", "show-extension"}, {"module", "embed"}, {"Q", "Q2"}},
       json{{"kind", "functor-classes"},
            {"source", "flat"},
            {"target", "flat"},
            {"phi0", "idq"},
            {"f", "idq"}},
       json{{"kind", "verify"}, {"suite", "all"}}});
  return doc.dump(2) + "\n";
}

}  // namespace abcross
