#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "abcross/cochain.hpp"
#include "abcross/crossed_module.hpp"
#include "abcross/fingroup.hpp"
#include "abcross/hom.hpp"
#include "abcross/limits.hpp"

namespace abcross {

inline constexpr const char* kToolName = "abcross";
inline constexpr const char* kToolVersion = "0.1.0";

/// One named cochain table from a model file; `degree` selects which member
/// carries the data.
struct NamedCochain {
  int degree = 0;
  Cochain1 c1;
  Cochain2 c2;
  Cochain3Pair c3;
};

/// A fully validated model file: every declaration resolved and checked,
/// tasks kept in their original order with all references verified.
struct ModelFile {
  std::map<std::string, FinAbGroup> groups;
  std::map<std::string, GroupHom> homs;
  std::map<std::string, AbCrossedModule> crossed_modules;
  std::map<std::string, NamedCochain> cochains;
  nlohmann::json tasks;  // validated array of task records
};

/// Parses and validates a model document. Throws parse_error for malformed
/// text (with location) and validation_error naming the offending object and
/// the first violated rule. The reserved top-level keys "header" and
/// "results" are ignored so that machine reports re-parse as models.
ModelFile parse_model(const std::string& text);

/// JSON shapes shared by the parser, the report writer, and tests.
nlohmann::json group_to_json(const FinAbGroup& g);
nlohmann::json matrix_to_json(const GroupHom& h);
nlohmann::json cochain1_table(const Cochain1& c);
nlohmann::json cochain2_table(const Cochain2& c);
nlohmann::json cochain3_xi_table(const Cochain3Pair& c);
nlohmann::json cochain3_eta_table(const Cochain3Pair& c);

/// Runs every task in order and renders the report. Machine reports are
/// byte-deterministic: results stay in task order and every object keeps its
/// keys sorted; objects produced by tasks are emitted as declarations under
/// "t<index>.*" names so the report re-parses as a model. Module errors are
/// rethrown with the task index and kind attached.
std::string run_model(const ModelFile& model, bool machine,
                      const Limits& limits = Limits{});

/// The built-in demonstration model: exercises every task kind and
/// regenerates the worked examples through the verify task. `--seed-corpus`
/// and the committed corpus file both carry exactly this text.
std::string seed_corpus_text();

}  // namespace abcross
