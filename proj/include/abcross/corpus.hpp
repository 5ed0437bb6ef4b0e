#pragma once

#include <cstdint>
#include <vector>

#include "abcross/crossed_module.hpp"
#include "abcross/fingroup.hpp"

namespace abcross {

// Orders of the cyclic layers swept by the built-in corpus.
const std::vector<std::int64_t>& corpus_orders();

// Small groups for randomized and exhaustive laws: the cyclic sweep plus two
// rank-two shapes.
std::vector<FinAbGroup> corpus_groups();

// Every crossed module between cyclic layers with orders from
// corpus_orders(): one module per matrix entry that defines a homomorphism.
// Deterministic order: by source order, then target order, then entry.
std::vector<AbCrossedModule> cyclic_corpus();

}  // namespace abcross
