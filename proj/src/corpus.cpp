#include "abcross/corpus.hpp"

#include "abcross/error.hpp"
#include "abcross/hom.hpp"

namespace abcross {

const std::vector<std::int64_t>& corpus_orders() {
  static const std::vector<std::int64_t> orders = {1, 2, 3, 4, 6, 8};
  return orders;
}

std::vector<FinAbGroup> corpus_groups() {
  std::vector<FinAbGroup> out;
  for (std::int64_t n : corpus_orders()) out.push_back(FinAbGroup::cyclic(n));
  out.push_back(FinAbGroup({2, 2}));
  out.push_back(FinAbGroup({2, 4}));
  return out;
}

std::vector<AbCrossedModule> cyclic_corpus() {
  std::vector<AbCrossedModule> out;
  for (std::int64_t a : corpus_orders())
    for (std::int64_t b : corpus_orders()) {
      FinAbGroup src = FinAbGroup::cyclic(a), tgt = FinAbGroup::cyclic(b);
      if (src.is_trivial() || tgt.is_trivial()) {
        out.push_back(AbCrossedModule(GroupHom::zero(src, tgt)));
        continue;
      }
      for (std::int64_t e = 0; e < b; ++e) {
        try {
          out.push_back(AbCrossedModule(GroupHom(src, tgt, {{e}})));
        } catch (const Error&) {
          // entry does not define a homomorphism on the generator
        }
      }
    }
  return out;
}

}  // namespace abcross
