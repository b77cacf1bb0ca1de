#include "mlat/corpus.hpp"

namespace mlat {

std::vector<Monoid> default_builtins() {
  return {
      Monoid::finite(trivial_monoid()),
      Monoid::finite(cyclic_group(2)),
      Monoid::finite(cyclic_group(3)),
      Monoid::finite(chain_semilattice(2)),
      Monoid::finite(chain_semilattice(3)),
      Monoid::monogenic(),
      Monoid::bicyclic(),
      Monoid::bicyclic_zero(),
      Monoid::finite(singular_plus_identity(3)),
  };
}

std::vector<Monoid> default_corpus() {
  std::vector<Monoid> corpus = default_builtins();
  const std::vector<Monoid> builtins = default_builtins();
  for (const Monoid& m : builtins) {
    corpus.push_back(Monoid::adjoin_zero(m));
  }
  for (std::size_t i = 0; i < builtins.size(); ++i) {
    for (std::size_t j = i; j < builtins.size(); ++j) {
      corpus.push_back(Monoid::direct_product({builtins[i], builtins[j]}));
    }
  }
  corpus.push_back(Monoid::finite(transformation_monoid(2)));
  corpus.push_back(Monoid::finite(transformation_monoid(3)));
  return corpus;
}

}  // namespace mlat
