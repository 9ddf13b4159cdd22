#pragma once

#include "orbitdual/cli/corpus.hpp"

#include <vector>

namespace orbitdual::testing {

using cli::Instance;

/// 200 seeded (lambda, lattice) instances of rank <= 4 with |lambda|^2 <= 16,
/// mixing random characters with perturbed q-unipotent ones.
std::vector<Instance> oracle_corpus();

} // namespace orbitdual::testing
