#pragma once

// Random braid-closure diagrams for property checks.

#include <random>
#include <vector>

#include "turaev/diagram.hpp"

namespace turaev {

/// A braid word on `strands` strands with `length` letters that uses every
/// generator at least once, so the closure has a connected projection.
std::vector<int> random_braid_word(std::mt19937_64& rng, int strands, int length);

/// Connected diagram with 1..max_crossings crossings (at least 1).
Diagram random_connected_diagram(std::mt19937_64& rng, int max_crossings);

/// Reduced alternating diagram: odd generators positive, even ones negative,
/// each used at least twice. Needs max_crossings >= 2.
Diagram random_alternating_diagram(std::mt19937_64& rng, int max_crossings);

}  // namespace turaev
