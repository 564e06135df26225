#include "turaev/random.hpp"

#include <algorithm>

namespace turaev {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

std::vector<int> random_braid_word(std::mt19937_64& rng, int strands, int length) {
  if (strands < 2 || length < strands - 1) throw DiagramError("braid word too short to use every generator");
  std::vector<int> word;
  for (int g = 1; g < strands; ++g) word.push_back(g);
  while (static_cast<int>(word.size()) < length) word.push_back(uniform(rng, 1, strands - 1));
  std::shuffle(word.begin(), word.end(), rng);
  for (int& g : word)
    if (uniform(rng, 0, 1)) g = -g;
  return word;
}

Diagram random_connected_diagram(std::mt19937_64& rng, int max_crossings) {
  if (max_crossings < 1) throw DiagramError("need at least one crossing");
  const int strands = uniform(rng, 2, std::clamp(max_crossings + 1, 2, 4));
  const int length = uniform(rng, std::max(1, strands - 1), max_crossings);
  return braid_closure(strands, random_braid_word(rng, strands, length));
}

Diagram random_alternating_diagram(std::mt19937_64& rng, int max_crossings) {
  if (max_crossings < 2) throw DiagramError("need at least two crossings");
  const int strands = uniform(rng, 2, std::clamp(max_crossings / 2 + 1, 2, 4));
  const int length = uniform(rng, 2 * (strands - 1), max_crossings);
  std::vector<int> word;
  for (int g = 1; g < strands; ++g) word.insert(word.end(), {g, g});
  while (static_cast<int>(word.size()) < length) word.push_back(uniform(rng, 1, strands - 1));
  std::shuffle(word.begin(), word.end(), rng);
  for (int& g : word)
    if (g % 2 == 0) g = -g;
  return braid_closure(strands, word);
}

}  // namespace turaev
