#pragma once

#include <cstdlib>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/pd.hpp"

namespace braidforge {

// PD code of the vertical closure of `w`: strands run downward through the
// letters, and bottom position p is joined to top position p by an arc that
// crosses nothing. Crossing k of the result is letter k of the word.
inline PDCode braid_closure_to_pd(const BraidWord& w) {
  const auto& letters = w.letters();
  std::vector<int> signs;
  signs.reserve(letters.size());
  for (int g : letters) {
    // the strand moving right is over for g > 0; both move downward (dy = -1)
    if (g > 0)
      signs.push_back(crossing_sign(1, -1, -1, -1));
    else
      signs.push_back(crossing_sign(-1, -1, 1, -1));
  }

  std::vector<std::vector<Pass>> components;
  std::vector<bool> visited(static_cast<std::size_t>(w.strands()) + 1, false);
  for (int start = 1; start <= w.strands(); ++start) {
    if (visited[start])
      continue;
    std::vector<Pass> passes;
    int top = start;
    do {
      visited[top] = true;
      int p = top;
      for (std::size_t t = 0; t < letters.size(); ++t) {
        const int g = letters[t];
        const int i = std::abs(g);
        if (p == i) {
          passes.push_back({static_cast<int>(t), g > 0});
          p = i + 1;
        } else if (p == i + 1) {
          passes.push_back({static_cast<int>(t), g < 0});
          p = i;
        }
      }
      top = p;
    } while (top != start);
    components.push_back(std::move(passes));
  }
  return assemble_pd(components, signs);
}

} // namespace braidforge
