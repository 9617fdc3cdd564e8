#pragma once

// Planar diagram codes.
//
// Each crossing lists four arc identifiers in the slot order
//   (under_in, over_in, under_out, over_out)
// together with its sign. Arcs are the edges between consecutive crossing
// passes of the oriented link; they are numbered 1..2c in traversal order.
// Components that meet no crossing are kept only as a count of free loops.

#include <array>
#include <string>
#include <vector>

#include "braidforge/error.hpp"

namespace braidforge {

struct Crossing {
  int under_in = 0;
  int over_in = 0;
  int under_out = 0;
  int over_out = 0;
  int sign = 1;

  std::array<int, 4> arcs() const { return {under_in, over_in, under_out, over_out}; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct PDCode {
  std::vector<Crossing> crossings;
  int free_loops = 0;

  int arc_count() const { return 2 * static_cast<int>(crossings.size()); }
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

// Throws InputError describing the first structural violation.
inline void validate(const PDCode& pd) {
  if (pd.free_loops < 0)
    throw InputError("free_loops must be non-negative");
  const int m = pd.arc_count();
  std::vector<int> as_in(m + 1, 0), as_out(m + 1, 0);
  for (std::size_t k = 0; k < pd.crossings.size(); ++k) {
    const Crossing& x = pd.crossings[k];
    const std::string where = "crossing " + std::to_string(k);
    if (x.sign != 1 && x.sign != -1)
      throw InputError(where + ": sign must be +1 or -1");
    for (int a : x.arcs())
      if (a < 1 || a > m)
        throw InputError(where + ": arc " + std::to_string(a) +
                         " outside 1.." + std::to_string(m));
    ++as_in[x.under_in];
    ++as_in[x.over_in];
    ++as_out[x.under_out];
    ++as_out[x.over_out];
  }
  for (int a = 1; a <= m; ++a)
    if (as_in[a] != 1 || as_out[a] != 1)
      throw InputError("arc " + std::to_string(a) + " appears " +
                       std::to_string(as_in[a]) + "x as incoming and " +
                       std::to_string(as_out[a]) + "x as outgoing");
}

// Sign of a crossing from the planar directions of its two strands
// (x to the right, y upward): +1 when (over x under) points out of the page.
inline int crossing_sign(int over_dx, int over_dy, int under_dx, int under_dy) {
  const int z = over_dx * under_dy - over_dy * under_dx;
  if (z == 0)
    throw InputError("degenerate crossing: strands are parallel");
  return z > 0 ? 1 : -1;
}

// One passage of a component through a crossing.
struct Pass {
  int crossing = 0;
  bool over = false;
};

// Assembles a PD code from the cyclic pass sequence of every component.
// Every crossing must be passed exactly once over and once under. Components
// with no passes become free loops. Arcs are numbered in the order given:
// the arc leaving pass j of a component is the one entering pass j+1.
inline PDCode assemble_pd(const std::vector<std::vector<Pass>>& components,
                          const std::vector<int>& signs) {
  PDCode pd;
  pd.crossings.resize(signs.size());
  std::vector<int> seen_over(signs.size(), 0), seen_under(signs.size(), 0);
  for (std::size_t k = 0; k < signs.size(); ++k)
    pd.crossings[k].sign = signs[k];

  int next_arc = 1;
  for (const auto& passes : components) {
    if (passes.empty()) {
      ++pd.free_loops;
      continue;
    }
    const int first_arc = next_arc;
    const std::size_t len = passes.size();
    for (std::size_t j = 0; j < len; ++j) {
      const Pass& p = passes[j];
      Crossing& x = pd.crossings.at(static_cast<std::size_t>(p.crossing));
      // arc entering pass j was numbered when leaving pass j-1 (cyclically)
      const int in_arc = j == 0 ? first_arc + static_cast<int>(len) - 1 : next_arc - 1;
      const int out_arc = next_arc++;
      if (p.over) {
        ++seen_over[p.crossing];
        x.over_in = in_arc;
        x.over_out = out_arc;
      } else {
        ++seen_under[p.crossing];
        x.under_in = in_arc;
        x.under_out = out_arc;
      }
    }
  }
  for (std::size_t k = 0; k < signs.size(); ++k)
    if (seen_over[k] != 1 || seen_under[k] != 1)
      throw InputError("crossing " + std::to_string(k) +
                       " not passed exactly once over and once under");
  return pd;
}

} // namespace braidforge
