#pragma once

// Alexander braiding of grid diagrams.
//
// A column whose X sits below its O carries an up-arc. Each up-arc is removed
// by one "over" L-braiding move: the segment is cut at the O end and replaced
// by two verticals at the same x-position, one from the top boundary down to
// the O and one from the X down to the bottom boundary. Every vertical of the
// grid now runs downward, and sweeping the rows from top to bottom reads a
// braid on as many strands as there were up-arcs.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/grid.hpp"

namespace braidforge {

enum class BraidingType { Over, Under };

struct BraidingMove {
  int column = 0;
  int o_row = 0;
  int x_row = 0;
  BraidingType type = BraidingType::Over;
  friend bool operator==(const BraidingMove&, const BraidingMove&) = default;
};

struct SweepRecord {
  int row = 0;
  int source_rank = 0;
  int target_rank = 0;
  std::vector<int> letters;
  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct BraidingTrace {
  std::vector<BraidingMove> moves;
  std::vector<SweepRecord> sweep_log;
  friend bool operator==(const BraidingTrace&, const BraidingTrace&) = default;
};

struct BraidingResult {
  BraidWord word;
  BraidingTrace trace;
};

// Occupied x-positions of the downward verticals between two rows, each
// tagged with the braid strand (top rank) it carries.
class SweepState {
public:
  struct Slot {
    int position;
    int strand;
  };

  explicit SweepState(const std::vector<int>& positions) {
    for (std::size_t i = 0; i < positions.size(); ++i)
      slots_.push_back({positions[i], static_cast<int>(i) + 1});
  }

  const std::vector<Slot>& slots() const { return slots_; }
  std::size_t size() const { return slots_.size(); }

  // 1-based rank of `position`, or 0 when unoccupied.
  int rank_of(int position) const {
    auto it = lower_bound(position);
    return it != slots_.end() && it->position == position
               ? static_cast<int>(it - slots_.begin()) + 1
               : 0;
  }

  // Moves the strand at `from` to the empty position `to`; returns the
  // (source, target) ranks.
  std::pair<int, int> jump(int from, int to) {
    const int p = rank_of(from);
    if (p == 0)
      throw std::logic_error("sweep: source position " + std::to_string(from) +
                             " is not occupied");
    if (rank_of(to) != 0)
      throw std::logic_error("sweep: target position " + std::to_string(to) +
                             " is already occupied");
    const int strand = slots_[p - 1].strand;
    slots_.erase(slots_.begin() + (p - 1));
    auto it = slots_.insert(lower_bound(to), Slot{to, strand});
    return {p, static_cast<int>(it - slots_.begin()) + 1};
  }

private:
  std::vector<Slot>::const_iterator lower_bound(int position) const {
    return std::lower_bound(slots_.begin(), slots_.end(), position,
                            [](const Slot& s, int v) { return s.position < v; });
  }
  std::vector<Slot>::iterator lower_bound(int position) {
    return std::lower_bound(slots_.begin(), slots_.end(), position,
                            [](const Slot& s, int v) { return s.position < v; });
  }

  std::vector<Slot> slots_;
};

inline std::vector<int> find_up_arcs(const GridDiagram& g) {
  std::vector<int> up;
  for (int c = 1; c <= g.size(); ++c)
    if (column_orientation(g, c) == ColumnOrientation::Up)
      up.push_back(c);
  return up;
}

inline int strand_count(const GridDiagram& g) {
  return static_cast<int>(find_up_arcs(g).size());
}

// Letters emitted when the strand at rank p moves to rank q under the
// verticals in between.
inline std::vector<int> jump_letters(int p, int q) {
  std::vector<int> out;
  if (q > p)
    for (int j = p; j < q; ++j)
      out.push_back(-j);
  else
    for (int j = p - 1; j >= q; --j)
      out.push_back(j);
  return out;
}

inline BraidingResult braid_from_grid(const GridDiagram& g) {
  const std::vector<int> up = find_up_arcs(g);
  if (up.empty())
    throw std::logic_error("grid without an up-arc cannot close up");

  BraidingResult result;
  for (int c : up)
    result.trace.moves.push_back({c, g.orow(c), g.xrow(c), BraidingType::Over});

  SweepState state(up);
  std::vector<int> letters;
  for (int r = 1; r <= g.size(); ++r) {
    const auto [p, q] = state.jump(g.ocol(r), g.xcol(r));
    SweepRecord rec{r, p, q, jump_letters(p, q)};
    letters.insert(letters.end(), rec.letters.begin(), rec.letters.end());
    result.trace.sweep_log.push_back(std::move(rec));
  }

  // the verticals leaving the bottom row are again exactly the up columns
  for (std::size_t i = 0; i < up.size(); ++i)
    if (state.slots()[i].position != up[i])
      throw std::logic_error("sweep ended on positions that differ from the start");

  result.word = BraidWord(static_cast<int>(up.size()), std::move(letters));
  return result;
}

} // namespace braidforge
