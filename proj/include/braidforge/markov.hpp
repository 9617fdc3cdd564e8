#pragma once

// Braid equivalence moves: generator conjugation, (de)stabilization, L-moves,
// braid relations and free reduction, plus a seeded random driver and a
// breadth-first search over the move graph.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/error.hpp"

namespace braidforge {

enum class LMoveKind { Over, Under };

namespace moves {

struct Conjugate {
  int index = 1;
  int sign = 1;
  friend bool operator==(const Conjugate&, const Conjugate&) = default;
};
struct Stabilize {
  int sign = 1;
  friend bool operator==(const Stabilize&, const Stabilize&) = default;
};
struct Destabilize {
  friend bool operator==(const Destabilize&, const Destabilize&) = default;
};
struct LMove {
  LMoveKind kind = LMoveKind::Over;
  int position = 1;
  int depth = 0;
  friend bool operator==(const LMove&, const LMove&) = default;
};
struct Relation {
  std::size_t site = 0;
  RelationKind kind = RelationKind::Commute;
  Direction direction = Direction::Forward;
  friend bool operator==(const Relation&, const Relation&) = default;
};
struct FreeReduce {
  friend bool operator==(const FreeReduce&, const FreeReduce&) = default;
};

} // namespace moves

using MarkovMove = std::variant<moves::Conjugate, moves::Stabilize, moves::Destabilize,
                                moves::LMove, moves::Relation, moves::FreeReduce>;

// Letter signs used by the algebraic L-move. A letter sigma_i that straddles
// the inserted strand becomes sigma_{i+1}^pre sigma_i^e sigma_{i+1}^post, and
// the crossing added inside the box is sigma_i^in_box.
//
// Trying every combination against the closure invariants shows that the
// closure survives exactly when post = -pre, for either in-box sign. With
// (+1, -1) the new strand passes over every letter it meets and with (-1, +1)
// under, which fixes Over and Under. The in-box sign follows the kind.
struct LMoveSignTable {
  struct Entry {
    int pre;
    int post;
    int in_box;
  };
  Entry over{+1, -1, +1};
  Entry under{-1, +1, -1};

  const Entry& operator[](LMoveKind k) const { return k == LMoveKind::Over ? over : under; }

  static const LMoveSignTable& standard() {
    static const LMoveSignTable table;
    return table;
  }
};

inline BraidWord conjugate(const BraidWord& w, int i, int sign) {
  if (i < 1 || i > w.strands() - 1)
    throw InapplicableMove("conjugation index " + std::to_string(i) + " out of range for B" +
                           std::to_string(w.strands()));
  if (sign != 1 && sign != -1)
    throw InapplicableMove("conjugation sign must be +1 or -1");
  std::vector<int> letters;
  letters.reserve(w.length() + 2);
  letters.push_back(-sign * i);
  letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  letters.push_back(sign * i);
  return BraidWord(w.strands(), std::move(letters));
}

inline BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1)
    throw InapplicableMove("stabilization sign must be +1 or -1");
  std::vector<int> letters = w.letters();
  letters.push_back(sign * w.strands());
  return BraidWord(w.strands() + 1, std::move(letters));
}

// Applicable when the free reduction of w uses sigma_{n-1} exactly once, as
// its final letter.
inline std::optional<BraidWord> destabilize(const BraidWord& w) {
  if (w.strands() < 2)
    return std::nullopt;
  const BraidWord r = free_reduce(w);
  const int top = w.strands() - 1;
  if (r.empty() || std::abs(r.letters().back()) != top)
    return std::nullopt;
  for (std::size_t k = 0; k + 1 < r.length(); ++k)
    if (std::abs(r.letters()[k]) == top)
      return std::nullopt;
  std::vector<int> letters(r.letters().begin(), r.letters().end() - 1);
  return BraidWord(w.strands() - 1, std::move(letters));
}

// Cuts strand `position` after `depth` letters and inserts a new strand at
// position+1 that runs over (Over) or under (Under) everything else; the cut
// is closed by one crossing between positions `position` and `position+1`.
inline BraidWord l_move(const BraidWord& w, LMoveKind kind, int position, int depth,
                        const LMoveSignTable& table = LMoveSignTable::standard()) {
  const int n = w.strands();
  if (position < 1 || position > n)
    throw InapplicableMove("L-move position " + std::to_string(position) +
                           " outside 1.." + std::to_string(n));
  if (depth < 0 || depth > static_cast<int>(w.length()))
    throw InapplicableMove("L-move depth " + std::to_string(depth) + " outside 0.." +
                           std::to_string(w.length()));
  const auto& signs = table[kind];
  std::vector<int> out;
  out.reserve(w.length() * 3 + 1);
  auto lift = [&](int g) {
    const int j = std::abs(g);
    const int e = g > 0 ? 1 : -1;
    if (j < position) {
      out.push_back(g);
    } else if (j > position) {
      out.push_back(e * (j + 1));
    } else {
      out.push_back(signs.pre * (j + 1));
      out.push_back(e * j);
      out.push_back(signs.post * (j + 1));
    }
  };
  for (int k = 0; k < depth; ++k)
    lift(w.letters()[k]);
  out.push_back(signs.in_box * position);
  for (std::size_t k = static_cast<std::size_t>(depth); k < w.length(); ++k)
    lift(w.letters()[k]);
  return BraidWord(n + 1, std::move(out));
}

inline BraidWord apply_move(const BraidWord& w, const MarkovMove& move,
                            const LMoveSignTable& table = LMoveSignTable::standard()) {
  struct Visitor {
    const BraidWord& w;
    const LMoveSignTable& table;
    BraidWord operator()(const moves::Conjugate& m) const { return conjugate(w, m.index, m.sign); }
    BraidWord operator()(const moves::Stabilize& m) const { return stabilize(w, m.sign); }
    BraidWord operator()(const moves::Destabilize&) const {
      auto r = destabilize(w);
      if (!r)
        throw InapplicableMove("destabilization does not apply");
      return *r;
    }
    BraidWord operator()(const moves::LMove& m) const {
      return l_move(w, m.kind, m.position, m.depth, table);
    }
    BraidWord operator()(const moves::Relation& m) const {
      return apply_relation(w, m.site, m.kind, m.direction);
    }
    BraidWord operator()(const moves::FreeReduce&) const { return free_reduce(w); }
  };
  return std::visit(Visitor{w, table}, move);
}

inline BraidWord replay(BraidWord w, const std::vector<MarkovMove>& path,
                        const LMoveSignTable& table = LMoveSignTable::standard()) {
  for (const auto& m : path)
    w = apply_move(w, m, table);
  return w;
}

// ---------------------------------------------------------------------------
// Random move sequences

struct WordCaps {
  int max_strands = 6;
  std::size_t max_length = 12;
};

// Uniform integer in [lo, hi] by rejection, so a seed reproduces the same
// draws with any standard library.
inline int draw(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = rng.max() - rng.max() % range;
  std::uint64_t v;
  do
    v = rng();
  while (v >= limit);
  return lo + static_cast<int>(v % range);
}

enum class MoveKind { Conjugate, Stabilize, Destabilize, LMove, Relation, FreeReduce };
inline constexpr int kMoveKindCount = 6;

// Draws parameters for a move of the given kind against `w`. Parameters may
// still be inapplicable; the caller retries.
inline MarkovMove draw_move(std::mt19937_64& rng, const BraidWord& w, MoveKind kind) {
  const int n = w.strands();
  const int len = static_cast<int>(w.length());
  switch (kind) {
  case MoveKind::Conjugate:
    return moves::Conjugate{draw(rng, 1, std::max(1, n - 1)), draw(rng, 0, 1) ? 1 : -1};
  case MoveKind::Stabilize:
    return moves::Stabilize{draw(rng, 0, 1) ? 1 : -1};
  case MoveKind::Destabilize:
    return moves::Destabilize{};
  case MoveKind::LMove:
    return moves::LMove{draw(rng, 0, 1) ? LMoveKind::Over : LMoveKind::Under,
                        draw(rng, 1, n), draw(rng, 0, len)};
  case MoveKind::Relation:
    return moves::Relation{static_cast<std::size_t>(draw(rng, 0, std::max(0, len - 1))),
                           draw(rng, 0, 1) ? RelationKind::YangBaxter : RelationKind::Commute,
                           draw(rng, 0, 1) ? Direction::Backward : Direction::Forward};
  case MoveKind::FreeReduce:
    break;
  }
  return moves::FreeReduce{};
}

// Applies `m` if it is applicable and the result stays within caps.
inline std::optional<BraidWord> try_move(const BraidWord& w, const MarkovMove& m,
                                         const WordCaps& caps,
                                         const LMoveSignTable& table = LMoveSignTable::standard()) {
  try {
    BraidWord r = apply_move(w, m, table);
    if (r.strands() > caps.max_strands || r.length() > caps.max_length)
      return std::nullopt;
    return r;
  } catch (const InapplicableMove&) {
    return std::nullopt;
  }
}

struct MoveSequence {
  BraidWord result;
  std::vector<MarkovMove> moves;
};

// Applies `length` moves; each step draws a move kind uniformly, then its
// parameters, and redraws until the move applies within caps.
inline MoveSequence random_markov_sequence(const BraidWord& w, int length,
                                           const WordCaps& caps, std::uint64_t seed,
                                           const LMoveSignTable& table =
                                               LMoveSignTable::standard()) {
  constexpr int kAttemptsPerStep = 1000;
  std::mt19937_64 rng(seed);
  MoveSequence seq{w, {}};
  for (int step = 0; step < length; ++step) {
    bool applied = false;
    for (int attempt = 0; attempt < kAttemptsPerStep && !applied; ++attempt) {
      const auto kind = static_cast<MoveKind>(draw(rng, 0, kMoveKindCount - 1));
      const MarkovMove m = draw_move(rng, seq.result, kind);
      if (auto r = try_move(seq.result, m, caps, table)) {
        seq.result = std::move(*r);
        seq.moves.push_back(m);
        applied = true;
      }
    }
    if (!applied) {
      // free reduction never grows the word
      seq.result = free_reduce(seq.result);
      seq.moves.push_back(moves::FreeReduce{});
    }
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Bounded search

struct SearchCaps {
  int depth = 3;
  int max_strands = 4;
  std::size_t max_length = 8;
  std::size_t max_states = 200000;
};

struct SearchResult {
  std::optional<std::vector<MarkovMove>> path;
  std::size_t states = 0;
  bool truncated = false; // stopped by max_states rather than by exhaustion
};

struct BraidWordHash {
  std::size_t operator()(const BraidWord& w) const {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(w.strands());
    for (int g : w.letters()) {
      h ^= static_cast<std::uint64_t>(static_cast<std::int64_t>(g));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Every move applicable to `w`, in a fixed order.
inline std::vector<MarkovMove> candidate_moves(const BraidWord& w) {
  std::vector<MarkovMove> out;
  const int n = w.strands();
  const int len = static_cast<int>(w.length());
  for (std::size_t s = 0; s < w.length(); ++s) {
    for (auto kind : {RelationKind::Commute, RelationKind::YangBaxter})
      for (auto dir : {Direction::Forward, Direction::Backward}) {
        if (kind == RelationKind::Commute && dir == Direction::Backward)
          continue;
        if (relation_matches(w.letters(), s, kind, dir))
          out.push_back(moves::Relation{s, kind, dir});
      }
  }
  for (int i = 1; i < n; ++i)
    for (int e : {1, -1})
      out.push_back(moves::Conjugate{i, e});
  out.push_back(moves::Stabilize{1});
  out.push_back(moves::Stabilize{-1});
  if (destabilize(w))
    out.push_back(moves::Destabilize{});
  for (auto kind : {LMoveKind::Over, LMoveKind::Under})
    for (int i = 1; i <= n; ++i)
      for (int d = 0; d <= len; ++d)
        out.push_back(moves::LMove{kind, i, d});
  return out;
}

// Breadth-first search from w1 toward w2. States are identified after free
// reduction, and the returned path inserts FreeReduce wherever a move leaves
// cancelling letters, so replay(w1, path) == free_reduce(w2) letter for
// letter (or the path is empty when w1 == w2). A missing path says nothing
// about inequivalence.
inline SearchResult bounded_equivalence_search(const BraidWord& w1, const BraidWord& w2,
                                               const SearchCaps& caps) {
  SearchResult res;
  if (w1 == w2) {
    res.path = std::vector<MarkovMove>{};
    return res;
  }
  const BraidWord target = free_reduce(w2);

  struct Node {
    BraidWord word;
    int parent;
    std::vector<MarkovMove> via;
    int depth;
  };
  std::vector<Node> nodes;
  std::unordered_map<BraidWord, int, BraidWordHash> seen;

  auto path_to = [&](int idx) {
    std::vector<std::vector<MarkovMove>> segments;
    for (int i = idx; i >= 0; i = nodes[i].parent)
      segments.push_back(nodes[i].via);
    std::vector<MarkovMove> path;
    for (auto it = segments.rbegin(); it != segments.rend(); ++it)
      path.insert(path.end(), it->begin(), it->end());
    return path;
  };

  const BraidWord root = free_reduce(w1);
  std::vector<MarkovMove> root_via;
  if (root != w1)
    root_via.push_back(moves::FreeReduce{});
  nodes.push_back({root, -1, root_via, 0});
  seen.emplace(root, 0);
  res.states = 1;
  if (root == target) {
    res.path = path_to(0);
    return res;
  }

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= caps.depth)
      continue;
    const BraidWord current = nodes[head].word;
    const int next_depth = nodes[head].depth + 1;
    for (const MarkovMove& m : candidate_moves(current)) {
      BraidWord raw = apply_move(current, m);
      BraidWord next = free_reduce(raw);
      if (next.strands() > caps.max_strands || next.length() > caps.max_length)
        continue;
      if (seen.contains(next))
        continue;
      std::vector<MarkovMove> via{m};
      if (next != raw)
        via.push_back(moves::FreeReduce{});
      nodes.push_back({next, static_cast<int>(head), std::move(via), next_depth});
      const int idx = static_cast<int>(nodes.size()) - 1;
      seen.emplace(std::move(next), idx);
      ++res.states;
      if (nodes[idx].word == target) {
        res.path = path_to(idx);
        return res;
      }
      if (res.states >= caps.max_states) {
        res.truncated = true;
        return res;
      }
    }
  }
  return res;
}

inline std::string move_name(const MarkovMove& m) {
  constexpr const char* names[] = {"conjugate", "stabilize", "destabilize",
                                   "l_move",    "relation",  "free_reduce"};
  return names[m.index()];
}

} // namespace braidforge
