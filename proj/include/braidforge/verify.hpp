#pragma once

// Oracle checks shared by the CLI and the test suites.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/braiding.hpp"
#include "braidforge/closure.hpp"
#include "braidforge/grid.hpp"
#include "braidforge/invariants.hpp"
#include "braidforge/markov.hpp"

namespace braidforge {

inline InvariantRecord closure_record(const BraidWord& w, int cap = kDefaultStateSumCap) {
  return invariant_record(braid_closure_to_pd(w), cap);
}

struct BraidingCheck {
  BraidingResult braiding;
  InvariantRecord grid_record;
  InvariantRecord braid_record;
  bool agree = false;
};

// Braids `g` and compares the invariants of the grid with those of the
// closed braid.
inline BraidingCheck check_braiding(const GridDiagram& g, int cap = kDefaultStateSumCap) {
  BraidingCheck out{braid_from_grid(g), invariant_record(grid_to_pd(g), cap), {}, false};
  out.braid_record = closure_record(out.braiding.word, cap);
  out.agree = invariants_agree(out.grid_record, out.braid_record);
  return out;
}

inline BraidWord random_word(std::mt19937_64& rng, int strands, int length) {
  std::vector<int> letters;
  if (strands >= 2)
    for (int k = 0; k < length; ++k) {
      const int i = draw(rng, 1, strands - 1);
      letters.push_back(draw(rng, 0, 1) ? i : -i);
    }
  return BraidWord(strands, std::move(letters));
}

// Uniformly random valid grid of size n (collisions are redrawn).
inline GridDiagram random_grid(std::mt19937_64& rng, int n) {
  auto shuffled = [&] {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      v[i] = i + 1;
    for (int i = n - 1; i > 0; --i)
      std::swap(v[i], v[draw(rng, 0, i)]);
    return v;
  };
  for (;;) {
    std::vector<int> x = shuffled(), o = shuffled();
    bool ok = true;
    for (int r = 0; r < n && ok; ++r)
      ok = x[r] != o[r];
    if (ok)
      return GridDiagram(std::move(x), std::move(o));
  }
}

struct FuzzConfig {
  int cases = 100;
  std::uint64_t seed = 1;
  int steps = 10;
  WordCaps caps;
  int state_sum_cap = kDefaultStateSumCap;
  LMoveSignTable table = LMoveSignTable::standard();
};

struct Counterexample {
  int case_index = 0;
  BraidWord before;
  MarkovMove move;
  BraidWord after;
  InvariantRecord before_record;
  InvariantRecord after_record;
};

struct FuzzReport {
  int cases_run = 0;
  std::optional<Counterexample> failure;
};

// Seed of case k, decorrelated from neighbouring seeds.
inline std::uint64_t case_seed(std::uint64_t seed, int k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Runs random move sequences and stops at the first case whose end word has
// different closure invariants; the failure is narrowed to the single move
// where the invariants first change.
inline FuzzReport fuzz(const FuzzConfig& cfg) {
  FuzzReport report;
  for (int k = 0; k < cfg.cases; ++k) {
    std::mt19937_64 rng(case_seed(cfg.seed, k));
    const int strands = draw(rng, 1, cfg.caps.max_strands);
    const int length = draw(rng, 0, static_cast<int>(cfg.caps.max_length));
    const BraidWord start = random_word(rng, strands, length);
    const MoveSequence seq =
        random_markov_sequence(start, cfg.steps, cfg.caps, rng(), cfg.table);
    ++report.cases_run;

    const InvariantRecord ref = closure_record(start, cfg.state_sum_cap);
    if (invariants_agree(ref, closure_record(seq.result, cfg.state_sum_cap)))
      continue;

    BraidWord w = start;
    InvariantRecord w_rec = ref;
    for (const MarkovMove& m : seq.moves) {
      BraidWord next = apply_move(w, m, cfg.table);
      InvariantRecord next_rec = closure_record(next, cfg.state_sum_cap);
      if (!invariants_agree(w_rec, next_rec)) {
        report.failure = Counterexample{k, w, m, next, w_rec, next_rec};
        return report;
      }
      w = std::move(next);
      w_rec = std::move(next_rec);
    }
    throw std::logic_error("closure invariants changed with no failing step");
  }
  return report;
}

} // namespace braidforge
