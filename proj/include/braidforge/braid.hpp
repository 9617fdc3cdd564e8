#pragma once

// Braid words in the Artin presentation of B_n.
//
// A letter g encodes sigma_|g| when g > 0 and its inverse when g < 0. Letters
// are read top to bottom. Positive sigma_i is the crossing in which the strand
// moving from position i to i+1 passes over the strand moving from i+1 to i.

#include <cstdlib>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "braidforge/error.hpp"

namespace braidforge {

class BraidWord {
public:
  BraidWord() = default;

  BraidWord(int strands, std::vector<int> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1)
      throw InputError("braid word needs at least one strand, got " +
                       std::to_string(strands_));
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      const int g = letters_[k];
      if (g == 0 || std::abs(g) > strands_ - 1)
        throw InputError("letter " + std::to_string(g) + " at index " +
                         std::to_string(k) + " out of range for B" +
                         std::to_string(strands_));
    }
  }

  explicit BraidWord(int strands) : BraidWord(strands, {}) {}

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Letter-level equality; group equality is a different question.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

private:
  int strands_ = 1;
  std::vector<int> letters_;
};

// Position map of a braid. images[p-1] is the strand (numbered by its top
// position) that sits at position p after the braid is applied, i.e. the
// result of swapping array entries for each letter in order.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
        throw InputError("permutation images are not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  int operator()(int position) const { return images_.at(position - 1); }

  // Swap the entries at positions i and i+1 (1-based).
  void swap_adjacent(int i) { std::swap(images_.at(i - 1), images_.at(i)); }

  // The permutation obtained by applying *this and then `next` as swap
  // sequences: result[p] = (*this)[next[p]].
  Permutation then(const Permutation& next) const {
    if (next.size() != size())
      throw InputError("permutation size mismatch");
    std::vector<int> img(images_.size());
    for (std::size_t p = 0; p < img.size(); ++p)
      img[p] = images_[next.images_[p] - 1];
    return Permutation(std::move(img));
  }

  int cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    int cycles = 0;
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start])
        continue;
      ++cycles;
      for (std::size_t p = start; !seen[p]; p = images_[p] - 1)
        seen[p] = true;
    }
    return cycles;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

inline BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw InputError("cannot compose B" + std::to_string(a.strands()) +
                     " with B" + std::to_string(b.strands()));
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

inline BraidWord inverse(const BraidWord& a) {
  std::vector<int> letters(a.letters().rbegin(), a.letters().rend());
  for (int& g : letters)
    g = -g;
  return BraidWord(a.strands(), std::move(letters));
}

// Cancels adjacent (g, -g) pairs until none remain. A single stack pass
// reaches the unique fixed point.
inline BraidWord free_reduce(const BraidWord& a) {
  std::vector<int> out;
  out.reserve(a.length());
  for (int g : a.letters()) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return BraidWord(a.strands(), std::move(out));
}

enum class RelationKind { Commute, YangBaxter };
enum class Direction { Forward, Backward };

inline bool relation_matches(std::span<const int> letters, std::size_t site,
                             RelationKind kind, Direction dir) {
  if (kind == RelationKind::Commute) {
    if (site + 2 > letters.size())
      return false;
    return std::abs(std::abs(letters[site]) - std::abs(letters[site + 1])) > 1;
  }
  if (site + 3 > letters.size())
    return false;
  const int a = letters[site], b = letters[site + 1], c = letters[site + 2];
  if (a != c || (a > 0) != (b > 0))
    return false;
  // Forward rewrites (i, i+1, i); Backward rewrites (i+1, i, i+1).
  const int step = dir == Direction::Forward ? 1 : -1;
  return std::abs(b) == std::abs(a) + step;
}

// Rewrites the segment starting at `site` with one side of a braid relation.
// Commute swaps two far-apart letters (direction is immaterial).
// YangBaxter Forward: (e*i, e*(i+1), e*i) -> (e*(i+1), e*i, e*(i+1));
// Backward is the reverse rewrite.
inline BraidWord apply_relation(const BraidWord& a, std::size_t site,
                                RelationKind kind, Direction dir) {
  if (!relation_matches(a.letters(), site, kind, dir))
    throw InapplicableMove(
        std::string(kind == RelationKind::Commute ? "commute" : "yang-baxter") +
        " relation does not match at site " + std::to_string(site));
  std::vector<int> letters = a.letters();
  if (kind == RelationKind::Commute) {
    std::swap(letters[site], letters[site + 1]);
  } else {
    const int outer = letters[site], inner = letters[site + 1];
    letters[site] = inner;
    letters[site + 1] = outer;
    letters[site + 2] = inner;
  }
  return BraidWord(a.strands(), std::move(letters));
}

inline Permutation permutation(const BraidWord& a) {
  Permutation p = Permutation::identity(a.strands());
  for (int g : a.letters())
    p.swap_adjacent(std::abs(g));
  return p;
}

inline int closure_component_count(const BraidWord& a) {
  return permutation(a).cycle_count();
}

inline int exponent_sum(const BraidWord& a) {
  int sum = 0;
  for (int g : a.letters())
    sum += g > 0 ? 1 : -1;
  return sum;
}

inline BraidWord embed(const BraidWord& a, int m) {
  if (m < a.strands())
    throw InputError("cannot embed B" + std::to_string(a.strands()) + " in B" +
                     std::to_string(m));
  return BraidWord(m, a.letters());
}

} // namespace braidforge
