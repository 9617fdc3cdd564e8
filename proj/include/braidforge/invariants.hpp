#pragma once

// Link invariants computed from PD codes only. Nothing here looks at braid
// words, so agreement between a braid closure and another diagram is an
// independent check on the braid-side constructions.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "braidforge/error.hpp"
#include "braidforge/laurent.hpp"
#include "braidforge/pd.hpp"

namespace braidforge {

inline constexpr int kDefaultStateSumCap = 24;

using LinkingMatrix = std::vector<std::vector<int>>;

struct InvariantRecord {
  int components = 0;
  int writhe = 0;
  LaurentPoly normalized_bracket;
  LinkingMatrix linking_matrix;
  int seifert_circles = 0;
};

namespace detail {

// Small union-find over arc ids 0..m.
class ArcForest {
public:
  explicit ArcForest(int m) : parent_(static_cast<std::size_t>(m) + 1) { reset(); }

  void reset() { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  // Returns true when two distinct classes were merged.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent_[a] = b;
    return true;
  }

private:
  std::vector<int> parent_;
};

// Number of closed loops when every crossing is resolved by the given
// pairing of its slots (free loops excluded).
template <class PairsFor>
int count_loops(const PDCode& pd, ArcForest& forest, PairsFor pairs_for) {
  forest.reset();
  int loops = pd.arc_count();
  for (std::size_t k = 0; k < pd.crossings.size(); ++k) {
    const auto [p, q] = pairs_for(k);
    loops -= forest.unite(p.first, p.second);
    loops -= forest.unite(q.first, q.second);
  }
  return loops;
}

using SlotPair = std::pair<int, int>;
using Smoothing = std::pair<SlotPair, SlotPair>;

// The A-smoothing joins each under endpoint to the over endpoint that follows
// it counterclockwise. With the slot order fixed, which over endpoint that is
// depends on the crossing sign.
inline Smoothing a_smoothing(const Crossing& x) {
  if (x.sign > 0)
    return {{x.under_out, x.over_in}, {x.under_in, x.over_out}};
  return {{x.under_out, x.over_out}, {x.under_in, x.over_in}};
}

inline Smoothing b_smoothing(const Crossing& x) {
  if (x.sign > 0)
    return {{x.under_in, x.over_in}, {x.under_out, x.over_out}};
  return {{x.under_in, x.over_out}, {x.under_out, x.over_in}};
}

// Smoothing that respects orientation: each incoming arc joins the outgoing
// arc of the other strand.
inline Smoothing oriented_smoothing(const Crossing& x) {
  return {{x.under_in, x.over_out}, {x.over_in, x.under_out}};
}

} // namespace detail

inline int writhe(const PDCode& pd) {
  int w = 0;
  for (const Crossing& x : pd.crossings)
    w += x.sign;
  return w;
}

// delta = -A^2 - A^-2
inline LaurentPoly loop_value() {
  return LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
}

// State sum over all 2^c smoothings. The empty diagram is assigned 1.
inline LaurentPoly kauffman_bracket(const PDCode& pd, int cap = kDefaultStateSumCap) {
  const int c = static_cast<int>(pd.crossings.size());
  if (c > cap)
    throw ResourceError("state sum over " + std::to_string(c) +
                        " crossings exceeds the cap of " + std::to_string(cap));
  if (c == 0 && pd.free_loops == 0)
    return LaurentPoly::constant(1);

  std::vector<detail::Smoothing> smooth_a, smooth_b;
  for (const Crossing& x : pd.crossings) {
    smooth_a.push_back(detail::a_smoothing(x));
    smooth_b.push_back(detail::b_smoothing(x));
  }

  // histogram[a * stride + loops] counts states with `a` A-smoothings
  const int max_loops = pd.arc_count() + 1;
  const int stride = max_loops + 1;
  const std::uint64_t states = std::uint64_t{1} << c;

  auto sweep = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::int64_t> hist(static_cast<std::size_t>((c + 1) * stride), 0);
    detail::ArcForest forest(pd.arc_count());
    for (std::uint64_t s = begin; s < end; ++s) {
      const int loops = detail::count_loops(pd, forest, [&](std::size_t k) {
        return (s >> k) & 1 ? smooth_b[k] : smooth_a[k];
      });
      const int b = std::popcount(s);
      ++hist[static_cast<std::size_t>((c - b) * stride + loops)];
    }
    return hist;
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = c >= 16 ? std::min<unsigned>(hw, 16) : 1;
  std::vector<std::vector<std::int64_t>> partial(workers);
  if (workers == 1) {
    partial[0] = sweep(0, states);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (states + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        const std::uint64_t lo = std::min(states, w * chunk);
        const std::uint64_t hi = std::min(states, lo + chunk);
        partial[w] = sweep(lo, hi);
      });
    for (auto& t : pool)
      t.join();
  }

  std::vector<std::int64_t> hist(static_cast<std::size_t>((c + 1) * stride), 0);
  for (const auto& h : partial)
    for (std::size_t i = 0; i < h.size(); ++i)
      hist[i] += h[i];

  const LaurentPoly delta = loop_value();
  std::vector<LaurentPoly> delta_pow(static_cast<std::size_t>(max_loops + pd.free_loops + 1));
  delta_pow[0] = LaurentPoly::constant(1);
  for (std::size_t i = 1; i < delta_pow.size(); ++i)
    delta_pow[i] = delta_pow[i - 1] * delta;

  LaurentPoly result;
  for (int a = 0; a <= c; ++a)
    for (int loops = 0; loops <= max_loops; ++loops) {
      const std::int64_t count = hist[static_cast<std::size_t>(a * stride + loops)];
      if (count == 0)
        continue;
      const int total = loops + pd.free_loops;
      result += LaurentPoly::monomial(a - (c - a), count) * delta_pow[total - 1];
    }
  return result;
}

// (-A^3)^{-writhe} * <D>
inline LaurentPoly normalized_bracket(const PDCode& pd, int cap = kDefaultStateSumCap) {
  const int w = writhe(pd);
  const std::int64_t unit_sign = (w % 2 == 0) ? 1 : -1;
  return LaurentPoly::monomial(-3 * w, unit_sign) * kauffman_bracket(pd, cap);
}

// Component label of every arc (index 0 unused) from strand continuity at
// each crossing. Labels follow the smallest arc id of each component.
inline std::vector<int> arc_components(const PDCode& pd, int* count = nullptr) {
  detail::ArcForest forest(pd.arc_count());
  for (const Crossing& x : pd.crossings) {
    forest.unite(x.under_in, x.under_out);
    forest.unite(x.over_in, x.over_out);
  }
  std::vector<int> label(static_cast<std::size_t>(pd.arc_count()) + 1, -1);
  std::vector<int> root_label(static_cast<std::size_t>(pd.arc_count()) + 1, -1);
  int next = 0;
  for (int a = 1; a <= pd.arc_count(); ++a) {
    const int r = forest.find(a);
    if (root_label[r] < 0)
      root_label[r] = next++;
    label[a] = root_label[r];
  }
  if (count)
    *count = next;
  return label;
}

inline int component_count(const PDCode& pd) {
  int n = 0;
  arc_components(pd, &n);
  return n + pd.free_loops;
}

// Entry (i, j) is half the signed count of crossings between components i
// and j. Free loops come last and have zero rows.
inline LinkingMatrix linking_matrix(const PDCode& pd) {
  int traced = 0;
  const std::vector<int> label = arc_components(pd, &traced);
  const int n = traced + pd.free_loops;
  LinkingMatrix twice(n, std::vector<int>(n, 0));
  for (const Crossing& x : pd.crossings) {
    const int i = label[x.under_in], j = label[x.over_in];
    if (i != j) {
      twice[i][j] += x.sign;
      twice[j][i] += x.sign;
    }
  }
  for (auto& row : twice)
    for (int& v : row) {
      if (v % 2 != 0)
        throw InputError("odd crossing sum between two components: diagram is not planar");
      v /= 2;
    }
  return twice;
}

inline int seifert_circle_count(const PDCode& pd) {
  detail::ArcForest forest(pd.arc_count());
  const int loops = detail::count_loops(pd, forest, [&](std::size_t k) {
    return detail::oriented_smoothing(pd.crossings[k]);
  });
  return loops + pd.free_loops;
}

inline InvariantRecord invariant_record(const PDCode& pd, int cap = kDefaultStateSumCap) {
  InvariantRecord rec;
  rec.components = component_count(pd);
  rec.writhe = writhe(pd);
  rec.normalized_bracket = normalized_bracket(pd, cap);
  rec.linking_matrix = linking_matrix(pd);
  rec.seifert_circles = seifert_circle_count(pd);
  return rec;
}

// True when some simultaneous row/column permutation maps `a` onto `b`.
inline bool linking_equivalent(const LinkingMatrix& a, const LinkingMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n)
    return false;
  auto sorted_row = [](std::vector<int> row) {
    std::sort(row.begin(), row.end());
    return row;
  };
  std::vector<std::vector<int>> sig_a, sig_b;
  for (std::size_t i = 0; i < n; ++i) {
    sig_a.push_back(sorted_row(a[i]));
    sig_b.push_back(sorted_row(b[i]));
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == n)
      return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || sig_a[i] != sig_b[j])
        continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = a[i][k] == b[j][static_cast<std::size_t>(image[k])];
      if (!ok)
        continue;
      used[j] = true;
      image[i] = static_cast<int>(j);
      if (self(self, i + 1))
        return true;
      used[j] = false;
    }
    image[i] = -1;
    return false;
  };
  return extend(extend, 0);
}

// Agreement on the isotopy invariants of the record: component count,
// normalized bracket, and linking matrix up to relabelling. Writhe and Seifert
// circle count describe the diagram, not the link, and are not compared.
inline bool invariants_agree(const InvariantRecord& a, const InvariantRecord& b) {
  return a.components == b.components && a.normalized_bracket == b.normalized_bracket &&
         linking_equivalent(a.linking_matrix, b.linking_matrix);
}

} // namespace braidforge
