#pragma once

// Grid diagrams (arc presentations).
//
// Rows are numbered 1..n from the top, columns 1..n from the left. Row r
// carries one X at column xcol[r] and one O at column ocol[r]. Vertical
// segments run X -> O inside a column, horizontal segments run O -> X inside
// a row, and verticals always cross over horizontals.

#include <algorithm>
#include <string>
#include <vector>

#include "braidforge/error.hpp"
#include "braidforge/pd.hpp"

namespace braidforge {

enum class ColumnOrientation { Up, Down };

class GridDiagram {
public:
  GridDiagram() = default;

  GridDiagram(std::vector<int> xcol, std::vector<int> ocol)
      : xcol_(std::move(xcol)), ocol_(std::move(ocol)) {
    const int n = size();
    if (n < 2)
      throw InputError("grid size must be at least 2, got " + std::to_string(n));
    if (static_cast<int>(ocol_.size()) != n)
      throw InputError("X has " + std::to_string(n) + " entries but O has " +
                       std::to_string(ocol_.size()));
    xrow_.assign(n, 0);
    orow_.assign(n, 0);
    auto place = [n](const std::vector<int>& cols, std::vector<int>& rows, char marker) {
      for (int r = 1; r <= n; ++r) {
        const int c = cols[r - 1];
        if (c < 1 || c > n)
          throw InputError(std::string(1, marker) + " in row " + std::to_string(r) +
                           ": column " + std::to_string(c) + " outside 1.." +
                           std::to_string(n));
        if (rows[c - 1] != 0)
          throw InputError(std::string(1, marker) + " column " + std::to_string(c) +
                           " used by rows " + std::to_string(rows[c - 1]) + " and " +
                           std::to_string(r));
        rows[c - 1] = r;
      }
    };
    place(xcol_, xrow_, 'X');
    place(ocol_, orow_, 'O');
    for (int r = 1; r <= n; ++r)
      if (xcol_[r - 1] == ocol_[r - 1])
        throw InputError("X and O collide in row " + std::to_string(r) + " (column " +
                         std::to_string(xcol_[r - 1]) + ")");
  }

  int size() const { return static_cast<int>(xcol_.size()); }
  const std::vector<int>& xcols() const { return xcol_; }
  const std::vector<int>& ocols() const { return ocol_; }

  // 1-based accessors
  int xcol(int row) const { return xcol_.at(row - 1); }
  int ocol(int row) const { return ocol_.at(row - 1); }
  int xrow(int col) const { return xrow_.at(col - 1); }
  int orow(int col) const { return orow_.at(col - 1); }

  friend bool operator==(const GridDiagram& a, const GridDiagram& b) {
    return a.xcol_ == b.xcol_ && a.ocol_ == b.ocol_;
  }

private:
  std::vector<int> xcol_, ocol_;
  std::vector<int> xrow_, orow_;
};

inline ColumnOrientation column_orientation(const GridDiagram& g, int c) {
  if (c < 1 || c > g.size())
    throw InputError("column " + std::to_string(c) + " outside grid");
  return g.xrow(c) > g.orow(c) ? ColumnOrientation::Up : ColumnOrientation::Down;
}

namespace detail {

inline bool strictly_between(int v, int a, int b) {
  return std::min(a, b) < v && v < std::max(a, b);
}

// Crossing at (row r, column c) iff the row's segment spans c and the
// column's segment spans r, both strictly.
inline bool grid_crosses(const GridDiagram& g, int r, int c) {
  return strictly_between(c, g.ocol(r), g.xcol(r)) &&
         strictly_between(r, g.xrow(c), g.orow(c));
}

// Rows in the order a traversal of the link meets their O markers; each inner
// vector is one component.
inline std::vector<std::vector<int>> grid_component_rows(const GridDiagram& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> visited(g.size() + 1, false);
  for (int start = 1; start <= g.size(); ++start) {
    if (visited[start])
      continue;
    std::vector<int> rows;
    int r = start;
    do {
      visited[r] = true;
      rows.push_back(r);
      r = g.orow(g.xcol(r)); // O -> X along row r, then X -> O down column
    } while (r != start);
    comps.push_back(std::move(rows));
  }
  return comps;
}

} // namespace detail

inline int grid_components(const GridDiagram& g) {
  return static_cast<int>(detail::grid_component_rows(g).size());
}

inline int grid_crossing_count(const GridDiagram& g) {
  int count = 0;
  for (int r = 1; r <= g.size(); ++r)
    for (int c = 1; c <= g.size(); ++c)
      count += detail::grid_crosses(g, r, c);
  return count;
}

inline PDCode grid_to_pd(const GridDiagram& g) {
  const int n = g.size();
  std::vector<int> id(static_cast<std::size_t>(n * n), -1);
  std::vector<int> signs;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (detail::grid_crosses(g, r, c)) {
        id[(r - 1) * n + (c - 1)] = static_cast<int>(signs.size());
        const int dy = column_orientation(g, c) == ColumnOrientation::Up ? 1 : -1;
        const int dx = g.xcol(r) > g.ocol(r) ? 1 : -1;
        signs.push_back(crossing_sign(0, dy, dx, 0));
      }

  std::vector<std::vector<Pass>> components;
  for (const auto& rows : detail::grid_component_rows(g)) {
    std::vector<Pass> passes;
    for (int r : rows) {
      // horizontal O -> X, under every crossing column
      const int c0 = g.ocol(r), c1 = g.xcol(r);
      const int dc = c1 > c0 ? 1 : -1;
      for (int c = c0 + dc; c != c1; c += dc)
        if (int k = id[(r - 1) * n + (c - 1)]; k >= 0)
          passes.push_back({k, false});
      // vertical X -> O in column c1, over every crossing row
      const int r0 = r, r1 = g.orow(c1);
      const int dr = r1 > r0 ? 1 : -1;
      for (int rr = r0 + dr; rr != r1; rr += dr)
        if (int k = id[(rr - 1) * n + (c1 - 1)]; k >= 0)
          passes.push_back({k, true});
    }
    components.push_back(std::move(passes));
  }
  return assemble_pd(components, signs);
}

} // namespace braidforge
