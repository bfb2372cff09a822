#pragma once

#include "partmat/errors.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace partmat {

// ---------------------------------------------------------------------------
// Motzkin words over U (up), L (level), D (down).

inline std::optional<Violation> check_motzkin_word(const std::string& w) {
  if (w.empty()) return Violation{"length", "Motzkin word is empty"};
  int h = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    switch (w[i]) {
      case 'U': ++h; break;
      case 'D': --h; break;
      case 'L': break;
      default:
        return Violation{"alphabet", "letter '" + std::string(1, w[i]) + "' at position " +
                                         std::to_string(i + 1)};
    }
    if (h < 0) return Violation{"nonnegative-height", "height -1 after step " + std::to_string(i + 1)};
  }
  if (h != 0) return Violation{"ends-on-axis", "final height " + std::to_string(h)};
  return std::nullopt;
}

class MotzkinWord {
 public:
  explicit MotzkinWord(std::string w) {
    if (auto v = check_motzkin_word(w)) throw InvalidObject(*v);
    word_ = std::move(w);
  }

  const std::string& word() const noexcept { return word_; }
  int length() const noexcept { return static_cast<int>(word_.size()); }

  friend bool operator==(const MotzkinWord&, const MotzkinWord&) = default;
  friend auto operator<=>(const MotzkinWord&, const MotzkinWord&) = default;

 private:
  std::string word_;
};

struct MotzkinStats {
  int len = 0;
  int comp = 0;   // steps ending at height 0 (level steps on the axis included)
  int level = 0;
  int up = 0;
  int down = 0;
  friend bool operator==(const MotzkinStats&, const MotzkinStats&) = default;
};

inline MotzkinStats motzkin_stats(const MotzkinWord& m) {
  MotzkinStats s;
  s.len = m.length();
  int h = 0;
  for (char c : m.word()) {
    if (c == 'U') ++h, ++s.up;
    if (c == 'D') --h, ++s.down;
    if (c == 'L') ++s.level;
    if (h == 0) ++s.comp;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Lattice paths in the region y >= x >= 1, from (1,1) to (D,D). A node
// (x, y) names a matrix index (row, col): South moves x, East moves y.

enum class GridStep { East, South, SouthEast };

inline char step_letter(GridStep s) {
  switch (s) {
    case GridStep::East: return 'E';
    case GridStep::South: return 'S';
    case GridStep::SouthEast: return 'X';
  }
  return '?';
}

struct Node {
  int x;
  int y;
  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

inline Node advance(Node p, GridStep s) {
  switch (s) {
    case GridStep::East: return {p.x, p.y + 1};
    case GridStep::South: return {p.x + 1, p.y};
    case GridStep::SouthEast: return {p.x + 1, p.y + 1};
  }
  return p;
}

inline std::optional<Violation> check_grid_path(int dim, const std::vector<GridStep>& steps) {
  if (dim < 1) return Violation{"dimension", "dim must be positive"};
  Node p{1, 1};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    p = advance(p, steps[i]);
    if (p.y < p.x || p.y > dim || p.x > dim)
      return Violation{"region", "step " + std::to_string(i + 1) + " reaches (" +
                                     std::to_string(p.x) + "," + std::to_string(p.y) + ")"};
  }
  if (p != Node{dim, dim})
    return Violation{"endpoint", "path ends at (" + std::to_string(p.x) + "," +
                                    std::to_string(p.y) + "), expected (" + std::to_string(dim) +
                                    "," + std::to_string(dim) + ")"};
  return std::nullopt;
}

class GridPath {
 public:
  GridPath(int dim, std::vector<GridStep> steps) : dim_(dim) {
    if (auto v = check_grid_path(dim, steps)) throw InvalidObject(*v);
    steps_ = std::move(steps);
  }

  int dim() const noexcept { return dim_; }
  const std::vector<GridStep>& steps() const noexcept { return steps_; }

  std::vector<Node> nodes() const {
    std::vector<Node> out{{1, 1}};
    for (GridStep s : steps_) out.push_back(advance(out.back(), s));
    return out;
  }

  std::string letters() const {
    std::string s;
    for (GridStep g : steps_) s += step_letter(g);
    return s;
  }

  friend bool operator==(const GridPath&, const GridPath&) = default;
  friend auto operator<=>(const GridPath&, const GridPath&) = default;

 private:
  int dim_;
  std::vector<GridStep> steps_;
};

inline std::optional<GridStep> parse_step_letter(char c) {
  switch (c) {
    case 'E': return GridStep::East;
    case 'S': return GridStep::South;
    case 'X': return GridStep::SouthEast;
  }
  return std::nullopt;
}

inline GridPath grid_path_from_letters(int dim, const std::string& letters) {
  std::vector<GridStep> steps;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    auto s = parse_step_letter(letters[i]);
    if (!s)
      throw InvalidObject({"alphabet", "step letter '" + std::string(1, letters[i]) + "' at " +
                                           std::to_string(i + 1)});
    steps.push_back(*s);
  }
  return GridPath(dim, std::move(steps));
}

struct GridPathStats {
  int south = 0;
  int east = 0;
  int southeast = 0;
  int diag_south = 0;
  int diag_southeast = 0;
  friend bool operator==(const GridPathStats&, const GridPathStats&) = default;
};

inline GridPathStats grid_path_stats(const GridPath& g) {
  GridPathStats s;
  Node p{1, 1};
  for (GridStep step : g.steps()) {
    p = advance(p, step);
    const bool on_diag = p.x == p.y;
    switch (step) {
      case GridStep::East: ++s.east; break;
      case GridStep::South: ++s.south, s.diag_south += on_diag; break;
      case GridStep::SouthEast: ++s.southeast, s.diag_southeast += on_diag; break;
    }
  }
  return s;
}

/// Letter-wise image of a grid path as a Motzkin word: East -> U,
/// South -> D, SouthEast -> L. Height becomes y - x, so diagonal South and
/// SouthEast steps are exactly the steps ending on the axis. The word has
/// #D + #L = dim - 1; dim 1 gives the empty word (returned as a string,
/// since MotzkinWord requires length >= 1).
inline std::string grid_path_motzkin_letters(const GridPath& g) {
  std::string w;
  for (GridStep s : g.steps()) w += s == GridStep::East ? 'U' : s == GridStep::South ? 'D' : 'L';
  return w;
}

// ---------------------------------------------------------------------------
// Weighted grid paths: one positive weight per node.

/// With `improper` set, the node starting every South step must carry an
/// even weight.
inline std::optional<Violation> check_weighted_path(const GridPath& path,
                                                    const std::vector<int>& weights,
                                                    bool improper) {
  if (weights.size() != path.steps().size() + 1)
    return Violation{"weight-count", std::to_string(weights.size()) + " weights for " +
                                         std::to_string(path.steps().size() + 1) + " nodes"};
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] < 1)
      return Violation{"positive-weight", "node " + std::to_string(i + 1) + " has weight " +
                                              std::to_string(weights[i])};
  if (improper)
    for (std::size_t i = 0; i < path.steps().size(); ++i)
      if (path.steps()[i] == GridStep::South && weights[i] % 2 != 0)
        return Violation{"even-south-start", "node " + std::to_string(i + 1) +
                                                 " starts a South step with odd weight " +
                                                 std::to_string(weights[i])};
  return std::nullopt;
}

class WeightedGridPath {
 public:
  WeightedGridPath(GridPath path, std::vector<int> weights, bool improper = false)
      : path_(std::move(path)), improper_(improper) {
    if (auto v = check_weighted_path(path_, weights, improper)) throw InvalidObject(*v);
    weights_ = std::move(weights);
  }

  const GridPath& path() const noexcept { return path_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  bool improper() const noexcept { return improper_; }
  int total_weight() const {
    int t = 0;
    for (int w : weights_) t += w;
    return t;
  }

  friend bool operator==(const WeightedGridPath&, const WeightedGridPath&) = default;

 private:
  GridPath path_;
  std::vector<int> weights_;
  bool improper_;
};

// ---------------------------------------------------------------------------
// Dyck words: Across (+1) and Down (-1), every prefix with #Across >= #Down.

enum class DyckStep { Across, Down };

inline std::optional<Violation> check_dyck_word(const std::vector<DyckStep>& w) {
  if (w.empty() || w.size() % 2 != 0)
    return Violation{"length", "Dyck word length must be positive and even"};
  int h = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    h += w[i] == DyckStep::Across ? 1 : -1;
    if (h < 0) return Violation{"ballot", "crosses the diagonal after step " + std::to_string(i + 1)};
  }
  if (h != 0) return Violation{"endpoint", "does not return to the diagonal"};
  return std::nullopt;
}

class DyckWord {
 public:
  explicit DyckWord(std::vector<DyckStep> w) {
    if (auto v = check_dyck_word(w)) throw InvalidObject(*v);
    word_ = std::move(w);
  }

  int semilength() const noexcept { return static_cast<int>(word_.size() / 2); }
  const std::vector<DyckStep>& steps() const noexcept { return word_; }

  std::string letters() const {
    std::string s;
    for (DyckStep d : word_) s += d == DyckStep::Across ? 'A' : 'D';
    return s;
  }

  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

 private:
  std::vector<DyckStep> word_;
};

inline DyckWord dyck_from_letters(const std::string& s) {
  std::vector<DyckStep> w;
  for (char c : s) {
    if (c != 'A' && c != 'D')
      throw InvalidObject({"alphabet", "Dyck letter '" + std::string(1, c) + "'"});
    w.push_back(c == 'A' ? DyckStep::Across : DyckStep::Down);
  }
  return DyckWord(std::move(w));
}

// Returns to the diagonal, origin excluded.
inline int dyck_touch(const DyckWord& w) {
  int h = 0, touches = 0;
  for (DyckStep s : w.steps()) {
    h += s == DyckStep::Across ? 1 : -1;
    if (h == 0) ++touches;
  }
  return touches;
}

}  // namespace partmat
