#pragma once

#include "partmat/fishburn_matrix.hpp"
#include "partmat/induced_path.hpp"
#include "partmat/inversion_sequence.hpp"
#include "partmat/maps.hpp"
#include "partmat/partition_matrix.hpp"
#include "partmat/paths.hpp"
#include "partmat/stream.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace partmat {

namespace detail {

inline void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

struct InversionSequenceProblem {
  int n;
  int depth = 0;
  int max_depth() const { return n; }
  int lo(int) const { return 0; }
  int hi(int d) const { return d; }
  void apply(int, int) { ++depth; }
  void undo(int, int) { --depth; }
  bool feasible() const { return true; }
  bool complete() const { return depth == n; }
};

// Compositions of n, lexicographic.
struct CompositionProblem {
  int n;
  int remaining;
  explicit CompositionProblem(int n_) : n(n_), remaining(n_) {}
  int max_depth() const { return n; }
  int lo(int) const { return 1; }
  int hi(int) const { return remaining; }
  void apply(int, int v) { remaining -= v; }
  void undo(int, int v) { remaining += v; }
  bool feasible() const { return remaining >= 0; }
  bool complete() const { return remaining == 0; }
};

// Row of each element for a fixed column layout; every row must end up used.
// Rows >= r can only be served by elements in columns >= r, and those sets
// are nested, so the threshold (Hall) test below is exact: a prefix passes
// iff it extends to a full assignment.
struct RowAssignmentProblem {
  int n;
  int dim;
  std::vector<int> col;    // col[k] for k = 1..n
  std::vector<int> start;  // first element of column r, r = 1..dim
  std::vector<int> used;   // how many assigned elements sit in row r
  int depth = 0;

  explicit RowAssignmentProblem(const std::vector<int>& parts)
      : n(0), dim(static_cast<int>(parts.size())), col(1, 0), start(parts.size() + 2, 0),
        used(parts.size() + 1, 0) {
    for (int d = 1; d <= dim; ++d) {
      start[d] = n + 1;
      for (int i = 0; i < parts[d - 1]; ++i) col.push_back(d);
      n += parts[d - 1];
    }
  }
  int max_depth() const { return n; }
  int lo(int) const { return 1; }
  int hi(int d) const { return col[d + 1]; }
  void apply(int, int v) {
    ++used[v];
    ++depth;
  }
  void undo(int, int v) {
    --used[v];
    --depth;
  }
  bool feasible() const {
    int uncovered = 0;
    for (int r = dim; r >= 1; --r) {
      if (used[r] == 0) ++uncovered;
      const int remaining = n - std::max(depth, start[r] - 1);
      if (uncovered > remaining) return false;
    }
    return true;
  }
  bool complete() const { return depth == n; }
};

// Fishburn matrices of fixed dimension, cells filled in row-major order.
struct FishburnProblem {
  int n;
  int dim;
  std::vector<std::pair<int, int>> cells;  // (i, j), i <= j, 1-based
  std::vector<int> row_sum, col_sum;
  int remaining;
  int depth = 0;

  FishburnProblem(int n_, int dim_)
      : n(n_), dim(dim_), row_sum(dim_ + 1, 0), col_sum(dim_ + 1, 0), remaining(n_) {
    for (int i = 1; i <= dim; ++i)
      for (int j = i; j <= dim; ++j) cells.emplace_back(i, j);
  }
  int max_depth() const { return static_cast<int>(cells.size()); }
  int lo(int) const { return 0; }
  int hi(int) const { return remaining; }
  void apply(int d, int v) {
    row_sum[cells[d].first] += v;
    col_sum[cells[d].second] += v;
    remaining -= v;
    ++depth;
  }
  void undo(int d, int v) {
    row_sum[cells[d].first] -= v;
    col_sum[cells[d].second] -= v;
    remaining += v;
    --depth;
  }
  bool feasible() const {
    if (remaining < 0) return false;
    if (depth == 0) return n >= dim;
    const auto [i, j] = cells[depth - 1];
    if (j == dim && row_sum[i] == 0) return false;
    if (i == j && col_sum[j] == 0) return false;
    const int rows_needed = (dim - i) + (j < dim && row_sum[i] == 0 ? 1 : 0);
    int cols_needed = 0;
    for (int c = i + 1; c <= dim; ++c)
      if (col_sum[c] == 0) ++cols_needed;
    return remaining >= std::max(rows_needed, cols_needed);
  }
  bool complete() const { return depth == max_depth() && remaining == 0; }
};

// Words with steps +1 / 0 / -1 staying at height >= 0 and ending at 0.
// `letters` lists the step heights in emission order.
struct HeightWordProblem {
  int length;
  std::vector<int> letters;
  int height = 0;
  int depth = 0;
  int max_depth() const { return length; }
  int lo(int) const { return 0; }
  int hi(int) const { return static_cast<int>(letters.size()) - 1; }
  void apply(int, int v) {
    height += letters[v];
    ++depth;
  }
  void undo(int, int v) {
    height -= letters[v];
    --depth;
  }
  bool feasible() const { return height >= 0 && height <= length - depth; }
  bool complete() const { return depth == length; }
};

// Grid paths from (1,1) to (D,D) above the diagonal; steps E < S < X.
struct GridPathProblem {
  int dim;
  std::vector<Node> trail{{1, 1}};
  int max_depth() const { return 2 * (dim - 1); }
  int lo(int) const { return 0; }
  int hi(int) const { return 2; }
  void apply(int, int v) { trail.push_back(advance(trail.back(), static_cast<GridStep>(v))); }
  void undo(int, int) { trail.pop_back(); }
  bool feasible() const {
    const Node p = trail.back();
    return p.y >= p.x && p.x <= dim && p.y <= dim;
  }
  bool complete() const { return trail.back() == Node{dim, dim}; }
};

// Positive parts summing to `total`; parts flagged in `even` must be even.
struct ConstrainedCompositionProblem {
  int total;
  std::vector<bool> even;
  std::vector<int> min_suffix;  // least possible sum of parts d..end
  int remaining;
  int depth = 0;
  int last = 0;

  ConstrainedCompositionProblem(int total_, std::vector<bool> even_)
      : total(total_), even(std::move(even_)), min_suffix(even.size() + 1, 0), remaining(total_) {
    for (int d = static_cast<int>(even.size()) - 1; d >= 0; --d)
      min_suffix[d] = min_suffix[d + 1] + (even[d] ? 2 : 1);
  }
  int max_depth() const { return static_cast<int>(even.size()); }
  int lo(int d) const { return even[d] ? 2 : 1; }
  int hi(int) const { return remaining; }
  void apply(int d, int v) {
    remaining -= v;
    depth = d + 1;
    last = v;
  }
  void undo(int d, int v) {
    remaining += v;
    depth = d;
  }
  bool feasible() const {
    if (depth > 0 && even[depth - 1] && last % 2 != 0) return false;
    return remaining >= min_suffix[depth];
  }
  bool complete() const { return depth == max_depth() && remaining == 0; }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Inversion sequences and the pattern class

inline Stream<InversionSequence> inversion_sequences(int n) {
  detail::require_positive(n, "length");
  auto dfs = std::make_shared<detail::Dfs<detail::InversionSequenceProblem>>(
      detail::InversionSequenceProblem{n});
  return Stream<InversionSequence>([dfs]() -> std::optional<InversionSequence> {
    if (!dfs->next()) return std::nullopt;
    return InversionSequence(dfs->values());
  });
}

inline Stream<InversionSequence> pattern_class(int n) {
  return filter(inversion_sequences(n), [](const InversionSequence& e) { return in_pattern_class(e); });
}

// ---------------------------------------------------------------------------
// Partition matrices

namespace detail {

// All compositions of n in lexicographic order.
inline std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  Dfs<CompositionProblem> dfs{CompositionProblem(n)};
  while (dfs.next()) out.push_back(dfs.values());
  return out;
}

}  // namespace detail

/// Every partition matrix of weight n exactly once. Columns hold consecutive
/// ranges, so a matrix is a composition (column sizes) plus a row for each
/// element, with row <= column and all rows used. Order: composition
/// lexicographic, then row vector lexicographic.
///
/// `shard`/`shards` keep only compositions whose index is congruent to
/// shard modulo shards; the union over shards is the full family.
inline Stream<PartitionMatrix> partition_matrices(int n, int shard = 0, int shards = 1) {
  detail::require_positive(n, "weight");
  struct State {
    std::vector<std::vector<int>> comps;
    std::size_t next_comp;
    int shards;
    std::optional<detail::Dfs<detail::RowAssignmentProblem>> rows;
    std::vector<int> cols;
    int dim = 0;
  };
  auto st = std::make_shared<State>(State{detail::compositions(n), static_cast<std::size_t>(shard),
                                          shards, std::nullopt, {}, 0});
  return Stream<PartitionMatrix>([st]() -> std::optional<PartitionMatrix> {
    for (;;) {
      if (st->rows && st->rows->next()) {
        std::vector<int> rows(1, 0);
        rows.insert(rows.end(), st->rows->values().begin(), st->rows->values().end());
        return matrix_from_positions(st->dim, rows, st->cols);
      }
      if (st->next_comp >= st->comps.size()) return std::nullopt;
      const auto& parts = st->comps[st->next_comp];
      st->next_comp += st->shards;
      st->rows.emplace(detail::RowAssignmentProblem(parts));
      st->cols = st->rows->problem().col;
      st->dim = static_cast<int>(parts.size());
    }
  });
}

// ---------------------------------------------------------------------------
// Fishburn matrices: dimension 1..n, entries in row-major order.

inline Stream<FishburnMatrix> fishburn_matrices(int n) {
  detail::require_positive(n, "weight");
  struct State {
    int n;
    int dim = 0;
    std::optional<detail::Dfs<detail::FishburnProblem>> dfs;
  };
  auto st = std::make_shared<State>(State{n, 0, std::nullopt});
  return Stream<FishburnMatrix>([st]() -> std::optional<FishburnMatrix> {
    for (;;) {
      if (st->dfs && st->dfs->next()) {
        const auto& p = st->dfs->problem();
        std::vector<std::vector<int>> rows(p.dim, std::vector<int>(p.dim, 0));
        const auto& vals = st->dfs->values();
        for (std::size_t k = 0; k < vals.size(); ++k)
          rows[p.cells[k].first - 1][p.cells[k].second - 1] = vals[k];
        return FishburnMatrix(std::move(rows));
      }
      if (st->dim == st->n) return std::nullopt;
      ++st->dim;
      st->dfs.emplace(detail::FishburnProblem(st->n, st->dim));
    }
  });
}

// ---------------------------------------------------------------------------
// Improper partition matrices

enum class Strategy {
  Filter,      // filter the full partition-matrix stream
  Structural,  // doubling (improper) or weighted lattice paths (nondecreasing)
};

/// Improper matrices of weight n. The structural route takes every P of
/// weight m in [ceil(n/2), n] with dim(P) >= 2m - n and emits its doubling
/// images with exactly 2m - n dropped columns.
inline Stream<PartitionMatrix> improper_matrices(int n, Strategy strategy = Strategy::Filter) {
  detail::require_positive(n, "weight");
  if (strategy == Strategy::Filter)
    return filter(partition_matrices(n), [](const PartitionMatrix& p) { return is_improper(p); });

  struct State {
    int n;
    int m;
    std::optional<Stream<PartitionMatrix>> sources;
    std::vector<PartitionMatrix> buffer;
    std::size_t pos = 0;
  };
  auto st = std::make_shared<State>(State{n, (n + 1) / 2 - 1, std::nullopt, {}, 0});
  return Stream<PartitionMatrix>([st]() -> std::optional<PartitionMatrix> {
    for (;;) {
      if (st->pos < st->buffer.size()) return st->buffer[st->pos++];
      st->buffer.clear();
      st->pos = 0;
      std::optional<PartitionMatrix> p;
      if (st->sources) p = st->sources->next();
      if (!p) {
        if (st->m == st->n) return std::nullopt;
        ++st->m;
        st->sources.emplace(partition_matrices(st->m));
        continue;
      }
      const int drops = 2 * st->m - st->n;
      if (p->dim() < drops) continue;
      const unsigned total = 1u << p->dim();
      for (unsigned mask = 0; mask < total; ++mask) {
        if (std::popcount(mask) != drops) continue;
        KeepVector keep(p->dim());
        for (int d = 0; d < p->dim(); ++d) keep[d] = !((mask >> d) & 1u);
        st->buffer.push_back(double_expand_one(*p, keep));
      }
    }
  });
}

// ---------------------------------------------------------------------------
// Lattice paths and words

inline Stream<GridPath> grid_paths(int dim) {
  detail::require_positive(dim, "dimension");
  auto dfs = std::make_shared<detail::Dfs<detail::GridPathProblem>>(detail::GridPathProblem{dim});
  return Stream<GridPath>([dfs, dim]() -> std::optional<GridPath> {
    if (!dfs->next()) return std::nullopt;
    std::vector<GridStep> steps;
    for (int v : dfs->values()) steps.push_back(static_cast<GridStep>(v));
    return GridPath(dim, std::move(steps));
  });
}

// Letters in the order U < L < D.
inline Stream<MotzkinWord> motzkin_words(int n) {
  detail::require_positive(n, "length");
  auto dfs = std::make_shared<detail::Dfs<detail::HeightWordProblem>>(
      detail::HeightWordProblem{n, {+1, 0, -1}});
  return Stream<MotzkinWord>([dfs]() -> std::optional<MotzkinWord> {
    static constexpr char letters[] = {'U', 'L', 'D'};
    if (!dfs->next()) return std::nullopt;
    std::string w;
    for (int v : dfs->values()) w += letters[v];
    return MotzkinWord(std::move(w));
  });
}

// Across < Down.
inline Stream<DyckWord> dyck_words(int semilength) {
  detail::require_positive(semilength, "semilength");
  auto dfs = std::make_shared<detail::Dfs<detail::HeightWordProblem>>(
      detail::HeightWordProblem{2 * semilength, {+1, -1}});
  return Stream<DyckWord>([dfs]() -> std::optional<DyckWord> {
    if (!dfs->next()) return std::nullopt;
    std::vector<DyckStep> w;
    for (int v : dfs->values()) w.push_back(v == 0 ? DyckStep::Across : DyckStep::Down);
    return DyckWord(std::move(w));
  });
}

/// Weighted grid paths of total weight n over every dimension 1..n: grid
/// path order within a dimension, then weight vectors lexicographically.
/// With `improper`, nodes starting a South step take even weights only.
inline Stream<WeightedGridPath> weighted_grid_paths(int n, bool improper) {
  detail::require_positive(n, "weight");
  struct State {
    int n;
    bool improper;
    int dim = 0;
    std::optional<Stream<GridPath>> paths;
    std::optional<GridPath> current;
    std::optional<detail::Dfs<detail::ConstrainedCompositionProblem>> weights;
  };
  auto st = std::make_shared<State>(State{n, improper, 0, std::nullopt, std::nullopt, std::nullopt});
  return Stream<WeightedGridPath>([st]() -> std::optional<WeightedGridPath> {
    for (;;) {
      if (st->weights && st->weights->next())
        return WeightedGridPath(*st->current, st->weights->values(), st->improper);
      st->weights.reset();
      std::optional<GridPath> g;
      if (st->paths) g = st->paths->next();
      if (!g) {
        if (st->dim == st->n) return std::nullopt;
        ++st->dim;
        st->paths.emplace(grid_paths(st->dim));
        continue;
      }
      const std::size_t nodes = g->steps().size() + 1;
      if (static_cast<int>(nodes) > st->n) continue;
      std::vector<bool> even(nodes, false);
      if (st->improper)
        for (std::size_t i = 0; i < g->steps().size(); ++i)
          even[i] = g->steps()[i] == GridStep::South;
      st->current = std::move(g);
      st->weights.emplace(detail::ConstrainedCompositionProblem(st->n, std::move(even)));
    }
  });
}

/// Nondecreasing partition matrices of weight n (improper ones only when
/// `improper`). Structural route: weighted lattice paths; filter route:
/// the full partition-matrix stream.
inline Stream<PartitionMatrix> nondecreasing_matrices(int n, bool improper,
                                                      Strategy strategy = Strategy::Structural) {
  detail::require_positive(n, "weight");
  if (strategy == Strategy::Filter)
    return filter(partition_matrices(n), [improper](const PartitionMatrix& p) {
      return is_nondecreasing(p) && (!improper || is_improper(p));
    });
  return transform(weighted_grid_paths(n, improper),
                   [](const WeightedGridPath& w) { return matrix_from_weighted_path(w); });
}

// ---------------------------------------------------------------------------
// Family dispatch for counting

enum class Family { IS, IS_PATTERN, PM, FM, IPPM, NDPM, NDIPPM, MOTZKIN, DYCK, GRIDPATH };

inline std::uint64_t count_family(Family f, int n, Strategy strategy = Strategy::Structural) {
  switch (f) {
    case Family::IS: return count(inversion_sequences(n));
    case Family::IS_PATTERN: return count(pattern_class(n));
    case Family::PM: return count(partition_matrices(n));
    case Family::FM: return count(fishburn_matrices(n));
    case Family::IPPM: return count(improper_matrices(n, strategy));
    case Family::NDPM: return count(nondecreasing_matrices(n, false, strategy));
    case Family::NDIPPM: return count(nondecreasing_matrices(n, true, strategy));
    case Family::MOTZKIN: return count(motzkin_words(n));
    case Family::DYCK: return count(dyck_words(n));
    case Family::GRIDPATH: return count(grid_paths(n));
  }
  return 0;
}

/// Prefix-split count for the families derived from the partition-matrix
/// stream: compositions are dealt round-robin to `threads` workers. Other
/// families are counted sequentially. Totals equal count_family.
inline std::uint64_t parallel_count_family(Family f, int n, unsigned threads,
                                           Strategy strategy = Strategy::Structural) {
  const bool pm_based = f == Family::PM || (strategy == Strategy::Filter &&
                                            (f == Family::IPPM || f == Family::NDPM || f == Family::NDIPPM));
  if (!pm_based || threads <= 1) return count_family(f, n, strategy);
  detail::require_positive(n, "weight");
  auto keep = [f](const PartitionMatrix& p) {
    switch (f) {
      case Family::IPPM: return is_improper(p);
      case Family::NDPM: return is_nondecreasing(p);
      case Family::NDIPPM: return is_nondecreasing(p) && is_improper(p);
      default: return true;
    }
  };
  std::vector<std::uint64_t> partial(threads, 0);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.emplace_back([&, t] {
        partial[t] = count_if(partition_matrices(n, static_cast<int>(t), static_cast<int>(threads)), keep);
      });
  }
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

}  // namespace partmat
