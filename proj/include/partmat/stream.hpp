#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace partmat {

/// Single-consumer pull stream. Each call to next() yields the following
/// object or nullopt once exhausted. Streams are produced by factory
/// functions; calling the factory again restarts from the beginning.
template <class T>
class Stream {
 public:
  using value_type = T;

  explicit Stream(std::function<std::optional<T>()> pull) : pull_(std::move(pull)) {}

  std::optional<T> next() { return pull_(); }

 private:
  std::function<std::optional<T>()> pull_;
};

template <class T>
std::uint64_t count(Stream<T> s) {
  std::uint64_t c = 0;
  while (s.next()) ++c;
  return c;
}

template <class T, class Pred>
std::uint64_t count_if(Stream<T> s, Pred pred) {
  std::uint64_t c = 0;
  while (auto x = s.next())
    if (pred(*x)) ++c;
  return c;
}

template <class T>
std::vector<T> collect(Stream<T> s) {
  std::vector<T> out;
  while (auto x = s.next()) out.push_back(std::move(*x));
  return out;
}

template <class T, class F>
void for_each(Stream<T> s, F f) {
  while (auto x = s.next()) f(*x);
}

template <class T, class Pred>
Stream<T> filter(Stream<T> s, Pred pred) {
  return Stream<T>([s = std::move(s), pred = std::move(pred)]() mutable -> std::optional<T> {
    while (auto x = s.next())
      if (pred(*x)) return x;
    return std::nullopt;
  });
}

template <class T, class F>
auto transform(Stream<T> s, F f) {
  using U = std::invoke_result_t<F&, const T&>;
  return Stream<U>([s = std::move(s), f = std::move(f)]() mutable -> std::optional<U> {
    if (auto x = s.next()) return f(*x);
    return std::nullopt;
  });
}

template <class T>
Stream<T> from_vector(std::vector<T> items) {
  return Stream<T>([items = std::move(items), i = std::size_t{0}]() mutable -> std::optional<T> {
    if (i == items.size()) return std::nullopt;
    return items[i++];
  });
}

namespace detail {

/// Pre-order depth-first search over integer prefixes, driven by a problem
/// object:
///   int  max_depth() const          longest prefix allowed
///   int  lo(int depth), hi(int depth)  value range at a depth
///   void apply(int depth, int v), undo(int depth, int v)
///   bool feasible() const           current prefix can still reach an emit
///   bool complete() const           current prefix is an object to emit
/// Emitted prefixes come out in lexicographic order of their value lists.
template <class Problem>
class Dfs {
 public:
  explicit Dfs(Problem p) : p_(std::move(p)) {}

  const Problem& problem() const { return p_; }
  const std::vector<int>& values() const { return stack_; }

  bool next() {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      if (!p_.feasible()) return finish();
      if (p_.complete()) return true;
    }
    for (;;) {
      if (descend()) {
        if (p_.complete()) return true;
        continue;
      }
      for (;;) {
        if (stack_.empty()) return finish();
        if (sibling()) break;
      }
      if (p_.complete()) return true;
    }
  }

 private:
  bool finish() {
    done_ = true;
    return false;
  }

  bool try_values(int depth, int from) {
    for (int v = from; v <= p_.hi(depth); ++v) {
      p_.apply(depth, v);
      if (p_.feasible()) {
        stack_.push_back(v);
        return true;
      }
      p_.undo(depth, v);
    }
    return false;
  }

  bool descend() {
    const int depth = static_cast<int>(stack_.size());
    if (depth >= p_.max_depth()) return false;
    return try_values(depth, p_.lo(depth));
  }

  bool sibling() {
    const int depth = static_cast<int>(stack_.size()) - 1;
    const int v = stack_.back();
    stack_.pop_back();
    p_.undo(depth, v);
    return try_values(depth, v + 1);
  }

  Problem p_;
  std::vector<int> stack_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace detail

}  // namespace partmat
