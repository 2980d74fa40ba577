#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sympbranch {

/// Thrown when an enumeration would produce more results than its cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap);
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A finite poset on {0, ..., size-1} stored as a dense relation matrix.
class FinitePoset {
 public:
  using Leq = std::function<bool(std::size_t, std::size_t)>;

  FinitePoset() = default;
  FinitePoset(std::size_t size, const Leq& leq);

  std::size_t size() const noexcept { return size_; }
  bool leq(std::size_t a, std::size_t b) const { return rel_[a * size_ + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  bool is_partial_order() const;

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

  /// Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// All down-closed subsets, each sorted ascending. The empty ideal comes first.
  std::vector<std::vector<std::size_t>> order_ideals(std::size_t cap) const;
  std::size_t count_order_ideals(std::size_t cap) const;

 private:
  template <class Visit>
  void walk_ideals(std::size_t cap, Visit&& visit) const;

  std::size_t size_ = 0;
  std::vector<char> rel_;
};

}  // namespace sympbranch
