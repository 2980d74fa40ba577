#include "sympbranch/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sympbranch {

CapExceeded::CapExceeded(std::size_t cap)
    : std::runtime_error("enumeration exceeds cap of " + std::to_string(cap)), cap_(cap) {}

FinitePoset::FinitePoset(std::size_t size, const Leq& leq) : size_(size), rel_(size * size, 0) {
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) rel_[a * size + b] = leq(a, b) ? 1 : 0;
}

bool FinitePoset::is_partial_order() const {
  for (std::size_t a = 0; a < size_; ++a) {
    if (!leq(a, a)) return false;
    for (std::size_t b = 0; b < size_; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) return false;
      if (!leq(a, b)) continue;
      for (std::size_t c = 0; c < size_; ++c)
        if (leq(b, c) && !leq(a, c)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size_; ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < size_ && minimal; ++b) minimal = !less(b, a);
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size_; ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < size_ && maximal; ++b) maximal = !less(a, b);
    if (maximal) out.push_back(a);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (!less(a, b)) continue;
      bool between = false;
      for (std::size_t c = 0; c < size_ && !between; ++c) between = less(a, c) && less(c, b);
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

template <class Visit>
void FinitePoset::walk_ideals(std::size_t cap, Visit&& visit) const {
  // Elements with fewer strict predecessors come first; this is a linear extension.
  std::vector<std::size_t> order(size_);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(size_, 0);
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b) below[a] += less(b, a) ? 1 : 0;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });

  std::vector<char> in(size_, 0);
  std::size_t produced = 0;
  // Every branch ends in a distinct ideal: excluding is always allowed and
  // including is allowed iff all strict predecessors are already in.
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == size_) {
      if (++produced > cap) throw CapExceeded(cap);
      visit(in);
      return;
    }
    const std::size_t x = order[pos];
    rec(pos + 1);
    for (std::size_t b = 0; b < size_; ++b)
      if (less(b, x) && !in[b]) return;
    in[x] = 1;
    rec(pos + 1);
    in[x] = 0;
  };
  rec(0);
}

std::vector<std::vector<std::size_t>> FinitePoset::order_ideals(std::size_t cap) const {
  std::vector<std::vector<std::size_t>> out;
  walk_ideals(cap, [&](const std::vector<char>& in) {
    std::vector<std::size_t> ideal;
    for (std::size_t a = 0; a < size_; ++a)
      if (in[a]) ideal.push_back(a);
    out.push_back(std::move(ideal));
  });
  std::sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() != b.size() ? a.size() < b.size() : a < b;
                   });
  return out;
}

std::size_t FinitePoset::count_order_ideals(std::size_t cap) const {
  std::size_t n = 0;
  walk_ideals(cap, [&](const std::vector<char>&) { ++n; });
  return n;
}

}  // namespace sympbranch
