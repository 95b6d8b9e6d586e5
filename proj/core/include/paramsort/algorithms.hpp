// Instrumented sorts with exact operation counters, and an inversion counter.

#ifndef PARAMSORT_ALGORITHMS_HPP
#define PARAMSORT_ALGORITHMS_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "paramsort/distributions.hpp"

namespace paramsort {

struct OpCounters {
  std::uint64_t comparisons = 0;
  std::uint64_t interchanges = 0;

  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

template <class T>
struct SortResult {
  std::vector<T> sorted;
  OpCounters counters;
};

/// Selection sort that swaps eagerly inside the inner loop:
///
///   for i in [0, n-1): for j in (i, n): if a[i] > a[j]: swap(a[i], a[j])
///
/// Comparisons are always n(n-1)/2. Equal keys are never swapped. Not stable.
template <std::totally_ordered T>
OpCounters exchange_selection_sort_in_place(std::span<T> items) {
  OpCounters counters;
  const std::size_t n = items.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ++counters.comparisons;
      if (items[j] < items[i]) {
        std::swap(items[i], items[j]);
        ++counters.interchanges;
      }
    }
  }
  return counters;
}

template <std::totally_ordered T>
SortResult<T> exchange_selection_sort(std::span<const T> items) {
  SortResult<T> result{std::vector<T>(items.begin(), items.end()), {}};
  result.counters = exchange_selection_sort_in_place(std::span<T>(result.sorted));
  return result;
}

/// Classic selection sort: locate the minimum of the unsorted suffix, then swap
/// it into place. The swap is skipped when the minimum is already in position,
/// so interchanges <= n-1.
template <std::totally_ordered T>
OpCounters textbook_selection_sort_in_place(std::span<T> items) {
  OpCounters counters;
  const std::size_t n = items.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t min_index = i;
    for (std::size_t j = i + 1; j < n; ++j) {
      ++counters.comparisons;
      if (items[j] < items[min_index]) min_index = j;
    }
    if (min_index != i) {
      std::swap(items[i], items[min_index]);
      ++counters.interchanges;
    }
  }
  return counters;
}

template <std::totally_ordered T>
SortResult<T> textbook_selection_sort(std::span<const T> items) {
  SortResult<T> result{std::vector<T>(items.begin(), items.end()), {}};
  result.counters = textbook_selection_sort_in_place(std::span<T>(result.sorted));
  return result;
}

namespace detail {

// Sorts items[lo, hi) using scratch and returns the number of strict inversions.
template <class T>
std::uint64_t merge_count(std::vector<T>& items, std::vector<T>& scratch, std::size_t lo,
                          std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = merge_count(items, scratch, lo, mid) + merge_count(items, scratch, mid, hi);
  std::size_t left = lo;
  std::size_t right = mid;
  std::size_t out = lo;
  while (left < mid && right < hi) {
    if (items[right] < items[left]) {
      // items[right] precedes every remaining left element in the original order.
      count += mid - left;
      scratch[out++] = items[right++];
    } else {
      scratch[out++] = items[left++];
    }
  }
  while (left < mid) scratch[out++] = items[left++];
  while (right < hi) scratch[out++] = items[right++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            items.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

}  // namespace detail

/// Number of pairs i < j with items[i] > items[j]; ties count zero.
/// O(n log n) merge-based count; the input is not modified.
template <std::totally_ordered T>
std::uint64_t count_inversions(std::span<const T> items) {
  std::vector<T> work(items.begin(), items.end());
  std::vector<T> scratch(work.size());
  return detail::merge_count(work, scratch, 0, work.size());
}

// Convenience overloads over the variant produced by sample_array().

inline OpCounters exchange_counters(const ItemSequence& seq) {
  return std::visit([](const auto& v) { return exchange_selection_sort(std::span(v)).counters; },
                    seq);
}

inline OpCounters textbook_counters(const ItemSequence& seq) {
  return std::visit([](const auto& v) { return textbook_selection_sort(std::span(v)).counters; },
                    seq);
}

inline std::uint64_t count_inversions(const ItemSequence& seq) {
  return std::visit([](const auto& v) { return count_inversions(std::span(v)); }, seq);
}

}  // namespace paramsort

#endif  // PARAMSORT_ALGORITHMS_HPP
