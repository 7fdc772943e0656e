#pragma once

#include <cstddef>
#include <span>

namespace zetalab::numerics {

/// Pairwise (tree) summation. The split points depend only on the length, so
/// the result is reproducible for a given input order.
template <class T>
T pairwise_sum(std::span<const T> values) {
  constexpr std::size_t kLeaf = 16;
  if (values.size() <= kLeaf) {
    T acc{};
    for (const T& v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace zetalab::numerics
