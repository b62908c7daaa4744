#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace menger {

  // 0-based index of a carrier element.
  using Element = std::uint32_t;

  // Hash for small index vectors (unary maps, argument tuples, graphs).
  struct VectorHash {
    template <typename T>
    std::size_t operator()(std::vector<T> const& v) const noexcept {
      std::uint64_t h = 1469598103934665603ULL;
      for (auto x : v) {
        h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };

  // Number of tuples in base^arity; throws std::overflow_error past 2^63.
  std::uint64_t checked_power(std::uint64_t base, std::size_t arity);

  // Advances `tuple` to the next element of {0..radix-1}^k in lexicographic
  // order (last coordinate fastest). Returns false after the last tuple.
  inline bool next_tuple(std::span<Element> tuple, std::size_t radix) {
    for (std::size_t i = tuple.size(); i-- > 0;) {
      if (++tuple[i] < radix) {
        return true;
      }
      tuple[i] = 0;
    }
    return false;
  }

}  // namespace menger
