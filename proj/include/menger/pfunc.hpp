#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/types.hpp"

namespace menger {

  // A partial map A^n -> A over A = {0, ..., k-1}, stored as a dense table
  // over A^n (lexicographic order, last coordinate fastest) with an explicit
  // undefined marker.
  class PartialNFunction {
   public:
    using Cell = std::int32_t;

    static constexpr Cell kUndefined = -1;

    // The empty function.
    PartialNFunction(std::size_t base_size, std::size_t rank);

    PartialNFunction(std::size_t base_size, std::size_t rank, std::vector<Cell> cells);

    std::size_t base_size() const noexcept {
      return _base;
    }

    std::size_t rank() const noexcept {
      return _rank;
    }

    std::size_t cell_count() const noexcept {
      return _cells.size();
    }

    std::span<Cell const> cells() const noexcept {
      return _cells;
    }

    std::size_t cell_index(std::span<Element const> args) const;

    std::optional<Element> at(std::span<Element const> args) const;

    void set(std::span<Element const> args, std::optional<Element> value);

    bool empty() const;

    std::size_t domain_size() const;

    // Cells joined by ',' with '-' for undefined, e.g. "1,-".
    std::string to_string() const;

    bool operator==(PartialNFunction const&) const = default;

    struct Hash {
      std::size_t operator()(PartialNFunction const& f) const noexcept {
        return VectorHash{}(f._cells);
      }
    };

   private:
    std::size_t       _base;
    std::size_t       _rank;
    std::vector<Cell> _cells;
  };

  // f[g_1 ... g_n]; throws ShapeMismatch.
  PartialNFunction superpose(PartialNFunction const& f, std::span<PartialNFunction const> gs);

  // Graph difference f \ g; throws ShapeMismatch.
  PartialNFunction difference(PartialNFunction const& f, PartialNFunction const& g);

  inline constexpr std::size_t kDefaultFunctionCap = 200;

  // A duplicate-free indexed set of partial functions of one shape.
  class FunctionAlgebra {
   public:
    FunctionAlgebra(std::size_t base_size, std::size_t rank);

    std::size_t base_size() const noexcept {
      return _base;
    }

    std::size_t rank() const noexcept {
      return _rank;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    std::vector<PartialNFunction> const& elements() const noexcept {
      return _elements;
    }

    PartialNFunction const& operator[](std::size_t i) const {
      return _elements[i];
    }

    std::optional<std::size_t> index_of(PartialNFunction const& f) const;

    // Appends f unless present; returns its index.
    std::size_t insert(PartialNFunction f);

    bool closed_under_superposition = false;
    bool closed_under_difference    = false;
    bool contains_empty             = false;

    bool fully_closed() const noexcept {
      return closed_under_superposition && closed_under_difference && contains_empty;
    }

    // Recomputes the three flags by exhaustive evaluation.
    void recompute_flags();

   private:
    std::size_t                                                               _base;
    std::size_t                                                               _rank;
    std::vector<PartialNFunction>                                             _elements;
    std::unordered_map<PartialNFunction, std::size_t, PartialNFunction::Hash> _index;
  };

  // Least superset of generators and {∅} closed under superposition and
  // difference. Generators come first (deduplicated), then ∅, then new
  // elements in discovery order.
  FunctionAlgebra close(std::size_t                        base_size,
                        std::size_t                        rank,
                        std::span<PartialNFunction const>  generators,
                        std::size_t                        cap = kDefaultFunctionCap);

  // All (k+1)^(k^n) partial maps, ∅ first, in mixed-radix order of the cells
  // (first cell fastest, undefined < 0 < 1 < ...).
  FunctionAlgebra all_partial_functions(std::size_t base_size,
                                        std::size_t rank,
                                        std::size_t cap = kDefaultFunctionCap);

  // Closure of `generator_count` uniformly sampled partial functions.
  // Deterministic in `seed`.
  FunctionAlgebra random_closed_algebra(std::size_t   base_size,
                                        std::size_t   rank,
                                        std::size_t   generator_count,
                                        std::uint64_t seed,
                                        std::size_t   cap = kDefaultFunctionCap);

  // Reads off the operation tables; zero is the index of ∅. Throws NotClosed
  // naming the first escaping tuple.
  SubtractionMengerAlgebra make_abstract(FunctionAlgebra const& f);

}  // namespace menger
