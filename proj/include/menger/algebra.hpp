#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "menger/types.hpp"

namespace menger {

  // A carrier {0, ..., m-1} with a total (n+1)-ary operation x[y_1 ... y_n].
  // The table is stored in lexicographic order of (x, y_1, ..., y_n).
  // Superassociativity is not assumed; see check_superassociativity.
  class FiniteMengerAlgebra {
   public:
    FiniteMengerAlgebra(std::size_t rank, std::size_t size, std::vector<Element> table);

    // Tabulates `f(x, ys)` for every argument tuple.
    template <typename F>
    static FiniteMengerAlgebra tabulate(std::size_t rank, std::size_t size, F&& f) {
      std::vector<Element> table;
      table.reserve(checked_power(size, rank + 1));
      std::vector<Element> args(rank + 1, 0);
      if (size > 0) {
        do {
          table.push_back(f(args[0], std::span<Element const>(args).subspan(1)));
        } while (next_tuple(args, size));
      }
      return FiniteMengerAlgebra(rank, size, std::move(table));
    }

    std::size_t rank() const noexcept {
      return _rank;
    }

    std::size_t size() const noexcept {
      return _size;
    }

    // Unchecked lookup; `ys` must have rank() entries.
    Element op(Element x, std::span<Element const> ys) const noexcept {
      std::size_t idx = x;
      for (auto y : ys) {
        idx = idx * _size + y;
      }
      return _table[idx];
    }

    Element op(Element x, std::initializer_list<Element> ys) const noexcept {
      return op(x, std::span<Element const>(ys.begin(), ys.size()));
    }

    // Checked lookup, throws IndexOutOfRange or ShapeMismatch.
    Element at(Element x, std::span<Element const> ys) const;

    std::span<Element const> table() const noexcept {
      return _table;
    }

    // Stable content hash used to tie derived data back to this table.
    std::uint64_t fingerprint() const noexcept {
      return _fingerprint;
    }

    bool operator==(FiniteMengerAlgebra const& that) const {
      return _rank == that._rank && _size == that._size && _table == that._table;
    }

   private:
    std::size_t          _rank;
    std::size_t          _size;
    std::vector<Element> _table;
    std::uint64_t        _fingerprint;
  };

  // (G, o, -, 0): a Menger algebra plus a binary subtraction table and a
  // zero. Construction validates shapes only; the axioms are checked by the
  // kernel checkers.
  class SubtractionMengerAlgebra {
   public:
    SubtractionMengerAlgebra(FiniteMengerAlgebra menger, std::vector<Element> sub, Element zero);

    template <typename F>
    static SubtractionMengerAlgebra with_subtraction(FiniteMengerAlgebra menger, F&& f, Element zero) {
      std::size_t          m = menger.size();
      std::vector<Element> sub(m * m);
      for (Element x = 0; x < m; ++x) {
        for (Element y = 0; y < m; ++y) {
          sub[x * m + y] = f(x, y);
        }
      }
      return SubtractionMengerAlgebra(std::move(menger), std::move(sub), zero);
    }

    FiniteMengerAlgebra const& menger() const noexcept {
      return _menger;
    }

    std::size_t size() const noexcept {
      return _menger.size();
    }

    std::size_t rank() const noexcept {
      return _menger.rank();
    }

    Element zero() const noexcept {
      return _zero;
    }

    Element sub(Element x, Element y) const noexcept {
      return _sub[x * size() + y];
    }

    // x - (x - y)
    Element meet(Element x, Element y) const noexcept {
      return sub(x, sub(x, y));
    }

    // x - y = 0
    bool leq(Element x, Element y) const noexcept {
      return sub(x, y) == _zero;
    }

    Element op(Element x, std::span<Element const> ys) const noexcept {
      return _menger.op(x, ys);
    }

    std::span<Element const> sub_table() const noexcept {
      return _sub;
    }

    bool operator==(SubtractionMengerAlgebra const&) const = default;

   private:
    FiniteMengerAlgebra  _menger;
    std::vector<Element> _sub;
    Element              _zero;
  };

  class BinaryRelation {
   public:
    explicit BinaryRelation(std::size_t size) : _size(size), _bits(size * size, 0) {}

    static BinaryRelation full(std::size_t size);
    static BinaryRelation identity(std::size_t size);
    static BinaryRelation from_pairs(std::size_t size, std::span<std::pair<Element, Element> const> pairs);

    std::size_t size() const noexcept {
      return _size;
    }

    bool contains(Element x, Element y) const noexcept {
      return _bits[x * _size + y] != 0;
    }

    void insert(Element x, Element y) {
      _bits[x * _size + y] = 1;
    }

    void erase(Element x, Element y) {
      _bits[x * _size + y] = 0;
    }

    // Lexicographically ordered member pairs.
    std::vector<std::pair<Element, Element>> pairs() const;

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;
    bool is_transitive() const;

    bool is_quasiorder() const {
      return is_reflexive() && is_transitive();
    }

    bool is_equivalence() const {
      return is_reflexive() && is_symmetric() && is_transitive();
    }

    bool is_partial_order() const {
      return is_quasiorder() && is_antisymmetric();
    }

    bool operator==(BinaryRelation const&) const = default;

   private:
    std::size_t               _size;
    std::vector<std::uint8_t> _bits;
  };

}  // namespace menger
