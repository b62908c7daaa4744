#include "menger/algebra.hpp"

#include <algorithm>
#include <string>

#include "menger/errors.hpp"

namespace menger {

  namespace {
    std::uint64_t hash_table(std::size_t rank, std::size_t size, std::vector<Element> const& table) {
      std::uint64_t h = 1469598103934665603ULL;
      auto          mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
          h ^= (v >> (8 * i)) & 0xff;
          h *= 1099511628211ULL;
        }
      };
      mix(rank);
      mix(size);
      for (auto e : table) {
        mix(e);
      }
      return h;
    }
  }  // namespace

  FiniteMengerAlgebra::FiniteMengerAlgebra(std::size_t rank, std::size_t size, std::vector<Element> table)
      : _rank(rank), _size(size), _table(std::move(table)) {
    if (rank == 0) {
      throw ShapeMismatch("rank must be positive");
    }
    if (size == 0) {
      throw ShapeMismatch("carrier must be non-empty");
    }
    if (_table.size() != checked_power(size, rank + 1)) {
      throw ShapeMismatch("operation table has " + std::to_string(_table.size()) + " entries, expected "
                          + std::to_string(checked_power(size, rank + 1)));
    }
    for (std::size_t i = 0; i < _table.size(); ++i) {
      if (_table[i] >= size) {
        throw IndexOutOfRange("operation table entry " + std::to_string(i) + " is "
                              + std::to_string(_table[i]));
      }
    }
    _fingerprint = hash_table(rank, size, _table);
  }

  Element FiniteMengerAlgebra::at(Element x, std::span<Element const> ys) const {
    if (ys.size() != _rank) {
      throw ShapeMismatch("expected " + std::to_string(_rank) + " arguments");
    }
    if (x >= _size) {
      throw IndexOutOfRange("element " + std::to_string(x) + " out of range");
    }
    for (auto y : ys) {
      if (y >= _size) {
        throw IndexOutOfRange("element " + std::to_string(y) + " out of range");
      }
    }
    return op(x, ys);
  }

  SubtractionMengerAlgebra::SubtractionMengerAlgebra(FiniteMengerAlgebra  menger,
                                                     std::vector<Element> sub,
                                                     Element              zero)
      : _menger(std::move(menger)), _sub(std::move(sub)), _zero(zero) {
    std::size_t m = _menger.size();
    if (_sub.size() != m * m) {
      throw ShapeMismatch("subtraction table has " + std::to_string(_sub.size()) + " entries, expected "
                          + std::to_string(m * m));
    }
    for (auto e : _sub) {
      if (e >= m) {
        throw IndexOutOfRange("subtraction table entry " + std::to_string(e) + " out of range");
      }
    }
    if (zero >= m) {
      throw IndexOutOfRange("zero " + std::to_string(zero) + " out of range");
    }
  }

  BinaryRelation BinaryRelation::full(std::size_t size) {
    BinaryRelation r(size);
    std::fill(r._bits.begin(), r._bits.end(), 1);
    return r;
  }

  BinaryRelation BinaryRelation::identity(std::size_t size) {
    BinaryRelation r(size);
    for (Element x = 0; x < size; ++x) {
      r.insert(x, x);
    }
    return r;
  }

  BinaryRelation BinaryRelation::from_pairs(std::size_t size, std::span<std::pair<Element, Element> const> pairs) {
    BinaryRelation r(size);
    for (auto [x, y] : pairs) {
      if (x >= size || y >= size) {
        throw IndexOutOfRange("relation pair out of range");
      }
      r.insert(x, y);
    }
    return r;
  }

  std::vector<std::pair<Element, Element>> BinaryRelation::pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < _size; ++x) {
      for (Element y = 0; y < _size; ++y) {
        if (contains(x, y)) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

  bool BinaryRelation::is_reflexive() const {
    for (Element x = 0; x < _size; ++x) {
      if (!contains(x, x)) {
        return false;
      }
    }
    return true;
  }

  bool BinaryRelation::is_symmetric() const {
    for (Element x = 0; x < _size; ++x) {
      for (Element y = 0; y < _size; ++y) {
        if (contains(x, y) != contains(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool BinaryRelation::is_antisymmetric() const {
    for (Element x = 0; x < _size; ++x) {
      for (Element y = x + 1; y < _size; ++y) {
        if (contains(x, y) && contains(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool BinaryRelation::is_transitive() const {
    for (Element x = 0; x < _size; ++x) {
      for (Element y = 0; y < _size; ++y) {
        if (!contains(x, y)) {
          continue;
        }
        for (Element z = 0; z < _size; ++z) {
          if (contains(y, z) && !contains(x, z)) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace menger
