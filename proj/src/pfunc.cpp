#include "menger/pfunc.hpp"

#include <algorithm>
#include <random>

#include "menger/errors.hpp"

namespace menger {

  namespace {

    std::size_t table_size(std::size_t base, std::size_t rank) {
      auto cells = checked_power(base, rank);
      if (cells > (std::uint64_t{1} << 24)) {
        throw ShapeMismatch("function table over " + std::to_string(base) + "^" + std::to_string(rank)
                            + " is too large");
      }
      return static_cast<std::size_t>(cells);
    }

    void same_shape(PartialNFunction const& f, PartialNFunction const& g) {
      if (f.base_size() != g.base_size() || f.rank() != g.rank()) {
        throw ShapeMismatch("partial functions of different shapes");
      }
    }

    std::string tuple_string(std::span<std::size_t const> idx) {
      std::string s = "(";
      for (std::size_t i = 0; i < idx.size(); ++i) {
        s += (i ? "," : "") + std::to_string(idx[i]);
      }
      return s + ")";
    }

  }  // namespace

  PartialNFunction::PartialNFunction(std::size_t base_size, std::size_t rank)
      : _base(base_size), _rank(rank), _cells(table_size(base_size, rank), kUndefined) {
    if (rank == 0) {
      throw ShapeMismatch("rank must be positive");
    }
  }

  PartialNFunction::PartialNFunction(std::size_t base_size, std::size_t rank, std::vector<Cell> cells)
      : _base(base_size), _rank(rank), _cells(std::move(cells)) {
    if (rank == 0) {
      throw ShapeMismatch("rank must be positive");
    }
    if (_cells.size() != table_size(base_size, rank)) {
      throw ShapeMismatch("expected " + std::to_string(table_size(base_size, rank)) + " cells, got "
                          + std::to_string(_cells.size()));
    }
    for (auto c : _cells) {
      if (c != kUndefined && (c < 0 || static_cast<std::size_t>(c) >= base_size)) {
        throw IndexOutOfRange("cell value " + std::to_string(c) + " outside base of size "
                              + std::to_string(base_size));
      }
    }
  }

  std::size_t PartialNFunction::cell_index(std::span<Element const> args) const {
    if (args.size() != _rank) {
      throw ShapeMismatch("expected " + std::to_string(_rank) + " arguments");
    }
    std::size_t idx = 0;
    for (auto a : args) {
      if (a >= _base) {
        throw IndexOutOfRange("argument " + std::to_string(a) + " outside base");
      }
      idx = idx * _base + a;
    }
    return idx;
  }

  std::optional<Element> PartialNFunction::at(std::span<Element const> args) const {
    auto c = _cells[cell_index(args)];
    return c == kUndefined ? std::nullopt : std::optional<Element>(static_cast<Element>(c));
  }

  void PartialNFunction::set(std::span<Element const> args, std::optional<Element> value) {
    if (value && *value >= _base) {
      throw IndexOutOfRange("value " + std::to_string(*value) + " outside base");
    }
    _cells[cell_index(args)] = value ? static_cast<Cell>(*value) : kUndefined;
  }

  bool PartialNFunction::empty() const {
    return std::all_of(_cells.begin(), _cells.end(), [](Cell c) { return c == kUndefined; });
  }

  std::size_t PartialNFunction::domain_size() const {
    return static_cast<std::size_t>(
        std::count_if(_cells.begin(), _cells.end(), [](Cell c) { return c != kUndefined; }));
  }

  std::string PartialNFunction::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < _cells.size(); ++i) {
      if (i) {
        s += ',';
      }
      s += _cells[i] == kUndefined ? std::string("-") : std::to_string(_cells[i]);
    }
    return s;
  }

  PartialNFunction superpose(PartialNFunction const& f, std::span<PartialNFunction const> gs) {
    if (gs.size() != f.rank()) {
      throw ShapeMismatch("superposition needs " + std::to_string(f.rank()) + " inner functions, got "
                          + std::to_string(gs.size()));
    }
    for (auto const& g : gs) {
      same_shape(f, g);
    }
    std::size_t const   k = f.base_size();
    std::size_t const   n = f.rank();
    auto const          outer = f.cells();
    std::vector<PartialNFunction::Cell> out(f.cell_count(), PartialNFunction::kUndefined);
    for (std::size_t c = 0; c < out.size(); ++c) {
      std::size_t idx = 0;
      bool        ok  = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        auto v = gs[i].cells()[c];
        ok     = v != PartialNFunction::kUndefined;
        idx    = idx * k + static_cast<std::size_t>(v);
      }
      if (ok) {
        out[c] = outer[idx];
      }
    }
    return PartialNFunction(k, n, std::move(out));
  }

  PartialNFunction difference(PartialNFunction const& f, PartialNFunction const& g) {
    same_shape(f, g);
    std::vector<PartialNFunction::Cell> out(f.cells().begin(), f.cells().end());
    auto const                          gc = g.cells();
    for (std::size_t c = 0; c < out.size(); ++c) {
      if (out[c] == gc[c]) {
        out[c] = PartialNFunction::kUndefined;
      }
    }
    return PartialNFunction(f.base_size(), f.rank(), std::move(out));
  }

  FunctionAlgebra::FunctionAlgebra(std::size_t base_size, std::size_t rank) : _base(base_size), _rank(rank) {
    if (rank == 0) {
      throw ShapeMismatch("rank must be positive");
    }
  }

  std::optional<std::size_t> FunctionAlgebra::index_of(PartialNFunction const& f) const {
    auto it = _index.find(f);
    return it == _index.end() ? std::nullopt : std::optional<std::size_t>(it->second);
  }

  std::size_t FunctionAlgebra::insert(PartialNFunction f) {
    if (f.base_size() != _base || f.rank() != _rank) {
      throw ShapeMismatch("function shape does not match the algebra");
    }
    auto [it, fresh] = _index.emplace(f, _elements.size());
    if (fresh) {
      _elements.push_back(std::move(f));
    }
    return it->second;
  }

  void FunctionAlgebra::recompute_flags() {
    std::size_t const m = _elements.size();
    contains_empty      = index_of(PartialNFunction(_base, _rank)).has_value();

    closed_under_difference = true;
    for (std::size_t x = 0; x < m && closed_under_difference; ++x) {
      for (std::size_t y = 0; y < m && closed_under_difference; ++y) {
        closed_under_difference = index_of(difference(_elements[x], _elements[y])).has_value();
      }
    }

    closed_under_superposition = true;
    if (m == 0) {
      return;
    }
    std::vector<Element>          args(_rank + 1, 0);
    std::vector<PartialNFunction> gs;
    do {
      gs.clear();
      for (std::size_t i = 1; i <= _rank; ++i) {
        gs.push_back(_elements[args[i]]);
      }
      if (!index_of(superpose(_elements[args[0]], gs))) {
        closed_under_superposition = false;
        return;
      }
    } while (next_tuple(args, m));
  }

  FunctionAlgebra close(std::size_t                       base_size,
                        std::size_t                       rank,
                        std::span<PartialNFunction const> generators,
                        std::size_t                       cap) {
    FunctionAlgebra out(base_size, rank);
    auto            add = [&](PartialNFunction f) {
      if (!out.index_of(f) && out.size() >= cap) {
        throw ClosureCapExceeded(cap, "function closure exceeded its size limit");
      }
      out.insert(std::move(f));
    };
    for (auto const& g : generators) {
      add(g);
    }
    add(PartialNFunction(base_size, rank));

    // Semi-naive fixpoint: each round only visits tuples that involve an
    // element discovered in the previous round.
    std::size_t done = 0;
    while (done < out.size()) {
      std::size_t const limit = out.size();
      for (std::size_t x = 0; x < limit; ++x) {
        for (std::size_t y = 0; y < limit; ++y) {
          if (x >= done || y >= done) {
            add(difference(out[x], out[y]));
          }
        }
      }
      std::vector<Element>          args(rank + 1, 0);
      std::vector<PartialNFunction> gs;
      do {
        if (std::none_of(args.begin(), args.end(), [&](Element a) { return a >= done; })) {
          continue;
        }
        gs.clear();
        for (std::size_t i = 1; i <= rank; ++i) {
          gs.push_back(out[args[i]]);
        }
        add(superpose(out[args[0]], gs));
      } while (next_tuple(args, limit));
      done = limit;
    }
    out.closed_under_superposition = true;
    out.closed_under_difference    = true;
    out.contains_empty             = true;
    return out;
  }

  FunctionAlgebra all_partial_functions(std::size_t base_size, std::size_t rank, std::size_t cap) {
    std::size_t const cells = table_size(base_size, rank);
    std::uint64_t     total = 1;
    for (std::size_t c = 0; c < cells; ++c) {
      total *= base_size + 1;
      if (total > cap) {
        throw ClosureCapExceeded(cap, "all partial functions on " + std::to_string(base_size) + "^"
                                          + std::to_string(rank) + " exceed the size limit");
      }
    }
    FunctionAlgebra                     out(base_size, rank);
    std::vector<PartialNFunction::Cell> digits(cells, PartialNFunction::kUndefined);
    for (std::uint64_t k = 0; k < total; ++k) {
      out.insert(PartialNFunction(base_size, rank, digits));
      for (std::size_t c = 0; c < cells; ++c) {
        if (++digits[c] < static_cast<PartialNFunction::Cell>(base_size)) {
          break;
        }
        digits[c] = PartialNFunction::kUndefined;
      }
    }
    out.closed_under_superposition = true;
    out.closed_under_difference    = true;
    out.contains_empty             = true;
    return out;
  }

  FunctionAlgebra random_closed_algebra(std::size_t   base_size,
                                        std::size_t   rank,
                                        std::size_t   generator_count,
                                        std::uint64_t seed,
                                        std::size_t   cap) {
    std::mt19937_64                     rng(seed);
    std::size_t const                   cells = table_size(base_size, rank);
    std::vector<PartialNFunction>       gens;
    for (std::size_t g = 0; g < generator_count; ++g) {
      std::vector<PartialNFunction::Cell> c(cells);
      for (auto& v : c) {
        // uniform over {undefined, 0, ..., k-1}
        v = static_cast<PartialNFunction::Cell>(rng() % (base_size + 1)) - 1;
      }
      gens.emplace_back(base_size, rank, std::move(c));
    }
    return close(base_size, rank, gens, cap);
  }

  SubtractionMengerAlgebra make_abstract(FunctionAlgebra const& f) {
    std::size_t const m = f.size();
    std::size_t const n = f.rank();
    auto const        zero = f.index_of(PartialNFunction(f.base_size(), n));
    if (!zero) {
      throw NotClosed("the empty function is not a member");
    }
    std::vector<Element> sub(m * m);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        auto r = f.index_of(difference(f[x], f[y]));
        if (!r) {
          std::size_t idx[] = {x, y};
          throw NotClosed("difference " + tuple_string(idx) + " escapes the set");
        }
        sub[x * m + y] = static_cast<Element>(*r);
      }
    }
    std::vector<Element>          table;
    std::vector<Element>          args(n + 1, 0);
    std::vector<PartialNFunction> gs;
    table.reserve(checked_power(m, n + 1));
    do {
      gs.clear();
      for (std::size_t i = 1; i <= n; ++i) {
        gs.push_back(f[args[i]]);
      }
      auto r = f.index_of(superpose(f[args[0]], gs));
      if (!r) {
        std::vector<std::size_t> idx(args.begin(), args.end());
        throw NotClosed("superposition " + tuple_string(idx) + " escapes the set");
      }
      table.push_back(static_cast<Element>(*r));
    } while (next_tuple(args, m));
    return SubtractionMengerAlgebra(FiniteMengerAlgebra(n, m, std::move(table)), std::move(sub),
                                    static_cast<Element>(*zero));
  }

}  // namespace menger
