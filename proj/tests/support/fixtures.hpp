#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/errors.hpp"
#include "menger/pfunc.hpp"

namespace fixtures {

  using menger::Element;
  using menger::FiniteMengerAlgebra;
  using menger::FunctionAlgebra;
  using menger::PartialNFunction;
  using menger::SubtractionMengerAlgebra;

  struct Instance {
    std::string              name;
    SubtractionMengerAlgebra algebra;
  };

  inline SubtractionMengerAlgebra one_element(std::size_t rank = 1) {
    return SubtractionMengerAlgebra(FiniteMengerAlgebra(rank, 1, std::vector<Element>(1, 0)), {0}, 0);
  }

  enum class PowersetOp { left_projection, intersection };

  // Subsets of {0..atoms-1} as bitmasks, set difference, zero = empty set.
  // left_projection: x[y...] = x; intersection: x[y_1..y_n] = x & y_1 & ... & y_n.
  inline SubtractionMengerAlgebra powerset(std::size_t atoms, PowersetOp op, std::size_t rank = 1) {
    std::size_t const m = std::size_t{1} << atoms;
    auto menger = FiniteMengerAlgebra::tabulate(rank, m, [&](Element x, std::span<Element const> ys) {
      Element v = x;
      if (op == PowersetOp::intersection) {
        for (auto y : ys) {
          v &= y;
        }
      }
      return v;
    });
    return SubtractionMengerAlgebra::with_subtraction(std::move(menger), [](Element x, Element y) { return x & ~y; }, 0);
  }

  inline PartialNFunction unary(std::vector<PartialNFunction::Cell> cells) {
    std::size_t const k = cells.size();
    return PartialNFunction(k, 1, std::move(cells));
  }

  // {f, ∅} for f = {0 -> 0} on A = {0, 1}; f has index 0, ∅ index 1.
  inline FunctionAlgebra two_element_functions() {
    std::vector<PartialNFunction> gens{unary({0, PartialNFunction::kUndefined})};
    return menger::close(2, 1, gens);
  }

  inline FunctionAlgebra full_unary() {
    return menger::all_partial_functions(2, 1);
  }

  // Seeded closures over base 2 with cap 40: seeds 1, 2, ... with 1-3
  // generators, keeping the first `per_rank` closures of each rank that fit.
  inline std::vector<Instance> random_suite(std::size_t per_rank = 25) {
    std::vector<Instance> out;
    for (std::size_t rank : {1, 2}) {
      std::size_t kept = 0;
      for (std::uint64_t seed = 1; kept < per_rank; ++seed) {
        std::size_t const count = 1 + seed % 3;
        try {
          auto f = menger::random_closed_algebra(2, rank, count, seed, 40);
          out.push_back({"random(rank=" + std::to_string(rank) + ",seed=" + std::to_string(seed) + ",gens="
                             + std::to_string(count) + ",size=" + std::to_string(f.size()) + ")",
                         menger::make_abstract(f)});
          ++kept;
        } catch (menger::ClosureCapExceeded const&) {
        }
      }
    }
    return out;
  }

  // The random suite plus the full 9-element unary algebra.
  inline std::vector<Instance> concrete_suite() {
    auto out = random_suite();
    out.push_back({"full-unary(9)", menger::make_abstract(full_unary())});
    return out;
  }

  // Small tables for negative testing: uniformly random tables, single-entry
  // mutants of valid algebras, and valid algebras. Carrier size <= 4.
  inline Instance random_small_table(std::mt19937_64& rng, std::size_t k) {
    auto pick = [&](std::size_t bound) { return static_cast<Element>(rng() % bound); };
    std::size_t const rank = 1 + pick(2);
    std::size_t const mode = pick(10);
    if (mode < 5) {
      std::size_t const    m = 1 + pick(4);
      std::vector<Element> table(menger::checked_power(m, rank + 1)), sub(m * m);
      for (auto& v : table) {
        v = pick(m);
      }
      for (auto& v : sub) {
        v = pick(m);
      }
      return {"uniform#" + std::to_string(k),
              SubtractionMengerAlgebra(FiniteMengerAlgebra(rank, m, std::move(table)), std::move(sub), pick(m))};
    }
    auto base = powerset(1 + pick(2), pick(2) ? PowersetOp::intersection : PowersetOp::left_projection, rank);
    if (mode < 9) {
      std::size_t const    m = base.size();
      std::vector<Element> table(base.menger().table().begin(), base.menger().table().end());
      std::vector<Element> sub(base.sub_table().begin(), base.sub_table().end());
      if (pick(2)) {
        table[pick(static_cast<std::size_t>(table.size()))] = pick(m);
      } else {
        sub[pick(static_cast<std::size_t>(sub.size()))] = pick(m);
      }
      return {"mutant#" + std::to_string(k),
              SubtractionMengerAlgebra(FiniteMengerAlgebra(rank, m, std::move(table)), std::move(sub), 0)};
    }
    return {"valid#" + std::to_string(k), std::move(base)};
  }

}  // namespace fixtures
