#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/terms.hpp"

namespace menger::detail {

  // Every elementary translation u[w|_i x] tabulated as a unary map, sorted
  // by the witness prefix (u, w_1..w_n, i) with the hole w_i written as 0.
  struct ContextTable {
    std::vector<std::vector<Element>> prefix;
    std::vector<std::vector<Element>> map;

    explicit ContextTable(FiniteMengerAlgebra const& m) {
      std::size_t const n  = m.rank();
      std::size_t const mm = m.size();
      std::vector<std::pair<std::vector<Element>, std::vector<Element>>> rows;
      for (auto const& ctx : all_contexts(m)) {
        std::vector<Element> p;
        p.reserve(n + 2);
        p.push_back(ctx.head);
        std::size_t k = 0;
        for (std::size_t i = 1; i <= n; ++i) {
          p.push_back(i == ctx.position ? 0 : ctx.others[k++]);
        }
        p.push_back(static_cast<Element>(ctx.position));
        std::vector<Element> f(mm);
        for (Element x = 0; x < mm; ++x) {
          f[x] = ctx.apply(m, x);
        }
        rows.emplace_back(std::move(p), std::move(f));
      }
      std::sort(rows.begin(), rows.end());
      for (auto& [p, f] : rows) {
        prefix.push_back(std::move(p));
        map.push_back(std::move(f));
      }
    }

    std::size_t size() const noexcept {
      return map.size();
    }

    std::vector<Element> witness(std::size_t c, std::initializer_list<Element> rest) const {
      std::vector<Element> w = prefix[c];
      w.insert(w.end(), rest.begin(), rest.end());
      return w;
    }
  };

  inline std::vector<Element> concat(std::initializer_list<Element> head, std::span<Element const> tail) {
    std::vector<Element> w(head);
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
  }

}  // namespace menger::detail
