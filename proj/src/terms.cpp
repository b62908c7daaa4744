#include "menger/terms.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "menger/errors.hpp"

namespace menger {

  namespace {
    std::vector<Element> identity_map(std::size_t m) {
      std::vector<Element> id(m);
      for (Element x = 0; x < m; ++x) {
        id[x] = x;
      }
      return id;
    }

    void fill_args(Context const& ctx, Element x, std::vector<Element>& args) {
      std::size_t k = 0;
      for (std::size_t i = 0; i < args.size(); ++i) {
        args[i] = (i + 1 == ctx.position) ? x : ctx.others[k++];
      }
    }
  }  // namespace

  Element Context::apply(FiniteMengerAlgebra const& m, Element x) const {
    std::vector<Element> args(m.rank());
    fill_args(*this, x, args);
    return m.op(head, args);
  }

  Term Term::wrap(Context ctx) const {
    Term t = *this;
    t._layers.push_back(std::move(ctx));
    return t;
  }

  std::string Term::to_string(std::size_t rank) const {
    std::string s = "x";
    for (auto const& ctx : _layers) {
      std::ostringstream os;
      os << ctx.head << "[";
      std::size_t k = 0;
      for (std::size_t i = 1; i <= rank; ++i) {
        os << (i == 1 ? "" : " ");
        if (i == ctx.position) {
          os << s;
        } else {
          os << ctx.others[k++];
        }
      }
      os << "]";
      s = os.str();
    }
    return s;
  }

  Element eval_term(FiniteMengerAlgebra const& m, Term const& t, Element x) {
    if (x >= m.size()) {
      throw IndexOutOfRange("variable value " + std::to_string(x) + " out of range");
    }
    std::vector<Element> args(m.rank());
    for (auto const& ctx : t.layers()) {
      if (ctx.position < 1 || ctx.position > m.rank() || ctx.others.size() + 1 != m.rank()) {
        throw ShapeMismatch("context does not match rank " + std::to_string(m.rank()));
      }
      if (ctx.head >= m.size()
          || std::any_of(ctx.others.begin(), ctx.others.end(), [&](Element e) { return e >= m.size(); })) {
        throw IndexOutOfRange("term coefficient out of range");
      }
      fill_args(ctx, x, args);
      x = m.op(ctx.head, args);
    }
    return x;
  }

  std::vector<Context> all_contexts(FiniteMengerAlgebra const& m) {
    std::vector<Context> out;
    std::size_t const    n = m.rank();
    for (Element head = 0; head < m.size(); ++head) {
      for (std::size_t pos = 1; pos <= n; ++pos) {
        std::vector<Element> others(n - 1, 0);
        do {
          out.push_back(Context{head, pos, others});
        } while (next_tuple(others, m.size()));
      }
    }
    return out;
  }

  Term TranslationSet::generator_witness(std::size_t k) const {
    std::vector<std::size_t> chain;
    while (k != 0) {
      auto [parent, e] = _origin[k];
      chain.push_back(e);
      k = parent;
    }
    Term t;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      t = t.wrap(_elementary[*it]);
    }
    return t;
  }

  std::vector<Element> TranslationSet::orbit(Element x) const {
    std::vector<bool> seen(_carrier, false);
    for (auto const& f : _functions) {
      seen[f[x]] = true;
    }
    std::vector<Element> out;
    for (Element v = 0; v < _carrier; ++v) {
      if (seen[v]) {
        out.push_back(v);
      }
    }
    return out;
  }

  std::vector<std::pair<Element, Element>> TranslationSet::pair_orbit(Element x, Element y) const {
    std::vector<bool> seen(_carrier * _carrier, false);
    for (auto const& f : _functions) {
      seen[f[x] * _carrier + f[y]] = true;
    }
    std::vector<std::pair<Element, Element>> out;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i]) {
        out.emplace_back(static_cast<Element>(i / _carrier), static_cast<Element>(i % _carrier));
      }
    }
    return out;
  }

  std::set<std::vector<Element>> TranslationSet::as_set() const {
    return {_functions.begin(), _functions.end()};
  }

  TranslationSet translations(FiniteMengerAlgebra const& m, std::size_t cap) {
    std::size_t const mm = m.size();
    TranslationSet    result;
    result._fingerprint = m.fingerprint();
    result._carrier     = mm;

    // Distinct elementary maps, each with its first context.
    std::vector<std::vector<Element>>                                      elem_maps;
    std::unordered_map<std::vector<Element>, std::size_t, VectorHash>     elem_index;
    std::vector<Element>                                                   args(m.rank());
    for (auto& ctx : all_contexts(m)) {
      std::vector<Element> map(mm);
      for (Element x = 0; x < mm; ++x) {
        fill_args(ctx, x, args);
        map[x] = m.op(ctx.head, args);
      }
      if (elem_index.emplace(map, elem_maps.size()).second) {
        elem_maps.push_back(std::move(map));
        result._elementary.push_back(std::move(ctx));
      }
    }

    std::unordered_map<std::vector<Element>, std::size_t, VectorHash> index;
    result._functions.push_back(identity_map(mm));
    result._origin.emplace_back(0, 0);
    index.emplace(result._functions.front(), 0);

    std::size_t frontier = 0;
    while (frontier < result._functions.size()) {
      auto const f = result._functions[frontier];
      for (std::size_t e = 0; e < elem_maps.size(); ++e) {
        std::vector<Element> g(mm);
        for (Element x = 0; x < mm; ++x) {
          g[x] = elem_maps[e][f[x]];
        }
        if (index.contains(g)) {
          continue;
        }
        if (result._functions.size() >= cap) {
          throw ClosureCapExceeded(cap, "translation monoid exceeds the closure cap");
        }
        index.emplace(g, result._functions.size());
        result._functions.push_back(std::move(g));
        result._origin.emplace_back(frontier, e);
      }
      ++frontier;
    }
    return result;
  }

  std::vector<Term> enumerate_terms(FiniteMengerAlgebra const& m, std::size_t depth_limit) {
    auto const        contexts = all_contexts(m);
    std::vector<Term> out{Term::variable()};
    std::vector<Term> level{Term::variable()};
    for (std::size_t d = 1; d <= depth_limit; ++d) {
      // Outermost layer varies slowest, so wrap each context around every
      // term of the previous level in order.
      std::vector<Term> next;
      next.reserve(level.size() * contexts.size());
      for (auto const& ctx : contexts) {
        for (auto const& t : level) {
          next.push_back(t.wrap(ctx));
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      level = std::move(next);
    }
    return out;
  }

  std::set<std::vector<Element>> translations_by_depth(FiniteMengerAlgebra const& m, std::size_t depth_limit) {
    std::size_t const              mm = m.size();
    auto const                     contexts = all_contexts(m);
    std::set<std::vector<Element>> current{identity_map(mm)};
    std::vector<Element>           args(m.rank());
    for (std::size_t d = 1; d <= depth_limit; ++d) {
      std::set<std::vector<Element>> next{identity_map(mm)};
      for (auto const& f : current) {
        for (auto const& ctx : contexts) {
          std::vector<Element> g(mm);
          for (Element x = 0; x < mm; ++x) {
            std::size_t k = 0;
            for (std::size_t i = 0; i < args.size(); ++i) {
              args[i] = (i + 1 == ctx.position) ? f[x] : ctx.others[k++];
            }
            g[x] = m.at(ctx.head, args);
          }
          next.insert(std::move(g));
        }
      }
      if (next == current) {
        break;
      }
      current = std::move(next);
    }
    return current;
  }

}  // namespace menger
