#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/types.hpp"

namespace menger {

  // The elementary translation x |-> head[others with x at `position`].
  // `position` is 1-based; `others` holds the n-1 remaining coefficients in
  // order, skipping the hole.
  struct Context {
    Element              head     = 0;
    std::size_t          position = 1;
    std::vector<Element> others;

    Element apply(FiniteMengerAlgebra const& m, Element x) const;

    auto operator<=>(Context const&) const = default;
  };

  // A unary polynomial. The variable occurs exactly once, so every term is a
  // chain of contexts wrapped around x; layers are stored innermost first and
  // the bare variable has no layers.
  class Term {
   public:
    Term() = default;

    static Term variable() {
      return Term();
    }

    // head[others | position <- this]
    Term wrap(Context ctx) const;

    std::size_t depth() const noexcept {
      return _layers.size();
    }

    std::span<Context const> layers() const noexcept {
      return _layers;
    }

    // Renders e.g. "2[0 1[x]]" for rank 2.
    std::string to_string(std::size_t rank) const;

    bool operator==(Term const&) const = default;

   private:
    std::vector<Context> _layers;
  };

  // Bottom-up evaluation; throws IndexOutOfRange on a bad index and
  // ShapeMismatch on a context of the wrong rank.
  Element eval_term(FiniteMengerAlgebra const& m, Term const& t, Element x);

  // Every context over the carrier, in lexicographic (head, position, others)
  // order.
  std::vector<Context> all_contexts(FiniteMengerAlgebra const& m);

  inline constexpr std::size_t kDefaultTranslationCap = 20000;

  // The finite monoid of unary maps induced by the polynomials over a Menger
  // algebra: the least set containing the identity and closed under
  // post-composition with every elementary translation.
  class TranslationSet {
   public:
    std::size_t size() const noexcept {
      return _functions.size();
    }

    std::size_t carrier_size() const noexcept {
      return _carrier;
    }

    std::uint64_t fingerprint() const noexcept {
      return _fingerprint;
    }

    bool matches(FiniteMengerAlgebra const& m) const noexcept {
      return m.fingerprint() == _fingerprint && m.size() == _carrier;
    }

    // Index 0 is always the identity.
    std::span<Element const> function(std::size_t k) const {
      return _functions[k];
    }

    Element apply(std::size_t k, Element x) const noexcept {
      return _functions[k][x];
    }

    std::vector<std::vector<Element>> const& functions() const noexcept {
      return _functions;
    }

    // A term inducing function k.
    Term generator_witness(std::size_t k) const;

    // Distinct elementary translation maps with one representative context
    // each, in order of first appearance in all_contexts.
    std::span<Context const> elementary() const noexcept {
      return _elementary;
    }

    // Sorted distinct values {t(x) : t in T}.
    std::vector<Element> orbit(Element x) const;

    // Sorted distinct pairs {(t(x), t(y)) : t in T}.
    std::vector<std::pair<Element, Element>> pair_orbit(Element x, Element y) const;

    std::set<std::vector<Element>> as_set() const;

   private:
    friend TranslationSet translations(FiniteMengerAlgebra const&, std::size_t);

    std::uint64_t                     _fingerprint = 0;
    std::size_t                       _carrier     = 0;
    std::vector<std::vector<Element>> _functions;
    // (parent function, elementary index) for every non-identity function.
    std::vector<std::pair<std::size_t, std::size_t>> _origin;
    std::vector<Context>                             _elementary;
  };

  // Fixpoint closure; throws ClosureCapExceeded when more than `cap`
  // functions appear.
  TranslationSet translations(FiniteMengerAlgebra const& m, std::size_t cap = kDefaultTranslationCap);

  // All terms of depth <= depth_limit ordered by depth, then
  // lexicographically on their contexts from the outermost layer in.
  std::vector<Term> enumerate_terms(FiniteMengerAlgebra const& m, std::size_t depth_limit);

  // The maps induced by terms of depth <= depth_limit, computed level by level
  // from raw contexts. Independent of translations(); used as its oracle.
  std::set<std::vector<Element>> translations_by_depth(FiniteMengerAlgebra const& m, std::size_t depth_limit);

}  // namespace menger
