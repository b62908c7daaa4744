#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/kernel.hpp"
#include "menger/report.hpp"
#include "menger/terms.hpp"

namespace menger {

  // The induced order x <= y iff x - y = 0, the meet x - (x - y) and the join
  // a - ((a - x) meet (a - y)) taken inside any common upper bound a.
  class OrderStructure {
   public:
    SubtractionMengerAlgebra const& algebra() const noexcept {
      return _algebra;
    }

    std::size_t size() const noexcept {
      return _algebra.size();
    }

    BinaryRelation const& relation() const noexcept {
      return _leq;
    }

    bool leq(Element x, Element y) const noexcept {
      return _leq.contains(x, y);
    }

    Element meet(Element x, Element y) const noexcept {
      return _meet[x * size() + y];
    }

    // Undefined when x and y have no common upper bound.
    std::optional<Element> join(Element x, Element y) const noexcept {
      auto v = _join[x * size() + y];
      return v < 0 ? std::nullopt : std::optional<Element>(static_cast<Element>(v));
    }

    // a - ((a - x) meet (a - y)) for an arbitrary element a.
    Element join_within(Element a, Element x, Element y) const noexcept {
      auto const& s = _algebra;
      return s.sub(a, meet(s.sub(a, x), s.sub(a, y)));
    }

    // Common upper bounds of x and y, ascending.
    std::vector<Element> upper_bounds(Element x, Element y) const;

   private:
    friend OrderStructure build_order(SubtractionMengerAlgebra const&);

    explicit OrderStructure(SubtractionMengerAlgebra s) : _algebra(std::move(s)), _leq(_algebra.size()) {}

    SubtractionMengerAlgebra      _algebra;
    BinaryRelation                _leq;
    std::vector<Element>          _meet;
    std::vector<std::int64_t>     _join;
  };

  // Throws NotAnOrder with a witness pair if ω is not a partial order. Only
  // the subtraction part of `s` is consulted.
  OrderStructure build_order(SubtractionMengerAlgebra const& s);

  // Agreement of the join formula across every pair of common upper bounds.
  // Witness eq42 (x, y, a, b).
  CheckReport check_join_wellposed(OrderStructure const& o, CheckOptions const& opts = {});

  // Lattice laws of the join inside segments, compatibility of the join with
  // the Menger operation, and (when `t` is given) with every polynomial.
  CheckReport check_join_identities(OrderStructure const&  o,
                                    TranslationSet const*  t    = nullptr,
                                    CheckOptions const&    opts = {});

  // A filter of a finite subtraction algebra; always principal: members are
  // exactly the elements above the generator.
  struct Filter {
    Element           generator = 0;
    std::vector<bool> members;

    bool contains(Element x) const {
      return members[x];
    }

    std::vector<Element> elements() const;

    bool operator==(Filter const&) const = default;
  };

  // Checks the three filter conditions directly on a membership mask.
  bool is_filter(OrderStructure const& o, std::vector<bool> const& members);

  // [c) = {x : c <= x}
  Filter principal_filter(OrderStructure const& o, Element c);

  enum class TieBreak { least, greatest };

  // A maximal filter containing a and not b: [c) for a <=-minimal c with
  // c <= a and c not <= b. Throws NotSeparable when a <= b.
  Filter maximal_filter(OrderStructure const& o, Element a, Element b, TieBreak tie = TieBreak::least);

  // {x : t(x) not in F for every polynomial t}
  std::vector<bool> w_ideal(SubtractionMengerAlgebra const& s, TranslationSet const& t, Filter const& f);

  struct DeterminingPairData {
    Element                           a = 0;
    Element                           b = 0;
    Filter                            filter;
    std::vector<bool>                 w;        // membership mask of W
    BinaryRelation                    epsilon{0};
    // Classes sorted by least member; members ascending.
    std::vector<std::vector<Element>> classes;
    std::vector<std::size_t>          class_of;  // element -> class index
    std::optional<std::size_t>        w_class;   // index of W among classes

    bool w_empty() const {
      return !w_class.has_value();
    }
  };

  // Builds ε = {(x, y) : x meet y not in W, or x, y in W} for the filter F
  // and asserts the determining-pair laws: ε is a v-regular equivalence, W is
  // empty or an l-ideal that is one ε-class, every other class is a filter,
  // and W is closed under existing joins. Throws DeterminingPairViolation.
  DeterminingPairData epsilon_relation(VerifiedAlgebra const& v,
                                       OrderStructure const&  o,
                                       Element                a,
                                       Element                b,
                                       Filter const&          f);

  // maximal_filter followed by epsilon_relation.
  DeterminingPairData determining_pair(VerifiedAlgebra const& v,
                                       OrderStructure const&  o,
                                       Element                a,
                                       Element                b,
                                       TieBreak               tie = TieBreak::least);

  // All (a, b) with a not <= b, in lexicographic order.
  std::vector<std::pair<Element, Element>> separable_pairs(OrderStructure const& o);

}  // namespace menger
