#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/kernel.hpp"
#include "menger/order.hpp"
#include "menger/pfunc.hpp"
#include "menger/report.hpp"

namespace menger {

  // A point of a representation base. Class and Selector points belong to
  // the simplest representation of the determining pair (a, b); Point is a
  // plain named point (e.g. the base set of a concrete function algebra).
  struct BasePoint {
    enum class Kind { class_point, selector, point };

    Kind        kind  = Kind::point;
    Element     a     = 0;
    Element     b     = 0;
    std::size_t index = 0;  // class index, or selector position 1..n
    std::string name;       // used by Kind::point only

    static BasePoint make_class(Element a, Element b, std::size_t k) {
      return {Kind::class_point, a, b, k, {}};
    }

    static BasePoint make_selector(Element a, Element b, std::size_t i) {
      return {Kind::selector, a, b, i, {}};
    }

    static BasePoint make_point(std::string name) {
      return {Kind::point, 0, 0, 0, std::move(name)};
    }

    // "pair(A,B)/class#k", "pair(A,B)/e#i" or the plain name, where A and B
    // are the labels of a and b.
    std::string to_string(std::vector<std::string> const& labels) const;

    bool operator==(BasePoint const&) const = default;
  };

  // An assignment g |-> P(g) of partial n-place functions over a common base.
  // The graphs share one table of input tuples ("slots"): P(g) is defined
  // exactly on the slots where its value is not kUndefined.
  class Representation {
   public:
    static constexpr std::int32_t kUndefined = -1;

    using Tuple = std::vector<std::uint32_t>;

    Representation(std::size_t rank, std::size_t carrier_size);

    // Builds from explicit graphs; graphs[g] lists (input tuple, output)
    // pairs. Throws ShapeMismatch on a bad index or a non-functional graph.
    static Representation from_graphs(std::size_t                                            rank,
                                      std::vector<BasePoint>                                 base,
                                      std::vector<std::vector<std::pair<Tuple, std::uint32_t>>> const& graphs);

    // The identity embedding of a concrete function algebra into itself.
    static Representation identity_embedding(FunctionAlgebra const& f);

    std::size_t rank() const noexcept {
      return _rank;
    }

    std::size_t carrier_size() const noexcept {
      return _values.size();
    }

    std::vector<BasePoint> const& base() const noexcept {
      return _base;
    }

    std::vector<Tuple> const& slots() const noexcept {
      return _slots;
    }

    // Value of P(g) at slot s, or kUndefined.
    std::int32_t value(Element g, std::size_t s) const {
      return _values[g][s];
    }

    std::vector<std::int32_t> const& values(Element g) const {
      return _values[g];
    }

    // P(g) as (input tuple, output) pairs in slot order.
    std::vector<std::pair<Tuple, std::uint32_t>> graph(Element g) const;

    // P(g) as a dense function over the base; throws ShapeMismatch if the
    // base is too large for a dense table.
    PartialNFunction to_function(Element g) const;

    std::vector<std::pair<Element, Element>> const& provenance() const noexcept {
      return _provenance;
    }

    bool verified() const noexcept {
      return _verified;
    }

    CheckReport const& verification() const noexcept {
      return _verification;
    }

    // Clears P(g) at slot s (mutation hook for tests and tools).
    void undefine(Element g, std::size_t s) {
      _values[g][s] = kUndefined;
    }

    bool same_graphs(Representation const& that) const;

   private:
    friend Representation simplest_representation(SubtractionMengerAlgebra const&, DeterminingPairData const&);
    friend Representation sum_representations(std::vector<Representation> const&, std::size_t, std::size_t);
    friend Representation theorem2_pipeline(VerifiedAlgebra const&, TieBreak);

    std::size_t                            _rank;
    std::vector<BasePoint>                 _base;
    std::vector<Tuple>                     _slots;
    std::vector<std::vector<std::int32_t>> _values;
    std::vector<std::pair<Element, Element>> _provenance;
    bool                                   _verified = false;
    CheckReport                            _verification;
  };

  // The action of the algebra on the ε-classes other than W plus n virtual
  // selector points. Throws ImageSplitsClasses if some g[H_1 ... H_n] meets
  // two classes.
  Representation simplest_representation(SubtractionMengerAlgebra const& s, DeterminingPairData const& d);

  // Disjoint union of bases, union of graphs. `rank` and `carrier_size` are
  // used only when `parts` is empty. Throws BaseCollision or ShapeMismatch.
  Representation sum_representations(std::vector<Representation> const& parts,
                                     std::size_t                        rank         = 1,
                                     std::size_t                        carrier_size = 0);

  // Exhaustive check of P(x[y_1..y_n]) = P(x)[P(y_1)..P(y_n)] (witness hom
  // (x, y_1..y_n)), P(x - y) = P(x) \ P(y) (sub (x, y)), P(0) = ∅ (zero ())
  // and injectivity (injective (x, y), x < y). Throws ShapeMismatch when the
  // representation does not fit the algebra.
  CheckReport verify_representation(SubtractionMengerAlgebra const& s,
                                    Representation const&           r,
                                    CheckOptions const&             opts = {});

  // Sum of the simplest representations over all separable pairs, verified.
  // The result carries its report; throws FaithfulnessFailure (naming the
  // first witness) if verification fails.
  Representation theorem2_pipeline(VerifiedAlgebra const& v, TieBreak tie = TieBreak::least);

  // Re-runs the pipeline under `tie` and returns its verification report.
  CheckReport tiebreak_robustness(VerifiedAlgebra const& v, TieBreak tie);

}  // namespace menger
