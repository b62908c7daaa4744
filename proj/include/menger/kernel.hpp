#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/report.hpp"
#include "menger/terms.hpp"

namespace menger {

  // Witness tuples (element indices unless noted; positions i are 1-based,
  // t1/t2/t are TranslationSet indices):
  //   eq2   (x, y_1..y_n, z_1..z_n)
  //   eq3, eq4 (x, y)      eq5 (x, y, z)      eq6 ()
  //   eq11  (x, y, z_1..z_n)
  //   eq12  (u, w_1..w_n, i, x, y)  with w_i reported as 0 (it is a hole)
  //   eq13  (x, y, z, t1, t2)

  CheckReport check_superassociativity(FiniteMengerAlgebra const& m, CheckOptions const& opts = {});

  CheckReport check_subtraction_axioms(SubtractionMengerAlgebra const& s, CheckOptions const& opts = {});

  // Throws TranslationMismatch if `t` was built for another table.
  CheckReport check_compat_axioms(SubtractionMengerAlgebra const& s,
                                  TranslationSet const&           t,
                                  CheckOptions const&             opts = {});

  // Identities that hold in every subtraction Menger algebra: the subtraction
  // algebra consequences, the order and meet facts, the zero-absorption laws
  // and the polynomial laws. A failure names the identity; see derived.cpp
  // for the list of ids and their tuples.
  CheckReport check_derived_identities(SubtractionMengerAlgebra const& s,
                                       TranslationSet const&           t,
                                       CheckOptions const&             opts = {});

  struct DistributivityReport {
    bool        eq12 = false;
    bool        eq22 = false;
    bool        eq23 = false;
    bool        eq24 = false;
    // holds iff the four truth values agree; witnesses are the violations of
    // the failing laws.
    CheckReport agreement;
  };

  // Evaluates the distributivity axiom for elementary translations and its
  // three reformulations independently.
  DistributivityReport check_prop4_equivalences(SubtractionMengerAlgebra const& s,
                                                TranslationSet const&           t,
                                                CheckOptions const&             opts = {});

  struct RelationProperties {
    bool              stable    = false;
    bool              l_regular = false;
    bool              v_regular = false;
    std::vector<bool> i_regular;  // index i-1 for position i
    bool              weakly_steady = false;
  };

  RelationProperties relation_properties(FiniteMengerAlgebra const& m, BinaryRelation const& r);
  RelationProperties relation_properties(FiniteMengerAlgebra const& m,
                                         BinaryRelation const&      r,
                                         TranslationSet const&      t);

  struct SubsetProperties {
    bool              stable_subset = false;
    bool              l_ideal       = false;
    std::vector<bool> i_ideal;  // index i-1 for position i
  };

  // `members` is a membership mask of length m.
  SubsetProperties subset_properties(FiniteMengerAlgebra const& m, std::vector<bool> const& members);

  // ω = {(x, y) : x - y = 0}
  BinaryRelation induced_order(SubtractionMengerAlgebra const& s);

  // An algebra that has passed every axiom check, together with its
  // translation monoid. The only way to obtain one is verify().
  class VerifiedAlgebra {
   public:
    // Runs check_superassociativity, check_subtraction_axioms and
    // check_compat_axioms. Throws VerificationFailed (carrying the first
    // witness in its message) or ClosureCapExceeded.
    static VerifiedAlgebra verify(SubtractionMengerAlgebra s,
                                  std::size_t              translation_cap = kDefaultTranslationCap);

    // Same checks, returning the merged report instead of throwing.
    static CheckReport check_all(SubtractionMengerAlgebra const& s,
                                 TranslationSet const&           t,
                                 CheckOptions const&             opts = {});

    SubtractionMengerAlgebra const& algebra() const noexcept {
      return *_algebra;
    }

    TranslationSet const& translations() const noexcept {
      return *_translations;
    }

   private:
    VerifiedAlgebra(std::shared_ptr<SubtractionMengerAlgebra const> s,
                    std::shared_ptr<TranslationSet const>           t)
        : _algebra(std::move(s)), _translations(std::move(t)) {}

    std::shared_ptr<SubtractionMengerAlgebra const> _algebra;
    std::shared_ptr<TranslationSet const>           _translations;
  };

}  // namespace menger
