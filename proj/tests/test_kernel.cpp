#include <catch_amalgamated.hpp>
#include <random>

#include "fixtures.hpp"
#include "menger/errors.hpp"
#include "menger/kernel.hpp"
#include "menger/order.hpp"
#include "oracle.hpp"

using namespace menger;
using fixtures::PowersetOp;

namespace {

  FiniteMengerAlgebra nonassociative_pair() {
    // o(0,0)=1, o(0,1)=0, o(1,0)=0, o(1,1)=0
    return FiniteMengerAlgebra(1, 2, {1, 0, 0, 0});
  }

  bool sorted_per_axiom(CheckReport const& r) {
    std::map<std::string, std::vector<Element>> last;
    for (auto const& w : r.witnesses) {
      auto it = last.find(w.axiom);
      if (it != last.end() && !(it->second < w.tuple)) {
        return false;
      }
      last[w.axiom] = w.tuple;
    }
    return true;
  }

}  // namespace

TEST_CASE("algebra construction validates shapes") {
  CHECK_THROWS_AS(FiniteMengerAlgebra(1, 2, {0, 1, 1}), ShapeMismatch);
  CHECK_THROWS_AS(FiniteMengerAlgebra(1, 2, {0, 1, 1, 2}), IndexOutOfRange);
  CHECK_THROWS_AS(FiniteMengerAlgebra(0, 2, {0, 1}), ShapeMismatch);
  auto m = FiniteMengerAlgebra(1, 2, {0, 1, 1, 0});
  CHECK_THROWS_AS(SubtractionMengerAlgebra(m, {0, 0, 0}, 0), ShapeMismatch);
  CHECK_THROWS_AS(SubtractionMengerAlgebra(m, {0, 0, 0, 0}, 2), IndexOutOfRange);
  Element ys[] = {2};
  CHECK_THROWS_AS(m.at(0, ys), IndexOutOfRange);
}

TEST_CASE("superassociativity") {
  SECTION("rank-2 projection onto the first inner argument") {
    auto m = FiniteMengerAlgebra::tabulate(2, 3, [](Element, std::span<Element const> ys) { return ys[0]; });
    auto r = check_superassociativity(m);
    CHECK(r.holds);
    CHECK(r.witnesses.empty());
    CHECK(r.checked_count == 3 * 9 * 9);
  }
  SECTION("a non-associative binary table") {
    auto r = check_superassociativity(nonassociative_pair());
    REQUIRE_FALSE(r.holds);
    CHECK(r.witnesses.front() == Witness{"eq2", {0, 0, 1}});
    CHECK(sorted_per_axiom(r));
  }
  SECTION("concrete function algebra") {
    CHECK(check_superassociativity(make_abstract(fixtures::full_unary()).menger()).holds);
  }
}

TEST_CASE("subtraction axioms") {
  auto s = fixtures::powerset(2, PowersetOp::left_projection);
  CHECK(check_subtraction_axioms(s).holds);
  CHECK(check_subtraction_axioms(fixtures::one_element()).holds);

  std::vector<Element> sub(s.sub_table().begin(), s.sub_table().end());
  sub[1 * 4 + 2] = 3;  // {0} - {1} := {0,1}
  SubtractionMengerAlgebra bad(s.menger(), sub, 0);
  auto r = check_subtraction_axioms(bad);
  REQUIRE_FALSE(r.holds);
  CHECK((!r.witnesses_for("eq3").empty() || !r.witnesses_for("eq4").empty()));
  for (auto const& w : r.witnesses) {
    CHECK(oracle::violates(bad, translations(bad.menger()), w));
  }
}

TEST_CASE("compatibility axioms") {
  SECTION("full unary function algebra") {
    auto s = make_abstract(fixtures::full_unary());
    CHECK(check_compat_axioms(s, translations(s.menger())).holds);
  }
  SECTION("one-element algebra") {
    auto s = fixtures::one_element(2);
    CHECK(check_compat_axioms(s, translations(s.menger())).holds);
  }
  SECTION("powerset with the left projection violates distributivity over meets") {
    auto s = fixtures::powerset(2, PowersetOp::left_projection);
    auto t = translations(s.menger());
    auto r = check_compat_axioms(s, t);
    CHECK(r.holds == oracle::compatible(s));
    REQUIRE_FALSE(r.holds);
    CHECK(r.witnesses_for("eq11").empty());
    REQUIRE_FALSE(r.witnesses_for("eq12").empty());
    // u = 1, hole at position 1, x = y = 0: 1[0] = 1 but 1[0] - 1[0] = 0
    CHECK(r.witnesses_for("eq12").front().tuple == std::vector<Element>{1, 0, 1, 0, 0});
    for (auto const& w : r.witnesses) {
      CHECK(oracle::violates(s, t, w));
    }
  }
  SECTION("translation set of another table is refused") {
    auto s = fixtures::powerset(1, PowersetOp::intersection);
    auto other = translations(fixtures::powerset(1, PowersetOp::left_projection).menger());
    CHECK_THROWS_AS(check_compat_axioms(s, other), TranslationMismatch);
    CHECK_THROWS_AS(check_derived_identities(s, other), TranslationMismatch);
  }
}

TEST_CASE("derived identities") {
  for (auto const& s : {fixtures::powerset(2, PowersetOp::intersection), fixtures::powerset(3, PowersetOp::intersection, 2),
                        fixtures::one_element(), make_abstract(fixtures::full_unary()),
                        make_abstract(fixtures::two_element_functions())}) {
    auto r = check_derived_identities(s, translations(s.menger()));
    CHECK(r.holds);
    CHECK(r.witnesses.empty());
  }
  SECTION("closures from the random generator") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      auto s = make_abstract(random_closed_algebra(2, 1 + seed % 2, 2, seed, 40));
      CHECK(check_derived_identities(s, translations(s.menger())).holds);
    }
  }
  SECTION("a broken subtraction is reported with the identity that fails") {
    // x - y = 1 for all x, y on {0, 1}; zero 0
    SubtractionMengerAlgebra bad(FiniteMengerAlgebra(1, 2, {0, 1, 0, 1}), {1, 1, 1, 1}, 0);
    auto r = check_derived_identities(bad, translations(bad.menger()));
    REQUIRE_FALSE(r.holds);
    CHECK(r.witnesses_for("eq7").front().tuple == std::vector<Element>{0});
    CHECK(r.witnesses_for("eq8a").front().tuple == std::vector<Element>{0});
    CHECK(sorted_per_axiom(r));
  }
}

TEST_CASE("witness cap keeps the full scan") {
  auto m       = nonassociative_pair();
  auto full    = check_superassociativity(m, {100});
  auto capped  = check_superassociativity(m, {1});
  CHECK_FALSE(capped.holds);
  CHECK(capped.witnesses.size() == 1);
  CHECK(capped.witnesses.front() == full.witnesses.front());
  CHECK(capped.checked_count == full.checked_count);
  CHECK(check_superassociativity(m) == check_superassociativity(m));
}

TEST_CASE("relation properties") {
  auto lp = fixtures::powerset(1, PowersetOp::left_projection);
  SECTION("full relation is stable") {
    CHECK(relation_properties(lp.menger(), BinaryRelation::full(2)).stable);
  }
  SECTION("single pair under the left projection is l-regular") {
    std::pair<Element, Element> p[] = {{0, 1}};
    CHECK(relation_properties(lp.menger(), BinaryRelation::from_pairs(2, p)).l_regular);
  }
  SECTION("the induced order of a verified algebra is stable and weakly steady") {
    for (auto const& s : {make_abstract(fixtures::full_unary()), fixtures::powerset(2, PowersetOp::intersection, 2)}) {
      auto props = relation_properties(s.menger(), induced_order(s));
      CHECK(props.stable);
      CHECK(props.weakly_steady);
      CHECK(props.v_regular);
      CHECK(props.l_regular);
    }
  }
}

TEST_CASE("subset properties") {
  auto s = make_abstract(fixtures::full_unary());
  auto m = s.menger();
  auto all = subset_properties(m, std::vector<bool>(m.size(), true));
  auto none = subset_properties(m, std::vector<bool>(m.size(), false));
  for (auto const& p : {all, none}) {
    CHECK(p.stable_subset);
    CHECK(p.l_ideal);
    CHECK(std::all_of(p.i_ideal.begin(), p.i_ideal.end(), [](bool b) { return b; }));
  }
  auto v = VerifiedAlgebra::verify(s);
  auto o = build_order(s);
  for (auto [a, b] : separable_pairs(o)) {
    auto w = w_ideal(s, v.translations(), maximal_filter(o, a, b));
    CHECK(subset_properties(m, w).l_ideal);
  }
}

TEST_CASE("distributivity reformulations agree") {
  SECTION("verified algebras") {
    for (auto const& s : {make_abstract(fixtures::full_unary()), fixtures::one_element()}) {
      auto r = check_prop4_equivalences(s, translations(s.menger()));
      CHECK(r.eq12);
      CHECK(r.eq22);
      CHECK(r.eq23);
      CHECK(r.eq24);
      CHECK(r.agreement.holds);
    }
  }
  SECTION("a mutated operation that breaks distributivity breaks a reformulation too") {
    // x[y] = x meet c(y) on the powerset of two atoms with a scrambled c
    auto base = fixtures::powerset(2, PowersetOp::intersection);
    std::vector<Element> c{3, 0, 2, 1};
    auto m = FiniteMengerAlgebra::tabulate(1, 4, [&](Element x, std::span<Element const> y) { return x & c[y[0]]; });
    SubtractionMengerAlgebra s(m, {base.sub_table().begin(), base.sub_table().end()}, 0);
    REQUIRE(check_subtraction_axioms(s).holds);
    auto r = check_prop4_equivalences(s, translations(s.menger()));
    CHECK_FALSE(r.eq12);
    CHECK((!r.eq22 || !r.eq23 || !r.eq24));
  }
}

TEST_CASE("checkers agree with direct evaluation on random small tables") {
  std::mt19937_64 rng(2024);
  for (std::size_t k = 0; k < 60; ++k) {
    auto inst = fixtures::random_small_table(rng, k);
    auto const& s = inst.algebra;
    INFO(inst.name);
    CHECK(check_superassociativity(s.menger()).holds == oracle::superassociative(s.menger()));
    CHECK(check_subtraction_axioms(s).holds == oracle::subtraction_algebra(s));
    auto t = translations(s.menger());
    auto c = check_compat_axioms(s, t);
    CHECK(c.holds == oracle::compatible(s));
    for (auto const& w : c.witnesses) {
      CHECK(oracle::violates(s, t, w));
    }
  }
}

TEST_CASE("binary relation predicates") {
  auto id = BinaryRelation::identity(3);
  CHECK(id.is_equivalence());
  CHECK(id.is_partial_order());
  std::pair<Element, Element> p[] = {{0, 1}, {1, 2}};
  auto r = BinaryRelation::from_pairs(3, p);
  CHECK_FALSE(r.is_transitive());
  CHECK(r.is_antisymmetric());
  CHECK(r.pairs() == std::vector<std::pair<Element, Element>>{{0, 1}, {1, 2}});
}

TEST_CASE("verified wrapper") {
  CHECK_NOTHROW(VerifiedAlgebra::verify(make_abstract(fixtures::full_unary())));
  CHECK_THROWS_AS(VerifiedAlgebra::verify(fixtures::powerset(2, PowersetOp::left_projection)), VerificationFailed);
  CHECK_THROWS_AS(VerifiedAlgebra::verify(make_abstract(fixtures::full_unary()), 2), ClosureCapExceeded);
}
