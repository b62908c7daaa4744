#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "menger/errors.hpp"
#include "menger/terms.hpp"
#include "oracle.hpp"

using namespace menger;
using fixtures::PowersetOp;

namespace {

  FiniteMengerAlgebra left_projection() {
    return FiniteMengerAlgebra::tabulate(1, 2, [](Element x, std::span<Element const>) { return x; });
  }

  std::set<std::vector<Element>> stabilized(FiniteMengerAlgebra const& m, std::size_t* depth = nullptr) {
    auto prev = translations_by_depth(m, 0);
    for (std::size_t d = 1;; ++d) {
      auto next = translations_by_depth(m, d);
      if (next == prev) {
        if (depth) {
          *depth = d - 1;
        }
        return next;
      }
      prev = std::move(next);
    }
  }

}  // namespace

TEST_CASE("term evaluation") {
  auto m = left_projection();
  CHECK(eval_term(m, Term::variable(), 1) == 1);
  auto t = Term::variable().wrap({0, 1, {}});
  CHECK(eval_term(m, t, 1) == 0);
  CHECK(t.to_string(1) == "0[x]");

  auto s  = fixtures::powerset(2, PowersetOp::intersection, 2);
  auto in = Term::variable().wrap({3, 2, {1}});
  auto nested = in.wrap({2, 1, {3}});
  for (Element x = 0; x < 4; ++x) {
    CHECK(eval_term(s.menger(), nested, x) == s.menger().op(2, {eval_term(s.menger(), in, x), 3}));
  }
  CHECK(nested.to_string(2) == "2[3[1 x] 3]");
  CHECK_THROWS_AS(eval_term(m, t, 2), IndexOutOfRange);
  CHECK_THROWS_AS(eval_term(m, Term::variable().wrap({5, 1, {}}), 0), IndexOutOfRange);
  CHECK_THROWS_AS(eval_term(m, Term::variable().wrap({0, 2, {0}}), 0), ShapeMismatch);
}

TEST_CASE("translation closure") {
  SECTION("left projection: identity and two constants") {
    auto t = translations(left_projection());
    CHECK(t.size() == 3);
    CHECK(t.as_set() == std::set<std::vector<Element>>{{0, 1}, {0, 0}, {1, 1}});
  }
  SECTION("one-element algebra") {
    CHECK(translations(fixtures::one_element().menger()).size() == 1);
  }
  SECTION("two-element function algebra: identity and the constant zero") {
    auto s = make_abstract(fixtures::two_element_functions());
    auto t = translations(s.menger());
    CHECK(t.size() == 2);
    CHECK(t.as_set() == std::set<std::vector<Element>>{{0, 1}, {1, 1}});
  }
  SECTION("cap") {
    auto s = make_abstract(fixtures::full_unary());
    CHECK_THROWS_AS(translations(s.menger(), 1), ClosureCapExceeded);
    try {
      translations(s.menger(), 2);
    } catch (ClosureCapExceeded const& e) {
      CHECK(e.cap() == 2);
    }
  }
}

TEST_CASE("translation set invariants") {
  auto suite = fixtures::random_suite(6);
  suite.push_back({"powerset", fixtures::powerset(2, PowersetOp::intersection, 2)});
  for (auto const& inst : suite) {
    INFO(inst.name);
    auto const& m = inst.algebra.menger();
    auto        t = translations(m);
    CHECK(t.function(0).size() == m.size());
    for (Element x = 0; x < m.size(); ++x) {
      CHECK(t.apply(0, x) == x);
    }
    for (std::size_t k = 0; k < t.size(); ++k) {
      auto term = t.generator_witness(k);
      for (Element x = 0; x < m.size(); ++x) {
        CHECK(eval_term(m, term, x) == t.apply(k, x));
      }
    }
    CHECK(t.as_set() == oracle::polynomial_maps(m));
    std::size_t depth = 0;
    CHECK(t.as_set() == stabilized(m, &depth));
    CHECK(depth <= 6);
    CHECK(t.size() <= checked_power(m.size(), m.size()));
  }
}

TEST_CASE("term enumeration") {
  auto m = left_projection();
  CHECK(enumerate_terms(m, 0) == std::vector<Term>{Term::variable()});
  CHECK(enumerate_terms(m, 1).size() == 3);
  auto s = fixtures::powerset(2, PowersetOp::intersection, 2);
  CHECK(enumerate_terms(s.menger(), 1).size() == 1 + 2 * 4 * 4);
  auto terms = enumerate_terms(s.menger(), 2);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    CHECK(terms[i - 1].depth() <= terms[i].depth());
  }
}

TEST_CASE("depth-bounded translations") {
  auto m = left_projection();
  CHECK(translations_by_depth(m, 0) == std::set<std::vector<Element>>{{0, 1}});
  CHECK(translations_by_depth(m, 1) == translations(m).as_set());
  auto s = make_abstract(fixtures::full_unary());
  for (std::size_t d = 0; d < 3; ++d) {
    auto lo = translations_by_depth(s.menger(), d);
    auto hi = translations_by_depth(s.menger(), d + 1);
    CHECK(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()));
  }
  // maps induced by the enumerated terms equal the level-by-level maps
  std::set<std::vector<Element>> induced;
  for (auto const& t : enumerate_terms(s.menger(), 1)) {
    std::vector<Element> f;
    for (Element x = 0; x < s.size(); ++x) {
      f.push_back(eval_term(s.menger(), t, x));
    }
    induced.insert(f);
  }
  CHECK(induced == translations_by_depth(s.menger(), 1));
}

TEST_CASE("orbits") {
  auto s = fixtures::powerset(2, PowersetOp::intersection);
  auto t = translations(s.menger());
  // t(x) = x & c for every c
  CHECK(t.orbit(3) == std::vector<Element>{0, 1, 2, 3});
  CHECK(t.orbit(1) == std::vector<Element>{0, 1});
  auto po = t.pair_orbit(1, 2);
  CHECK(po == std::vector<std::pair<Element, Element>>{{0, 0}, {0, 2}, {1, 0}, {1, 2}});
}
