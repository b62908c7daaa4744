#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "menger/errors.hpp"
#include "menger/order.hpp"

using namespace menger;
using fixtures::PowersetOp;

namespace {

  std::vector<std::vector<bool>> all_filters(OrderStructure const& o) {
    std::vector<std::vector<bool>> out;
    std::size_t const              m = o.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<bool> members(m);
      for (std::size_t x = 0; x < m; ++x) {
        members[x] = (mask >> x) & 1;
      }
      if (is_filter(o, members)) {
        out.push_back(members);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("order of the powerset algebra") {
  auto s = fixtures::powerset(2, PowersetOp::left_projection);
  auto o = build_order(s);
  for (Element x = 0; x < 4; ++x) {
    CHECK(o.meet(x, x) == x);
    for (Element y = 0; y < 4; ++y) {
      CHECK(o.leq(x, y) == ((x & ~y) == 0));
      CHECK(o.meet(x, y) == (x & y));
      CHECK(o.join(x, y) == (x | y));
    }
  }
  CHECK(o.join_within(3, 1, 2) == 3);
  CHECK(o.upper_bounds(1, 2) == std::vector<Element>{3});
  CHECK(o.relation().is_partial_order());
}

TEST_CASE("joins are partial when no upper bound exists") {
  auto o = build_order(make_abstract(fixtures::full_unary()));
  std::size_t undefined = 0;
  for (Element x = 0; x < o.size(); ++x) {
    for (Element y = 0; y < o.size(); ++y) {
      CHECK(o.join(x, y).has_value() == !o.upper_bounds(x, y).empty());
      undefined += !o.join(x, y).has_value();
    }
  }
  CHECK(undefined > 0);
}

TEST_CASE("a subtraction that is not an order is refused") {
  // x - y = 0 everywhere makes 0 and 1 mutually below each other
  SubtractionMengerAlgebra bad(FiniteMengerAlgebra(1, 2, {0, 0, 1, 1}), {0, 0, 0, 0}, 0);
  CHECK_THROWS_AS(build_order(bad), NotAnOrder);
}

TEST_CASE("join well-posedness and identities") {
  for (auto const& s : {fixtures::powerset(3, PowersetOp::left_projection), fixtures::one_element(),
                        make_abstract(fixtures::full_unary()), make_abstract(random_closed_algebra(2, 2, 2, 8, 40))}) {
    auto o = build_order(s);
    auto w = check_join_wellposed(o);
    CHECK(w.holds);
    auto t = translations(s.menger());
    auto j = check_join_identities(o, &t);
    CHECK(j.holds);
    for (auto const& x : j.witnesses) {
      UNSCOPED_INFO(x);
    }
  }
}

TEST_CASE("a corrupted join is caught") {
  // x[{0,1}] complements x, which does not preserve joins
  auto s = fixtures::powerset(2, PowersetOp::intersection);
  auto m = FiniteMengerAlgebra::tabulate(1, 4, [](Element x, std::span<Element const> y) { return y[0] == 3 ? (x ^ 3) : x; });
  SubtractionMengerAlgebra bad(m, {s.sub_table().begin(), s.sub_table().end()}, 0);
  auto o = build_order(bad);
  auto t = translations(bad.menger());
  auto r = check_join_identities(o, &t);
  CHECK_FALSE(r.holds);
  CHECK_FALSE(r.witnesses_for("eq55").empty());
}

TEST_CASE("maximal filters") {
  auto s = fixtures::powerset(2, PowersetOp::left_projection);
  auto o = build_order(s);
  SECTION("a = {0,1}, b = {0}") {
    auto f = maximal_filter(o, 3, 1);
    CHECK(f.generator == 2);
    CHECK(f.elements() == std::vector<Element>{2, 3});
  }
  SECTION("separating from zero") {
    auto f = maximal_filter(o, 3, 0);
    CHECK(f.generator == 1);
    CHECK(maximal_filter(o, 3, 0, TieBreak::greatest).generator == 2);
  }
  SECTION("not separable") {
    CHECK_THROWS_AS(maximal_filter(o, 1, 3), NotSeparable);
    CHECK_THROWS_AS(maximal_filter(o, 0, 2), NotSeparable);
  }
  SECTION("two-element function algebra") {
    auto f2 = build_order(make_abstract(fixtures::two_element_functions()));
    CHECK(maximal_filter(f2, 0, 1).elements() == std::vector<Element>{0});
  }
}

TEST_CASE("finite filters are principal and the chosen ones are maximal") {
  for (auto const& s : {fixtures::powerset(3, PowersetOp::left_projection), make_abstract(fixtures::full_unary()),
                        make_abstract(random_closed_algebra(2, 1, 2, 3, 40))}) {
    auto o = build_order(s);
    REQUIRE(o.size() <= 12);
    auto filters = all_filters(o);
    for (auto const& members : filters) {
      Element meet = 0;
      bool    first = true;
      for (Element x = 0; x < o.size(); ++x) {
        if (members[x]) {
          meet  = first ? x : o.meet(meet, x);
          first = false;
        }
      }
      CHECK(principal_filter(o, meet).members == members);
    }
    for (auto [a, b] : separable_pairs(o)) {
      for (auto tie : {TieBreak::least, TieBreak::greatest}) {
        auto f = maximal_filter(o, a, b, tie);
        CHECK(is_filter(o, f.members));
        CHECK(f.contains(a));
        CHECK_FALSE(f.contains(b));
        for (auto const& g : filters) {
          bool superset = true, strict = false;
          for (Element x = 0; x < o.size(); ++x) {
            superset = superset && (!f.members[x] || g[x]);
            strict   = strict || (g[x] && !f.members[x]);
          }
          if (superset && strict) {
            CHECK(g[b]);
          }
        }
      }
    }
  }
}

TEST_CASE("meet identities through the meet table") {
  auto s = make_abstract(fixtures::full_unary());
  auto o = build_order(s);
  for (Element x = 0; x < o.size(); ++x) {
    for (Element y = 0; y < o.size(); ++y) {
      CHECK(o.meet(s.sub(x, y), y) == s.zero());
      CHECK(s.sub(x, y) == s.sub(x, o.meet(x, y)));
      for (Element z = 0; z < o.size(); ++z) {
        CHECK(o.meet(x, s.sub(y, z)) == s.sub(o.meet(x, y), o.meet(x, z)));
        CHECK(s.sub(o.meet(x, y), z) == o.meet(s.sub(x, z), y));
        if (o.leq(x, y)) {
          CHECK(o.leq(o.meet(x, z), o.meet(y, z)));
        }
      }
    }
  }
}

TEST_CASE("determining pairs") {
  SECTION("two-element function algebra") {
    auto v = VerifiedAlgebra::verify(make_abstract(fixtures::two_element_functions()));
    auto o = build_order(v.algebra());
    auto f = maximal_filter(o, 0, 1);
    CHECK(w_ideal(v.algebra(), v.translations(), f) == std::vector<bool>{false, true});
    auto d = epsilon_relation(v, o, 0, 1, f);
    CHECK(d.classes == std::vector<std::vector<Element>>{{0}, {1}});
    CHECK(d.w_class == 1u);
    CHECK(d.epsilon.is_equivalence());
  }
  SECTION("every separable pair of the full unary algebra") {
    auto v = VerifiedAlgebra::verify(make_abstract(fixtures::full_unary()));
    auto o = build_order(v.algebra());
    auto const& s = v.algebra();
    for (auto [a, b] : separable_pairs(o)) {
      auto d = determining_pair(v, o, a, b);
      CHECK(d.w[s.zero()]);
      CHECK(d.epsilon.is_equivalence());
      CHECK(relation_properties(s.menger(), d.epsilon, v.translations()).v_regular);
      REQUIRE_FALSE(d.w_empty());
      CHECK(subset_properties(s.menger(), d.w).l_ideal);
    }
    CHECK(separable_pairs(o).size() == 56);
  }
  SECTION("one-element algebra has no separable pairs") {
    CHECK(separable_pairs(build_order(fixtures::one_element())).empty());
  }
}
