#include "menger/order.hpp"

#include <algorithm>
#include <string>

#include "detail.hpp"
#include "menger/errors.hpp"

namespace menger {

  namespace {

    std::string pair_string(Element x, Element y) {
      return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
    }

    // Bit rows of the upper-bound sets, for fast common-bound queries.
    class UpperBounds {
     public:
      explicit UpperBounds(OrderStructure const& o) : _words((o.size() + 63) / 64), _rows(o.size() * _words, 0) {
        for (Element x = 0; x < o.size(); ++x) {
          for (Element a = 0; a < o.size(); ++a) {
            if (o.leq(x, a)) {
              _rows[x * _words + a / 64] |= std::uint64_t{1} << (a % 64);
            }
          }
        }
      }

      bool common(Element x, Element y, Element z) const {
        for (std::size_t w = 0; w < _words; ++w) {
          if (_rows[x * _words + w] & _rows[y * _words + w] & _rows[z * _words + w]) {
            return true;
          }
        }
        return false;
      }

     private:
      std::size_t                _words;
      std::vector<std::uint64_t> _rows;
    };

  }  // namespace

  std::vector<Element> OrderStructure::upper_bounds(Element x, Element y) const {
    std::vector<Element> out;
    for (Element a = 0; a < size(); ++a) {
      if (leq(x, a) && leq(y, a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  OrderStructure build_order(SubtractionMengerAlgebra const& s) {
    OrderStructure    o(s);
    std::size_t const m = s.size();
    o._leq              = induced_order(s);
    for (Element x = 0; x < m; ++x) {
      if (!o.leq(x, x)) {
        throw NotAnOrder("not reflexive at " + std::to_string(x));
      }
    }
    for (Element x = 0; x < m; ++x) {
      for (Element y = x + 1; y < m; ++y) {
        if (o.leq(x, y) && o.leq(y, x)) {
          throw NotAnOrder("not antisymmetric at " + pair_string(x, y));
        }
      }
    }
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        if (!o.leq(x, y)) {
          continue;
        }
        for (Element z = 0; z < m; ++z) {
          if (o.leq(y, z) && !o.leq(x, z)) {
            throw NotAnOrder("not transitive at " + pair_string(x, y) + ", " + pair_string(y, z));
          }
        }
      }
    }
    o._meet.resize(m * m);
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        o._meet[x * m + y] = s.meet(x, y);
      }
    }
    o._join.assign(m * m, -1);
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        for (Element a = 0; a < m; ++a) {
          if (o.leq(x, a) && o.leq(y, a)) {
            o._join[x * m + y] = o.join_within(a, x, y);
            break;
          }
        }
      }
    }
    return o;
  }

  CheckReport check_join_wellposed(OrderStructure const& o, CheckOptions const& opts) {
    ReportBuilder     out(opts);
    std::size_t const m = o.size();
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        auto const ub = o.upper_bounds(x, y);
        for (std::size_t i = 0; i < ub.size(); ++i) {
          for (std::size_t j = i + 1; j < ub.size(); ++j) {
            out.tally();
            if (o.join_within(ub[i], x, y) != o.join_within(ub[j], x, y)) {
              out.fail("eq42", {x, y, ub[i], ub[j]});
            }
          }
        }
      }
    }
    return std::move(out).finish();
  }

  // Ids and tuples: join_lub (x,y,z)  eq44..eq53 (x,y[,z])  eq55 (x,y,z_1..z_n)
  // eq56 (context prefix, x, y)  cor2 (x,y,t). A missing join that the law
  // promises is reported under the law's id.
  CheckReport check_join_identities(OrderStructure const& o, TranslationSet const* t, CheckOptions const& opts) {
    auto const&       s  = o.algebra();
    auto const&       mg = s.menger();
    std::size_t const m  = o.size();
    std::size_t const n  = s.rank();
    Element const     zero = s.zero();
    if (t && !t->matches(mg)) {
      throw TranslationMismatch("translation set was computed for a different operation table");
    }
    ReportBuilder     out(opts);
    UpperBounds const ub(o);
    auto sub  = [&](Element x, Element y) { return s.sub(x, y); };
    auto meet = [&](Element x, Element y) { return o.meet(x, y); };
    auto leq  = [&](Element x, Element y) { return o.leq(x, y); };

    // join(x, y) is the least common upper bound; the segment basics.
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        auto j = o.join(x, y);
        for (Element z = 0; z < m; ++z) {
          out.tally();
          bool const bound = leq(x, z) && leq(y, z);
          if (j ? (!leq(x, *j) || !leq(y, *j) || (bound && !leq(*j, z))) : bound) {
            out.fail("join_lub", {x, y, z});
          }
        }
      }
    }
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        auto j = o.join(x, y);
        if (!j) {
          continue;
        }
        out.tally(4);
        if (o.join(y, x) != j || o.join(x, x) != x || o.join(x, zero) != x) {
          out.fail("join_basic", {x, y});
        }
        if (meet(x, *j) != x) {
          out.fail("eq44", {x, y});
        }
        if (o.join(x, meet(x, y)) != x) {
          out.fail("eq45", {x, y});
        }
        if (sub(*j, sub(y, x)) != x) {
          out.fail("eq52", {x, y});
        }
      }
    }
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        out.tally(2);
        if (leq(y, x) && o.join(sub(x, y), y) != x) {
          out.fail("eq51", {x, y});
        }
        if (o.join(meet(x, y), sub(x, y)) != x) {
          out.fail("eq53", {x, y});
        }
      }
    }
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        for (Element z = 0; z < m; ++z) {
          if (!ub.common(x, y, z)) {
            continue;
          }
          out.tally(5);
          auto xy = o.join(x, y), yz = o.join(y, z), xz = o.join(x, z);
          if (!xy || !yz || !xz) {
            out.fail("eq46", {x, y, z});
            continue;
          }
          if (o.join(*xy, z) != o.join(x, *yz)) {
            out.fail("eq46", {x, y, z});
          }
          if (meet(x, *yz) != o.join(meet(x, y), meet(x, z))) {
            out.fail("eq47", {x, y, z});
          }
          auto lhs48 = o.join(x, meet(y, z));
          if (!lhs48 || *lhs48 != meet(*xy, *xz)) {
            out.fail("eq48", {x, y, z});
          }
          if (o.join(sub(x, z), sub(y, z)) != sub(*xy, z)) {
            out.fail("eq49", {x, y, z});
          }
          if (leq(x, z) && leq(y, z) && !leq(*xy, z)) {
            out.fail("eq50", {x, y, z});
          }
        }
      }
    }

    // Compatibility with the Menger operation.
    std::vector<Element> zs(n, 0), ys(n);
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        auto j = o.join(x, y);
        if (!j) {
          continue;
        }
        std::fill(zs.begin(), zs.end(), 0);
        do {
          out.tally();
          if (o.join(mg.op(x, zs), mg.op(y, zs)) != mg.op(*j, zs)) {
            out.fail("eq55", detail::concat({x, y}, zs));
          }
        } while (next_tuple(zs, m));
      }
    }
    detail::ContextTable const ctx(mg);
    for (std::size_t c = 0; c < ctx.size(); ++c) {
      auto const& f = ctx.map[c];
      for (Element x = 0; x < m; ++x) {
        for (Element y = 0; y < m; ++y) {
          auto j = o.join(x, y);
          if (!j) {
            continue;
          }
          out.tally();
          if (o.join(f[x], f[y]) != f[*j]) {
            out.fail("eq56", ctx.witness(c, {x, y}));
          }
        }
      }
    }
    if (t) {
      for (Element x = 0; x < m; ++x) {
        for (Element y = 0; y < m; ++y) {
          auto j = o.join(x, y);
          if (!j) {
            continue;
          }
          for (std::size_t k = 0; k < t->size(); ++k) {
            out.tally();
            auto const& f = t->functions()[k];
            if (o.join(f[x], f[y]) != f[*j]) {
              out.fail("cor2", {x, y, static_cast<Element>(k)});
            }
          }
        }
      }
    }
    return std::move(out).finish();
  }

  std::vector<Element> Filter::elements() const {
    std::vector<Element> out;
    for (Element x = 0; x < members.size(); ++x) {
      if (members[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool is_filter(OrderStructure const& o, std::vector<bool> const& members) {
    std::size_t const m = o.size();
    if (members.size() != m) {
      throw ShapeMismatch("subset mask has the wrong length");
    }
    if (std::none_of(members.begin(), members.end(), [](bool b) { return b; })) {
      return false;
    }
    if (members[o.algebra().zero()]) {
      return false;
    }
    for (Element x = 0; x < m; ++x) {
      if (!members[x]) {
        continue;
      }
      for (Element y = 0; y < m; ++y) {
        if (o.leq(x, y) && !members[y]) {
          return false;
        }
        if (members[y] && !members[o.meet(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  Filter principal_filter(OrderStructure const& o, Element c) {
    if (c >= o.size()) {
      throw IndexOutOfRange("element " + std::to_string(c) + " outside carrier");
    }
    Filter f{c, std::vector<bool>(o.size(), false)};
    for (Element x = 0; x < o.size(); ++x) {
      f.members[x] = o.leq(c, x);
    }
    return f;
  }

  Filter maximal_filter(OrderStructure const& o, Element a, Element b, TieBreak tie) {
    std::size_t const m = o.size();
    if (a >= m || b >= m) {
      throw IndexOutOfRange("pair " + pair_string(a, b) + " outside carrier");
    }
    if (o.leq(a, b)) {
      throw NotSeparable("no filter separates " + pair_string(a, b));
    }
    auto candidate = [&](Element c) { return o.leq(c, a) && !o.leq(c, b); };
    std::vector<Element> minimal;
    for (Element c = 0; c < m; ++c) {
      if (!candidate(c)) {
        continue;
      }
      bool is_min = true;
      for (Element d = 0; d < m && is_min; ++d) {
        is_min = d == c || !candidate(d) || !o.leq(d, c);
      }
      if (is_min) {
        minimal.push_back(c);
      }
    }
    Element const c = tie == TieBreak::least ? minimal.front() : minimal.back();
    auto          f = principal_filter(o, c);
    // No strictly larger filter [d) may still exclude b.
    for (Element d = 0; d < m; ++d) {
      if (d != c && o.leq(d, c) && !o.leq(d, b)) {
        throw std::logic_error("filter generator " + std::to_string(c) + " is not minimal");
      }
    }
    return f;
  }

  std::vector<bool> w_ideal(SubtractionMengerAlgebra const& s, TranslationSet const& t, Filter const& f) {
    if (!t.matches(s.menger())) {
      throw TranslationMismatch("translation set was computed for a different operation table");
    }
    if (f.members.size() != s.size()) {
      throw ShapeMismatch("filter mask has the wrong length");
    }
    std::vector<bool> w(s.size());
    for (Element x = 0; x < s.size(); ++x) {
      auto const orbit = t.orbit(x);
      w[x] = std::none_of(orbit.begin(), orbit.end(), [&](Element v) { return f.contains(v); });
    }
    return w;
  }

  DeterminingPairData epsilon_relation(VerifiedAlgebra const& v,
                                       OrderStructure const&  o,
                                       Element                a,
                                       Element                b,
                                       Filter const&          f) {
    auto const&       s = v.algebra();
    auto const&       t = v.translations();
    std::size_t const m = s.size();
    if (o.algebra() != s) {
      throw ShapeMismatch("order structure belongs to a different algebra");
    }
    auto fail = [&](std::string const& what) {
      throw DeterminingPairViolation("pair " + pair_string(a, b) + ": " + what);
    };

    DeterminingPairData d;
    d.a      = a;
    d.b      = b;
    d.filter = f;
    d.w      = w_ideal(s, t, f);
    d.epsilon = BinaryRelation(m);
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        if (!d.w[o.meet(x, y)] || (d.w[x] && d.w[y])) {
          d.epsilon.insert(x, y);
        }
      }
    }
    if (!d.epsilon.is_equivalence()) {
      fail("epsilon is not an equivalence");
    }

    d.class_of.assign(m, 0);
    std::vector<bool> seen(m, false);
    for (Element x = 0; x < m; ++x) {
      if (seen[x]) {
        continue;
      }
      std::vector<Element> cls;
      for (Element y = x; y < m; ++y) {
        if (d.epsilon.contains(x, y)) {
          cls.push_back(y);
          seen[y]       = true;
          d.class_of[y] = d.classes.size();
        }
      }
      d.classes.push_back(std::move(cls));
    }

    // A quasiorder is v-regular iff it is i-regular for every i, i.e. iff
    // every elementary translation maps each class into a single class.
    for (auto const& ctx : t.elementary()) {
      for (auto const& cls : d.classes) {
        auto const target = d.class_of[ctx.apply(s.menger(), cls.front())];
        for (auto x : cls) {
          if (d.class_of[ctx.apply(s.menger(), x)] != target) {
            fail("epsilon is not v-regular");
          }
        }
      }
    }

    bool const w_nonempty = std::any_of(d.w.begin(), d.w.end(), [](bool x) { return x; });
    if (w_nonempty) {
      Element first = 0;
      while (!d.w[first]) {
        ++first;
      }
      auto const k = d.class_of[first];
      for (Element x = 0; x < m; ++x) {
        if (d.w[x] != (d.class_of[x] == k)) {
          fail("W is not an epsilon-class");
        }
      }
      d.w_class = k;
      if (!subset_properties(s.menger(), d.w).l_ideal) {
        fail("W is not an l-ideal");
      }
    }

    for (std::size_t k = 0; k < d.classes.size(); ++k) {
      if (d.w_class == k) {
        continue;
      }
      std::vector<bool> mask(m, false);
      for (auto x : d.classes[k]) {
        mask[x] = true;
      }
      if (!is_filter(o, mask)) {
        fail("class " + std::to_string(k) + " is not a filter");
      }
    }

    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        if (d.w[x] && d.w[y]) {
          auto j = o.join(x, y);
          if (j && !d.w[*j]) {
            fail("W is not closed under the join of " + pair_string(x, y));
          }
        }
      }
    }
    return d;
  }

  DeterminingPairData determining_pair(VerifiedAlgebra const& v,
                                       OrderStructure const&  o,
                                       Element                a,
                                       Element                b,
                                       TieBreak               tie) {
    return epsilon_relation(v, o, a, b, maximal_filter(o, a, b, tie));
  }

  std::vector<std::pair<Element, Element>> separable_pairs(OrderStructure const& o) {
    std::vector<std::pair<Element, Element>> out;
    for (Element a = 0; a < o.size(); ++a) {
      for (Element b = 0; b < o.size(); ++b) {
        if (!o.leq(a, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

}  // namespace menger
