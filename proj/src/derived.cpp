// Identities that follow from the axioms of a subtraction Menger algebra.
//
// Ids and witness tuples (t, t1, t2 are TranslationSet indices, i is a
// 1-based position, a context prefix is (u, w_1..w_n, i) with the hole 0):
//   eq7 (x)  eq8a (x)  eq8b (x)  eq9 (x,y,z)  eq10 (x,y)
//   eq15a (x)  eq15b (x,y)  eq16 (x,y)  eq17 (x,y,z)  eq18 (x,y,z)
//   eq19 (x,y,u,v)  eq20 (x,y)  eq21 (x,y,z)
//   prop2a (x_1..x_n)  prop2b (context prefix)
//   prop3_stable ()  prop3_weakly_steady ()
//   eq26 (context prefix, x, y)  eq27 (x,y)  eq28 (x,y,t)  eq29 (x,y,z_1..z_n)
//   eq30..eq38 (x,y[,z])  semilattice (x,y,z)
//   eq39 (x,y,t)  eq40 (x,y,t)
//   prop8 (x,y,t1,t2)  eq61 (x,y,t1,t2)  eq62 (x,y,z,t1,t2)
//   eq63 (x,y,z,g,t1,t2)  eq64 (x,y,z,t1,t2)

#include <unordered_map>

#include "detail.hpp"
#include "menger/errors.hpp"
#include "menger/kernel.hpp"

namespace menger {

  namespace {

    using PairList = std::vector<std::pair<Element, Element>>;

    class PolynomialView {
     public:
      PolynomialView(SubtractionMengerAlgebra const& s, TranslationSet const& t)
          : _s(s), _t(t), _m(s.size()), _orbits(_m) {
        for (Element x = 0; x < _m; ++x) {
          _orbits[x] = t.orbit(x);
        }
      }

      std::vector<Element> const& orbit(Element x) const {
        return _orbits[x];
      }

      PairList const& pair_orbit(Element x, Element y) {
        auto key = static_cast<std::size_t>(x) * _m + y;
        auto it  = _pairs.find(key);
        if (it == _pairs.end()) {
          it = _pairs.emplace(key, _t.pair_orbit(x, y)).first;
        }
        return it->second;
      }

     private:
      SubtractionMengerAlgebra const&           _s;
      TranslationSet const&                     _t;
      std::size_t                               _m;
      std::vector<std::vector<Element>>         _orbits;
      std::unordered_map<std::size_t, PairList> _pairs;
    };

    void subtraction_consequences(SubtractionMengerAlgebra const& s, ReportBuilder& out) {
      std::size_t const mm = s.size();
      Element const     o  = s.zero();
      auto sub  = [&](Element x, Element y) { return s.sub(x, y); };
      auto meet = [&](Element x, Element y) { return s.meet(x, y); };
      auto leq  = [&](Element x, Element y) { return s.leq(x, y); };

      for (Element x = 0; x < mm; ++x) {
        if (sub(x, x) != o) {
          out.fail("eq7", {x});
        }
      }
      for (Element x = 0; x < mm; ++x) {
        if (sub(x, o) != x) {
          out.fail("eq8a", {x});
        }
      }
      for (Element x = 0; x < mm; ++x) {
        if (sub(o, x) != o) {
          out.fail("eq8b", {x});
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          for (Element z = 0; z < mm; ++z) {
            if (sub(sub(sub(x, y), sub(x, z)), sub(z, y)) != o) {
              out.fail("eq9", {x, y, z});
            }
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          if (sub(sub(x, sub(x, y)), y) != o) {
            out.fail("eq10", {x, y});
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        if (!leq(o, x)) {
          out.fail("eq15a", {x});
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          if (!leq(sub(x, y), x)) {
            out.fail("eq15b", {x, y});
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          if (leq(x, y) != (sub(x, sub(x, y)) == x)) {
            out.fail("eq16", {x, y});
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          for (Element z = 0; z < mm; ++z) {
            if (leq(x, y) && !leq(sub(x, z), sub(y, z))) {
              out.fail("eq17", {x, y, z});
            }
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          for (Element z = 0; z < mm; ++z) {
            if (leq(x, y) && !leq(sub(z, y), sub(z, x))) {
              out.fail("eq18", {x, y, z});
            }
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          if (!leq(x, y)) {
            continue;
          }
          for (Element u = 0; u < mm; ++u) {
            for (Element v = 0; v < mm; ++v) {
              if (leq(u, v) && !leq(sub(x, v), sub(y, u))) {
                out.fail("eq19", {x, y, u, v});
              }
            }
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          if (sub(sub(x, y), y) != sub(x, y)) {
            out.fail("eq20", {x, y});
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          for (Element z = 0; z < mm; ++z) {
            if (sub(sub(x, y), z) != sub(sub(x, z), sub(y, z))) {
              out.fail("eq21", {x, y, z});
            }
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          if (leq(x, y) != (meet(x, y) == x)) {
            out.fail("eq27", {x, y});
          }
        }
      }

      // Meet facts, all over (x, y, z).
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          for (Element z = 0; z < mm; ++z) {
            if (meet(x, x) != x || meet(x, y) != meet(y, x) || meet(meet(x, y), z) != meet(x, meet(y, z))) {
              out.fail("semilattice", {x, y, z});
            }
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          for (Element z = 0; z < mm; ++z) {
            if (leq(x, y) && leq(x, z) && !leq(x, meet(y, z))) {
              out.fail("eq30", {x, y, z});
            }
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          for (Element z = 0; z < mm; ++z) {
            if (leq(x, y) && !leq(meet(x, z), meet(y, z))) {
              out.fail("eq31", {x, y, z});
            }
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          if (meet(x, y) == o && sub(x, y) != x) {
            out.fail("eq32", {x, y});
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          if (meet(sub(x, y), y) != o) {
            out.fail("eq33", {x, y});
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          for (Element z = 0; z < mm; ++z) {
            if (meet(x, sub(y, z)) != sub(meet(x, y), meet(x, z))) {
              out.fail("eq34", {x, y, z});
            }
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          if (sub(x, y) != sub(x, meet(x, y))) {
            out.fail("eq35", {x, y});
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          for (Element z = 0; z < mm; ++z) {
            if (sub(meet(x, y), sub(y, z)) != meet(meet(x, y), z)) {
              out.fail("eq36", {x, y, z});
            }
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          for (Element z = 0; z < mm; ++z) {
            if (sub(meet(x, y), z) != meet(sub(x, z), sub(y, z))) {
              out.fail("eq37", {x, y, z});
            }
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          for (Element z = 0; z < mm; ++z) {
            if (sub(meet(x, y), z) != meet(sub(x, z), y)) {
              out.fail("eq38", {x, y, z});
            }
          }
        }
      }
      out.tally(9 * mm + 12 * mm * mm + 12 * mm * mm * mm + mm * mm * mm * mm);
    }

    void menger_consequences(SubtractionMengerAlgebra const&      s,
                             TranslationSet const&                t,
                             detail::ContextTable const&          ctx,
                             ReportBuilder&                       out) {
      auto const&       m  = s.menger();
      std::size_t const n  = m.rank();
      std::size_t const mm = m.size();
      Element const     o  = s.zero();

      std::vector<Element> xs(n, 0);
      do {
        if (m.op(o, xs) != o) {
          out.fail("prop2a", xs);
        }
      } while (next_tuple(xs, mm));
      for (std::size_t c = 0; c < ctx.size(); ++c) {
        if (ctx.map[c][o] != o) {
          out.fail("prop2b", ctx.prefix[c]);
        }
      }

      for (std::size_t c = 0; c < ctx.size(); ++c) {
        auto const& f = ctx.map[c];
        for (Element x = 0; x < mm; ++x) {
          for (Element y = 0; y < mm; ++y) {
            if (f[s.meet(x, y)] != s.sub(f[x], f[s.sub(x, y)])) {
              out.fail("eq26", ctx.witness(c, {x, y}));
            }
          }
        }
      }

      std::vector<Element> zs(n, 0);
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          std::fill(zs.begin(), zs.end(), 0);
          do {
            if (m.op(s.meet(x, y), zs) != s.meet(m.op(x, zs), m.op(y, zs))) {
              out.fail("eq29", detail::concat({x, y}, zs));
            }
          } while (next_tuple(zs, mm));
        }
      }

      auto const omega = induced_order(s);
      auto const props = relation_properties(m, omega, t);
      if (!props.stable) {
        out.fail("prop3_stable", {});
      }
      if (!props.weakly_steady) {
        out.fail("prop3_weakly_steady", {});
      }
      out.tally(checked_power(mm, n) + ctx.size() * (1 + mm * mm) + checked_power(mm, n + 2) + 2);
    }

    void polynomial_consequences(SubtractionMengerAlgebra const& s, TranslationSet const& t, ReportBuilder& out) {
      std::size_t const mm = s.size();
      std::size_t const T  = t.size();
      Element const     o  = s.zero();
      auto sub  = [&](Element x, Element y) { return s.sub(x, y); };
      auto meet = [&](Element x, Element y) { return s.meet(x, y); };
      auto leq  = [&](Element x, Element y) { return s.leq(x, y); };
      auto ti   = [](std::size_t k) { return static_cast<Element>(k); };

      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          for (std::size_t k = 0; k < T; ++k) {
            auto const& f = t.functions()[k];
            if (f[meet(x, y)] != sub(f[x], f[sub(x, y)])) {
              out.fail("eq28", {x, y, ti(k)});
            }
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          for (std::size_t k = 0; k < T; ++k) {
            auto const& f = t.functions()[k];
            if (f[sub(x, y)] != sub(f[x], f[meet(x, y)])) {
              out.fail("eq39", {x, y, ti(k)});
            }
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          for (std::size_t k = 0; k < T; ++k) {
            auto const& f = t.functions()[k];
            if (!leq(sub(f[x], f[y]), f[sub(x, y)])) {
              out.fail("eq40", {x, y, ti(k)});
            }
          }
        }
      }
      out.tally(3 * mm * mm * T);

      PolynomialView view(s, t);

      // t1(x meet y) meet t2(x - y) = 0
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          Element const a = meet(x, y), b = sub(x, y);
          bool          bad = false;
          for (auto p : view.orbit(a)) {
            for (auto q : view.orbit(b)) {
              bad = bad || meet(p, q) != o;
            }
          }
          for (std::size_t t1 = 0; bad && t1 < T && out.wants("prop8"); ++t1) {
            for (std::size_t t2 = 0; t2 < T && out.wants("prop8"); ++t2) {
              if (meet(t.apply(t1, a), t.apply(t2, b)) != o) {
                out.fail("prop8", {x, y, ti(t1), ti(t2)});
              }
            }
          }
        }
      }

      // t1(x meet y) meet t2(y) = t1(x meet y) meet t2(x meet y)
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          Element const a   = meet(x, y);
          bool          bad = false;
          for (auto p : view.orbit(a)) {
            for (auto [q, r] : view.pair_orbit(y, a)) {
              bad = bad || meet(p, q) != meet(p, r);
            }
          }
          for (std::size_t t1 = 0; bad && t1 < T && out.wants("eq61"); ++t1) {
            Element const p = t.apply(t1, a);
            for (std::size_t t2 = 0; t2 < T && out.wants("eq61"); ++t2) {
              if (meet(p, t.apply(t2, y)) != meet(p, t.apply(t2, a))) {
                out.fail("eq61", {x, y, ti(t1), ti(t2)});
              }
            }
          }
        }
      }
      out.tally(2 * mm * mm * T * T);

      // t1(x^y^z) ^ t2(y) <= t1(x^y) ^ t2(y^z)   (eq62)
      // t1(x^y^z) ^ t2(y)  = t1(x^y) ^ t2(y^z)   (eq64)
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          Element const xy = meet(x, y);
          for (Element z = 0; z < mm; ++z) {
            Element const xyz = meet(xy, z), yz = meet(y, z);
            auto const&   j1  = view.pair_orbit(xyz, xy);
            auto const&   j2  = view.pair_orbit(y, yz);
            bool          bad62 = false, bad64 = false;
            for (auto [p1, p2] : j1) {
              for (auto [q1, q2] : j2) {
                Element const lhs = meet(p1, q1), rhs = meet(p2, q2);
                bad62 = bad62 || !leq(lhs, rhs);
                bad64 = bad64 || lhs != rhs;
              }
            }
            for (auto [bad, id] : {std::pair{bad62, "eq62"}, std::pair{bad64, "eq64"}}) {
              bool const is62 = id[3] == '2';
              for (std::size_t t1 = 0; bad && t1 < T && out.wants(id); ++t1) {
                for (std::size_t t2 = 0; t2 < T && out.wants(id); ++t2) {
                  Element const lhs = meet(t.apply(t1, xyz), t.apply(t2, y));
                  Element const rhs = meet(t.apply(t1, xy), t.apply(t2, yz));
                  if (is62 ? !leq(lhs, rhs) : lhs != rhs) {
                    out.fail(id, {x, y, z, ti(t1), ti(t2)});
                  }
                }
              }
            }
          }
        }
      }
      out.tally(2 * mm * mm * mm * T * T);

      // g <= t1(x^y), g <= t2(y^z)  ->  g <= t2(x^y^z)
      std::vector<std::uint8_t> reach(mm * mm, 0);  // reach[g*m+v]: some t1 has g <= t1(v)
      for (Element v = 0; v < mm; ++v) {
        for (auto p : view.orbit(v)) {
          for (Element g = 0; g < mm; ++g) {
            if (leq(g, p)) {
              reach[g * mm + v] = 1;
            }
          }
        }
      }
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          Element const xy = meet(x, y);
          for (Element z = 0; z < mm; ++z) {
            Element const yz = meet(y, z), xyz = meet(xy, z);
            auto const&   j  = view.pair_orbit(yz, xyz);
            for (Element g = 0; g < mm; ++g) {
              if (!reach[g * mm + xy]) {
                continue;
              }
              bool bad = false;
              for (auto [q, r] : j) {
                bad = bad || (leq(g, q) && !leq(g, r));
              }
              for (std::size_t t1 = 0; bad && t1 < T && out.wants("eq63"); ++t1) {
                if (!leq(g, t.apply(t1, xy))) {
                  continue;
                }
                for (std::size_t t2 = 0; t2 < T && out.wants("eq63"); ++t2) {
                  if (leq(g, t.apply(t2, yz)) && !leq(g, t.apply(t2, xyz))) {
                    out.fail("eq63", {x, y, z, g, ti(t1), ti(t2)});
                  }
                }
              }
            }
          }
        }
      }
      out.tally(mm * mm * mm * mm * T * T);
    }

  }  // namespace

  CheckReport check_derived_identities(SubtractionMengerAlgebra const& s,
                                       TranslationSet const&           t,
                                       CheckOptions const&             opts) {
    if (!t.matches(s.menger())) {
      throw TranslationMismatch("translation set was computed for a different operation table");
    }
    ReportBuilder              out(opts);
    detail::ContextTable const ctx(s.menger());
    subtraction_consequences(s, out);
    menger_consequences(s, t, ctx, out);
    polynomial_consequences(s, t, out);
    return std::move(out).finish();
  }

  DistributivityReport check_prop4_equivalences(SubtractionMengerAlgebra const& s,
                                       TranslationSet const&           t,
                                       CheckOptions const&             opts) {
    if (!t.matches(s.menger())) {
      throw TranslationMismatch("translation set was computed for a different operation table");
    }
    std::size_t const          mm = s.size();
    std::size_t const          T  = t.size();
    detail::ContextTable const ctx(s.menger());
    ReportBuilder              out(opts);
    DistributivityReport                result;

    // u[w|_i (x - (x - y))] = u[w|_i x] - u[w|_i (x - y)]
    result.eq12 = true;
    for (std::size_t c = 0; c < ctx.size(); ++c) {
      auto const& f = ctx.map[c];
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          if (f[s.meet(x, y)] != s.sub(f[x], f[s.sub(x, y)])) {
            result.eq12 = false;
            out.fail("eq12", ctx.witness(c, {x, y}));
          }
        }
      }
    }
    // x <= y  ->  u[w|_i (y - x)] = u[w|_i y] - u[w|_i x]
    result.eq22 = true;
    for (std::size_t c = 0; c < ctx.size(); ++c) {
      auto const& f = ctx.map[c];
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          if (s.leq(x, y) && f[s.sub(y, x)] != s.sub(f[y], f[x])) {
            result.eq22 = false;
            out.fail("eq22", ctx.witness(c, {x, y}));
          }
        }
      }
    }
    // x <= y  ->  t(y - x) = t(y) - t(x)
    result.eq23 = true;
    for (Element x = 0; x < mm; ++x) {
      for (Element y = 0; y < mm; ++y) {
        if (!s.leq(x, y)) {
          continue;
        }
        for (std::size_t k = 0; k < T; ++k) {
          auto const& f = t.functions()[k];
          if (f[s.sub(y, x)] != s.sub(f[y], f[x])) {
            result.eq23 = false;
            out.fail("eq23", {x, y, static_cast<Element>(k)});
          }
        }
      }
    }
    // t(x - (x - y)) = t(x) - t(x - y)
    result.eq24 = true;
    for (Element x = 0; x < mm; ++x) {
      for (Element y = 0; y < mm; ++y) {
        for (std::size_t k = 0; k < T; ++k) {
          auto const& f = t.functions()[k];
          if (f[s.meet(x, y)] != s.sub(f[x], f[s.sub(x, y)])) {
            result.eq24 = false;
            out.fail("eq24", {x, y, static_cast<Element>(k)});
          }
        }
      }
    }
    out.tally(2 * ctx.size() * mm * mm + 2 * mm * mm * T);

    auto       report = std::move(out).finish();
    bool const agree  = result.eq12 == result.eq22 && result.eq22 == result.eq23 && result.eq23 == result.eq24;
    result.agreement.holds         = agree;
    result.agreement.checked_count = report.checked_count;
    if (!agree) {
      result.agreement.witnesses = std::move(report.witnesses);
    }
    return result;
  }

}  // namespace menger
