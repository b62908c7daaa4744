#include "menger/kernel.hpp"

#include <sstream>
#include <stdexcept>

#include "detail.hpp"
#include "menger/errors.hpp"

namespace menger {

  CheckReport check_superassociativity(FiniteMengerAlgebra const& m, CheckOptions const& opts) {
    ReportBuilder     out(opts);
    std::size_t const n  = m.rank();
    std::size_t const mm = m.size();

    std::vector<Element> ys(n, 0), zs(n, 0), inner(n);
    for (Element x = 0; x < mm; ++x) {
      std::fill(ys.begin(), ys.end(), 0);
      do {
        Element const xy = m.op(x, ys);
        std::fill(zs.begin(), zs.end(), 0);
        do {
          for (std::size_t i = 0; i < n; ++i) {
            inner[i] = m.op(ys[i], zs);
          }
          if (m.op(xy, zs) != m.op(x, inner)) {
            auto w = detail::concat({x}, ys);
            w.insert(w.end(), zs.begin(), zs.end());
            out.fail("eq2", std::move(w));
          }
        } while (next_tuple(zs, mm));
      } while (next_tuple(ys, mm));
    }
    out.tally(checked_power(mm, 2 * n + 1));
    return std::move(out).finish();
  }

  CheckReport check_subtraction_axioms(SubtractionMengerAlgebra const& s, CheckOptions const& opts) {
    ReportBuilder     out(opts);
    std::size_t const mm = s.size();

    for (Element x = 0; x < mm; ++x) {
      for (Element y = 0; y < mm; ++y) {
        if (s.sub(x, s.sub(y, x)) != x) {
          out.fail("eq3", {x, y});
        }
      }
    }
    for (Element x = 0; x < mm; ++x) {
      for (Element y = 0; y < mm; ++y) {
        if (s.sub(x, s.sub(x, y)) != s.sub(y, s.sub(y, x))) {
          out.fail("eq4", {x, y});
        }
      }
    }
    for (Element x = 0; x < mm; ++x) {
      for (Element y = 0; y < mm; ++y) {
        for (Element z = 0; z < mm; ++z) {
          if (s.sub(s.sub(x, y), z) != s.sub(s.sub(x, z), y)) {
            out.fail("eq5", {x, y, z});
          }
        }
      }
    }
    if (s.sub(s.zero(), s.zero()) != s.zero()) {
      out.fail("eq6", {});
    }
    out.tally(2 * mm * mm + mm * mm * mm + 1);
    return std::move(out).finish();
  }

  CheckReport check_compat_axioms(SubtractionMengerAlgebra const& s,
                                  TranslationSet const&           t,
                                  CheckOptions const&             opts) {
    if (!t.matches(s.menger())) {
      throw TranslationMismatch("translation set was computed for a different operation table");
    }
    ReportBuilder     out(opts);
    auto const&       m  = s.menger();
    std::size_t const n  = m.rank();
    std::size_t const mm = m.size();

    // (x - y)[z] = x[z] - y[z]
    std::vector<Element> zs(n, 0);
    for (Element x = 0; x < mm; ++x) {
      for (Element y = 0; y < mm; ++y) {
        std::fill(zs.begin(), zs.end(), 0);
        do {
          if (m.op(s.sub(x, y), zs) != s.sub(m.op(x, zs), m.op(y, zs))) {
            out.fail("eq11", detail::concat({x, y}, zs));
          }
        } while (next_tuple(zs, mm));
      }
    }
    out.tally(checked_power(mm, n + 2));

    // u[w|_i (x - (x - y))] = u[w|_i x] - u[w|_i (x - y)]
    detail::ContextTable const ctx(m);
    for (std::size_t c = 0; c < ctx.size(); ++c) {
      auto const& f = ctx.map[c];
      for (Element x = 0; x < mm; ++x) {
        for (Element y = 0; y < mm; ++y) {
          if (f[s.meet(x, y)] != s.sub(f[x], f[s.sub(x, y)])) {
            out.fail("eq12", ctx.witness(c, {x, y}));
          }
        }
      }
    }
    out.tally(ctx.size() * mm * mm);

    // x <= y, z <= t1(x), z <= t2(y)  ->  z <= t2(x)
    std::vector<std::uint8_t> reach(mm * mm, 0);  // reach[z*m+x]: some t1 has z <= t1(x)
    for (Element x = 0; x < mm; ++x) {
      for (auto v : t.orbit(x)) {
        for (Element z = 0; z < mm; ++z) {
          if (s.leq(z, v)) {
            reach[z * mm + x] = 1;
          }
        }
      }
    }
    std::size_t const T = t.size();
    for (Element x = 0; x < mm; ++x) {
      for (Element y = 0; y < mm; ++y) {
        if (!s.leq(x, y)) {
          continue;
        }
        auto const pairs = t.pair_orbit(y, x);
        for (Element z = 0; z < mm; ++z) {
          if (!reach[z * mm + x]) {
            continue;
          }
          bool bad = false;
          for (auto [ty, tx] : pairs) {
            if (s.leq(z, ty) && !s.leq(z, tx)) {
              bad = true;
              break;
            }
          }
          if (!bad) {
            continue;
          }
          for (std::size_t t1 = 0; t1 < T && out.wants("eq13"); ++t1) {
            if (!s.leq(z, t.apply(t1, x))) {
              continue;
            }
            for (std::size_t t2 = 0; t2 < T && out.wants("eq13"); ++t2) {
              if (s.leq(z, t.apply(t2, y)) && !s.leq(z, t.apply(t2, x))) {
                out.fail("eq13", {x, y, z, static_cast<Element>(t1), static_cast<Element>(t2)});
              }
            }
          }
        }
      }
    }
    out.tally(mm * mm * mm * T * T);
    return std::move(out).finish();
  }

  BinaryRelation induced_order(SubtractionMengerAlgebra const& s) {
    BinaryRelation r(s.size());
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        if (s.leq(x, y)) {
          r.insert(x, y);
        }
      }
    }
    return r;
  }

  namespace {
    bool is_weakly_steady(FiniteMengerAlgebra const& m, BinaryRelation const& r, TranslationSet const& t) {
      std::size_t const         mm = m.size();
      std::vector<std::uint8_t> reach(mm * mm, 0);
      for (Element x = 0; x < mm; ++x) {
        for (auto v : t.orbit(x)) {
          for (Element z = 0; z < mm; ++z) {
            if (r.contains(z, v)) {
              reach[z * mm + x] = 1;
            }
          }
        }
      }
      for (auto [x, y] : r.pairs()) {
        auto const pairs = t.pair_orbit(y, x);
        for (Element z = 0; z < mm; ++z) {
          if (!reach[z * mm + x]) {
            continue;
          }
          for (auto [ty, tx] : pairs) {
            if (r.contains(z, ty) && !r.contains(z, tx)) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  RelationProperties relation_properties(FiniteMengerAlgebra const& m, BinaryRelation const& r) {
    return relation_properties(m, r, translations(m));
  }

  RelationProperties relation_properties(FiniteMengerAlgebra const& m,
                                         BinaryRelation const&      r,
                                         TranslationSet const&      t) {
    if (r.size() != m.size()) {
      throw ShapeMismatch("relation and algebra have different carriers");
    }
    if (!t.matches(m)) {
      throw TranslationMismatch("translation set was computed for a different operation table");
    }
    std::size_t const n     = m.rank();
    std::size_t const mm    = m.size();
    auto const        pairs = r.pairs();
    std::size_t const P     = pairs.size();

    RelationProperties out;

    // stable: pairs (x,y), (x_i,y_i) in r  ->  (x[x..], y[y..]) in r
    out.stable = true;
    {
      std::vector<Element> pick(n + 1, 0), xs(n), ys(n);
      if (P > 0) {
        do {
          for (std::size_t i = 0; i < n; ++i) {
            xs[i] = pairs[pick[i + 1]].first;
            ys[i] = pairs[pick[i + 1]].second;
          }
          auto [x, y] = pairs[pick[0]];
          if (!r.contains(m.op(x, xs), m.op(y, ys))) {
            out.stable = false;
            break;
          }
        } while (next_tuple(pick, P));
      }
    }

    out.l_regular = true;
    {
      std::vector<Element> zs(n, 0);
      for (auto [x, y] : pairs) {
        std::fill(zs.begin(), zs.end(), 0);
        do {
          if (!r.contains(m.op(x, zs), m.op(y, zs))) {
            out.l_regular = false;
            break;
          }
        } while (next_tuple(zs, mm));
        if (!out.l_regular) {
          break;
        }
      }
    }

    out.v_regular = true;
    {
      std::vector<Element> pick(n, 0), xs(n), ys(n);
      if (P > 0) {
        do {
          for (std::size_t i = 0; i < n; ++i) {
            xs[i] = pairs[pick[i]].first;
            ys[i] = pairs[pick[i]].second;
          }
          for (Element z = 0; z < mm && out.v_regular; ++z) {
            if (!r.contains(m.op(z, xs), m.op(z, ys))) {
              out.v_regular = false;
            }
          }
        } while (out.v_regular && next_tuple(pick, P));
      }
    }

    out.i_regular.assign(n, true);
    for (auto const& ctx : all_contexts(m)) {
      auto flag = out.i_regular[ctx.position - 1];
      if (!flag) {
        continue;
      }
      for (auto [x, y] : pairs) {
        if (!r.contains(ctx.apply(m, x), ctx.apply(m, y))) {
          flag = false;
          break;
        }
      }
    }

    out.weakly_steady = is_weakly_steady(m, r, t);

    if (r.is_quasiorder()) {
      bool all_i = std::all_of(out.i_regular.begin(), out.i_regular.end(), [](bool b) { return b; });
      if (all_i != out.v_regular || out.stable != (out.v_regular && out.l_regular)) {
        throw std::logic_error("regularity flags of a quasiorder are inconsistent");
      }
    }
    return out;
  }

  SubsetProperties subset_properties(FiniteMengerAlgebra const& m, std::vector<bool> const& members) {
    if (members.size() != m.size()) {
      throw ShapeMismatch("subset mask has the wrong length");
    }
    std::size_t const    n  = m.rank();
    std::size_t const    mm = m.size();
    std::vector<Element> h;
    for (Element x = 0; x < mm; ++x) {
      if (members[x]) {
        h.push_back(x);
      }
    }

    SubsetProperties out;
    out.stable_subset = true;
    if (!h.empty()) {
      std::vector<Element> pick(n + 1, 0), gs(n);
      do {
        for (std::size_t i = 0; i < n; ++i) {
          gs[i] = h[pick[i + 1]];
        }
        if (!members[m.op(h[pick[0]], gs)]) {
          out.stable_subset = false;
          break;
        }
      } while (next_tuple(pick, h.size()));
    }

    // Some h_i in H  ->  x[h_1 .. h_n] in H
    out.l_ideal = true;
    {
      std::vector<Element> hs(n, 0);
      do {
        if (std::none_of(hs.begin(), hs.end(), [&](Element e) { return members[e]; })) {
          continue;
        }
        for (Element x = 0; x < mm; ++x) {
          if (!members[m.op(x, hs)]) {
            out.l_ideal = false;
            break;
          }
        }
      } while (out.l_ideal && next_tuple(hs, mm));
    }

    out.i_ideal.assign(n, true);
    for (auto const& ctx : all_contexts(m)) {
      auto flag = out.i_ideal[ctx.position - 1];
      for (auto e : h) {
        if (flag && !members[ctx.apply(m, e)]) {
          flag = false;
        }
      }
    }

    bool all_i = std::all_of(out.i_ideal.begin(), out.i_ideal.end(), [](bool b) { return b; });
    if (all_i != out.l_ideal) {
      throw std::logic_error("l-ideal flag disagrees with the i-ideal flags");
    }
    return out;
  }

  CheckReport VerifiedAlgebra::check_all(SubtractionMengerAlgebra const& s,
                                         TranslationSet const&           t,
                                         CheckOptions const&             opts) {
    CheckReport r = check_superassociativity(s.menger(), opts);
    r.merge(check_subtraction_axioms(s, opts));
    r.merge(check_compat_axioms(s, t, opts));
    return r;
  }

  VerifiedAlgebra VerifiedAlgebra::verify(SubtractionMengerAlgebra s, std::size_t translation_cap) {
    auto t      = std::make_shared<TranslationSet const>(menger::translations(s.menger(), translation_cap));
    auto report = check_all(s, *t);
    if (!report.holds) {
      std::ostringstream os;
      os << "algebra is not a subtraction Menger algebra: " << report.witnesses.front();
      throw VerificationFailed(os.str());
    }
    return VerifiedAlgebra(std::make_shared<SubtractionMengerAlgebra const>(std::move(s)), std::move(t));
  }

}  // namespace menger
