#include "menger/reprs.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <set>
#include <sstream>
#include <unordered_map>

#include "menger/errors.hpp"

namespace menger {

  namespace {

    using SlotIndex = std::unordered_map<Representation::Tuple, std::size_t, VectorHash>;

    SlotIndex index_slots(std::vector<Representation::Tuple> const& slots) {
      SlotIndex idx;
      idx.reserve(slots.size());
      for (std::size_t s = 0; s < slots.size(); ++s) {
        idx.emplace(slots[s], s);
      }
      return idx;
    }

    std::string label(std::vector<std::string> const& labels, Element x) {
      return x < labels.size() ? labels[x] : std::to_string(x);
    }

  }  // namespace

  std::string BasePoint::to_string(std::vector<std::string> const& labels) const {
    switch (kind) {
      case Kind::class_point:
        return "pair(" + label(labels, a) + "," + label(labels, b) + ")/class#" + std::to_string(index);
      case Kind::selector:
        return "pair(" + label(labels, a) + "," + label(labels, b) + ")/e#" + std::to_string(index);
      case Kind::point:
        break;
    }
    return name;
  }

  Representation::Representation(std::size_t rank, std::size_t carrier_size)
      : _rank(rank), _values(carrier_size) {
    if (rank == 0) {
      throw ShapeMismatch("rank must be positive");
    }
  }

  Representation Representation::from_graphs(
      std::size_t rank, std::vector<BasePoint> base,
      std::vector<std::vector<std::pair<Tuple, std::uint32_t>>> const& graphs) {
    Representation r(rank, graphs.size());
    std::set<Tuple> tuples;
    for (auto const& graph : graphs) {
      for (auto const& [tuple, value] : graph) {
        if (tuple.size() != rank) {
          throw ShapeMismatch("graph tuple has " + std::to_string(tuple.size()) + " inputs, expected "
                              + std::to_string(rank));
        }
        for (auto p : tuple) {
          if (p >= base.size()) {
            throw ShapeMismatch("graph refers to base point " + std::to_string(p) + " outside the base");
          }
        }
        if (value >= base.size()) {
          throw ShapeMismatch("graph value " + std::to_string(value) + " outside the base");
        }
        tuples.insert(tuple);
      }
    }
    r._base  = std::move(base);
    r._slots.assign(tuples.begin(), tuples.end());
    auto const idx = index_slots(r._slots);
    for (std::size_t g = 0; g < graphs.size(); ++g) {
      r._values[g].assign(r._slots.size(), kUndefined);
      for (auto const& [tuple, value] : graphs[g]) {
        auto& cell = r._values[g][idx.at(tuple)];
        if (cell != kUndefined && cell != static_cast<std::int32_t>(value)) {
          throw ShapeMismatch("graph of element " + std::to_string(g) + " is not a function");
        }
        cell = static_cast<std::int32_t>(value);
      }
    }
    return r;
  }

  Representation Representation::identity_embedding(FunctionAlgebra const& f) {
    Representation    r(f.rank(), f.size());
    std::size_t const k = f.base_size();
    for (std::size_t a = 0; a < k; ++a) {
      r._base.push_back(BasePoint::make_point(std::to_string(a)));
    }
    Tuple args(f.rank(), 0);
    if (k > 0) {
      do {
        r._slots.push_back(args);
      } while (next_tuple(args, k));
    }
    for (std::size_t g = 0; g < f.size(); ++g) {
      auto const cells = f[g].cells();
      r._values[g].assign(cells.begin(), cells.end());
    }
    return r;
  }

  std::vector<std::pair<Representation::Tuple, std::uint32_t>> Representation::graph(Element g) const {
    std::vector<std::pair<Tuple, std::uint32_t>> out;
    for (std::size_t s = 0; s < _slots.size(); ++s) {
      if (_values[g][s] != kUndefined) {
        out.emplace_back(_slots[s], static_cast<std::uint32_t>(_values[g][s]));
      }
    }
    return out;
  }

  PartialNFunction Representation::to_function(Element g) const {
    PartialNFunction f(_base.size(), _rank);
    for (std::size_t s = 0; s < _slots.size(); ++s) {
      if (_values[g][s] != kUndefined) {
        f.set(_slots[s], static_cast<Element>(_values[g][s]));
      }
    }
    return f;
  }

  bool Representation::same_graphs(Representation const& that) const {
    if (_rank != that._rank || _base != that._base || _values.size() != that._values.size()) {
      return false;
    }
    for (Element g = 0; g < _values.size(); ++g) {
      auto lhs = graph(g), rhs = that.graph(g);
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      if (lhs != rhs) {
        return false;
      }
    }
    return true;
  }

  Representation simplest_representation(SubtractionMengerAlgebra const& s, DeterminingPairData const& d) {
    std::size_t const n = s.rank();
    std::size_t const m = s.size();
    if (d.class_of.size() != m) {
      throw ShapeMismatch("determining pair belongs to a different carrier");
    }
    Representation r(n, m);
    r._provenance.emplace_back(d.a, d.b);

    // base point of each non-W class
    std::vector<std::int32_t> point_of(d.classes.size(), Representation::kUndefined);
    std::vector<std::size_t>  kept;
    for (std::size_t k = 0; k < d.classes.size(); ++k) {
      if (d.w_class != k) {
        point_of[k] = static_cast<std::int32_t>(r._base.size());
        kept.push_back(k);
        r._base.push_back(BasePoint::make_class(d.a, d.b, k));
      }
    }
    std::size_t const K = kept.size();
    for (std::size_t i = 1; i <= n; ++i) {
      r._base.push_back(BasePoint::make_selector(d.a, d.b, i));
    }

    for (auto& v : r._values) {
      v.reserve(checked_power(K, n) + 1);
    }
    std::vector<Element> pick(n, 0), xs(n, 0), pos(n, 0);
    if (K > 0) {
      do {
        Representation::Tuple tuple(n);
        for (std::size_t i = 0; i < n; ++i) {
          tuple[i] = static_cast<std::uint32_t>(point_of[kept[pick[i]]]);
        }
        r._slots.push_back(std::move(tuple));
        for (Element g = 0; g < m; ++g) {
          // g[H_1 ... H_n] must fall inside one class
          std::optional<std::size_t> cls;
          std::fill(pos.begin(), pos.end(), 0);
          do {
            for (std::size_t i = 0; i < n; ++i) {
              xs[i] = d.classes[kept[pick[i]]][pos[i]];
            }
            auto const c = d.class_of[s.op(g, xs)];
            if (cls && *cls != c) {
              std::ostringstream msg;
              msg << "image of element " << g << " on classes (";
              for (std::size_t i = 0; i < n; ++i) {
                msg << (i ? "," : "") << kept[pick[i]];
              }
              msg << ") meets classes " << *cls << " and " << c;
              throw ImageSplitsClasses(msg.str());
            }
            cls = c;
            bool more = false;
            for (std::size_t i = n; i-- > 0;) {
              if (++pos[i] < d.classes[kept[pick[i]]].size()) {
                more = true;
                break;
              }
              pos[i] = 0;
            }
            if (!more) {
              break;
            }
          } while (true);
          r._values[g].push_back(point_of[*cls]);
        }
      } while (next_tuple(pick, K));
    }

    Representation::Tuple selectors(n);
    for (std::size_t i = 0; i < n; ++i) {
      selectors[i] = static_cast<std::uint32_t>(K + i);
    }
    r._slots.push_back(std::move(selectors));
    for (Element g = 0; g < m; ++g) {
      r._values[g].push_back(point_of[d.class_of[g]]);
    }
    return r;
  }

  Representation sum_representations(std::vector<Representation> const& parts,
                                     std::size_t                        rank,
                                     std::size_t                        carrier_size) {
    if (!parts.empty()) {
      rank         = parts.front().rank();
      carrier_size = parts.front().carrier_size();
    }
    Representation             out(rank, carrier_size);
    std::set<std::tuple<int, Element, Element, std::size_t, std::string>> seen;
    for (auto const& p : parts) {
      if (p.rank() != rank || p.carrier_size() != carrier_size) {
        throw ShapeMismatch("summands disagree on rank or carrier");
      }
      auto const offset = static_cast<std::uint32_t>(out._base.size());
      for (auto const& b : p._base) {
        if (!seen.emplace(static_cast<int>(b.kind), b.a, b.b, b.index, b.name).second) {
          throw BaseCollision("base point " + b.to_string({}) + " occurs in two summands");
        }
        out._base.push_back(b);
      }
      for (auto const& slot : p._slots) {
        Representation::Tuple shifted(slot);
        for (auto& x : shifted) {
          x += offset;
        }
        out._slots.push_back(std::move(shifted));
      }
      for (Element g = 0; g < carrier_size; ++g) {
        for (auto v : p._values[g]) {
          out._values[g].push_back(v == Representation::kUndefined ? v : v + static_cast<std::int32_t>(offset));
        }
      }
      out._provenance.insert(out._provenance.end(), p._provenance.begin(), p._provenance.end());
    }
    return out;
  }

  CheckReport verify_representation(SubtractionMengerAlgebra const& s, Representation const& r, CheckOptions const& opts) {
    std::size_t const n = s.rank();
    std::size_t const m = s.size();
    if (r.rank() != n || r.carrier_size() != m) {
      throw ShapeMismatch("representation does not fit the algebra");
    }
    auto const&       slots = r.slots();
    std::size_t const S     = slots.size();
    auto const        idx   = index_slots(slots);
    constexpr auto    undef = Representation::kUndefined;

    // Column-major copy: col[s * m + g] = P(g) at slot s.
    std::vector<std::int32_t> col(S * m);
    for (Element g = 0; g < m; ++g) {
      for (std::size_t sl = 0; sl < S; ++sl) {
        col[sl * m + g] = r.value(g, sl);
      }
    }

    ReportBuilder out(opts);

    // P(x[y]) = P(x)[P(y)] at every slot; outside the slots both sides are
    // empty because every P(y_i) is.
    std::uint64_t const        tuples = checked_power(m, n + 1);
    std::vector<std::uint8_t>  bad(tuples, 0);
    std::uint64_t const        inner  = checked_power(m, n);
    std::vector<std::int64_t>  target(inner);
    std::vector<Element>       ys(n, 0);
    Representation::Tuple      key(n);
    for (std::size_t sl = 0; sl < S; ++sl) {
      std::int32_t const* c = &col[sl * m];
      std::fill(ys.begin(), ys.end(), 0);
      std::uint64_t k = 0;
      do {
        std::int64_t t = -1;
        bool         defined = true;
        for (std::size_t i = 0; i < n && defined; ++i) {
          defined = c[ys[i]] != undef;
          key[i]  = static_cast<std::uint32_t>(c[ys[i]]);
        }
        if (defined) {
          auto it = idx.find(key);
          t       = it == idx.end() ? -1 : static_cast<std::int64_t>(it->second);
        }
        target[k++] = t;
      } while (next_tuple(ys, m));
      for (Element x = 0; x < m; ++x) {
        std::fill(ys.begin(), ys.end(), 0);
        k = 0;
        do {
          auto const   t   = target[k];
          std::int32_t rhs = t < 0 ? undef : col[static_cast<std::size_t>(t) * m + x];
          if (c[s.op(x, ys)] != rhs) {
            bad[x * inner + k] = 1;
          }
          ++k;
        } while (next_tuple(ys, m));
      }
    }
    std::vector<Element> tuple(n + 1, 0);
    for (std::uint64_t k = 0; k < tuples; ++k) {
      if (bad[k]) {
        out.fail("hom", tuple);
      }
      next_tuple(tuple, m);
    }
    out.tally(tuples);

    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        Element const d = s.sub(x, y);
        for (std::size_t sl = 0; sl < S; ++sl) {
          std::int32_t const* c   = &col[sl * m];
          std::int32_t const  rhs = c[x] == c[y] ? undef : c[x];
          if (c[d] != rhs) {
            out.fail("sub", {x, y});
            break;
          }
        }
      }
    }
    out.tally(m * m);

    out.tally();
    for (std::size_t sl = 0; sl < S; ++sl) {
      if (col[sl * m + s.zero()] != undef) {
        out.fail("zero", {});
        break;
      }
    }

    std::vector<Element> order(m);
    for (Element g = 0; g < m; ++g) {
      order[g] = g;
    }
    std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return r.values(a) < r.values(b); });
    std::vector<std::pair<Element, Element>> collisions;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m && r.values(order[i]) == r.values(order[j]); ++j) {
        collisions.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
      }
    }
    std::sort(collisions.begin(), collisions.end());
    for (auto [x, y] : collisions) {
      out.fail("injective", {x, y});
    }
    out.tally(m * (m - 1) / 2);
    return std::move(out).finish();
  }

  namespace {

    Representation assemble(VerifiedAlgebra const& v, TieBreak tie) {
      auto const& s     = v.algebra();
      auto const  o     = build_order(s);
      auto const  pairs = separable_pairs(o);
      std::vector<Representation> parts;
      parts.reserve(pairs.size());
      for (auto [a, b] : pairs) {
        parts.push_back(simplest_representation(s, determining_pair(v, o, a, b, tie)));
      }
      auto r = sum_representations(parts, s.rank(), s.size());
      if (r.base().size() > pairs.size() * (s.size() + s.rank())) {
        throw std::logic_error("representation base exceeds its size bound");
      }
      return r;
    }

  }  // namespace

  Representation theorem2_pipeline(VerifiedAlgebra const& v, TieBreak tie) {
    auto r           = assemble(v, tie);
    r._verification  = verify_representation(v.algebra(), r);
    r._verified      = r._verification.holds;
    if (!r._verified) {
      std::ostringstream msg;
      msg << "representation is not faithful: " << r._verification.witnesses.front();
      throw FaithfulnessFailure(msg.str());
    }
    return r;
  }

  CheckReport tiebreak_robustness(VerifiedAlgebra const& v, TieBreak tie) {
    return verify_representation(v.algebra(), assemble(v, tie));
  }

}  // namespace menger
