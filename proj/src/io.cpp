#include "menger/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "menger/errors.hpp"

namespace menger::io {

  using nlohmann::json;

  namespace {

    json parse_json(std::string const& text) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        throw ParseError(e.what());
      }
    }

    [[noreturn]] void bad(std::string const& where, std::string const& what) {
      throw ParseError(where + ": " + what);
    }

    json const& field(json const& j, char const* key, std::string const& where) {
      if (!j.is_object()) {
        bad(where, "expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        bad(where, std::string("missing field \"") + key + "\"");
      }
      return *it;
    }

    std::size_t positive(json const& j, std::string const& where) {
      if (!j.is_number_integer() || j.get<std::int64_t>() <= 0) {
        bad(where, "expected a positive integer");
      }
      return j.get<std::size_t>();
    }

    std::string text_of(json const& j, std::string const& where) {
      if (!j.is_string()) {
        bad(where, "expected a string");
      }
      return j.get<std::string>();
    }

    json const& array_of(json const& j, std::string const& where) {
      if (!j.is_array()) {
        bad(where, "expected an array");
      }
      return j;
    }

    class Labels {
     public:
      Labels(json const& j, std::string const& where, bool allow_empty) {
        auto const& arr = array_of(j, where);
        if (arr.empty() && !allow_empty) {
          bad(where, "must not be empty");
        }
        for (std::size_t i = 0; i < arr.size(); ++i) {
          auto s = text_of(arr[i], where + "/" + std::to_string(i));
          if (!_index.emplace(s, static_cast<Element>(_names.size())).second) {
            bad(where + "/" + std::to_string(i), "duplicate label \"" + s + "\"");
          }
          _names.push_back(std::move(s));
        }
      }

      Element operator()(json const& j, std::string const& where) const {
        auto s  = text_of(j, where);
        auto it = _index.find(s);
        if (it == _index.end()) {
          bad(where, "unknown label \"" + s + "\"");
        }
        return it->second;
      }

      std::vector<std::string> const& names() const {
        return _names;
      }

      std::size_t size() const {
        return _names.size();
      }

     private:
      std::vector<std::string>       _names;
      std::map<std::string, Element> _index;
    };

    // Reads fixed-width rows of labels; returns the rows as index vectors.
    std::vector<std::vector<Element>> rows(json const& j, std::string const& where, std::size_t width, Labels const& lab) {
      auto const&                       arr = array_of(j, where);
      std::vector<std::vector<Element>> out;
      for (std::size_t r = 0; r < arr.size(); ++r) {
        auto const here = where + "/" + std::to_string(r);
        auto const& row = array_of(arr[r], here);
        if (row.size() != width) {
          bad(here, "expected " + std::to_string(width) + " entries");
        }
        std::vector<Element> v;
        for (std::size_t c = 0; c < width; ++c) {
          v.push_back(lab(row[c], here + "/" + std::to_string(c)));
        }
        out.push_back(std::move(v));
      }
      return out;
    }

    json witness_json(Witness const& w) {
      return json{{"axiom", w.axiom}, {"tuple", w.tuple}};
    }

  }  // namespace

  std::vector<std::string> index_labels(std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(std::to_string(i));
    }
    return out;
  }

  AlgebraDoc parse_algebra(std::string const& text) {
    auto const        j    = parse_json(text);
    std::size_t const n    = positive(field(j, "rank", ""), "/rank");
    Labels const      lab(field(j, "carrier", ""), "/carrier", false);
    std::size_t const m    = lab.size();
    Element const     zero = lab(field(j, "zero", ""), "/zero");

    auto const menger = rows(field(j, "menger", ""), "/menger", n + 2, lab);
    std::vector<Element>      table(checked_power(m, n + 1));
    std::vector<std::uint8_t> seen(table.size(), 0);
    for (std::size_t r = 0; r < menger.size(); ++r) {
      std::size_t idx = 0;
      for (std::size_t c = 0; c <= n; ++c) {
        idx = idx * m + menger[r][c];
      }
      if (seen[idx]) {
        bad("/menger/" + std::to_string(r), "duplicate entry");
      }
      seen[idx]  = 1;
      table[idx] = menger[r][n + 1];
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
      bad("/menger", "menger table not total");
    }

    auto const                subtraction = rows(field(j, "subtraction", ""), "/subtraction", 3, lab);
    std::vector<Element>      sub(m * m);
    std::vector<std::uint8_t> sub_seen(m * m, 0);
    for (std::size_t r = 0; r < subtraction.size(); ++r) {
      auto const idx = subtraction[r][0] * m + subtraction[r][1];
      if (sub_seen[idx]) {
        bad("/subtraction/" + std::to_string(r), "duplicate entry");
      }
      sub_seen[idx] = 1;
      sub[idx]      = subtraction[r][2];
    }
    if (std::find(sub_seen.begin(), sub_seen.end(), 0) != sub_seen.end()) {
      bad("/subtraction", "subtraction table not total");
    }
    return AlgebraDoc{lab.names(),
                      SubtractionMengerAlgebra(FiniteMengerAlgebra(n, m, std::move(table)), std::move(sub), zero)};
  }

  std::string dump_algebra(AlgebraDoc const& doc) {
    auto const&       s   = doc.algebra;
    auto const&       lab = doc.labels;
    std::size_t const n   = s.rank();
    std::size_t const m   = s.size();
    if (lab.size() != m) {
      throw ShapeMismatch("label count does not match the carrier");
    }
    json menger = json::array();
    std::vector<Element> args(n + 1, 0);
    do {
      json row = json::array();
      for (auto a : args) {
        row.push_back(lab[a]);
      }
      row.push_back(lab[s.op(args[0], std::span<Element const>(args).subspan(1))]);
      menger.push_back(std::move(row));
    } while (next_tuple(args, m));
    json subtraction = json::array();
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        subtraction.push_back({lab[x], lab[y], lab[s.sub(x, y)]});
      }
    }
    json j = {{"rank", n}, {"carrier", lab}, {"zero", lab[s.zero()]}, {"menger", menger}, {"subtraction", subtraction}};
    return j.dump(1) + "\n";
  }

  FunctionSetDoc parse_function_set(std::string const& text) {
    auto const        j = parse_json(text);
    FunctionSetDoc    doc;
    Labels const      lab(field(j, "base", ""), "/base", true);
    doc.base          = lab.names();
    doc.rank          = positive(field(j, "rank", ""), "/rank");
    auto const& funcs = array_of(field(j, "functions", ""), "/functions");
    std::set<std::string> names;
    for (std::size_t k = 0; k < funcs.size(); ++k) {
      auto const here = "/functions/" + std::to_string(k);
      auto       name = text_of(field(funcs[k], "name", here), here + "/name");
      if (!names.insert(name).second) {
        bad(here + "/name", "duplicate function name \"" + name + "\"");
      }
      PartialNFunction f(lab.size(), doc.rank);
      auto const graph = rows(field(funcs[k], "graph", here), here + "/graph", doc.rank + 1, lab);
      for (std::size_t r = 0; r < graph.size(); ++r) {
        std::span<Element const> args(graph[r].data(), doc.rank);
        if (f.at(args)) {
          bad(here + "/graph/" + std::to_string(r), "input tuple listed twice");
        }
        f.set(args, graph[r][doc.rank]);
      }
      doc.names.push_back(std::move(name));
      doc.functions.push_back(std::move(f));
    }
    return doc;
  }

  std::string dump_function_set(FunctionSetDoc const& doc) {
    json funcs = json::array();
    for (std::size_t k = 0; k < doc.functions.size(); ++k) {
      auto const& f     = doc.functions[k];
      json        graph = json::array();
      std::vector<Element> args(doc.rank, 0);
      if (!doc.base.empty()) {
        do {
          if (auto v = f.at(args)) {
            json row = json::array();
            for (auto a : args) {
              row.push_back(doc.base[a]);
            }
            row.push_back(doc.base[*v]);
            graph.push_back(std::move(row));
          }
        } while (next_tuple(args, doc.base.size()));
      }
      funcs.push_back({{"name", doc.names[k]}, {"graph", graph}});
    }
    json j = {{"base", doc.base}, {"rank", doc.rank}, {"functions", funcs}};
    return j.dump(1) + "\n";
  }

  FunctionSetDoc to_doc(FunctionAlgebra const& f) {
    FunctionSetDoc doc;
    doc.base = index_labels(f.base_size());
    doc.rank = f.rank();
    for (std::size_t k = 0; k < f.size(); ++k) {
      doc.names.push_back("f" + std::to_string(k));
      doc.functions.push_back(f[k]);
    }
    return doc;
  }

  FunctionAlgebra to_algebra(FunctionSetDoc const& doc) {
    FunctionAlgebra f(doc.base.size(), doc.rank);
    for (auto const& g : doc.functions) {
      f.insert(g);
    }
    f.recompute_flags();
    return f;
  }

  RepresentationDoc parse_representation(std::string const& text) {
    auto const        j = parse_json(text);
    RepresentationDoc doc;
    doc.rank = positive(field(j, "rank", ""), "/rank");
    Labels const carrier(field(j, "carrier", ""), "/carrier", false);
    Labels const base(field(j, "base", ""), "/base", true);
    doc.carrier = carrier.names();
    doc.base    = base.names();
    doc.graphs.resize(carrier.size());
    std::vector<bool> present(carrier.size(), false);
    auto const&       graphs = array_of(field(j, "graphs", ""), "/graphs");
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      auto const here = "/graphs/" + std::to_string(k);
      auto const g    = carrier(field(graphs[k], "element", here), here + "/element");
      if (present[g]) {
        bad(here, "element listed twice");
      }
      present[g] = true;
      std::set<Representation::Tuple> inputs;
      for (auto& row : rows(field(graphs[k], "graph", here), here + "/graph", doc.rank + 1, base)) {
        Representation::Tuple t(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(doc.rank));
        if (!inputs.insert(t).second) {
          bad(here + "/graph", "input tuple listed twice");
        }
        doc.graphs[g].emplace_back(std::move(t), row[doc.rank]);
      }
      std::sort(doc.graphs[g].begin(), doc.graphs[g].end());
    }
    for (std::size_t g = 0; g < present.size(); ++g) {
      if (!present[g]) {
        bad("/graphs", "no graph for element \"" + doc.carrier[g] + "\"");
      }
    }
    for (auto const& p : rows(field(j, "provenance", ""), "/provenance", 2, carrier)) {
      doc.provenance.emplace_back(p[0], p[1]);
    }
    auto const& ver = field(j, "verification", "");
    auto const& flag = field(ver, "verified", "/verification");
    if (!flag.is_boolean()) {
      bad("/verification/verified", "expected a boolean");
    }
    doc.verified = flag.get<bool>();
    auto const& count = field(ver, "checked_count", "/verification");
    if (!count.is_number_unsigned()) {
      bad("/verification/checked_count", "expected a non-negative integer");
    }
    doc.checked_count = count.get<std::uint64_t>();
    auto const& ws = array_of(field(ver, "witnesses", "/verification"), "/verification/witnesses");
    for (std::size_t k = 0; k < ws.size(); ++k) {
      auto const here = "/verification/witnesses/" + std::to_string(k);
      Witness    w;
      w.axiom = text_of(field(ws[k], "axiom", here), here + "/axiom");
      for (auto const& e : array_of(field(ws[k], "tuple", here), here + "/tuple")) {
        if (!e.is_number_unsigned()) {
          bad(here + "/tuple", "expected element indices");
        }
        w.tuple.push_back(e.get<Element>());
      }
      doc.witnesses.push_back(std::move(w));
    }
    return doc;
  }

  std::string dump_representation(RepresentationDoc const& doc) {
    json graphs = json::array();
    for (std::size_t g = 0; g < doc.graphs.size(); ++g) {
      json rowset = json::array();
      for (auto const& [t, v] : doc.graphs[g]) {
        json row = json::array();
        for (auto p : t) {
          row.push_back(doc.base[p]);
        }
        row.push_back(doc.base[v]);
        rowset.push_back(std::move(row));
      }
      graphs.push_back({{"element", doc.carrier[g]}, {"graph", rowset}});
    }
    json prov = json::array();
    for (auto [a, b] : doc.provenance) {
      prov.push_back({doc.carrier[a], doc.carrier[b]});
    }
    json ws = json::array();
    for (auto const& w : doc.witnesses) {
      ws.push_back(witness_json(w));
    }
    json j = {{"rank", doc.rank},
              {"carrier", doc.carrier},
              {"base", doc.base},
              {"graphs", graphs},
              {"provenance", prov},
              {"verification", {{"verified", doc.verified}, {"checked_count", doc.checked_count}, {"witnesses", ws}}}};
    return j.dump(1) + "\n";
  }

  RepresentationDoc to_doc(Representation const& r, std::vector<std::string> const& carrier_labels) {
    if (carrier_labels.size() != r.carrier_size()) {
      throw ShapeMismatch("label count does not match the carrier");
    }
    RepresentationDoc doc;
    doc.rank    = r.rank();
    doc.carrier = carrier_labels;
    for (auto const& b : r.base()) {
      doc.base.push_back(b.to_string(carrier_labels));
    }
    for (Element g = 0; g < r.carrier_size(); ++g) {
      auto graph = r.graph(g);
      std::sort(graph.begin(), graph.end());
      doc.graphs.push_back(std::move(graph));
    }
    doc.provenance    = r.provenance();
    doc.verified      = r.verified();
    doc.checked_count = r.verification().checked_count;
    doc.witnesses     = r.verification().witnesses;
    return doc;
  }

  Representation to_representation(RepresentationDoc const& doc) {
    std::vector<BasePoint> base;
    for (auto const& name : doc.base) {
      base.push_back(BasePoint::make_point(name));
    }
    return Representation::from_graphs(doc.rank, std::move(base), doc.graphs);
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError(path + ": cannot open file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw ParseError(path + ": cannot write file");
    }
    out << text;
  }

}  // namespace menger::io
