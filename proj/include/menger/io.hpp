#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/pfunc.hpp"
#include "menger/report.hpp"
#include "menger/reprs.hpp"

// On-disk JSON layouts. Labels, not indices, appear in files; on load the
// i-th label in file order becomes index i.
//
// algebra:
//   {"rank": n, "carrier": [labels], "zero": label,
//    "menger": [[x, y_1, ..., y_n, result], ...],
//    "subtraction": [[x, y, result], ...]}
// function set:
//   {"base": [labels], "rank": n,
//    "functions": [{"name": s, "graph": [[a_1, ..., a_n, value], ...]}, ...]}
//   omitted input tuples are undefined.
// representation:
//   {"rank": n, "carrier": [labels], "base": [names],
//    "graphs": [{"element": label, "graph": [[p_1, ..., p_n, q], ...]}, ...],
//    "provenance": [[a, b], ...],
//    "verification": {"verified": bool, "checked_count": k,
//                     "witnesses": [{"axiom": s, "tuple": [...]}, ...]}}

namespace menger::io {

  struct AlgebraDoc {
    std::vector<std::string> labels;
    SubtractionMengerAlgebra algebra;

    bool operator==(AlgebraDoc const&) const = default;
  };

  struct FunctionSetDoc {
    std::vector<std::string>      base;
    std::size_t                   rank = 1;
    std::vector<std::string>      names;
    std::vector<PartialNFunction> functions;

    bool operator==(FunctionSetDoc const&) const = default;
  };

  struct RepresentationDoc {
    using Graph = std::vector<std::pair<Representation::Tuple, std::uint32_t>>;

    std::size_t                              rank = 1;
    std::vector<std::string>                 carrier;
    std::vector<std::string>                 base;
    std::vector<Graph>                       graphs;  // indexed by carrier element, sorted
    std::vector<std::pair<Element, Element>> provenance;
    bool                                     verified      = false;
    std::uint64_t                            checked_count = 0;
    std::vector<Witness>                     witnesses;

    bool operator==(RepresentationDoc const&) const = default;
  };

  // Parsers throw ParseError; the message names the offending JSON location.
  AlgebraDoc        parse_algebra(std::string const& text);
  FunctionSetDoc    parse_function_set(std::string const& text);
  RepresentationDoc parse_representation(std::string const& text);

  std::string dump_algebra(AlgebraDoc const& doc);
  std::string dump_function_set(FunctionSetDoc const& doc);
  std::string dump_representation(RepresentationDoc const& doc);

  // Default labels "0", "1", ...
  std::vector<std::string> index_labels(std::size_t count);

  FunctionSetDoc    to_doc(FunctionAlgebra const& f);
  FunctionAlgebra   to_algebra(FunctionSetDoc const& doc);
  RepresentationDoc to_doc(Representation const& r, std::vector<std::string> const& carrier_labels);
  // Base points become plain named points.
  Representation    to_representation(RepresentationDoc const& doc);

  // Whole-file helpers; read_file throws ParseError when the file is missing.
  std::string read_file(std::string const& path);
  void        write_file(std::string const& path, std::string const& text);

}  // namespace menger::io
