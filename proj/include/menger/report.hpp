#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "menger/types.hpp"

namespace menger {

  // One violated instantiation of a named law. The tuple lists the values
  // substituted for the law's quantified variables, in the order documented
  // next to each checker.
  struct Witness {
    std::string           axiom;
    std::vector<Element>  tuple;

    bool operator==(Witness const&) const = default;
  };

  struct CheckReport {
    bool                 holds = true;
    std::vector<Witness> witnesses;
    std::uint64_t        checked_count = 0;

    // Appends another report; holds becomes the conjunction.
    void merge(CheckReport const& other);

    // Witnesses whose axiom id equals `axiom`.
    std::vector<Witness> witnesses_for(std::string_view axiom) const;

    bool operator==(CheckReport const&) const = default;
  };

  std::ostream& operator<<(std::ostream& os, Witness const& w);
  std::ostream& operator<<(std::ostream& os, CheckReport const& r);

  struct CheckOptions {
    std::size_t max_witnesses = 10;  // per axiom
  };

  // Accumulates a report while a checker scans its quantifier space. The scan
  // always runs to completion; only the stored witnesses are capped.
  class ReportBuilder {
   public:
    explicit ReportBuilder(CheckOptions const& opts = {}) : _cap(opts.max_witnesses) {}

    void tally(std::uint64_t n = 1) {
      _report.checked_count += n;
    }

    void fail(std::string_view axiom, std::vector<Element> tuple);

    // True while `axiom` may still record witnesses.
    bool wants(std::string_view axiom) const;

    CheckReport finish() &&;

   private:
    std::size_t                        _cap;
    CheckReport                        _report;
    std::map<std::string, std::size_t, std::less<>> _per_axiom;
  };

}  // namespace menger
