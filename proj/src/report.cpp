#include "menger/report.hpp"

#include <limits>
#include <stdexcept>

namespace menger {

  std::uint64_t checked_power(std::uint64_t base, std::size_t arity) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      if (base != 0 && r > (std::numeric_limits<std::uint64_t>::max() >> 1) / base) {
        throw std::overflow_error("tuple space too large");
      }
      r *= base;
    }
    return r;
  }

  void CheckReport::merge(CheckReport const& other) {
    holds = holds && other.holds;
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    checked_count += other.checked_count;
  }

  std::vector<Witness> CheckReport::witnesses_for(std::string_view axiom) const {
    std::vector<Witness> out;
    for (auto const& w : witnesses) {
      if (w.axiom == axiom) {
        out.push_back(w);
      }
    }
    return out;
  }

  std::ostream& operator<<(std::ostream& os, Witness const& w) {
    os << w.axiom << " (";
    for (std::size_t i = 0; i < w.tuple.size(); ++i) {
      os << (i == 0 ? "" : ", ") << w.tuple[i];
    }
    return os << ")";
  }

  std::ostream& operator<<(std::ostream& os, CheckReport const& r) {
    os << (r.holds ? "holds" : "fails") << " after " << r.checked_count << " instantiations";
    for (auto const& w : r.witnesses) {
      os << "\n  " << w;
    }
    return os;
  }

  void ReportBuilder::fail(std::string_view axiom, std::vector<Element> tuple) {
    _report.holds = false;
    auto it       = _per_axiom.find(axiom);
    if (it == _per_axiom.end()) {
      it = _per_axiom.emplace(std::string(axiom), 0).first;
    }
    if (it->second < _cap) {
      ++it->second;
      _report.witnesses.push_back({std::string(axiom), std::move(tuple)});
    }
  }

  bool ReportBuilder::wants(std::string_view axiom) const {
    auto it = _per_axiom.find(axiom);
    return it == _per_axiom.end() || it->second < _cap;
  }

  CheckReport ReportBuilder::finish() && {
    return std::move(_report);
  }

}  // namespace menger
