#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qposet/element_set.hpp"

namespace qposet {

/// Outcome of a predicate or check. When `holds` is false, `witness` is the
/// lexicographically first counterexample tuple (by element index).
struct Report {
  std::string name;
  bool holds = true;
  std::vector<Element> witness;
  std::string detail;
  /// Named sub-verdicts, e.g. the four LU-identities or conditions (P) and (P').
  std::vector<std::pair<std::string, bool>> facets;

  explicit operator bool() const { return holds; }

  bool facet(const std::string& key) const {
    for (const auto& [k, v] : facets)
      if (k == key) return v;
    return false;
  }
};

/// Verifier checks share the predicate report shape.
using CheckResult = Report;

}  // namespace qposet
