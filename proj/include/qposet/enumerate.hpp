#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qposet/canonical.hpp"
#include "qposet/verifier.hpp"

namespace qposet {

using StructureFilter = std::function<bool(const OrthoPoset&)>;

/// One up-set row list per isomorphism class of k-element posets. Rows are in a
/// linear extension: x < y implies index x < index y.
std::vector<std::vector<ElementSet>> core_posets(std::size_t k);

/// Bounded poset with `core` between an adjoined bottom (index 0) and top (last).
Poset bounded_from_core(const std::vector<ElementSet>& core);

/// Every antitone involution of p, in backtracking order.
std::vector<std::vector<Element>> antitone_involutions(const Poset& p);

/// Predicate for a class name from class_names(). Throws Error{InvalidArgument}.
StructureFilter class_filter(const std::string& class_name);

/// One representative per isomorphism class of bounded posets with antitone
/// involution, sizes 2..n_max, ordered by size then certificate. Work is split
/// by core poset over `jobs` threads; the result does not depend on `jobs`.
std::vector<OrthoPoset> enumerate_structures(std::size_t n_max, const StructureFilter& filter = {},
                                             unsigned jobs = 1);
/// Same, for a single size.
std::vector<OrthoPoset> structures_of_size(std::size_t n, unsigned jobs = 1);

struct SweepDiscrepancy {
  std::string structure;
  std::string id;
  std::string detail;
  std::string document;  // serialized structure
};

struct ArrowStats {
  std::size_t evaluations = 0;
  std::size_t multi_valued = 0;
  std::size_t non_antichain = 0;
  std::size_t errors = 0;
  std::string first_multi;  // "structure: x -> y = {..}"
  std::string first_non_antichain;
};

struct SweepReport {
  std::size_t n_min = 2;
  std::size_t n_max = 2;
  std::vector<std::size_t> structures;  // indexed by size
  std::vector<std::size_t> orthogonal;  // indexed by size
  /// Class name -> count per size, over all structures.
  std::vector<std::pair<std::string, std::vector<std::size_t>>> census;
  std::size_t entries_checked = 0;
  std::size_t entries_skipped = 0;
  std::vector<SweepDiscrepancy> discrepancies;
  /// Exploratory: value-set shape per arrow over orthogonal structures.
  std::array<ArrowStats, 5> arrows;
  /// Orthogonal structures on which an adjoint exists, per arrow.
  std::array<std::size_t, 5> adjoint_exists{};
  /// Orthogonal structures where x -> y = 1 implies x <= y for C but the structure is not Boolean.
  std::size_t backward_c_not_boolean = 0;
  std::optional<std::string> smallest_nonlattice_orthomodular;
  std::optional<std::string> first_paraorthomodular_not_orthomodular;

  bool clean() const { return discrepancies.empty(); }
  std::size_t total() const;
};

SweepReport sweep(std::size_t n_max, unsigned jobs = 1);
std::string to_text(const SweepReport& r);
std::string to_json(const SweepReport& r);

}  // namespace qposet
