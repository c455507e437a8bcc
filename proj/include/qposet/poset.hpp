#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qposet/element_set.hpp"
#include "qposet/report.hpp"

namespace qposet {

using Cover = std::pair<Element, Element>;

/// Finite bounded poset stored as the full order relation, one up-set and
/// one down-set bitmask per element. Immutable after construction.
class Poset {
public:
  /// Reflexive-transitive closure of `covers` (pairs (lo, hi) meaning lo < hi).
  /// Throws Error{CycleDetected} when the closure is not antisymmetric and
  /// Error{NotBounded} when `bottom`/`top` are not global bounds.
  static Poset build(std::size_t n, std::span<const Cover> covers, Element bottom, Element top,
                     std::vector<std::string> names = {});

  /// Same as build() but locates the bounds itself (NotBounded if absent).
  static Poset build_bounded(std::size_t n, std::span<const Cover> covers,
                             std::vector<std::string> names = {});

  /// Build directly from up-set rows; rows must already be a partial order.
  static Poset from_up_sets(std::vector<ElementSet> up, std::vector<std::string> names = {});

  std::size_t size() const { return up_.size(); }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  ElementSet carrier() const { return ElementSet::full(size()); }

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  /// {y : x <= y}
  ElementSet up(Element x) const { return up_[x]; }
  /// {y : y <= x}
  ElementSet down(Element x) const { return down_[x]; }

  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of the element with the given display name, if any.
  std::optional<Element> find(const std::string& name) const;

  /// Hasse diagram edges (lo, hi), sorted.
  std::vector<Cover> covers() const;

  /// Order-dual poset on the same indices.
  Poset dual() const;

  /// Relabelled copy: element x of this poset becomes perm[x].
  Poset relabel(std::span<const Element> perm) const;

  bool operator==(const Poset& other) const { return up_ == other.up_; }

private:
  Poset() = default;
  void finish(std::vector<std::string> names);

  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::string> names_;
  Element bottom_ = 0;
  Element top_ = 0;
};

// Cones, extremal elements and set relations. Empty quantifications are
// vacuously true, so L(empty) = U(empty) = the whole carrier.

ElementSet lower_cone(const Poset& p, ElementSet a);
ElementSet upper_cone(const Poset& p, ElementSet a);
ElementSet maximal(const Poset& p, ElementSet a);
ElementSet minimal(const Poset& p, ElementSet a);

/// A <= B : every x in A is below every y in B.
bool set_leq(const Poset& p, ElementSet a, ElementSet b);
/// A <=_1 B : every x in A lies below some y in B.
bool set_leq1(const Poset& p, ElementSet a, ElementSet b);
/// A <=_2 B : every y in B lies above some x in A.
bool set_leq2(const Poset& p, ElementSet a, ElementSet b);

/// Least upper bound if it exists.
std::optional<Element> join(const Poset& p, Element x, Element y);
/// Greatest lower bound if it exists.
std::optional<Element> meet(const Poset& p, Element x, Element y);

Report is_lattice(const Poset& p);
/// Evaluates the four LU-identities over all triples. `holds` follows the
/// first identity; each identity is recorded as a facet "LU1".."LU4".
Report is_distributive(const Poset& p);
ElementSet complements_of(const Poset& p, Element x);
Report is_complemented(const Poset& p);
Report is_boolean_poset(const Poset& p);

// Always true for finite posets; checked explicitly over every finite subset.
bool is_mub_complete(const Poset& p);
bool is_lub_complete(const Poset& p);
bool has_maximality_property(const Poset& p);

}  // namespace qposet
