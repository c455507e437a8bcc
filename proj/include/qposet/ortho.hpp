#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qposet/poset.hpp"
#include "qposet/report.hpp"

namespace qposet {

struct Classification;

/// Self-inverse, order-reversing permutation of the carrier.
class Involution {
public:
  Involution() = default;
  explicit Involution(std::vector<Element> map) : map_(std::move(map)) {}

  Element operator()(Element x) const { return map_[x]; }
  ElementSet image(ElementSet a) const {
    ElementSet out;
    for (Element x : a) out.insert(map_[x]);
    return out;
  }
  std::size_t size() const { return map_.size(); }
  const std::vector<Element>& map() const { return map_; }

  bool operator==(const Involution&) const = default;

private:
  std::vector<Element> map_;
};

/// Bounded poset with a validated antitone involution. Immutable; copies share
/// a lazily computed classification that is filled at most once.
class OrthoPoset {
public:
  /// Throws Error{InvalidArgument} when `perm` is not a bijection, Error{NotInvolutive}
  /// when x'' != x somewhere, Error{NotAntitone} when x <= y but y' is not below x'.
  static OrthoPoset attach(Poset poset, std::vector<Element> perm, std::string name = {});

  const Poset& poset() const { return poset_; }
  const Involution& involution() const { return inv_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return poset_.size(); }

  Element bottom() const { return poset_.bottom(); }
  Element top() const { return poset_.top(); }
  bool leq(Element x, Element y) const { return poset_.leq(x, y); }
  Element prime(Element x) const { return inv_(x); }
  const std::string& name_of(Element x) const { return poset_.name(x); }

  /// Memoized classify(); thread-safe.
  const Classification& classification() const;

  /// Relabelled copy: element x becomes perm[x].
  OrthoPoset relabel(std::span<const Element> perm) const;

private:
  struct Cache;
  OrthoPoset(Poset poset, Involution inv, std::string name);

  Poset poset_;
  Involution inv_;
  std::string name_;
  std::shared_ptr<Cache> cache_;
};

/// x ⊥ y, i.e. x <= y'.
bool orthogonal(const OrthoPoset& q, Element x, Element y);

Report is_orthogonal_poset(const OrthoPoset& q);
Report is_orthocomplemented(const OrthoPoset& q);
/// Facets "P" and "P'" hold the two equivalent formulations.
Report is_paraorthomodular(const OrthoPoset& q);
Report is_orthomodular(const OrthoPoset& q);
Report is_weakly_boolean(const OrthoPoset& q);
Report is_sharply_paraorthomodular(const OrthoPoset& q);

/// Boolean poset whose involution is a complementation (x ∨ x' = 1).
Report is_boolean_orthoposet(const OrthoPoset& q);
/// Lattice-ordered Boolean orthoposet: a Boolean algebra with ' as complement.
Report is_boolean_algebra(const OrthoPoset& q);

/// Searches mutually orthogonal (c, d, e) with a = c ∨ d and b = d ∨ e.
/// The witness is the first such triple in index order.
Report compatible(const OrthoPoset& q, Element a, Element b);

/// b - a = (b' ∨ a)'. Requires a <= b (PreconditionViolated otherwise) and
/// throws MissingJoin when b' ∨ a does not exist.
Element difference(const OrthoPoset& q, Element a, Element b);

struct Classification {
  Report lattice;
  Report distributive;
  Report complemented;
  Report boolean_poset;
  Report orthogonal;
  Report orthocomplemented;
  Report paraorthomodular;
  Report orthomodular;
  Report weakly_boolean;
  Report sharply_paraorthomodular;
  Report boolean_orthoposet;
  Report boolean_algebra;

  /// Reports in a fixed display order.
  std::vector<const Report*> all() const;
  /// Report by name ("lattice", "orthomodular", ...) or nullptr.
  const Report* find(const std::string& name) const;
};

Classification classify(const OrthoPoset& q);

/// Names accepted by Classification::find.
const std::vector<std::string>& class_names();

}  // namespace qposet
