#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qposet/ortho.hpp"

namespace qposet {

/// The five multi-valued implications.
enum class ArrowKind { C, K, N, S, D };

inline constexpr std::array<ArrowKind, 5> kAllArrows = {ArrowKind::C, ArrowKind::K, ArrowKind::N, ArrowKind::S,
                                                        ArrowKind::D};
inline constexpr std::array<ArrowKind, 4> kQuantumArrows = {ArrowKind::K, ArrowKind::N, ArrowKind::S, ArrowKind::D};

char to_char(ArrowKind kind);
/// Accepts "C", "K", "N", "S", "D" (case-insensitive).
std::optional<ArrowKind> parse_arrow(const std::string& text);

/// Result of x -> y: the value set, the arguments and the arrow used.
struct ImpValue {
  ElementSet values;
  Element x = 0;
  Element y = 0;
  ArrowKind kind = ArrowKind::C;

  /// x -> y = 1, i.e. the value set is exactly {top}.
  bool is_top(const OrthoPoset& q) const { return values == ElementSet::single(q.top()); }
};

/// Min U(x', y). Total on every bounded involutive poset.
ImpValue imp_c(const OrthoPoset& q, Element x, Element y);
/// Max L(x',y) ∨ Max L(x',y') ∨ (x ∧ Min U(x',y)), combined elementwise.
/// Throws MissingJoin when some required join is absent.
ImpValue imp_k(const OrthoPoset& q, Element x, Element y);
/// y' ->K x'.
ImpValue imp_n(const OrthoPoset& q, Element x, Element y);
/// x' ∨ Max L(x, y).
ImpValue imp_s(const OrthoPoset& q, Element x, Element y);
/// y ∨ Max L(x', y').
ImpValue imp_d(const OrthoPoset& q, Element x, Element y);

ImpValue imp(const OrthoPoset& q, ArrowKind kind, Element x, Element y);

/// Union of x -> y over A × B.
ElementSet lift(const OrthoPoset& q, ArrowKind kind, ElementSet a, ElementSet b);

/// a ∨_i b = a' ->_i b
ImpValue quantum_join(const OrthoPoset& q, ArrowKind kind, Element a, Element b);
/// a ∧_i b = (a ->_i b')'
ImpValue quantum_meet(const OrthoPoset& q, ArrowKind kind, Element a, Element b);

/// Complete n × n table of value sets for one arrow.
class ArrowTable {
public:
  ArrowTable(const OrthoPoset& q, ArrowKind kind);

  ArrowKind kind() const { return kind_; }
  std::size_t size() const { return n_; }
  ElementSet operator()(Element x, Element y) const { return cells_[x * n_ + y]; }

private:
  ArrowKind kind_;
  std::size_t n_;
  std::vector<ElementSet> cells_;
};

ArrowTable arrow_table(const OrthoPoset& q, ArrowKind kind);

}  // namespace qposet
