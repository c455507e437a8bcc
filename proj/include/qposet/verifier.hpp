#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qposet/arrows.hpp"
#include "qposet/report.hpp"

namespace qposet {

/// Candidate x ⊙ y for every pair.
class BinaryOperator {
public:
  explicit BinaryOperator(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const { return n_; }
  ElementSet operator()(Element x, Element y) const { return cells_[x * n_ + y]; }
  void set(Element x, Element y, ElementSet value) { cells_[x * n_ + y] = value; }

private:
  std::size_t n_;
  std::vector<ElementSet> cells_;
};

// Order property checks. "x -> y = 1" means the value set is exactly {top}.
// Witnesses are (x, y) pairs, first in index order.

/// x <= y implies x -> y = 1.
CheckResult check_forward_op(const OrthoPoset& q, const ArrowTable& table);
/// x -> y = 1 implies x <= y.
CheckResult check_backward_op(const OrthoPoset& q, const ArrowTable& table);
CheckResult check_op(const OrthoPoset& q, const ArrowTable& table);
/// x <= y and (x -> y) <= (u -> v) in the set order imply u <= v.
/// Witness is (x, y, u, v).
CheckResult check_mpo(const OrthoPoset& q, const ArrowTable& table);

CheckResult check_forward_op(const OrthoPoset& q, ArrowKind kind);
CheckResult check_backward_op(const OrthoPoset& q, ArrowKind kind);
CheckResult check_op(const OrthoPoset& q, ArrowKind kind);
CheckResult check_mpo(const OrthoPoset& q, ArrowKind kind);

struct AdjointResult {
  CheckResult check;
  /// Present iff an adjoint exists: x ⊙ y = Max L(S(x, y)).
  std::optional<BinaryOperator> op;
  /// On failure: U(L(S)) \ S for the witness pair.
  ElementSet gap;
};

/// S(x, y) = { z : {x} <=_2 (y -> z) }, the set an adjoint value must have as upper cone.
ElementSet adjoint_target(const OrthoPoset& q, const ArrowTable& table, Element x, Element y);

/// Decides whether some ⊙ satisfies x ⊙ y <=_1 z iff x <=_2 y -> z for all x, y, z,
/// via the per-pair closure condition U(L(S(x, y))) = S(x, y).
AdjointResult adjoint_exists(const OrthoPoset& q, const ArrowTable& table);
AdjointResult adjoint_exists(const OrthoPoset& q, ArrowKind kind);

/// Checks (AP) literally for a given operator over all triples. Witness (x, y, z).
CheckResult satisfies_adjunction(const OrthoPoset& q, const ArrowTable& table, const BinaryOperator& op);

enum class Verdict { Consistent, Discrepant, Skipped };
const char* to_string(Verdict v);

/// One theorem instance evaluated on a single structure.
struct SuiteEntry {
  std::string id;    // e.g. "a.K"
  std::string name;  // human readable statement
  Verdict verdict = Verdict::Skipped;
  std::string detail;
};

/// Evaluates every characterization on one structure. Entries appear in a fixed
/// order. Non-orthogonal inputs yield Skipped entries throughout.
std::vector<SuiteEntry> theorem_suite(const OrthoPoset& q);

}  // namespace qposet
