#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qposet/ortho.hpp"

namespace qposet {

/// Encoding of (order, involution) under the minimizing relabeling. Equal
/// certificates mean isomorphic structures and vice versa.
struct CanonicalCertificate {
  std::vector<std::uint64_t> words;

  auto operator<=>(const CanonicalCertificate&) const = default;
  bool operator==(const CanonicalCertificate&) const = default;
  /// Hex rendering, stable across platforms.
  std::string hex() const;
};

/// Canonical labeling of a relation given by up-set rows (not necessarily
/// bounded). `inv` may be empty (no involution) or a permutation of the carrier.
/// Returns lab with lab[v] = canonical position of v.
std::vector<Element> canonical_labeling(std::span<const ElementSet> up, std::span<const Element> inv);

/// Certificate of the rows after relabeling by lab.
CanonicalCertificate encode(std::span<const ElementSet> up, std::span<const Element> inv,
                            std::span<const Element> lab);

CanonicalCertificate canonical_form(std::span<const ElementSet> up, std::span<const Element> inv = {});
CanonicalCertificate canonical_form(const Poset& p);
CanonicalCertificate canonical_form(const OrthoPoset& q);

bool is_isomorphic(const OrthoPoset& a, const OrthoPoset& b);

}  // namespace qposet
