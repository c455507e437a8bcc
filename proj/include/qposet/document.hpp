#pragma once

#include <string>
#include <vector>

#include "qposet/ortho.hpp"

namespace qposet {

/// Flat JSON poset document:
///
///   {
///     "name": "fig2",
///     "elements": ["0", "a", ...],
///     "covers": [[0, 1], ...],
///     "involution": [5, 3, ...]
///   }
///
/// `covers` lists pairs (lo, hi) whose reflexive-transitive closure is the order;
/// `involution[i]` is the index of element i's image.
struct PosetDocument {
  std::string name;
  std::vector<std::string> elements;
  std::vector<Cover> covers;
  std::vector<Element> involution;

  bool operator==(const PosetDocument&) const = default;
};

/// Throws ParseError naming the field (and line when known).
PosetDocument parse_document(const std::string& text);
/// Stable key order, one key per line, arrays inline. Ends with a newline.
std::string serialize_document(const PosetDocument& doc);

/// Same fields on a single line, no trailing newline. One document per line
/// is the streaming format used by `enumerate`.
std::string serialize_document_line(const PosetDocument& doc);

/// Validates through Poset::build_bounded and OrthoPoset::attach.
OrthoPoset to_ortho(const PosetDocument& doc);
/// Canonical document: Hasse covers only, sorted.
PosetDocument to_document(const OrthoPoset& q);

OrthoPoset parse(const std::string& text);
std::string serialize(const OrthoPoset& q);

/// Graphviz digraph of the Hasse diagram (solid edges, bottom to top) with the
/// involution drawn as dashed undirected edges, once per 2-cycle. Fixed points
/// of the involution are marked in their node label.
std::string export_dot(const OrthoPoset& q);

}  // namespace qposet
