#include "qposet/document.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qposet/errors.hpp"

namespace qposet {

namespace {

using nlohmann::json;

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

std::size_t line_of_key(const std::string& text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

std::size_t as_index(const json& v, const std::string& field, std::size_t line) {
  if (!v.is_number_unsigned()) throw ParseError(field, line, "expected a non-negative integer, got " + v.dump());
  return v.get<std::size_t>();
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

PosetDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  if (!j.is_object()) throw ParseError("", 1, "top level must be an object");

  static const std::set<std::string> known = {"name", "elements", "covers", "involution"};
  for (const auto& [key, _] : j.items())
    if (!known.contains(key)) throw ParseError(key, line_of_key(text, key), "unknown field");
  for (const auto& key : known)
    if (!j.contains(key)) throw ParseError(key, 0, "missing field");

  PosetDocument doc;
  const std::size_t name_line = line_of_key(text, "name");
  if (!j["name"].is_string()) throw ParseError("name", name_line, "expected a string");
  doc.name = j["name"].get<std::string>();

  const std::size_t el_line = line_of_key(text, "elements");
  if (!j["elements"].is_array()) throw ParseError("elements", el_line, "expected an array of strings");
  std::set<std::string> seen;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw ParseError("elements", el_line, "expected a string, got " + e.dump());
    if (!seen.insert(e.get<std::string>()).second)
      throw ParseError("elements", el_line, "duplicate element name " + e.dump());
    doc.elements.push_back(e.get<std::string>());
  }
  const std::size_t n = doc.elements.size();
  if (n == 0 || n > kMaxElements)
    throw ParseError("elements", el_line, "element count must be in [1, " + std::to_string(kMaxElements) + "]");

  const std::size_t cov_line = line_of_key(text, "covers");
  if (!j["covers"].is_array()) throw ParseError("covers", cov_line, "expected an array of index pairs");
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2) throw ParseError("covers", cov_line, "expected a pair, got " + c.dump());
    const std::size_t lo = as_index(c[0], "covers", cov_line);
    const std::size_t hi = as_index(c[1], "covers", cov_line);
    if (lo >= n || hi >= n) throw ParseError("covers", cov_line, "index out of range in " + c.dump());
    doc.covers.emplace_back(lo, hi);
  }

  const std::size_t inv_line = line_of_key(text, "involution");
  if (!j["involution"].is_array()) throw ParseError("involution", inv_line, "expected an array of indices");
  for (const auto& v : j["involution"]) {
    const std::size_t idx = as_index(v, "involution", inv_line);
    if (idx >= n) throw ParseError("involution", inv_line, "index " + std::to_string(idx) + " out of range");
    doc.involution.push_back(idx);
  }
  if (doc.involution.size() != n)
    throw ParseError("involution", inv_line,
                     "expected " + std::to_string(n) + " entries, got " + std::to_string(doc.involution.size()));
  return doc;
}

std::string serialize_document(const PosetDocument& doc) {
  std::ostringstream out;
  out << "{\n  \"name\": " << quoted(doc.name) << ",\n  \"elements\": [";
  for (std::size_t i = 0; i < doc.elements.size(); ++i) out << (i ? ", " : "") << quoted(doc.elements[i]);
  out << "],\n  \"covers\": [";
  for (std::size_t i = 0; i < doc.covers.size(); ++i)
    out << (i ? ", " : "") << "[" << doc.covers[i].first << ", " << doc.covers[i].second << "]";
  out << "],\n  \"involution\": [";
  for (std::size_t i = 0; i < doc.involution.size(); ++i) out << (i ? ", " : "") << doc.involution[i];
  out << "]\n}\n";
  return out.str();
}

std::string serialize_document_line(const PosetDocument& doc) {
  std::string text = serialize_document(doc);
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\n') {
      out += text[i];
      continue;
    }
    while (i + 1 < text.size() && text[i + 1] == ' ') ++i;
    if (!out.empty() && out.back() == ',') out += ' ';
  }
  return out;
}

OrthoPoset to_ortho(const PosetDocument& doc) {
  Poset p = Poset::build_bounded(doc.elements.size(), doc.covers, doc.elements);
  return OrthoPoset::attach(std::move(p), doc.involution, doc.name);
}

PosetDocument to_document(const OrthoPoset& q) {
  return {q.name(), q.poset().names(), q.poset().covers(), q.involution().map()};
}

OrthoPoset parse(const std::string& text) { return to_ortho(parse_document(text)); }

std::string serialize(const OrthoPoset& q) { return serialize_document(to_document(q)); }

std::string export_dot(const OrthoPoset& q) {
  std::ostringstream out;
  out << "digraph " << quoted(q.name().empty() ? std::string("poset") : q.name()) << " {\n";
  out << "  rankdir=BT;\n  node [shape=circle];\n";
  for (Element x = 0; x < q.size(); ++x) {
    std::string label = q.name_of(x);
    if (q.prime(x) == x) label += " (" + q.name_of(x) + "'=" + q.name_of(x) + ")";
    out << "  n" << x << " [label=" << quoted(label) << "];\n";
  }
  for (const auto& [lo, hi] : q.poset().covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  for (Element x = 0; x < q.size(); ++x) {
    const Element y = q.prime(x);
    if (x < y) out << "  n" << x << " -> n" << y << " [style=dashed, dir=none, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qposet
