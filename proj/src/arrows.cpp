#include "qposet/arrows.hpp"

#include <cctype>

#include "qposet/errors.hpp"

namespace qposet {

char to_char(ArrowKind kind) {
  switch (kind) {
    case ArrowKind::C: return 'C';
    case ArrowKind::K: return 'K';
    case ArrowKind::N: return 'N';
    case ArrowKind::S: return 'S';
    case ArrowKind::D: return 'D';
  }
  return '?';
}

std::optional<ArrowKind> parse_arrow(const std::string& text) {
  if (text.size() != 1) return std::nullopt;
  for (ArrowKind k : kAllArrows)
    if (std::toupper(static_cast<unsigned char>(text[0])) == to_char(k)) return k;
  return std::nullopt;
}

namespace {

Element join_or_throw(const OrthoPoset& q, Element a, Element b, ArrowKind kind, Element x, Element y) {
  if (auto j = join(q.poset(), a, b)) return *j;
  throw MissingJoin(a, b,
                    std::string("arrow ") + to_char(kind) + " at (" + q.name_of(x) + ", " + q.name_of(y) +
                        "): no join of " + q.name_of(a) + " and " + q.name_of(b));
}

ElementSet max_lower(const OrthoPoset& q, Element a, Element b) {
  return maximal(q.poset(), q.poset().down(a) & q.poset().down(b));
}

ElementSet min_upper(const OrthoPoset& q, Element a, Element b) {
  return minimal(q.poset(), q.poset().up(a) & q.poset().up(b));
}

// Shared body of ->S and ->D: base ∨ Max L(a, b), reported under (kind, x, y).
ElementSet join_with_max_lower(const OrthoPoset& q, Element base, Element a, Element b, ArrowKind kind, Element x,
                               Element y) {
  ElementSet out;
  for (Element w : max_lower(q, a, b)) out.insert(join_or_throw(q, base, w, kind, x, y));
  return out;
}

}  // namespace

ImpValue imp_c(const OrthoPoset& q, Element x, Element y) {
  return {min_upper(q, q.prime(x), y), x, y, ArrowKind::C};
}

ImpValue imp_k(const OrthoPoset& q, Element x, Element y) {
  const Element xp = q.prime(x);
  const ElementSet us = max_lower(q, xp, y);
  const ElementSet vs = max_lower(q, xp, q.prime(y));
  // x ∧ w taken as (x' ∨ w')'; w' <= x because x' <= w.
  ElementSet xw;
  for (Element w : min_upper(q, xp, y)) xw.insert(q.prime(join_or_throw(q, xp, q.prime(w), ArrowKind::K, x, y)));

  ElementSet out;
  for (Element u : us)
    for (Element v : vs) {
      const Element uv = join_or_throw(q, u, v, ArrowKind::K, x, y);
      for (Element m : xw) out.insert(join_or_throw(q, uv, m, ArrowKind::K, x, y));
    }
  return {out, x, y, ArrowKind::K};
}

ImpValue imp_n(const OrthoPoset& q, Element x, Element y) {
  ImpValue k = imp_k(q, q.prime(y), q.prime(x));
  return {k.values, x, y, ArrowKind::N};
}

ImpValue imp_s(const OrthoPoset& q, Element x, Element y) {
  return {join_with_max_lower(q, q.prime(x), x, y, ArrowKind::S, x, y), x, y, ArrowKind::S};
}

ImpValue imp_d(const OrthoPoset& q, Element x, Element y) {
  return {join_with_max_lower(q, y, q.prime(x), q.prime(y), ArrowKind::D, x, y), x, y, ArrowKind::D};
}

ImpValue imp(const OrthoPoset& q, ArrowKind kind, Element x, Element y) {
  switch (kind) {
    case ArrowKind::C: return imp_c(q, x, y);
    case ArrowKind::K: return imp_k(q, x, y);
    case ArrowKind::N: return imp_n(q, x, y);
    case ArrowKind::S: return imp_s(q, x, y);
    case ArrowKind::D: return imp_d(q, x, y);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown arrow kind");
}

ElementSet lift(const OrthoPoset& q, ArrowKind kind, ElementSet a, ElementSet b) {
  ElementSet out;
  for (Element x : a)
    for (Element y : b) out |= imp(q, kind, x, y).values;
  return out;
}

ImpValue quantum_join(const OrthoPoset& q, ArrowKind kind, Element a, Element b) {
  ImpValue v = imp(q, kind, q.prime(a), b);
  return {v.values, a, b, kind};
}

ImpValue quantum_meet(const OrthoPoset& q, ArrowKind kind, Element a, Element b) {
  ImpValue v = imp(q, kind, a, q.prime(b));
  return {q.involution().image(v.values), a, b, kind};
}

ArrowTable::ArrowTable(const OrthoPoset& q, ArrowKind kind) : kind_(kind), n_(q.size()), cells_(n_ * n_) {
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y) cells_[x * n_ + y] = imp(q, kind, x, y).values;
}

ArrowTable arrow_table(const OrthoPoset& q, ArrowKind kind) { return ArrowTable(q, kind); }

}  // namespace qposet
