#include "qposet/ortho.hpp"

#include <mutex>

#include "qposet/errors.hpp"

namespace qposet {

struct OrthoPoset::Cache {
  std::once_flag once;
  std::optional<Classification> value;
};

OrthoPoset::OrthoPoset(Poset poset, Involution inv, std::string name)
    : poset_(std::move(poset)), inv_(std::move(inv)), name_(std::move(name)), cache_(std::make_shared<Cache>()) {}

OrthoPoset OrthoPoset::attach(Poset poset, std::vector<Element> perm, std::string name) {
  const std::size_t n = poset.size();
  if (perm.size() != n)
    throw Error(ErrorKind::InvalidArgument,
                "involution has " + std::to_string(perm.size()) + " entries, carrier has " + std::to_string(n));
  ElementSet hit;
  for (Element y : perm) {
    if (y >= n) throw Error(ErrorKind::InvalidArgument, "involution maps outside the carrier");
    hit.insert(y);
  }
  if (hit != poset.carrier()) throw Error(ErrorKind::InvalidArgument, "involution is not a bijection");

  for (Element x = 0; x < n; ++x)
    if (perm[perm[x]] != x)
      throw Error(ErrorKind::NotInvolutive, poset.name(x) + "'' = " + poset.name(perm[perm[x]]) + " != " + poset.name(x));
  for (Element x = 0; x < n; ++x)
    for (Element y : poset.up(x))
      if (!poset.leq(perm[y], perm[x]))
        throw Error(ErrorKind::NotAntitone, poset.name(x) + " <= " + poset.name(y) + " but " + poset.name(y) +
                                                "' is not below " + poset.name(x) + "'");
  return OrthoPoset(std::move(poset), Involution(std::move(perm)), std::move(name));
}

const Classification& OrthoPoset::classification() const {
  std::call_once(cache_->once, [this] { cache_->value = classify(*this); });
  return *cache_->value;
}

OrthoPoset OrthoPoset::relabel(std::span<const Element> perm) const {
  std::vector<Element> map(size());
  for (Element x = 0; x < size(); ++x) map[perm[x]] = perm[inv_(x)];
  return attach(poset_.relabel(perm), std::move(map), name_);
}

bool orthogonal(const OrthoPoset& q, Element x, Element y) { return q.leq(x, q.prime(y)); }

namespace {

std::string pair_text(const OrthoPoset& q, Element x, Element y) {
  return "(" + q.name_of(x) + ", " + q.name_of(y) + ")";
}

Report conjunction(std::string name, const Report& lhs, const Report& rhs) {
  Report r{.name = std::move(name), .holds = lhs.holds && rhs.holds};
  r.facets = {{lhs.name, lhs.holds}, {rhs.name, rhs.holds}};
  if (!r.holds) {
    const Report& failing = lhs.holds ? rhs : lhs;
    r.witness = failing.witness;
    r.detail = failing.detail;
  }
  return r;
}


}  // namespace

Report is_orthogonal_poset(const OrthoPoset& q) {
  Report r{.name = "orthogonal"};
  const Poset& p = q.poset();
  for (Element x = 0; x < q.size(); ++x)
    for (Element y = 0; y < q.size(); ++y)
      if (orthogonal(q, x, y) && !join(p, x, y)) {
        r.holds = false;
        r.witness = {x, y};
        r.detail = q.name_of(x) + " ⊥ " + q.name_of(y) + " but their join does not exist";
        return r;
      }
  return r;
}

Report is_orthocomplemented(const OrthoPoset& q) {
  Report r{.name = "orthocomplemented"};
  for (Element x = 0; x < q.size(); ++x) {
    const auto j = join(q.poset(), x, q.prime(x));
    if (!j || *j != q.top()) {
      r.holds = false;
      r.witness = {x};
      r.detail = q.name_of(x) + " ∨ " + q.name_of(q.prime(x)) + " is " + (j ? q.name_of(*j) : "absent");
      return r;
    }
  }
  return r;
}

Report is_paraorthomodular(const OrthoPoset& q) {
  Report r{.name = "paraorthomodular"};
  const Poset& p = q.poset();
  bool cond_p = true;
  bool cond_p_prime = true;
  for (Element x = 0; x < q.size(); ++x)
    for (Element y : p.up(x)) {
      if (x == y) continue;
      const auto m = meet(p, q.prime(x), y);
      if (m && *m == q.bottom() && cond_p) {
        cond_p = false;
        r.witness = {x, y};
        r.detail = q.name_of(x) + " < " + q.name_of(y) + " and " + q.name_of(q.prime(x)) + " ∧ " + q.name_of(y) +
                   " = " + q.name_of(q.bottom());
      }
      const auto j = join(p, x, q.prime(y));
      if (j && *j == q.top()) cond_p_prime = false;
    }
  r.holds = cond_p;
  r.facets = {{"P", cond_p}, {"P'", cond_p_prime}};
  return r;
}

Report is_orthomodular(const OrthoPoset& q) {
  Report r{.name = "orthomodular"};
  const Report orth = is_orthogonal_poset(q);
  if (!orth.holds) {
    r.holds = false;
    r.witness = orth.witness;
    r.detail = "not an orthogonal poset: " + orth.detail;
    return r;
  }
  const Poset& p = q.poset();
  for (Element x = 0; x < q.size(); ++x)
    for (Element y : p.up(x)) {
      const auto rel = meet(p, y, q.prime(x));
      const auto back = rel ? join(p, x, *rel) : std::nullopt;
      if (!back || *back != y) {
        r.holds = false;
        r.witness = {x, y};
        r.detail = q.name_of(x) + " <= " + q.name_of(y) + " but " + q.name_of(x) + " ∨ (" + q.name_of(y) + " ∧ " +
                   q.name_of(q.prime(x)) + ") is " + (back ? q.name_of(*back) : "absent");
        return r;
      }
    }
  return r;
}

Report is_weakly_boolean(const OrthoPoset& q) {
  Report r{.name = "weakly_boolean"};
  const Poset& p = q.poset();
  for (Element a = 0; a < q.size(); ++a) {
    if (a == q.bottom()) continue;
    for (Element b = 0; b < q.size(); ++b) {
      const auto m1 = meet(p, a, b);
      const auto m2 = meet(p, a, q.prime(b));
      if (m1 && m2 && *m1 == q.bottom() && *m2 == q.bottom()) {
        r.holds = false;
        r.witness = {a, b};
        r.detail = q.name_of(a) + " ∧ " + q.name_of(b) + " = " + q.name_of(a) + " ∧ " + q.name_of(q.prime(b)) +
                   " = 0 but " + q.name_of(a) + " != 0";
        return r;
      }
    }
  }
  return r;
}

Report is_sharply_paraorthomodular(const OrthoPoset& q) {
  return conjunction("sharply_paraorthomodular", is_orthogonal_poset(q), is_paraorthomodular(q));
}

Report is_boolean_orthoposet(const OrthoPoset& q) {
  return conjunction("boolean_orthoposet", is_boolean_poset(q.poset()), is_orthocomplemented(q));
}

Report is_boolean_algebra(const OrthoPoset& q) {
  return conjunction("boolean_algebra", is_boolean_orthoposet(q), is_lattice(q.poset()));
}

Report compatible(const OrthoPoset& q, Element a, Element b) {
  Report r{.name = "compatible", .holds = false};
  const Poset& p = q.poset();
  // c and d lie below a, d and e below b.
  for (Element c : p.down(a))
    for (Element d : p.down(a) & p.down(b)) {
      if (!orthogonal(q, c, d) || join(p, c, d) != a) continue;
      for (Element e : p.down(b)) {
        if (orthogonal(q, c, e) && orthogonal(q, d, e) && join(p, d, e) == b) {
          r.holds = true;
          r.witness = {c, d, e};
          r.detail = q.name_of(a) + " = " + q.name_of(c) + " ∨ " + q.name_of(d) + ", " + q.name_of(b) + " = " +
                     q.name_of(d) + " ∨ " + q.name_of(e);
          return r;
        }
      }
    }
  r.detail = "no mutually orthogonal decomposition of " + pair_text(q, a, b);
  return r;
}

Element difference(const OrthoPoset& q, Element a, Element b) {
  if (!q.leq(a, b))
    throw Error(ErrorKind::PreconditionViolated, "difference requires " + q.name_of(a) + " <= " + q.name_of(b));
  const auto j = join(q.poset(), q.prime(b), a);
  if (!j)
    throw MissingJoin(q.prime(b), a,
                      "difference " + q.name_of(b) + " - " + q.name_of(a) + ": no join of " + q.name_of(q.prime(b)) +
                          " and " + q.name_of(a));
  return q.prime(*j);
}

std::vector<const Report*> Classification::all() const {
  return {&lattice,       &distributive,   &complemented, &boolean_poset,
          &orthogonal,    &orthocomplemented, &paraorthomodular, &orthomodular,
          &weakly_boolean, &sharply_paraorthomodular, &boolean_orthoposet, &boolean_algebra};
}

const Report* Classification::find(const std::string& name) const {
  for (const Report* r : all())
    if (r->name == name) return r;
  return nullptr;
}

const std::vector<std::string>& class_names() {
  static const std::vector<std::string> names = {
      "lattice",          "distributive", "complemented",   "boolean_poset",
      "orthogonal",       "orthocomplemented", "paraorthomodular", "orthomodular",
      "weakly_boolean",   "sharply_paraorthomodular", "boolean_orthoposet", "boolean_algebra"};
  return names;
}


Classification classify(const OrthoPoset& q) {
  Classification c;
  const Poset& p = q.poset();
  c.lattice = is_lattice(p);
  c.distributive = is_distributive(p);
  c.complemented = is_complemented(p);
  c.boolean_poset = conjunction("boolean_poset", c.distributive, c.complemented);
  c.orthogonal = is_orthogonal_poset(q);
  c.orthocomplemented = is_orthocomplemented(q);
  c.paraorthomodular = is_paraorthomodular(q);
  c.orthomodular = is_orthomodular(q);
  c.weakly_boolean = is_weakly_boolean(q);
  c.sharply_paraorthomodular = conjunction("sharply_paraorthomodular", c.orthogonal, c.paraorthomodular);
  c.boolean_orthoposet = conjunction("boolean_orthoposet", c.boolean_poset, c.orthocomplemented);
  c.boolean_algebra = conjunction("boolean_algebra", c.boolean_orthoposet, c.lattice);
  return c;
}

}  // namespace qposet
