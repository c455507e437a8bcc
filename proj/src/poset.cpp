#include "qposet/poset.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "qposet/errors.hpp"

namespace qposet {

namespace {

void check_size(std::size_t n) {
  if (n == 0 || n > kMaxElements)
    throw Error(ErrorKind::InvalidArgument,
                "carrier size " + std::to_string(n) + " outside [1, " + std::to_string(kMaxElements) + "]");
}

void check_partial_order(const std::vector<ElementSet>& up) {
  const std::size_t n = up.size();
  for (Element x = 0; x < n; ++x) {
    if (!up[x].contains(x)) throw Error(ErrorKind::InvalidArgument, "relation is not reflexive");
    for (Element y : up[x]) {
      if (y >= n) throw Error(ErrorKind::InvalidArgument, "relation references element out of range");
      if (y != x && up[y].contains(x))
        throw Error(ErrorKind::CycleDetected,
                    "elements " + std::to_string(x) + " and " + std::to_string(y) + " lie on a cycle");
      if (!up[y].subset_of(up[x])) throw Error(ErrorKind::InvalidArgument, "relation is not transitive");
    }
  }
}

}  // namespace

void Poset::finish(std::vector<std::string> names) {
  const std::size_t n = up_.size();
  down_.assign(n, ElementSet{});
  for (Element x = 0; x < n; ++x)
    for (Element y : up_[x]) down_[y].insert(x);

  if (names.empty()) {
    names.reserve(n);
    for (Element x = 0; x < n; ++x) names.push_back(std::to_string(x));
  }
  if (names.size() != n)
    throw Error(ErrorKind::InvalidArgument,
                "expected " + std::to_string(n) + " element names, got " + std::to_string(names.size()));
  names_ = std::move(names);
}

Poset Poset::build(std::size_t n, std::span<const Cover> covers, Element bottom, Element top,
                   std::vector<std::string> names) {
  Poset p = build_bounded(n, covers, std::move(names));
  if (bottom >= n || top >= n) throw Error(ErrorKind::NotBounded, "declared bound out of range");
  if (p.up_[bottom] != p.carrier())
    throw Error(ErrorKind::NotBounded, "element " + std::to_string(bottom) + " is not below every element");
  if (p.down_[top] != p.carrier())
    throw Error(ErrorKind::NotBounded, "element " + std::to_string(top) + " is not above every element");
  return p;
}

Poset Poset::build_bounded(std::size_t n, std::span<const Cover> covers, std::vector<std::string> names) {
  check_size(n);
  std::vector<ElementSet> up(n);
  for (Element x = 0; x < n; ++x) up[x] = ElementSet::single(x);
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n)
      throw Error(ErrorKind::InvalidArgument,
                  "cover (" + std::to_string(lo) + ", " + std::to_string(hi) + ") out of range");
    if (lo == hi) throw Error(ErrorKind::CycleDetected, "cover relates element " + std::to_string(lo) + " to itself");
    up[lo].insert(hi);
  }
  // Warshall closure on rows.
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];
  return from_up_sets(std::move(up), std::move(names));
}

Poset Poset::from_up_sets(std::vector<ElementSet> up, std::vector<std::string> names) {
  check_size(up.size());
  check_partial_order(up);
  Poset p;
  p.up_ = std::move(up);
  p.finish(std::move(names));
  const ElementSet all = p.carrier();
  bool have_bottom = false;
  bool have_top = false;
  for (Element x = 0; x < p.size(); ++x) {
    if (p.up_[x] == all) {
      p.bottom_ = x;
      have_bottom = true;
    }
    if (p.down_[x] == all) {
      p.top_ = x;
      have_top = true;
    }
  }
  if (!have_bottom) throw Error(ErrorKind::NotBounded, "no element lies below every element");
  if (!have_top) throw Error(ErrorKind::NotBounded, "no element lies above every element");
  return p;
}

std::optional<Element> Poset::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

std::vector<Cover> Poset::covers() const {
  std::vector<Cover> out;
  for (Element x = 0; x < size(); ++x) {
    const ElementSet strictly_above = up_[x] - ElementSet::single(x);
    for (Element y : minimal(*this, strictly_above)) out.emplace_back(x, y);
  }
  return out;
}

Poset Poset::dual() const {
  Poset d;
  d.up_ = down_;
  d.down_ = up_;
  d.names_ = names_;
  d.bottom_ = top_;
  d.top_ = bottom_;
  return d;
}

Poset Poset::relabel(std::span<const Element> perm) const {
  const std::size_t n = size();
  std::vector<ElementSet> up(n);
  std::vector<std::string> names(n);
  for (Element x = 0; x < n; ++x) {
    ElementSet row;
    for (Element y : up_[x]) row.insert(perm[y]);
    up[perm[x]] = row;
    names[perm[x]] = names_[x];
  }
  return from_up_sets(std::move(up), std::move(names));
}

ElementSet lower_cone(const Poset& p, ElementSet a) {
  ElementSet out = p.carrier();
  for (Element x : a) out &= p.down(x);
  return out;
}

ElementSet upper_cone(const Poset& p, ElementSet a) {
  ElementSet out = p.carrier();
  for (Element x : a) out &= p.up(x);
  return out;
}

ElementSet maximal(const Poset& p, ElementSet a) {
  ElementSet out;
  for (Element x : a)
    if ((p.up(x) & a) == ElementSet::single(x)) out.insert(x);
  return out;
}

ElementSet minimal(const Poset& p, ElementSet a) {
  ElementSet out;
  for (Element x : a)
    if ((p.down(x) & a) == ElementSet::single(x)) out.insert(x);
  return out;
}

bool set_leq(const Poset& p, ElementSet a, ElementSet b) { return b.subset_of(upper_cone(p, a)); }

bool set_leq1(const Poset& p, ElementSet a, ElementSet b) {
  for (Element x : a)
    if (!p.up(x).intersects(b)) return false;
  return true;
}

bool set_leq2(const Poset& p, ElementSet a, ElementSet b) {
  for (Element y : b)
    if (!p.down(y).intersects(a)) return false;
  return true;
}

std::optional<Element> join(const Poset& p, Element x, Element y) {
  const ElementSet least = minimal(p, p.up(x) & p.up(y));
  if (least.size() != 1) return std::nullopt;
  return least.front();
}

std::optional<Element> meet(const Poset& p, Element x, Element y) {
  const ElementSet greatest = maximal(p, p.down(x) & p.down(y));
  if (greatest.size() != 1) return std::nullopt;
  return greatest.front();
}

Report is_lattice(const Poset& p) {
  Report r{.name = "lattice"};
  for (Element x = 0; x < p.size() && r.holds; ++x)
    for (Element y = x + 1; y < p.size(); ++y) {
      const bool has_join = join(p, x, y).has_value();
      const bool has_meet = meet(p, x, y).has_value();
      if (!has_join || !has_meet) {
        r.holds = false;
        r.witness = {x, y};
        r.detail = std::string("no ") + (has_join ? "meet" : "join") + " of " + p.name(x) + " and " + p.name(y);
        break;
      }
    }
  return r;
}

Report is_distributive(const Poset& p) {
  Report r{.name = "distributive"};
  const std::size_t n = p.size();
  bool identity[4] = {true, true, true, true};
  auto L = [&](ElementSet a) { return lower_cone(p, a); };
  auto U = [&](ElementSet a) { return upper_cone(p, a); };
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        const ElementSet sx = ElementSet::single(x), sy = ElementSet::single(y), sz = ElementSet::single(z);
        const bool lu1 = L(U(sx | sy) | sz) == L(U(L(sx | sz) | L(sy | sz)));
        const bool lu2 = U(L(sx | sz) | L(sy | sz)) == U(L(U(sx | sy) | sz));
        const bool lu3 = U(L(sx | sy) | sz) == U(L(U(sx | sz) | U(sy | sz)));
        const bool lu4 = L(U(sx | sz) | U(sy | sz)) == L(U(L(sx | sy) | sz));
        if (!lu1 && identity[0]) {
          r.witness = {x, y, z};
          r.detail = "L(U(x,y),z) != LU(L(x,z),L(y,z)) at (" + p.name(x) + ", " + p.name(y) + ", " + p.name(z) + ")";
        }
        identity[0] = identity[0] && lu1;
        identity[1] = identity[1] && lu2;
        identity[2] = identity[2] && lu3;
        identity[3] = identity[3] && lu4;
      }
  r.holds = identity[0];
  r.facets = {{"LU1", identity[0]}, {"LU2", identity[1]}, {"LU3", identity[2]}, {"LU4", identity[3]}};
  return r;
}

ElementSet complements_of(const Poset& p, Element x) {
  ElementSet out;
  const ElementSet bottom_only = ElementSet::single(p.bottom());
  const ElementSet top_only = ElementSet::single(p.top());
  for (Element y = 0; y < p.size(); ++y)
    if ((p.down(x) & p.down(y)) == bottom_only && (p.up(x) & p.up(y)) == top_only) out.insert(y);
  return out;
}

Report is_complemented(const Poset& p) {
  Report r{.name = "complemented"};
  for (Element x = 0; x < p.size(); ++x)
    if (complements_of(p, x).empty()) {
      r.holds = false;
      r.witness = {x};
      r.detail = p.name(x) + " has no complement";
      break;
    }
  return r;
}

Report is_boolean_poset(const Poset& p) {
  const Report dist = is_distributive(p);
  const Report comp = is_complemented(p);
  Report r{.name = "boolean_poset", .holds = dist.holds && comp.holds};
  r.facets = {{"distributive", dist.holds}, {"complemented", comp.holds}};
  if (!dist.holds) {
    r.witness = dist.witness;
    r.detail = dist.detail;
  } else if (!comp.holds) {
    r.witness = comp.witness;
    r.detail = comp.detail;
  }
  return r;
}

namespace {

// Every finite subset's upper cone, deduplicated. A finite subset M of P has
// an upper cone determined by M, and there are at most 2^n subsets.
template <class ConeOf>
std::vector<ElementSet> distinct_cones(const Poset& p, ConeOf cone_of) {
  const std::size_t n = p.size();
  std::unordered_set<std::uint64_t> seen;
  std::vector<ElementSet> cones;
  // Exponential in n; finite posets of interest here stay well below 30 elements.
  const std::uint64_t limit = n >= 63 ? 0 : (std::uint64_t{1} << n);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const ElementSet cone = cone_of(ElementSet::from_bits(mask));
    if (seen.insert(cone.bits()).second) cones.push_back(cone);
  }
  return cones;
}

}  // namespace

bool is_mub_complete(const Poset& p) {
  for (ElementSet ub : distinct_cones(p, [&](ElementSet m) { return upper_cone(p, m); })) {
    const ElementSet mins = minimal(p, ub);
    for (Element x : ub)
      if (!p.down(x).intersects(mins)) return false;
  }
  return true;
}

bool is_lub_complete(const Poset& p) {
  for (ElementSet lb : distinct_cones(p, [&](ElementSet m) { return lower_cone(p, m); })) {
    const ElementSet maxs = maximal(p, lb);
    for (Element x : lb)
      if (!p.up(x).intersects(maxs)) return false;
  }
  return true;
}

bool has_maximality_property(const Poset& p) {
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = a; b < p.size(); ++b)
      if (maximal(p, p.down(a) & p.down(b)).empty()) return false;
  return true;
}

}  // namespace qposet
