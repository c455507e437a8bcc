#include "qposet/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <optional>

namespace qposet {

namespace {

using Coloring = std::vector<std::size_t>;

std::size_t compress(Coloring& col, const std::vector<std::vector<std::size_t>>& sig) {
  std::vector<std::size_t> order(col.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
  std::size_t rank = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
    col[order[i]] = rank;
  }
  return col.empty() ? 0 : rank + 1;
}

// Individualization-refinement search for the lexicographically least encoding,
// with orbit pruning from automorphisms found at equal leaves.
class Search {
public:
  Search(std::span<const ElementSet> up, std::span<const Element> inv) : up_(up), inv_(inv), n_(up.size()) {
    down_.assign(n_, ElementSet{});
    for (Element x = 0; x < n_; ++x)
      for (Element y : up_[x]) down_[y].insert(x);
  }

  std::vector<Element> run() {
    Coloring col(n_, 0);
    if (!inv_.empty())
      for (Element v = 0; v < n_; ++v) col[v] = inv_[v] == v ? 0 : 1;
    std::vector<Element> path;
    visit(col, path);
    return best_lab_;
  }

private:
  std::size_t refine(Coloring& col) const {
    std::vector<std::vector<std::size_t>> sig(n_);
    for (Element v = 0; v < n_; ++v) sig[v] = {col[v]};
    std::size_t k = compress(col, sig);
    for (;;) {
      for (Element v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.assign(2 + 2 * k, 0);
        s[0] = col[v];
        s[1] = inv_.empty() ? 0 : col[inv_[v]];
        for (Element u : up_[v])
          if (u != v) ++s[2 + col[u]];
        for (Element u : down_[v])
          if (u != v) ++s[2 + k + col[u]];
      }
      const std::size_t next = compress(col, sig);
      if (next == k) return k;
      k = next;
    }
  }

  bool fixes(const std::vector<Element>& g, const std::vector<Element>& path) const {
    return std::all_of(path.begin(), path.end(), [&](Element v) { return g[v] == v; });
  }

  bool same_orbit(Element a, Element b, const std::vector<Element>& path) const {
    std::vector<Element> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Element x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : autos_) {
      if (!fixes(g, path)) continue;
      for (Element v = 0; v < n_; ++v) parent[find(v)] = find(g[v]);
    }
    return find(a) == find(b);
  }

  void visit(Coloring col, std::vector<Element>& path) {
    const std::size_t k = refine(col);
    if (k == n_) {
      leaf(col);
      return;
    }
    std::size_t target = 0;
    std::vector<std::size_t> count(k, 0);
    for (Element v = 0; v < n_; ++v) ++count[col[v]];
    while (count[target] < 2) ++target;

    std::vector<Element> tried;
    for (Element v = 0; v < n_; ++v) {
      if (col[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Element u) { return same_orbit(u, v, path); })) continue;
      tried.push_back(v);
      Coloring next(n_);
      for (Element u = 0; u < n_; ++u) next[u] = 2 * col[u] + ((col[u] == target && u != v) ? 1 : 0);
      path.push_back(v);
      visit(std::move(next), path);
      path.pop_back();
    }
  }

  void leaf(const Coloring& lab) {
    CanonicalCertificate enc = encode(up_, inv_, lab);
    if (!best_ || enc < *best_) {
      best_ = std::move(enc);
      best_lab_.assign(lab.begin(), lab.end());
      return;
    }
    if (enc == *best_) {
      std::vector<Element> at(n_);
      for (Element v = 0; v < n_; ++v) at[best_lab_[v]] = v;
      std::vector<Element> g(n_);
      bool identity = true;
      for (Element v = 0; v < n_; ++v) {
        g[v] = at[lab[v]];
        identity = identity && g[v] == v;
      }
      if (!identity) autos_.push_back(std::move(g));
    }
  }

  std::span<const ElementSet> up_;
  std::span<const Element> inv_;
  std::size_t n_;
  std::vector<ElementSet> down_;
  std::optional<CanonicalCertificate> best_;
  std::vector<Element> best_lab_;
  std::vector<std::vector<Element>> autos_;
};

}  // namespace

std::string CanonicalCertificate::hex() const {
  std::string out;
  char buf[17];
  for (std::uint64_t w : words) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w));
    out += buf;
  }
  return out;
}

std::vector<Element> canonical_labeling(std::span<const ElementSet> up, std::span<const Element> inv) {
  if (up.empty()) return {};
  return Search(up, inv).run();
}

CanonicalCertificate encode(std::span<const ElementSet> up, std::span<const Element> inv,
                            std::span<const Element> lab) {
  const std::size_t n = up.size();
  std::vector<Element> at(n);
  for (Element v = 0; v < n; ++v) at[lab[v]] = v;
  CanonicalCertificate c;
  c.words.reserve(2 + 2 * n);
  c.words.push_back(n);
  c.words.push_back(inv.empty() ? 0 : 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t row = 0;
    for (Element u : up[at[i]]) row |= std::uint64_t{1} << lab[u];
    c.words.push_back(row);
  }
  if (!inv.empty())
    for (std::size_t i = 0; i < n; ++i) c.words.push_back(lab[inv[at[i]]]);
  return c;
}

CanonicalCertificate canonical_form(std::span<const ElementSet> up, std::span<const Element> inv) {
  const auto lab = canonical_labeling(up, inv);
  return encode(up, inv, lab);
}

CanonicalCertificate canonical_form(const Poset& p) {
  std::vector<ElementSet> up(p.size());
  for (Element x = 0; x < p.size(); ++x) up[x] = p.up(x);
  return canonical_form(up);
}

CanonicalCertificate canonical_form(const OrthoPoset& q) {
  std::vector<ElementSet> up(q.size());
  for (Element x = 0; x < q.size(); ++x) up[x] = q.poset().up(x);
  return canonical_form(up, q.involution().map());
}

bool is_isomorphic(const OrthoPoset& a, const OrthoPoset& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace qposet
