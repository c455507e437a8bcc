#include "qposet/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qposet/document.hpp"
#include "qposet/errors.hpp"

namespace qposet {

namespace {

using Rows = std::vector<ElementSet>;

// Runs fn(i) for i in [0, count) on up to `jobs` threads, interleaved.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += jobs) fn(i);
    });
  for (auto& th : pool) th.join();
}

bool is_down_closed(const Rows& up, ElementSet d) {
  for (Element x : d)
    for (Element y = 0; y < up.size(); ++y)
      if (up[y].contains(x) && !d.contains(y)) return false;
  return true;
}

std::vector<Rows> extend(const std::vector<Rows>& smaller) {
  std::vector<Rows> out;
  std::set<CanonicalCertificate> seen;
  for (const Rows& p : smaller) {
    const std::size_t k = p.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
      const ElementSet d = ElementSet::from_bits(bits);
      if (!is_down_closed(p, d)) continue;
      Rows q = p;
      for (Element x : d) q[x].insert(k);
      q.push_back(ElementSet::single(k));
      if (seen.insert(canonical_form(q)).second) out.push_back(std::move(q));
    }
  }
  return out;
}

std::string element_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "e" + std::to_string(i);
}

const char* const kDerivedRows[][3] = {
    {"paraorthomodular_not_orthomodular", "paraorthomodular", "orthomodular"},
    {"orthocomplemented_not_paraorthomodular", "orthocomplemented", "paraorthomodular"},
    {"orthomodular_not_lattice", "orthomodular", "lattice"},
};

struct StructureResult {
  std::vector<bool> classes;
  bool orthogonal = false;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<SweepDiscrepancy> discrepancies;
  std::array<ArrowStats, 5> arrows;
  std::array<bool, 5> adjoint{};
  bool backward_c_not_boolean = false;
};

std::string show_set(const OrthoPoset& q, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s) {
    out += (first ? "" : ", ") + q.name_of(e);
    first = false;
  }
  return out + "}";
}

StructureResult analyse(const OrthoPoset& q) {
  StructureResult r;
  const Classification& c = q.classification();
  for (const auto& name : class_names()) r.classes.push_back(c.find(name)->holds);
  r.orthogonal = c.orthogonal.holds;

  for (const SuiteEntry& e : theorem_suite(q)) {
    if (e.verdict == Verdict::Skipped) {
      ++r.skipped;
      continue;
    }
    ++r.checked;
    if (e.verdict == Verdict::Discrepant) r.discrepancies.push_back({q.name(), e.id, e.detail, serialize(q)});
  }
  if (!r.orthogonal) return r;

  for (std::size_t k = 0; k < kAllArrows.size(); ++k) {
    ArrowStats& st = r.arrows[k];
    try {
      const ArrowTable t(q, kAllArrows[k]);
      for (Element x = 0; x < q.size(); ++x)
        for (Element y = 0; y < q.size(); ++y) {
          const ElementSet v = t(x, y);
          ++st.evaluations;
          const std::string where = q.name() + ": " + q.name_of(x) + " -> " + q.name_of(y) + " = " + show_set(q, v);
          if (v.size() >= 2) {
            if (st.multi_valued++ == 0) st.first_multi = where;
            bool antichain = true;
            for (Element a : v)
              for (Element b : v)
                if (a != b && q.leq(a, b)) antichain = false;
            if (!antichain && st.non_antichain++ == 0) st.first_non_antichain = where;
          }
        }
      r.adjoint[k] = adjoint_exists(q, t).check.holds;
    } catch (const Error&) {
      ++st.errors;
    }
  }
  try {
    r.backward_c_not_boolean = check_backward_op(q, ArrowKind::C).holds && !c.boolean_orthoposet.holds;
  } catch (const Error&) {
  }
  return r;
}

void merge_stats(ArrowStats& into, const ArrowStats& from) {
  if (into.multi_valued == 0 && from.multi_valued > 0) into.first_multi = from.first_multi;
  if (into.non_antichain == 0 && from.non_antichain > 0) into.first_non_antichain = from.first_non_antichain;
  into.evaluations += from.evaluations;
  into.multi_valued += from.multi_valued;
  into.non_antichain += from.non_antichain;
  into.errors += from.errors;
}

}  // namespace

std::vector<Rows> core_posets(std::size_t k) {
  static std::mutex mu;
  static std::vector<std::vector<Rows>> cache = {{Rows{}}};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= k) cache.push_back(extend(cache.back()));
  return cache[k];
}

Poset bounded_from_core(const Rows& core) {
  const std::size_t k = core.size();
  const std::size_t n = k + 2;
  if (n > kMaxElements) throw Error(ErrorKind::InvalidArgument, "structure too large");
  const Element top = k + 1;
  std::vector<ElementSet> up(n);
  up[0] = ElementSet::full(n);
  for (Element x = 0; x < k; ++x) {
    for (Element y : core[x]) up[x + 1].insert(y + 1);
    up[x + 1].insert(top);
  }
  up[top] = ElementSet::single(top);
  std::vector<std::string> names;
  names.push_back("0");
  for (std::size_t i = 0; i < k; ++i) names.push_back(element_name(i));
  names.push_back("1");
  return Poset::from_up_sets(std::move(up), std::move(names));
}

std::vector<std::vector<Element>> antitone_involutions(const Poset& p) {
  const std::size_t n = p.size();
  constexpr Element kUnset = kMaxElements;
  std::vector<Element> f(n, kUnset);
  std::vector<Element> assigned;
  std::vector<std::vector<Element>> out;

  auto consistent = [&](Element x, Element y) {
    // f(x) = y and f(y) = x against every assigned a.
    for (Element a : assigned) {
      const Element fa = f[a];
      if (p.leq(a, x) != p.leq(y, fa) || p.leq(x, a) != p.leq(fa, y)) return false;
      if (p.leq(a, y) != p.leq(x, fa) || p.leq(y, a) != p.leq(fa, x)) return false;
    }
    return true;
  };

  auto rec = [&](auto& self, Element x) -> void {
    while (x < n && f[x] != kUnset) ++x;
    if (x == n) {
      out.push_back(f);
      return;
    }
    for (Element y = x; y < n; ++y) {
      if (f[y] != kUnset) continue;
      if (p.up(x).size() != p.down(y).size() || p.down(x).size() != p.up(y).size()) continue;
      if (!consistent(x, y)) continue;
      f[x] = y;
      f[y] = x;
      assigned.push_back(x);
      if (y != x) assigned.push_back(y);
      self(self, x + 1);
      assigned.pop_back();
      if (y != x) assigned.pop_back();
      f[x] = f[y] = kUnset;
    }
  };
  rec(rec, 0);
  return out;
}

StructureFilter class_filter(const std::string& class_name) {
  const auto& names = class_names();
  if (std::find(names.begin(), names.end(), class_name) == names.end())
    throw Error(ErrorKind::InvalidArgument, "unknown class '" + class_name + "'");
  return [class_name](const OrthoPoset& q) { return q.classification().find(class_name)->holds; };
}

std::vector<OrthoPoset> structures_of_size(std::size_t n, unsigned jobs) {
  if (n < 2) return {};
  const auto cores = core_posets(n - 2);
  using Item = std::pair<CanonicalCertificate, OrthoPoset>;
  std::vector<std::vector<Item>> per_core(cores.size());
  parallel_for(cores.size(), jobs, [&](std::size_t i) {
    Poset p = bounded_from_core(cores[i]);
    std::vector<ElementSet> up(n);
    for (Element x = 0; x < n; ++x) up[x] = p.up(x);
    std::set<CanonicalCertificate> seen;
    for (auto& f : antitone_involutions(p)) {
      CanonicalCertificate cert = canonical_form(up, f);
      if (!seen.insert(cert).second) continue;
      per_core[i].emplace_back(std::move(cert), OrthoPoset::attach(p, std::move(f)));
    }
  });
  std::vector<Item> all;
  for (auto& v : per_core)
    for (auto& item : v) all.push_back(std::move(item));
  std::sort(all.begin(), all.end(), [](const Item& a, const Item& b) { return a.first < b.first; });

  std::vector<OrthoPoset> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const OrthoPoset& q = all[i].second;
    out.push_back(OrthoPoset::attach(q.poset(), q.involution().map(),
                                     "n" + std::to_string(n) + "_" + std::to_string(i + 1)));
  }
  return out;
}

std::vector<OrthoPoset> enumerate_structures(std::size_t n_max, const StructureFilter& filter, unsigned jobs) {
  std::vector<OrthoPoset> out;
  for (std::size_t n = 2; n <= n_max; ++n)
    for (auto& q : structures_of_size(n, jobs))
      if (!filter || filter(q)) out.push_back(std::move(q));
  return out;
}

std::size_t SweepReport::total() const {
  std::size_t t = 0;
  for (std::size_t c : structures) t += c;
  return t;
}

SweepReport sweep(std::size_t n_max, unsigned jobs) {
  if (n_max < 2) throw Error(ErrorKind::InvalidArgument, "sweep needs max size >= 2");
  SweepReport rep;
  rep.n_max = n_max;
  rep.structures.assign(n_max + 1, 0);
  rep.orthogonal.assign(n_max + 1, 0);
  const auto& names = class_names();
  for (const auto& name : names) rep.census.emplace_back(name, std::vector<std::size_t>(n_max + 1, 0));
  for (const auto& row : kDerivedRows) rep.census.emplace_back(row[0], std::vector<std::size_t>(n_max + 1, 0));

  auto index_of = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(names.begin(), names.end(), name) - names.begin());
  };

  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto structures = structures_of_size(n, jobs);
    std::vector<StructureResult> results(structures.size());
    parallel_for(structures.size(), jobs, [&](std::size_t i) { results[i] = analyse(structures[i]); });

    for (std::size_t i = 0; i < structures.size(); ++i) {
      const auto& q = structures[i];
      const auto& r = results[i];
      ++rep.structures[n];
      if (r.orthogonal) ++rep.orthogonal[n];
      for (std::size_t c = 0; c < names.size(); ++c)
        if (r.classes[c]) ++rep.census[c].second[n];
      for (std::size_t d = 0; d < std::size(kDerivedRows); ++d)
        if (r.classes[index_of(kDerivedRows[d][1])] && !r.classes[index_of(kDerivedRows[d][2])])
          ++rep.census[names.size() + d].second[n];
      rep.entries_checked += r.checked;
      rep.entries_skipped += r.skipped;
      rep.discrepancies.insert(rep.discrepancies.end(), r.discrepancies.begin(), r.discrepancies.end());
      for (std::size_t k = 0; k < 5; ++k) {
        merge_stats(rep.arrows[k], r.arrows[k]);
        if (r.adjoint[k]) ++rep.adjoint_exists[k];
      }
      if (r.backward_c_not_boolean) ++rep.backward_c_not_boolean;
      const bool om = r.classes[index_of("orthomodular")];
      if (!rep.smallest_nonlattice_orthomodular && om && !r.classes[index_of("lattice")])
        rep.smallest_nonlattice_orthomodular = q.name();
      if (!rep.first_paraorthomodular_not_orthomodular && !om && r.classes[index_of("paraorthomodular")])
        rep.first_paraorthomodular_not_orthomodular = q.name();
    }
  }
  return rep;
}

std::string to_text(const SweepReport& r) {
  std::ostringstream out;
  out << "sweep sizes " << r.n_min << ".." << r.n_max << "\n";
  out << "structures " << r.total() << "\n";
  out << "size  structures  orthogonal\n";
  for (std::size_t n = r.n_min; n <= r.n_max; ++n)
    out << n << "  " << r.structures[n] << "  " << r.orthogonal[n] << "\n";

  out << "\ncensus (per size " << r.n_min << ".." << r.n_max << ")\n";
  for (const auto& [name, counts] : r.census) {
    out << "  " << name << ":";
    for (std::size_t n = r.n_min; n <= r.n_max; ++n) out << " " << counts[n];
    out << "\n";
  }

  out << "\ntheorem suite: " << r.entries_checked << " checked, " << r.entries_skipped << " skipped, "
      << r.discrepancies.size() << " discrepancies\n";
  for (const auto& d : r.discrepancies) out << "  " << d.structure << " " << d.id << ": " << d.detail << "\n";

  out << "\narrow values on orthogonal structures (exploratory)\n";
  for (std::size_t k = 0; k < 5; ++k) {
    const ArrowStats& s = r.arrows[k];
    out << "  " << to_char(kAllArrows[k]) << ": " << s.evaluations << " pairs, " << s.multi_valued
        << " multi-valued, " << s.non_antichain << " not antichains, " << s.errors << " errors\n";
    if (!s.first_multi.empty()) out << "     first multi-valued: " << s.first_multi << "\n";
    if (!s.first_non_antichain.empty()) out << "     first non-antichain: " << s.first_non_antichain << "\n";
  }

  out << "\nadjoint exists (orthogonal structures):";
  for (std::size_t k = 0; k < 5; ++k) out << " " << to_char(kAllArrows[k]) << "=" << r.adjoint_exists[k];
  out << "\nbackward order property for C without Boolean: " << r.backward_c_not_boolean << "\n";
  out << "first paraorthomodular non-orthomodular: " << r.first_paraorthomodular_not_orthomodular.value_or("none")
      << "\n";
  out << "smallest non-lattice orthomodular: " << r.smallest_nonlattice_orthomodular.value_or("none found") << "\n";
  return out.str();
}

std::string to_json(const SweepReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["min_size"] = r.n_min;
  j["max_size"] = r.n_max;
  ordered_json sizes = ordered_json::array();
  for (std::size_t n = r.n_min; n <= r.n_max; ++n)
    sizes.push_back({{"size", n}, {"structures", r.structures[n]}, {"orthogonal", r.orthogonal[n]}});
  j["sizes"] = sizes;
  ordered_json census = ordered_json::object();
  for (const auto& [name, counts] : r.census)
    census[name] = std::vector<std::size_t>(counts.begin() + static_cast<std::ptrdiff_t>(r.n_min), counts.end());
  j["census"] = census;
  j["entries_checked"] = r.entries_checked;
  j["entries_skipped"] = r.entries_skipped;
  ordered_json disc = ordered_json::array();
  for (const auto& d : r.discrepancies)
    disc.push_back({{"structure", d.structure}, {"id", d.id}, {"detail", d.detail}, {"document", d.document}});
  j["discrepancies"] = disc;
  ordered_json arrows = ordered_json::object();
  for (std::size_t k = 0; k < 5; ++k) {
    const ArrowStats& s = r.arrows[k];
    arrows[std::string(1, to_char(kAllArrows[k]))] = {{"evaluations", s.evaluations},
                                                      {"multi_valued", s.multi_valued},
                                                      {"non_antichain", s.non_antichain},
                                                      {"errors", s.errors},
                                                      {"first_multi", s.first_multi},
                                                      {"first_non_antichain", s.first_non_antichain},
                                                      {"adjoint_exists", r.adjoint_exists[k]}};
  }
  j["arrows_exploratory"] = arrows;
  j["backward_c_not_boolean"] = r.backward_c_not_boolean;
  j["first_paraorthomodular_not_orthomodular"] =
      r.first_paraorthomodular_not_orthomodular ? ordered_json(*r.first_paraorthomodular_not_orthomodular)
                                                : ordered_json(nullptr);
  j["smallest_nonlattice_orthomodular"] = r.smallest_nonlattice_orthomodular
                                              ? ordered_json(*r.smallest_nonlattice_orthomodular)
                                              : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

}  // namespace qposet
