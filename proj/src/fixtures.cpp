#include "qposet/fixtures.hpp"

#include "qposet/errors.hpp"

namespace qposet {

namespace {

std::vector<FixtureSpec> make_specs() {
  std::vector<FixtureSpec> specs;

  specs.push_back({.name = "chain2",
                   .description = "two-element Boolean algebra",
                   .elements = {"0", "1"},
                   .covers = {{"0", "1"}},
                   .swaps = {{"0", "1"}},
                   .expected = {{"boolean_algebra", true}, {"orthomodular", true}},
                   .expected_size = 2});

  specs.push_back({.name = "b4",
                   .description = "four-element Boolean algebra 2^2",
                   .elements = {"0", "a", "a'", "1"},
                   .covers = {{"0", "a"}, {"0", "a'"}, {"a", "1"}, {"a'", "1"}},
                   .swaps = {{"0", "1"}, {"a", "a'"}},
                   .expected = {{"boolean_algebra", true}, {"orthomodular", true}},
                   .expected_size = 4});

  specs.push_back({.name = "b8",
                   .description = "eight-element Boolean algebra 2^3",
                   .elements = {"0", "a", "b", "c", "a'", "b'", "c'", "1"},
                   .covers = {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "b'"}, {"a", "c'"}, {"b", "a'"},
                              {"b", "c'"}, {"c", "a'"}, {"c", "b'"}, {"a'", "1"}, {"b'", "1"}, {"c'", "1"}},
                   .swaps = {{"0", "1"}, {"a", "a'"}, {"b", "b'"}, {"c", "c'"}},
                   .expected = {{"boolean_algebra", true}, {"orthomodular", true}},
                   .expected_size = 8});

  specs.push_back({.name = "mo2",
                   .description = "MO2: bounds plus four pairwise incomparable atoms",
                   .elements = {"0", "a", "a'", "b", "b'", "1"},
                   .covers = {{"0", "a"}, {"0", "a'"}, {"0", "b"}, {"0", "b'"},
                              {"a", "1"}, {"a'", "1"}, {"b", "1"}, {"b'", "1"}},
                   .swaps = {{"0", "1"}, {"a", "a'"}, {"b", "b'"}},
                   .expected = {{"lattice", true},
                                {"orthomodular", true},
                                {"boolean_poset", false},
                                {"weakly_boolean", false}},
                   .expected_size = 6});

  specs.push_back({.name = "fig1",
                   .description = "non-orthocomplemented paraorthomodular lattice",
                   .elements = {"0", "a", "b", "a'", "b'", "1"},
                   .covers = {{"0", "a"}, {"0", "b"}, {"a", "a'"}, {"b", "b'"}, {"a'", "1"}, {"b'", "1"}},
                   .swaps = {{"0", "1"}, {"a", "a'"}, {"b", "b'"}},
                   .expected = {{"lattice", true},
                                {"orthogonal", true},
                                {"orthocomplemented", false},
                                {"paraorthomodular", true},
                                {"orthomodular", false},
                                {"boolean_poset", false}},
                   .expected_size = 6});

  specs.push_back({.name = "fig2",
                   .description = "orthocomplemented non-orthomodular lattice (hexagon)",
                   .elements = {"0", "a", "b", "a'", "b'", "1"},
                   .covers = {{"0", "a"}, {"0", "b"}, {"a", "b'"}, {"b", "a'"}, {"a'", "1"}, {"b'", "1"}},
                   .swaps = {{"0", "1"}, {"a", "a'"}, {"b", "b'"}},
                   .expected = {{"lattice", true},
                                {"orthogonal", true},
                                {"orthocomplemented", true},
                                {"paraorthomodular", false},
                                {"orthomodular", false}},
                   .expected_size = 6});

  // The vertical strokes a..d' and d..a' in the drawing pass through e and e',
  // so they are read as the chains a < e < d' and d < e' < a'.
  specs.push_back({.name = "fig3",
                   .description = "non-orthogonal non-lattice Boolean poset",
                   .elements = {"0", "a", "b", "c", "d", "e", "e'", "d'", "c'", "b'", "a'", "1"},
                   .covers = {{"0", "a"},  {"0", "b"},  {"0", "c"},  {"0", "d"},  {"a", "e"},  {"a", "b'"},
                              {"b", "e"},  {"b", "a'"}, {"c", "d'"}, {"c", "e'"}, {"d", "c'"}, {"d", "e'"},
                              {"e", "d'"}, {"e", "c'"}, {"e'", "b'"}, {"e'", "a'"}, {"d'", "1"}, {"c'", "1"},
                              {"b'", "1"}, {"a'", "1"}},
                   .swaps = {{"0", "1"}, {"a", "a'"}, {"b", "b'"}, {"c", "c'"}, {"d", "d'"}, {"e", "e'"}},
                   .expected = {{"boolean_poset", true}, {"orthogonal", false}, {"lattice", false}},
                   .expected_size = 12});

  specs.push_back({.name = "fig4",
                   .description = "smallest non-lattice orthomodular poset",
                   .elements = {"0",  "a",  "b",  "c",  "d",  "e",  "f",  "g",  "h",
                                "a'", "b'", "c'", "d'", "e'", "f'", "g'", "h'", "1"},
                   .covers = {{"a", "h'"}, {"a", "g'"}, {"a", "f'"}, {"a", "d'"}, {"b", "h'"}, {"b", "g'"},
                              {"b", "e'"}, {"b", "c'"}, {"c", "h'"}, {"c", "b'"}, {"d", "h'"}, {"d", "a'"},
                              {"e", "g'"}, {"e", "b'"}, {"f", "g'"}, {"f", "a'"}, {"g", "f'"}, {"g", "e'"},
                              {"g", "b'"}, {"g", "a'"}, {"h", "d'"}, {"h", "c'"}, {"h", "b'"}, {"h", "a'"},
                              {"0", "a"},  {"0", "b"},  {"0", "c"},  {"0", "d"},  {"0", "e"},  {"0", "f"},
                              {"0", "g"},  {"0", "h"},  {"a'", "1"}, {"b'", "1"}, {"c'", "1"}, {"d'", "1"},
                              {"e'", "1"}, {"f'", "1"}, {"g'", "1"}, {"h'", "1"}},
                   .swaps = {{"0", "1"}, {"a", "a'"}, {"b", "b'"}, {"c", "c'"}, {"d", "d'"},
                             {"e", "e'"}, {"f", "f'"}, {"g", "g'"}, {"h", "h'"}},
                   .expected = {{"orthomodular", true}, {"lattice", false}},
                   .expected_size = 18});
  return specs;
}

Element index_of(const FixtureSpec& spec, const std::string& name) {
  for (std::size_t i = 0; i < spec.elements.size(); ++i)
    if (spec.elements[i] == name) return i;
  throw Error(ErrorKind::InvalidArgument, "fixture " + spec.name + " references unknown element " + name);
}

void fail(const FixtureSpec& spec, const std::string& what) {
  throw Error(ErrorKind::PreconditionViolated, "fixture " + spec.name + " (" + spec.description + "): " + what);
}

}  // namespace

const std::vector<FixtureSpec>& fixture_specs() {
  static const std::vector<FixtureSpec> specs = make_specs();
  return specs;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& s : fixture_specs()) out.push_back(s.name);
  return out;
}

OrthoPoset fixture(const std::string& name) {
  const FixtureSpec* spec = nullptr;
  for (const auto& s : fixture_specs())
    if (s.name == name) spec = &s;
  if (!spec) throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + name + "'");

  std::vector<Cover> covers;
  for (const auto& [lo, hi] : spec->covers) covers.emplace_back(index_of(*spec, lo), index_of(*spec, hi));
  std::vector<Element> perm(spec->elements.size());
  for (Element i = 0; i < perm.size(); ++i) perm[i] = i;
  for (const auto& [x, y] : spec->swaps) {
    perm[index_of(*spec, x)] = index_of(*spec, y);
    perm[index_of(*spec, y)] = index_of(*spec, x);
  }
  OrthoPoset q = OrthoPoset::attach(Poset::build_bounded(spec->elements.size(), covers, spec->elements),
                                    std::move(perm), spec->name);

  if (spec->expected_size != 0 && q.size() != spec->expected_size)
    fail(*spec, "expected " + std::to_string(spec->expected_size) + " elements, got " + std::to_string(q.size()));
  const Classification& c = q.classification();
  for (const auto& [cls, want] : spec->expected) {
    const Report* r = c.find(cls);
    if (!r) fail(*spec, "unknown class '" + cls + "'");
    if (r->holds != want) fail(*spec, "expected " + cls + " = " + (want ? "true" : "false") + ": " + r->detail);
  }
  if (spec->name == "fig3") {
    // a ⊥ c while a ∨ c does not exist.
    const Element a = index_of(*spec, "a"), c_ = index_of(*spec, "c");
    if (!orthogonal(q, a, c_)) fail(*spec, "expected a ⊥ c");
    if (join(q.poset(), a, c_)) fail(*spec, "expected a ∨ c to be absent");
  }
  return q;
}

}  // namespace qposet
