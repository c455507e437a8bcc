#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "qposet/errors.hpp"
#include "qposet/fixtures.hpp"
#include "qposet/ortho.hpp"
#include "support/oracles.hpp"

using namespace qposet;

namespace {

Element at(const OrthoPoset& q, const char* name) { return *q.poset().find(name); }

std::vector<Element> pair_of(const OrthoPoset& q, const char* a, const char* b) { return {at(q, a), at(q, b)}; }

ErrorKind attach_error(const Poset& p, std::vector<Element> perm) {
  try {
    OrthoPoset::attach(p, std::move(perm));
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;  // unreachable in these tests
}

}  // namespace

TEST(Attach, ValidAndInvalid) {
  const std::vector<Cover> c2 = {{0, 1}};
  const Poset chain = Poset::build(2, c2, 0, 1);
  EXPECT_NO_THROW(OrthoPoset::attach(chain, {1, 0}));
  const ErrorKind k = attach_error(chain, {0, 1});
  EXPECT_TRUE(k == ErrorKind::NotAntitone || k == ErrorKind::NotInvolutive);

  const OrthoPoset b4 = fixture("b4");
  const ErrorKind id = attach_error(b4.poset(), {0, 1, 2, 3});
  EXPECT_TRUE(id == ErrorKind::NotAntitone || id == ErrorKind::NotInvolutive);
  // 3-cycle on the atoms is not self-inverse.
  const std::vector<Cover> m3 = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  EXPECT_EQ(attach_error(Poset::build(5, m3, 0, 4), {4, 2, 3, 1, 0}), ErrorKind::NotInvolutive);
  EXPECT_EQ(attach_error(chain, {1, 1}), ErrorKind::InvalidArgument);
  EXPECT_EQ(attach_error(chain, {1}), ErrorKind::InvalidArgument);
}

TEST(Attach, Fig1InvolutionNeedNotComplement) {
  const OrthoPoset f1 = fixture("fig1");
  EXPECT_TRUE(f1.leq(at(f1, "a"), at(f1, "a'")));
  EXPECT_EQ(f1.prime(f1.bottom()), f1.top());
}

TEST(Orthogonal, Examples) {
  const OrthoPoset h = fixture("fig2");
  for (Element x = 0; x < h.size(); ++x) EXPECT_TRUE(orthogonal(h, x, h.prime(x)));
  EXPECT_TRUE(orthogonal(h, at(h, "a"), at(h, "b")));
  EXPECT_FALSE(orthogonal(h, at(h, "a"), at(h, "a")));
}

TEST(Orthogonal, Symmetric) {
  for (const auto& name : fixture_names()) {
    const OrthoPoset q = fixture(name);
    for (Element x = 0; x < q.size(); ++x)
      for (Element y = 0; y < q.size(); ++y)
        EXPECT_EQ(q.leq(x, q.prime(y)), q.leq(y, q.prime(x))) << name;
  }
}

TEST(Predicates, OrthogonalPoset) {
  EXPECT_TRUE(is_orthogonal_poset(fixture("fig2")).holds);
  EXPECT_TRUE(is_orthogonal_poset(fixture("b4")).holds);
  const OrthoPoset f3 = fixture("fig3");
  const Report r = is_orthogonal_poset(f3);
  EXPECT_FALSE(r.holds);
  ASSERT_EQ(r.witness.size(), 2u);
  EXPECT_TRUE(orthogonal(f3, r.witness[0], r.witness[1]));
  EXPECT_FALSE(join(f3.poset(), r.witness[0], r.witness[1]).has_value());
}

TEST(Predicates, Orthocomplemented) {
  const OrthoPoset f1 = fixture("fig1");
  const Report r = is_orthocomplemented(f1);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witness, (std::vector<Element>{at(f1, "a")}));
  EXPECT_EQ(join(f1.poset(), at(f1, "a"), at(f1, "a'")), at(f1, "a'"));
  EXPECT_TRUE(is_orthocomplemented(fixture("fig2")).holds);
  EXPECT_TRUE(is_orthocomplemented(fixture("b4")).holds);
}

TEST(Predicates, Paraorthomodular) {
  EXPECT_TRUE(is_paraorthomodular(fixture("fig1")).holds);
  EXPECT_TRUE(is_paraorthomodular(fixture("b4")).holds);
  const OrthoPoset h = fixture("fig2");
  const Report r = is_paraorthomodular(h);
  EXPECT_FALSE(r.holds);
  // Either mirror image of the hexagon witness.
  EXPECT_TRUE(r.witness == pair_of(h, "b", "a'") || r.witness == pair_of(h, "a", "b'")) << r.detail;
  EXPECT_FALSE(r.facet("P"));
  EXPECT_FALSE(r.facet("P'"));
}

TEST(Predicates, Orthomodular) {
  EXPECT_TRUE(is_orthomodular(fixture("fig4")).holds);
  EXPECT_TRUE(is_orthomodular(fixture("b4")).holds);
  const OrthoPoset h = fixture("fig2");
  const Report r = is_orthomodular(h);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.witness == pair_of(h, "a", "b'") || r.witness == pair_of(h, "b", "a'")) << r.detail;
}

TEST(Predicates, WeaklyBoolean) {
  EXPECT_TRUE(is_weakly_boolean(fixture("b4")).holds);
  EXPECT_TRUE(is_weakly_boolean(fixture("fig2")).holds);
  const OrthoPoset mo2 = fixture("mo2");
  const Report r = is_weakly_boolean(mo2);
  EXPECT_FALSE(r.holds);
  ASSERT_EQ(r.witness.size(), 2u);
  const Element a = r.witness[0], b = r.witness[1];
  EXPECT_NE(a, mo2.bottom());
  EXPECT_EQ(meet(mo2.poset(), a, b), mo2.bottom());
  EXPECT_EQ(meet(mo2.poset(), a, mo2.prime(b)), mo2.bottom());
  EXPECT_EQ(r.witness[0], at(mo2, "a"));
}

TEST(Predicates, SharplyParaorthomodular) {
  EXPECT_TRUE(is_sharply_paraorthomodular(fixture("fig1")).holds);
  EXPECT_FALSE(is_sharply_paraorthomodular(fixture("fig2")).holds);
  EXPECT_TRUE(is_sharply_paraorthomodular(fixture("b4")).holds);
}

TEST(Predicates, BooleanRequiresComplementingInvolution) {
  // 2^2 with both atoms fixed is a Boolean poset but the involution is not a complement.
  const std::vector<Cover> diamond = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  const OrthoPoset q = OrthoPoset::attach(Poset::build(4, diamond, 0, 3), {3, 1, 2, 0});
  EXPECT_TRUE(q.classification().boolean_poset.holds);
  EXPECT_FALSE(q.classification().orthocomplemented.holds);
  EXPECT_FALSE(q.classification().boolean_orthoposet.holds);
  EXPECT_FALSE(q.classification().boolean_algebra.holds);
}

TEST(Compatible, Examples) {
  const OrthoPoset f4 = fixture("fig4");
  for (Element x = 0; x < f4.size(); ++x) {
    const Report self = compatible(f4, x, x);
    EXPECT_TRUE(self.holds);
    const Report top = compatible(f4, x, f4.top());
    EXPECT_TRUE(top.holds);
  }
  const OrthoPoset mo2 = fixture("mo2");
  EXPECT_FALSE(compatible(mo2, at(mo2, "a"), at(mo2, "b")).holds);
  EXPECT_TRUE(compatible(mo2, at(mo2, "a"), at(mo2, "a'")).holds);
}

TEST(Compatible, WitnessReplays) {
  const OrthoPoset q = fixture("b8");
  for (Element a = 0; a < q.size(); ++a)
    for (Element b = 0; b < q.size(); ++b) {
      const Report r = compatible(q, a, b);
      ASSERT_TRUE(r.holds);
      const Element c = r.witness[0], d = r.witness[1], e = r.witness[2];
      EXPECT_TRUE(orthogonal(q, c, d) && orthogonal(q, d, e) && orthogonal(q, c, e));
      EXPECT_EQ(join(q.poset(), c, d), a);
      EXPECT_EQ(join(q.poset(), d, e), b);
    }
}

TEST(Difference, Examples) {
  const OrthoPoset b4 = fixture("b4");
  for (Element b = 0; b < b4.size(); ++b) EXPECT_EQ(difference(b4, b4.bottom(), b), b);
  EXPECT_EQ(difference(b4, at(b4, "a"), b4.top()), at(b4, "a'"));
  const OrthoPoset f4 = fixture("fig4");
  for (Element x = 0; x < f4.size(); ++x) EXPECT_EQ(difference(f4, x, f4.top()), f4.prime(x));
  try {
    difference(b4, at(b4, "a"), at(b4, "a'"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
  }
}

TEST(Difference, DecomposesOnOrthomodularStructures) {
  for (const auto& q : enumerate_structures(10, class_filter("orthomodular"))) {
    for (Element a = 0; a < q.size(); ++a)
      for (Element b = 0; b < q.size(); ++b) {
        if (!q.leq(a, b)) continue;
        const Element d = difference(q, a, b);
        EXPECT_EQ(meet(q.poset(), b, q.prime(a)), d);
        EXPECT_TRUE(orthogonal(q, a, d));
        EXPECT_EQ(join(q.poset(), a, d), b);
      }
  }
}

TEST(Classify, FixtureMatrix) {
  const Classification c1 = classify(fixture("fig1"));
  EXPECT_TRUE(c1.lattice.holds);
  EXPECT_TRUE(c1.orthogonal.holds);
  EXPECT_FALSE(c1.orthocomplemented.holds);
  EXPECT_TRUE(c1.paraorthomodular.holds);
  EXPECT_FALSE(c1.orthomodular.holds);
  EXPECT_FALSE(c1.boolean_poset.holds);

  const Classification c2 = classify(fixture("fig2"));
  EXPECT_TRUE(c2.lattice.holds);
  EXPECT_TRUE(c2.orthogonal.holds);
  EXPECT_TRUE(c2.orthocomplemented.holds);
  EXPECT_FALSE(c2.paraorthomodular.holds);
  EXPECT_FALSE(c2.orthomodular.holds);

  const Classification c4 = classify(fixture("fig4"));
  EXPECT_FALSE(c4.lattice.holds);
  EXPECT_TRUE(c4.orthomodular.holds);
}

TEST(Classify, NamesRoundTrip) {
  const Classification c = classify(fixture("b8"));
  ASSERT_EQ(c.all().size(), class_names().size());
  for (std::size_t i = 0; i < class_names().size(); ++i) {
    EXPECT_EQ(c.all()[i]->name, class_names()[i]);
    EXPECT_EQ(c.find(class_names()[i]), c.all()[i]);
  }
  EXPECT_EQ(c.find("nonsense"), nullptr);
}

TEST(Classify, MemoizedAcrossThreads) {
  const OrthoPoset q = fixture("fig4");
  std::vector<const Classification*> seen(4);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < seen.size(); ++i) pool.emplace_back([&, i] { seen[i] = &q.classification(); });
  for (auto& t : pool) t.join();
  for (const auto* c : seen) EXPECT_EQ(c, seen[0]);
  const OrthoPoset copy = q;
  EXPECT_EQ(&copy.classification(), seen[0]);
}

// Structure-class laws over the enumerated sweep.
TEST(OrthoProperties, ClassLawsOnSweep) {
  bool para_not_om = false;
  for (const auto& q : enumerate_structures(10)) {
    const Classification& c = q.classification();
    ASSERT_EQ(c.paraorthomodular.facet("P"), c.paraorthomodular.facet("P'")) << q.name();
    if (c.orthomodular.holds) ASSERT_TRUE(c.paraorthomodular.holds) << q.name();
    if (c.orthogonal.holds && c.boolean_orthoposet.holds) ASSERT_TRUE(c.orthomodular.holds) << q.name();
    if (c.weakly_boolean.holds && c.orthomodular.holds) {
      ASSERT_TRUE(c.boolean_poset.holds) << q.name();
      ASSERT_TRUE(c.lattice.holds) << q.name();
    }
    para_not_om = para_not_om || (c.paraorthomodular.holds && !c.orthomodular.holds);
  }
  EXPECT_TRUE(para_not_om);
}

// Independent re-derivation of each predicate from its definition.
TEST(OrthoProperties, PredicatesMatchDefinitionScan) {
  for (const auto& q : enumerate_structures(9)) {
    const std::size_t n = q.size();
    bool orth = true, ocomp = true, para = true, wb = true;
    for (Element x = 0; x < n; ++x) {
      ocomp = ocomp && oracle::sup(q, x, q.prime(x)) == q.top();
      for (Element y = 0; y < n; ++y) {
        if (q.leq(x, q.prime(y))) orth = orth && oracle::sup(q, x, y) != n;
        if (q.leq(x, y) && x != y && oracle::inf(q, q.prime(x), y) == q.bottom()) para = false;
        if (x != q.bottom() && oracle::inf(q, x, y) == q.bottom() && oracle::inf(q, x, q.prime(y)) == q.bottom())
          wb = false;
      }
    }
    bool om = orth;
    for (Element x = 0; x < n && om; ++x)
      for (Element y = 0; y < n && om; ++y) {
        if (!q.leq(x, y)) continue;
        const Element m = oracle::inf(q, y, q.prime(x));
        om = m != n && oracle::sup(q, x, m) == y;
      }
    const Classification& c = q.classification();
    ASSERT_EQ(c.orthogonal.holds, orth) << q.name();
    ASSERT_EQ(c.orthocomplemented.holds, ocomp) << q.name();
    ASSERT_EQ(c.paraorthomodular.holds, para) << q.name();
    ASSERT_EQ(c.weakly_boolean.holds, wb) << q.name();
    ASSERT_EQ(c.orthomodular.holds, om) << q.name();
  }
}
