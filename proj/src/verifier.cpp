#include "qposet/verifier.hpp"

#include <array>
#include <functional>

#include "qposet/errors.hpp"

namespace qposet {

namespace {

std::string arrow_name(const char* what, ArrowKind kind) { return std::string(what) + "(" + to_char(kind) + ")"; }

std::string names_of(const OrthoPoset& q, const std::vector<Element>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + q.name_of(xs[i]);
  return out + ")";
}

std::string set_text(const OrthoPoset& q, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s) {
    out += (first ? "" : ", ") + q.name_of(e);
    first = false;
  }
  return out + "}";
}

}  // namespace

CheckResult check_forward_op(const OrthoPoset& q, const ArrowTable& t) {
  CheckResult r{.name = arrow_name("forward_op", t.kind())};
  const ElementSet one = ElementSet::single(q.top());
  for (Element x = 0; x < q.size(); ++x)
    for (Element y : q.poset().up(x))
      if (t(x, y) != one) {
        r.holds = false;
        r.witness = {x, y};
        r.detail = q.name_of(x) + " <= " + q.name_of(y) + " but " + q.name_of(x) + " ->" + to_char(t.kind()) + " " +
                   q.name_of(y) + " = " + set_text(q, t(x, y));
        return r;
      }
  return r;
}

CheckResult check_backward_op(const OrthoPoset& q, const ArrowTable& t) {
  CheckResult r{.name = arrow_name("backward_op", t.kind())};
  const ElementSet one = ElementSet::single(q.top());
  for (Element x = 0; x < q.size(); ++x)
    for (Element y = 0; y < q.size(); ++y)
      if (t(x, y) == one && !q.leq(x, y)) {
        r.holds = false;
        r.witness = {x, y};
        r.detail = q.name_of(x) + " ->" + to_char(t.kind()) + " " + q.name_of(y) + " = {" + q.name_of(q.top()) +
                   "} but " + q.name_of(x) + " is not below " + q.name_of(y);
        return r;
      }
  return r;
}

CheckResult check_op(const OrthoPoset& q, const ArrowTable& t) {
  CheckResult fwd = check_forward_op(q, t);
  CheckResult bwd = check_backward_op(q, t);
  CheckResult r{.name = arrow_name("op", t.kind()), .holds = fwd.holds && bwd.holds};
  r.facets = {{"forward", fwd.holds}, {"backward", bwd.holds}};
  if (!fwd.holds) {
    r.witness = fwd.witness;
    r.detail = fwd.detail;
  } else if (!bwd.holds) {
    r.witness = bwd.witness;
    r.detail = bwd.detail;
  }
  return r;
}

CheckResult check_mpo(const OrthoPoset& q, const ArrowTable& t) {
  CheckResult r{.name = arrow_name("mpo", t.kind())};
  const Poset& p = q.poset();
  const std::size_t n = q.size();
  for (Element x = 0; x < n; ++x)
    for (Element y : p.up(x)) {
      // (x -> y) <= B iff B lies in the common upper cone of x -> y.
      const ElementSet above = upper_cone(p, t(x, y));
      for (Element u = 0; u < n; ++u)
        for (Element v = 0; v < n; ++v)
          if (!p.leq(u, v) && t(u, v).subset_of(above)) {
            r.holds = false;
            r.witness = {x, y, u, v};
            r.detail = q.name_of(x) + " <= " + q.name_of(y) + " and " + set_text(q, t(x, y)) + " <= " +
                       set_text(q, t(u, v)) + " but " + q.name_of(u) + " is not below " + q.name_of(v);
            return r;
          }
    }
  return r;
}

CheckResult check_forward_op(const OrthoPoset& q, ArrowKind kind) { return check_forward_op(q, arrow_table(q, kind)); }
CheckResult check_backward_op(const OrthoPoset& q, ArrowKind kind) {
  return check_backward_op(q, arrow_table(q, kind));
}
CheckResult check_op(const OrthoPoset& q, ArrowKind kind) { return check_op(q, arrow_table(q, kind)); }
CheckResult check_mpo(const OrthoPoset& q, ArrowKind kind) { return check_mpo(q, arrow_table(q, kind)); }

ElementSet adjoint_target(const OrthoPoset& q, const ArrowTable& t, Element x, Element y) {
  ElementSet s;
  const ElementSet above_x = q.poset().up(x);
  for (Element z = 0; z < q.size(); ++z)
    if (t(y, z).subset_of(above_x)) s.insert(z);
  return s;
}

AdjointResult adjoint_exists(const OrthoPoset& q, const ArrowTable& t) {
  const Poset& p = q.poset();
  AdjointResult result{.check = CheckResult{.name = arrow_name("adjoint", t.kind())}};
  BinaryOperator op(q.size());
  for (Element x = 0; x < q.size(); ++x)
    for (Element y = 0; y < q.size(); ++y) {
      const ElementSet target = adjoint_target(q, t, x, y);
      const ElementSet below = lower_cone(p, target);
      const ElementSet closure = upper_cone(p, below);
      if (closure != target) {
        result.check.holds = false;
        result.check.witness = {x, y};
        result.gap = closure - target;
        result.check.detail = "pair " + names_of(q, {x, y}) + ": S = " + set_text(q, target) + " is not an upper cone, " +
                              "U(L(S)) \\ S = " + set_text(q, result.gap);
        return result;
      }
      op.set(x, y, maximal(p, below));
    }
  result.op = std::move(op);
  return result;
}

AdjointResult adjoint_exists(const OrthoPoset& q, ArrowKind kind) { return adjoint_exists(q, arrow_table(q, kind)); }

CheckResult satisfies_adjunction(const OrthoPoset& q, const ArrowTable& t, const BinaryOperator& op) {
  CheckResult r{.name = arrow_name("adjunction", t.kind())};
  const Poset& p = q.poset();
  for (Element x = 0; x < q.size(); ++x)
    for (Element y = 0; y < q.size(); ++y)
      for (Element z = 0; z < q.size(); ++z) {
        const bool lhs = set_leq1(p, op(x, y), ElementSet::single(z));
        const bool rhs = set_leq2(p, ElementSet::single(x), t(y, z));
        if (lhs != rhs) {
          r.holds = false;
          r.witness = {x, y, z};
          r.detail = "(AP) fails at " + names_of(q, {x, y, z});
          return r;
        }
      }
  return r;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "Consistent";
    case Verdict::Discrepant: return "Discrepant";
    case Verdict::Skipped: return "Skipped";
  }
  return "?";
}

namespace {

std::string tf(bool b) { return b ? "true" : "false"; }

SuiteEntry iff(std::string id, std::string name, bool lhs, bool rhs) {
  return {std::move(id), std::move(name), lhs == rhs ? Verdict::Consistent : Verdict::Discrepant,
          "lhs=" + tf(lhs) + " rhs=" + tf(rhs)};
}

SuiteEntry implies(std::string id, std::string name, bool lhs, bool rhs) {
  return {std::move(id), std::move(name), !lhs || rhs ? Verdict::Consistent : Verdict::Discrepant,
          "lhs=" + tf(lhs) + " rhs=" + tf(rhs)};
}

SuiteEntry skipped(std::string id, std::string name, std::string reason) {
  return {std::move(id), std::move(name), Verdict::Skipped, std::move(reason)};
}

}  // namespace

std::vector<SuiteEntry> theorem_suite(const OrthoPoset& q) {
  const Classification& c = q.classification();
  std::vector<SuiteEntry> out;

  struct PerKind {
    std::optional<ArrowTable> table;
    std::string error;
    bool forward = false, backward = false, op = false, mpo = false;
  };
  std::array<PerKind, 5> per{};

  const bool orth = c.orthogonal.holds;
  if (orth) {
    for (std::size_t i = 0; i < kAllArrows.size(); ++i) {
      try {
        per[i].table.emplace(q, kAllArrows[i]);
      } catch (const Error& e) {
        per[i].error = e.what();
        continue;
      }
      const ArrowTable& t = *per[i].table;
      per[i].forward = check_forward_op(q, t).holds;
      per[i].backward = check_backward_op(q, t).holds;
      per[i].op = per[i].forward && per[i].backward;
      per[i].mpo = check_mpo(q, t).holds;
    }
  }
  auto index = [](ArrowKind k) { return static_cast<std::size_t>(k); };
  const std::string not_orth = "not an orthogonal poset";

  // Each entry is guarded by orthogonality and by the arrow table having been built.
  auto guarded = [&](std::string id, std::string name, std::initializer_list<ArrowKind> kinds,
                     const std::function<SuiteEntry(std::string, std::string)>& make) {
    if (!orth) return out.push_back(skipped(std::move(id), std::move(name), not_orth));
    for (ArrowKind k : kinds)
      if (!per[index(k)].table) return out.push_back(skipped(std::move(id), std::move(name), per[index(k)].error));
    out.push_back(make(std::move(id), std::move(name)));
  };

  for (ArrowKind k : kAllArrows) {
    const auto& pk = per[index(k)];
    guarded(std::string("a.") + to_char(k), arrow_name("forward_op", k) + " <=> orthocomplemented", {k},
            [&](std::string id, std::string name) { return iff(id, name, pk.forward, c.orthocomplemented.holds); });
  }
  for (ArrowKind k : kQuantumArrows) {
    const auto& pk = per[index(k)];
    guarded(std::string("b.") + to_char(k), arrow_name("backward_op", k) + " <=> paraorthomodular", {k},
            [&](std::string id, std::string name) { return iff(id, name, pk.backward, c.paraorthomodular.holds); });
  }
  const auto& pc = per[index(ArrowKind::C)];
  guarded("c.1", "boolean => backward_op(C)", {ArrowKind::C}, [&](std::string id, std::string name) {
    return implies(id, name, c.boolean_orthoposet.holds, pc.backward);
  });
  guarded("c.2", "backward_op(C) => weakly boolean and paraorthomodular", {ArrowKind::C},
          [&](std::string id, std::string name) {
            return implies(id, name, pc.backward, c.weakly_boolean.holds && c.paraorthomodular.holds);
          });
  guarded("d.1", "op(C) <=> boolean algebra", {ArrowKind::C},
          [&](std::string id, std::string name) { return iff(id, name, pc.op, c.boolean_algebra.holds); });
  guarded("d.2", "boolean <=> op(C)", {ArrowKind::C},
          [&](std::string id, std::string name) { return iff(id, name, c.boolean_orthoposet.holds, pc.op); });
  for (ArrowKind k : kQuantumArrows) {
    const auto& pk = per[index(k)];
    guarded(std::string("e.") + to_char(k), arrow_name("op", k) + " <=> orthomodular", {k},
            [&](std::string id, std::string name) { return iff(id, name, pk.op, c.orthomodular.holds); });
  }
  for (ArrowKind k : kAllArrows) {
    const auto& pk = per[index(k)];
    guarded(std::string("f.") + to_char(k), arrow_name("mpo", k) + " <=> " + arrow_name("op", k), {k},
            [&](std::string id, std::string name) { return iff(id, name, pk.mpo, pk.op); });
  }

  if (orth && !c.orthocomplemented.holds) {
    out.push_back(skipped("g.C", "adjoint(C) <=> boolean algebra", "not orthocomplemented"));
  } else {
    guarded("g.C", "adjoint(C) <=> boolean algebra", {ArrowKind::C}, [&](std::string id, std::string name) {
      return iff(id, name, adjoint_exists(q, *pc.table).check.holds, c.boolean_algebra.holds);
    });
  }
  guarded("g.K", "adjoint(K) => orthomodular and x ⊙ x' = {0}", {ArrowKind::K},
          [&](std::string id, std::string name) {
            const AdjointResult adj = adjoint_exists(q, *per[index(ArrowKind::K)].table);
            bool annihilates = true;
            if (adj.op)
              for (Element x = 0; x < q.size(); ++x)
                annihilates = annihilates && (*adj.op)(x, q.prime(x)) == ElementSet::single(q.bottom());
            return implies(id, name, adj.check.holds, c.orthomodular.holds && annihilates);
          });

  auto structural = [&](std::string id, std::string name, auto make) {
    if (!orth) return out.push_back(skipped(std::move(id), std::move(name), not_orth));
    out.push_back(make(std::move(id), std::move(name)));
  };
  structural("h.1", "orthogonal boolean => orthomodular", [&](std::string id, std::string name) {
    return implies(id, name, c.boolean_orthoposet.holds, c.orthomodular.holds);
  });
  structural("h.2", "orthomodular => paraorthomodular", [&](std::string id, std::string name) {
    return implies(id, name, c.orthomodular.holds, c.paraorthomodular.holds);
  });
  structural("h.3", "orthomodular <=> orthocomplemented and paraorthomodular", [&](std::string id, std::string name) {
    return iff(id, name, c.orthomodular.holds, c.orthocomplemented.holds && c.paraorthomodular.holds);
  });
  structural("h.4", "weakly boolean orthomodular => boolean lattice", [&](std::string id, std::string name) {
    return implies(id, name, c.weakly_boolean.holds && c.orthomodular.holds,
                   c.boolean_poset.holds && c.lattice.holds);
  });
  // Hypothesis-free facts, evaluated on every structure.
  out.push_back(iff("h.5", "(P) <=> (P')", c.paraorthomodular.facet("P"), c.paraorthomodular.facet("P'")));
  const auto& d = c.distributive;
  const bool lu_agree = d.facet("LU1") == d.facet("LU2") && d.facet("LU1") == d.facet("LU3") &&
                        d.facet("LU1") == d.facet("LU4");
  out.push_back({"h.6", "LU-identities agree", lu_agree ? Verdict::Consistent : Verdict::Discrepant,
                 "LU1..4 = " + tf(d.facet("LU1")) + "," + tf(d.facet("LU2")) + "," + tf(d.facet("LU3")) + "," +
                     tf(d.facet("LU4"))});
  return out;
}

}  // namespace qposet
