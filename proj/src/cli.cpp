#include "qposet/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qposet/document.hpp"
#include "qposet/enumerate.hpp"
#include "qposet/errors.hpp"
#include "qposet/fixtures.hpp"
#include "qposet/verifier.hpp"

namespace qposet {

namespace {

// Raised for unusable input; turns into exit code 2.
struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OrthoPoset load(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadInput("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return parse(text);
  } catch (const ParseError& e) {
    std::string where = path;
    if (e.line() > 0) where += ":" + std::to_string(e.line());
    throw BadInput(where + ": " + e.what());
  } catch (const Error& e) {
    throw BadInput(path + ": " + e.what());
  }
}

ArrowKind arrow_or_throw(const std::string& text) {
  if (auto k = parse_arrow(text)) return *k;
  throw BadInput("unknown arrow '" + text + "' (expected C, K, N, S or D)");
}

Element element_or_throw(const OrthoPoset& q, const std::string& name) {
  if (auto e = q.poset().find(name)) return *e;
  throw BadInput("no element named '" + name + "' in " + q.name());
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

std::string witness_text(const OrthoPoset& q, const std::vector<Element>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + q.name_of(w[i]);
  return out + ")";
}

void print_report(std::ostream& out, const OrthoPoset& q, const Report& r) {
  out << r.name << ": " << (r.holds ? "yes" : "no");
  if (!r.holds && !r.witness.empty()) out << " witness " << witness_text(q, r.witness);
  if (!r.holds && !r.detail.empty()) out << " - " << r.detail;
  out << "\n";
  for (const auto& [facet, ok] : r.facets) out << "  " << facet << ": " << (ok ? "yes" : "no") << "\n";
}

nlohmann::ordered_json names_json(const OrthoPoset& q, ElementSet s) {
  auto arr = nlohmann::ordered_json::array();
  for (Element e : s) arr.push_back(q.name_of(e));
  return arr;
}

int cmd_check(std::ostream& out, const std::string& file, const std::vector<std::string>& asserted) {
  const OrthoPoset q = load(file);
  const auto& names = class_names();
  for (const auto& a : asserted)
    if (std::find(names.begin(), names.end(), a) == names.end()) throw BadInput("unknown class '" + a + "'");
  const Classification& c = q.classification();
  out << q.name() << " (" << q.size() << " elements)\n";
  for (const Report* r : c.all()) print_report(out, q, *r);
  int code = kExitOk;
  for (const auto& a : asserted)
    if (!c.find(a)->holds) {
      out << "assertion failed: " << a << "\n";
      code = kExitCheckFailed;
    }
  return code;
}

int cmd_imp(std::ostream& out, const std::string& file, const std::string& arrow,
            const std::vector<std::string>& pair, bool json) {
  const OrthoPoset q = load(file);
  const ArrowKind kind = arrow_or_throw(arrow);
  std::vector<std::pair<Element, Element>> pairs;
  if (!pair.empty()) {
    pairs.emplace_back(element_or_throw(q, pair[0]), element_or_throw(q, pair[1]));
  } else {
    for (Element x = 0; x < q.size(); ++x)
      for (Element y = 0; y < q.size(); ++y) pairs.emplace_back(x, y);
  }
  std::vector<ElementSet> values;
  for (const auto& [x, y] : pairs) values.push_back(imp(q, kind, x, y).values);

  if (json) {
    nlohmann::ordered_json j;
    j["structure"] = q.name();
    j["arrow"] = std::string(1, to_char(kind));
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      arr.push_back({{"x", q.name_of(pairs[i].first)},
                     {"y", q.name_of(pairs[i].second)},
                     {"values", names_json(q, values[i])}});
    j["values"] = arr;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out << q.name_of(pairs[i].first) << " ->" << to_char(kind) << " " << q.name_of(pairs[i].second) << " = "
        << set_text(q, values[i]) << "\n";
  return kExitOk;
}

int cmd_verify(std::ostream& out, const std::string& file) {
  const OrthoPoset q = load(file);
  bool discrepant = false;
  for (const SuiteEntry& e : theorem_suite(q)) {
    out << e.id << " " << to_string(e.verdict) << "  " << e.name;
    if (!e.detail.empty()) out << " [" << e.detail << "]";
    out << "\n";
    discrepant = discrepant || e.verdict == Verdict::Discrepant;
  }
  return discrepant ? kExitCheckFailed : kExitOk;
}

int cmd_op(std::ostream& out, const std::string& file, const std::string& arrow, bool mpo) {
  const OrthoPoset q = load(file);
  const ArrowKind kind = arrow_or_throw(arrow);
  const ArrowTable table(q, kind);
  const Report r = mpo ? check_mpo(q, table) : check_op(q, table);
  print_report(out, q, r);
  if (!mpo && !r.holds) {
    out << "failing pairs:";
    for (Element x = 0; x < q.size(); ++x)
      for (Element y = 0; y < q.size(); ++y)
        if (q.leq(x, y) != (table(x, y) == ElementSet::single(q.top())))
          out << " " << witness_text(q, {x, y});
    out << "\n";
  }
  return r.holds ? kExitOk : kExitCheckFailed;
}

int cmd_adjoint(std::ostream& out, const std::string& file, const std::string& arrow) {
  const OrthoPoset q = load(file);
  const ArrowKind kind = arrow_or_throw(arrow);
  const ArrowTable table(q, kind);
  const AdjointResult res = adjoint_exists(q, table);
  out << "adjoint for ->" << to_char(kind) << ": " << (res.op ? "exists" : "does not exist") << "\n";
  if (res.op) {
    for (Element x = 0; x < q.size(); ++x)
      for (Element y = 0; y < q.size(); ++y)
        out << "  " << q.name_of(x) << " * " << q.name_of(y) << " = " << set_text(q, (*res.op)(x, y)) << "\n";
    return kExitOk;
  }
  if (!res.check.witness.empty()) out << "witness " << witness_text(q, res.check.witness) << "\n";
  out << "gap " << set_text(q, res.gap) << "\n";
  if (!res.check.detail.empty()) out << res.check.detail << "\n";
  return kExitCheckFailed;
}

int cmd_enumerate(std::ostream& out, std::size_t max_size, const std::string& cls, const std::string& dir) {
  if (max_size < 2) throw BadInput("--max-size must be at least 2");
  StructureFilter filter;
  if (!cls.empty()) {
    try {
      filter = class_filter(cls);
    } catch (const Error& e) {
      throw BadInput(e.what());
    }
  }
  const auto structures = enumerate_structures(max_size, filter);
  if (dir.empty()) {
    for (const auto& q : structures) out << serialize_document_line(to_document(q)) << "\n";
    return kExitOk;
  }
  std::filesystem::create_directories(dir);
  for (const auto& q : structures) {
    const auto path = std::filesystem::path(dir) / (q.name() + ".json");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw BadInput("cannot write " + path.string());
    f << serialize(q);
  }
  out << "wrote " << structures.size() << " structures to " << dir << "\n";
  return kExitOk;
}

int cmd_sweep(std::ostream& out, std::size_t max_size, unsigned jobs, bool json) {
  if (max_size < 2) throw BadInput("--max-size must be at least 2");
  const SweepReport r = sweep(max_size, std::max(1u, jobs));
  out << (json ? to_json(r) : to_text(r));
  return r.clean() ? kExitOk : kExitCheckFailed;
}

int cmd_fixture(std::ostream& out, const std::string& name, bool list) {
  if (list || name.empty()) {
    for (const auto& spec : fixture_specs()) out << spec.name << "  " << spec.description << "\n";
    return kExitOk;
  }
  try {
    out << serialize(fixture(name));
  } catch (const Error& e) {
    throw BadInput(e.what());
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite bounded posets with antitone involution: classification, implications, theorem checks"};
  app.name("qposet");
  app.require_subcommand(1);

  std::string file, arrow, cls, dir, fixture_name;
  std::vector<std::string> asserted, pair;
  bool json = false, list = false;
  std::size_t max_size = 0;
  unsigned jobs = 1;

  auto* check = app.add_subcommand("check", "Print the classification of a structure");
  check->add_option("file", file, "Poset document ('-' for stdin)")->required();
  check->add_option("--assert", asserted, "Fail unless these classes hold");

  auto* imp_cmd = app.add_subcommand("imp", "Evaluate an implication");
  imp_cmd->add_option("file", file)->required();
  imp_cmd->add_option("--arrow", arrow, "C, K, N, S or D")->required();
  imp_cmd->add_option("--pair", pair, "Two element names")->expected(2);
  imp_cmd->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "Run the theorem suite");
  verify->add_option("file", file)->required();

  auto* op = app.add_subcommand("op", "Check the order property");
  op->add_option("file", file)->required();
  op->add_option("--arrow", arrow)->required();

  auto* mpo = app.add_subcommand("mpo", "Check modus ponens");
  mpo->add_option("file", file)->required();
  mpo->add_option("--arrow", arrow)->required();

  auto* adjoint = app.add_subcommand("adjoint", "Decide and synthesize an adjoint operator");
  adjoint->add_option("file", file)->required();
  adjoint->add_option("--arrow", arrow)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Stream canonical structures, one document per line");
  enumerate->add_option("--max-size", max_size)->required();
  enumerate->add_option("--class", cls, "Keep only structures in this class");
  enumerate->add_option("--out", dir, "Write one file per structure into this directory");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run the theorem suite over every structure up to a size");
  sweep_cmd->add_option("--max-size", max_size)->required();
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--json", json);

  auto* dot = app.add_subcommand("export-dot", "Print the Hasse diagram in DOT");
  dot->add_option("file", file)->required();

  auto* fix = app.add_subcommand("fixture", "Print a bundled fixture document");
  fix->add_option("name", fixture_name);
  fix->add_flag("--list", list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << "run 'qposet --help' for usage\n";
    return kExitBadInput;
  }

  try {
    if (*check) return cmd_check(out, file, asserted);
    if (*imp_cmd) return cmd_imp(out, file, arrow, pair, json);
    if (*verify) return cmd_verify(out, file);
    if (*op) return cmd_op(out, file, arrow, false);
    if (*mpo) return cmd_op(out, file, arrow, true);
    if (*adjoint) return cmd_adjoint(out, file, arrow);
    if (*enumerate) return cmd_enumerate(out, max_size, cls, dir);
    if (*sweep_cmd) return cmd_sweep(out, max_size, jobs, json);
    if (*dot) {
      out << export_dot(load(file));
      return kExitOk;
    }
    if (*fix) return cmd_fixture(out, fixture_name, list);
  } catch (const BadInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    // Well-formed input that violates a precondition, e.g. MissingJoin from an
    // arrow evaluated on a non-orthogonal structure.
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitBadInput;
}

}  // namespace qposet
