// skyring: command-line front end for Chow rings of blow-up skies of P3.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "skyring/chow_ring.hpp"
#include "skyring/error.hpp"
#include "skyring/expr.hpp"
#include "skyring/finality.hpp"
#include "skyring/isomorphism.hpp"
#include "skyring/oracle.hpp"
#include "skyring/presentation.hpp"
#include "skyring/sequence.hpp"
#include "skyring/sequence_io.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace skyring;

struct Loaded {
  BlowUpSequence seq;
  std::vector<CenterIR> irs;
  ChowRing ring;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.seq = load_sequence(path);
  l.irs = lower(l.seq);
  l.ring = build_ring(l.irs);
  return l;
}

json class_json(const ChowRing& r, const ClassVector& x) {
  json grades = json::array();
  for (const auto& g : x.grades) grades.push_back(g);
  return {{"grades", grades}, {"text", format_class(r, x)}};
}

json matrix_json(const IntMatrix& m) { return m.to_rows(); }

// Image of each source generator, written in the target's basis labels.
std::string describe_hom(const ChowRing& r, const ChowRing& t, const GradedHom& phi) {
  std::ostringstream os;
  const int s = r.num_centers();
  for (int k = 0; k <= s; ++k) {
    ClassVector img = ClassVector::zero(s);
    img.grades[1] = phi.m1.column(k);
    os << "    " << r.label(1, k) << " -> " << format_class(t, img) << '\n';
  }
  for (int k = 0; k <= s; ++k) {
    ClassVector img = ClassVector::zero(s);
    img.grades[2] = phi.m2.column(k);
    os << "    " << r.label(2, k) << " -> " << format_class(t, img) << '\n';
  }
  os << "    h^3 -> " << (phi.m3 == 1 ? "" : std::to_string(phi.m3) + "*") << "h^3\n";
  return os.str();
}

json hom_json(const GradedHom& phi) {
  return {{"M1", matrix_json(phi.m1)}, {"M2", matrix_json(phi.m2)}, {"m3", phi.m3}};
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::file_not_found, "cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow rings of skies of point and rational-curve blow-ups of P3"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string out_path;
  app.add_flag("--json", as_json, "Emit JSON reports");
  app.add_option("--out", out_path, "Write the report to FILE instead of stdout");

  std::string file, file2, expr_src, format = "text";
  int index = 0;
  Int bound = 3;
  std::size_t limit = 0;
  unsigned threads = 1;
  bool with_oracle = false, diagnose = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a sequence file");
  validate_cmd->add_option("file", file, "Sequence file")->required();

  auto* present_cmd = app.add_subcommand("present", "Emit generators and relations");
  present_cmd->add_option("file", file, "Sequence file")->required();
  present_cmd->add_option("--format", format, "text, latex or json");
  present_cmd->add_flag("--oracle", with_oracle, "Cross-check kernels and associativity by brute force");

  auto* multiply_cmd = app.add_subcommand("multiply", "Normal form of an expression");
  multiply_cmd->add_option("file", file, "Sequence file")->required();
  multiply_cmd->add_option("--expr", expr_src, "Expression in h, e<k>, w<k>, strict(e<k>)")->required();

  auto* degree_cmd = app.add_subcommand("degree", "Degree of a zero-cycle expression");
  degree_cmd->add_option("file", file, "Sequence file")->required();
  degree_cmd->add_option("--expr", expr_src, "Expression of codimension 3")->required();

  auto* betti_cmd = app.add_subcommand("betti", "Ranks of the graded pieces");
  betti_cmd->add_option("file", file, "Sequence file")->required();

  auto* table_cmd = app.add_subcommand("table", "Full structure-constant table");
  table_cmd->add_option("file", file, "Sequence file")->required();
  table_cmd->add_flag("--oracle", with_oracle, "Also run the exhaustive associativity check");

  auto* strict_cmd = app.add_subcommand("strict", "Strict transform class of a component");
  strict_cmd->add_option("file", file, "Sequence file")->required();
  strict_cmd->add_option("--index", index, "Component index k")->required();

  auto* iso_cmd = app.add_subcommand("iso", "Search graded ring isomorphisms");
  iso_cmd->add_option("file1", file, "Source sequence file")->required();
  iso_cmd->add_option("file2", file2, "Target sequence file")->required();
  iso_cmd->add_option("--bound", bound, "Entry bound B for M1")->check(CLI::PositiveNumber);
  iso_cmd->add_option("--limit", limit, "Stop after this many solutions (0 = all)");
  iso_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  iso_cmd->add_flag("--oracle", with_oracle, "Compare against the brute-force oracle");
  iso_cmd->add_flag("--diagnose", diagnose, "Report verifiable maps the h-anchor excludes");

  auto* finality_cmd = app.add_subcommand("finality", "Final-component admissibility");
  finality_cmd->add_option("file", file, "Sequence file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    Output out(out_path);
    std::ostream& os = out.stream();
    int status = 0;

    if (*validate_cmd) {
      const BlowUpSequence seq = load_sequence(file);
      const ValidationReport report = validate(seq);
      if (as_json) {
        json v = json::array();
        for (const auto& x : report.violations)
          v.push_back({{"kind", std::string(to_string(x.kind))}, {"center", x.center},
                       {"message", x.message}});
        os << json{{"valid", report.ok()}, {"violations", v}}.dump(2) << '\n';
      } else {
        os << (report.ok() ? "valid\n" : report.to_string());
      }
      status = report.ok() ? 0 : 1;
    } else if (*present_cmd) {
      const Loaded l = load(file);
      const PresentationFormat fmt = as_json ? PresentationFormat::json : parse_format(format);
      const Presentation p = build_presentation(l.ring, l.irs);
      os << emit_presentation(p, fmt);
      if (with_oracle) {
        bool ok = exhaustive_associativity(l.ring).ok();
        for (const auto& ir : l.irs) {
          if (ir.kind != CenterKind::curve || ir.mu.size() > 4) continue;
          const IntMatrix fast = integer_kernel(IntMatrix::from_rows({ir.mu}));
          ok = ok && same_lattice(fast, kernel_bruteforce(ir.mu, 10));
        }
        for (const auto& rel : p.relations)
          ok = ok && evaluate_polynomial(l.ring, p.generators, rel.poly).is_zero();
        std::cerr << "oracle: " << (ok ? "agrees" : "DISAGREES") << '\n';
        status = ok ? 0 : 1;
      }
    } else if (*multiply_cmd || *degree_cmd) {
      const Loaded l = load(file);
      const ProximityMatrix prox = proximity_matrix(l.seq);
      const ClassVector x = evaluate(l.ring, parse_expr(expr_src), &prox);
      if (*multiply_cmd) {
        if (as_json) os << class_json(l.ring, x).dump(2) << '\n';
        else os << format_class(l.ring, x) << '\n';
      } else {
        const Int d = degree(l.ring, x);
        if (as_json) os << json{{"degree", d}}.dump(2) << '\n';
        else os << d << '\n';
      }
    } else if (*betti_cmd) {
      const Loaded l = load(file);
      const auto b = betti(l.ring);
      if (as_json) os << json{{"betti", b}}.dump(2) << '\n';
      else os << b[0] << ' ' << b[1] << ' ' << b[2] << ' ' << b[3] << '\n';
    } else if (*table_cmd) {
      const Loaded l = load(file);
      const ChowRing& r = l.ring;
      const int n = r.rank(1);
      json products = json::array();
      std::ostringstream text;
      auto record = [&](int gy, int i, int j) {
        const ClassVector p = r.multiply(r.basis(1, i), r.basis(gy, j));
        const std::string x = r.label(1, i), y = r.label(gy, j);
        text << x << " * " << y << " = " << format_class(r, p) << '\n';
        products.push_back({{"x", x}, {"y", y}, {"product", class_json(r, p)}});
      };
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) record(1, i, j);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) record(2, i, k);
      json doc{{"products", products}};
      if (with_oracle) {
        const auto rep = exhaustive_associativity(r);
        doc["associativity"] = {{"triples", rep.triples}, {"failures", rep.failures.size()}};
        text << "associativity: " << rep.triples << " triples, " << rep.failures.size()
             << " failures\n";
        for (const auto& f : rep.failures) text << "  " << f.description << '\n';
        status = rep.ok() ? 0 : 1;
      }
      os << (as_json ? doc.dump(2) + "\n" : text.str());
    } else if (*strict_cmd) {
      const Loaded l = load(file);
      const ClassVector x = strict_transform_class(l.ring, proximity_matrix(l.seq), index);
      if (as_json) os << class_json(l.ring, x).dump(2) << '\n';
      else os << format_class(l.ring, x) << '\n';
    } else if (*iso_cmd) {
      const Loaded a = load(file);
      const Loaded b = load(file2);
      SearchConfig cfg;
      cfg.bound = bound;
      cfg.limit = limit;
      cfg.threads = threads;
      cfg.diagnose = diagnose;
      const SearchResult res = search_isomorphisms(a.ring, b.ring, cfg);
      std::optional<std::vector<GradedHom>> oracle;
      if (with_oracle) oracle = iso_bruteforce(a.ring, b.ring, bound);
      const bool agree = !oracle || *oracle == res.solutions;
      if (as_json) {
        json sols = json::array();
        for (const auto& phi : res.solutions) sols.push_back(hom_json(phi));
        json doc{{"solutions", sols}, {"bound", res.bound}, {"exhausted", res.exhausted}};
        if (diagnose) {
          json extra = json::array();
          for (const auto& phi : res.unanchored) extra.push_back(hom_json(phi));
          doc["unanchored"] = extra;
        }
        if (oracle) doc["oracle"] = {{"solutions", oracle->size()}, {"agrees", agree}};
        os << doc.dump(2) << '\n';
      } else {
        if (res.solutions.empty())
          os << "no isomorphism with |entries| <= " << res.bound << '\n';
        for (std::size_t k = 0; k < res.solutions.size(); ++k)
          os << "solution " << k + 1 << ":\n" << describe_hom(a.ring, b.ring, res.solutions[k]);
        if (!res.exhausted) os << "(stopped at the solution limit)\n";
        if (diagnose) {
          os << res.unanchored.size() << " verifiable map(s) with h-image other than h'\n";
          for (const auto& phi : res.unanchored) os << describe_hom(a.ring, b.ring, phi);
        }
        if (oracle)
          os << "oracle: " << oracle->size() << " solution(s), "
             << (agree ? "agrees" : "DISAGREES") << '\n';
      }
      status = agree ? 0 : 1;
    } else if (*finality_cmd) {
      const BlowUpSequence seq = load_sequence(file);
      const ValidationReport vr = validate(seq);
      if (!vr.ok()) throw Error(ErrorCode::validation_failed, vr.to_string());
      const FinalityReport rep = finality_report(seq);
      if (as_json) {
        json pairs = json::array();
        for (const auto& v : rep.pairs)
          pairs.push_back({{"i", v.i},
                           {"j", v.j},
                           {"forward", std::string(to_string(v.forward))},
                           {"backward", std::string(to_string(v.backward))},
                           {"verdict", v.admissible ? "admissible" : "forbidden"},
                           {"configuration",
                            v.configuration ? json(static_cast<int>(*v.configuration)) : json()}});
        os << json{{"final_admissible", rep.final_admissible}, {"pairs", pairs}}.dump(2) << '\n';
      } else {
        os << rep.to_string();
      }
    }
    return status;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  }
}
