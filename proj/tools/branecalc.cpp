#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "branecalc/brane.hpp"
#include "branecalc/parser.hpp"
#include "branecalc/report.hpp"

namespace bc = branecalc;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw bc::input_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int resolve_max_degree(int flag_value, const bc::SullivanModel& m) {
  if (flag_value >= 0) return flag_value;
  if (const char* env = std::getenv("BRANECALC_MAX_DEGREE")) {
    try {
      std::size_t used = 0;
      int v = std::stoi(env, &used);
      if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw bc::input_error("BRANECALC_MAX_DEGREE must be a non-negative integer");
    }
  }
  return bc::default_truncation(m);
}

struct ModelSummary {
  bc::ParsedModel parsed;
  bc::PurityResult purity;
};

ModelSummary load_model(const std::string& path) {
  ModelSummary s{bc::parse_model(read_input(path)), {}};
  s.purity = bc::check_pure(s.parsed.model);
  return s;
}

int cmd_check(const std::string& path, const std::string& format) {
  ModelSummary s = load_model(path);
  const bc::SullivanModel& m = s.parsed.model;
  int n_max = bc::default_truncation(m);
  if (format == "json") {
    bc::Json doc = bc::result_document("check", n_max);
    doc["model"] = s.parsed.name;
    bc::Json gens = bc::Json::array();
    for (const bc::Generator& g : m.algebra->gens()) {
      bc::Json gj;
      gj["name"] = g.name;
      gj["degree"] = g.degree;
      gj["d"] = bc::element_to_json(m.d.image(m.algebra->index_of(g.name)));
      gens.push_back(std::move(gj));
    }
    doc["generators"] = std::move(gens);
    doc["d_squared_zero"] = true;
    doc["pure"] = s.purity.pure;
    std::cout << bc::dump_json(doc);
  } else {
    std::cout << "model " << s.parsed.name << ": " << m.algebra->size()
              << " generator(s), d^2 = 0\n";
    for (const bc::Generator& g : m.algebra->gens())
      std::cout << "  " << g.name << " (degree " << g.degree << "), d = "
                << m.d.image(m.algebra->index_of(g.name)).str() << "\n";
    std::cout << "pure: " << (s.purity.pure ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_cohomology(const std::string& path, int max_degree,
                   const std::string& format) {
  ModelSummary s = load_model(path);
  int n_max = resolve_max_degree(max_degree, s.parsed.model);
  std::vector<int> dims = bc::cohomology_dims(s.parsed.model, n_max);
  if (format == "json") {
    bc::Json doc = bc::result_document("cohomology", n_max);
    doc["model"] = s.parsed.name;
    doc["dims"] = dims;
    std::cout << bc::dump_json(doc);
  } else {
    std::cout << "model " << s.parsed.name << ", H^0..H^" << n_max << ":\n";
    for (int n = 0; n <= n_max; ++n)
      std::cout << "  H^" << n << " = Q^" << dims[n] << "\n";
  }
  return 0;
}

void print_operation(const bc::BraneOperation& op, int n_max, bc::Json* json_out,
                     std::ostream* text_out) {
  bc::Json degrees = bc::Json::array();
  for (int n = 0; n <= n_max; ++n) {
    std::vector<bc::Monomial> basis = monomials_of_degree(*op.source.algebra, n);
    bc::Json slice;
    slice["degree"] = n;
    bc::Json images = bc::Json::array();
    for (const bc::Monomial& b : basis) {
      bc::Element img = op.apply(bc::Element::term(op.source.algebra, b, 1));
      if (text_out && !img.is_zero())
        *text_out << "  " << op.source.algebra->mono_str(b) << " -> " << img.str()
                  << "\n";
      bc::Json entry;
      entry["basis"] = op.source.algebra->mono_str(b);
      entry["image"] = bc::element_to_json(img);
      images.push_back(std::move(entry));
    }
    slice["images"] = std::move(images);
    degrees.push_back(std::move(slice));
  }
  if (json_out) (*json_out)["slices"] = std::move(degrees);
}

int cmd_brane(const std::string& path, int k, const std::string& opname,
              int max_degree, const std::string& format) {
  ModelSummary s = load_model(path);
  const bc::SullivanModel& m = s.parsed.model;
  int n_max = resolve_max_degree(max_degree, m);
  bc::BraneEngine eng = bc::build_brane_engine(m, k, n_max);

  bc::Json doc = bc::result_document("brane", n_max);
  doc["model"] = s.parsed.name;
  doc["k"] = k;
  doc["op"] = opname;
  std::ostringstream text;

  if (opname == "coproduct") {
    bc::BraneOperation op = bc::brane_coproduct_dual(eng);
    doc["degree_shift"] = op.degree_shift;
    text << "coproduct dual, degree shift " << op.degree_shift << "\n";
    print_operation(op, n_max, &doc, &text);
  } else if (opname == "product") {
    bc::BraneOperation op = bc::brane_product_dual(eng);
    doc["degree_shift"] = op.degree_shift;
    text << "product dual, degree shift " << op.degree_shift << "\n";
    print_operation(op, n_max, &doc, &text);
  } else {
    bc::CompositeResult comp = bc::compose_operations(
        bc::brane_coproduct_dual(eng), bc::brane_product_dual(eng), n_max);
    doc["degree_shift"] = comp.op.degree_shift;
    text << "composite dual, degree shift " << comp.op.degree_shift << "\n";
    print_operation(comp.op, n_max, &doc, &text);
    doc["verdict"] = comp.report.nontrivial ? "NONTRIVIAL" : "TRIVIAL";
    bc::Json wits = bc::Json::array();
    for (const auto& [mono, img] : comp.report.witnesses) {
      bc::Json w;
      w["basis"] = comp.op.source.algebra->mono_str(mono);
      w["image"] = bc::element_to_json(img);
      wits.push_back(std::move(w));
    }
    doc["witnesses"] = std::move(wits);
    text << "verdict: " << (comp.report.nontrivial ? "NONTRIVIAL" : "TRIVIAL")
         << "\n";
    for (const auto& [mono, img] : comp.report.witnesses)
      text << "  witness: " << comp.op.source.algebra->mono_str(mono) << " -> "
           << img.str() << "\n";
  }
  if (format == "json")
    std::cout << bc::dump_json(doc);
  else
    std::cout << text.str();
  return 0;
}

int cmd_verify(const std::string& path, int k, int max_degree,
               const std::string& format) {
  ModelSummary s = load_model(path);
  int n_max = resolve_max_degree(max_degree, s.parsed.model);
  bc::VerifyReport rep = bc::run_verify_suite(s.parsed.model, k, n_max);
  if (format == "json") {
    bc::Json doc = bc::result_document("verify", n_max);
    doc["model"] = s.parsed.name;
    doc["k"] = k;
    bc::Json checks = bc::Json::array();
    for (const auto& c : rep.checks) {
      bc::Json cj;
      cj["name"] = c.name;
      cj["ok"] = c.ok;
      if (!c.ok) cj["detail"] = c.detail;
      checks.push_back(std::move(cj));
    }
    doc["checks"] = std::move(checks);
    doc["all_ok"] = rep.all_ok;
    std::cout << bc::dump_json(doc);
  } else {
    for (const auto& c : rep.checks)
      std::cout << (c.ok ? "ok   " : "FAIL ") << c.name
                << (c.ok ? "" : ": " + c.detail) << "\n";
  }
  if (!rep.all_ok) {
    std::cerr << "verification failed at: " << rep.first_failure << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Sullivan-model calculator for sphere-brane operations"};
  app.require_subcommand(1);

  std::string file, format = "text", opname = "composite";
  int k = 2, max_degree = -1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "model description file, or '-' for stdin")
        ->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  CLI::App* check = app.add_subcommand("check", "parse and validate a model file");
  add_common(check);
  CLI::App* coh = app.add_subcommand("cohomology", "cohomology dimension table");
  add_common(coh);
  coh->add_option("--max-degree", max_degree, "truncation degree");
  CLI::App* brane = app.add_subcommand("brane", "brane operation pipelines");
  add_common(brane);
  brane->add_option("--k", k, "sphere dimension (even, >= 2)");
  brane->add_option("--op", opname, "operation")
      ->check(CLI::IsMember({"product", "coproduct", "composite"}));
  brane->add_option("--max-degree", max_degree, "truncation degree");
  CLI::App* verify = app.add_subcommand("verify", "run the invariant battery");
  add_common(verify);
  verify->add_option("--k", k, "sphere dimension (even, >= 2)");
  verify->add_option("--max-degree", max_degree, "truncation degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(file, format);
    if (coh->parsed()) return cmd_cohomology(file, max_degree, format);
    if (brane->parsed()) return cmd_brane(file, k, opname, max_degree, format);
    return cmd_verify(file, k, max_degree, format);
  } catch (const bc::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const bc::verify_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
