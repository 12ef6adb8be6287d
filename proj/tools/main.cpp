// Command line interface to the derivative calculus.
//
// Exit codes: 0 on success (including "unknown" verdicts), 1 when a
// verification sweep finds a violated identity, 2 on malformed input,
// 3 when the input is outside the domain of the requested operation.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mirabolic/mirabolic.hpp"

namespace {

using nlohmann::json;
using namespace mirabolic;

struct Output {
  bool as_json = false;

  void emit(const std::string& verb, const json& input, const json& result,
            const std::string& provenance, const std::string& text) const {
    if (as_json) {
      json object;
      object["verb"] = verb;
      object["input"] = input;
      object["result"] = result;
      object["provenance"] = provenance;
      std::cout << object.dump(2) << "\n";
    } else {
      std::cout << text << "\n";
    }
  }
};

Field parse_field(const std::string& name) {
  if (name == "R") return Field::Real;
  if (name == "C") return Field::Complex;
  throw domain_error("field must be R or C");
}

json partition_json(const Partition& p) {
  json out;
  out["exponential"] = to_exponential_string(p);
  out["parts"] = p.parts();
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file '" + path + "'", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_on_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      out.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

json report_json(const SuiteReport& report) {
  json out;
  out["checks"] = report.checks;
  out["failed"] = report.failed;
  out["failures"] = report.failures;
  return out;
}

std::string report_text(const SuiteReport& report) {
  std::string text = "checks: " + std::to_string(report.checks) +
                     "\nfailed: " + std::to_string(report.failed);
  for (const auto& f : report.failures) text += "\n  " + f;
  text += report.passed() ? "\nall identities held" : "\nVERIFICATION FAILED";
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact derivative calculus for representations of GL(n)"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string field_name = "R";
  app.add_flag("--json", as_json, "emit a structured JSON object");
  app.add_option("--field", field_name, "base field, R or C")
      ->check(CLI::IsMember({"R", "C"}));

  std::string expr_text, lambda_text, matrix_path, multiset_text;
  int order = 0;
  int opt_n = 0, opt_d = 0;
  int max_n = 8, samples = 100, trials = 100, max_dim = 8;
  unsigned long seed = 1;

  CLI::App* ap_cmd = app.add_subcommand("ap", "associated partition of an expression");
  ap_cmd->add_option("expr", expr_text)->required();

  CLI::App* depth_cmd = app.add_subcommand("depth", "depth of an expression");
  depth_cmd->add_option("expr", expr_text)->required();

  CLI::App* adduce_cmd = app.add_subcommand("adduce", "adduced representation");
  adduce_cmd->add_option("expr", expr_text)->required();

  CLI::App* derive_cmd =
      app.add_subcommand("derive", "derivative of a monomial of characters");
  derive_cmd->add_option("expr", expr_text)->required();
  derive_cmd->add_option("--order", order, "derivative order")->required();

  CLI::App* whittaker_cmd =
      app.add_subcommand("whittaker", "Whittaker dimension along a composition");
  whittaker_cmd->add_option("expr", expr_text)->required();
  whittaker_cmd->add_option("--lambda", lambda_text, "composition of n")->required();

  CLI::App* igeq_cmd = app.add_subcommand("igeq", "attached character monomial");
  igeq_cmd->add_option("expr", expr_text)->required();

  CLI::App* jordan_cmd = app.add_subcommand("jordan", "Jordan type of a nilpotent matrix");
  jordan_cmd->add_option("--matrix", matrix_path, "path to a matrix text file")->required();

  CLI::App* psi_cmd = app.add_subcommand("psi-lambda", "Whittaker functional dual matrix");
  psi_cmd->add_option("--lambda", lambda_text, "composition")->required();

  CLI::App* bigrade_cmd = app.add_subcommand("bigrade", "bigraded decomposition of gl(n)");
  bigrade_cmd->add_option("--n", opt_n, "matrix size")->required();
  bigrade_cmd->add_option("--d", opt_d, "depth parameter")->required();

  CLI::App* vlin_cmd =
      app.add_subcommand("verify-linalg", "sweep the superdiagonal perturbation lemma");
  vlin_cmd->add_option("--max-n", max_n, "largest matrix size (default 8)");
  vlin_cmd->add_option("--samples", samples, "random perturbations per size pair");
  vlin_cmd->add_option("--seed", seed, "random seed");

  CLI::App* vfilt_cmd =
      app.add_subcommand("verify-filtrations", "sweep the filtration comparison lemmas");
  vfilt_cmd->add_option("--trials", trials, "number of random chains");
  vfilt_cmd->add_option("--max-dim", max_dim, "largest ambient dimension");
  vfilt_cmd->add_option("--seed", seed, "random seed");

  CLI::App* infchar_cmd =
      app.add_subcommand("infchar", "derivative step on an infinitesimal character multiset");
  infchar_cmd->add_option("multiset", multiset_text, "comma separated exact complex numbers")
      ->required();
  infchar_cmd->add_option("--order", order, "number of elements removed")->required();

  // Let the global --json / --field flags appear after the verb as well.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Output out{as_json};
  try {
    const Field field = parse_field(field_name);

    if (*ap_cmd) {
      RepExpr e = parse_rep_expr(expr_text, field);
      Partition p = associated_partition(e);
      out.emit("ap", {{"expr", expr_text}, {"field", field_name}}, partition_json(p),
               "orbit-catalogue+induced-sum", to_exponential_string(p));
    } else if (*depth_cmd) {
      RepExpr e = parse_rep_expr(expr_text, field);
      int d = depth(e);
      out.emit("depth", {{"expr", expr_text}, {"field", field_name}}, d,
               "largest-part-of-associated-partition", std::to_string(d));
    } else if (*adduce_cmd) {
      RepExpr e = parse_rep_expr(expr_text, field);
      std::string printed = print_rep_expr(adduce(e));
      out.emit("adduce", {{"expr", expr_text}, {"field", field_name}}, printed,
               "factorwise-adduction", printed);
    } else if (*derive_cmd) {
      RepExpr e = parse_rep_expr(expr_text, field);
      RepExpr result = derivative_monomial(e, order);
      std::string printed = print_rep_expr(result);
      out.emit("derive",
               {{"expr", expr_text}, {"order", order}, {"field", field_name}}, printed,
               result.is_zero() ? "vanishing-above-depth" : "full-character-monomial-shrink",
               printed);
    } else if (*whittaker_cmd) {
      RepExpr e = parse_rep_expr(expr_text, field);
      Composition lambda = parse_composition_text(lambda_text);
      WhittakerDim result = whittaker_dim(e, lambda);
      json result_json;
      result_json["verdict"] = to_string(result.verdict);
      result_json["reason"] = result.reason;
      std::string text = to_string(result.verdict);
      if (!result.reason.empty()) text += ": " + result.reason;
      out.emit("whittaker",
               {{"expr", expr_text}, {"lambda", lambda_text}, {"field", field_name}},
               result_json, "iterated-highest-derivative", text);
    } else if (*igeq_cmd) {
      RepExpr e = parse_rep_expr(expr_text, field);
      std::string printed = print_rep_expr(igeq(e));
      out.emit("igeq", {{"expr", expr_text}, {"field", field_name}}, printed,
               "nonascending-character-attachment", printed);
    } else if (*jordan_cmd) {
      ExactMatrix m = parse_matrix_text(read_file(matrix_path));
      Partition p = jordan_partition(m);
      out.emit("jordan", {{"matrix", matrix_path}}, partition_json(p), "rank-sequence",
               to_exponential_string(p));
    } else if (*psi_cmd) {
      Composition lambda = parse_composition_text(lambda_text);
      LinearFunctional psi = psi_lambda(lambda);
      std::string text = matrix_to_text(psi.dual);
      json result_json;
      result_json["n"] = psi.n;
      result_json["dual"] = text;
      if (!text.empty() && text.back() == '\n') text.pop_back();
      out.emit("psi-lambda", {{"lambda", lambda_text}}, result_json,
               "reversed-jordan-trace-pairing", text);
    } else if (*bigrade_cmd) {
      BigradedBasis basis(opt_n, opt_d);
      XiCharacter xi = XiCharacter::standard_for(basis);
      ConditionReport condition = check_condition(basis, xi);
      json blocks = json::array();
      std::string text = "X diag:";
      for (int v : basis.xdiag()) text += ' ' + std::to_string(v);
      text += "\nY diag:";
      for (int v : basis.ydiag()) text += ' ' + std::to_string(v);
      std::vector<std::pair<std::pair<int, int>, std::vector<ElemMatrix>>> ordered(
          basis.blocks().begin(), basis.blocks().end());
      std::sort(ordered.begin(), ordered.end(),
                [](const auto& a, const auto& b) { return a.first > b.first; });
      for (const auto& [w, members] : ordered) {
        json block;
        block["x"] = w.first;
        block["y"] = w.second;
        json names = json::array();
        std::string line;
        for (const ElemMatrix& e : members) {
          names.push_back(to_string(e));
          line += (line.empty() ? "" : " ") + to_string(e);
        }
        block["members"] = names;
        blocks.push_back(block);
        text += "\nblock (" + std::to_string(w.first) + "," + std::to_string(w.second) +
                "): " + line;
      }
      json xi_support = json::array();
      std::string xi_line;
      for (const auto& [pos, val] : xi.support()) {
        xi_support.push_back(to_string(ElemMatrix{pos.first, pos.second}));
        xi_line += (xi_line.empty() ? "" : " ") + to_string(ElemMatrix{pos.first, pos.second});
      }
      text += "\ncharacter support: " + (xi_line.empty() ? std::string("(none)") : xi_line);
      text += "\ncondition: " + std::string(condition.passed() ? "ok" : "violated");
      for (const auto& v : condition.violations) text += "\n  " + v;
      json result_json;
      result_json["x"] = basis.xdiag();
      result_json["y"] = basis.ydiag();
      result_json["blocks"] = blocks;
      result_json["xi_support"] = xi_support;
      result_json["condition_passed"] = condition.passed();
      result_json["violations"] = condition.violations;
      out.emit("bigrade", {{"n", opt_n}, {"d", opt_d}}, result_json,
               "diagonal-pair-bigrading", text);
    } else if (*vlin_cmd) {
      SuiteReport report = run_linalg_suite(max_n, seed, samples);
      out.emit("verify-linalg",
               {{"max_n", max_n}, {"samples", samples}, {"seed", seed}},
               report_json(report), "superdiagonal-perturbation-lemma", report_text(report));
      if (!report.passed()) return 1;
    } else if (*vfilt_cmd) {
      SuiteReport report = run_filtration_suite(seed, trials, max_dim);
      out.emit("verify-filtrations",
               {{"trials", trials}, {"max_dim", max_dim}, {"seed", seed}},
               report_json(report), "comparable-filtration-lemmas", report_text(report));
      if (!report.passed()) return 1;
    } else if (*infchar_cmd) {
      std::vector<GaussianRational> elements;
      for (const std::string& token : split_on_commas(multiset_text))
        elements.push_back(parse_gaussian(token));
      InfCharMultiset s(std::move(elements));
      std::vector<InfCharMultiset> results = infchar_transform(s, order);
      json result_json = json::array();
      std::string text;
      for (const InfCharMultiset& r : results) {
        json one = json::array();
        std::string line;
        for (const GaussianRational& g : r.elements()) {
          one.push_back(gaussian_to_string(g));
          line += (line.empty() ? "" : ", ") + gaussian_to_string(g);
        }
        result_json.push_back(one);
        text += (text.empty() ? "" : "\n") + ("{" + line + "}");
      }
      if (results.empty()) text = "(no results)";
      out.emit("infchar", {{"multiset", multiset_text}, {"order", order}}, result_json,
               "delete-and-half-shift", text);
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const undetermined_error& e) {
    std::cerr << "undetermined: " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
