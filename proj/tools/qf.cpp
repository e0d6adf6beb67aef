#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qf/adconj.hpp"
#include "qf/coset_quandle.hpp"
#include "qf/diagram.hpp"
#include "qf/errors.hpp"
#include "qf/invariants.hpp"
#include "qf/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;
constexpr int kExitMismatch = 5;
constexpr int kExitCap = 6;

struct Options {
  bool as_json = false;
  std::size_t budget = qf::kDefaultSearchBudget;
  std::size_t tc_cap = qf::kDefaultCosetCap;
  int order_cap = qf::kQuandleEnumCap;
  int threads = 1;
};

void emit(const Options& opt, const qf::json& j, const std::string& text) {
  if (opt.as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

qf::json report_to_json(const qf::ValidationReport& report) {
  qf::json j;
  j["valid"] = report.valid();
  qf::json violations = qf::json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  j["violations"] = violations;
  return j;
}

int cmd_validate(const Options& opt, const std::string& path) {
  qf::json j = qf::load_json(path);
  qf::ValidationReport report;
  std::string what;
  if (j.contains("table")) {
    what = "quandle";
    report = qf::validate_quandle(qf::quandle_from_json(j).table);
  } else {
    what = "group";
    report = qf::validate_group(qf::group_from_json(j).table());
  }
  qf::json out = report_to_json(report);
  out["type"] = what;
  std::string text = what + (report.valid() ? ": valid\n" : ": INVALID\n");
  for (const auto& v : report.violations) {
    text += "  axiom " + v.axiom + " violated, witness (";
    for (std::size_t i = 0; i < v.witness.size(); ++i)
      text += (i ? "," : "") + std::to_string(v.witness[i]);
    text += ")\n";
  }
  emit(opt, out, text);
  return report.valid() ? kExitOk : kExitInvalid;
}

int cmd_coset(const Options& opt, const std::string& group_path,
              const std::vector<int>& subgroup_gens, int meridian, bool force,
              const std::string& out_path, const std::string& sidecar_path) {
  qf::FiniteGroup G = qf::group_from_json(qf::load_json(group_path));
  qf::Subgroup P = qf::subgroup_generated(G, subgroup_gens);
  qf::CosetQuandle CQ = qf::build_coset_quandle(G, P, meridian, force);

  qf::json quandle = qf::quandle_to_json(CQ.quandle);
  qf::json sidecar;
  sidecar["representatives"] = CQ.cosets.representatives;
  sidecar["coset_of"] = CQ.cosets.coset_of;
  sidecar["meridian"] = meridian;
  sidecar["subgroup"] = P.elements;

  if (!out_path.empty()) {
    std::ofstream(out_path) << quandle.dump(2) << "\n";
    if (!sidecar_path.empty())
      std::ofstream(sidecar_path) << sidecar.dump(2) << "\n";
    std::cout << "wrote quandle of order " << CQ.quandle.order << " to " << out_path
              << "\n";
  } else {
    qf::json combined;
    combined["quandle"] = quandle;
    combined["cosets"] = sidecar;
    emit(opt, combined, combined.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_color(const Options& opt, const std::string& diagram_path,
              const std::string& quandle_path) {
  qf::Diagram d = qf::parse_gauss(qf::read_file(diagram_path));
  qf::FiniteQuandle Q = qf::quandle_from_json(qf::load_json(quandle_path));
  auto report = qf::validate_quandle(Q.table);
  if (!report.valid()) throw qf::MalformedInput("target is not a quandle");
  std::uint64_t count =
      qf::count_colorings(qf::wirtinger_quandle(d), Q, opt.budget, opt.threads);
  qf::json j;
  j["colorings"] = count;
  j["diagram"] = diagram_path;
  j["target"] = quandle_path;
  emit(opt, j, std::to_string(count) + "\n");
  return kExitOk;
}

int cmd_adconj(const Options& opt, const std::string& quandle_path, bool abel,
               bool inn, bool present) {
  qf::FiniteQuandle Q = qf::quandle_from_json(qf::load_json(quandle_path));
  auto report = qf::validate_quandle(Q.table);
  if (!report.valid()) throw qf::MalformedInput("input is not a quandle");

  qf::json j;
  std::string text;
  if (abel) {
    qf::AbelianInvariants inv = qf::adconj_abelianization(Q);
    j["free_rank"] = inv.free_rank;
    j["torsion"] = inv.torsion;
    text = "abelianization: free rank " + std::to_string(inv.free_rank);
    text += ", torsion [";
    for (std::size_t i = 0; i < inv.torsion.size(); ++i)
      text += (i ? "," : "") + std::to_string(inv.torsion[i]);
    text += "]\n";
  } else if (inn) {
    qf::PermutationGroup image = qf::adconj_inn_image(Q);
    j["degree"] = image.degree();
    j["order"] = image.order();
    j["generators"] = image.generators();
    text = "inner image: degree " + std::to_string(image.degree()) + ", order " +
           std::to_string(image.order()) + "\n";
  } else if (present) {
    j = qf::presentation_to_json(qf::adconj_presentation(Q).presentation);
    text = j.dump(2) + "\n";
  } else {
    throw qf::MalformedInput("choose one of --abelianization, --inn, --present");
  }
  emit(opt, j, text);
  return kExitOk;
}

int cmd_crosscheck(const Options& opt, const std::string& diagram_path,
                   const std::string& group_path, int class_rep) {
  qf::Diagram d = qf::parse_gauss(qf::read_file(diagram_path));
  qf::FiniteGroup G = qf::group_from_json(qf::load_json(group_path));
  auto wq = qf::wirtinger_quandle(d);
  auto wg = qf::wirtinger_group(d);
  qf::CrosscheckReport report = qf::crosscheck_conjugation(
      wq, wg.presentation, wg.peripheral.meridian, G, class_rep, opt.budget,
      opt.threads);
  qf::json j;
  j["colorings"] = report.colorings;
  j["reps"] = report.reps;
  j["match"] = report.match();
  j["diagram"] = diagram_path;
  j["target"] = group_path;
  emit(opt, j,
       "colorings " + std::to_string(report.colorings) + ", representations " +
           std::to_string(report.reps) + (report.match() ? " (match)\n" : " (MISMATCH)\n"));
  return report.match() ? kExitOk : kExitMismatch;
}

int cmd_enumerate(const Options& opt, int n) {
  auto quandles = qf::enumerate_quandles(n, opt.order_cap);
  qf::json j = qf::json::array();
  for (const auto& Q : quandles) j.push_back(qf::quandle_to_json(Q));
  emit(opt, j,
       std::to_string(quandles.size()) + " quandle(s) of order " + std::to_string(n) +
           "\n" + j.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quandle / group-triple toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opt;
  app.add_flag("--json", opt.as_json, "machine-readable JSON output");
  app.add_option("--budget", opt.budget, "search node budget")
      ->envname("QF_BUDGET");
  app.add_option("--tc-cap", opt.tc_cap, "coset enumeration cap")
      ->envname("QF_TC_CAP");
  app.add_option("--order-cap", opt.order_cap, "quandle enumeration order cap")
      ->envname("QF_ORDER_CAP");
  app.add_option("--threads", opt.threads, "worker threads for searches")
      ->envname("QF_THREADS");

  std::string path, group_path, quandle_path, diagram_path, out_path, sidecar_path;
  std::vector<int> subgroup_gens;
  int meridian = 0, class_rep = 0, order = 1;
  bool force = false, abel = false, inn = false, present = false;

  auto* validate = app.add_subcommand("validate", "validate a quandle or group file");
  validate->add_option("path", path)->required();

  auto* coset = app.add_subcommand("coset", "build the coset quandle (P\\G, m)");
  coset->add_option("group", group_path)->required();
  coset->add_option("--subgroup", subgroup_gens, "subgroup generators")
      ->delimiter(',');
  coset->add_option("--meridian", meridian)->required();
  coset->add_flag("--force", force, "build even when m is not central in P");
  coset->add_option("-o,--output", out_path, "quandle JSON output path");
  coset->add_option("--sidecar", sidecar_path, "coset-representative sidecar path");

  auto* color = app.add_subcommand("color", "count colorings of a diagram");
  color->add_option("diagram", diagram_path)->required();
  color->add_option("target", quandle_path)->required();

  auto* adconj = app.add_subcommand("adconj", "adjoint group of a quandle");
  adconj->add_option("quandle", quandle_path)->required();
  adconj->add_flag("--abelianization", abel);
  adconj->add_flag("--inn", inn);
  adconj->add_flag("--present", present);

  auto* crosscheck =
      app.add_subcommand("crosscheck", "coloring vs representation count");
  crosscheck->add_option("diagram", diagram_path)->required();
  crosscheck->add_option("group", group_path)->required();
  crosscheck->add_option("--class-rep", class_rep)->required();

  auto* enumerate = app.add_subcommand("enumerate", "quandles of a given order");
  enumerate->add_option("order", order)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(opt, path);
    if (coset->parsed())
      return cmd_coset(opt, group_path, subgroup_gens, meridian, force, out_path,
                       sidecar_path);
    if (color->parsed()) return cmd_color(opt, diagram_path, quandle_path);
    if (adconj->parsed()) return cmd_adconj(opt, quandle_path, abel, inn, present);
    if (crosscheck->parsed())
      return cmd_crosscheck(opt, diagram_path, group_path, class_rep);
    if (enumerate->parsed()) return cmd_enumerate(opt, order);
  } catch (const qf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qf::PairingError& e) {
    std::cerr << "pairing error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qf::MalformedTable& e) {
    std::cerr << "malformed table: " << e.what() << "\n";
    return kExitParse;
  } catch (const qf::CentralityViolation& e) {
    std::cerr << "centrality violation: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const qf::MalformedInput& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const qf::SearchBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const qf::OrderCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const qf::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  }
  return kExitOk;
}
