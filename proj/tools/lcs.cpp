// Command-line front end: exact verification, classification and searches
// for symplectic / contact / lcs structures on rational Lie algebras, plus
// the polynomial group-level checks.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lcs/json_io.hpp"
#include "lcs/nilpotent.hpp"
#include "lcs/notation.hpp"

namespace {

using namespace lcs;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

LieAlgebra load_algebra(const std::string& notation, const std::string& file) {
  if (!notation.empty()) return parse_structure_notation(notation);
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file);
    Json j;
    in >> j;
    return algebra_from_json(j);
  }
  throw Error("no algebra given (use --algebra or --algebra-file)");
}

void emit(const Json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int run(int argc, char** argv) {
  CLI::App app{"exact lcs / contact / symplectic computations on Lie algebras"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON on stdout");

  std::string notation, algebra_file;
  auto add_algebra_opts = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", notation, "structure notation, e.g. (0,0,0,12)");
    cmd->add_option("--algebra-file", algebra_file, "LieAlgebra JSON file");
  };

  // parse
  auto* cmd_parse = app.add_subcommand("parse", "parse structure notation");
  std::string parse_arg;
  cmd_parse->add_option("notation", parse_arg, "structure notation")->required();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "verify a certificate");
  add_algebra_opts(cmd_verify);
  std::string verify_type, omega_s, eta_s, sigma_s, theta_s;
  cmd_verify->add_option("--type", verify_type, "symplectic|contact|lcs")->required();
  cmd_verify->add_option("--omega", omega_s, "Lee form expression");
  cmd_verify->add_option("--eta", eta_s, "anti-Lee form expression");
  cmd_verify->add_option("--sigma", sigma_s, "symplectic form expression");
  cmd_verify->add_option("--theta", theta_s, "contact form expression");

  // classify
  auto* cmd_classify = app.add_subcommand("classify", "kind of an lcs pair (Phi, omega)");
  add_algebra_opts(cmd_classify);
  std::string phi_s, cl_omega_s;
  cmd_classify->add_option("--phi", phi_s, "2-form expression")->required();
  cmd_classify->add_option("--omega", cl_omega_s, "Lee form expression")->required();

  // cohomology
  auto* cmd_cohom = app.add_subcommand("cohomology", "Betti numbers, plain or twisted");
  add_algebra_opts(cmd_cohom);
  std::string twist_s;
  cmd_cohom->add_option("--twist", twist_s, "closed 1-form expression");

  // extend
  auto* cmd_extend = app.add_subcommand("extend", "extension constructors");
  std::string mode, base_file, sigma_file, deriv_file, z1_file, theta_file;
  cmd_extend->add_option("--mode", mode, "semidirect|central|lcs|double")->required();
  cmd_extend->add_option("--base", base_file, "base algebra JSON")->required();
  cmd_extend->add_option("--sigma-file", sigma_file, "2-form JSON");
  cmd_extend->add_option("--theta-file", theta_file, "1-form JSON (semidirect mode)");
  cmd_extend->add_option("--deriv", deriv_file, "derivation matrix JSON");
  cmd_extend->add_option("--z1", z1_file, "vector JSON (double mode)");

  // scan
  auto* cmd_scan = app.add_subcommand("scan", "existence searches");
  add_algebra_opts(cmd_scan);
  std::string scan_kind = "auto", scan_report = "md";
  SearchConfig cfg = default_search_config();
  cmd_scan->add_option("--kind", scan_kind, "symplectic|contact|lcs|auto");
  cmd_scan->add_option("--budget", cfg.budget, "candidate budget");
  cmd_scan->add_option("--seed", cfg.seed, "random seed");
  cmd_scan->add_option("--omega-bound", cfg.omega_bound, "integer grid bound");
  cmd_scan->add_option("--report", scan_report, "md|json|csv");

  // polycheck
  auto* cmd_poly = app.add_subcommand("polycheck", "group-level polynomial witnesses");
  std::string model_name = "all";
  cmd_poly->add_option("--model", model_name, "model name or 'all'");
  bool poly_list = false;
  cmd_poly->add_flag("--list", poly_list, "list models");
  bool poly_dump = false;
  cmd_poly->add_flag("--dump", poly_dump, "dump the model data as JSON");

  // report
  auto* cmd_report = app.add_subcommand("report", "catalog reproduction report");
  std::string scope = "all", checks_csv = "lcs,symplectic,betti,dixmier,obstruction,kind,complex,poly";
  std::string report_fmt = "md";
  cmd_report->add_option("--scope", scope, "all|dim4|dim6|<label substring>");
  cmd_report->add_option("--checks", checks_csv, "comma list of checks");
  cmd_report->add_option("--format", report_fmt, "md|csv");
  cmd_report->add_option("--budget", cfg.budget, "search budget");
  cmd_report->add_option("--seed", cfg.seed, "random seed");

  // signature
  auto* cmd_sig = app.add_subcommand("signature", "isomorphism-invariant fingerprint");
  add_algebra_opts(cmd_sig);

  CLI11_PARSE(app, argc, argv);

  if (cmd_parse->parsed()) {
    LieAlgebra a = parse_structure_notation(parse_arg);
    emit(to_json(a), as_json,
         "dim " + std::to_string(a.dim) + ", canonical " + print_structure_notation(a) + "\n");
    return kExitOk;
  }

  if (cmd_verify->parsed()) {
    LieAlgebra a = load_algebra(notation, algebra_file);
    if (verify_type == "symplectic") {
      if (sigma_s.empty()) throw Error("--sigma required");
      SymplecticVerdict v = verify_symplectic(a, parse_form_expr(sigma_s, a));
      Json j{{"ok", v.ok()}, {"closed", v.closed}, {"nondegenerate", v.nondegenerate}};
      if (!v.reason.empty()) j["reason"] = v.reason;
      emit(j, as_json, std::string(v.ok() ? "accepted" : "rejected: " + v.reason) + "\n");
      return v.ok() ? kExitOk : kExitVerificationFailure;
    }
    if (verify_type == "contact") {
      if (theta_s.empty()) throw Error("--theta required");
      ContactResult v = verify_contact(a, parse_form_expr(theta_s, a));
      Json j{{"ok", v.ok()}};
      std::string text;
      if (v.ok()) {
        Json reeb = Json::array();
        for (Eigen::Index i = 0; i < v.structure->reeb.size(); ++i)
          reeb.push_back(v.structure->reeb(i).str());
        j["reeb"] = reeb;
        text = "accepted; Reeb vector solved\n";
      } else {
        j["reason"] = v.reason;
        text = "rejected: " + v.reason + "\n";
      }
      emit(j, as_json, text);
      return v.ok() ? kExitOk : kExitVerificationFailure;
    }
    if (verify_type == "lcs") {
      if (omega_s.empty() || eta_s.empty()) throw Error("--omega and --eta required");
      LcsResult v = verify_lcs_first_kind(a, parse_form_expr(omega_s, a),
                                          parse_form_expr(eta_s, a));
      Json j{{"ok", v.ok()}};
      std::string text;
      if (v.ok()) {
        j["phi"] = form_str(v.structure->phi);
        Json lee = Json::array(), anti = Json::array();
        for (int i = 0; i < a.dim; ++i) {
          lee.push_back(v.structure->lee(i).str());
          anti.push_back(v.structure->anti_lee(i).str());
        }
        j["lee"] = lee;
        j["anti_lee"] = anti;
        text = "accepted; Phi = " + form_str(v.structure->phi) + "\n";
      } else {
        j["reason"] = v.reason;
        text = "rejected: " + v.reason + "\n";
      }
      emit(j, as_json, text);
      return v.ok() ? kExitOk : kExitVerificationFailure;
    }
    throw Error("unknown --type " + verify_type);
  }

  if (cmd_classify->parsed()) {
    LieAlgebra a = load_algebra(notation, algebra_file);
    KForm phi = parse_form_expr(phi_s, a);
    KForm om = parse_form_expr(cl_omega_s, a);
    AutomorphismReport rep = classify_kind(a, phi, om);
    auto eta = solve_exactness(a, phi, om);
    Json j;
    j["kind"] = kind_str(rep.kind);
    j["automorphism_dim"] = rep.basis.size();
    Json lv = Json::array();
    for (const Rational& r : rep.lee_values) lv.push_back(r.str());
    j["lee_values"] = lv;
    j["exact"] = eta.has_value();
    if (eta) j["eta"] = form_str(*eta);
    std::ostringstream os;
    os << kind_str(rep.kind) << "; dim g_Phi = " << rep.basis.size()
       << (eta ? "; exact with eta = " + form_str(*eta) : "; not exact") << "\n";
    emit(j, as_json, os.str());
    return kExitOk;
  }

  if (cmd_cohom->parsed()) {
    LieAlgebra a = load_algebra(notation, algebra_file);
    std::optional<KForm> twist;
    if (!twist_s.empty()) twist = parse_form_expr(twist_s, a);
    CohomologyReport rep = betti_numbers(a, twist);
    std::ostringstream os;
    os << "| degree | betti |\n|---|---|\n";
    for (std::size_t k = 0; k < rep.betti.size(); ++k)
      os << "| " << k << " | " << rep.betti[k] << " |\n";
    emit(to_json(rep), as_json, os.str());
    return kExitOk;
  }

  if (cmd_extend->parsed()) {
    std::ifstream bin(base_file);
    if (!bin) throw Error("cannot open " + base_file);
    Json bj;
    bin >> bj;
    LieAlgebra base = algebra_from_json(bj);
    auto load_form = [&](const std::string& f) {
      std::ifstream in(f);
      if (!in) throw Error("cannot open " + f);
      Json j;
      in >> j;
      return form_from_json(j, base.dim);
    };
    auto load_matrix = [&](const std::string& f) {
      std::ifstream in(f);
      if (!in) throw Error("cannot open " + f);
      Json j;
      in >> j;
      return matrix_from_json(j);
    };
    Json out;
    if (mode == "semidirect") {
      if (deriv_file.empty()) throw Error("--deriv required");
      LieAlgebra g = semidirect_extend(base, load_matrix(deriv_file));
      out["algebra"] = to_json(g);
    } else if (mode == "central") {
      if (sigma_file.empty()) throw Error("--sigma-file required");
      LieAlgebra g = central_extend(base, load_form(sigma_file));
      out["algebra"] = to_json(g);
      out["note"] = "central slot first; theta = e1 when sigma is symplectic";
    } else if (mode == "lcs") {
      if (sigma_file.empty() || deriv_file.empty())
        throw Error("--sigma-file and --deriv required");
      LcsExtensionResult r = lcs_extension(base, load_form(sigma_file), load_matrix(deriv_file));
      out["algebra"] = to_json(r.g);
      out["omega"] = form_str(r.cert.omega);
      out["eta"] = form_str(r.cert.eta);
      out["phi"] = form_str(r.cert.phi);
    } else if (mode == "double") {
      if (sigma_file.empty() || deriv_file.empty() || z1_file.empty())
        throw Error("--sigma-file, --deriv and --z1 required");
      std::ifstream in(z1_file);
      if (!in) throw Error("cannot open " + z1_file);
      Json zj;
      in >> zj;
      RatVector z1 = zero_vector(base.dim);
      for (Eigen::Index i = 0; i < z1.size(); ++i)
        z1(i) = rational_from_json(zj[static_cast<std::size_t>(i)]);
      DoubleExtensionResult r = double_extension(
          DoubleExtensionData{base, load_form(sigma_file), load_matrix(deriv_file), z1});
      out["algebra"] = to_json(r.s);
      out["sigma"] = form_str(r.sigma);
    } else {
      throw Error("unknown --mode " + mode);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  if (cmd_scan->parsed()) {
    LieAlgebra a = load_algebra(notation, algebra_file);
    Json out = Json::object();
    std::ostringstream os;
    auto run_one = [&](const std::string& which) {
      ExistenceVerdict v;
      if (which == "symplectic") v = symplectic_exists(a, cfg);
      else if (which == "contact") v = contact_exists(a, cfg);
      else v = lcs_first_kind_search(a, cfg);
      out[which] = to_json(v);
      os << which << ": " << out[which]["outcome"].get<std::string>();
      if (v.reason) os << " (" << impossible_reason_str(*v.reason) << ")";
      if (v.symplectic_cert) os << " sigma = " << form_str(*v.symplectic_cert);
      if (v.contact_cert) os << " theta = " << form_str(v.contact_cert->theta);
      if (v.lcs_cert)
        os << " omega = " << form_str(v.lcs_cert->first)
           << ", eta = " << form_str(v.lcs_cert->second);
      os << "\n";
    };
    if (scan_kind == "auto") {
      if (a.dim % 2 == 0 && a.dim <= 12) run_one("symplectic");
      if (a.dim % 2 == 1) run_one("contact");
      if (a.dim % 2 == 0 && a.dim >= 4) run_one("lcs");
    } else {
      run_one(scan_kind);
    }
    if (scan_report == "json" || as_json) {
      std::cout << out.dump(2) << "\n";
    } else if (scan_report == "csv") {
      std::cout << "kind,outcome\n";
      for (const auto& [k, v] : out.items())
        std::cout << k << "," << v["outcome"].get<std::string>() << "\n";
    } else {
      std::cout << os.str();
    }
    return kExitOk;
  }

  if (cmd_poly->parsed()) {
    PolyWitnesses w = load_group_catalog();
    if (poly_list) {
      for (const GroupModel& m : w.models) std::cout << m.name << "\n";
      return kExitOk;
    }
    if (poly_dump) {
      Json dump = Json::array();
      for (const GroupModel& m : w.models)
        if (model_name == "all" || m.name.find(model_name) != std::string::npos)
          dump.push_back(group_model_to_json(m));
      std::cout << dump.dump(2) << "\n";
      return kExitOk;
    }
    Report rep;
    {
      // reuse the reporting path for the selected model(s)
      std::set<CheckKind> checks{CheckKind::Poly};
      rep = run_report("all", checks, cfg);
    }
    if (model_name != "all") {
      std::vector<ReportRow> filtered;
      for (const ReportRow& r : rep.rows)
        if (r.entry.find(model_name) != std::string::npos) filtered.push_back(r);
      rep.rows = std::move(filtered);
    }
    emit(to_json(rep), as_json, report_markdown(rep));
    return rep.all_pass() ? kExitOk : kExitVerificationFailure;
  }

  if (cmd_report->parsed()) {
    Report rep = run_report(scope, parse_checks(checks_csv), cfg);
    if (as_json)
      std::cout << to_json(rep).dump(2) << "\n";
    else if (report_fmt == "csv")
      std::cout << report_csv(rep);
    else
      std::cout << report_markdown(rep);
    return rep.all_pass() ? kExitOk : kExitVerificationFailure;
  }

  if (cmd_sig->parsed()) {
    LieAlgebra a = load_algebra(notation, algebra_file);
    InvariantSignature s = signature(a);
    emit(to_json(s), as_json, s.str() + "\n");
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lcs::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const lcs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
