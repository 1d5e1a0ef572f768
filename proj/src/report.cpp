#include "lcs/report.hpp"

#include <algorithm>
#include <sstream>

#include "lcs/nilpotent.hpp"

namespace lcs {

std::string check_str(CheckKind c) {
  switch (c) {
    case CheckKind::Lcs: return "lcs";
    case CheckKind::Symplectic: return "symplectic";
    case CheckKind::Betti: return "betti";
    case CheckKind::Dixmier: return "dixmier";
    case CheckKind::Obstruction: return "obstruction";
    case CheckKind::Kind: return "kind";
    case CheckKind::Complex: return "complex";
    case CheckKind::Poly: return "poly";
  }
  return "?";
}

std::set<CheckKind> parse_checks(const std::string& csv) {
  std::set<CheckKind> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    bool known = false;
    for (CheckKind c : {CheckKind::Lcs, CheckKind::Symplectic, CheckKind::Betti,
                        CheckKind::Dixmier, CheckKind::Obstruction, CheckKind::Kind,
                        CheckKind::Complex, CheckKind::Poly}) {
      if (check_str(c) == item) {
        out.insert(c);
        known = true;
      }
    }
    if (!known) throw Error("unknown check '" + item + "'");
  }
  return out;
}

bool Report::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

namespace {

bool in_scope(const CatalogEntry& e, const std::string& scope) {
  if (scope.empty() || scope == "all") return true;
  if (scope == "dim4") return e.algebra.dim == 4;
  if (scope == "dim6") return e.algebra.dim == 6 && e.dim6_table_row;
  if (e.label.find(scope) != std::string::npos) return true;
  for (const std::string& alt : e.alt_labels)
    if (alt.find(scope) != std::string::npos) return true;
  return false;
}

void push(Report& rep, const std::string& entry, const std::string& check,
          const std::string& expected, const std::string& actual,
          const std::string& provenance) {
  rep.rows.push_back(ReportRow{entry, check, expected, actual, expected == actual,
                               provenance});
}

std::string yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

Report run_report(const std::string& scope, const std::set<CheckKind>& checks,
                  const SearchConfig& cfg) {
  Report rep;
  std::vector<CatalogEntry> cat = load_catalog();
  for (const CatalogEntry& e : cat) {
    if (!in_scope(e, scope)) continue;
    if (checks.count(CheckKind::Lcs) && e.expect_lcs_first_kind) {
      bool verified = false;
      if (e.lcs_cert) {
        verified = verify_lcs_first_kind(e.algebra, e.lcs_cert->first, e.lcs_cert->second).ok();
      } else {
        verified = lcs_first_kind_search(e.algebra, cfg).exists();
      }
      push(rep, e.label, "lcs", yn(e.expect_lcs_first_kind->value), yn(verified),
           e.expect_lcs_first_kind->provenance);
    }
    if (checks.count(CheckKind::Symplectic) && e.expect_symplectic) {
      ExistenceVerdict v = symplectic_exists(e.algebra, cfg);
      push(rep, e.label, "symplectic", yn(e.expect_symplectic->value), yn(v.exists()),
           e.expect_symplectic->provenance);
    }
    if (checks.count(CheckKind::Betti) && e.expect_b1) {
      CohomologyReport c = betti_numbers(e.algebra, std::nullopt);
      push(rep, e.label, "b1", std::to_string(e.expect_b1->value),
           std::to_string(c.betti[1]), e.expect_b1->provenance);
    }
    if (checks.count(CheckKind::Dixmier) && is_nilpotent(e.algebra) && e.algebra.dim > 0) {
      bool all_zero = true;
      for (int i = 1; i <= e.algebra.dim; ++i) {
        KForm w = basis_covector(e.algebra.dim, i);
        if (!is_closed(e.algebra, w)) continue;
        if (!dixmier_check(e.algebra, w)) all_zero = false;
      }
      push(rep, e.label, "dixmier", "yes", yn(all_zero), "literature");
    }
    if (checks.count(CheckKind::Obstruction) && is_nilpotent(e.algebra) &&
        e.algebra.dim % 2 == 0 && !e.algebra.is_abelian() && e.lcs_cert) {
      FiltrationVerdict f = lcs_filtration_obstruction(e.algebra);
      push(rep, e.label, "obstruction", "passes",
           f == FiltrationVerdict::Passes ? "passes" : "obstructed", "literature");
    }
    if (checks.count(CheckKind::Kind) && e.expect_kind && e.exact_lcs) {
      AutomorphismReport ar =
          classify_kind(e.algebra, e.exact_lcs->first, e.exact_lcs->second);
      push(rep, e.label, "kind", kind_str(e.expect_kind->value), kind_str(ar.kind),
           e.expect_kind->provenance);
    }
    if (checks.count(CheckKind::Complex) && e.complex_j && e.expect_j_integrable) {
      ComplexVerdict v = check_complex_structure(e.algebra, *e.complex_j);
      push(rep, e.label, "complex", yn(e.expect_j_integrable->value), yn(v.ok),
           e.expect_j_integrable->provenance);
    }
  }
  if (checks.count(CheckKind::Poly)) {
    PolyWitnesses w = load_group_catalog();
    for (const GroupModel& m : w.models) {
      GroupLawVerdict g = verify_group_law(m.group, std::nullopt,
                                           std::vector<Rational>(m.group.coords.size(), Rational(0)));
      push(rep, m.name, "group law", "yes", yn(g.ok()), "literature");
      bool inv = true;
      for (const PolyForm& f : m.coframe)
        if (!verify_left_invariance(m.group, f)) inv = false;
      push(rep, m.name, "left-invariant coframe", "yes", yn(inv), "literature");
      push(rep, m.name, "coframe matches algebra", "yes",
           yn(coframe_matches_algebra(m.coframe, m.algebra)), "literature");
      if (m.flow) {
        bool preserved =
            pullback(*m.flow, m.coframe[static_cast<std::size_t>(m.preserved_form)]) ==
            m.coframe[static_cast<std::size_t>(m.preserved_form)];
        push(rep, m.name, "strict contactomorphism", "yes", yn(preserved), "literature");
        push(rep, m.name, "one-parameter group", "yes",
             yn(verify_one_parameter_group(m.group, *m.flow, m.flow_param)), "literature");
        if (m.lattice)
          push(rep, m.name, "lattice invariance", "yes",
               yn(verify_lattice_invariance(*m.flow, *m.lattice)), "literature");
      }
    }
    for (const auto& [name, data] : w.cocycles)
      push(rep, name, "cocycle identity", "yes", yn(verify_cocycle(data.first, data.second)),
           "literature");
    for (const auto& [name, witness] : w.chi_tildes)
      push(rep, name, "chi identities", "yes", yn(verify_chi_identities(witness).ok()),
           "literature");
    for (const auto& [name, witness] : w.double_chis)
      push(rep, name, "double-extension chi identities", "yes",
           yn(verify_double_chi_identities(witness).ok()), "literature");
  }
  return rep;
}

std::string report_markdown(const Report& r) {
  std::ostringstream os;
  os << "| entry | check | expected | actual | result | provenance |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const ReportRow& row : r.rows) {
    os << "| " << row.entry << " | " << row.check << " | " << row.expected << " | "
       << row.actual << " | " << (row.pass ? "PASS" : "FAIL") << " | " << row.provenance
       << " |\n";
  }
  os << "\n" << (r.all_pass() ? "all checks passed" : "FAILURES present") << "\n";
  return os.str();
}

std::string report_csv(const Report& r) {
  std::ostringstream os;
  os << "entry,check,expected,actual,result,provenance\n";
  for (const ReportRow& row : r.rows) {
    os << row.entry << "," << row.check << "," << row.expected << "," << row.actual << ","
       << (row.pass ? "PASS" : "FAIL") << "," << row.provenance << "\n";
  }
  return os.str();
}

}  // namespace lcs
