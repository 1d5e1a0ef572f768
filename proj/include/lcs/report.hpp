#pragma once

#include <set>
#include <string>
#include <vector>

#include "lcs/catalog.hpp"

namespace lcs {

enum class CheckKind { Lcs, Symplectic, Betti, Dixmier, Obstruction, Kind, Complex, Poly };

std::set<CheckKind> parse_checks(const std::string& csv);  // "lcs,symplectic,..."
std::string check_str(CheckKind c);

struct ReportRow {
  std::string entry;
  std::string check;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string provenance;
};

struct Report {
  std::vector<ReportRow> rows;
  bool all_pass() const;
};

/// Runs the selected checks over catalog entries whose label, alt label or
/// dimension bucket ("dim4", "dim6", "all") matches the scope; the "poly"
/// check runs the group-level witnesses instead.
Report run_report(const std::string& scope, const std::set<CheckKind>& checks,
                  const SearchConfig& cfg = default_search_config());

std::string report_markdown(const Report& r);
std::string report_csv(const Report& r);

}  // namespace lcs
