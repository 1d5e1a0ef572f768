#include "lcs/json_io.hpp"

namespace lcs {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
  return Rational::from_string(j.get<std::string>());
}

Json to_json(const LieAlgebra& a) {
  Json out;
  out["dim"] = a.dim;
  Json brs = Json::array();
  for (const auto& [ij, c] : a.brackets) {
    Json b;
    b["i"] = ij.first;
    b["j"] = ij.second;
    Json coeffs = Json::object();
    for (int k = 0; k < a.dim; ++k)
      if (!c(k).is_zero()) coeffs[std::to_string(k + 1)] = c(k).str();
    b["c"] = coeffs;
    brs.push_back(b);
  }
  out["brackets"] = brs;
  if (!a.label.empty()) out["label"] = a.label;
  return out;
}

LieAlgebra algebra_from_json(const Json& j) {
  int dim = j.at("dim").get<int>();
  BracketMap br;
  for (const Json& b : j.at("brackets")) {
    int i = b.at("i").get<int>();
    int jj = b.at("j").get<int>();
    RatVector c = zero_vector(dim);
    for (const auto& [key, val] : b.at("c").items()) {
      int k = std::stoi(key);
      if (k < 1 || k > dim) throw Error("algebra_from_json: index out of range");
      c(k - 1) = rational_from_json(val);
    }
    br.emplace(std::make_pair(i, jj), std::move(c));
  }
  std::string label = j.value("label", std::string());
  return make_algebra(dim, std::move(br), label);
}

Json to_json(const KForm& f) {
  Json out;
  out["degree"] = f.degree;
  out["dim"] = f.dim;
  Json terms = Json::array();
  for (const auto& [idx, c] : f.terms) {
    Json t;
    t["idx"] = idx;
    t["c"] = c.str();
    terms.push_back(t);
  }
  out["terms"] = terms;
  return out;
}

KForm form_from_json(const Json& j, int dim) {
  int degree = j.at("degree").get<int>();
  int d = j.value("dim", dim);
  KForm f(d, degree);
  for (const Json& t : j.at("terms")) {
    FormIndex idx = t.at("idx").get<FormIndex>();
    f.add_term(std::move(idx), rational_from_json(t.at("c")));
  }
  return f;
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) return zero_matrix(0, 0);
  Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  RatMatrix m = zero_matrix(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index c = 0; c < cols; ++c)
      m(i, c) = rational_from_json(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
  return m;
}

Json to_json(const CohomologyReport& rep) {
  Json out;
  out["dim"] = rep.dim;
  out["twisted"] = rep.twist.has_value();
  if (rep.twist) out["twist"] = form_str(*rep.twist);
  out["betti"] = rep.betti;
  out["euler_characteristic"] = rep.euler_characteristic();
  Json bases = Json::array();
  for (std::size_t k = 0; k < rep.cocycle_bases.size(); ++k) {
    Json degree;
    degree["degree"] = k;
    Json cocycles = Json::array();
    for (const KForm& f : rep.cocycle_bases[k]) cocycles.push_back(form_str(f));
    degree["cocycles"] = cocycles;
    Json cobs = Json::array();
    for (const KForm& f : rep.coboundary_bases[k]) cobs.push_back(form_str(f));
    degree["coboundaries"] = cobs;
    bases.push_back(degree);
  }
  out["bases"] = bases;
  return out;
}

Json to_json(const ExistenceVerdict& v) {
  Json out;
  switch (v.outcome) {
    case ExistenceVerdict::Outcome::Exists: out["outcome"] = "exists"; break;
    case ExistenceVerdict::Outcome::ProvedImpossible: out["outcome"] = "impossible"; break;
    case ExistenceVerdict::Outcome::NoCertificateFound:
      out["outcome"] = "no-certificate-found";
      break;
  }
  if (v.reason) out["reason"] = impossible_reason_str(*v.reason);
  if (v.symplectic_cert) out["sigma"] = form_str(*v.symplectic_cert);
  if (v.contact_cert) {
    out["theta"] = form_str(v.contact_cert->theta);
    Json reeb = Json::array();
    for (Eigen::Index i = 0; i < v.contact_cert->reeb.size(); ++i)
      reeb.push_back(v.contact_cert->reeb(i).str());
    out["reeb"] = reeb;
  }
  if (v.lcs_cert) {
    out["omega"] = form_str(v.lcs_cert->first);
    out["eta"] = form_str(v.lcs_cert->second);
  }
  if (!v.log.empty()) {
    Json log = Json::array();
    for (const TrialEntry& t : v.log) {
      Json e;
      e["index"] = t.index;
      e["omega"] = t.omega;
      e["outcome"] = t.outcome;
      log.push_back(e);
    }
    out["trials"] = log;
  }
  return out;
}

Json to_json(const Report& rep) {
  Json rows = Json::array();
  for (const ReportRow& r : rep.rows) {
    Json row;
    row["entry"] = r.entry;
    row["check"] = r.check;
    row["expected"] = r.expected;
    row["actual"] = r.actual;
    row["pass"] = r.pass;
    row["provenance"] = r.provenance;
    rows.push_back(row);
  }
  Json out;
  out["rows"] = rows;
  out["all_pass"] = rep.all_pass();
  return out;
}

Json to_json(const SparsePoly& p) {
  Json out;
  out["vars"] = p.vars();
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exps"] = e;
    t["c"] = c.str();
    terms.push_back(t);
  }
  out["terms"] = terms;
  out["str"] = p.str();
  return out;
}

Json to_json(const InvariantSignature& s) {
  Json out;
  out["dim"] = s.dim;
  out["betti"] = s.betti;
  out["lower_central_series"] = s.lcs_dims;
  out["center_dim"] = s.center_dim;
  out["nilpotent"] = s.nilpotent;
  if (s.nilpotent) out["filtration_profile"] = s.filtration_profile;
  return out;
}

Json group_model_to_json(const GroupModel& m) {
  Json out;
  out["name"] = m.name;
  out["coords"] = m.group.coords;
  Json mul = Json::array();
  for (const PolyFunc& c : m.group.mul.comps) mul.push_back(c.str());
  out["mul"] = mul;
  Json forms = Json::object();
  for (std::size_t i = 0; i < m.coframe.size(); ++i) {
    Json terms = Json::array();
    for (const auto& [idx, c] : m.coframe[i].terms) {
      Json t;
      t["idx"] = idx;
      t["c"] = c.str();
      terms.push_back(t);
    }
    forms[m.coframe_names[i]] = terms;
  }
  out["forms"] = forms;
  if (m.lattice) {
    Json lat = Json::array();
    for (const LatticeConstraint& c : m.lattice->constraints) {
      Json e;
      e["modulus"] = c.modulus.str();
      e["offset"] = c.offset.str();
      lat.push_back(e);
    }
    out["lattice"] = lat;
  }
  if (m.flow) {
    Json flow = Json::array();
    for (const PolyFunc& c : m.flow->comps) flow.push_back(c.str());
    out["flow"] = flow;
    out["flow_param"] = m.flow_param;
  }
  return out;
}

}  // namespace lcs
