#include "kdeg/report.hpp"

#include <sstream>

namespace kdeg {

Json to_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["q"] = c.q;
  if (c.n >= 0) j["n"] = c.n;
  j["seed"] = c.seed;
  j["prime_bits"] = c.prime_bits;
  if (c.trials > 0) j["trials"] = c.trials;
  if (!c.method.empty()) j["method"] = c.method;
  if (!c.convention.empty()) j["convention"] = c.convention;
  j["format"] = c.format;
  if (!c.cache_dir.empty()) j["cache_dir"] = c.cache_dir;
  if (!c.precision.empty()) j["precision"] = c.precision;
  return j;
}

Json to_json(const DegreeRecord& r) {
  Json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["degree"] = r.degree.str();
  j["method"] = r.method;
  j["seeds"] = r.seeds;
  j["primes"] = r.primes;
  j["agreement"] = r.agreement;
  return j;
}

Json to_json(const RealInterval& iv) {
  Json j;
  j["lo"] = iv.lo.str();
  j["hi"] = iv.hi.str();
  j["approx"] = iv.to_double();
  return j;
}

Json to_json(const ChartReport& r) {
  Json j;
  j["proposition"] = r.prop;
  j["q"] = r.q;
  j["trials"] = r.trials;
  j["passes"] = r.passes;
  j["failures"] = r.failures;
  j["samples_of_failure"] = r.notes;
  return j;
}

Json poly_json(const UPoly<Int>& p) {
  Json coeffs = Json::array();
  for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(p.coeff(k).str());
  return coeffs;
}

Json matrix_json(const MatX<Int>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const FactorReport& r) {
  Json j;
  j["q"] = r.q;
  j["convention"] = to_string(r.convention);
  j["charpoly"] = poly_json(r.charpoly);
  j["degree_identity_ok"] = r.degree_identity_ok;
  Json stages = Json::array();
  for (const auto& s : r.stages) {
    Json sj;
    sj["factor"] = s.factor;
    sj["exponent"] = s.exponent;
    sj["exact"] = s.exact;
    stages.push_back(std::move(sj));
  }
  j["stages"] = stages;
  j["quotient_is_one"] = r.quotient_is_one;
  j["ok"] = r.ok;
  if (!r.failed_stage.empty()) j["failed_stage"] = r.failed_stage;
  return j;
}

Json to_json(const SubspaceReport& r) {
  Json j;
  j["q"] = r.q;
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json cj;
    cj["name"] = c.name;
    cj["invariant"] = c.invariant;
    if (c.invariant) {
      cj["restricted_charpoly"] = poly_json(c.restricted_charpoly);
      cj["expected_charpoly"] = poly_json(c.expected_charpoly);
      cj["charpoly_ok"] = c.charpoly_ok;
    } else {
      cj["offending"] = c.offending;
    }
    cases.push_back(std::move(cj));
  }
  j["cases"] = cases;
  j["ok"] = r.ok;
  return j;
}

Json to_json(const DeltaReport& r) {
  Json j;
  j["q"] = r.q;
  j["P"] = poly_json(r.p_poly);
  j["delta_from_P"] = to_json(r.from_p);
  j["spectral_radius_full_matrix"] = to_json(r.from_full);
  j["intervals_overlap"] = r.overlap;
  j["method"] = "closed-form P(lambda) cross-checked against the full pullback matrix";
  return j;
}

namespace {

Rat rat_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw degenerate_input("matrix entries must be integers or \"num/den\" strings");
}

}  // namespace

ProjPoint<Rat> parse_point_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array() || j.empty()) throw degenerate_input("matrix literal must be a JSON array");
  std::vector<Rat> flat;
  if (j[0].is_array()) {
    std::size_t q = j.size();
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != q)
        throw degenerate_input("matrix literal must be square");
      for (const auto& v : row) flat.push_back(rat_from_json(v));
    }
  } else {
    for (const auto& v : j) flat.push_back(rat_from_json(v));
  }
  std::size_t q = 0;
  while ((q + 1) * (q + 1) <= flat.size()) ++q;
  if (q < 2 || q * q != flat.size())
    throw degenerate_input("matrix literal must hold q^2 entries with q >= 2");
  ProjPoint<Rat> p;
  p.q = static_cast<int>(q);
  p.x.resize(static_cast<Eigen::Index>(flat.size()));
  bool any = false;
  for (std::size_t k = 0; k < flat.size(); ++k) {
    p.x(static_cast<Eigen::Index>(k)) = flat[k];
    if (!flat[k].is_zero()) any = true;
  }
  if (!any) throw degenerate_input("matrix literal must not be identically zero");
  return p;
}

std::string degree_table_csv(const std::vector<DegreeRecord>& records) {
  std::ostringstream os;
  os << "q,n,degree,method,agreement,seeds,primes\n";
  for (const auto& r : records) {
    os << r.q << "," << r.n << "," << r.degree.str() << "," << r.method << "," << r.agreement << ",";
    for (std::size_t i = 0; i < r.seeds.size(); ++i) os << (i ? ";" : "") << r.seeds[i];
    os << ",";
    for (std::size_t i = 0; i < r.primes.size(); ++i) os << (i ? ";" : "") << r.primes[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace kdeg
