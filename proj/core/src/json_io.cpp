#include "cylinderlab/json_io.hpp"

#include <json.hpp>

namespace cylinderlab {

namespace {

using nlohmann::json;

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw JsonError(std::string("not valid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw JsonError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw JsonError(std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) {
    throw JsonError(std::string("field \"") + name + "\" must be an integer");
  }
  return v.get<int>();
}

PrimeModulus modulus_field(const json& j) {
  const int p = int_field(j, "p");
  if (!is_prime(p)) throw JsonError("field \"p\" must be prime, got " + std::to_string(p));
  return PrimeModulus(p);
}

std::vector<long long> values_field(const json& j, const PrimeModulus& p) {
  const json& v = field(j, "values");
  if (!v.is_array()) throw JsonError("field \"values\" must be an array");
  if (static_cast<int>(v.size()) != p.cube()) {
    throw JsonError("field \"values\" must have length " + std::to_string(p.cube()) + ", got " +
                    std::to_string(v.size()));
  }
  std::vector<long long> out;
  out.reserve(v.size());
  for (const json& e : v) {
    if (!e.is_number_integer()) throw JsonError("field \"values\" must hold integers");
    out.push_back(e.get<long long>());
  }
  return out;
}

json weight_json(const WeightZ& w) {
  return json{{"p", w.p.value()}, {"values", w.values}};
}

}  // namespace

std::string weight_to_json(const WeightZ& w, bool pretty) { return dump(weight_json(w), pretty); }

std::string weight_to_json(const WeightFp& w, bool pretty) {
  return dump(json{{"p", w.p.value()}, {"values", w.values}}, pretty);
}

WeightZ weight_from_json(const std::string& text) {
  const json j = parse(text);
  const PrimeModulus p = modulus_field(j);
  return WeightZ(p, values_field(j, p));
}

WeightFp weight_fp_from_json(const std::string& text) {
  const json j = parse(text);
  const PrimeModulus p = modulus_field(j);
  std::vector<long long> raw = values_field(j, p);
  std::vector<int32_t> vals;
  vals.reserve(raw.size());
  for (long long v : raw) {
    if (v < 0 || v >= p.value()) {
      throw JsonError("field \"values\" must hold residues in [0, p) for an F_p weight");
    }
    vals.push_back(static_cast<int32_t>(v));
  }
  return WeightFp(p, std::move(vals));
}

std::string poly_to_json(const ReducedPoly& q, bool pretty) {
  json coeffs = json::array();
  const int n = q.p.value();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (q.coeff(i, j, k) != 0) coeffs.push_back(json::array({i, j, k, q.coeff(i, j, k)}));
      }
  return dump(json{{"p", n}, {"coeffs", coeffs}}, pretty);
}

ReducedPoly poly_from_json(const std::string& text) {
  const json j = parse(text);
  const PrimeModulus p = modulus_field(j);
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw JsonError("field \"coeffs\" must be an array");
  ReducedPoly q = ReducedPoly::zero(p);
  for (const json& e : coeffs) {
    if (!e.is_array() || e.size() != 4) {
      throw JsonError("field \"coeffs\" entries must be [i, j, k, c] quadruples");
    }
    const int i = e[0].get<int>();
    const int jj = e[1].get<int>();
    const int k = e[2].get<int>();
    const int c = e[3].get<int>();
    if (i < 0 || i >= p.value() || jj < 0 || jj >= p.value() || k < 0 || k >= p.value()) {
      throw JsonError("field \"coeffs\" has an exponent outside [0, p)");
    }
    if (c < 0 || c >= p.value()) throw JsonError("field \"coeffs\" has a coefficient outside [0, p)");
    q.coeffs[(i * p.value() + jj) * p.value() + k] = c;
  }
  return q;
}

std::string combination_to_json(const SpanFamily& family, const FpCombination& comb,
                                const WeightFp& target, bool pretty) {
  json terms = json::array();
  for (const auto& [index, coeff] : comb.terms) {
    terms.push_back(json::array({generator_key(family, index), coeff}));
  }
  const json j{{"p", comb.p.value()},
               {"family", family_name(comb.family)},
               {"target", json{{"p", target.p.value()}, {"values", target.values}}},
               {"terms", terms}};
  return dump(j, pretty);
}

FpCombination combination_from_json(const std::string& text, const SpanFamily& family) {
  const json j = parse(text);
  const PrimeModulus p = modulus_field(j);
  if (!(p == family.p)) throw JsonError("field \"p\" does not match the family modulus");
  const json& fam = field(j, "family");
  if (!fam.is_string() || family_from_name(fam.get<std::string>()) != family.tag) {
    throw JsonError("field \"family\" does not match the expected generator family");
  }
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw JsonError("field \"terms\" must be an array");
  FpCombination comb{p, family.tag, {}};
  for (const json& e : terms) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_integer()) {
      throw JsonError("field \"terms\" entries must be [generator-key, coefficient] pairs");
    }
    const int coeff = e[1].get<int>();
    if (coeff < 0 || coeff >= p.value()) {
      throw JsonError("field \"terms\" has a coefficient outside [0, p)");
    }
    comb.terms.emplace_back(generator_index_from_key(family, e[0].get<std::string>()), coeff);
  }
  return comb;
}

std::string certificate_to_json(const ZCertificate& cert, bool pretty) {
  json diffs = json::array();
  for (const auto& [l1, l2, coeff] : cert.diff_terms) {
    diffs.push_back(json::array({to_text(cert.p, l1), to_text(cert.p, l2), coeff}));
  }
  json base;
  if (cert.base_plane) base = to_text(cert.p, *cert.base_plane);
  const json j{{"p", cert.p.value()},
               {"base_plane", base},
               {"diffs", diffs},
               {"target", weight_json(cert.declared_target)}};
  return dump(j, pretty);
}

ZCertificate certificate_from_json(const std::string& text) {
  const json j = parse(text);
  const PrimeModulus p = modulus_field(j);
  const json& base = field(j, "base_plane");
  std::optional<Plane> base_plane;
  if (!base.is_null()) {
    if (!base.is_string()) throw JsonError("field \"base_plane\" must be a plane key or null");
    base_plane = plane_from_text(base.get<std::string>(), p);
  }
  const json& diffs = field(j, "diffs");
  if (!diffs.is_array()) throw JsonError("field \"diffs\" must be an array");
  std::vector<std::tuple<Line, Line, long long>> terms;
  for (const json& e : diffs) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
        !e[2].is_number_integer()) {
      throw JsonError("field \"diffs\" entries must be [line-key, line-key, coefficient]");
    }
    terms.emplace_back(line_from_text(e[0].get<std::string>(), p),
                       line_from_text(e[1].get<std::string>(), p), e[2].get<long long>());
  }
  const json& target = field(j, "target");
  const PrimeModulus tp = modulus_field(target);
  if (!(tp == p)) throw JsonError("field \"target\" carries a different modulus");
  WeightZ target_w(tp, values_field(target, tp));
  return ZCertificate{p, base_plane, std::move(terms), std::move(target_w)};
}

std::string divisibility_to_json(const PrimeModulus& p, const DivisibilityReport& report,
                                 bool pretty) {
  json j{{"divisible", report.divisible}};
  if (report.witness_plane) {
    j["witness"] = json{{"plane", to_text(p, *report.witness_plane)}, {"sum", report.witness_sum}};
  } else {
    j["witness"] = nullptr;
  }
  return dump(j, pretty);
}

std::string search_report_to_json(const SearchReport& report, bool pretty) {
  json violations = json::array();
  for (const WeightZ& w : report.violations) violations.push_back(weight_json(w));
  json best;
  if (report.best) {
    best = json{{"weight", weight_json(report.best->first)}, {"support", report.best->second}};
  }
  const json j{{"p", report.p.value()},
               {"candidates_examined", report.candidates_examined},
               {"divisible_count", report.divisible_count},
               {"violations", violations},
               {"best", best},
               {"elapsed_ms", report.elapsed_ms}};
  return dump(j, pretty);
}

}  // namespace cylinderlab
