#include "s3cover/json_io.hpp"

#include <limits>

namespace s3cover::json {

namespace {

const Json &field(const Json &j, const char *key) {
  if (!j.is_object())
    throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

Json encode_witness(const Witness &w) {
  Json out;
  out["at"] = w.labels;
  out["lhs"] = encode(w.lhs);
  out["rhs"] = encode(w.rhs);
  return out;
}

} // namespace

Json encode(const Rational &r) {
  if (r.is_integer()) {
    const mpz_class n = r.numerator();
    if (n.fits_slong_p() && sizeof(long) >= sizeof(std::int64_t))
      return Json(static_cast<std::int64_t>(n.get_si()));
  }
  return Json(r.str());
}

Rational decode_rational(const Json &j) {
  try {
    if (j.is_number_integer())
      return j.is_number_unsigned() ? Rational::parse(std::to_string(j.get<std::uint64_t>()))
                                    : Rational(j.get<std::int64_t>());
    if (j.is_string())
      return Rational::parse(j.get<std::string>());
  } catch (const ArithmeticError &e) {
    throw FormatError(std::string("bad rational: ") + e.what());
  }
  throw FormatError("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json encode(const AlgebraElement &x) {
  Json out = Json::array();
  for (const auto &c : x.coords())
    out.push_back(encode(c));
  return out;
}

AlgebraElement decode_element(const Json &j) {
  if (!j.is_array() || j.size() != kRank)
    throw FormatError("expected an array of 6 rationals, got " + j.dump());
  AlgebraElement x;
  for (std::size_t i = 0; i < kRank; ++i)
    x[i] = decode_rational(j[i]);
  return x;
}

Json encode(const CoverParams &p) {
  Json out = Json::object();
  auto values = p.as_array();
  for (std::size_t i = 0; i < values.size(); ++i)
    out[kCoverParamNames[i]] = encode(values[i]);
  return out;
}

CoverParams decode_params(const Json &j) {
  std::array<Rational, 8> values;
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = decode_rational(field(j, kCoverParamNames[i]));
  return CoverParams::from_array(values);
}

Json encode_table(const MultiplicationTable &t, const std::optional<CoverParams> &params) {
  Json out = Json::object();
  Json basis = Json::array();
  for (auto b : kBasis)
    basis.push_back(std::string(name(b)));
  out["basis"] = basis;
  if (params)
    out["params"] = encode(*params);
  Json products = Json::object();
  for (auto [x, y] : MultiplicationTable::pairs())
    products[MultiplicationTable::key(x, y)] = encode(t.product(x, y));
  out["products"] = products;
  return out;
}

TableDocument decode_table(const Json &j) {
  const Json &basis = field(j, "basis");
  if (!basis.is_array() || basis.size() != kRank)
    throw FormatError("table basis must list 6 names");
  for (std::size_t i = 0; i < kRank; ++i)
    if (!basis[i].is_string() || basis[i].get<std::string>() != name(kBasis[i]))
      throw FormatError("table basis must be [\"1\",\"t\",\"v1\",\"v2\",\"w1\",\"w2\"]");

  TableDocument doc;
  const Json &products = field(j, "products");
  if (!products.is_object())
    throw FormatError("'products' must be an object");
  for (auto [x, y] : MultiplicationTable::pairs()) {
    auto key = MultiplicationTable::key(x, y);
    doc.table.set(x, y, decode_element(field(products, key.c_str())));
  }
  if (products.size() != MultiplicationTable::kEntries)
    throw FormatError("'products' must have exactly 21 entries");
  if (auto it = j.find("params"); it != j.end() && !it->is_null())
    doc.params = decode_params(*it);
  return doc;
}

Json encode(const BuildingData &bd) {
  const std::array<const Rational *, 8> values = {&bd.A, &bd.B, &bd.C, &bd.D,
                                                  &bd.E, &bd.F, &bd.G, &bd.h};
  Json out = Json::object();
  for (std::size_t i = 0; i < values.size(); ++i)
    out[kBuildingDataNames[i]] = encode(*values[i]);
  return out;
}

BuildingData decode_building_data(const Json &j) {
  BuildingData bd;
  const std::array<Rational *, 8> values = {&bd.A, &bd.B, &bd.C, &bd.D,
                                            &bd.E, &bd.F, &bd.G, &bd.h};
  for (std::size_t i = 0; i < values.size(); ++i)
    *values[i] = decode_rational(field(j, kBuildingDataNames[i]));
  return bd;
}

Json encode(const BasisChange &bc) {
  Json out = Json::object();
  out["u"] = encode(bc.u);
  Json c = Json::array();
  for (const auto &row : bc.C)
    c.push_back(Json::array({encode(row[0]), encode(row[1])}));
  out["C"] = c;
  return out;
}

BasisChange decode_basis_change(const Json &j) {
  BasisChange bc;
  bc.u = decode_rational(field(j, "u"));
  const Json &c = field(j, "C");
  if (!c.is_array() || c.size() != 2 || !c[0].is_array() || !c[1].is_array() ||
      c[0].size() != 2 || c[1].size() != 2)
    throw FormatError("'C' must be a 2x2 array");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      bc.C[i][k] = decode_rational(c[i][k]);
  return bc;
}

Json encode(const Matrix6 &m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < kRank; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < kRank; ++k)
      row.push_back(encode(m(i, k)));
    out.push_back(row);
  }
  return out;
}

Json encode(const ConstraintReport &r) {
  Json out = Json::object();
  out["residuals"] = Json::array({encode(r.residual1), encode(r.residual2), encode(r.residual3)});
  out["satisfied"] = r.satisfied();
  out["degenerate"] = r.degenerate;
  return out;
}

Json encode(const AxiomResult &r) {
  Json out = Json::object();
  out["passed"] = r.passed;
  if (r.witness)
    out["witness"] = encode_witness(*r.witness);
  return out;
}

Json encode(const AxiomReport &r) {
  Json out = Json::object();
  out["unit"] = encode(r.unit);
  out["commutativity"] = encode(r.commutativity);
  out["associativity"] = encode(r.associativity);
  out["equivariance"] = encode(r.equivariance);
  out["passed"] = r.all_passed();
  return out;
}

Json encode(const CompatResidual &r) {
  Json out = Json::object();
  out["A1"] = Json::array({encode(r.r1), encode(r.r2)});
  out["A2"] = encode(r.r3);
  out["in_kernel"] = r.in_kernel();
  return out;
}

Json encode(const PipelineReport &r) {
  Json out = Json::object();
  out["params"] = encode(r.params);
  out["building_data"] = encode(r.building);
  out["constraints"] = encode(r.constraints);
  out["compat"] = encode(r.residual);
  out["testers_agree"] = r.testers_agree;
  out["reconstructed"] = r.reconstructed;
  Json mism = Json::array();
  for (const auto &m : r.mismatches)
    mism.push_back({{"entry", m.key}, {"expected", encode(m.expected)}, {"actual", encode(m.actual)}});
  out["mismatches"] = mism;
  out["ok"] = r.ok();
  return out;
}

Json encode(const CovarianceReport &r) {
  Json out = Json::object();
  out["params"] = encode(r.transformed);
  out["constraints_before"] = r.constraints_before;
  out["constraints_after"] = r.constraints_after;
  out["covariant"] = r.covariant;
  if (r.first_failure)
    out["first_failure"] = *r.first_failure;
  out["h_scaling"] = r.h_scaling;
  out["ok"] = r.ok();
  return out;
}

Json encode(const std::vector<MinorEntry> &minors) {
  Json out = Json::array();
  for (const auto &m : minors) {
    Json entry = Json::object();
    entry["rows"] = m.rows;
    entry["value"] = encode(m.value);
    out.push_back(entry);
  }
  return out;
}

Json encode(const std::vector<IntegerSolution> &solutions) {
  Json out = Json::array();
  for (const auto &s : solutions) {
    Json entry = Json::object();
    for (std::size_t i = 0; i < 8; ++i)
      entry[kCoverParamNames[i]] = s.values[i];
    if (s.degenerate)
      entry["degenerate"] = true;
    out.push_back(entry);
  }
  return out;
}

Json parse(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw FormatError(e.what());
  }
}

} // namespace s3cover::json
