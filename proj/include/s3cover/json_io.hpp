#pragma once

// JSON documents exchanged by the CLI and the C API.
//
// Rational: JSON integer when the denominator is 1 and the value fits in
// int64, otherwise a string "p" or "p/q". Parsing accepts all three forms.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "s3cover/algebra.hpp"
#include "s3cover/basis_change.hpp"
#include "s3cover/building_data.hpp"
#include "s3cover/ramification.hpp"
#include "s3cover/representation.hpp"
#include "s3cover/search.hpp"

namespace s3cover::json {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Json encode(const Rational &r);
Rational decode_rational(const Json &j);

Json encode(const AlgebraElement &x);
AlgebraElement decode_element(const Json &j);

Json encode(const CoverParams &p);
CoverParams decode_params(const Json &j);

struct TableDocument {
  MultiplicationTable table;
  std::optional<CoverParams> params;
};

/// { "basis": [...], "params": {...}?, "products": { "1*1": [...], ... } }
Json encode_table(const MultiplicationTable &t, const std::optional<CoverParams> &params);
TableDocument decode_table(const Json &j);

Json encode(const BuildingData &bd);
BuildingData decode_building_data(const Json &j);

/// { "u": ..., "C": [[l1, m1], [l2, m2]] }
Json encode(const BasisChange &bc);
BasisChange decode_basis_change(const Json &j);

Json encode(const Matrix6 &m);
Json encode(const ConstraintReport &r);
Json encode(const AxiomResult &r);
Json encode(const AxiomReport &r);
Json encode(const CompatResidual &r);
Json encode(const PipelineReport &r);
Json encode(const CovarianceReport &r);
Json encode(const std::vector<MinorEntry> &minors);
Json encode(const std::vector<IntegerSolution> &solutions);

/// Parse text; throws FormatError with the parser's message.
Json parse(const std::string &text);

} // namespace s3cover::json
