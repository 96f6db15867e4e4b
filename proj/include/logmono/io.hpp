#pragma once

// JSON ingestion and report serialization. Reports use insertion-ordered
// objects so identical values always serialize to identical bytes.

#include "logmono/extpan.hpp"
#include "logmono/graph_core.hpp"
#include "logmono/pairing.hpp"
#include "logmono/realizations.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace logmono::io {

using Json = nlohmann::ordered_json;

/// Malformed document; the message names the offending key path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::filesystem::path& path);

/// Curve document: exactly {"base_rank", "vertices", "edges"}; unknown keys
/// are rejected at every level. Structural problems raise ParseError;
/// invariant violations are left to validate().
TropicalCurve parse_curve(const Json& doc);
TropicalCurve parse_curve_text(const std::string& text);
TropicalCurve read_curve_file(const std::filesystem::path& path);
Json to_json(const TropicalCurve& curve);

Json to_json(const std::vector<Violation>& violations);
Json to_json(const CycleBasis& basis);
Json to_json(const PairingMatrix& pm);
/// {"h", "entries"} for an integer symmetric matrix.
Json int_matrix_json(const IntMatrix& b);
Json to_json(const MonodromyOperator& op);
Json to_json(const HodgeTable& table);
Json to_json(const WeightDims& dims);
Json to_json(const TorsionRanks& ranks);
Json to_json(const extpan::TorsorReport& report);

PairingMatrix parse_pairing(const Json& doc);
IntMatrix parse_int_matrix(const Json& doc);
MonodromyOperator parse_operator(const Json& doc);
HodgeTable parse_hodge_table(const Json& doc);
extpan::TorsorReport parse_torsor_report(const Json& doc);

/// Cocycle document {"source": [factors], "target": [factors],
/// "table": [[[coords...], ...], ...]}, rows and columns in element order.
extpan::Cocycle parse_cocycle(const Json& doc);
extpan::Cocycle read_cocycle_file(const std::filesystem::path& path);
Json to_json(const extpan::Cocycle& c);

}  // namespace logmono::io
