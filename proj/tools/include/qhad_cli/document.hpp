#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qhad/adjoint.hpp"
#include "qhad/butson.hpp"
#include "qhad/qmatrix.hpp"
#include "qhad/search.hpp"

namespace qhad::cli {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  enum class Kind { malformed, dimension, non_finite };
  ParseError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Reads {"order": n, "entries": [[[w,x,y,z], ...], ...], "metadata": {...}}.
/// Throws ParseError; the message names the failure kind.
QMatrix parse_matrix(std::string_view text);
Json parse_document(std::string_view text);
QMatrix matrix_from_json(const Json& doc);

/// Canonical output: sorted keys, shortest round-trip floats, two-space indent.
Json matrix_to_json(const QMatrix& h, const Json& metadata = Json::object());
std::string emit_matrix(const QMatrix& h, const Json& metadata = Json::object());
std::string dump(const Json& doc);

Json quaternion_to_json(const Quaternion& q);

/// Complex or real matrices in the same schema, unused components zero.
Json complex_to_json(const ComplexMatrix& m, const Json& metadata = Json::object());
Json real_to_json(const RealMatrix& m, const Json& metadata = Json::object());
/// Throws ParseError (malformed) if an entry has nonzero components beyond
/// the complex (resp. real) part.
ComplexMatrix complex_from_json(const Json& doc, double tol = kDefaultTol);
RealMatrix real_from_json(const Json& doc, double tol = kDefaultTol);

Json report_to_json(const VerificationReport& r);
std::string emit_report(const VerificationReport& r);

Json profile_to_json(const ButsonProfile& p);
Json classification_to_json(const Classification& c);
Json solution_to_json(const CirculantSolution& s);

}  // namespace qhad::cli
