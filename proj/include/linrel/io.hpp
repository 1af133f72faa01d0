#pragma once

#include "linrel/extend.hpp"
#include "linrel/stargraph.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace linrel {

/// Malformed or unreadable input documents.
class InputError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kSchemaVersion = 1;

enum class DocumentKind { kSpan, kOperator, kStar };

/// On-disk description of a relation (JSON, schema_version 1).
///
/// Complex numbers are always [re, im] pairs. A "span" document lists
/// generators of 2n entries (first component, then second); an "operator"
/// document holds an n x n matrix and optional domain generators; a "star"
/// document holds {"leaves": N, "weights": [...]} with n = N + 1.
struct RelationDocument {
  DocumentKind kind = DocumentKind::kSpan;
  Index space_dim = 0;
  Matrix generators;               // span: 2n x k
  Matrix op;                       // operator: n x n
  std::optional<Matrix> domain;    // operator: n x k
  std::optional<StarConfig> star;  // star
};

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j, const std::string& where);
/// Columns of `m` as a list of vectors.
nlohmann::json columns_to_json(const Matrix& m);
Matrix columns_from_json(const nlohmann::json& j, Index length,
                         const std::string& where);
/// +-inf become the strings "inf" / "-inf".
nlohmann::json extended_real(double x);

RelationDocument parse_document(const nlohmann::json& j);
RelationDocument parse_document_text(const std::string& text);
nlohmann::json document_to_json(const RelationDocument& doc);

LinearRelation to_relation(const RelationDocument& doc, const Tolerances& tol = {});

/// Canonical "span" document whose generators are the orthonormal carrier
/// basis of `rel`.
RelationDocument span_document(const LinearRelation& rel);

/// Text form used on stdout: two-space indented JSON with a trailing newline.
std::string dump(const nlohmann::json& j);

/// Extension parameters file (schema_version 1):
/// {"formula": "von_neumann" | "positive_quasi_null",
///  "mode": "isometry" | "contraction",
///  "source": [generators of D, 2n entries each],
///  "map": [rows of V as lists of [re, im]]}
struct ParamsDocument {
  ExtensionKind formula = ExtensionKind::kVonNeumann;
  MapMode mode = MapMode::kIsometry;
  Matrix source;  // 2n x k generators
  Matrix map;
};

ParamsDocument parse_params(const nlohmann::json& j, Index space_dim);
nlohmann::json params_to_json(const ParamsDocument& p);
ExtensionParams to_params(const ParamsDocument& p, const LinearRelation& base,
                          const Tolerances& tol = {});

}  // namespace linrel
