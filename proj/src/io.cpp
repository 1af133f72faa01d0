#include "linrel/io.hpp"

#include <cmath>
#include <limits>

namespace linrel {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(where + ": missing field '" + key + "'");
  }
  return j.at(key);
}

Index positive_integer(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    throw InputError(where + ": expected a positive integer");
  }
  return static_cast<Index>(j.get<long long>());
}

const char* kind_name(DocumentKind k) {
  switch (k) {
    case DocumentKind::kSpan: return "span";
    case DocumentKind::kOperator: return "operator";
    case DocumentKind::kStar: return "star";
  }
  return "span";
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError(where + ": complex numbers are [re, im] pairs");
  }
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw InputError(where + ": non-finite complex entry");
  }
  return z;
}

json columns_to_json(const Matrix& m) {
  json out = json::array();
  for (Index c = 0; c < m.cols(); ++c) {
    json col = json::array();
    for (Index r = 0; r < m.rows(); ++r) col.push_back(complex_to_json(m(r, c)));
    out.push_back(std::move(col));
  }
  return out;
}

Matrix columns_from_json(const json& j, Index length, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a list of vectors");
  Matrix m(length, static_cast<Index>(j.size()));
  for (std::size_t c = 0; c < j.size(); ++c) {
    const json& col = j[c];
    const std::string at = where + "[" + std::to_string(c) + "]";
    if (!col.is_array() || static_cast<Index>(col.size()) != length) {
      throw InputError(at + ": expected " + std::to_string(length) + " entries");
    }
    for (std::size_t r = 0; r < col.size(); ++r) {
      m(static_cast<Index>(r), static_cast<Index>(c)) = complex_from_json(col[r], at);
    }
  }
  return m;
}

json extended_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

RelationDocument parse_document(const json& j) {
  const std::string where = "relation document";
  if (!j.is_object()) throw InputError(where + ": expected a JSON object");
  const json& version = field(j, "schema_version", where);
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    throw InputError(where + ": unsupported schema_version");
  }
  RelationDocument doc;
  doc.space_dim = positive_integer(field(j, "space_dim", where), where + ".space_dim");
  const json& kind = field(j, "kind", where);
  const std::string k = kind.is_string() ? kind.get<std::string>() : "";
  const Index n = doc.space_dim;
  if (k == "span") {
    doc.kind = DocumentKind::kSpan;
    doc.generators = columns_from_json(field(j, "generators", where), 2 * n,
                                       where + ".generators");
  } else if (k == "operator") {
    doc.kind = DocumentKind::kOperator;
    const json& rows = field(j, "matrix", where);
    if (!rows.is_array() || static_cast<Index>(rows.size()) != n) {
      throw InputError(where + ".matrix: expected " + std::to_string(n) + " rows");
    }
    // Rows parse like columns; transpose afterwards.
    doc.op = columns_from_json(rows, n, where + ".matrix").transpose();
    if (j.contains("domain")) {
      doc.domain = columns_from_json(j.at("domain"), n, where + ".domain");
    }
  } else if (k == "star") {
    doc.kind = DocumentKind::kStar;
    const json& star = field(j, "star", where);
    const Index leaves = positive_integer(field(star, "leaves", where + ".star"),
                                          where + ".star.leaves");
    std::vector<double> weights(static_cast<std::size_t>(leaves), 1.0);
    if (star.contains("weights")) {
      const json& w = star.at("weights");
      if (!w.is_array() || static_cast<Index>(w.size()) != leaves) {
        throw InputError(where + ".star.weights: expected one weight per leaf");
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i].is_number()) {
          throw InputError(where + ".star.weights: weights must be real numbers");
        }
        weights[i] = w[i].get<double>();
        if (weights[i] == 0.0 || !std::isfinite(weights[i])) {
          throw InputError(where + ".star.weights: weights must be nonzero");
        }
      }
    }
    if (leaves < 2) throw InputError(where + ".star.leaves: at least two leaves");
    if (n != leaves + 1) {
      throw InputError(where + ": star space_dim must be leaves + 1");
    }
    doc.star = StarConfig(std::move(weights));
  } else {
    throw InputError(where + ": kind must be \"span\", \"operator\" or \"star\"");
  }
  return doc;
}

RelationDocument parse_document_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j);
}

json document_to_json(const RelationDocument& doc) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["space_dim"] = doc.space_dim;
  j["kind"] = kind_name(doc.kind);
  switch (doc.kind) {
    case DocumentKind::kSpan:
      j["generators"] = columns_to_json(doc.generators);
      break;
    case DocumentKind::kOperator:
      j["matrix"] = columns_to_json(doc.op.transpose());
      if (doc.domain) j["domain"] = columns_to_json(*doc.domain);
      break;
    case DocumentKind::kStar:
      j["star"] = {{"leaves", doc.star->leaves()}, {"weights", doc.star->weights()}};
      break;
  }
  return j;
}

LinearRelation to_relation(const RelationDocument& doc, const Tolerances& tol) {
  switch (doc.kind) {
    case DocumentKind::kSpan:
      return LinearRelation(doc.space_dim, Subspace::span(doc.generators, tol));
    case DocumentKind::kOperator: {
      const Subspace dom = doc.domain ? Subspace::span(*doc.domain, tol)
                                      : Subspace::full(doc.space_dim);
      return LinearRelation::from_operator(doc.op, dom, tol);
    }
    case DocumentKind::kStar:
      return build_star(*doc.star, tol);
  }
  throw InputError("unknown document kind");
}

RelationDocument span_document(const LinearRelation& rel) {
  RelationDocument doc;
  doc.kind = DocumentKind::kSpan;
  doc.space_dim = rel.space_dim();
  doc.generators = rel.carrier().basis();
  return doc;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ParamsDocument parse_params(const json& j, Index space_dim) {
  const std::string where = "params document";
  if (!j.is_object()) throw InputError(where + ": expected a JSON object");
  const json& version = field(j, "schema_version", where);
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    throw InputError(where + ": unsupported schema_version");
  }
  ParamsDocument p;
  const json& formula = field(j, "formula", where);
  if (formula == "von_neumann") {
    p.formula = ExtensionKind::kVonNeumann;
  } else if (formula == "positive_quasi_null") {
    p.formula = ExtensionKind::kPositiveQuasiNull;
  } else {
    throw InputError(where + ".formula: expected \"von_neumann\" or \"positive_quasi_null\"");
  }
  const json& mode = field(j, "mode", where);
  if (mode == "isometry") {
    p.mode = MapMode::kIsometry;
  } else if (mode == "contraction") {
    p.mode = MapMode::kContraction;
  } else {
    throw InputError(where + ".mode: expected \"isometry\" or \"contraction\"");
  }
  p.source = columns_from_json(field(j, "source", where), 2 * space_dim,
                               where + ".source");
  const json& rows = field(j, "map", where);
  if (!rows.is_array()) throw InputError(where + ".map: expected a list of rows");
  if (rows.empty()) {
    p.map = Matrix(0, 0);
  } else {
    const Index cols = rows[0].is_array() ? static_cast<Index>(rows[0].size()) : 0;
    p.map = columns_from_json(rows, cols, where + ".map").transpose();
  }
  return p;
}

json params_to_json(const ParamsDocument& p) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["formula"] = p.formula == ExtensionKind::kVonNeumann ? "von_neumann"
                                                          : "positive_quasi_null";
  j["mode"] = p.mode == MapMode::kIsometry ? "isometry" : "contraction";
  j["source"] = columns_to_json(p.source);
  j["map"] = columns_to_json(p.map.transpose());
  return j;
}

ExtensionParams to_params(const ParamsDocument& p, const LinearRelation& base,
                          const Tolerances& tol) {
  Subspace d = Subspace::span(p.source, tol);
  Matrix map = p.map;
  if (map.size() == 0) map = Matrix(extension_target(base, p.formula, tol).dim(), 0);
  return {base, std::move(d), std::move(map), p.mode};
}

}  // namespace linrel
