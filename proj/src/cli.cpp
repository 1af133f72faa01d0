#include "linrel/cli.hpp"

#include "linrel/io.hpp"
#include "linrel/transform.hpp"

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace linrel {

using nlohmann::json;

namespace {

struct Options {
  std::string file;
  std::string params_file;
  std::optional<double> alpha;
  std::optional<std::string> beta;
  Tolerances tol;
  std::uint64_t seed = 0;
  int samples = 256;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": malformed JSON: " + e.what());
  }
}

std::string hex64(std::uint64_t v) {
  std::array<char, 17> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(v));
  return buf.data();
}

Complex parse_complex_flag(const std::string& s) {
  double re = 0.0, im = 0.0;
  char tail = 0;
  const int got = std::sscanf(s.c_str(), "%lf,%lf%c", &re, &im, &tail);
  if (got == 2 || (got == 1 && s.find(',') == std::string::npos)) {
    if (std::isfinite(re) && std::isfinite(im)) return {re, im};
  }
  throw InputError("--beta expects 're' or 're,im', got '" + s + "'");
}

json tolerances_json(const Tolerances& t) {
  return {{"rank", t.rank}, {"eq", t.eq}, {"psd", t.psd}, {"orth", t.orth},
          {"cluster", t.cluster}};
}

json relation_json(const LinearRelation& r) {
  return {{"dim", r.dim()}, {"document", document_to_json(span_document(r))}};
}

json spectrum_json(const SpectrumReport& s) {
  auto shape = [](SpectrumShape k) { return k == SpectrumShape::kFinite ? "finite" : "whole_plane"; };
  json eig = json::array();
  for (const Eigenvalue& e : s.eigenvalues) {
    eig.push_back({{"value", complex_to_json(e.value)}, {"multiplicity", e.multiplicity}});
  }
  json extra = json::array();
  for (const Complex z : s.extra_points) extra.push_back(complex_to_json(z));
  json j = {{"point_shape", shape(s.point_shape)}, {"eigenvalues", eig},
            {"note", s.note}};
  if (s.full_computed) {
    j["full_shape"] = shape(s.full_shape);
    j["extra_points"] = extra;
  }
  return j;
}

std::optional<int> eta_of(const LinearRelation& t, const ClassificationReport& c,
                          const Tolerances& tol) {
  if (!c.symmetric) return std::nullopt;
  std::vector<Complex> probes;
  if (c.has_bounds) probes.emplace_back(c.lower_bound - 1.0);
  probes.emplace_back(0.0, 1.0);
  probes.emplace_back(0.0, -1.0);
  return deficiency_index(t, probes, tol);
}

json classification_json(const LinearRelation& t, const Tolerances& tol) {
  const ClassificationReport c = classify(t, tol);
  json j = {{"space_dim", t.space_dim()},
            {"dim", t.dim()},
            {"symmetric", c.symmetric},
            {"selfadjoint", c.selfadjoint},
            {"positive", c.positive},
            {"quasi_null", c.quasi_null},
            {"contraction", c.contraction},
            {"isometry", c.isometry},
            {"norm", extended_real(c.norm)}};
  j["m"] = c.has_bounds ? extended_real(c.lower_bound) : json(nullptr);
  j["M"] = c.has_bounds ? extended_real(c.upper_bound) : json(nullptr);
  const std::optional<int> eta = eta_of(t, c, tol);
  j["eta"] = eta ? json(*eta) : json(nullptr);
  return j;
}

// Checks reported after every extension: selfadjointness, bounds and the
// multiplicity of the eigenvalue at the extension parameter.
json verification_json(const LinearRelation& s, std::optional<double> alpha,
                       const Tolerances& tol) {
  const ClassificationReport c = classify(s, tol);
  json j = {{"symmetric", c.symmetric},
            {"selfadjoint", c.selfadjoint},
            {"positive", c.positive},
            {"quasi_null", c.quasi_null}};
  j["m"] = c.has_bounds ? extended_real(c.lower_bound) : json(nullptr);
  j["M"] = c.has_bounds ? extended_real(c.upper_bound) : json(nullptr);
  if (alpha) j["multiplicity_at_alpha"] = eigen_multiplicity(s, *alpha, tol);
  return j;
}

json cmd_classify(const RelationDocument& doc, const Options& o) {
  return classification_json(to_relation(doc, o.tol), o.tol);
}

json cmd_krein(const RelationDocument& doc, const Options& o) {
  const LinearRelation t = to_relation(doc, o.tol);
  const KreinComponents k = krein_components_check(t, o.tol);
  json j = relation_json(krein(t, o.tol));
  j["component_distances"] = {{"domain", k.domain}, {"range", k.range},
                              {"kernel", k.kernel}, {"multivalued", k.multivalued}};
  return j;
}

json cmd_adjoint(const RelationDocument& doc, const Options& o) {
  const LinearRelation t = to_relation(doc, o.tol);
  const LinearRelation a = adjoint(t, o.tol);
  json j = relation_json(a);
  if (doc.kind == DocumentKind::kStar) {
    // star_adjoint throws ConsistencyError when the closed form disagrees.
    j["closed_form_distance"] = star_adjoint(*doc.star, o.tol).distance(a);
  }
  return j;
}

json cmd_spectrum(const RelationDocument& doc, const Options& o) {
  return spectrum_json(full_spectrum(to_relation(doc, o.tol), o.tol));
}

json cmd_normalize(const RelationDocument& doc, const Options& o) {
  return document_to_json(span_document(to_relation(doc, o.tol)));
}

json cmd_extend(const RelationDocument& doc, const Options& o,
                const std::string& params_text) {
  const int modes = int(o.alpha.has_value()) + int(o.beta.has_value()) +
                    int(!o.params_file.empty());
  if (modes != 1) {
    throw InputError("extend: give exactly one of --alpha, --beta, --params");
  }
  const LinearRelation a = to_relation(doc, o.tol);
  json j;
  if (o.alpha) {
    const LinearRelation s = extend_semibounded(a, *o.alpha, o.tol);
    j = relation_json(s);
    j["verification"] = verification_json(s, *o.alpha, o.tol);
    j["verification"]["eta"] = deficiency_index(
        a, std::array<Complex, 3>{Complex(*o.alpha), Complex(0, 1), Complex(0, -1)}, o.tol);
    j["spectrum"] = spectrum_json(full_spectrum(s, o.tol));
    if (doc.kind == DocumentKind::kStar) {
      j["star_formula_distance"] =
          star_extension_alpha(*doc.star, *o.alpha, o.tol).relation.distance(s);
    }
  } else if (o.beta) {
    if (doc.kind != DocumentKind::kStar) {
      throw InputError("extend: --beta applies to star documents only");
    }
    const Complex beta = parse_complex_flag(*o.beta);
    const LinearRelation s = star_sa_family(*doc.star, beta, o.tol);
    j = relation_json(s);
    j["verification"] = verification_json(s, std::nullopt, o.tol);
    j["verification"]["closure_distance"] =
        star_closure_relation(*doc.star, o.tol).distance(s);
  } else {
    const ParamsDocument pd =
        parse_params(parse_json(params_text, "params file"), a.space_dim());
    const ExtensionParams p = to_params(pd, a, o.tol);
    const LinearRelation s = pd.formula == ExtensionKind::kVonNeumann
                                 ? symmetric_extension_vn(p, o.tol)
                                 : positive_extension_qn(p, o.tol);
    j = relation_json(s);
    j["verification"] = verification_json(s, std::nullopt, o.tol);
    if (is_positive(a, o.tol)) {
      const ExtensionDecomposition d = decompose_extension(s, a, o.samples, o.seed, o.tol);
      const ExtensionChecks& c = d.checks;
      j["verification"]["decomposition"] = {
          {"remainder_dim", d.remainder.dim()},
          {"l_in_adjoint", c.l_in_adjoint},
          {"l_positive", c.l_positive},
          {"joint_positive", c.joint_positive},
          {"samples", c.samples},
          {"sample_violations", c.sample_violations},
          {"base_quasi_null", c.base_quasi_null},
          {"cross_inner_max", c.cross_inner_max},
          {"all_pass", c.all_pass()}};
    }
  }
  return j;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("file", o.file, "relation document (JSON)")->required();
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Finite-dimensional linear relations: classification, transforms, extensions",
               "linrel"};
  app.require_subcommand(1);
  app.add_option("--tol-rank", o.tol.rank, "relative singular value cut")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-eq", o.tol.eq, "projector distance threshold")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-psd", o.tol.psd, "Hermitian form threshold")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for sampled checks");
  app.fallthrough();

  CLI::App* classify_cmd = app.add_subcommand("classify", "classification report");
  CLI::App* krein_cmd = app.add_subcommand("krein", "Krein transform");
  CLI::App* adjoint_cmd = app.add_subcommand("adjoint", "adjoint relation");
  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "spectral data");
  CLI::App* normalize_cmd =
      app.add_subcommand("normalize", "canonical span document of the relation");
  CLI::App* extend_cmd = app.add_subcommand("extend", "selfadjoint / positive extensions");
  for (CLI::App* s : {classify_cmd, krein_cmd, adjoint_cmd, spectrum_cmd, normalize_cmd,
                      extend_cmd}) {
    add_common(s, o);
  }
  extend_cmd->add_option("--alpha", o.alpha, "semi-bounded extension parameter");
  extend_cmd->add_option("--beta", o.beta, "star family parameter, 're,im'");
  extend_cmd->add_option("--params", o.params_file, "extension parameters file");
  extend_cmd->add_option("--samples", o.samples, "sampled pairs in the decomposition check")
      ->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv{"linrel"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  try {
    const std::string text = read_file(o.file);
    std::string params_text;
    std::string digest_input = text;
    if (!o.params_file.empty()) {
      params_text = read_file(o.params_file);
      digest_input += params_text;
    }
    const RelationDocument doc = parse_document(parse_json(text, "relation file"));

    json result;
    if (cmd == classify_cmd) result = cmd_classify(doc, o);
    else if (cmd == krein_cmd) result = cmd_krein(doc, o);
    else if (cmd == adjoint_cmd) result = cmd_adjoint(doc, o);
    else if (cmd == spectrum_cmd) result = cmd_spectrum(doc, o);
    else if (cmd == extend_cmd) result = cmd_extend(doc, o, params_text);
    else {
      // The bare document, so that normalize output is itself an input.
      out << dump(cmd_normalize(doc, o));
      return kExitOk;
    }

    json report = {{"command", name},
                   {"input_digest", "fnv1a64:" + hex64(fnv1a64(digest_input))},
                   {"result", result},
                   {"tolerances", tolerances_json(o.tol)}};
    if (cmd == extend_cmd && !o.params_file.empty()) report["seed"] = o.seed;
    out << dump(report);
    return kExitOk;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DimensionError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitConsistency;
  }
}

}  // namespace linrel
