#include "mint/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace mint {

namespace {

std::vector<double> real_parts(const Eigen::ArrayXcd& values) {
  std::vector<double> out(std::size_t(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i) out[std::size_t(i)] = values[i].real();
  return out;
}

std::vector<double> imag_parts(const Eigen::ArrayXcd& values) {
  std::vector<double> out(std::size_t(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i) out[std::size_t(i)] = values[i].imag();
  return out;
}

Eigen::ArrayXcd complex_values(const Json& j) {
  const auto re = j.at("values_re").get<std::vector<double>>();
  const auto im = j.at("values_im").get<std::vector<double>>();
  if (re.size() != im.size())
    raise(ErrorCode::LengthMismatch, "values_re and values_im differ in length");
  Eigen::ArrayXcd values(Eigen::Index(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) values[Eigen::Index(i)] = Complex(re[i], im[i]);
  return values;
}

Json vector_json(const Eigen::VectorXd& v) {
  std::vector<double> out(std::size_t(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[std::size_t(i)] = v[i];
  return Json(out);
}

Json members_json(const SubsetWitness& subset) {
  std::vector<std::int64_t> out(subset.members.size());
  for (std::size_t i = 0; i < subset.members.size(); ++i)
    out[i] = std::int64_t(subset.members[i]);
  return Json(out);
}

Json witnesses_json(const std::vector<SubsetWitness>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(members_json(s));
  return out;
}

}  // namespace

Json space_json(const MeasureSpace& space) {
  std::vector<double> weights(std::size_t(space.size()));
  for (Eigen::Index i = 0; i < space.size(); ++i) weights[std::size_t(i)] = space.weight(i);
  return Json{{"id", space.id()}, {"weights", weights}};
}

MeasureSpace space_from_json(const Json& j) {
  const auto weights = j.at("weights").get<std::vector<double>>();
  Eigen::ArrayXd w(Eigen::Index(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) w[Eigen::Index(i)] = weights[i];
  return MeasureSpace(j.at("id").get<std::string>(), std::move(w));
}

Json kernel_json(const Kernel& kernel) {
  Json spaces = Json::array();
  for (const auto& s : kernel.spaces()) spaces.push_back(space_json(s));
  std::vector<std::int64_t> dims(kernel.dims().size());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = std::int64_t(kernel.dims()[i]);
  return Json{{"arity", kernel.arity()},
              {"dims", dims},
              {"spaces", spaces},
              {"values_re", real_parts(kernel.values())},
              {"values_im", imag_parts(kernel.values())}};
}

Kernel kernel_from_json(const Json& j) {
  std::vector<MeasureSpace> spaces;
  for (const auto& s : j.at("spaces")) spaces.push_back(space_from_json(s));
  Kernel kernel(std::move(spaces), complex_values(j));
  if (j.contains("arity") && j.at("arity").get<int>() != kernel.arity())
    raise(ErrorCode::InvalidInput, "kernel arity field disagrees with the space list");
  return kernel;
}

Json function_json(const SimpleFunction& f) {
  return Json{{"space", space_json(f.space)},
              {"values_re", real_parts(f.values)},
              {"values_im", imag_parts(f.values)}};
}

SimpleFunction function_from_json(const Json& j) {
  return make_function(space_from_json(j.at("space")), complex_values(j));
}

Json claim_json(const EstimateClaim& claim) {
  Json out{{"alpha", vector_json(claim.tuple.entries())},
           {"bound", claim.bound},
           {"provenance", to_string(claim.provenance)},
           {"witness", nullptr}};
  if (claim.witness) out["witness"] = witnesses_json(*claim.witness);
  return out;
}

std::vector<ClaimSpec> claims_from_json(const Json& j) {
  if (!j.is_array()) raise(ErrorCode::InvalidInput, "a claims file holds an array");
  std::vector<ClaimSpec> out;
  for (const auto& entry : j) {
    ClaimSpec spec;
    if (entry.is_array()) {
      spec.alpha = entry.get<std::vector<double>>();
    } else {
      spec.alpha = entry.at("alpha").get<std::vector<double>>();
      if (entry.contains("bound") && !entry.at("bound").is_null())
        spec.bound = entry.at("bound").get<double>();
    }
    out.push_back(std::move(spec));
  }
  return out;
}

Json trace_json(const ProofTrace& trace) {
  Json checks = Json::array();
  for (const auto& c : trace.checks)
    checks.push_back(Json{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok}});
  return Json{{"a_normalized", trace.a_normalized},
              {"bad_index", trace.bad_index},
              {"checks", checks},
              {"epsilon", trace.epsilon},
              {"eprime", members_json(trace.eprime)},
              {"f_re", real_parts(trace.f.values)},
              {"f_im", imag_parts(trace.f.values)},
              {"halves_ok", trace.halves_ok},
              {"lambda_threshold", trace.lambda_threshold},
              {"q", trace.q},
              {"s0_index", trace.s0_index},
              {"split_high", trace.split_high},
              {"split_low", trace.split_low},
              {"witnesses", witnesses_json(trace.witnesses)}};
}

Json report_json(const TheoremReport& report, const ProofTrace* trace) {
  Json claims = Json::array();
  for (const auto& c : report.claims) claims.push_back(claim_json(c));
  Json out{{"A", report.A},
           {"C", report.C},
           {"alpha", vector_json(report.alpha.entries())},
           {"claims", claims},
           {"margin", report.margin},
           {"pass", report.pass},
           {"product_of_bounds", report.product_of_bounds},
           {"thetas", vector_json(report.thetas.thetas())}};
  if (trace) out["trace"] = trace_json(*trace);
  return out;
}

Json region_json(const RegionDescription& region) {
  Json claims = Json::array();
  for (const auto& c : region.claims) claims.push_back(vector_json(c.entries()));
  Json samples = Json::array();
  for (const auto& s : region.samples) samples.push_back(vector_json(s.entries()));
  Json out{{"claims", claims},
           {"delta", region.delta},
           {"facets", nullptr},
           {"resolution", region.resolution},
           {"samples", samples}};
  if (region.facets) {
    Json facets = Json::array();
    for (const auto& f : *region.facets)
      facets.push_back(Json{{"normal", vector_json(f.normal)}, {"offset", f.offset}});
    out["facets"] = facets;
  }
  return out;
}

std::string region_csv(const RegionDescription& region) {
  std::ostringstream out;
  const Eigen::Index dim = region.claims.front().size();
  for (Eigen::Index i = 0; i < dim; ++i) out << 'x' << i << ',';
  out << "inside\n";
  char buffer[64];
  for (const auto& point : region.grid) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      std::snprintf(buffer, sizeof buffer, "%.17g", point.x[i]);
      out << buffer << ',';
    }
    out << (point.inside ? '1' : '0') << '\n';
  }
  return out.str();
}

Json cz_result_json(const CzCheckResult& result) {
  return Json{{"ok", result.ok},
              {"violation", result.violation < 0 ? Json(nullptr) : Json(result.violation)},
              {"kind", result.kind.empty() ? Json(nullptr) : Json(result.kind)},
              {"measured", result.measured},
              {"allowed", result.allowed}};
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::InvalidInput, "cannot open " + path + " for writing");
  out << text;
  if (!out) raise(ErrorCode::InvalidInput, "failed writing " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::InvalidInput, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    raise(ErrorCode::InvalidInput, path + ": " + e.what());
  }
  return j;
}

}  // namespace mint
