#include "bures/record.hpp"

#include <cmath>
#include <cstdio>

#include "bures/linalg.hpp"

namespace bures {

namespace {

void write(const Json& value, std::string& out) {
  switch (value.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        write(item, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) out += ',';
        write(value[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = value.get<double>();
      out += std::isfinite(v) ? format_double(v) : "null";
      break;
    }
    default:
      out += value.dump();
  }
}

}  // namespace

std::string format_double(double value) {
  // "-0" would parse back as the integer 0.
  if (value == 0.0) return "0";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string to_json_text(const Json& value) {
  std::string out;
  write(value, out);
  return out;
}

Json matrix_to_json(const ComplexSquareMatrix& m) {
  Json entries = Json::array();
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) entries.push_back({m(r, c).real(), m(r, c).imag()});
  return entries;
}

Json params_to_json(int n, std::span<const double> coordinates) {
  Json params = Json::object();
  const auto names = coordinate_names(n);
  for (std::size_t i = 0; i < names.size(); ++i) params[std::string(names[i])] = coordinates[i];
  return params;
}

Json density_record(const DensityMatrixParams& p, NormalizationMode mode) {
  const ComplexSquareMatrix rho = density_from_params(p);
  const auto eig = eig_hermitian(rho);
  const MeasureValue measure = bures_joint_density(p, mode);

  Json payload = Json::object();
  payload["type"] = "matrix";
  payload["matrix"] = matrix_to_json(rho);
  payload["eigenvalues"] = Json(std::vector<double>(eig.values().begin(), eig.values().end()));
  payload["bures_density"] = measure.value;
  payload["mode"] = std::string(mode_name(mode));
  payload["boundary_singular"] = measure.boundary_singular;

  Json record = Json::object();
  record["schema_version"] = schema_version;
  record["command"] = "density";
  record["n"] = p.n();
  record["params"] = params_to_json(p.n(), p.coordinates());
  record["payload"] = std::move(payload);
  return record;
}

Json sample_record(int n, const std::vector<DensityMatrixParams>& samples,
                   const SamplerSpec& spec, const SamplerReport& report) {
  Json items = Json::array();
  for (const auto& p : samples) {
    Json item = Json::object();
    item["params"] = params_to_json(n, p.coordinates());
    item["matrix"] = matrix_to_json(density_from_params(p));
    items.push_back(std::move(item));
  }
  Json payload = Json::object();
  payload["type"] = "sample_batch";
  payload["count"] = samples.size();
  payload["seed"] = spec.seed;
  payload["envelope_constant"] = spec.envelope_constant;
  payload["proposals"] = report.proposals;
  payload["samples"] = std::move(items);

  Json record = Json::object();
  record["schema_version"] = schema_version;
  record["command"] = "sample";
  record["n"] = n;
  record["payload"] = std::move(payload);
  return record;
}

Json scalar_record(const std::string& command, int n, const std::string& quantity,
                   const IntegralResult& result, const std::string& unit) {
  Json payload = Json::object();
  payload["type"] = "scalar";
  payload["quantity"] = quantity;
  payload["unit"] = unit;
  payload["value"] = result.value;
  payload["error"] = result.error_estimate;
  payload["method"] = result.method;
  Json resolution = Json::object();
  if (result.method == "mc") {
    resolution["samples"] = result.samples;
    resolution["acceptance_rate"] = result.acceptance_rate;
  } else {
    resolution["points_per_axis"] = result.points_per_axis;
    resolution["reference_points_per_axis"] = result.reference_points_per_axis;
  }
  payload["resolution"] = std::move(resolution);

  Json record = Json::object();
  record["schema_version"] = schema_version;
  record["command"] = command;
  record["n"] = n;
  record["payload"] = std::move(payload);
  return record;
}

std::vector<std::string> csv_header(int n) {
  std::vector<std::string> header;
  for (auto name : coordinate_names(n)) header.emplace_back(name);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const std::string cell = "m" + std::to_string(r) + std::to_string(c);
      header.push_back(cell + "_re");
      header.push_back(cell + "_im");
    }
  return header;
}

std::string csv_row(const DensityMatrixParams& p) {
  std::string row;
  for (double x : p.coordinates()) {
    if (!row.empty()) row += ',';
    row += format_double(x);
  }
  const ComplexSquareMatrix rho = density_from_params(p);
  for (int r = 0; r < rho.dim(); ++r)
    for (int c = 0; c < rho.dim(); ++c) {
      row += ',' + format_double(rho(r, c).real());
      row += ',' + format_double(rho(r, c).imag());
    }
  return row;
}

}  // namespace bures
