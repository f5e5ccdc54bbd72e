#pragma once

// Machine-readable output records (JSON schema_version "1", CSV for sample batches).
//
// Every floating-point value is written with 17 significant digits ("%.17g"), so
// serialize -> parse -> serialize is byte-identical. Matrices are row-major lists of
// [re, im] pairs; CSV rows flatten them row-major with re/im interleaved.

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "bures/euler.hpp"
#include "bures/integrate.hpp"
#include "bures/measure.hpp"

namespace bures {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1";

std::string format_double(double value);

// Compact JSON text with doubles as %.17g; non-finite doubles become null.
std::string to_json_text(const Json& value);

Json matrix_to_json(const ComplexSquareMatrix& m);
Json params_to_json(int n, std::span<const double> coordinates);

Json density_record(const DensityMatrixParams& p, NormalizationMode mode);
Json sample_record(int n, const std::vector<DensityMatrixParams>& samples,
                   const SamplerSpec& spec, const SamplerReport& report);
Json scalar_record(const std::string& command, int n, const std::string& quantity,
                   const IntegralResult& result, const std::string& unit = "1");

std::vector<std::string> csv_header(int n);
std::string csv_row(const DensityMatrixParams& p);

}  // namespace bures
