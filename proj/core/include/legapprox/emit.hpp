#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "legapprox/harness.hpp"

namespace legapprox {

enum class EmitFormat { Csv, Json, Svg };

/// "csv", "json" or "svg"; throws ParseError otherwise.
EmitFormat parse_format(std::string_view name);

// CSV columns: n,err_P,err_T,err_B,ratio_P,ratio_T,scaled_ratio_P, floats
// with 17 significant digits.
std::string to_csv(const RateReport& r);
std::string to_csv(const PointwiseTable& t);

std::string to_json(const RateReport& r);
std::string to_json(const PointwiseTable& t);
RateReport rate_report_from_json(std::string_view text);
PointwiseTable pointwise_table_from_json(std::string_view text);

/// Static plot with one polyline per error series; log-log axes when
/// r.log_log, otherwise a logarithmic error axis against linear n.
std::string to_svg(const RateReport& r);
std::string to_svg(const PointwiseTable& t);

/// Writes the report; throws IoError naming the path on failure.
void emit(const RateReport& r, EmitFormat format,
          const std::filesystem::path& path);
void emit(const PointwiseTable& t, EmitFormat format,
          const std::filesystem::path& path);

}  // namespace legapprox
