#include "legapprox/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "legapprox/error.hpp"

namespace legapprox {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// NaN has no JSON spelling; it is written as null and read back as NaN.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

double read_number(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN()
                     : j.get<double>();
}

std::vector<double> read_numbers(const json& j) {
  std::vector<double> v;
  for (const auto& x : j) v.push_back(read_number(x));
  return v;
}

json fit_json(const RateFit& f) {
  return {{"slope", number(f.slope)},
          {"intercept", number(f.intercept)},
          {"residual", number(f.residual)},
          {"points", f.points}};
}

RateFit read_fit(const json& j) {
  return {read_number(j.at("slope")), read_number(j.at("intercept")),
          read_number(j.at("residual")), j.at("points").get<int>()};
}

template <class Fn>
auto parse_guarded(std::string_view text, Fn&& fn) {
  try {
    return fn(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << body;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

// --- SVG -------------------------------------------------------------------

struct Series {
  std::string name;
  std::string colour;
  const std::vector<double>* y;
};

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 60;

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string svg_plot(const std::string& title, const std::string& xlabel,
                     const std::vector<double>& x, bool log_x,
                     const std::vector<Series>& series) {
  const auto tx = [&](double v) { return log_x ? std::log10(v) : v; };
  double x0 = std::numeric_limits<double>::infinity();
  double x1 = -x0;
  double y0 = x0;
  double y1 = -x0;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double v = (*s.y)[i];
      if (!(v > 0.0) || !std::isfinite(v) || (log_x && !(x[i] > 0.0))) continue;
      x0 = std::min(x0, tx(x[i]));
      x1 = std::max(x1, tx(x[i]));
      y0 = std::min(y0, std::log10(v));
      y1 = std::max(y1, std::log10(v));
    }
  }
  if (!(x1 > x0)) { x0 = 0; x1 = 1; }
  y0 = std::floor(std::isfinite(y0) ? y0 : -1.0);
  y1 = std::ceil(std::isfinite(y1) ? y1 : 0.0);
  if (!(y1 > y0)) y1 = y0 + 1;
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const auto px = [&](double v) { return kLeft + (tx(v) - x0) / (x1 - x0) * pw; };
  const auto py = [&](double v) {
    return kTop + (y1 - std::log10(v)) / (y1 - y0) * ph;
  };

  std::ostringstream os;
  os.precision(6);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
     << kHeight << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
     << "font-family=\"sans-serif\" font-size=\"16\">" << xml_escape(title)
     << "</text>\n"
     << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
     << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  const int step = std::max(1, static_cast<int>(std::ceil((y1 - y0) / 10)));
  for (int e = static_cast<int>(y0); e <= static_cast<int>(y1); e += step) {
    const double y = kTop + (y1 - e) / (y1 - y0) * ph;
    os << "<line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\""
       << kLeft + pw << "\" y2=\"" << y
       << "\" stroke=\"#ddd\"/>\n<text x=\"" << kLeft - 6 << "\" y=\""
       << y + 4 << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
       << "font-size=\"11\">1e" << e << "</text>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double v = x0 + (x1 - x0) * k / 4;
    const double label = log_x ? std::pow(10.0, v) : v;
    os << "<text x=\"" << kLeft + pw * k / 4 << "\" y=\"" << kTop + ph + 18
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"11\">" << label << "</text>\n";
  }
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 16
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
     << "font-size=\"13\">" << xml_escape(xlabel) << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    os << "<polyline class=\"" << s.name << "\" fill=\"none\" stroke=\""
       << s.colour << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double v = (*s.y)[i];
      if (!(v > 0.0) || !std::isfinite(v) || (log_x && !(x[i] > 0.0))) continue;
      os << (first ? "" : " ") << px(x[i]) << ',' << py(v);
      first = false;
    }
    os << "\"/>\n<text x=\"" << kLeft + pw - 10 << "\" y=\""
       << kTop + 18 + 16 * k << "\" text-anchor=\"end\" fill=\"" << s.colour
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.name
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

EmitFormat parse_format(std::string_view name) {
  if (name == "csv") return EmitFormat::Csv;
  if (name == "json") return EmitFormat::Json;
  if (name == "svg") return EmitFormat::Svg;
  throw ParseError("unknown format '" + std::string(name) +
                   "' (expected csv, json or svg)");
}

std::string to_csv(const RateReport& r) {
  std::string out = "n,err_P,err_T,err_B,ratio_P,ratio_T,scaled_ratio_P\n";
  for (std::size_t i = 0; i < r.degrees.size(); ++i) {
    out += std::to_string(r.degrees[i]);
    for (const auto* col : {&r.err_P, &r.err_T, &r.err_B, &r.ratio_P,
                            &r.ratio_T, &r.scaled_ratio_P}) {
      out += ',';
      out += fmt17((*col)[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_csv(const PointwiseTable& t) {
  std::string out = "x,err_P,err_B\n";
  for (std::size_t i = 0; i < t.x.size(); ++i) {
    out += fmt17(t.x[i]) + ',' + fmt17(t.err_P[i]) + ',' + fmt17(t.err_B[i]) +
           '\n';
  }
  return out;
}

std::string to_json(const RateReport& r) {
  json j = {{"function_label", r.function_label},
            {"degrees", r.degrees},
            {"err_P", numbers(r.err_P)},
            {"err_T", numbers(r.err_T)},
            {"err_B", numbers(r.err_B)},
            {"ratio_P", numbers(r.ratio_P)},
            {"ratio_T", numbers(r.ratio_T)},
            {"scaled_ratio_P", numbers(r.scaled_ratio_P)},
            {"slope_P", fit_json(r.slope_P)},
            {"slope_T", fit_json(r.slope_T)},
            {"slope_B", fit_json(r.slope_B)},
            {"remez_failures", r.remez_failures},
            {"equioscillation", r.equioscillation},
            {"log_log", r.log_log}};
  return j.dump(2) + "\n";
}

std::string to_json(const PointwiseTable& t) {
  json j = {{"function_label", t.function_label},
            {"n", t.n},
            {"x", numbers(t.x)},
            {"err_P", numbers(t.err_P)},
            {"err_B", numbers(t.err_B)},
            {"max_P", number(t.max_P)},
            {"argmax_P", number(t.argmax_P)},
            {"levelled_B", number(t.levelled_B)}};
  return j.dump(2) + "\n";
}

RateReport rate_report_from_json(std::string_view text) {
  return parse_guarded(text, [](const json& j) {
    RateReport r;
    r.function_label = j.at("function_label").get<std::string>();
    r.degrees = j.at("degrees").get<std::vector<int>>();
    r.err_P = read_numbers(j.at("err_P"));
    r.err_T = read_numbers(j.at("err_T"));
    r.err_B = read_numbers(j.at("err_B"));
    r.ratio_P = read_numbers(j.at("ratio_P"));
    r.ratio_T = read_numbers(j.at("ratio_T"));
    r.scaled_ratio_P = read_numbers(j.at("scaled_ratio_P"));
    r.slope_P = read_fit(j.at("slope_P"));
    r.slope_T = read_fit(j.at("slope_T"));
    r.slope_B = read_fit(j.at("slope_B"));
    r.remez_failures = j.at("remez_failures").get<std::vector<int>>();
    r.equioscillation = j.at("equioscillation").get<std::vector<int>>();
    r.log_log = j.at("log_log").get<bool>();
    return r;
  });
}

PointwiseTable pointwise_table_from_json(std::string_view text) {
  return parse_guarded(text, [](const json& j) {
    PointwiseTable t;
    t.function_label = j.at("function_label").get<std::string>();
    t.n = j.at("n").get<int>();
    t.x = read_numbers(j.at("x"));
    t.err_P = read_numbers(j.at("err_P"));
    t.err_B = read_numbers(j.at("err_B"));
    t.max_P = read_number(j.at("max_P"));
    t.argmax_P = read_number(j.at("argmax_P"));
    t.levelled_B = read_number(j.at("levelled_B"));
    return t;
  });
}

std::string to_svg(const RateReport& r) {
  std::vector<double> n(r.degrees.begin(), r.degrees.end());
  return svg_plot("max error: " + r.function_label, "n", n, r.log_log,
                  {{"err_P", "#1f77b4", &r.err_P},
                   {"err_T", "#2ca02c", &r.err_T},
                   {"err_B", "#d62728", &r.err_B}});
}

std::string to_svg(const PointwiseTable& t) {
  return svg_plot("pointwise error: " + t.function_label +
                      ", n = " + std::to_string(t.n),
                  "x", t.x, false,
                  {{"err_P", "#1f77b4", &t.err_P}, {"err_B", "#d62728", &t.err_B}});
}

void emit(const RateReport& r, EmitFormat format,
          const std::filesystem::path& path) {
  switch (format) {
    case EmitFormat::Csv: write_file(path, to_csv(r)); break;
    case EmitFormat::Json: write_file(path, to_json(r)); break;
    case EmitFormat::Svg: write_file(path, to_svg(r)); break;
  }
}

void emit(const PointwiseTable& t, EmitFormat format,
          const std::filesystem::path& path) {
  switch (format) {
    case EmitFormat::Csv: write_file(path, to_csv(t)); break;
    case EmitFormat::Json: write_file(path, to_json(t)); break;
    case EmitFormat::Svg: write_file(path, to_svg(t)); break;
  }
}

}  // namespace legapprox
