#include "cechrec/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "cechrec/io.hpp"

namespace cechrec {

using nlohmann::json;

json to_json(const Barcode& barcode) {
  json out = json::array();
  for (const auto& b : barcode.bars())
    out.push_back({{"dim", b.dim}, {"birth", b.birth}, {"death", b.essential() ? json(nullptr) : json(b.death)}});
  return out;
}

Barcode barcode_from_json(const json& j, std::uint32_t characteristic) {
  if (!j.is_array()) throw Error(Errc::ParseError, "barcode JSON must be an array");
  std::vector<Bar> bars;
  for (const auto& item : j) {
    try {
      const double death = item.at("death").is_null() ? kInfinity : item.at("death").get<double>();
      bars.push_back({item.at("dim").get<int>(), item.at("birth").get<double>(), death});
    } catch (const json::exception& e) {
      throw Error(Errc::ParseError, std::string("bad barcode entry: ") + e.what());
    }
  }
  return Barcode(std::move(bars), characteristic);
}

json to_json(const DiagramReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json item{{"name", c.name}, {"alpha", c.alpha}, {"pass", c.pass}};
    if (c.counterexample)
      item["counterexample"] = std::vector<Index>(c.counterexample->vertices().begin(), c.counterexample->vertices().end());
    checks.push_back(std::move(item));
  }
  return json{{"diagram", report.diagram},
              {"alpha", report.alphas},
              {"checks", std::move(checks)},
              {"pass", report.all_pass()},
              {"warnings", report.warnings}};
}

json to_json(const RecoveryReport& report) {
  const auto& p = report.params;
  return json{{"params",
               {{"tau", p.tau}, {"d", p.d}, {"alpha", p.alpha}, {"epsilon", p.epsilon}, {"kmax", p.k_max}, {"field", p.p}}},
              {"betti_claim", report.betti_claim},
              {"barcode", to_json(report.barcode)},
              {"warnings", report.warnings}};
}

void write_barcode_csv(std::ostream& out, const Barcode& barcode) {
  out << "dim,birth,death\n";
  for (const auto& b : barcode.bars())
    out << b.dim << ',' << io::format_double(b.birth) << ',' << (b.essential() ? "inf" : io::format_double(b.death))
        << '\n';
}

namespace {

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string emit_barcode_svg(const Barcode& barcode, std::span<const double> alpha_markers) {
  constexpr double kWidth = 800.0;
  constexpr double kLeft = 60.0;
  constexpr double kRight = 40.0;
  constexpr double kTop = 30.0;
  constexpr double kRow = 12.0;
  constexpr double kGroupGap = 24.0;
  constexpr double kAxisBand = 40.0;

  double x_max = 0.0;
  for (const auto& b : barcode.bars()) {
    x_max = std::max(x_max, b.birth);
    if (!b.essential()) x_max = std::max(x_max, b.death);
  }
  for (double a : alpha_markers) x_max = std::max(x_max, a);
  x_max = x_max > 0.0 ? x_max * 1.1 : 1.0;
  const double plot_right = kWidth - kRight;
  const auto x_of = [&](double v) { return kLeft + (plot_right - kLeft) * v / x_max; };

  std::vector<int> dims;
  for (const auto& b : barcode.bars())
    if (dims.empty() || dims.back() != b.dim) dims.push_back(b.dim);
  const double body = static_cast<double>(barcode.size()) * kRow + static_cast<double>(dims.size()) * kGroupGap;
  const double height = kTop + body + kAxisBand;
  const double axis_y = kTop + body + 10.0;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(kWidth) << "\" height=\"" << px(height)
      << "\" viewBox=\"0 0 " << px(kWidth) << ' ' << px(height) << "\">\n";
  svg << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" orient=\"auto\">"
         "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << px(kWidth) << "\" height=\"" << px(height) << "\" fill=\"white\"/>\n";

  double y = kTop;
  std::size_t i = 0;
  const auto bars = barcode.bars();
  for (int dim : dims) {
    svg << "<text class=\"group\" x=\"8\" y=\"" << px(y + 10.0) << "\" font-size=\"12\">H" << dim << "</text>\n";
    y += kGroupGap / 2.0;
    for (; i < bars.size() && bars[i].dim == dim; ++i) {
      const auto& b = bars[i];
      const double x2 = b.essential() ? plot_right : x_of(b.death);
      svg << "<line class=\"bar\" data-dim=\"" << b.dim << "\" data-birth=\"" << io::format_double(b.birth)
          << "\" data-death=\"" << (b.essential() ? "inf" : io::format_double(b.death)) << "\" x1=\""
          << px(x_of(b.birth)) << "\" y1=\"" << px(y) << "\" x2=\"" << px(x2) << "\" y2=\"" << px(y)
          << "\" stroke=\"black\" stroke-width=\"3\"" << (b.essential() ? " marker-end=\"url(#arrow)\"" : "")
          << "/>\n";
      y += kRow;
    }
    y += kGroupGap / 2.0;
  }

  svg << "<line class=\"axis\" x1=\"" << px(kLeft) << "\" y1=\"" << px(axis_y) << "\" x2=\"" << px(plot_right)
      << "\" y2=\"" << px(axis_y) << "\" stroke=\"black\"/>\n";
  svg << "<line class=\"axis\" x1=\"" << px(kLeft) << "\" y1=\"" << px(kTop - 10.0) << "\" x2=\"" << px(kLeft)
      << "\" y2=\"" << px(axis_y) << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double v = x_max * t / 4.0;
    svg << "<text class=\"tick\" x=\"" << px(x_of(v)) << "\" y=\"" << px(axis_y + 16.0)
        << "\" font-size=\"10\" text-anchor=\"middle\">" << px(v) << "</text>\n";
  }
  for (double a : alpha_markers) {
    svg << "<line class=\"marker\" data-alpha=\"" << io::format_double(a) << "\" x1=\"" << px(x_of(a)) << "\" y1=\""
        << px(kTop - 10.0) << "\" x2=\"" << px(x_of(a)) << "\" y2=\"" << px(axis_y)
        << "\" stroke=\"red\" stroke-dasharray=\"4 3\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cechrec
