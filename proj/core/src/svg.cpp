#include "rlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rlab/io.hpp"

namespace rlab {

namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

struct LogScale {
  double lo, hi, pix0, pix1;
  double operator()(double v) const {
    const double t = (std::log(v) - lo) / (hi - lo);
    return pix0 + t * (pix1 - pix0);
  }
};

}  // namespace

std::string report_to_svg(const SweepReport& report, const std::string& title) {
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << title << "</text>\n";

  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& p : report.points) {
    if (!(p.grid_value > 0.0) || !(p.error > 0.0)) continue;
    if (first) {
      xmin = xmax = p.grid_value;
      ymin = ymax = p.error;
      first = false;
    }
    xmin = std::min(xmin, p.grid_value);
    xmax = std::max(xmax, p.grid_value);
    ymin = std::min(ymin, p.error);
    ymax = std::max(ymax, p.error);
  }
  if (first) {
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight / 2
        << "\" text-anchor=\"middle\">no positive data</text>\n</svg>\n";
    return svg.str();
  }
  if (xmin == xmax) xmax = xmin * 2;
  if (ymin == ymax) ymax = ymin * 2;
  const LogScale sx{std::log(xmin) - 0.05, std::log(xmax) + 0.05, kLeft, kWidth - kRight};
  const LogScale sy{std::log(ymin) - 0.05, std::log(ymax) + 0.05, kHeight - kBottom, kTop};

  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
      << kWidth - kRight << "\" y2=\"" << kHeight - kBottom
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kHeight - kBottom << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 14
      << "\" text-anchor=\"middle\" font-size=\"12\">grid value (log)</text>\n";
  svg << "<text x=\"18\" y=\"" << (kTop + kHeight - kBottom) / 2
      << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 18 "
      << (kTop + kHeight - kBottom) / 2 << ")\">error (log)</text>\n";

  for (const auto& p : report.points) {
    if (!(p.grid_value > 0.0) || !(p.error > 0.0)) continue;
    const double cx = sx(p.grid_value);
    const double cy = sy(p.error);
    if (p.std_error > 0.0 && p.error - p.std_error > 0.0) {
      svg << "<line x1=\"" << cx << "\" y1=\"" << sy(p.error - p.std_error) << "\" x2=\"" << cx
          << "\" y2=\"" << sy(p.error + p.std_error) << "\" stroke=\"steelblue\"/>\n";
    }
    svg << "<circle cx=\"" << cx << "\" cy=\"" << cy
        << "\" r=\"3\" fill=\"steelblue\"/>\n";
  }

  if (report.fit) {
    const double y0 = std::exp(report.fit->intercept + report.fit->slope * std::log(xmin));
    const double y1 = std::exp(report.fit->intercept + report.fit->slope * std::log(xmax));
    svg << "<line x1=\"" << sx(xmin) << "\" y1=\"" << sy(y0) << "\" x2=\"" << sx(xmax)
        << "\" y2=\"" << sy(y1)
        << "\" stroke=\"crimson\" stroke-width=\"1.5\" data-fit-slope=\""
        << fmt_double(report.fit->slope) << "\"/>\n";
  }

  // dashed theory reference anchored at the first positive point
  {
    double sign = -1.0;
    if (report.kind == "mollify") sign = 1.0;  // error decays with epsilon
    const double slope = sign * report.theory_exponent;
    double ax = 0.0, ay = 0.0;
    for (const auto& p : report.points) {
      if (p.grid_value > 0.0 && p.error > 0.0) {
        ax = p.grid_value;
        ay = p.error;
        break;
      }
    }
    const double y0 = ay * std::pow(xmin / ax, slope);
    const double y1 = ay * std::pow(xmax / ax, slope);
    svg << "<line x1=\"" << sx(xmin) << "\" y1=\"" << sy(y0) << "\" x2=\"" << sx(xmax)
        << "\" y2=\"" << sy(y1)
        << "\" stroke=\"gray\" stroke-dasharray=\"6 4\" data-theory-slope=\""
        << fmt_double(slope) << "\"/>\n";
  }

  svg << "<text x=\"" << kWidth - kRight << "\" y=\"" << kTop - 8
      << "\" text-anchor=\"end\" font-size=\"12\">verdict: " << report.verdict
      << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace rlab
