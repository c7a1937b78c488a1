#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cli.hpp"

namespace latext::cli {
namespace {

constexpr double kSize = 600.0;
constexpr double kMargin = 60.0;
constexpr double kAMin = -0.1, kAMax = 0.7;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Frame {
  double b_max;
  double x(double a) const { return kMargin + (a - kAMin) / (kAMax - kAMin) * (kSize - 2 * kMargin); }
  double y(double b) const { return kSize - kMargin - b / b_max * (kSize - 2 * kMargin); }
};

}  // namespace

std::string plot_domain_svg(const std::vector<std::pair<double, double>>& points) {
  double top = 2.0;
  for (const auto& p : points) top = std::max(top, p.second * 1.1);
  Frame f{std::ceil(top * 2.0) / 2.0};

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 600 600\" width=\"600\" height=\"600\">\n";
  s << "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";

  // F: up the line a = 0, along a^2 + b^2 = 1 to a = 1/2, then back up
  s << "<path d=\"M " << num(f.x(0)) << ' ' << num(f.y(f.b_max));
  constexpr int kArc = 60;
  for (int i = 0; i <= kArc; ++i) {
    double a = 0.5 * i / kArc;
    s << " L " << num(f.x(a)) << ' ' << num(f.y(std::sqrt(1.0 - a * a)));
  }
  s << " L " << num(f.x(0.5)) << ' ' << num(f.y(f.b_max))
    << " Z\" fill=\"#dbe8f5\" stroke=\"#1f4e79\" stroke-width=\"1.5\"/>\n";

  // unit circle beyond the domain, for reference
  s << "<polyline fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"4 3\" points=\"";
  for (int i = 0; i <= kArc; ++i) {
    double a = 0.5 + (kAMax - 0.5) * i / kArc;
    if (i) s << ' ';
    s << num(f.x(a)) << ',' << num(f.y(std::sqrt(std::max(0.0, 1.0 - a * a))));
  }
  s << "\"/>\n";

  // axes and ticks
  s << "<g stroke=\"black\" stroke-width=\"1\">\n";
  s << "<line x1=\"" << num(f.x(kAMin)) << "\" y1=\"" << num(f.y(0)) << "\" x2=\"" << num(f.x(kAMax))
    << "\" y2=\"" << num(f.y(0)) << "\"/>\n";
  s << "<line x1=\"" << num(f.x(0)) << "\" y1=\"" << num(f.y(0)) << "\" x2=\"" << num(f.x(0))
    << "\" y2=\"" << num(f.y(f.b_max)) << "\"/>\n";
  s << "</g>\n";
  s << "<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (double a : {0.0, 0.25, 0.5}) {
    s << "<text x=\"" << num(f.x(a)) << "\" y=\"" << num(f.y(0) + 18) << "\">" << num(a) << "</text>\n";
  }
  for (double b = 0.5; b <= f.b_max + 1e-9; b += 0.5) {
    s << "<text x=\"" << num(f.x(0) - 22) << "\" y=\"" << num(f.y(b) + 4) << "\">" << num(b)
      << "</text>\n";
  }
  s << "<text x=\"" << num(f.x(kAMax) - 10) << "\" y=\"" << num(f.y(0) + 18) << "\">a</text>\n";
  s << "<text x=\"" << num(f.x(0)) << "\" y=\"" << num(kMargin - 12) << "\">b</text>\n";
  s << "</g>\n";

  s << "<g fill=\"#c0392b\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto [a, b] = points[i];
    s << "<circle cx=\"" << num(f.x(a)) << "\" cy=\"" << num(f.y(b)) << "\" r=\"4\"/>\n";
    s << "<text x=\"" << num(f.x(a) + 7) << "\" y=\"" << num(f.y(b) - 7) << "\">" << i + 1
      << "</text>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace latext::cli
