#include "pplateau/sunflower.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace pplateau {

namespace {

constexpr double kCx = 240.0;
constexpr double kCy = 230.0;
constexpr double kInner = 90.0;
constexpr double kBulge = 80.0;
constexpr int kSamples = 24;

struct Pt {
  double x, y;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

// Vertex i sits at 90° - 360°·i/k; increasing i runs clockwise on screen.
double vertex_angle(int i, int k) { return M_PI / 2 - 2 * M_PI * i / k; }

Pt polar(double r, double angle) { return {kCx + r * std::cos(angle), kCy - r * std::sin(angle)}; }

std::vector<Pt> inner_edge(int i, int k) {
  std::vector<Pt> pts;
  const double a0 = vertex_angle(i, k), a1 = vertex_angle(i + 1, k);
  for (int s = 0; s <= kSamples; ++s) pts.push_back(polar(kInner, a0 + (a1 - a0) * s / kSamples));
  return pts;
}

std::vector<Pt> outer_arc(int i, int k) {
  std::vector<Pt> pts;
  const double a0 = vertex_angle(i, k), a1 = vertex_angle(i + 1, k);
  for (int s = 0; s <= kSamples; ++s) {
    const double t = static_cast<double>(s) / kSamples;
    pts.push_back(polar(kInner + kBulge * std::sin(M_PI * t), a0 + (a1 - a0) * t));
  }
  return pts;
}

std::string points(const std::vector<Pt>& pts) {
  std::string out;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j) out += ' ';
    out += fmt(pts[j].x) + "," + fmt(pts[j].y);
  }
  return out;
}

// Arrowhead at the middle of a polyline, pointing along it (reversed when
// the chain coefficient is negative).
std::string arrow(const std::vector<Pt>& pts, bool reverse) {
  const std::size_t mid = pts.size() / 2;
  Pt a = pts[mid - 1], b = pts[mid + 1];
  if (reverse) std::swap(a, b);
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len = std::hypot(dx, dy);
  if (len == 0) return {};
  const double ux = dx / len, uy = dy / len;
  const Pt tip{pts[mid].x + 5 * ux, pts[mid].y + 5 * uy};
  const Pt l{pts[mid].x - 5 * ux - 4 * uy, pts[mid].y - 5 * uy + 4 * ux};
  const Pt r{pts[mid].x - 5 * ux + 4 * uy, pts[mid].y - 5 * uy - 4 * ux};
  return "<polygon class=\"arrow\" points=\"" + points({tip, l, r}) + "\"/>\n";
}

std::string label_at(const Pt& p, const std::string& text, const char* cls) {
  return "<text class=\"" + std::string(cls) + "\" x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y) + "\">" + text +
         "</text>\n";
}

std::string regime_name(int a) { return a < 0 ? "T" + std::to_string(a) : "T" + std::to_string(a); }

}  // namespace

std::string render_sunflower_svg(const SunflowerScenario& s, const ClosedForm* solved) {
  const int k = s.petals();
  const PetalClasses pc = classify_petals(s);
  std::vector<const char*> fill(k, "positive");
  for (int i : pc.negatives) fill[i] = "negative";
  for (int i : pc.neutrals) fill[i] = "neutral";

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"520\" viewBox=\"0 0 480 520\">\n"
     << "<style>"
     << ".negative{fill:#7fc97f}.neutral{fill:#f4a6c6}.positive{fill:#d0d0d0}.disk{fill:#fff3c4}"
     << ".edge{fill:none;stroke:#333;stroke-width:2}.dropped{fill:none;stroke:#999;stroke-width:1.5;stroke-dasharray:5,4}"
     << ".arrow{fill:#333}.density{font:11px sans-serif;fill:#a00}.coef{font:12px sans-serif;text-anchor:middle}"
     << ".note{font:13px sans-serif}"
     << "</style>\n";

  for (int i = 0; i < k; ++i) {
    auto region = outer_arc(i, k);
    auto in = inner_edge(i, k);
    region.insert(region.end(), in.rbegin(), in.rend());
    os << "<polygon class=\"" << fill[i] << "\" points=\"" << points(region) << "\"/>\n";
  }
  {
    std::vector<Pt> disk;
    for (int i = 0; i < k; ++i) {
      auto in = inner_edge(i, k);
      disk.insert(disk.end(), in.begin(), in.end() - 1);
    }
    os << "<polygon class=\"disk\" points=\"" << points(disk) << "\"/>\n";
  }

  const Chain& b = s.b;
  for (int i = 0; i < k; ++i) {
    const auto in = inner_edge(i, k);
    const std::int64_t bi = b[s.inner_edges[i]];
    os << "<polyline class=\"edge\" points=\"" << points(in) << "\"/>\n";
    if (bi != 0) os << arrow(in, bi < 0);
    os << label_at(polar(kInner - 14, (vertex_angle(i, k) + vertex_angle(i + 1, k)) / 2), std::to_string(std::llabs(bi)),
                   "density");

    const auto out = outer_arc(i, k);
    const std::int64_t bo = b[s.arcs[i]];
    os << "<polyline class=\"" << (bo == 0 ? "dropped" : "edge") << "\" points=\"" << points(out) << "\"/>\n";
    if (bo != 0) os << arrow(out, bo < 0);
    os << label_at(polar(kInner + kBulge + 12, (vertex_angle(i, k) + vertex_angle(i + 1, k)) / 2),
                   std::to_string(std::llabs(bo)), "density");
  }

  const Chain* shown = solved && !solved->solution.minimizers.empty() ? &solved->solution.minimizers.front() : nullptr;
  for (int i = 0; i < k; ++i) {
    const double mid = (vertex_angle(i, k) + vertex_angle(i + 1, k)) / 2;
    std::string text = "P" + std::to_string(i + 1);
    if (shown) text += " c=" + std::to_string((*shown)[s.petal_cells[i]]);
    os << label_at(polar(kInner + kBulge * 0.45, mid), text, "coef");
  }
  {
    std::string text = "D";
    if (shown) text += " a=" + std::to_string((*shown)[s.disk]);
    os << label_at({kCx, kCy + 4}, text, "coef");
  }

  const Thresholds l = thresholds(s);
  os << label_at({16, 432}, "dD(Phi) = " + s.disk_pairing.str() + (s.partial() ? "  (partial boundary)" : ""), "note");
  os << label_at({16, 452}, "lambda-2 = " + l.lambda_m2.str() + "   lambda-1 = " + l.lambda_m1.str() +
                                "   lambda0 = " + l.lambda_0.str(),
                 "note");
  if (solved) {
    std::string regimes;
    for (int a : solved->regimes) regimes += (regimes.empty() ? "" : ", ") + regime_name(a);
    os << label_at({16, 472}, "regime: " + regimes + "   minimizers: " + std::to_string(solved->solution.minimizers.size()),
                   "note");
    os << label_at({16, 492}, "energy = " + solved->solution.value.energy.str(), "note");
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace pplateau
