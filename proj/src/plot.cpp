#include "fw/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "fw/transforms.hpp"

namespace fw {

namespace {

struct Series {
  std::string label;
  std::string color;
  std::vector<std::array<double, 2>> points;
  bool dashed = false;
};

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

std::string fmt(double v, const char* spec = "%.6g") {
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

double nice_step(double range) {
  const double raw = range / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / mag;
  return (r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0) * mag;
}

void render_chart(const std::string& path, const std::string& title,
                  const std::string& xlabel, const std::string& ylabel,
                  const std::vector<Series>& series) {
  // data ranges over finite points
  double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
  for (const Series& s : series)
    for (const auto& p : s.points) {
      if (!std::isfinite(p[0]) || !std::isfinite(p[1])) continue;
      xmin = std::min(xmin, p[0]);
      xmax = std::max(xmax, p[0]);
      ymin = std::min(ymin, p[1]);
      ymax = std::max(ymax, p[1]);
    }
  if (xmin > xmax) throw std::runtime_error("nothing to plot: no finite samples");
  if (xmax - xmin < 1e-300) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymax - ymin < 1e-300) {
    ymin -= 1.0;
    ymax += 1.0;
  } else {
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
  }

  const double px0 = 70, px1 = 820, py0 = 446, py1 = 48;  // y axis points up
  auto sx = [&](double x) { return px0 + (x - xmin) / (xmax - xmin) * (px1 - px0); };
  auto sy = [&](double y) { return py0 + (y - ymin) / (ymax - ymin) * (py1 - py0); };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write plot: " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"860\" height=\"520\" "
         "viewBox=\"0 0 860 520\" font-family=\"sans-serif\">\n"
         "<rect width=\"860\" height=\"520\" fill=\"white\"/>\n"
         "<text x=\"430\" y=\"26\" text-anchor=\"middle\" font-size=\"16\">"
      << xml_escape(title) << "</text>\n";

  // gridlines and tick labels
  const double xstep = nice_step(xmax - xmin);
  const double ystep = nice_step(ymax - ymin);
  out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-12 * xstep; x += xstep)
    out << "<line x1=\"" << fmt(sx(x), "%.2f") << "\" y1=\"" << py0 << "\" x2=\""
        << fmt(sx(x), "%.2f") << "\" y2=\"" << py1 << "\"/>\n";
  for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax + 1e-12 * ystep; y += ystep)
    out << "<line x1=\"" << px0 << "\" y1=\"" << fmt(sy(y), "%.2f") << "\" x2=\"" << px1
        << "\" y2=\"" << fmt(sy(y), "%.2f") << "\"/>\n";
  out << "</g>\n<g font-size=\"12\" fill=\"#333333\">\n";
  for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-12 * xstep; x += xstep)
    out << "<text x=\"" << fmt(sx(x), "%.2f")
        << "\" y=\"464\" text-anchor=\"middle\">" << fmt(x) << "</text>\n";
  for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax + 1e-12 * ystep; y += ystep)
    out << "<text x=\"64\" y=\"" << fmt(sy(y) + 4, "%.2f")
        << "\" text-anchor=\"end\">" << fmt(y) << "</text>\n";
  out << "</g>\n";

  // axes and labels
  out << "<rect x=\"" << px0 << "\" y=\"" << py1 << "\" width=\"" << px1 - px0
      << "\" height=\"" << py0 - py1
      << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n"
      << "<text x=\"445\" y=\"498\" text-anchor=\"middle\" font-size=\"13\">"
      << xml_escape(xlabel) << "</text>\n"
      << "<text x=\"20\" y=\"247\" text-anchor=\"middle\" font-size=\"13\" "
         "transform=\"rotate(-90 20 247)\">"
      << xml_escape(ylabel) << "</text>\n";

  // series
  for (const Series& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
    if (s.dashed) out << " stroke-dasharray=\"6 4\"";
    out << " points=\"";
    for (const auto& p : s.points) {
      if (!std::isfinite(p[0]) || !std::isfinite(p[1])) continue;
      out << fmt(sx(p[0]), "%.2f") << ',' << fmt(sy(p[1]), "%.2f") << ' ';
    }
    out << "\"/>\n";
  }

  // legend, top-right inside the plot area
  double ly = py1 + 18;
  for (const Series& s : series) {
    out << "<line x1=\"640\" y1=\"" << fmt(ly - 4, "%.1f") << "\" x2=\"668\" y2=\""
        << fmt(ly - 4, "%.1f") << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"";
    if (s.dashed) out << " stroke-dasharray=\"6 4\"";
    out << "/>\n<text x=\"674\" y=\"" << fmt(ly, "%.1f") << "\" font-size=\"12\">"
        << xml_escape(s.label) << "</text>\n";
    ly += 18;
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error("failed writing plot: " + path);
}

std::vector<Series> norms_series(const RunArtifact& a) {
  Series l2{"L2 norm", kPalette[0], {}};
  Series linf{"Linf norm", kPalette[1], {}};
  for (const MonitorRecord& r : a.records) {
    l2.points.push_back({r.t, r.l2});
    linf.points.push_back({r.t, r.linf});
  }
  return {l2, linf};
}

std::vector<Series> slopes_series(const RunArtifact& a) {
  Series m1{"m1 (min slope)", kPalette[0], {}};
  Series m2{"m2 (max slope)", kPalette[1], {}};
  for (const MonitorRecord& r : a.records) {
    m1.points.push_back({r.t, r.slope.min_value});
    m2.points.push_back({r.t, r.slope.max_value});
  }
  return {m1, m2};
}

std::vector<Series> envelope_series(const RunArtifact& a) {
  Series curve{"1/M(t) sampled", kPalette[0], {}};
  for (const MonitorRecord& r : a.records) {
    const double m = r.slope.min_value + 1.0 / 3.0;
    if (m < 0.0) curve.points.push_back({r.t, 1.0 / m});
  }
  std::vector<Series> out;
  if (!curve.points.empty()) out.push_back(std::move(curve));
  if (a.report.m_0 < 0.0) {
    Series line{"1/M(0) + (3/2) t", kPalette[1], {}, true};
    for (const MonitorRecord& r : a.records)
      line.points.push_back({r.t, 1.0 / a.report.m_0 + 1.5 * r.t});
    out.push_back(std::move(line));
  }
  if (out.empty())
    throw std::runtime_error(
        "envelope plot needs records with M(t) = m1 + 1/3 below zero");
  return out;
}

std::vector<Series> profile_series(const RunArtifact& a) {
  if (!a.snapshots)
    throw std::runtime_error(
        "artifact holds no snapshots; rerun with keep_snapshots enabled");
  const RecordedRun& run = *a.snapshots;
  const int count = std::min(6, run.size());
  std::vector<Series> out;
  int prev = -1;
  for (int j = 0; j < count; ++j) {
    const int i = count == 1
                      ? 0
                      : static_cast<int>(std::lround(double(j) * (run.size() - 1) /
                                                     (count - 1)));
    if (i == prev) continue;
    prev = i;
    const Field u = to_field(run.snapshot(i));
    Series s{"t = " + fmt(run.times()[i], "%.4g"), kPalette[j % 6], {}};
    const int n = u.grid.size();
    s.points.reserve(n + 1);
    for (int g = 0; g < n; ++g) s.points.push_back({double(g) / n, u.values[g]});
    s.points.push_back({1.0, u.values[0]});  // close the period
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

void plot_artifact(const RunArtifact& artifact, const std::string& kind,
                   const std::string& path) {
  const std::string title = artifact.scenario.name + " : " + kind;
  if (kind == "norms")
    render_chart(path, title, "t", "norm", norms_series(artifact));
  else if (kind == "slopes")
    render_chart(path, title, "t", "slope extrema", slopes_series(artifact));
  else if (kind == "envelope")
    render_chart(path, title, "t", "1/M", envelope_series(artifact));
  else if (kind == "profile_snapshots")
    render_chart(path, title, "x", "u", profile_series(artifact));
  else
    throw std::invalid_argument("unknown plot kind: " + kind +
                                " (norms, slopes, envelope, profile_snapshots)");
}

}  // namespace fw
