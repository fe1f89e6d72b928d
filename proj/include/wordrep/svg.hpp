#ifndef WORDREP_SVG_HPP
#define WORDREP_SVG_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "wordrep/models.hpp"
#include "wordrep/word.hpp"

namespace wordrep {
namespace svg_detail {

inline constexpr double kPi = 3.14159265358979323846;

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline const char* palette(int i) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
                                 "#bcbd22", "#e377c2"};
  return colors[i % 10];
}

inline std::string header(int w, int h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" +
         std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) + "\">\n";
}

}  // namespace svg_detail

/// Chord diagram of a 2-uniform word: points on a circle in word order,
/// one chord per letter. Byte output is deterministic for a fixed input.
inline std::string emit_svg_chords(const Word& w) {
  if (uniformity(w) != 2) throw std::invalid_argument("emit_svg_chords: word must be 2-uniform");
  const int size = 400;
  const double cx = 200, cy = 200, rad = 170;
  size_t total = w.size();
  std::string out = svg_detail::header(size, size);
  out += "<circle cx=\"200\" cy=\"200\" r=\"170\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  auto point = [&](size_t i) {
    double ang = 2.0 * svg_detail::kPi * static_cast<double>(i) / static_cast<double>(total) - svg_detail::kPi / 2;
    return std::pair<double, double>{cx + rad * std::cos(ang), cy + rad * std::sin(ang)};
  };
  std::map<Letter, size_t> first;
  for (size_t i = 0; i < total; ++i) {
    Letter v = w.at(i);
    auto it = first.find(v);
    if (it == first.end()) {
      first[v] = i;
      continue;
    }
    auto [x1, y1] = point(it->second);
    auto [x2, y2] = point(i);
    out += "<line x1=\"" + svg_detail::num(x1) + "\" y1=\"" + svg_detail::num(y1) + "\" x2=\"" +
           svg_detail::num(x2) + "\" y2=\"" + svg_detail::num(y2) + "\" stroke=\"" +
           svg_detail::palette(v - 1) + "\" stroke-width=\"2\"/>\n";
  }
  for (size_t i = 0; i < total; ++i) {
    auto [x, y] = point(i);
    out += "<circle cx=\"" + svg_detail::num(x) + "\" cy=\"" + svg_detail::num(y) +
           "\" r=\"3\" fill=\"#333333\"/>\n";
    out += "<text x=\"" + svg_detail::num(x) + "\" y=\"" + svg_detail::num(y - 8) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + std::to_string(w.at(i)) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

/// Piecewise linear curves of a coloring: the n*r points sit on a convex
/// arc in rank order and each label's points are joined left to right.
inline std::string emit_svg_curves(const Coloring& c) {
  c.validate();
  const int width = 640, height = 400;
  size_t total = c.sequence.size();
  std::string out = svg_detail::header(width, height);
  auto point = [&](size_t i) {
    // convex arc: upper semicircle traversed left to right
    double t = (static_cast<double>(i) + 0.5) / static_cast<double>(total);
    double ang = svg_detail::kPi * (1.0 - t);
    return std::pair<double, double>{320 + 290 * std::cos(ang), 360 - 330 * std::sin(ang)};
  };
  for (Letter v = 1; v <= c.n; ++v) {
    auto pos = c.positions(v);
    std::string path = "<polyline fill=\"none\" stroke=\"";
    path += svg_detail::palette(v - 1);
    path += "\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < pos.size(); ++i) {
      auto [x, y] = point(static_cast<size_t>(pos[i] - 1));
      if (i) path += ' ';
      path += svg_detail::num(x) + "," + svg_detail::num(y);
    }
    path += "\"/>\n";
    out += path;
  }
  for (size_t i = 0; i < total; ++i) {
    auto [x, y] = point(i);
    out += "<circle cx=\"" + svg_detail::num(x) + "\" cy=\"" + svg_detail::num(y) +
           "\" r=\"3\" fill=\"#333333\"/>\n";
    out += "<text x=\"" + svg_detail::num(x) + "\" y=\"" + svg_detail::num(y + 16) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + std::to_string(c.sequence[i]) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

/// Interval diagram: one horizontal bar per vertex, stacked by id over a
/// shared axis.
inline std::string emit_svg_intervals(const IntervalModel& m) {
  m.validate();
  if (m.intervals.empty()) throw std::invalid_argument("emit_svg_intervals: empty model");
  double lo = 0, hi = 0;
  bool start = true;
  for (const auto& [v, iv] : m.intervals) {
    double a = static_cast<double>(iv.first.num) / static_cast<double>(iv.first.den);
    double b = static_cast<double>(iv.second.num) / static_cast<double>(iv.second.den);
    if (start) {
      lo = a;
      hi = b;
      start = false;
    }
    lo = std::min(lo, a);
    hi = std::max(hi, b);
  }
  if (hi <= lo) hi = lo + 1;
  const int width = 640;
  int rows = static_cast<int>(m.intervals.size());
  int height = 40 + rows * 28;
  auto xmap = [&](const Rational& r) {
    double v = static_cast<double>(r.num) / static_cast<double>(r.den);
    return 40 + (v - lo) / (hi - lo) * (width - 80);
  };
  std::string out = svg_detail::header(width, height);
  int row = 0;
  for (const auto& [v, iv] : m.intervals) {
    double y = 30 + row * 28;
    out += "<line x1=\"" + svg_detail::num(xmap(iv.first)) + "\" y1=\"" + svg_detail::num(y) +
           "\" x2=\"" + svg_detail::num(xmap(iv.second)) + "\" y2=\"" + svg_detail::num(y) +
           "\" stroke=\"" + svg_detail::palette(v - 1) + "\" stroke-width=\"6\"/>\n";
    out += "<text x=\"" + svg_detail::num(xmap(iv.first) - 14) + "\" y=\"" + svg_detail::num(y + 4) +
           "\" font-size=\"12\">" + std::to_string(v) + "</text>\n";
    ++row;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace wordrep

#endif
