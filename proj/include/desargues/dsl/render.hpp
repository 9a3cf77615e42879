#pragma once

// SVG drawing of the couples of a script over Q: a horizontal axis, labelled
// points, one arc above the axis per couple, and a tick for the souche.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include "desargues/dsl/run.hpp"

namespace desargues::dsl {

struct RenderStyle {
  int width = 800;
  int height = 320;
  int axis_y = 250;
  int margin = 20;
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline std::string render(const Script& script, const RenderStyle& style = {}) {
  if (script.field.kind() != FieldKind::Rationals) {
    fail(ErrorKind::UnorderedField, "configurations over " + script.field.to_string() + " are not drawn on a line");
  }
  Environment<Rational> env;
  run_typed(script, env);
  if (env.pair_order.empty()) fail(ErrorKind::NothingToRender, "the script binds no pair");

  std::vector<Rational> xs;
  for (const auto& name : env.pair_order) {
    const auto& p = env.pairs.at(name);
    for (const auto* q : {&p.first, &p.second}) {
      if (!q->is_infinite()) xs.push_back(q->z());
    }
  }
  if (env.souche) xs.push_back(env.souche->z());
  if (xs.empty()) fail(ErrorKind::NothingToRender, "every bound point is at infinity");

  double lo = std::min_element(xs.begin(), xs.end())->to_double();
  double hi = std::max_element(xs.begin(), xs.end())->to_double();
  double span = hi - lo > 0 ? hi - lo : 1.0;
  lo -= 0.1 * span;
  hi += 0.1 * span;
  const double left = style.margin, right = style.width - style.margin;
  auto sx = [&](const Rational& x) { return left + (x.to_double() - lo) / (hi - lo) * (right - left); };
  const double ay = style.axis_y;
  const double max_arc = ay - 2.0 * style.margin;

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(style.width) +
                    "\" height=\"" + std::to_string(style.height) + "\" viewBox=\"0 0 " + std::to_string(style.width) +
                    " " + std::to_string(style.height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<line x1=\"" + detail::num(left) + "\" y1=\"" + detail::num(ay) + "\" x2=\"" + detail::num(right) +
         "\" y2=\"" + detail::num(ay) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  for (const auto& name : env.pair_order) {
    const auto& p = env.pairs.at(name);
    if (p.first.is_infinite() || p.second.is_infinite() || p.is_doubled()) continue;
    double x1 = sx(p.first.z()), x2 = sx(p.second.z());
    double h = std::min(std::abs(x2 - x1) * 0.5, max_arc);
    double mid = (x1 + x2) / 2;
    svg += "<path class=\"arc\" d=\"M " + detail::num(x1) + " " + detail::num(ay) + " Q " + detail::num(mid) + " " +
           detail::num(ay - 2 * h) + " " + detail::num(x2) + " " + detail::num(ay) +
           "\" fill=\"none\" stroke=\"#335\" stroke-width=\"1.2\"/>\n";
    svg += "<text x=\"" + detail::num(mid) + "\" y=\"" + detail::num(ay - h - 4) +
           "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#335\">" + detail::escape(name) + "</text>\n";
  }

  std::set<std::string> drawn;
  for (const auto& name : env.pair_order) {
    const auto& p = env.pairs.at(name);
    for (const auto* q : {&p.first, &p.second}) {
      if (q->is_infinite() || !drawn.insert(q->to_string()).second) continue;
      double x = sx(q->z());
      svg += "<circle class=\"point\" cx=\"" + detail::num(x) + "\" cy=\"" + detail::num(ay) +
             "\" r=\"3.5\" fill=\"black\"/>\n";
      svg += "<text x=\"" + detail::num(x) + "\" y=\"" + detail::num(ay + 18) +
             "\" font-size=\"12\" text-anchor=\"middle\">" + detail::escape(q->to_string()) + "</text>\n";
    }
    if (p.is_doubled() && !p.first.is_infinite()) {
      svg += "<circle class=\"double\" cx=\"" + detail::num(sx(p.first.z())) + "\" cy=\"" + detail::num(ay) +
             "\" r=\"7\" fill=\"none\" stroke=\"#335\"/>\n";
    }
  }

  if (env.souche) {
    double x = sx(env.souche->z());
    svg += "<line class=\"souche\" x1=\"" + detail::num(x) + "\" y1=\"" + detail::num(ay - 12) + "\" x2=\"" +
           detail::num(x) + "\" y2=\"" + detail::num(ay + 12) + "\" stroke=\"#a00\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + detail::num(x) + "\" y=\"" + detail::num(ay + 34) +
           "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#a00\">A</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace desargues::dsl
