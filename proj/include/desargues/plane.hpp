#pragma once

// The projective plane over K: points and lines as homogeneous triples,
// conics as symmetric 3×3 matrices, charts that carry a line onto the
// projective line, and the plane constructions built from them.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "desargues/involution.hpp"

namespace desargues {

template <Scalar S>
using Vec3 = std::array<S, 3>;

namespace detail {

struct point_tag {};
struct line_tag {};

template <Scalar S>
Vec3<S> cross3(const Vec3<S>& a, const Vec3<S>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <Scalar S>
S dot3(const Vec3<S>& a, const Vec3<S>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <Scalar S>
bool is_zero3(const Vec3<S>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

template <Scalar S>
Vec3<S> scaled(const Vec3<S>& v, const S& k) {
  return {v[0] * k, v[1] * k, v[2] * k};
}

template <Scalar S>
Vec3<S> sum3(const Vec3<S>& a, const Vec3<S>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

template <Scalar S>
S unsigned_or_signed(const S& x) {
  if constexpr (is_ordered_v<S>) {
    return x.abs();
  } else {
    return x;
  }
}

}  // namespace detail

/// Homogeneous triple scaled so that its last nonzero coordinate is 1.
template <Scalar S, class Tag>
class Homogeneous3 {
 public:
  Homogeneous3(S x, S y, S z) : v_{std::move(x), std::move(y), std::move(z)} {
    for (std::size_t i = 3; i-- > 0;) {
      if (!v_[i].is_zero()) {
        S scale = v_[i];
        for (auto& c : v_) c = c / scale;
        return;
      }
    }
    fail(ErrorKind::ZeroVector, "(0, 0, 0) is not a projective triple");
  }

  explicit Homogeneous3(const Vec3<S>& v) : Homogeneous3(v[0], v[1], v[2]) {}

  const S& x() const noexcept { return v_[0]; }
  const S& y() const noexcept { return v_[1]; }
  const S& z() const noexcept { return v_[2]; }
  const Vec3<S>& coords() const noexcept { return v_; }
  FieldSpec field() const { return field_of(v_[0]); }

  std::string to_string() const {
    return "[" + v_[0].to_string() + " " + v_[1].to_string() + " " + v_[2].to_string() + "]";
  }

  friend bool operator==(const Homogeneous3&, const Homogeneous3&) = default;

 private:
  Vec3<S> v_;
};

template <Scalar S>
using PlanePoint = Homogeneous3<S, detail::point_tag>;

template <Scalar S>
using PlaneLine = Homogeneous3<S, detail::line_tag>;

template <Scalar S, class Tag>
std::ostream& operator<<(std::ostream& os, const Homogeneous3<S, Tag>& v) {
  return os << v.to_string();
}

template <Scalar S>
PlanePoint<S> affine_point(const S& x, const S& y) {
  return PlanePoint<S>(x, y, constant_like(x, 1));
}

template <Scalar S>
bool incident(const PlanePoint<S>& p, const PlaneLine<S>& l) {
  return detail::dot3(p.coords(), l.coords()).is_zero();
}

template <Scalar S>
PlaneLine<S> join(const PlanePoint<S>& p, const PlanePoint<S>& q) {
  auto v = detail::cross3(p.coords(), q.coords());
  if (detail::is_zero3(v)) fail(ErrorKind::CoincidentPoints, "a line needs two distinct points");
  return PlaneLine<S>(v);
}

template <Scalar S>
PlanePoint<S> meet(const PlaneLine<S>& l, const PlaneLine<S>& m) {
  auto v = detail::cross3(l.coords(), m.coords());
  if (detail::is_zero3(v)) fail(ErrorKind::CoincidentPoints, "the two lines coincide");
  return PlanePoint<S>(v);
}

template <Scalar S>
bool canonical_less(const PlanePoint<S>& a, const PlanePoint<S>& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a.coords()[i] == b.coords()[i]) continue;
    return canonical_less(a.coords()[i], b.coords()[i]);
  }
  return false;
}

/// Nondegenerate conic Pᵀ M P = 0, stored as the upper triangle of M.
template <Scalar S>
class Conic {
 public:
  Conic(S m00, S m01, S m02, S m11, S m12, S m22)
      : m_{std::move(m00), std::move(m01), std::move(m02), std::move(m11), std::move(m12), std::move(m22)} {
    if (determinant().is_zero()) fail(ErrorKind::DegenerateConic, "det M = 0");
  }

  /// x² + y² − z² = 0.
  static Conic circle(const FieldSpec& f) {
    auto c = [&](long long n) { return from_int<S>(f, n); };
    return Conic(c(1), c(0), c(0), c(1), c(0), c(-1));
  }

  const S& at(std::size_t i, std::size_t j) const {
    static constexpr std::size_t index[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return m_[index[i][j]];
  }

  const std::array<S, 6>& upper() const noexcept { return m_; }
  FieldSpec field() const { return field_of(m_[0]); }

  S determinant() const {
    const auto& [a, b, c, d, e, f] = m_;
    return a * (d * f - e * e) - b * (b * f - e * c) + c * (b * e - d * c);
  }

  Vec3<S> times(const Vec3<S>& p) const {
    return {at(0, 0) * p[0] + at(0, 1) * p[1] + at(0, 2) * p[2], at(1, 0) * p[0] + at(1, 1) * p[1] + at(1, 2) * p[2],
            at(2, 0) * p[0] + at(2, 1) * p[1] + at(2, 2) * p[2]};
  }

  S bilinear(const Vec3<S>& p, const Vec3<S>& q) const { return detail::dot3(p, times(q)); }
  bool contains(const PlanePoint<S>& p) const { return bilinear(p.coords(), p.coords()).is_zero(); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < 6; ++i) s += (i ? " " : "") + m_[i].to_string();
    return s + "]";
  }

  friend bool operator==(const Conic&, const Conic&) = default;

 private:
  std::array<S, 6> m_;
};

/// Coordinates on a line: [u : s] ↦ s·p0 + u·p1, so t = u/s and ∞ ↦ p1.
template <Scalar S>
class LineChart {
 public:
  LineChart(PlaneLine<S> line, Vec3<S> p0, Vec3<S> p1)
      : line_(std::move(line)), p0_(std::move(p0)), p1_(std::move(p1)), w_(detail::cross3(p0_, p1_)) {
    if (detail::is_zero3(w_)) fail(ErrorKind::CoincidentPoints, "chart points must be distinct");
    if (!detail::dot3(p0_, line_.coords()).is_zero() || !detail::dot3(p1_, line_.coords()).is_zero()) {
      fail(ErrorKind::PreconditionViolated, "chart points must lie on the line");
    }
    for (k_ = 0; w_[k_].is_zero(); ++k_) {
    }
  }

  /// x as coordinate when the line is not vertical, y otherwise; the line at
  /// infinity uses the direction slope.
  static LineChart standard(const PlaneLine<S>& l) {
    const S& a = l.x();
    const S& b = l.y();
    const S& c = l.z();
    S zero = constant_like(a, 0);
    if (!b.is_zero()) return LineChart(l, {zero, -c, b}, {b, -a, zero});
    if (!a.is_zero()) return LineChart(l, {-c, zero, a}, {zero, a, zero});
    S one = constant_like(a, 1);
    return LineChart(l, {one, zero, zero}, {zero, one, zero});
  }

  const PlaneLine<S>& line() const noexcept { return line_; }
  const Vec3<S>& p0() const noexcept { return p0_; }
  const Vec3<S>& p1() const noexcept { return p1_; }

  PlanePoint<S> point(const ProjPoint<S>& t) const {
    return PlanePoint<S>(detail::sum3(detail::scaled(p0_, t.t()), detail::scaled(p1_, t.z())));
  }

  /// Unnormalized (u, s) with P ∝ s·p0 + u·p1; linear in P.
  std::pair<S, S> raw_coordinate(const Vec3<S>& p) const {
    S s = detail::cross3(p, p1_)[k_] / w_[k_];
    S u = detail::cross3(p0_, p)[k_] / w_[k_];
    return {u, s};
  }

  ProjPoint<S> coordinate(const PlanePoint<S>& p) const {
    if (!incident(p, line_)) fail(ErrorKind::PreconditionViolated, "point " + p.to_string() + " is not on the line");
    auto [u, s] = raw_coordinate(p.coords());
    return ProjPoint<S>(u, s);
  }

 private:
  PlaneLine<S> line_;
  Vec3<S> p0_;
  Vec3<S> p1_;
  Vec3<S> w_;
  std::size_t k_ = 0;
};

template <Scalar S>
PlaneLine<S> polar(const Conic<S>& c, const PlanePoint<S>& p) {
  auto v = c.times(p.coords());
  if (detail::is_zero3(v)) fail(ErrorKind::DegenerateConic, "M·p = 0");
  return PlaneLine<S>(v);
}

/// Intersection of a line with a conic, sorted canonically; a tangent line
/// gives one point. Over Q an irrational pair raises NonRationalIntersection,
/// over F_p an irreducible restriction gives no points.
template <Scalar S>
std::vector<PlanePoint<S>> line_conic_points(const Conic<S>& c, const PlaneLine<S>& l) {
  auto chart = LineChart<S>::standard(l);
  const auto& p0 = chart.p0();
  const auto& p1 = chart.p1();
  // Q(s, u) = A s² + 2B s u + C u² on the point s·p0 + u·p1.
  S A = c.bilinear(p0, p0);
  S B = c.bilinear(p0, p1);
  S C = c.bilinear(p1, p1);
  S disc = B * B - A * C;
  std::vector<ProjPoint<S>> roots;
  S one = constant_like(A, 1);
  S zero = constant_like(A, 0);
  if (C.is_zero()) {
    roots.push_back(ProjPoint<S>(one, zero));
    if (!B.is_zero()) roots.push_back(ProjPoint<S>(-A, B + B));
  } else if (disc.is_zero()) {
    roots.push_back(ProjPoint<S>(-B, C));
  } else {
    if (!is_square(disc)) {
      if constexpr (is_ordered_v<S>) {
        fail(ErrorKind::NonRationalIntersection, "discriminant " + disc.to_string() + " is not a square");
      } else {
        return {};
      }
    }
    S r = sqrt(disc);
    roots.push_back(ProjPoint<S>(-B + r, C));
    roots.push_back(ProjPoint<S>(-B - r, C));
  }
  std::vector<PlanePoint<S>> out;
  for (const auto& t : roots) out.push_back(chart.point(t));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// ((1 − t²), 2t, (1 + t²)) on x² + y² = z²; ∞ ↦ (−1, 0, 1).
template <Scalar S>
PlanePoint<S> circle_param(const ProjPoint<S>& t) {
  const S& u = t.z();
  const S& s = t.t();
  S w = s * s + u * u;
  if (w.is_zero()) fail(ErrorKind::DegenerateParameter, "1 + t² = 0 at t = " + t.to_string());
  return PlanePoint<S>(s * s - u * u, (u * s) + (u * s), w);
}

template <Scalar S>
struct Figure1Result {
  PlanePoint<S> b;
  PlanePoint<S> h;
  PlanePoint<S> g;
  bool harmonic;
};

/// g = polar(c) ∩ l; checks that (b, h) and (c, g) divide l harmonically.
template <Scalar S>
Figure1Result<S> figure1_check(const Conic<S>& conic, const PlaneLine<S>& l, const PlanePoint<S>& cpt) {
  if (!incident(cpt, l)) fail(ErrorKind::PreconditionViolated, "the point must lie on the line");
  if (conic.contains(cpt)) fail(ErrorKind::DegenerateConfiguration, "the point lies on the conic");
  auto pol = polar(conic, cpt);
  if (pol == l) fail(ErrorKind::DegenerateConfiguration, "the point is the pole of the line");
  auto bh = line_conic_points(conic, l);
  if (bh.size() != 2) fail(ErrorKind::DegenerateConfiguration, "the line must cut the conic twice");
  auto g = meet(pol, l);
  auto chart = LineChart<S>::standard(l);
  bool harmonic = is_harmonic(PointPair<S>{chart.coordinate(bh[0]), chart.coordinate(bh[1])},
                              PointPair<S>{chart.coordinate(cpt), chart.coordinate(g)});
  return {bh[0], bh[1], g, harmonic};
}

template <Scalar S>
struct QuadrilateralResult {
  // Couples {A, C}, {B, E}, {F, G} in the standard chart of the line.
  InvolutionConfig<S> config;
  bool involution;
  S rectangles_lhs;  // AF·AG / (CF·CG)
  S rectangles_rhs;  // AB·AE / (CB·CE)
  S second_lhs;      // FA·FC / (GA·GC)
  S second_rhs;      // FB·FE / (GB·GE)

  bool first_identity() const { return rectangles_lhs == rectangles_rhs; }
  bool second_identity() const { return second_lhs == second_rhs; }
};

/// Quadrilateral KNVO inscribed in the conic and cut by l. Lengths are
/// unsigned over Q and signed over F_p.
template <Scalar S>
QuadrilateralResult<S> inscribed_quadrilateral(const Conic<S>& conic, const std::array<PlanePoint<S>, 4>& v,
                                               const PlaneLine<S>& l) {
  const auto& [K, N, V, O] = v;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!conic.contains(v[i])) fail(ErrorKind::DegenerateConfiguration, "vertex " + v[i].to_string() + " is off the conic");
    if (incident(v[i], l)) fail(ErrorKind::DegenerateConfiguration, "the line passes through a vertex");
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (v[i] == v[j]) fail(ErrorKind::DegenerateConfiguration, "vertices must be distinct");
    }
  }
  auto fg = line_conic_points(conic, l);
  if (fg.size() != 2) fail(ErrorKind::DegenerateConfiguration, "the line must cut the conic twice");

  auto chart = LineChart<S>::standard(l);
  auto on_l = [&](const PlanePoint<S>& p, const PlanePoint<S>& q) { return chart.coordinate(meet(join(p, q), l)); };
  auto A = on_l(K, N), C = on_l(V, O), B = on_l(K, O), E = on_l(V, N);
  auto F = chart.coordinate(fg[0]), G = chart.coordinate(fg[1]);
  InvolutionConfig<S> config{{PointPair<S>{A, C}, PointPair<S>{B, E}, PointPair<S>{F, G}}};

  for (const auto* p : {&A, &B, &C, &E, &F, &G}) {
    if (p->is_infinite()) fail(ErrorKind::DegenerateConfiguration, "a side is parallel to the line in its chart");
  }
  auto len = [](const ProjPoint<S>& x, const ProjPoint<S>& y) { return detail::unsigned_or_signed(x.z() - y.z()); };
  QuadrilateralResult<S> r{config,
                           is_involution_det(config),
                           len(A, F) * len(A, G) / (len(C, F) * len(C, G)),
                           len(A, B) * len(A, E) / (len(C, B) * len(C, E)),
                           len(F, A) * len(F, C) / (len(G, A) * len(G, C)),
                           len(F, B) * len(F, E) / (len(G, B) * len(G, E))};
  return r;
}

/// Five collinear points with AD·DC = BD·DE; checks BD/DE = AB·BC/(AE·EC) and
/// AD/DC = BA·AE/(BC·CE). Unsigned lengths over Q; over F_p each segment is
/// the signed difference taken from the point named first in the ratio.
template <Scalar S>
bool pappus_lemma_check(const S& d, const S& a, const S& c, const S& b, const S& e) {
  auto seg = [](const S& x, const S& y) { return detail::unsigned_or_signed(x - y); };
  if (!(seg(a, d) * seg(c, d) == seg(b, d) * seg(e, d))) {
    fail(ErrorKind::PreconditionViolated, "rectangles ADC and BDE differ");
  }
  S ed = seg(e, d), cd = seg(c, d), ea_ec = seg(e, a) * seg(e, c), cb_ce = seg(c, b) * seg(c, e);
  if (ed.is_zero() || cd.is_zero() || ea_ec.is_zero() || cb_ce.is_zero()) {
    fail(ErrorKind::PreconditionViolated, "a ratio of the lemma has a zero length below");
  }
  return seg(b, d) / ed == seg(b, a) * seg(b, c) / ea_ec && seg(a, d) / cd == seg(a, b) * seg(a, e) / cb_ce;
}

/// Perspectivity from `center` between the two charted lines, written in
/// chart coordinates.
template <Scalar S>
Homography<S> central_projection(const PlanePoint<S>& center, const LineChart<S>& src, const LineChart<S>& dst) {
  if (incident(center, src.line()) || incident(center, dst.line())) {
    fail(ErrorKind::CenterOnLine, "the center lies on one of the lines");
  }
  if (src.line() == dst.line()) fail(ErrorKind::DegenerateConfiguration, "source and target lines coincide");
  const auto& cv = center.coords();
  const auto& lv = dst.line().coords();
  S cl = detail::dot3(cv, lv);
  // (C × X) × L = (C·L) X − (X·L) C, linear in X.
  auto image = [&](const Vec3<S>& x) {
    return dst.raw_coordinate(detail::sum3(detail::scaled(x, cl), detail::scaled(cv, -detail::dot3(x, lv))));
  };
  auto [u1, s1] = image(src.p1());
  auto [u0, s0] = image(src.p0());
  return Homography<S>(u1, u0, s1, s0);
}

}  // namespace desargues
