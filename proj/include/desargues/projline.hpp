#pragma once

// The projective line K ∪ {∞}: homogeneous points, homographies, cross-ratio
// and harmonic division.

#include <array>
#include <ostream>
#include <string>
#include <utility>

#include "desargues/field.hpp"

namespace desargues {

/// Point [z : t] of the projective line, normalized so that t = 1 for finite
/// points and the point at infinity is exactly [1 : 0].
template <Scalar S>
class ProjPoint {
 public:
  ProjPoint(S z, S t) : z_(std::move(z)), t_(std::move(t)) {
    if (t_.is_zero()) {
      if (z_.is_zero()) fail(ErrorKind::ZeroVector, "[0 : 0] is not a point");
      z_ = constant_like(z_, 1);
    } else {
      z_ = z_ / t_;
      t_ = constant_like(t_, 1);
    }
  }

  static ProjPoint finite(const S& x) { return ProjPoint(x, constant_like(x, 1)); }
  static ProjPoint infinity(const FieldSpec& field) { return ProjPoint(from_int<S>(field, 1), from_int<S>(field, 0)); }

  const S& z() const noexcept { return z_; }
  const S& t() const noexcept { return t_; }
  bool is_infinite() const { return t_.is_zero(); }
  FieldSpec field() const { return field_of(z_); }

  /// Affine coordinate; InfinitePoint for [1 : 0].
  const S& value() const {
    if (is_infinite()) fail(ErrorKind::InfinitePoint, "point at infinity has no affine coordinate");
    return z_;
  }

  std::string to_string() const { return is_infinite() ? "inf" : z_.to_string(); }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  S z_;
  S t_;
};

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const ProjPoint<S>& p) {
  return os << p.to_string();
}

/// Total order used only to make outputs deterministic: finite points by
/// canonical scalar order, infinity last.
template <Scalar S>
bool canonical_less(const ProjPoint<S>& a, const ProjPoint<S>& b) {
  if (a.is_infinite() || b.is_infinite()) return !a.is_infinite() && b.is_infinite();
  return canonical_less(a.z(), b.z());
}

/// z_a t_b − z_b t_a, which equals a − b when both points are finite.
template <Scalar S>
S bracket(const ProjPoint<S>& a, const ProjPoint<S>& b) {
  return a.z() * b.t() - b.z() * a.t();
}

/// Unordered couple of points; the members may coincide.
template <Scalar S>
struct PointPair {
  ProjPoint<S> first;
  ProjPoint<S> second;

  bool is_doubled() const { return first == second; }
  bool contains(const ProjPoint<S>& p) const { return first == p || second == p; }

  friend bool operator==(const PointPair& a, const PointPair& b) {
    return (a.first == b.first && a.second == b.second) || (a.first == b.second && a.second == b.first);
  }
};

template <Scalar S>
PointPair<S> make_pair_of(const S& x, const S& y) {
  return {ProjPoint<S>::finite(x), ProjPoint<S>::finite(y)};
}

/// 2×2 coefficient array acting on [z : t], scaled so that its first nonzero
/// coefficient (row-major) is 1.
template <Scalar S>
class Homography {
 public:
  Homography(S m00, S m01, S m10, S m11) : m_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)} {
    if ((m_[0] * m_[3] - m_[1] * m_[2]).is_zero()) fail(ErrorKind::SingularHomography, "determinant is zero");
    for (const auto& c : m_) {
      if (!c.is_zero()) {
        S scale = c;
        for (auto& x : m_) x = x / scale;
        break;
      }
    }
  }

  static Homography identity(const FieldSpec& field) {
    return Homography(from_int<S>(field, 1), from_int<S>(field, 0), from_int<S>(field, 0), from_int<S>(field, 1));
  }

  const S& m00() const noexcept { return m_[0]; }
  const S& m01() const noexcept { return m_[1]; }
  const S& m10() const noexcept { return m_[2]; }
  const S& m11() const noexcept { return m_[3]; }

  ProjPoint<S> operator()(const ProjPoint<S>& p) const {
    return ProjPoint<S>(m_[0] * p.z() + m_[1] * p.t(), m_[2] * p.z() + m_[3] * p.t());
  }

  /// (*this ∘ other)(p) = (*this)(other(p)).
  Homography operator*(const Homography& o) const {
    return Homography(m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
                      m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]);
  }

  Homography inverse() const { return Homography(m_[3], -m_[1], -m_[2], m_[0]); }

  std::string to_string() const {
    return "[" + m_[0].to_string() + ", " + m_[1].to_string() + "; " + m_[2].to_string() + ", " + m_[3].to_string() +
           "]";
  }

  friend bool operator==(const Homography&, const Homography&) = default;

 private:
  std::array<S, 4> m_;
};

template <Scalar S>
ProjPoint<S> apply(const Homography<S>& h, const ProjPoint<S>& p) {
  return h(p);
}

/// [x, y; u, v] = ((x−u)(y−v)) / ((x−v)(y−u)), evaluated homogeneously so that
/// ∞ is a legal argument and a legal value.
template <Scalar S>
ProjPoint<S> cross_ratio(const ProjPoint<S>& x, const ProjPoint<S>& y, const ProjPoint<S>& u, const ProjPoint<S>& v) {
  S num = bracket(x, u) * bracket(y, v);
  S den = bracket(x, v) * bracket(y, u);
  if (num.is_zero() && den.is_zero()) fail(ErrorKind::DegenerateQuadruple, "three of the four points coincide");
  return ProjPoint<S>(num, den);
}

template <Scalar S>
bool pairwise_distinct(std::initializer_list<ProjPoint<S>> points) {
  for (auto i = points.begin(); i != points.end(); ++i) {
    for (auto j = i + 1; j != points.end(); ++j) {
      if (*i == *j) return false;
    }
  }
  return true;
}

/// [p1.first, p1.second; p2.first, p2.second] = −1.
template <Scalar S>
bool is_harmonic(const PointPair<S>& p1, const PointPair<S>& p2) {
  if (!pairwise_distinct({p1.first, p1.second, p2.first, p2.second})) {
    fail(ErrorKind::DegenerateQuadruple, "harmonic division needs four distinct points");
  }
  auto cr = cross_ratio(p1.first, p1.second, p2.first, p2.second);
  return cr == ProjPoint<S>::finite(constant_like(cr.z(), -1));
}

namespace detail {

// Columns a·p1, b·p2 with a·p1 + b·p2 = p3: sends ∞ ↦ p1, 0 ↦ p2, 1 ↦ p3.
template <Scalar S>
std::array<S, 4> frame_matrix(const std::array<ProjPoint<S>, 3>& p) {
  S det = p[0].z() * p[1].t() - p[1].z() * p[0].t();
  S a = (p[2].z() * p[1].t() - p[1].z() * p[2].t()) / det;
  S b = (p[0].z() * p[2].t() - p[2].z() * p[0].t()) / det;
  return {a * p[0].z(), b * p[1].z(), a * p[0].t(), b * p[1].t()};
}

}  // namespace detail

/// The unique homography sending src[i] to dst[i].
template <Scalar S>
Homography<S> homography_from_three_points(const std::array<ProjPoint<S>, 3>& src,
                                           const std::array<ProjPoint<S>, 3>& dst) {
  if (!pairwise_distinct({src[0], src[1], src[2]}) || !pairwise_distinct({dst[0], dst[1], dst[2]})) {
    fail(ErrorKind::DegenerateTriple, "the three points must be pairwise distinct");
  }
  auto a = detail::frame_matrix(src);
  auto b = detail::frame_matrix(dst);
  Homography<S> from_frame_src(a[0], a[1], a[2], a[3]);
  Homography<S> from_frame_dst(b[0], b[1], b[2], b[3]);
  return from_frame_dst * from_frame_src.inverse();
}

}  // namespace desargues
