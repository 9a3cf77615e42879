#pragma once

// Arbres, involutions of three couples, involutive homographies and their
// classification.
//
// An involution is represented by the symmetric relation
//     α·x·y + β·(x + y) + γ = 0
// extended homogeneously to ∞. Its discriminant Δ = β² − α·γ must not vanish:
// Δ = 0 is the singular map that sends every point onto one fixed point.

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "desargues/projline.hpp"

namespace desargues {

/// Three couples B H, C G, D F.
template <Scalar S>
struct InvolutionConfig {
  std::array<PointPair<S>, 3> pairs;

  std::array<ProjPoint<S>, 6> points() const {
    return {pairs[0].first, pairs[0].second, pairs[1].first, pairs[1].second, pairs[2].first, pairs[2].second};
  }

  friend bool operator==(const InvolutionConfig&, const InvolutionConfig&) = default;
};

template <Scalar S>
struct Arbre {
  ProjPoint<S> souche;
  InvolutionConfig<S> config;
};

template <Scalar S>
class InvolutiveMap {
 public:
  InvolutiveMap(S alpha, S beta, S gamma) : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
    if ((beta_ * beta_ - alpha_ * gamma_).is_zero()) {
      fail(ErrorKind::DegenerateInvolution, "discriminant beta^2 - alpha*gamma vanishes");
    }
    const S& lead = !alpha_.is_zero() ? alpha_ : beta_;
    S scale = lead;
    alpha_ = alpha_ / scale;
    beta_ = beta_ / scale;
    gamma_ = gamma_ / scale;
  }

  /// x ↦ c/x.
  static InvolutiveMap reciprocal(const S& c) {
    return InvolutiveMap(constant_like(c, 1), constant_like(c, 0), -c);
  }

  const S& alpha() const noexcept { return alpha_; }
  const S& beta() const noexcept { return beta_; }
  const S& gamma() const noexcept { return gamma_; }
  S discriminant() const { return beta_ * beta_ - alpha_ * gamma_; }
  FieldSpec field() const { return field_of(alpha_); }

  /// x ↦ −(βx + γ)/(αx + β).
  ProjPoint<S> operator()(const ProjPoint<S>& p) const {
    return ProjPoint<S>(-(beta_ * p.z() + gamma_ * p.t()), alpha_ * p.z() + beta_ * p.t());
  }

  bool pairs(const ProjPoint<S>& x, const ProjPoint<S>& y) const {
    return (alpha_ * x.z() * y.z() + beta_ * (x.z() * y.t() + x.t() * y.z()) + gamma_ * x.t() * y.t()).is_zero();
  }

  Homography<S> homography() const { return Homography<S>(-beta_, -gamma_, alpha_, beta_); }

  std::string to_string() const {
    return "alpha=" + alpha_.to_string() + ", beta=" + beta_.to_string() + ", gamma=" + gamma_.to_string();
  }

  friend bool operator==(const InvolutiveMap&, const InvolutiveMap&) = default;

 private:
  S alpha_;
  S beta_;
  S gamma_;
};

template <Scalar S>
ProjPoint<S> apply(const InvolutiveMap<S>& m, const ProjPoint<S>& p) {
  return m(p);
}

enum class InvolutionKind { Elliptic, Hyperbolic };

template <Scalar S>
struct InvolutionClass {
  InvolutionKind kind;
  std::optional<PointPair<S>> fixed;
};

namespace detail {

template <Scalar S>
using Row = std::array<S, 3>;

// Coefficients of (α, β, γ) in the pairing relation for the couple {x, y}.
template <Scalar S>
Row<S> pairing_row(const PointPair<S>& p) {
  const auto& x = p.first;
  const auto& y = p.second;
  return {x.z() * y.z(), x.z() * y.t() + x.t() * y.z(), x.t() * y.t()};
}

template <Scalar S>
Row<S> cross(const Row<S>& a, const Row<S>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <Scalar S>
S dot(const Row<S>& a, const Row<S>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <Scalar S>
bool is_null(const Row<S>& r) {
  return r[0].is_zero() && r[1].is_zero() && r[2].is_zero();
}

template <Scalar S>
void require_six_distinct_finite(const InvolutionConfig<S>& c) {
  auto pts = c.points();
  for (const auto& p : pts) {
    if (p.is_infinite()) fail(ErrorKind::InfinitePoint, "rectangle form needs six finite points");
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) fail(ErrorKind::CoincidentPoints, "the six points must be pairwise distinct");
    }
  }
}

// (num1 / den1 == num2 / den2) with all denominators nonzero.
template <Scalar S>
bool ratios_equal(const S& num1, const S& den1, const S& num2, const S& den2) {
  return num1 * den2 == num2 * den1;
}

}  // namespace detail

/// Signed rectangles (b−a)(h−a) = (c−a)(g−a) = (d−a)(f−a). Nodes may coincide
/// with each other but not with the souche.
template <Scalar S>
bool is_arbre(const Arbre<S>& arbre) {
  const auto& a = arbre.souche;
  if (a.is_infinite()) fail(ErrorKind::InfinitePoint, "souche must be finite");
  for (const auto& p : arbre.config.points()) {
    if (p.is_infinite()) fail(ErrorKind::InfinitePoint, "nodes must be finite");
    if (p == a) fail(ErrorKind::CoincidentPoints, "a node coincides with the souche");
  }
  const S& av = a.value();
  auto rect = [&](const PointPair<S>& p) { return (p.first.value() - av) * (p.second.value() - av); };
  const auto& ps = arbre.config.pairs;
  return rect(ps[0]) == rect(ps[1]) && rect(ps[1]) == rect(ps[2]);
}

/// The three ratio-of-rectangles identities with signed differences.
template <Scalar S>
bool is_involution_rect(const InvolutionConfig<S>& c) {
  detail::require_six_distinct_finite(c);
  const S& b = c.pairs[0].first.value();
  const S& h = c.pairs[0].second.value();
  const S& cc = c.pairs[1].first.value();
  const S& g = c.pairs[1].second.value();
  const S& d = c.pairs[2].first.value();
  const S& f = c.pairs[2].second.value();
  using detail::ratios_equal;
  // (d−g)(f−g)/((d−c)(f−c)) = (b−g)(h−g)/((b−c)(h−c))
  bool first = ratios_equal<S>((d - g) * (f - g), (d - cc) * (f - cc), (b - g) * (h - g), (b - cc) * (h - cc));
  // (c−f)(g−f)/((c−d)(g−d)) = (b−f)(h−f)/((b−d)(h−d))
  bool second = ratios_equal<S>((cc - f) * (g - f), (cc - d) * (g - d), (b - f) * (h - f), (b - d) * (h - d));
  // (c−h)(g−h)/((c−b)(g−b)) = (d−h)(f−h)/((d−b)(f−b))
  bool third = ratios_equal<S>((cc - h) * (g - h), (cc - b) * (g - b), (d - h) * (f - h), (d - b) * (f - b));
  return first && second && third;
}

/// [b,h;d,c] = [b,h;g,f], [c,g;d,b] = [c,g;h,f], [d,f;c,b] = [d,f;h,g].
template <Scalar S>
bool is_involution_cr(const InvolutionConfig<S>& c) {
  auto pts = c.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) fail(ErrorKind::CoincidentPoints, "the six points must be pairwise distinct");
    }
  }
  const auto& [b, h, cc, g, d, f] = pts;
  return cross_ratio(b, h, d, cc) == cross_ratio(b, h, g, f) && cross_ratio(cc, g, d, b) == cross_ratio(cc, g, h, f) &&
         cross_ratio(d, f, cc, b) == cross_ratio(d, f, h, g);
}

/// The involution through two couples.
template <Scalar S>
InvolutiveMap<S> involution_from_pairs(const PointPair<S>& p1, const PointPair<S>& p2) {
  auto k = detail::cross(detail::pairing_row(p1), detail::pairing_row(p2));
  if (detail::is_null(k)) fail(ErrorKind::DegenerateInvolution, "the two couples coincide; the involution is undetermined");
  if ((k[1] * k[1] - k[0] * k[2]).is_zero()) {
    fail(ErrorKind::DegenerateInvolution, "the couples share a point: only the singular map passes through them");
  }
  return InvolutiveMap<S>(k[0], k[1], k[2]);
}

/// Fits the unique relation α·x·y + β·(x+y) + γ = 0 through the three couples
/// when it exists and is nondegenerate. Coincident members (fixed points) and
/// ∞ are handled homogeneously.
template <Scalar S>
std::optional<InvolutiveMap<S>> fit_involution(const InvolutionConfig<S>& c) {
  std::array<detail::Row<S>, 3> rows{detail::pairing_row(c.pairs[0]), detail::pairing_row(c.pairs[1]),
                                     detail::pairing_row(c.pairs[2])};
  std::optional<detail::Row<S>> kernel;
  for (std::size_t i = 0; i < 3 && !kernel; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      auto k = detail::cross(rows[i], rows[j]);
      if (!detail::is_null(k)) {
        kernel = k;
        break;
      }
    }
  }
  if (!kernel) {
    // All three couples are one couple: take the involution through it that
    // also fixes some point off it.
    const auto& p = c.pairs[0];
    auto field = p.first.field();
    for (long long v = 0;; ++v) {
      auto extra = ProjPoint<S>::finite(from_int<S>(field, v));
      if (p.contains(extra)) continue;
      return involution_from_pairs(p, PointPair<S>{extra, extra});
    }
  }
  for (const auto& r : rows) {
    if (!detail::dot(r, *kernel).is_zero()) return std::nullopt;
  }
  const auto& k = *kernel;
  if ((k[1] * k[1] - k[0] * k[2]).is_zero()) return std::nullopt;
  return InvolutiveMap<S>(k[0], k[1], k[2]);
}

/// Determinant oracle: det of the rows [xy, x+y, 1] vanishes and the fitted
/// relation is nondegenerate.
template <Scalar S>
bool is_involution_det(const InvolutionConfig<S>& c) {
  return fit_involution(c).has_value();
}

/// Partner of ∞: −β/α, or ∞ itself when α = 0.
template <Scalar S>
ProjPoint<S> central_point(const InvolutiveMap<S>& m) {
  return m(ProjPoint<S>::infinity(m.field()));
}

/// Souche of the arbre built on an involution; ∞ (souche at infinity) is a
/// legitimate answer when the map is x ↦ −x − γ/β.
template <Scalar S>
ProjPoint<S> find_souche(const InvolutionConfig<S>& c) {
  auto m = fit_involution(c);
  if (!m) fail(ErrorKind::NotAnInvolution, "the three couples are not in involution");
  return central_point(*m);
}

/// The souche as the solution of (g−a)/(f−a) = (d−g)/(c−f), using couples
/// C G and D F; nullopt when d−g = c−f in this chart.
template <Scalar S>
std::optional<S> souche_by_ratio(const InvolutionConfig<S>& config) {
  const S& c = config.pairs[1].first.value();
  const S& g = config.pairs[1].second.value();
  const S& d = config.pairs[2].first.value();
  const S& f = config.pairs[2].second.value();
  S denom = (d - g) - (c - f);
  if (denom.is_zero()) return std::nullopt;
  return ((d - g) * f - g * (c - f)) / denom;
}

template <Scalar S>
InvolutionClass<S> classify(const InvolutiveMap<S>& m) {
  S delta = m.discriminant();
  if (!is_square(delta)) return {InvolutionKind::Elliptic, std::nullopt};
  S root = sqrt(delta);
  if (m.alpha().is_zero()) {
    auto two = constant_like(delta, 2);
    PointPair<S> fixed{ProjPoint<S>::finite(-m.gamma() / (two * m.beta())), ProjPoint<S>::infinity(m.field())};
    return {InvolutionKind::Hyperbolic, fixed};
  }
  auto k = ProjPoint<S>::finite((-m.beta() + root) / m.alpha());
  auto l = ProjPoint<S>::finite((-m.beta() - root) / m.alpha());
  if (canonical_less(l, k)) std::swap(k, l);
  return {InvolutionKind::Hyperbolic, PointPair<S>{k, l}};
}

template <Scalar S>
PointPair<S> fixed_points(const InvolutiveMap<S>& m) {
  auto cls = classify(m);
  if (cls.kind == InvolutionKind::Elliptic) {
    fail(ErrorKind::Elliptic, "the involution has no fixed point in " + m.field().to_string());
  }
  return *cls.fixed;
}

/// The two central points of a harmonic quadruple seen as an involution in
/// two ways: fixing the first couple (and swapping the second), or fixing the
/// second (and swapping the first).
template <Scalar S>
std::pair<ProjPoint<S>, ProjPoint<S>> reciprocal_souches(const PointPair<S>& p1, const PointPair<S>& p2) {
  for (const auto& p : {p1.first, p1.second, p2.first, p2.second}) {
    if (p.is_infinite()) fail(ErrorKind::InfinitePoint, "reciprocal souches need four finite points");
  }
  if (!is_harmonic(p1, p2)) fail(ErrorKind::NotHarmonic, "the two couples are not harmonic");
  auto fixing = [](const PointPair<S>& p) {
    return involution_from_pairs(PointPair<S>{p.first, p.first}, PointPair<S>{p.second, p.second});
  };
  return {central_point(fixing(p1)), central_point(fixing(p2))};
}

/// Partner of x in the involution through p1 and p2.
template <Scalar S>
ProjPoint<S> sixth_point(const PointPair<S>& p1, const PointPair<S>& p2, const ProjPoint<S>& x) {
  return involution_from_pairs(p1, p2)(x);
}

/// Involution of four points only: the extremes p1 together with the doubled
/// middle nodes p2, which is exactly a harmonic division.
template <Scalar S>
bool is_involution_four(const PointPair<S>& p1, const PointPair<S>& p2) {
  return is_harmonic(p1, p2);
}

namespace detail {

template <Scalar S>
std::size_t shared_count(const InvolutionConfig<S>& a, const InvolutionConfig<S>& b) {
  std::size_t n = 0;
  for (const auto& p : a.pairs) {
    for (const auto& q : b.pairs) {
      if (p == q) {
        ++n;
        break;
      }
    }
  }
  return n;
}

template <Scalar S>
const PointPair<S>& unshared(const InvolutionConfig<S>& a, const InvolutionConfig<S>& b) {
  for (const auto& p : a.pairs) {
    bool found = false;
    for (const auto& q : b.pairs) found = found || p == q;
    if (!found) return p;
  }
  fail(ErrorKind::PreconditionViolated, "no unshared couple");
}

}  // namespace detail

/// Two involutions sharing two couples: the two unshared couples, together with
/// either shared couple, are again in involution. Returns the verdict of that
/// check (true whenever the preconditions hold).
template <Scalar S>
bool completes_involution(const InvolutionConfig<S>& c1, const InvolutionConfig<S>& c2) {
  if (!is_involution_det(c1)) fail(ErrorKind::NotAnInvolution, "first configuration is not an involution");
  if (!is_involution_det(c2)) fail(ErrorKind::NotAnInvolution, "second configuration is not an involution");
  if (detail::shared_count(c1, c2) != 2) {
    fail(ErrorKind::PreconditionViolated, "the configurations must share exactly two couples");
  }
  const auto& n1 = detail::unshared(c1, c2);
  const auto& n2 = detail::unshared(c2, c1);
  bool all = true;
  for (const auto& s : c1.pairs) {
    if (s == n1) continue;
    all = all && is_involution_det(InvolutionConfig<S>{{s, n1, n2}});
  }
  return all;
}

/// Four-point form: when the extremes (D F, C G, B H) are in involution and
/// the middle couples P Q, X Y form an involution with C G and with B H, they
/// form one with D F as well. With doubled middle couples this is the harmonic
/// relation of the fixed points with each extreme couple.
template <Scalar S>
bool completes_involution_four(const InvolutionConfig<S>& extremes, const PointPair<S>& pq, const PointPair<S>& xy) {
  if (!is_involution_det(extremes)) fail(ErrorKind::NotAnInvolution, "extreme couples are not in involution");
  const auto& [df, cg, bh] = extremes.pairs;
  if (!is_involution_det(InvolutionConfig<S>{{pq, xy, cg}}) || !is_involution_det(InvolutionConfig<S>{{pq, xy, bh}})) {
    fail(ErrorKind::PreconditionViolated, "middle couples must form an involution with C G and with B H");
  }
  return is_involution_det(InvolutionConfig<S>{{pq, xy, df}});
}

}  // namespace desargues
