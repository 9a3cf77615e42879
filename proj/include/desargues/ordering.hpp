#pragma once

// Order-dependent notions on the affine line over Q: engagement of a souche,
// mingled couples, and the naming of nodes (middle simple/double, extreme
// interior/exterior). Instantiating these over F_p raises UnorderedField.

#include <array>
#include <optional>
#include <vector>

#include "desargues/involution.hpp"

namespace desargues {

enum class Mingling { Meles, Demeles };

enum class NodeKind { MoyenSimple, MoyenDouble, Extreme };

enum class ExtremeSide { Interieur, Exterieur };

/// Label of one couple of an arbre. Sides are set only for extreme couples of
/// an arbre that has a middle couple.
struct NodeLabel {
  NodeKind kind;
  std::optional<ExtremeSide> first_side;
  std::optional<ExtremeSide> second_side;

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

namespace detail {

template <Scalar S>
void require_ordered() {
  if constexpr (!is_ordered_v<S>) {
    fail(ErrorKind::UnorderedField, "order-dependent notions need an ordered field");
  }
}

template <Scalar S>
const S& finite_value(const ProjPoint<S>& p) {
  if (p.is_infinite()) fail(ErrorKind::InfinitePoint, "ordered notions need finite points");
  return p.z();
}

template <Scalar S>
bool strictly_between(const S& x, const S& lo_or_hi, const S& hi_or_lo) {
  if constexpr (is_ordered_v<S>) {
    return (lo_or_hi < x && x < hi_or_lo) || (hi_or_lo < x && x < lo_or_hi);
  } else {
    return false;
  }
}

template <Scalar S>
S distance(const S& a, const S& b) {
  if constexpr (is_ordered_v<S>) {
    return (a - b).abs();
  } else {
    fail(ErrorKind::UnorderedField, "unsigned length needs an ordered field");
  }
}

}  // namespace detail

/// Souche strictly between the two members of the couple.
template <Scalar S>
bool is_engaged(const ProjPoint<S>& souche, const PointPair<S>& pair) {
  detail::require_ordered<S>();
  const S& a = detail::finite_value(souche);
  const S& x = detail::finite_value(pair.first);
  const S& y = detail::finite_value(pair.second);
  if (a == x || a == y) fail(ErrorKind::CoincidentPoints, "souche coincides with a node");
  return detail::strictly_between(a, x, y);
}

/// Meles when the two segments properly interleave; disjoint and nested
/// segments are both Demeles.
template <Scalar S>
Mingling mingled(const PointPair<S>& p1, const PointPair<S>& p2) {
  detail::require_ordered<S>();
  const S& a = detail::finite_value(p1.first);
  const S& b = detail::finite_value(p1.second);
  const S& c = detail::finite_value(p2.first);
  const S& d = detail::finite_value(p2.second);
  if (!pairwise_distinct({p1.first, p1.second, p2.first, p2.second})) {
    fail(ErrorKind::CoincidentPoints, "mingling needs four distinct points");
  }
  bool c_inside = detail::strictly_between(c, a, b);
  bool d_inside = detail::strictly_between(d, a, b);
  return c_inside != d_inside ? Mingling::Meles : Mingling::Demeles;
}

/// The souche is engaged in all three couples or in none.
template <Scalar S>
bool is_arbre_combinatoire(const Arbre<S>& arbre) {
  const auto& ps = arbre.config.pairs;
  bool e0 = is_engaged(arbre.souche, ps[0]);
  return e0 == is_engaged(arbre.souche, ps[1]) && e0 == is_engaged(arbre.souche, ps[2]);
}

/// Any two couples are always mingled, or always unmingled.
template <Scalar S>
bool is_involution_combinatoire(const InvolutionConfig<S>& c) {
  const auto& ps = c.pairs;
  auto m01 = mingled(ps[0], ps[1]);
  return m01 == mingled(ps[0], ps[2]) && m01 == mingled(ps[1], ps[2]);
}

/// Middle couples of an arbre with souche `souche` and signed rectangle
/// `rectangle`: the doubled fixed points when the rectangle is a positive
/// square, the symmetric simple couple when its opposite is one. At most two.
template <Scalar S>
std::vector<PointPair<S>> middle_pairs(const S& souche, const S& rectangle) {
  if constexpr (!is_ordered_v<S>) {
    fail(ErrorKind::UnorderedField, "middle couples need an ordered field");
  } else {
  std::vector<PointPair<S>> out;
  if (rectangle.is_zero()) return out;
  if (rectangle.sign() > 0 && is_square(rectangle)) {
    S r = sqrt(rectangle);
    auto lo = ProjPoint<S>::finite(souche - r);
    auto hi = ProjPoint<S>::finite(souche + r);
    out.push_back({lo, lo});
    out.push_back({hi, hi});
  } else if (rectangle.sign() < 0 && is_square(-rectangle)) {
    S r = sqrt(-rectangle);
    out.push_back({ProjPoint<S>::finite(souche - r), ProjPoint<S>::finite(souche + r)});
  }
  return out;
  }
}

template <Scalar S>
std::array<NodeLabel, 3> classify_nodes(const Arbre<S>& arbre) {
  if constexpr (!is_ordered_v<S>) {
    fail(ErrorKind::UnorderedField, "node names need an ordered field");
  } else {
  const S& a = detail::finite_value(arbre.souche);
  const auto& ps = arbre.config.pairs;
  for (const auto& p : ps) {
    if (p.first == arbre.souche || p.second == arbre.souche) {
      fail(ErrorKind::NotAnArbre, "a node coincides with the souche");
    }
  }
  auto rect = [&](const PointPair<S>& p) {
    return (detail::finite_value(p.first) - a) * (detail::finite_value(p.second) - a);
  };
  if (!(rect(ps[0]) == rect(ps[1]) && rect(ps[1]) == rect(ps[2]))) {
    fail(ErrorKind::NotAnArbre, "the three rectangles at the souche differ");
  }

  std::array<NodeLabel, 3> labels{};
  std::optional<S> middle_radius;
  for (std::size_t i = 0; i < 3; ++i) {
    const S& x = ps[i].first.z();
    const S& y = ps[i].second.z();
    if (x == y) {
      labels[i] = {NodeKind::MoyenDouble, std::nullopt, std::nullopt};
      middle_radius = detail::distance(x, a);
    } else if (detail::distance(x, a) == detail::distance(y, a)) {
      labels[i] = {NodeKind::MoyenSimple, std::nullopt, std::nullopt};
      middle_radius = detail::distance(x, a);
    } else {
      labels[i] = {NodeKind::Extreme, std::nullopt, std::nullopt};
    }
  }
  if (middle_radius) {
    auto side = [&](const S& x) {
      return detail::distance(x, a) < *middle_radius ? ExtremeSide::Interieur : ExtremeSide::Exterieur;
    };
    for (std::size_t i = 0; i < 3; ++i) {
      if (labels[i].kind != NodeKind::Extreme) continue;
      labels[i].first_side = side(ps[i].first.z());
      labels[i].second_side = side(ps[i].second.z());
    }
  }
  return labels;
  }
}

}  // namespace desargues
