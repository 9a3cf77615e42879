#pragma once

// Seeded generators for scalars, points and configurations. Every case of a
// property run gets its own engine derived from (seed, stream, index), so runs
// are reproducible and independent of evaluation order.

#include <cstdint>
#include <random>
#include <vector>

#include "desargues/plane.hpp"

namespace desargues {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t index, std::uint64_t attempt = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32), static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 e(seq);
    return Rng(e());
  }

  long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(engine_); }
  std::uint64_t uniform_u64(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
  }
  bool chance(int num, int den) { return uniform(1, den) <= num; }

 private:
  std::mt19937_64 engine_;
};

/// Small-height rationals over Q, uniform residues over F_p.
template <Scalar S>
S random_scalar(Rng& rng, const FieldSpec& field) {
  if constexpr (is_ordered_v<S>) {
    return make_scalar<S>(field, rng.uniform(-40, 40), rng.uniform(1, 7));
  } else {
    return from_int<S>(field, static_cast<long long>(rng.uniform_u64(0, field.modulus() - 1)));
  }
}

template <Scalar S>
S random_nonzero(Rng& rng, const FieldSpec& field) {
  for (;;) {
    S x = random_scalar<S>(rng, field);
    if (!x.is_zero()) return x;
  }
}

/// Finite point, or ∞ with probability inf_num/inf_den.
template <Scalar S>
ProjPoint<S> random_point(Rng& rng, const FieldSpec& field, int inf_num = 0, int inf_den = 1) {
  if (inf_num > 0 && rng.chance(inf_num, inf_den)) return ProjPoint<S>::infinity(field);
  return ProjPoint<S>::finite(random_scalar<S>(rng, field));
}

/// Nondegenerate (α, β, γ); α = 0 about one time in six so that the souche at
/// infinity is exercised.
template <Scalar S>
InvolutiveMap<S> random_map(Rng& rng, const FieldSpec& field) {
  for (;;) {
    S a = rng.chance(1, 6) ? from_int<S>(field, 0) : random_scalar<S>(rng, field);
    S b = random_scalar<S>(rng, field);
    S c = random_scalar<S>(rng, field);
    if (!(b * b - a * c).is_zero()) return InvolutiveMap<S>(a, b, c);
  }
}

template <Scalar S>
bool all_distinct(const std::array<ProjPoint<S>, 6>& pts) {
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      if (pts[i] == pts[j]) return false;
    }
  }
  return true;
}

/// Three couples of `m` on six distinct points; nullopt if the draw collides.
template <Scalar S>
std::optional<InvolutionConfig<S>> random_involution(Rng& rng, const InvolutiveMap<S>& m, bool allow_infinity) {
  auto field = m.field();
  InvolutionConfig<S> c{{PointPair<S>{ProjPoint<S>::infinity(field), ProjPoint<S>::infinity(field)},
                         PointPair<S>{ProjPoint<S>::infinity(field), ProjPoint<S>::infinity(field)},
                         PointPair<S>{ProjPoint<S>::infinity(field), ProjPoint<S>::infinity(field)}}};
  for (auto& p : c.pairs) {
    auto x = random_point<S>(rng, field, allow_infinity ? 1 : 0, 8);
    p = PointPair<S>{x, m(x)};
  }
  if (!all_distinct(c.points())) return std::nullopt;
  if (!allow_infinity) {
    for (const auto& p : c.points()) {
      if (p.is_infinite()) return std::nullopt;
    }
  }
  return c;
}

/// An involution with one point moved to a fresh random position.
template <Scalar S>
std::optional<InvolutionConfig<S>> perturb(Rng& rng, InvolutionConfig<S> c, bool allow_infinity) {
  auto field = c.pairs[0].first.field();
  auto idx = static_cast<std::size_t>(rng.uniform(0, 2));
  auto moved = random_point<S>(rng, field, allow_infinity ? 1 : 0, 8);
  if (rng.chance(1, 2)) {
    c.pairs[idx].first = moved;
  } else {
    c.pairs[idx].second = moved;
  }
  if (!all_distinct(c.points())) return std::nullopt;
  return c;
}

/// Finite arbre with six distinct nodes: x ↦ a + k/(x − a).
template <Scalar S>
std::optional<Arbre<S>> random_arbre(Rng& rng, const FieldSpec& field) {
  S a = random_scalar<S>(rng, field);
  S k = random_nonzero<S>(rng, field);
  auto souche = ProjPoint<S>::finite(a);
  Arbre<S> arbre{souche, {{PointPair<S>{souche, souche}, PointPair<S>{souche, souche}, PointPair<S>{souche, souche}}}};
  for (auto& p : arbre.config.pairs) {
    S x = random_scalar<S>(rng, field);
    if (x == a) return std::nullopt;
    p = make_pair_of(x, a + k / (x - a));
  }
  if (!all_distinct(arbre.config.points())) return std::nullopt;
  return arbre;
}

template <Scalar S>
Homography<S> random_homography(Rng& rng, const FieldSpec& field) {
  for (;;) {
    S a = random_scalar<S>(rng, field), b = random_scalar<S>(rng, field);
    S c = random_scalar<S>(rng, field), d = random_scalar<S>(rng, field);
    if (!(a * d - b * c).is_zero()) return Homography<S>(a, b, c, d);
  }
}

template <Scalar S>
PlaneLine<S> random_line(Rng& rng, const FieldSpec& field) {
  for (;;) {
    S a = random_scalar<S>(rng, field), b = random_scalar<S>(rng, field), c = random_scalar<S>(rng, field);
    if (!(a.is_zero() && b.is_zero() && c.is_zero())) return PlaneLine<S>(a, b, c);
  }
}

template <Scalar S>
PlanePoint<S> random_plane_point(Rng& rng, const FieldSpec& field) {
  return affine_point(random_scalar<S>(rng, field), random_scalar<S>(rng, field));
}

}  // namespace desargues
