#pragma once

// Randomized property checks shared by the `random` subcommand and the test
// suites. A case either passes, fails, or is discarded (its draw did not meet
// the premises) and redrawn with the next attempt number.

#include <functional>
#include <string>
#include <vector>

#include "desargues/euclid.hpp"
#include "desargues/ordering.hpp"
#include "desargues/random.hpp"

namespace desargues {

enum class CaseResult { Pass, Fail, Discard };

enum class PropertyStatus { Passed, Failed, SkippedUnordered };

struct PropertyOutcome {
  std::string name;
  PropertyStatus status = PropertyStatus::Passed;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t discarded = 0;
  std::string first_failure;
};

inline constexpr std::size_t max_attempts = 64;

namespace props {

inline CaseResult verdict(bool ok) {
  return ok ? CaseResult::Pass : CaseResult::Fail;
}

template <Scalar S>
CaseResult field_axioms(Rng& rng, const FieldSpec& f) {
  S a = random_scalar<S>(rng, f), b = random_scalar<S>(rng, f), c = random_scalar<S>(rng, f);
  S one = from_int<S>(f, 1);
  bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
            a + b == b + a && a * b == b * a && a - a == from_int<S>(f, 0);
  if (!a.is_zero()) ok = ok && a * (one / a) == one;
  return verdict(ok);
}

template <Scalar S>
CaseResult square_roots(Rng& rng, const FieldSpec& f) {
  S y = random_scalar<S>(rng, f);
  S sq = y * y;
  if (!is_square(sq)) return CaseResult::Fail;
  S r = sqrt(sq);
  bool ok = r * r == sq;
  S x = random_scalar<S>(rng, f);
  if (is_square(x)) ok = ok && sqrt(x) * sqrt(x) == x;
  return verdict(ok);
}

template <Scalar S>
CaseResult cross_ratio_invariance(Rng& rng, const FieldSpec& f) {
  std::array<ProjPoint<S>, 4> q{random_point<S>(rng, f, 1, 8), random_point<S>(rng, f, 1, 8),
                                random_point<S>(rng, f, 1, 8), random_point<S>(rng, f, 1, 8)};
  if (!pairwise_distinct({q[0], q[1], q[2], q[3]})) return CaseResult::Discard;
  auto h = random_homography<S>(rng, f);
  return verdict(cross_ratio(q[0], q[1], q[2], q[3]) == cross_ratio(h(q[0]), h(q[1]), h(q[2]), h(q[3])));
}

template <Scalar S>
CaseResult harmonic_swap(Rng& rng, const FieldSpec& f) {
  auto m = random_map<S>(rng, f);
  auto cls = classify(m);
  if (cls.kind != InvolutionKind::Hyperbolic) return CaseResult::Discard;
  auto b = random_point<S>(rng, f, 1, 8);
  auto h = m(b);
  if (b == h) return CaseResult::Discard;
  const auto& k = *cls.fixed;
  PointPair<S> kl{k.first, k.second}, lk{k.second, k.first}, bh{b, h}, hb{h, b};
  bool v = is_harmonic(kl, bh);
  return verdict(v && is_harmonic(lk, bh) == v && is_harmonic(kl, hb) == v && is_harmonic(bh, kl) == v);
}

template <Scalar S>
CaseResult homography_round_trip(Rng& rng, const FieldSpec& f) {
  std::array<ProjPoint<S>, 3> src{random_point<S>(rng, f, 1, 8), random_point<S>(rng, f, 1, 8),
                                  random_point<S>(rng, f, 1, 8)};
  std::array<ProjPoint<S>, 3> dst{random_point<S>(rng, f, 1, 8), random_point<S>(rng, f, 1, 8),
                                  random_point<S>(rng, f, 1, 8)};
  if (!pairwise_distinct({src[0], src[1], src[2]}) || !pairwise_distinct({dst[0], dst[1], dst[2]})) {
    return CaseResult::Discard;
  }
  auto h = homography_from_three_points(src, dst);
  auto back = homography_from_three_points(dst, src);
  bool ok = back * h == Homography<S>::identity(f);
  for (std::size_t i = 0; i < 3; ++i) ok = ok && h(src[i]) == dst[i];
  return verdict(ok);
}

/// rect (when all points are finite), cr and det agree.
template <Scalar S>
bool predicates_agree(const InvolutionConfig<S>& c, bool& verdict_out) {
  bool det = is_involution_det(c);
  bool cr = is_involution_cr(c);
  bool ok = det == cr;
  bool finite = true;
  for (const auto& p : c.points()) finite = finite && !p.is_infinite();
  if (finite) ok = ok && is_involution_rect(c) == det;
  verdict_out = det;
  return ok;
}

template <Scalar S>
CaseResult equivalence_on_involutions(Rng& rng, const FieldSpec& f) {
  auto c = random_involution(rng, random_map<S>(rng, f), true);
  if (!c) return CaseResult::Discard;
  bool v = false;
  return verdict(predicates_agree(*c, v) && v);
}

template <Scalar S>
CaseResult equivalence_on_perturbed(Rng& rng, const FieldSpec& f) {
  auto c = random_involution(rng, random_map<S>(rng, f), true);
  if (!c) return CaseResult::Discard;
  auto p = perturb(rng, *c, true);
  if (!p) return CaseResult::Discard;
  bool v = false;
  return verdict(predicates_agree(*p, v));
}

template <Scalar S>
CaseResult arbre_implies_involution(Rng& rng, const FieldSpec& f) {
  auto a = random_arbre<S>(rng, f);
  if (!a) return CaseResult::Discard;
  const auto& c = a->config;
  return verdict(is_arbre(*a) && is_involution_rect(c) && is_involution_cr(c) && is_involution_det(c));
}

template <Scalar S>
CaseResult involution_implies_arbre(Rng& rng, const FieldSpec& f) {
  auto c = random_involution(rng, random_map<S>(rng, f), false);
  if (!c) return CaseResult::Discard;
  auto s = find_souche(*c);
  if (s.is_infinite()) {
    const auto& ps = c->pairs;
    auto sum = [](const PointPair<S>& p) { return p.first.z() + p.second.z(); };
    return verdict(sum(ps[0]) == sum(ps[1]) && sum(ps[1]) == sum(ps[2]));
  }
  for (const auto& p : c->points()) {
    if (p == s) return CaseResult::Fail;
  }
  return verdict(is_arbre(Arbre<S>{s, *c}));
}

template <Scalar S>
CaseResult projective_invariance(Rng& rng, const FieldSpec& f) {
  auto c = random_involution(rng, random_map<S>(rng, f), true);
  if (!c) return CaseResult::Discard;
  if (rng.chance(1, 2)) {
    c = perturb(rng, *c, true);
    if (!c) return CaseResult::Discard;
  }
  auto h = random_homography<S>(rng, f);
  InvolutionConfig<S> image = *c;
  for (auto& p : image.pairs) p = PointPair<S>{h(p.first), h(p.second)};
  return verdict(is_involution_cr(*c) == is_involution_cr(image));
}

template <Scalar S>
CaseResult no_parabolic(Rng& rng, const FieldSpec& f) {
  auto m = random_map<S>(rng, f);
  auto cls = classify(m);
  bool ok = cls.kind == InvolutionKind::Elliptic ? !cls.fixed.has_value()
                                                  : cls.fixed && !cls.fixed->is_doubled();
  if (cls.fixed) ok = ok && m(cls.fixed->first) == cls.fixed->first && m(cls.fixed->second) == cls.fixed->second;
  auto x = random_point<S>(rng, f, 1, 8);
  return verdict(ok && m(m(x)) == x);
}

/// Involution fixing two random points; every couple {b, m(b)} is harmonic
/// with the fixed pair.
template <Scalar S>
CaseResult harmonic_fixed_points(Rng& rng, const FieldSpec& f) {
  auto k = random_point<S>(rng, f, 1, 8), l = random_point<S>(rng, f, 1, 8);
  if (k == l) return CaseResult::Discard;
  auto m = involution_from_pairs(PointPair<S>{k, k}, PointPair<S>{l, l});
  if (!(fixed_points(m) == PointPair<S>{k, l})) return CaseResult::Fail;
  auto b = random_point<S>(rng, f, 1, 8);
  if (b == k || b == l) return CaseResult::Discard;
  return verdict(is_harmonic(PointPair<S>{k, l}, PointPair<S>{b, m(b)}));
}

template <Scalar S>
CaseResult agregativity(Rng& rng, const FieldSpec& f) {
  auto m = random_map<S>(rng, f);
  std::vector<PointPair<S>> ps;
  for (int i = 0; i < 4; ++i) {
    auto x = random_point<S>(rng, f, 1, 8);
    ps.push_back(PointPair<S>{x, m(x)});
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (ps[i] == ps[j]) return CaseResult::Discard;
    }
  }
  InvolutionConfig<S> c1{{ps[0], ps[1], ps[2]}}, c2{{ps[0], ps[1], ps[3]}};
  if (!completes_involution(c1, c2)) return CaseResult::Fail;
  // Four-point form: fixed points as doubled middle couples.
  auto cls = classify(m);
  if (cls.kind != InvolutionKind::Hyperbolic) return CaseResult::Pass;
  const auto& fx = *cls.fixed;
  PointPair<S> pq{fx.first, fx.first}, xy{fx.second, fx.second};
  InvolutionConfig<S> ext{{ps[0], ps[1], ps[2]}};
  return verdict(completes_involution_four(ext, pq, xy));
}

/// Harmonic quadruple {k, l}, {b, m(b)}; both central points satisfy the
/// arbre identity with the doubled pair.
template <Scalar S>
CaseResult reciprocal_souches_check(Rng& rng, const FieldSpec& f) {
  S k = random_scalar<S>(rng, f), l = random_scalar<S>(rng, f), b = random_scalar<S>(rng, f);
  if (k == l || b == k || b == l) return CaseResult::Discard;
  auto m = involution_from_pairs(make_pair_of(k, k), make_pair_of(l, l));
  auto hp = m(ProjPoint<S>::finite(b));
  if (hp.is_infinite()) return CaseResult::Discard;
  S h = hp.z();
  auto [a, el] = reciprocal_souches(make_pair_of(k, l), make_pair_of(b, h));
  if (a.is_infinite() || el.is_infinite()) return CaseResult::Fail;
  S two = from_int<S>(f, 2);
  bool ok = a.z() == (k + l) / two && el.z() == (b + h) / two;
  // (G − L)(F − L) = (B − L)² = (H − L)² with F, G = k, l and B, H = b, h.
  const S& L = el.z();
  ok = ok && (k - L) * (l - L) == (b - L) * (b - L) && (b - L) * (b - L) == (h - L) * (h - L);
  const S& A = a.z();
  ok = ok && (b - A) * (h - A) == (k - A) * (k - A);
  return verdict(ok);
}

/// The three four-point criteria, with signed segments.
template <Scalar S>
CaseResult four_point_criteria(Rng& rng, const FieldSpec& f) {
  S a = random_scalar<S>(rng, f), c = random_scalar<S>(rng, f), b = random_scalar<S>(rng, f);
  if (c == a || b == a) return CaseResult::Discard;
  // (i) AB/AC = AC/AH and F the reflection of C in A.
  S h = a + (c - a) * (c - a) / (b - a);
  S fpt = a + a - c;
  auto P = [](const S& x) { return ProjPoint<S>::finite(x); };
  if (!pairwise_distinct({P(h), P(b), P(c), P(fpt)})) return CaseResult::Discard;
  bool ok = is_involution_four(make_pair_of(h, b), make_pair_of(c, fpt));
  // (ii) BH·BA = BG·BF with A the midpoint of F G; (iii) HG·HF = HB·HA.
  S g = c;
  S f2 = a + a - g;
  ok = ok && (b - h) * (b - a) == (b - g) * (b - f2) && (h - g) * (h - f2) == (h - b) * (h - a);
  ok = ok && is_involution_four(make_pair_of(h, b), make_pair_of(g, f2));
  return verdict(ok);
}

// Simple middle couple {C, G} at distance r from A, B strictly inside, H
// outside, named so that C, B, G, H are consecutive.
inline Arbre<Rational> arbre_with_simple_middle(Rng& rng, const FieldSpec& f) {
  Rational a = random_scalar<Rational>(rng, f);
  Rational r = random_nonzero<Rational>(rng, f).abs();
  Rational t = random_nonzero<Rational>(rng, f);
  Rational b = a + r * t / (t.abs() + Rational(1));
  Rational h = a - r * r / (b - a);
  Rational g = h < a ? a - r : a + r;
  Rational c = a + a - g;
  return Arbre<Rational>{ProjPoint<Rational>::finite(a), {{make_pair_of(c, g), make_pair_of(b, h), make_pair_of(c, g)}}};
}

/// Ordered: the souche is engaged in all couples exactly when every two
/// couples are mingled.
template <Scalar S>
CaseResult engagement_mingling(Rng& rng, const FieldSpec& f) {
  auto a = random_arbre<S>(rng, f);
  if (!a) return CaseResult::Discard;
  bool engaged = is_engaged(a->souche, a->config.pairs[0]);
  bool mingled_all = mingled(a->config.pairs[0], a->config.pairs[1]) == Mingling::Meles;
  return verdict(is_arbre_combinatoire(*a) && is_involution_combinatoire(a->config) && engaged == mingled_all);
}

/// Ordered: GB·GH = CB·CH unsigned, with a sign flip when signed; and the
/// consecutive-segment form (CB + BG + GH)/BG = GH/CB.
template <Scalar S>
CaseResult simple_middle_identity(Rng& rng, const FieldSpec& f) {
  if constexpr (!is_ordered_v<S>) {
    return CaseResult::Discard;
  } else {
  auto arbre = arbre_with_simple_middle(rng, f);
  const S& c = arbre.config.pairs[0].first.z();
  const S& g = arbre.config.pairs[0].second.z();
  const S& b = arbre.config.pairs[1].first.z();
  const S& h = arbre.config.pairs[1].second.z();
  auto len = [](const S& x, const S& y) { return (x - y).abs(); };
  bool unsigned_ok = len(g, b) * len(g, h) == len(c, b) * len(c, h);
  bool signed_flip = (g - b) * (g - h) == -((c - b) * (c - h)) && !((g - b) * (g - h)).is_zero();
  bool segments = (len(c, b) + len(b, g) + len(g, h)) / len(b, g) == len(g, h) / len(c, b);
  auto labels = classify_nodes(arbre);
  bool labelled = labels[0].kind == NodeKind::MoyenSimple && labels[1].kind == NodeKind::Extreme &&
                  labels[1].first_side == ExtremeSide::Interieur && labels[1].second_side == ExtremeSide::Exterieur;
  return verdict(unsigned_ok && signed_flip && segments && labelled);
  }
}

/// Ordered: at most two middle couples, and |AC|² = |AB|·|AH| for a middle
/// couple C G and any couple B H.
template <Scalar S>
CaseResult middle_couples(Rng& rng, const FieldSpec& f) {
  if constexpr (!is_ordered_v<S>) {
    return CaseResult::Discard;
  } else {
  auto arbre = random_arbre<S>(rng, f);
  if (!arbre) return CaseResult::Discard;
  const S& a = arbre->souche.z();
  const auto& p = arbre->config.pairs[0];
  S k = (p.first.z() - a) * (p.second.z() - a);
  auto mids = middle_pairs(a, k);
  if (mids.size() > 2) return CaseResult::Fail;
  bool ok = true;
  for (const auto& m : mids) {
    S ac = (m.first.z() - a).abs();
    for (const auto& q : arbre->config.pairs) {
      ok = ok && ac * ac == (q.first.z() - a).abs() * (q.second.z() - a).abs();
    }
  }
  std::size_t middle_labels = 0;
  for (const auto& l : classify_nodes(*arbre)) middle_labels += l.kind != NodeKind::Extreme;
  return verdict(ok && middle_labels <= 2);
  }
}

template <Scalar S>
std::optional<PlanePoint<S>> random_circle_point(Rng& rng, const FieldSpec& f) {
  try {
    return circle_param(random_point<S>(rng, f, 1, 16));
  } catch (const Error&) {
    return std::nullopt;
  }
}

template <Scalar S>
CaseResult figure1(Rng& rng, const FieldSpec& f) {
  auto conic = Conic<S>::circle(f);
  auto p1 = random_circle_point<S>(rng, f), p2 = random_circle_point<S>(rng, f);
  if (!p1 || !p2 || *p1 == *p2) return CaseResult::Discard;
  auto chord = join(*p1, *p2);
  auto chart = LineChart<S>::standard(chord);
  auto cpt = chart.point(random_point<S>(rng, f));
  if (conic.contains(cpt) || polar(conic, cpt) == chord) return CaseResult::Discard;
  auto r = figure1_check(conic, chord, cpt);
  return verdict(r.harmonic && incident(r.g, polar(conic, cpt)));
}

template <Scalar S>
CaseResult inscribed_quadrilateral_check(Rng& rng, const FieldSpec& f) {
  auto conic = Conic<S>::circle(f);
  std::array<std::optional<PlanePoint<S>>, 6> pts;
  for (auto& p : pts) {
    p = random_circle_point<S>(rng, f);
    if (!p) return CaseResult::Discard;
  }
  if (*pts[4] == *pts[5]) return CaseResult::Discard;
  try {
    auto r = inscribed_quadrilateral(conic, {*pts[0], *pts[1], *pts[2], *pts[3]}, join(*pts[4], *pts[5]));
    bool ok = r.involution && r.first_identity() && r.second_identity();
    if (all_distinct(r.config.points())) ok = ok && is_involution_cr(r.config) && is_involution_rect(r.config);
    return verdict(ok);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateConfiguration || e.kind() == ErrorKind::CoincidentPoints) {
      return CaseResult::Discard;
    }
    throw;
  }
}

template <Scalar S>
CaseResult ramee(Rng& rng, const FieldSpec& f) {
  auto src = LineChart<S>::standard(random_line<S>(rng, f));
  auto dst = LineChart<S>::standard(random_line<S>(rng, f));
  auto center = random_plane_point<S>(rng, f);
  if (src.line() == dst.line() || incident(center, src.line()) || incident(center, dst.line())) {
    return CaseResult::Discard;
  }
  auto c = random_involution(rng, random_map<S>(rng, f), true);
  if (!c) return CaseResult::Discard;
  auto h = central_projection(center, src, dst);
  InvolutionConfig<S> image = *c;
  for (auto& p : image.pairs) p = PointPair<S>{h(p.first), h(p.second)};
  // The homography agrees with the construction it encodes.
  const auto& x = c->pairs[0].first;
  auto direct = dst.coordinate(meet(join(center, src.point(x)), dst.line()));
  return verdict(direct == h(x) && is_involution_cr(image));
}

template <Scalar S>
CaseResult pappus(Rng& rng, const FieldSpec& f) {
  S a = random_scalar<S>(rng, f), c = random_scalar<S>(rng, f), b = random_scalar<S>(rng, f);
  S d = random_scalar<S>(rng, f);
  if (b == d) return CaseResult::Discard;
  S e = d + (a - d) * (c - d) / (b - d);
  try {
    return verdict(pappus_lemma_check(d, a, c, b, e));
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::PreconditionViolated) return CaseResult::Discard;
    throw;
  }
}

template <Scalar S>
CaseResult euclid_rules(Rng& rng, const FieldSpec& f) {
  S a = random_scalar<S>(rng, f), b = random_nonzero<S>(rng, f), k = random_nonzero<S>(rng, f);
  Proportion<S> p(a, b, a * k, b * k);
  for (auto rule : all_proportion_rules) {
    try {
      auto q = transform(p, rule);
      if (!(q.a() * q.d() == q.b() * q.c())) return CaseResult::Fail;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RuleInapplicable) return CaseResult::Fail;
    }
  }
  bool ok = true;
  if (!a.is_zero()) {
    auto inv = ProportionRule::Invertendo;
    ok = ok && transform(transform(p, inv), inv) == p;
  }
  auto cd = transform(transform(p, ProportionRule::Componendo), ProportionRule::Dividendo);
  return verdict(ok && cd.a() * p.b() == cd.b() * p.a() && cd.c() * p.d() == cd.d() * p.c());
}

}  // namespace props

template <Scalar S>
using CaseFn = CaseResult (*)(Rng&, const FieldSpec&);

template <Scalar S>
struct PropertySpec {
  const char* name;
  CaseFn<S> fn;
  bool ordered_only;
};

template <Scalar S>
const std::vector<PropertySpec<S>>& property_table() {
  static const std::vector<PropertySpec<S>> table{
      {"field_axioms", &props::field_axioms<S>, false},
      {"square_roots", &props::square_roots<S>, false},
      {"cross_ratio_invariance", &props::cross_ratio_invariance<S>, false},
      {"harmonic_swap", &props::harmonic_swap<S>, false},
      {"homography_round_trip", &props::homography_round_trip<S>, false},
      {"equivalence_on_involutions", &props::equivalence_on_involutions<S>, false},
      {"equivalence_on_perturbed", &props::equivalence_on_perturbed<S>, false},
      {"arbre_implies_involution", &props::arbre_implies_involution<S>, false},
      {"involution_implies_arbre", &props::involution_implies_arbre<S>, false},
      {"projective_invariance", &props::projective_invariance<S>, false},
      {"no_parabolic", &props::no_parabolic<S>, false},
      {"harmonic_fixed_points", &props::harmonic_fixed_points<S>, false},
      {"agregativity", &props::agregativity<S>, false},
      {"reciprocal_souches", &props::reciprocal_souches_check<S>, false},
      {"four_point_criteria", &props::four_point_criteria<S>, false},
      {"engagement_mingling", &props::engagement_mingling<S>, true},
      {"simple_middle_identity", &props::simple_middle_identity<S>, true},
      {"middle_couples", &props::middle_couples<S>, true},
      {"figure1", &props::figure1<S>, false},
      {"inscribed_quadrilateral", &props::inscribed_quadrilateral_check<S>, false},
      {"ramee", &props::ramee<S>, false},
      {"pappus", &props::pappus<S>, false},
      {"euclid_rules", &props::euclid_rules<S>, false},
  };
  return table;
}

/// Runs one property for `cases` cases. Exceptions inside a case count as
/// failures and are reported with their message.
template <Scalar S>
PropertyOutcome run_property(const PropertySpec<S>& spec, std::size_t stream, const FieldSpec& field,
                             std::size_t cases, std::uint64_t seed) {
  PropertyOutcome out;
  out.name = spec.name;
  out.cases = cases;
  if (spec.ordered_only && !field.is_ordered()) {
    out.status = PropertyStatus::SkippedUnordered;
    return out;
  }
  for (std::size_t i = 0; i < cases; ++i) {
    CaseResult r = CaseResult::Discard;
    std::string message;
    for (std::size_t attempt = 0; attempt < max_attempts && r == CaseResult::Discard; ++attempt) {
      auto rng = Rng::derive(seed, stream, i, attempt);
      try {
        r = spec.fn(rng, field);
      } catch (const std::exception& e) {
        r = CaseResult::Fail;
        message = e.what();
      }
      if (r == CaseResult::Discard) ++out.discarded;
    }
    if (r == CaseResult::Pass) {
      ++out.passed;
    } else {
      ++out.failed;
      if (out.first_failure.empty()) {
        out.first_failure = "case " + std::to_string(i) + (message.empty() ? "" : ": " + message);
        if (r == CaseResult::Discard) out.first_failure += ": no admissible draw";
      }
    }
  }
  out.status = out.failed == 0 ? PropertyStatus::Passed : PropertyStatus::Failed;
  return out;
}

template <Scalar S>
PropertyOutcome run_property(std::string_view name, const FieldSpec& field, std::size_t cases, std::uint64_t seed) {
  const auto& table = property_table<S>();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].name == name) return run_property(table[i], i, field, cases, seed);
  }
  fail(ErrorKind::PreconditionViolated, "unknown property " + std::string(name));
}

/// Exhaustive census of the involutive maps over F_p, one per class up to
/// scalar (α = 1, or α = 0 and β = 1), by number of fixed points on the line:
/// census[k] for k = 0, 1, 2 and census[3] for anything larger.
inline std::array<std::size_t, 4> fixed_point_census(std::uint64_t p) {
  auto field = FieldSpec::prime(p);
  std::vector<ProjPoint<Residue>> line;
  for (std::uint64_t v = 0; v < p; ++v) line.push_back(ProjPoint<Residue>::finite(Residue(static_cast<long long>(v), p)));
  line.push_back(ProjPoint<Residue>::infinity(field));

  std::array<std::size_t, 4> census{0, 0, 0, 0};
  auto record = [&](const InvolutiveMap<Residue>& m) {
    std::size_t n = 0;
    for (const auto& x : line) n += m(x) == x;
    ++census[std::min<std::size_t>(n, 3)];
  };
  Residue zero(0, p), one(1, p);
  for (std::uint64_t b = 0; b < p; ++b) {
    for (std::uint64_t c = 0; c < p; ++c) {
      Residue rb(static_cast<long long>(b), p), rc(static_cast<long long>(c), p);
      if (!(rb * rb - rc).is_zero()) record(InvolutiveMap<Residue>(one, rb, rc));
    }
  }
  for (std::uint64_t c = 0; c < p; ++c) record(InvolutiveMap<Residue>(zero, one, Residue(static_cast<long long>(c), p)));
  return census;
}

}  // namespace desargues
