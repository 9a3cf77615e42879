#pragma once

// Evaluation of claim scripts and the report they produce.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "desargues/dsl/script.hpp"
#include "desargues/euclid.hpp"
#include "desargues/ordering.hpp"
#include "desargues/plane.hpp"
#include "desargues/properties.hpp"

namespace desargues::dsl {

inline constexpr const char* report_schema = "desargues-report/1";

enum class Verdict { Holds, Fails, Error };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Error: return "error";
  }
  return "unknown";
}

struct ReportEntry {
  std::size_t line = 0;
  std::string statement;
  Verdict verdict = Verdict::Holds;
  std::string value;  // query result, or a short account of the check
  std::optional<ErrorKind> error;
  std::string message;
};

struct Report {
  std::string field;
  std::vector<ReportEntry> entries;
  std::vector<PropertyOutcome> properties;

  bool pass() const {
    for (const auto& e : entries) {
      if (e.verdict != Verdict::Holds) return false;
    }
    for (const auto& p : properties) {
      if (p.status == PropertyStatus::Failed) return false;
    }
    return true;
  }

  std::string to_text() const {
    std::string out = "field " + field + "\n";
    std::size_t holds = 0, fails = 0, errors = 0;
    for (const auto& e : entries) {
      out += "line " + std::to_string(e.line) + ": " + e.statement + " ... ";
      switch (e.verdict) {
        case Verdict::Holds: ++holds; out += "holds"; break;
        case Verdict::Fails: ++fails; out += "FAILS"; break;
        case Verdict::Error: ++errors; out += "ERROR " + std::string(desargues::to_string(*e.error)) + ": " + e.message; break;
      }
      if (!e.value.empty()) out += " [" + e.value + "]";
      out += "\n";
    }
    for (const auto& p : properties) {
      out += p.name + ": ";
      switch (p.status) {
        case PropertyStatus::Passed: out += std::to_string(p.passed) + "/" + std::to_string(p.cases) + " passed"; break;
        case PropertyStatus::Failed:
          out += std::to_string(p.failed) + "/" + std::to_string(p.cases) + " FAILED (" + p.first_failure + ")";
          break;
        case PropertyStatus::SkippedUnordered: out += "skipped (SkippedUnordered)"; break;
      }
      out += "\n";
    }
    if (!entries.empty()) {
      out += "summary: " + std::to_string(entries.size()) + " statements, " + std::to_string(holds) + " hold, " +
             std::to_string(fails) + " fail, " + std::to_string(errors) + " errors\n";
    }
    out += pass() ? "PASS\n" : "FAIL\n";
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& e : entries) {
      nlohmann::json j{{"line", e.line}, {"statement", e.statement}, {"verdict", to_string(e.verdict)}};
      if (!e.value.empty()) j["value"] = e.value;
      if (e.error) j["error"] = {{"kind", desargues::to_string(*e.error)}, {"message", e.message}};
      claims.push_back(std::move(j));
    }
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : properties) {
      std::string status = p.status == PropertyStatus::Passed   ? "passed"
                           : p.status == PropertyStatus::Failed ? "failed"
                                                                : "SkippedUnordered";
      nlohmann::json j{{"name", p.name}, {"status", status}, {"cases", p.cases}, {"passed", p.passed},
                       {"failed", p.failed}, {"discarded", p.discarded}};
      if (!p.first_failure.empty()) j["first_failure"] = p.first_failure;
      props.push_back(std::move(j));
    }
    return {{"schema", report_schema}, {"field", field}, {"pass", pass()}, {"claims", claims}, {"properties", props}};
  }
};

/// Values bound while running a script.
template <Scalar S>
struct Environment {
  std::map<std::string, ProjPoint<S>> scalars;
  std::map<std::string, PointPair<S>> pairs;
  std::map<std::string, Conic<S>> conics;
  std::map<std::string, PlaneLine<S>> lines;
  std::map<std::string, PlanePoint<S>> ppoints;
  std::vector<std::string> pair_order;
  std::optional<ProjPoint<S>> souche;
};

template <Scalar S>
ProjPoint<S> literal_value(const FieldSpec& field, const Literal& l) {
  if (l.infinite) return ProjPoint<S>::infinity(field);
  return ProjPoint<S>::finite(make_scalar<S>(field, l.num, l.den));
}

namespace detail {

template <class Map>
const auto& lookup(const Map& m, const std::string& name) {
  auto it = m.find(name);
  if (it == m.end()) fail(ErrorKind::UnboundName, "'" + name + "' has no value (its declaration failed)");
  return it->second;
}

template <Scalar S>
class Evaluator {
 public:
  Evaluator(const FieldSpec& field, Environment<S>& env) : field_(field), env_(env) {}

  ProjPoint<S> point(const Operand& o) const {
    return o.literal ? literal_value<S>(field_, *o.literal) : lookup(env_.scalars, o.name);
  }

  S finite(const Operand& o) const { return point(o).value(); }

  const PointPair<S>& pair(const Operand& o) const { return lookup(env_.pairs, o.name); }

  InvolutionConfig<S> config(const std::vector<Operand>& a, std::size_t from) const {
    return InvolutionConfig<S>{{pair(a[from]), pair(a[from + 1]), pair(a[from + 2])}};
  }

  S scalar(const Operand& o) const { return make_scalar<S>(field_, o.literal->num, o.literal->den); }

  void declare(const Statement& st) {
    const auto& a = st.args;
    switch (st.kind) {
      case StmtKind::Let: env_.scalars.insert_or_assign(st.name, point(a[0])); break;
      case StmtKind::Pair:
        env_.pairs.insert_or_assign(st.name, PointPair<S>{point(a[0]), point(a[1])});
        env_.pair_order.push_back(st.name);
        break;
      case StmtKind::Conic:
        if (st.verb == "circle") {
          env_.conics.insert_or_assign(st.name, Conic<S>::circle(field_));
        } else {
          env_.conics.insert_or_assign(
              st.name, Conic<S>(scalar(a[0]), scalar(a[1]), scalar(a[2]), scalar(a[3]), scalar(a[4]), scalar(a[5])));
        }
        break;
      case StmtKind::Line:
        env_.lines.insert_or_assign(st.name, PlaneLine<S>(scalar(a[0]), scalar(a[1]), scalar(a[2])));
        break;
      case StmtKind::PPoint:
        env_.ppoints.insert_or_assign(st.name, PlanePoint<S>(scalar(a[0]), scalar(a[1]), scalar(a[2])));
        break;
      default: break;
    }
  }

  /// Claim verdict plus a short account of what was computed.
  std::pair<bool, std::string> claim(const Statement& st) {
    const auto& a = st.args;
    const std::string& v = st.verb;
    if (v == "involution") {
      auto fit = fit_involution(config(a, 0));
      return {fit.has_value(), fit ? fit->to_string() : "no nondegenerate relation"};
    }
    if (v == "harmonic") {
      const auto& p = pair(a[0]);
      const auto& q = pair(a[1]);
      bool h = is_harmonic(p, q);
      return {h, "cross-ratio " + cross_ratio(p.first, p.second, q.first, q.second).to_string()};
    }
    if (v == "arbre") {
      auto s = point(a[0]);
      bool ok = is_arbre(Arbre<S>{s, config(a, 1)});
      if (ok && !env_.souche) env_.souche = s;
      return {ok, ""};
    }
    if (v == "melange") return {mingled(pair(a[0]), pair(a[1])) == Mingling::Meles, ""};
    if (v == "pappus") {
      return {pappus_lemma_check(finite(a[0]), finite(a[1]), finite(a[2]), finite(a[3]), finite(a[4])), ""};
    }
    if (v == "figure1") {
      auto r = figure1_check(lookup(env_.conics, a[0].name), lookup(env_.lines, a[1].name),
                             lookup(env_.ppoints, a[2].name));
      return {r.harmonic, "b=" + r.b.to_string() + " h=" + r.h.to_string() + " g=" + r.g.to_string()};
    }
    if (v == "quadrilateral") {
      std::array<PlanePoint<S>, 4> verts{lookup(env_.ppoints, a[1].name), lookup(env_.ppoints, a[2].name),
                                         lookup(env_.ppoints, a[3].name), lookup(env_.ppoints, a[4].name)};
      auto r = inscribed_quadrilateral(lookup(env_.conics, a[0].name), verts, lookup(env_.lines, a[5].name));
      std::string pairs;
      for (const auto& p : r.config.pairs) pairs += "{" + p.first.to_string() + ", " + p.second.to_string() + "} ";
      return {r.involution && r.first_identity() && r.second_identity(),
              pairs + "rectangles " + r.rectangles_lhs.to_string() + " = " + r.rectangles_rhs.to_string() + ", second " +
                  r.second_lhs.to_string() + " = " + r.second_rhs.to_string()};
    }
    if (v == "combinatoire") return {is_involution_combinatoire(config(a, 0)), ""};
    if (v == "engaged") return {is_engaged(point(a[0]), pair(a[1])), ""};
    fail(ErrorKind::SyntaxError, "unknown claim " + v);
  }

  /// Query result as canonical tokens; `unordered` when their order is not
  /// significant.
  std::vector<std::string> query(const Statement& st, bool& unordered) {
    const auto& a = st.args;
    const std::string& v = st.verb;
    unordered = false;
    auto fit = [&] {
      auto m = fit_involution(config(a, 0));
      if (!m) fail(ErrorKind::NotAnInvolution, "the three couples are not in involution");
      return *m;
    };
    if (v == "souche") {
      auto s = find_souche(config(a, 0));
      if (!env_.souche && !s.is_infinite()) env_.souche = s;
      return {s.to_string()};
    }
    if (v == "classify") {
      return {classify(fit()).kind == InvolutionKind::Hyperbolic ? "hyperbolic" : "elliptic"};
    }
    if (v == "fixedpoints") {
      unordered = true;
      auto f = fixed_points(fit());
      return {f.first.to_string(), f.second.to_string()};
    }
    if (v == "sixth") return {sixth_point(pair(a[0]), pair(a[1]), point(a[2])).to_string()};
    if (v == "crossratio") return {cross_ratio(point(a[0]), point(a[1]), point(a[2]), point(a[3])).to_string()};
    if (v == "reciprocal") {
      auto [s1, s2] = reciprocal_souches(pair(a[0]), pair(a[1]));
      return {s1.to_string(), s2.to_string()};
    }
    if (v == "nodes") {
      std::vector<std::string> out;
      for (const auto& l : classify_nodes(Arbre<S>{point(a[0]), config(a, 1)})) out.push_back(node_word(l));
      return out;
    }
    fail(ErrorKind::SyntaxError, "unknown query " + v);
  }

  std::vector<std::string> expected_tokens(const std::vector<Operand>& ops) const {
    std::vector<std::string> out;
    for (const auto& o : ops) {
      if (o.literal) {
        out.push_back(literal_value<S>(field_, *o.literal).to_string());
      } else if (env_.scalars.count(o.name)) {
        out.push_back(env_.scalars.at(o.name).to_string());
      } else {
        out.push_back(o.name);
      }
    }
    return out;
  }

 private:
  static std::string node_word(const NodeLabel& l) {
    auto side = [](ExtremeSide s) { return s == ExtremeSide::Interieur ? "interieur" : "exterieur"; };
    switch (l.kind) {
      case NodeKind::MoyenSimple: return "moyen-simple";
      case NodeKind::MoyenDouble: return "moyen-double";
      case NodeKind::Extreme:
        if (!l.first_side) return "extreme";
        return std::string("extreme-") + side(*l.first_side) + "-" + side(*l.second_side);
    }
    return "?";
  }

  const FieldSpec& field_;
  Environment<S>& env_;
};

inline std::string join_tokens(const std::vector<std::string>& t) {
  std::string s;
  for (const auto& x : t) s += (s.empty() ? "" : " ") + x;
  return s;
}

}  // namespace detail

/// Runs every statement in order. Declarations and claims that raise are
/// recorded as errors; evaluation always continues.
template <Scalar S>
Report run_typed(const Script& script, Environment<S>& env) {
  Report report{script.field.to_string(), {}, {}};
  detail::Evaluator<S> ev(script.field, env);
  for (const auto& st : script.statements) {
    ReportEntry e;
    e.line = st.line;
    e.statement = print_statement(st);
    bool is_decl = st.kind != StmtKind::Claim && st.kind != StmtKind::Query;
    try {
      if (is_decl) {
        ev.declare(st);
        continue;
      }
      if (st.kind == StmtKind::Claim) {
        auto [ok, info] = ev.claim(st);
        e.verdict = ok != st.negated ? Verdict::Holds : Verdict::Fails;
        e.value = info;
      } else {
        bool unordered = false;
        auto got = ev.query(st, unordered);
        e.value = detail::join_tokens(got);
        if (st.has_expected) {
          auto want = ev.expected_tokens(st.expected);
          if (unordered) {
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
          }
          e.verdict = got == want ? Verdict::Holds : Verdict::Fails;
        }
      }
    } catch (const Error& err) {
      e.verdict = Verdict::Error;
      e.error = err.kind();
      e.message = err.detail();
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

inline Report run_script(const Script& script) {
  if (script.field.kind() == FieldKind::Rationals) {
    Environment<Rational> env;
    return run_typed(script, env);
  }
  Environment<Residue> env;
  return run_typed(script, env);
}

/// Value of a `let` binding in field-canonical form.
inline std::string scalar_binding(const Script& script, const std::string& name) {
  for (const auto& st : script.statements) {
    if (st.kind != StmtKind::Let || st.name != name) continue;
    const auto& l = *st.args[0].literal;
    if (script.field.kind() == FieldKind::Rationals) return literal_value<Rational>(script.field, l).to_string();
    return literal_value<Residue>(script.field, l).to_string();
  }
  fail(ErrorKind::UnboundName, "'" + name + "' is not bound by let");
}

/// Every registered property over the field, `cases` cases each.
inline Report random_suite(const FieldSpec& field, std::size_t cases, std::uint64_t seed) {
  if (cases < 1) fail(ErrorKind::PreconditionViolated, "at least one case is needed");
  Report report{field.to_string(), {}, {}};
  auto run_all = [&]<Scalar S>() {
    const auto& table = property_table<S>();
    for (std::size_t i = 0; i < table.size(); ++i) report.properties.push_back(run_property(table[i], i, field, cases, seed));
  };
  if (field.kind() == FieldKind::Rationals) {
    run_all.template operator()<Rational>();
  } else {
    run_all.template operator()<Residue>();
  }
  return report;
}

}  // namespace desargues::dsl
