#pragma once

// Proportions a : b = c : d and the classical rules for rewriting them.

#include <string>
#include <string_view>

#include "desargues/field.hpp"

namespace desargues {

template <Scalar S>
class Proportion {
 public:
  Proportion(S a, S b, S c, S d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (b_.is_zero() || d_.is_zero()) fail(ErrorKind::NotAProportion, "a consequent is zero");
    if (!(a_ * d_ == b_ * c_)) fail(ErrorKind::NotAProportion, to_string() + " does not hold");
  }

  const S& a() const noexcept { return a_; }
  const S& b() const noexcept { return b_; }
  const S& c() const noexcept { return c_; }
  const S& d() const noexcept { return d_; }

  std::string to_string() const {
    return a_.to_string() + " : " + b_.to_string() + " = " + c_.to_string() + " : " + d_.to_string();
  }

  friend bool operator==(const Proportion&, const Proportion&) = default;

 private:
  S a_, b_, c_, d_;
};

enum class ProportionRule { Alternando, Componendo, Dividendo, Invertendo, Convertendo, V12Sum };

constexpr std::string_view to_string(ProportionRule r) {
  switch (r) {
    case ProportionRule::Alternando: return "alternando";
    case ProportionRule::Componendo: return "componendo";
    case ProportionRule::Dividendo: return "dividendo";
    case ProportionRule::Invertendo: return "invertendo";
    case ProportionRule::Convertendo: return "convertendo";
    case ProportionRule::V12Sum: return "v12sum";
  }
  return "unknown";
}

inline constexpr ProportionRule all_proportion_rules[] = {
    ProportionRule::Alternando, ProportionRule::Componendo,  ProportionRule::Dividendo,
    ProportionRule::Invertendo, ProportionRule::Convertendo, ProportionRule::V12Sum};

template <Scalar S>
Proportion<S> transform(const Proportion<S>& p, ProportionRule rule) {
  const S &a = p.a(), &b = p.b(), &c = p.c(), &d = p.d();
  auto need = [&](const S& x, const char* what) {
    if (x.is_zero()) fail(ErrorKind::RuleInapplicable, std::string(to_string(rule)) + " needs " + what + " != 0");
  };
  switch (rule) {
    case ProportionRule::Alternando:
      need(c, "c");
      return Proportion<S>(a, c, b, d);
    case ProportionRule::Componendo:
      return Proportion<S>(a + b, b, c + d, d);
    case ProportionRule::Dividendo:
      return Proportion<S>(a - b, b, c - d, d);
    case ProportionRule::Invertendo:
      need(a, "a");
      return Proportion<S>(b, a, d, c);
    case ProportionRule::Convertendo:
      need(a - b, "a - b");
      return Proportion<S>(a, a - b, c, c - d);
    case ProportionRule::V12Sum:
      need(b + d, "b + d");
      return Proportion<S>(a, b, a + c, b + d);
  }
  fail(ErrorKind::RuleInapplicable, "unknown rule");
}

}  // namespace desargues
