#pragma once

// Claim scripts: line-oriented declarations, claims and queries.
//
//   field Q | field Fp <p>                    (first statement, exactly once)
//   let x = <literal>                         literal: n, n/d or inf
//   pair P = (<point>, <point>)               point: literal or let-name
//   conic C = circle | [m00 m01 m02 m11 m12 m22]
//   line L = [a b c]
//   ppoint X = [x y z]
//   assert [not] <claim>
//   <query> [= <expected value>...]
//
// Anything after '#' is a comment.

#include <cctype>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "desargues/field.hpp"

namespace desargues::dsl {

struct Literal {
  BigInt num{0};
  BigInt den{1};
  bool infinite = false;

  std::string to_string() const {
    if (infinite) return "inf";
    return den == 1 ? num.str() : num.str() + "/" + den.str();
  }

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// A name or a literal, never both.
struct Operand {
  std::string name;
  std::optional<Literal> literal;

  static Operand of_name(std::string n) { return {std::move(n), std::nullopt}; }
  static Operand of_literal(Literal l) { return {"", std::move(l)}; }
  bool is_name() const { return !literal.has_value(); }
  std::string to_string() const { return literal ? literal->to_string() : name; }

  friend bool operator==(const Operand&, const Operand&) = default;
};

enum class StmtKind { Let, Pair, Conic, Line, PPoint, Claim, Query };

enum class BindingType { Scalar, Pair, Conic, Line, PPoint };

constexpr std::string_view to_string(BindingType t) {
  switch (t) {
    case BindingType::Scalar: return "scalar";
    case BindingType::Pair: return "pair";
    case BindingType::Conic: return "conic";
    case BindingType::Line: return "line";
    case BindingType::PPoint: return "ppoint";
  }
  return "unknown";
}

struct Statement {
  StmtKind kind = StmtKind::Let;
  std::size_t line = 0;
  std::string name;  // bound name of a declaration
  std::string verb;  // claim or query word; "circle" for the built-in conic
  bool negated = false;
  std::vector<Operand> args;
  bool has_expected = false;
  std::vector<Operand> expected;

  // Source positions do not take part in equality.
  friend bool operator==(const Statement& a, const Statement& b) {
    return a.kind == b.kind && a.name == b.name && a.verb == b.verb && a.negated == b.negated && a.args == b.args &&
           a.has_expected == b.has_expected && a.expected == b.expected;
  }
};

struct Script {
  FieldSpec field = FieldSpec::rationals();
  std::vector<Statement> statements;

  friend bool operator==(const Script&, const Script&) = default;
};

// Argument kinds of claims and queries. 'x' is a point (literal or let-name),
// 'P' a pair, 'C' a conic, 'L' a line, 'X' a plane point and ':' the literal
// separator token.
struct VerbShape {
  std::string_view verb;
  std::string_view args;
};

inline constexpr VerbShape claim_shapes[] = {
    {"involution", "PPP"}, {"harmonic", "PP"},     {"arbre", "x:PPP"},        {"melange", "PP"},
    {"pappus", "xxxxx"},   {"figure1", "CLX"},     {"quadrilateral", "CXXXXL"}, {"combinatoire", "PPP"},
    {"engaged", "xP"},
};

inline constexpr VerbShape query_shapes[] = {
    {"souche", "PPP"},  {"classify", "PPP"},  {"fixedpoints", "PPP"}, {"sixth", "PPx"},
    {"crossratio", "xxxx"}, {"reciprocal", "PP"}, {"nodes", "x:PPP"},
};

inline std::optional<std::string_view> shape_of(std::string_view verb, bool claim) {
  if (claim) {
    for (const auto& s : claim_shapes) {
      if (s.verb == verb) return s.args;
    }
  } else {
    for (const auto& s : query_shapes) {
      if (s.verb == verb) return s.args;
    }
  }
  return std::nullopt;
}

namespace detail {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\''; }
inline bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

inline std::vector<Token> lex_line(std::string_view s, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start + 1});
    } else if (digit(c) || (c == '-' && i + 1 < s.size() && digit(s[i + 1]))) {
      ++i;
      while (i < s.size() && digit(s[i])) ++i;
      out.push_back({Tok::Int, std::string(s.substr(start, i - start)), start + 1});
    } else if (std::string_view("()[],=:/").find(c) != std::string_view::npos) {
      ++i;
      out.push_back({Tok::Punct, std::string(1, c), start + 1});
    } else {
      throw ParseError(ErrorKind::SyntaxError, line_no, start + 1, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, std::size_t line, const FieldSpec& field,
             std::map<std::string, BindingType>& bindings)
      : toks_(std::move(toks)), line_(line), field_(field), bindings_(bindings) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void error(const std::string& expected) const {
    const auto& t = peek();
    std::string got = t.kind == Tok::End ? "end of line" : "'" + t.text + "'";
    throw ParseError(ErrorKind::SyntaxError, line_, t.column, "expected " + expected + ", found " + got);
  }

  Token take() { return toks_[pos_++]; }

  void expect_punct(char c) {
    if (peek().kind != Tok::Punct || peek().text[0] != c) error(std::string("'") + c + "'");
    ++pos_;
  }

  bool accept_punct(char c) {
    if (peek().kind == Tok::Punct && peek().text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string ident(const std::string& what) {
    if (peek().kind != Tok::Ident) error(what);
    return take().text;
  }

  void expect_end() {
    if (!at_end()) error("end of line");
  }

  bool literal_ahead() const {
    return peek().kind == Tok::Int || (peek().kind == Tok::Ident && peek().text == "inf");
  }

  Literal literal() {
    const auto t = peek();
    if (t.kind == Tok::Ident && t.text == "inf") {
      ++pos_;
      return Literal{0, 1, true};
    }
    if (t.kind != Tok::Int) error("a scalar literal");
    ++pos_;
    BigInt n = detail_parse(t);
    BigInt d = 1;
    if (accept_punct('/')) {
      if (peek().kind != Tok::Int) error("a denominator");
      auto dt = take();
      d = detail_parse(dt);
      if (d == 0) throw ParseError(ErrorKind::ZeroDenominator, line_, dt.column, "denominator is zero");
    }
    if (field_.kind() == FieldKind::PrimeField) {
      BigInt p = field_.modulus();
      if (((d % p) + p) % p == 0) {
        throw ParseError(ErrorKind::ZeroDenominator, line_, t.column, "denominator vanishes mod " + p.str());
      }
    }
    Rational q(n, d);
    return Literal{q.numerator(), q.denominator(), false};
  }

  /// Point operand: literal, or a name bound by `let`.
  Operand point() {
    if (literal_ahead()) return Operand::of_literal(literal());
    if (peek().kind != Tok::Ident) error("a point (literal or name)");
    return Operand::of_name(bound(BindingType::Scalar));
  }

  std::string bound(BindingType type) {
    auto t = peek();
    if (t.kind != Tok::Ident) error(std::string("a ") + std::string(to_string(type)) + " name");
    ++pos_;
    auto it = bindings_.find(t.text);
    if (it == bindings_.end()) throw ParseError(ErrorKind::UnboundName, line_, t.column, "'" + t.text + "' is not bound");
    if (it->second != type) {
      throw ParseError(ErrorKind::TypeMismatch, line_, t.column,
                       "'" + t.text + "' is a " + std::string(to_string(it->second)) + ", expected a " +
                           std::string(to_string(type)));
    }
    return t.text;
  }

  void bind(const Token& name, BindingType type) {
    if (name.text == "inf") throw ParseError(ErrorKind::SyntaxError, line_, name.column, "'inf' cannot be a name");
    if (bindings_.count(name.text)) {
      throw ParseError(ErrorKind::DuplicateName, line_, name.column, "'" + name.text + "' is already bound");
    }
    bindings_[name.text] = type;
  }

  std::vector<Operand> bracketed_literals(std::size_t n) {
    std::vector<Operand> out;
    expect_punct('[');
    for (std::size_t i = 0; i < n; ++i) {
      if (!literal_ahead() || peek().text == "inf") error("a scalar literal");
      out.push_back(Operand::of_literal(literal()));
    }
    expect_punct(']');
    return out;
  }

  std::vector<Operand> shaped_args(std::string_view shape) {
    std::vector<Operand> out;
    for (char k : shape) {
      switch (k) {
        case 'x': out.push_back(point()); break;
        case 'P': out.push_back(Operand::of_name(bound(BindingType::Pair))); break;
        case 'C': out.push_back(Operand::of_name(bound(BindingType::Conic))); break;
        case 'L': out.push_back(Operand::of_name(bound(BindingType::Line))); break;
        case 'X': out.push_back(Operand::of_name(bound(BindingType::PPoint))); break;
        case ':': expect_punct(':'); break;
      }
    }
    return out;
  }

  /// Expected values: literals, let-names and bare words; parentheses and
  /// commas are accepted for readability and dropped.
  std::vector<Operand> expected_values() {
    std::vector<Operand> out;
    while (!at_end()) {
      if (accept_punct('(') || accept_punct(')') || accept_punct(',')) continue;
      if (literal_ahead()) {
        out.push_back(Operand::of_literal(literal()));
      } else if (peek().kind == Tok::Ident) {
        auto t = take();
        auto it = bindings_.find(t.text);
        if (it != bindings_.end() && it->second != BindingType::Scalar) {
          throw ParseError(ErrorKind::TypeMismatch, line_, t.column, "'" + t.text + "' is not a scalar");
        }
        out.push_back(Operand::of_name(t.text));
      } else {
        error("an expected value");
      }
    }
    if (out.empty()) error("an expected value");
    return out;
  }

 private:
  BigInt detail_parse(const Token& t) const {
    try {
      return desargues::detail::parse_integer(t.text);
    } catch (const Error&) {
      throw ParseError(ErrorKind::SyntaxError, line_, t.column, "bad integer '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  const FieldSpec& field_;
  std::map<std::string, BindingType>& bindings_;
};

inline FieldSpec parse_field(LineParser& p, std::size_t line) {
  auto kind = p.peek();
  std::string k = p.ident("'Q' or 'Fp'");
  if (k == "Q") {
    p.expect_end();
    return FieldSpec::rationals();
  }
  if (k != "Fp") throw ParseError(ErrorKind::SyntaxError, line, kind.column, "expected 'Q' or 'Fp', found '" + k + "'");
  auto t = p.peek();
  if (t.kind != Tok::Int) p.error("a prime modulus");
  p.take();
  p.expect_end();
  try {
    auto n = desargues::detail::parse_integer(t.text);
    if (n < 0 || n > BigInt(std::numeric_limits<std::uint64_t>::max())) fail(ErrorKind::InvalidField, "modulus out of range");
    return FieldSpec::prime(static_cast<std::uint64_t>(n));
  } catch (const Error& e) {
    throw ParseError(e.kind(), line, t.column, e.detail());
  }
}

}  // namespace detail

inline Script parse_script(std::string_view text) {
  Script script;
  std::map<std::string, BindingType> bindings;
  bool have_field = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line_no;
    start = end + 1;

    auto toks = detail::lex_line(raw, line_no);
    if (toks.size() == 1) {
      if (end == text.size()) break;
      continue;
    }
    detail::LineParser p(std::move(toks), line_no, script.field, bindings);
    auto head = p.peek();
    if (head.kind != detail::Tok::Ident) p.error("a keyword");
    p.take();
    const std::string& kw = head.text;

    if (kw == "field") {
      if (have_field) throw ParseError(ErrorKind::FieldRedeclared, line_no, head.column, "field is already declared");
      script.field = detail::parse_field(p, line_no);
      have_field = true;
      continue;
    }
    if (!have_field) throw ParseError(ErrorKind::SyntaxError, line_no, head.column, "expected 'field' declaration first");

    Statement st;
    st.line = line_no;
    auto declare = [&](StmtKind kind, BindingType type) {
      st.kind = kind;
      auto name_tok = p.peek();
      st.name = p.ident("a name");
      p.expect_punct('=');
      return std::pair{name_tok, type};
    };

    if (kw == "let") {
      auto [name_tok, type] = declare(StmtKind::Let, BindingType::Scalar);
      st.args.push_back(Operand::of_literal(p.literal()));
      p.expect_end();
      p.bind(name_tok, type);
    } else if (kw == "pair") {
      auto [name_tok, type] = declare(StmtKind::Pair, BindingType::Pair);
      p.expect_punct('(');
      st.args.push_back(p.point());
      p.expect_punct(',');
      st.args.push_back(p.point());
      p.expect_punct(')');
      p.expect_end();
      p.bind(name_tok, type);
    } else if (kw == "conic") {
      auto [name_tok, type] = declare(StmtKind::Conic, BindingType::Conic);
      if (p.peek().kind == detail::Tok::Ident && p.peek().text == "circle") {
        p.take();
        st.verb = "circle";
      } else {
        st.args = p.bracketed_literals(6);
      }
      p.expect_end();
      p.bind(name_tok, type);
    } else if (kw == "line" || kw == "ppoint") {
      bool is_line = kw == "line";
      auto [name_tok, type] = declare(is_line ? StmtKind::Line : StmtKind::PPoint,
                                      is_line ? BindingType::Line : BindingType::PPoint);
      st.args = p.bracketed_literals(3);
      p.expect_end();
      p.bind(name_tok, type);
    } else if (kw == "assert") {
      st.kind = StmtKind::Claim;
      auto verb_tok = p.peek();
      st.verb = p.ident("a claim");
      if (st.verb == "not") {
        st.negated = true;
        verb_tok = p.peek();
        st.verb = p.ident("a claim");
      }
      auto shape = shape_of(st.verb, true);
      if (!shape) throw ParseError(ErrorKind::SyntaxError, line_no, verb_tok.column, "unknown claim '" + st.verb + "'");
      st.args = p.shaped_args(*shape);
      p.expect_end();
    } else if (auto shape = shape_of(kw, false)) {
      st.kind = StmtKind::Query;
      st.verb = kw;
      st.args = p.shaped_args(*shape);
      if (p.accept_punct('=')) {
        st.has_expected = true;
        st.expected = p.expected_values();
      }
      p.expect_end();
    } else {
      throw ParseError(ErrorKind::SyntaxError, line_no, head.column, "unknown statement '" + kw + "'");
    }
    script.statements.push_back(std::move(st));
  }
  if (!have_field) throw ParseError(ErrorKind::SyntaxError, line_no == 0 ? 1 : line_no, 1, "expected 'field' declaration");
  return script;
}

/// Canonical text of one statement.
inline std::string print_statement(const Statement& st) {
  auto join_args = [](const std::vector<Operand>& ops, std::size_t from = 0) {
    std::string s;
    for (std::size_t i = from; i < ops.size(); ++i) s += (s.empty() ? "" : " ") + ops[i].to_string();
    return s;
  };
  switch (st.kind) {
    case StmtKind::Let: return "let " + st.name + " = " + st.args[0].to_string();
    case StmtKind::Pair: return "pair " + st.name + " = (" + st.args[0].to_string() + ", " + st.args[1].to_string() + ")";
    case StmtKind::Conic: return "conic " + st.name + " = " + (st.verb == "circle" ? "circle" : "[" + join_args(st.args) + "]");
    case StmtKind::Line: return "line " + st.name + " = [" + join_args(st.args) + "]";
    case StmtKind::PPoint: return "ppoint " + st.name + " = [" + join_args(st.args) + "]";
    case StmtKind::Claim:
    case StmtKind::Query: {
      std::string s = st.kind == StmtKind::Claim ? "assert " : "";
      if (st.negated) s += "not ";
      s += st.verb;
      auto shape = *shape_of(st.verb, st.kind == StmtKind::Claim);
      std::size_t i = 0;
      for (char k : shape) {
        s += k == ':' ? std::string(" :") : " " + st.args[i++].to_string();
      }
      if (st.has_expected) s += " = " + join_args(st.expected);
      return s;
    }
  }
  return "";
}

inline std::string print_script(const Script& script) {
  std::string out = "field " + script.field.to_string() + "\n";
  for (const auto& st : script.statements) out += print_statement(st) + "\n";
  return out;
}

}  // namespace desargues::dsl
