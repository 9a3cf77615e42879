#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace desargues {

enum class ErrorKind {
  ZeroDenominator,
  NotASquare,
  InvalidField,
  FieldMismatch,
  ZeroVector,
  SingularHomography,
  DegenerateQuadruple,
  DegenerateTriple,
  InfinitePoint,
  CoincidentPoints,
  NotAnInvolution,
  DegenerateInvolution,
  Elliptic,
  NotHarmonic,
  NotAnArbre,
  UnorderedField,
  DegenerateConic,
  NonRationalIntersection,
  DegenerateParameter,
  DegenerateConfiguration,
  PreconditionViolated,
  CenterOnLine,
  NotAProportion,
  RuleInapplicable,
  SyntaxError,
  UnboundName,
  DuplicateName,
  FieldRedeclared,
  TypeMismatch,
  NothingToRender,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NotASquare: return "NotASquare";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::SingularHomography: return "SingularHomography";
    case ErrorKind::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorKind::DegenerateTriple: return "DegenerateTriple";
    case ErrorKind::InfinitePoint: return "InfinitePoint";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::NotAnInvolution: return "NotAnInvolution";
    case ErrorKind::DegenerateInvolution: return "DegenerateInvolution";
    case ErrorKind::Elliptic: return "Elliptic";
    case ErrorKind::NotHarmonic: return "NotHarmonic";
    case ErrorKind::NotAnArbre: return "NotAnArbre";
    case ErrorKind::UnorderedField: return "UnorderedField";
    case ErrorKind::DegenerateConic: return "DegenerateConic";
    case ErrorKind::NonRationalIntersection: return "NonRationalIntersection";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::CenterOnLine: return "CenterOnLine";
    case ErrorKind::NotAProportion: return "NotAProportion";
    case ErrorKind::RuleInapplicable: return "RuleInapplicable";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundName: return "UnboundName";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::FieldRedeclared: return "FieldRedeclared";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::NothingToRender: return "NothingToRender";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so that
/// callers (notably the claim runner) can report it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// Script errors additionally know where they happened (1-based).
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace desargues
