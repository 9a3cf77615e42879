#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "helpers.hpp"

using namespace desargues;
using namespace desargues::dsl;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> corpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(DESARGUES_CORPUS_DIR)) {
    if (e.path().extension() == ".dsl") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_script(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorKind::SyntaxError;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto i = s.find(needle); i != std::string::npos; i = s.find(needle, i + 1)) ++n;
  return n;
}

}  // namespace

TEST(Parse, OnePair) {
  auto s = parse_script("field Q\npair P = (1, 6)\n");
  EXPECT_EQ(s.field, FieldSpec::rationals());
  ASSERT_EQ(s.statements.size(), 1u);
  EXPECT_EQ(s.statements[0].kind, StmtKind::Pair);
  EXPECT_EQ(s.statements[0].name, "P");
}

TEST(Parse, FieldFirst) {
  EXPECT_EQ(parse_error_kind("pair P = (1, 6)"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error_kind(""), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error_kind("field Q\nfield Q\n"), ErrorKind::FieldRedeclared);
  EXPECT_EQ(parse_error_kind("field Fp 2\n"), ErrorKind::InvalidField);
  EXPECT_EQ(parse_error_kind("field Fp 91\n"), ErrorKind::InvalidField);
}

TEST(Parse, ModularLiteral) {
  auto s = parse_script("field Fp 97\nlet x = 1/3\n");
  EXPECT_EQ(scalar_binding(s, "x"), "65");
  EXPECT_EQ(parse_error_kind("field Fp 97\nlet x = 1/97\n"), ErrorKind::ZeroDenominator);
  EXPECT_EQ(parse_error_kind("field Q\nlet x = 1/0\n"), ErrorKind::ZeroDenominator);
}

TEST(Parse, BindingErrors) {
  EXPECT_EQ(parse_error_kind("field Q\nassert harmonic P Q\n"), ErrorKind::UnboundName);
  EXPECT_EQ(parse_error_kind("field Q\nlet x = 1\nlet y = 2\nassert harmonic x y\n"), ErrorKind::TypeMismatch);
  EXPECT_EQ(parse_error_kind("field Q\npair P = (1, 2)\npair P = (3, 4)\n"), ErrorKind::DuplicateName);
  EXPECT_EQ(parse_error_kind("field Q\nassert frobnicate\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error_kind("field Q\npair P = (1 6)\n"), ErrorKind::SyntaxError);
}

TEST(Parse, ErrorsCarryLine) {
  try {
    parse_script("field Q\n\npair P = (1, 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Run, InvolutionHolds) {
  auto r = run_script(parse_script("field Q\npair A = (1, 6)\npair B = (2, 3)\npair C = (-1, -6)\nassert involution A B C\n"));
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].verdict, Verdict::Holds);
  EXPECT_TRUE(r.pass());
}

TEST(Run, HarmonicFails) {
  auto r = run_script(parse_script("field Q\npair F = (2, -2)\npair G = (1, 3)\nassert harmonic F G\n"));
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].verdict, Verdict::Fails);
  EXPECT_NE(r.entries[0].value.find("-5/3"), std::string::npos) << r.entries[0].value;
  EXPECT_FALSE(r.pass());
}

TEST(Run, SoucheOfNonInvolutionIsError) {
  auto r = run_script(parse_script("field Q\npair A = (1, 6)\npair B = (2, 3)\npair C = (-1, -5)\nsouche A B C\n"));
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].verdict, Verdict::Error);
  EXPECT_EQ(r.entries[0].error, ErrorKind::NotAnInvolution);
}

TEST(Run, QueriesAndExpectations) {
  auto r = run_script(parse_script(
      "field Q\npair A = (1, 6)\npair B = (2, 3)\nsixth A B -1 = -6\nsixth A B -1 = 7\nsixth A B 0\n"));
  ASSERT_EQ(r.entries.size(), 3u);
  EXPECT_EQ(r.entries[0].verdict, Verdict::Holds);
  EXPECT_EQ(r.entries[1].verdict, Verdict::Fails);
  EXPECT_EQ(r.entries[2].value, "inf");
  EXPECT_EQ(r.entries[2].verdict, Verdict::Holds);
}

TEST(Run, ReportFormats) {
  auto r = run_script(parse_script("field Q\npair F = (2, -2)\npair G = (1, 3)\nassert harmonic F G\n"));
  auto text = r.to_text();
  EXPECT_NE(text.find("line 4: assert harmonic F G ... FAILS"), std::string::npos) << text;
  EXPECT_NE(text.find("FAIL\n"), std::string::npos);
  auto j = r.to_json();
  EXPECT_EQ(j["schema"], "desargues-report/1");
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["claims"][0]["verdict"], "fails");
}

TEST(Corpus, RoundTripsThroughPrinter) {
  auto files = corpus();
  ASSERT_GE(files.size(), 13u);
  for (const auto& f : files) {
    auto s = parse_script(slurp(f));
    auto printed = print_script(s);
    EXPECT_EQ(parse_script(printed), s) << f;
    EXPECT_EQ(print_script(parse_script(printed)), printed) << f;
  }
}

TEST(Corpus, GoldenVerdicts) {
  for (const auto& f : corpus()) {
    auto r = run_script(parse_script(slurp(f)));
    bool should_fail = f.filename().string().rfind("fail_", 0) == 0;
    EXPECT_EQ(r.pass(), !should_fail) << f << "\n" << r.to_text();
  }
}

TEST(Render, PairsAndSouche) {
  auto svg = render(parse_script(
      "field Q\npair A = (1, 6)\npair B = (2, 3)\npair C = (-1, -6)\nassert arbre 0 : A B C\n"));
  EXPECT_EQ(count(svg, "class=\"point\""), 6u);
  EXPECT_EQ(count(svg, "class=\"arc\""), 3u);
  EXPECT_EQ(count(svg, "class=\"souche\""), 1u);
  // Range [-6, 6] padded by 10% maps 0 to the middle of [20, 780].
  EXPECT_NE(svg.find("class=\"souche\" x1=\"400.00\""), std::string::npos);
  EXPECT_EQ(svg, render(parse_script(
                     "field Q\npair A = (1, 6)\npair B = (2, 3)\npair C = (-1, -6)\nassert arbre 0 : A B C\n")));
}

TEST(Render, Rejections) {
  EXPECT_ERROR_KIND(render(parse_script("field Q\n")), ErrorKind::NothingToRender);
  EXPECT_ERROR_KIND(render(parse_script("field Fp 97\npair A = (1, 6)\n")), ErrorKind::UnorderedField);
}
