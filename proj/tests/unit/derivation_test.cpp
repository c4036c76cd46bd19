#include <gtest/gtest.h>

#include "iwb/pi/derivation.hpp"
#include "mutants.hpp"

using namespace iwb::pi;

TEST(DerivationFile, FixtureRoundTrips) {
  const auto text = corpus::read_fixture("paper_3_1.drv");
  const auto file = parse_file_or_throw(text);
  EXPECT_EQ(file.derivation.variables, (std::vector<std::string>{"w"}));
  EXPECT_EQ(file.derivation.lines.size(), 6u);
  EXPECT_EQ(print(file.target), "(w+1)+1 > w");
  EXPECT_EQ(print_file(file), text);
  EXPECT_EQ(parse_file_or_throw(print_file(file)), file);
}

TEST(DerivationFile, JustificationForms) {
  const auto file = parse_file_or_throw(corpus::read_fixture("paper_3_1.drv"));
  const auto& lines = file.derivation.lines;
  EXPECT_TRUE(std::holds_alternative<Premise>(lines[0].justification));
  const auto& a2 = std::get<AxiomInstance>(lines[2].justification);
  EXPECT_EQ(a2.schema, "A2");
  ASSERT_EQ(a2.substitution.size(), 2u);
  EXPECT_EQ(a2.substitution[1].metavariable, "t2");
  EXPECT_EQ(a2.substitution[1].value.print(), "1");
  const auto& r1 = std::get<RuleApplication>(lines[5].justification);
  EXPECT_EQ(r1.rule, "R1");
  EXPECT_EQ(r1.premises, (std::vector<std::size_t>{4, 5}));
}

TEST(DerivationFile, FbarJustification) {
  const std::string text = "vars:\ntarget: fbar(3) is 1\n1. fbar(3) is 1 [axiom FBAR(3)]\n";
  const auto file = parse_file_or_throw(text);
  const auto& a = std::get<AxiomInstance>(file.derivation.lines[0].justification);
  EXPECT_EQ(a.schema, "FBAR");
  EXPECT_EQ(a.pack_index, iwb::Natural(3));
  EXPECT_TRUE(file.derivation.variables.empty());
  EXPECT_EQ(print_file(file), text);
}

TEST(DerivationFile, ToleratesCrlfAndMissingFinalNewline) {
  const std::string text = "vars: w\r\ntarget: int(w)\r\n1. int(w) [premise]";
  const auto file = parse_file_or_throw(text);
  EXPECT_EQ(file.derivation.lines.size(), 1u);
}

TEST(DerivationFile, MultipleVariables) {
  const auto file = parse_file_or_throw("vars: a, b,c\ntarget: int(a)\n1. int(a) [premise]\n");
  EXPECT_EQ(file.derivation.variables, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(print_file(file).substr(0, 14), "vars: a, b, c\n");
}

TEST(DerivationFile, ParseErrors) {
  for (const std::string text : {
           "",
           "vars: w\n",                                               // no target line
           "vars: w, w\ntarget: int(w)\n",                            // duplicate variable
           "target: int(w)\nvars: w\n",                               // wrong order
           "vars: w\ntarget: int(w)\n1 int(w) [premise]\n",           // missing dot
           "vars: w\ntarget: int(w)\n1. int(w)\n",                    // no justification
           "vars: w\ntarget: int(w)\n1. int(w) [premise\n",           // unclosed
           "vars: w\ntarget: int(w)\n1. int(w) [axiom A1 {t = w}]\n", // ':=' expected
           "vars: w\ntarget: int(w)\n1. int(w) [rule R1 ,]\n",
           "vars: w\ntarget: int(w)\n1. int(w) [lemma]\n",
       }) {
    EXPECT_TRUE(std::holds_alternative<iwb::ParseError>(parse_file(text))) << text;
  }
}

TEST(DerivationFile, ErrorNamesPosition) {
  const auto r = parse_file("vars: w\ntarget: int(w)\n1. int(w) [premis]\n");
  const auto& e = std::get<iwb::ParseError>(r);
  EXPECT_EQ(e.position, 34u);
  EXPECT_EQ(e.expected, (std::vector<std::string>{"axiom", "premise", "rule"}));
  EXPECT_THROW(parse_file_or_throw("vars: w\n"), iwb::ParseFailure);
}

TEST(DerivationBody, RoundTrip) {
  const auto file = parse_file_or_throw(corpus::read_fixture("paper_3_1.drv"));
  const auto body = print_body(file.derivation);
  EXPECT_EQ(body.back(), ']');
  const auto parsed = parse_body(body);
  ASSERT_TRUE(std::holds_alternative<Derivation>(parsed));
  EXPECT_EQ(std::get<Derivation>(parsed), file.derivation);
}

TEST(DerivationBody, HeaderOnly) {
  const auto parsed = parse_body("vars:");
  ASSERT_TRUE(std::holds_alternative<Derivation>(parsed));
  EXPECT_TRUE(std::get<Derivation>(parsed).lines.empty());
}
