#include <gtest/gtest.h>

#include "iwb/pi/checker.hpp"
#include "iwb/qlang/table.hpp"
#include "mutants.hpp"
#include "oracles.hpp"

using iwb::Natural;
using namespace iwb::pi;

namespace {

CheckResult check_text(const AxiomPack& pack, const std::string& text) {
  const auto file = parse_file_or_throw(text);
  return check_derivation(pack, file.derivation, file.target);
}

}  // namespace

TEST(Checker, FixtureAccepts) {
  EXPECT_TRUE(accepted(check_text({}, corpus::read_fixture("paper_3_1.drv"))));
}

TEST(Checker, OneLineA3) {
  EXPECT_TRUE(accepted(check_text({}, "vars:\ntarget: int(1)\n1. int(1) [axiom A3 {c := 1}]\n")));
}

TEST(Checker, MutantsRejectWithDocumentedCodes) {
  const auto mutants = corpus::checker_mutants(corpus::read_fixture("paper_3_1.drv"));
  ASSERT_GE(mutants.size(), 20u);
  for (const auto& m : mutants) {
    const auto result = check_text({}, m.text);
    ASSERT_FALSE(accepted(result)) << m.name;
    const auto& reject = std::get<Reject>(result);
    EXPECT_EQ(reject.line, m.line) << m.name;
    EXPECT_EQ(reason_code(reject.reason), m.reason) << m.name << ": " << reject.detail;
  }
}

TEST(Checker, Deterministic) {
  const auto mutants = corpus::checker_mutants(corpus::read_fixture("paper_3_1.drv"));
  for (const auto& m : mutants) EXPECT_EQ(check_text({}, m.text), check_text({}, m.text));
}

TEST(Checker, FbarNeedsPackEntry) {
  AxiomPack pack;
  pack.add(3, 1);
  const std::string good = "vars:\ntarget: fbar(3) is 1\n1. fbar(3) is 1 [axiom FBAR(3)]\n";
  EXPECT_TRUE(accepted(check_text(pack, good)));
  EXPECT_FALSE(accepted(check_text({}, good)));

  const auto wrong_bit = check_text(pack, "vars:\ntarget: fbar(3) is 0\n1. fbar(3) is 0 [axiom FBAR(3)]\n");
  EXPECT_EQ(std::get<Reject>(wrong_bit).reason, RejectReason::NotInPack);

  const auto wrong_index = check_text(pack, "vars:\ntarget: fbar(3) is 1\n1. fbar(3) is 1 [axiom FBAR(2)]\n");
  EXPECT_EQ(std::get<Reject>(wrong_index).reason, RejectReason::BadSubstitution);
}

TEST(Checker, NegationCheckIsTheSameChecker) {
  const auto pack = make_axiom_pack(5);
  const int truth = iwb::qlang::fbar_truth(3);
  const Derivation d{{}, {{1, FbarAtom{3, truth}, AxiomInstance{"FBAR", {}, Natural(3)}}}};
  EXPECT_TRUE(accepted(check_derivation(pack, d, FbarAtom{3, truth})));
  EXPECT_FALSE(accepted(check_derivation(pack, d, negate_fbar(FbarAtom{3, truth}))));
}

TEST(Checker, FormationIsNotDerivation) {
  const auto pack = make_axiom_pack(5);
  for (int bit = 0; bit <= 1; ++bit) {
    const FbarAtom atom{9, bit};
    EXPECT_TRUE(can_form(atom));
    const Derivation d{{}, {{1, atom, AxiomInstance{"FBAR", {}, Natural(9)}}}};
    EXPECT_FALSE(accepted(check_derivation(pack, d, atom)));
  }
}

TEST(Checker, AcceptedFbarAtomsAreTrue) {
  // Every single-line FBAR derivation the checker accepts under a truth-built
  // pack names a covered x with its true bit.
  const std::size_t n = 20;
  const auto pack = make_axiom_pack(n);
  const auto programs = oracle::program_list(6);
  for (std::size_t x = 1; x <= n + 5; ++x) {
    for (int bit = 0; bit <= 1; ++bit) {
      const FbarAtom atom{x, bit};
      const Derivation d{{}, {{1, atom, AxiomInstance{"FBAR", {}, Natural(x)}}}};
      if (accepted(check_derivation(pack, d, atom))) {
        EXPECT_LE(x, n);
        EXPECT_EQ(bit, 1 - oracle::eval(programs[x - 1], x));
      }
    }
  }
}

TEST(Checker, LongerChain) {
  const std::string text =
      "vars: w\n"
      "target: ((w+1)+1)+1 > w\n"
      "1. int(w) [premise]\n"
      "2. int(1) [axiom A3 {c := 1}]\n"
      "3. int(w+1) [axiom A2 {t1 := w, t2 := 1}]\n"
      "4. int((w+1)+1) [axiom A2 {t1 := w+1, t2 := 1}]\n"
      "5. ((w+1)+1)+1 > (w+1)+1 [axiom A1 {t := (w+1)+1}]\n"
      "6. (w+1)+1 > w+1 [axiom A1 {t := w+1}]\n"
      "7. w+1 > w [axiom A1 {t := w}]\n"
      "8. ((w+1)+1)+1 > w+1 [rule R1 5,6]\n"
      "9. ((w+1)+1)+1 > w [rule R1 8,7]\n";
  EXPECT_TRUE(accepted(check_text({}, text)));
}

TEST(Checker, ReasonCodesAreStable) {
  EXPECT_EQ(reason_code(RejectReason::BadSubstitution), "bad-substitution");
  EXPECT_EQ(reason_code(RejectReason::PremiseNotDeclared), "premise-not-declared");
  EXPECT_EQ(reason_code(RejectReason::RuleMismatch), "rule-mismatch");
  EXPECT_EQ(reason_code(RejectReason::WrongTarget), "wrong-target");
  EXPECT_EQ(reason_code(RejectReason::ForwardReference), "forward-reference");
}

TEST(AxiomPack, Construction) {
  EXPECT_TRUE(make_axiom_pack(0).empty());
  EXPECT_EQ(make_axiom_pack(0).extent(), 0);

  const auto pack = make_axiom_pack(5);
  const auto expected = iwb::qlang::diagonal_flip(iwb::qlang::diagonal(5));
  ASSERT_EQ(pack.size(), 5u);
  EXPECT_EQ(pack.extent(), 5);
  for (std::size_t i = 1; i <= 5; ++i) {
    EXPECT_TRUE(pack.contains(i, expected[i - 1]));
    EXPECT_FALSE(pack.contains(i, 1 - expected[i - 1]));
  }
}

TEST(AxiomPack, EntriesAreTrue) {
  const auto programs = oracle::program_list(6);
  for (const auto& e : make_axiom_pack(60).entries()) {
    const auto x = static_cast<std::size_t>(e.x);
    EXPECT_EQ(e.bit, 1 - oracle::eval(programs[x - 1], x)) << x;
  }
}

TEST(AxiomPack, HandBuilt) {
  AxiomPack pack;
  pack.add(2, 0);
  pack.add(2, 1);
  pack.add(2, 1);
  EXPECT_EQ(pack.size(), 2u);
  EXPECT_EQ(pack.entries().size(), 2u);
  EXPECT_THROW(pack.add(0, 1), iwb::DomainError);
  EXPECT_THROW(pack.add(1, 2), iwb::DomainError);
}

TEST(AxiomPack, Budget) {
  EXPECT_THROW(make_axiom_pack(50, iwb::qlang::TableLimits{10}), iwb::ResourceLimitError);
}
