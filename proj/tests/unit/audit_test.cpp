#include <gtest/gtest.h>

#include "iwb/search/audit.hpp"
#include "oracles.hpp"

using iwb::Natural;
using namespace iwb::search;
namespace pi = iwb::pi;

namespace {

std::vector<Natural> naturals(std::initializer_list<int> xs) {
  std::vector<Natural> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

int reference_truth(const Natural& x) {
  static const auto programs = oracle::program_list(6);
  const auto i = static_cast<std::size_t>(x);
  return 1 - oracle::eval(programs.at(i - 1), i);
}

}  // namespace

TEST(Decide, Examples) {
  const auto pack = pi::make_axiom_pack(5);
  const int truth = reference_truth(3);
  EXPECT_EQ(decide_fbar(pack, {3, truth}), Derivability::Derivable);
  EXPECT_EQ(decide_fbar(pack, {3, 1 - truth}), Derivability::NotDerivable);
  EXPECT_EQ(decide_fbar(pack, {9, 0}), Derivability::NotDerivable);
  EXPECT_EQ(decide_fbar(pack, {9, 1}), Derivability::NotDerivable);
}

TEST(Gap, Examples) {
  EXPECT_EQ(completeness_gap(pi::make_axiom_pack(5), 8), naturals({6, 7, 8}));
  EXPECT_EQ(completeness_gap(pi::make_axiom_pack(0), 3), naturals({1, 2, 3}));
  EXPECT_TRUE(completeness_gap(pi::make_axiom_pack(5), 5).empty());
  EXPECT_THROW(completeness_gap({}, 0), iwb::DomainError);
}

TEST(Soundness, TruthBuiltPack) {
  const auto report = audit_soundness(pi::make_axiom_pack(100), reference_truth);
  EXPECT_EQ(report.queries, 200u);
  EXPECT_EQ(report.derivable, 100u);
  EXPECT_TRUE(report.violations.empty());
}

TEST(Soundness, DefaultOracleAgrees) {
  EXPECT_TRUE(audit_soundness(pi::make_axiom_pack(30)).violations.empty());
}

TEST(Soundness, OneFlippedBit) {
  pi::AxiomPack pack;
  for (int x = 1; x <= 20; ++x) pack.add(x, x == 13 ? 1 - reference_truth(x) : reference_truth(x));
  const auto report = audit_soundness(pack, reference_truth);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].x, 13);
  EXPECT_EQ(report.violations[0].bit, 1 - reference_truth(13));
}

TEST(Soundness, EmptyPack) {
  const auto report = audit_soundness({}, reference_truth);
  EXPECT_EQ(report.derivable, 0u);
  EXPECT_TRUE(report.violations.empty());
}

TEST(Consistency, Examples) {
  EXPECT_TRUE(audit_consistency(pi::make_axiom_pack(50), 60).violations.empty());
  EXPECT_EQ(audit_consistency(pi::make_axiom_pack(50), 60).checked, 60u);

  pi::AxiomPack both;
  both.add(2, 0);
  both.add(2, 1);
  EXPECT_EQ(audit_consistency(both, 5).violations, naturals({2}));

  EXPECT_TRUE(audit_consistency({}, 40).violations.empty());
  EXPECT_THROW(audit_consistency({}, 0), iwb::DomainError);
}
