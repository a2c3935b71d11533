#include "jetcoh/affine.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace jetcoh;
using namespace jetcoh::affine;
using liealg::FiniteWeight;

namespace {

const liealg::AlgebraData& algebra(const std::string& name) {
  static std::map<std::string, liealg::AlgebraData> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, liealg::build_algebra(liealg::AlgebraSpec::parse(name))).first;
  return it->second;
}

FiniteWeight fw(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return FiniteWeight(v);
}

}  // namespace

TEST(Affine, PairingBasics) {
  const auto& a1 = algebra("A1");
  const AffineWeight rho = rho_hat(a1);
  EXPECT_EQ(rho.energy, 0);
  EXPECT_EQ(rho.finite, a1.roots().rho());
  EXPECT_EQ(rho.central, -2);
  EXPECT_EQ(rho_hat(algebra("A2")).central, -3);
  EXPECT_EQ(affine_pairing(a1, rho, rho), a1.roots().norm2(a1.roots().rho()));
  const AffineWeight x{3, fw({-2}), 0};
  EXPECT_EQ(affine_pairing(a1, rho, x), a1.coxeter() * 3 + a1.roots().pairing(a1.roots().rho(), x.finite));
  EXPECT_EQ(affine_pairing(a1, AffineWeight{1, fw({0}), 0}, AffineWeight{0, fw({0}), 1}), -1);
}

TEST(Affine, MinimalCosetCountsAgainstBfs) {
  EXPECT_EQ(minimal_coset_reps(algebra("A1"), 0).size(), 1u);
  EXPECT_TRUE(minimal_coset_reps(algebra("A1"), 0)[0].word.empty());
  for (int r : {1, 2, 3}) {
    const int max_len = r == 1 ? 6 : (r == 2 ? 5 : 4);
    const oracle::AffineA w(r);
    const auto counts = w.minimal_counts(max_len);
    const auto reps = minimal_coset_reps(algebra("A" + std::to_string(r)), max_len);
    std::vector<int> lib(max_len + 1, 0);
    for (const auto& e : reps) ++lib[e.length()];
    EXPECT_EQ(lib, counts) << "A" << r;
  }
  const oracle::AffineA a2(2);
  EXPECT_EQ(a2.minimal_counts(2), (std::vector<int>{1, 1, 2}));
}

TEST(Affine, InversionSetsAgainstBruteForce) {
  for (int r : {1, 2}) {
    const auto& data = algebra("A" + std::to_string(r));
    const oracle::AffineA W(r);
    for (const auto& w : minimal_coset_reps(data, r == 1 ? 5 : 4)) {
      std::set<std::pair<long, oracle::AffineA::V>> lib;
      for (const auto& root : inversion_set(data, w)) {
        oracle::AffineA::V fin;
        for (const auto& c : root.alpha.coords()) fin.push_back(c.get_num().get_si());
        lib.insert({root.k, fin});
      }
      EXPECT_EQ(lib, W.inversions(W.of_word(w.word), 12)) << w.to_string();
      EXPECT_EQ(lib.size(), w.length());
    }
  }
}

TEST(Affine, A1InversionExamples) {
  const auto& a1 = algebra("A1");
  const auto reps = minimal_coset_reps(a1, 3);
  ASSERT_EQ(reps.size(), 4u);
  EXPECT_TRUE(inversion_set(a1, reps[0]).empty());
  const auto one = inversion_set(a1, reps[1]);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].k, 1);
  EXPECT_EQ(one[0].alpha, fw({-1}));
  std::set<std::pair<std::int64_t, FiniteWeight>> two;
  for (const auto& x : inversion_set(a1, reps[2])) two.insert({x.k, x.alpha});
  EXPECT_EQ(two, (std::set<std::pair<std::int64_t, FiniteWeight>>{{1, fw({-1})}, {2, fw({-1})}}));
  EXPECT_EQ(rho_difference(a1, reps[0]), (AffineWeight{0, fw({0}), 0}));
  EXPECT_EQ(rho_difference(a1, reps[1]), (AffineWeight{1, fw({-1}), 0}));
  EXPECT_EQ(rho_difference(a1, reps[2]), (AffineWeight{3, fw({-2}), 0}));
  EXPECT_EQ(rho_difference(a1, reps[3]), (AffineWeight{6, fw({-3}), 0}));
}

TEST(Affine, RhoDifferenceIsInversionSum) {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3"}) {
    const auto& data = algebra(name);
    for (const auto& w : minimal_coset_reps(data, 4)) {
      AffineWeight sum{0, FiniteWeight(data.rank()), 0};
      for (const auto& root : inversion_set(data, w)) sum = sum + root.as_weight();
      EXPECT_EQ(rho_difference(data, w), sum) << name << " " << w.to_string();
    }
  }
}

TEST(Affine, PredictionsForA1AndA2) {
  const auto p1 = predict_cohomology(algebra("A1"), 3);
  ASSERT_EQ(p1.size(), 4u);
  const std::vector<std::pair<std::int64_t, std::int64_t>> expected{{0, 1}, {1, 3}, {3, 5}, {6, 7}};
  for (std::size_t p = 0; p < 4; ++p) {
    ASSERT_EQ(p1[p].size(), 1u);
    EXPECT_EQ(p1[p][0].energy, expected[p].first);
    EXPECT_EQ(p1[p][0].finite_dim, expected[p].second);
    // Dimension via the Weyl formula for sl2: 2j + 1 with highest weight -lowest.
    EXPECT_EQ(p1[p][0].finite_dim, 1 - 2 * p1[p][0].lowest_weight.finite[0].get_num().get_si());
  }
  const auto p2 = predict_cohomology(algebra("A2"), 2);
  ASSERT_EQ(p2.size(), 3u);
  EXPECT_EQ(p2[0].size(), 1u);
  EXPECT_EQ(p2[1].size(), 1u);
  ASSERT_EQ(p2[2].size(), 2u);
  EXPECT_NE(p2[2][0].lowest_weight, p2[2][1].lowest_weight);
  EXPECT_EQ(p2[1][0].finite_dim, 8);
  const auto p0 = predict_cohomology(algebra("G2"), 0);
  ASSERT_EQ(p0.size(), 1u);
  EXPECT_EQ(p0[0][0].finite_dim, 1);
  EXPECT_EQ(p0[0][0].energy, 0);
}

TEST(Affine, ZeroLocusExamples) {
  const auto& a1 = algebra("A1");
  EXPECT_EQ(zero_locus_brute_force(a1, 1), (std::vector<AffineWeight>{{0, fw({0}), 0}, {1, fw({-1}), 0}}));
  EXPECT_EQ(zero_locus_brute_force(a1, 3),
            (std::vector<AffineWeight>{{0, fw({0}), 0}, {1, fw({-1}), 0}, {3, fw({-2}), 0}}));
  EXPECT_EQ(zero_locus_polynomial(a1, AffineWeight{0, fw({0}), 0}), 0);
}

TEST(Affine, ZeroLocusMatchesInversionSums) {
  for (const auto& [name, e] : std::vector<std::pair<std::string, int>>{{"A1", 6}, {"A2", 4}, {"B2", 3}}) {
    const auto& data = algebra(name);
    EXPECT_EQ(zero_locus_brute_force(data, e), predicted_zero_locus(data, e)) << name;
  }
}

TEST(Affine, RepeatedRootsGiveExtraZeros) {
  // With multisets instead of sets, A1 picks up (3, [3]) = 3 * (1, alpha).
  const auto& a1 = algebra("A1");
  const auto with = zero_locus_brute_force(a1, 3, true);
  const auto without = zero_locus_brute_force(a1, 3, false);
  EXPECT_GT(with.size(), without.size());
  EXPECT_NE(std::find(with.begin(), with.end(), AffineWeight{3, fw({3}), 0}), with.end());
}

TEST(Affine, CremeAgainstDirectFormula) {
  for (const char* name : {"A1", "A2", "B2"}) {
    const auto& data = algebra(name);
    const auto& rs = data.roots();
    for (const auto& lw : {FiniteWeight(data.rank()), -rs.theta(), -(rs.theta() + rs.theta())})
      for (int k = 0; k < 5; ++k) {
        const Rational direct = -rs.pairing(rs.rho(), lw) + frac(1, 2) * rs.norm2(lw) - Rational(data.coxeter() * k);
        EXPECT_EQ(zero_locus_polynomial(data, AffineWeight{k, lw, 0}), direct) << name << " k=" << k;
      }
  }
}
