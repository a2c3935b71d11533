// Randomized invariants. Seeds are fixed so failures reproduce.

#include "jetcoh/affine.hpp"
#include "jetcoh/cochain.hpp"
#include "jetcoh/fock.hpp"
#include "jetcoh/reptheory.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jetcoh;

namespace {

const liealg::AlgebraData& algebra(const std::string& name) {
  static std::map<std::string, liealg::AlgebraData> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, liealg::build_algebra(liealg::AlgebraSpec::parse(name))).first;
  return it->second;
}

std::vector<Rational> random_element(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  std::vector<Rational> v(n);
  for (auto& x : v) x = frac(num(rng), den(rng));
  return v;
}

std::vector<Rational> add(std::vector<Rational> a, const std::vector<Rational>& b, int s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

class PerAlgebra : public ::testing::TestWithParam<const char*> {};

}  // namespace

TEST_P(PerAlgebra, BracketIsAntisymmetricAndSatisfiesJacobi) {
  const auto& g = algebra(GetParam());
  std::mt19937 rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto x = random_element(g.dim(), rng), y = random_element(g.dim(), rng), z = random_element(g.dim(), rng);
    EXPECT_EQ(g.bracket(x, y), add(std::vector<Rational>(g.dim()), g.bracket(y, x), -1));
    auto j = add(g.bracket(x, g.bracket(y, z)), g.bracket(y, g.bracket(z, x)));
    j = add(j, g.bracket(z, g.bracket(x, y)));
    for (const auto& c : j) EXPECT_EQ(c, 0);
  }
}

TEST_P(PerAlgebra, FormIsInvariantAndHermitianFormIsPositive) {
  const auto& g = algebra(GetParam());
  std::mt19937 rng(2);
  for (int t = 0; t < 20; ++t) {
    const auto x = random_element(g.dim(), rng), y = random_element(g.dim(), rng), z = random_element(g.dim(), rng);
    EXPECT_EQ(liealg::scaled_form(g, g.bracket(x, y), z), liealg::scaled_form(g, x, g.bracket(y, z)));
    EXPECT_EQ(liealg::scaled_form(g, x, y), liealg::scaled_form(g, y, x));
    Rational h = 0;
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (std::size_t b = 0; b < g.dim(); ++b) h += x[a] * g.herm_gram()(a, b) * x[b];
    EXPECT_GT(h, 0);
  }
}

TEST_P(PerAlgebra, CellWeightsAreWeylSymmetricAndDecomposeExactly) {
  const auto& g = algebra(GetParam());
  const reptheory::CharacterTable table(g);
  for (int p = 0; p <= 2; ++p)
    for (int k = 0; k <= 3; ++k) {
      const auto w = reptheory::weights_of_basis(g, cochain::build_basis(g, p, k));
      EXPECT_TRUE(reptheory::is_weyl_symmetric(g, w));
      EXPECT_EQ(reptheory::expand(table, reptheory::decompose(table, w)), w);
      EXPECT_EQ(static_cast<std::size_t>(reptheory::mass(w)), cochain::count_basis(g.dim(), p, k));
    }
}

TEST_P(PerAlgebra, RandomSummandsRoundTrip) {
  const auto& g = algebra(GetParam());
  const reptheory::CharacterTable table(g);
  const auto& rs = g.roots();
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(0, 2), mult(1, 3);
  for (int t = 0; t < 8; ++t) {
    std::map<liealg::FiniteWeight, std::int64_t> want;
    for (int s = 0; s < 2; ++s) {
      // Dominant weight as a nonnegative combination of dominant roots or rho.
      liealg::FiniteWeight hw = Rational(coef(rng)) * rs.theta() + Rational(coef(rng)) * rs.rho();
      hw = rs.dominant_conjugate(hw);
      want[-hw] += mult(rng);
    }
    std::vector<reptheory::IrrepSummand> summands;
    for (const auto& [lw, m] : want) summands.push_back({lw, m, rs.weyl_dimension(-lw)});
    const auto chars = reptheory::expand(table, summands);
    auto back = reptheory::decompose(table, chars);
    std::sort(back.begin(), back.end(), [](const auto& a, const auto& b) { return a.lowest_weight < b.lowest_weight; });
    std::sort(summands.begin(), summands.end(), [](const auto& a, const auto& b) { return a.lowest_weight < b.lowest_weight; });
    EXPECT_EQ(back, summands);
  }
}

TEST_P(PerAlgebra, DifferentialSquaresToZero) {
  const auto& g = algebra(GetParam());
  for (int p = 0; p <= 2; ++p)
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(cochain::build_cell(g, p, k).dd_zero) << p << "," << k;
}

TEST_P(PerAlgebra, InversionSumsAreZerosOfTheAffinePolynomial) {
  const auto& g = algebra(GetParam());
  for (const auto& w : affine::minimal_coset_reps(g, 3)) {
    const auto lam = affine::rho_difference(g, w);
    EXPECT_EQ(affine::zero_locus_polynomial(g, lam), 0);
    EXPECT_TRUE(g.roots().is_antidominant(lam.finite));
    EXPECT_EQ(cochain::eigenvalue_of(g, lam.finite, static_cast<int>(lam.energy)), 0);
  }
}

INSTANTIATE_TEST_SUITE_P(Algebras, PerAlgebra, ::testing::Values("A1", "A2", "A3", "B2", "C3", "G2"));

TEST(FockProperties, EnergyBookkeeping) {
  const fock::FockModel m(algebra("A1"));
  std::mt19937 rng(4);
  const auto basis = fock::enumerate_monomials(3, -1, 2);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> mode(0, 2), level(-1, 2);
  for (int t = 0; t < 200; ++t) {
    const auto& u = basis[pick(rng)];
    const fock::FockVector v(u);
    const int i = mode(rng), k = level(rng);
    const fock::FockVector e = m.eps({i, k}, v), io = m.iota({i, k}, v), l = m.L(i, k, v), dv = m.d(v);
    for (const auto& [x, c] : e.terms()) EXPECT_EQ(x.energy(), u.energy() + k);
    for (const auto& [x, c] : io.terms()) EXPECT_EQ(x.energy(), u.energy() - k);
    for (const auto& [x, c] : l.terms()) EXPECT_EQ(x.energy(), u.energy() - k);
    for (const auto& [x, c] : dv.terms()) {
      EXPECT_EQ(x.energy(), u.energy());
      EXPECT_EQ(x.degree_offset(), u.degree_offset() + 1);
    }
  }
}

TEST(FockProperties, CliffordOnRandomVectors) {
  const fock::FockModel m(algebra("A2"));
  std::mt19937 rng(6);
  const auto basis = fock::enumerate_monomials(8, 0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> mode(0, 7), level(0, 1);
  for (int t = 0; t < 100; ++t) {
    fock::FockVector v;
    for (int s = 0; s < 3; ++s) v.add(basis[pick(rng)], fock::Scalar(s + 1.0, -s));
    const fock::ModeIndex a{mode(rng), level(rng)}, b{mode(rng), level(rng)};
    fock::FockVector x = m.iota(a, m.eps(b, v));
    x.add(m.eps(b, m.iota(a, v)));
    const fock::FockVector expected = a == b ? v : fock::FockVector();
    EXPECT_LT((x - expected).max_abs(), 1e-12);
  }
}

TEST(RationalProperties, TextRoundTrip) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const Rational q = frac(static_cast<long>(rng() % 2000001) - 1000000, static_cast<long>(rng() % 999) + 1);
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
}
