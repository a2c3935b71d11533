#include "jetcoh/fock.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jetcoh;
using namespace jetcoh::fock;

namespace {

const liealg::AlgebraData& a1() {
  static const auto data = liealg::build_algebra(liealg::AlgebraSpec::parse("A1"));
  return data;
}

const FockModel& model() {
  static const FockModel m(a1());
  return m;
}

double dist(const FockVector& a, const FockVector& b) { return (a - b).max_abs(); }

FockVector random_vector(const std::vector<SemiInfMonomial>& basis, std::mt19937& rng, int terms = 4) {
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_real_distribution<double> coeff(-1, 1);
  FockVector v;
  for (int t = 0; t < terms; ++t) v.add(basis[pick(rng)], Scalar(coeff(rng), coeff(rng)));
  return v;
}

}  // namespace

TEST(Fock, VacuumAndAnnihilation) {
  const FockModel& m = model();
  const FockVector vac = m.vacuum();
  ASSERT_EQ(vac.size(), 1u);
  EXPECT_EQ(vac.terms().begin()->first.energy(), 0);
  for (int i = 0; i < m.dim(); ++i) {
    for (int k = 1; k <= 3; ++k) {
      EXPECT_TRUE(m.iota({i, k}, vac).empty());
      EXPECT_TRUE(m.L(i, k, vac).empty());
    }
    for (int k = -3; k <= 0; ++k) EXPECT_TRUE(m.eps({i, k}, vac).empty());
    const FockVector one = m.eps({i, 1}, vac);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.terms().begin()->first.energy(), 1);
  }
  EXPECT_LT(m.d(vac).max_abs(), 1e-12);
}

TEST(Fock, EnumerationCount) {
  // Every mode in [lo, hi] toggles independently.
  EXPECT_EQ(enumerate_monomials(3, 0, 1).size(), 1u << 6);
  EXPECT_EQ(enumerate_monomials(3, -1, 1).size(), 1u << 9);
  EXPECT_THROW(enumerate_monomials(3, -2, 3, 100), std::invalid_argument);
}

TEST(Fock, CliffordRelations) {
  const FockModel& m = model();
  const auto basis = enumerate_monomials(3, 0, 1);
  std::vector<ModeIndex> modes;
  for (int k = 0; k <= 1; ++k)
    for (int i = 0; i < 3; ++i) modes.push_back({i, k});
  double worst = 0;
  for (const auto& u : basis) {
    const FockVector v(u);
    for (const auto& a : modes)
      for (const auto& b : modes) {
        FockVector ie = m.iota(a, m.eps(b, v));
        ie.add(m.eps(b, m.iota(a, v)));
        const FockVector expected = (a == b) ? v : FockVector();
        worst = std::max(worst, dist(ie, expected));
        FockVector ii = m.iota(a, m.iota(b, v));
        ii.add(m.iota(b, m.iota(a, v)));
        FockVector ee = m.eps(a, m.eps(b, v));
        ee.add(m.eps(b, m.eps(a, v)));
        worst = std::max({worst, ii.max_abs(), ee.max_abs()});
      }
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(Fock, OddOperatorsSquareToZero) {
  const FockModel& m = model();
  std::mt19937 rng(5);
  const auto basis = enumerate_monomials(3, -1, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const FockVector v = random_vector(basis, rng);
    const ModeIndex mode{trial % 3, trial % 4 - 1};
    EXPECT_LT(m.iota(mode, m.iota(mode, v)).max_abs(), 1e-12);
    EXPECT_LT(m.eps(mode, m.eps(mode, v)).max_abs(), 1e-12);
  }
  // iota on a monomial without the dual mode.
  const SemiInfMonomial u{{{0, 1}}, {}};
  EXPECT_TRUE(m.iota({1, 1}, FockVector(u)).empty());
}

TEST(Fock, IotaLCommutator) {
  // [iota_{j,m}, L_{i,k}] = -sum_p C_{ij}^p iota_{p,m+k}.
  const FockModel& m = model();
  const auto basis = enumerate_monomials(3, -1, 1);
  double worst = 0;
  for (int k = -1; k <= 1; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int mm = -1; mm <= 1; ++mm)
          for (std::size_t b = 0; b < basis.size(); b += 7) {
            const FockVector v(basis[b]);
            FockVector lhs = m.iota({j, mm}, m.L(i, k, v));
            lhs.add(m.L(i, k, m.iota({j, mm}, v)), -1.0);
            FockVector rhs;
            for (int p = 0; p < 3; ++p)
              if (m.C(i, j, p) != Scalar(0)) rhs.add(m.iota({p, mm + k}, v), -m.C(i, j, p));
            worst = std::max(worst, dist(lhs, rhs));
          }
  EXPECT_LT(worst, 1e-12);
}

TEST(Fock, EpsLCommutator) {
  // [eps^{j,m}, L_{i,k}] = sum_q C_{iq}^j eps^{q,m-k}.
  const FockModel& m = model();
  const auto basis = enumerate_monomials(3, -1, 1);
  double worst = 0;
  for (int k = -1; k <= 1; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int mm = -1; mm <= 1; ++mm)
          for (std::size_t b = 0; b < basis.size(); b += 5) {
            const FockVector v(basis[b]);
            FockVector lhs = m.eps({j, mm}, m.L(i, k, v));
            lhs.add(m.L(i, k, m.eps({j, mm}, v)), -1.0);
            FockVector rhs;
            for (int q = 0; q < 3; ++q)
              if (m.C(i, q, j) != Scalar(0)) rhs.add(m.eps({q, mm - k}, v), m.C(i, q, j));
            worst = std::max(worst, dist(lhs, rhs));
          }
  EXPECT_LT(worst, 1e-12);
}

TEST(Fock, CocycleValues) {
  const FockModel& m = model();
  const EnergyWindow w{-2, 3, 1};
  for (int i = 0; i < 3; ++i) {
    const auto c = cocycle_check(m, i, i, 1, w);
    EXPECT_NEAR(c.scalar.real(), 4.0, 1e-9);  // 2 c k with c = 2
    EXPECT_NEAR(c.scalar.imag(), 0.0, 1e-9);
    EXPECT_LT(c.off_scalar_error, 1e-9);
    EXPECT_NEAR(std::abs(cocycle_check(m, i, i, 0, w).scalar), 0.0, 1e-9);
    for (int j = 0; j < 3; ++j)
      if (j != i) EXPECT_NEAR(std::abs(cocycle_check(m, i, j, 1, w).scalar), 0.0, 1e-9);
  }
  EXPECT_THROW(cocycle_check(m, 0, 0, 1, EnergyWindow{-2, 3, 0}), WindowViolation);
}

TEST(Fock, DRestrictsToCochainDifferential) {
  const FockModel& m = model();
  for (int p = 1; p <= 2; ++p)
    for (int k = 1; k <= 3; ++k) {
      const auto basis = cochain::build_basis(a1(), p, k);
      for (const auto& w : basis.monomials) {
        FockVector expected;
        for (const auto& [x, c] : cochain::differential_of(a1(), w)) expected.add(m.embed(x), c.get_d());
        EXPECT_LT(dist(m.d(m.embed(w)), expected), 1e-12);
      }
    }
}

TEST(Fock, DSquared) {
  const FockModel& m = model();
  std::mt19937 rng(3);
  // Cochain sector: modes k >= 1 only.
  const auto sector = enumerate_monomials(3, 1, 2);
  for (int t = 0; t < 20; ++t) {
    const FockVector v = random_vector(sector, rng);
    EXPECT_LT(m.d(m.d(v)).max_abs(), 1e-12);
  }
  EXPECT_LT(m.d(m.d(m.vacuum())).max_abs(), 1e-12);
  // A removed slot makes d^2 nonzero, and it equals the closed form.
  const SemiInfMonomial hole{{}, {{0, -1}}};
  const FockVector v(hole);
  const FockVector dd = m.d(m.d(v));
  EXPECT_GT(dd.max_abs(), 1.0);
  EXPECT_LT(dist(dd, m.d_squared_closed_form(v)), 1e-9);
  EXPECT_GT(m.d(v).max_abs(), 0.1);
}

TEST(Fock, LaplacianSign) {
  const FockModel& m = model();
  EXPECT_LT(m.laplacian_closed_form(m.vacuum()).max_abs(), 1e-12);
  // [d, adjoint(d_twisted)]_+ equals minus the closed form on windowed states.
  const auto basis = enumerate_monomials(3, -1, 2);
  double minus = 0, plus = 0;
  for (std::size_t b = 0; b < basis.size(); b += 11) {
    const FockVector v(basis[b]);
    FockVector lap = m.d(m.d_twisted_adjoint(v));
    lap.add(m.d_twisted_adjoint(m.d(v)));
    const FockVector closed = m.laplacian_closed_form(v);
    FockVector sum = lap;
    sum.add(closed);
    minus = std::max(minus, sum.max_abs());
    plus = std::max(plus, dist(lap, closed));
  }
  EXPECT_LT(minus, 1e-9);
  EXPECT_GT(plus, 1.0);
}

TEST(Fock, WindowChecks) {
  const FockModel& m = model();
  const EnergyWindow w{-1, 2, 1};
  const FockVector inside(SemiInfMonomial{{{0, 1}}, {}});
  EXPECT_NO_THROW(apply_L(m, 0, 1, inside, w));
  EXPECT_THROW(apply_L(m, 0, 2, inside, w), WindowViolation);
  const FockVector edge(SemiInfMonomial{{{0, 2}}, {}});
  EXPECT_THROW(apply_d(m, edge, w), WindowViolation);
  EXPECT_THROW((EnergyWindow{1, 3, 0}).validate(), std::invalid_argument);
  EXPECT_THROW((EnergyWindow{-1, 1, 2}).validate(), std::invalid_argument);
}

TEST(Fock, SuiteOnSmallWindow) {
  SuiteOptions opt;
  opt.window = {-1, 2, 1};
  const auto verdicts = run_identity_suite(model(), opt);
  bool any_skipped = false;
  for (const auto& v : verdicts) {
    EXPECT_TRUE(v.pass || v.skipped) << v.identity << " " << v.reason;
    any_skipped |= v.skipped;
    if (v.skipped) EXPECT_FALSE(v.reason.empty());
    if (v.identity == "cocycle" && v.shift == 1) {
      ASSERT_TRUE(v.measured.has_value());
      EXPECT_NEAR(*v.measured, 4.0, 1e-9);
    }
  }
  EXPECT_TRUE(any_skipped);  // shift 2 exceeds guard 1
}

TEST(Fock, GuardZeroSkipsShiftedIdentities) {
  SuiteOptions opt;
  opt.window = {-1, 1, 0};
  opt.maxShift = 2;
  const auto verdicts = run_identity_suite(model(), opt);
  int skipped = 0;
  for (const auto& v : verdicts) {
    if (v.shift && *v.shift != 0) {
      EXPECT_TRUE(v.skipped) << v.identity << " " << *v.shift;
      EXPECT_FALSE(v.pass);
    }
    skipped += v.skipped;
    EXPECT_TRUE(v.pass || v.skipped) << v.identity << " " << v.reason;
  }
  EXPECT_GT(skipped, 0);
}
