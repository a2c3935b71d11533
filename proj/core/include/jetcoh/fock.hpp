#pragma once

#include "jetcoh/cochain.hpp"
#include "jetcoh/liealg.hpp"

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jetcoh::fock {

using Scalar = std::complex<double>;

/// Mode e^{i,k}: i indexes the orthonormal basis of the complexified algebra.
/// Ordered by (k, i).
struct ModeIndex {
  int i = 0;
  int k = 0;
  bool operator==(const ModeIndex&) const = default;
  bool operator<(const ModeIndex& o) const { return k != o.k ? k < o.k : i < o.i; }
};

/// Semi-infinite wedge, encoded by its difference with the vacuum: modes with
/// k >= 1 that are occupied and modes with k <= 0 that are empty. The wedge is
/// read in descending mode order; signs of operators come from that order.
struct SemiInfMonomial {
  std::vector<ModeIndex> added;    // sorted, k >= 1
  std::vector<ModeIndex> removed;  // sorted, k <= 0

  int degree_offset() const { return static_cast<int>(added.size()) - static_cast<int>(removed.size()); }
  long energy() const;
  bool occupied(const ModeIndex& m) const;
  /// Lowest and highest mode degree differing from the vacuum, if any.
  std::optional<std::pair<int, int>> support() const;
  std::string to_string() const;

  bool operator==(const SemiInfMonomial&) const = default;
  bool operator<(const SemiInfMonomial& o) const;
};

/// Sparse combination of monomials; no stored zeros.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(SemiInfMonomial m, Scalar c = 1.0);

  void add(const SemiInfMonomial& m, Scalar c);
  void add(const FockVector& v, Scalar scale = 1.0);
  /// Drops entries with |c| <= eps.
  void prune(double eps = 0.0);

  const std::map<SemiInfMonomial, Scalar>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const SemiInfMonomial& m) const;
  double max_abs() const;

 private:
  std::map<SemiInfMonomial, Scalar> terms_;
};

FockVector operator-(const FockVector& a, const FockVector& b);

struct EnergyWindow {
  int kMin = -2;
  int kMax = 3;
  int guard = 1;

  /// Throws std::invalid_argument unless kMin <= 0 < kMax, guard >= 0 and the
  /// guarded sub-window [kMin+guard, kMax-guard] is non-empty.
  void validate() const;
  int guarded_min() const { return kMin + guard; }
  int guarded_max() const { return kMax - guard; }
  bool contains(const SemiInfMonomial& m) const;
  bool guarded(const SemiInfMonomial& m, int shift) const;
  std::string to_string() const;
};

/// An operator was applied outside the region where the window is trusted.
class WindowViolation : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The algebra in a basis alpha_1..alpha_n orthonormal for the invariant
/// bilinear form and for the hermitian form: alpha = u for u in the
/// non-compact part and alpha = i*u for u in the compact part, with u real.
class FockModel {
 public:
  explicit FockModel(const liealg::AlgebraData& data);

  const liealg::AlgebraData& algebra() const { return *data_; }
  int dim() const { return n_; }
  double coxeter() const { return static_cast<double>(data_->coxeter()); }

  /// C_{iq}^p with [alpha_i, alpha_q] = sum_p C_{iq}^p alpha_p.
  Scalar C(int i, int q, int p) const { return c_[(static_cast<std::size_t>(i) * n_ + q) * n_ + p]; }
  /// Nonzero (q, p, C_{iq}^p) for fixed i.
  struct Entry {
    int q, p;
    Scalar value;
  };
  const std::vector<Entry>& structure_row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

  /// e^a (dual of the Chevalley basis element x_a) = sum_j dual(a, j) alpha^j.
  Scalar dual(std::size_t a, int j) const { return dual_[a * n_ + static_cast<std::size_t>(j)]; }

  FockVector vacuum() const { return FockVector(SemiInfMonomial{}); }

  // Exact operators. Each acts on a monomial through finitely many terms, so
  // nothing is truncated.
  FockVector iota(const ModeIndex& m, const FockVector& v) const;
  FockVector eps(const ModeIndex& m, const FockVector& v) const;
  /// L(e_{i,k}) = sum C_{iq}^p :iota_{p,s} eps^{q,s-k}: with the normal
  /// ordering iota eps for s <= 0 and -eps iota for s > 0.
  FockVector L(int i, int k, const FockVector& v) const;
  /// Termwise hermitian adjoint of L(i, k).
  FockVector L_adjoint(int i, int k, const FockVector& v) const;
  /// d = 1/2 sum_{i,k} L_{i,k} eps^{i,k}.
  FockVector d(const FockVector& v) const;
  /// 1/2 sum s_k L_{i,k} eps^{i,k}, s_k = 1 for k > 0 and -1 for k <= 0.
  FockVector d_twisted(const FockVector& v) const;
  /// Hermitian adjoint of d_twisted for the inner product making monomials orthonormal.
  FockVector d_twisted_adjoint(const FockVector& v) const;

  /// -sum_{k>0} c k eps^{i,k} iota_{i,k} - sum_{k<0} c k iota_{i,k} eps^{i,k} + 1/2 sum_i L_{i,0}^2.
  FockVector laplacian_closed_form(const FockVector& v) const;
  /// sum_{k>0,i} 2c k eps^{i,k} eps^{i,-k}.
  FockVector d_squared_closed_form(const FockVector& v) const;

  /// eps(w) Omega for a cochain wedge of the jet algebra in the Chevalley dual basis.
  FockVector embed(const cochain::Wedge& w) const;

 private:
  // (-1)^{#occupied modes above m}.
  double sign_above(const SemiInfMonomial& u, const ModeIndex& m) const;
  // In-place primitives on one monomial; return the sign, or 0 when u is killed.
  double raw_iota(const ModeIndex& m, SemiInfMonomial& u) const;
  double raw_eps(const ModeIndex& m, SemiInfMonomial& u) const;
  void iota_mono(const ModeIndex& m, const SemiInfMonomial& u, Scalar c, FockVector& out) const;
  void eps_mono(const ModeIndex& m, const SemiInfMonomial& u, Scalar c, FockVector& out) const;
  void L_mono(int i, int k, const SemiInfMonomial& u, Scalar c, FockVector& out) const;
  void L_adjoint_mono(int i, int k, const SemiInfMonomial& u, Scalar c, FockVector& out) const;
  FockVector d_impl(const FockVector& v, bool twisted) const;

  const liealg::AlgebraData* data_;
  int n_;
  std::vector<Scalar> c_;
  std::vector<std::vector<Entry>> rows_;
  std::vector<Scalar> dual_;
};

// Window-checked entry points: the input must lie in the sub-window guarded
// for the operator's shift; otherwise WindowViolation is thrown.
FockVector apply_iota(const FockModel& model, const ModeIndex& m, const FockVector& v, const EnergyWindow& w);
FockVector apply_eps(const FockModel& model, const ModeIndex& m, const FockVector& v, const EnergyWindow& w);
FockVector apply_L(const FockModel& model, int i, int k, const FockVector& v, const EnergyWindow& w);
FockVector apply_d(const FockModel& model, const FockVector& v, const EnergyWindow& w);
FockVector apply_d_twisted(const FockModel& model, const FockVector& v, const EnergyWindow& w);

/// Every monomial whose differences with the vacuum lie in [lo, hi], sorted.
/// Throws std::invalid_argument when there are more than max_states.
std::vector<SemiInfMonomial> enumerate_monomials(int n, int lo, int hi, std::size_t max_states = std::size_t{1} << 18);

/// Central scalar of [L_{i,k}, L_{j,-k}] - L([e_{i,k}, e_{j,-k}]), measured on
/// the guarded basis: the mean diagonal entry. Also returns the max deviation
/// from that scalar times the identity. Throws WindowViolation if |k| > guard.
struct CocycleMeasurement {
  Scalar scalar;
  double off_scalar_error = 0.0;
};
CocycleMeasurement cocycle_check(const FockModel& model, int i, int j, int k, const EnergyWindow& w);

struct IdentityVerdict {
  std::string identity;
  std::optional<int> shift;
  std::string window;
  double maxAbsError = 0.0;
  bool pass = false;
  bool skipped = false;
  std::string reason;          // skip reason or failure detail
  std::optional<double> measured;
  std::optional<double> expected;
};

struct SuiteOptions {
  EnergyWindow window;
  double tolerance = 1e-9;
  int maxShift = 2;
  unsigned threads = 0;  // 0: hardware concurrency
  std::size_t maxStates = std::size_t{1} << 16;
};

/// Runs the whole operator identity suite. Verdicts are in a fixed order.
std::vector<IdentityVerdict> run_identity_suite(const FockModel& model, const SuiteOptions& options);

}  // namespace jetcoh::fock
