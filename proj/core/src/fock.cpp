#include "jetcoh/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace jetcoh::fock {

// ---- monomials and vectors ----

long SemiInfMonomial::energy() const {
  long e = 0;
  for (const auto& m : added) e += m.k;
  for (const auto& m : removed) e -= m.k;
  return e;
}

bool SemiInfMonomial::occupied(const ModeIndex& m) const {
  if (m.k >= 1) return std::binary_search(added.begin(), added.end(), m);
  return !std::binary_search(removed.begin(), removed.end(), m);
}

std::optional<std::pair<int, int>> SemiInfMonomial::support() const {
  if (added.empty() && removed.empty()) return std::nullopt;
  int lo = added.empty() ? removed.front().k : added.front().k;
  int hi = removed.empty() ? added.back().k : removed.back().k;
  if (!removed.empty()) lo = std::min(lo, removed.front().k);
  if (!added.empty()) hi = std::max(hi, added.back().k);
  return std::make_pair(lo, hi);
}

std::string SemiInfMonomial::to_string() const {
  if (added.empty() && removed.empty()) return "vac";
  std::ostringstream s;
  for (const auto& m : added) s << "+(" << m.i << "," << m.k << ")";
  for (const auto& m : removed) s << "-(" << m.i << "," << m.k << ")";
  return s.str();
}

bool SemiInfMonomial::operator<(const SemiInfMonomial& o) const {
  if (added != o.added) return std::lexicographical_compare(added.begin(), added.end(), o.added.begin(), o.added.end());
  return std::lexicographical_compare(removed.begin(), removed.end(), o.removed.begin(), o.removed.end());
}

FockVector::FockVector(SemiInfMonomial m, Scalar c) {
  if (c != Scalar(0)) terms_.emplace(std::move(m), c);
}

void FockVector::add(const SemiInfMonomial& m, Scalar c) {
  if (c == Scalar(0)) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second == Scalar(0)) terms_.erase(it);
}

void FockVector::add(const FockVector& v, Scalar scale) {
  for (const auto& [m, c] : v.terms_) add(m, scale * c);
}

void FockVector::prune(double eps) {
  std::erase_if(terms_, [eps](const auto& t) { return std::abs(t.second) <= eps; });
}

Scalar FockVector::coefficient(const SemiInfMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

double FockVector::max_abs() const {
  double m = 0;
  for (const auto& [_, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

FockVector operator-(const FockVector& a, const FockVector& b) {
  FockVector r = a;
  r.add(b, -1.0);
  return r;
}

// ---- windows ----

void EnergyWindow::validate() const {
  if (kMin > 0) throw std::invalid_argument("window: kMin must be <= 0");
  if (kMax < 1) throw std::invalid_argument("window: kMax must be >= 1");
  if (guard < 0) throw std::invalid_argument("window: guard must be >= 0");
  if (guarded_min() > guarded_max()) throw std::invalid_argument("window: guarded sub-window " + to_string() + " is empty");
}

bool EnergyWindow::contains(const SemiInfMonomial& m) const {
  auto s = m.support();
  return !s || (s->first >= kMin && s->second <= kMax);
}

bool EnergyWindow::guarded(const SemiInfMonomial& m, int shift) const {
  auto s = m.support();
  const int g = std::abs(shift);
  return !s || (s->first >= kMin + g && s->second <= kMax - g);
}

std::string EnergyWindow::to_string() const {
  return "[" + std::to_string(kMin) + "," + std::to_string(kMax) + "] guard " + std::to_string(guard);
}

// ---- model ----

namespace {

using RealMatrix = std::vector<std::vector<double>>;

double to_d(const Rational& q) { return q.get_d(); }

// H-orthonormal basis of the column span of m, by modified Gram-Schmidt.
std::vector<std::vector<double>> orthonormal_span(const RealMatrix& m, const RealMatrix& h) {
  const std::size_t n = m.size();
  auto inner = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (h[r][c] != 0) s += a[r] * h[r][c] * b[c];
    return s;
  };
  std::vector<std::vector<double>> out;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<double> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = m[r][col];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : out) {
        const double t = inner(v, u);
        for (std::size_t r = 0; r < n; ++r) v[r] -= t * u[r];
      }
    const double norm2 = inner(v, v);
    if (norm2 < 1e-18) continue;
    const double s = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= s;
    out.push_back(std::move(v));
  }
  return out;
}

constexpr double kZero = 1e-12;

}  // namespace

FockModel::FockModel(const liealg::AlgebraData& data) : data_(&data), n_(static_cast<int>(data.dim())) {
  const std::size_t n = data.dim();
  RealMatrix herm(n, std::vector<double>(n)), gram(n, std::vector<double>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      herm[r][c] = to_d(data.herm_gram()(r, c));
      gram[r][c] = to_d(data.gram()(r, c));
    }
  // omega = -1 on the non-compact part, +1 on the compact part.
  const RationalMatrix omega = data.omega_matrix();
  RealMatrix plus(n, std::vector<double>(n)), minus(n, std::vector<double>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const double id = r == c ? 1.0 : 0.0;
      minus[r][c] = 0.5 * (id - to_d(omega(r, c)));
      plus[r][c] = 0.5 * (id + to_d(omega(r, c)));
    }
  std::vector<std::vector<double>> u = orthonormal_span(minus, herm);
  const std::size_t noncompact = u.size();
  for (auto& v : orthonormal_span(plus, herm)) u.push_back(std::move(v));
  if (u.size() != n) throw std::logic_error("FockModel: orthonormal basis has " + std::to_string(u.size()) + " elements");

  std::vector<Scalar> lambda(n);
  for (std::size_t j = 0; j < n; ++j) lambda[j] = j < noncompact ? Scalar(1) : Scalar(0, 1);

  // ad(x_i) as dense doubles: column q holds [x_i, x_q].
  std::vector<RealMatrix> ad(n, RealMatrix(n, std::vector<double>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < n; ++q)
      for (const auto& t : data.bracket(i, q)) ad[i][t.index][q] = to_d(t.coeff);

  // Real structure constants of u: [u_a, u_b] = sum_c R_ab^c u_c, coordinates via H.
  c_.assign(n * n * n, Scalar(0));
  std::vector<std::vector<double>> hus(n, std::vector<double>(n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) {
      double s = 0;
      for (std::size_t t = 0; t < n; ++t) s += herm[r][t] * u[c][t];
      hus[c][r] = s;
    }
  for (std::size_t a = 0; a < n; ++a) {
    RealMatrix ada(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      if (u[a][i] == 0) continue;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t q = 0; q < n; ++q) ada[r][q] += u[a][i] * ad[i][r][q];
    }
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<double> br(n, 0.0);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t q = 0; q < n; ++q) br[r] += ada[r][q] * u[b][q];
      for (std::size_t c = 0; c < n; ++c) {
        double rc = 0;
        for (std::size_t r = 0; r < n; ++r) rc += hus[c][r] * br[r];
        if (std::abs(rc) < kZero) continue;
        c_[(a * n + b) * n + c] = lambda[a] * lambda[b] * rc / lambda[c];
      }
    }
  }

  rows_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t p = 0; p < n; ++p)
        if (const Scalar v = c_[(i * n + q) * n + p]; v != Scalar(0))
          rows_[i].push_back({static_cast<int>(q), static_cast<int>(p), v});

  dual_.assign(n * n, Scalar(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < n; ++j) dual_[a * n + j] = lambda[j] * u[j][a];

  // The bilinear gram of alpha must be the identity.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      double g = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) g += u[j][r] * gram[r][c] * u[l][c];
      const Scalar v = lambda[j] * lambda[l] * g;
      if (std::abs(v - Scalar(j == l ? 1.0 : 0.0)) > 1e-9) throw std::logic_error("FockModel: basis is not orthonormal");
    }
}

double FockModel::sign_above(const SemiInfMonomial& u, const ModeIndex& m) const {
  long count = u.added.end() - std::upper_bound(u.added.begin(), u.added.end(), m);
  if (m.k <= 0) {
    count += static_cast<long>(n_) * (-m.k) + (n_ - 1 - m.i);
    count -= u.removed.end() - std::upper_bound(u.removed.begin(), u.removed.end(), m);
  }
  return (count & 1) ? -1.0 : 1.0;
}

namespace {

// Toggle of a mode in place; returns false when the operator kills u.
bool toggle_in(std::vector<ModeIndex>& list, const ModeIndex& m, bool insert) {
  auto it = std::lower_bound(list.begin(), list.end(), m);
  const bool present = it != list.end() && *it == m;
  if (insert) {
    if (present) return false;
    list.insert(it, m);
  } else {
    if (!present) return false;
    list.erase(it);
  }
  return true;
}

}  // namespace

double FockModel::raw_iota(const ModeIndex& m, SemiInfMonomial& u) const {
  const double s = sign_above(u, m);
  const bool ok = m.k >= 1 ? toggle_in(u.added, m, false) : toggle_in(u.removed, m, true);
  return ok ? s : 0.0;
}

double FockModel::raw_eps(const ModeIndex& m, SemiInfMonomial& u) const {
  const double s = sign_above(u, m);
  const bool ok = m.k >= 1 ? toggle_in(u.added, m, true) : toggle_in(u.removed, m, false);
  return ok ? s : 0.0;
}

void FockModel::iota_mono(const ModeIndex& m, const SemiInfMonomial& u, Scalar c, FockVector& out) const {
  SemiInfMonomial w = u;
  if (const double s = raw_iota(m, w); s != 0) out.add(w, s * c);
}

void FockModel::eps_mono(const ModeIndex& m, const SemiInfMonomial& u, Scalar c, FockVector& out) const {
  SemiInfMonomial w = u;
  if (const double s = raw_eps(m, w); s != 0) out.add(w, s * c);
}

namespace {

// Lowest degree holding an empty mode and highest degree holding an occupied one.
int lowest_empty(const SemiInfMonomial& u) { return u.removed.empty() ? 1 : u.removed.front().k; }
int highest_full(const SemiInfMonomial& u) { return u.added.empty() ? 0 : u.added.back().k; }

}  // namespace

void FockModel::L_mono(int i, int k, const SemiInfMonomial& u, Scalar c, FockVector& out) const {
  // A term moves a particle from (p,s) to (q,s-k): s-k must be empty, s full.
  const int lo = lowest_empty(u) + k;
  const int hi = highest_full(u);
  for (int s = lo; s <= hi; ++s) {
    for (const auto& e : rows_[static_cast<std::size_t>(i)]) {
      const ModeIndex src{e.p, s}, dst{e.q, s - k};
      SemiInfMonomial w = u;
      double sign;
      if (s <= 0) {
        sign = raw_eps(dst, w);
        if (sign == 0) continue;
        sign *= raw_iota(src, w);
      } else {
        sign = raw_iota(src, w);
        if (sign == 0) continue;
        sign *= -raw_eps(dst, w);
      }
      if (sign != 0) out.add(w, sign * e.value * c);
    }
  }
}

void FockModel::L_adjoint_mono(int i, int k, const SemiInfMonomial& u, Scalar c, FockVector& out) const {
  // Adjoint terms move a particle from (q,s-k) to (p,s).
  const int lo = lowest_empty(u);
  const int hi = highest_full(u) + k;
  for (int s = lo; s <= hi; ++s) {
    for (const auto& e : rows_[static_cast<std::size_t>(i)]) {
      const ModeIndex src{e.q, s - k}, dst{e.p, s};
      SemiInfMonomial w = u;
      double sign;
      if (s <= 0) {
        // (iota_{p,s} eps^{q,s-k})^* = iota_{q,s-k} eps^{p,s}
        sign = raw_eps(dst, w);
        if (sign == 0) continue;
        sign *= raw_iota(src, w);
      } else {
        // (-eps^{q,s-k} iota_{p,s})^* = -eps^{p,s} iota_{q,s-k}
        sign = raw_iota(src, w);
        if (sign == 0) continue;
        sign *= -raw_eps(dst, w);
      }
      if (sign != 0) out.add(w, sign * std::conj(e.value) * c);
    }
  }
}

FockVector FockModel::iota(const ModeIndex& m, const FockVector& v) const {
  FockVector out;
  for (const auto& [u, c] : v.terms()) iota_mono(m, u, c, out);
  return out;
}

FockVector FockModel::eps(const ModeIndex& m, const FockVector& v) const {
  FockVector out;
  for (const auto& [u, c] : v.terms()) eps_mono(m, u, c, out);
  return out;
}

FockVector FockModel::L(int i, int k, const FockVector& v) const {
  FockVector out;
  for (const auto& [u, c] : v.terms()) L_mono(i, k, u, c, out);
  return out;
}

FockVector FockModel::L_adjoint(int i, int k, const FockVector& v) const {
  FockVector out;
  for (const auto& [u, c] : v.terms()) L_adjoint_mono(i, k, u, c, out);
  return out;
}

FockVector FockModel::d_impl(const FockVector& v, bool twisted) const {
  FockVector out;
  for (const auto& [u, c] : v.terms()) {
    // eps^{i,k} needs (i,k) empty; L_{i,k} then needs a full mode s <= highest_full(u)
    // with s-k empty, so lowest_empty(u) <= k <= highest_full(u) - lowest_empty(u).
    const int lo = lowest_empty(u);
    const int hi = highest_full(u) - lo;
    for (int k = lo; k <= hi; ++k) {
      const double weight = 0.5 * (twisted && k <= 0 ? -1.0 : 1.0);
      for (int i = 0; i < n_; ++i) {
        FockVector w;
        eps_mono({i, k}, u, c * weight, w);
        for (const auto& [x, cx] : w.terms()) L_mono(i, k, x, cx, out);
      }
    }
  }
  return out;
}

FockVector FockModel::d(const FockVector& v) const { return d_impl(v, false); }

FockVector FockModel::d_twisted(const FockVector& v) const { return d_impl(v, true); }

FockVector FockModel::d_twisted_adjoint(const FockVector& v) const {
  // (1/2 s_k L_{i,k} eps^{i,k})^* = 1/2 s_k iota_{i,k} L_{i,k}^*.
  FockVector out;
  for (const auto& [u, c] : v.terms()) {
    // iota_{i,k} needs (i,k) full after L^*, which only fills modes s with
    // s - k <= highest_full(u), so lowest_empty(u) - highest_full(u) <= k <= highest_full(u).
    const int hi = highest_full(u);
    const int lo = lowest_empty(u) - hi;
    for (int k = lo; k <= hi; ++k) {
      const double weight = 0.5 * (k <= 0 ? -1.0 : 1.0);
      for (int i = 0; i < n_; ++i) {
        FockVector w;
        L_adjoint_mono(i, k, u, c * weight, w);
        for (const auto& [x, cx] : w.terms()) iota_mono({i, k}, x, cx, out);
      }
    }
  }
  return out;
}

FockVector FockModel::laplacian_closed_form(const FockVector& v) const {
  const double cox = coxeter();
  FockVector out;
  for (const auto& [u, c] : v.terms()) {
    // eps^{i,k} iota_{i,k} (k > 0) counts occupied positive modes and
    // iota_{i,k} eps^{i,k} (k < 0) counts empty negative modes.
    double diag = 0;
    for (const auto& m : u.added) diag -= cox * m.k;
    for (const auto& m : u.removed) diag -= cox * m.k;
    out.add(u, diag * c);
  }
  for (int i = 0; i < n_; ++i) out.add(L(i, 0, L(i, 0, v)), 0.5);
  return out;
}

FockVector FockModel::d_squared_closed_form(const FockVector& v) const {
  const double cox = coxeter();
  FockVector out;
  for (const auto& [u, c] : v.terms()) {
    // eps^{i,-k} vanishes unless (i,-k) is empty.
    for (const auto& hole : u.removed) {
      const int k = -hole.k;
      if (k <= 0) continue;
      FockVector w;
      eps_mono(hole, u, c * (2.0 * cox * k), w);
      for (const auto& [x, cx] : w.terms()) eps_mono({hole.i, k}, x, cx, out);
    }
  }
  return out;
}

FockVector FockModel::embed(const cochain::Wedge& w) const {
  FockVector v = vacuum();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    FockVector next;
    for (int j = 0; j < n_; ++j) {
      const Scalar coeff = dual(it->i, j);
      if (coeff == Scalar(0)) continue;
      next.add(eps({j, it->m}, v), coeff);
    }
    v = std::move(next);
  }
  return v;
}

// ---- windowed entry points ----

namespace {

void require_guarded(const FockVector& v, const EnergyWindow& w, int shift, const char* op) {
  for (const auto& [u, _] : v.terms())
    if (!w.guarded(u, shift))
      throw WindowViolation(std::string(op) + ": input " + u.to_string() + " is outside the sub-window of " + w.to_string() +
                            " guarded for shift " + std::to_string(shift));
}

void require_inside(const FockVector& v, const EnergyWindow& w, const char* op) {
  for (const auto& [u, _] : v.terms())
    if (!w.contains(u)) throw WindowViolation(std::string(op) + ": output " + u.to_string() + " leaves the window " + w.to_string());
}

void require_mode(const ModeIndex& m, const EnergyWindow& w, const char* op) {
  if (m.k < w.kMin || m.k > w.kMax)
    throw WindowViolation(std::string(op) + ": mode degree " + std::to_string(m.k) + " outside " + w.to_string());
}

}  // namespace

FockVector apply_iota(const FockModel& model, const ModeIndex& m, const FockVector& v, const EnergyWindow& w) {
  require_mode(m, w, "iota");
  require_guarded(v, w, 0, "iota");
  return model.iota(m, v);
}

FockVector apply_eps(const FockModel& model, const ModeIndex& m, const FockVector& v, const EnergyWindow& w) {
  require_mode(m, w, "eps");
  require_guarded(v, w, 0, "eps");
  return model.eps(m, v);
}

FockVector apply_L(const FockModel& model, int i, int k, const FockVector& v, const EnergyWindow& w) {
  if (std::abs(k) > w.guard)
    throw WindowViolation("L: shift " + std::to_string(k) + " exceeds the guard of " + w.to_string());
  require_guarded(v, w, k, "L");
  FockVector out = model.L(i, k, v);
  require_inside(out, w, "L");
  return out;
}

FockVector apply_d(const FockModel& model, const FockVector& v, const EnergyWindow& w) {
  require_guarded(v, w, w.guard, "d");
  FockVector out = model.d(v);
  require_inside(out, w, "d");
  return out;
}

FockVector apply_d_twisted(const FockModel& model, const FockVector& v, const EnergyWindow& w) {
  require_guarded(v, w, w.guard, "d_twisted");
  FockVector out = model.d_twisted(v);
  require_inside(out, w, "d_twisted");
  return out;
}

std::vector<SemiInfMonomial> enumerate_monomials(int n, int lo, int hi, std::size_t max_states) {
  std::vector<ModeIndex> modes;
  for (int k = lo; k <= hi; ++k)
    for (int i = 0; i < n; ++i) modes.push_back({i, k});
  if (modes.size() >= 63 || (std::size_t{1} << modes.size()) > max_states)
    throw std::invalid_argument("enumerate_monomials: " + std::to_string(modes.size()) + " modes exceed the state limit " +
                                std::to_string(max_states));
  std::vector<SemiInfMonomial> out;
  const std::size_t count = std::size_t{1} << modes.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    SemiInfMonomial u;
    for (std::size_t b = 0; b < modes.size(); ++b) {
      if (!(mask >> b & 1)) continue;
      (modes[b].k >= 1 ? u.added : u.removed).push_back(modes[b]);
    }
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jetcoh::fock
