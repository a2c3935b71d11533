#include "jetcoh/fock.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <thread>

namespace jetcoh::fock {

namespace {

// max_{t < count} f(t), run on a pool of threads; the result does not depend
// on the schedule.
double parallel_max(std::size_t count, unsigned threads, const std::function<double(std::size_t)>& f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<double> best(threads, 0.0);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t t; (t = next.fetch_add(1)) < count;) best[id] = std::max(best[id], f(t));
    } catch (...) {
      errors[id] = std::current_exception();
      next = count;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < threads; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return *std::max_element(best.begin(), best.end());
}

// Shared memo of operator images of single monomials.
class Memo {
 public:
  using Op = std::function<FockVector(const FockVector&)>;
  explicit Memo(Op op) : op_(std::move(op)) {}

  FockVector operator()(const FockVector& v) {
    FockVector out;
    for (const auto& [u, c] : v.terms()) out.add(image(u), c);
    return out;
  }

 private:
  // Map nodes are stable, so returned references survive later inserts.
  const FockVector& image(const SemiInfMonomial& u) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(u); it != cache_.end()) return it->second;
    }
    FockVector v = op_(FockVector(u));
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(u, std::move(v)).first->second;
  }

  Op op_;
  std::shared_mutex mutex_;
  std::map<SemiInfMonomial, FockVector> cache_;
};

double diff(const FockVector& a, const FockVector& b) { return (a - b).max_abs(); }

struct Suite {
  const FockModel& model;
  const SuiteOptions& opt;
  std::vector<SemiInfMonomial> basis;  // guarded inputs
  std::vector<ModeIndex> modes;        // all modes of the window
  std::string window;
  std::vector<IdentityVerdict> out;

  unsigned threads() const { return opt.threads; }

  IdentityVerdict& record(std::string name, std::optional<int> shift, double err) {
    IdentityVerdict v;
    v.identity = std::move(name);
    v.shift = shift;
    v.window = window;
    v.maxAbsError = err;
    v.pass = std::isfinite(err) && err <= opt.tolerance;
    out.push_back(std::move(v));
    return out.back();
  }

  bool skip_if_unguarded(const std::string& name, int shift) {
    if (std::abs(shift) <= opt.window.guard) return false;
    IdentityVerdict v;
    v.identity = name;
    v.shift = shift;
    v.window = window;
    v.skipped = true;
    v.reason = "guard " + std::to_string(opt.window.guard) + " < |shift| " + std::to_string(std::abs(shift));
    out.push_back(std::move(v));
    return true;
  }

  double over_basis(const std::function<double(const FockVector&)>& f) {
    return parallel_max(basis.size(), threads(), [&](std::size_t t) { return f(FockVector(basis[t])); });
  }

  void clifford() {
    const double err = over_basis([&](const FockVector& u) {
      std::vector<FockVector> I, E;
      for (const auto& a : modes) {
        I.push_back(model.iota(a, u));
        E.push_back(model.eps(a, u));
      }
      double e = 0;
      for (std::size_t a = 0; a < modes.size(); ++a)
        for (std::size_t b = 0; b < modes.size(); ++b) {
          FockVector ii = model.iota(modes[a], I[b]);
          ii.add(model.iota(modes[b], I[a]));
          FockVector ee = model.eps(modes[a], E[b]);
          ee.add(model.eps(modes[b], E[a]));
          FockVector ie = model.iota(modes[a], E[b]);
          ie.add(model.eps(modes[b], I[a]));
          if (a == b) ie.add(u, -1.0);
          e = std::max({e, ii.max_abs(), ee.max_abs(), ie.max_abs()});
        }
      return e;
    });
    record("clifford", std::nullopt, err);
  }

  void vacuum() {
    const FockVector vac = model.vacuum();
    const int n = model.dim();
    double e = 0;
    for (int i = 0; i < n; ++i) {
      for (int k = 1; k <= opt.window.kMax; ++k) {
        e = std::max(e, model.iota({i, k}, vac).max_abs());
        e = std::max(e, model.L(i, k, vac).max_abs());
      }
      for (int k = opt.window.kMin; k <= 0; ++k) e = std::max(e, model.eps({i, k}, vac).max_abs());
    }
    e = std::max(e, model.laplacian_closed_form(vac).max_abs());
    record("vacuum_annihilation", std::nullopt, e);
    record("d_vacuum", std::nullopt, model.d(vac).max_abs());
  }

  void iota_L(int k) {
    if (skip_if_unguarded("iota_L_commutator", k)) return;
    const int n = model.dim();
    const double err = over_basis([&](const FockVector& u) {
      double e = 0;
      for (int i = 0; i < n; ++i) {
        const FockVector Lu = model.L(i, k, u);
        for (const auto& m : modes) {
          FockVector lhs = model.iota(m, Lu);
          lhs.add(model.L(i, k, model.iota(m, u)), -1.0);
          FockVector rhs;
          for (int p = 0; p < n; ++p)
            if (const Scalar c = model.C(i, m.i, p); c != Scalar(0)) rhs.add(model.iota({p, m.k + k}, u), -c);
          e = std::max(e, diff(lhs, rhs));
        }
      }
      return e;
    });
    record("iota_L_commutator", k, err);
  }

  void eps_L(int k) {
    if (skip_if_unguarded("eps_L_commutator", k)) return;
    const int n = model.dim();
    const double err = over_basis([&](const FockVector& u) {
      double e = 0;
      for (int i = 0; i < n; ++i) {
        const FockVector Lu = model.L(i, k, u);
        for (const auto& m : modes) {
          FockVector lhs = model.eps(m, Lu);
          lhs.add(model.L(i, k, model.eps(m, u)), -1.0);
          FockVector rhs;
          for (int q = 0; q < n; ++q)
            if (const Scalar c = model.C(i, q, m.i); c != Scalar(0)) rhs.add(model.eps({q, m.k - k}, u), c);
          e = std::max(e, diff(lhs, rhs));
        }
      }
      return e;
    });
    record("eps_L_commutator", k, err);
  }

  void L_bracket(int s) {
    if (skip_if_unguarded("L_bracket", s)) return;
    const int n = model.dim();
    std::vector<std::pair<int, int>> shifts;
    for (int k = -s; k <= s; ++k)
      for (int m = -s; m <= s; ++m)
        if (std::max(std::abs(k), std::abs(m)) == s && m != -k) shifts.emplace_back(k, m);
    const double err = over_basis([&](const FockVector& u) {
      double e = 0;
      for (const auto& [k, m] : shifts)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            FockVector lhs = model.L(i, k, model.L(j, m, u));
            lhs.add(model.L(j, m, model.L(i, k, u)), -1.0);
            FockVector rhs;
            for (int p = 0; p < n; ++p)
              if (const Scalar c = model.C(i, j, p); c != Scalar(0)) rhs.add(model.L(p, k + m, u), c);
            e = std::max(e, diff(lhs, rhs));
          }
      return e;
    });
    record("L_bracket", s, err);
  }

  void cocycle(int k) {
    if (skip_if_unguarded("cocycle", k)) return;
    const int n = model.dim();
    const double expected = 2.0 * model.coxeter() * k;
    std::mutex mu;
    double diag_sum = 0;
    const double err = over_basis([&](const FockVector& u) {
      double e = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          FockVector defect = model.L(i, k, model.L(j, -k, u));
          defect.add(model.L(j, -k, model.L(i, k, u)), -1.0);
          for (int p = 0; p < n; ++p)
            if (const Scalar c = model.C(i, j, p); c != Scalar(0)) defect.add(model.L(p, 0, u), -c);
          if (i == 0 && j == 0) {
            std::lock_guard lock(mu);
            diag_sum += defect.coefficient(u.terms().begin()->first).real();
          }
          if (i == j) defect.add(u, -expected);
          e = std::max(e, defect.max_abs());
        }
      return e;
    });
    auto& v = record("cocycle", k, err);
    v.expected = expected;
    v.measured = diag_sum / static_cast<double>(basis.size());
  }

  void d_squared() {
    const double err = over_basis([&](const FockVector& u) {
      return diff(model.d(model.d(u)), model.d_squared_closed_form(u));
    });
    record("d_squared", std::nullopt, err);
  }

  void L0_commutes_d() {
    const int n = model.dim();
    const double err = over_basis([&](const FockVector& u) {
      const FockVector du = model.d(u);
      double e = 0;
      for (int i = 0; i < n; ++i) e = std::max(e, diff(model.L(i, 0, du), model.d(model.L(i, 0, u))));
      return e;
    });
    record("L0_commutes_d", std::nullopt, err);
  }

  void twisted_adjoint() {
    Memo dt([&](const FockVector& v) { return model.d_twisted(v); });
    Memo dta([&](const FockVector& v) { return model.d_twisted_adjoint(v); });
    const double err = over_basis([&](const FockVector& u) {
      const SemiInfMonomial& mono = u.terms().begin()->first;
      double e = 0;
      const FockVector forward = dt(u);
      for (const auto& [w, c] : forward.terms())
        e = std::max(e, std::abs(std::conj(c) - dta(FockVector(w)).coefficient(mono)));
      const FockVector backward = dta(u);
      for (const auto& [w, c] : backward.terms())
        e = std::max(e, std::abs(std::conj(c) - dt(FockVector(w)).coefficient(mono)));
      return e;
    });
    record("twisted_adjoint", std::nullopt, err);
  }

  void laplacian() {
    Memo d([&](const FockVector& v) { return model.d(v); });
    Memo dta([&](const FockVector& v) { return model.d_twisted_adjoint(v); });
    std::mutex mu;
    double printed = 0;
    const double err = over_basis([&](const FockVector& u) {
      FockVector lhs = d(dta(u));
      lhs.add(dta(d(u)));
      const FockVector closed = model.laplacian_closed_form(u);
      FockVector negated;
      negated.add(closed, -1.0);
      {
        std::lock_guard lock(mu);
        printed = std::max(printed, diff(lhs, closed));
      }
      return diff(lhs, negated);
    });
    auto& v = record("laplacian_formula", std::nullopt, err);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", printed);
    v.reason = "[d, adjoint(d_twisted)]_+ compared with minus the closed form; error against the closed form itself: " +
               std::string(buf);
  }

  void cochain_restriction() {
    const auto& data = model.algebra();
    const int top = opt.window.guarded_max();
    std::vector<cochain::CochainMode> cmodes;
    for (int m = 1; m <= top; ++m)
      for (std::size_t i = 0; i < data.dim(); ++i) cmodes.push_back({i, m});
    if (cmodes.size() >= 63 || (std::size_t{1} << cmodes.size()) > opt.maxStates)
      throw std::invalid_argument("cochain_restriction: " + std::to_string(cmodes.size()) + " cochain modes exceed the state limit");
    const std::size_t count = std::size_t{1} << cmodes.size();
    const double err = parallel_max(count, threads(), [&](std::size_t mask) {
      cochain::Wedge w;
      for (std::size_t b = 0; b < cmodes.size(); ++b)
        if (mask >> b & 1) w.push_back(cmodes[b]);
      FockVector rhs;
      for (const auto& [x, c] : cochain::differential_of(data, w)) rhs.add(model.embed(x), c.get_d());
      return diff(model.d(model.embed(w)), rhs);
    });
    record("cochain_restriction", std::nullopt, err);
  }

  void leibniz() {
    const int n = model.dim();
    const double err = over_basis([&](const FockVector& u) {
      const SemiInfMonomial& mono = u.terms().begin()->first;
      const int low = mono.removed.empty() ? 1 : mono.removed.front().k;
      const FockVector du = model.d(u);
      double e = 0;
      for (const auto& m : modes) {
        FockVector lhs = model.d(model.eps(m, u));
        lhs.add(model.eps(m, du));
        // [d, eps^{j,m}]_+ = 1/2 sum C_{iq}^j eps^{q,m-k} eps^{i,k}; other k vanish on u.
        FockVector rhs;
        for (int k = low; k <= m.k - low; ++k)
          for (int i = 0; i < n; ++i) {
            const FockVector ek = model.eps({i, k}, u);
            if (ek.empty()) continue;
            for (int q = 0; q < n; ++q)
              if (const Scalar c = model.C(i, q, m.i); c != Scalar(0)) rhs.add(model.eps({q, m.k - k}, ek), 0.5 * c);
          }
        e = std::max(e, diff(lhs, rhs));
      }
      return e;
    });
    record("leibniz", std::nullopt, err);
  }

  void energy() {
    const int n = model.dim();
    const int g = std::min(opt.window.guard, opt.maxShift);
    const double err = over_basis([&](const FockVector& u) {
      const SemiInfMonomial& mono = u.terms().begin()->first;
      const long e0 = mono.energy();
      const int d0 = mono.degree_offset();
      double e = 0;
      auto check = [&](const FockVector& v, long de, int dd) {
        for (const auto& [w, _] : v.terms())
          e = std::max(e, static_cast<double>(std::abs(w.energy() - e0 - de) + std::abs(w.degree_offset() - d0 - dd)));
      };
      for (const auto& m : modes) {
        check(model.iota(m, u), -m.k, -1);
        check(model.eps(m, u), m.k, 1);
      }
      for (int i = 0; i < n; ++i)
        for (int k = -g; k <= g; ++k) check(model.L(i, k, u), -k, 0);
      check(model.d(u), 0, 1);
      check(model.d_twisted(u), 0, 1);
      check(model.d_twisted_adjoint(u), 0, -1);
      return e;
    });
    record("energy_bookkeeping", std::nullopt, err);
  }
};

}  // namespace

CocycleMeasurement cocycle_check(const FockModel& model, int i, int j, int k, const EnergyWindow& w) {
  w.validate();
  if (std::abs(k) > w.guard)
    throw WindowViolation("cocycle_check: shift " + std::to_string(k) + " exceeds the guard of " + w.to_string());
  const auto basis = enumerate_monomials(model.dim(), w.guarded_min(), w.guarded_max());
  std::vector<FockVector> defects;
  Scalar sum = 0;
  for (const auto& mono : basis) {
    const FockVector u(mono);
    FockVector defect = model.L(i, k, model.L(j, -k, u));
    defect.add(model.L(j, -k, model.L(i, k, u)), -1.0);
    for (int p = 0; p < model.dim(); ++p)
      if (const Scalar c = model.C(i, j, p); c != Scalar(0)) defect.add(model.L(p, 0, u), -c);
    sum += defect.coefficient(mono);
    defects.push_back(std::move(defect));
  }
  CocycleMeasurement r;
  r.scalar = sum / static_cast<double>(basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t) {
    defects[t].add(basis[t], -r.scalar);
    r.off_scalar_error = std::max(r.off_scalar_error, defects[t].max_abs());
  }
  return r;
}

std::vector<IdentityVerdict> run_identity_suite(const FockModel& model, const SuiteOptions& options) {
  options.window.validate();
  if (!(options.tolerance > 0)) throw std::invalid_argument("identity suite: tolerance must be positive");
  if (options.maxShift < 0) throw std::invalid_argument("identity suite: maxShift must be >= 0");
  const EnergyWindow& w = options.window;
  Suite s{model, options, enumerate_monomials(model.dim(), w.guarded_min(), w.guarded_max(), options.maxStates), {}, w.to_string(), {}};
  for (int k = w.kMin; k <= w.kMax; ++k)
    for (int i = 0; i < model.dim(); ++i) s.modes.push_back({i, k});

  s.clifford();
  s.vacuum();
  for (int k = -options.maxShift; k <= options.maxShift; ++k) s.iota_L(k);
  for (int k = -options.maxShift; k <= options.maxShift; ++k) s.eps_L(k);
  for (int k = 1; k <= options.maxShift; ++k) s.L_bracket(k);
  for (int k = 0; k <= options.maxShift; ++k) s.cocycle(k);
  s.d_squared();
  s.L0_commutes_d();
  s.twisted_adjoint();
  s.laplacian();
  s.cochain_restriction();
  s.leibniz();
  s.energy();
  return std::move(s.out);
}

}  // namespace jetcoh::fock
