#pragma once

// Independent reference implementations used by the tests. Nothing here calls
// into jetcoh except for the Rational type.

#include "jetcoh/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Q = jetcoh::Rational;
using Vec = std::vector<Q>;
using Mat = std::vector<std::vector<Q>>;

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<Q>(c, Q(0))); }

inline Mat mul(const Mat& a, const Mat& b) {
  Mat out = zeros(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Q trace(const Mat& a) {
  Q t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

/// Plain Gaussian elimination.
inline std::size_t rank(Mat m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// sl(N) as traceless N x N matrices. Basis: E_ij (i != j) then H_i = E_ii - E_{i+1,i+1}.
struct SlN {
  int N;
  std::vector<Mat> basis;
  std::vector<std::vector<int>> eps_weight;  // weight in epsilon coordinates

  explicit SlN(int n) : N(n) {
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (i == j) continue;
        Mat e = zeros(N, N);
        e[i][j] = 1;
        basis.push_back(e);
        std::vector<int> w(N, 0);
        w[i] += 1;
        w[j] -= 1;
        eps_weight.push_back(w);
      }
    for (int i = 0; i + 1 < N; ++i) {
      Mat h = zeros(N, N);
      h[i][i] = 1;
      h[i + 1][i + 1] = -1;
      basis.push_back(h);
      eps_weight.push_back(std::vector<int>(N, 0));
    }
  }

  std::size_t dim() const { return basis.size(); }
  int rank() const { return N - 1; }
  std::size_t root_count() const { return static_cast<std::size_t>(N * (N - 1)); }

  /// Coordinates of a traceless matrix in the basis.
  Vec coords(const Mat& m) const {
    Vec out;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (i != j) out.push_back(m[i][j]);
    Q running = 0;
    for (int i = 0; i + 1 < N; ++i) {
      running += m[i][i];
      out.push_back(running);
    }
    return out;
  }

  Vec bracket(std::size_t a, std::size_t b) const {
    Mat ab = mul(basis[a], basis[b]);
    const Mat ba = mul(basis[b], basis[a]);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) ab[i][j] -= ba[i][j];
    return coords(ab);
  }

  Mat ad(std::size_t a) const {
    Mat m = zeros(dim(), dim());
    for (std::size_t q = 0; q < dim(); ++q) {
      const Vec col = bracket(a, q);
      for (std::size_t p = 0; p < dim(); ++p) m[p][q] = col[p];
    }
    return m;
  }

  Q killing(std::size_t a, std::size_t b) const { return trace(mul(ad(a), ad(b))); }

  /// Roots / rank.
  Q coxeter() const { return Q(static_cast<long>(root_count())) / rank(); }

  /// Sum over a basis and its dual for <x,y> = killing / (2c), acting by ad.
  Mat casimir_adjoint() const {
    const std::size_t n = dim();
    const Q scale = 1 / (2 * coxeter());
    Mat g = zeros(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) g[a][b] = scale * killing(a, b);
    // inverse via Gauss-Jordan
    Mat aug = zeros(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug[i][j] = g[i][j];
      aug[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (aug[piv][c] == 0) ++piv;
      std::swap(aug[piv], aug[c]);
      const Q d = aug[c][c];
      for (auto& x : aug[c]) x /= d;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || aug[i][c] == 0) continue;
        const Q f = aug[i][c];
        for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
      }
    }
    Mat cas = zeros(n, n);
    std::vector<Mat> ads;
    for (std::size_t a = 0; a < n; ++a) ads.push_back(ad(a));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Q ginv = aug[a][n + b];
        if (ginv == 0) continue;
        const Mat prod = mul(ads[a], ads[b]);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) cas[i][j] += ginv * prod[i][j];
      }
    return cas;
  }
};

/// Chevalley-Eilenberg complex of z*g[z] / z^{K+1}, cochains of total level k,
/// built by evaluating cochains on tuples of elements.
struct JetComplex {
  const SlN& g;

  using Mode = std::pair<int, std::size_t>;  // (level m, basis index a)
  using Tuple = std::vector<Mode>;            // strictly increasing

  std::vector<Tuple> basis(int p, int k) const {
    std::vector<Tuple> out;
    Tuple cur;
    rec(p, k, Mode{1, 0}, cur, out);
    return out;
  }

  /// Matrix of d: C^p(k) -> C^{p+1}(k).
  Mat differential(int p, int k) const {
    const auto src = basis(p, k);
    const auto dst = basis(p + 1, k);
    Mat d = zeros(dst.size(), src.size());
    std::map<Tuple, std::size_t> col;
    for (std::size_t i = 0; i < src.size(); ++i) col[src[i]] = i;
    for (std::size_t r = 0; r < dst.size(); ++r) {
      const Tuple& x = dst[r];
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
          const int sign = ((i + j) % 2 == 0) ? 1 : -1;
          Tuple rest;
          for (std::size_t t = 0; t < x.size(); ++t)
            if (t != i && t != j) rest.push_back(x[t]);
          const Vec br = g.bracket(x[i].second, x[j].second);
          const int level = x[i].first + x[j].first;
          for (std::size_t a = 0; a < br.size(); ++a) {
            if (br[a] == 0) continue;
            Tuple args{{level, a}};
            args.insert(args.end(), rest.begin(), rest.end());
            int s = 0;
            const Tuple sorted = sort_sign(args, s);
            if (s == 0) continue;
            auto it = col.find(sorted);
            if (it != col.end()) d[r][it->second] += sign * s * br[a];
          }
        }
    }
    return d;
  }

  /// Weight of the cochain dual to a tuple, in epsilon coordinates.
  std::vector<int> weight(const Tuple& t) const {
    std::vector<int> w(static_cast<std::size_t>(g.N), 0);
    for (const auto& m : t)
      for (int i = 0; i < g.N; ++i) w[i] -= g.eps_weight[m.second][i];
    return w;
  }

  /// Cohomology weight multiplicities of H^p(k), in epsilon coordinates.
  std::map<std::vector<int>, long> cohomology_weights(int p, int k) const {
    std::map<std::vector<int>, long> out;
    const auto cur = basis(p, k);
    std::set<std::vector<int>> ws;
    for (const auto& t : cur) ws.insert(weight(t));
    const Mat dn = differential(p, k);
    const Mat dp = p > 0 ? differential(p - 1, k) : Mat{};
    const auto next = basis(p + 1, k);
    const auto prev = p > 0 ? basis(p - 1, k) : std::vector<Tuple>{};
    for (const auto& w : ws) {
      std::vector<std::size_t> ic, in, ip;
      for (std::size_t i = 0; i < cur.size(); ++i)
        if (weight(cur[i]) == w) ic.push_back(i);
      for (std::size_t i = 0; i < next.size(); ++i)
        if (weight(next[i]) == w) in.push_back(i);
      for (std::size_t i = 0; i < prev.size(); ++i)
        if (weight(prev[i]) == w) ip.push_back(i);
      Mat a = zeros(in.size(), ic.size()), b = zeros(ic.size(), ip.size());
      for (std::size_t r = 0; r < in.size(); ++r)
        for (std::size_t c = 0; c < ic.size(); ++c) a[r][c] = dn[in[r]][ic[c]];
      for (std::size_t r = 0; r < ic.size(); ++r)
        for (std::size_t c = 0; c < ip.size(); ++c) b[r][c] = dp[ic[r]][ip[c]];
      const long h = static_cast<long>(ic.size()) - static_cast<long>(in.empty() ? 0 : rank(a)) -
                     static_cast<long>(ip.empty() ? 0 : rank(b));
      if (h != 0) out[w] = h;
    }
    return out;
  }

  long betti(int p, int k) const {
    long total = 0;
    for (const auto& [w, m] : cohomology_weights(p, k)) total += m;
    return total;
  }

 private:
  void rec(int p, int k, Mode lo, Tuple& cur, std::vector<Tuple>& out) const {
    if (p == 0) {
      if (k == 0) out.push_back(cur);
      return;
    }
    for (int m = lo.first; m <= k; ++m)
      for (std::size_t a = (m == lo.first ? lo.second : 0); a < g.dim(); ++a) {
        cur.push_back({m, a});
        const Mode nxt = a + 1 < g.dim() ? Mode{m, a + 1} : Mode{m + 1, 0};
        rec(p - 1, k - m, nxt, cur, out);
        cur.pop_back();
      }
  }

  static Tuple sort_sign(Tuple t, int& sign) {
    sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j + 1 < t.size() - i; ++j) {
        if (t[j] == t[j + 1]) {
          sign = 0;
          return t;
        }
        if (t[j + 1] < t[j]) {
          std::swap(t[j], t[j + 1]);
          sign = -sign;
        }
      }
    for (std::size_t j = 0; j + 1 < t.size(); ++j)
      if (t[j] == t[j + 1]) sign = 0;
    return t;
  }
};

/// Epsilon coordinates (sum zero) to simple-root coordinates.
inline std::vector<Q> eps_to_simple(const std::vector<int>& w) {
  std::vector<Q> out;
  long running = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    running += w[i];
    out.emplace_back(running);
  }
  return out;
}

/// Affine Weyl group of type A_r^(1) acting on the root lattice in the basis
/// alpha_0..alpha_r, alpha_0 = delta - theta.
struct AffineA {
  int r;
  using V = std::vector<long>;
  using M = std::vector<V>;  // column j = image of alpha_j

  long cartan(int i, int j) const {
    if (i == j) return 2;
    if (r == 1) return -2;
    const int d = std::abs(i - j);
    return (d == 1 || d == r) ? -1 : 0;
  }

  V reflect(int j, V x) const {
    long pairing = 0;
    for (int i = 0; i <= r; ++i) pairing += x[i] * cartan(j, i);
    x[j] -= pairing;
    return x;
  }

  M identity() const {
    M m(r + 1, V(r + 1, 0));
    for (int i = 0; i <= r; ++i) m[i][i] = 1;
    return m;
  }

  V apply(const M& w, const V& x) const {
    V out(r + 1, 0);
    for (int j = 0; j <= r; ++j)
      for (int i = 0; i <= r; ++i) out[i] += w[j][i] * x[j];
    return out;
  }

  /// w = s_{word[0]} s_{word[1]} ...
  M of_word(const std::vector<int>& word) const {
    M m = identity();
    for (int j = 0; j <= r; ++j) {
      V x = m[j];
      for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect(*it, x);
      m[j] = x;
    }
    return m;
  }

  static bool positive(const V& x) {
    bool nonzero = false;
    for (long c : x) {
      if (c < 0) return false;
      nonzero |= c != 0;
    }
    return nonzero;
  }

  /// Number of minimal coset representatives (w alpha_i > 0 for i >= 1) per
  /// length, by breadth-first search over all group elements.
  std::vector<int> minimal_counts(int max_length) const {
    std::set<M> seen{identity()};
    std::vector<M> level{identity()};
    std::vector<int> counts{1};
    for (int len = 1; len <= max_length; ++len) {
      std::vector<M> next;
      for (const M& w : level)
        for (int j = 0; j <= r; ++j) {
          M v(r + 1);
          for (int i = 0; i <= r; ++i) v[i] = reflect(j, w[i]);
          if (seen.insert(v).second) next.push_back(v);
        }
      int c = 0;
      for (const M& w : next) {
        bool minimal = true;
        for (int i = 1; i <= r; ++i) minimal = minimal && positive(w[i]);
        c += minimal;
      }
      counts.push_back(c);
      level = std::move(next);
    }
    return counts;
  }

  /// Finite positive roots in simple-root coordinates (alpha_i + ... + alpha_j).
  std::vector<V> finite_positive() const {
    std::vector<V> out;
    for (int i = 1; i <= r; ++i)
      for (int j = i; j <= r; ++j) {
        V v(r + 1, 0);
        for (int t = i; t <= j; ++t) v[t] = 1;
        out.push_back(v);
      }
    return out;
  }

  /// Real root k delta + alpha in the alpha_0..alpha_r basis.
  V real_root(long k, const V& alpha, int sign) const {
    V v(r + 1, 0);
    v[0] = k;
    for (int i = 1; i <= r; ++i) v[i] = k + sign * alpha[i];
    return v;
  }

  /// {beta > 0 : w beta < 0} as (energy, finite part in simple coordinates),
  /// searched among real roots of energy <= max_energy.
  std::set<std::pair<long, V>> inversions(const M& w, long max_energy) const {
    std::set<std::pair<long, V>> out;
    for (long k = 0; k <= max_energy; ++k)
      for (const V& a : finite_positive())
        for (int sign : {1, -1}) {
          if (k == 0 && sign < 0) continue;
          const V beta = real_root(k, a, sign);
          const V img = apply(w, beta);
          if (!positive(img)) {
            V fin(r);
            for (int i = 1; i <= r; ++i) fin[i - 1] = sign * a[i];
            out.insert({k, fin});
          }
        }
    return out;
  }
};

}  // namespace oracle
