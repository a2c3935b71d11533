#include "jetcoh/affine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace jetcoh::affine {

AffineWeight AffineWeight::operator+(const AffineWeight& o) const { return {energy + o.energy, finite + o.finite, central + o.central}; }

AffineWeight AffineWeight::operator-(const AffineWeight& o) const { return {energy - o.energy, finite - o.finite, central - o.central}; }

AffineWeight operator*(const Rational& s, const AffineWeight& w) {
  const Rational e = s * w.energy;
  if (!is_integer(e)) throw std::invalid_argument("affine weight scaling produced a non-integral energy");
  return {e.get_num().get_si(), s * w.finite, s * w.central};
}

bool AffineWeight::operator<(const AffineWeight& o) const {
  if (energy != o.energy) return energy < o.energy;
  if (!(finite == o.finite)) return finite < o.finite;
  return central < o.central;
}

std::string AffineWeight::to_string() const {
  return "(" + std::to_string(energy) + "," + finite.to_string() + "," + jetcoh::to_string(central) + ")";
}

std::string AffineWeylElement::to_string() const {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += "s" + std::to_string(word[i]);
  }
  return s;
}

Rational affine_pairing(const AlgebraData& data, const AffineWeight& a, const AffineWeight& b) {
  return -Rational(b.energy) * a.central - Rational(a.energy) * b.central + data.roots().pairing(a.finite, b.finite);
}

AffineWeight rho_hat(const AlgebraData& data) { return {0, data.roots().rho(), Rational(-data.coxeter())}; }

AffineWeight simple_affine_root(const AlgebraData& data, int j) {
  const auto& rs = data.roots();
  if (j < 0 || j > static_cast<int>(rs.rank())) throw std::out_of_range("simple_affine_root: index " + std::to_string(j));
  if (j == 0) return {1, -rs.theta(), 0};
  return {0, rs.simple_roots()[static_cast<std::size_t>(j - 1)], 0};
}

AffineWeight reflect(const AlgebraData& data, const AffineWeight& root, const AffineWeight& x) {
  const Rational rr = affine_pairing(data, root, root);
  if (rr == 0) throw std::invalid_argument("reflect: root is isotropic");
  return x - (2 * affine_pairing(data, x, root) / rr) * root;
}

AffineWeight simple_reflection(const AlgebraData& data, int j, const AffineWeight& x) {
  return reflect(data, simple_affine_root(data, j), x);
}

AffineWeight apply(const AlgebraData& data, const AffineWeylElement& w, const AffineWeight& x) {
  AffineWeight y = x;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) y = simple_reflection(data, *it, y);
  return y;
}

AffineWeylElement inverse(const AffineWeylElement& w) { return {std::vector<int>(w.word.rbegin(), w.word.rend())}; }

bool is_positive(const AlgebraData& data, const AffineWeight& root) {
  if (root.energy > 0) return true;
  return root.energy == 0 && data.roots().is_positive_root(root.finite);
}

std::vector<AffineWeylElement> minimal_coset_reps(const AlgebraData& data, int max_length) {
  if (max_length < 0) throw std::invalid_argument("minimal_coset_reps: negative length");
  const int r = static_cast<int>(data.rank());
  const AffineWeight rho = rho_hat(data);

  // w is minimal in wW iff w alpha_i > 0 for every finite i. Every minimal
  // representative of length l+1 is s_j w for one of length l.
  struct Node {
    AffineWeylElement w;
    std::vector<AffineWeight> images;  // w alpha_i, i = 1..r
  };
  std::vector<Node> level(1);
  for (int i = 1; i <= r; ++i) level[0].images.push_back(simple_affine_root(data, i));
  std::vector<AffineWeylElement> out{level[0].w};

  for (int len = 1; len <= max_length && !level.empty(); ++len) {
    std::set<AffineWeight> seen;
    std::vector<Node> next;
    // j outer, parents (lex sorted) inner: the first word found for an element is lex-minimal.
    for (int j = 0; j <= r; ++j) {
      for (const auto& parent : level) {
        // l(s_j w) > l(w) iff w^{-1} alpha_j > 0.
        if (!is_positive(data, apply(data, inverse(parent.w), simple_affine_root(data, j)))) continue;
        Node child;
        bool minimal = true;
        for (const auto& img : parent.images) {
          AffineWeight t = simple_reflection(data, j, img);
          if (!is_positive(data, t)) {
            minimal = false;
            break;
          }
          child.images.push_back(std::move(t));
        }
        if (!minimal) continue;
        child.w.word.push_back(j);
        child.w.word.insert(child.w.word.end(), parent.w.word.begin(), parent.w.word.end());
        if (!seen.insert(apply(data, child.w, rho)).second) continue;
        next.push_back(std::move(child));
      }
    }
    std::sort(next.begin(), next.end(), [](const Node& a, const Node& b) { return a.w.word < b.w.word; });
    for (const auto& n : next) out.push_back(n.w);
    level = std::move(next);
  }
  return out;
}

std::vector<AffineRoot> inversion_set(const AlgebraData& data, const AffineWeylElement& w) {
  // {beta > 0 : w beta < 0} = {alpha_{jl}, s_{jl} alpha_{j(l-1)}, ...} for w = s_{j1} ... s_{jl}.
  std::vector<AffineRoot> out;
  AffineWeylElement suffix;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    const AffineWeight beta = apply(data, suffix, simple_affine_root(data, *it));
    if (!is_positive(data, beta)) throw std::invalid_argument("inversion_set: word " + w.to_string() + " is not reduced");
    if (beta.energy <= 0)
      throw std::invalid_argument("inversion_set: " + w.to_string() + " inverts the finite root " + beta.finite.to_string());
    AffineRoot root{beta.energy, beta.finite, 1};
    if (std::find(out.begin(), out.end(), root) != out.end())
      throw std::invalid_argument("inversion_set: word " + w.to_string() + " is not reduced");
    out.push_back(std::move(root));
    suffix.word.push_back(*it);
  }
  return out;
}

AffineWeight rho_difference(const AlgebraData& data, const AffineWeylElement& w) {
  const AffineWeight rho = rho_hat(data);
  return rho - apply(data, inverse(w), rho);
}

Rational zero_locus_polynomial(const AlgebraData& data, const AffineWeight& x) {
  const AffineWeight rho = rho_hat(data);
  const AffineWeight diff = x - rho;
  return frac(1, 2) * (affine_pairing(data, diff, diff) - affine_pairing(data, rho, rho));
}

std::vector<std::vector<PredictedIrrep>> predict_cohomology(const AlgebraData& data, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("predict_cohomology: negative degree");
  std::vector<std::vector<PredictedIrrep>> out(static_cast<std::size_t>(max_degree) + 1);
  for (const auto& w : minimal_coset_reps(data, max_degree)) {
    const AffineWeight lw = rho_difference(data, w);
    if (!data.roots().is_dominant(-lw.finite))
      throw std::logic_error("predict_cohomology: -" + lw.finite.to_string() + " is not dominant");
    PredictedIrrep irr;
    irr.lowest_weight = lw;
    irr.energy = lw.energy;
    irr.finite_dim = data.roots().weyl_dimension(-lw.finite);
    irr.source = w;
    out[w.length()].push_back(std::move(irr));
  }
  return out;
}

std::vector<AffineWeight> zero_locus_brute_force(const AlgebraData& data, int max_energy, bool allow_repeats) {
  if (max_energy < 1) throw std::invalid_argument("zero_locus_brute_force: max_energy must be >= 1");
  const auto& rs = data.roots();
  std::vector<AffineWeight> roots;
  for (int k = 1; k <= max_energy; ++k)
    for (const auto& a : rs.positive_roots()) {
      roots.push_back({k, a, 0});
      roots.push_back({k, -a, 0});
    }

  std::set<AffineWeight> sums;
  // Index sequences, nondecreasing with repeats and increasing without.
  const std::size_t step = allow_repeats ? 0 : 1;
  auto rec = [&](auto&& self, std::size_t from, const AffineWeight& acc) -> void {
    sums.insert(acc);
    for (std::size_t t = from; t < roots.size(); ++t) {
      if (acc.energy + roots[t].energy > max_energy) continue;
      self(self, t + step, acc + roots[t]);
    }
  };
  rec(rec, 0, AffineWeight{0, FiniteWeight(rs.rank()), 0});

  std::vector<AffineWeight> out;
  for (const auto& s : sums)
    if (zero_locus_polynomial(data, s) == 0) out.push_back(s);
  return out;
}

std::vector<AffineWeight> predicted_zero_locus(const AlgebraData& data, int max_energy) {
  // Energy of rho_difference is at least the length, so length <= max_energy suffices.
  std::vector<AffineWeight> out;
  for (const auto& w : minimal_coset_reps(data, max_energy)) {
    AffineWeight v = rho_difference(data, w);
    if (v.energy <= max_energy) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jetcoh::affine
