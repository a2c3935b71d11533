#pragma once

#include "jetcoh/liealg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace jetcoh::affine {

using liealg::AlgebraData;
using liealg::FiniteWeight;

/// (energy n1, finite weight, central b).
struct AffineWeight {
  std::int64_t energy = 0;
  FiniteWeight finite;
  Rational central = 0;

  AffineWeight operator+(const AffineWeight& o) const;
  AffineWeight operator-(const AffineWeight& o) const;
  friend AffineWeight operator*(const Rational& s, const AffineWeight& w);
  bool operator==(const AffineWeight&) const = default;
  bool operator<(const AffineWeight& o) const;
  std::string to_string() const;
};

struct AffineRoot {
  std::int64_t k = 0;
  FiniteWeight alpha;  // zero for imaginary roots
  int multiplicity = 1;
  AffineWeight as_weight() const { return {k, alpha, 0}; }
  bool operator==(const AffineRoot&) const = default;
};

struct AffineWeylElement {
  std::vector<int> word;  // indices in {0, ..., rank}; 0 is the affine reflection
  std::size_t length() const { return word.size(); }
  std::string to_string() const;
  bool operator==(const AffineWeylElement&) const = default;
};

struct PredictedIrrep {
  AffineWeight lowest_weight;
  std::int64_t energy = 0;
  std::int64_t finite_dim = 1;
  AffineWeylElement source;
};

/// -n2 b1 - n1 b2 + <lambda1, lambda2>.
Rational affine_pairing(const AlgebraData& data, const AffineWeight& a, const AffineWeight& b);

/// (0, rho, -c).
AffineWeight rho_hat(const AlgebraData& data);

/// alpha_0 = (1, -theta, 0); alpha_i = (0, alpha_i, 0) for i >= 1.
AffineWeight simple_affine_root(const AlgebraData& data, int j);

/// Reflection in a real root: x - 2<x,b>/<b,b> b.
AffineWeight reflect(const AlgebraData& data, const AffineWeight& root, const AffineWeight& x);
AffineWeight simple_reflection(const AlgebraData& data, int j, const AffineWeight& x);

/// w.x for w = s_{j1} ... s_{jl}.
AffineWeight apply(const AlgebraData& data, const AffineWeylElement& w, const AffineWeight& x);
AffineWeylElement inverse(const AffineWeylElement& w);

/// Positive affine root: k > 0 (real or imaginary), or k = 0 with a positive finite root.
bool is_positive(const AlgebraData& data, const AffineWeight& root);

/// Minimal-length representatives w of the cosets wW (w alpha_i > 0 for every
/// finite simple root), ordered by length, then by lex-minimal reduced word.
std::vector<AffineWeylElement> minimal_coset_reps(const AlgebraData& data, int max_length);

/// {beta > 0 : w beta < 0} = {alpha_{jl}, s_{jl} alpha_{j(l-1)}, ...}; throws
/// std::invalid_argument if the word is not reduced or some member has energy 0.
std::vector<AffineRoot> inversion_set(const AlgebraData& data, const AffineWeylElement& w);

/// rho_hat - w^{-1} rho_hat.
AffineWeight rho_difference(const AlgebraData& data, const AffineWeylElement& w);

/// 1/2 (|x - rho_hat|^2 - |rho_hat|^2).
Rational zero_locus_polynomial(const AlgebraData& data, const AffineWeight& x);

/// Index = degree p.
std::vector<std::vector<PredictedIrrep>> predict_cohomology(const AlgebraData& data, int max_degree);

/// Distinct sums of real affine roots with k > 0 and total energy <= max_energy
/// on which the zero-locus polynomial vanishes, sorted. Each root is used at
/// most once unless allow_repeats is set.
std::vector<AffineWeight> zero_locus_brute_force(const AlgebraData& data, int max_energy, bool allow_repeats = false);

/// {rho_difference(w)} over minimal representatives with energy <= max_energy, sorted.
std::vector<AffineWeight> predicted_zero_locus(const AlgebraData& data, int max_energy);

}  // namespace jetcoh::affine
