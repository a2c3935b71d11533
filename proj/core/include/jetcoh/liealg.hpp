#pragma once

#include "jetcoh/exact_matrix.hpp"
#include "jetcoh/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jetcoh::liealg {

enum class Series { A, B, C, D, E, F, G };

/// Cartan type of a simple Lie algebra, e.g. A2 or E8.
struct AlgebraSpec {
  Series series = Series::A;
  int rank = 1;

  /// Throws std::invalid_argument when the rank is not valid for the series.
  void validate() const;
  std::string name() const;
  static AlgebraSpec parse(std::string_view text);

  bool operator==(const AlgebraSpec&) const = default;
};

/// Weight of the Cartan subalgebra, in coordinates over the simple roots.
class FiniteWeight {
 public:
  FiniteWeight() = default;
  explicit FiniteWeight(std::size_t rank) : coords_(rank) {}
  explicit FiniteWeight(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  std::size_t rank() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;
  /// Sum of the simple-root coordinates.
  Rational height() const;

  FiniteWeight operator+(const FiniteWeight& o) const;
  FiniteWeight operator-(const FiniteWeight& o) const;
  FiniteWeight operator-() const;
  FiniteWeight& operator+=(const FiniteWeight& o);
  FiniteWeight& operator-=(const FiniteWeight& o);
  friend FiniteWeight operator*(const Rational& s, const FiniteWeight& w);

  bool operator==(const FiniteWeight& o) const { return coords_ == o.coords_; }
  bool operator<(const FiniteWeight& o) const { return coords_ < o.coords_; }

  /// "[c1,c2,...]" with exact rational entries.
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

class RootSystem {
 public:
  RootSystem() = default;
  RootSystem(std::vector<FiniteWeight> simple, std::vector<FiniteWeight> positive, RationalMatrix weight_form);

  std::size_t rank() const { return simple_.size(); }
  const std::vector<FiniteWeight>& simple_roots() const { return simple_; }
  /// Ordered by height, then lexicographically by coordinates.
  const std::vector<FiniteWeight>& positive_roots() const { return positive_; }
  const FiniteWeight& rho() const { return rho_; }
  const FiniteWeight& theta() const { return theta_; }

  /// Gram matrix of the scaled form on the simple roots.
  const RationalMatrix& weight_form() const { return weight_form_; }

  Rational pairing(const FiniteWeight& a, const FiniteWeight& b) const;
  Rational norm2(const FiniteWeight& a) const { return pairing(a, a); }
  /// <a, alpha_i^vee> = 2 (a, alpha_i) / (alpha_i, alpha_i).
  Rational coroot_pairing(const FiniteWeight& a, std::size_t i) const;
  /// Same with an arbitrary root in place of the simple root.
  Rational coroot_pairing(const FiniteWeight& a, const FiniteWeight& root) const;

  /// Simple reflection s_i.
  FiniteWeight reflect(std::size_t i, const FiniteWeight& a) const;
  bool is_dominant(const FiniteWeight& a) const;
  bool is_antidominant(const FiniteWeight& a) const;
  FiniteWeight dominant_conjugate(const FiniteWeight& a) const;
  std::vector<FiniteWeight> weyl_orbit(const FiniteWeight& a) const;

  bool is_root(const FiniteWeight& a) const;
  bool is_positive_root(const FiniteWeight& a) const;
  /// Nonnegative integer combination of simple roots.
  bool in_positive_cone(const FiniteWeight& a) const;

  /// Weyl dimension formula for the irreducible module of dominant highest weight.
  std::int64_t weyl_dimension(const FiniteWeight& highest) const;

 private:
  std::vector<FiniteWeight> simple_;
  std::vector<FiniteWeight> positive_;
  RationalMatrix weight_form_;
  FiniteWeight rho_;
  FiniteWeight theta_;
};

struct StructureTerm {
  std::size_t index;
  Rational coeff;
};

/// A basis element: root vector e_alpha / f_alpha, or Cartan element h_i.
struct BasisLabel {
  enum class Kind { E, H, F } kind;
  std::size_t index;  // positive-root index for E/F, simple-root index for H
  std::string text() const;
};

/// Simple Lie algebra in a Chevalley basis with exact structure constants.
///
/// Basis order: e_alpha for positive roots (RootSystem order), then h_1..h_r,
/// then f_alpha = e_{-alpha} in the same root order.
class AlgebraData {
 public:
  const AlgebraSpec& spec() const { return spec_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return roots_.rank(); }
  std::int64_t coxeter() const { return coxeter_; }
  const RootSystem& roots() const { return roots_; }
  const std::vector<BasisLabel>& labels() const { return labels_; }

  /// [x_i, x_q] = sum_p C_{iq}^p x_p.
  const std::vector<StructureTerm>& bracket(std::size_t i, std::size_t q) const { return structure_[i * dim_ + q]; }
  Rational structure_constant(std::size_t i, std::size_t q, std::size_t p) const;
  std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

  /// Matrix of ad(x_i): column q holds the coordinates of [x_i, x_q].
  RationalMatrix ad_matrix(std::size_t i) const;

  const RationalMatrix& killing() const { return killing_; }
  /// (1/2c) times the Killing form.
  const RationalMatrix& gram() const { return gram_; }
  const RationalMatrix& gram_inverse() const { return gram_inverse_; }
  /// Positive definite form -<x, omega(y)> from the compact involution.
  const RationalMatrix& herm_gram() const { return herm_gram_; }

  /// Torus weight of basis element i.
  const FiniteWeight& weight(std::size_t i) const { return weights_[i]; }

  /// omega(x_i) = omega_sign(i) * x_{omega_index(i)}.
  std::size_t omega_index(std::size_t i) const { return omega_index_[i]; }
  int omega_sign(std::size_t) const { return -1; }
  RationalMatrix omega_matrix() const;

  std::size_t e_index(std::size_t root) const { return root; }
  std::size_t h_index(std::size_t i) const { return roots_.positive_roots().size() + i; }
  std::size_t f_index(std::size_t root) const { return roots_.positive_roots().size() + rank() + root; }

  friend AlgebraData build_algebra(const AlgebraSpec& spec);

 private:
  AlgebraSpec spec_;
  std::size_t dim_ = 0;
  std::int64_t coxeter_ = 0;
  RootSystem roots_;
  std::vector<BasisLabel> labels_;
  std::vector<std::vector<StructureTerm>> structure_;
  RationalMatrix killing_;
  RationalMatrix gram_;
  RationalMatrix gram_inverse_;
  RationalMatrix herm_gram_;
  std::vector<FiniteWeight> weights_;
  std::vector<std::size_t> omega_index_;
};

/// Builds the algebra, then verifies antisymmetry, the Jacobi identity and the
/// trace identity exactly; throws std::logic_error if any of them fails.
AlgebraData build_algebra(const AlgebraSpec& spec);

Rational scaled_form(const AlgebraData& data, const std::vector<Rational>& x, const std::vector<Rational>& y);

/// Half the Casimir eigenvalue on the irreducible module with this lowest
/// weight: -<rho, lambda> + |lambda|^2 / 2. Rejects weights that are not antidominant.
Rational casimir_eigenvalue(const AlgebraData& data, const FiniteWeight& lowest_weight);

/// Canonical JSON document: spec, coxeter number, labels, structure triples, gram.
std::string canonical_json(const AlgebraData& data);

/// 64-bit FNV-1a of canonical_json, as 16 hex digits.
std::string content_hash(const AlgebraData& data);

/// Exhaustive identity checks; each returns an empty string on success or a
/// description of the first violation.
std::string check_antisymmetry(const AlgebraData& data);
std::string check_jacobi(const AlgebraData& data);
std::string check_trace_identity(const AlgebraData& data);
std::string check_compact_adjointness(const AlgebraData& data);

}  // namespace jetcoh::liealg
