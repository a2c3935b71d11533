#pragma once

#include "jetcoh/exact_matrix.hpp"
#include "jetcoh/liealg.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace jetcoh::cochain {

/// Dual mode e^{i,m} of the jet algebra, m >= 1. Ordered by (m, i).
struct CochainMode {
  std::size_t i;
  int m;
  bool operator==(const CochainMode&) const = default;
  std::strong_ordering operator<=>(const CochainMode& o) const {
    if (auto c = m <=> o.m; c != 0) return c;
    return i <=> o.i;
  }
};

/// Wedge e^{i1,m1} ^ ... ^ e^{ip,mp}, strictly increasing in (m, i).
using Wedge = std::vector<CochainMode>;

struct CochainBasis {
  int p = 0;
  int k = 0;
  std::vector<Wedge> monomials;
  std::vector<liealg::FiniteWeight> weights;  // per monomial

  std::size_t size() const { return monomials.size(); }
  /// Position of a wedge in the basis, or size() if absent.
  std::size_t find(const Wedge& w) const;

 private:
  friend CochainBasis build_basis(const liealg::AlgebraData&, int, int);
  std::map<Wedge, std::size_t> index_;
};

/// Torus weight of e^{i,m}: minus the weight of x_i.
liealg::FiniteWeight mode_weight(const liealg::AlgebraData& data, const CochainMode& mode);

CochainBasis build_basis(const liealg::AlgebraData& data, int p, int k);

/// Number of degree-p, energy-k wedges by generating-function extraction,
/// independent of build_basis.
std::size_t count_basis(std::size_t n, int p, int k);

/// Exact Chevalley-Eilenberg differential A^p(k) -> A^{p+1}(k) with metrics.
struct GradedComplexBlock {
  CochainBasis basis_in;
  CochainBasis basis_out;
  SparseRationalMatrix d;   // rows: basis_out, cols: basis_in
  RationalMatrix gram_in;   // hermGram-induced metric on wedges
  RationalMatrix gram_out;
};

GradedComplexBlock differential_block(const liealg::AlgebraData& data, int p, int k);

/// Image of a single wedge under d, as (output wedge, coefficient) pairs, unsorted.
std::vector<std::pair<Wedge, Rational>> differential_of(const liealg::AlgebraData& data, const Wedge& w);

/// Metric <w1, w2> = det(hermGram^*(modes of w1, modes of w2)) where
/// hermGram^* is the inverse of hermGram, applied on each level.
Rational wedge_inner(const liealg::AlgebraData& data, const Wedge& a, const Wedge& b);
RationalMatrix gram_matrix(const liealg::AlgebraData& data, const CochainBasis& basis);

/// Coadjoint action of x_a on A^p(k), as a matrix in the basis.
SparseRationalMatrix action_matrix(const liealg::AlgebraData& data, const CochainBasis& basis, std::size_t a);

/// Cell (p,k) restricted to one torus weight, with all matrices needed for the
/// Laplacian. Everything is block-diagonal in the weight, so cells are always
/// processed weight by weight.
struct WeightBlock {
  liealg::FiniteWeight weight;
  std::vector<std::size_t> index;       // positions in A^p(k)
  std::vector<std::size_t> index_prev;  // positions in A^{p-1}(k)
  std::vector<std::size_t> index_next;  // positions in A^{p+1}(k)
  RationalMatrix d;                     // A^p -> A^{p+1}
  RationalMatrix d_prev;                // A^{p-1} -> A^p
  RationalMatrix gram;
  RationalMatrix gram_prev;
  RationalMatrix gram_next;
  RationalMatrix laplacian;
};

struct CellData {
  int p = 0;
  int k = 0;
  CochainBasis basis;
  std::vector<WeightBlock> blocks;  // sorted by weight
  std::size_t dim = 0;
  std::size_t rank_d = 0;       // rank of d_p
  std::size_t rank_d_prev = 0;  // rank of d_{p-1}
  bool dd_zero = true;          // d_p o d_{p-1} == 0 exactly
  bool self_adjoint = true;     // gram * L symmetric on every block
};

/// Builds A^{p-1}(k), A^p(k), A^{p+1}(k) and every Laplacian weight block.
CellData build_cell(const liealg::AlgebraData& data, int p, int k);

/// Laplacian of the whole cell, assembled from the weight blocks.
RationalMatrix laplacian_block(const CellData& cell);
RationalMatrix laplacian_block(const liealg::AlgebraData& data, int p, int k);

struct HarmonicSpace {
  int p = 0;
  int k = 0;
  std::vector<std::vector<Rational>> basis;  // vectors in A^p(k) coordinates
  std::vector<liealg::FiniteWeight> weights;  // weight of each basis vector
  std::size_t dim() const { return basis.size(); }
  bool hodge_consistent = true;
  bool closed_and_coclosed = true;
};

HarmonicSpace harmonic_space(const liealg::AlgebraData& data, const CellData& cell);
HarmonicSpace harmonic_space(const liealg::AlgebraData& data, int p, int k);

/// mu(lambda, k) = -<rho, lambda> + |lambda|^2 / 2 - c k.
Rational eigenvalue_of(const liealg::AlgebraData& data, const liealg::FiniteWeight& lowest_weight, int k);

struct IsotypicComponent {
  liealg::FiniteWeight lowest_weight;
  std::size_t multiplicity = 0;      // from the weight decomposition
  std::size_t lowest_vectors = 0;    // dim of the lowest-weight space found in the cell
  Rational mu;                       // eigenvalue_of(lowest_weight, k)
  Rational laplacian_scalar;         // scalar by which L acts on the lowest-weight vectors
  bool scalar = false;               // L acts on the component by one exact scalar
  bool matches_formula = false;      // laplacian_scalar == -mu
};

struct IsotypicVerdict {
  int p = 0;
  int k = 0;
  std::vector<IsotypicComponent> components;
  bool commutes = true;  // [L, rho(x_a)] == 0 for every basis element
  bool pass = true;
  std::string failure;   // first violation, empty on success
};

/// For every isotypic component of A^p(k): finds the lowest-weight vectors,
/// checks that L acts on them by a single exact scalar, compares it with
/// eigenvalue_of, and checks that L commutes with the coadjoint action.
IsotypicVerdict isotypic_eigen_check(const liealg::AlgebraData& data, const CellData& cell);

}  // namespace jetcoh::cochain
