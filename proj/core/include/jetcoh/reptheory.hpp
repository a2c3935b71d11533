#pragma once

#include "jetcoh/cochain.hpp"
#include "jetcoh/liealg.hpp"

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

namespace jetcoh::reptheory {

using liealg::AlgebraData;
using liealg::FiniteWeight;

using WeightMultiset = std::map<FiniteWeight, std::int64_t>;

struct IrrepSummand {
  FiniteWeight lowest_weight;
  std::int64_t multiplicity = 1;
  std::int64_t dimension = 1;
  bool operator==(const IrrepSummand&) const = default;
};

std::int64_t mass(const WeightMultiset& w);

/// Memoized characters of irreducible modules, safe for concurrent use.
class CharacterTable {
 public:
  explicit CharacterTable(const AlgebraData& data) : data_(data) {}

  const AlgebraData& algebra() const { return data_; }

  /// Full weight multiset of the irreducible module with this dominant highest
  /// weight (Freudenthal's formula on dominant weights, then Weyl orbits).
  WeightMultiset character_highest(const FiniteWeight& highest) const;
  /// Same, indexed by an antidominant lowest weight.
  WeightMultiset character_lowest(const FiniteWeight& lowest) const;

 private:
  const AlgebraData& data_;
  mutable std::shared_mutex mutex_;
  mutable std::map<FiniteWeight, WeightMultiset> cache_;
};

/// Weights of a cochain basis; e^{i,k} carries minus the weight of x_i.
WeightMultiset weights_of_basis(const AlgebraData& data, const cochain::CochainBasis& basis);

bool is_weyl_symmetric(const AlgebraData& data, const WeightMultiset& w);

/// Throws std::domain_error if the multiset is not a character.
std::vector<IrrepSummand> decompose(const CharacterTable& table, const WeightMultiset& w);
std::vector<IrrepSummand> decompose(const AlgebraData& data, const WeightMultiset& w);

/// Sum of the characters of the summands, with multiplicity.
WeightMultiset expand(const CharacterTable& table, const std::vector<IrrepSummand>& summands);

struct CellDecomposition {
  int p = 0;
  int k = 0;
  std::vector<IrrepSummand> summands;
};

struct AuditVerdict {
  bool pass = true;
  std::vector<std::string> violations;
  std::vector<FiniteWeight> lowest_weights;  // distinct, in order of first appearance
};

/// Every finite lowest weight may occur at most once across all cells.
AuditVerdict multiplicity_one_audit(const std::vector<CellDecomposition>& cells);

}  // namespace jetcoh::reptheory
