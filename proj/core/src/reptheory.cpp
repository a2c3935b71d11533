#include "jetcoh/reptheory.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace jetcoh::reptheory {

std::int64_t mass(const WeightMultiset& w) {
  std::int64_t m = 0;
  for (const auto& [_, c] : w) m += c;
  return m;
}

namespace {

// Dominant weights of V(highest): the saturated set generated by it.
std::vector<FiniteWeight> dominant_weights(const liealg::RootSystem& rs, const FiniteWeight& highest) {
  std::set<FiniteWeight> seen{highest};
  std::vector<FiniteWeight> queue{highest};
  for (std::size_t at = 0; at < queue.size(); ++at) {
    const FiniteWeight mu = queue[at];
    for (const auto& a : rs.positive_roots()) {
      const Rational top = rs.coroot_pairing(mu, a);
      FiniteWeight nu = mu;
      for (Rational j = 1; j <= top; ++j) {
        nu -= a;
        FiniteWeight dom = rs.dominant_conjugate(nu);
        if (seen.insert(dom).second) queue.push_back(std::move(dom));
      }
    }
  }
  return queue;
}

}  // namespace

WeightMultiset CharacterTable::character_highest(const FiniteWeight& highest) const {
  const liealg::RootSystem& rs = data_.roots();
  if (!rs.is_dominant(highest)) throw std::invalid_argument("character_highest: " + highest.to_string() + " is not dominant");
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(highest); it != cache_.end()) return it->second;
  }

  std::vector<FiniteWeight> dom = dominant_weights(rs, highest);
  std::sort(dom.begin(), dom.end(), [&](const FiniteWeight& a, const FiniteWeight& b) {
    const Rational ha = (highest - a).height();
    const Rational hb = (highest - b).height();
    return ha != hb ? ha < hb : a < b;
  });

  std::map<FiniteWeight, Rational> mult;
  const FiniteWeight shifted = highest + rs.rho();
  const Rational top_norm = rs.norm2(shifted);
  for (const auto& mu : dom) {
    if (mu == highest) {
      mult[mu] = 1;
      continue;
    }
    Rational rhs = 0;
    for (const auto& a : rs.positive_roots()) {
      FiniteWeight nu = mu + a;
      while (rs.in_positive_cone(highest - nu)) {
        auto it = mult.find(rs.dominant_conjugate(nu));
        if (it != mult.end()) rhs += rs.pairing(nu, a) * it->second;
        nu += a;
      }
    }
    const Rational denom = top_norm - rs.norm2(mu + rs.rho());
    const Rational m = 2 * rhs / denom;
    if (!is_integer(m) || m < 0) throw std::logic_error("Freudenthal recursion produced " + to_string(m));
    mult[mu] = m;
  }

  WeightMultiset chi;
  for (const auto& [mu, m] : mult) {
    if (m == 0) continue;
    for (const auto& w : rs.weyl_orbit(mu)) chi[w] = m.get_num().get_si();
  }

  std::unique_lock lock(mutex_);
  return cache_.emplace(highest, std::move(chi)).first->second;
}

WeightMultiset CharacterTable::character_lowest(const FiniteWeight& lowest) const {
  // V with lowest weight L is dual to V(-L).
  WeightMultiset out;
  for (const auto& [w, m] : character_highest(-lowest)) out[-w] = m;
  return out;
}

WeightMultiset weights_of_basis(const AlgebraData& data, const cochain::CochainBasis& basis) {
  WeightMultiset w;
  for (const auto& wedge : basis.monomials) {
    FiniteWeight sum(data.rank());
    for (const auto& mode : wedge) sum -= data.weight(mode.i);
    ++w[sum];
  }
  return w;
}

bool is_weyl_symmetric(const AlgebraData& data, const WeightMultiset& w) {
  const liealg::RootSystem& rs = data.roots();
  for (const auto& [mu, m] : w) {
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      auto it = w.find(rs.reflect(i, mu));
      if (it == w.end() || it->second != m) return false;
    }
  }
  return true;
}

std::vector<IrrepSummand> decompose(const CharacterTable& table, const WeightMultiset& w) {
  const liealg::RootSystem& rs = table.algebra().roots();
  WeightMultiset rest;
  for (const auto& [mu, m] : w) {
    if (m < 0) throw std::domain_error("decompose: negative multiplicity at " + mu.to_string());
    if (m > 0) rest[mu] = m;
  }
  std::vector<IrrepSummand> out;
  while (!rest.empty()) {
    // A weight of maximal height is a highest weight of some summand.
    auto top = std::max_element(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
      const Rational ha = a.first.height();
      const Rational hb = b.first.height();
      return ha != hb ? ha < hb : a.first < b.first;
    });
    const FiniteWeight highest = top->first;
    const std::int64_t m = top->second;
    if (!rs.is_dominant(highest)) throw std::domain_error("decompose: maximal weight " + highest.to_string() + " is not dominant");
    const WeightMultiset chi = table.character_highest(highest);
    for (const auto& [mu, c] : chi) {
      auto it = rest.find(mu);
      const std::int64_t have = it == rest.end() ? 0 : it->second;
      if (have < m * c) throw std::domain_error("decompose: multiset is not a character (at " + mu.to_string() + ")");
      if (have == m * c) {
        rest.erase(it);
      } else {
        it->second -= m * c;
      }
    }
    out.push_back({-rs.dominant_conjugate(-highest), m, mass(chi)});
  }
  std::sort(out.begin(), out.end(), [](const IrrepSummand& a, const IrrepSummand& b) {
    return a.lowest_weight < b.lowest_weight;
  });
  return out;
}

std::vector<IrrepSummand> decompose(const AlgebraData& data, const WeightMultiset& w) {
  CharacterTable table(data);
  return decompose(table, w);
}

WeightMultiset expand(const CharacterTable& table, const std::vector<IrrepSummand>& summands) {
  WeightMultiset out;
  for (const auto& s : summands)
    for (const auto& [mu, c] : table.character_lowest(s.lowest_weight)) out[mu] += s.multiplicity * c;
  return out;
}

AuditVerdict multiplicity_one_audit(const std::vector<CellDecomposition>& cells) {
  AuditVerdict v;
  std::map<FiniteWeight, std::pair<int, int>> first;
  for (const auto& cell : cells) {
    for (const auto& s : cell.summands) {
      const std::string where = "(" + std::to_string(cell.p) + "," + std::to_string(cell.k) + ")";
      if (s.multiplicity > 1) {
        v.pass = false;
        v.violations.push_back(s.lowest_weight.to_string() + " has multiplicity " + std::to_string(s.multiplicity) + " in " + where);
      }
      auto [it, fresh] = first.emplace(s.lowest_weight, std::make_pair(cell.p, cell.k));
      if (fresh) {
        v.lowest_weights.push_back(s.lowest_weight);
      } else {
        v.pass = false;
        v.violations.push_back(s.lowest_weight.to_string() + " occurs in " + where + " and in (" +
                               std::to_string(it->second.first) + "," + std::to_string(it->second.second) + ")");
      }
    }
  }
  return v;
}

}  // namespace jetcoh::reptheory
