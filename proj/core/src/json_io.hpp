#pragma once

// JSON encoding shared by reports and the cell cache. Private to the library.

#include "jetcoh/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <tuple>

namespace jetcoh::pipeline::io {

using Json = nlohmann::ordered_json;

Json weight_json(const liealg::FiniteWeight& w);
liealg::FiniteWeight weight_from(const Json& j);

Json summand_json(const reptheory::IrrepSummand& s);
reptheory::IrrepSummand summand_from(const Json& j);

Json cell_json(const CellRecord& c);
/// Throws std::exception on malformed input.
CellRecord cell_from(const Json& j);

Json config_json(const RunConfig& c);

/// Entry (row, col, value) of d: A^p(k) -> A^{p+1}(k), in basis order.
using Triple = std::tuple<std::size_t, std::size_t, Rational>;
std::vector<Triple> differential_triples(const cochain::CellData& cell);

/// Cached cell, or nullopt when absent. A corrupt or stale file adds a warning
/// and reads as absent.
std::optional<CellRecord> cache_load(const std::string& dir, const liealg::AlgebraData& data, const std::string& hash,
                                     int p, int k, std::vector<std::string>& warnings);
/// Writes through a temporary file and a rename. Failures add a warning.
void cache_store(const std::string& dir, const liealg::AlgebraData& data, const std::string& hash,
                 const CellRecord& record, const cochain::CellData& cell, std::vector<std::string>& warnings);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace jetcoh::pipeline::io
