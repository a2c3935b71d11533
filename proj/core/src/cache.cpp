#include "json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace jetcoh::pipeline {

namespace fs = std::filesystem;
using io::Json;

namespace {

constexpr const char* kCellSchema = "jetcoh.cell/1";

fs::path cell_path(const std::string& dir, const liealg::AlgebraData& data, const std::string& hash, int p, int k) {
  return fs::path(dir) / (data.spec().name() + "-" + hash) /
         ("p" + std::to_string(p) + "_k" + std::to_string(k) + ".json");
}

// Parses and validates the envelope; returns the payload.
Json read_envelope(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("unreadable");
  Json j = Json::parse(in);
  if (j.value("schema", "") != kCellSchema) throw std::runtime_error("unknown schema");
  const Json& payload = j.at("payload");
  if (io::fnv1a_hex(payload.dump()) != j.at("payloadHash").get<std::string>())
    throw std::runtime_error("payload hash mismatch");
  Json out = payload;
  out["algebraHash"] = j.at("algebraHash");
  return out;
}

}  // namespace

namespace io {

std::vector<Triple> differential_triples(const cochain::CellData& cell) {
  std::vector<Triple> out;
  for (const auto& blk : cell.blocks)
    for (std::size_t r = 0; r < blk.d.rows(); ++r)
      for (std::size_t c = 0; c < blk.d.cols(); ++c)
        if (const Rational& v = blk.d(r, c); v != 0) out.emplace_back(blk.index_next[r], blk.index[c], v);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CellRecord> cache_load(const std::string& dir, const liealg::AlgebraData& data, const std::string& hash,
                                     int p, int k, std::vector<std::string>& warnings) {
  const fs::path file = cell_path(dir, data, hash, p, k);
  std::error_code ec;
  if (!fs::exists(file, ec)) return std::nullopt;
  try {
    const Json payload = read_envelope(file);
    if (payload.at("algebraHash").get<std::string>() != hash) throw std::runtime_error("algebra hash mismatch");
    CellRecord r = cell_from(payload.at("record"));
    if (r.p != p || r.k != k || !r.computed) throw std::runtime_error("cell label mismatch");
    if (payload.at("basis").size() != r.dimA) throw std::runtime_error("basis size mismatch");
    return r;
  } catch (const std::exception& e) {
    warnings.push_back("cache file " + file.string() + " ignored (" + e.what() + "); recomputed");
    return std::nullopt;
  }
}

void cache_store(const std::string& dir, const liealg::AlgebraData& data, const std::string& hash,
                 const CellRecord& record, const cochain::CellData& cell, std::vector<std::string>& warnings) {
  const fs::path file = cell_path(dir, data, hash, record.p, record.k);
  try {
    Json basis = Json::array();
    for (const auto& w : cell.basis.monomials) {
      Json modes = Json::array();
      for (const auto& m : w) modes.push_back(Json::array({m.i, m.m}));
      basis.push_back(std::move(modes));
    }
    Json d = Json::array();
    for (const auto& [r, c, v] : differential_triples(cell)) d.push_back(Json::array({r, c, jetcoh::to_string(v)}));
    Json payload{{"algebra", data.spec().name()},
                 {"p", record.p},
                 {"k", record.k},
                 {"record", cell_json(record)},
                 {"basis", std::move(basis)},
                 {"d", std::move(d)}};
    const Json envelope{{"schema", kCellSchema},
                        {"algebraHash", hash},
                        {"payloadHash", fnv1a_hex(payload.dump())},
                        {"payload", std::move(payload)}};

    fs::create_directories(file.parent_path());
    std::random_device rd;
    fs::path tmp = file;
    tmp += ".tmp" + std::to_string(rd());
    {
      std::ofstream out(tmp);
      out << envelope.dump() << '\n';
      if (!out) throw std::runtime_error("write failed");
    }
    fs::rename(tmp, file);
  } catch (const std::exception& e) {
    warnings.push_back("could not write cache file " + file.string() + ": " + e.what());
  }
}

}  // namespace io

std::vector<CacheEntry> list_cache(const std::string& dir) {
  std::vector<CacheEntry> out;
  std::error_code ec;
  if (dir.empty() || !fs::is_directory(dir, ec)) return out;
  for (const auto& it : fs::recursive_directory_iterator(dir, ec)) {
    if (!it.is_regular_file() || it.path().extension() != ".json") continue;
    CacheEntry e;
    e.file = fs::relative(it.path(), dir).generic_string();
    try {
      const Json payload = read_envelope(it.path());
      e.algebra = payload.at("algebra").get<std::string>();
      e.algebraHash = payload.at("algebraHash").get<std::string>();
      const CellRecord r = io::cell_from(payload.at("record"));
      e.p = r.p;
      e.k = r.k;
      e.dimA = r.dimA;
      e.dimH = r.dimH;
      e.valid = true;
    } catch (const std::exception& ex) {
      e.problem = ex.what();
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const CacheEntry& a, const CacheEntry& b) { return a.file < b.file; });
  return out;
}

std::string render_cache_listing(const std::vector<CacheEntry>& entries, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      Json a = Json::array();
      for (const auto& e : entries) {
        Json j{{"file", e.file}, {"valid", e.valid}};
        if (e.valid) {
          j["algebra"] = e.algebra;
          j["algebraHash"] = e.algebraHash;
          j["p"] = e.p;
          j["k"] = e.k;
          j["dimA"] = e.dimA;
          j["dimH"] = e.dimH;
        } else {
          j["problem"] = e.problem;
        }
        a.push_back(std::move(j));
      }
      os << Json{{"schema", "jetcoh.cache-listing/1"}, {"entries", std::move(a)}}.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "file,algebra,p,k,dimA,dimH,valid\n";
      for (const auto& e : entries)
        os << e.file << ',' << e.algebra << ',' << e.p << ',' << e.k << ',' << e.dimA << ',' << e.dimH << ','
           << (e.valid ? "true" : "false") << '\n';
      break;
    case OutputFormat::Text:
      if (entries.empty()) os << "cache is empty\n";
      for (const auto& e : entries) {
        os << e.file << "  ";
        if (e.valid) os << e.algebra << " p=" << e.p << " k=" << e.k << " dimA=" << e.dimA << " dimH=" << e.dimH;
        else os << "INVALID: " << e.problem;
        os << '\n';
      }
      break;
  }
  return os.str();
}

}  // namespace jetcoh::pipeline
