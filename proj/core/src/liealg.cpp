#include "jetcoh/liealg.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace jetcoh::liealg {

namespace {

using IntRoot = std::vector<int>;

char series_char(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

// Symmetrized Cartan matrix, scaled so short roots have (a,a) = 2.
std::vector<std::vector<int>> symmetrized_cartan(const AlgebraSpec& spec) {
  const int r = spec.rank;
  std::vector<std::vector<int>> b(r, std::vector<int>(r, 0));
  auto bond = [&](int i, int j, int v) { b[i][j] = b[j][i] = v; };
  switch (spec.series) {
    case Series::A:
      for (int i = 0; i < r; ++i) b[i][i] = 2;
      for (int i = 0; i + 1 < r; ++i) bond(i, i + 1, -1);
      break;
    case Series::B:
      for (int i = 0; i < r; ++i) b[i][i] = 4;
      b[r - 1][r - 1] = 2;
      for (int i = 0; i + 1 < r; ++i) bond(i, i + 1, -2);
      break;
    case Series::C:
      for (int i = 0; i < r; ++i) b[i][i] = 2;
      b[r - 1][r - 1] = 4;
      for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, -1);
      bond(r - 2, r - 1, -2);
      break;
    case Series::D:
      for (int i = 0; i < r; ++i) b[i][i] = 2;
      for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, -1);
      bond(r - 3, r - 1, -1);
      break;
    case Series::E:
      for (int i = 0; i < r; ++i) b[i][i] = 2;
      bond(0, 2, -1);
      bond(1, 3, -1);
      for (int i = 2; i + 1 < r; ++i) bond(i, i + 1, -1);
      break;
    case Series::F:
      b[0][0] = b[1][1] = 4;
      b[2][2] = b[3][3] = 2;
      bond(0, 1, -2);
      bond(1, 2, -2);
      bond(2, 3, -1);
      break;
    case Series::G:
      b[0][0] = 2;
      b[1][1] = 6;
      bond(0, 1, -3);
      break;
  }
  return b;
}

struct RootData {
  std::vector<std::vector<int>> form;  // symmetrized Cartan matrix
  std::vector<IntRoot> positive;       // sorted by height, then lex
  std::map<IntRoot, int> index;        // positive j -> j+1, negative j -> -(j+1)

  int ip(const IntRoot& a, const IntRoot& b) const {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * form[i][j] * b[j];
    return s;
  }
  bool is_root(const IntRoot& a) const { return index.count(a) != 0; }
  bool positive_root(const IntRoot& a) const {
    auto it = index.find(a);
    return it != index.end() && it->second > 0;
  }
  int position(const IntRoot& a) const { return index.at(a) - 1; }  // for positive roots
};

IntRoot add(const IntRoot& a, const IntRoot& b) {
  IntRoot c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}
IntRoot sub(const IntRoot& a, const IntRoot& b) {
  IntRoot c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}
IntRoot neg(const IntRoot& a) {
  IntRoot c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}
RootData generate_roots(const AlgebraSpec& spec) {
  RootData rd;
  rd.form = symmetrized_cartan(spec);
  const int r = spec.rank;
  std::set<IntRoot> known;
  std::vector<IntRoot> level;
  for (int i = 0; i < r; ++i) {
    IntRoot a(r, 0);
    a[i] = 1;
    level.push_back(a);
    known.insert(a);
  }
  std::vector<IntRoot> all;
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    all.insert(all.end(), level.begin(), level.end());
    std::set<IntRoot> next;
    for (const auto& beta : level) {
      for (int i = 0; i < r; ++i) {
        IntRoot ai(r, 0);
        ai[i] = 1;
        if (beta == ai) continue;
        int p = 0;
        IntRoot down = sub(beta, ai);
        while (known.count(down)) {
          ++p;
          down = sub(down, ai);
        }
        const int cartan = 2 * rd.ip(beta, ai) / rd.form[i][i];
        if (p - cartan > 0) next.insert(add(beta, ai));
      }
    }
    level.assign(next.begin(), next.end());
    known.insert(level.begin(), level.end());
  }
  rd.positive = all;
  for (std::size_t j = 0; j < all.size(); ++j) {
    rd.index[all[j]] = static_cast<int>(j) + 1;
    rd.index[neg(all[j])] = -(static_cast<int>(j) + 1);
  }
  return rd;
}

// Structure constants N_{a,b} of the Chevalley basis, fixed by taking
// N = +(p+1) on extraspecial pairs.
class StructureSolver {
 public:
  explicit StructureSolver(const RootData& rd) : rd_(rd) {}

  Rational n(const IntRoot& a, const IntRoot& b) {
    const IntRoot c = add(a, b);
    if (!rd_.is_root(c)) return 0;
    const bool pa = rd_.positive_root(a);
    const bool pb = rd_.positive_root(b);
    const bool pc = rd_.positive_root(c);
    if (pa && pb) return positive_pair(a, b);
    if (!pa && !pb) return -positive_pair(neg(a), neg(b));
    if (!pa) return -n(b, a);
    // a > 0 > b; use the zero-sum triple (a, b, -c).
    const Rational cc = rd_.ip(c, c);
    if (pc) return -cc / rd_.ip(a, a) * positive_pair(neg(b), c);
    return cc / rd_.ip(b, b) * positive_pair(neg(c), a);
  }

 private:
  int p_value(const IntRoot& a, const IntRoot& b) const {
    int p = 0;
    IntRoot x = sub(b, a);
    while (rd_.is_root(x)) {
      ++p;
      x = sub(x, a);
    }
    return p;
  }

  std::pair<IntRoot, IntRoot> extraspecial(const IntRoot& xi) const {
    for (const auto& a : rd_.positive) {
      const IntRoot rest = sub(xi, a);
      if (rd_.positive_root(rest)) return {a, rest};
    }
    throw std::logic_error("no extraspecial pair");
  }

  Rational positive_pair(const IntRoot& a, const IntRoot& b) {
    if (rd_.position(a) > rd_.position(b)) return -positive_pair(b, a);
    const auto key = std::make_pair(rd_.position(a), rd_.position(b));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const IntRoot xi = add(a, b);
    const auto [g, d] = extraspecial(xi);
    Rational value;
    if (g == a) {
      value = p_value(a, b) + 1;
    } else {
      Rational acc = 0;
      const IntRoot bg = sub(b, g);
      if (rd_.is_root(bg)) acc += n(b, neg(g)) * n(a, neg(d)) / rd_.ip(bg, bg);
      const IntRoot ag = sub(a, g);
      if (rd_.is_root(ag)) acc += n(neg(g), a) * n(b, neg(d)) / rd_.ip(ag, ag);
      value = Rational(rd_.ip(xi, xi)) / positive_pair(g, d) * acc;
    }
    if (!is_integer(value)) throw std::logic_error("non-integral structure constant");
    memo_.emplace(key, value);
    return value;
  }

  const RootData& rd_;
  std::map<std::pair<int, int>, Rational> memo_;
};

FiniteWeight to_weight(const IntRoot& a) {
  FiniteWeight w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = a[i];
  return w;
}

void add_term(std::vector<StructureTerm>& terms, std::size_t p, const Rational& c) {
  if (c == 0) return;
  terms.push_back({p, c});
}

Rational lookup(const std::vector<StructureTerm>& terms, std::size_t p) {
  for (const auto& t : terms)
    if (t.index == p) return t.coeff;
  return 0;
}

void accumulate(std::map<std::size_t, Rational>& acc, const std::vector<StructureTerm>& terms, const Rational& s) {
  for (const auto& t : terms) acc[t.index] += s * t.coeff;
}

}  // namespace

void AlgebraSpec::validate() const {
  bool ok = false;
  switch (series) {
    case Series::A: ok = rank >= 1; break;
    case Series::B:
    case Series::C: ok = rank >= 2; break;
    case Series::D: ok = rank >= 3; break;
    case Series::E: ok = rank >= 6 && rank <= 8; break;
    case Series::F: ok = rank == 4; break;
    case Series::G: ok = rank == 2; break;
  }
  if (!ok) throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for series " + series_char(series));
}

std::string AlgebraSpec::name() const { return std::string(1, series_char(series)) + std::to_string(rank); }

AlgebraSpec AlgebraSpec::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("algebra must look like A2 or E8, got '" + std::string(text) + "'");
  const char s = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (s < 'A' || s > 'G') throw std::invalid_argument("unknown series '" + std::string(1, text[0]) + "'");
  int rank = 0;
  for (char ch : text.substr(1)) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("malformed rank in '" + std::string(text) + "'");
    rank = rank * 10 + (ch - '0');
    if (rank > 1000) throw std::invalid_argument("rank too large");
  }
  AlgebraSpec spec{static_cast<Series>(s - 'A'), rank};
  spec.validate();
  return spec;
}

bool FiniteWeight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

Rational FiniteWeight::height() const {
  Rational h = 0;
  for (const auto& c : coords_) h += c;
  return h;
}

FiniteWeight FiniteWeight::operator+(const FiniteWeight& o) const {
  FiniteWeight w = *this;
  w += o;
  return w;
}
FiniteWeight FiniteWeight::operator-(const FiniteWeight& o) const {
  FiniteWeight w = *this;
  w -= o;
  return w;
}
FiniteWeight FiniteWeight::operator-() const {
  FiniteWeight w = *this;
  for (auto& c : w.coords_) c = -c;
  return w;
}
FiniteWeight& FiniteWeight::operator+=(const FiniteWeight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) coords_[i] += o.coords_[i];
  return *this;
}
FiniteWeight& FiniteWeight::operator-=(const FiniteWeight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}
FiniteWeight operator*(const Rational& s, const FiniteWeight& w) {
  FiniteWeight out = w;
  for (auto& c : out.coords_) c *= s;
  return out;
}

std::string FiniteWeight::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += jetcoh::to_string(coords_[i]);
  }
  return s + "]";
}

RootSystem::RootSystem(std::vector<FiniteWeight> simple, std::vector<FiniteWeight> positive, RationalMatrix weight_form)
    : simple_(std::move(simple)), positive_(std::move(positive)), weight_form_(std::move(weight_form)) {
  rho_ = FiniteWeight(simple_.size());
  for (const auto& a : positive_) rho_ += a;
  rho_ = frac(1, 2) * rho_;
  theta_ = positive_.back();
}

Rational RootSystem::pairing(const FiniteWeight& a, const FiniteWeight& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (b[j] != 0) s += a[i] * weight_form_(i, j) * b[j];
  }
  return s;
}

Rational RootSystem::coroot_pairing(const FiniteWeight& a, std::size_t i) const {
  return 2 * pairing(a, simple_[i]) / weight_form_(i, i);
}

Rational RootSystem::coroot_pairing(const FiniteWeight& a, const FiniteWeight& root) const {
  return 2 * pairing(a, root) / norm2(root);
}

FiniteWeight RootSystem::reflect(std::size_t i, const FiniteWeight& a) const {
  FiniteWeight out = a;
  out[i] -= coroot_pairing(a, i);
  return out;
}

bool RootSystem::is_dominant(const FiniteWeight& a) const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (coroot_pairing(a, i) < 0) return false;
  return true;
}

bool RootSystem::is_antidominant(const FiniteWeight& a) const { return is_dominant(-a); }

FiniteWeight RootSystem::dominant_conjugate(const FiniteWeight& a) const {
  FiniteWeight w = a;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (coroot_pairing(w, i) < 0) {
        w = reflect(i, w);
        changed = true;
      }
    }
  }
  return w;
}

std::vector<FiniteWeight> RootSystem::weyl_orbit(const FiniteWeight& a) const {
  std::set<FiniteWeight> seen{a};
  std::vector<FiniteWeight> frontier{a};
  while (!frontier.empty()) {
    std::vector<FiniteWeight> next;
    for (const auto& w : frontier)
      for (std::size_t i = 0; i < rank(); ++i) {
        FiniteWeight v = reflect(i, w);
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool RootSystem::is_positive_root(const FiniteWeight& a) const {
  return std::find(positive_.begin(), positive_.end(), a) != positive_.end();
}

bool RootSystem::is_root(const FiniteWeight& a) const { return is_positive_root(a) || is_positive_root(-a); }

bool RootSystem::in_positive_cone(const FiniteWeight& a) const {
  return std::all_of(a.coords().begin(), a.coords().end(), [](const Rational& q) { return q >= 0 && is_integer(q); });
}

std::int64_t RootSystem::weyl_dimension(const FiniteWeight& highest) const {
  if (!is_dominant(highest)) throw std::invalid_argument("weyl_dimension: weight is not dominant");
  Rational d = 1;
  const FiniteWeight shifted = highest + rho_;
  for (const auto& a : positive_) d *= pairing(shifted, a) / pairing(rho_, a);
  if (!is_integer(d)) throw std::logic_error("weyl_dimension: non-integral result");
  return d.get_num().get_si();
}

std::string BasisLabel::text() const {
  switch (kind) {
    case Kind::E: return "e" + std::to_string(index + 1);
    case Kind::H: return "h" + std::to_string(index + 1);
    case Kind::F: return "f" + std::to_string(index + 1);
  }
  return {};
}

Rational AlgebraData::structure_constant(std::size_t i, std::size_t q, std::size_t p) const {
  return lookup(bracket(i, q), p);
}

std::vector<Rational> AlgebraData::bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket: dimension mismatch");
  std::vector<Rational> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t q = 0; q < dim_; ++q) {
      if (y[q] == 0) continue;
      for (const auto& t : bracket(i, q)) out[t.index] += x[i] * y[q] * t.coeff;
    }
  }
  return out;
}

RationalMatrix AlgebraData::ad_matrix(std::size_t i) const {
  RationalMatrix m(dim_, dim_);
  for (std::size_t q = 0; q < dim_; ++q)
    for (const auto& t : bracket(i, q)) m(t.index, q) = t.coeff;
  return m;
}

RationalMatrix AlgebraData::omega_matrix() const {
  RationalMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) m(omega_index_[i], i) = omega_sign(i);
  return m;
}

AlgebraData build_algebra(const AlgebraSpec& spec) {
  spec.validate();
  const RootData rd = generate_roots(spec);
  const std::size_t r = static_cast<std::size_t>(spec.rank);
  const std::size_t np = rd.positive.size();
  const std::size_t n = 2 * np + r;

  AlgebraData data;
  data.spec_ = spec;
  data.dim_ = n;
  data.coxeter_ = static_cast<std::int64_t>(2 * np / r);

  for (std::size_t j = 0; j < np; ++j) data.labels_.push_back({BasisLabel::Kind::E, j});
  for (std::size_t i = 0; i < r; ++i) data.labels_.push_back({BasisLabel::Kind::H, i});
  for (std::size_t j = 0; j < np; ++j) data.labels_.push_back({BasisLabel::Kind::F, j});

  // Root of each root-vector basis element.
  std::vector<std::optional<IntRoot>> root_of(n);
  for (std::size_t j = 0; j < np; ++j) {
    root_of[j] = rd.positive[j];
    root_of[np + r + j] = neg(rd.positive[j]);
  }
  auto basis_of_root = [&](const IntRoot& a) -> std::size_t {
    const int idx = rd.index.at(a);
    return idx > 0 ? static_cast<std::size_t>(idx - 1) : np + r + static_cast<std::size_t>(-idx - 1);
  };
  auto cartan_int = [&](const IntRoot& beta, std::size_t i) {
    IntRoot ai(r, 0);
    ai[i] = 1;
    return 2 * rd.ip(beta, ai) / rd.form[i][i];
  };

  StructureSolver solver(rd);
  data.structure_.assign(n * n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto& terms = data.structure_[a * n + b];
      const bool ra = root_of[a].has_value();
      const bool rb = root_of[b].has_value();
      if (ra && rb) {
        const IntRoot& x = *root_of[a];
        const IntRoot& y = *root_of[b];
        const IntRoot s = add(x, y);
        if (std::all_of(s.begin(), s.end(), [](int v) { return v == 0; })) {
          // [e_x, e_{-x}] = h_x, the coroot in simple coroot coordinates.
          const int xx = rd.ip(x, x);
          for (std::size_t i = 0; i < r; ++i) {
            const Rational coeff = frac(x[i] * rd.form[i][i], xx);
            add_term(terms, np + i, coeff);
          }
        } else if (rd.is_root(s)) {
          add_term(terms, basis_of_root(s), solver.n(x, y));
        }
      } else if (!ra && rb) {
        add_term(terms, b, cartan_int(*root_of[b], a - np));
      } else if (ra && !rb) {
        add_term(terms, a, -cartan_int(*root_of[a], b - np));
      }
      for (auto& t : terms) t.coeff.canonicalize();
      std::sort(terms.begin(), terms.end(), [](const StructureTerm& u, const StructureTerm& v) { return u.index < v.index; });
    }
  }

  data.weights_.resize(n, FiniteWeight(r));
  for (std::size_t a = 0; a < n; ++a)
    if (root_of[a]) data.weights_[a] = to_weight(*root_of[a]);

  data.omega_index_.resize(n);
  for (std::size_t j = 0; j < np; ++j) {
    data.omega_index_[j] = np + r + j;
    data.omega_index_[np + r + j] = j;
  }
  for (std::size_t i = 0; i < r; ++i) data.omega_index_[np + i] = np + i;

  // Killing form tr(ad a ad b); only weight-opposite pairs can be nonzero.
  data.killing_ = RationalMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (!(data.weights_[a] + data.weights_[b]).is_zero()) continue;
      Rational tr = 0;
      for (std::size_t q = 0; q < n; ++q)
        for (const auto& t : data.bracket(b, q)) tr += t.coeff * lookup(data.bracket(a, t.index), q);
      data.killing_(a, b) = tr;
      data.killing_(b, a) = tr;
    }
  }
  data.gram_ = frac(1, 2 * data.coxeter_) * data.killing_;
  data.gram_inverse_ = inverse(data.gram_);
  data.herm_gram_ = RationalMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) data.herm_gram_(a, b) = data.gram_(a, data.omega_index_[b]);

  // Scaled form on weights: <alpha_a, alpha_b> = M_a^T K^{-1} M_b with
  // K the gram matrix on the Cartan and M_{ij} = alpha_j(h_i).
  RationalMatrix kh(r, r), m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      kh(i, j) = data.gram_(np + i, np + j);
      m(i, j) = frac(2 * rd.form[j][i], rd.form[i][i]);
    }
  const RationalMatrix wf = m.transpose() * inverse(kh) * m;

  std::vector<FiniteWeight> simple, positive;
  for (std::size_t i = 0; i < r; ++i) {
    FiniteWeight w(r);
    w[i] = 1;
    simple.push_back(w);
  }
  for (const auto& a : rd.positive) positive.push_back(to_weight(a));
  data.roots_ = RootSystem(std::move(simple), std::move(positive), wf);

  for (auto* check : {&check_antisymmetry, &check_jacobi, &check_trace_identity}) {
    const std::string err = (*check)(data);
    if (!err.empty()) throw std::logic_error(spec.name() + ": " + err);
  }
  if (!is_positive_definite(data.herm_gram_)) throw std::logic_error(spec.name() + ": hermGram not positive definite");
  return data;
}

Rational scaled_form(const AlgebraData& data, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const std::size_t n = data.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("scaled_form: dimension mismatch");
  Rational s = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < n; ++b)
      if (y[b] != 0 && data.gram()(a, b) != 0) s += x[a] * data.gram()(a, b) * y[b];
  }
  return s;
}

Rational casimir_eigenvalue(const AlgebraData& data, const FiniteWeight& lowest_weight) {
  const RootSystem& rs = data.roots();
  if (lowest_weight.rank() != rs.rank()) throw std::invalid_argument("casimir_eigenvalue: rank mismatch");
  if (!rs.is_antidominant(lowest_weight))
    throw std::invalid_argument("casimir_eigenvalue: " + lowest_weight.to_string() + " is not antidominant");
  return -rs.pairing(rs.rho(), lowest_weight) + frac(1, 2) * rs.norm2(lowest_weight);
}

std::string canonical_json(const AlgebraData& data) {
  using nlohmann::json;
  const std::size_t n = data.dim();
  json doc;
  doc["schema"] = "jetcoh.algebra/1";
  doc["algebra"] = data.spec().name();
  doc["dim"] = n;
  doc["rank"] = data.rank();
  doc["coxeter"] = data.coxeter();
  json labels = json::array();
  for (const auto& l : data.labels()) labels.push_back(l.text());
  doc["labels"] = labels;
  json roots = json::array();
  for (const auto& a : data.roots().positive_roots()) roots.push_back(a.to_string());
  doc["positiveRoots"] = roots;
  json structure = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = i + 1; q < n; ++q)
      for (const auto& t : data.bracket(i, q)) structure.push_back({i, q, t.index, to_string(t.coeff)});
  doc["structure"] = structure;
  json gram = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (data.gram()(i, j) != 0) gram.push_back({i, j, to_string(data.gram()(i, j))});
  doc["gram"] = gram;
  return doc.dump();
}

std::string content_hash(const AlgebraData& data) {
  const std::string text = canonical_json(data);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string check_antisymmetry(const AlgebraData& data) {
  const std::size_t n = data.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = i; q < n; ++q) {
      const auto& a = data.bracket(i, q);
      const auto& b = data.bracket(q, i);
      bool ok = a.size() == b.size();
      for (std::size_t t = 0; ok && t < a.size(); ++t) ok = a[t].index == b[t].index && a[t].coeff == -b[t].coeff;
      if (!ok) return "antisymmetry fails at (" + std::to_string(i) + "," + std::to_string(q) + ")";
    }
  return {};
}

std::string check_jacobi(const AlgebraData& data) {
  const std::size_t n = data.dim();
  const std::size_t r = data.rank();
  // Basis weights are integral; prune triples whose total weight is neither 0 nor a root.
  std::vector<std::vector<long>> w(n, std::vector<long>(r));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < r; ++i) w[a][i] = data.weight(a)[i].get_num().get_si();
  std::set<std::vector<long>> admissible(w.begin(), w.end());
  auto cyclic = [&](std::size_t a, std::size_t b, std::size_t c, std::map<std::size_t, Rational>& acc) {
    for (const auto& t : data.bracket(a, b)) accumulate(acc, data.bracket(t.index, c), t.coeff);
  };
  std::vector<long> sum(r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t t = 0; t < r; ++t) sum[t] = w[i][t] + w[j][t] + w[k][t];
        if (!admissible.count(sum)) continue;
        std::map<std::size_t, Rational> acc;
        cyclic(i, j, k, acc);
        cyclic(j, k, i, acc);
        cyclic(k, i, j, acc);
        for (const auto& [p, v] : acc)
          if (v != 0)
            return "Jacobi fails at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
      }
  return {};
}

std::string check_trace_identity(const AlgebraData& data) {
  const std::size_t n = data.dim();
  const Rational two_c = 2 * data.coxeter();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t m = 0; m < n; ++m)
        for (const auto& t : data.bracket(i, m)) s += t.coeff * data.structure_constant(j, t.index, m);
      if (s != two_c * data.gram()(i, j))
        return "trace identity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  return {};
}

std::string check_compact_adjointness(const AlgebraData& data) {
  const std::size_t n = data.dim();
  const RationalMatrix& h = data.herm_gram();
  for (std::size_t i = 0; i < n; ++i) {
    // ad(x)^dagger = H^{-1} ad(x)^T H must equal -ad(omega x) = ad(x_{omega(i)}).
    const RationalMatrix lhs = data.ad_matrix(i).transpose() * h;
    const RationalMatrix rhs = h * data.ad_matrix(data.omega_index(i));
    if (!(lhs == rhs)) return "compact adjointness fails for basis element " + data.labels()[i].text();
  }
  return {};
}

}  // namespace jetcoh::liealg
