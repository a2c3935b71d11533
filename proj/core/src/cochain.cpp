#include "jetcoh/cochain.hpp"

#include "jetcoh/reptheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetcoh::cochain {

using liealg::AlgebraData;
using liealg::FiniteWeight;

namespace {

// Sorts a wedge into ascending mode order. Returns the permutation sign, or 0
// if a mode repeats.
int canonicalize(Wedge& w) {
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
      std::swap(w[j], w[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return 0;
  return sign;
}

// For each target c, all ordered pairs (a, b) with C_{ab}^c != 0.
std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> bracket_targets(const AlgebraData& data) {
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> out(data.dim());
  for (std::size_t a = 0; a < data.dim(); ++a)
    for (std::size_t b = 0; b < data.dim(); ++b)
      for (const auto& t : data.bracket(a, b)) out[t.index].emplace_back(a, b, t.coeff);
  return out;
}

// Shared per-algebra tables used while building a cell.
struct Context {
  const AlgebraData& data;
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> targets;
  RationalMatrix herm_inverse;

  explicit Context(const AlgebraData& d) : data(d), targets(bracket_targets(d)), herm_inverse(inverse(d.herm_gram())) {}

  void differential(const Wedge& w, std::vector<std::pair<Wedge, Rational>>& out) const {
    for (std::size_t j = 0; j < w.size(); ++j) {
      const CochainMode u = w[j];
      const int position_sign = (j % 2 == 0) ? 1 : -1;
      // d e^{c,K} = - sum_{(a,k1) < (b,k2), k1+k2=K} C_{ab}^c e^{a,k1} ^ e^{b,k2}
      for (int k1 = 1; k1 < u.m; ++k1) {
        const int k2 = u.m - k1;
        for (const auto& [a, b, coeff] : targets[u.i]) {
          const CochainMode first{a, k1};
          const CochainMode second{b, k2};
          if (!(first < second)) continue;
          Wedge v;
          v.reserve(w.size() + 1);
          v.insert(v.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
          v.push_back(first);
          v.push_back(second);
          v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(j) + 1, w.end());
          const int s = canonicalize(v);
          if (s == 0) continue;
          out.emplace_back(std::move(v), Rational(-position_sign * s) * coeff);
        }
      }
    }
  }

  Rational inner(const Wedge& a, const Wedge& b) const {
    if (a.size() != b.size()) return 0;
    const std::size_t p = a.size();
    RationalMatrix m(p, p);
    bool any_row_zero = false;
    for (std::size_t s = 0; s < p && !any_row_zero; ++s) {
      bool nonzero = false;
      for (std::size_t t = 0; t < p; ++t) {
        if (a[s].m != b[t].m) continue;
        m(s, t) = herm_inverse(a[s].i, b[t].i);
        nonzero = nonzero || m(s, t) != 0;
      }
      any_row_zero = !nonzero;
    }
    if (any_row_zero) return 0;
    return determinant(m);
  }
};

SparseRationalMatrix differential_matrix(const Context& ctx, const CochainBasis& in, const CochainBasis& out) {
  SparseRationalMatrix d(out.size(), in.size());
  std::vector<std::pair<Wedge, Rational>> terms;
  for (std::size_t c = 0; c < in.size(); ++c) {
    terms.clear();
    ctx.differential(in.monomials[c], terms);
    for (const auto& [w, v] : terms) {
      const std::size_t r = out.find(w);
      if (r == out.size()) throw std::logic_error("differential left the target basis");
      d.add(r, c, v);
    }
  }
  d.finalize();
  return d;
}

RationalMatrix gram_of(const Context& ctx, const CochainBasis& basis, const std::vector<std::size_t>& idx) {
  RationalMatrix g(idx.size(), idx.size());
  for (std::size_t s = 0; s < idx.size(); ++s)
    for (std::size_t t = s; t < idx.size(); ++t) {
      const Rational v = ctx.inner(basis.monomials[idx[s]], basis.monomials[idx[t]]);
      g(s, t) = v;
      g(t, s) = v;
    }
  return g;
}

RationalMatrix restrict(const SparseRationalMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                        const std::vector<std::size_t>& row_pos, const std::vector<std::size_t>& col_pos) {
  RationalMatrix out(rows.size(), cols.size());
  for (const auto& e : m.entries()) {
    const std::size_t r = row_pos[e.row];
    const std::size_t c = col_pos[e.col];
    if (r < rows.size() && c < cols.size() && rows[r] == e.row && cols[c] == e.col) out(r, c) = e.value;
  }
  return out;
}

std::map<FiniteWeight, std::vector<std::size_t>> group_by_weight(const CochainBasis& b) {
  std::map<FiniteWeight, std::vector<std::size_t>> g;
  for (std::size_t i = 0; i < b.size(); ++i) g[b.weights[i]].push_back(i);
  return g;
}

// position[i] = index of basis element i inside its weight group.
std::vector<std::size_t> positions(const CochainBasis& b, const std::map<FiniteWeight, std::vector<std::size_t>>& groups) {
  std::vector<std::size_t> pos(b.size());
  for (const auto& [_, idx] : groups)
    for (std::size_t s = 0; s < idx.size(); ++s) pos[idx[s]] = s;
  return pos;
}

const std::vector<std::size_t>& group_or_empty(const std::map<FiniteWeight, std::vector<std::size_t>>& g, const FiniteWeight& w) {
  static const std::vector<std::size_t> empty;
  auto it = g.find(w);
  return it == g.end() ? empty : it->second;
}

void enumerate(std::size_t n, int p, int k, Wedge& cur, std::vector<Wedge>& out) {
  if (p == 0) {
    if (k == 0) out.push_back(cur);
    return;
  }
  CochainMode start = cur.empty() ? CochainMode{0, 1} : cur.back();
  if (!cur.empty()) {
    // next mode strictly after cur.back()
    if (start.i + 1 < n) {
      start.i += 1;
    } else {
      start.i = 0;
      start.m += 1;
    }
  }
  // Remaining p modes have levels >= start.m, so they need energy >= p * start.m.
  for (int m = start.m; m * p <= k; ++m) {
    for (std::size_t i = (m == start.m ? start.i : 0); i < n; ++i) {
      cur.push_back({i, m});
      enumerate(n, p - 1, k - m, cur, out);
      cur.pop_back();
    }
  }
}

bool is_zero_matrix(const RationalMatrix& m) { return m.is_zero(); }

}  // namespace

std::size_t CochainBasis::find(const Wedge& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? monomials.size() : it->second;
}

FiniteWeight mode_weight(const AlgebraData& data, const CochainMode& mode) { return -data.weight(mode.i); }

CochainBasis build_basis(const AlgebraData& data, int p, int k) {
  if (p < 0 || k < 0) throw std::invalid_argument("build_basis: negative degree or energy");
  CochainBasis b;
  b.p = p;
  b.k = k;
  Wedge cur;
  enumerate(data.dim(), p, k, cur, b.monomials);
  for (std::size_t s = 0; s < b.monomials.size(); ++s) {
    FiniteWeight w(data.rank());
    for (const auto& mode : b.monomials[s]) w -= data.weight(mode.i);
    b.weights.push_back(std::move(w));
    b.index_.emplace(b.monomials[s], s);
  }
  return b;
}

std::size_t count_basis(std::size_t n, int p, int k) {
  if (p < 0 || k < 0) return 0;
  // Coefficient of y^p t^k in prod_{m>=1} (1 + y t^m)^n.
  std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1));
  for (std::size_t a = 0; a <= n; ++a) {
    binom[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : BigInt(0));
  }
  std::vector<std::vector<BigInt>> poly(p + 1, std::vector<BigInt>(k + 1));
  poly[0][0] = 1;
  for (int m = 1; m <= k; ++m) {
    std::vector<std::vector<BigInt>> next(p + 1, std::vector<BigInt>(k + 1));
    for (int d = 0; d <= p; ++d)
      for (int e = 0; e <= k; ++e) {
        if (poly[d][e] == 0) continue;
        for (std::size_t j = 0; j <= n && d + static_cast<int>(j) <= p && e + static_cast<int>(j) * m <= k; ++j)
          next[d + j][e + j * m] += poly[d][e] * binom[n][j];
      }
    poly = std::move(next);
  }
  return poly[p][k].get_ui();
}

std::vector<std::pair<Wedge, Rational>> differential_of(const AlgebraData& data, const Wedge& w) {
  Context ctx(data);
  std::vector<std::pair<Wedge, Rational>> out;
  ctx.differential(w, out);
  return out;
}

Rational wedge_inner(const AlgebraData& data, const Wedge& a, const Wedge& b) { return Context(data).inner(a, b); }

RationalMatrix gram_matrix(const AlgebraData& data, const CochainBasis& basis) {
  Context ctx(data);
  std::vector<std::size_t> all(basis.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return gram_of(ctx, basis, all);
}

GradedComplexBlock differential_block(const AlgebraData& data, int p, int k) {
  Context ctx(data);
  GradedComplexBlock blk;
  blk.basis_in = build_basis(data, p, k);
  blk.basis_out = build_basis(data, p + 1, k);
  blk.d = differential_matrix(ctx, blk.basis_in, blk.basis_out);
  std::vector<std::size_t> in(blk.basis_in.size()), out(blk.basis_out.size());
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = i;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  blk.gram_in = gram_of(ctx, blk.basis_in, in);
  blk.gram_out = gram_of(ctx, blk.basis_out, out);
  return blk;
}

SparseRationalMatrix action_matrix(const AlgebraData& data, const CochainBasis& basis, std::size_t a) {
  // x_a . e^{c,m} = - sum_q C_{aq}^c e^{q,m}
  std::vector<std::vector<std::pair<std::size_t, Rational>>> coadj(data.dim());
  for (std::size_t q = 0; q < data.dim(); ++q)
    for (const auto& t : data.bracket(a, q)) coadj[t.index].emplace_back(q, -t.coeff);
  SparseRationalMatrix m(basis.size(), basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const Wedge& w = basis.monomials[s];
    for (std::size_t j = 0; j < w.size(); ++j) {
      for (const auto& [q, v] : coadj[w[j].i]) {
        Wedge u = w;
        u[j].i = q;
        const int sign = canonicalize(u);
        if (sign == 0) continue;
        const std::size_t r = basis.find(u);
        if (r == basis.size()) throw std::logic_error("action_matrix: image outside basis");
        m.add(r, s, Rational(sign) * v);
      }
    }
  }
  m.finalize();
  return m;
}

CellData build_cell(const AlgebraData& data, int p, int k) {
  if (p < 0 || k < 0) throw std::invalid_argument("build_cell: negative degree or energy");
  Context ctx(data);
  CellData cell;
  cell.p = p;
  cell.k = k;
  cell.basis = build_basis(data, p, k);
  cell.dim = cell.basis.size();
  const CochainBasis prev = p > 0 ? build_basis(data, p - 1, k) : CochainBasis{};
  const CochainBasis next = build_basis(data, p + 1, k);

  const SparseRationalMatrix d = differential_matrix(ctx, cell.basis, next);
  const SparseRationalMatrix d_prev = p > 0 ? differential_matrix(ctx, prev, cell.basis) : SparseRationalMatrix(cell.dim, 0);

  // d_p o d_{p-1} == 0, exactly.
  {
    std::map<std::pair<std::size_t, std::size_t>, Rational> prod;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> by_row(cell.dim);
    for (const auto& e : d_prev.entries()) by_row[e.row].emplace_back(e.col, e.value);
    for (const auto& e : d.entries())
      for (const auto& [c, v] : by_row[e.col]) prod[{e.row, c}] += e.value * v;
    cell.dd_zero = std::all_of(prod.begin(), prod.end(), [](const auto& kv) { return kv.second == 0; });
  }

  const auto groups = group_by_weight(cell.basis);
  const auto groups_prev = group_by_weight(prev);
  const auto groups_next = group_by_weight(next);
  const auto pos = positions(cell.basis, groups);
  const auto pos_prev = positions(prev, groups_prev);
  const auto pos_next = positions(next, groups_next);

  for (const auto& [w, idx] : groups) {
    WeightBlock blk;
    blk.weight = w;
    blk.index = idx;
    blk.index_prev = group_or_empty(groups_prev, w);
    blk.index_next = group_or_empty(groups_next, w);
    blk.d = restrict(d, blk.index_next, blk.index, pos_next, pos);
    blk.d_prev = restrict(d_prev, blk.index, blk.index_prev, pos, pos_prev);
    blk.gram = gram_of(ctx, cell.basis, blk.index);
    blk.gram_prev = gram_of(ctx, prev, blk.index_prev);
    blk.gram_next = gram_of(ctx, next, blk.index_next);

    const RationalMatrix g_inv = inverse(blk.gram);
    RationalMatrix lap(idx.size(), idx.size());
    if (!blk.index_next.empty()) lap = lap + g_inv * blk.d.transpose() * blk.gram_next * blk.d;
    if (!blk.index_prev.empty()) lap = lap + blk.d_prev * inverse(blk.gram_prev) * blk.d_prev.transpose() * blk.gram;
    blk.laplacian = std::move(lap);

    const RationalMatrix gl = blk.gram * blk.laplacian;
    if (!(gl == gl.transpose())) cell.self_adjoint = false;
    cell.rank_d += rank(blk.d);
    cell.rank_d_prev += rank(blk.d_prev);
    cell.blocks.push_back(std::move(blk));
  }
  return cell;
}

RationalMatrix laplacian_block(const CellData& cell) {
  RationalMatrix l(cell.dim, cell.dim);
  for (const auto& blk : cell.blocks)
    for (std::size_t s = 0; s < blk.index.size(); ++s)
      for (std::size_t t = 0; t < blk.index.size(); ++t) l(blk.index[s], blk.index[t]) = blk.laplacian(s, t);
  return l;
}

RationalMatrix laplacian_block(const AlgebraData& data, int p, int k) { return laplacian_block(build_cell(data, p, k)); }

HarmonicSpace harmonic_space(const AlgebraData& data, const CellData& cell) {
  (void)data;
  HarmonicSpace h;
  h.p = cell.p;
  h.k = cell.k;
  for (const auto& blk : cell.blocks) {
    for (auto& v : kernel_basis(blk.laplacian)) {
      if (!blk.index_next.empty()) {
        const auto dv = blk.d.apply(v);
        if (!std::all_of(dv.begin(), dv.end(), [](const Rational& q) { return q == 0; })) h.closed_and_coclosed = false;
      }
      if (!blk.index_prev.empty()) {
        const auto co = blk.d_prev.transpose().apply(blk.gram.apply(v));
        if (!std::all_of(co.begin(), co.end(), [](const Rational& q) { return q == 0; })) h.closed_and_coclosed = false;
      }
      std::vector<Rational> full(cell.dim);
      for (std::size_t s = 0; s < v.size(); ++s) full[blk.index[s]] = v[s];
      h.basis.push_back(std::move(full));
      h.weights.push_back(blk.weight);
    }
  }
  h.hodge_consistent = h.dim() == cell.dim - cell.rank_d - cell.rank_d_prev;
  return h;
}

HarmonicSpace harmonic_space(const AlgebraData& data, int p, int k) { return harmonic_space(data, build_cell(data, p, k)); }

Rational eigenvalue_of(const AlgebraData& data, const FiniteWeight& lowest_weight, int k) {
  if (k < 0) throw std::invalid_argument("eigenvalue_of: negative energy");
  return liealg::casimir_eigenvalue(data, lowest_weight) - Rational(data.coxeter() * k);
}

IsotypicVerdict isotypic_eigen_check(const AlgebraData& data, const CellData& cell) {
  IsotypicVerdict v;
  v.p = cell.p;
  v.k = cell.k;
  auto fail = [&](std::string why) {
    if (v.pass) v.failure = std::move(why);
    v.pass = false;
  };
  if (cell.dim == 0) return v;

  const liealg::RootSystem& rs = data.roots();
  const auto summands = reptheory::decompose(data, reptheory::weights_of_basis(data, cell.basis));

  // Lowering operators: f_i for each simple root.
  std::vector<std::size_t> lowering;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    const auto& roots = rs.positive_roots();
    const auto it = std::find(roots.begin(), roots.end(), rs.simple_roots()[i]);
    lowering.push_back(data.f_index(static_cast<std::size_t>(it - roots.begin())));
  }
  std::vector<SparseRationalMatrix> f_act;
  for (auto a : lowering) f_act.push_back(action_matrix(data, cell.basis, a));

  std::map<FiniteWeight, const WeightBlock*> block_of;
  for (const auto& blk : cell.blocks) block_of[blk.weight] = &blk;

  for (const auto& s : summands) {
    IsotypicComponent comp;
    comp.lowest_weight = s.lowest_weight;
    comp.multiplicity = static_cast<std::size_t>(s.multiplicity);
    comp.mu = eigenvalue_of(data, s.lowest_weight, cell.k);
    const WeightBlock* blk = block_of.at(s.lowest_weight);

    // Stack the lowering actions restricted to this weight block.
    std::vector<std::size_t> col_pos(cell.dim, cell.dim);
    for (std::size_t t = 0; t < blk->index.size(); ++t) col_pos[blk->index[t]] = t;
    std::map<std::size_t, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    for (std::size_t i = 0; i < f_act.size(); ++i)
      for (const auto& e : f_act[i].entries()) {
        if (col_pos[e.col] == cell.dim) continue;
        const std::size_t key = i * cell.dim + e.row;
        auto [it, fresh] = row_of.emplace(key, rows.size());
        if (fresh) rows.emplace_back();
        rows[it->second].emplace_back(col_pos[e.col], e.value);
      }
    RationalMatrix stacked(rows.size(), blk->index.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, val] : rows[r]) stacked(r, c) += val;
    const auto lowest = kernel_basis(stacked);
    comp.lowest_vectors = lowest.size();

    bool have_scalar = false;
    comp.scalar = true;
    for (const auto& x : lowest) {
      const auto lx = blk->laplacian.apply(x);
      std::size_t pivot = 0;
      while (x[pivot] == 0) ++pivot;
      const Rational sc = lx[pivot] / x[pivot];
      if (!have_scalar) {
        comp.laplacian_scalar = sc;
        have_scalar = true;
      } else if (sc != comp.laplacian_scalar) {
        comp.scalar = false;
      }
      for (std::size_t t = 0; t < x.size(); ++t)
        if (lx[t] != sc * x[t]) comp.scalar = false;
    }
    comp.matches_formula = comp.scalar && have_scalar && comp.laplacian_scalar == -comp.mu;
    const std::string where = "(" + std::to_string(cell.p) + "," + std::to_string(cell.k) + ") component " + s.lowest_weight.to_string();
    if (comp.lowest_vectors != comp.multiplicity)
      fail(where + ": lowest-weight space has dim " + std::to_string(comp.lowest_vectors) + ", expected " + std::to_string(comp.multiplicity));
    else if (!comp.scalar)
      fail(where + ": Laplacian is not scalar on lowest-weight vectors");
    else if (!comp.matches_formula)
      fail(where + ": Laplacian scalar " + to_string(comp.laplacian_scalar) + " != -mu = " + to_string(-comp.mu));
    v.components.push_back(std::move(comp));
  }

  // [L, rho(x_a)] == 0 for every basis element.
  const RationalMatrix lap = laplacian_block(cell);
  for (std::size_t a = 0; a < data.dim() && v.commutes; ++a) {
    const SparseRationalMatrix act = action_matrix(data, cell.basis, a);
    RationalMatrix comm(cell.dim, cell.dim);
    for (const auto& e : act.entries()) {
      for (std::size_t r = 0; r < cell.dim; ++r)
        if (lap(r, e.row) != 0) comm(r, e.col) += lap(r, e.row) * e.value;   // L A
      for (std::size_t c = 0; c < cell.dim; ++c)
        if (lap(e.col, c) != 0) comm(e.row, c) -= e.value * lap(e.col, c);   // A L
    }
    if (!is_zero_matrix(comm)) {
      v.commutes = false;
      fail("(" + std::to_string(cell.p) + "," + std::to_string(cell.k) + "): Laplacian does not commute with " + data.labels()[a].text());
    }
  }
  return v;
}

}  // namespace jetcoh::cochain
