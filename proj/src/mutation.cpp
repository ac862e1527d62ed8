#include "stt/mutation.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace stt {

Approximation minimal_left_approximation(const Representation& x,
                                         const std::vector<Representation>& u) {
  const AlgebraPtr& a = x.alg;
  const FieldSpec& f = a->field;
  Approximation out;
  if (u.empty()) {
    Representation zero = zero_rep(a);
    out.map = ModuleMap{x, zero, Matrix(f, 0, x.dim)};
    return out;
  }
  Representation usum = direct_sum(u);
  std::vector<std::size_t> offset(u.size(), 0);
  for (std::size_t i = 1; i < u.size(); ++i) offset[i] = offset[i - 1] + u[i - 1].dim;

  // per-summand hom bases, embedded as maps X -> U
  struct Cand {
    std::size_t summand;
    Matrix into_summand;  // u[i].dim x x.dim
    Vec flat;             // vectorized as a map X -> U
  };
  std::vector<Cand> cands;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (const auto& h : hom_space(x, u[i])) {
      Vec flat(usum.dim * x.dim, Scalar::zero(f));
      for (std::size_t r = 0; r < u[i].dim; ++r)
        for (std::size_t c = 0; c < x.dim; ++c)
          flat[(offset[i] + r) * x.dim + c] = h.at(r, c);
      cands.push_back(Cand{i, h, std::move(flat)});
    }
  if (cands.empty()) {
    Representation zero = zero_rep(a);
    out.map = ModuleMap{x, zero, Matrix(f, 0, x.dim)};
    return out;
  }

  // rad(End U) . Hom(X, U)
  EndAlgebra E = end_algebra(usum);
  Matrix radE = radical(*E.alg);
  std::vector<std::vector<Scalar>> rad_cols;
  for (std::size_t j = 0; j < radE.cols(); ++j) {
    Matrix r(f, usum.dim, usum.dim);
    Vec c = radE.column(j);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) r = r + E.basis[k] * c[k];
    for (const auto& cand : cands) {
      Matrix comp(f, usum.dim, x.dim);
      // r . (embedded cand): rebuild the embedded matrix, then compose
      Matrix emb(f, usum.dim, x.dim);
      for (std::size_t rr = 0; rr < u[cand.summand].dim; ++rr)
        for (std::size_t cc = 0; cc < x.dim; ++cc)
          emb.set(offset[cand.summand] + rr, cc, cand.into_summand.at(rr, cc));
      comp = r * emb;
      Vec flat;
      flat.reserve(usum.dim * x.dim);
      for (std::size_t rr = 0; rr < usum.dim; ++rr)
        for (std::size_t cc = 0; cc < x.dim; ++cc) flat.push_back(comp.at(rr, cc));
      rad_cols.push_back(std::move(flat));
    }
  }
  Matrix radspan = rad_cols.empty()
                       ? Matrix(f, usum.dim * x.dim, 0)
                       : column_space_basis(
                             Matrix::from_columns(f, usum.dim * x.dim, rad_cols));

  // greedy coset representatives, each supported in a single summand
  std::vector<const Cand*> chosen;
  Matrix span = radspan;
  for (const auto& cand : cands) {
    if (in_column_space(span.cols() ? span : Matrix(f, cand.flat.size(), 0), cand.flat))
      continue;
    chosen.push_back(&cand);
    span = column_space_basis(
        span.hstack(Matrix::from_columns(f, cand.flat.size(), {cand.flat})));
  }

  std::vector<Representation> parts;
  for (const auto* c : chosen) {
    parts.push_back(u[c->summand]);
    out.chosen.push_back(c->summand);
  }
  Representation target = parts.empty() ? zero_rep(a) : direct_sum(parts);
  Matrix F(f, target.dim, x.dim);
  std::size_t off = 0;
  for (const auto* c : chosen) {
    for (std::size_t r = 0; r < u[c->summand].dim; ++r)
      for (std::size_t cc = 0; cc < x.dim; ++cc)
        F.set(off + r, cc, c->into_summand.at(r, cc));
    off += u[c->summand].dim;
  }
  out.map = ModuleMap{x, target, F};
  return out;
}

TwoTermComplex pair_to_silting(const AlgebraPtr& a, const SttPair& pair) {
  Representation T = t_sum(a, pair);
  ProjPresentation pp = minimal_presentation(T);
  Representation Pp = p_sum(a, pair.p_parts);
  TwoTermComplex c;
  c.p0 = pp.p0;
  c.p1 = Pp.dim == 0 ? pp.p1 : direct_sum({pp.p1, Pp});
  Matrix d(a->field, c.p0.dim, c.p1.dim);
  for (std::size_t r = 0; r < pp.d.m.rows(); ++r)
    for (std::size_t j = 0; j < pp.d.m.cols(); ++j) d.set(r, j, pp.d.m.at(r, j));
  c.d = ModuleMap{c.p1, c.p0, d};
  return c;
}

Representation h0(const TwoTermComplex& c) { return cokernel_map(c.d).rep; }

std::size_t hom_k_shift(const TwoTermComplex& c) {
  const FieldSpec& f = c.p0.alg->field;
  auto maps = hom_space(c.p1, c.p0);
  if (maps.empty()) return 0;
  std::vector<std::vector<Scalar>> cols;
  auto flat = [&](const Matrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t cc = 0; cc < m.cols(); ++cc) v.push_back(m.at(r, cc));
    return v;
  };
  for (const auto& h : hom_space(c.p0, c.p0)) cols.push_back(flat(h * c.d.m));
  for (const auto& h : hom_space(c.p1, c.p1)) cols.push_back(flat(c.d.m * h));
  std::size_t ambient = c.p0.dim * c.p1.dim;
  Matrix span = cols.empty() ? Matrix(f, ambient, 0)
                             : Matrix::from_columns(f, ambient, cols);
  return maps.size() - rank(span);
}

namespace {

// canonical T-part order: (DimVector, registry id)
void sort_pair(SttPair& pair, const std::vector<std::size_t>& ids_in,
               std::vector<std::size_t>& ids_out) {
  std::vector<std::size_t> perm(pair.t_parts.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<DimVector> dvs;
  for (const auto& t : pair.t_parts) dvs.push_back(t.dim_vector());
  std::sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
    if (dvs[i] != dvs[j]) return dvs[i] < dvs[j];
    return ids_in[i] < ids_in[j];
  });
  std::vector<Representation> ts;
  ids_out.clear();
  for (auto i : perm) {
    ts.push_back(pair.t_parts[i]);
    ids_out.push_back(ids_in[i]);
  }
  pair.t_parts = std::move(ts);
}

}  // namespace

std::optional<SttPair> left_mutation(const AlgebraPtr& a, const SttPair& pair,
                                     std::size_t x, IsoRegistry& reg) {
  if (x >= pair.t_parts.size()) throw internal_error("mutation index out of range");
  const Representation& X = pair.t_parts[x];
  std::vector<Representation> u;
  for (std::size_t i = 0; i < pair.t_parts.size(); ++i)
    if (i != x) u.push_back(pair.t_parts[i]);

  Representation usum = u.empty() ? zero_rep(a) : direct_sum(u);
  if (fac_contains(usum, X)) return std::nullopt;  // upward exchange: skip

  Approximation ap = minimal_left_approximation(X, u);
  Representation cok = cokernel_map(ap.map).rep;

  std::vector<std::size_t> ids;
  std::vector<Representation> t_new;
  for (const auto& t : u) {
    std::size_t id = reg.indec_id(t);
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
      ids.push_back(id);
      t_new.push_back(reg.rep_of(id));
    }
  }
  for (const auto& piece : decompose(cok)) {
    std::size_t id = reg.indec_id(piece);
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
      ids.push_back(id);
      t_new.push_back(reg.rep_of(id));
    }
  }

  SttPair np;
  np.t_parts = std::move(t_new);
  Representation tsum = t_sum(a, np);
  for (std::size_t p = 0; p < a->idempotents.size(); ++p)
    if (tsum.dim == 0 || hom_space(projective(a, p).rep, tsum).empty())
      np.p_parts.push_back(p);

  std::vector<std::size_t> sorted_ids;
  sort_pair(np, ids, sorted_ids);
  if (!validate_stt_pair(a, np))
    throw internal_error("left mutation produced an invalid pair (bug)");
  return np;
}

std::size_t ExchangeQuiver::in_degree(std::size_t v) const {
  std::size_t n = 0;
  for (const auto& ar : arrows) n += ar.to == v;
  return n;
}

std::size_t ExchangeQuiver::out_degree(std::size_t v) const {
  std::size_t n = 0;
  for (const auto& ar : arrows) n += ar.from == v;
  return n;
}

ExchangeQuiver enumerate_exchange_quiver(const AlgebraPtr& a, std::size_t max_vertices) {
  SplitBasicReport sb = is_split_basic(a);
  if (!sb.ok())
    throw compute_error("enumeration requires a split basic algebra: " + sb.detail);

  ExchangeQuiver q;
  q.alg = a;
  q.registry = std::make_shared<IsoRegistry>(a);
  IsoRegistry& reg = *q.registry;

  auto key_of = [&](const SttPair& p) {
    std::vector<std::size_t> key;
    for (const auto& t : p.t_parts) key.push_back(reg.indec_id(t));
    std::sort(key.begin(), key.end());
    key.push_back(SIZE_MAX);  // separator
    for (auto i : p.p_parts) key.push_back(i);
    return key;
  };

  auto annotate = [&](ExchangeVertex& v) {
    Representation T = t_sum(a, v.pair);
    v.sincere = is_sincere(T);
    v.faithful = is_faithful(T);
    v.tilting = is_classical_tilting(T);
    v.classification = v.tilting ? "tilting"
                       : v.pair.p_parts.empty() ? "tau-tilting"
                                                : "support tau-tilting";
    for (const auto& t : v.pair.t_parts) v.t_ids.push_back(reg.indec_id(t));
    std::sort(v.t_ids.begin(), v.t_ids.end());
  };

  // root (Lambda, 0)
  SttPair root;
  {
    std::vector<Representation> projs;
    for (std::size_t i = 0; i < a->idempotents.size(); ++i)
      projs.push_back(projective(a, i).rep);
    std::vector<std::size_t> ids;
    for (const auto& p : projs) ids.push_back(reg.indec_id(p));
    root.t_parts = projs;
    std::vector<std::size_t> sorted_ids;
    sort_pair(root, ids, sorted_ids);
    if (!validate_stt_pair(a, root))
      throw internal_error("(Lambda, 0) failed validation");
  }

  std::map<std::vector<std::size_t>, std::size_t> index_of;
  std::deque<std::size_t> work;
  {
    ExchangeVertex v;
    v.pair = root;
    annotate(v);
    q.vertices.push_back(std::move(v));
    index_of[key_of(root)] = 0;
    work.push_back(0);
  }

  while (!work.empty()) {
    std::size_t vi = work.front();
    work.pop_front();
    SttPair cur = q.vertices[vi].pair;  // copy: vertex vector may reallocate
    for (std::size_t x = 0; x < cur.t_parts.size(); ++x) {
      auto mut = left_mutation(a, cur, x, reg);
      if (!mut) {
        q.vertices[vi].skipped_ids.push_back(reg.indec_id(cur.t_parts[x]));
        continue;
      }
      auto key = key_of(*mut);
      auto it = index_of.find(key);
      std::size_t ti;
      if (it == index_of.end()) {
        if (q.vertices.size() >= max_vertices)
          throw compute_error(
              "exchange quiver exceeded " + std::to_string(max_vertices) +
              " vertices; possibly tau-tilting infinite");
        ExchangeVertex v;
        v.pair = *mut;
        annotate(v);
        q.vertices.push_back(std::move(v));
        ti = q.vertices.size() - 1;
        index_of[key] = ti;
        work.push_back(ti);
      } else {
        ti = it->second;
      }
      q.arrows.push_back({vi, ti, reg.indec_id(cur.t_parts[x])});
    }
  }

  // unique source (Lambda,0) and unique sink (0,Lambda)
  std::size_t sources = 0, sinks = 0;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    if (q.in_degree(v) == 0) {
      q.source_index = v;
      ++sources;
    }
    if (q.out_degree(v) == 0) {
      q.sink_index = v;
      ++sinks;
    }
  }
  if (sources != 1 || !q.vertices[q.source_index].pair.p_parts.empty())
    throw internal_error("exchange quiver source is not unique or not (Lambda,0)");
  if (sinks != 1 || !q.vertices[q.sink_index].pair.t_parts.empty())
    throw internal_error("exchange quiver sink is not unique or not (0,Lambda)");
  return q;
}

}  // namespace stt
