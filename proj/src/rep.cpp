#include "stt/rep.hpp"

#include <algorithm>

namespace stt {

Matrix Representation::act_of(const Vec& x) const {
  Matrix m(alg->field, dim, dim);
  for (std::size_t i = 0; i < x.size(); ++i) m.add_scaled(act[i], x[i]);
  return m;
}

DimVector Representation::dim_vector() const {
  DimVector dv;
  for (const auto& e : alg->idempotents) dv.push_back(rank(act_of(e)));
  return dv;
}

void validate_representation(const Representation& r) {
  if (r.act.size() != r.alg->dim) throw internal_error("action table size mismatch");
  for (const auto& m : r.act)
    if (m.rows() != r.dim || m.cols() != r.dim)
      throw internal_error("action matrix shape mismatch");
  for (std::size_t i = 0; i < r.alg->dim; ++i)
    for (std::size_t j = 0; j < r.alg->dim; ++j) {
      Vec prod = r.alg->left_mult[i].column(j);
      if (r.act[i] * r.act[j] != r.act_of(prod))
        throw internal_error("action is not multiplicative at (" + std::to_string(i) +
                             "," + std::to_string(j) + ")");
    }
  if (r.act_of(r.alg->unit) != Matrix::identity(r.alg->field, r.dim))
    throw internal_error("unit does not act as identity");
}

void validate_module_map(const ModuleMap& f) {
  if (f.src.alg != f.dst.alg) throw internal_error("module map across algebras");
  if (f.m.rows() != f.dst.dim || f.m.cols() != f.src.dim)
    throw internal_error("module map shape mismatch");
  for (std::size_t i = 0; i < f.src.alg->dim; ++i)
    if (f.m * f.src.act[i] != f.dst.act[i] * f.m)
      throw internal_error("matrix does not intertwine basis element " + std::to_string(i));
}

Representation zero_rep(const AlgebraPtr& a) {
  Representation r{a, 0, {}};
  r.act.assign(a->dim, Matrix(a->field, 0, 0));
  return r;
}

Representation regular_rep(const AlgebraPtr& a) {
  return Representation{a, a->dim, a->left_mult};
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw internal_error("direct_sum of nothing (pass zero_rep)");
  Representation r{parts[0].alg, 0, {}};
  r.act.assign(r.alg->dim, Matrix(r.alg->field, 0, 0));
  for (const auto& p : parts) {
    if (p.alg != r.alg) throw internal_error("direct_sum across algebras");
    r.dim += p.dim;
    for (std::size_t i = 0; i < r.alg->dim; ++i) r.act[i] = r.act[i].dsum(p.act[i]);
  }
  return r;
}

ModuleMap summand_inclusion(const std::vector<Representation>& parts,
                            const Representation& total, std::size_t i) {
  std::size_t off = 0;
  for (std::size_t k = 0; k < i; ++k) off += parts[k].dim;
  Matrix m(total.alg->field, total.dim, parts[i].dim);
  for (std::size_t r = 0; r < parts[i].dim; ++r)
    m.set(off + r, r, Scalar::one(total.alg->field));
  return ModuleMap{parts[i], total, m};
}

Representation sub_rep(const Representation& m, const Matrix& C) {
  Representation r{m.alg, C.cols(), {}};
  for (std::size_t i = 0; i < m.alg->dim; ++i) {
    auto X = solve_matrix(C, m.act[i] * C);
    if (!X) throw internal_error("subspace not invariant under the action");
    r.act.push_back(std::move(*X));
  }
  return r;
}

ModuleMap sub_rep_inclusion(const Representation& m, const Matrix& C) {
  return ModuleMap{sub_rep(m, C), m, C};
}

QuotientRep quotient_rep(const Representation& m, const Matrix& W) {
  QuotientSpace qs = quotient_space(W, m.dim, m.alg->field);
  Representation q{m.alg, qs.proj.rows(), {}};
  for (std::size_t i = 0; i < m.alg->dim; ++i)
    q.act.push_back(qs.proj * m.act[i] * qs.section);
  return QuotientRep{q, ModuleMap{m, q, qs.proj}, qs.section};
}

ProjectiveModule projective(const AlgebraPtr& a, std::size_t i) {
  if (i >= a->idempotents.size()) throw internal_error("idempotent index out of range");
  const Vec& e = a->idempotents[i];
  Matrix embed = column_space_basis(a->rmul(e));  // A e_i as a subspace of A
  Representation reg = regular_rep(a);
  ProjectiveModule p;
  p.rep = sub_rep(reg, embed);
  p.idem_index = i;
  p.embed = embed;
  auto g = solve(embed, a->mul(e, e));
  if (!g) throw internal_error("idempotent not inside its own projective");
  p.generator = *g;
  return p;
}

std::vector<Matrix> hom_space(const Representation& M, const Representation& N) {
  if (M.alg != N.alg) throw internal_error("hom across algebras");
  const FieldSpec& f = M.alg->field;
  const std::size_t nm = M.dim, nn = N.dim;
  if (nm == 0 || nn == 0) return {};
  std::vector<Vec> all_basis;
  const std::vector<Vec>* gens_ptr = &M.alg->generators;
  if (gens_ptr->empty()) {
    for (std::size_t i = 0; i < M.alg->dim; ++i) {
      Vec v(M.alg->dim, Scalar::zero(f));
      v[i] = Scalar::one(f);
      all_basis.push_back(std::move(v));
    }
    gens_ptr = &all_basis;
  }
  const auto& gens = *gens_ptr;
  // unknown X is nn x nm, vectorized row-major; equations X A_g - B_g X = 0
  std::vector<Vec> rows;
  rows.reserve(gens.size() * nn * nm);
  for (const auto& g : gens) {
    Matrix A = M.act_of(g), B = N.act_of(g);
    for (std::size_t r = 0; r < nn; ++r)
      for (std::size_t c = 0; c < nm; ++c) {
        Vec row(nn * nm, Scalar::zero(f));
        for (std::size_t k = 0; k < nm; ++k) row[r * nm + k] += A.at(k, c);
        for (std::size_t k = 0; k < nn; ++k) row[k * nm + c] -= B.at(r, k);
        rows.push_back(std::move(row));
      }
  }
  Matrix K = kernel_basis(Matrix::from_rows(f, rows));
  std::vector<Matrix> basis;
  for (std::size_t j = 0; j < K.cols(); ++j) {
    Matrix h(f, nn, nm);
    for (std::size_t r = 0; r < nn; ++r)
      for (std::size_t c = 0; c < nm; ++c) h.set(r, c, K.at(r * nm + c, j));
    basis.push_back(std::move(h));
  }
  return basis;
}

ModuleMap kernel_map(const ModuleMap& f) {
  Matrix K = kernel_basis(f.m);
  return sub_rep_inclusion(f.src, K);
}

ModuleMap image_map(const ModuleMap& f) {
  Matrix I = column_space_basis(f.m);
  return sub_rep_inclusion(f.dst, I);
}

QuotientRep cokernel_map(const ModuleMap& f) {
  return quotient_rep(f.dst, column_space_basis(f.m));
}

ModuleMap radical_submodule(const Representation& m) {
  Matrix R = radical(*m.alg);
  Matrix span(m.alg->field, m.dim, 0);
  for (std::size_t j = 0; j < R.cols(); ++j)
    span = span.hstack(m.act_of(R.column(j)));
  return sub_rep_inclusion(m, column_space_basis(span));
}

QuotientRep top(const Representation& m) {
  Matrix R = radical(*m.alg);
  Matrix span(m.alg->field, m.dim, 0);
  for (std::size_t j = 0; j < R.cols(); ++j)
    span = span.hstack(m.act_of(R.column(j)));
  return quotient_rep(m, column_space_basis(span));
}

Cover projective_cover(const Representation& m) {
  const FieldSpec& f = m.alg->field;
  QuotientRep t = top(m);
  Cover cov;
  std::vector<Representation> blocks;
  std::vector<Matrix> block_maps;  // each: m.dim x P_i.dim
  for (std::size_t i = 0; i < m.alg->idempotents.size(); ++i) {
    const Vec& e = m.alg->idempotents[i];
    Matrix ei_top = column_space_basis(t.rep.act_of(e));
    for (std::size_t c = 0; c < ei_top.cols(); ++c) {
      // lift the top vector into e_i . M
      Vec w = ei_top.column(c);
      Vec v0 = t.section.apply(w);
      Vec v = m.act_of(e).apply(v0);
      ProjectiveModule P = projective(m.alg, i);
      // block map: basis element p of A e_i (column of P.embed) acts on v
      Matrix bm(f, m.dim, P.rep.dim);
      for (std::size_t j = 0; j < P.rep.dim; ++j) {
        Vec img = m.act_of(P.embed.column(j)).apply(v);
        for (std::size_t r = 0; r < m.dim; ++r) bm.set(r, j, img[r]);
      }
      cov.summands.push_back(i);
      cov.blocks.push_back(P);
      blocks.push_back(P.rep);
      block_maps.push_back(std::move(bm));
    }
  }
  Representation P = blocks.empty() ? zero_rep(m.alg) : direct_sum(blocks);
  Matrix F(f, m.dim, P.dim);
  std::size_t off = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t j = 0; j < blocks[b].dim; ++j)
      for (std::size_t r = 0; r < m.dim; ++r) F.set(r, off + j, block_maps[b].at(r, j));
    off += blocks[b].dim;
  }
  cov.map = ModuleMap{P, m, F};
  if (rank(F) != m.dim) throw internal_error("projective cover not surjective");
  return cov;
}

bool fac_contains(const Representation& T, const Representation& Z) {
  if (Z.dim == 0) return true;
  auto homs = hom_space(T, Z);
  Matrix span(T.alg->field, Z.dim, 0);
  for (const auto& h : homs) span = span.hstack(h);
  return rank(span) == Z.dim;
}

bool is_sincere(const Representation& m) {
  for (auto d : m.dim_vector())
    if (d == 0) return false;
  return true;
}

Matrix annihilator(const Representation& m) {
  const FieldSpec& f = m.alg->field;
  // rows: entries of act_of(a) as linear functions of a
  std::vector<Vec> rows(m.dim * m.dim, Vec(m.alg->dim, Scalar::zero(f)));
  for (std::size_t i = 0; i < m.alg->dim; ++i)
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c)
        rows[r * m.dim + c][i] = m.act[i].at(r, c);
  if (m.dim == 0) return Matrix::identity(f, m.alg->dim);
  return kernel_basis(Matrix::from_rows(f, rows));
}

bool is_faithful(const Representation& m) { return annihilator(m).cols() == 0; }

EndAlgebra end_algebra(const Representation& M) {
  const FieldSpec& f = M.alg->field;
  std::vector<Matrix> basis = hom_space(M, M);
  std::size_t n = basis.size();
  // vectorize basis once to express products
  std::vector<std::vector<Scalar>> cols;
  for (const auto& h : basis) {
    Vec v;
    v.reserve(M.dim * M.dim);
    for (std::size_t r = 0; r < M.dim; ++r)
      for (std::size_t c = 0; c < M.dim; ++c) v.push_back(h.at(r, c));
    cols.push_back(std::move(v));
  }
  Matrix B = Matrix::from_columns(f, M.dim * M.dim, cols);
  auto coords = [&](const Matrix& h) {
    Vec v;
    v.reserve(M.dim * M.dim);
    for (std::size_t r = 0; r < M.dim; ++r)
      for (std::size_t c = 0; c < M.dim; ++c) v.push_back(h.at(r, c));
    auto sol = solve(B, v);
    if (!sol) throw internal_error("endomorphism outside its own span");
    return *sol;
  };
  auto a = std::make_shared<Algebra>();
  a->field = f;
  a->dim = n;
  for (std::size_t i = 0; i < n; ++i) a->basis_labels.push_back("f" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    Matrix lm(f, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vec c = coords(basis[i] * basis[j]);
      for (std::size_t k = 0; k < n; ++k) lm.set(k, j, c[k]);
    }
    a->left_mult.push_back(std::move(lm));
  }
  a->unit = M.dim == 0 ? Vec{} : coords(Matrix::identity(f, M.dim));
  if (n == 0) a->unit = Vec{};
  validate_algebra(*a);
  return EndAlgebra{a, basis};
}

}  // namespace stt
