#include "stt/idempotents.hpp"

#include <algorithm>

namespace stt {

namespace {

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add_vec(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub_vec(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale_vec(const Vec& a, const Scalar& c) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

// --- splitting a commutative split semisimple subalgebra -------------------

// piece of the center: basis (columns, in S-coords) + its unit element
struct CenterPiece {
  Matrix basis;
  Vec unit;
};

std::vector<Vec> split_commutative(const Algebra& S, const Matrix& zbasis) {
  std::vector<CenterPiece> work{{zbasis, S.unit}};
  std::vector<Vec> prim;
  while (!work.empty()) {
    CenterPiece piece = work.back();
    work.pop_back();
    if (piece.basis.cols() == 1) {
      // one-dimensional: its unit is a primitive central idempotent
      prim.push_back(piece.unit);
      continue;
    }
    bool split_done = false;
    for (std::size_t cand = 0; cand < piece.basis.cols() && !split_done; ++cand) {
      Vec z = piece.basis.column(cand);
      Poly mp = minimal_polynomial(S, z, piece.unit);
      if (mp.size() <= 2) continue;  // scalar within the piece
      std::vector<Scalar> roots = poly_roots_in_field(mp);
      if (roots.size() + 1 < mp.size())
        throw compute_error(
            "semisimple center does not split over " + S.field.str() +
            "; choose a field containing the needed eigenvalues (e.g. F_p with "
            "p = 1 mod exp G)");
      // split off the lambda-eigenspace of multiplication by z for one root
      const Scalar& lam = roots.front();
      Matrix mult(S.field, piece.basis.cols(), piece.basis.cols());
      for (std::size_t j = 0; j < piece.basis.cols(); ++j) {
        Vec img = sub_vec(S.mul(z, piece.basis.column(j)),
                          scale_vec(piece.basis.column(j), lam));
        auto c = solve(piece.basis, img);
        if (!c) throw internal_error("center piece not closed under multiplication");
        for (std::size_t k = 0; k < piece.basis.cols(); ++k) mult.set(k, j, (*c)[k]);
      }
      Matrix ker = kernel_basis(mult);
      Matrix img = column_space_basis(mult);
      if (ker.cols() == 0 || img.cols() == 0)
        throw internal_error("eigen-splitting degenerate despite nonlinear minimal polynomial");
      Matrix kb = column_space_basis(piece.basis * ker);
      Matrix ib = column_space_basis(piece.basis * img);
      // split the unit along the two ideals
      auto dec = solve(kb.hstack(ib), piece.unit);
      if (!dec) throw internal_error("unit not contained in split pieces");
      Vec u1(S.dim, Scalar::zero(S.field)), u2(S.dim, Scalar::zero(S.field));
      for (std::size_t j = 0; j < kb.cols(); ++j)
        u1 = add_vec(u1, scale_vec(kb.column(j), (*dec)[j]));
      for (std::size_t j = 0; j < ib.cols(); ++j)
        u2 = add_vec(u2, scale_vec(ib.column(j), (*dec)[kb.cols() + j]));
      work.push_back({kb, u1});
      work.push_back({ib, u2});
      split_done = true;
    }
    if (!split_done)
      throw compute_error("cannot split center piece: no element with a nonscalar "
                          "minimal polynomial found");
  }
  return prim;
}

// --- splitting one simple block into primitive idempotents -----------------

// left ideal B.z inside the block (coordinates of the block's own basis)
Matrix left_ideal(const Algebra& B, const Vec& z) {
  Matrix span(B.field, B.dim, 0);
  for (std::size_t i = 0; i < B.dim; ++i) {
    Vec v(B.dim, Scalar::zero(B.field));
    v[i] = Scalar::one(B.field);
    span = span.hstack(Matrix::from_columns(B.field, B.dim, {B.mul(v, z)}));
  }
  return column_space_basis(span);
}

std::optional<Vec> find_zero_divisor(const Algebra& B) {
  auto singular = [&](const Vec& x) {
    return !is_zero_vec(x) && rank(B.lmul(x)) < B.dim;
  };
  std::vector<Vec> pool;
  for (std::size_t i = 0; i < B.dim; ++i) {
    Vec v(B.dim, Scalar::zero(B.field));
    v[i] = Scalar::one(B.field);
    pool.push_back(v);
  }
  for (const auto& v : pool)
    if (singular(v)) return v;
  for (std::size_t i = 0; i < B.dim; ++i)
    for (std::size_t j = 0; j < B.dim; ++j) {
      Vec p = B.mul(pool[i], pool[j]);
      if (singular(p)) return p;
      Vec d = sub_vec(B.mul(pool[i], pool[j]), B.mul(pool[j], pool[i]));
      if (singular(d)) return d;
    }
  // roots of minimal polynomials: x - lambda is singular for eigenvalues
  for (const auto& v : pool) {
    Poly mp = minimal_polynomial(B, v, B.unit);
    for (const auto& lam : poly_roots_in_field(mp)) {
      Vec cand = sub_vec(v, scale_vec(B.unit, lam));
      if (singular(cand)) return cand;
    }
  }
  return std::nullopt;
}

// Given a left ideal V (columns in B-coords), refine it to a minimal one.
Matrix minimal_left_ideal(const Algebra& B, Matrix V) {
  // module structure: action of basis elements on V
  for (std::size_t guard = 0; guard <= B.dim + 1; ++guard) {
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < B.dim; ++i) {
      Vec v(B.dim, Scalar::zero(B.field));
      v[i] = Scalar::one(B.field);
      auto X = solve_matrix(V, B.lmul(v) * V);
      if (!X) throw internal_error("left ideal not invariant");
      act.push_back(std::move(*X));
    }
    // End_B(V): intertwiners of all act matrices
    const std::size_t n = V.cols();
    std::vector<Vec> rows;
    for (const auto& A : act)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          Vec row(n * n, Scalar::zero(B.field));
          for (std::size_t k = 0; k < n; ++k) row[r * n + k] += A.at(k, c);
          for (std::size_t k = 0; k < n; ++k) row[k * n + c] -= A.at(r, k);
          rows.push_back(std::move(row));
        }
    Matrix K = kernel_basis(Matrix::from_rows(B.field, rows));
    if (K.cols() <= 1) return V;  // Schur: endomorphisms are scalars -> simple
    std::vector<Matrix> endos;
    for (std::size_t j = 0; j < K.cols(); ++j) {
      Matrix h(B.field, n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) h.set(r, c, K.at(r * n + c, j));
      endos.push_back(std::move(h));
    }
    bool refined = false;
    for (const auto& h : endos) {
      if (h.is_zero()) continue;
      Matrix kh = kernel_basis(h);
      if (kh.cols() > 0 && kh.cols() < n) {
        V = column_space_basis(V * kh);
        refined = true;
        break;
      }
    }
    if (!refined) {
      // all nonzero endomorphisms invertible or zero on the nose: try images
      for (const auto& h : endos) {
        Matrix im = column_space_basis(h);
        if (im.cols() > 0 && im.cols() < n) {
          V = column_space_basis(V * im);
          refined = true;
          break;
        }
      }
    }
    if (!refined)
      throw compute_error("cannot refine left ideal to a simple one over " +
                          B.field.str() + " (non-split endomorphism ring?)");
  }
  throw internal_error("minimal left ideal refinement did not terminate");
}

// complete set of primitive orthogonal idempotents of a (central-primitive)
// simple split block B; their sum is the unit of B
std::vector<Vec> split_block(const Algebra& B) {
  if (B.dim == 1) return {B.unit};
  auto z = find_zero_divisor(B);
  if (!z)
    throw compute_error(
        "cannot split simple block: no zero divisor found in the search pool "
        "(block may be a nontrivial division algebra; field change needed)");
  Matrix V = minimal_left_ideal(B, left_ideal(B, *z));
  const std::size_t n = V.cols();
  // action map rho: B -> End_k(V); must be bijective for a split block
  if (B.dim != n * n)
    throw compute_error("simple block is not split over " + B.field.str() +
                        " (dim " + std::to_string(B.dim) + " != " +
                        std::to_string(n * n) + ")");
  Matrix rho(B.field, n * n, B.dim);  // columns: vectorized action of basis
  for (std::size_t i = 0; i < B.dim; ++i) {
    Vec v(B.dim, Scalar::zero(B.field));
    v[i] = Scalar::one(B.field);
    auto X = solve_matrix(V, B.lmul(v) * V);
    if (!X) throw internal_error("left ideal not invariant");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) rho.set(r * n + c, i, X->at(r, c));
  }
  std::vector<Vec> out;
  Vec sum(B.dim, Scalar::zero(B.field));
  for (std::size_t j = 0; j < n; ++j) {
    Vec target(n * n, Scalar::zero(B.field));
    target[j * n + j] = Scalar::one(B.field);  // E_jj on V
    auto x = solve(rho, target);
    if (!x) throw compute_error("action map not surjective: block not split");
    if (!B.is_idempotent(*x)) throw internal_error("pulled-back projection not idempotent");
    sum = add_vec(sum, *x);
    out.push_back(std::move(*x));
  }
  if (sum != B.unit) throw internal_error("block idempotents do not sum to the block unit");
  return out;
}

}  // namespace

std::vector<Vec> lift_primitive_idempotents(const AlgebraPtr& a) {
  Matrix rad = radical(*a);
  QuotientAlgebra q = quotient_algebra(a, rad);
  const Algebra& S = *q.alg;

  // primitive idempotents of the semisimple quotient
  std::vector<Vec> prim_s;
  {
    Matrix Z = center_basis(S);
    std::vector<Vec> centrals = split_commutative(S, Z);
    for (const auto& c : centrals) {
      // simple block cS (two-sided ideal; corner with central idempotent)
      CornerAlgebra blk = corner_algebra(q.alg, c, {}, {});
      for (const auto& eb : split_block(*blk.alg))
        prim_s.push_back(blk.embed.apply(eb));
    }
  }

  // lift through the radical, keeping orthogonality
  const std::size_t d = a->dim;
  std::vector<Vec> lifted;
  Vec f(d, Scalar::zero(a->field));
  for (const auto& ebar : prim_s) {
    Vec x = q.section.apply(ebar);
    Vec corr = sub_vec(a->unit, f);
    x = a->mul(corr, a->mul(x, corr));
    for (std::size_t it = 0; it < 64; ++it) {
      if (a->is_idempotent(x)) break;
      Vec x2 = a->mul(x, x);
      Vec x3 = a->mul(x2, x);
      // e <- 3e^2 - 2e^3
      x = sub_vec(scale_vec(x2, Scalar::of_int(a->field, 3)),
                  scale_vec(x3, Scalar::of_int(a->field, 2)));
    }
    if (!a->is_idempotent(x)) throw internal_error("idempotent refinement did not converge");
    if (q.proj.apply(x) != ebar) throw internal_error("lift drifted from its semisimple image");
    f = add_vec(f, x);
    lifted.push_back(std::move(x));
  }
  if (f != a->unit) throw internal_error("lifted idempotents do not sum to 1");
  return lifted;
}

SplitBasicReport is_split_basic(const AlgebraPtr& a) {
  SplitBasicReport rep;
  if (a->idempotents.empty()) {
    rep.detail = "no idempotents present";
    return rep;
  }
  Matrix rad = radical(*a);
  QuotientAlgebra q = quotient_algebra(a, rad);
  rep.split = true;
  for (std::size_t i = 0; i < a->idempotents.size(); ++i) {
    Vec c = q.proj.apply(a->idempotents[i]);
    Matrix Lc = q.alg->lmul(c), Rc = q.alg->rmul(c);
    Matrix span(a->field, q.alg->dim, 0);
    for (std::size_t j = 0; j < q.alg->dim; ++j) {
      Vec v(q.alg->dim, Scalar::zero(a->field));
      v[j] = Scalar::one(a->field);
      span = span.hstack(
          Matrix::from_columns(a->field, q.alg->dim, {Lc.apply(Rc.apply(v))}));
    }
    std::size_t corner_dim = rank(span);
    if (corner_dim != 1) {
      rep.split = false;
      rep.detail = "dim e_" + std::to_string(i) + "(A/rad)e_" + std::to_string(i) +
                   " = " + std::to_string(corner_dim);
      return rep;
    }
  }
  rep.basic = true;
  for (std::size_t i = 0; i < a->idempotents.size() && rep.basic; ++i)
    for (std::size_t j = i + 1; j < a->idempotents.size() && rep.basic; ++j)
      if (is_isomorphic(projective(a, i).rep, projective(a, j).rep)) {
        rep.basic = false;
        rep.detail = "projectives " + std::to_string(i) + " and " + std::to_string(j) +
                     " are isomorphic (not basic)";
      }
  return rep;
}

BasicReduction basic_reduction(const AlgebraPtr& a) {
  if (a->idempotents.empty())
    throw internal_error("basic_reduction requires primitive idempotents");
  const std::size_t r = a->idempotents.size();
  std::vector<Representation> projs;
  for (std::size_t i = 0; i < r; ++i) projs.push_back(projective(a, i).rep);

  BasicReduction br;
  br.source = a;
  br.class_of.assign(r, 0);
  std::vector<std::size_t> reps;  // representative idempotent per class
  for (std::size_t i = 0; i < r; ++i) {
    bool matched = false;
    for (std::size_t c = 0; c < reps.size() && !matched; ++c)
      if (is_isomorphic(projs[i], projs[reps[c]])) {
        br.class_of[i] = c;
        matched = true;
      }
    if (!matched) {
      br.class_of[i] = reps.size();
      reps.push_back(i);
    }
  }
  br.chosen = reps;
  Vec e(a->dim, Scalar::zero(a->field));
  for (auto i : reps) e = add_vec(e, a->idempotents[i]);
  br.e = e;

  std::vector<Vec> corner_idems;
  std::vector<std::string> labels;
  for (auto i : reps) {
    corner_idems.push_back(a->idempotents[i]);
    labels.push_back(i < a->idempotent_labels.size() ? a->idempotent_labels[i]
                                                     : "v" + std::to_string(i));
  }
  CornerAlgebra ca = corner_algebra(a, e, corner_idems, labels);
  auto basic = std::const_pointer_cast<Algebra>(ca.alg);
  basic->split_basic_validated = is_split_basic(ca.alg).ok();
  br.basic = ca.alg;
  br.embed = ca.embed;
  return br;
}

Representation morita_reduce(const BasicReduction& br, const Representation& M) {
  // carrier eM; only the corner algebra acts on it, not all of A
  Matrix C = column_space_basis(M.act_of(br.e));
  Representation out{br.basic, C.cols(), {}};
  for (std::size_t i = 0; i < br.basic->dim; ++i) {
    Vec elem = br.embed.column(i);  // B-basis element as an element of A
    auto X = solve_matrix(C, M.act_of(elem) * C);
    if (!X) throw internal_error("eM not invariant under the corner algebra");
    out.act.push_back(std::move(*X));
  }
  return out;
}

Representation morita_expand(const BasicReduction& br, const Representation& X) {
  const AlgebraPtr& A = br.source;
  const FieldSpec& f = A->field;
  // bimodule Ae: columns of A * e
  Matrix U = column_space_basis(A->rmul(br.e));
  const std::size_t u = U.cols(), x = X.dim;
  if (x == 0) return zero_rep(A);
  // V = U (x) X with relations (w.b) (x) t - w (x) (b.t)
  std::vector<std::vector<Scalar>> rel_cols;
  for (std::size_t bi = 0; bi < br.basic->dim; ++bi) {
    Vec belem = br.embed.column(bi);
    Matrix Rb = A->rmul(belem);  // w -> w * b on A
    auto WB = solve_matrix(U, Rb * U);  // in U coords
    if (!WB) throw internal_error("Ae not stable under right B-multiplication");
    const Matrix& act_b = X.act[bi];
    for (std::size_t wi = 0; wi < u; ++wi)
      for (std::size_t ti = 0; ti < x; ++ti) {
        Vec col(u * x, Scalar::zero(f));
        for (std::size_t k = 0; k < u; ++k) col[k * x + ti] += WB->at(k, wi);
        for (std::size_t k = 0; k < x; ++k) col[wi * x + k] -= act_b.at(k, ti);
        rel_cols.push_back(std::move(col));
      }
  }
  Matrix W = Matrix::from_columns(f, u * x, rel_cols);
  QuotientSpace qs = quotient_space(W, u * x, f);
  Representation out{A, qs.proj.rows(), {}};
  for (std::size_t i = 0; i < A->dim; ++i) {
    // action of b_i on U (x) X: (L_i|U) (x) id
    auto LU = solve_matrix(U, A->left_mult[i] * U);
    if (!LU) throw internal_error("Ae not stable under left multiplication");
    Matrix big(f, u * x, u * x);
    for (std::size_t r = 0; r < u; ++r)
      for (std::size_t c = 0; c < u; ++c) {
        if (LU->at(r, c).is_zero()) continue;
        for (std::size_t t = 0; t < x; ++t)
          big.set(r * x + t, c * x + t, LU->at(r, c));
      }
    out.act.push_back(qs.proj * big * qs.section);
  }
  return out;
}

QuiverPresentation gabriel_quiver(const AlgebraPtr& a) {
  SplitBasicReport rep = is_split_basic(a);
  if (!rep.ok())
    throw compute_error("gabriel_quiver requires a split basic algebra: " + rep.detail);
  Matrix rad = radical(*a);
  // rad^2 span
  Matrix rad2(a->field, a->dim, 0);
  for (std::size_t i = 0; i < rad.cols(); ++i)
    for (std::size_t j = 0; j < rad.cols(); ++j)
      rad2 = rad2.hstack(Matrix::from_columns(
          a->field, a->dim, {a->mul(rad.column(i), rad.column(j))}));
  rad2 = column_space_basis(rad2);

  QuiverPresentation q;
  for (std::size_t i = 0; i < a->idempotents.size(); ++i)
    q.vertices.push_back(i < a->idempotent_labels.size() ? a->idempotent_labels[i]
                                                         : "v" + std::to_string(i));
  auto corner_span = [&](const Matrix& cols, std::size_t i, std::size_t j) {
    Matrix Li = a->lmul(a->idempotents[j]), Ri = a->rmul(a->idempotents[i]);
    Matrix span(a->field, a->dim, 0);
    for (std::size_t c = 0; c < cols.cols(); ++c)
      span = span.hstack(Matrix::from_columns(
          a->field, a->dim, {Li.apply(Ri.apply(cols.column(c)))}));
    return span;
  };
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    for (std::size_t j = 0; j < q.vertices.size(); ++j) {
      std::size_t d1 = rank(corner_span(rad, i, j));
      std::size_t d2 = rank(corner_span(rad2, i, j));
      for (std::size_t k = 0; k < d1 - d2; ++k)
        q.arrows.push_back({"a_" + q.vertices[i] + "_" + q.vertices[j] +
                                (d1 - d2 > 1 ? "_" + std::to_string(k) : ""),
                            i, j});
    }
  return q;
}

}  // namespace stt
