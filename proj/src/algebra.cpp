#include "stt/algebra.hpp"

#include <algorithm>
#include <map>

namespace stt {

std::size_t QuiverPresentation::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  throw input_error("unknown vertex '" + name + "'");
}

std::size_t QuiverPresentation::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  throw input_error("unknown arrow '" + name + "'");
}

Matrix Algebra::lmul(const Vec& x) const {
  Matrix m(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.add_scaled(left_mult[i], x[i]);
  return m;
}

Matrix Algebra::rmul(const Vec& x) const {
  // column j = b_j * x = lmul(b_j) applied to x
  Matrix m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Vec col = left_mult[j].apply(x);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, j, col[i]);
  }
  return m;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const { return lmul(x).apply(y); }

bool Algebra::is_idempotent(const Vec& x) const { return mul(x, x) == x; }

std::string Algebra::label_of(const Vec& x) const {
  std::string s;
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (!x[i].is_one()) s += x[i].str() + "*";
    s += basis_labels[i];
  }
  return s.empty() ? "0" : s;
}

namespace {

Vec basis_vec(const Algebra& a, std::size_t i) {
  Vec v = a.zero_vec();
  v[i] = Scalar::one(a.field);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

void validate_algebra(const Algebra& a) {
  if (a.left_mult.size() != a.dim || a.unit.size() != a.dim)
    throw internal_error("algebra table shape mismatch");
  // associativity: L(b_i * b_j) == L(b_i) L(b_j)
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec prod = a.left_mult[i].column(j);
      if (a.lmul(prod) != a.left_mult[i] * a.left_mult[j])
        throw internal_error("associativity fails at basis pair (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
    }
  if (a.lmul(a.unit) != Matrix::identity(a.field, a.dim))
    throw internal_error("left unit law fails");
  for (std::size_t i = 0; i < a.dim; ++i)
    if (a.mul(basis_vec(a, i), a.unit) != basis_vec(a, i))
      throw internal_error("right unit law fails");
  if (!a.idempotents.empty()) {
    Vec sum = a.zero_vec();
    for (std::size_t i = 0; i < a.idempotents.size(); ++i) {
      const Vec& e = a.idempotents[i];
      if (!a.is_idempotent(e)) throw internal_error("idempotent law e^2=e fails");
      for (std::size_t j = 0; j < a.idempotents.size(); ++j)
        if (i != j && !is_zero_vec(a.mul(e, a.idempotents[j])))
          throw internal_error("idempotents not orthogonal");
      for (std::size_t k = 0; k < a.dim; ++k) sum[k] += e[k];
    }
    if (sum != a.unit) throw internal_error("idempotents do not sum to 1");
  }
  // generators + unit must span under products
  if (!a.generators.empty()) {
    std::vector<std::vector<Scalar>> cols{a.unit};
    for (const auto& g : a.generators) cols.push_back(g);
    Matrix span = column_space_basis(Matrix::from_columns(a.field, a.dim, cols));
    for (std::size_t round = 0; round < a.dim && span.cols() < a.dim; ++round) {
      std::vector<std::vector<Scalar>> next;
      for (std::size_t j = 0; j < span.cols(); ++j) next.push_back(span.column(j));
      for (const auto& g : a.generators) {
        Matrix lg = a.lmul(g);
        for (std::size_t j = 0; j < span.cols(); ++j)
          next.push_back(lg.apply(span.column(j)));
      }
      Matrix grown = column_space_basis(Matrix::from_columns(a.field, a.dim, next));
      if (grown.cols() == span.cols()) break;
      span = grown;
    }
    if (span.cols() != a.dim)
      throw internal_error("declared generators do not generate the algebra");
  }
}

AlgebraPtr algebra_from_tables(const FieldSpec& f, std::vector<std::string> labels,
                               std::vector<Matrix> left_mult, Vec unit,
                               std::vector<Vec> idempotents,
                               std::vector<std::string> idem_labels,
                               std::vector<Vec> generators) {
  auto a = std::make_shared<Algebra>();
  a->field = f;
  a->dim = left_mult.size();
  a->basis_labels = std::move(labels);
  a->left_mult = std::move(left_mult);
  a->unit = std::move(unit);
  a->idempotents = std::move(idempotents);
  a->idempotent_labels = std::move(idem_labels);
  a->generators = std::move(generators);
  validate_algebra(*a);
  return a;
}

// ---------------------------------------------------------------------------
// bound quiver algebras

namespace {

struct Degree {
  std::vector<Path> paths;
  // for each path: either itself a basis element (survivor) or a rewrite
  // into survivors of the same degree
  std::vector<bool> survives;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rewrite;  // path idx -> (path idx, coef)
};

std::size_t find_path(const std::vector<Path>& ps, const Path& p) {
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (ps[i] == p) return i;
  throw internal_error("path not enumerated");
}

}  // namespace

AlgebraPtr from_bound_quiver(const QuiverPresentation& q, const FieldSpec& field) {
  for (const auto& rel : q.relations)
    for (const auto& t : rel)
      if (!(t.coef.field() == field))
        throw input_error("relation coefficient field does not match the algebra field");

  const std::size_t nv = q.vertices.size();
  if (nv == 0) throw input_error("quiver has no vertices");
  for (const auto& ar : q.arrows)
    if (ar.from >= nv || ar.to >= nv) throw input_error("arrow endpoint out of range");

  // degree 0 and 1
  std::vector<Degree> deg;
  {
    Degree d0;
    for (std::size_t v = 0; v < nv; ++v) d0.paths.push_back(Path{v, v, {}});
    d0.survives.assign(nv, true);
    d0.rewrite.resize(nv);
    deg.push_back(std::move(d0));
  }

  // group relations by degree; validate shape
  std::map<std::size_t, std::vector<std::vector<QuiverPresentation::RelTerm>>> rel_by_deg;
  for (const auto& rel : q.relations) {
    if (rel.empty()) continue;
    std::size_t len = rel[0].arrows.size();
    if (len < 2) throw input_error("relation paths must have length >= 2");
    std::size_t src = q.arrows.at(rel[0].arrows[0]).from;
    std::size_t tgt = q.arrows.at(rel[0].arrows.back()).to;
    for (const auto& t : rel) {
      if (t.arrows.size() != len)
        throw input_error("relation mixes path lengths (only length-homogeneous relations are supported)");
      if (q.arrows.at(t.arrows[0]).from != src || q.arrows.at(t.arrows.back()).to != tgt)
        throw input_error("relation paths do not share source and target");
      for (std::size_t k = 0; k + 1 < t.arrows.size(); ++k)
        if (q.arrows.at(t.arrows[k]).to != q.arrows.at(t.arrows[k + 1]).from)
          throw input_error("relation contains a non-composable arrow sequence");
    }
    rel_by_deg[len].push_back(rel);
  }

  // extend degree by degree
  for (std::size_t ell = 1; ell <= q.nilpotency_bound; ++ell) {
    Degree d;
    const Degree& prev = deg[ell - 1];
    for (std::size_t pi = 0; pi < prev.paths.size(); ++pi) {
      const Path& p = prev.paths[pi];
      for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        if (q.arrows[ai].from != p.target) continue;
        Path np{p.source, q.arrows[ai].to, p.arrows};
        np.arrows.push_back(ai);
        d.paths.push_back(std::move(np));
      }
    }
    if (d.paths.size() > 100000)
      throw input_error("path count explosion at length " + std::to_string(ell));
    if (d.paths.empty()) break;  // acyclic exhaustion: algebra closes here

    // ideal component in this degree: u . r . v with |u| + deg(r) + |v| = ell
    std::vector<Vec> ideal_rows;
    for (const auto& [rl, rels] : rel_by_deg) {
      if (rl > ell) continue;
      for (const auto& rel : rels) {
        std::size_t rsrc = q.arrows.at(rel[0].arrows[0]).from;
        std::size_t rtgt = q.arrows.at(rel[0].arrows.back()).to;
        for (std::size_t lu = 0; lu + rl <= ell; ++lu) {
          std::size_t lv = ell - rl - lu;
          for (const Path& u : deg[lu].paths) {
            if (u.source != rtgt) continue;
            for (const Path& v : deg[lv].paths) {
              if (v.target != rsrc) continue;
              Vec row(d.paths.size(), Scalar::zero(field));
              for (const auto& t : rel) {
                Path w{v.source, u.target, v.arrows};
                w.arrows.insert(w.arrows.end(), t.arrows.begin(), t.arrows.end());
                w.arrows.insert(w.arrows.end(), u.arrows.begin(), u.arrows.end());
                row[find_path(d.paths, w)] += t.coef;
              }
              ideal_rows.push_back(std::move(row));
            }
          }
        }
      }
    }

    d.survives.assign(d.paths.size(), true);
    d.rewrite.resize(d.paths.size());
    if (!ideal_rows.empty()) {
      Rref e = rref(Matrix::from_rows(field, ideal_rows));
      for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
        std::size_t pc = e.pivot_cols[r];
        d.survives[pc] = false;
        for (std::size_t c = 0; c < d.paths.size(); ++c) {
          if (c == pc || e.R.at(r, c).is_zero()) continue;
          d.rewrite[pc].push_back({c, -e.R.at(r, c)});
        }
      }
    }
    bool any = false;
    for (bool s : d.survives) any = any || s;
    deg.push_back(std::move(d));
    if (!any) break;  // ideal swallowed this degree; all longer paths follow
    if (ell == q.nilpotency_bound)
      throw input_error(
          "paths of length " + std::to_string(q.nilpotency_bound) +
          " survive outside the ideal; the quotient may be infinite-dimensional "
          "or the ideal non-admissible (raise nilpotencyBound if legitimate)");
  }

  // assemble basis: survivors, trivial paths first, then (length, lex)
  struct BasisEntry {
    std::size_t degree, index;
  };
  std::vector<BasisEntry> basis;
  for (std::size_t ell = 0; ell < deg.size(); ++ell)
    for (std::size_t i = 0; i < deg[ell].paths.size(); ++i)
      if (deg[ell].survives[i]) basis.push_back({ell, i});
  // path enumeration order is already (length, lex) within each degree
  const std::size_t dim = basis.size();

  auto locate = [&](std::size_t ell, std::size_t idx) -> std::size_t {
    for (std::size_t k = 0; k < dim; ++k)
      if (basis[k].degree == ell && basis[k].index == idx) return k;
    throw internal_error("basis lookup failed");
  };

  auto a = std::make_shared<Algebra>();
  a->field = field;
  a->dim = dim;
  auto qd = std::make_shared<QuiverData>();
  qd->pres = q;
  for (const auto& be : basis) {
    const Path& p = deg[be.degree].paths[be.index];
    qd->basis_paths.push_back(p);
    if (p.length() == 0) {
      a->basis_labels.push_back(q.vertices[p.source]);
    } else {
      std::string s;
      for (std::size_t k = 0; k < p.arrows.size(); ++k)
        s += (k ? "*" : "") + q.arrows[p.arrows[k]].name;
      a->basis_labels.push_back(s);
    }
  }
  a->quiver = qd;

  // multiplication: concatenate, then rewrite within the degree
  a->left_mult.assign(dim, Matrix(field, dim, dim));
  for (std::size_t i = 0; i < dim; ++i) {
    const Path& pi = qd->basis_paths[i];
    for (std::size_t j = 0; j < dim; ++j) {
      const Path& pj = qd->basis_paths[j];
      if (pi.source != pj.target) continue;  // product is zero
      std::size_t ell = pi.length() + pj.length();
      if (ell >= deg.size()) continue;  // beyond closure: zero
      Path w{pj.source, pi.target, pj.arrows};
      w.arrows.insert(w.arrows.end(), pi.arrows.begin(), pi.arrows.end());
      std::size_t wi = find_path(deg[ell].paths, w);
      if (deg[ell].survives[wi]) {
        a->left_mult[i].set(locate(ell, wi), j, Scalar::one(field));
      } else {
        for (const auto& [ci, coef] : deg[ell].rewrite[wi])
          a->left_mult[i].set(locate(ell, ci), j, coef);
      }
    }
  }

  a->unit = a->zero_vec();
  for (std::size_t v = 0; v < nv; ++v) {
    Vec e = a->zero_vec();
    e[v] = Scalar::one(field);  // trivial paths are the first nv basis entries
    a->idempotents.push_back(e);
    a->idempotent_labels.push_back(q.vertices[v]);
    a->unit[v] = Scalar::one(field);
  }
  // generators: trivial paths and arrows
  for (std::size_t k = 0; k < dim; ++k)
    if (qd->basis_paths[k].length() <= 1) a->generators.push_back(basis_vec(*a, k));

  validate_algebra(*a);
  return a;
}

// ---------------------------------------------------------------------------
// radical

namespace {

Scalar trace(const Matrix& m) {
  Scalar t = Scalar::zero(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat zmat_of(const Matrix& m, std::int64_t /*p*/) {
  ZMat z(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      z[i][j] = static_cast<long>(m.at(i, j).residue());
  return z;
}

ZMat zmul(const ZMat& a, const ZMat& b) {
  std::size_t n = a.size(), m = b[0].size(), k = b.size();
  ZMat c(n, std::vector<mpz_class>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (b[t][j] != 0) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

mpz_class ztrace_pow(const ZMat& m, std::uint64_t e) {
  std::size_t n = m.size();
  ZMat acc(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) acc[i][i] = 1;
  ZMat base = m;
  while (e) {
    if (e & 1) acc = zmul(acc, base);
    e >>= 1;
    if (e) base = zmul(base, base);
  }
  mpz_class t = 0;
  for (std::size_t i = 0; i < n; ++i) t += acc[i][i];
  return t;
}

}  // namespace

Matrix radical(const Algebra& a) {
  const FieldSpec& f = a.field;
  if (a.dim == 0) return Matrix(f, 0, 0);

  // current subspace basis, as columns (element vectors); start with all of A
  Matrix cur = Matrix::identity(f, a.dim);

  auto gram_kernel = [&](auto&& form) {
    // kernel of the bilinear form restricted to cur
    std::size_t s = cur.cols();
    Matrix G(f, s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j)
        G.set(i, j, form(cur.column(i), cur.column(j)));
    Matrix K = kernel_basis(G);
    cur = cur.cols() ? column_space_basis(cur * K) : cur;
  };

  if (f.kind == FieldKind::Rationals) {
    gram_kernel([&](const Vec& x, const Vec& y) {
      return trace(a.lmul(a.mul(x, y)));
    });
    return cur;
  }

  // F_p: Cohen-Ivanyos-Wales chain with p-power trace lifts
  std::uint64_t pk = 1;  // p^(k-1)
  for (std::size_t k = 1;; ++k) {
    gram_kernel([&](const Vec& x, const Vec& y) {
      Matrix prod = a.lmul(a.mul(x, y));
      mpz_class t = ztrace_pow(zmat_of(prod, f.p), pk);
      mpz_class denom = mpz_class(static_cast<long>(f.p));
      mpz_pow_ui(denom.get_mpz_t(), denom.get_mpz_t(), static_cast<unsigned long>(k - 1));
      if (t % denom != 0) throw internal_error("trace lift not divisible by p^(k-1)");
      mpz_class v = (t / denom) % f.p;
      return Scalar::of_int(f, v.get_si());
    });
    if (pk >= a.dim) break;  // p^(k-1) >= n: chain has reached the radical
    pk *= static_cast<std::uint64_t>(f.p);
  }
  return cur;
}

Matrix center_basis(const Algebra& a) {
  // z central  <=>  lmul(z) == rmul(z); linear in z
  std::vector<Vec> rows;
  for (std::size_t b = 0; b < a.dim; ++b) {
    // condition: b_b * z - z * b_b = 0; entry-wise linear equations in z
    Matrix L = a.left_mult[b];          // z -> b*z
    Matrix R(a.field, a.dim, a.dim);    // z -> z*b : column j = b_j * b_b
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec col = a.left_mult[j].column(b);
      for (std::size_t i = 0; i < a.dim; ++i) R.set(i, j, col[i]);
    }
    Matrix D = L - R;
    for (std::size_t i = 0; i < a.dim; ++i) rows.push_back(D.row(i));
  }
  return kernel_basis(Matrix::from_rows(a.field, rows));
}

Poly minimal_polynomial(const Algebra& a, const Vec& x, const Vec& one) {
  std::vector<Vec> powers{one};
  Vec cur = one;
  for (std::size_t d = 1; d <= a.dim + 1; ++d) {
    cur = a.mul(x, cur);
    // is cur in the span of previous powers?
    Matrix B = Matrix::from_columns(a.field, a.dim, powers);
    if (auto sol = solve(B, cur)) {
      Poly p;
      for (const auto& c : *sol) p.push_back(-c);
      p.push_back(Scalar::one(a.field));
      return p;
    }
    powers.push_back(cur);
  }
  throw internal_error("minimal polynomial not found (dimension overflow)");
}

AlgebraPtr opposite(const Algebra& a) {
  auto op = std::make_shared<Algebra>();
  op->field = a.field;
  op->dim = a.dim;
  op->basis_labels = a.basis_labels;
  op->unit = a.unit;
  op->idempotents = a.idempotents;
  op->idempotent_labels = a.idempotent_labels;
  op->generators = a.generators;
  op->left_mult.reserve(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    Matrix m(a.field, a.dim, a.dim);
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec col = a.left_mult[j].column(i);  // b_j * b_i
      for (std::size_t k = 0; k < a.dim; ++k) m.set(k, j, col[k]);
    }
    op->left_mult.push_back(std::move(m));
  }
  validate_algebra(*op);
  return op;
}

QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const Matrix& ideal) {
  QuotientSpace qs = quotient_space(ideal, a->dim, a->field);
  std::size_t qdim = qs.proj.rows();
  auto out = std::make_shared<Algebra>();
  out->field = a->field;
  out->dim = qdim;
  for (std::size_t i = 0; i < qdim; ++i)
    out->basis_labels.push_back("q" + std::to_string(i));
  for (std::size_t i = 0; i < qdim; ++i)
    out->left_mult.push_back(qs.proj * a->lmul(qs.section.column(i)) * qs.section);
  out->unit = qs.proj.apply(a->unit);
  for (const auto& g : a->generators) out->generators.push_back(qs.proj.apply(g));
  validate_algebra(*out);
  return QuotientAlgebra{out, qs.proj, qs.section};
}

CornerAlgebra corner_algebra(const AlgebraPtr& a, const Vec& e,
                             const std::vector<Vec>& corner_idempotents,
                             const std::vector<std::string>& idem_labels) {
  if (!a->is_idempotent(e)) throw internal_error("corner element is not idempotent");
  Matrix Le = a->lmul(e), Re = a->rmul(e);
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t i = 0; i < a->dim; ++i)
    cols.push_back(Le.apply(Re.column(i)));  // e * b_i * e
  Matrix embed = column_space_basis(Matrix::from_columns(a->field, a->dim, cols));
  std::size_t bdim = embed.cols();

  auto out = std::make_shared<Algebra>();
  out->field = a->field;
  out->dim = bdim;
  auto coords = [&](const Vec& v) {
    auto sol = solve(embed, v);
    if (!sol) throw internal_error("element not in corner subspace");
    return *sol;
  };
  for (std::size_t i = 0; i < bdim; ++i) {
    Matrix m(a->field, bdim, bdim);
    for (std::size_t j = 0; j < bdim; ++j) {
      Vec prod = a->mul(embed.column(i), embed.column(j));
      Vec c = coords(prod);
      for (std::size_t k = 0; k < bdim; ++k) m.set(k, j, c[k]);
    }
    out->left_mult.push_back(std::move(m));
    out->basis_labels.push_back("c" + std::to_string(i));
  }
  out->unit = coords(e);
  for (const auto& ei : corner_idempotents) out->idempotents.push_back(coords(ei));
  out->idempotent_labels = idem_labels;
  validate_algebra(*out);
  return CornerAlgebra{out, embed, e};
}

Matrix automorphism_from_quiver_map(
    const Algebra& a, const std::vector<std::size_t>& vertex_map,
    const std::vector<std::vector<std::pair<Scalar, std::size_t>>>& arrow_images) {
  if (!a.quiver) throw input_error("algebra has no quiver presentation");
  const QuiverPresentation& q = a.quiver->pres;
  const std::size_t nv = q.vertices.size();
  if (vertex_map.size() != nv) throw input_error("vertex map has wrong size");
  {
    std::vector<bool> seen(nv, false);
    for (auto v : vertex_map) {
      if (v >= nv || seen[v]) throw input_error("vertex map is not a permutation");
      seen[v] = true;
    }
  }
  if (arrow_images.size() != q.arrows.size())
    throw input_error("arrow image list has wrong size");
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    if (arrow_images[ai].empty())
      throw input_error("arrow '" + q.arrows[ai].name + "' has empty image");
    for (const auto& [c, bi] : arrow_images[ai]) {
      (void)c;
      if (bi >= q.arrows.size()) throw input_error("arrow image index out of range");
      if (q.arrows[bi].from != vertex_map[q.arrows[ai].from] ||
          q.arrows[bi].to != vertex_map[q.arrows[ai].to])
        throw input_error("arrow image of '" + q.arrows[ai].name +
                          "' does not match mapped endpoints");
    }
  }

  // image of each arrow as an algebra element
  auto arrow_elem = [&](std::size_t ai) {
    Vec v = a.zero_vec();
    for (std::size_t k = 0; k < a.dim; ++k) {
      const Path& p = a.quiver->basis_paths[k];
      if (p.length() == 1 && p.arrows[0] == ai) {
        v[k] = Scalar::one(a.field);
        return v;
      }
    }
    throw internal_error("arrow missing from basis");
  };

  Matrix phi(a.field, a.dim, a.dim);
  for (std::size_t k = 0; k < a.dim; ++k) {
    const Path& p = a.quiver->basis_paths[k];
    Vec img;
    if (p.length() == 0) {
      img = a.zero_vec();
      img[vertex_map[p.source]] = Scalar::one(a.field);
    } else {
      // multiply arrow images in composition order (last applied on the left)
      img = a.zero_vec();
      bool first = true;
      for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        Vec ia = a.zero_vec();
        for (const auto& [c, bi] : arrow_images[*it]) {
          Vec ae = arrow_elem(bi);
          for (std::size_t t = 0; t < a.dim; ++t) ia[t] += c * ae[t];
        }
        img = first ? ia : a.mul(img, ia);
        first = false;
      }
    }
    for (std::size_t t = 0; t < a.dim; ++t) phi.set(t, k, img[t]);
  }
  validate_automorphism(a, phi);
  return phi;
}

void validate_automorphism(const Algebra& a, const Matrix& phi) {
  if (phi.rows() != a.dim || phi.cols() != a.dim)
    throw input_error("automorphism matrix has wrong shape");
  if (!invert(phi)) throw input_error("map is not invertible");
  if (phi.apply(a.unit) != a.unit) throw input_error("map does not fix the unit");
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec lhs = phi.apply(a.left_mult[i].column(j));
      Vec rhs = a.mul(phi.column(i), phi.column(j));
      if (lhs != rhs)
        throw input_error("map is not multiplicative (relations not preserved?)");
    }
}

}  // namespace stt
