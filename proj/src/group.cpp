#include "stt/group.hpp"

#include <algorithm>
#include <set>

namespace stt {

std::size_t FiniteGroup::order_of(std::size_t g) const {
  std::size_t n = 1, cur = g;
  while (cur != identity) {
    cur = mul(cur, g);
    ++n;
    if (n > order) throw internal_error("element order exceeds group order");
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

std::vector<std::size_t> FiniteGroup::commutator_subgroup() const {
  std::set<std::size_t> cl;
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h)
      cl.insert(mul(mul(g, h), mul(inverse[g], inverse[h])));
  cl.insert(identity);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto a : cl)
      for (auto b : cl)
        if (cl.insert(mul(a, b)).second) grew = true;
  }
  return {cl.begin(), cl.end()};
}

FiniteGroup make_group(std::vector<std::vector<std::size_t>> table,
                       std::vector<std::string> labels,
                       std::vector<std::size_t> generators) {
  FiniteGroup g;
  g.order = table.size();
  if (g.order == 0) throw input_error("empty group table");
  for (const auto& row : table) {
    if (row.size() != g.order) throw input_error("group table is not square");
    for (auto v : row)
      if (v >= g.order) throw input_error("group table entry out of range");
  }
  g.table = std::move(table);
  g.labels = labels.empty() ? std::vector<std::string>(g.order, "") : std::move(labels);
  if (g.labels.size() != g.order) throw input_error("group label count mismatch");
  for (std::size_t i = 0; i < g.order; ++i)
    if (g.labels[i].empty()) g.labels[i] = "g" + std::to_string(i);

  bool found = false;
  for (std::size_t e = 0; e < g.order && !found; ++e) {
    bool ok = true;
    for (std::size_t h = 0; h < g.order; ++h)
      ok = ok && g.table[e][h] == h && g.table[h][e] == h;
    if (ok) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) throw input_error("group table has no identity");

  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < g.order; ++b)
      for (std::size_t c = 0; c < g.order; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw input_error("group table is not associative");

  g.inverse.assign(g.order, g.order);
  for (std::size_t a = 0; a < g.order; ++a) {
    for (std::size_t b = 0; b < g.order; ++b)
      if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) g.inverse[a] = b;
    if (g.inverse[a] == g.order) throw input_error("group table lacks an inverse");
  }

  if (generators.empty())
    for (std::size_t a = 0; a < g.order; ++a)
      if (a != g.identity) generators.push_back(a);
  for (auto s : generators)
    if (s >= g.order) throw input_error("generator index out of range");
  {
    std::set<std::size_t> cl(generators.begin(), generators.end());
    cl.insert(g.identity);
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto a : cl)
        for (auto b : cl)
          if (cl.insert(g.mul(a, b)).second) grew = true;
    }
    if (cl.size() != g.order)
      throw input_error("declared generators do not generate the group");
  }
  g.generators = std::move(generators);
  return g;
}

GroupAction make_action(const AlgebraPtr& a, FiniteGroup g, std::vector<Matrix> maps) {
  if (maps.size() != g.order) throw input_error("need one automorphism per group element");
  for (const auto& m : maps) validate_automorphism(*a, m);
  if (maps[g.identity] != Matrix::identity(a->field, a->dim))
    throw input_error("identity element must act as the identity map");
  for (std::size_t x = 0; x < g.order; ++x)
    for (std::size_t y = 0; y < g.order; ++y)
      if (maps[x] * maps[y] != maps[g.mul(x, y)])
        throw input_error("action is not compatible with the group multiplication");
  return GroupAction{a, std::move(g), std::move(maps)};
}

GroupAction trivial_action(const AlgebraPtr& a) {
  FiniteGroup g = make_group({{0}}, {"1"});
  return GroupAction{a, g, {Matrix::identity(a->field, a->dim)}};
}

Representation twist_module(const Representation& m, const Matrix& phi) {
  auto inv = invert(phi);
  if (!inv) throw internal_error("twist by a singular map");
  Representation t{m.alg, m.dim, {}};
  for (std::size_t j = 0; j < m.alg->dim; ++j)
    t.act.push_back(m.act_of(inv->column(j)));
  return t;
}

Representation twist_module(const Representation& m, const GroupAction& act,
                            std::size_t g) {
  return twist_module(m, act.of(g));
}

TwoTermComplex twist_complex(const TwoTermComplex& c, const Matrix& phi) {
  TwoTermComplex t;
  t.p1 = twist_module(c.p1, phi);
  t.p0 = twist_module(c.p0, phi);
  t.d = ModuleMap{t.p1, t.p0, c.d.m};  // the underlying linear map is unchanged
  return t;
}

namespace {

// chain maps (u1, u0): a -> b with u0 d_a = d_b u1
std::vector<std::pair<Matrix, Matrix>> chain_map_space(const TwoTermComplex& a,
                                                       const TwoTermComplex& b) {
  const FieldSpec& f = a.p0.alg->field;
  auto h1 = hom_space(a.p1, b.p1);
  auto h0 = hom_space(a.p0, b.p0);
  const std::size_t n1 = h1.size(), n0 = h0.size();
  std::vector<std::pair<Matrix, Matrix>> out;
  if (n1 + n0 == 0) return out;
  std::size_t eq_rows = b.p0.dim * a.p1.dim;
  Matrix K(f, 0, 0);
  if (eq_rows == 0) {
    K = Matrix::identity(f, n1 + n0);
  } else {
    std::vector<Vec> rows(eq_rows, Vec(n1 + n0, Scalar::zero(f)));
    for (std::size_t k = 0; k < n1; ++k) {
      Matrix m = b.d.m * h1[k];
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          rows[r * a.p1.dim + c][k] -= m.at(r, c);
    }
    for (std::size_t k = 0; k < n0; ++k) {
      Matrix m = h0[k] * a.d.m;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          rows[r * a.p1.dim + c][n1 + k] += m.at(r, c);
    }
    K = kernel_basis(Matrix::from_rows(f, rows));
  }
  for (std::size_t j = 0; j < K.cols(); ++j) {
    Matrix u1(f, b.p1.dim, a.p1.dim), u0(f, b.p0.dim, a.p0.dim);
    for (std::size_t k = 0; k < n1; ++k)
      if (!K.at(k, j).is_zero()) u1 = u1 + h1[k] * K.at(k, j);
    for (std::size_t k = 0; k < n0; ++k)
      if (!K.at(k + n1, j).is_zero()) u0 = u0 + h0[k] * K.at(k + n1, j);
    out.push_back({u1, u0});
  }
  return out;
}

bool both_invertible(const Matrix& u1, const Matrix& u0) {
  return u1.rows() == u1.cols() && u0.rows() == u0.cols() &&
         invert(u1).has_value() && invert(u0).has_value();
}

bool d_image_in_radical(const TwoTermComplex& c) {
  ModuleMap radp = radical_submodule(c.p0);
  Matrix im = column_space_basis(c.d.m);
  for (std::size_t j = 0; j < im.cols(); ++j)
    if (!in_column_space(radp.m, im.column(j))) return false;
  return true;
}

struct Lcg {
  std::uint64_t s;
  std::uint64_t next() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; }
};

std::uint64_t g_trial_seed = 0xA12ULL;

}  // namespace

void set_trial_seed(std::uint64_t seed) { g_trial_seed = seed; }
std::uint64_t trial_seed() { return g_trial_seed; }

bool complex_isomorphic(const TwoTermComplex& a, const TwoTermComplex& b) {
  if (a.p1.dim != b.p1.dim || a.p0.dim != b.p0.dim) return false;
  if (a.p1.dim + a.p0.dim == 0) return true;
  const FieldSpec& f = a.p0.alg->field;

  auto ch = chain_map_space(a, b);
  for (const auto& [u1, u0] : ch)
    if (both_invertible(u1, u0)) return true;
  if (!ch.empty()) {
    Matrix s1 = ch[0].first, s0 = ch[0].second;
    for (std::size_t i = 1; i < ch.size(); ++i) {
      s1 = s1 + ch[i].first;
      s0 = s0 + ch[i].second;
    }
    if (both_invertible(s1, s0)) return true;
    for (std::size_t i = 0; i + 1 < ch.size(); ++i)
      if (both_invertible(ch[i].first + ch[i + 1].first,
                          ch[i].second + ch[i + 1].second))
        return true;
    Lcg rng{trial_seed()};
    for (int trial = 0; trial < 64; ++trial) {
      Matrix u1(f, b.p1.dim, a.p1.dim), u0(f, b.p0.dim, a.p0.dim);
      for (const auto& [b1, b0] : ch) {
        Scalar c = Scalar::of_int(f, static_cast<std::int64_t>(rng.next() % 23) - 11);
        u1 = u1 + b1 * c;
        u0 = u0 + b0 * c;
      }
      if (both_invertible(u1, u0)) return true;
    }
  }

  // minimal complexes are homotopy-rigid: invariants certify the negative
  if (!d_image_in_radical(a) || !d_image_in_radical(b))
    throw compute_error("complex iso test inconclusive on non-minimal complexes");
  if (!is_isomorphic(a.p1, b.p1) || !is_isomorphic(a.p0, b.p0)) return false;
  if (!is_isomorphic(h0(a), h0(b))) return false;
  throw compute_error(
      "complex iso search inconclusive: invariants agree but no invertible "
      "chain map was found within the trial budget");
}

bool is_g_stable_module(const Representation& m, const GroupAction& act) {
  for (auto g : act.group.generators)
    if (!is_isomorphic(twist_module(m, act, g), m)) return false;
  return true;
}

bool is_g_stable_pair(const AlgebraPtr& a, const SttPair& pair, const GroupAction& act) {
  if (!is_g_stable_module(t_sum(a, pair), act)) return false;
  const std::size_t r = a->idempotents.size();
  for (auto g : act.group.generators) {
    std::vector<std::size_t> image;
    for (auto p : pair.p_parts) {
      Representation tw = twist_module(projective(a, p).rep, act, g);
      std::size_t target = r;
      for (std::size_t q = 0; q < r && target == r; ++q)
        if (indec_isomorphic(tw, projective(a, q).rep)) target = q;
      if (target == r) throw internal_error("twist of a projective is not projective");
      image.push_back(target);
    }
    std::sort(image.begin(), image.end());
    if (image != pair.p_parts) return false;
  }
  return true;
}

bool is_g_stable_torsion(const Representation& t, const GroupAction& act,
                         const std::vector<Representation>& probes) {
  for (auto g : act.group.generators)
    for (const auto& z : probes)
      if (fac_contains(t, z) != fac_contains(t, twist_module(z, act, g))) return false;
  return true;
}

bool is_g_stable_complex(const TwoTermComplex& c, const GroupAction& act) {
  for (auto g : act.group.generators)
    if (!complex_isomorphic(twist_complex(c, act.of(g)), c)) return false;
  return true;
}

std::vector<std::size_t> stable_filter(ExchangeQuiver& q, const GroupAction& act) {
  if (act.alg != q.alg) throw internal_error("action over a different algebra");
  std::vector<std::size_t> stable;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    q.vertices[v].stable = is_g_stable_pair(q.alg, q.vertices[v].pair, act);
    if (q.vertices[v].stable) stable.push_back(v);
  }
  return stable;
}

}  // namespace stt
