#pragma once

// Hand-built algebras, modules and brute-force enumerators shared by the unit
// and acceptance suites. Everything here is deliberately independent of the
// mutation/enumeration machinery it is used to check: modules are written down
// as explicit matrices or as quotients of explicitly chosen subspaces.

#include <stt/mutation.hpp>
#include <stt/tau.hpp>

namespace stt::testing {

inline const FieldSpec Q = FieldSpec::rationals();

// 1 -> 2
inline AlgebraPtr a2() {
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}};
  return from_bound_quiver(q, Q);
}

// 1 -> 2 (alpha), 1 -> 2p (beta)
inline AlgebraPtr star2(const FieldSpec& f = Q) {
  QuiverPresentation q;
  q.vertices = {"1", "2", "2p"};
  q.arrows = {{"alpha", 0, 1}, {"beta", 0, 2}};
  return from_bound_quiver(q, f);
}

inline Representation simple_at(const AlgebraPtr& a, std::size_t v) {
  Representation r{a, 1, {}};
  for (std::size_t i = 0; i < a->dim; ++i) {
    Matrix m(a->field, 1, 1);
    if (i == v) m.set(0, 0, Scalar::one(a->field));
    r.act.push_back(m);
  }
  return r;
}

// quotient of the projective at `src` by the line e_kill * P
inline Representation length_two_quotient(const AlgebraPtr& a, std::size_t src,
                                          std::size_t kill) {
  Representation p = projective(a, src).rep;
  Matrix line = column_space_basis(p.act_of(a->idempotents[kill]));
  return quotient_rep(p, line).rep;
}

// all three indecomposables over a2: P1, P2 = S2, S1
inline std::vector<Representation> a2_indecomposables(const AlgebraPtr& a) {
  return {projective(a, 0).rep, projective(a, 1).rep, simple_at(a, 0)};
}

// the six indecomposables over the two-arrow star:
// P1 = 1/2 2p, 2, 2p, 1/2, 1/2p, 1
inline std::vector<Representation> star2_indecomposables(const AlgebraPtr& a) {
  return {projective(a, 0).rep, projective(a, 1).rep, projective(a, 2).rep,
          length_two_quotient(a, 0, 2), length_two_quotient(a, 0, 1),
          simple_at(a, 0)};
}

// Brute-force support tau-tilting enumerator: assemble every basic pair from
// the given indecomposable list and every projective index subset, keep the
// tau-rigid pairs of full size. Independent oracle for the mutation BFS.
inline std::vector<SttPair> brute_force_stt(const AlgebraPtr& a,
                                            const std::vector<Representation>& indecs) {
  const std::size_t n = indecs.size(), r = a->idempotents.size();
  std::vector<SttPair> found;
  for (std::size_t tmask = 0; tmask < (1u << n); ++tmask) {
    SttPair pair;
    for (std::size_t i = 0; i < n; ++i)
      if (tmask & (1u << i)) pair.t_parts.push_back(indecs[i]);
    if (pair.t_parts.size() > r) continue;
    for (std::size_t pmask = 0; pmask < (1u << r); ++pmask) {
      pair.p_parts.clear();
      for (std::size_t i = 0; i < r; ++i)
        if (pmask & (1u << i)) pair.p_parts.push_back(i);
      if (pair.t_parts.size() + pair.p_parts.size() != r) continue;
      if (validate_stt_pair(a, pair)) found.push_back(pair);
    }
  }
  return found;
}

// multiset of sorted T-part dim vectors plus the P-part, for oracle comparison
inline std::vector<std::vector<DimVector>> pair_signatures(
    const AlgebraPtr& /*alg*/, const std::vector<SttPair>& pairs) {
  std::vector<std::vector<DimVector>> sigs;
  for (const auto& p : pairs) {
    std::vector<DimVector> sig;
    for (const auto& t : p.t_parts) sig.push_back(t.dim_vector());
    std::sort(sig.begin(), sig.end());
    DimVector pp;
    for (auto i : p.p_parts) pp.push_back(i);
    sig.push_back(pp);
    sigs.push_back(sig);
  }
  std::sort(sigs.begin(), sigs.end());
  return sigs;
}

inline std::vector<std::vector<DimVector>> quiver_signatures(const ExchangeQuiver& q) {
  std::vector<SttPair> pairs;
  for (const auto& v : q.vertices) pairs.push_back(v.pair);
  return pair_signatures(q.alg, pairs);
}

}  // namespace stt::testing
