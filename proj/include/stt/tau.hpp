#pragma once

#include "stt/idempotents.hpp"
#include "stt/registry.hpp"

namespace stt {

/// Minimal projective presentation P1 -d-> P0 ->> M.
struct ProjPresentation {
  Representation target;
  Representation p0, p1;
  std::vector<std::size_t> p0_summands, p1_summands;  // idempotent index per block
  std::vector<ProjectiveModule> p0_blocks, p1_blocks;
  ModuleMap d;      // P1 -> P0, image(d) = ker(cover)
  ModuleMap cover;  // P0 ->> M
};

ProjPresentation minimal_presentation(const Representation& m);

/// Transpose over the opposite algebra (fresh AlgebraPtr returned alongside).
struct Transposed {
  AlgebraPtr op;
  Representation rep;
};
Transposed transpose(const Representation& m);

/// k-dual: left module over `target` from a left module over its opposite.
Representation dual_rep(const Representation& n, const AlgebraPtr& target);

/// Auslander-Reiten translate D Tr; zero exactly on projectives.
Representation tau(const Representation& m);

bool is_tau_rigid(const Representation& m);

/// Hom(P, X) = 0 and X tau-rigid, for P the sum of the listed projectives.
bool is_tau_rigid_pair(const Representation& x, const std::vector<std::size_t>& p_parts);

/// Basic support tau-tilting pair: T-part indecomposables plus projective
/// index set. Canonical order: T-parts by (DimVector, registry id),
/// p_parts sorted ascending.
struct SttPair {
  std::vector<Representation> t_parts;
  std::vector<std::size_t> p_parts;
};

Representation t_sum(const AlgebraPtr& a, const SttPair& pair);
Representation p_sum(const AlgebraPtr& a, const std::vector<std::size_t>& p_parts);

/// Full membership predicate: basicness + tau-rigid pair + count.
bool validate_stt_pair(const AlgebraPtr& a, const SttPair& pair);

/// Independent check through a left add(T)-approximation of the regular
/// module (exact sequence Lambda -> T' -> T'' -> 0 with T', T'' in add T).
/// Precondition: the pair is tau-rigid.
bool check_via_approximation(const AlgebraPtr& a, const SttPair& pair);

/// Classical tilting: pd <= 1, Ext^1(T,T) = 0, |T| = number of simples.
bool is_classical_tilting(const Representation& t);

}  // namespace stt
