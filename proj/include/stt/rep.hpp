#pragma once

#include <optional>

#include "stt/algebra.hpp"

namespace stt {

/// Per-idempotent dimensions (dim e_i M); entries sum to dim M.
using DimVector = std::vector<std::size_t>;

/// Left module as one action matrix per algebra basis element.
struct Representation {
  AlgebraPtr alg;
  std::size_t dim = 0;
  std::vector<Matrix> act;  // act[i] = action of basis element i

  Matrix act_of(const Vec& x) const;  // action of an arbitrary element
  DimVector dim_vector() const;
};

/// Intertwiner between two modules over the same algebra.
struct ModuleMap {
  Representation src, dst;
  Matrix m;  // dst.dim x src.dim
};

void validate_representation(const Representation& r);
void validate_module_map(const ModuleMap& f);

Representation zero_rep(const AlgebraPtr& a);
Representation regular_rep(const AlgebraPtr& a);
Representation direct_sum(const std::vector<Representation>& parts);
/// inclusion/projection maps of the i-th summand of a direct sum built
/// with the same part list
ModuleMap summand_inclusion(const std::vector<Representation>& parts,
                            const Representation& total, std::size_t i);

/// The module structure on an invariant column space (columns of C independent).
Representation sub_rep(const Representation& m, const Matrix& C);
ModuleMap sub_rep_inclusion(const Representation& m, const Matrix& C);

struct QuotientRep {
  Representation rep;
  ModuleMap proj;       // m -> rep
  Matrix section;       // rep coords -> m coords (linear section)
};
QuotientRep quotient_rep(const Representation& m, const Matrix& W);

/// Standard projective Lambda e_i with its distinguished generator
/// (the coordinates of e_i itself).
struct ProjectiveModule {
  Representation rep;
  std::size_t idem_index = 0;
  Matrix embed;    // rep coords -> regular-module coords (basis of A e_i)
  Vec generator;   // coordinates of e_i in rep coords
};
ProjectiveModule projective(const AlgebraPtr& a, std::size_t i);

/// Basis of Hom(M, N) as matrices. Uses the algebra's declared generators.
std::vector<Matrix> hom_space(const Representation& M, const Representation& N);

ModuleMap kernel_map(const ModuleMap& f);      // ker -> src
ModuleMap image_map(const ModuleMap& f);       // im -> dst
QuotientRep cokernel_map(const ModuleMap& f);  // dst -> coker

/// rad(A) . M with its inclusion.
ModuleMap radical_submodule(const Representation& m);
/// M / rad(A) M with quotient map.
QuotientRep top(const Representation& m);

/// Projective cover P(M) ->> M; the cover's source is a direct sum of
/// standard projectives, reported with multiplicities.
struct Cover {
  ModuleMap map;                      // P(M) -> M, surjective
  std::vector<std::size_t> summands;  // idempotent index per block, in order
  std::vector<ProjectiveModule> blocks;
};
Cover projective_cover(const Representation& m);

/// True iff Z is a factor of a finite direct sum of copies of T
/// (the trace of T in Z is all of Z).
bool fac_contains(const Representation& T, const Representation& Z);

bool is_sincere(const Representation& m);

/// Basis (columns) of Ann M = { a : a M = 0 }.
Matrix annihilator(const Representation& m);
bool is_faithful(const Representation& m);

// --- decomposition and isomorphism (implemented on top of idempotent lifting)

bool is_isomorphic(const Representation& M, const Representation& N);

/// Indecomposable direct summands with multiplicity; deterministic order
/// (DimVector lexicographic, then an arbitrary but fixed tie-break).
std::vector<Representation> decompose(const Representation& M);

/// End(M) presented as an Algebra; `basis` holds the matching matrices.
struct EndAlgebra {
  AlgebraPtr alg;
  std::vector<Matrix> basis;
};
EndAlgebra end_algebra(const Representation& M);

}  // namespace stt
