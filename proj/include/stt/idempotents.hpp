#pragma once

#include "stt/rep.hpp"

namespace stt {

/// Complete set of primitive orthogonal idempotents, lifted from the
/// semisimple quotient through the radical. Requires A/rad A split over
/// the field (else throws compute_error advising a field change).
std::vector<Vec> lift_primitive_idempotents(const AlgebraPtr& a);

struct SplitBasicReport {
  bool split = false;  // dim e_i (A/rad) e_i = 1 for every i
  bool basic = false;  // projectives pairwise non-isomorphic
  std::string detail;
  bool ok() const { return split && basic; }
};
SplitBasicReport is_split_basic(const AlgebraPtr& a);

/// Morita-basic reduction B = eAe with e selecting one idempotent per
/// isomorphism class of indecomposable projectives, plus transport data.
struct BasicReduction {
  AlgebraPtr source;
  AlgebraPtr basic;               // B, with idempotents and labels set
  Vec e;                          // selecting idempotent of A
  Matrix embed;                   // B coords -> A coords
  std::vector<std::size_t> chosen;  // source idempotent index per B-vertex
  std::vector<std::size_t> class_of;  // for each source idempotent: B-vertex
};
BasicReduction basic_reduction(const AlgebraPtr& a);

/// Functor M -> eM along a basic reduction.
Representation morita_reduce(const BasicReduction& br, const Representation& M);
/// Functor X -> Ae (x)_B X (the inverse equivalence on objects).
Representation morita_expand(const BasicReduction& br, const Representation& X);

/// Gabriel quiver of a split basic algebra: vertex per idempotent,
/// dim e_j (rad/rad^2) e_i arrows i -> j. Relations are not computed.
QuiverPresentation gabriel_quiver(const AlgebraPtr& a);

}  // namespace stt
