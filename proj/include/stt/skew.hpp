#pragma once

#include "stt/group.hpp"

namespace stt {

/// Skew group algebra: free Lambda-module on G with
/// (lambda, g)(mu, h) = (lambda . g(mu), gh). Basis labels "(b,g)",
/// ordered g-major: index = g * dim(Lambda) + b.
struct SkewAlgebra {
  AlgebraPtr base;
  GroupAction action;
  AlgebraPtr carrier;  // idempotents filled by lifting
  std::size_t index(std::size_t b, std::size_t g) const;
};

/// Requires |G| invertible in the field.
SkewAlgebra skew_algebra(const GroupAction& act);

/// Induction F = (Lambda G) tensor_Lambda (-): carrier (+)_g (g tensor M).
Representation induce(const SkewAlgebra& s, const Representation& m);

/// Restriction H along Lambda -> Lambda G.
Representation restrict_rep(const SkewAlgebra& s, const Representation& n);

/// One character chi: G -> k^* as its value list.
struct Character {
  std::vector<Scalar> values;
};

struct CharacterGroup {
  FiniteGroup group;
  std::vector<Character> characters;
  bool complete = false;  // count == |G/[G,G]|
};

/// All characters with values in the field, flagged complete when the count
/// reaches |G/[G,G]| (the field then has the needed roots of unity).
CharacterGroup character_group(const FiniteGroup& g, const FieldSpec& f);

/// The diagonal automorphism chi(lambda g) = chi(g) lambda g of Lambda G.
Matrix chi_action(const SkewAlgebra& s, const Character& chi);

/// The full character-group action on Lambda G (identity-first ordering).
GroupAction character_action(const SkewAlgebra& s, const CharacterGroup& x);

/// Lemma-style explicit intertwiner theta: chi-twist of FT -> FT,
/// (lambda, g) tensor t |-> chi^{-1}(g) (lambda, g) tensor t; verified
/// invertible and equivariant. Requires T G-stable.
bool verify_induction_stability(const SkewAlgebra& s, const Representation& t,
                                const CharacterGroup& x);

/// One matched pair of the stability bijection report.
struct BijectionMatch {
  std::size_t lambda_vertex;  // index into the Lambda-side stable list
  std::size_t skew_vertex;    // index into the skew-side stable list
  bool tilting_preserved = true;
};

struct BijectionReport {
  bool ok = false;
  std::string detail;
  std::size_t stable_lambda = 0, stable_skew = 0;
  std::vector<BijectionMatch> matches;
  std::vector<std::size_t> lambda_stable_vertices;  // indices into lambda quiver
  std::vector<std::size_t> skew_stable_vertices;    // indices into skew quiver
};

/// Enumerates G-stable pairs over Lambda and X-stable pairs over the basic
/// reduction of Lambda G, maps each stable pair through induction +
/// Morita reduction, and matches. Requires abelian G and a complete
/// character group (throws compute_error otherwise, naming the obstruction).
struct BijectionContext {
  SkewAlgebra skew;
  BasicReduction reduction;
  ExchangeQuiver lambda_quiver;
  ExchangeQuiver skew_quiver;  // over the basic reduction
  CharacterGroup characters;
};

BijectionContext make_bijection_context(const GroupAction& act,
                                        std::size_t max_vertices = 10000);
BijectionReport verify_bijection(BijectionContext& ctx);

}  // namespace stt
