#pragma once

#include "stt/mutation.hpp"

namespace stt {

/// Finite group as a validated multiplication table.
struct FiniteGroup {
  std::size_t order = 1;
  std::vector<std::vector<std::size_t>> table;  // table[g][h] = g*h
  std::vector<std::string> labels;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  std::vector<std::size_t> generators;  // identity-free generating set

  std::size_t mul(std::size_t g, std::size_t h) const { return table.at(g).at(h); }
  std::size_t order_of(std::size_t g) const;
  bool is_abelian() const;
  /// Commutator subgroup [G,G] as a sorted element list.
  std::vector<std::size_t> commutator_subgroup() const;
};

/// Verifies group laws, fills identity/inverse, and checks that the declared
/// generators generate (defaults to all elements when empty).
FiniteGroup make_group(std::vector<std::vector<std::size_t>> table,
                       std::vector<std::string> labels,
                       std::vector<std::size_t> generators = {});

/// Action of a finite group on an algebra by automorphisms.
struct GroupAction {
  AlgebraPtr alg;
  FiniteGroup group;
  std::vector<Matrix> maps;  // one automorphism matrix per element

  const Matrix& of(std::size_t g) const { return maps.at(g); }
};

/// Validates automorphisms, identity and compatibility on all pairs.
GroupAction make_action(const AlgebraPtr& a, FiniteGroup g, std::vector<Matrix> maps);

/// Trivial group acting trivially (every module is stable).
GroupAction trivial_action(const AlgebraPtr& a);

/// Twisted module: the action of b becomes the action of sigma^{-1}(b).
/// `phi` is the automorphism matrix of sigma itself.
Representation twist_module(const Representation& m, const Matrix& phi);
Representation twist_module(const Representation& m, const GroupAction& act, std::size_t g);

TwoTermComplex twist_complex(const TwoTermComplex& c, const Matrix& phi);

/// Isomorphism in the homotopy category of two-term complexes: chain maps
/// both ways composing to the identity up to homotopy.
bool complex_isomorphic(const TwoTermComplex& a, const TwoTermComplex& b);

/// Seed for the generic-combination trial order inside iso searches.
/// Results never depend on it; it only fixes the reproducible trial
/// sequence recorded in reports. Single-writer, set before computing.
void set_trial_seed(std::uint64_t seed);
std::uint64_t trial_seed();

bool is_g_stable_module(const Representation& m, const GroupAction& act);
bool is_g_stable_pair(const AlgebraPtr& a, const SttPair& pair, const GroupAction& act);

/// Probe-resolution stability of Fac(T): for every generator and probe Z,
/// membership of Z and of its twist agree.
bool is_g_stable_torsion(const Representation& t, const GroupAction& act,
                         const std::vector<Representation>& probes);

bool is_g_stable_complex(const TwoTermComplex& c, const GroupAction& act);

/// Marks every vertex with is_g_stable_pair; returns indices of stable ones.
std::vector<std::size_t> stable_filter(ExchangeQuiver& q, const GroupAction& act);

}  // namespace stt
