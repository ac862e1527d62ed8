#pragma once

#include "stt/tau.hpp"

namespace stt {

/// Left add(U)-approximation of X assembled from coset representatives of
/// Hom(X,U) modulo rad(End U).Hom(X,U); left minimal by construction.
struct Approximation {
  ModuleMap map;                       // X -> U', U' the sum of chosen summands
  std::vector<std::size_t> chosen;     // index into the U list per chosen copy
};
Approximation minimal_left_approximation(const Representation& x,
                                         const std::vector<Representation>& u);

/// Complex of projectives concentrated in degrees -1, 0.
struct TwoTermComplex {
  Representation p1, p0;  // degree -1 and degree 0 terms
  ModuleMap d;            // p1 -> p0
};

/// (T, P) |-> (P1 (+) P -> P0) along the minimal presentation of the T-part.
TwoTermComplex pair_to_silting(const AlgebraPtr& a, const SttPair& pair);

Representation h0(const TwoTermComplex& c);

/// dim Hom_{K^b}(c, c[1]): chain maps P1 -> P0 modulo homotopies h.d + d.h'.
std::size_t hom_k_shift(const TwoTermComplex& c);

/// One left mutation step at T-part index x; nullopt when the exchange
/// would go upward (X already lies in Fac of the rest).
std::optional<SttPair> left_mutation(const AlgebraPtr& a, const SttPair& pair,
                                     std::size_t x, IsoRegistry& reg);

struct ExchangeVertex {
  SttPair pair;
  std::vector<std::size_t> t_ids;  // sorted registry ids of the T-parts
  // summands whose left mutation was skipped (they already lie in Fac of the
  // rest; the exchange there points upward)
  std::vector<std::size_t> skipped_ids;
  bool sincere = false;
  bool faithful = false;
  bool tilting = false;
  bool stable = true;  // refined by the group layer; trivial group: all stable
  std::string classification;
};

struct ExchangeArrow {
  std::size_t from = 0, to = 0;
  std::size_t summand_id = 0;  // registry id of the mutated summand
};

struct ExchangeQuiver {
  AlgebraPtr alg;
  std::shared_ptr<IsoRegistry> registry;
  std::vector<ExchangeVertex> vertices;
  std::vector<ExchangeArrow> arrows;
  std::size_t source_index = 0, sink_index = 0;

  std::size_t in_degree(std::size_t v) const;
  std::size_t out_degree(std::size_t v) const;
};

/// BFS closure of left mutation from (Lambda, 0); throws compute_error with a
/// "possibly tau-tilting infinite" diagnostic when max_vertices is exceeded.
ExchangeQuiver enumerate_exchange_quiver(const AlgebraPtr& a,
                                         std::size_t max_vertices = 10000);

}  // namespace stt
