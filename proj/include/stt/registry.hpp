#pragma once

#include <map>

#include "stt/rep.hpp"

namespace stt {

/// Canonical ids for isomorphism classes of indecomposables over one algebra.
/// Ids are assigned in discovery order; lookups bucket by DimVector first.
/// Single-writer: not safe for concurrent mutation.
class IsoRegistry {
 public:
  explicit IsoRegistry(AlgebraPtr alg) : alg_(std::move(alg)) {}

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t size() const { return entries_.size(); }
  const Representation& rep_of(std::size_t id) const { return entries_.at(id).rep; }
  const DimVector& dimvec_of(std::size_t id) const { return entries_.at(id).dv; }

  /// Id of an indecomposable module's class (registers it if new).
  std::size_t indec_id(const Representation& r);

  /// Decompose and return the sorted multiset of class ids.
  std::vector<std::size_t> decompose_ids(const Representation& r);

 private:
  struct Entry {
    Representation rep;
    DimVector dv;
  };
  AlgebraPtr alg_;
  std::vector<Entry> entries_;
  std::map<DimVector, std::vector<std::size_t>> buckets_;
};

/// Decisive test for indecomposable inputs (some Hom basis element must be
/// invertible when they are isomorphic).
bool indec_isomorphic(const Representation& M, const Representation& N);

}  // namespace stt
