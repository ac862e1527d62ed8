#include <algorithm>

#include "stt/idempotents.hpp"
#include "stt/registry.hpp"

namespace stt {

bool indec_isomorphic(const Representation& M, const Representation& N) {
  if (M.dim != N.dim) return false;
  if (M.dim == 0) return true;
  for (const auto& h : hom_space(M, N))
    if (invert(h)) return true;
  return false;
}

std::vector<Representation> decompose(const Representation& M) {
  if (M.dim == 0) return {};
  EndAlgebra E = end_algebra(M);
  std::vector<Representation> pieces;
  if (E.alg->dim == 1) {
    pieces.push_back(M);
  } else {
    std::vector<Vec> idems = lift_primitive_idempotents(E.alg);
    if (idems.size() == 1) {
      pieces.push_back(M);
    } else {
      std::size_t total = 0;
      for (const auto& c : idems) {
        Matrix eps(M.alg->field, M.dim, M.dim);
        for (std::size_t i = 0; i < c.size(); ++i)
          if (!c[i].is_zero()) eps = eps + E.basis[i] * c[i];
        Matrix im = column_space_basis(eps);
        pieces.push_back(sub_rep(M, im));
        total += im.cols();
      }
      if (total != M.dim)
        throw internal_error("decomposition pieces do not fill the module");
    }
  }
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const Representation& a, const Representation& b) {
                     return a.dim_vector() < b.dim_vector();
                   });
  return pieces;
}

bool is_isomorphic(const Representation& M, const Representation& N) {
  if (M.alg != N.alg) throw internal_error("iso test across algebras");
  if (M.dim != N.dim) return false;
  if (M.dim == 0) return true;
  if (!M.alg->idempotents.empty() && M.dim_vector() != N.dim_vector()) return false;

  auto homs = hom_space(M, N);
  if (homs.empty()) return false;
  for (const auto& h : homs)
    if (invert(h)) return true;
  // a couple of cheap deterministic combinations before decomposing
  {
    Matrix sum(M.alg->field, N.dim, M.dim);
    for (const auto& h : homs) sum = sum + h;
    if (invert(sum)) return true;
    for (std::size_t i = 0; i + 1 < homs.size(); ++i)
      if (invert(homs[i] + homs[i + 1])) return true;
  }

  std::vector<Representation> mp = decompose(M), np = decompose(N);
  if (mp.size() != np.size()) return false;
  std::vector<bool> used(np.size(), false);
  for (const auto& p : mp) {
    bool matched = false;
    for (std::size_t j = 0; j < np.size() && !matched; ++j) {
      if (used[j]) continue;
      if (indec_isomorphic(p, np[j])) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::size_t IsoRegistry::indec_id(const Representation& r) {
  if (r.alg != alg_) throw internal_error("registry used across algebras");
  DimVector dv = r.dim_vector();
  auto it = buckets_.find(dv);
  if (it != buckets_.end())
    for (auto id : it->second)
      if (indec_isomorphic(entries_[id].rep, r)) return id;
  entries_.push_back(Entry{r, dv});
  buckets_[dv].push_back(entries_.size() - 1);
  return entries_.size() - 1;
}

std::vector<std::size_t> IsoRegistry::decompose_ids(const Representation& r) {
  std::vector<std::size_t> ids;
  for (const auto& p : decompose(r)) ids.push_back(indec_id(p));
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace stt
