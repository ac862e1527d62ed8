#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stt/matrix.hpp"
#include "stt/poly.hpp"

namespace stt {

/// Element of an algebra as a coefficient vector over its basis.
using Vec = std::vector<Scalar>;

/// Path in a quiver; arrows listed in application order (index 0 acts first).
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;
  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path&) const = default;
};

struct QuiverPresentation {
  struct Arrow {
    std::string name;
    std::size_t from = 0, to = 0;
  };
  /// One summand of a relation: coef * (arrow sequence in application order).
  struct RelTerm {
    Scalar coef;
    std::vector<std::size_t> arrows;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<RelTerm>> relations;
  std::size_t nilpotency_bound = 20;

  std::size_t vertex_index(const std::string& name) const;
  std::size_t arrow_index(const std::string& name) const;
};

/// Side data kept when an algebra was built from a bound quiver.
struct QuiverData {
  QuiverPresentation pres;
  std::vector<Path> basis_paths;  // aligned with the algebra basis
};

/// Finite-dimensional associative unital algebra as multiplication tables.
/// Immutable once published (shared_ptr<const Algebra> everywhere).
struct Algebra {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  /// left_mult[i] = matrix of left multiplication by basis element i,
  /// i.e. column j holds the coefficients of b_i * b_j.
  std::vector<Matrix> left_mult;
  Vec unit;
  /// Complete set of primitive orthogonal idempotents (may be empty until
  /// lifted); order fixes the simple/projective indexing.
  std::vector<Vec> idempotents;
  std::vector<std::string> idempotent_labels;
  /// Basis-index set generating the algebra together with the unit;
  /// hom computations may restrict intertwiner equations to these.
  std::vector<Vec> generators;
  bool split_basic_validated = false;
  std::shared_ptr<const QuiverData> quiver;  // provenance, when applicable

  Vec zero_vec() const { return Vec(dim, Scalar::zero(field)); }
  /// Left-multiplication matrix of an arbitrary element.
  Matrix lmul(const Vec& x) const;
  /// Right-multiplication matrix of an arbitrary element.
  Matrix rmul(const Vec& x) const;
  Vec mul(const Vec& x, const Vec& y) const;
  bool is_idempotent(const Vec& x) const;
  std::string label_of(const Vec& x) const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Checks associativity, unit laws, idempotent laws (when present), and that
/// the declared generators plus the unit span under products. Throws on failure.
void validate_algebra(const Algebra& a);

/// Builds an algebra from explicit left multiplication tables.
AlgebraPtr algebra_from_tables(const FieldSpec& f,
                               std::vector<std::string> labels,
                               std::vector<Matrix> left_mult, Vec unit,
                               std::vector<Vec> idempotents,
                               std::vector<std::string> idem_labels,
                               std::vector<Vec> generators = {});

/// Path algebra of the quiver modulo the two-sided ideal generated by the
/// relations. Relations must be length-homogeneous; the quotient must be
/// finite-dimensional within the nilpotency bound, else this throws.
/// Basis order: trivial paths in vertex order, then (length, lex).
AlgebraPtr from_bound_quiver(const QuiverPresentation& q, const FieldSpec& field);

/// Basis (as columns) of the Jacobson radical. Trace-form kernel over Q,
/// iterated trace forms with p-th power lifts over F_p.
Matrix radical(const Algebra& a);

/// Basis of the center (columns).
Matrix center_basis(const Algebra& a);

/// Monic minimal polynomial of x inside the unital subalgebra it generates
/// with `one` as identity (pass a.unit for the whole algebra).
Poly minimal_polynomial(const Algebra& a, const Vec& x, const Vec& one);

AlgebraPtr opposite(const Algebra& a);

/// Quotient algebra A/I for a two-sided ideal spanned by `ideal` columns.
struct QuotientAlgebra {
  AlgebraPtr alg;
  Matrix proj;     // A-coords -> quotient coords
  Matrix section;  // quotient coords -> A-coords (a linear section)
};
QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const Matrix& ideal);

/// Corner algebra eAe with the given idempotents (expressed in A-coords).
struct CornerAlgebra {
  AlgebraPtr alg;
  Matrix embed;  // corner coords -> A coords (columns = corner basis)
  Vec e;         // the corner idempotent in A
};
CornerAlgebra corner_algebra(const AlgebraPtr& a, const Vec& e,
                             const std::vector<Vec>& corner_idempotents,
                             const std::vector<std::string>& idem_labels);

/// Linear automorphism given on the path basis by a vertex permutation and
/// arrow images; validated multiplicative, unital, invertible.
Matrix automorphism_from_quiver_map(
    const Algebra& a, const std::vector<std::size_t>& vertex_map,
    const std::vector<std::vector<std::pair<Scalar, std::size_t>>>& arrow_images);

/// Validates that phi (a linear map on basis coordinates) is an algebra
/// automorphism; throws naming the broken law otherwise.
void validate_automorphism(const Algebra& a, const Matrix& phi);

}  // namespace stt
