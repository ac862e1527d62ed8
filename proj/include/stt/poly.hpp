#pragma once

#include <vector>

#include "stt/field.hpp"

namespace stt {

/// Monic-or-not polynomial as coefficient list, constant term first.
using Poly = std::vector<Scalar>;

Scalar poly_eval(const Poly& p, const Scalar& x);

/// Distinct roots of p lying in its field. Complete when p splits into
/// linear factors over the field: rational-root search over Q (after
/// clearing denominators), residue scan over F_p (p < 2^20). Callers that
/// require completeness must check deg == multiplicity-counted root count
/// themselves; this returns whatever it can find.
std::vector<Scalar> poly_roots_in_field(const Poly& p);

}  // namespace stt
