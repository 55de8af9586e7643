#pragma once

#include <complex>

#include <json.hpp>

#include "isingbraid/matrix.hpp"

namespace ising {

using json = nlohmann::ordered_json;

/// Exact matrix wire format, bit-exact on round-trip:
///   {"dim": d, "entries": [[[n0,d0,n1,d1,n2,d2,n3,d3], ...], ...]}
/// with each entry the four coefficient rationals as numerator/denominator
/// pairs in basis order 1, zeta, zeta^2, zeta^3.  Integers that do not fit
/// in 64 bits are emitted as decimal strings.
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

/// Floating matrices as [[[re,im], ...], ...].
json complex_matrix_to_json(const ComplexMatrix& m);
ComplexMatrix complex_matrix_from_json(const json& j);

json cyclo_to_json(const Cyclo& x);
Cyclo cyclo_from_json(const json& j);

}  // namespace ising
