#pragma once

#include <vector>

#include "mfus/field.hpp"

namespace mfus {

// Polynomial over a number field, lowest degree first, no trailing zeros.
using FPoly = std::vector<Elem>;

void poly_trim(FPoly& a);
FPoly poly_gcd(FPoly a, FPoly b);
FPoly poly_derivative(const FPoly& a);
Elem poly_eval(const FPoly& a, const Elem& x);

// Distinct roots of g that lie in g's coefficient field, sorted by their
// canonical forms. Roots are located p-adically and reconstructed by lattice
// reduction; every returned root is verified by exact evaluation, and the
// search is exhaustive whenever g splits completely over the field.
std::vector<Elem> roots_in_field(const FPoly& g);

} // namespace mfus
