#pragma once

#include "doubler/element.hpp"
#include "doubler/rational.hpp"

namespace doubler {

/// Conjugation (a, b) -> (conj(a), -b), the identity on k. Unfolded, it
/// negates every coordinate except the first. Both doublings share it.
Element conjugate(const Element& x);

/// Product in the tower, evaluated recursively. Each level applies its own
/// rule:
///
///   Cayley-Dickson  (a,b)(c,d) = (ac + D d conj(b), conj(a) d + c b)
///   Conway-Smith    (a,b)(c,d) = (ac + D conj(b conj(d)),
///                                 conj(conj(b) conj(c))
///                                 + conj(conj(b) conj(conj(a) conj(conj(b^-1) conj(d)))))
///                   for b != 0, and (ac, conj(a) d) for b == 0.
///
/// b^-1 is conj(b) / n(b) in the lower algebra. Throws TowerMismatch, or
/// NotInvertible if a Conway-Smith level meets a nonzero b of norm zero.
Element mul(const Element& x, const Element& y);

inline Element operator*(const Element& x, const Element& y) { return mul(x, y); }

/// t(x) = x + conj(x), returned as a scalar. Throws NonScalarTrace if the sum
/// has a nonzero imaginary part.
Rational trace(const Element& x);

/// Diagonal form sum_i C^{e(i)} x_i^2.
Rational norm_form(const Element& x);

/// conj(x) x computed by multiplication. Throws NonScalarNorm if the product
/// is not a scalar.
Rational norm_via_mul(const Element& x);

/// conj(x) / n(x). Throws NotInvertible when the norm form vanishes.
Element inverse(const Element& x);

/// t(x) == 0, i.e. the first coordinate is zero.
bool is_imaginary(const Element& x);

}  // namespace doubler
