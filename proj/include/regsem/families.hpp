#ifndef REGSEM_FAMILIES_HPP_
#define REGSEM_FAMILIES_HPP_

#include <string>
#include <vector>

#include "regsem/config.hpp"
#include "regsem/semigroup.hpp"

namespace regsem {

// Standard families. Each generator documents its canonical element
// ordering; labels carry a human-readable form of each element. None of
// the generators adjoins an identity that is not already present (the full
// transformation and matrix families happen to be monoids, the zero
// families are not).

/// All self-maps of {0,...,n-1}. Element k is the map i -> digits of k
/// base n (image tuple), ordered lexicographically; composition is
/// "apply left, then right", so constants form a right-zero subsemigroup.
FiniteSemigroup full_transformation(int n, const Caps& caps = default_caps());

/// All partial injective maps on {0,...,n-1}. An element is an image
/// tuple with n standing for "undefined"; tuples are ordered
/// lexicographically (so the empty map is last). Same composition order
/// as full_transformation.
FiniteSemigroup symmetric_inverse(int n, const Caps& caps = default_caps());

/// The Brandt semigroup of n x n matrix units: elements (i,j) at index
/// i*n + j, the zero last. (i,j)(k,l) = (i,l) if j == k, else 0.
FiniteSemigroup brandt(int n, const Caps& caps = default_caps());

/// The p x q rectangular band: elements (i,j) at index i*q + j with
/// (i,j)(k,l) = (i,l).
FiniteSemigroup rectangular_band(int p, int q,
                                 const Caps& caps = default_caps());

/// The k-element chain 0 < 1 < ... < k-1 as a semilattice under min.
FiniteSemigroup chain_semilattice(int k, const Caps& caps = default_caps());

/// All dim x dim matrices over the field with q elements (q in {2, 3})
/// under matrix multiplication. A matrix is encoded by its entries read
/// row-major as a base-q number, and elements are ordered by that code.
FiniteSemigroup matrix_monoid(int dim, int field_order,
                              const Caps& caps = default_caps());

/// xy = x for all x, y.
FiniteSemigroup left_zero(int n, const Caps& caps = default_caps());

/// xy = y for all x, y.
FiniteSemigroup right_zero(int n, const Caps& caps = default_caps());

/// The null semigroup on n elements: every product is the zero element,
/// which sits at index 0.
FiniteSemigroup null_plus_zero(int n, const Caps& caps = default_caps());

/// Dispatch by family name as used by the CLI: full_transformation,
/// symmetric_inverse, brandt, rectangular_band, chain_semilattice,
/// matrix_monoid, left_zero, right_zero, null_plus_zero.
FiniteSemigroup generate_family(const std::string& kind,
                                const std::vector<int>& params,
                                const Caps& caps = default_caps());

}  // namespace regsem

#endif  // REGSEM_FAMILIES_HPP_
