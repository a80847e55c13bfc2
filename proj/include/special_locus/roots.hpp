#pragma once

#include <vector>

#include "special_locus/numerics.hpp"
#include "special_locus/polynomials.hpp"

namespace special_locus {

// A closed disk |z - center| <= radius known to contain exactly one root.
struct RootDisk {
  IntervalComplex center;  // point box
  Mpfr radius;

  IntervalComplex box() const { return center.inflate(radius); }
  // Enclosure of |root|.
  IntervalReal modulus() const;
};

// Isolating disks for every complex root of a squarefree integer polynomial.
//
// Roots are approximated by Aberth iteration and then certified with the
// Weierstrass-correction inclusion theorem: the disks |z - z_i| <= n |W_i|,
// W_i = p(z_i) / (lc * prod_{j != i} (z_i - z_j)), cover all roots, and a
// connected component of k disks holds exactly k roots. Pairwise disjoint
// disks therefore isolate one root each. Precision doubles from `precision`
// until the disks separate; PrecisionExhausted past `cap`.
std::vector<RootDisk> isolate_roots(const UniPoly& squarefree, Precision precision,
                                    Precision cap = kDefaultPrecisionCap);

// Certified lower bound on min_{i != j} |root_i - root_j| of a squarefree
// polynomial, from its isolating disks.
IntervalReal min_root_distance(const std::vector<RootDisk>& roots);

}  // namespace special_locus
