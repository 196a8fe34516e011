#ifndef PLUCKER_CHARCLASSES_HPP
#define PLUCKER_CHARCLASSES_HPP

#include "plucker/duality.hpp"

#include <span>
#include <vector>

namespace plucker {

/// Euler characteristic of a smooth degree-d hypersurface in P^n, read off
/// the truncated Chern series (1+h)^(n+1) / (1+dh).
long chi_smooth_hypersurface(unsigned n, unsigned d);

/// Smooth complete intersection of the given degrees in P^n.
long chi_complete_intersection(unsigned n, std::span<const unsigned> degrees);

/// Smooth quadric of dimension m: m+1 for odd m, m+2 for even m.
long chi_quadric(unsigned m);

/// Euler-obstruction weighted Euler characteristic. Supports linear spaces,
/// points, smooth hypersurfaces and plane curves with nodes and cusps.
long chi_bar_of(const ProjVariety& s);

/// values[k] = chi_bar of the generic codimension-k linear section,
/// k = 0 .. dim S + 1 (the last section is empty).
struct SectionProfile {
    ProjVariety base;
    std::vector<long> values;
};

SectionProfile section_profile(const ProjVariety& s);

} // namespace plucker

#endif
