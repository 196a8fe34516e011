#ifndef PLUCKER_PAIRING_HPP
#define PLUCKER_PAIRING_HPP

#include "plucker/charclasses.hpp"
#include "plucker/duality.hpp"

#include <string>

namespace plucker {

/// Declared shape of a transverse intersection S1 cap S2. Transversality
/// and genericity are the caller's assertion; counts are checked against
/// Bezout where the dimensions make that possible.
struct Intersection {
    enum class Kind { Empty, FinitePoints, SmoothOfDim };

    Kind kind = Kind::Empty;
    long count = 0;  // FinitePoints
    long dim = 0;    // SmoothOfDim
    long chibar = 0; // SmoothOfDim

    static Intersection empty() { return {}; }
    static Intersection points(long count) { return {Kind::FinitePoints, count, 0, 0}; }
    static Intersection smooth(long dim, long chibar) { return {Kind::SmoothOfDim, 0, dim, chibar}; }
};

/// C_S . P^n = (-1)^dim S * chi_bar(S).
long conormal_dot_zero(const ProjVariety& s);

/// C_S1 . C_S2 for a declared transverse intersection.
long conormal_dot(const ProjVariety& s1, const ProjVariety& s2, const Intersection& meta);

/// a + p1*p2 / ((-1)^(n+1) (n+1)).
Rat theorem1_side(const Rat& a, const Rat& p1, const Rat& p2, long n);

/// How a dual variety was obtained.
enum class DualSource {
    ClosedForm,  // linear spaces and points
    Elimination, // conormal elimination, census of the computed dual
    Analytic,    // elimination for the equation; census from class formulas
};

const char* to_string(DualSource source);

struct ResolvedDual {
    ProjVariety variety;
    DualSource source;
};

/// Dual of S inside the dual projective space (written in x-variables).
/// Plane-curve duals carry a census; when its singular points are not all
/// rational, the census falls back to the classical class formulas.
ResolvedDual resolve_dual(const ProjVariety& s);

struct PairingParts {
    long c12 = 0; // C1 . C2
    long c1p = 0; // C1 . P
    long c2p = 0; // C2 . P
    long d12 = 0; // C1v . C2v
    long d1p = 0; // C1v . P*
    long d2p = 0; // C2v . P*
};

struct PairingReport {
    Rat lhs;
    Rat rhs;
    PairingParts parts;
    bool equal = false;
    DualSource dual1 = DualSource::ClosedForm;
    DualSource dual2 = DualSource::ClosedForm;
};

/// Both sides of the general Pluecker identity: the left from the primal
/// pair, the right from their duals.
PairingReport theorem1_check(const ProjVariety& s1, const ProjVariety& s2, const Intersection& primal,
                             const Intersection& dual);

/// Same, with the duals supplied by the caller.
PairingReport theorem1_check(const ProjVariety& s1, const ProjVariety& s2, const ResolvedDual& d1,
                             const ResolvedDual& d2, const Intersection& primal, const Intersection& dual);

/// The identity with S2 a generic m-plane; intersections come from the
/// section profiles of S and of its dual.
PairingReport pairing_relation(const ProjVariety& s, std::size_t m);
PairingReport pairing_relation(const ProjVariety& s, const ResolvedDual& dual, std::size_t m);

/// deg S^v = (-1)^dim S (chi_bar(S) - 2 chi_bar(S^1) + chi_bar(S^2)).
long corollary1_deg_dual(const ProjVariety& s);

/// chi_bar(S^v) = (-1)^dim S (n chi_bar(S) - (n+1) chi_bar(S^1)).
long corollary2_chi_bar_dual(const ProjVariety& s);

/// Codimension of the dual read off the section profile.
long corollary3_dual_codim(const ProjVariety& s);

/// chi_bar(S) - chi_hat(S cap Q) (1 + (1+(-1)^n)/(2n)) on both sides.
PairingReport corollary4_check(const ProjVariety& s);
PairingReport corollary4_check(const ProjVariety& s, const ResolvedDual& dual);

} // namespace plucker

#endif
