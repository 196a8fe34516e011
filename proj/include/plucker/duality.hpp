#ifndef PLUCKER_DUALITY_HPP
#define PLUCKER_DUALITY_HPP

#include "plucker/groebner.hpp"
#include "plucker/poly.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace plucker {

/// Singularity census of a plane curve with only nodes and cusps.
struct CurveCensus {
    unsigned degree = 0;
    std::vector<RationalPoint> nodes;
    std::vector<RationalPoint> cusps;
    long delta = 0;
    long kappa = 0;
    long geomgenus = 0;
    long chi = 0;
    long chibar = 0;

    /// Fills delta, kappa, genus, chi and chibar from degree and point lists.
    static CurveCensus from_points(unsigned degree, std::vector<RationalPoint> nodes,
                                   std::vector<RationalPoint> cusps);
    /// Census from counts only (for curves whose singular points are not
    /// all rational, known by closed form).
    static CurveCensus from_counts(unsigned degree, long delta, long kappa);
};

/// A subvariety of P^n: a hypersurface V(f), a linear subspace, or a point.
class ProjVariety {
public:
    enum class Kind { Hypersurface, Linear, Point };

    static ProjVariety hypersurface(Poly f);
    static ProjVariety linear(std::size_t ambient_dim, std::size_t dim);
    static ProjVariety point(std::size_t ambient_dim);

    Kind kind() const { return kind_; }
    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const;
    unsigned degree() const;
    bool is_plane_curve() const { return kind_ == Kind::Hypersurface && n_ == 2; }

    /// Defining polynomial; hypersurfaces only.
    const Poly& equation() const;

    const std::optional<CurveCensus>& census() const { return census_; }
    ProjVariety with_census(CurveCensus c) const;

private:
    ProjVariety(Kind kind, std::size_t n, std::size_t dim) : kind_(kind), n_(n), linear_dim_(dim) {}

    Kind kind_;
    std::size_t n_;
    std::size_t linear_dim_;
    std::optional<Poly> equation_;
    std::optional<CurveCensus> census_;
};

/// Rings x0..xn, y0..yn, and the conormal ring x0..xn,y0..yn.
RingPtr primal_ring(std::size_t n);
RingPtr dual_ring(std::size_t n);
RingPtr conormal_ring(std::size_t n);

/// <f> + 2x2 minors of [y ; grad f], saturated by the Jacobian ideal.
Ideal conormal_ideal(const ProjVariety& s);

/// Dual variety that is not a hypersurface, described by its ideal.
struct LowerDimensional {
    Ideal ideal;
    HilbertData hilbert;
};

using DualResult = std::variant<Poly, LowerDimensional>;

/// Dual of a hypersurface by eliminating x from the conormal ideal. A
/// principal eliminant yields its squarefree generator (primitive, in y).
DualResult dual_hypersurface(const ProjVariety& s);

using RatMatrix = std::vector<std::vector<Rat>>;

/// Symmetric matrix A with f = x^T A x. f must be a quadratic form.
RatMatrix quadric_matrix(const Poly& f);

/// The quadric y^T A^{-1} y, primitive, in the dual ring.
Poly quadric_dual(const RatMatrix& a);

RatMatrix invert(const RatMatrix& a);

/// Singular points of a plane curve, each classified as node or cusp.
CurveCensus singular_census(const ProjVariety& s);

/// True iff the dual of the dual is proportional to the original equation.
bool bidual_check(const ProjVariety& s);

/// Smoothness of a hypersurface: the partials have no common projective zero.
bool is_smooth(const ProjVariety& s);

} // namespace plucker

#endif
