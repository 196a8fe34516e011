#ifndef PLUCKER_GROEBNER_HPP
#define PLUCKER_GROEBNER_HPP

#include "plucker/poly.hpp"

#include <optional>
#include <span>
#include <vector>

namespace plucker {

/// Generator set over one ring; zero generators are dropped on construction.
class Ideal {
public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
    Ideal(RingPtr ring, std::vector<Poly> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    /// The same generators re-expressed in another ring (matched by name).
    Ideal in(const RingPtr& target) const;

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
};

/// Reduced Groebner basis: monic elements, sorted by increasing leading
/// monomial, no term of any element divisible by another leading monomial.
class ReducedBasis {
public:
    ReducedBasis(RingPtr ring, std::vector<Poly> basis)
        : ring_(std::move(ring)), basis_(std::move(basis))
    {
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }
    bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }
    bool is_zero() const { return basis_.empty(); }
    bool contains(const Poly& f) const;

    Ideal ideal() const { return Ideal(ring_, basis_); }

    friend bool operator==(const ReducedBasis& a, const ReducedBasis& b);

private:
    RingPtr ring_;
    std::vector<Poly> basis_;
};

Poly normal_form(const Poly& f, std::span<const Poly> divisors);
Poly normal_form(const Poly& f, const ReducedBasis& basis);

Poly s_polynomial(const Poly& f, const Poly& g);

/// Buchberger with the normal selection strategy and the Gebauer-Moeller
/// pair update (product and chain criteria). Uses the ideal's ring order.
ReducedBasis groebner_basis(const Ideal& ideal);

/// Post-hoc certificate: every S-polynomial of basis pairs reduces to zero.
bool certify_groebner(const ReducedBasis& basis);

/// I intersected with the subring of the trailing variables, computed under
/// ElimBlock(k). The result lives in a GrevLex ring over those variables.
Ideal eliminate(const Ideal& ideal, std::size_t k);

/// I : g^infinity via a tag variable t, eliminating t from I + <1 - t*g>.
Ideal saturate_by(const Ideal& ideal, const Poly& g);

/// I : J^infinity as the intersection of the single-generator saturations.
Ideal saturate(const Ideal& ideal, const Ideal& by);

/// Tag-variable intersection: eliminate t from t*I + (1-t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);

bool ideal_equal(const Ideal& a, const Ideal& b);

/// Hilbert series numerator and the derived projective dimension and degree.
struct HilbertData {
    std::vector<BigInt> numerator; // coefficients of t^0, t^1, ... after cancelling (1-t)
    long projdim = -1;
    BigInt degree = 0;
};

HilbertData hilbert_data(const Ideal& ideal);

using RationalPoint = std::vector<Rat>;

/// All points of a zero-dimensional affine ideal, when every one is rational.
/// Returns nullopt (NotAllRational) otherwise; throws NotZeroDimensional.
std::optional<std::vector<RationalPoint>> rational_points_zero_dim(const Ideal& ideal);

/// Rational roots of a univariate polynomial given by coefficients of
/// x^0..x^d, each listed once per multiplicity, plus the unresolved cofactor
/// degree (0 when the polynomial splits into rational linear factors).
struct UnivariateRoots {
    std::vector<Rat> roots;
    std::size_t leftover_degree = 0;
};

UnivariateRoots rational_roots(std::vector<Rat> coeffs);

/// Exact multivariate division; nullopt when b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Multivariate gcd over Q via lcm = generator of <a> cap <b>.
/// Normalised to a primitive integer polynomial.
Poly poly_gcd(const Poly& a, const Poly& b);

/// f / gcd(f, df/dx_0, ..., df/dx_n), primitive.
Poly squarefree_part(const Poly& f);

} // namespace plucker

#endif
