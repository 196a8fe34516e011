#include "plucker/pairing.hpp"

#include "plucker/error.hpp"

namespace plucker {

long conormal_dot_zero(const ProjVariety& s)
{
    return sign_power(static_cast<long>(s.dim())) * chi_bar_of(s);
}

long conormal_dot(const ProjVariety& s1, const ProjVariety& s2, const Intersection& meta)
{
    if (s1.ambient_dim() != s2.ambient_dim())
        throw Error(ErrorKind::UnsupportedConfiguration, "varieties in different ambient spaces");
    const long n = static_cast<long>(s1.ambient_dim());
    const long expected_dim = static_cast<long>(s1.dim() + s2.dim()) - n;
    switch (meta.kind) {
    case Intersection::Kind::Empty:
        if (expected_dim >= 0)
            throw Error(ErrorKind::UnsupportedConfiguration,
                        "intersection of complementary or larger dimension cannot be empty");
        return 0;
    case Intersection::Kind::FinitePoints: {
        if (expected_dim != 0)
            throw Error(ErrorKind::UnsupportedConfiguration, "finite intersection needs complementary dimensions");
        const long bezout = static_cast<long>(s1.degree()) * static_cast<long>(s2.degree());
        if (meta.count != bezout)
            throw Error(ErrorKind::UnsupportedConfiguration,
                        "declared " + std::to_string(meta.count) + " transverse points, Bezout gives " +
                            std::to_string(bezout));
        return meta.count;
    }
    case Intersection::Kind::SmoothOfDim:
        if (meta.dim != expected_dim || meta.dim < 0)
            throw Error(ErrorKind::UnsupportedConfiguration,
                        "declared intersection dimension " + std::to_string(meta.dim) + ", expected " +
                            std::to_string(expected_dim));
        return sign_power(meta.dim) * meta.chibar;
    }
    return 0;
}

Rat theorem1_side(const Rat& a, const Rat& p1, const Rat& p2, long n)
{
    const Rat denom(sign_power(n + 1) * (n + 1));
    return a + p1 * p2 / denom;
}

const char* to_string(DualSource source)
{
    switch (source) {
    case DualSource::ClosedForm: return "closed-form";
    case DualSource::Elimination: return "elimination";
    case DualSource::Analytic: return "analytic";
    }
    return "?";
}

ResolvedDual resolve_dual(const ProjVariety& s)
{
    const std::size_t n = s.ambient_dim();
    if (s.kind() != ProjVariety::Kind::Hypersurface)
        return {ProjVariety::linear(n, n - 1 - s.dim()), DualSource::ClosedForm};
    if (s.degree() == 1)
        return {ProjVariety::point(n), DualSource::ClosedForm};

    auto computed = dual_hypersurface(s);
    const auto* g = std::get_if<Poly>(&computed);
    if (g == nullptr)
        throw Error(ErrorKind::UnsupportedVariety, "dual is not a hypersurface; only its Hilbert data is known");
    ProjVariety dual = ProjVariety::hypersurface(*g);
    if (!s.is_plane_curve())
        return {dual, DualSource::Elimination};

    try {
        return {dual.with_census(singular_census(dual)), DualSource::Elimination};
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::IrrationalSingularity)
            throw;
    }
    // Flexes of S become cusps of the dual; the genus is shared.
    const CurveCensus c = s.census() ? *s.census() : singular_census(s);
    const long d = c.degree;
    const long dual_degree = d * (d - 1) - 2 * c.delta - 3 * c.kappa;
    if (dual_degree != static_cast<long>(dual.degree()))
        throw Error(ErrorKind::UnsupportedVariety, "eliminated dual degree disagrees with the class formula");
    const long flexes = 3 * d * (d - 2) - 6 * c.delta - 8 * c.kappa;
    const long dual_delta = (dual_degree - 1) * (dual_degree - 2) / 2 - c.geomgenus - flexes;
    return {dual.with_census(CurveCensus::from_counts(static_cast<unsigned>(dual_degree), dual_delta, flexes)),
            DualSource::Analytic};
}

PairingReport theorem1_check(const ProjVariety& s1, const ProjVariety& s2, const ResolvedDual& d1,
                             const ResolvedDual& d2, const Intersection& primal, const Intersection& dual)
{
    if (s1.ambient_dim() != s2.ambient_dim())
        throw Error(ErrorKind::UnsupportedConfiguration, "varieties in different ambient spaces");
    const long n = static_cast<long>(s1.ambient_dim());
    PairingReport r;
    r.parts.c12 = conormal_dot(s1, s2, primal);
    r.parts.c1p = conormal_dot_zero(s1);
    r.parts.c2p = conormal_dot_zero(s2);
    r.parts.d12 = conormal_dot(d1.variety, d2.variety, dual);
    r.parts.d1p = conormal_dot_zero(d1.variety);
    r.parts.d2p = conormal_dot_zero(d2.variety);
    r.lhs = theorem1_side(Rat(r.parts.c12), Rat(r.parts.c1p), Rat(r.parts.c2p), n);
    r.rhs = theorem1_side(Rat(r.parts.d12), Rat(r.parts.d1p), Rat(r.parts.d2p), n);
    r.equal = r.lhs == r.rhs;
    r.dual1 = d1.source;
    r.dual2 = d2.source;
    return r;
}

PairingReport theorem1_check(const ProjVariety& s1, const ProjVariety& s2, const Intersection& primal,
                             const Intersection& dual)
{
    return theorem1_check(s1, s2, resolve_dual(s1), resolve_dual(s2), primal, dual);
}

namespace {

long profile_at(const SectionProfile& p, long k)
{
    if (k < 0 || k >= static_cast<long>(p.values.size()))
        return 0;
    return p.values[static_cast<std::size_t>(k)];
}

// Declared intersection of S with a generic linear space of dimension m.
Intersection generic_linear_meta(const ProjVariety& s, const SectionProfile& profile, std::size_t m)
{
    const long n = static_cast<long>(s.ambient_dim());
    const long dim = static_cast<long>(s.dim()) + static_cast<long>(m) - n;
    if (dim < 0)
        return Intersection::empty();
    const long value = profile_at(profile, n - static_cast<long>(m));
    if (dim == 0)
        return Intersection::points(value);
    return Intersection::smooth(dim, value);
}

} // namespace

PairingReport pairing_relation(const ProjVariety& s, const ResolvedDual& dual, std::size_t m)
{
    const std::size_t n = s.ambient_dim();
    if (m >= n)
        throw Error(ErrorKind::UnsupportedConfiguration, "linear subspace must be proper");
    const ProjVariety plane = ProjVariety::linear(n, m);
    const ResolvedDual plane_dual{ProjVariety::linear(n, n - 1 - m), DualSource::ClosedForm};
    const Intersection primal = generic_linear_meta(s, section_profile(s), m);
    const Intersection dual_meta =
        generic_linear_meta(dual.variety, section_profile(dual.variety), n - 1 - m);
    return theorem1_check(s, plane, dual, plane_dual, primal, dual_meta);
}

PairingReport pairing_relation(const ProjVariety& s, std::size_t m)
{
    return pairing_relation(s, resolve_dual(s), m);
}

long corollary1_deg_dual(const ProjVariety& s)
{
    const auto p = section_profile(s);
    const long sign = sign_power(static_cast<long>(s.dim()));
    return sign * (profile_at(p, 0) - 2 * profile_at(p, 1) + profile_at(p, 2));
}

long corollary2_chi_bar_dual(const ProjVariety& s)
{
    const auto p = section_profile(s);
    const long n = static_cast<long>(s.ambient_dim());
    const long sign = sign_power(static_cast<long>(s.dim()));
    return sign * (n * profile_at(p, 0) - (n + 1) * profile_at(p, 1));
}

long corollary3_dual_codim(const ProjVariety& s)
{
    const auto p = section_profile(s);
    const long last = static_cast<long>(p.values.size()) - 1;
    long c = 0;
    for (long k = 1;; ++k) {
        if (k > last)
            return c;
        if (profile_at(p, k) != k * profile_at(p, 1) + (1 - k) * profile_at(p, 0))
            return c;
        c = k;
    }
}

namespace {

// chi_hat(S cap Q) = (-1)^(n-2) C_S . C_Q for a general quadric Q.
long chi_hat_with_quadric(const ProjVariety& s, long& dot)
{
    const long n = static_cast<long>(s.ambient_dim());
    const ProjVariety q = ProjVariety::hypersurface(
        [&] {
            auto ring = primal_ring(s.ambient_dim());
            Poly f(ring);
            for (std::size_t i = 0; i < ring->nvars(); ++i)
                f += pow(Poly::variable(ring, i), 2);
            return f;
        }());
    Intersection meta;
    if (n == 2) {
        meta = Intersection::points(2 * static_cast<long>(s.degree()));
    } else {
        if (!is_smooth(s))
            throw Error(ErrorKind::UnsupportedVariety, "S cap Q for a singular hypersurface in P^" + std::to_string(n));
        const unsigned degs[] = {s.degree(), 2};
        meta = Intersection::smooth(n - 2, chi_complete_intersection(static_cast<unsigned>(n), degs));
    }
    dot = conormal_dot(s, q, meta);
    return sign_power(n - 2) * dot;
}

} // namespace

PairingReport corollary4_check(const ProjVariety& s, const ResolvedDual& dual)
{
    if (s.kind() != ProjVariety::Kind::Hypersurface || dual.variety.kind() != ProjVariety::Kind::Hypersurface)
        throw Error(ErrorKind::UnsupportedVariety, "both S and its dual must be hypersurfaces");
    const long n = static_cast<long>(s.ambient_dim());
    const Rat factor = Rat(1) + Rat(1 + sign_power(n), 2 * n);

    PairingReport r;
    const long chat = chi_hat_with_quadric(s, r.parts.c12);
    const long chat_dual = chi_hat_with_quadric(dual.variety, r.parts.d12);
    r.parts.c1p = conormal_dot_zero(s);
    r.parts.d1p = conormal_dot_zero(dual.variety);
    r.lhs = Rat(chi_bar_of(s)) - Rat(chat) * factor;
    r.rhs = Rat(chi_bar_of(dual.variety)) - Rat(chat_dual) * factor;
    r.equal = r.lhs == r.rhs;
    r.dual1 = dual.source;
    return r;
}

PairingReport corollary4_check(const ProjVariety& s) { return corollary4_check(s, resolve_dual(s)); }

} // namespace plucker
