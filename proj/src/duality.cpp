#include "plucker/duality.hpp"

#include "plucker/error.hpp"

#include <algorithm>

namespace plucker {

// ---------------------------------------------------------------- census

CurveCensus CurveCensus::from_points(unsigned degree, std::vector<RationalPoint> nodes,
                                     std::vector<RationalPoint> cusps)
{
    CurveCensus c = from_counts(degree, static_cast<long>(nodes.size()), static_cast<long>(cusps.size()));
    c.nodes = std::move(nodes);
    c.cusps = std::move(cusps);
    return c;
}

CurveCensus CurveCensus::from_counts(unsigned degree, long delta, long kappa)
{
    CurveCensus c;
    c.degree = degree;
    c.delta = delta;
    c.kappa = kappa;
    const long d = degree;
    c.geomgenus = (d - 1) * (d - 2) / 2 - delta - kappa;
    if (c.geomgenus < 0)
        throw Error(ErrorKind::Reducible,
                    "negative geometric genus: degree " + std::to_string(d) + " with " +
                        std::to_string(delta) + " nodes and " + std::to_string(kappa) + " cusps");
    c.chi = 2 - 2 * c.geomgenus - delta;
    c.chibar = c.chi + delta + kappa;
    return c;
}

// ---------------------------------------------------------------- ProjVariety

ProjVariety ProjVariety::hypersurface(Poly f)
{
    if (f.is_zero())
        throw Error(ErrorKind::ZeroPolynomial, "hypersurface with zero equation");
    const auto deg = homogeneity_degree(f);
    if (!deg)
        throw Error(ErrorKind::NotHomogeneous, f.str());
    if (*deg == 0)
        throw Error(ErrorKind::NotHypersurface, "constant equation");
    const std::size_t nvars = f.ring()->nvars();
    if (nvars < 2)
        throw Error(ErrorKind::NotHypersurface, "ambient space must have dimension >= 1");
    ProjVariety v(Kind::Hypersurface, nvars - 1, nvars - 2);
    v.equation_ = f.relabel(primal_ring(nvars - 1));
    return v;
}

ProjVariety ProjVariety::linear(std::size_t ambient_dim, std::size_t dim)
{
    if (ambient_dim < 1 || dim > ambient_dim)
        throw Error(ErrorKind::InvalidArgument, "linear subspace dimension out of range");
    return ProjVariety(dim == 0 ? Kind::Point : Kind::Linear, ambient_dim, dim);
}

ProjVariety ProjVariety::point(std::size_t ambient_dim) { return linear(ambient_dim, 0); }

std::size_t ProjVariety::dim() const { return linear_dim_; }

unsigned ProjVariety::degree() const
{
    if (kind_ == Kind::Hypersurface)
        return equation_->total_degree();
    return 1;
}

const Poly& ProjVariety::equation() const
{
    if (!equation_)
        throw Error(ErrorKind::NotHypersurface, "variety has no defining polynomial");
    return *equation_;
}

ProjVariety ProjVariety::with_census(CurveCensus c) const
{
    ProjVariety v = *this;
    v.census_ = std::move(c);
    return v;
}

// ---------------------------------------------------------------- rings

RingPtr primal_ring(std::size_t n) { return PolyRing::make(PolyRing::numbered("x", n + 1)); }
RingPtr dual_ring(std::size_t n) { return PolyRing::make(PolyRing::numbered("y", n + 1)); }

RingPtr conormal_ring(std::size_t n)
{
    auto vars = PolyRing::numbered("x", n + 1);
    auto ys = PolyRing::numbered("y", n + 1);
    vars.insert(vars.end(), ys.begin(), ys.end());
    return PolyRing::make(vars);
}

// ---------------------------------------------------------------- conormal / dual

namespace {

const Poly& require_hypersurface(const ProjVariety& s)
{
    if (s.kind() != ProjVariety::Kind::Hypersurface)
        throw Error(ErrorKind::NotHypersurface, "operation needs a hypersurface");
    return s.equation();
}

} // namespace

Ideal conormal_ideal(const ProjVariety& s)
{
    const Poly& f = require_hypersurface(s);
    const std::size_t n = s.ambient_dim();
    auto ring = conormal_ring(n);
    const Poly F = f.in(ring);
    std::vector<Poly> grad;
    for (std::size_t i = 0; i <= n; ++i)
        grad.push_back(partial_derivative(F, i));

    std::vector<Poly> gens{F};
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            Poly yi = Poly::variable(ring, n + 1 + i);
            Poly yj = Poly::variable(ring, n + 1 + j);
            gens.push_back(yi * grad[j] - yj * grad[i]);
        }
    Ideal incidence(ring, std::move(gens));
    Ideal jacobian(ring, grad);
    return saturate(incidence, jacobian);
}

DualResult dual_hypersurface(const ProjVariety& s)
{
    require_hypersurface(s);
    const std::size_t n = s.ambient_dim();
    Ideal elim = eliminate(conormal_ideal(s), n + 1).in(dual_ring(n));
    if (elim.is_zero())
        throw Error(ErrorKind::InvalidArgument, "dual variety fills the dual space");
    auto basis = groebner_basis(elim);
    if (basis.size() == 1) {
        const Poly& g = basis.basis().front();
        if (g.is_constant())
            throw Error(ErrorKind::InvalidArgument, "empty dual variety");
        return squarefree_part(g);
    }
    HilbertData hd = hilbert_data(basis.ideal());
    if (hd.projdim == static_cast<long>(n) - 1)
        throw Error(ErrorKind::Reducible, "dual has a hypersurface part and lower-dimensional components");
    if (hd.projdim == 0 && hd.degree > 1)
        throw Error(ErrorKind::Reducible, "dual is " + hd.degree.get_str() + " points");
    return LowerDimensional{basis.ideal(), std::move(hd)};
}

RatMatrix quadric_matrix(const Poly& f)
{
    const auto deg = f.is_zero() ? std::nullopt : homogeneity_degree(f);
    if (!deg || *deg != 2)
        throw Error(ErrorKind::InvalidArgument, "not a quadratic form: " + f.str());
    const std::size_t m = f.ring()->nvars();
    RatMatrix a(m, std::vector<Rat>(m));
    for (const auto& t : f.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < m; ++i)
            for (unsigned e = 0; e < t.mono[i]; ++e)
                idx.push_back(i);
        if (idx[0] == idx[1]) {
            a[idx[0]][idx[0]] += t.coeff;
        } else {
            a[idx[0]][idx[1]] += t.coeff / Rat(2);
            a[idx[1]][idx[0]] += t.coeff / Rat(2);
        }
    }
    return a;
}

RatMatrix invert(const RatMatrix& a)
{
    const std::size_t m = a.size();
    RatMatrix w = a;
    RatMatrix inv(m, std::vector<Rat>(m));
    for (std::size_t i = 0; i < m; ++i) {
        if (w[i].size() != m)
            throw Error(ErrorKind::InvalidArgument, "matrix is not square");
        inv[i][i] = Rat(1);
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && w[piv][col].is_zero())
            ++piv;
        if (piv == m)
            throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
        std::swap(w[piv], w[col]);
        std::swap(inv[piv], inv[col]);
        const Rat p = w[col][col].inverse();
        for (std::size_t j = 0; j < m; ++j) {
            w[col][j] *= p;
            inv[col][j] *= p;
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || w[r][col].is_zero())
                continue;
            const Rat factor = w[r][col];
            for (std::size_t j = 0; j < m; ++j) {
                w[r][j] -= factor * w[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

Poly quadric_dual(const RatMatrix& a)
{
    if (a.size() < 2)
        throw Error(ErrorKind::InvalidArgument, "quadric matrix must be at least 2x2");
    const RatMatrix inv = invert(a);
    auto ring = dual_ring(a.size() - 1);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < inv.size(); ++i)
        for (std::size_t j = 0; j < inv.size(); ++j) {
            Mono m(inv.size());
            m.set(i, m[i] + 1);
            m.set(j, m[j] + 1);
            terms.push_back({m, inv[i][j]});
        }
    return Poly(ring, std::move(terms)).primitive();
}

// ---------------------------------------------------------------- census

namespace {

RationalPoint normalize_projective(RationalPoint p)
{
    auto it = std::find_if(p.begin(), p.end(), [](const Rat& r) { return !r.is_zero(); });
    const Rat s = it->inverse();
    for (auto& c : p)
        c *= s;
    return p;
}

enum class PointType { Node, Cusp };

// Local classification at a singular point p of the plane curve V(f).
PointType classify(const Poly& f, const RationalPoint& p)
{
    const std::size_t chart = static_cast<std::size_t>(
        std::find_if(p.begin(), p.end(), [](const Rat& r) { return !r.is_zero(); }) - p.begin());
    const Poly g = dehomogenize(f, chart);
    RationalPoint a;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (i != chart)
            a.push_back(p[i] / p[chart]);

    Rat h[2][2];
    Rat c[2][2][2];
    for (std::size_t i = 0; i < 2; ++i) {
        const Poly gi = partial_derivative(g, i);
        for (std::size_t j = 0; j < 2; ++j) {
            const Poly gij = partial_derivative(gi, j);
            h[i][j] = evaluate(gij, a);
            for (std::size_t k = 0; k < 2; ++k)
                c[i][j][k] = evaluate(partial_derivative(gij, k), a);
        }
    }
    const Rat det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
    if (!det.is_zero())
        return PointType::Node;
    if (h[0][0].is_zero() && h[0][1].is_zero() && h[1][1].is_zero())
        throw Error(ErrorKind::UnsupportedSingularity, "point of multiplicity >= 3");
    // Kernel line of the rank-1 quadratic part.
    Rat w[2];
    if (!h[0][0].is_zero() || !h[0][1].is_zero()) {
        w[0] = h[0][1];
        w[1] = -h[0][0];
    } else {
        w[0] = Rat(1);
        w[1] = Rat(0);
    }
    Rat cubic;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                cubic += c[i][j][k] * w[i] * w[j] * w[k];
    if (cubic.is_zero())
        throw Error(ErrorKind::UnsupportedSingularity, "degenerate double point (not A1 or A2)");
    return PointType::Cusp;
}

} // namespace

CurveCensus singular_census(const ProjVariety& s)
{
    if (!s.is_plane_curve())
        throw Error(ErrorKind::NotPlaneCurve, "census needs a curve in P^2");
    const Poly& f = s.equation();
    std::vector<Poly> system{f};
    for (std::size_t i = 0; i < 3; ++i)
        system.push_back(partial_derivative(f, i));

    std::vector<RationalPoint> points;
    for (std::size_t chart = 0; chart < 3; ++chart) {
        std::vector<Poly> affine;
        for (const auto& g : system)
            affine.push_back(dehomogenize(g, chart));
        Ideal local(affine.front().ring(), affine);
        std::optional<std::vector<RationalPoint>> pts;
        try {
            pts = rational_points_zero_dim(local);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::NotZeroDimensional)
                throw Error(ErrorKind::UnsupportedSingularity, "non-isolated singular locus (non-reduced curve)");
            throw;
        }
        if (!pts)
            throw Error(ErrorKind::IrrationalSingularity,
                        "singular points of " + f.str() + " are not all rational");
        for (const auto& ap : *pts) {
            RationalPoint proj;
            for (std::size_t i = 0, j = 0; i < 3; ++i)
                proj.push_back(i == chart ? Rat(1) : ap[j++]);
            points.push_back(normalize_projective(std::move(proj)));
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::vector<RationalPoint> nodes;
    std::vector<RationalPoint> cusps;
    for (const auto& p : points) {
        if (classify(f, p) == PointType::Node)
            nodes.push_back(p);
        else
            cusps.push_back(p);
    }
    return CurveCensus::from_points(f.total_degree(), std::move(nodes), std::move(cusps));
}

bool bidual_check(const ProjVariety& s)
{
    const Poly& f = require_hypersurface(s);
    const std::size_t n = s.ambient_dim();
    auto first = dual_hypersurface(s);
    const auto* dual = std::get_if<Poly>(&first);
    if (dual == nullptr)
        throw Error(ErrorKind::LowerDimensional, "dual is not a hypersurface");
    auto second = dual_hypersurface(ProjVariety::hypersurface(dual->relabel(primal_ring(n))));
    const auto* bidual = std::get_if<Poly>(&second);
    if (bidual == nullptr)
        return false;
    return proportional(bidual->relabel(primal_ring(n)), f);
}

bool is_smooth(const ProjVariety& s)
{
    if (s.kind() != ProjVariety::Kind::Hypersurface)
        return true;
    const Poly& f = s.equation();
    std::vector<Poly> grad;
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
        grad.push_back(partial_derivative(f, i));
    return hilbert_data(Ideal(f.ring(), grad)).projdim < 0;
}

} // namespace plucker
