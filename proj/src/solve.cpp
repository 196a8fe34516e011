#include "plucker/error.hpp"
#include "plucker/groebner.hpp"

#include <algorithm>

namespace plucker {

namespace {

// Positive divisors of |n|, n != 0, by trial division.
std::vector<BigInt> divisors(BigInt n)
{
    n = abs(n);
    std::vector<std::pair<BigInt, unsigned>> factors;
    BigInt p = 2;
    unsigned long steps = 0;
    while (p * p <= n) {
        if (++steps > 20'000'000)
            throw Error(ErrorKind::InvalidArgument, "integer too large to factor for rational roots");
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1)
        factors.emplace_back(n, 1);
    std::vector<BigInt> out{BigInt(1)};
    for (const auto& [prime, e] : factors) {
        const std::size_t base = out.size();
        BigInt pw = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pw *= prime;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pw);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rat horner(const std::vector<Rat>& c, const Rat& x)
{
    Rat acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

// Divides by (x - r); r must be a root.
std::vector<Rat> deflate(const std::vector<Rat>& c, const Rat& r)
{
    const std::size_t d = c.size() - 1;
    std::vector<Rat> q(d);
    Rat carry;
    for (std::size_t i = d; i-- > 0;) {
        carry = c[i + 1] + carry * r;
        q[i] = carry;
    }
    return q;
}

void trim(std::vector<Rat>& c)
{
    while (!c.empty() && c.back().is_zero())
        c.pop_back();
}

} // namespace

UnivariateRoots rational_roots(std::vector<Rat> coeffs)
{
    trim(coeffs);
    if (coeffs.empty())
        throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
    UnivariateRoots out;
    while (coeffs.size() > 1 && coeffs.front().is_zero()) {
        out.roots.emplace_back(0);
        coeffs.erase(coeffs.begin());
    }
    if (coeffs.size() == 1)
        return out;

    BigInt den = 1;
    for (const auto& c : coeffs)
        den = lcm(den, c.den());
    std::vector<BigInt> ints;
    for (const auto& c : coeffs)
        ints.push_back(c.num() * (den / c.den()));

    const auto ps = divisors(ints.front());
    const auto qs = divisors(ints.back());
    std::vector<Rat> candidates;
    for (const auto& p : ps)
        for (const auto& q : qs) {
            candidates.emplace_back(p, q);
            candidates.emplace_back(-p, q);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& r : candidates) {
        while (coeffs.size() > 1 && horner(coeffs, r).is_zero()) {
            out.roots.push_back(r);
            coeffs = deflate(coeffs, r);
        }
    }
    out.leftover_degree = coeffs.size() - 1;
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

namespace {

// Fixes variable `var` to `value`, dropping it from the ring.
Ideal specialize(const Ideal& ideal, std::size_t var, const Rat& value, bool& inconsistent)
{
    const auto& ring = ideal.ring();
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (i != var)
            rest.push_back(ring->vars()[i]);
    inconsistent = false;
    if (rest.empty()) {
        std::vector<Rat> pt{value};
        for (const auto& g : ideal.gens())
            if (!evaluate(g, pt).is_zero())
                inconsistent = true;
        return Ideal(ring);
    }
    auto target = PolyRing::make(rest, ring->order());
    const Poly c = Poly::constant(ring, value);
    std::vector<Poly> gens;
    for (const auto& g : ideal.gens()) {
        Poly s = substitute(g, var, c).in(target);
        if (s.is_constant() && !s.is_zero())
            inconsistent = true;
        gens.push_back(std::move(s));
    }
    return Ideal(target, std::move(gens));
}

// Points of a zero-dimensional ideal in a Lex ring, all coordinates rational.
std::optional<std::vector<RationalPoint>> solve_lex(const Ideal& ideal)
{
    auto basis = groebner_basis(ideal);
    if (basis.is_unit())
        return std::vector<RationalPoint>{};
    const auto& ring = ideal.ring();
    const std::size_t n = ring->nvars();
    const std::size_t last = n - 1;

    const Poly* uni = nullptr;
    for (const auto& g : basis.basis()) {
        bool only_last = true;
        for (std::size_t v = 0; v < last && only_last; ++v)
            only_last = !g.involves(v);
        if (only_last && g.involves(last)) {
            uni = &g;
            break;
        }
    }
    if (uni == nullptr)
        throw Error(ErrorKind::NotZeroDimensional, "no univariate eliminant in the last variable");

    std::vector<Rat> coeffs(uni->degree_in(last) + 1);
    for (const auto& t : uni->terms())
        coeffs[t.mono[last]] += t.coeff;
    auto roots = rational_roots(coeffs);
    if (roots.leftover_degree > 0)
        return std::nullopt;
    roots.roots.erase(std::unique(roots.roots.begin(), roots.roots.end()), roots.roots.end());

    std::vector<RationalPoint> out;
    for (const auto& r : roots.roots) {
        bool inconsistent = false;
        Ideal sub = specialize(basis.ideal(), last, r, inconsistent);
        if (inconsistent)
            continue;
        if (n == 1) {
            out.push_back({r});
            continue;
        }
        auto rest = solve_lex(sub);
        if (!rest)
            return std::nullopt;
        for (auto& p : *rest) {
            p.push_back(r);
            out.push_back(std::move(p));
        }
    }
    return out;
}

} // namespace

std::optional<std::vector<RationalPoint>> rational_points_zero_dim(const Ideal& ideal)
{
    auto lex = ideal.ring()->with_order(MonomialOrder::lex());
    Ideal in_lex = ideal.in(lex);
    auto basis = groebner_basis(in_lex);
    if (basis.is_unit())
        return std::vector<RationalPoint>{};
    for (std::size_t v = 0; v < lex->nvars(); ++v) {
        bool found = false;
        for (const auto& g : basis.basis()) {
            const Mono& lm = g.leading_mono();
            if (lm[v] > 0 && lm.degree() == lm[v]) {
                found = true;
                break;
            }
        }
        if (!found)
            throw Error(ErrorKind::NotZeroDimensional,
                        "no pure power of '" + lex->vars()[v] + "' among leading monomials");
    }
    auto pts = solve_lex(basis.ideal());
    if (pts)
        std::sort(pts->begin(), pts->end());
    return pts;
}

} // namespace plucker
