// Shared generators and independent oracles for the unit tests.
#ifndef PLUCKER_TESTS_SUPPORT_HPP
#define PLUCKER_TESTS_SUPPORT_HPP

#include "plucker/parse.hpp"
#include "plucker/poly.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace plucker;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rat rat(long bound = 9)
    {
        const long num = integer(-bound, bound);
        const long den = integer(1, bound);
        return Rat(num, den);
    }

    Rat nonzero_rat(long bound = 9)
    {
        for (;;) {
            const Rat r = rat(bound);
            if (!r.is_zero())
                return r;
        }
    }

    Mono mono(std::size_t nvars, unsigned max_deg)
    {
        Mono m(nvars);
        unsigned left = static_cast<unsigned>(integer(0, max_deg));
        for (std::size_t i = 0; i < nvars && left > 0; ++i) {
            const unsigned e = static_cast<unsigned>(integer(0, left));
            m.set(i, e);
            left -= e;
        }
        return m;
    }

    Poly poly(const RingPtr& ring, std::size_t max_terms, unsigned max_deg)
    {
        std::vector<Term> terms;
        const std::size_t count = static_cast<std::size_t>(integer(0, static_cast<long>(max_terms)));
        for (std::size_t t = 0; t < count; ++t)
            terms.push_back({mono(ring->nvars(), max_deg), rat()});
        return Poly(ring, std::move(terms));
    }

    /// Random homogeneous polynomial of degree d, nonzero.
    Poly homogeneous(const RingPtr& ring, unsigned d, std::size_t terms)
    {
        for (;;) {
            Poly f(ring);
            for (std::size_t t = 0; t < terms; ++t) {
                Mono m(ring->nvars());
                unsigned left = d;
                for (std::size_t i = 0; i + 1 < ring->nvars(); ++i) {
                    const unsigned e = static_cast<unsigned>(integer(0, left));
                    m.set(i, e);
                    left -= e;
                }
                m.set(ring->nvars() - 1, left);
                f += Poly::monomial(ring, m, rat());
            }
            if (!f.is_zero())
                return f;
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline RingPtr ring_of(std::initializer_list<const char*> names,
                       MonomialOrder order = MonomialOrder::grevlex())
{
    return PolyRing::make(std::vector<std::string>(names.begin(), names.end()), order);
}

inline Poly P(const std::string& text, const RingPtr& ring) { return parse_polynomial(text, ring); }

/// Determinant over Q by Gaussian elimination.
inline Rat determinant(std::vector<std::vector<Rat>> m)
{
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c].is_zero())
            ++pivot;
        if (pivot == n)
            return Rat(0);
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rat f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Sylvester resultant of univariate coefficient lists (x^0 .. x^d).
inline Rat sylvester_resultant(const std::vector<Rat>& f, const std::vector<Rat>& g)
{
    const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
    std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i)
            s[r][r + i] = f[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i)
            s[n + r][r + i] = g[n - i];
    return determinant(s);
}

/// Coefficients in variable `var` after fixing every other variable of a
/// bivariate polynomial to `value`.
inline std::vector<Rat> univariate_in(const Poly& f, std::size_t var, std::size_t other, const Rat& value)
{
    std::vector<Rat> c(f.degree_in(var) + 1);
    for (const auto& t : f.terms())
        c[t.mono[var]] += t.coeff * value.pow(t.mono[other]);
    return c;
}

/// Lagrange interpolation through (xs[i], ys[i]) as a polynomial in
/// variable `var` of `ring`.
inline Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys, const RingPtr& ring,
                        std::size_t var)
{
    const Poly x = Poly::variable(ring, var);
    Poly out(ring);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis = Poly::constant(ring, Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i)
                continue;
            basis *= x - Poly::constant(ring, xs[j]);
            denom *= xs[i] - xs[j];
        }
        out += basis.scaled(ys[i] / denom);
    }
    return out;
}

/// Res_t(f, g) for polynomials in two variables (t, x), as a polynomial in x,
/// by evaluation at enough points and interpolation.
inline Poly resultant_by_interpolation(const Poly& f, const Poly& g, std::size_t t, std::size_t x,
                                       const RingPtr& out_ring, std::size_t out_var)
{
    const std::size_t bound = f.degree_in(t) * g.degree_in(x) + g.degree_in(t) * f.degree_in(x) + 1;
    std::vector<Rat> xs, ys;
    for (std::size_t i = 0; i < bound; ++i) {
        const Rat a(static_cast<long>(i) - static_cast<long>(bound / 2));
        xs.push_back(a);
        ys.push_back(sylvester_resultant(univariate_in(f, t, x, a), univariate_in(g, t, x, a)));
    }
    return interpolate(xs, ys, out_ring, out_var);
}

} // namespace testing

#endif
