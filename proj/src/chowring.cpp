#include "plucker/chowring.hpp"

#include "plucker/error.hpp"

namespace plucker {

ChowRing::ChowRing(unsigned n) : n_(n)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "ambient dimension must be >= 1");
    chern_.resize(n + 1);
    for (unsigned i = 0; i <= n; ++i)
        chern_[i] = BigInt(sign_power(i)) * binomial(n + 1, i);
}

ChowRing ring_presentation(unsigned n) { return ChowRing(n); }

ChowElt::ChowElt(const ChowRing& ring)
    : n_(ring.n()), coeffs_(ring.n() + 1, std::vector<BigInt>(ring.n() + 1, BigInt(0)))
{
}

ChowElt ChowElt::one(const ChowRing& ring) { return monomial(ring, 0, 0); }

ChowElt ChowElt::monomial(const ChowRing& ring, unsigned i, unsigned j, const BigInt& c)
{
    ChowElt e(ring);
    if (i > ring.n())
        return e;
    ChowElt hz(ring);
    hz.coeffs_[i][0] = c;
    if (j <= ring.n()) {
        e.coeffs_[i][j] = c;
        return e;
    }
    // Raise through repeated multiplication by z.
    ChowElt z(ring);
    z.coeffs_[0][1] = 1;
    e = hz;
    for (unsigned k = 0; k < j; ++k)
        e = chow_mul(e, z, ring);
    return e;
}

ChowElt& ChowElt::operator+=(const ChowElt& o)
{
    if (n_ != o.n_)
        throw Error(ErrorKind::InvalidArgument, "Chow ring elements of different rings");
    for (unsigned i = 0; i <= n_; ++i)
        for (unsigned j = 0; j <= n_; ++j)
            coeffs_[i][j] += o.coeffs_[i][j];
    return *this;
}

ChowElt& ChowElt::operator-=(const ChowElt& o)
{
    if (n_ != o.n_)
        throw Error(ErrorKind::InvalidArgument, "Chow ring elements of different rings");
    for (unsigned i = 0; i <= n_; ++i)
        for (unsigned j = 0; j <= n_; ++j)
            coeffs_[i][j] -= o.coeffs_[i][j];
    return *this;
}

ChowElt ChowElt::scaled(const BigInt& c) const
{
    ChowElt r = *this;
    for (auto& row : r.coeffs_)
        for (auto& v : row)
            v *= c;
    return r;
}

ChowElt chow_mul(const ChowElt& a, const ChowElt& b, const ChowRing& ring)
{
    const unsigned n = ring.n();
    if (a.n_ != n || b.n_ != n)
        throw Error(ErrorKind::InvalidArgument, "Chow ring elements of different rings");
    std::vector<std::vector<BigInt>> wide(n + 1, std::vector<BigInt>(2 * n + 1, BigInt(0)));
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j <= n; ++j) {
            if (a.coeffs_[i][j] == 0)
                continue;
            for (unsigned k = 0; i + k <= n; ++k)
                for (unsigned l = 0; l <= n; ++l)
                    if (b.coeffs_[k][l] != 0)
                        wide[i + k][j + l] += a.coeffs_[i][j] * b.coeffs_[k][l];
        }
    // z^e = -sum_{t>=1} c_t h^t z^(e-t) for e >= n+1.
    const auto& c = ring.chern();
    for (unsigned e = 2 * n; e > n; --e)
        for (unsigned i = 0; i <= n; ++i) {
            const BigInt v = wide[i][e];
            if (v == 0)
                continue;
            wide[i][e] = 0;
            for (unsigned t = 1; t <= n && i + t <= n; ++t)
                wide[i + t][e - t] -= v * c[t];
        }
    ChowElt r(ring);
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j <= n; ++j)
            r.coeffs_[i][j] = wide[i][j];
    return r;
}

ChowElt zero_section_class(const ChowRing& ring)
{
    const unsigned n = ring.n();
    ChowElt p(ring);
    for (unsigned i = 0; i <= n; ++i)
        p += ChowElt::monomial(ring, i, n - i, ring.chern()[i]);
    return p;
}

BigInt degree_map(const ChowElt& a, const ChowRing& ring)
{
    if (a.n() != ring.n())
        throw Error(ErrorKind::InvalidArgument, "Chow ring elements of different rings");
    return a.coeff(ring.n(), ring.n());
}

BigInt p_self_intersection(unsigned n)
{
    const ChowRing ring(n);
    const ChowElt p = zero_section_class(ring);
    return degree_map(chow_mul(p, p, ring), ring);
}

ExtIdentity ext_identity(unsigned n, const Rat& a, const Rat& p1, const Rat& p2)
{
    const long np1 = static_cast<long>(n) + 1;
    const Rat pp(p_self_intersection(n));
    const Rat s(sign_power(np1) * np1);
    const Rat x1 = p1 / s;
    const Rat x2 = p2 / s;
    const Rat scale(sign_power(static_cast<long>(n)) * np1 * np1);

    ExtIdentity r;
    r.expanded = scale * (a + x2 * p1 + x1 * p2 + x1 * x2 * pp);
    r.bracket = scale * (a + Rat(sign_power(np1)) * p1 * p2 / Rat(np1));
    r.equal = r.expanded == r.bracket;
    return r;
}

bool ext_identity_check(unsigned n, const Rat& a, const Rat& p1, const Rat& p2)
{
    return ext_identity(n, a, p1, p2).equal;
}

} // namespace plucker
