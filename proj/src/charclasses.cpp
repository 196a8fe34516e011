#include "plucker/charclasses.hpp"

#include "plucker/error.hpp"

namespace plucker {

namespace {

// Coefficients of (1+h)^(n+1) * prod (1 + d h)^(-1) up to h^len-1.
std::vector<Rat> chern_series(unsigned n, std::span<const unsigned> degrees, std::size_t len)
{
    std::vector<Rat> s(len);
    for (std::size_t i = 0; i < len && i <= n + 1; ++i)
        s[i] = Rat(binomial(n + 1, i));
    for (unsigned d : degrees) {
        // Multiply by 1/(1 + d h) = sum (-d)^k h^k.
        std::vector<Rat> out(len);
        for (std::size_t i = 0; i < len; ++i) {
            Rat acc;
            Rat pw(1);
            for (std::size_t k = 0; k <= i; ++k) {
                acc += s[i - k] * pw;
                pw *= Rat(-static_cast<long>(d));
            }
            out[i] = acc;
        }
        s = std::move(out);
    }
    return s;
}

} // namespace

long chi_complete_intersection(unsigned n, std::span<const unsigned> degrees)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "ambient dimension must be >= 1");
    if (degrees.size() > n)
        return 0;
    for (unsigned d : degrees)
        if (d < 1)
            throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
    const std::size_t dim = n - degrees.size();
    const auto s = chern_series(n, degrees, dim + 1);
    Rat prod(1);
    for (unsigned d : degrees)
        prod *= Rat(static_cast<long>(d));
    const Rat chi = prod * s[dim];
    return chi.num().get_si();
}

long chi_smooth_hypersurface(unsigned n, unsigned d)
{
    const unsigned degs[] = {d};
    return chi_complete_intersection(n, degs);
}

long chi_quadric(unsigned m)
{
    if (m < 1)
        throw Error(ErrorKind::InvalidArgument, "quadric dimension must be >= 1");
    return (m % 2 == 1) ? m + 1 : m + 2;
}

long chi_bar_of(const ProjVariety& s)
{
    switch (s.kind()) {
    case ProjVariety::Kind::Point:
        return 1;
    case ProjVariety::Kind::Linear:
        return static_cast<long>(s.dim()) + 1;
    case ProjVariety::Kind::Hypersurface:
        break;
    }
    if (s.is_plane_curve()) {
        if (s.census())
            return s.census()->chibar;
        return singular_census(s).chibar;
    }
    if (is_smooth(s))
        return chi_smooth_hypersurface(static_cast<unsigned>(s.ambient_dim()), s.degree());
    throw Error(ErrorKind::UnsupportedVariety,
                "chi_bar of a singular hypersurface in P^" + std::to_string(s.ambient_dim()));
}

SectionProfile section_profile(const ProjVariety& s)
{
    const std::size_t dim = s.dim();
    std::vector<long> values(dim + 2, 0);
    values[0] = chi_bar_of(s);
    for (std::size_t k = 1; k <= dim; ++k) {
        if (s.kind() == ProjVariety::Kind::Hypersurface)
            values[k] = chi_smooth_hypersurface(static_cast<unsigned>(s.ambient_dim() - k), s.degree());
        else
            values[k] = static_cast<long>(dim + 1 - k);
    }
    return SectionProfile{s, std::move(values)};
}

} // namespace plucker
