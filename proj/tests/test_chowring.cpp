#include "plucker/chowring.hpp"
#include "plucker/error.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace plucker;

namespace {

ChowElt h_z(const ChowRing& r, unsigned i, unsigned j, long c = 1) { return ChowElt::monomial(r, i, j, BigInt(c)); }

ChowElt random_elt(const ChowRing& r, testing::Gen& gen)
{
    ChowElt e(r);
    for (unsigned i = 0; i <= r.n(); ++i)
        for (unsigned j = 0; j <= r.n(); ++j)
            if (gen.integer(0, 2) == 0)
                e += h_z(r, i, j, gen.integer(-6, 6));
    return e;
}

} // namespace

TEST_CASE("ring presentation")
{
    const ChowRing r1 = ring_presentation(1);
    CHECK(r1.chern() == std::vector<BigInt>{1, -2});
    const ChowRing r2 = ring_presentation(2);
    CHECK(r2.chern() == std::vector<BigInt>{1, -3, 3});
    for (unsigned n = 1; n <= 10; ++n)
        CHECK(ring_presentation(n).chern()[0] == 1);
    CHECK_THROWS_AS(ring_presentation(0), Error);

    // The bundle relation reduces to zero.
    for (unsigned n = 1; n <= 6; ++n) {
        const ChowRing r(n);
        ChowElt rel = h_z(r, 0, n + 1);
        for (unsigned i = 1; i <= n; ++i)
            rel += h_z(r, i, n + 1 - i).scaled(r.chern()[i]);
        CHECK(rel == ChowElt(r));
    }
}

TEST_CASE("multiplication examples")
{
    for (unsigned n = 1; n <= 4; ++n) {
        const ChowRing r(n);
        CHECK(h_z(r, n, n) == h_z(r, n, n));
        CHECK(chow_mul(h_z(r, n, n), ChowElt::one(r), r) == h_z(r, n, n));
    }
    const ChowRing r1(1);
    CHECK(chow_mul(h_z(r1, 0, 1), h_z(r1, 0, 1), r1) == h_z(r1, 1, 1, 2));
    CHECK(h_z(r1, 0, 2) == h_z(r1, 1, 1, 2));
}

TEST_CASE("zero section class")
{
    const ChowRing r1(1);
    CHECK(zero_section_class(r1) == h_z(r1, 0, 1) - h_z(r1, 1, 0, 2));
    const ChowRing r2(2);
    CHECK(zero_section_class(r2) == h_z(r2, 0, 2) - h_z(r2, 1, 1, 3) + h_z(r2, 2, 0, 3));
    for (unsigned n = 1; n <= 8; ++n) {
        const ChowRing r(n);
        CHECK(zero_section_class(r).coeff(0, n) == 1);
    }
}

TEST_CASE("degree map")
{
    for (unsigned n = 1; n <= 5; ++n) {
        const ChowRing r(n);
        CHECK(degree_map(h_z(r, n, n), r) == 1);
        CHECK(degree_map(h_z(r, n + 1, 0), r) == 0);
        CHECK(degree_map(h_z(r, n + 1, 3), r) == 0);
        for (unsigned k = 0; k < n; ++k)
            CHECK(degree_map(h_z(r, n, k), r) == 0);
    }
    const ChowRing r1(1);
    const ChowElt p = zero_section_class(r1);
    CHECK(degree_map(chow_mul(p, p, r1), r1) == -2);
}

TEST_CASE("zero section self-intersection")
{
    CHECK(p_self_intersection(1) == -2);
    CHECK(p_self_intersection(2) == 3);
    CHECK(p_self_intersection(5) == -6);
    for (unsigned n = 1; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(p_self_intersection(n) == BigInt(sign_power(n) * static_cast<long>(n + 1)));
    }
}

TEST_CASE("the zero section meets a fibre once and z restricts to it trivially")
{
    for (unsigned n = 1; n <= 7; ++n) {
        const ChowRing r(n);
        const ChowElt p = zero_section_class(r);
        CHECK(degree_map(chow_mul(p, h_z(r, n, 0), r), r) == 1);
        CHECK(degree_map(chow_mul(p, h_z(r, 0, n), r), r) == 0);
        CHECK(degree_map(chow_mul(p, h_z(r, 0, 1), r), r) == 0);
    }
}

TEST_CASE("multiplication is associative, commutative and distributive")
{
    testing::Gen gen(501);
    for (unsigned n = 1; n <= 5; ++n) {
        const ChowRing r(n);
        for (int i = 0; i < 20; ++i) {
            const ChowElt a = random_elt(r, gen), b = random_elt(r, gen), c = random_elt(r, gen);
            CHECK(chow_mul(a, chow_mul(b, c, r), r) == chow_mul(chow_mul(a, b, r), c, r));
            CHECK(chow_mul(a, b, r) == chow_mul(b, a, r));
            CHECK(chow_mul(a, b + c, r) == chow_mul(a, b, r) + chow_mul(a, c, r));
            CHECK(chow_mul(a, ChowElt::one(r), r) == a);
        }
    }
}

TEST_CASE("expanded pairing examples")
{
    const ExtIdentity a = ext_identity(2, Rat(4), Rat(-2), Rat(-2));
    CHECK(a.equal);
    CHECK(a.expanded == Rat(24));
    const ExtIdentity b = ext_identity(1, Rat(0), Rat(1), Rat(1));
    CHECK(b.equal);
    CHECK(b.bracket == Rat(-2));
    for (unsigned n = 1; n <= 6; ++n) {
        const ExtIdentity c = ext_identity(n, Rat(7, 3), Rat(0), Rat(5));
        CHECK(c.equal);
        CHECK(c.expanded == Rat(sign_power(n) * static_cast<long>((n + 1) * (n + 1))) * Rat(7, 3));
    }
}

TEST_CASE("expanded pairing identity on random rationals")
{
    testing::Gen gen(502);
    for (unsigned n = 1; n <= 10; ++n)
        for (int i = 0; i < 100; ++i)
            CHECK(ext_identity_check(n, gen.rat(40), gen.rat(40), gen.rat(40)));
}
