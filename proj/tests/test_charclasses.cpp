#include "plucker/charclasses.hpp"
#include "plucker/error.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace plucker;
using testing::P;

namespace {

ProjVariety hyper(const std::string& f, std::size_t n) { return ProjVariety::hypersurface(P(f, primal_ring(n))); }

} // namespace

TEST_CASE("Euler characteristic of smooth hypersurfaces")
{
    CHECK(chi_smooth_hypersurface(2, 1) == 2);
    CHECK(chi_smooth_hypersurface(3, 2) == 4);
    CHECK(chi_smooth_hypersurface(2, 3) == 0);
    CHECK(chi_smooth_hypersurface(1, 5) == 5);
    // K3 quartic surface and the cubic surface.
    CHECK(chi_smooth_hypersurface(3, 4) == 24);
    CHECK(chi_smooth_hypersurface(3, 3) == 9);
    // Quintic threefold.
    CHECK(chi_smooth_hypersurface(4, 5) == -200);
    CHECK_THROWS_AS(chi_smooth_hypersurface(0, 2), Error);
    CHECK_THROWS_AS(chi_smooth_hypersurface(2, 0), Error);
}

TEST_CASE("complete intersections")
{
    const unsigned twisted[] = {2, 2};
    // Two quadrics in P^3 meet in an elliptic quartic curve.
    CHECK(chi_complete_intersection(3, twisted) == 0);
    const unsigned points[] = {2, 3};
    CHECK(chi_complete_intersection(2, points) == 6);
    const unsigned too_many[] = {1, 1, 1};
    CHECK(chi_complete_intersection(2, too_many) == 0);
    CHECK(chi_complete_intersection(4, std::span<const unsigned>{}) == 5);
}

TEST_CASE("quadric Euler characteristics")
{
    CHECK(chi_quadric(1) == 2);
    CHECK(chi_quadric(2) == 4);
    CHECK(chi_quadric(5) == 6);
    CHECK_THROWS_AS(chi_quadric(0), Error);
    for (unsigned m = 1; m <= 10; ++m) {
        CAPTURE(m);
        CHECK(chi_quadric(m) == chi_smooth_hypersurface(m + 1, 2));
        CHECK(chi_quadric(m) == static_cast<long>(m % 2 == 1 ? m + 1 : m + 2));
    }
}

TEST_CASE("plane curves follow the genus-degree formula")
{
    for (long d = 1; d <= 8; ++d) {
        CAPTURE(d);
        CHECK(chi_smooth_hypersurface(2, static_cast<unsigned>(d)) == 3 * d - d * d);
        CHECK(chi_smooth_hypersurface(2, static_cast<unsigned>(d)) == 2 - (d - 1) * (d - 2));
    }
}

TEST_CASE("chi_bar of varieties")
{
    CHECK(chi_bar_of(ProjVariety::linear(2, 1)) == 2);
    CHECK(chi_bar_of(ProjVariety::linear(5, 3)) == 4);
    CHECK(chi_bar_of(ProjVariety::point(1)) == 1);
    CHECK(chi_bar_of(hyper("x0*x2^2 - x1^3 - x0*x1^2", 2)) == 2);
    CHECK(chi_bar_of(hyper("27*x0^2*x2^2 + 4*x0*x1^3 + 108*x0*x1*x2^2 + 12*x1^4 + 72*x1^2*x2^2 + 108*x2^4", 2)) ==
          5);
    CHECK(chi_bar_of(hyper("x0*x3 - x1*x2", 3)) == 4);
    CHECK(chi_bar_of(hyper("x0^3 + x1^3 + x2^3 + x3^3", 3)) == 9);
    try {
        chi_bar_of(hyper("x0*x3 - x1^2", 3));
        FAIL("singular surface must be rejected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedVariety);
    }
}

TEST_CASE("chi_bar uses an attached census")
{
    const ProjVariety s = hyper("x0*x2^2 - x1^3 - x0*x1^2", 2);
    const ProjVariety tagged = s.with_census(CurveCensus::from_counts(3, 0, 1));
    CHECK(chi_bar_of(tagged) == 3);
    CHECK(chi_bar_of(s) == 2);
}

TEST_CASE("section profile examples")
{
    CHECK(section_profile(hyper("x0*x2^2 - x1^3 - x0*x1^2", 2)).values == std::vector<long>{2, 3, 0});
    CHECK(section_profile(ProjVariety::linear(2, 1)).values == std::vector<long>{2, 1, 0});
    CHECK(section_profile(hyper("x0*x3 - x1*x2", 3)).values == std::vector<long>{4, 2, 2, 0});
    CHECK(section_profile(ProjVariety::point(3)).values == std::vector<long>{1, 0});
}

TEST_CASE("section profiles end in 0 and read the degree at the dimension")
{
    std::vector<ProjVariety> vs = {
        hyper("x0*x2 - x1^2", 2),
        hyper("x0*x2^2 - x1^3", 2),
        hyper("x0^3 + x1^3 + x2^3", 2),
        hyper("x0^4 + x1^4 + x2^4", 2),
        hyper("x0*x3 - x1*x2", 3),
        hyper("x0^3 + x1^3 + x2^3 + x3^3", 3),
        hyper("x0^2 + x1^2 + x2^2 + x3^2 + x4^2", 4),
        ProjVariety::linear(4, 2),
        ProjVariety::linear(3, 1),
        ProjVariety::point(2),
    };
    for (const auto& s : vs) {
        const SectionProfile p = section_profile(s);
        REQUIRE(p.values.size() == s.dim() + 2);
        CHECK(p.values.back() == 0);
        CHECK(p.values[0] == chi_bar_of(s));
        if (s.dim() >= 1)
            CHECK(p.values[s.dim()] == static_cast<long>(s.degree()));
    }
}

TEST_CASE("chi_bar minus chi counts singular points on curves")
{
    for (const char* f : {"x0*x2 - x1^2", "x0*x2^2 - x1^3 - x0*x1^2", "x0*x2^2 - x1^3", "x0*x2^2 - x1^3 + 3*x0*x1^2"}) {
        const CurveCensus c = singular_census(hyper(f, 2));
        CHECK(c.chibar - c.chi == c.delta + c.kappa);
    }
}
