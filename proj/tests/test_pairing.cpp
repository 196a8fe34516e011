#include "plucker/error.hpp"
#include "plucker/pairing.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace plucker;
using testing::P;

namespace {

ProjVariety hyper(const std::string& f, std::size_t n) { return ProjVariety::hypersurface(P(f, primal_ring(n))); }

const char* const kConic = "x0*x2 - x1^2";
const char* const kConic2 = "x0^2 + x1^2 - x2^2";
const char* const kNodal = "x0*x2^2 - x1^3 - x0*x1^2";
const char* const kNodalRational = "x0*x2^2 - x1^3 + 3*x0*x1^2";
const char* const kCuspidal = "x0*x2^2 - x1^3";
const char* const kSmoothCubic = "x0^3 + x1^3 + x2^3";
const char* const kQuadricSurface = "x0*x3 - x1*x2";

ProjVariety line2() { return ProjVariety::linear(2, 1); }

ErrorKind kind_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Io;
}

} // namespace

TEST_CASE("conormal dot with the zero section")
{
    CHECK(conormal_dot_zero(ProjVariety::point(1)) == 1);
    CHECK(conormal_dot_zero(line2()) == -2);
    CHECK(conormal_dot_zero(hyper(kNodal, 2)) == -2);
    CHECK(conormal_dot_zero(hyper(kQuadricSurface, 3)) == 4);
}

TEST_CASE("conormal dot of transverse pairs")
{
    CHECK(conormal_dot(line2(), line2(), Intersection::points(1)) == 1);
    CHECK(conormal_dot(hyper(kNodal, 2), line2(), Intersection::points(3)) == 3);
    CHECK(conormal_dot(ProjVariety::point(2), hyper("x0^4 + x1^4 + x2^4", 2), Intersection::empty()) == 0);
    // Quadric surface and a plane meet in a conic: (-1)^1 * 2.
    CHECK(conormal_dot(hyper(kQuadricSurface, 3), ProjVariety::linear(3, 2), Intersection::smooth(1, 2)) == -2);
}

TEST_CASE("declared intersections are validated")
{
    CHECK(kind_of([] { conormal_dot(hyper(kNodal, 2), line2(), Intersection::points(2)); }) ==
          ErrorKind::UnsupportedConfiguration);
    CHECK(kind_of([] { conormal_dot(line2(), line2(), Intersection::empty()); }) ==
          ErrorKind::UnsupportedConfiguration);
    CHECK(kind_of([] { conormal_dot(ProjVariety::point(2), line2(), Intersection::points(1)); }) ==
          ErrorKind::UnsupportedConfiguration);
    CHECK(kind_of([] {
              conormal_dot(hyper(kQuadricSurface, 3), ProjVariety::linear(3, 2), Intersection::smooth(2, 2));
          }) == ErrorKind::UnsupportedConfiguration);
    CHECK(kind_of([] { conormal_dot(line2(), ProjVariety::linear(3, 1), Intersection::empty()); }) ==
          ErrorKind::UnsupportedConfiguration);
}

TEST_CASE("the conormal dot with a complementary linear space is the degree")
{
    for (const auto& [f, n] : std::vector<std::pair<const char*, std::size_t>>{
             {kConic, 2}, {kNodal, 2}, {kSmoothCubic, 2}, {"x0^4 + x1^4 + x2^4", 2}, {kQuadricSurface, 3}}) {
        const ProjVariety s = hyper(f, n);
        const ProjVariety l = ProjVariety::linear(n, n - s.dim());
        CHECK(conormal_dot(s, l, Intersection::points(s.degree())) == static_cast<long>(s.degree()));
    }
}

TEST_CASE("pairing side examples")
{
    CHECK(theorem1_side(Rat(1), Rat(-2), Rat(-2), 2) == Rat(-1, 3));
    CHECK(theorem1_side(Rat(0), Rat(1), Rat(1), 1) == Rat(1, 2));
    for (long n = 1; n <= 6; ++n)
        CHECK(theorem1_side(Rat(0), Rat(0), Rat(17, 5), n) == Rat(0));
}

TEST_CASE("the pairing identity on curated pairs")
{
    struct Case {
        ProjVariety s1, s2;
        Intersection primal, dual;
        Rat value;
    };
    const std::vector<Case> cases = {
        {line2(), ProjVariety::linear(2, 1), Intersection::points(1), Intersection::empty(), Rat(-1, 3)},
        {ProjVariety::point(1), ProjVariety::point(1), Intersection::empty(), Intersection::empty(), Rat(1, 2)},
        {hyper(kConic, 2), hyper(kConic2, 2), Intersection::points(4), Intersection::points(4), Rat(8, 3)},
        {hyper(kNodal, 2), line2(), Intersection::points(3), Intersection::empty(), Rat(5, 3)},
        {hyper(kCuspidal, 2), line2(), Intersection::points(3), Intersection::empty(), Rat(1)},
        {hyper(kSmoothCubic, 2), hyper(kConic, 2), Intersection::points(6), Intersection::points(12), Rat(6)},
        {hyper(kNodalRational, 2), hyper(kConic, 2), Intersection::points(6), Intersection::points(8),
         Rat(6) + Rat(4, 3) * Rat(-1)},
        {hyper(kQuadricSurface, 3), ProjVariety::linear(3, 1), Intersection::points(2), Intersection::points(2),
         Rat(0)},
    };
    for (const auto& c : cases) {
        const PairingReport r = theorem1_check(c.s1, c.s2, c.primal, c.dual);
        CHECK(r.equal);
        CHECK(r.lhs == r.rhs);
        CHECK(r.lhs == c.value);
    }
}

TEST_CASE("pairing parts are reported")
{
    const PairingReport r = theorem1_check(hyper(kNodal, 2), line2(), Intersection::points(3), Intersection::empty());
    CHECK(r.parts.c12 == 3);
    CHECK(r.parts.c1p == -2);
    CHECK(r.parts.c2p == -2);
    CHECK(r.parts.d12 == 0);
    CHECK(r.parts.d1p == -5);
    CHECK(r.parts.d2p == 1);
    CHECK(r.dual1 == DualSource::Analytic);
    CHECK(r.dual2 == DualSource::ClosedForm);

    const PairingReport q =
        theorem1_check(hyper(kNodalRational, 2), line2(), Intersection::points(3), Intersection::empty());
    CHECK(q.dual1 == DualSource::Elimination);
    CHECK(q.parts.d1p == -5);
    CHECK(q.equal);
}

TEST_CASE("swapping a pair with its dual swaps the parts")
{
    struct Case {
        ProjVariety s1, s2;
        Intersection primal, dual;
    };
    const std::vector<Case> cases = {
        {line2(), ProjVariety::linear(2, 1), Intersection::points(1), Intersection::empty()},
        {hyper(kConic, 2), hyper(kConic2, 2), Intersection::points(4), Intersection::points(4)},
        {hyper(kCuspidal, 2), line2(), Intersection::points(3), Intersection::empty()},
        {hyper(kNodalRational, 2), hyper(kConic, 2), Intersection::points(6), Intersection::points(8)},
    };
    for (const auto& c : cases) {
        const ResolvedDual d1 = resolve_dual(c.s1), d2 = resolve_dual(c.s2);
        const PairingReport fwd = theorem1_check(c.s1, c.s2, d1, d2, c.primal, c.dual);
        const PairingReport back = theorem1_check(d1.variety, d2.variety, {c.s1, DualSource::Elimination},
                                                  {c.s2, DualSource::Elimination}, c.dual, c.primal);
        CHECK(fwd.lhs == back.rhs);
        CHECK(fwd.rhs == back.lhs);
        CHECK(fwd.parts.c12 == back.parts.d12);
        CHECK(fwd.parts.c1p == back.parts.d1p);
        CHECK(fwd.parts.d2p == back.parts.c2p);
        CHECK(back.equal);
        // The computed dual of the dual is the original.
        if (c.s1.kind() == ProjVariety::Kind::Hypersurface) {
            const ResolvedDual dd = resolve_dual(d1.variety);
            CHECK(proportional(dd.variety.equation(), c.s1.equation()));
        }
    }
}

TEST_CASE("pairing relation examples")
{
    const PairingReport conic = pairing_relation(hyper(kConic, 2), 1);
    CHECK(conic.lhs == Rat(2, 3));
    CHECK(conic.rhs == Rat(2, 3));
    const PairingReport nodal = pairing_relation(hyper(kNodal, 2), 1);
    CHECK(nodal.lhs == Rat(5, 3));
    CHECK(nodal.equal);
    const PairingReport line = pairing_relation(line2(), 0);
    CHECK(line.lhs == Rat(2, 3));
    CHECK(line.equal);
    CHECK_THROWS_AS(pairing_relation(line2(), 2), Error);
}

TEST_CASE("pairing relation holds for every proper linear space")
{
    const std::vector<ProjVariety> vs = {
        line2(),
        ProjVariety::point(2),
        ProjVariety::point(1),
        ProjVariety::linear(3, 1),
        ProjVariety::linear(4, 2),
        hyper(kConic, 2),
        hyper(kNodal, 2),
        hyper(kNodalRational, 2),
        hyper(kCuspidal, 2),
        hyper(kSmoothCubic, 2),
        hyper(kQuadricSurface, 3),
        hyper("x0^2 + x1^2 + x2^2 + x3^2 + x4^2", 4),
    };
    for (const auto& s : vs) {
        const ResolvedDual d = resolve_dual(s);
        for (std::size_t m = 0; m < s.ambient_dim(); ++m) {
            CAPTURE(s.ambient_dim());
            CAPTURE(m);
            const PairingReport r = pairing_relation(s, d, m);
            CHECK(r.equal);
        }
    }
}

TEST_CASE("dual degree from sections")
{
    CHECK(corollary1_deg_dual(hyper(kConic, 2)) == 2);
    CHECK(corollary1_deg_dual(hyper(kNodal, 2)) == 4);
    CHECK(corollary1_deg_dual(hyper(kQuadricSurface, 3)) == 2);
    for (const auto& [f, n] : std::vector<std::pair<const char*, std::size_t>>{{kConic, 2},
                                                                               {kNodal, 2},
                                                                               {kNodalRational, 2},
                                                                               {kCuspidal, 2},
                                                                               {kSmoothCubic, 2},
                                                                               {kQuadricSurface, 3},
                                                                               {"x0^2 + x1^2 + x2^2 + x3^2", 3}}) {
        CAPTURE(f);
        const ProjVariety s = hyper(f, n);
        const DualResult d = dual_hypersurface(s);
        REQUIRE(std::holds_alternative<Poly>(d));
        CHECK(corollary1_deg_dual(s) == static_cast<long>(std::get<Poly>(d).total_degree()));
    }
}

TEST_CASE("chi_bar of the dual from sections")
{
    CHECK(corollary2_chi_bar_dual(hyper(kConic, 2)) == 2);
    CHECK(corollary2_chi_bar_dual(hyper(kNodal, 2)) == 5);
    CHECK(corollary2_chi_bar_dual(hyper(kQuadricSurface, 3)) == 4);
    for (const char* f : {kConic, kNodalRational, kCuspidal}) {
        CAPTURE(f);
        const ProjVariety s = hyper(f, 2);
        const ProjVariety dual = ProjVariety::hypersurface(std::get<Poly>(dual_hypersurface(s)));
        CHECK(corollary2_chi_bar_dual(s) == singular_census(dual).chibar);
    }
    // Every singular point of the sextic dual of a smooth cubic is a cusp
    // over a flex; three of the nine are rational, so the census is analytic.
    const ResolvedDual d = resolve_dual(hyper(kSmoothCubic, 2));
    CHECK(d.source == DualSource::Analytic);
    CHECK(corollary2_chi_bar_dual(hyper(kSmoothCubic, 2)) == chi_bar_of(d.variety));
    CHECK(d.variety.census()->kappa == 9);
}

TEST_CASE("dual codimension from sections")
{
    CHECK(corollary3_dual_codim(hyper(kQuadricSurface, 3)) == 1);
    CHECK(corollary3_dual_codim(line2()) == 2);
    CHECK(corollary3_dual_codim(hyper(kNodal, 2)) == 1);
    CHECK(corollary3_dual_codim(ProjVariety::linear(4, 1)) == 2);
    CHECK(corollary3_dual_codim(ProjVariety::point(3)) == 1);
    for (const auto& s : {ProjVariety::linear(3, 1), ProjVariety::linear(4, 2), ProjVariety::point(2)})
        CHECK(corollary3_dual_codim(s) == static_cast<long>(s.ambient_dim() - resolve_dual(s).variety.dim()));
}

TEST_CASE("quadric section identity")
{
    const PairingReport nodal = corollary4_check(hyper(kNodal, 2));
    CHECK(nodal.lhs == Rat(-7));
    CHECK(nodal.rhs == Rat(-7));
    const PairingReport conic = corollary4_check(hyper(kConic, 2));
    CHECK(conic.lhs == Rat(-4));
    CHECK(conic.equal);
    const PairingReport cusp = corollary4_check(hyper(kCuspidal, 2));
    CHECK(cusp.lhs == Rat(-6));
    CHECK(cusp.equal);
    const PairingReport smooth = corollary4_check(hyper(kSmoothCubic, 2));
    CHECK(smooth.equal);
    CHECK(smooth.lhs == Rat(0) - Rat(6) * Rat(3, 2));
    CHECK_THROWS_AS(corollary4_check(line2()), Error);
}

TEST_CASE("quadric section identity in higher dimension")
{
    // Q2 in P3: both sides use the elliptic quartic curve S cap Q.
    const PairingReport r = corollary4_check(hyper(kQuadricSurface, 3));
    CHECK(r.equal);
    CHECK(r.lhs == Rat(4));
    CHECK(kind_of([] { corollary4_check(hyper("x0*x3 - x1^2", 3)); }) == ErrorKind::UnsupportedVariety);
}
