#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perfcx/homology.hpp"
#include "perfcx/resolutions.hpp"
#include "test_util.hpp"

using namespace perfcx;
using testutil::Rng;

namespace {

Ring qxy() { return Ring::polynomialRing(Field::rationals(), {"x", "y"}); }

}  // namespace

TEST_CASE("homology presentations") {
    Ring r = qxy();
    Polynomial x = r.var(0), y = r.var(1);
    FreeComplex k = testutil::koszulTwo(r, x, y);

    SUBCASE("H_0 of the Koszul complex presents R/(x,y)") {
        ModulePresentation h0 = homologyPresentation(k, 0);
        REQUIRE(h0.generators == 1);
        // the relation entries generate exactly (x, y)
        std::vector<Polynomial> rel;
        for (int j = 0; j < h0.relations.cols(); ++j) rel.push_back(h0.relations.at(0, j));
        Ideal relIdeal(r, rel);
        CHECK(idealMembership(x, relIdeal));
        CHECK(idealMembership(y, relIdeal));
        for (auto& p : rel) CHECK(idealMembership(p, Ideal(r, {x, y})));
        CHECK_FALSE(h0.isZeroModule());
    }
    SUBCASE("H_1 vanishes for a regular sequence") {
        CHECK(homologyPresentation(k, 1).isZeroModule());
        CHECK(homologyPresentation(k, 2).isZeroModule());
    }
    SUBCASE("H_1 of K(x) over Q[x,y]/(xy) is nonzero") {
        Ring rq = Ring::quotient(r, {x * y});
        FreeComplex k1 = testutil::koszulOne(rq, rq.var(0));
        ModulePresentation h1 = homologyPresentation(k1, 1);
        CHECK_FALSE(h1.isZeroModule());
        // the cycle y e_1 generates: y is among the cycle generators
        RingMatrix z = cycleGenerators(k1, 1);
        RingMatrix target(rq, 1, 1);
        target.set(0, 0, rq.var(1));
        CHECK(solveLinear(z, target).solvable);
    }
}

TEST_CASE("ghost detection") {
    Ring r = qxy();
    Polynomial x = r.var(0), y = r.var(1);
    FreeComplex k = testutil::koszulTwo(r, x, y);

    CHECK(isGhost(ChainMap::zero(k, k)).ghost);
    GhostResult idg = isGhost(ChainMap::identity(k));
    CHECK_FALSE(idg.ghost);
    CHECK(idg.failingDegree == 0);

    Ring rx = Ring::polynomialRing(Field::rationals(), {"x"});
    FreeComplex k1 = testutil::koszulOne(rx, rx.var(0));
    CHECK(isGhost(ChainMap::scalarMultiple(k1, rx.var(0))).ghost);
}

TEST_CASE("null homotopy solver") {
    Ring rx = Ring::polynomialRing(Field::rationals(), {"x"});
    Polynomial x = rx.var(0);
    FreeComplex k1 = testutil::koszulOne(rx, x);

    SUBCASE("zero map has the zero homotopy") {
        auto h = nullHomotopy(ChainMap::zero(k1, k1));
        REQUIRE(h.has_value());
        CHECK(h->comp.empty());
    }
    SUBCASE("multiplication by x on K(x) is null-homotopic") {
        auto h = nullHomotopy(ChainMap::scalarMultiple(k1, x));
        REQUIRE(h.has_value());
        // contracting homotopy: h_0 = 1 (the solver validated d h + h d = f)
        CHECK(h->at(0).at(0, 0).isOne());
    }
    SUBCASE("identity on K(x,y) is not null-homotopic") {
        Ring r = qxy();
        FreeComplex k = testutil::koszulTwo(r, r.var(0), r.var(1));
        CHECK_FALSE(nullHomotopy(ChainMap::identity(k)).has_value());
    }
    SUBCASE("solver successes are ghosts") {
        Ring r = qxy();
        Rng rng(11);
        int successes = 0;
        for (int i = 0; i < 12; ++i) {
            // K(x) resolves R/(x); any multiple of x on it is null-homotopic
            FreeComplex g = testutil::koszulOne(r, r.var(0));
            if (rng.below(2) == 0) g = tensor(g, testutil::koszulOne(r, r.var(1)));
            Polynomial p = r.var(0) * testutil::randomPolynomial(rng, r, 1, 2);
            if (g.totalRank() == 4) p = p * r.var(1);  // kill both Koszul factors
            ChainMap f = ChainMap::scalarMultiple(g, p);
            auto h = nullHomotopy(f);
            if (h) {
                ++successes;
                CHECK(isGhost(f).ghost);
            }
        }
        CHECK(successes > 0);
    }
}

TEST_CASE("field fiber homology maps") {
    Ring rx = Ring::polynomialRing(Field::rationals(), {"x"});
    Ring rt = Ring::quotient(rx, {rx.var(0) * rx.var(0)});

    SUBCASE("multiplication by t dies at the graded point") {
        ChainMap f = ChainMap::scalarMultiple(FreeComplex::unit(rt), rt.var(0));
        FiberMapResult res = fieldFiberHomologyMap(f, FieldFiber::maximalIdeal());
        CHECK(res.zeroOnHomology);
        CHECK(res.sourceHomologyDim.at(0) == 1);
    }
    SUBCASE("Koszul truncation surjection is nonzero at the graded point") {
        Ring r = qxy();
        FreeComplex k = testutil::koszulTwo(r, r.var(0), r.var(1));
        ChainMap f = truncateBelow(k, 2).surjection;
        FiberMapResult res = fieldFiberHomologyMap(f, FieldFiber::maximalIdeal());
        CHECK_FALSE(res.zeroOnHomology);
        CHECK(res.witnessDegree == 2);
    }
    SUBCASE("generic point of a domain kills an exact-after-localization complex") {
        FreeComplex k1 = testutil::koszulOne(rx, rx.var(0));
        ChainMap f = ChainMap::identity(k1);
        FiberMapResult res = fieldFiberHomologyMap(f, FieldFiber::genericPoint());
        CHECK(res.zeroOnHomology);
        CHECK(res.sourceHomologyDim.at(0) == 0);
        CHECK(res.sourceHomologyDim.at(1) == 0);
    }
    SUBCASE("generic point requires the domain flag") {
        ChainMap f = ChainMap::identity(FreeComplex::unit(rt));
        CHECK_THROWS_AS(fieldFiberHomologyMap(f, FieldFiber::genericPoint()), DataError);
    }
    SUBCASE("fiber of a minimized complex has homology dims equal to ranks") {
        Ring r = qxy();
        FreeComplex k = testutil::koszulTwo(r, r.var(0), r.var(1));
        FreeComplex padded = directSum({k, cone(ChainMap::identity(FreeComplex::unit(r)))});
        FreeComplex min = minimize(padded).minimal;
        FiberMapResult res =
            fieldFiberHomologyMap(ChainMap::identity(min), FieldFiber::maximalIdeal());
        for (int n = min.lo(); n <= min.hi(); ++n)
            CHECK(res.sourceHomologyDim.at(n) == min.rank(n));
    }
}

TEST_CASE("fiberwise zero") {
    Ring rx = Ring::polynomialRing(Field::rationals(), {"x"});
    Ring rt = Ring::quotient(rx, {rx.var(0) * rx.var(0)});
    FreeComplex u = FreeComplex::unit(rt);

    FiberwiseResult z =
        isFiberwiseZero(ChainMap::zero(u, u), {FieldFiber::maximalIdeal()});
    CHECK(z.zeroAtAllSuppliedFibers);
    CHECK(!z.caveat.empty());

    FiberwiseResult t = isFiberwiseZero(ChainMap::scalarMultiple(u, rt.var(0)),
                                        {FieldFiber::maximalIdeal()});
    CHECK(t.zeroAtAllSuppliedFibers);

    Ring r = qxy();
    FreeComplex k = testutil::koszulTwo(r, r.var(0), r.var(1));
    FiberwiseResult s =
        isFiberwiseZero(truncateBelow(k, 2).surjection, {FieldFiber::maximalIdeal()});
    CHECK_FALSE(s.zeroAtAllSuppliedFibers);
}

TEST_CASE("I torsion") {
    Ring r = qxy();
    Polynomial x = r.var(0), y = r.var(1);
    FreeComplex k = testutil::koszulTwo(r, x, y);

    CHECK(isITorsion(k, Ideal(r, {x, y})));
    CHECK_FALSE(isITorsion(FreeComplex::unit(r), Ideal(r, {x})));
    CHECK_FALSE(isITorsion(directSum({suspend(FreeComplex::unit(r), 3), k}),
                           Ideal(r, {x, y})));

    SUBCASE("passes to smaller ideals on chains of monomial ideals") {
        // I-torsion means supp H lies in V(I); shrinking I grows V(I), so
        // torsion for an ideal implies torsion for any ideal inside it
        CHECK(isITorsion(k, Ideal(r, {x, y})));
        CHECK(isITorsion(k, Ideal(r, {x})));
        CHECK(isITorsion(k, Ideal(r, {y})));
        CHECK(isITorsion(k, Ideal(r, {x * y})));
        // and the converse direction genuinely fails
        FreeComplex kx = testutil::koszulOne(r, x);
        CHECK(isITorsion(kx, Ideal(r, {x})));
        CHECK_FALSE(isITorsion(kx, Ideal(r, {x, y * y})));
        CHECK_FALSE(isITorsion(kx, Ideal(r, {x, y})));
    }
    SUBCASE("radical-annihilator proxy on monomial instances") {
        // K(x) over Q[x,y]: ann H_0 = (x); variable generators of (x, y^2)
        FreeComplex kx = testutil::koszulOne(r, x);
        ModulePresentation h0 = homologyPresentation(kx, 0);
        Ideal ann = annihilatorOfCokernel(h0.relations);
        CHECK(radicalMembership(x, ann));
        CHECK_FALSE(radicalMembership(y, ann));
        CHECK(isITorsion(kx, Ideal(r, {x})) ==
              (radicalMembership(x, ann) && true));
    }
}

TEST_CASE("minimal resolutions") {
    Ring r = qxy();
    Polynomial x = r.var(0), y = r.var(1);

    SUBCASE("regular sequence gives the Koszul complex") {
        PartialResolution res = minimalResolution(ModulePresentation::cyclic(r, {x, y}), 2);
        CHECK(res.complex.rank(0) == 1);
        CHECK(res.complex.rank(1) == 2);
        CHECK(res.complex.rank(2) == 1);
        // exactness in the interior
        CHECK(homologyPresentation(res.complex, 1).isZeroModule());
    }
    SUBCASE("hypersurface is resolved in one step") {
        Ring rx = Ring::polynomialRing(Field::rationals(), {"x"});
        Polynomial x2 = rx.var(0) * rx.var(0);
        PartialResolution res = minimalResolution(ModulePresentation::cyclic(rx, {x2}), 3);
        CHECK(res.finite);
        CHECK(res.complex.rank(0) == 1);
        CHECK(res.complex.rank(1) == 1);
        CHECK(res.complex.rank(2) == 0);
        CHECK(res.complex.diff(1).at(0, 0) == x2);
    }
    SUBCASE("residue field of the dual numbers resolves periodically") {
        Ring rx = Ring::polynomialRing(Field::rationals(), {"x"});
        Ring rt = Ring::quotient(rx, {rx.var(0) * rx.var(0)});
        PartialResolution res =
            minimalResolution(ModulePresentation::cyclic(rt, {rt.var(0)}), 3);
        CHECK(res.builtLength == 3);
        for (int n = 0; n <= 3; ++n) CHECK(res.complex.rank(n) == 1);
        for (int n = 1; n <= 3; ++n) {
            Polynomial e = res.complex.diff(n).at(0, 0);
            CHECK((e == rt.var(0) || e == -rt.var(0)));
        }
        CHECK(homologyPresentation(res.complex, 1).isZeroModule());
        CHECK(homologyPresentation(res.complex, 2).isZeroModule());
    }
    SUBCASE("free module resolves instantly") {
        PartialResolution res = minimalResolution(ModulePresentation::free(r, 2), 4);
        CHECK(res.finite);
        CHECK(res.complex.rank(0) == 2);
        CHECK(res.complex.hi() == 0);
    }
}

TEST_CASE("lifting through resolutions") {
    Ring r = qxy();
    Polynomial x = r.var(0), y = r.var(1);
    PartialResolution res = minimalResolution(ModulePresentation::cyclic(r, {x, y}), 3);

    SUBCASE("identity lift along the resolution's own complex") {
        RingMatrix one = RingMatrix::identity(r, 1);
        ChainMap f = liftThroughResolution(one, res, res.complex);
        CHECK(f.comp(0) == one);
        // a lift of the identity is a quasi-isomorphism candidate: top not forced zero
        CHECK_FALSE(f.comp(2).isZero());
    }
    SUBCASE("lift of zero is zero after degree zero") {
        RingMatrix zero(r, 1, 1);
        ChainMap f = liftThroughResolution(zero, res, res.complex);
        CHECK(f.isZeroMap());
    }
    SUBCASE("power-of-parameter lift picks up the multiplier") {
        // K(x^2, y) -> resolution of R/(x, y); degree-2 component is +- x
        FreeComplex kxy2 = testutil::koszulTwo(r, x * x, y);
        ChainMap f = liftThroughResolution(RingMatrix::identity(r, 1), res, kxy2);
        RingMatrix top = f.comp(2);
        REQUIRE(top.rows() == 1);
        REQUIRE(top.cols() == 1);
        Polynomial e = top.at(0, 0);
        CHECK((e == x || e == -x));
    }
    SUBCASE("two lifts of the same seed differ by a null-homotopic map") {
        Rng rng(5150);
        for (int iter = 0; iter < 20; ++iter) {
            FreeComplex g = testutil::koszulTwo(r, x.pow(1 + rng.below(2)), y);
            ChainMap f1 = liftThroughResolution(RingMatrix::identity(r, 1), res, g);
            // perturb by a homotopy vanishing in degree zero
            std::map<int, RingMatrix> hs;
            hs[1] = testutil::randomMatrix(rng, r, res.complex.rank(2), g.rank(1), 1, 1);
            Homotopy h{g, res.complex, hs};
            std::map<int, RingMatrix> comps;
            for (int n = 0; n <= 2; ++n) {
                RingMatrix m = f1.comp(n) + res.complex.diff(n + 1) * h.at(n) +
                               h.at(n - 1) * g.diff(n);
                if (!m.isZero()) comps[n] = m;
            }
            ChainMap f2(g, res.complex, comps);
            CHECK(f2.comp(0) == f1.comp(0));
            CHECK(nullHomotopy(f2 - f1).has_value());
        }
    }
}

TEST_CASE("ghost after tensor with a finite test module") {
    Ring r = qxy();
    Polynomial x = r.var(0), y = r.var(1);
    FreeComplex k = testutil::koszulTwo(r, x, y);
    ChainMap f = truncateBelow(k, 2).surjection;  // K -> suspension of R

    SUBCASE("zero module is trivially ghost") {
        GhostProxyResult res = ghostAfterTensor(
            ModulePresentation{r, 0, RingMatrix(r, 0, 0)}, f);
        CHECK(res.ghost);
    }
    SUBCASE("zero map is trivially ghost") {
        GhostProxyResult res =
            ghostAfterTensor(ModulePresentation::free(r, 1), ChainMap::zero(k, k));
        CHECK(res.ghost);
    }
    SUBCASE("C = R reduces to a plain ghost test") {
        GhostProxyResult res = ghostAfterTensor(ModulePresentation::free(r, 1), f);
        CHECK(res.ghost == isGhost(f).ghost);
        CHECK(!res.caveat.empty());
    }
}

TEST_CASE("ghost composition stability on Koszul families") {
    // tensoring a c-fold ghost composition with a complex of span c stays ghost
    Ring r = qxy();
    Polynomial x = r.var(0), y = r.var(1);

    SUBCASE("c = 1") {
        FreeComplex kx = testutil::koszulOne(r, x);
        ChainMap g = ChainMap::scalarMultiple(kx, x);  // ghost
        REQUIRE(isGhost(g).ghost);
        FreeComplex f = FreeComplex::concentrated(r, 0, 2);  // span 1
        CHECK(isGhost(tensorMap(ChainMap::identity(f), g)).ghost);
    }
    SUBCASE("c = 2") {
        FreeComplex kx = testutil::koszulOne(r, x);
        ChainMap g1 = ChainMap::scalarMultiple(kx, x);
        ChainMap g2 = ChainMap::scalarMultiple(kx, x + x);
        REQUIRE(isGhost(g1).ghost);
        REQUIRE(isGhost(g2).ghost);
        ChainMap g = g2.compose(g1);
        FreeComplex f = testutil::koszulOne(r, y);  // span 2
        CHECK(isGhost(tensorMap(ChainMap::identity(f), g)).ghost);
    }
}
