#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perfcx/theorems.hpp"
#include "test_util.hpp"

using namespace perfcx;

namespace {

Ring qxy() { return Ring::polynomialRing(Field::rationals(), {"x", "y"}); }

Ring dualNumbers() {
    Ring rx = Ring::polynomialRing(Field::rationals(), {"t"});
    return Ring::quotient(rx, {rx.var(0) * rx.var(0)});
}

constexpr std::uint64_t kSeed = 20240817;

}  // namespace

TEST_CASE("nilpotence search") {
    Ring rt = dualNumbers();
    FreeComplex u = FreeComplex::unit(rt);

    SUBCASE("zero map found at n = 1") {
        NilpotenceResult r = nilpotenceSearch(ChainMap::zero(u, u), 3);
        CHECK(r.found);
        CHECK(r.n == 1);
    }
    SUBCASE("square-zero multiplier found at n = 2") {
        NilpotenceResult r = nilpotenceSearch(ChainMap::scalarMultiple(u, rt.var(0)), 4);
        CHECK(r.found);
        CHECK(r.n == 2);
    }
    SUBCASE("success at n implies success at n + 1") {
        ChainMap f = ChainMap::scalarMultiple(u, rt.var(0));
        NilpotenceResult r = nilpotenceSearch(f, 4);
        REQUIRE(r.found);
        CHECK(nullHomotopy(tensorPower(f, r.n + 1)).has_value());
    }
    SUBCASE("sharpness control is not found") {
        Ring r = qxy();
        SharpnessInstance inst = sharpnessControlInstance(r);
        NilpotenceResult res = nilpotenceSearch(inst.f, 3);
        CHECK_FALSE(res.found);
    }
}

TEST_CASE("sharpness control instance") {
    Ring r = qxy();
    SharpnessInstance inst = sharpnessControlInstance(r);
    std::vector<Polynomial> vars{r.var(0), r.var(1)};

    CHECK(isITorsion(inst.k.cx, Ideal(r, vars)));
    CHECK(levelUpperBound(inst.k.cx).value == 3);
    CHECK(inst.target == FreeComplex::concentrated(r, 2, 1));
    FiberwiseResult fw = isFiberwiseZero(inst.f, {FieldFiber::maximalIdeal()});
    CHECK_FALSE(fw.zeroAtAllSuppliedFibers);
}

TEST_CASE("tensor nilpotence check") {
    SUBCASE("square-zero multiplier: level hypothesis undetermined, search consistent") {
        Ring rt = dualNumbers();
        FreeComplex u = FreeComplex::unit(rt);
        ChainMap f = ChainMap::scalarMultiple(u, rt.var(0));
        Factorization fac{f, ChainMap::identity(u)};
        CheckReport rep = checkTensorNilpotence(f, Ideal(rt, {rt.var(0)}), fac,
                                                {FieldFiber::maximalIdeal()}, 4, kSeed);
        CHECK(rep.conclusion.status == CheckStatus::NA);
        bool undet = false;
        for (auto& h : rep.hypotheses)
            if (h.status == CheckStatus::Undetermined) undet = true;
        CHECK(undet);
        bool recorded = false;
        for (auto& c : rep.caveats)
            if (c.find("n = 2") != std::string::npos) recorded = true;
        CHECK(recorded);
    }
    SUBCASE("sharpness instance: condition (2) cannot be weakened") {
        Ring r = qxy();
        SharpnessInstance inst = sharpnessControlInstance(r);
        Factorization fac{ChainMap::identity(inst.k.cx), inst.f};
        CheckReport rep = checkTensorNilpotence(inst.f, Ideal(r, {r.var(0), r.var(1)}), fac,
                                                {FieldFiber::maximalIdeal()}, 3, kSeed);
        CHECK(rep.conclusion.status == CheckStatus::NA);
        bool fiberRecorded = false;
        for (auto& c : rep.caveats)
            if (c.find("fiberwise zero at sampled fibers: no") != std::string::npos)
                fiberRecorded = true;
        CHECK(fiberRecorded);
        CHECK_FALSE(rep.sensation());
    }
    SUBCASE("all hypotheses certified on a zero map") {
        Ring r = qxy();
        FreeComplex u = FreeComplex::unit(r);
        FreeComplex zero = FreeComplex::zero(r);
        ChainMap f = ChainMap::zero(u, u);
        Factorization fac{ChainMap::zero(u, zero), ChainMap::zero(zero, u)};
        CheckReport rep = checkTensorNilpotence(f, Ideal(r, {r.var(0)}), fac,
                                                {FieldFiber::maximalIdeal()}, 2, kSeed);
        CHECK_FALSE(rep.anyHypothesisFailed());
        CHECK(rep.conclusion.status == CheckStatus::Pass);
    }
}

TEST_CASE("morphic intersection check") {
    Ring r = qxy();
    Polynomial x = r.var(0), y = r.var(1);

    SUBCASE("sharpness instance satisfies both inequalities") {
        SharpnessInstance inst = sharpnessControlInstance(r);
        Factorization fac{ChainMap::identity(inst.k.cx), inst.f};
        CheckReport rep = checkMIT(inst.f, Ideal(r, {x, y}), fac,
                                   {FieldFiber::maximalIdeal()}, kSeed);
        CHECK(rep.conclusion.status == CheckStatus::Pass);
        CHECK(rep.conclusion.witness.find("3") != std::string::npos);
    }
    SUBCASE("identity on the unit complex with the zero ideal") {
        FreeComplex u = FreeComplex::unit(r);
        ChainMap f = ChainMap::identity(u);
        Factorization fac{f, f};
        CheckReport rep = checkMIT(f, Ideal(r, {}), fac, {FieldFiber::maximalIdeal()}, kSeed);
        CHECK(rep.conclusion.status == CheckStatus::Pass);
    }
    SUBCASE("left inequality sweep finds no violation") {
        auto reps = sweepMITLeft(r, 25, kSeed);
        for (auto& rep : reps) CHECK(rep.conclusion.status == CheckStatus::Pass);
    }
}

TEST_CASE("improved new intersection check") {
    Ring r = qxy();
    Polynomial x = r.var(0), y = r.var(1);

    SUBCASE("sop Koszul equality case") {
        FreeComplex k = testutil::koszulTwo(r, x, y);
        RingMatrix z(r, 1, 1);
        z.set(0, 0, r.one());
        CheckReport rep = checkINIT(k, Ideal(r, {x, y}), z, kSeed);
        CHECK_FALSE(rep.anyHypothesisFailed());
        CHECK(rep.conclusion.status == CheckStatus::Pass);
        CHECK(rep.conclusion.witness.find("3 >= span F = 3") != std::string::npos);
    }
    SUBCASE("unit complex with the zero ideal") {
        FreeComplex u = FreeComplex::unit(r);
        RingMatrix z(r, 1, 1);
        z.set(0, 0, r.one());
        CheckReport rep = checkINIT(u, Ideal(r, {}), z, kSeed);
        CHECK(rep.conclusion.status == CheckStatus::Pass);
    }
    SUBCASE("one-variable Koszul complex with its own ideal") {
        FreeComplex k = testutil::koszulOne(r, x);
        RingMatrix z(r, 1, 1);
        z.set(0, 0, r.one());
        CheckReport rep = checkINIT(k, Ideal(r, {x}), z, kSeed);
        CHECK_FALSE(rep.anyHypothesisFailed());
        CHECK(rep.conclusion.status == CheckStatus::Pass);
        CHECK(rep.conclusion.witness.find("span F = 2") != std::string::npos);
    }
    SUBCASE("hypothesis failure forces N-A") {
        FreeComplex k = testutil::koszulTwo(r, x, y);
        RingMatrix z(r, 1, 1);
        z.set(0, 0, x);  // class of x is in m H_0
        CheckReport rep = checkINIT(k, Ideal(r, {x, y}), z, kSeed);
        CHECK(rep.anyHypothesisFailed());
        CHECK(rep.conclusion.status == CheckStatus::NA);
    }
}

TEST_CASE("canonical element check") {
    Ring r = qxy();
    Polynomial x = r.var(0), y = r.var(1);

    SUBCASE("identity on the Koszul complex") {
        KoszulComplex k = koszul(r, {x, y});
        CheckReport rep =
            checkCanonicalElement({x, y}, k.cx, ChainMap::identity(k.cx), kSeed);
        CHECK_FALSE(rep.anyHypothesisFailed());
        CHECK(rep.conclusion.status == CheckStatus::Pass);
    }
    SUBCASE("lift from the power Koszul complex") {
        std::vector<Polynomial> sop{x * x, y};
        PartialResolution res = minimalResolution(ModulePresentation::cyclic(r, {x, y}), 3);
        KoszulComplex k = koszul(r, sop);
        ChainMap f = liftThroughResolution(RingMatrix::identity(r, 1), res, k.cx);
        CheckReport rep = checkCanonicalElement(sop, res.complex, f, kSeed);
        CHECK_FALSE(rep.anyHypothesisFailed());
        CHECK(rep.conclusion.status == CheckStatus::Pass);
    }
}

TEST_CASE("lift nonvanishing check") {
    Ring r = qxy();
    Polynomial x = r.var(0), y = r.var(1);

    CheckReport a = checkLiftNonvanishing(Ideal(r, {x, y}), {x, y}, 3, kSeed);
    CHECK(a.conclusion.status == CheckStatus::Pass);

    CheckReport b = checkLiftNonvanishing(Ideal(r, {x, y}), {x * x, y * y}, 3, kSeed);
    CHECK(b.conclusion.status == CheckStatus::Pass);
    CHECK(b.conclusion.witness.find("x*y") != std::string::npos);

    CheckReport c = checkLiftNonvanishing(Ideal(r, {x, y * y}), {x, y * y}, 3, kSeed);
    CHECK(c.conclusion.status == CheckStatus::Pass);

    CheckReport d = checkLiftNonvanishing(Ideal(r, {x, y}), {x}, 3, kSeed);
    CHECK(d.anyHypothesisFailed());
    CHECK(d.conclusion.status == CheckStatus::NA);
}

TEST_CASE("minors check") {
    Ring r = Ring::polynomialRing(Field::rationals(), {"y1", "y2"});
    Polynomial y1 = r.var(0), y2 = r.var(1);

    SUBCASE("diagonal matrix from the monomial theorem") {
        RingMatrix a(r, 2, 2);
        a.set(0, 0, y1);
        a.set(1, 1, y2);
        CheckReport rep =
            checkMinors({y1 * y1, y2 * y2}, {y1, y2}, a, kSeed);
        CHECK(rep.conclusion.status == CheckStatus::Pass);
        CHECK(rep.conclusion.witness.find("y1*y2") != std::string::npos);
    }
    SUBCASE("identity matrix") {
        CheckReport rep = checkMinors({y1, y2}, {y1, y2}, RingMatrix::identity(r, 2), kSeed);
        CHECK(rep.conclusion.status == CheckStatus::Pass);
    }
    SUBCASE("random sweep") {
        auto reps = sweepMinors(r, 6, kSeed);
        REQUIRE(reps.size() == 6);
        for (auto& rep : reps) CHECK(rep.conclusion.status == CheckStatus::Pass);
    }
}

TEST_CASE("monomial theorem check") {
    Ring r = qxy();
    Polynomial x = r.var(0), y = r.var(1);

    CheckReport a = checkMonomial({x, y}, 1, kSeed);
    CHECK(a.conclusion.status == CheckStatus::Pass);
    CHECK(a.conclusion.witness == "NOT MEMBER");

    CheckReport b = checkMonomial({x + y, y}, 1, kSeed);
    CHECK(b.conclusion.status == CheckStatus::Pass);

    Ring r3 = Ring::polynomialRing(Field::prime(5), {"x", "y", "z"});
    CheckReport c = checkMonomial({r3.var(0), r3.var(1), r3.var(2)}, 2, kSeed);
    CHECK(c.conclusion.status == CheckStatus::Pass);

    CheckReport d = checkMonomial({x, x * y}, 1, kSeed);  // not a sop
    CHECK(d.anyHypothesisFailed());
    CHECK(d.conclusion.status == CheckStatus::NA);
}

TEST_CASE("wedge injectivity check") {
    Ring r = qxy();
    Polynomial x = r.var(0), y = r.var(1);
    for (auto gens : {std::vector<Polynomial>{x, y}, {x * x, y}, {x * x, y * y}}) {
        CheckReport rep = checkWedgeInjectivity(Ideal(r, gens), 4, kSeed);
        CHECK_FALSE(rep.anyHypothesisFailed());
        CHECK(rep.conclusion.status == CheckStatus::Pass);
    }
}

TEST_CASE("rank bound check") {
    Ring r = qxy();
    KoszulComplex k = koszul(r, {r.var(0), r.var(1)});

    SUBCASE("equality on the self action") {
        CheckReport rep = checkRankBound(koszulSelfAction(k), kSeed);
        CHECK(rep.conclusion.status == CheckStatus::Pass);
    }
    SUBCASE("domination on a suspended sum") {
        DGModuleStructure s = dgDirectSum(koszulSelfAction(k), dgSuspend(koszulSelfAction(k), 1));
        CheckReport rep = checkRankBound(s, kSeed);
        CHECK(rep.conclusion.status == CheckStatus::Pass);
    }
    SUBCASE("broken action is rejected with a witness") {
        DGModuleStructure s = koszulSelfAction(k);
        s.action[0][1] = -s.action[0][1];
        CheckReport rep = checkRankBound(s, kSeed);
        CHECK(rep.anyHypothesisFailed());
        CHECK(rep.conclusion.status == CheckStatus::NA);
        CHECK(rep.hypotheses[0].witness.find("generator") != std::string::npos);
    }
}

TEST_CASE("ghost lemma sweep") {
    Ring r = qxy();
    auto reps = sweepGhostLemma(r, 12, kSeed);
    for (auto& rep : reps) {
        CHECK_FALSE(rep.anyHypothesisFailed());
        CHECK(rep.conclusion.status == CheckStatus::Pass);
    }
}

TEST_CASE("reports and exit codes") {
    Ring r = qxy();
    Polynomial x = r.var(0), y = r.var(1);
    CheckReport rep = checkMonomial({x, y}, 1, kSeed);

    SUBCASE("json round trip and schema fields") {
        std::string j = reportToJson(rep);
        CHECK(j.find("\"check\"") != std::string::npos);
        CHECK(j.find("\"hypotheses\"") != std::string::npos);
        CHECK(j.find("\"conclusion\"") != std::string::npos);
        CHECK(j.find("\"seed\"") != std::string::npos);
        CHECK(j.find("\"wallTimeMs\"") != std::string::npos);
        CHECK(reportToJson(rep, false).find("wallTimeMs") == std::string::npos);
    }
    SUBCASE("human output prints the status per line") {
        std::string h = rep.human();
        CHECK(h.find("[PASS]") != std::string::npos);
    }
    SUBCASE("aggregate exit codes") {
        CHECK(aggregateExitCode({rep}) == 0);
        CheckReport bad = checkMonomial({x, x * y}, 1, kSeed);
        CHECK(aggregateExitCode({rep, bad}) == 2);
        CheckReport fake = rep;
        fake.conclusion.status = CheckStatus::Sensation;
        CHECK(aggregateExitCode({rep, fake}) == 4);
    }
    SUBCASE("determinism of sweep reports") {
        auto a = sweepMITLeft(r, 10, 42);
        auto b = sweepMITLeft(r, 10, 42);
        CHECK(reportsToJson(a, false) == reportsToJson(b, false));
        auto c = sweepMITLeft(r, 10, 43);
        CHECK(reportsToJson(a, false) != reportsToJson(c, false));
    }
}
