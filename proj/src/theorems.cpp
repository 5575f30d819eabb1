#include "perfcx/theorems.hpp"

#include <chrono>

#include <json.hpp>

namespace perfcx {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t msSince(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string polyListString(const std::vector<Polynomial>& ps) {
    std::string s = "(";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) s += ", ";
        s += ps[i].str();
    }
    return s + ")";
}

const char* kHeightCaveat =
    "height computed as dim R - dim R/I without an equidimensionality certificate";
const char* kLevelCaveat =
    "level enters only through a sound upper bound; the bound certifies 'level <= height' "
    "but can report the reverse inequality only as consistent";
const char* kFiberCaveat =
    "fibers sampled: the supplied list samples Spec R, it does not exhaust it";

HypothesisResult sopHypothesis(const Ring& r, const std::vector<Polynomial>& xs) {
    SopCertificate c = certifySop(r, xs);
    HypothesisResult h;
    h.name = "elements form a system of parameters";
    h.status = c.isSop ? CheckStatus::Pass : CheckStatus::Fail;
    h.witness = "dim R = " + std::to_string(c.ringDim) + ", dim R/(x) = " +
                (c.quotientDim == kDimNegativeInfinity ? std::string("-inf")
                                                       : std::to_string(c.quotientDim)) +
                ", count = " + std::to_string(xs.size());
    return h;
}

/// w in (xs) F_d + d(F_{d+1}), the nonvanishing criterion for the top map.
bool inParameterSpanPlusBoundary(const std::vector<Polynomial>& xs, const FreeComplex& F,
                                 int d, const RingMatrix& w) {
    const Ring& ring = F.ring();
    RingMatrix m(ring, F.rank(d), 0);
    for (auto& x : xs) m = m.hstack(RingMatrix::identity(ring, F.rank(d)).scaled(x));
    m = m.hstack(F.diff(d + 1));
    return solveLinear(m, w).solvable;
}

int heightValueWithCaveat(const Ideal& I, CheckReport& rep) {
    HeightResult h = heightOf(I);
    if (h.equidimensionalityCaveat) rep.caveats.push_back(kHeightCaveat);
    return h.value;
}

}  // namespace

std::string statusString(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::NA: return "N-A";
        case CheckStatus::Undetermined: return "UNDETERMINED";
        case CheckStatus::Sensation: return "SENSATION";
    }
    return "N-A";
}

bool CheckReport::anyHypothesisFailed() const {
    for (auto& h : hypotheses)
        if (h.status == CheckStatus::Fail) return true;
    return false;
}

bool CheckReport::sensation() const {
    if (conclusion.status == CheckStatus::Sensation) return true;
    for (auto& h : hypotheses)
        if (h.status == CheckStatus::Sensation) return true;
    return false;
}

std::string CheckReport::human() const {
    std::string s = "check " + check + " on " + ring + "\n  instance: " + instance + "\n";
    for (auto& h : hypotheses)
        s += "  hypothesis [" + statusString(h.status) + "] " + h.name +
             (h.witness.empty() ? "" : " -- " + h.witness) + "\n";
    s += "  conclusion [" + statusString(conclusion.status) + "]" +
         (conclusion.witness.empty() ? "" : " " + conclusion.witness) + "\n";
    for (auto& c : caveats) s += "  caveat: " + c + "\n";
    return s;
}

std::string reportToJson(const CheckReport& r, bool includeTiming) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["ring"] = r.ring;
    j["instance"] = r.instance;
    j["hypotheses"] = nlohmann::ordered_json::array();
    for (auto& h : r.hypotheses) {
        nlohmann::ordered_json hj;
        hj["name"] = h.name;
        hj["status"] = statusString(h.status);
        hj["witness"] = h.witness;
        j["hypotheses"].push_back(hj);
    }
    j["conclusion"] = {{"status", statusString(r.conclusion.status)},
                       {"witness", r.conclusion.witness}};
    j["caveats"] = r.caveats;
    j["seed"] = r.seed;
    if (includeTiming) j["wallTimeMs"] = r.wallTimeMs;
    return j.dump(2);
}

std::string reportsToJson(const std::vector<CheckReport>& rs, bool includeTiming) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto& r : rs) arr.push_back(nlohmann::ordered_json::parse(reportToJson(r, includeTiming)));
    return arr.dump(2);
}

int aggregateExitCode(const std::vector<CheckReport>& rs) {
    bool dataFail = false;
    for (auto& r : rs) {
        if (r.sensation()) return 4;
        if (r.anyHypothesisFailed()) dataFail = true;
    }
    return dataFail ? 2 : 0;
}

NilpotenceResult nilpotenceSearch(const ChainMap& f, int nmax) {
    NilpotenceResult out;
    ChainMap power = f;
    for (int n = 1; n <= nmax; ++n) {
        if (n > 1) power = tensorMap(power, f);
        auto h = nullHomotopy(power);
        if (h) {
            out.found = true;
            out.n = n;
            out.witness = *h;
            return out;
        }
    }
    out.found = false;
    out.n = nmax;
    return out;
}

CheckReport checkTensorNilpotence(const ChainMap& f, const Ideal& I, const Factorization& fac,
                                  const std::vector<FieldFiber>& fibers, int nmax,
                                  std::uint64_t seed) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check = "tensor-nilpotence";
    rep.ring = f.source().ring().str();
    rep.seed = seed;
    rep.instance = "f: " + f.source().describeRanks() + " -> " + f.target().describeRanks() +
                   ", I = " + I.str();

    HypothesisResult hf;
    hf.name = "factorization composes to f";
    hf.status = fac.out.compose(fac.through) == f ? CheckStatus::Pass : CheckStatus::Fail;
    rep.hypotheses.push_back(hf);

    HypothesisResult ht;
    ht.name = "H(X) is I-torsion";
    ht.status = isITorsion(fac.through.target(), I) ? CheckStatus::Pass : CheckStatus::Fail;
    ht.witness = "X: " + fac.through.target().describeRanks();
    rep.hypotheses.push_back(ht);

    LevelBound lub = levelUpperBound(homComplex(f.source(), f.target()));
    int height = heightValueWithCaveat(I, rep);
    HypothesisResult hl;
    hl.name = "level Hom(G,F) <= height I";
    hl.witness = "levelUpperBound = " + std::to_string(lub.value) + ", height = " +
                 (height == kHeightInfinity ? std::string("inf") : std::to_string(height));
    if (height == kHeightInfinity || lub.value <= height) hl.status = CheckStatus::Pass;
    else hl.status = CheckStatus::Undetermined;
    rep.hypotheses.push_back(hl);
    rep.caveats.push_back(kLevelCaveat);

    FiberwiseResult fw = isFiberwiseZero(f, fibers);
    rep.caveats.push_back(kFiberCaveat);
    NilpotenceResult ns = nilpotenceSearch(f, nmax);
    std::string observed =
        std::string("fiberwise zero at sampled fibers: ") +
        (fw.zeroAtAllSuppliedFibers ? "yes" : "no") + "; nilpotence search: " +
        (ns.found ? "n = " + std::to_string(ns.n)
                  : "not found within Nmax = " + std::to_string(nmax));

    bool hypsCertified = hf.status == CheckStatus::Pass && ht.status == CheckStatus::Pass &&
                         hl.status == CheckStatus::Pass;
    if (!hypsCertified) {
        rep.conclusion.status = CheckStatus::NA;
        rep.conclusion.witness = "hypotheses not certified";
        rep.caveats.push_back("consistency record: " + observed);
    } else if (!fw.zeroAtAllSuppliedFibers) {
        rep.conclusion.status = CheckStatus::Sensation;
        rep.conclusion.witness = "hypotheses certified yet " + observed;
    } else {
        rep.conclusion.status = CheckStatus::Pass;
        rep.conclusion.witness = observed;
        if (!ns.found)
            rep.caveats.push_back("tensor power bound exhausted; nilpotence follows from the "
                                  "theorem, not from the search");
    }
    rep.wallTimeMs = msSince(t0);
    return rep;
}

CheckReport checkMIT(const ChainMap& f, const Ideal& I, const Factorization& fac,
                     const std::vector<FieldFiber>& fibers, std::uint64_t seed) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check = "morphic-intersection";
    rep.ring = f.source().ring().str();
    rep.seed = seed;
    const FreeComplex& G = f.source();
    const FreeComplex& F = f.target();
    rep.instance = "f: " + G.describeRanks() + " -> " + F.describeRanks() + ", I = " + I.str();

    HypothesisResult hf;
    hf.name = "factorization composes to f";
    hf.status = fac.out.compose(fac.through) == f ? CheckStatus::Pass : CheckStatus::Fail;
    rep.hypotheses.push_back(hf);

    HypothesisResult ht;
    ht.name = "H(X) is I-torsion";
    ht.status = isITorsion(fac.through.target(), I) ? CheckStatus::Pass : CheckStatus::Fail;
    rep.hypotheses.push_back(ht);

    FiberwiseResult fw = isFiberwiseZero(f, fibers);
    rep.caveats.push_back(kFiberCaveat);
    HypothesisResult hnz;
    hnz.name = "f is not fiberwise zero";
    if (!fw.zeroAtAllSuppliedFibers) {
        hnz.status = CheckStatus::Pass;
        for (auto& per : fw.perFiber)
            if (!per.zeroOnHomology)
                hnz.witness = "nonzero at " + per.fiber.str() + ", degree " +
                              std::to_string(per.witnessDegree);
    } else {
        hnz.status = CheckStatus::Undetermined;
        hnz.witness = "zero at every sampled fiber; unsampled fibers unknown";
    }
    rep.hypotheses.push_back(hnz);

    // alternative overlap route: an m-torsion factorization with window
    // sup F - inf G <= dim R - 1 would force the k-fiber of f to vanish
    std::vector<Polynomial> vars;
    for (int i = 0; i < G.ring().nvars(); ++i) vars.push_back(G.ring().var(i));
    Ideal gradedMax(G.ring(), vars);
    HypothesisResult hov;
    hov.name = "overlap window route";
    if (!isITorsion(fac.through.target(), gradedMax)) {
        hov.status = CheckStatus::NA;
        hov.witness = "X is not torsion for the graded maximal ideal";
    } else if (G.isZero() || F.isZero()) {
        hov.status = CheckStatus::NA;
    } else {
        int window = F.hi() - G.lo();
        int d = ringDimension(G.ring());
        bool kFiberNonzero = false;
        for (auto& per : fw.perFiber)
            if (per.fiber.kind == FieldFiber::Kind::MaximalIdeal && !per.zeroOnHomology)
                kFiberNonzero = true;
        hov.witness = "sup F - inf G = " + std::to_string(window) + ", dim R - 1 = " +
                      std::to_string(d - 1);
        if (kFiberNonzero && window <= d - 1) hov.status = CheckStatus::Sensation;
        else hov.status = CheckStatus::Pass;
    }
    rep.hypotheses.push_back(hov);

    int spanF = spanOf(F), spanG = spanOf(G);
    LevelBound lub = levelUpperBound(homComplex(G, F));
    int height = heightValueWithCaveat(I, rep);
    rep.caveats.push_back(kLevelCaveat);

    bool hypsHold = hf.status == CheckStatus::Pass && ht.status == CheckStatus::Pass &&
                    hnz.status == CheckStatus::Pass;
    std::string chain = "span F + span G - 1 = " + std::to_string(spanF + spanG - 1) +
                        " >= levelUpperBound(Hom(G,F)) = " + std::to_string(lub.value) +
                        " >= height I + 1 = " +
                        (height == kHeightInfinity ? std::string("inf")
                                                   : std::to_string(height + 1));
    if (!hypsHold) {
        rep.conclusion.status = CheckStatus::NA;
        rep.conclusion.witness = "hypotheses not certified; chain observed: " + chain;
    } else if (spanF + spanG - 1 < lub.value) {
        rep.conclusion.status = CheckStatus::Sensation;
        rep.conclusion.witness = "left inequality violated: " + chain;
    } else if (height != kHeightInfinity && lub.value < height + 1) {
        rep.conclusion.status = CheckStatus::Sensation;
        rep.conclusion.witness =
            "right inequality refuted by the upper bound (level <= bound): " + chain;
    } else {
        rep.conclusion.status = CheckStatus::Pass;
        rep.conclusion.witness = chain + " (left exact, right consistent)";
        rep.caveats.push_back(
            "right inequality status three-valued: HOLDS only with an exact level, "
            "UNDETERMINED-consistent with an upper bound, SENSATION if the bound refutes it");
    }
    rep.wallTimeMs = msSince(t0);
    return rep;
}

CheckReport checkINIT(const FreeComplex& F, const Ideal& I, const RingMatrix& z,
                      std::uint64_t seed) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check = "improved-new-intersection";
    rep.ring = F.ring().str();
    rep.seed = seed;
    rep.instance = "F: " + F.describeRanks() + ", I = " + I.str() + ", z = " + z.str();
    const Ring& ring = F.ring();

    HypothesisResult hs;
    hs.name = "complex supported in degrees 0..d";
    hs.status = (F.isZero() || F.lo() == 0) ? CheckStatus::Pass : CheckStatus::Fail;
    hs.witness = F.describeRanks();
    rep.hypotheses.push_back(hs);

    HypothesisResult hc;
    hc.name = "z is a cycle";
    hc.status = (F.diff(0) * z).isZero() ? CheckStatus::Pass : CheckStatus::Fail;
    rep.hypotheses.push_back(hc);

    HypothesisResult hm;
    hm.name = "class of z survives the graded fiber of H_0";
    hm.status = !gradedFiberInSpan(F.diff(1), z) ? CheckStatus::Pass : CheckStatus::Fail;
    rep.hypotheses.push_back(hm);

    HypothesisResult hz;
    hz.name = "I z consists of boundaries";
    hz.status = CheckStatus::Pass;
    for (auto& p : I.gens()) {
        if (!solveLinear(F.diff(1), z.scaled(p)).solvable) {
            hz.status = CheckStatus::Fail;
            hz.witness = "fails for " + p.str();
            break;
        }
    }
    rep.hypotheses.push_back(hz);

    HypothesisResult hh;
    hh.name = "I annihilates H_i for i >= 1";
    hh.status = CheckStatus::Pass;
    for (int i = std::max(1, F.lo()); i <= F.hi() && hh.status == CheckStatus::Pass; ++i) {
        RingMatrix cycles = cycleGenerators(F, i);
        if (cycles.cols() == 0) continue;
        for (auto& p : I.gens()) {
            if (!solveLinear(F.diff(i + 1), cycles.scaled(p)).solvable) {
                hh.status = CheckStatus::Fail;
                hh.witness = "fails for " + p.str() + " at degree " + std::to_string(i);
                break;
            }
        }
    }
    rep.hypotheses.push_back(hh);

    int d = ringDimension(ring);
    int spanF = spanOf(F);
    LevelBound lub = levelUpperBound(F);
    int height = heightValueWithCaveat(I, rep);
    rep.caveats.push_back(kLevelCaveat);
    std::string chain =
        "d + 1 = " + std::to_string(d + 1) + " >= span F = " + std::to_string(spanF) +
        " >= levelUpperBound F = " + std::to_string(lub.value) + " >= height I + 1 = " +
        (height == kHeightInfinity ? std::string("inf") : std::to_string(height + 1));

    if (rep.anyHypothesisFailed()) {
        rep.conclusion.status = CheckStatus::NA;
        rep.conclusion.witness = "hypotheses not satisfied; chain observed: " + chain;
    } else if (d + 1 < spanF || spanF < lub.value ||
               (height != kHeightInfinity && lub.value < height + 1)) {
        rep.conclusion.status = CheckStatus::Sensation;
        rep.conclusion.witness = "inequality chain violated: " + chain;
    } else {
        rep.conclusion.status = CheckStatus::Pass;
        rep.conclusion.witness = chain;
    }
    rep.wallTimeMs = msSince(t0);
    return rep;
}

CheckReport checkCanonicalElement(const std::vector<Polynomial>& sop, const FreeComplex& F,
                                  const ChainMap& f, std::uint64_t seed) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check = "canonical-element";
    rep.ring = F.ring().str();
    rep.seed = seed;
    rep.instance = "sop = " + polyListString(sop) + ", F: " + F.describeRanks();
    const int d = static_cast<int>(sop.size());

    rep.hypotheses.push_back(sopHypothesis(F.ring(), sop));

    KoszulComplex k = koszul(F.ring(), sop);
    if (!(f.source() == k.cx) || !(f.target() == F))
        throw DataError("canonical element check expects f from the Koszul complex on the sop");

    HypothesisResult hf;
    hf.name = "H_0 of the graded fiber of f is nonzero";
    // the degree-0 cycle space of K is everything; test the image of 1
    RingMatrix z(F.ring(), 1, 1);
    z.set(0, 0, F.ring().one());
    RingMatrix img = f.comp(0) * z;
    hf.status = (F.rank(0) > 0 && !gradedFiberInSpan(F.diff(1), img)) ? CheckStatus::Pass
                                                                      : CheckStatus::Fail;
    rep.hypotheses.push_back(hf);

    if (rep.anyHypothesisFailed()) {
        rep.conclusion.status = CheckStatus::NA;
        rep.wallTimeMs = msSince(t0);
        return rep;
    }
    if (F.rank(d) == 0) {
        rep.conclusion.status = CheckStatus::Sensation;
        rep.conclusion.witness = "F vanishes in degree d; the image of the top form is zero";
        rep.wallTimeMs = msSince(t0);
        return rep;
    }
    RingMatrix top = f.comp(d);  // K_d has rank one
    bool degenerate = inParameterSpanPlusBoundary(sop, F, d, top);
    if (degenerate) {
        rep.conclusion.status = CheckStatus::Sensation;
        rep.conclusion.witness =
            "f(K_d) lies in (x) F_d + d(F_{d+1}): H_d(S tensor f) vanishes";
    } else {
        rep.conclusion.status = CheckStatus::Pass;
        rep.conclusion.witness =
            "f(K_d) escapes (x) F_d + d(F_{d+1}): H_d(S tensor f) is nonzero";
    }
    rep.wallTimeMs = msSince(t0);
    return rep;
}

CheckReport checkLiftNonvanishing(const Ideal& I, const std::vector<Polynomial>& sop,
                                  int length, std::uint64_t seed) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check = "lift-nonvanishing";
    rep.ring = I.ring().str();
    rep.seed = seed;
    rep.instance = "I = " + I.str() + ", sop = " + polyListString(sop) +
                   ", L = " + std::to_string(length);
    const Ring& ring = I.ring();
    const int d = static_cast<int>(sop.size());
    if (length < d) throw DataError("resolution length must reach the sop size");

    rep.hypotheses.push_back(sopHypothesis(ring, sop));

    HypothesisResult hin;
    hin.name = "(x) lies inside I";
    hin.status = CheckStatus::Pass;
    for (auto& x : sop)
        if (!idealMembership(x, I)) {
            hin.status = CheckStatus::Fail;
            hin.witness = x.str() + " is not in I";
            break;
        }
    rep.hypotheses.push_back(hin);

    if (rep.anyHypothesisFailed()) {
        rep.conclusion.status = CheckStatus::NA;
        rep.wallTimeMs = msSince(t0);
        return rep;
    }

    PartialResolution res = minimalResolution(ModulePresentation::cyclic(ring, I.gens()), length);
    KoszulComplex k = koszul(ring, sop);
    ChainMap lift = liftThroughResolution(RingMatrix::identity(ring, 1), res, k.cx);
    RingMatrix top = lift.comp(d);
    if (top.isZero()) {
        rep.conclusion.status = CheckStatus::Sensation;
        rep.conclusion.witness = "the lift vanishes in degree d";
    } else {
        rep.conclusion.status = CheckStatus::Pass;
        rep.conclusion.witness = "f_d = " + top.str() + " is nonzero";
    }
    rep.wallTimeMs = msSince(t0);
    return rep;
}

CheckReport checkMinors(const std::vector<Polynomial>& sop,
                        const std::vector<Polynomial>& ygens, const RingMatrix& A,
                        std::uint64_t seed) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check = "minors-escape";
    rep.ring = A.ring().str();
    rep.seed = seed;
    rep.instance = "x = " + polyListString(sop) + ", y = " + polyListString(ygens) +
                   ", A: " + std::to_string(A.rows()) + "x" + std::to_string(A.cols());
    const Ring& ring = A.ring();
    const int d = static_cast<int>(sop.size());

    HypothesisResult ha;
    ha.name = "A y = x exactly";
    ha.status = CheckStatus::Pass;
    if (A.rows() != d || A.cols() != static_cast<int>(ygens.size())) {
        ha.status = CheckStatus::Fail;
        ha.witness = "shape mismatch";
    } else {
        RingMatrix yv(ring, static_cast<int>(ygens.size()), 1);
        for (std::size_t i = 0; i < ygens.size(); ++i) yv.set(static_cast<int>(i), 0, ygens[i]);
        RingMatrix xv(ring, d, 1);
        for (int i = 0; i < d; ++i) xv.set(i, 0, sop[i]);
        if (!(A * yv == xv)) {
            ha.status = CheckStatus::Fail;
            ha.witness = "product differs from x";
        }
    }
    rep.hypotheses.push_back(ha);
    rep.hypotheses.push_back(sopHypothesis(ring, sop));

    if (rep.anyHypothesisFailed()) {
        rep.conclusion.status = CheckStatus::NA;
        rep.wallTimeMs = msSince(t0);
        return rep;
    }

    Ideal minors = minorsIdeal(A, d);
    Ideal xIdeal(ring, sop);
    for (auto& m : minors.gens()) {
        if (!idealMembership(m, xIdeal)) {
            rep.conclusion.status = CheckStatus::Pass;
            rep.conclusion.witness = "minor " + m.str() + " escapes (x)";
            rep.wallTimeMs = msSince(t0);
            return rep;
        }
    }
    rep.conclusion.status = CheckStatus::Sensation;
    rep.conclusion.witness = "every d x d minor lies in (x)";
    rep.wallTimeMs = msSince(t0);
    return rep;
}

CheckReport checkMonomial(const std::vector<Polynomial>& sop, int n, std::uint64_t seed) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check = "monomial-theorem";
    rep.seed = seed;
    if (sop.empty()) throw DataError("monomial check needs at least one element");
    const Ring& ring = sop[0].ring();
    rep.ring = ring.str();
    rep.instance = "y = " + polyListString(sop) + ", n = " + std::to_string(n);

    rep.hypotheses.push_back(sopHypothesis(ring, sop));
    if (rep.anyHypothesisFailed()) {
        rep.conclusion.status = CheckStatus::NA;
        rep.wallTimeMs = msSince(t0);
        return rep;
    }

    Polynomial prod = ring.one();
    for (auto& y : sop) prod = prod * y;
    prod = prod.pow(static_cast<unsigned>(n));
    std::vector<Polynomial> powers;
    for (auto& y : sop) powers.push_back(y.pow(static_cast<unsigned>(n + 1)));
    bool member = idealMembership(prod, Ideal(ring, powers));
    if (member) {
        rep.conclusion.status = CheckStatus::Sensation;
        rep.conclusion.witness = "MEMBER: (y_1...y_d)^n lies in (y_i^{n+1})";
    } else {
        rep.conclusion.status = CheckStatus::Pass;
        rep.conclusion.witness = "NOT MEMBER";
    }
    rep.wallTimeMs = msSince(t0);
    return rep;
}

CheckReport checkWedgeInjectivity(const Ideal& I, int length, std::uint64_t seed) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check = "wedge-injectivity";
    rep.ring = I.ring().str();
    rep.seed = seed;
    rep.instance = "I = " + I.str() + ", L = " + std::to_string(length);
    const Ring& ring = I.ring();

    // minimal generating set of I by redundancy pruning
    std::vector<Polynomial> xs = I.gens();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            std::vector<Polynomial> rest;
            for (std::size_t j = 0; j < xs.size(); ++j)
                if (j != i) rest.push_back(xs[j]);
            if (idealMembership(xs[i], Ideal(ring, rest))) {
                xs = rest;
                changed = true;
                break;
            }
        }
    }
    const int d = static_cast<int>(xs.size());

    HypothesisResult hp;
    SopCertificate cert = certifySop(ring, xs);
    hp.name = "I is a parameter ideal";
    hp.status = cert.isSop ? CheckStatus::Pass : CheckStatus::Fail;
    hp.witness = "minimal generators: " + polyListString(xs);
    rep.hypotheses.push_back(hp);
    if (length < d + 1) throw DataError("resolution length must exceed the sop size");
    if (rep.anyHypothesisFailed()) {
        rep.conclusion.status = CheckStatus::NA;
        rep.wallTimeMs = msSince(t0);
        return rep;
    }

    KoszulComplex k = koszul(ring, xs);
    PartialResolution resS = minimalResolution(ModulePresentation::cyclic(ring, xs), length);
    std::vector<Polynomial> vars;
    for (int i = 0; i < ring.nvars(); ++i) vars.push_back(ring.var(i));
    PartialResolution resK = minimalResolution(ModulePresentation::cyclic(ring, vars), length);

    ChainMap g = liftThroughResolution(RingMatrix::identity(ring, 1), resS, k.cx);
    ChainMap h = liftThroughResolution(RingMatrix::identity(ring, 1), resK, resS.complex);
    ChainMap f = h.compose(g);

    rep.caveats.push_back(
        "injectivity of the wedge comparison reduces to nonvanishing of its top "
        "degree: a graded algebra map out of an exterior algebra with nonzero top "
        "component is injective");

    if (resK.complex.rank(d) == 0 || f.comp(d).isZero()) {
        rep.conclusion.status = CheckStatus::Sensation;
        rep.conclusion.witness = "composite lift vanishes in degree d";
        rep.wallTimeMs = msSince(t0);
        return rep;
    }
    bool degenerate = inParameterSpanPlusBoundary(xs, resK.complex, d, f.comp(d));
    if (degenerate) {
        rep.conclusion.status = CheckStatus::Sensation;
        rep.conclusion.witness = "H_d(S tensor hg) vanishes";
    } else {
        rep.conclusion.status = CheckStatus::Pass;
        rep.conclusion.witness =
            "H_d(S tensor hg) is nonzero; the wedge map is injective after the "
            "residue field base change";
    }
    rep.wallTimeMs = msSince(t0);
    return rep;
}

CheckReport checkRankBound(const DGModuleStructure& s, std::uint64_t seed) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check = "rank-bound";
    rep.ring = s.koszul.ring.str();
    rep.seed = seed;
    rep.instance = "F: " + s.complex.describeRanks() + " over Koszul on " +
                   polyListString(s.koszul.elements);
    const Ring& ring = s.koszul.ring;

    DGCheck dg = verifyDGModule(s);
    HypothesisResult hd;
    hd.name = "DG module axioms hold";
    hd.status = dg.valid ? CheckStatus::Pass : CheckStatus::Fail;
    hd.witness = dg.valid ? dg.reductionNote : dg.failingAxiom;
    rep.hypotheses.push_back(hd);

    HypothesisResult hn;
    hn.name = "H_0(F) is nonzero";
    hn.status = !homologyPresentation(s.complex, 0).isZeroModule() ? CheckStatus::Pass
                                                                   : CheckStatus::Fail;
    rep.hypotheses.push_back(hn);

    HypothesisResult hb;
    hb.name = "F vanishes in negative degrees";
    hb.status = (s.complex.isZero() || s.complex.lo() >= 0) ? CheckStatus::Pass
                                                            : CheckStatus::Fail;
    rep.hypotheses.push_back(hb);

    rep.hypotheses.push_back(sopHypothesis(ring, s.koszul.elements));

    if (rep.anyHypothesisFailed()) {
        rep.conclusion.status = CheckStatus::NA;
        rep.wallTimeMs = msSince(t0);
        return rep;
    }

    const int d = ringDimension(ring);
    std::string ranks = "ranks vs binomials:";
    bool ok = true;
    for (int n = 0; n <= std::max(s.complex.hi(), d); ++n) {
        long need = binomial(d, n);
        ranks += " " + std::to_string(s.complex.rank(n)) + ">=" + std::to_string(need);
        if (s.complex.rank(n) < need) ok = false;
    }
    if (ok) {
        rep.conclusion.status = CheckStatus::Pass;
        rep.conclusion.witness = ranks;
    } else {
        rep.conclusion.status = CheckStatus::Sensation;
        rep.conclusion.witness = "binomial bound violated; full instance: " + ranks + "; " +
                                 rep.instance;
    }
    rep.wallTimeMs = msSince(t0);
    return rep;
}

SharpnessInstance sharpnessControlInstance(const Ring& r) {
    std::vector<Polynomial> vars;
    for (int i = 0; i < r.nvars(); ++i) vars.push_back(r.var(i));
    SharpnessInstance out{koszul(r, vars), {}, {}};
    const int d = r.nvars();
    Truncation t = truncateBelow(out.k.cx, d);
    out.target = t.above;
    out.f = t.surjection;
    return out;
}

std::uint64_t SweepRng::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

Polynomial randomGradedElement(SweepRng& rng, const Ring& r) {
    // a nonzero element of the graded maximal ideal, degree 1..2
    TermList t;
    int terms = 1 + static_cast<int>(rng.below(2));
    for (int i = 0; i < terms; ++i) {
        int v = static_cast<int>(rng.below(r.nvars()));
        std::uint32_t e = 1 + static_cast<std::uint32_t>(rng.below(2));
        long c = 1 + static_cast<long>(rng.below(3));
        t.push_back(Term{Monomial::var(r.nvars(), v, e), Scalar::ofInt(r.field(), c)});
    }
    Polynomial p = r.makePoly(std::move(t));
    return p.isZero() ? r.var(0) : p;
}

FreeComplex randomMinimalComplex(SweepRng& rng, const Ring& r, int maxSpan) {
    int kind = static_cast<int>(rng.below(3));
    int shift = static_cast<int>(rng.below(3)) - 1;
    if (kind == 0 || maxSpan < 2)
        return suspend(FreeComplex::concentrated(r, 0, 1 + static_cast<int>(rng.below(2))),
                       shift);
    KoszulComplex k = koszul(
        r, kind == 1 || maxSpan < 3
               ? std::vector<Polynomial>{randomGradedElement(rng, r)}
               : std::vector<Polynomial>{randomGradedElement(rng, r), r.var(1)});
    return suspend(k.cx, shift);
}

}  // namespace

std::vector<CheckReport> sweepMITLeft(const Ring& r, int count, std::uint64_t seed) {
    SweepRng rng(seed);
    std::vector<CheckReport> out;
    for (int i = 0; i < count; ++i) {
        auto t0 = Clock::now();
        CheckReport rep;
        rep.check = "mit-left-sweep";
        rep.ring = r.str();
        rep.seed = seed;
        FreeComplex g = randomMinimalComplex(rng, r, 3);
        FreeComplex f = randomMinimalComplex(rng, r, 3);
        rep.instance = "#" + std::to_string(i) + ": G " + g.describeRanks() + ", F " +
                       f.describeRanks();
        LevelBound lub = levelUpperBound(homComplex(g, f));
        int lhs = spanOf(f) + spanOf(g) - 1;
        if (lhs >= lub.value) {
            rep.conclusion.status = CheckStatus::Pass;
            rep.conclusion.witness = std::to_string(lhs) + " >= " + std::to_string(lub.value);
        } else {
            rep.conclusion.status = CheckStatus::Sensation;
            rep.conclusion.witness = "span sum " + std::to_string(lhs) +
                                     " below level bound " + std::to_string(lub.value);
        }
        rep.wallTimeMs = msSince(t0);
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<CheckReport> sweepMinors(const Ring& r, int count, std::uint64_t seed) {
    SweepRng rng(seed);
    std::vector<CheckReport> out;
    if (r.nvars() < 2) throw DataError("minors sweep expects two variables");
    std::vector<Polynomial> y{r.var(0), r.var(1), r.var(0) + r.var(1)};
    int made = 0;
    while (made < count) {
        RingMatrix A(r, 2, 3);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j)
                if (rng.below(3) != 0)
                    A.set(i, j, randomGradedElement(rng, r));
        std::vector<Polynomial> x;
        for (int i = 0; i < 2; ++i) {
            Polynomial e = r.zero();
            for (int j = 0; j < 3; ++j) e = e + A.at(i, j) * y[j];
            x.push_back(e);
        }
        if (!certifySop(r, x).isSop) continue;
        CheckReport rep = checkMinors(x, y, A, seed);
        rep.instance = "#" + std::to_string(made) + ": " + rep.instance;
        out.push_back(std::move(rep));
        ++made;
    }
    return out;
}

std::vector<CheckReport> sweepGhostLemma(const Ring& r, int count, std::uint64_t seed) {
    SweepRng rng(seed);
    std::vector<CheckReport> out;
    for (int i = 0; i < count; ++i) {
        auto t0 = Clock::now();
        CheckReport rep;
        rep.check = "ghost-lemma-sweep";
        rep.ring = r.str();
        rep.seed = seed;
        int c = 1 + static_cast<int>(rng.below(2));
        Polynomial a = randomGradedElement(rng, r);
        KoszulComplex k = koszul(r, {a});
        ChainMap g = ChainMap::scalarMultiple(k.cx, a * randomGradedElement(rng, r));
        HypothesisResult hg;
        hg.name = "each factor is a verified ghost";
        hg.status = isGhost(g).ghost ? CheckStatus::Pass : CheckStatus::Fail;
        if (c == 2) {
            ChainMap g2 = ChainMap::scalarMultiple(k.cx, a);
            if (!isGhost(g2).ghost) hg.status = CheckStatus::Fail;
            g = g2.compose(g);
        }
        rep.hypotheses.push_back(hg);

        FreeComplex f = c == 1 ? FreeComplex::concentrated(r, 0, 1 + static_cast<int>(rng.below(2)))
                               : koszul(r, {randomGradedElement(rng, r)}).cx;
        LevelBound lb = levelUpperBound(f);
        HypothesisResult hl;
        hl.name = "tensor factor has level bound at most c";
        hl.status = lb.value <= c ? CheckStatus::Pass : CheckStatus::Fail;
        hl.witness = "bound " + std::to_string(lb.value) + ", c = " + std::to_string(c);
        rep.hypotheses.push_back(hl);
        rep.instance = "#" + std::to_string(i) + ": c = " + std::to_string(c) + ", F " +
                       f.describeRanks();

        if (rep.anyHypothesisFailed()) {
            rep.conclusion.status = CheckStatus::NA;
        } else if (isGhost(tensorMap(ChainMap::identity(f), g)).ghost) {
            rep.conclusion.status = CheckStatus::Pass;
            rep.conclusion.witness = "F tensor g is a verified ghost";
        } else {
            rep.conclusion.status = CheckStatus::Sensation;
            rep.conclusion.witness = "F tensor g fails the ghost test";
        }
        rep.wallTimeMs = msSince(t0);
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace perfcx
