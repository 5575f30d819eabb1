// perfcx: exact-arithmetic toolkit for perfect complexes over quotients of
// polynomial rings. Subcommands parse ring/complex/map descriptions, run the
// intersection-theorem checks, and emit human-readable or JSON reports.
//
// Exit codes: 0 all consistent, 2 data/parse error, 3 resource cap,
// 4 mechanically verified violation of a proved statement.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "perfcx/textio.hpp"
#include "perfcx/theorems.hpp"

using namespace perfcx;

namespace {

struct GlobalOptions {
    std::string ringText;
    std::uint64_t seed = 1;
    bool json = false;
    bool timing = true;
    std::string fibers = "maximal";
    std::size_t maxSPairs = 100000;
    std::size_t maxTerms = 10000000;
};

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Ring ringFromOptions(const GlobalOptions& g) {
    if (g.ringText.empty()) throw DataError("a --ring description is required");
    return parseRing(g.ringText);
}

std::vector<FieldFiber> fibersFromOptions(const GlobalOptions& g) {
    std::vector<FieldFiber> out;
    std::stringstream ss(g.fibers);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "maximal" || tok == "m") out.push_back(FieldFiber::maximalIdeal());
        else if (tok == "generic") out.push_back(FieldFiber::genericPoint());
        else throw DataError("unknown fiber '" + tok + "' (use maximal or generic)");
    }
    if (out.empty()) out.push_back(FieldFiber::maximalIdeal());
    return out;
}

int emit(const GlobalOptions& g, const std::vector<CheckReport>& reports) {
    if (g.json) {
        std::cout << reportsToJson(reports, g.timing) << "\n";
    } else {
        for (auto& r : reports) std::cout << r.human();
    }
    return aggregateExitCode(reports);
}

/// Summary line mirroring the check-monomial verdict for scripts.
void printVerdictLine(const CheckReport& r) {
    std::cout << r.check << ": " << statusString(r.conclusion.status)
              << (r.conclusion.witness.empty() ? "" : " -- " + r.conclusion.witness) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"perfcx: perfect-complex calculus and intersection-theorem checks"};
    app.require_subcommand(1);

    GlobalOptions g;
    if (const char* env = std::getenv("PERFCX_SEED")) g.seed = std::strtoull(env, nullptr, 10);
    app.add_option("--ring", g.ringText, "ring description, e.g. \"Q[x,y]/(x*y)\"");
    app.add_option("--seed", g.seed, "seed recorded in reports and driving sweeps");
    app.add_flag("--json", g.json, "emit JSON reports");
    app.add_flag("!--no-timing", g.timing, "omit wallTimeMs from JSON output");
    app.add_option("--fibers", g.fibers, "comma list of fibers: maximal,generic");
    app.add_option("--max-spairs", g.maxSPairs, "S-pair cap for Groebner runs");
    app.add_option("--max-terms", g.maxTerms, "term cap for Groebner runs");

    // ---- homology ----
    auto* cmdHomology = app.add_subcommand("homology", "homology presentations of a complex");
    std::string homFile, homName;
    cmdHomology->add_option("--file", homFile, "document with complex blocks")->required();
    cmdHomology->add_option("--complex", homName, "complex name (default: first)");

    // ---- homotopy ----
    auto* cmdHomotopy = app.add_subcommand("homotopy", "solve for a null homotopy of a map");
    std::string htFile, htName;
    cmdHomotopy->add_option("--map", htFile, "document with the map")->required();
    cmdHomotopy->add_option("--name", htName, "map name (default: first)");

    // ---- nilpotence ----
    auto* cmdNilpotence = app.add_subcommand("nilpotence", "smallest null-homotopic tensor power");
    std::string npFile, npName;
    int npMax = 4;
    cmdNilpotence->add_option("--map", npFile, "document with the map")->required();
    cmdNilpotence->add_option("--name", npName, "map name (default: first)");
    cmdNilpotence->add_option("--nmax", npMax, "power bound");

    // ---- level ----
    auto* cmdLevel = app.add_subcommand("level", "level bound with a filtration witness");
    std::string lvKoszul, lvFile, lvName;
    cmdLevel->add_option("--koszul", lvKoszul, "comma list of elements for a Koszul complex");
    cmdLevel->add_option("--file", lvFile, "document with a complex");
    cmdLevel->add_option("--complex", lvName, "complex name (default: first)");

    // ---- koszul ----
    auto* cmdKoszul = app.add_subcommand("koszul", "emit a Koszul complex in text form");
    std::string kzElements;
    cmdKoszul->add_option("--elements", kzElements, "elements, e.g. \"[x^2, y^3]\"")->required();

    // ---- check-init ----
    auto* cmdInit = app.add_subcommand("check-init", "intersection check on a bounded complex");
    std::string inFile, inName, inIdeal, inCycle;
    cmdInit->add_option("--file", inFile, "document with the complex")->required();
    cmdInit->add_option("--complex", inName, "complex name (default: first)");
    cmdInit->add_option("--ideal", inIdeal, "ideal generators")->required();
    cmdInit->add_option("--cycle", inCycle, "entries of z in F_0")->required();

    // ---- check-mit ----
    auto* cmdMit = app.add_subcommand("check-mit", "morphic intersection inequalities");
    std::string mitFile, mitMap, mitThrough, mitOut, mitIdeal;
    cmdMit->add_option("--file", mitFile, "document with complexes and maps")->required();
    cmdMit->add_option("--map", mitMap, "the morphism f")->required();
    cmdMit->add_option("--through", mitThrough, "factor G -> X")->required();
    cmdMit->add_option("--out", mitOut, "factor X -> F")->required();
    cmdMit->add_option("--ideal", mitIdeal, "torsion ideal generators")->required();

    // ---- check-canonical ----
    auto* cmdCanon = app.add_subcommand("check-canonical", "top-degree nonvanishing after S");
    std::string cnSop, cnResolve;
    int cnLength = 4;
    cmdCanon->add_option("--sop", cnSop, "system of parameters")->required();
    cmdCanon->add_option("--resolve", cnResolve,
                         "resolve R/(this ideal) and lift (default: identity on K)");
    cmdCanon->add_option("--length", cnLength, "resolution length");

    // ---- check-lift ----
    auto* cmdLift = app.add_subcommand("check-lift", "lift through a resolution stays nonzero");
    std::string lfIdeal, lfSop;
    int lfLength = 4;
    cmdLift->add_option("--ideal", lfIdeal, "ideal generators")->required();
    cmdLift->add_option("--sop", lfSop, "system of parameters inside the ideal")->required();
    cmdLift->add_option("--length", lfLength, "resolution length");

    // ---- check-minors ----
    auto* cmdMinors = app.add_subcommand("check-minors", "a top minor escapes the sop ideal");
    std::string mnSop, mnGens, mnMatrix;
    cmdMinors->add_option("--sop", mnSop, "system of parameters x")->required();
    cmdMinors->add_option("--gens", mnGens, "generators y with (y) containing (x)")->required();
    cmdMinors->add_option("--matrix", mnMatrix, "A with A y = x")->required();

    // ---- check-monomial ----
    auto* cmdMonomial = app.add_subcommand("check-monomial", "monomial-theorem membership test");
    std::string moSop;
    int moN = 1;
    cmdMonomial->add_option("--sop", moSop, "system of parameters")->required();
    cmdMonomial->add_option("--n", moN, "power");

    // ---- check-wedge ----
    auto* cmdWedge = app.add_subcommand("check-wedge", "wedge-comparison injectivity reduction");
    std::string wdIdeal;
    int wdLength = 4;
    cmdWedge->add_option("--ideal", wdIdeal, "parameter ideal generators")->required();
    cmdWedge->add_option("--length", wdLength, "resolution length");

    // ---- check-rank ----
    auto* cmdRank = app.add_subcommand("check-rank", "binomial rank bound for DG modules");
    std::string rkElements, rkStructure = "self";
    cmdRank->add_option("--elements", rkElements, "Koszul elements")->required();
    cmdRank->add_option("--structure", rkStructure, "self | sum (K + suspended K)");

    // ---- sweep ----
    auto* cmdSweep = app.add_subcommand("sweep", "randomized consistency families");
    std::string swFamily = "mit-left";
    int swCount = 20;
    cmdSweep->add_option("--family", swFamily, "mit-left | minors | ghost");
    cmdSweep->add_option("--count", swCount, "instances");

    CLI11_PARSE(app, argc, argv);

    try {
        globalLimits().maxSPairs = g.maxSPairs;
        globalLimits().maxTerms = g.maxTerms;

        if (cmdHomology->parsed()) {
            Ring ring;
            const Ring* ext = nullptr;
            if (!g.ringText.empty()) {
                ring = parseRing(g.ringText);
                ext = &ring;
            }
            Document doc = parseDocument(readFile(homFile), ext);
            const FreeComplex& c =
                homName.empty() ? doc.complexes.at(0).second : doc.complexNamed(homName);
            for (int n = c.lo(); n <= c.hi(); ++n) {
                ModulePresentation h = homologyPresentation(c, n);
                std::cout << "H_" << n << ": "
                          << (h.isZeroModule()
                                  ? "0"
                                  : std::to_string(h.generators) + " generators, " +
                                        std::to_string(h.relations.cols()) + " relations")
                          << "\n";
            }
            return 0;
        }
        if (cmdHomotopy->parsed() || cmdNilpotence->parsed()) {
            bool isNil = cmdNilpotence->parsed();
            Ring ring;
            const Ring* ext = nullptr;
            if (!g.ringText.empty()) {
                ring = parseRing(g.ringText);
                ext = &ring;
            }
            Document doc = parseDocument(readFile(isNil ? npFile : htFile), ext);
            if (doc.maps.empty()) throw DataError("document contains no map");
            std::string name = isNil ? npName : htName;
            const ChainMap& f =
                name.empty() ? doc.maps.at(0).second.map : doc.mapNamed(name).map;
            if (isNil) {
                NilpotenceResult res = nilpotenceSearch(f, npMax);
                if (res.found) std::cout << "n = " << res.n << "\n";
                else std::cout << "not found within nmax = " << npMax << "\n";
                return 0;
            }
            auto h = nullHomotopy(f);
            if (!h) {
                std::cout << "no null homotopy over the ring\n";
                return 0;
            }
            std::cout << "null homotopy found:\n";
            for (auto& [n, m] : h->comp)
                std::cout << "  h" << n << " = " << m.str() << "\n";
            return 0;
        }
        if (cmdLevel->parsed()) {
            Ring ring = ringFromOptions(g);
            if (!lvKoszul.empty()) {
                KoszulComplex k = koszul(ring, parsePolynomialList(ring, lvKoszul));
                KoszulLevelResult res = koszulLevel(k);
                std::cout << res.value << " ("
                          << (res.status == LevelStatus::Exact ? "EXACT" : "UPPER_BOUND")
                          << ")\n";
                return 0;
            }
            if (lvFile.empty()) throw DataError("level needs --koszul or --file");
            Document doc = parseDocument(readFile(lvFile), &ring);
            const FreeComplex& c =
                lvName.empty() ? doc.complexes.at(0).second : doc.complexNamed(lvName);
            LevelBound b = levelUpperBound(c);
            std::cout << b.value << " (UPPER_BOUND)\n";
            for (int i = 0; i < b.witness.length(); ++i) {
                std::cout << "  step " << (i + 1) << " ranks:";
                for (int n = b.minimized.lo(); n <= b.minimized.hi(); ++n)
                    std::cout << " " << b.witness.steps[i].rankAt(n);
                std::cout << "\n";
            }
            return 0;
        }
        if (cmdKoszul->parsed()) {
            Ring ring = ringFromOptions(g);
            KoszulComplex k = koszul(ring, parsePolynomialList(ring, kzElements));
            std::cout << printRing(ring) << "\n" << printComplex(k.cx, "K");
            return 0;
        }
        if (cmdInit->parsed()) {
            Ring ring = ringFromOptions(g);
            Document doc = parseDocument(readFile(inFile), &ring);
            const FreeComplex& c =
                inName.empty() ? doc.complexes.at(0).second : doc.complexNamed(inName);
            Ideal ideal(doc.ring, parsePolynomialList(doc.ring, inIdeal));
            auto entries = parsePolynomialList(doc.ring, inCycle);
            RingMatrix z(doc.ring, c.rank(0), 1);
            if (static_cast<int>(entries.size()) != c.rank(0))
                throw DataError("cycle entry count must match rank of F_0");
            for (std::size_t i = 0; i < entries.size(); ++i)
                z.set(static_cast<int>(i), 0, entries[i]);
            CheckReport rep = checkINIT(c, ideal, z, g.seed);
            int code = emit(g, {rep});
            if (!g.json) printVerdictLine(rep);
            return code;
        }
        if (cmdMit->parsed()) {
            Ring ring = ringFromOptions(g);
            Document doc = parseDocument(readFile(mitFile), &ring);
            Factorization fac{doc.mapNamed(mitThrough).map, doc.mapNamed(mitOut).map};
            CheckReport rep =
                checkMIT(doc.mapNamed(mitMap).map,
                         Ideal(doc.ring, parsePolynomialList(doc.ring, mitIdeal)), fac,
                         fibersFromOptions(g), g.seed);
            return emit(g, {rep});
        }
        if (cmdCanon->parsed()) {
            Ring ring = ringFromOptions(g);
            auto sop = parsePolynomialList(ring, cnSop);
            CheckReport rep;
            if (cnResolve.empty()) {
                KoszulComplex k = koszul(ring, sop);
                rep = checkCanonicalElement(sop, k.cx, ChainMap::identity(k.cx), g.seed);
            } else {
                PartialResolution res = minimalResolution(
                    ModulePresentation::cyclic(ring, parsePolynomialList(ring, cnResolve)),
                    cnLength);
                KoszulComplex k = koszul(ring, sop);
                ChainMap f =
                    liftThroughResolution(RingMatrix::identity(ring, 1), res, k.cx);
                rep = checkCanonicalElement(sop, res.complex, f, g.seed);
            }
            return emit(g, {rep});
        }
        if (cmdLift->parsed()) {
            Ring ring = ringFromOptions(g);
            CheckReport rep =
                checkLiftNonvanishing(Ideal(ring, parsePolynomialList(ring, lfIdeal)),
                                      parsePolynomialList(ring, lfSop), lfLength, g.seed);
            return emit(g, {rep});
        }
        if (cmdMinors->parsed()) {
            Ring ring = ringFromOptions(g);
            auto sop = parsePolynomialList(ring, mnSop);
            auto gens = parsePolynomialList(ring, mnGens);
            RingMatrix a = parseMatrix(ring, mnMatrix, static_cast<int>(sop.size()),
                                       static_cast<int>(gens.size()));
            CheckReport rep = checkMinors(sop, gens, a, g.seed);
            return emit(g, {rep});
        }
        if (cmdMonomial->parsed()) {
            Ring ring = ringFromOptions(g);
            CheckReport rep = checkMonomial(parsePolynomialList(ring, moSop), moN, g.seed);
            int code = emit(g, {rep});
            if (!g.json) printVerdictLine(rep);
            return code;
        }
        if (cmdWedge->parsed()) {
            Ring ring = ringFromOptions(g);
            CheckReport rep = checkWedgeInjectivity(
                Ideal(ring, parsePolynomialList(ring, wdIdeal)), wdLength, g.seed);
            return emit(g, {rep});
        }
        if (cmdRank->parsed()) {
            Ring ring = ringFromOptions(g);
            KoszulComplex k = koszul(ring, parsePolynomialList(ring, rkElements));
            DGModuleStructure s = koszulSelfAction(k);
            if (rkStructure == "sum") s = dgDirectSum(s, dgSuspend(koszulSelfAction(k), 1));
            else if (rkStructure != "self") throw DataError("unknown structure " + rkStructure);
            CheckReport rep = checkRankBound(s, g.seed);
            return emit(g, {rep});
        }
        if (cmdSweep->parsed()) {
            Ring ring = ringFromOptions(g);
            std::vector<CheckReport> reps;
            if (swFamily == "mit-left") reps = sweepMITLeft(ring, swCount, g.seed);
            else if (swFamily == "minors") reps = sweepMinors(ring, swCount, g.seed);
            else if (swFamily == "ghost") reps = sweepGhostLemma(ring, swCount, g.seed);
            else throw DataError("unknown sweep family " + swFamily);
            return emit(g, reps);
        }
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
