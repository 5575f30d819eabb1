#include "perfcx/resolutions.hpp"

#include <algorithm>

namespace perfcx {

namespace {

/// Drops columns that lie in the span of the remaining ones.
RingMatrix pruneRedundantColumns(const RingMatrix& m) {
    RingMatrix cur = m;
    bool changed = true;
    while (changed && cur.cols() > 0) {
        changed = false;
        for (int j = 0; j < cur.cols(); ++j) {
            std::vector<int> rest;
            for (int c = 0; c < cur.cols(); ++c)
                if (c != j) rest.push_back(c);
            RingMatrix others = cur.selectColumns(rest);
            if (solveLinear(others, cur.column(j)).solvable) {
                cur = others;
                changed = true;
                break;
            }
        }
    }
    return cur;
}

void requireGradedEntries(const RingMatrix& m, int degree) {
    for (auto& [rc, p] : m.entries())
        if (!p.constantCoef().isZero())
            throw DataError("minimal resolution: differential entry at degree " +
                            std::to_string(degree) +
                            " has a unit part; a graded presentation is required");
}

}  // namespace

PartialResolution minimalResolution(const ModulePresentation& m, int length) {
    if (length < 1) throw DataError("resolution length must be at least 1");
    const Ring& ring = m.ring;
    PartialResolution out;
    out.requestedLength = length;

    if (m.generators == 0) {
        out.module = m;
        out.complex = FreeComplex::zero(ring);
        out.augmentation = RingMatrix(ring, 0, 0);
        out.finite = true;
        return out;
    }

    // trim unit pivots out of the presentation (a two-term complex)
    FreeComplex pres(ring, 0, {m.generators, m.relations.cols()},
                     m.relations.isZero() ? std::map<int, RingMatrix>{}
                                          : std::map<int, RingMatrix>{{1, m.relations}});
    Minimization trimmed = minimize(pres);
    int gens = trimmed.minimal.rank(0);
    RingMatrix rel = pruneRedundantColumns(trimmed.minimal.diff(1));
    out.module = ModulePresentation{ring, gens, rel};
    out.augmentation = trimmed.include.comp(0);
    if (gens == 0) {
        out.complex = FreeComplex::zero(ring);
        out.finite = true;
        return out;
    }

    std::vector<int> ranks{gens};
    std::map<int, RingMatrix> diffs;
    RingMatrix current = rel;
    for (int n = 1; n <= length; ++n) {
        if (current.cols() == 0) {
            out.finite = true;
            break;
        }
        requireGradedEntries(current, n);
        ranks.push_back(current.cols());
        diffs[n] = current;
        out.builtLength = n;
        if (n == length) break;
        current = pruneRedundantColumns(syzygies(current));
    }
    out.complex = FreeComplex(ring, 0, std::move(ranks), std::move(diffs));
    return out;
}

ChainMap liftThroughResolution(const RingMatrix& phi0, const PartialResolution& f,
                               const FreeComplex& g) {
    const FreeComplex& fc = f.complex;
    const Ring& ring = fc.ring();
    if (g.lo() < 0) throw DataError("lift source must vanish in negative degrees");
    if (!f.finite && g.hi() > f.builtLength)
        throw DataError("lift source extends beyond the built resolution length");
    if (phi0.rows() != fc.rank(0) || phi0.cols() != g.rank(0))
        throw DataError("lift seed has the wrong shape");

    std::map<int, RingMatrix> comps;
    if (!phi0.isZero()) comps[0] = phi0;
    RingMatrix prev = phi0;
    for (int n = 1; n <= g.hi(); ++n) {
        RingMatrix rhs = prev * g.diff(n);
        if (fc.rank(n) == 0) {
            if (!rhs.isZero())
                throw std::logic_error("lift hit a vanished resolution degree with "
                                       "nonzero obstruction");
            prev = RingMatrix(ring, 0, g.rank(n));
            continue;
        }
        LinearSolution sol = solveLinear(fc.diff(n), rhs);
        if (!sol.solvable)
            throw std::logic_error("lift obstruction: resolution not exact where needed");
        if (!sol.solution.isZero()) comps[n] = sol.solution;
        prev = sol.solution;
    }
    return ChainMap(g, fc, std::move(comps));
}

GhostProxyResult ghostAfterTensor(const ModulePresentation& c, const ChainMap& f) {
    GhostProxyResult out;
    out.caveat =
        "finite proxy for big Cohen-Macaulay: C is a finitely generated test module, "
        "resolved to a truncated free resolution";
    const FreeComplex& g = f.source();
    const FreeComplex& fc = f.target();
    int lo = std::min(g.lo(), fc.lo());
    int hi = std::max(g.hi(), fc.hi());
    int width = std::max(1, hi - lo + 1);
    PartialResolution res = minimalResolution(c, width + 2);
    out.resolutionLength = res.builtLength;
    if (res.complex.isZero()) {  // C = 0
        out.ghost = true;
        out.windowLo = lo;
        out.windowHi = hi;
        return out;
    }
    ChainMap tensored = tensorMap(ChainMap::identity(res.complex), f);
    // homology of the truncated resolution tensor X is reliable strictly
    // below the truncation degree
    out.windowLo = tensored.source().lo();
    out.windowHi = res.finite ? tensored.source().hi()
                              : std::min(tensored.source().hi(), res.builtLength + lo - 1);
    out.ghost = true;
    for (int n = out.windowLo; n <= out.windowHi; ++n) {
        if (tensored.source().rank(n) == 0) continue;
        RingMatrix z = cycleGenerators(tensored.source(), n);
        if (z.cols() == 0) continue;
        RingMatrix img = tensored.comp(n) * z;
        if (img.isZero()) continue;
        LinearSolution sol = solveLinear(tensored.target().diff(n + 1), img);
        if (!sol.solvable) {
            out.ghost = false;
            out.windowLo = n;
            return out;
        }
    }
    return out;
}

}  // namespace perfcx
