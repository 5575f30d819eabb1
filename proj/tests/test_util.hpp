#ifndef PERFCX_TEST_UTIL_HPP
#define PERFCX_TEST_UTIL_HPP

#include <cstdint>
#include <vector>

#include "perfcx/complex.hpp"
#include "perfcx/groebner.hpp"
#include "perfcx/idealops.hpp"

namespace perfcx::testutil {

/// splitmix64: tiny deterministic RNG, stable across platforms.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    long rangeInt(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

inline Monomial randomMonomial(Rng& rng, int nvars, int maxDeg) {
    std::vector<std::uint32_t> e(nvars, 0);
    int deg = static_cast<int>(rng.below(maxDeg + 1));
    for (int i = 0; i < deg; ++i) e[rng.below(nvars)] += 1;
    return Monomial(std::move(e));
}

inline Polynomial randomPolynomial(Rng& rng, const Ring& r, int maxDeg, int maxTerms = 3) {
    TermList t;
    int nterms = 1 + static_cast<int>(rng.below(maxTerms));
    for (int i = 0; i < nterms; ++i) {
        long c = rng.rangeInt(-3, 3);
        if (c == 0) c = 1;
        t.push_back(Term{randomMonomial(rng, r.nvars(), maxDeg), Scalar::ofInt(r.field(), c)});
    }
    return r.makePoly(std::move(t));
}

/// Textbook Buchberger with no pair criteria and no interreduction shortcuts;
/// independent oracle for the production engine.
inline std::vector<Polynomial> bruteForceGroebner(const Ring& r, std::vector<Polynomial> gens) {
    engine::PolyCtx ctx{r.field(), r.nvars(), r.order()};
    std::vector<TermList> basis;
    for (auto& g : gens)
        if (!g.isZero()) basis.push_back(g.terms());
    for (auto& g : r.quotientGroebner()) basis.push_back(g.terms());
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t sz = basis.size();
        for (std::size_t i = 0; i < sz && !changed; ++i) {
            for (std::size_t j = i + 1; j < sz && !changed; ++j) {
                const Term& li = basis[i].front();
                const Term& lj = basis[j].front();
                Monomial l = Monomial::lcm(li.mon, lj.mon);
                TermList s = engine::subTL(
                    ctx,
                    engine::mulTermTL(ctx, basis[i],
                                      Term{l.dividedBy(li.mon), Scalar::one(ctx.field) / li.coef}),
                    engine::mulTermTL(ctx, basis[j],
                                      Term{l.dividedBy(lj.mon), Scalar::one(ctx.field) / lj.coef}));
                TermList rem = engine::normalFormTL(ctx, std::move(s), basis);
                if (!rem.empty()) {
                    basis.push_back(std::move(rem));
                    changed = true;
                }
            }
        }
    }
    std::vector<Polynomial> out;
    Ring amb = r.ambient();
    for (auto& b : basis) out.push_back(amb.makePoly(b));
    return out;
}

/// Normal form against an arbitrary generating-set-completed basis.
inline Polynomial bruteNormalForm(const Ring& r, const Polynomial& p,
                                  const std::vector<Polynomial>& basis) {
    engine::PolyCtx ctx{r.field(), r.nvars(), r.order()};
    std::vector<TermList> b;
    for (auto& g : basis) b.push_back(g.terms());
    return r.makePoly(engine::normalFormTL(ctx, p.terms(), b));
}

/// Koszul complex on one element, by hand: 0 -> R -e-> R -> 0.
inline FreeComplex koszulOne(const Ring& r, const Polynomial& e) {
    RingMatrix d(r, 1, 1);
    d.set(0, 0, e);
    return FreeComplex(r, 0, {1, 1}, {{1, d}});
}

/// Koszul complex on two elements, by hand.
inline FreeComplex koszulTwo(const Ring& r, const Polynomial& a, const Polynomial& b) {
    RingMatrix d1(r, 1, 2);
    d1.set(0, 0, a);
    d1.set(0, 1, b);
    RingMatrix d2(r, 2, 1);
    d2.set(0, 0, -b);
    d2.set(1, 0, a);
    return FreeComplex(r, 0, {1, 2, 1}, {{1, d1}, {2, d2}});
}

inline RingMatrix randomMatrix(Rng& rng, const Ring& r, int rows, int cols, int maxDeg,
                               int maxTerms = 2) {
    RingMatrix m(r, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (rng.below(3) != 0) m.set(i, j, randomPolynomial(rng, r, maxDeg, maxTerms));
    return m;
}

/// Random bounded free complex with d d = 0 guaranteed: the second
/// differential is assembled from syzygies of the first.
inline FreeComplex randomComplex(Rng& rng, const Ring& r, int span, int maxRank,
                                 int maxDeg) {
    if (span <= 0) return FreeComplex::zero(r);
    int lo = static_cast<int>(rng.below(3)) - 1;
    std::vector<int> ranks;
    for (int k = 0; k < span; ++k) ranks.push_back(1 + static_cast<int>(rng.below(maxRank)));
    std::map<int, RingMatrix> diffs;
    if (span >= 2) {
        RingMatrix d1 = randomMatrix(rng, r, ranks[0], ranks[1], maxDeg);
        if (!d1.isZero()) diffs[lo + 1] = d1;
        if (span >= 3) {
            RingMatrix s = syzygies(d1);
            RingMatrix mix = randomMatrix(rng, r, s.cols(), ranks[2], 1, 1);
            RingMatrix d2 = s * mix;
            if (!d2.isZero()) diffs[lo + 2] = d2;
        }
    }
    return FreeComplex(r, lo, std::move(ranks), std::move(diffs));
}

}  // namespace perfcx::testutil

#endif
