#include "perfcx/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace perfcx {
namespace engine {

namespace {

struct Counter {
    std::size_t spairs = 0;
    std::size_t terms = 0;
    void addTerms(std::size_t n) {
        terms += n;
        if (terms > globalLimits().maxTerms)
            throw ResourceError("term cap exceeded in Groebner computation");
    }
    void addPair() {
        if (++spairs > globalLimits().maxSPairs)
            throw ResourceError("S-pair cap exceeded in Groebner computation");
    }
};

int comparePOT(const MonomialOrder& order, int compA, const Monomial& monA, int compB,
               const Monomial& monB) {
    if (compA != compB) return compA < compB ? 1 : -1;  // lower component dominates
    return order.compare(monA, monB);
}

}  // namespace

TermList normalizeTL(const PolyCtx& ctx, TermList raw) {
    std::sort(raw.begin(), raw.end(), [&](const Term& a, const Term& b) {
        return ctx.order.compare(a.mon, b.mon) > 0;
    });
    TermList out;
    for (auto& t : raw) {
        if (t.coef.isZero()) continue;
        if (!out.empty() && out.back().mon == t.mon) {
            out.back().coef = out.back().coef + t.coef;
            if (out.back().coef.isZero()) out.pop_back();
        } else {
            out.push_back(t);
        }
    }
    return out;
}

TermList addTL(const PolyCtx& ctx, const TermList& a, const TermList& b) {
    TermList out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = ctx.order.compare(a[i].mon, b[j].mon);
        if (c > 0) out.push_back(a[i++]);
        else if (c < 0) out.push_back(b[j++]);
        else {
            Scalar s = a[i].coef + b[j].coef;
            if (!s.isZero()) out.push_back(Term{a[i].mon, s});
            ++i; ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

TermList scaleTL(const TermList& a, const Scalar& c) {
    if (c.isZero()) return {};
    TermList out;
    out.reserve(a.size());
    for (auto& t : a) out.push_back(Term{t.mon, t.coef * c});
    return out;
}

TermList subTL(const PolyCtx& ctx, const TermList& a, const TermList& b) {
    return addTL(ctx, a, scaleTL(b, -Scalar::one(ctx.field)));
}

TermList mulTermTL(const PolyCtx&, const TermList& a, const Term& t) {
    if (t.coef.isZero()) return {};
    TermList out;
    out.reserve(a.size());
    for (auto& u : a) out.push_back(Term{u.mon * t.mon, u.coef * t.coef});
    return out;
}

TermList mulTL(const PolyCtx& ctx, const TermList& a, const TermList& b) {
    TermList acc;
    for (auto& t : b) acc = addTL(ctx, acc, mulTermTL(ctx, a, t));
    return acc;
}

TermList normalFormTL(const PolyCtx& ctx, TermList p, std::span<const TermList> basis,
                      std::vector<TermList>* quotients) {
    if (quotients) quotients->assign(basis.size(), TermList{});
    Counter counter;
    TermList remainder;
    TermList work = std::move(p);
    while (!work.empty()) {
        counter.addTerms(1);
        const Term& lead = work.front();
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].empty()) continue;
            const Term& bl = basis[k].front();
            if (bl.mon.divides(lead.mon)) {
                Term factor{lead.mon.dividedBy(bl.mon), lead.coef / bl.coef};
                work = subTL(ctx, work, mulTermTL(ctx, basis[k], factor));
                if (quotients)
                    (*quotients)[k] = addTL(ctx, (*quotients)[k], TermList{factor});
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(lead);
            work.erase(work.begin());
        }
    }
    return remainder;
}

// ---------- module elements ----------

namespace {

ModElem normalizeMod(const PolyCtx& ctx, ModElem raw) {
    std::sort(raw.begin(), raw.end(), [&](const ModTerm& a, const ModTerm& b) {
        return comparePOT(ctx.order, a.comp, a.mon, b.comp, b.mon) > 0;
    });
    ModElem out;
    for (auto& t : raw) {
        if (t.coef.isZero()) continue;
        if (!out.empty() && out.back().comp == t.comp && out.back().mon == t.mon) {
            out.back().coef = out.back().coef + t.coef;
            if (out.back().coef.isZero()) out.pop_back();
        } else {
            out.push_back(t);
        }
    }
    return out;
}

ModElem addMod(const PolyCtx& ctx, const ModElem& a, const ModElem& b) {
    ModElem out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = comparePOT(ctx.order, a[i].comp, a[i].mon, b[j].comp, b[j].mon);
        if (c > 0) out.push_back(a[i++]);
        else if (c < 0) out.push_back(b[j++]);
        else {
            Scalar s = a[i].coef + b[j].coef;
            if (!s.isZero()) out.push_back(ModTerm{a[i].comp, a[i].mon, s});
            ++i; ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

ModElem scaleMod(const ModElem& a, const Scalar& c) {
    if (c.isZero()) return {};
    ModElem out;
    out.reserve(a.size());
    for (auto& t : a) out.push_back(ModTerm{t.comp, t.mon, t.coef * c});
    return out;
}

ModElem mulTermMod(const ModElem& a, const Term& t) {
    if (t.coef.isZero()) return {};
    ModElem out;
    out.reserve(a.size());
    for (auto& u : a) out.push_back(ModTerm{u.comp, u.mon * t.mon, u.coef * t.coef});
    return out;
}

/// Full reduction by an explicit list, optionally skipping one index.
ModElem reduceByList(const PolyCtx& ctx, ModElem v, const std::vector<ModElem>& basis,
                     int skip, std::vector<TermList>* coeffs, Counter& counter) {
    if (coeffs) coeffs->assign(basis.size(), TermList{});
    ModElem remainder;
    ModElem work = std::move(v);
    while (!work.empty()) {
        counter.addTerms(1);
        const ModTerm& lead = work.front();
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (static_cast<int>(k) == skip || basis[k].empty()) continue;
            const ModTerm& bl = basis[k].front();
            if (bl.comp == lead.comp && bl.mon.divides(lead.mon)) {
                Term factor{lead.mon.dividedBy(bl.mon), lead.coef / bl.coef};
                work = addMod(ctx, work, scaleMod(mulTermMod(basis[k], factor),
                                                  -Scalar::one(ctx.field)));
                if (coeffs)
                    (*coeffs)[k] = addTL(ctx, (*coeffs)[k], TermList{factor});
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(lead);
            work.erase(work.begin());
        }
    }
    return remainder;
}

struct PairKey {
    long degree;
    std::vector<std::uint32_t> lcm;
    int i, j;
    bool operator<(const PairKey& o) const {
        return std::tie(degree, lcm, i, j) < std::tie(o.degree, o.lcm, o.i, o.j);
    }
};

PairKey makePairKey(const std::vector<ModElem>& basis, int i, int j) {
    Monomial l = Monomial::lcm(basis[i].front().mon, basis[j].front().mon);
    return PairKey{l.degree(), l.exps(), i, j};
}

}  // namespace

ModuleGB moduleGroebner(const PolyCtx& ctx, int comps, std::vector<ModElem> gens,
                        bool keepReps) {
    Counter counter;
    ModuleGB out;
    out.ctx = ctx;
    out.comps = comps;

    const std::size_t ngens = gens.size();
    std::vector<ModElem> basis;
    std::vector<std::vector<TermList>> reps;
    for (std::size_t i = 0; i < ngens; ++i) {
        ModElem g = normalizeMod(ctx, gens[i]);
        if (g.empty()) continue;
        basis.push_back(std::move(g));
        if (keepReps) {
            std::vector<TermList> r(ngens);
            r[i] = TermList{Term{Monomial::unit(ctx.nvars), Scalar::one(ctx.field)}};
            reps.push_back(std::move(r));
        }
    }

    std::set<PairKey> pairs;
    auto addPairsFor = [&](int j) {
        for (int i = 0; i < j; ++i)
            if (basis[i].front().comp == basis[j].front().comp)
                pairs.insert(makePairKey(basis, i, j));
    };
    for (std::size_t j = 0; j < basis.size(); ++j) addPairsFor(static_cast<int>(j));

    auto repCombine = [&](const std::vector<TermList>& ra, const Term& fa,
                          const std::vector<TermList>& rb, const Term& fb,
                          const std::vector<TermList>* qs) {
        // rep of fa*a - fb*b - sum q_k basis_k
        std::vector<TermList> r(ngens);
        for (std::size_t i = 0; i < ngens; ++i) {
            TermList acc = mulTermTL(ctx, ra[i], fa);
            acc = subTL(ctx, acc, mulTermTL(ctx, rb[i], fb));
            if (qs)
                for (std::size_t k = 0; k < qs->size(); ++k)
                    if (!(*qs)[k].empty())
                        acc = subTL(ctx, acc, mulTL(ctx, (*qs)[k], reps[k][i]));
            r[i] = std::move(acc);
        }
        return r;
    };

    while (!pairs.empty()) {
        counter.addPair();
        PairKey key = *pairs.begin();
        pairs.erase(pairs.begin());
        const ModElem& f = basis[key.i];
        const ModElem& g = basis[key.j];
        const ModTerm& lf = f.front();
        const ModTerm& lg = g.front();
        Monomial l = Monomial::lcm(lf.mon, lg.mon);
        // product criterion: valid in the ideal case only
        if (comps == 1 && l == lf.mon * lg.mon) continue;
        Term fa{l.dividedBy(lf.mon), Scalar::one(ctx.field) / lf.coef};
        Term fb{l.dividedBy(lg.mon), Scalar::one(ctx.field) / lg.coef};
        ModElem s = addMod(ctx, mulTermMod(f, fa),
                           scaleMod(mulTermMod(g, fb), -Scalar::one(ctx.field)));
        std::vector<TermList> qs;
        ModElem r = reduceByList(ctx, std::move(s), basis, -1,
                                 keepReps ? &qs : nullptr, counter);
        if (r.empty()) continue;
        if (keepReps) reps.push_back(repCombine(reps[key.i], fa, reps[key.j], fb, &qs));
        basis.push_back(std::move(r));
        addPairsFor(static_cast<int>(basis.size()) - 1);
    }

    // minimal basis: drop elements whose lead is divisible by another's lead
    std::vector<int> keep;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        bool dominated = false;
        for (std::size_t m = 0; m < basis.size(); ++m) {
            if (m == k) continue;
            const ModTerm& lmk = basis[k].front();
            const ModTerm& lmm = basis[m].front();
            if (lmm.comp != lmk.comp || !lmm.mon.divides(lmk.mon)) continue;
            if (lmm.mon == lmk.mon) {
                // identical leads: keep the earlier one
                if (m < k) { dominated = true; break; }
            } else {
                dominated = true;
                break;
            }
        }
        if (!dominated) keep.push_back(static_cast<int>(k));
    }
    std::vector<ModElem> minimal;
    std::vector<std::vector<TermList>> minReps;
    for (int k : keep) {
        minimal.push_back(basis[k]);
        if (keepReps) minReps.push_back(reps[k]);
    }

    // interreduce tails and make monic
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<TermList> qs;
        ModElem r = reduceByList(ctx, minimal[k], minimal, static_cast<int>(k),
                                 keepReps ? &qs : nullptr, counter);
        if (keepReps) {
            for (std::size_t m = 0; m < minimal.size(); ++m) {
                if (qs[m].empty()) continue;
                for (std::size_t i = 0; i < ngens; ++i)
                    minReps[k][i] = subTL(ctx, minReps[k][i],
                                          mulTL(ctx, qs[m], minReps[m][i]));
            }
        }
        Scalar lc = r.front().coef;  // r is nonzero: its lead was not reducible
        minimal[k] = scaleMod(r, lc.inverse());
        if (keepReps)
            for (std::size_t i = 0; i < ngens; ++i)
                minReps[k][i] = scaleTL(minReps[k][i], lc.inverse());
    }

    // deterministic final order: ascending by leading (component, monomial)
    std::vector<int> perm(minimal.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        const ModTerm& la = minimal[a].front();
        const ModTerm& lb = minimal[b].front();
        return comparePOT(ctx.order, la.comp, la.mon, lb.comp, lb.mon) < 0;
    });
    for (int k : perm) {
        out.basis.push_back(std::move(minimal[k]));
        if (keepReps) out.reps.push_back(std::move(minReps[k]));
    }
    return out;
}

ModElem moduleNormalForm(const PolyCtx& ctx, const ModuleGB& gb, ModElem v,
                         std::vector<TermList>* coeffs) {
    Counter counter;
    return reduceByList(ctx, normalizeMod(ctx, std::move(v)), gb.basis, -1, coeffs, counter);
}

std::vector<std::vector<TermList>> moduleSyzygies(const PolyCtx& ctx, int comps,
                                                  const std::vector<ModElem>& gensIn) {
    Counter counter;
    const std::size_t n = gensIn.size();
    std::vector<ModElem> gens;
    std::vector<std::size_t> liveIndex;
    std::vector<std::size_t> zeroIndex;
    for (std::size_t i = 0; i < n; ++i) {
        ModElem g = normalizeMod(ctx, gensIn[i]);
        if (g.empty()) zeroIndex.push_back(i);
        else {
            liveIndex.push_back(i);
            gens.push_back(std::move(g));
        }
    }

    std::vector<std::vector<TermList>> syz;  // rows over the full original index set
    auto expand = [&](const std::vector<TermList>& live) {
        std::vector<TermList> full(n);
        for (std::size_t i = 0; i < live.size(); ++i) full[liveIndex[i]] = live[i];
        return full;
    };
    for (std::size_t z : zeroIndex) {
        std::vector<TermList> row(n);
        row[z] = TermList{Term{Monomial::unit(ctx.nvars), Scalar::one(ctx.field)}};
        syz.push_back(std::move(row));
    }
    if (gens.empty()) return syz;

    ModuleGB gb = moduleGroebner(ctx, comps, gens, /*keepReps=*/true);
    const std::size_t t = gb.basis.size();

    // Schreyer syzygies of the completed basis, transported to the generators
    for (std::size_t a = 0; a < t; ++a) {
        for (std::size_t b = a + 1; b < t; ++b) {
            const ModTerm& la = gb.basis[a].front();
            const ModTerm& lb = gb.basis[b].front();
            if (la.comp != lb.comp) continue;
            Monomial l = Monomial::lcm(la.mon, lb.mon);
            Term fa{l.dividedBy(la.mon), Scalar::one(ctx.field)};
            Term fb{l.dividedBy(lb.mon), Scalar::one(ctx.field)};
            ModElem s = addMod(ctx, mulTermMod(gb.basis[a], fa),
                               scaleMod(mulTermMod(gb.basis[b], fb), -Scalar::one(ctx.field)));
            std::vector<TermList> qs;
            ModElem r = reduceByList(ctx, std::move(s), gb.basis, -1, &qs, counter);
            if (!r.empty())
                throw std::logic_error("S-pair of a Groebner basis did not reduce to zero");
            // w = fa e_a - fb e_b - qs as coefficients on the basis
            std::vector<TermList> w(t);
            w[a] = TermList{fa};
            w[b] = subTL(ctx, w[b], TermList{fb});
            for (std::size_t k = 0; k < t; ++k) w[k] = subTL(ctx, w[k], qs[k]);
            std::vector<TermList> row(gens.size());
            for (std::size_t i = 0; i < gens.size(); ++i) {
                TermList acc;
                for (std::size_t k = 0; k < t; ++k)
                    if (!w[k].empty() && !gb.reps[k][i].empty())
                        acc = addTL(ctx, acc, mulTL(ctx, w[k], gb.reps[k][i]));
                row[i] = std::move(acc);
            }
            syz.push_back(expand(row));
        }
    }

    // rows of (I - V U): how each generator reduces over the basis
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<TermList> v;
        ModElem r = moduleNormalForm(ctx, gb, gens[i], &v);
        if (!r.empty())
            throw std::logic_error("generator did not reduce to zero over its own basis");
        std::vector<TermList> row(gens.size());
        row[i] = TermList{Term{Monomial::unit(ctx.nvars), Scalar::one(ctx.field)}};
        for (std::size_t k = 0; k < t; ++k) {
            if (v[k].empty()) continue;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (!gb.reps[k][j].empty())
                    row[j] = subTL(ctx, row[j], mulTL(ctx, v[k], gb.reps[k][j]));
        }
        bool allZero = true;
        for (auto& e : row)
            if (!e.empty()) { allZero = false; break; }
        if (!allZero) syz.push_back(expand(row));
    }
    return syz;
}

}  // namespace engine

// ---------- public wrappers ----------

namespace {

engine::PolyCtx ctxOf(const Ring& r) {
    return engine::PolyCtx{r.field(), r.nvars(), r.order()};
}

std::vector<TermList> quotientPadding(const Ring& r) {
    std::vector<TermList> out;
    for (auto& g : r.quotientGroebner()) out.push_back(g.terms());
    return out;
}

engine::ModElem columnToModElem(const RingMatrix& a, int j) {
    engine::ModElem v;
    for (int i = 0; i < a.rows(); ++i) {
        Polynomial p = a.at(i, j);
        for (auto& t : p.terms()) v.push_back(engine::ModTerm{i, t.mon, t.coef});
    }
    return v;
}

/// Columns of A plus j*e_c padding for the quotient ideal; the first
/// A.cols() generators are the genuine ones.
std::vector<engine::ModElem> moduleGensWithPadding(const RingMatrix& a) {
    std::vector<engine::ModElem> gens;
    for (int j = 0; j < a.cols(); ++j) gens.push_back(columnToModElem(a, j));
    auto pad = quotientPadding(a.ring());
    for (int c = 0; c < a.rows(); ++c)
        for (auto& p : pad) {
            engine::ModElem v;
            for (auto& t : p) v.push_back(engine::ModTerm{c, t.mon, t.coef});
            gens.push_back(std::move(v));
        }
    return gens;
}

}  // namespace

GroebnerBasis::GroebnerBasis(Ring ring, std::vector<TermList> ambientBasis)
    : ring_(std::move(ring)), basis_(std::move(ambientBasis)) {}

std::vector<Polynomial> GroebnerBasis::elementsInAmbient() const {
    std::vector<Polynomial> out;
    Ring amb = ring_.ambient();
    for (auto& t : basis_) out.push_back(amb.makePoly(t));
    return out;
}

Polynomial GroebnerBasis::normalForm(const Polynomial& p) const {
    TermList r = engine::normalFormTL(ctxOf(ring_), p.terms(), basis_);
    return ring_.makePoly(std::move(r));
}

bool GroebnerBasis::reducesToZero(const Polynomial& p) const {
    return engine::normalFormTL(ctxOf(ring_), p.terms(), basis_).empty();
}

bool GroebnerBasis::isUnitIdeal() const {
    return basis_.size() == 1 && basis_[0].size() == 1 && basis_[0][0].mon.isUnit();
}

std::vector<TermList> engine::reducedGroebnerTL(const PolyCtx& ctx,
                                                std::vector<TermList> gens) {
    std::vector<ModElem> mgens;
    for (auto& g : gens) {
        ModElem v;
        for (auto& t : g) v.push_back(ModTerm{0, t.mon, t.coef});
        mgens.push_back(std::move(v));
    }
    ModuleGB gb = moduleGroebner(ctx, 1, std::move(mgens), /*keepReps=*/false);
    std::vector<TermList> out;
    for (auto& e : gb.basis) {
        TermList p;
        for (auto& t : e) p.push_back(Term{t.mon, t.coef});
        out.push_back(std::move(p));
    }
    return out;
}

GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& gens) {
    std::vector<TermList> raw;
    for (auto& g : gens) {
        if (!g.ring().sameAs(ring) && !g.ring().sameAs(ring.ambient()))
            throw DataError("buchberger: generator from a different ring");
        if (!g.isZero()) raw.push_back(g.terms());
    }
    for (auto& g : ring.quotientGroebner()) raw.push_back(g.terms());
    return GroebnerBasis(ring, engine::reducedGroebnerTL(ctxOf(ring), std::move(raw)));
}

Polynomial normalForm(const Polynomial& p, const GroebnerBasis& basis) {
    return basis.normalForm(p);
}

LinearSolution solveLinear(const RingMatrix& A, const RingMatrix& B) {
    if (!A.ring().sameAs(B.ring())) throw DataError("solveLinear: ring mismatch");
    if (A.rows() != B.rows()) throw DataError("solveLinear: row count mismatch");
    const Ring& ring = A.ring();
    LinearSolution out;
    out.solution = RingMatrix(ring, A.cols(), B.cols());
    if (B.isZero()) {
        out.solvable = true;
        return out;
    }
    if (A.rows() == 0) {
        out.solvable = true;  // B is 0 x k
        return out;
    }
    auto ctx = ctxOf(ring);
    auto gens = moduleGensWithPadding(A);
    engine::ModuleGB gb = engine::moduleGroebner(ctx, A.rows(), gens, /*keepReps=*/true);
    for (int j = 0; j < B.cols(); ++j) {
        engine::ModElem b = columnToModElem(B, j);
        std::vector<TermList> coeffs;
        engine::ModElem r = engine::moduleNormalForm(ctx, gb, std::move(b), &coeffs);
        if (!r.empty()) {
            out.solvable = false;
            out.failingColumn = j;
            return out;
        }
        for (int i = 0; i < A.cols(); ++i) {
            TermList acc;
            for (std::size_t k = 0; k < gb.basis.size(); ++k)
                if (!coeffs[k].empty() && !gb.reps[k][i].empty())
                    acc = engine::addTL(ctx, acc, engine::mulTL(ctx, coeffs[k], gb.reps[k][i]));
            out.solution.set(i, j, ring.makePoly(std::move(acc)));
        }
    }
    out.solvable = true;
    return out;
}

RingMatrix syzygies(const RingMatrix& A) {
    const Ring& ring = A.ring();
    if (A.rows() == 0) return RingMatrix::identity(ring, A.cols());
    auto ctx = ctxOf(ring);
    auto gens = moduleGensWithPadding(A);
    auto rows = engine::moduleSyzygies(ctx, A.rows(), gens);
    // project to the genuine generators and assemble columns
    std::vector<std::vector<Polynomial>> cols;
    for (auto& row : rows) {
        std::vector<Polynomial> col(A.cols());
        bool nonzero = false;
        for (int i = 0; i < A.cols(); ++i) {
            col[i] = ring.makePoly(row[i]);
            if (!col[i].isZero()) nonzero = true;
        }
        if (nonzero) cols.push_back(std::move(col));
    }
    RingMatrix S(ring, A.cols(), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < A.cols(); ++i) S.set(i, static_cast<int>(j), cols[j][i]);
    if (!(A * S).isZero())
        throw std::logic_error("syzygy columns do not annihilate the matrix");
    return S;
}

}  // namespace perfcx
