#include "perfcx/idealops.hpp"

#include <algorithm>

namespace perfcx {

bool idealMembership(const Polynomial& p, const Ideal& I) {
    if (!p.ring().sameAs(I.ring())) throw DataError("idealMembership: ring mismatch");
    engine::PolyCtx ctx{I.ring().field(), I.ring().nvars(), I.ring().order()};
    return engine::normalFormTL(ctx, p.terms(), I.groebner()).empty();
}

namespace {

/// Leading monomials of the reduced GB of (I + J), freshly computed under
/// degrevlex (dimension counts need a degree-compatible order).
std::vector<Monomial> leadingTermsDegrevlex(const Ideal& I, bool& unitIdeal) {
    const Ring& r = I.ring();
    engine::PolyCtx ctx{r.field(), r.nvars(), MonomialOrder{MonomialOrder::Kind::Degrevlex, {}}};
    std::vector<TermList> gens;
    for (auto& g : I.gens()) gens.push_back(g.terms());
    for (auto& g : r.quotientGroebner()) gens.push_back(g.terms());
    // terms of quotient-ring normal forms are valid ambient polynomials, but
    // they were sorted for the ring's order; renormalize for degrevlex
    for (auto& g : gens) g = engine::normalizeTL(ctx, std::move(g));
    auto gb = engine::reducedGroebnerTL(ctx, std::move(gens));
    unitIdeal = false;
    std::vector<Monomial> lts;
    for (auto& e : gb) {
        if (e[0].mon.isUnit()) unitIdeal = true;
        lts.push_back(e[0].mon);
    }
    return lts;
}

int dimensionFromLeadingTerms(int nvars, const std::vector<Monomial>& lts) {
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        // S = variables in mask; independent iff no leading term has support inside S
        bool independent = true;
        for (auto& m : lts) {
            bool inside = true;
            for (int v = 0; v < nvars; ++v) {
                if (m.exp(v) > 0 && !(mask & (1u << v))) { inside = false; break; }
            }
            if (inside) { independent = false; break; }
        }
        if (independent) best = std::max(best, static_cast<int>(__builtin_popcount(mask)));
    }
    return best;
}

}  // namespace

int krullDimension(const Ideal& I) {
    bool unit = false;
    auto lts = leadingTermsDegrevlex(I, unit);
    if (unit) return kDimNegativeInfinity;
    return dimensionFromLeadingTerms(I.ring().nvars(), lts);
}

int ringDimension(const Ring& r) { return krullDimension(Ideal(r, {})); }

HeightResult heightOf(const Ideal& I) {
    HeightResult out;
    out.equidimensionalityCaveat = !I.ring().declaredEquidimensional();
    int dimR = ringDimension(I.ring());
    int dimQ = krullDimension(I);
    out.value = dimQ == kDimNegativeInfinity ? kHeightInfinity : dimR - dimQ;
    return out;
}

bool radicalMembership(const Polynomial& p, const Ideal& I) {
    if (!p.ring().sameAs(I.ring())) throw DataError("radicalMembership: ring mismatch");
    if (p.isZero()) return !I.isUnitIdeal() ? idealMembership(p, I) : true;
    const Ring& r = I.ring();
    // auxiliary ring with one extra variable
    std::string tname = "t@rab";
    std::vector<std::string> vars = r.varNames();
    vars.push_back(tname);
    Ring aux = Ring::polynomialRing(r.field(), vars,
                                    MonomialOrder{MonomialOrder::Kind::Degrevlex, {}});
    const int n = r.nvars();
    auto lift = [&](const TermList& t) {
        TermList out;
        for (auto& tm : t) {
            std::vector<std::uint32_t> e = tm.mon.exps();
            e.push_back(0);
            out.push_back(Term{Monomial(std::move(e)), tm.coef});
        }
        return out;
    };
    std::vector<Polynomial> gens;
    for (auto& g : I.gens()) gens.push_back(aux.makePoly(lift(g.terms())));
    for (auto& g : r.quotientGroebner()) gens.push_back(aux.makePoly(lift(g.terms())));
    Polynomial t = aux.var(n);
    Polynomial one = aux.one();
    gens.push_back(one - t * aux.makePoly(lift(p.terms())));
    Ideal aug(aux, gens);
    return aug.isUnitIdeal();
}

Ideal minorsIdeal(const RingMatrix& A, int d) {
    const Ring& r = A.ring();
    if (d < 0) throw DataError("minor size must be nonnegative");
    if (d == 0) return Ideal(r, {r.one()});
    if (d > std::min(A.rows(), A.cols())) return Ideal(r, {});
    std::vector<Polynomial> minors;
    std::vector<int> rowsSel(d), colsSel(d);
    // enumerate all d-subsets of rows and columns
    std::vector<int> ri(d), ci(d);
    for (int i = 0; i < d; ++i) ri[i] = i;
    auto next = [](std::vector<int>& idx, int n) {
        int d2 = static_cast<int>(idx.size());
        int i = d2 - 1;
        while (i >= 0 && idx[i] == n - d2 + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < d2; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    };
    do {
        for (int i = 0; i < d; ++i) ci[i] = i;
        do {
            Polynomial m = determinant(A.selectRows(ri).selectColumns(ci));
            if (!m.isZero()) minors.push_back(m);
        } while (next(ci, A.cols()));
    } while (next(ri, A.rows()));
    return Ideal(r, minors);
}

Ideal submoduleQuotient(const RingMatrix& M, const RingMatrix& target) {
    if (target.cols() != 1 || target.rows() != M.rows())
        throw DataError("submoduleQuotient expects a single column target");
    RingMatrix aug = target.hstack(M);
    RingMatrix syz = syzygies(aug);
    std::vector<Polynomial> gens;
    for (int j = 0; j < syz.cols(); ++j) {
        Polynomial a = syz.at(0, j);
        if (!a.isZero()) gens.push_back(a);
    }
    return Ideal(M.ring(), gens);
}

Ideal idealIntersection(const Ideal& a, const Ideal& b) {
    const Ring& r = a.ring();
    if (!r.sameAs(b.ring())) throw DataError("idealIntersection: ring mismatch");
    if (a.isZeroIdeal() || b.isZeroIdeal()) return Ideal(r, {});
    // an element of the intersection is sum u_i f_i = sum v_j g_j; read the
    // f-part off the syzygies of the combined row [f_1.. g_1..]
    int na = static_cast<int>(a.gens().size());
    int nb = static_cast<int>(b.gens().size());
    RingMatrix row(r, 1, na + nb);
    for (int i = 0; i < na; ++i) row.set(0, i, a.gens()[i]);
    for (int j = 0; j < nb; ++j) row.set(0, na + j, -b.gens()[j]);
    RingMatrix syz = syzygies(row);
    std::vector<Polynomial> gens;
    for (int j = 0; j < syz.cols(); ++j) {
        Polynomial e = r.zero();
        for (int i = 0; i < na; ++i) e = e + syz.at(i, j) * a.gens()[i];
        if (!e.isZero()) gens.push_back(e);
    }
    return Ideal(r, gens);
}

Ideal annihilatorOfCokernel(const RingMatrix& relations) {
    const Ring& r = relations.ring();
    const int g = relations.rows();
    if (g == 0) return Ideal(r, {r.one()});
    std::optional<Ideal> acc;
    for (int i = 0; i < g; ++i) {
        RingMatrix ei(r, g, 1);
        ei.set(i, 0, r.one());
        Ideal qi = submoduleQuotient(relations, ei);
        acc = acc ? idealIntersection(*acc, qi) : qi;
        if (acc->isZeroIdeal()) break;  // intersection can only shrink
    }
    return *acc;
}

SopCertificate certifySop(const Ring& r, const std::vector<Polynomial>& xs) {
    SopCertificate cert;
    cert.ringDim = ringDimension(r);
    cert.quotientDim = krullDimension(Ideal(r, xs));
    int c = static_cast<int>(xs.size());
    cert.isSop = cert.quotientDim == 0 && c == cert.ringDim;
    cert.isPartialSop =
        cert.quotientDim != kDimNegativeInfinity && cert.quotientDim == cert.ringDim - c;
    return cert;
}

}  // namespace perfcx
