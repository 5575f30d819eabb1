#include "perfcx/complex.hpp"

#include <algorithm>

namespace perfcx {

namespace {

int divFloor(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

int parity(int k) { return ((k % 2) + 2) % 2; }

/// Suspension sign (-1)^i.
int suspSign(int i) { return parity(i) == 0 ? 1 : -1; }

/// Dual sign s(m) = (-1)^floor(m/2); s(m) s(1-m) = 1, so dual is a strict involution.
int dualSign(int m) { return parity(divFloor(m, 2)) == 0 ? 1 : -1; }

/// Evaluation sign on the pairing block (dual F)_m tensor F_{-m}, determined
/// by the chain condition: sigma(m+1) = sigma(m) * (-1)^m * s(m+1).
int evalSign(int m) {
    int s = 1;
    if (m >= 0) {
        for (int k = 0; k < m; ++k) s *= suspSign(k) * dualSign(k + 1);
    } else {
        for (int k = 0; k > m; --k) s *= suspSign(k - 1) * dualSign(k);
    }
    return s;
}

}  // namespace

// ---------- FreeComplex ----------

FreeComplex::FreeComplex(Ring ring, int lo, std::vector<int> ranks,
                         std::map<int, RingMatrix> diffs)
    : ring_(std::move(ring)), lo_(lo), hi_(lo + static_cast<int>(ranks.size()) - 1),
      ranks_(std::move(ranks)) {
    for (int r : ranks_)
        if (r < 0) throw DataError("negative rank in complex");
    // trim zero ranks at both ends
    while (!ranks_.empty() && ranks_.front() == 0) { ranks_.erase(ranks_.begin()); ++lo_; }
    while (!ranks_.empty() && ranks_.back() == 0) { ranks_.pop_back(); --hi_; }
    if (ranks_.empty()) { lo_ = 0; hi_ = -1; }
    for (auto& [n, m] : diffs) {
        if (!m.valid()) throw DataError("invalid differential matrix");
        if (!m.ring().sameAs(ring_)) throw DataError("differential over a different ring");
        if (m.rows() != rank(n - 1) || m.cols() != rank(n))
            throw DataError("differential shape mismatch at degree " + std::to_string(n));
        if (!m.isZero()) diffs_[n] = m;
    }
    for (auto& [n, m] : diffs_) {
        auto up = diffs_.find(n + 1);
        if (up != diffs_.end() && !(m * up->second).isZero())
            throw DataError("differential does not square to zero at degree " +
                            std::to_string(n));
    }
}

FreeComplex FreeComplex::zero(const Ring& r) { return FreeComplex(r, 0, {}, {}); }

FreeComplex FreeComplex::concentrated(const Ring& r, int degree, int rank) {
    return FreeComplex(r, degree, {rank}, {});
}

int FreeComplex::rank(int n) const {
    if (n < lo_ || n > hi_) return 0;
    return ranks_[n - lo_];
}

RingMatrix FreeComplex::diff(int n) const {
    auto it = diffs_.find(n);
    if (it != diffs_.end()) return it->second;
    return RingMatrix(ring_, rank(n - 1), rank(n));
}

int FreeComplex::totalRank() const {
    int t = 0;
    for (int r : ranks_) t += r;
    return t;
}

bool FreeComplex::operator==(const FreeComplex& o) const {
    if (!ring_.sameAs(o.ring_) || lo_ != o.lo_ || hi_ != o.hi_ || ranks_ != o.ranks_)
        return false;
    for (int n = lo_ + 1; n <= hi_; ++n)
        if (diff(n) != o.diff(n)) return false;
    return true;
}

std::string FreeComplex::describeRanks() const {
    if (isZero()) return "0";
    std::string s;
    for (int n = lo_; n <= hi_; ++n) {
        if (n > lo_) s += ",";
        s += std::to_string(rank(n));
    }
    return "[" + std::to_string(lo_) + ".." + std::to_string(hi_) + "]: " + s;
}

// ---------- ChainMap ----------

ChainMap::ChainMap(FreeComplex source, FreeComplex target, std::map<int, RingMatrix> comps)
    : source_(std::move(source)), target_(std::move(target)) {
    if (!source_.ring().sameAs(target_.ring())) throw DataError("chain map ring mismatch");
    for (auto& [n, m] : comps) {
        if (m.rows() != target_.rank(n) || m.cols() != source_.rank(n))
            throw DataError("chain map component shape mismatch at degree " + std::to_string(n));
        if (!m.isZero()) comps_[n] = m;
    }
    int lo = std::min(source_.lo(), target_.lo());
    int hi = std::max(source_.hi(), target_.hi());
    for (int n = lo; n <= hi + 1; ++n) {
        if (!(target_.diff(n) * comp(n) == comp(n - 1) * source_.diff(n)))
            throw DataError("chain map does not commute with differentials at degree " +
                            std::to_string(n));
    }
}

ChainMap ChainMap::zero(const FreeComplex& source, const FreeComplex& target) {
    return ChainMap(source, target, {});
}

ChainMap ChainMap::identity(const FreeComplex& f) {
    std::map<int, RingMatrix> comps;
    for (int n = f.lo(); n <= f.hi(); ++n)
        if (f.rank(n) > 0) comps[n] = RingMatrix::identity(f.ring(), f.rank(n));
    return ChainMap(f, f, std::move(comps));
}

ChainMap ChainMap::scalarMultiple(const FreeComplex& f, const Polynomial& c) {
    std::map<int, RingMatrix> comps;
    for (int n = f.lo(); n <= f.hi(); ++n)
        if (f.rank(n) > 0) comps[n] = RingMatrix::identity(f.ring(), f.rank(n)).scaled(c);
    return ChainMap(f, f, std::move(comps));
}

RingMatrix ChainMap::comp(int n) const {
    auto it = comps_.find(n);
    if (it != comps_.end()) return it->second;
    return RingMatrix(source_.ring(), target_.rank(n), source_.rank(n));
}

bool ChainMap::isZeroMap() const { return comps_.empty(); }

ChainMap ChainMap::compose(const ChainMap& inner) const {
    if (!(inner.target_ == source_)) throw DataError("chain map composition mismatch");
    std::map<int, RingMatrix> comps;
    int lo = std::min(inner.source_.lo(), target_.lo());
    int hi = std::max(inner.source_.hi(), target_.hi());
    for (int n = lo; n <= hi; ++n) {
        RingMatrix m = comp(n) * inner.comp(n);
        if (!m.isZero()) comps[n] = m;
    }
    return ChainMap(inner.source_, target_, std::move(comps));
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_))
        throw DataError("chain map sum shape mismatch");
    std::map<int, RingMatrix> comps;
    int lo = std::min(source_.lo(), target_.lo());
    int hi = std::max(source_.hi(), target_.hi());
    for (int n = lo; n <= hi; ++n) {
        RingMatrix m = comp(n) + o.comp(n);
        if (!m.isZero()) comps[n] = m;
    }
    return ChainMap(source_, target_, std::move(comps));
}

ChainMap ChainMap::operator-(const ChainMap& o) const { return *this + (-o); }

ChainMap ChainMap::operator-() const {
    std::map<int, RingMatrix> comps;
    for (auto& [n, m] : comps_) comps[n] = -m;
    return ChainMap(source_, target_, std::move(comps));
}

bool ChainMap::operator==(const ChainMap& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_)) return false;
    if (comps_.size() != o.comps_.size()) return false;
    for (auto& [n, m] : comps_) {
        auto it = o.comps_.find(n);
        if (it == o.comps_.end() || !(it->second == m)) return false;
    }
    return true;
}

RingMatrix Homotopy::at(int n) const {
    auto it = comp.find(n);
    if (it != comp.end()) return it->second;
    return RingMatrix(source.ring(), target.rank(n + 1), source.rank(n));
}

// ---------- functorial calculus ----------

int spanOf(const FreeComplex& f) {
    if (f.isZero()) return kSpanNegativeInfinity;
    return f.hi() - f.lo() + 1;
}

FreeComplex suspend(const FreeComplex& f, int i) {
    if (f.isZero()) return f;
    std::vector<int> ranks;
    for (int n = f.lo(); n <= f.hi(); ++n) ranks.push_back(f.rank(n));
    std::map<int, RingMatrix> diffs;
    for (int n = f.lo() + 1; n <= f.hi(); ++n) {
        RingMatrix d = f.diff(n);
        if (!d.isZero()) diffs[n + i] = i % 2 == 0 ? d : -d;
    }
    return FreeComplex(f.ring(), f.lo() + i, std::move(ranks), std::move(diffs));
}

ChainMap suspendMap(const ChainMap& f, int i) {
    std::map<int, RingMatrix> comps;
    int lo = std::min(f.source().lo(), f.target().lo());
    int hi = std::max(f.source().hi(), f.target().hi());
    for (int n = lo; n <= hi; ++n) {
        RingMatrix m = f.comp(n);
        if (!m.isZero()) comps[n + i] = m;
    }
    return ChainMap(suspend(f.source(), i), suspend(f.target(), i), std::move(comps));
}

FreeComplex dual(const FreeComplex& f) {
    if (f.isZero()) return f;
    int lo = -f.hi(), hi = -f.lo();
    std::vector<int> ranks;
    for (int m = lo; m <= hi; ++m) ranks.push_back(f.rank(-m));
    std::map<int, RingMatrix> diffs;
    for (int m = lo + 1; m <= hi; ++m) {
        RingMatrix d = f.diff(1 - m);  // F_{1-m} -> F_{-m}
        if (d.isZero()) continue;
        RingMatrix t = d.transpose();
        diffs[m] = dualSign(m) == 1 ? t : -t;
    }
    return FreeComplex(f.ring(), lo, std::move(ranks), std::move(diffs));
}

std::vector<std::tuple<int, int, int, int>> tensorBlocks(const FreeComplex& f,
                                                         const FreeComplex& g, int n) {
    std::vector<std::tuple<int, int, int, int>> blocks;
    int offset = 0;
    for (int i = std::max(f.lo(), n - g.hi()); i <= std::min(f.hi(), n - g.lo()); ++i) {
        int rf = f.rank(i), rg = g.rank(n - i);
        if (rf == 0 || rg == 0) continue;
        blocks.emplace_back(i, offset, rf, rg);
        offset += rf * rg;
    }
    return blocks;
}

FreeComplex tensor(const FreeComplex& f, const FreeComplex& g) {
    const Ring& ring = f.ring();
    if (!ring.sameAs(g.ring())) throw DataError("tensor: ring mismatch");
    if (f.isZero() || g.isZero()) return FreeComplex::zero(ring);
    int lo = f.lo() + g.lo(), hi = f.hi() + g.hi();
    std::vector<int> ranks;
    for (int n = lo; n <= hi; ++n) {
        int r = 0;
        for (auto& [i, off, rf, rg] : tensorBlocks(f, g, n)) r += rf * rg;
        ranks.push_back(r);
    }
    std::map<int, RingMatrix> diffs;
    for (int n = lo + 1; n <= hi; ++n) {
        auto colBlocks = tensorBlocks(f, g, n);
        auto rowBlocks = tensorBlocks(f, g, n - 1);
        std::map<int, int> rowOff;
        int rows = 0, cols = 0;
        for (auto& [i, off, rf, rg] : rowBlocks) { rowOff[i] = off; rows += rf * rg; }
        for (auto& [i, off, rf, rg] : colBlocks) cols += rf * rg;
        RingMatrix d(ring, rows, cols);
        for (auto& [i, coff, rf, rg] : colBlocks) {
            int j = n - i;
            // component into F_{i-1} tensor G_j
            if (auto it = rowOff.find(i - 1); it != rowOff.end()) {
                RingMatrix blk =
                    RingMatrix::kronecker(f.diff(i), RingMatrix::identity(ring, rg));
                for (auto& [rc, p] : blk.entries())
                    d.set(it->second + rc.first, coff + rc.second, p);
            }
            // component into F_i tensor G_{j-1}, with the Koszul sign (-1)^i
            if (auto it = rowOff.find(i); it != rowOff.end()) {
                RingMatrix blk =
                    RingMatrix::kronecker(RingMatrix::identity(ring, rf), g.diff(j));
                if (suspSign(i) < 0) blk = -blk;
                for (auto& [rc, p] : blk.entries())
                    d.set(it->second + rc.first, coff + rc.second, p);
            }
        }
        if (!d.isZero()) diffs[n] = d;
    }
    return FreeComplex(ring, lo, std::move(ranks), std::move(diffs));
}

ChainMap tensorMap(const ChainMap& f, const ChainMap& g) {
    FreeComplex src = tensor(f.source(), g.source());
    FreeComplex tgt = tensor(f.target(), g.target());
    std::map<int, RingMatrix> comps;
    for (int n = src.lo(); n <= src.hi(); ++n) {
        auto colBlocks = tensorBlocks(f.source(), g.source(), n);
        auto rowBlocks = tensorBlocks(f.target(), g.target(), n);
        std::map<int, int> rowOff;
        for (auto& [i, off, rf, rg] : rowBlocks) rowOff[i] = off;
        RingMatrix m(src.ring(), tgt.rank(n), src.rank(n));
        for (auto& [i, coff, rf, rg] : colBlocks) {
            auto it = rowOff.find(i);
            if (it == rowOff.end()) continue;
            RingMatrix blk = RingMatrix::kronecker(f.comp(i), g.comp(n - i));
            for (auto& [rc, p] : blk.entries())
                m.set(it->second + rc.first, coff + rc.second, p);
        }
        if (!m.isZero()) comps[n] = m;
    }
    return ChainMap(std::move(src), std::move(tgt), std::move(comps));
}

ChainMap tensorPower(const ChainMap& f, int n) {
    if (n < 1) throw DataError("tensorPower expects n >= 1");
    ChainMap acc = f;
    for (int k = 1; k < n; ++k) acc = tensorMap(acc, f);
    return acc;
}

FreeComplex homComplex(const FreeComplex& f, const FreeComplex& g) {
    return tensor(dual(f), g);
}

ChainMap evaluationMap(const FreeComplex& f) {
    const Ring& ring = f.ring();
    FreeComplex src = tensor(dual(f), f);
    FreeComplex tgt = FreeComplex::unit(ring);
    std::map<int, RingMatrix> comps;
    if (!f.isZero()) {
        RingMatrix e(ring, 1, src.rank(0));
        for (auto& [m, off, rf, rg] : tensorBlocks(dual(f), f, 0)) {
            // block (dual F)_m tensor F_{-m}; the pairing matrix is the identity
            Scalar s = Scalar::ofInt(ring.field(), evalSign(m));
            for (int a = 0; a < rf; ++a)
                e.set(0, off + a * rg + a, ring.constant(s));
        }
        if (!e.isZero()) comps[0] = e;
    }
    return ChainMap(std::move(src), std::move(tgt), std::move(comps));
}

FreeComplex directSum(const std::vector<FreeComplex>& parts) {
    if (parts.empty()) throw DataError("directSum of nothing");
    const Ring& ring = parts[0].ring();
    int lo = 0, hi = -1;
    bool any = false;
    for (auto& p : parts) {
        if (!p.ring().sameAs(ring)) throw DataError("directSum: ring mismatch");
        if (p.isZero()) continue;
        if (!any) { lo = p.lo(); hi = p.hi(); any = true; }
        else { lo = std::min(lo, p.lo()); hi = std::max(hi, p.hi()); }
    }
    if (!any) return FreeComplex::zero(ring);
    std::vector<int> ranks;
    for (int n = lo; n <= hi; ++n) {
        int r = 0;
        for (auto& p : parts) r += p.rank(n);
        ranks.push_back(r);
    }
    std::map<int, RingMatrix> diffs;
    for (int n = lo + 1; n <= hi; ++n) {
        int rows = 0, cols = 0;
        for (auto& p : parts) { rows += p.rank(n - 1); cols += p.rank(n); }
        RingMatrix d(ring, rows, cols);
        int roff = 0, coff = 0;
        for (auto& p : parts) {
            RingMatrix pd = p.diff(n);
            for (auto& [rc, q] : pd.entries()) d.set(roff + rc.first, coff + rc.second, q);
            roff += p.rank(n - 1);
            coff += p.rank(n);
        }
        if (!d.isZero()) diffs[n] = d;
    }
    return FreeComplex(ring, lo, std::move(ranks), std::move(diffs));
}

ChainMap directSumMap(const std::vector<ChainMap>& parts) {
    if (parts.empty()) throw DataError("directSumMap of nothing");
    std::vector<FreeComplex> srcs, tgts;
    for (auto& p : parts) { srcs.push_back(p.source()); tgts.push_back(p.target()); }
    FreeComplex src = directSum(srcs), tgt = directSum(tgts);
    std::map<int, RingMatrix> comps;
    int lo = std::min(src.lo(), tgt.lo()), hi = std::max(src.hi(), tgt.hi());
    for (int n = lo; n <= hi; ++n) {
        RingMatrix m(src.ring(), tgt.rank(n), src.rank(n));
        int roff = 0, coff = 0;
        for (auto& p : parts) {
            RingMatrix pm = p.comp(n);
            for (auto& [rc, q] : pm.entries()) m.set(roff + rc.first, coff + rc.second, q);
            roff += p.target().rank(n);
            coff += p.source().rank(n);
        }
        if (!m.isZero()) comps[n] = m;
    }
    return ChainMap(std::move(src), std::move(tgt), std::move(comps));
}

FreeComplex cone(const ChainMap& f) {
    const FreeComplex& src = f.source();  // G
    const FreeComplex& tgt = f.target();  // F
    const Ring& ring = src.ring();
    if (src.isZero() && tgt.isZero()) return FreeComplex::zero(ring);
    if (src.isZero()) return tgt;
    if (tgt.isZero()) return suspend(src, 1);
    int lo = std::min(tgt.lo(), src.lo() + 1);
    int hi = std::max(tgt.hi(), src.hi() + 1);
    std::vector<int> ranks;
    for (int n = lo; n <= hi; ++n) ranks.push_back(tgt.rank(n) + src.rank(n - 1));
    std::map<int, RingMatrix> diffs;
    for (int n = lo + 1; n <= hi; ++n) {
        int rows = tgt.rank(n - 1) + src.rank(n - 2);
        int cols = tgt.rank(n) + src.rank(n - 1);
        RingMatrix d(ring, rows, cols);
        RingMatrix td = tgt.diff(n);
        for (auto& [rc, p] : td.entries()) d.set(rc.first, rc.second, p);
        RingMatrix fc = f.comp(n - 1);
        for (auto& [rc, p] : fc.entries()) d.set(rc.first, tgt.rank(n) + rc.second, p);
        RingMatrix nd = -src.diff(n - 1);
        for (auto& [rc, p] : nd.entries())
            d.set(tgt.rank(n - 1) + rc.first, tgt.rank(n) + rc.second, p);
        if (!d.isZero()) diffs[n] = d;
    }
    return FreeComplex(ring, lo, std::move(ranks), std::move(diffs));
}

Truncation truncateBelow(const FreeComplex& f, int d) {
    const Ring& ring = f.ring();
    Truncation out;
    std::vector<int> lowRanks;
    std::map<int, RingMatrix> lowDiffs;
    for (int n = f.lo(); n <= std::min(d - 1, f.hi()); ++n) {
        lowRanks.push_back(f.rank(n));
        if (n > f.lo()) {
            RingMatrix dd = f.diff(n);
            if (!dd.isZero()) lowDiffs[n] = dd;
        }
    }
    out.below = lowRanks.empty() ? FreeComplex::zero(ring)
                                 : FreeComplex(ring, f.lo(), lowRanks, lowDiffs);
    std::map<int, RingMatrix> incComps;
    for (int n = out.below.lo(); n <= out.below.hi(); ++n)
        if (out.below.rank(n) > 0) incComps[n] = RingMatrix::identity(ring, f.rank(n));
    out.inclusion = ChainMap(out.below, f, std::move(incComps));

    std::vector<int> highRanks;
    std::map<int, RingMatrix> highDiffs;
    for (int n = std::max(d, f.lo()); n <= f.hi(); ++n) {
        highRanks.push_back(f.rank(n));
        if (n > std::max(d, f.lo())) {
            RingMatrix dd = f.diff(n);
            if (!dd.isZero()) highDiffs[n] = dd;
        }
    }
    out.above = highRanks.empty() ? FreeComplex::zero(ring)
                                  : FreeComplex(ring, std::max(d, f.lo()), highRanks, highDiffs);
    std::map<int, RingMatrix> surComps;
    for (int n = out.above.lo(); n <= out.above.hi(); ++n)
        if (out.above.rank(n) > 0) surComps[n] = RingMatrix::identity(ring, f.rank(n));
    out.surjection = ChainMap(f, out.above, std::move(surComps));
    return out;
}

// ---------- minimization ----------

namespace {

struct MutableComplex {
    Ring ring;
    std::map<int, int> rank;
    std::map<int, RingMatrix> diff;   // diff[n]: rank(n-1) x rank(n)
    std::map<int, RingMatrix> proj;   // original F -> current, per degree
    std::map<int, RingMatrix> incl;   // current -> original F
    int rk(int n) const {
        auto it = rank.find(n);
        return it == rank.end() ? 0 : it->second;
    }
    RingMatrix d(int n) const {
        auto it = diff.find(n);
        if (it != diff.end()) return it->second;
        return RingMatrix(ring, rk(n - 1), rk(n));
    }
};

std::optional<Polynomial> tryInvert(const Ring& ring, const Polynomial& u) {
    if (u.isConstant()) {
        if (u.isZero()) return std::nullopt;
        return ring.constant(u.constantCoef().inverse());
    }
    RingMatrix A(ring, 1, 1), B(ring, 1, 1);
    A.set(0, 0, u);
    B.set(0, 0, ring.one());
    LinearSolution s = solveLinear(A, B);
    if (!s.solvable) return std::nullopt;
    return s.solution.at(0, 0);
}

RingMatrix dropRowOf(const RingMatrix& m, int r) {
    std::vector<int> keep;
    for (int i = 0; i < m.rows(); ++i)
        if (i != r) keep.push_back(i);
    return m.selectRows(keep);
}

RingMatrix dropColOf(const RingMatrix& m, int c) {
    std::vector<int> keep;
    for (int j = 0; j < m.cols(); ++j)
        if (j != c) keep.push_back(j);
    return m.selectColumns(keep);
}

}  // namespace

Minimization minimize(const FreeComplex& f) {
    const Ring& ring = f.ring();
    MutableComplex c{ring, {}, {}, {}, {}};
    for (int n = f.lo(); n <= f.hi(); ++n) {
        c.rank[n] = f.rank(n);
        c.proj[n] = RingMatrix::identity(ring, f.rank(n));
        c.incl[n] = RingMatrix::identity(ring, f.rank(n));
        if (n > f.lo() && !f.diff(n).isZero()) c.diff[n] = f.diff(n);
    }

    for (;;) {
        bool split = false;
        bool sawStuckEntry = false;
        for (int n = f.lo() + 1; n <= f.hi() && !split; ++n) {
            RingMatrix d = c.d(n);
            for (auto& [rc, entry] : d.entries()) {
                if (entry.constantCoef().isZero()) continue;
                auto inv = tryInvert(ring, entry);
                if (!inv) { sawStuckEntry = true; continue; }
                const int i = rc.first, j = rc.second;
                const Polynomial w = *inv;
                // clear column j with row i (basis change in degree n-1)
                RingMatrix L = RingMatrix::identity(ring, d.rows());
                RingMatrix Linv = L;
                for (int r = 0; r < d.rows(); ++r) {
                    if (r == i) continue;
                    Polynomial a = d.at(r, j);
                    if (a.isZero()) continue;
                    L.set(r, i, -(a * w));
                    Linv.set(r, i, a * w);
                }
                RingMatrix d1 = L * d;
                // clear row i with column j (basis change in degree n)
                RingMatrix R = RingMatrix::identity(ring, d.cols());
                RingMatrix Rinv = R;
                for (int cc = 0; cc < d.cols(); ++cc) {
                    if (cc == j) continue;
                    Polynomial a = d1.at(i, cc);
                    if (a.isZero()) continue;
                    R.set(j, cc, -(w * a));
                    Rinv.set(j, cc, w * a);
                }
                RingMatrix d2 = d1 * R;
                // after clearing, row/column of the pivot vanish off the pivot;
                // d d = 0 forces the adjacent differentials off the split summand
                c.diff[n] = dropColOf(dropRowOf(d2, i), j);
                if (c.rk(n + 1) > 0) c.diff[n + 1] = dropRowOf(Rinv * c.d(n + 1), j);
                if (c.rk(n - 2) > 0) c.diff[n - 1] = dropColOf(c.d(n - 1) * Linv, i);
                c.proj[n - 1] = dropRowOf(L * c.proj[n - 1], i);
                c.incl[n - 1] = dropColOf(c.incl[n - 1] * Linv, i);
                c.proj[n] = dropRowOf(Rinv * c.proj[n], j);
                c.incl[n] = dropColOf(c.incl[n] * R, j);
                c.rank[n] -= 1;
                c.rank[n - 1] -= 1;
                split = true;
                break;
            }
        }
        if (!split) {
            if (sawStuckEntry)
                throw DataError(
                    "minimize: differential entry with nonzero constant term is not "
                    "invertible in the quotient ring; graded input required");
            break;
        }
    }

    Minimization out;
    if (f.isZero()) {
        out.minimal = FreeComplex::zero(ring);
        out.project = ChainMap::zero(f, out.minimal);
        out.include = ChainMap::zero(out.minimal, f);
        return out;
    }
    std::vector<int> ranks;
    for (int n = f.lo(); n <= f.hi(); ++n) ranks.push_back(c.rk(n));
    std::map<int, RingMatrix> diffs;
    for (int n = f.lo() + 1; n <= f.hi(); ++n) {
        RingMatrix d = c.d(n);
        if (!d.isZero()) diffs[n] = d;
    }
    out.minimal = FreeComplex(ring, f.lo(), std::move(ranks), std::move(diffs));
    std::map<int, RingMatrix> pc, ic;
    for (int n = f.lo(); n <= f.hi(); ++n) {
        if (!c.proj[n].isZero()) pc[n] = c.proj[n];
        if (!c.incl[n].isZero()) ic[n] = c.incl[n];
    }
    out.project = ChainMap(f, out.minimal, std::move(pc));
    out.include = ChainMap(out.minimal, f, std::move(ic));
    if (!(out.project.compose(out.include) == ChainMap::identity(out.minimal)))
        throw std::logic_error("minimize: projection of inclusion is not the identity");
    return out;
}

ChainMap evaluationReduce(const ChainMap& f) {
    ChainMap lifted = tensorMap(ChainMap::identity(dual(f.target())), f);
    return evaluationMap(f.target()).compose(lifted);
}

std::pair<ChainMap, ChainMap> evaluationReduceFactorization(const ChainMap& f,
                                                            const ChainMap& g1,
                                                            const ChainMap& g2) {
    if (!(g2.compose(g1) == f)) throw DataError("factorization does not compose to f");
    ChainMap dualId = ChainMap::identity(dual(f.target()));
    ChainMap h1 = tensorMap(dualId, g1);
    ChainMap h2 = evaluationMap(f.target()).compose(tensorMap(dualId, g2));
    return {h1, h2};
}

}  // namespace perfcx
