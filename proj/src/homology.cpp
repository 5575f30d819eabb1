#include "perfcx/homology.hpp"

#include <algorithm>

namespace perfcx {

// ---------- presentations ----------

ModulePresentation ModulePresentation::free(const Ring& r, int rank) {
    return ModulePresentation{r, rank, RingMatrix(r, rank, 0)};
}

ModulePresentation ModulePresentation::cyclic(const Ring& r,
                                              const std::vector<Polynomial>& idealGens) {
    RingMatrix rel(r, 1, static_cast<int>(idealGens.size()));
    for (std::size_t j = 0; j < idealGens.size(); ++j)
        rel.set(0, static_cast<int>(j), idealGens[j]);
    return ModulePresentation{r, 1, rel};
}

bool ModulePresentation::isZeroModule() const {
    if (generators == 0) return true;
    return solveLinear(relations, RingMatrix::identity(ring, generators)).solvable;
}

RingMatrix cycleGenerators(const FreeComplex& f, int n) {
    return syzygies(f.diff(n));
}

ModulePresentation homologyPresentation(const FreeComplex& f, int n) {
    const Ring& ring = f.ring();
    if (f.rank(n) == 0) return ModulePresentation{ring, 0, RingMatrix(ring, 0, 0)};
    RingMatrix z = cycleGenerators(f, n);
    if (z.cols() == 0) return ModulePresentation{ring, 0, RingMatrix(ring, 0, 0)};
    RingMatrix aug = z.hstack(f.diff(n + 1));
    RingMatrix s = syzygies(aug);
    RingMatrix rel = s.submatrix(0, z.cols(), 0, s.cols());
    return ModulePresentation{ring, z.cols(), rel};
}

// ---------- ghosts and homotopies ----------

GhostResult isGhost(const ChainMap& f) {
    const FreeComplex& g = f.source();
    const FreeComplex& fc = f.target();
    GhostResult out;
    for (int n = g.lo(); n <= g.hi(); ++n) {
        if (g.rank(n) == 0) continue;
        RingMatrix z = cycleGenerators(g, n);
        if (z.cols() == 0) continue;
        RingMatrix img = f.comp(n) * z;
        if (img.isZero()) continue;
        LinearSolution sol = solveLinear(fc.diff(n + 1), img);
        if (!sol.solvable) {
            out.ghost = false;
            out.failingDegree = n;
            out.failingCycle = sol.failingColumn;
            return out;
        }
        out.preimages[n] = sol.solution;
    }
    out.ghost = true;
    return out;
}

std::optional<Homotopy> nullHomotopy(const ChainMap& f) {
    const FreeComplex& g = f.source();
    const FreeComplex& fc = f.target();
    const Ring& ring = g.ring();

    // unknown blocks h_n : G_n -> F_{n+1}
    std::map<int, int> uoff;
    int ucount = 0;
    for (int n = g.lo(); n <= g.hi(); ++n) {
        if (g.rank(n) > 0 && fc.rank(n + 1) > 0) {
            uoff[n] = ucount;
            ucount += fc.rank(n + 1) * g.rank(n);
        }
    }
    // equation blocks at degrees where both complexes are present
    std::map<int, int> eoff;
    int ecount = 0;
    int lo = std::min(g.lo(), fc.lo()), hi = std::max(g.hi(), fc.hi());
    for (int n = lo; n <= hi; ++n) {
        if (g.rank(n) > 0 && fc.rank(n) > 0) {
            eoff[n] = ecount;
            ecount += fc.rank(n) * g.rank(n);
        }
    }

    RingMatrix A(ring, ecount, ucount);
    RingMatrix b(ring, ecount, 1);
    for (auto& [n, eo] : eoff) {
        const int rf = fc.rank(n), rg = g.rank(n);
        RingMatrix fn = f.comp(n);
        for (auto& [rc, p] : fn.entries()) b.set(eo + rc.first * rg + rc.second, 0, p);
        // d^F_{n+1} h_n contribution
        if (uoff.count(n)) {
            RingMatrix dfn = fc.diff(n + 1);
            for (auto& [ik, p] : dfn.entries()) {
                // entry (i, k) multiplies h_n[k, j] into equation (i, j)
                for (int j = 0; j < rg; ++j) {
                    int row = eo + ik.first * rg + j;
                    int col = uoff[n] + ik.second * rg + j;
                    A.set(row, col, A.at(row, col) + p);
                }
            }
        }
        // h_{n-1} d^G_n contribution
        if (uoff.count(n - 1)) {
            RingMatrix dgn = g.diff(n);
            const int rgm = g.rank(n - 1);
            for (auto& [lj, p] : dgn.entries()) {
                // entry (l, j) multiplies h_{n-1}[i, l] into equation (i, j)
                for (int i = 0; i < rf; ++i) {
                    int row = eo + i * rg + lj.second;
                    int col = uoff[n - 1] + i * rgm + lj.first;
                    A.set(row, col, A.at(row, col) + p);
                }
            }
        }
    }

    LinearSolution sol = solveLinear(A, b);
    if (!sol.solvable) return std::nullopt;

    Homotopy h{g, fc, {}};
    for (auto& [n, uo] : uoff) {
        const int rows = fc.rank(n + 1), cols = g.rank(n);
        RingMatrix hn(ring, rows, cols);
        for (int k = 0; k < rows; ++k)
            for (int j = 0; j < cols; ++j) hn.set(k, j, sol.solution.at(uo + k * cols + j, 0));
        if (!hn.isZero()) h.comp[n] = hn;
    }
    // the identity must hold exactly in every degree
    for (int n = lo; n <= hi + 1; ++n) {
        RingMatrix lhs = fc.diff(n + 1) * h.at(n) + h.at(n - 1) * g.diff(n);
        if (!(lhs == f.comp(n)))
            throw std::logic_error("null homotopy solver returned an invalid homotopy");
    }
    return h;
}

// ---------- field fibers ----------

std::string FieldFiber::str() const {
    return kind == Kind::MaximalIdeal ? "maximal ideal" : "generic point";
}

namespace {

/// Fraction of ring elements; the ring must be a domain. Not reduced: the
/// only queries are zero tests and field arithmetic.
struct RingFraction {
    Polynomial num, den;
};

struct ScalarOps {
    Field field;
    Scalar zero() const { return Scalar::zero(field); }
    Scalar one() const { return Scalar::one(field); }
    bool isZero(const Scalar& a) const { return a.isZero(); }
    Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
    Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar div(const Scalar& a, const Scalar& b) const { return a / b; }
};

struct FractionOps {
    Ring ring;
    RingFraction zero() const { return RingFraction{ring.zero(), ring.one()}; }
    RingFraction one() const { return RingFraction{ring.one(), ring.one()}; }
    bool isZero(const RingFraction& a) const { return a.num.isZero(); }
    RingFraction add(const RingFraction& a, const RingFraction& b) const {
        return RingFraction{a.num * b.den + b.num * a.den, a.den * b.den};
    }
    RingFraction sub(const RingFraction& a, const RingFraction& b) const {
        return RingFraction{a.num * b.den - b.num * a.den, a.den * b.den};
    }
    RingFraction mul(const RingFraction& a, const RingFraction& b) const {
        return RingFraction{a.num * b.num, a.den * b.den};
    }
    RingFraction div(const RingFraction& a, const RingFraction& b) const {
        if (b.num.isZero()) throw DataError("division by zero fraction");
        return RingFraction{a.num * b.den, a.den * b.num};
    }
};

template <class E, class Ops>
struct DenseLA {
    using Mat = std::vector<std::vector<E>>;

    static Mat make(int rows, int cols, const Ops& ops) {
        return Mat(rows, std::vector<E>(cols, ops.zero()));
    }

    /// Gauss-Jordan without pivot normalization; returns pivot columns.
    static std::vector<int> echelon(Mat& m, const Ops& ops) {
        std::vector<int> pivots;
        if (m.empty() || m[0].empty()) return pivots;
        const int rows = static_cast<int>(m.size());
        const int cols = static_cast<int>(m[0].size());
        int r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int pr = -1;
            for (int i = r; i < rows; ++i)
                if (!ops.isZero(m[i][c])) { pr = i; break; }
            if (pr < 0) continue;
            std::swap(m[r], m[pr]);
            for (int i = 0; i < rows; ++i) {
                if (i == r || ops.isZero(m[i][c])) continue;
                E factor = ops.div(m[i][c], m[r][c]);
                for (int cc = 0; cc < cols; ++cc)
                    m[i][cc] = ops.sub(m[i][cc], ops.mul(factor, m[r][cc]));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    static int rank(Mat m, const Ops& ops) { return static_cast<int>(echelon(m, ops).size()); }

    static std::vector<std::vector<E>> nullspaceBasis(Mat m, const Ops& ops) {
        std::vector<std::vector<E>> basis;
        if (m.empty() || m[0].empty()) return basis;
        const int cols = static_cast<int>(m[0].size());
        std::vector<int> pivots = echelon(m, ops);
        std::vector<int> pivotOfCol(cols, -1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            pivotOfCol[pivots[k]] = static_cast<int>(k);
        for (int c = 0; c < cols; ++c) {
            if (pivotOfCol[c] >= 0) continue;
            std::vector<E> v(cols, ops.zero());
            for (std::size_t k = 0; k < pivots.size(); ++k) {
                if (ops.isZero(m[k][c])) continue;
                v[pivots[k]] = ops.sub(ops.zero(), ops.div(m[k][c], m[k][pivots[k]]));
            }
            v[c] = ops.one();
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// v lies in the column span of m.
    static bool inColumnSpan(const Mat& m, const std::vector<E>& v, const Ops& ops) {
        if (m.empty() || m[0].empty()) {
            for (auto& e : v)
                if (!ops.isZero(e)) return false;
            return true;
        }
        Mat aug = m;
        const int rows = static_cast<int>(m.size());
        for (int i = 0; i < rows; ++i) aug[i].push_back(v[i]);
        return rank(m, ops) == rank(aug, ops);
    }
};

template <class E, class Ops, class Conv>
FiberMapResult fiberMapImpl(const ChainMap& f, const FieldFiber& fiber, const Ops& ops,
                            Conv toE) {
    using LA = DenseLA<E, Ops>;
    const FreeComplex& g = f.source();
    const FreeComplex& fc = f.target();
    FiberMapResult out;
    out.fiber = fiber;
    int lo = std::min(g.lo(), fc.lo()), hi = std::max(g.hi(), fc.hi());

    auto dense = [&](const RingMatrix& m) {
        auto d = LA::make(m.rows(), m.cols(), ops);
        for (auto& [rc, p] : m.entries()) d[rc.first][rc.second] = toE(p);
        return d;
    };

    bool foundNonzero = false;
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::vector<E>> cycles;
        if (g.rank(n) > 0) {
            if (g.rank(n - 1) == 0) {
                for (int j = 0; j < g.rank(n); ++j) {
                    std::vector<E> v(g.rank(n), ops.zero());
                    v[j] = ops.one();
                    cycles.push_back(std::move(v));
                }
            } else {
                cycles = LA::nullspaceBasis(dense(g.diff(n)), ops);
            }
        }
        int srcBoundary =
            g.rank(n) > 0 && g.rank(n + 1) > 0 ? LA::rank(dense(g.diff(n + 1)), ops) : 0;
        out.sourceHomologyDim[n] = static_cast<int>(cycles.size()) - srcBoundary;

        if (fc.rank(n) > 0) {
            int tgtNullity = fc.rank(n - 1) == 0
                                 ? fc.rank(n)
                                 : fc.rank(n) - LA::rank(dense(fc.diff(n)), ops);
            int tgtBoundary =
                fc.rank(n + 1) > 0 ? LA::rank(dense(fc.diff(n + 1)), ops) : 0;
            out.targetHomologyDim[n] = tgtNullity - tgtBoundary;
        } else {
            out.targetHomologyDim[n] = 0;
        }

        if (foundNonzero || cycles.empty() || fc.rank(n) == 0) continue;
        auto fn = dense(f.comp(n));
        auto dfn1 = dense(fc.diff(n + 1));
        for (auto& v : cycles) {
            std::vector<E> w(fc.rank(n), ops.zero());
            for (int i = 0; i < fc.rank(n); ++i)
                for (int j = 0; j < g.rank(n); ++j)
                    w[i] = ops.add(w[i], ops.mul(fn[i][j], v[j]));
            bool zero = true;
            for (auto& e : w)
                if (!ops.isZero(e)) { zero = false; break; }
            if (zero) continue;
            if (fc.rank(n + 1) == 0 || !LA::inColumnSpan(dfn1, w, ops)) {
                out.zeroOnHomology = false;
                out.witnessDegree = n;
                foundNonzero = true;
                break;
            }
        }
    }
    return out;
}

}  // namespace

FiberMapResult fieldFiberHomologyMap(const ChainMap& f, const FieldFiber& fiber) {
    const Ring& ring = f.source().ring();
    if (fiber.kind == FieldFiber::Kind::MaximalIdeal) {
        ScalarOps ops{ring.field()};
        return fiberMapImpl<Scalar>(f, fiber, ops,
                                    [](const Polynomial& p) { return p.constantCoef(); });
    }
    if (!ring.declaredDomain())
        throw DataError("generic-point fiber requires the ring's domain flag");
    FractionOps ops{ring};
    return fiberMapImpl<RingFraction>(
        f, fiber, ops, [&](const Polynomial& p) { return RingFraction{p, ring.one()}; });
}

FiberwiseResult isFiberwiseZero(const ChainMap& f, const std::vector<FieldFiber>& fibers) {
    FiberwiseResult out;
    out.caveat = "fibers sampled: the supplied list samples Spec R, it does not exhaust it";
    for (auto& fib : fibers) {
        out.perFiber.push_back(fieldFiberHomologyMap(f, fib));
        if (!out.perFiber.back().zeroOnHomology) out.zeroAtAllSuppliedFibers = false;
    }
    return out;
}

namespace {

std::vector<std::vector<Scalar>> gradedDense(const RingMatrix& m) {
    ScalarOps ops{m.ring().field()};
    auto d = DenseLA<Scalar, ScalarOps>::make(m.rows(), m.cols(), ops);
    for (auto& [rc, p] : m.entries()) d[rc.first][rc.second] = p.constantCoef();
    return d;
}

}  // namespace

int gradedFiberRank(const RingMatrix& m) {
    ScalarOps ops{m.ring().field()};
    return DenseLA<Scalar, ScalarOps>::rank(gradedDense(m), ops);
}

bool gradedFiberInSpan(const RingMatrix& m, const RingMatrix& v) {
    if (v.cols() != 1 || v.rows() != m.rows()) throw DataError("fiber span test shape mismatch");
    ScalarOps ops{m.ring().field()};
    std::vector<Scalar> vv(v.rows(), ops.zero());
    for (auto& [rc, p] : v.entries()) vv[rc.first] = p.constantCoef();
    if (m.cols() == 0) {
        for (auto& e : vv)
            if (!e.isZero()) return false;
        return true;
    }
    return DenseLA<Scalar, ScalarOps>::inColumnSpan(gradedDense(m), vv, ops);
}

bool isITorsion(const FreeComplex& f, const Ideal& I) {
    for (int n = f.lo(); n <= f.hi(); ++n) {
        ModulePresentation pres = homologyPresentation(f, n);
        if (pres.generators == 0) continue;
        if (pres.isZeroModule()) continue;
        Ideal ann = annihilatorOfCokernel(pres.relations);
        for (auto& p : I.gens())
            if (!radicalMembership(p, ann)) return false;
    }
    return true;
}

}  // namespace perfcx
