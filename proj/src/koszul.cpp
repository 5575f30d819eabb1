#include "perfcx/koszul.hpp"

#include <algorithm>

namespace perfcx {

std::vector<std::vector<int>> subsetsOfSize(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    if (k == 0) out = {std::vector<int>{}};
    return out;
}

int subsetIndex(int n, const std::vector<int>& s) {
    auto all = subsetsOfSize(n, static_cast<int>(s.size()));
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == s) return static_cast<int>(i);
    throw DataError("subset not found in index table");
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

KoszulComplex koszul(const Ring& r, std::vector<Polynomial> xs) {
    for (auto& x : xs)
        if (!x.ring().sameAs(r)) throw DataError("koszul element from a different ring");
    const int n = static_cast<int>(xs.size());
    std::vector<int> ranks;
    for (int i = 0; i <= n; ++i) ranks.push_back(static_cast<int>(binomial(n, i)));
    std::map<int, RingMatrix> diffs;
    for (int i = 1; i <= n; ++i) {
        auto cols = subsetsOfSize(n, i);
        auto rows = subsetsOfSize(n, i - 1);
        std::map<std::vector<int>, int> rowIndex;
        for (std::size_t a = 0; a < rows.size(); ++a) rowIndex[rows[a]] = static_cast<int>(a);
        RingMatrix d(r, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const auto& s = cols[c];
            for (std::size_t pos = 0; pos < s.size(); ++pos) {
                std::vector<int> rest;
                for (std::size_t q = 0; q < s.size(); ++q)
                    if (q != pos) rest.push_back(s[q]);
                int ri = rowIndex.at(rest);
                Polynomial entry = pos % 2 == 0 ? xs[s[pos]] : -xs[s[pos]];
                d.set(ri, static_cast<int>(c), d.at(ri, static_cast<int>(c)) + entry);
            }
        }
        if (!d.isZero()) diffs[i] = d;
    }
    KoszulComplex out{r, std::move(xs), FreeComplex(r, 0, std::move(ranks), std::move(diffs))};
    return out;
}

namespace {

/// Sign of the permutation sorting (S, S-complement) into ascending order.
int shuffleSign(int n, const std::vector<int>& s) {
    std::vector<bool> inS(n, false);
    for (int v : s) inS[v] = true;
    int inversions = 0;
    for (int v : s)
        for (int t = 0; t < v; ++t)
            if (!inS[t]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<int> complementOf(int n, const std::vector<int>& s) {
    std::vector<bool> inS(n, false);
    for (int v : s) inS[v] = true;
    std::vector<int> out;
    for (int t = 0; t < n; ++t)
        if (!inS[t]) out.push_back(t);
    return out;
}

}  // namespace

SelfDuality checkSelfDuality(const KoszulComplex& k) {
    const int n = k.n();
    const Ring& ring = k.ring;
    FreeComplex dk = dual(k.cx);
    FreeComplex sk = suspend(k.cx, -n);

    // unsigned contraction-against-the-top-form pairing per degree
    auto pairing = [&](int m) {
        auto duals = subsetsOfSize(n, -m);         // basis of dual(K)_m
        auto images = subsetsOfSize(n, m + n);     // basis of K_{m+n}
        std::map<std::vector<int>, int> imgIndex;
        for (std::size_t a = 0; a < images.size(); ++a)
            imgIndex[images[a]] = static_cast<int>(a);
        RingMatrix p(ring, static_cast<int>(images.size()), static_cast<int>(duals.size()));
        for (std::size_t c = 0; c < duals.size(); ++c) {
            std::vector<int> comp = complementOf(n, duals[c]);
            int sgn = shuffleSign(n, duals[c]);
            p.set(imgIndex.at(comp), static_cast<int>(c), ring.constant(sgn));
        }
        return p;
    };

    // resolve the per-degree sign from the chain condition, top degree down
    std::map<int, RingMatrix> comps;
    std::map<int, int> c;
    c[0] = 1;
    comps[0] = pairing(0);
    for (int m = 0; m > -n; --m) {
        RingMatrix lhs = sk.diff(m) * comps[m];                       // into (Sigma K)_{m-1}
        RingMatrix rhs = pairing(m - 1) * dk.diff(m);                 // unsigned candidate
        int sign = 0;
        if (lhs.isZero() && rhs.isZero()) sign = 1;
        else {
            auto it = rhs.entries().begin();
            Polynomial a = lhs.at(it->first.first, it->first.second);
            if (a == it->second) sign = 1;
            else if (a == -it->second) sign = -1;
            else throw std::logic_error("self-duality pairing is not proportional");
            RingMatrix scaled = sign == 1 ? rhs : -rhs;
            if (!(scaled == lhs))
                throw std::logic_error("self-duality candidate is not a chain map");
        }
        c[m - 1] = sign;
        comps[m - 1] = sign == 1 ? pairing(m - 1) : -pairing(m - 1);
    }

    SelfDuality out;
    out.iso = ChainMap(dk, sk, comps);
    // signed permutation matrices invert by transposition
    std::map<int, RingMatrix> inv;
    for (auto& [m, p] : comps) inv[m] = p.transpose();
    out.inverse = ChainMap(sk, dk, inv);
    if (!(out.iso.compose(out.inverse) == ChainMap::identity(sk)) ||
        !(out.inverse.compose(out.iso) == ChainMap::identity(dk)))
        throw std::logic_error("self-duality maps do not invert each other");
    return out;
}

namespace {

using WedgeElem = std::map<std::uint32_t, Scalar>;  // bitmask over 2n slots

WedgeElem wedgeRight(const WedgeElem& e, int idx, const Field& f) {
    WedgeElem out;
    for (auto& [mask, c] : e) {
        if (mask & (1u << idx)) continue;
        int above = __builtin_popcount(mask >> (idx + 1));
        Scalar nc = above % 2 == 0 ? c : -c;
        std::uint32_t nm = mask | (1u << idx);
        auto it = out.find(nm);
        if (it == out.end()) out[nm] = nc;
        else {
            it->second = it->second + nc;
            if (it->second.isZero()) out.erase(it);
        }
    }
    return out;
}

WedgeElem wedgeDiff(const WedgeElem& e, int hiIdx, int loIdx, const Field& f, bool plus) {
    // e wedge (e_hi -+ e_lo)
    WedgeElem a = wedgeRight(e, hiIdx, f);
    WedgeElem b = wedgeRight(e, loIdx, f);
    for (auto& [mask, c] : b) {
        Scalar contrib = plus ? c : -c;
        auto it = a.find(mask);
        if (it == a.end()) a[mask] = contrib;
        else {
            it->second = it->second + contrib;
            if (it->second.isZero()) a.erase(it);
        }
    }
    return a;
}

}  // namespace

TensorDecomposition checkTensorDecomposition(const KoszulComplex& k) {
    const int n = k.n();
    const Ring& ring = k.ring;
    const Field field = ring.field();
    TensorDecomposition out;

    FreeComplex kk = tensor(k.cx, k.cx);
    for (int m = 0; m <= 2 * n; ++m) out.productRanks.push_back(kk.rank(m));
    for (int m = 0; m <= 2 * n; ++m) {
        long r = 0;
        for (int i = 0; i <= n; ++i) r += binomial(n, i) * binomial(n, m - i);
        out.sumRanks.push_back(static_cast<int>(r));
    }
    out.ranksMatch = out.productRanks == out.sumRanks;
    if (n > 3) return out;  // explicit isomorphism at desk scale only

    // summands: one suspended copy of K per subset T, in (size, lex) order
    std::vector<std::vector<int>> allT;
    for (int sz = 0; sz <= n; ++sz)
        for (auto& t : subsetsOfSize(n, sz)) allT.push_back(t);
    for (auto& t : allT) out.summands.push_back(suspend(k.cx, static_cast<int>(t.size())));
    FreeComplex sum = directSum(out.summands);

    auto tensorRowIndex = [&](int m, const std::vector<int>& a, const std::vector<int>& b) {
        int ia = static_cast<int>(a.size());
        for (auto& [i, off, rf, rg] : tensorBlocks(k.cx, k.cx, m)) {
            if (i != ia) continue;
            return off + subsetIndex(n, a) * rg + subsetIndex(n, b);
        }
        throw std::logic_error("tensor block not found");
    };

    auto maskSplit = [&](std::uint32_t mask) {
        std::vector<int> a, b;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) a.push_back(v);
        for (int v = 0; v < n; ++v)
            if (mask & (1u << (n + v))) b.push_back(v);
        return std::make_pair(a, b);
    };

    // forward: summand T, basis e_S at degree m = |S| + |T|
    //   e_S -> (-1)^{|T| m} e_S wedge prod_{t in T} (e_{n+t} - e_t)
    std::map<int, RingMatrix> fwd;
    std::map<int, RingMatrix> bwd;
    for (int m = 0; m <= 2 * n; ++m) {
        RingMatrix F(ring, kk.rank(m), sum.rank(m));
        int colOff = 0;
        for (std::size_t ti = 0; ti < allT.size(); ++ti) {
            const auto& T = allT[ti];
            int j = static_cast<int>(T.size());
            auto bases = subsetsOfSize(n, m - j);
            for (std::size_t si = 0; si < bases.size(); ++si) {
                std::uint32_t smask = 0;
                for (int v : bases[si]) smask |= 1u << v;
                WedgeElem e{{smask, Scalar::one(field)}};
                for (int t : T) e = wedgeDiff(e, n + t, t, field, /*plus=*/false);
                int delta = (j * m) % 2 == 0 ? 1 : -1;
                for (auto& [mask, c] : e) {
                    auto [a, b] = maskSplit(mask);
                    Scalar v = delta == 1 ? c : -c;
                    int row = tensorRowIndex(m, a, b);
                    F.set(row, colOff + static_cast<int>(si),
                          F.at(row, colOff + static_cast<int>(si)) + ring.constant(v));
                }
            }
            colOff += static_cast<int>(bases.size());
        }
        if (!F.isZero()) fwd[m] = F;

        // backward: e_A tensor e_B -> expand e_A wedge prod_{b in B}(e_{n+b} + e_b),
        // then a term with high part B' and low part A' maps into summand B'
        RingMatrix B(ring, sum.rank(m), kk.rank(m));
        for (auto& [i, off, rf, rg] : tensorBlocks(k.cx, k.cx, m)) {
            auto as = subsetsOfSize(n, i);
            auto bs = subsetsOfSize(n, m - i);
            for (std::size_t ai = 0; ai < as.size(); ++ai) {
                std::uint32_t amask = 0;
                for (int v : as[ai]) amask |= 1u << v;
                for (std::size_t bi = 0; bi < bs.size(); ++bi) {
                    WedgeElem e{{amask, Scalar::one(field)}};
                    for (int b : bs[bi]) e = wedgeDiff(e, n + b, b, field, /*plus=*/true);
                    int col = off + static_cast<int>(ai) * rg + static_cast<int>(bi);
                    for (auto& [mask, c] : e) {
                        auto [ap, bp] = maskSplit(mask);
                        int jj = static_cast<int>(bp.size());
                        int delta = (jj * m) % 2 == 0 ? 1 : -1;
                        // locate summand bp and its row offset at degree m
                        int rowOff = 0;
                        for (std::size_t tj = 0; tj < allT.size(); ++tj) {
                            if (allT[tj] == bp) break;
                            rowOff += out.summands[tj].rank(m);
                        }
                        int row = rowOff + subsetIndex(n, ap);
                        Scalar v = delta == 1 ? c : -c;
                        B.set(row, col, B.at(row, col) + ring.constant(v));
                    }
                }
            }
        }
        if (!B.isZero()) bwd[m] = B;
    }

    out.iso = ChainMap(sum, kk, fwd);
    out.inverse = ChainMap(kk, sum, bwd);
    if (!(out.iso.compose(out.inverse) == ChainMap::identity(kk)) ||
        !(out.inverse.compose(out.iso) == ChainMap::identity(sum)))
        throw std::logic_error("tensor decomposition maps do not invert each other");
    out.isoConstructed = true;
    return out;
}

RingMatrix DGModuleStructure::actionAt(int i, int m) const {
    auto it = action[i].find(m);
    if (it != action[i].end()) return it->second;
    return RingMatrix(complex.ring(), complex.rank(m + 1), complex.rank(m));
}

DGCheck verifyDGModule(const DGModuleStructure& s) {
    DGCheck out;
    const FreeComplex& f = s.complex;
    const Ring& ring = f.ring();
    const int n = s.koszul.n();
    if (static_cast<int>(s.action.size()) != n) throw DataError("action count mismatch");
    for (int i = 0; i < n; ++i)
        for (auto& [m, mat] : s.action[i])
            if (mat.rows() != f.rank(m + 1) || mat.cols() != f.rank(m))
                throw DataError("action matrix shape mismatch at degree " + std::to_string(m));

    for (int i = 0; i < n; ++i) {
        for (int m = f.lo() - 1; m <= f.hi(); ++m) {
            RingMatrix lhs = f.diff(m + 1) * s.actionAt(i, m) +
                             s.actionAt(i, m - 1) * f.diff(m);
            RingMatrix rhs =
                RingMatrix::identity(ring, f.rank(m)).scaled(s.koszul.elements[i]);
            if (!(lhs == rhs)) {
                out.valid = false;
                out.failingAxiom = "Leibniz fails for generator " + std::to_string(i) +
                                   " at degree " + std::to_string(m);
                return out;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            for (int m = f.lo() - 1; m <= f.hi(); ++m) {
                RingMatrix lhs = s.actionAt(i, m + 1) * s.actionAt(j, m) +
                                 s.actionAt(j, m + 1) * s.actionAt(i, m);
                if (i == j) lhs = s.actionAt(i, m + 1) * s.actionAt(i, m);
                if (!lhs.isZero()) {
                    out.valid = false;
                    out.failingAxiom =
                        (i == j ? "square vanishing fails for generator "
                                : "alternation fails for generators ") +
                        std::to_string(i) + (i == j ? "" : "," + std::to_string(j)) +
                        " at degree " + std::to_string(m);
                    return out;
                }
            }
        }
    }
    out.valid = true;
    return out;
}

DGModuleStructure koszulSelfAction(const KoszulComplex& k) {
    const int n = k.n();
    const Ring& ring = k.ring;
    DGModuleStructure s{k, k.cx, {}, };
    s.action.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int m = 0; m < n; ++m) {
            auto cols = subsetsOfSize(n, m);
            auto rows = subsetsOfSize(n, m + 1);
            std::map<std::vector<int>, int> rowIndex;
            for (std::size_t a = 0; a < rows.size(); ++a)
                rowIndex[rows[a]] = static_cast<int>(a);
            RingMatrix mat(ring, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const auto& sub = cols[c];
                if (std::find(sub.begin(), sub.end(), i) != sub.end()) continue;
                std::vector<int> merged = sub;
                merged.push_back(i);
                std::sort(merged.begin(), merged.end());
                int below = 0;
                for (int v : sub)
                    if (v < i) ++below;
                Scalar sgn = Scalar::ofInt(ring.field(), below % 2 == 0 ? 1 : -1);
                mat.set(rowIndex.at(merged), static_cast<int>(c), ring.constant(sgn));
            }
            if (!mat.isZero()) s.action[i][m] = mat;
        }
    }
    return s;
}

DGModuleStructure dgSuspend(const DGModuleStructure& s, int i) {
    DGModuleStructure out{s.koszul, suspend(s.complex, i), {}};
    out.action.resize(s.action.size());
    const bool flip = i % 2 != 0;
    for (std::size_t g = 0; g < s.action.size(); ++g)
        for (auto& [m, mat] : s.action[g]) out.action[g][m + i] = flip ? -mat : mat;
    return out;
}

DGModuleStructure dgDirectSum(const DGModuleStructure& a, const DGModuleStructure& b) {
    if (!a.koszul.ring.sameAs(b.koszul.ring) || a.koszul.n() != b.koszul.n())
        throw DataError("direct sum of DG modules over different Koszul complexes");
    for (int i = 0; i < a.koszul.n(); ++i)
        if (!(a.koszul.elements[i] == b.koszul.elements[i]))
            throw DataError("direct sum of DG modules over different Koszul complexes");
    DGModuleStructure out{a.koszul, directSum({a.complex, b.complex}), {}};
    const Ring& ring = a.koszul.ring;
    out.action.resize(a.action.size());
    for (std::size_t g = 0; g < a.action.size(); ++g) {
        int lo = out.complex.lo(), hi = out.complex.hi();
        for (int m = lo; m <= hi; ++m) {
            RingMatrix mat(ring, out.complex.rank(m + 1), out.complex.rank(m));
            RingMatrix am = a.actionAt(static_cast<int>(g), m);
            RingMatrix bm = b.actionAt(static_cast<int>(g), m);
            for (auto& [rc, p] : am.entries()) mat.set(rc.first, rc.second, p);
            for (auto& [rc, p] : bm.entries())
                mat.set(a.complex.rank(m + 1) + rc.first, a.complex.rank(m) + rc.second, p);
            if (!mat.isZero()) out.action[g][m] = mat;
        }
    }
    return out;
}

KoszulLevelResult koszulLevel(const KoszulComplex& k) {
    KoszulLevelResult out;
    out.certificate = certifySop(k.ring, k.elements);
    out.value = k.n() + 1;
    out.status = out.certificate.isSop ? LevelStatus::Exact : LevelStatus::UpperBound;
    return out;
}

}  // namespace perfcx
