#ifndef PERFCX_COMPLEX_HPP
#define PERFCX_COMPLEX_HPP

#include <map>
#include <tuple>
#include <vector>

#include "perfcx/groebner.hpp"
#include "perfcx/matrix.hpp"

namespace perfcx {

/// Sentinel for the span of the zero complex.
inline constexpr int kSpanNegativeInfinity = std::numeric_limits<int>::min();

/// Bounded complex of finite free modules: ranks per degree and differential
/// matrices with d(n-1) d(n) = 0 exactly. Homological grading: d(n) lowers
/// degree, shape rank(n-1) x rank(n). Immutable after construction; the
/// window [lo, hi] is trimmed to the nonzero ranks.
class FreeComplex {
public:
    FreeComplex() = default;
    FreeComplex(Ring ring, int lo, std::vector<int> ranks, std::map<int, RingMatrix> diffs);
    static FreeComplex zero(const Ring& r);
    static FreeComplex concentrated(const Ring& r, int degree, int rank);
    /// The ring placed in degree 0 (tensor unit).
    static FreeComplex unit(const Ring& r) { return concentrated(r, 0, 1); }

    bool valid() const { return ring_.valid(); }
    const Ring& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool isZero() const { return lo_ > hi_; }
    int rank(int n) const;
    /// Differential leaving degree n; zero matrix of the right shape if absent.
    RingMatrix diff(int n) const;
    int totalRank() const;

    bool operator==(const FreeComplex& o) const;
    bool operator!=(const FreeComplex& o) const { return !(*this == o); }
    std::string describeRanks() const;

private:
    Ring ring_;
    int lo_ = 0, hi_ = -1;
    std::vector<int> ranks_;              // index: degree - lo_
    std::map<int, RingMatrix> diffs_;     // only nonzero-shaped, nonzero matrices
};

/// Degreewise matrices commuting with the differentials.
class ChainMap {
public:
    ChainMap() = default;
    ChainMap(FreeComplex source, FreeComplex target, std::map<int, RingMatrix> comps);
    static ChainMap zero(const FreeComplex& source, const FreeComplex& target);
    static ChainMap identity(const FreeComplex& f);
    /// Multiplication by a ring element, as a chain self-map.
    static ChainMap scalarMultiple(const FreeComplex& f, const Polynomial& c);

    bool valid() const { return source_.valid(); }
    const FreeComplex& source() const { return source_; }
    const FreeComplex& target() const { return target_; }
    RingMatrix comp(int n) const;  // shape target.rank(n) x source.rank(n)
    bool isZeroMap() const;

    ChainMap compose(const ChainMap& inner) const;  // this after inner
    ChainMap operator+(const ChainMap& o) const;
    ChainMap operator-(const ChainMap& o) const;
    ChainMap operator-() const;

    bool operator==(const ChainMap& o) const;

private:
    FreeComplex source_, target_;
    std::map<int, RingMatrix> comps_;
};

/// Degree +1 map data; validity is asserted by whoever consumes it.
struct Homotopy {
    FreeComplex source, target;
    std::map<int, RingMatrix> comp;  // comp[n]: target.rank(n+1) x source.rank(n)
    RingMatrix at(int n) const;
};

/// sup - inf + 1 over nonzero degrees; kSpanNegativeInfinity for zero.
int spanOf(const FreeComplex& f);

FreeComplex suspend(const FreeComplex& f, int i);
ChainMap suspendMap(const ChainMap& f, int i);

/// Hom(F, R) with signs chosen so that dual(dual(F)) = F strictly.
FreeComplex dual(const FreeComplex& f);

FreeComplex tensor(const FreeComplex& f, const FreeComplex& g);

/// Block layout of tensor(f, g) in degree n: tuples (i, offset, rank_f(i),
/// rank_g(n-i)) for ascending i with both ranks nonzero.
std::vector<std::tuple<int, int, int, int>> tensorBlocks(const FreeComplex& f,
                                                         const FreeComplex& g, int n);

ChainMap tensorMap(const ChainMap& f, const ChainMap& g);
ChainMap tensorPower(const ChainMap& f, int n);  // n >= 1

/// Hom_R(F, G) realized as dual(F) tensor G.
FreeComplex homComplex(const FreeComplex& f, const FreeComplex& g);

/// The evaluation dual(F) tensor F -> R as a chain map onto the unit complex.
ChainMap evaluationMap(const FreeComplex& f);

FreeComplex directSum(const std::vector<FreeComplex>& parts);
ChainMap directSumMap(const std::vector<ChainMap>& parts);

/// Mapping cone: C_n = F_n + G_{n-1} for f : G -> F.
FreeComplex cone(const ChainMap& f);

struct Truncation {
    FreeComplex below;     // F_{< d}, a subcomplex
    ChainMap inclusion;    // below -> F
    FreeComplex above;     // F / F_{< d}, the hard quotient
    ChainMap surjection;   // F -> above
};
Truncation truncateBelow(const FreeComplex& f, int d);

struct Minimization {
    FreeComplex minimal;
    ChainMap project;   // F -> minimal
    ChainMap include;   // minimal -> F; project after include = identity
};

/// Splits off unit differential entries (nonzero constant term, invertible in
/// the quotient ring) until every differential entry lies in the maximal
/// graded ideal. Requires a graded-local ring model.
Minimization minimize(const FreeComplex& f);

/// f' = e after (dual(F) tensor f) : dual(F) tensor G -> R for f : G -> F.
ChainMap evaluationReduce(const ChainMap& f);

/// Transports a factorization f = g2 after g1 through evaluationReduce:
/// returns (h1, h2) with h2 after h1 = evaluationReduce(f), h1 landing in
/// dual(F) tensor X.
std::pair<ChainMap, ChainMap> evaluationReduceFactorization(const ChainMap& f,
                                                            const ChainMap& g1,
                                                            const ChainMap& g2);

}  // namespace perfcx

#endif
