#ifndef PERFCX_LEVEL_HPP
#define PERFCX_LEVEL_HPP

#include "perfcx/koszul.hpp"

namespace perfcx {

/// One step of a semiprojective filtration: a degreewise split inclusion of
/// the subcomplex into the ambient complex, with the splitting stored so
/// summand-ness is witnessed rather than re-derived.
struct FiltrationStep {
    std::map<int, RingMatrix> inj;    // ambient.rank(n) x sub.rank(n)
    std::map<int, RingMatrix> split;  // sub.rank(n) x ambient.rank(n)
    std::map<int, int> ranks;
    int rankAt(int n) const {
        auto it = ranks.find(n);
        return it == ranks.end() ? 0 : it->second;
    }
    RingMatrix injAt(const FreeComplex& ambient, int n) const;
    RingMatrix splitAt(const FreeComplex& ambient, int n) const;
};

/// Chain of subcomplexes 0 = F^0 in F^1 in ... in F^l = complex with
/// graded-split steps and zero differential on every quotient.
struct Filtration {
    FreeComplex complex;
    std::vector<FiltrationStep> steps;
    int length() const { return static_cast<int>(steps.size()); }
};

struct FiltrationCheck {
    bool valid = false;
    std::string failure;  // failing step and condition when invalid
};

/// Checks split-ness, nesting, subcomplex closure with zero quotient
/// differential, and that the last step is the whole complex.
FiltrationCheck validateFiltration(const Filtration& f);

/// The stupid filtration F^n = P_{< lo + n}, of length span(P).
Filtration spanFiltration(const FreeComplex& f);

/// Kernel filtration on dual(complex): step i is the annihilator of step
/// l - i. Requires column-selection steps; length is preserved.
Filtration dualFiltration(const Filtration& f);

/// Step n of the product is the sum over j of F^{j+1} tensor G^{n-j};
/// length l + m - 1. Requires column-selection steps.
Filtration tensorFiltration(const Filtration& a, const Filtration& b);

struct LevelBound {
    int value = 0;
    LevelStatus status = LevelStatus::UpperBound;
    FreeComplex minimized;  // the complex carrying the witness
    Filtration witness;
};

/// Upper bound for level: minimize, split into coordinate direct summands,
/// and take the maximal summand span; the witness is the direct sum of the
/// padded stupid filtrations on the minimized complex.
LevelBound levelUpperBound(const FreeComplex& f);

struct DecomposedLevelBound {
    int value = 0;
    std::vector<FreeComplex> summands;
    ChainMap iso;      // directSum(summands) -> F, verified two-sided
    ChainMap inverse;
    Filtration modelWitness;  // on directSum(summands)
};

/// Upper bound through a caller-supplied direct-sum decomposition: validates
/// that iso and inverse are mutually inverse chain maps and returns the
/// maximum of the summand bounds (level is an isomorphism invariant and
/// direct sums take the maximum).
DecomposedLevelBound levelUpperBoundViaDecomposition(const FreeComplex& f,
                                                     const std::vector<FreeComplex>& summands,
                                                     const ChainMap& iso,
                                                     const ChainMap& inverse);

/// The summands and verified isomorphism exhibiting Hom(K, K) as a direct
/// sum of suspended copies of K (self-duality plus the product splitting).
struct HomDecomposition {
    std::vector<FreeComplex> summands;
    ChainMap iso;      // directSum(summands) -> homComplex(K, K)
    ChainMap inverse;
};
HomDecomposition koszulHomSelfDecomposition(const KoszulComplex& k);

}  // namespace perfcx

#endif
