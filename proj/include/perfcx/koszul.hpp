#ifndef PERFCX_KOSZUL_HPP
#define PERFCX_KOSZUL_HPP

#include "perfcx/homology.hpp"

namespace perfcx {

/// Size-k subsets of {0..n-1} in lexicographic order; the degree-k basis of
/// an exterior algebra on n generators.
std::vector<std::vector<int>> subsetsOfSize(int n, int k);
int subsetIndex(int n, const std::vector<int>& s);
long binomial(int n, int k);

/// Exterior-algebra Koszul complex on a list of ring elements. Basis of
/// degree i is indexed by size-i subsets in lexicographic order; the
/// differential sends a generator to its element with alternating signs.
struct KoszulComplex {
    Ring ring;
    std::vector<Polynomial> elements;
    FreeComplex cx;
    int n() const { return static_cast<int>(elements.size()); }
};

KoszulComplex koszul(const Ring& r, std::vector<Polynomial> xs);

/// Contraction against the top form: dual(K) is isomorphic to the n-fold
/// desuspension of K. Both directions are verified chain maps composing to
/// the identity; a failure is an internal defect.
struct SelfDuality {
    ChainMap iso;      // dual(K) -> suspend(K, -n)
    ChainMap inverse;  // suspend(K, -n) -> dual(K)
};
SelfDuality checkSelfDuality(const KoszulComplex& k);

/// K tensor K decomposes as the sum over i of binomial(n, i) suspended
/// copies of K. The degreewise rank identity is checked for any n; the
/// explicit chain isomorphism is constructed for n <= 3.
struct TensorDecomposition {
    bool ranksMatch = false;
    std::vector<int> productRanks;      // ranks of K tensor K, degrees 0..2n
    std::vector<int> sumRanks;          // ranks of the decomposition
    bool isoConstructed = false;
    std::vector<FreeComplex> summands;  // suspended copies, subset order
    ChainMap iso;                       // directSum(summands) -> K tensor K
    ChainMap inverse;
};
TensorDecomposition checkTensorDecomposition(const KoszulComplex& k);

/// Differential graded module structure over a Koszul complex: one
/// degree-raising action matrix per Koszul generator per degree.
struct DGModuleStructure {
    KoszulComplex koszul;
    FreeComplex complex;
    std::vector<std::map<int, RingMatrix>> action;  // action[i][m]: F_m -> F_{m+1}
    RingMatrix actionAt(int i, int m) const;
};

struct DGCheck {
    bool valid = false;
    std::string failingAxiom;  // empty when valid
    /// K is exterior on its degree-one part, so the Leibniz and alternation
    /// identities on the generators imply all DG-module axioms.
    std::string reductionNote =
        "axioms checked on the degree-one Koszul generators; the exterior "
        "algebra relation extends them to all of K";
};

/// Checks the Leibniz identity d nu_i + nu_i d = x_i and the alternation
/// identities nu_i nu_j = -nu_j nu_i, nu_i nu_i = 0, exactly in every degree.
DGCheck verifyDGModule(const DGModuleStructure& s);

/// K acting on itself by exterior left multiplication.
DGModuleStructure koszulSelfAction(const KoszulComplex& k);
DGModuleStructure dgSuspend(const DGModuleStructure& s, int i);
DGModuleStructure dgDirectSum(const DGModuleStructure& a, const DGModuleStructure& b);

enum class LevelStatus { Exact, UpperBound };

struct KoszulLevelResult {
    int value = 0;
    LevelStatus status = LevelStatus::UpperBound;
    SopCertificate certificate;
};

/// n + 1, EXACT when the elements are a certified system of parameters
/// (the equality encodes the intersection-theorem lower bound, not an
/// independent level computation), otherwise an upper bound.
KoszulLevelResult koszulLevel(const KoszulComplex& k);

}  // namespace perfcx

#endif
