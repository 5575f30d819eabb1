#ifndef PERFCX_HOMOLOGY_HPP
#define PERFCX_HOMOLOGY_HPP

#include <optional>

#include "perfcx/complex.hpp"
#include "perfcx/idealops.hpp"

namespace perfcx {

/// Finitely generated module given by generators and a relation matrix
/// (generators x relations). The module is coker(relations).
struct ModulePresentation {
    Ring ring;
    int generators = 0;
    RingMatrix relations;

    static ModulePresentation free(const Ring& r, int rank);
    /// R/I as a cyclic module.
    static ModulePresentation cyclic(const Ring& r, const std::vector<Polynomial>& idealGens);
    bool isZeroModule() const;
};

/// H_n(F) = ker d_n / im d_{n+1}: generators are the syzygy columns of d_n,
/// relations express boundaries and ambient syzygy redundancies in them.
ModulePresentation homologyPresentation(const FreeComplex& f, int n);

/// Generators of ker d_n as columns.
RingMatrix cycleGenerators(const FreeComplex& f, int n);

struct GhostResult {
    bool ghost = false;
    int failingDegree = 0;   // when not ghost
    int failingCycle = -1;   // column of the cycle generator that escapes
    /// Per-degree boundary preimages of the images of cycle generators.
    std::map<int, RingMatrix> preimages;
};

/// H(f) = 0, decided degreewise: the image of every generator of ker d lies
/// in the boundary submodule of the target.
GhostResult isGhost(const ChainMap& f);

/// Solves d^F h + h d^G = f exactly, all degrees at once, through one
/// flattened solveLinear instance; nullopt when no homotopy exists over the
/// ring. A returned homotopy satisfies the identity exactly.
std::optional<Homotopy> nullHomotopy(const ChainMap& f);

/// Residue-field points at which fiberwise vanishing is tested.
struct FieldFiber {
    enum class Kind { MaximalIdeal, GenericPoint };
    Kind kind = Kind::MaximalIdeal;
    static FieldFiber maximalIdeal() { return FieldFiber{Kind::MaximalIdeal}; }
    /// Requires the ring's domain flag.
    static FieldFiber genericPoint() { return FieldFiber{Kind::GenericPoint}; }
    std::string str() const;
};

struct FiberMapResult {
    FieldFiber fiber;
    bool zeroOnHomology = true;
    int witnessDegree = 0;                  // meaningful when not zero
    std::map<int, int> sourceHomologyDim;   // fiber homology dimensions
    std::map<int, int> targetHomologyDim;
};

/// Induced map on homology of the fiber complex, by exact field linear
/// algebra: at the graded point all variables are killed; at the generic
/// point scalars are fractions over the (certified) domain.
FiberMapResult fieldFiberHomologyMap(const ChainMap& f, const FieldFiber& fiber);

struct FiberwiseResult {
    std::vector<FiberMapResult> perFiber;
    bool zeroAtAllSuppliedFibers = true;
    /// Always set: the fiber list samples Spec R, it never exhausts it.
    std::string caveat;
};

FiberwiseResult isFiberwiseZero(const ChainMap& f, const std::vector<FieldFiber>& fibers);

/// H(F) is I-torsion: every generator of I is a radical member of the
/// annihilator of every nonzero homology module.
bool isITorsion(const FreeComplex& f, const Ideal& I);

struct GhostProxyResult {
    bool ghost = false;
    int resolutionLength = 0;
    /// Degrees actually checked; homology outside is distorted by truncation.
    int windowLo = 0, windowHi = 0;
    std::string caveat;  // finite-module proxy label
};

/// H(C tensor f) = 0 for a finitely generated test module C, computed by
/// replacing C with a truncated free resolution covering f's support.
/// Declared here, implemented with the resolution machinery.
GhostProxyResult ghostAfterTensor(const ModulePresentation& c, const ChainMap& f);

/// Rank of the matrix over the residue field at the graded point.
int gradedFiberRank(const RingMatrix& m);
/// v lies in the column span of m over the residue field at the graded point.
bool gradedFiberInSpan(const RingMatrix& m, const RingMatrix& v);

}  // namespace perfcx

#endif
