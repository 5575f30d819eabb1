#ifndef PERFCX_THEOREMS_HPP
#define PERFCX_THEOREMS_HPP

#include <cstdint>

#include "perfcx/level.hpp"
#include "perfcx/resolutions.hpp"

namespace perfcx {

enum class CheckStatus { Pass, Fail, NA, Undetermined, Sensation };
std::string statusString(CheckStatus s);

struct HypothesisResult {
    std::string name;
    CheckStatus status = CheckStatus::NA;
    std::string witness;
};

struct ConclusionResult {
    CheckStatus status = CheckStatus::NA;
    std::string witness;
};

/// Structured verdict for one theorem instance. The conclusion is N-A
/// whenever a hypothesis fails; a SENSATION is a mechanically verified
/// violation of a proved statement and is treated as a tool defect until
/// reverified independently.
struct CheckReport {
    std::string check;
    std::string ring;
    std::string instance;
    std::vector<HypothesisResult> hypotheses;
    ConclusionResult conclusion;
    std::vector<std::string> caveats;
    std::uint64_t seed = 0;
    std::int64_t wallTimeMs = 0;

    bool anyHypothesisFailed() const;
    bool sensation() const;
    std::string human() const;
};

std::string reportToJson(const CheckReport& r, bool includeTiming = true);
std::string reportsToJson(const std::vector<CheckReport>& rs, bool includeTiming = true);
/// 0 all consistent, 2 hypothesis data error, 4 sensation.
int aggregateExitCode(const std::vector<CheckReport>& rs);

struct NilpotenceResult {
    bool found = false;
    int n = 0;  // smallest power found, or the exhausted bound
    Homotopy witness;
};

/// Smallest n <= nmax with the n-th tensor power null-homotopic.
NilpotenceResult nilpotenceSearch(const ChainMap& f, int nmax);

/// f = out after through; the middle complex carries the torsion hypothesis.
struct Factorization {
    ChainMap through;  // G -> X
    ChainMap out;      // X -> F
};

CheckReport checkTensorNilpotence(const ChainMap& f, const Ideal& I, const Factorization& fac,
                                  const std::vector<FieldFiber>& fibers, int nmax,
                                  std::uint64_t seed);

CheckReport checkMIT(const ChainMap& f, const Ideal& I, const Factorization& fac,
                     const std::vector<FieldFiber>& fibers, std::uint64_t seed);

CheckReport checkINIT(const FreeComplex& F, const Ideal& I, const RingMatrix& z,
                      std::uint64_t seed);

CheckReport checkCanonicalElement(const std::vector<Polynomial>& sop, const FreeComplex& F,
                                  const ChainMap& f, std::uint64_t seed);

CheckReport checkLiftNonvanishing(const Ideal& I, const std::vector<Polynomial>& sop,
                                  int length, std::uint64_t seed);

CheckReport checkMinors(const std::vector<Polynomial>& sop,
                        const std::vector<Polynomial>& ygens, const RingMatrix& A,
                        std::uint64_t seed);

CheckReport checkMonomial(const std::vector<Polynomial>& sop, int n, std::uint64_t seed);

CheckReport checkWedgeInjectivity(const Ideal& I, int length, std::uint64_t seed);

CheckReport checkRankBound(const DGModuleStructure& s, std::uint64_t seed);

/// The sharpness control: the canonical surjection from the Koszul complex
/// on all variables onto its top suspension. Torsion, not fiberwise zero,
/// level bound d + 1 (verified by the acceptance suite).
struct SharpnessInstance {
    KoszulComplex k;
    FreeComplex target;  // suspended unit complex in degree d
    ChainMap f;
};
SharpnessInstance sharpnessControlInstance(const Ring& r);

/// Deterministic splitmix64 stream for the randomized sweeps.
struct SweepRng {
    std::uint64_t state;
    explicit SweepRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

std::vector<CheckReport> sweepMITLeft(const Ring& r, int count, std::uint64_t seed);
std::vector<CheckReport> sweepMinors(const Ring& r, int count, std::uint64_t seed);
std::vector<CheckReport> sweepGhostLemma(const Ring& r, int count, std::uint64_t seed);

}  // namespace perfcx

#endif
