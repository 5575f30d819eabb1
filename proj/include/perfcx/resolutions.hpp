#ifndef PERFCX_RESOLUTIONS_HPP
#define PERFCX_RESOLUTIONS_HPP

#include "perfcx/homology.hpp"

namespace perfcx {

/// Truncated minimal graded free resolution, built by iterated syzygies with
/// redundancy pruning at each step.
struct PartialResolution {
    ModulePresentation module;  // trimmed presentation of the resolved module
    FreeComplex complex;        // degrees 0..builtLength
    RingMatrix augmentation;    // original generators x rank(0)
    int requestedLength = 0;
    int builtLength = 0;
    bool finite = false;  // the kernel vanished before the requested length
};

/// Length-L minimal graded resolution: exact in degrees 1..L-1, differential
/// entries in the graded maximal ideal. Requires a graded (homogeneous)
/// presentation; inhomogeneous data that breaks minimality is rejected.
PartialResolution minimalResolution(const ModulePresentation& m, int length);

/// Lifts a degree-zero map phi0 : G_0 -> F_0 through the resolution, solving
/// the commuting squares degree by degree. Failure at some degree would
/// contradict exactness and raises logic_error.
ChainMap liftThroughResolution(const RingMatrix& phi0, const PartialResolution& f,
                               const FreeComplex& g);

}  // namespace perfcx

#endif
