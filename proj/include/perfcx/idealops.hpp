#ifndef PERFCX_IDEALOPS_HPP
#define PERFCX_IDEALOPS_HPP

#include <limits>
#include <optional>

#include "perfcx/groebner.hpp"

namespace perfcx {

/// Sentinel for the dimension of the zero ring (empty variety).
inline constexpr int kDimNegativeInfinity = std::numeric_limits<int>::min();
/// Sentinel for the height of the unit ideal.
inline constexpr int kHeightInfinity = std::numeric_limits<int>::max();

/// p lies in I, as an ideal of the quotient ring.
bool idealMembership(const Polynomial& p, const Ideal& I);

/// Krull dimension of ring/I, computed as the maximum size of a variable
/// subset independent modulo the leading-term ideal of I + quotientIdeal.
/// Returns kDimNegativeInfinity when I is the unit ideal. Always evaluated
/// with a degree-compatible order, whatever the ring's display order.
int krullDimension(const Ideal& I);

/// Krull dimension of the ring itself.
int ringDimension(const Ring& r);

struct HeightResult {
    int value = 0;
    /// true when the ring was not flagged equidimensional, so the formula
    /// dim R - dim R/I is only an equidimensional-case surrogate.
    bool equidimensionalityCaveat = false;
};

/// dim R - dim R/I; the paper's height under the equidimensionality caveat.
HeightResult heightOf(const Ideal& I);

/// p lies in the radical of I, decided by the Rabinowitsch trick: 1 lies in
/// (I, 1 - t p) in an auxiliary ring with one extra variable.
bool radicalMembership(const Polynomial& p, const Ideal& I);

/// Ideal generated by all d x d minors of A (Laplace expansion, exact).
/// d exceeding min(rows, cols) yields the zero ideal.
Ideal minorsIdeal(const RingMatrix& A, int d);

/// { a : a * target lies in the column span of M } for a column vector target.
Ideal submoduleQuotient(const RingMatrix& M, const RingMatrix& target);

Ideal idealIntersection(const Ideal& a, const Ideal& b);

/// Annihilator of coker(relations): intersection over generators e_i of the
/// quotients (column span of relations : e_i).
Ideal annihilatorOfCokernel(const RingMatrix& relations);

struct SopCertificate {
    bool isSop = false;         // dim R/(x) = 0 and #x = dim R
    bool isPartialSop = false;  // dim R/(x) = dim R - #x
    int ringDim = 0;
    int quotientDim = 0;        // kDimNegativeInfinity when (x) is the unit ideal
};

/// Certifies a (partial) system of parameters by leading-term dimension counts.
SopCertificate certifySop(const Ring& r, const std::vector<Polynomial>& xs);

}  // namespace perfcx

#endif
