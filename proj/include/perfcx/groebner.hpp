#ifndef PERFCX_GROEBNER_HPP
#define PERFCX_GROEBNER_HPP

#include <optional>
#include <span>
#include <vector>

#include "perfcx/matrix.hpp"
#include "perfcx/poly.hpp"

namespace perfcx {

/// Reduced Groebner basis of an ideal (gens + J) held against its quotient ring.
/// Basis elements live in the ambient polynomial ring.
class GroebnerBasis {
public:
    GroebnerBasis(Ring ring, std::vector<TermList> ambientBasis);

    const Ring& ring() const { return ring_; }
    const std::vector<TermList>& elements() const { return basis_; }
    std::vector<Polynomial> elementsInAmbient() const;

    /// Unique remainder of p under multivariate division by the basis.
    Polynomial normalForm(const Polynomial& p) const;
    bool reducesToZero(const Polynomial& p) const;
    bool isUnitIdeal() const;

private:
    Ring ring_;
    std::vector<TermList> basis_;
};

/// Reduced Groebner basis of (gens) + quotientIdeal w.r.t. the ring's order.
GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& gens);

/// Remainder of p under division by a Groebner basis; normalForm(p) = 0 iff p
/// lies in the ideal the basis generates.
Polynomial normalForm(const Polynomial& p, const GroebnerBasis& basis);

struct LinearSolution {
    bool solvable = false;
    RingMatrix solution;      // X with A X = B, when solvable
    int failingColumn = -1;   // first column of B outside the span otherwise
};

/// Solves A X = B over the quotient ring via module Groebner bases with a
/// position-over-term order and division tracking. NoSolution is a value:
/// solvable == false with the offending column recorded.
LinearSolution solveLinear(const RingMatrix& A, const RingMatrix& B);

/// Columns generate { v : A v = 0 } over the quotient ring (Schreyer-style
/// from the module Groebner basis). A * syzygies(A) = 0 exactly.
RingMatrix syzygies(const RingMatrix& A);

// --- low-level engine (exposed for the ideal-operation layer and tests) ---
namespace engine {

struct PolyCtx {
    Field field;
    int nvars = 0;
    MonomialOrder order;
};

TermList normalizeTL(const PolyCtx& ctx, TermList raw);
TermList addTL(const PolyCtx& ctx, const TermList& a, const TermList& b);
TermList subTL(const PolyCtx& ctx, const TermList& a, const TermList& b);
TermList mulTL(const PolyCtx& ctx, const TermList& a, const TermList& b);
TermList scaleTL(const TermList& a, const Scalar& c);
TermList mulTermTL(const PolyCtx& ctx, const TermList& a, const Term& t);

/// Full multivariate division; returns the remainder, optionally tracking
/// quotients (p = sum quotients[i] * basis[i] + remainder).
TermList normalFormTL(const PolyCtx& ctx, TermList p, std::span<const TermList> basis,
                      std::vector<TermList>* quotients = nullptr);

/// Reduced, monic Groebner basis, sorted by leading monomial ascending.
std::vector<TermList> reducedGroebnerTL(const PolyCtx& ctx, std::vector<TermList> gens);

struct ModTerm {
    int comp = 0;
    Monomial mon;
    Scalar coef;
};
/// Sorted strictly descending in position-over-term order (lower component
/// index dominates, then the monomial order).
using ModElem = std::vector<ModTerm>;

struct ModuleGB {
    PolyCtx ctx;
    int comps = 0;
    std::vector<ModElem> basis;                   // monic, interreduced
    std::vector<std::vector<TermList>> reps;      // basis[k] = sum reps[k][i] * gens[i]
};

ModuleGB moduleGroebner(const PolyCtx& ctx, int comps, std::vector<ModElem> gens,
                        bool keepReps);

/// Full reduction of v by the basis; optionally tracks coefficients on basis
/// elements (v = sum coeffs[k] * basis[k] + remainder).
ModElem moduleNormalForm(const PolyCtx& ctx, const ModuleGB& gb, ModElem v,
                         std::vector<TermList>* coeffs = nullptr);

/// Generators of the syzygy module of the given generators (all relations
/// u with sum u_i * gens[i] = 0), as coefficient vectors.
std::vector<std::vector<TermList>> moduleSyzygies(const PolyCtx& ctx, int comps,
                                                  const std::vector<ModElem>& gens);

}  // namespace engine

}  // namespace perfcx

#endif
