#ifndef PERFCX_POLY_HPP
#define PERFCX_POLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "perfcx/scalar.hpp"

namespace perfcx {

/// Caps on Groebner-style computations. Exceeding a cap raises ResourceError,
/// never a wrong answer.
struct ComputeLimits {
    std::size_t maxSPairs = 100000;
    std::size_t maxTerms = 10000000;
};

ComputeLimits& globalLimits();

/// Exponent vector of fixed length (= number of ring variables).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}
    static Monomial unit(int nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }
    static Monomial var(int nvars, int i, std::uint32_t e = 1);

    int nvars() const { return static_cast<int>(e_.size()); }
    std::uint32_t exp(int i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exps() const { return e_; }
    long degree() const;
    bool isUnit() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;          // this | o
    Monomial dividedBy(const Monomial& o) const;    // this / o, assumes o | this
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    /// Container ordering only; semantic comparisons go through MonomialOrder.
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

private:
    std::vector<std::uint32_t> e_;
};

struct MonomialOrder {
    enum class Kind { Degrevlex, Lex, Weighted };
    Kind kind = Kind::Degrevlex;
    std::vector<long> weights;  // Weighted: weighted degree first, degrevlex tie-break

    /// <0, 0, >0 as a is smaller/equal/greater than b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    std::string str() const;
    static MonomialOrder parse(const std::string& s);
};

struct Term {
    Monomial mon;
    Scalar coef;
};

/// Terms sorted strictly descending in the ring's monomial order.
using TermList = std::vector<Term>;

class Ring;
class Polynomial;
struct RingImpl;

/// A quotient P/J of a multivariate polynomial ring over an exact field,
/// with a monomial order and a cached reduced Groebner basis of J.
/// Value-semantic shared handle; immutable after construction.
class Ring {
public:
    Ring() = default;

    static Ring polynomialRing(Field f, std::vector<std::string> vars,
                               MonomialOrder order = MonomialOrder{});
    /// Quotient of the polynomial ring underlying `ambient` by the ideal the
    /// generators span. Generators must have zero constant term (so that the
    /// graded point, all variables -> 0, survives the quotient).
    static Ring quotient(const Ring& ambient, const std::vector<Polynomial>& quotientGens);

    bool valid() const { return impl_ != nullptr; }
    bool sameAs(const Ring& o) const { return impl_ == o.impl_; }

    Field field() const;
    int nvars() const;
    const std::vector<std::string>& varNames() const;
    const MonomialOrder& order() const;
    /// Generators of the quotient ideal J, as ambient-ring polynomials
    /// (empty for a free polynomial ring).
    std::vector<Polynomial> quotientGens() const;
    /// Reduced Groebner basis of J in the ambient polynomial ring.
    std::vector<Polynomial> quotientGroebner() const;
    bool isPolynomialRing() const;

    /// Caller-supplied certificates used by height and generic-point fibers.
    bool declaredEquidimensional() const;
    bool declaredDomain() const;   // automatically true when J = 0
    Ring withEquidimensionalFlag(bool) const;
    Ring withDomainFlag(bool) const;

    /// The ambient polynomial ring (this ring if J = 0).
    Ring ambient() const;

    Polynomial zero() const;
    Polynomial one() const;
    Polynomial constant(const Scalar& c) const;
    Polynomial constant(long n) const;
    Polynomial var(int i) const;
    Polynomial monomial(const Monomial& m, const Scalar& c) const;
    /// Normalizes raw terms (sort, combine, drop zeros) and reduces mod J.
    Polynomial makePoly(TermList raw) const;
    /// Reinterprets a polynomial of the ambient ring in this ring (reduces mod J).
    Polynomial inject(const Polynomial& ambientPoly) const;

    std::string str() const;

    const RingImpl& impl() const { return *impl_; }

private:
    explicit Ring(std::shared_ptr<const RingImpl> p) : impl_(std::move(p)) {}
    std::shared_ptr<const RingImpl> impl_;
    friend class Polynomial;
};

/// Element of a Ring, stored as the unique normal form mod the quotient ideal.
class Polynomial {
public:
    Polynomial() = default;  // detached; only valid as a container placeholder

    const Ring& ring() const { return ring_; }
    const TermList& terms() const { return t_; }
    bool isZero() const { return t_.empty(); }
    bool isOne() const;
    bool isConstant() const;
    /// Coefficient of the constant monomial (zero scalar if absent).
    Scalar constantCoef() const;
    const Monomial& leadingMonomial() const;
    const Scalar& leadingCoef() const;
    long degree() const;  // total degree, -1 for zero
    bool isHomogeneous() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial pow(unsigned n) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    Polynomial(Ring r, TermList t) : ring_(std::move(r)), t_(std::move(t)) {}
    Ring ring_;
    TermList t_;
    friend class Ring;
};

/// Ideal of a Ring, generators kept in normal form; the reduced Groebner
/// basis of (gens + J) in the ambient ring is computed at construction.
class Ideal {
public:
    Ideal(Ring ring, std::vector<Polynomial> gens);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    /// Reduced GB of (gens + J) over the ambient polynomial ring.
    const std::vector<TermList>& groebner() const { return gb_; }
    bool isUnitIdeal() const;
    bool isZeroIdeal() const { return gens_.empty(); }
    std::string str() const;

private:
    Ring ring_;
    std::vector<Polynomial> gens_;
    std::vector<TermList> gb_;
};

std::string polyToString(const Ring& r, const TermList& t);

}  // namespace perfcx

#endif
