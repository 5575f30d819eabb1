#include "perfcx/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "perfcx/groebner.hpp"

namespace perfcx {

ComputeLimits& globalLimits() {
    static ComputeLimits limits;
    return limits;
}

// ---------- Monomial ----------

Monomial Monomial::var(int nvars, int i, std::uint32_t e) {
    std::vector<std::uint32_t> v(nvars, 0);
    v.at(i) = e;
    return Monomial(std::move(v));
}

long Monomial::degree() const {
    long d = 0;
    for (auto e : e_) d += e;
    return d;
}

bool Monomial::isUnit() const {
    for (auto e : e_)
        if (e != 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::uint32_t> v(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) v[i] = e_[i] + o.e_[i];
    return Monomial(std::move(v));
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::dividedBy(const Monomial& o) const {
    std::vector<std::uint32_t> v(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) v[i] = e_[i] - o.e_[i];
    return Monomial(std::move(v));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> v(a.e_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(v));
}

// ---------- MonomialOrder ----------

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const int n = a.nvars();
    switch (kind) {
        case Kind::Lex:
            for (int i = 0; i < n; ++i) {
                if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
            }
            return 0;
        case Kind::Weighted: {
            long wa = 0, wb = 0;
            for (int i = 0; i < n; ++i) {
                long w = i < static_cast<int>(weights.size()) ? weights[i] : 1;
                wa += w * a.exp(i);
                wb += w * b.exp(i);
            }
            if (wa != wb) return wa > wb ? 1 : -1;
            [[fallthrough]];
        }
        case Kind::Degrevlex: {
            if (kind == Kind::Degrevlex) {
                long da = a.degree(), db = b.degree();
                if (da != db) return da > db ? 1 : -1;
            }
            for (int i = n - 1; i >= 0; --i) {
                if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
            }
            return 0;
        }
    }
    return 0;
}

std::string MonomialOrder::str() const {
    switch (kind) {
        case Kind::Degrevlex: return "degrevlex";
        case Kind::Lex: return "lex";
        case Kind::Weighted: {
            std::string s = "weighted(";
            for (std::size_t i = 0; i < weights.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(weights[i]);
            }
            return s + ")";
        }
    }
    return "degrevlex";
}

MonomialOrder MonomialOrder::parse(const std::string& s) {
    if (s == "degrevlex") return MonomialOrder{MonomialOrder::Kind::Degrevlex, {}};
    if (s == "lex") return MonomialOrder{MonomialOrder::Kind::Lex, {}};
    if (s.rfind("weighted", 0) == 0) {
        MonomialOrder o{MonomialOrder::Kind::Weighted, {}};
        std::size_t b = s.find('('), e = s.rfind(')');
        if (b == std::string::npos || e == std::string::npos || e < b)
            throw DataError("malformed weighted order: " + s);
        std::string body = s.substr(b + 1, e - b - 1);
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) o.weights.push_back(std::stol(tok));
        return o;
    }
    throw DataError("unknown monomial order: " + s);
}

// ---------- RingImpl / Ring ----------

struct RingImpl {
    Field field;
    std::vector<std::string> vars;
    MonomialOrder order;
    std::vector<TermList> quotientGens;  // normal form mod groebnerJ
    std::vector<TermList> groebnerJ;     // reduced GB of J in the ambient ring
    bool equidimensional = false;
    bool domain = false;
    std::shared_ptr<const RingImpl> ambient;  // null when J = 0

    engine::PolyCtx ctx() const { return engine::PolyCtx{field, static_cast<int>(vars.size()), order}; }
};

Ring Ring::polynomialRing(Field f, std::vector<std::string> vars, MonomialOrder order) {
    if (vars.empty()) throw DataError("ring needs at least one variable");
    if (vars.size() > 8) throw DataError("too many variables");
    std::set<std::string> seen;
    for (auto& v : vars)
        if (!seen.insert(v).second) throw DataError("duplicate variable name: " + v);
    auto impl = std::make_shared<RingImpl>();
    impl->field = f;
    impl->vars = std::move(vars);
    impl->order = order;
    impl->domain = true;
    return Ring(std::move(impl));
}

Ring Ring::quotient(const Ring& ring, const std::vector<Polynomial>& quotientGens) {
    Ring amb = ring.ambient();
    std::vector<TermList> gens;
    for (auto& t : ring.impl().quotientGens) gens.push_back(t);
    for (auto& g : quotientGens) {
        if (!g.ring().sameAs(ring) && !g.ring().sameAs(amb))
            throw DataError("quotient generator from a different ring");
        if (!g.constantCoef().isZero())
            throw DataError("quotient generator has a nonzero constant term: " + g.str());
        if (!g.isZero()) gens.push_back(g.terms());
    }
    auto impl = std::make_shared<RingImpl>();
    impl->field = amb.field();
    impl->vars = amb.varNames();
    impl->order = amb.order();
    impl->ambient = amb.impl_;
    impl->groebnerJ = engine::reducedGroebnerTL(impl->ctx(), gens);
    for (auto& g : gens) {
        TermList t = engine::normalizeTL(impl->ctx(), g);
        if (!t.empty()) impl->quotientGens.push_back(std::move(t));
    }
    impl->domain = impl->groebnerJ.empty();
    return Ring(std::move(impl));
}

Field Ring::field() const { return impl_->field; }
int Ring::nvars() const { return static_cast<int>(impl_->vars.size()); }
const std::vector<std::string>& Ring::varNames() const { return impl_->vars; }
const MonomialOrder& Ring::order() const { return impl_->order; }
bool Ring::isPolynomialRing() const { return impl_->groebnerJ.empty(); }
bool Ring::declaredEquidimensional() const { return impl_->equidimensional; }
bool Ring::declaredDomain() const { return impl_->domain; }

Ring Ring::withEquidimensionalFlag(bool f) const {
    auto impl = std::make_shared<RingImpl>(*impl_);
    impl->equidimensional = f;
    return Ring(std::move(impl));
}

Ring Ring::withDomainFlag(bool f) const {
    auto impl = std::make_shared<RingImpl>(*impl_);
    impl->domain = f;
    return Ring(std::move(impl));
}

Ring Ring::ambient() const {
    if (impl_->ambient) return Ring(impl_->ambient);
    return *this;
}

std::vector<Polynomial> Ring::quotientGens() const {
    std::vector<Polynomial> out;
    Ring amb = ambient();
    for (auto& t : impl_->quotientGens) out.push_back(Polynomial(amb, t));
    return out;
}

std::vector<Polynomial> Ring::quotientGroebner() const {
    std::vector<Polynomial> out;
    Ring amb = ambient();
    for (auto& t : impl_->groebnerJ) out.push_back(Polynomial(amb, t));
    return out;
}

Polynomial Ring::zero() const { return Polynomial(*this, {}); }
Polynomial Ring::one() const { return constant(1); }

Polynomial Ring::constant(const Scalar& c) const {
    if (c.isZero()) return zero();
    return makePoly({Term{Monomial::unit(nvars()), c}});
}

Polynomial Ring::constant(long n) const { return constant(Scalar::ofInt(field(), n)); }

Polynomial Ring::var(int i) const {
    return makePoly({Term{Monomial::var(nvars(), i), Scalar::one(field())}});
}

Polynomial Ring::monomial(const Monomial& m, const Scalar& c) const {
    return makePoly({Term{m, c}});
}

Polynomial Ring::makePoly(TermList raw) const {
    TermList t = engine::normalizeTL(impl_->ctx(), std::move(raw));
    if (!impl_->groebnerJ.empty())
        t = engine::normalFormTL(impl_->ctx(), std::move(t), impl_->groebnerJ);
    return Polynomial(*this, std::move(t));
}

Polynomial Ring::inject(const Polynomial& p) const {
    if (p.ring().nvars() != nvars()) throw DataError("inject: variable count mismatch");
    return makePoly(p.terms());
}

std::string Ring::str() const {
    std::string s = field().str() + "[";
    for (int i = 0; i < nvars(); ++i) {
        if (i) s += ",";
        s += impl_->vars[i];
    }
    s += "]";
    if (!impl_->quotientGens.empty()) {
        s += " / (";
        for (std::size_t i = 0; i < impl_->quotientGens.size(); ++i) {
            if (i) s += ", ";
            s += polyToString(*this, impl_->quotientGens[i]);
        }
        s += ")";
    }
    return s;
}

// ---------- Polynomial ----------

bool Polynomial::isOne() const {
    return t_.size() == 1 && t_[0].mon.isUnit() && t_[0].coef.isOne();
}

bool Polynomial::isConstant() const {
    return t_.empty() || (t_.size() == 1 && t_[0].mon.isUnit());
}

Scalar Polynomial::constantCoef() const {
    for (auto& t : t_)
        if (t.mon.isUnit()) return t.coef;
    return Scalar::zero(ring_.valid() ? ring_.field() : Field::rationals());
}

const Monomial& Polynomial::leadingMonomial() const {
    if (t_.empty()) throw DataError("leading monomial of zero polynomial");
    return t_[0].mon;
}

const Scalar& Polynomial::leadingCoef() const {
    if (t_.empty()) throw DataError("leading coefficient of zero polynomial");
    return t_[0].coef;
}

long Polynomial::degree() const {
    long d = -1;
    for (auto& t : t_) d = std::max(d, t.mon.degree());
    return d;
}

bool Polynomial::isHomogeneous() const {
    if (t_.empty()) return true;
    long d = t_[0].mon.degree();
    for (auto& t : t_)
        if (t.mon.degree() != d) return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!ring_.sameAs(o.ring_)) throw DataError("polynomial ring mismatch in +");
    // normal forms are closed under addition; no further reduction needed
    return Polynomial(ring_, engine::addTL(ring_.impl().ctx(), t_, o.t_));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (!ring_.sameAs(o.ring_)) throw DataError("polynomial ring mismatch in -");
    return Polynomial(ring_, engine::subTL(ring_.impl().ctx(), t_, o.t_));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!ring_.sameAs(o.ring_)) throw DataError("polynomial ring mismatch in *");
    return ring_.makePoly(engine::mulTL(ring_.impl().ctx(), t_, o.t_));
}

Polynomial Polynomial::operator-() const {
    return Polynomial(ring_, engine::scaleTL(t_, -Scalar::one(ring_.field())));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.isZero()) return ring_.zero();
    return Polynomial(ring_, engine::scaleTL(t_, c));
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial acc = ring_.one();
    for (unsigned i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_.sameAs(o.ring_)) return false;
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (t_[i].mon != o.t_[i].mon || t_[i].coef != o.t_[i].coef) return false;
    return true;
}

std::string Polynomial::str() const { return polyToString(ring_, t_); }

std::string polyToString(const Ring& r, const TermList& t) {
    if (t.empty()) return "0";
    const bool rational = r.field().isRationals();
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        Scalar c = t[i].coef;
        std::string sign;
        if (i == 0) {
            if (rational && c.rationalValue() < 0) { sign = "-"; c = -c; }
        } else {
            if (rational && c.rationalValue() < 0) { sign = " - "; c = -c; }
            else sign = " + ";
        }
        std::string mon;
        for (int v = 0; v < r.nvars(); ++v) {
            std::uint32_t e = t[i].mon.exp(v);
            if (e == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += r.varNames()[v];
            if (e > 1) mon += "^" + std::to_string(e);
        }
        std::string coef;
        if (mon.empty()) coef = c.str();
        else if (c.isOne()) coef = "";
        else coef = c.str() + "*";
        s += sign + coef + mon;
    }
    return s;
}

// ---------- Ideal ----------

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    std::vector<TermList> raw;
    for (auto& g : gens) {
        if (!g.ring().sameAs(ring_)) throw DataError("ideal generator from a different ring");
        if (!g.isZero()) {
            gens_.push_back(g);
            raw.push_back(g.terms());
        }
    }
    for (auto& t : ring_.impl().groebnerJ) raw.push_back(t);
    gb_ = engine::reducedGroebnerTL(ring_.impl().ctx(), raw);
}

bool Ideal::isUnitIdeal() const {
    return gb_.size() == 1 && gb_[0].size() == 1 && gb_[0][0].mon.isUnit();
}

std::string Ideal::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].str();
    }
    return s + ")";
}

}  // namespace perfcx
