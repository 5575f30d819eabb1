#include "perfcx/scalar.hpp"

namespace perfcx {

namespace {

bool isPrime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t modInverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a in [1, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw DataError("element not invertible mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (!isPrime(p)) throw DataError("field characteristic must be 0 or a prime < 2^31: " + std::to_string(p));
    if (p >= (1u << 31)) throw DataError("prime too large");
    return Field(p);
}

std::string Field::str() const {
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::ofInt(const Field& f, long n) {
    if (f.isRationals()) return Scalar(0, mpq_class(n), 0);
    std::uint32_t p = f.characteristic();
    std::int64_t m = n % static_cast<std::int64_t>(p);
    if (m < 0) m += p;
    return Scalar(p, mpq_class(), static_cast<std::uint64_t>(m));
}

Scalar Scalar::ofRational(const Field& f, const mpq_class& q) {
    if (f.isRationals()) {
        mpq_class c(q);
        c.canonicalize();
        return Scalar(0, c, 0);
    }
    std::uint32_t p = f.characteristic();
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class nm = num % pz; if (nm < 0) nm += pz;
    mpz_class dm = den % pz; if (dm < 0) dm += pz;
    if (dm == 0) throw DataError("denominator divisible by field characteristic");
    std::uint64_t n64 = nm.get_ui(), d64 = dm.get_ui();
    return Scalar(p, mpq_class(), n64 * modInverse(d64, p) % p);
}

bool Scalar::isZero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::isOne() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

void Scalar::requireSameField(const Scalar& o) const {
    if (p_ != o.p_) throw DataError("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    requireSameField(o);
    if (p_ == 0) return Scalar(0, q_ + o.q_, 0);
    return Scalar(p_, mpq_class(), (r_ + o.r_) % p_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    requireSameField(o);
    if (p_ == 0) return Scalar(0, q_ - o.q_, 0);
    return Scalar(p_, mpq_class(), (r_ + p_ - o.r_) % p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    requireSameField(o);
    if (p_ == 0) return Scalar(0, q_ * o.q_, 0);
    return Scalar(p_, mpq_class(), r_ * o.r_ % p_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    if (p_ == 0) return Scalar(0, -q_, 0);
    return Scalar(p_, mpq_class(), r_ == 0 ? 0 : p_ - r_);
}

Scalar Scalar::inverse() const {
    if (isZero()) throw DataError("division by zero scalar");
    if (p_ == 0) return Scalar(0, 1 / q_, 0);
    return Scalar(p_, mpq_class(), modInverse(r_, p_));
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

mpq_class Scalar::rationalValue() const {
    return p_ == 0 ? q_ : mpq_class(static_cast<unsigned long>(r_));
}

}  // namespace perfcx
