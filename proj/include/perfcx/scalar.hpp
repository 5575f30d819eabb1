#ifndef PERFCX_SCALAR_HPP
#define PERFCX_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace perfcx {

/// Raised on malformed input data (bad shapes, mismatched rings, parse errors).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a computation exceeds the configured resource caps.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exact coefficient field: Q (characteristic 0) or F_p, p prime < 2^31.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    bool isRationals() const { return p_ == 0; }
    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }
    std::string str() const;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

/// Element of a Field. Arithmetic is exact: arbitrary-precision rationals
/// over Q, modular residues over F_p.
class Scalar {
public:
    Scalar() = default;  // rational zero

    static Scalar zero(const Field& f) { return ofInt(f, 0); }
    static Scalar one(const Field& f) { return ofInt(f, 1); }
    static Scalar ofInt(const Field& f, long n);
    static Scalar ofRational(const Field& f, const mpq_class& q);

    Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
    std::uint32_t characteristic() const { return p_; }

    bool isZero() const;
    bool isOne() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text form: "2", "-3/4", residue in [0,p).
    std::string str() const;

    /// Over Q, the rational value; over F_p the residue as an integer.
    mpq_class rationalValue() const;

private:
    Scalar(std::uint32_t p, mpq_class q, std::uint64_t r)
        : p_(p), q_(std::move(q)), r_(r) {}
    void requireSameField(const Scalar& o) const;

    std::uint32_t p_ = 0;   // 0 = Q
    mpq_class q_;           // used when p_ == 0
    std::uint64_t r_ = 0;   // used when p_ > 0, in [0, p_)
};

}  // namespace perfcx

#endif
