#ifndef PERFCX_MATRIX_HPP
#define PERFCX_MATRIX_HPP

#include <map>
#include <utility>
#include <vector>

#include "perfcx/poly.hpp"

namespace perfcx {

/// Sparse matrix over a Ring; stored entries are nonzero normal forms.
/// Zero-row / zero-column shapes are legal and common (empty complexes).
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(Ring ring, int rows, int cols);
    static RingMatrix identity(const Ring& r, int n);
    static RingMatrix fromRows(const Ring& r, const std::vector<std::vector<Polynomial>>& rows);

    bool valid() const { return ring_.valid(); }
    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Polynomial at(int i, int j) const;
    void set(int i, int j, const Polynomial& p);
    bool isZero() const { return entries_.empty(); }
    const std::map<std::pair<int, int>, Polynomial>& entries() const { return entries_; }

    RingMatrix operator*(const RingMatrix& o) const;
    RingMatrix operator+(const RingMatrix& o) const;
    RingMatrix operator-(const RingMatrix& o) const;
    RingMatrix operator-() const;
    RingMatrix transpose() const;
    RingMatrix scaled(const Polynomial& c) const;
    RingMatrix scaledBy(const Scalar& c) const;

    RingMatrix hstack(const RingMatrix& o) const;
    RingMatrix vstack(const RingMatrix& o) const;
    static RingMatrix kronecker(const RingMatrix& a, const RingMatrix& b);
    RingMatrix submatrix(int r0, int r1, int c0, int c1) const;  // half-open ranges
    RingMatrix column(int j) const;
    RingMatrix selectColumns(const std::vector<int>& js) const;
    RingMatrix selectRows(const std::vector<int>& is) const;

    bool operator==(const RingMatrix& o) const;
    bool operator!=(const RingMatrix& o) const { return !(*this == o); }

    std::string str() const;  // [[...], [...]] row-major

private:
    Ring ring_;
    int rows_ = 0, cols_ = 0;
    std::map<std::pair<int, int>, Polynomial> entries_;
    void requireShape(const RingMatrix& o, const char* what) const;
};

/// Determinant by Laplace expansion (exact).
Polynomial determinant(const RingMatrix& a);

}  // namespace perfcx

#endif
