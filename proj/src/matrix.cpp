#include "perfcx/matrix.hpp"

#include <algorithm>

namespace perfcx {

RingMatrix::RingMatrix(Ring ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DataError("negative matrix dimension");
}

RingMatrix RingMatrix::identity(const Ring& r, int n) {
    RingMatrix m(r, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, r.one());
    return m;
}

RingMatrix RingMatrix::fromRows(const Ring& r, const std::vector<std::vector<Polynomial>>& rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
    RingMatrix m(r, nr, nc);
    for (int i = 0; i < nr; ++i) {
        if (static_cast<int>(rows[i].size()) != nc) throw DataError("ragged matrix rows");
        for (int j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Polynomial RingMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DataError("matrix index out of range");
    auto it = entries_.find({i, j});
    return it == entries_.end() ? ring_.zero() : it->second;
}

void RingMatrix::set(int i, int j, const Polynomial& p) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DataError("matrix index out of range");
    if (p.isZero()) entries_.erase({i, j});
    else {
        if (!p.ring().sameAs(ring_)) throw DataError("matrix entry from a different ring");
        entries_[{i, j}] = p;
    }
}

void RingMatrix::requireShape(const RingMatrix& o, const char* what) const {
    if (!ring_.sameAs(o.ring_)) throw DataError(std::string(what) + ": ring mismatch");
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    requireShape(o, "matrix product");
    if (cols_ != o.rows_) throw DataError("matrix product shape mismatch");
    RingMatrix out(ring_, rows_, o.cols_);
    // sparse row-times-entries accumulation
    std::map<std::pair<int, int>, Polynomial> acc;
    for (auto& [ij, a] : entries_) {
        for (int j = 0; j < o.cols_; ++j) {
            auto it = o.entries_.find({ij.second, j});
            if (it == o.entries_.end()) continue;
            Polynomial prod = a * it->second;
            auto key = std::make_pair(ij.first, j);
            auto found = acc.find(key);
            if (found == acc.end()) acc.emplace(key, prod);
            else found->second = found->second + prod;
        }
    }
    for (auto& [key, p] : acc) out.set(key.first, key.second, p);
    return out;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
    requireShape(o, "matrix sum");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DataError("matrix sum shape mismatch");
    RingMatrix out = *this;
    for (auto& [ij, p] : o.entries_) out.set(ij.first, ij.second, out.at(ij.first, ij.second) + p);
    return out;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const { return *this + (-o); }

RingMatrix RingMatrix::operator-() const {
    RingMatrix out(ring_, rows_, cols_);
    for (auto& [ij, p] : entries_) out.set(ij.first, ij.second, -p);
    return out;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix out(ring_, cols_, rows_);
    for (auto& [ij, p] : entries_) out.set(ij.second, ij.first, p);
    return out;
}

RingMatrix RingMatrix::scaled(const Polynomial& c) const {
    RingMatrix out(ring_, rows_, cols_);
    for (auto& [ij, p] : entries_) out.set(ij.first, ij.second, c * p);
    return out;
}

RingMatrix RingMatrix::scaledBy(const Scalar& c) const {
    RingMatrix out(ring_, rows_, cols_);
    for (auto& [ij, p] : entries_) out.set(ij.first, ij.second, p.scaled(c));
    return out;
}

RingMatrix RingMatrix::hstack(const RingMatrix& o) const {
    requireShape(o, "hstack");
    if (rows_ != o.rows_) throw DataError("hstack row mismatch");
    RingMatrix out(ring_, rows_, cols_ + o.cols_);
    for (auto& [ij, p] : entries_) out.set(ij.first, ij.second, p);
    for (auto& [ij, p] : o.entries_) out.set(ij.first, cols_ + ij.second, p);
    return out;
}

RingMatrix RingMatrix::vstack(const RingMatrix& o) const {
    requireShape(o, "vstack");
    if (cols_ != o.cols_) throw DataError("vstack column mismatch");
    RingMatrix out(ring_, rows_ + o.rows_, cols_);
    for (auto& [ij, p] : entries_) out.set(ij.first, ij.second, p);
    for (auto& [ij, p] : o.entries_) out.set(rows_ + ij.first, ij.second, p);
    return out;
}

RingMatrix RingMatrix::kronecker(const RingMatrix& a, const RingMatrix& b) {
    a.requireShape(b, "kronecker");
    RingMatrix out(a.ring_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (auto& [ij, p] : a.entries_)
        for (auto& [kl, q] : b.entries_)
            out.set(ij.first * b.rows_ + kl.first, ij.second * b.cols_ + kl.second, p * q);
    return out;
}

RingMatrix RingMatrix::submatrix(int r0, int r1, int c0, int c1) const {
    if (r0 < 0 || r1 > rows_ || c0 < 0 || c1 > cols_ || r0 > r1 || c0 > c1)
        throw DataError("submatrix range out of bounds");
    RingMatrix out(ring_, r1 - r0, c1 - c0);
    for (auto& [ij, p] : entries_)
        if (ij.first >= r0 && ij.first < r1 && ij.second >= c0 && ij.second < c1)
            out.set(ij.first - r0, ij.second - c0, p);
    return out;
}

RingMatrix RingMatrix::column(int j) const { return submatrix(0, rows_, j, j + 1); }

RingMatrix RingMatrix::selectColumns(const std::vector<int>& js) const {
    RingMatrix out(ring_, rows_, static_cast<int>(js.size()));
    for (std::size_t j = 0; j < js.size(); ++j)
        for (int i = 0; i < rows_; ++i) out.set(i, static_cast<int>(j), at(i, js[j]));
    return out;
}

RingMatrix RingMatrix::selectRows(const std::vector<int>& is) const {
    RingMatrix out(ring_, static_cast<int>(is.size()), cols_);
    for (std::size_t i = 0; i < is.size(); ++i)
        for (int j = 0; j < cols_; ++j) out.set(static_cast<int>(i), j, at(is[i], j));
    return out;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
    if (!ring_.sameAs(o.ring_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    if (entries_.size() != o.entries_.size()) return false;
    auto it = o.entries_.begin();
    for (auto& [ij, p] : entries_) {
        if (it->first != ij || !(it->second == p)) return false;
        ++it;
    }
    return true;
}

std::string RingMatrix::str() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) s += ", ";
        s += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) s += ", ";
            s += at(i, j).str();
        }
        s += "]";
    }
    return s + "]";
}

Polynomial determinant(const RingMatrix& a) {
    if (a.rows() != a.cols()) throw DataError("determinant of a non-square matrix");
    const int n = a.rows();
    const Ring& r = a.ring();
    if (n == 0) return r.one();
    if (n == 1) return a.at(0, 0);
    Polynomial det = r.zero();
    // Laplace expansion along the first row
    for (int j = 0; j < n; ++j) {
        Polynomial e = a.at(0, j);
        if (e.isZero()) continue;
        std::vector<int> cols;
        for (int c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        RingMatrix minor = a.submatrix(1, n, 0, n).selectColumns(cols);
        Polynomial sub = determinant(minor);
        if (j % 2 == 0) det = det + e * sub;
        else det = det - e * sub;
    }
    return det;
}

}  // namespace perfcx
