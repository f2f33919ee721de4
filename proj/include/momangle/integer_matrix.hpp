// Dense matrices over Z with arbitrary-precision entries.  All homological
// computations route through these; no floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace momangle {

using Integer = boost::multiprecision::cpp_int;

class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}

    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimensions");
    }

    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = int(rows.size());
        cols_ = rows_ == 0 ? 0 : int(rows.begin()->size());
        data_.reserve(std::size_t(rows_) * cols_);
        for (const auto& r : rows) {
            if (int(r.size()) != cols_) throw std::invalid_argument("ragged initializer");
            for (long long v : r) data_.emplace_back(v);
        }
    }

    static IntegerMatrix identity(int n) {
        IntegerMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Integer& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    const Integer& at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    bool is_zero() const {
        for (const Integer& v : data_)
            if (v != 0) return false;
        return true;
    }

    IntegerMatrix transposed() const {
        IntegerMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    std::vector<Integer> column(int c) const {
        std::vector<Integer> out(rows_);
        for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
        return out;
    }

    void set_column(int c, const std::vector<Integer>& col) {
        for (int r = 0; r < rows_; ++r) at(r, c) = col[r];
    }

    std::vector<Integer> apply(const std::vector<Integer>& x) const {
        if (int(x.size()) != cols_) throw std::invalid_argument("matvec size mismatch");
        std::vector<Integer> out(rows_, Integer(0));
        for (int r = 0; r < rows_; ++r) {
            Integer acc = 0;
            for (int c = 0; c < cols_; ++c)
                if (at(r, c) != 0 && x[c] != 0) acc += at(r, c) * x[c];
            out[r] = std::move(acc);
        }
        return out;
    }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matmul size mismatch");
        IntegerMatrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Integer& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (b.at(k, j) != 0) out.at(i, j) += aik * b.at(k, j);
            }
        return out;
    }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    // Keeps the listed rows, in order.
    IntegerMatrix rows_subset(const std::vector<int>& keep) const {
        IntegerMatrix out(int(keep.size()), cols_);
        for (int i = 0; i < int(keep.size()); ++i)
            for (int c = 0; c < cols_; ++c) out.at(i, c) = at(keep[i], c);
        return out;
    }

    IntegerMatrix cols_subset(const std::vector<int>& keep) const {
        IntegerMatrix out(rows_, int(keep.size()));
        for (int r = 0; r < rows_; ++r)
            for (int j = 0; j < int(keep.size()); ++j) out.at(r, j) = at(r, keep[j]);
        return out;
    }

private:
    int rows_, cols_;
    std::vector<Integer> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = a.rows();
    if (n == 0) return 1;
    IntegerMatrix w = a;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

}  // namespace momangle
