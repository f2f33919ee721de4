// Smith normal form over Z with full unimodular transforms and their
// inverses.  The reduction runs on overflow-checked 64-bit words first and
// promotes to arbitrary precision when any intermediate overflows, which is
// the classical failure mode of naive SNF.
#pragma once

#include <cstdint>
#include <vector>

#include "momangle/integer_matrix.hpp"

namespace momangle {

enum class PivotRule {
    kSmallestEntry,  // default: smallest nonzero |entry|, first on ties
    kFirstNonzero,   // first nonzero in row-major scan
};

struct SmithDecomposition {
    // U * A * V = D with U, V unimodular; diagonal holds the invariant
    // factors d_1 | d_2 | ..., all nonnegative.
    IntegerMatrix d;
    IntegerMatrix u, u_inv;
    IntegerMatrix v, v_inv;
    int rank = 0;

    std::vector<Integer> invariant_factors() const {
        std::vector<Integer> out;
        for (int i = 0; i < rank; ++i) out.push_back(d.at(i, i));
        return out;
    }
};

namespace detail {

struct snf_overflow {};

// int64 wrapper whose arithmetic throws snf_overflow instead of wrapping.
struct CheckedInt {
    std::int64_t v = 0;

    CheckedInt() = default;
    CheckedInt(std::int64_t x) : v(x) {}

    friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw snf_overflow{};
        return r;
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw snf_overflow{};
        return r;
    }
    friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw snf_overflow{};
        return r;
    }
    friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
        if (b.v == 0 || (a.v == INT64_MIN && b.v == -1)) throw snf_overflow{};
        return a.v / b.v;
    }
    friend CheckedInt operator%(CheckedInt a, CheckedInt b) {
        if (b.v == 0 || (a.v == INT64_MIN && b.v == -1)) throw snf_overflow{};
        return a.v % b.v;
    }
    CheckedInt operator-() const {
        if (v == INT64_MIN) throw snf_overflow{};
        return -v;
    }
    friend bool operator==(CheckedInt a, CheckedInt b) { return a.v == b.v; }
    friend bool operator!=(CheckedInt a, CheckedInt b) { return a.v != b.v; }
    friend bool operator<(CheckedInt a, CheckedInt b) { return a.v < b.v; }
};

inline CheckedInt abs_val(CheckedInt a) { return a.v < 0 ? -a : a; }
inline Integer abs_val(const Integer& a) { return a < 0 ? Integer(-a) : a; }

template <typename T, bool kTransforms = true>
class SnfWorker {
public:
    SnfWorker(const IntegerMatrix& a, PivotRule rule)
        : rows_(a.rows()), cols_(a.cols()), rule_(rule), m_(std::size_t(rows_) * cols_) {
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) m_[std::size_t(r) * cols_ + c] = convert(a.at(r, c));
        if constexpr (kTransforms) {
            u_.assign(std::size_t(rows_) * rows_, T(0));
            ui_.assign(std::size_t(rows_) * rows_, T(0));
            v_.assign(std::size_t(cols_) * cols_, T(0));
            vi_.assign(std::size_t(cols_) * cols_, T(0));
            for (int i = 0; i < rows_; ++i)
                u_[std::size_t(i) * rows_ + i] = ui_[std::size_t(i) * rows_ + i] = T(1);
            for (int i = 0; i < cols_; ++i)
                v_[std::size_t(i) * cols_ + i] = vi_[std::size_t(i) * cols_ + i] = T(1);
        }
    }

    int reduce() {
        int t = 0;
        int bound = rows_ < cols_ ? rows_ : cols_;
        while (t < bound) {
            if (!select_pivot(t)) break;
            reduce_at(t);
            ++t;
        }
        for (int i = 0; i < t; ++i)
            if (at(i, i) < T(0)) negate_row(i);
        return t;
    }

    SmithDecomposition run() {
        SmithDecomposition out;
        out.rank = reduce();
        out.d = to_matrix(m_, rows_, cols_);
        if constexpr (kTransforms) {
            out.u = to_matrix(u_, rows_, rows_);
            out.u_inv = to_matrix(ui_, rows_, rows_);
            out.v = to_matrix(v_, cols_, cols_);
            out.v_inv = to_matrix(vi_, cols_, cols_);
        }
        return out;
    }

    std::vector<Integer> factors() {
        int rank = reduce();
        std::vector<Integer> out(rank);
        for (int i = 0; i < rank; ++i) {
            if constexpr (std::is_same_v<T, Integer>)
                out[i] = at(i, i);
            else
                out[i] = Integer(at(i, i).v);
        }
        return out;
    }

private:
    static T convert(const Integer& x) {
        if constexpr (std::is_same_v<T, Integer>) {
            return x;
        } else {
            if (x > INT64_MAX || x < INT64_MIN) throw snf_overflow{};
            return T(x.convert_to<std::int64_t>());
        }
    }

    static IntegerMatrix to_matrix(const std::vector<T>& data, int r, int c) {
        IntegerMatrix out(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                if constexpr (std::is_same_v<T, Integer>)
                    out.at(i, j) = data[std::size_t(i) * c + j];
                else
                    out.at(i, j) = Integer(data[std::size_t(i) * c + j].v);
            }
        return out;
    }

    T& at(int r, int c) { return m_[std::size_t(r) * cols_ + c]; }

    bool select_pivot(int t) {
        int bi = -1, bj = -1;
        for (int i = t; i < rows_; ++i)
            for (int j = t; j < cols_; ++j) {
                if (at(i, j) == T(0)) continue;
                if (rule_ == PivotRule::kFirstNonzero) {
                    bi = i;
                    bj = j;
                    goto done;
                }
                if (bi < 0 || abs_val(at(i, j)) < abs_val(at(bi, bj))) {
                    bi = i;
                    bj = j;
                }
            }
    done:
        if (bi < 0) return false;
        if (bi != t) swap_rows(t, bi);
        if (bj != t) swap_cols(t, bj);
        return true;
    }

    void reduce_at(int t) {
        for (;;) {
            bool clean = true;
            // Clear column t.
            for (int i = 0; i < rows_; ++i) {
                if (i == t || at(i, t) == T(0)) continue;
                T q = at(i, t) / at(t, t);
                if (q != T(0)) add_row(i, t, -q);
                if (at(i, t) != T(0)) {
                    swap_rows(t, i);  // strictly smaller pivot
                    clean = false;
                }
            }
            if (!clean) continue;
            // Clear row t.
            for (int j = 0; j < cols_; ++j) {
                if (j == t || at(t, j) == T(0)) continue;
                T q = at(t, j) / at(t, t);
                if (q != T(0)) add_col(j, t, -q);
                if (at(t, j) != T(0)) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Enforce divisibility of the remaining block by the pivot.
            bool fixed = false;
            for (int i = t + 1; i < rows_ && !fixed; ++i)
                for (int j = t + 1; j < cols_ && !fixed; ++j)
                    if (at(i, j) % at(t, t) != T(0)) {
                        add_row(t, i, T(1));
                        fixed = true;
                    }
            if (!fixed) return;
        }
    }

    // row[i] += q * row[t]  (on the working matrix; transforms follow)
    void add_row(int i, int t, T q) {
        for (int c = 0; c < cols_; ++c)
            if (at(t, c) != T(0)) at(i, c) = at(i, c) + q * at(t, c);
        if constexpr (!kTransforms) return;
        for (int c = 0; c < rows_; ++c)
            if (u_[std::size_t(t) * rows_ + c] != T(0))
                u_[std::size_t(i) * rows_ + c] = u_[std::size_t(i) * rows_ + c] + q * u_[std::size_t(t) * rows_ + c];
        // U_inv gets the inverse op on columns: col_t -= q * col_i.
        for (int r = 0; r < rows_; ++r)
            if (ui_[std::size_t(r) * rows_ + i] != T(0))
                ui_[std::size_t(r) * rows_ + t] = ui_[std::size_t(r) * rows_ + t] - q * ui_[std::size_t(r) * rows_ + i];
    }

    // col[j] += q * col[t]
    void add_col(int j, int t, T q) {
        for (int r = 0; r < rows_; ++r)
            if (at(r, t) != T(0)) at(r, j) = at(r, j) + q * at(r, t);
        if constexpr (!kTransforms) return;
        for (int r = 0; r < cols_; ++r)
            if (v_[std::size_t(r) * cols_ + t] != T(0))
                v_[std::size_t(r) * cols_ + j] = v_[std::size_t(r) * cols_ + j] + q * v_[std::size_t(r) * cols_ + t];
        for (int c = 0; c < cols_; ++c)
            if (vi_[std::size_t(j) * cols_ + c] != T(0))
                vi_[std::size_t(t) * cols_ + c] = vi_[std::size_t(t) * cols_ + c] - q * vi_[std::size_t(j) * cols_ + c];
    }

    void swap_rows(int a, int b) {
        for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
        if constexpr (!kTransforms) return;
        for (int c = 0; c < rows_; ++c) std::swap(u_[std::size_t(a) * rows_ + c], u_[std::size_t(b) * rows_ + c]);
        for (int r = 0; r < rows_; ++r) std::swap(ui_[std::size_t(r) * rows_ + a], ui_[std::size_t(r) * rows_ + b]);
    }

    void swap_cols(int a, int b) {
        for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
        if constexpr (!kTransforms) return;
        for (int r = 0; r < cols_; ++r) std::swap(v_[std::size_t(r) * cols_ + a], v_[std::size_t(r) * cols_ + b]);
        for (int c = 0; c < cols_; ++c) std::swap(vi_[std::size_t(a) * cols_ + c], vi_[std::size_t(b) * cols_ + c]);
    }

    void negate_row(int i) {
        for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
        if constexpr (!kTransforms) return;
        for (int c = 0; c < rows_; ++c) u_[std::size_t(i) * rows_ + c] = -u_[std::size_t(i) * rows_ + c];
        for (int r = 0; r < rows_; ++r) ui_[std::size_t(r) * rows_ + i] = -ui_[std::size_t(r) * rows_ + i];
    }

    int rows_, cols_;
    PivotRule rule_;
    std::vector<T> m_, u_, ui_, v_, vi_;
};

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntegerMatrix& a,
                                            PivotRule rule = PivotRule::kSmallestEntry) {
    try {
        return detail::SnfWorker<detail::CheckedInt>(a, rule).run();
    } catch (const detail::snf_overflow&) {
        return detail::SnfWorker<Integer>(a, rule).run();
    }
}

// Invariant factors only; skips the unimodular transform bookkeeping.
inline std::vector<Integer> smith_invariant_factors(const IntegerMatrix& a,
                                                    PivotRule rule = PivotRule::kSmallestEntry) {
    try {
        return detail::SnfWorker<detail::CheckedInt, false>(a, rule).factors();
    } catch (const detail::snf_overflow&) {
        return detail::SnfWorker<Integer, false>(a, rule).factors();
    }
}

}  // namespace momangle
