/*
   Copyright 2026 The iwahori authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "iwahori/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace iwahori {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
}

bool Mat::operator<(const Mat& other) const {
    if (rows_ != other.rows_) return rows_ < other.rows_;
    if (cols_ != other.cols_) return cols_ < other.cols_;
    return a_ < other.a_;
}

Vec Mat::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

Vec Mat::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

IMat IMat::identity(std::size_t n) {
    IMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat IMat::to_rational() const {
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = Rat((*this)(i, j));
    return m;
}

Vec vec_add(const Vec& u, const Vec& v) {
    assert(u.size() == v.size());
    Vec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
    return w;
}

Vec vec_sub(const Vec& u, const Vec& v) {
    assert(u.size() == v.size());
    Vec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] - v[i];
    return w;
}

Vec vec_scale(const Rat& c, const Vec& v) {
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = c * v[i];
    return w;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.numerator() == 0; });
}

Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, Rat(0));
    v[i] = Rat(1);
    return v;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    assert(a.cols() == b.rows());
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).numerator() == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Vec mat_vec(const Mat& a, const Vec& x) {
    assert(a.cols() == x.size());
    Vec y(a.rows(), Rat(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

Mat mat_transpose(const Mat& a) {
    Mat t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    Mat c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Rat bilinear(const Mat& a, const Vec& u, const Vec& v) {
    assert(a.rows() == u.size() && a.cols() == v.size());
    Rat s(0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (u[i].numerator() == 0) continue;
        Rat row(0);
        for (std::size_t j = 0; j < a.cols(); ++j) row += a(i, j) * v[j];
        s += u[i] * row;
    }
    return s;
}

namespace {

// Gauss-Jordan elimination on [a | rhs]; returns reduced a, modifies rhs in step.
struct Elimination {
    Mat a;
    Mat rhs;
    std::vector<std::size_t> pivot_cols;
};

Elimination eliminate(Mat a, Mat rhs) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && a(p, col).numerator() == 0) ++p;
        if (p == m) continue;
        if (p != row) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(row, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(p, j), rhs(row, j));
        }
        Rat inv = Rat(1) / a(row, col);
        for (std::size_t j = 0; j < n; ++j) a(row, j) *= inv;
        for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(row, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a(i, col).numerator() == 0) continue;
            Rat f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(row, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= f * rhs(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(rhs), std::move(pivots)};
}

}  // namespace

std::optional<Mat> mat_inverse(const Mat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    Elimination e = eliminate(a, Mat::identity(a.rows()));
    if (e.pivot_cols.size() != a.rows()) return std::nullopt;
    return e.rhs;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    if (a.rows() != b.size() || a.rows() != a.cols()) return std::nullopt;
    Mat rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    Elimination e = eliminate(a, std::move(rhs));
    if (e.pivot_cols.size() != a.cols()) return std::nullopt;
    return e.rhs.col(0);
}

Mat kernel_basis(const Mat& a) {
    Elimination e = eliminate(a, Mat(a.rows(), 0));
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat basis(n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis(f, k) = Rat(1);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) basis(e.pivot_cols[r], k) = -e.a(r, f);
    }
    return basis;
}

std::size_t mat_rank(const Mat& a) { return eliminate(a, Mat(a.rows(), 0)).pivot_cols.size(); }

bool mat_is_integral(const Mat& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_integer(a(i, j))) return false;
    return true;
}

IMat mat_to_integer(const Mat& a) {
    if (!mat_is_integral(a)) throw std::invalid_argument("matrix is not integral");
    IMat m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).numerator();
    return m;
}

namespace {

void swap_rows(IMat& a, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
}
void swap_cols(IMat& a, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
}
void add_row(IMat& a, std::size_t dst, std::size_t src, Int f) {
    for (std::size_t k = 0; k < a.cols(); ++k) a(dst, k) += f * a(src, k);
}
void add_col(IMat& a, std::size_t dst, std::size_t src, Int f) {
    for (std::size_t k = 0; k < a.rows(); ++k) a(k, dst) += f * a(k, src);
}
void negate_row(IMat& a, std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = -a(i, k);
}

// True when all entries of the trailing block below/right of s vanish
// except the pivot itself.
bool pivot_isolated(const IMat& d, std::size_t s) {
    for (std::size_t i = s + 1; i < d.rows(); ++i)
        if (d(i, s) != 0) return false;
    for (std::size_t j = s + 1; j < d.cols(); ++j)
        if (d(s, j) != 0) return false;
    return true;
}

}  // namespace

SmithForm smith_normal_form(const IMat& a) {
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t steps = std::min(m, n);
    SmithForm out{a, IMat::identity(m), IMat::identity(n), {}};
    IMat& d = out.d;
    IMat& u = out.u;
    IMat& v = out.v;

    for (std::size_t s = 0; s < steps; ++s) {
        for (;;) {
            // Locate the minimal nonzero entry of the trailing block.
            std::size_t pi = s, pj = s;
            Int best = 0;
            for (std::size_t i = s; i < m; ++i)
                for (std::size_t j = s; j < n; ++j) {
                    Int x = std::llabs(d(i, j));
                    if (x != 0 && (best == 0 || x < best)) {
                        best = x;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) break;  // trailing block is zero
            if (pi != s) {
                swap_rows(d, s, pi);
                swap_rows(u, s, pi);
            }
            if (pj != s) {
                swap_cols(d, s, pj);
                swap_cols(v, s, pj);
            }
            bool clean = true;
            for (std::size_t i = s + 1; i < m; ++i) {
                if (d(i, s) == 0) continue;
                Int f = d(i, s) / d(s, s);
                add_row(d, i, s, -f);
                add_row(u, i, s, -f);
                if (d(i, s) != 0) clean = false;
            }
            for (std::size_t j = s + 1; j < n; ++j) {
                if (d(s, j) == 0) continue;
                Int f = d(s, j) / d(s, s);
                add_col(d, j, s, -f);
                add_col(v, j, s, -f);
                if (d(s, j) != 0) clean = false;
            }
            if (!clean || !pivot_isolated(d, s)) continue;
            // Enforce divisibility of the remaining block by the pivot.
            bool divides = true;
            for (std::size_t i = s + 1; i < m && divides; ++i)
                for (std::size_t j = s + 1; j < n && divides; ++j)
                    if (d(i, j) % d(s, s) != 0) {
                        add_row(d, s, i, 1);
                        add_row(u, s, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (d(s, s) < 0) {
            negate_row(d, s);
            negate_row(u, s);
        }
    }
    for (std::size_t s = 0; s < steps; ++s) out.divisors.push_back(d(s, s));
    return out;
}

}  // namespace iwahori
