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

#ifndef IWAHORI_LINALG_HPP
#define IWAHORI_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "iwahori/rational.hpp"

namespace iwahori {

using Vec = std::vector<Rat>;

/// Dense rational matrix, row major. All arithmetic is exact.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& other) const = default;
    /// Lexicographic order on (rows, cols, entries); used for map keys.
    bool operator<(const Mat& other) const;

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// Integer matrix used for lattice computations (Smith normal form).
class IMat {
  public:
    IMat() : rows_(0), cols_(0) {}
    IMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static IMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IMat& other) const = default;

    Mat to_rational() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

// vector arithmetic
Vec vec_add(const Vec& u, const Vec& v);
Vec vec_sub(const Vec& u, const Vec& v);
Vec vec_scale(const Rat& c, const Vec& v);
bool vec_is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

// matrix arithmetic
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& x);
Mat mat_transpose(const Mat& a);
Mat mat_sub(const Mat& a, const Mat& b);

/// u^T a v; the bilinear form given by a square matrix.
Rat bilinear(const Mat& a, const Vec& u, const Vec& v);

/// Exact inverse; std::nullopt when singular.
std::optional<Mat> mat_inverse(const Mat& a);

/// Unique solution of a x = b for square nonsingular a; nullopt otherwise.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Basis of the kernel of a (columns of the returned matrix).
Mat kernel_basis(const Mat& a);

std::size_t mat_rank(const Mat& a);

/// Round-trip helpers for matrices known to be integral.
bool mat_is_integral(const Mat& a);
IMat mat_to_integer(const Mat& a);

/// Smith normal form u*a*v = d with u, v unimodular and d diagonal with
/// d_i | d_{i+1}. Diagonal entries are non-negative.
struct SmithForm {
    IMat d, u, v;
    std::vector<Int> divisors;  // diagonal of d, length min(rows, cols)
};
SmithForm smith_normal_form(const IMat& a);

}  // namespace iwahori

#endif
