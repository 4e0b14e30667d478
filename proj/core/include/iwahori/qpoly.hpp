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

#ifndef IWAHORI_QPOLY_HPP
#define IWAHORI_QPOLY_HPP

#include <map>
#include <string>

#include "iwahori/rational.hpp"

namespace iwahori {

/// Integer-coefficient polynomial in the formal residue cardinality q.
class QPolynomial {
  public:
    QPolynomial() = default;
    explicit QPolynomial(Int constant);
    static QPolynomial monomial(int exponent, Int coeff = 1);
    static QPolynomial one() { return QPolynomial(1); }

    QPolynomial& operator+=(const QPolynomial& other);
    QPolynomial& operator*=(const QPolynomial& other);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
    bool operator==(const QPolynomial& other) const = default;

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    Int coeff(int exponent) const;
    const std::map<int, Int>& coefficients() const { return coeffs_; }

    Int evaluate(Int q) const;

    /// "0", "1", "q", "q^3", "1+2q+2q^2", "q^2-1", ...
    std::string to_string() const;

  private:
    std::map<int, Int> coeffs_;  // exponent -> nonzero coefficient
};

}  // namespace iwahori

#endif
