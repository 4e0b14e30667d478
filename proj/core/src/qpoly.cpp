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

#include "iwahori/qpoly.hpp"

#include <cstdlib>

namespace iwahori {

QPolynomial::QPolynomial(Int constant) {
    if (constant != 0) coeffs_[0] = constant;
}

QPolynomial QPolynomial::monomial(int exponent, Int coeff) {
    QPolynomial p;
    if (coeff != 0) p.coeffs_[exponent] = coeff;
    return p;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    for (const auto& [e, c] : other.coeffs_) {
        Int& slot = coeffs_[e];
        slot += c;
        if (slot == 0) coeffs_.erase(e);
    }
    return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
    std::map<int, Int> product;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : other.coeffs_) {
            Int& slot = product[e1 + e2];
            slot += c1 * c2;
            if (slot == 0) product.erase(e1 + e2);
        }
    coeffs_ = std::move(product);
    return *this;
}

int QPolynomial::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

Int QPolynomial::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

Int QPolynomial::evaluate(Int q) const {
    // Horner over the sparse exponent list, highest first.
    Int value = 0;
    int prev_exp = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (prev_exp < 0) {
            value = it->second;
        } else {
            for (int k = 0; k < prev_exp - it->first; ++k) value *= q;
            value += it->second;
        }
        prev_exp = it->first;
    }
    for (int k = 0; k < prev_exp; ++k) value *= q;
    return prev_exp < 0 ? 0 : value;
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : coeffs_) {
        if (!s.empty())
            s += c < 0 ? "-" : "+";
        else if (c < 0)
            s += "-";
        Int abs_c = std::llabs(c);
        if (abs_c != 1 || e == 0) s += std::to_string(abs_c);
        if (e == 1)
            s += "q";
        else if (e > 1)
            s += "q^" + std::to_string(e);
    }
    return s;
}

}  // namespace iwahori
