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

#ifndef IWAHORI_RATIONAL_HPP
#define IWAHORI_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace iwahori {

using Int = std::int64_t;
using Rat = boost::rational<Int>;

/// Largest integer <= x.
inline Int rat_floor(const Rat& x) {
    Int n = x.numerator(), d = x.denominator();  // d > 0 after normalization
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

/// Smallest integer >= x.
inline Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

inline bool is_integer(const Rat& x) { return x.denominator() == 1; }

inline int sign(const Rat& x) {
    if (x.numerator() > 0) return 1;
    if (x.numerator() < 0) return -1;
    return 0;
}

/// Renders "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rat& x) {
    std::string s = std::to_string(x.numerator());
    if (x.denominator() != 1) s += "/" + std::to_string(x.denominator());
    return s;
}

/// Parses "3", "-5", "2/3", "-7/4". Throws std::invalid_argument on junk.
inline Rat rat_parse(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("invalid rational: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    std::size_t slash = text.find('/');
    auto parse_int = [&](std::string_view part) -> Int {
        if (part.empty()) bad();
        std::size_t pos = 0;
        bool neg = part[0] == '-' || part[0] == '+';
        if (neg && part.size() == 1) bad();
        Int value = 0;
        for (pos = (part[0] == '-' || part[0] == '+') ? 1 : 0; pos < part.size(); ++pos) {
            if (part[pos] < '0' || part[pos] > '9') bad();
            value = value * 10 + (part[pos] - '0');
        }
        return part[0] == '-' ? -value : value;
    };
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
}

}  // namespace iwahori

#endif
