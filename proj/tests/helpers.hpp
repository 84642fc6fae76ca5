/*
   Copyright 2026 The invar-lattice Authors

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

#ifndef INVLAT_TESTS_HELPERS_HPP
#define INVLAT_TESTS_HELPERS_HPP

#include <doctest.h>

#include <random>

#include "invlat/bounds.hpp"
#include "oracle.hpp"

namespace testing {

using namespace invlat;

inline CharSupport cyc(Int n, std::initializer_list<Int> ks)
{
    Vec v(ks);
    return reduce_support(make_group({n}), std::span<const Int>(v));
}

inline CharSupport prod(std::vector<Int> factors, std::initializer_list<Vec> chars)
{
    const AbelianGroup g = make_group(std::move(factors));
    std::vector<Character> cs;
    for (const Vec& c : chars)
        cs.push_back(Character::reduce(g, c));
    return reduce_support(g, cs);
}

inline oracle::Rep to_rep(const CharSupport& s)
{
    oracle::Rep r;
    for (Int n : s.group().factor_orders())
        r.factors.push_back(n);
    for (const Character& c : s.chars())
        r.chars.emplace_back(c.residues().begin(), c.residues().end());
    return r;
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 g(20261018);
    return g;
}

inline Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng()); }

inline Vec random_vec(std::size_t m, Int bound)
{
    Vec v(m);
    for (Int& x : v)
        x = uniform(-bound, bound);
    return v;
}

} // namespace testing

#define CHECK_THROWS_CODE(expr, expected)                                                                    \
    do {                                                                                                     \
        bool thrown_ = false;                                                                                \
        try {                                                                                                \
            (void)(expr);                                                                                    \
        } catch (const invlat::Error& e_) {                                                                  \
            thrown_ = true;                                                                                  \
            CHECK_MESSAGE(e_.code() == (expected), "got " << invlat::to_string(e_.code()) << ": " << e_.what()); \
        }                                                                                                    \
        CHECK_MESSAGE(thrown_, "expected an invlat::Error from " #expr);                                     \
    } while (0)

#endif
