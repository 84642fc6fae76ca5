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

#include <limits>

#include "helpers.hpp"

using namespace testing;

TEST_CASE("checked arithmetic raises on overflow")
{
    constexpr Int big = std::numeric_limits<Int>::max();
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 5) == -20);
    CHECK_THROWS_CODE(checked_add(big, 1), ErrorCode::overflow);
    CHECK_THROWS_CODE(checked_sub(std::numeric_limits<Int>::min(), 1), ErrorCode::overflow);
    CHECK_THROWS_CODE(checked_mul(big / 2 + 1, 2), ErrorCode::overflow);
    CHECK_THROWS_CODE(checked_neg(std::numeric_limits<Int>::min()), ErrorCode::overflow);
    CHECK_THROWS_CODE(checked_pow(10, 19), ErrorCode::overflow);
    CHECK(checked_pow(3, 4) == 81);
    CHECK(checked_pow(7, 0) == 1);
}

TEST_CASE("floor_mod and floor_div round toward negative infinity")
{
    CHECK(floor_mod(-1, 7) == 6);
    CHECK(floor_mod(-14, 7) == 0);
    CHECK(floor_mod(15, 7) == 1);
    CHECK(floor_div(-1, 7) == -1);
    CHECK(floor_div(7, 7) == 1);
    for (int i = 0; i < 500; ++i) {
        const Int a = uniform(-1000, 1000);
        const Int n = uniform(1, 50);
        const Int r = floor_mod(a, n);
        CHECK(r >= 0);
        CHECK(r < n);
        CHECK(floor_div(a, n) * n + r == a);
    }
}

TEST_CASE("gcd, lcm and extended gcd")
{
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(0, 5) == 5);
    CHECK(gcd(-4, 6) == 2);
    CHECK(lcm(4, 6) == 12);
    for (int i = 0; i < 500; ++i) {
        const Int a = uniform(-500, 500);
        const Int b = uniform(-500, 500);
        const ExtGcd e = ext_gcd(a, b);
        CHECK(e.g == gcd(a, b));
        CHECK(e.x * a + e.y * b == e.g);
    }
}

TEST_CASE("is_prime agrees with trial division")
{
    for (Int n = -3; n < 2000; ++n) {
        bool naive = n >= 2;
        for (Int d = 2; d * d <= n && naive; ++d)
            naive = n % d != 0;
        CHECK_MESSAGE(is_prime(n) == naive, n);
    }
}

TEST_CASE("l1_norm and format_vector")
{
    const Vec a{2, -1, 0};
    CHECK(l1_norm(a) == 3);
    CHECK(format_vector(a) == "(2,-1,0)");
    CHECK(format_vector(Vec{}) == "()");
}
