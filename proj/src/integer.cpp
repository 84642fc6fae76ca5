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

#include "invlat/integer.hpp"

#include <sstream>

namespace invlat {

void throw_overflow(const char* op)
{
    throw Error(ErrorCode::overflow, std::string("64-bit integer overflow in ") + op);
}

Int gcd(Int a, Int b)
{
    a = checked_abs(a);
    b = checked_abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm(Int a, Int b)
{
    if (a == 0 || b == 0)
        return 0;
    return checked_abs(checked_mul(a / gcd(a, b), b));
}

Int checked_pow(Int base, Int exp)
{
    if (exp < 0)
        throw Error(ErrorCode::invalid_argument, "negative exponent");
    Int r = 1;
    for (Int i = 0; i < exp; ++i)
        r = checked_mul(r, base);
    return r;
}

ExtGcd ext_gcd(Int a, Int b)
{
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = tmp;
        tmp = checked_sub(old_s, checked_mul(q, s));
        old_s = s;
        s = tmp;
        tmp = checked_sub(old_t, checked_mul(q, t));
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {checked_neg(old_r), checked_neg(old_s), checked_neg(old_t)};
    return {old_r, old_s, old_t};
}

bool is_prime(Int n)
{
    if (n < 2)
        return false;
    for (Int p = 2; p <= n / p; ++p)
        if (n % p == 0)
            return false;
    return true;
}

Int l1_norm(std::span<const Int> a)
{
    Int s = 0;
    for (Int x : a)
        s = checked_add(s, checked_abs(x));
    return s;
}

std::string format_vector(std::span<const Int> a)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            os << ',';
        os << a[i];
    }
    os << ')';
    return os.str();
}

} // namespace invlat
