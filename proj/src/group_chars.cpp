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

#include "invlat/group_chars.hpp"

#include <algorithm>
#include <limits>

#include "invlat/normal_form.hpp"

namespace invlat {

AbelianGroup AbelianGroup::make(std::vector<Int> factor_orders)
{
    AbelianGroup g;
    Int order = 1;
    for (Int n : factor_orders) {
        if (n < 2)
            throw Error(ErrorCode::invalid_argument,
                        "cyclic factor order " + std::to_string(n) + " is below 2");
        Int next;
        if (__builtin_mul_overflow(order, n, &next))
            throw Error(ErrorCode::overflow, "group order does not fit in 64 bits");
        order = next;
    }
    g.factors_ = std::move(factor_orders);
    g.order_ = order;
    return g;
}

Int AbelianGroup::exponent() const
{
    Int e = 1;
    for (Int n : factors_)
        e = lcm(e, n);
    return e;
}

std::string AbelianGroup::describe() const
{
    if (factors_.empty())
        return "1";
    std::string s;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (j)
            s += " x ";
        s += "Z/" + std::to_string(factors_[j]);
    }
    return s;
}

std::string CharSupport::describe() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < chars_.size(); ++i) {
        if (i)
            s += ",";
        s += chars_[i].to_string();
    }
    return s + "}";
}

CharSupport reduce_support(const AbelianGroup& group, std::span<const Character> raw_chars)
{
    CharSupport s;
    s.group_ = group;
    for (const Character& c : raw_chars) {
        if (c.size() != group.num_factors())
            throw Error(ErrorCode::dimension_mismatch,
                        "character " + c.to_string() + " does not match " + group.describe());
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] < 0 || c[j] >= group.factor_orders()[j])
                throw Error(ErrorCode::invalid_argument, "character " + c.to_string() + " is not reduced");
        if (c.is_trivial())
            continue;
        if (std::find(s.chars_.begin(), s.chars_.end(), c) != s.chars_.end())
            continue;
        s.chars_.push_back(c);
    }
    return s;
}

CharSupport reduce_support(const AbelianGroup& group, std::span<const Int> cyclic_chars)
{
    if (group.num_factors() != 1)
        throw Error(ErrorCode::dimension_mismatch,
                    "integer characters require a cyclic group, got " + group.describe());
    std::vector<Character> chars;
    chars.reserve(cyclic_chars.size());
    for (Int k : cyclic_chars) {
        const Int raw[1] = {k};
        chars.push_back(Character::reduce(group, raw));
    }
    return reduce_support(group, chars);
}

Weight weight(const AbelianGroup& group, std::span<const Character> chars, std::span<const Int> a)
{
    if (a.size() != chars.size())
        throw Error(ErrorCode::dimension_mismatch,
                    "exponent vector of length " + std::to_string(a.size()) + " for "
                        + std::to_string(chars.size()) + " characters");
    const auto& n = group.factor_orders();
    Vec acc(n.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        if (chars[i].size() != n.size())
            throw Error(ErrorCode::dimension_mismatch, "character does not match " + group.describe());
        for (std::size_t j = 0; j < n.size(); ++j) {
            // Reduce the exponent first so the product stays below n_j^2.
            const Int term = checked_mul(floor_mod(a[i], n[j]), chars[i][j]) % n[j];
            acc[j] = (acc[j] + term) % n[j];
        }
    }
    return Weight::reduce(group, acc);
}

Weight weight(const CharSupport& support, std::span<const Int> a)
{
    return weight(support.group(), support.chars(), a);
}

namespace {

// Mixed-radix index of a residue tuple.
Int encode(const Vec& r, const std::vector<Int>& n)
{
    Int idx = 0;
    for (std::size_t j = 0; j < n.size(); ++j)
        idx = idx * n[j] + r[j];
    return idx;
}

Int closure_order(const CharSupport& support)
{
    const auto& n = support.group().factor_orders();
    const Int order = support.group().order();
    std::vector<bool> seen(static_cast<std::size_t>(order), false);
    std::vector<Vec> members{Vec(n.size(), 0)};
    seen[0] = true;
    // H <- H + <chi> for each generator; |H| grows by the index of H in H + <chi>.
    for (const Character& chi : support.chars()) {
        const std::size_t base = members.size();
        Vec step = chi.residues();
        for (;;) {
            if (seen[static_cast<std::size_t>(encode(step, n))])
                break;
            for (std::size_t k = 0; k < base; ++k) {
                Vec sum(n.size());
                for (std::size_t j = 0; j < n.size(); ++j)
                    sum[j] = (members[k][j] + step[j]) % n[j];
                const auto idx = static_cast<std::size_t>(encode(sum, n));
                if (!seen[idx]) {
                    seen[idx] = true;
                    members.push_back(std::move(sum));
                }
            }
            for (std::size_t j = 0; j < n.size(); ++j)
                step[j] = (step[j] + chi[j]) % n[j];
        }
    }
    return static_cast<Int>(members.size());
}

// |G| / |G / <S>|, where G / <S> is presented by the relation matrix [chi | diag(n)].
Int relation_order(const CharSupport& support)
{
    const auto& n = support.group().factor_orders();
    const std::size_t k = n.size();
    const std::size_t m = support.size();
    IntMatrix rel(k, Vec(m + k, 0));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < m; ++i)
            rel[j][i] = support[i][j];
        rel[j][m + j] = n[j];
    }
    const SmithForm s = smith_normal_form(rel, m + k);
    Int cokernel = 1;
    for (Int d : s.invariants)
        cokernel = checked_mul(cokernel, d);
    return support.group().order() / cokernel;
}

} // namespace

Int effective_order(const CharSupport& support)
{
    if (support.empty())
        return 1;
    if (support.group().order() <= closure_limit)
        return closure_order(support);
    return relation_order(support);
}

Int character_order(const Character& c, const AbelianGroup& group)
{
    if (c.size() != group.num_factors())
        throw Error(ErrorCode::dimension_mismatch, "character does not match " + group.describe());
    Int ord = 1;
    for (std::size_t j = 0; j < c.size(); ++j) {
        const Int n = group.factor_orders()[j];
        ord = lcm(ord, n / gcd(c[j], n));
    }
    return ord;
}

bool is_involution(const Character& c, const AbelianGroup& group)
{
    if (c.is_trivial())
        throw Error(ErrorCode::invalid_argument, "the trivial character is not an involution candidate");
    return character_order(c, group) == 2;
}

} // namespace invlat
