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

#ifndef INVLAT_GROUP_CHARS_HPP
#define INVLAT_GROUP_CHARS_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "invlat/integer.hpp"

namespace invlat {

// Z/n_1 x ... x Z/n_k, every n_j >= 2. The empty product is the trivial group.
class AbelianGroup {
public:
    AbelianGroup() = default;

    // Rejects factors < 2 and orders that do not fit in 64 bits.
    static AbelianGroup make(std::vector<Int> factor_orders);

    const std::vector<Int>& factor_orders() const noexcept { return factors_; }
    std::size_t num_factors() const noexcept { return factors_.size(); }
    Int order() const noexcept { return order_; }
    bool is_cyclic() const noexcept { return factors_.size() <= 1; }

    // Exponent of the group (lcm of the factor orders).
    Int exponent() const;

    // "Z/7", "Z/3 x Z/3", or "1" for the trivial group.
    std::string describe() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    std::vector<Int> factors_;
    Int order_ = 1;
};

inline AbelianGroup make_group(std::vector<Int> factor_orders)
{
    return AbelianGroup::make(std::move(factor_orders));
}

// A tuple of residues, one per cyclic factor, each reduced into [0, n_j).
// Characters of G and weights of semi-invariants share this shape but are
// kept as distinct types.
template <class Tag>
class ResidueTuple {
public:
    ResidueTuple() = default;

    // Reduces every entry modulo its factor order; negative input is allowed.
    static ResidueTuple reduce(const AbelianGroup& group, std::span<const Int> raw)
    {
        const auto& n = group.factor_orders();
        if (raw.size() != n.size())
            throw Error(ErrorCode::dimension_mismatch,
                        "residue tuple has " + std::to_string(raw.size()) + " entries but the group has "
                            + std::to_string(n.size()) + " cyclic factors");
        ResidueTuple t;
        t.residues_.reserve(raw.size());
        for (std::size_t j = 0; j < raw.size(); ++j)
            t.residues_.push_back(floor_mod(raw[j], n[j]));
        return t;
    }

    static ResidueTuple trivial(const AbelianGroup& group)
    {
        ResidueTuple t;
        t.residues_.assign(group.num_factors(), 0);
        return t;
    }

    const Vec& residues() const noexcept { return residues_; }
    std::size_t size() const noexcept { return residues_.size(); }
    Int operator[](std::size_t j) const { return residues_[j]; }

    bool is_trivial() const noexcept
    {
        for (Int r : residues_)
            if (r != 0)
                return false;
        return true;
    }

    // "3" for cyclic groups, "1:0" style for products.
    std::string to_string() const
    {
        std::string s;
        for (std::size_t j = 0; j < residues_.size(); ++j) {
            if (j)
                s += ':';
            s += std::to_string(residues_[j]);
        }
        return s.empty() ? "0" : s;
    }

    friend auto operator<=>(const ResidueTuple&, const ResidueTuple&) = default;

private:
    Vec residues_;
};

struct CharacterTag {};
struct WeightTag {};
using Character = ResidueTuple<CharacterTag>;
using Weight = ResidueTuple<WeightTag>;

// The reduced support of a diagonal representation: its distinct nontrivial
// characters in first-occurrence order. size() is the number m of
// nontrivial isotypic components.
class CharSupport {
public:
    CharSupport() = default;

    const AbelianGroup& group() const noexcept { return group_; }
    const std::vector<Character>& chars() const noexcept { return chars_; }
    std::size_t size() const noexcept { return chars_.size(); }
    bool empty() const noexcept { return chars_.empty(); }
    const Character& operator[](std::size_t i) const { return chars_[i]; }

    std::string describe() const;

    friend bool operator==(const CharSupport&, const CharSupport&) = default;

private:
    friend CharSupport reduce_support(const AbelianGroup&, std::span<const Character>);

    AbelianGroup group_;
    std::vector<Character> chars_;
};

// Drops trivial characters and repeated ones (first occurrence wins).
CharSupport reduce_support(const AbelianGroup& group, std::span<const Character> raw_chars);

// Convenience for cyclic groups: integers as in "k represents l -> e^{2 pi i k l / n}".
CharSupport reduce_support(const AbelianGroup& group, std::span<const Int> cyclic_chars);

// Sum of a_i * chi_i in the character group. Trivial iff x^a is invariant.
Weight weight(const CharSupport& support, std::span<const Int> a);

// Same, for an unreduced representation given by its characters in order.
Weight weight(const AbelianGroup& group, std::span<const Character> chars, std::span<const Int> a);

// Order of the subgroup of the character group generated by the support,
// i.e. the order of the group through which the representation acts
// faithfully. Exact subgroup closure for groups up to closure_limit elements,
// Smith normal form of the relation matrix beyond that.
Int effective_order(const CharSupport& support);

// Order of a single character.
Int character_order(const Character& c, const AbelianGroup& group);

// 2c == 0. The trivial character is rejected.
bool is_involution(const Character& c, const AbelianGroup& group);

inline constexpr Int closure_limit = Int{1} << 24;

} // namespace invlat

#endif
