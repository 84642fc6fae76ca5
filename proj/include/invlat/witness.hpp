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

#ifndef INVLAT_WITNESS_HPP
#define INVLAT_WITNESS_HPP

#include <span>
#include <string>
#include <vector>

#include "invlat/enumeration.hpp"
#include "invlat/group_chars.hpp"
#include "invlat/lattice.hpp"

namespace invlat {

// Renders x^a: numerator factors in variable order, then "/" and the
// denominator, parenthesized when it has more than one factor.
//   (2,-1,0), [x1,x2,x4] -> "x1^2/x2"      (0,0,0) -> "1"
std::string monomial_string(std::span<const Int> a, std::span<const std::string> var_names);

// x<k> for cyclic groups (named by the character, as in x1, x2, x4), and
// x1..xm by position otherwise.
std::vector<std::string> default_variable_names(const CharSupport& support);

// Degree-<=d lattice points that generate the invariant lattice, with an
// exact certificate: coefficients * generators == target_basis, where the
// target is the canonical basis of L(G,S).
struct GeneratorCertificate {
    Int degree = 0;
    Geometry geometry = Geometry::cross_polytope;
    PointSet generators;
    IntMatrix coefficients;
    IntMatrix target_basis;

    // Re-multiplies and compares; also checks degrees and membership.
    bool verify(const Lattice& target) const;

    friend bool operator==(const GeneratorCertificate&, const GeneratorCertificate&) = default;
};

// Greedy selection over the degree-<=d points ordered by degree, then by
// denominator degree, then lexicographically; cross-polytope candidates are
// taken up to sign (first nonzero entry positive). A point is kept only if it
// enlarges the span. Raises insufficient_degree if the points of degree <= d
// do not generate the lattice.
GeneratorCertificate generator_witness(const CharSupport& support, Int degree, Geometry geometry,
                                       std::uint64_t point_budget = default_point_budget);

// Bookkeeping for writing f = (sum_i m_i) / (sum_j n_j) through the
// invariant Laurent monomials m_i / n_j.
struct RatioDecomposition {
    PointSet numerator_monomials;
    PointSet denominator_monomials;
    Weight common_weight;
    PointSet invariant_ratios; // m_i - n_j, i major
};

// Monomials are exponent vectors in the variables of the representation
// (one per listed character). All of them must be true monomials sharing a
// single weight; otherwise weight_mismatch / invalid_argument.
RatioDecomposition ratio_decomposition(const PointSet& numerators, const PointSet& denominators,
                                       const AbelianGroup& group, std::span<const Character> chars);

RatioDecomposition ratio_decomposition(const PointSet& numerators, const PointSet& denominators,
                                       const CharSupport& support);

} // namespace invlat

#endif
