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

#ifndef INVLAT_BOUNDS_HPP
#define INVLAT_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invlat/enumeration.hpp"
#include "invlat/group_chars.hpp"
#include "invlat/lattice.hpp"
#include "invlat/witness.hpp"

namespace invlat {

// Reduced fraction with positive denominator.
struct Rational {
    Int num = 0;
    Int den = 1;

    static Rational make(Int num, Int den);
    std::string to_string() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

// true iff value <= r, compared exactly.
bool at_most(Int value, const Rational& r);

struct SearchOptions {
    std::uint64_t point_budget = default_point_budget;
};

// One pass over growing dilates d * body, d = 1, 2, ..., accumulating the
// lattice points of each shell into a running canonical basis.
//   gamma   smallest d whose points span a full-rank sublattice
//   beta    smallest d whose points span the whole invariant lattice
//   minima  lambda_i = smallest d with i independent points (so minima.back() == gamma)
//   indices [L : <points of degree <= d>] for gamma <= d <= beta
// Searches are capped at effective_order(support) (Noether's bound); reaching
// the cap without success is an internal error.
struct DegreeProfile {
    Geometry geometry = Geometry::cross_polytope;
    Int gamma = 0;
    Int beta = 0;
    Vec minima;
    std::vector<std::pair<Int, LatticeIndex>> indices;
};

DegreeProfile degree_profile(const CharSupport& support, Geometry geometry, const SearchOptions& opts = {});

Int gamma_rational(const CharSupport& support, const SearchOptions& opts = {});
Int beta_rational(const CharSupport& support, const SearchOptions& opts = {});
Int gamma_poly(const CharSupport& support, const SearchOptions& opts = {});
Int beta_poly(const CharSupport& support, const SearchOptions& opts = {});

// Successive minima of the cross-polytope with respect to L(G,S).
Vec successive_minima(const CharSupport& support, const SearchOptions& opts = {});

// [L(G,S) : <L(G,S) cap d * body>]; the degree of the invariant field over
// the subfield generated in degree <= d.
LatticeIndex extension_index(const CharSupport& support, Int degree, Geometry geometry,
                             const SearchOptions& opts = {});

// Smallest d >= 1 with d^m >= effective_order, in integer arithmetic.
Int root_lower_bound(Int effective_order, Int m);

struct ExtremalCheck {
    bool extremal = false;
    std::string structure;
};

// Whether gamma_r^m == effective_order. When it is, the effective group must
// be (Z/gamma_r)^m with the support as a basis; if that structure check
// fails a theory_violation is raised.
ExtremalCheck check_extremal(const CharSupport& support, Int gamma_r);

// 2 when every support character is an involution, 3 otherwise.
Int hard_floor(const CharSupport& support);

// S_m = {+-1, ..., +-m/2} (m even) or {+-1, ..., +-(m-1)/2, (m+1)/2} (m odd)
// in Z/n, listed as 1, -1, 2, -2, ...; requires n >= 3 and 1 <= m < n.
CharSupport family_support(Int n, Int m);

// max(3, ceil(n / ceil(m/2))).
Int family_value(Int n, Int m);

// m! p / (2^floor(m/2) 3^(ceil(m/2)-1)); p must be prime.
Rational minkowski_rhs(Int m, Int p);

enum class Mode { rational, polynomial, both };

std::string_view to_string(Mode m) noexcept;
Mode parse_mode(std::string_view s);

struct TheoreticalChecks {
    Int root_lower_bound = 0;
    Int hard_floor = 0;
    bool involution_only = false;
    std::optional<Int> family_value;
    std::optional<Rational> minkowski_rhs;
    std::optional<Int> prime_upper_bound; // (p+3)/2 when it applies
    Int noether_cap = 0;
    bool extremal = false;
    std::string extremal_structure;
    // Minkowski's second theorem for the cross-polytope: prod lambda_i <= m! det L.
    Int minima_product = 0;
    Int minkowski_limit = 0;

    friend bool operator==(const TheoreticalChecks&, const TheoreticalChecks&) = default;
};

struct BoundsReport {
    std::vector<Int> group_factors;
    IntMatrix support;
    Int m = 0;
    Int effective_order = 0;
    std::string mode = "both";

    std::optional<Int> beta_r;
    std::optional<Int> gamma_r;
    std::optional<Int> beta_poly;
    std::optional<Int> gamma_poly;
    Vec successive_minima;
    std::vector<std::pair<Int, LatticeIndex>> extension_indices;
    TheoreticalChecks theoretical;
    std::optional<GeneratorCertificate> rational_witness;
    std::optional<GeneratorCertificate> polynomial_witness;

    // Set when beta_r < beta_poly: over a field whose only roots of unity are
    // +-1 the rational generation degree rises to beta_poly.
    bool real_field_note = false;

    friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

struct VerifyOptions {
    Mode mode = Mode::both;
    std::uint64_t point_budget = default_point_budget;
    bool witnesses = true;
};

// Computes every quantity for the instance and evaluates every theoretical
// inequality. Any violated inequality raises ErrorCode::theory_violation with
// the instance spelled out for reproduction.
BoundsReport verify_all(const CharSupport& support, const VerifyOptions& opts = {});

} // namespace invlat

#endif
