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

#include "invlat/bounds.hpp"

#include <algorithm>

namespace invlat {

Rational Rational::make(Int num, Int den)
{
    if (den == 0)
        throw Error(ErrorCode::invalid_argument, "zero denominator");
    if (den < 0) {
        num = checked_neg(num);
        den = checked_neg(den);
    }
    const Int g = gcd(num, den);
    return {num / g, den / g};
}

std::string Rational::to_string() const
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool at_most(Int value, const Rational& r) { return checked_mul(value, r.den) <= r.num; }

namespace {

// base^exp >= target, without overflowing.
bool power_at_least(Int base, Int exp, Int target)
{
    Int acc = 1;
    for (Int i = 0; i < exp; ++i) {
        if (acc >= target)
            return true;
        if (__builtin_mul_overflow(acc, base, &acc))
            return true;
    }
    return acc >= target;
}

DegreeProfile search(const CharSupport& support, Geometry geometry, const SearchOptions& opts,
                     bool through_beta)
{
    const Lattice lattice = invariant_lattice(support);
    const Int det = *lattice.determinant();
    const Int cap = effective_order(support);
    if (cap != det)
        throw Error(ErrorCode::theory_violation,
                    "det L(G,S) = " + std::to_string(det) + " differs from the effective order "
                        + std::to_string(cap) + " for G=" + support.group().describe()
                        + ", S=" + support.describe());

    const std::size_t m = support.size();
    ShellEnumerator shells(lattice, geometry, opts.point_budget);
    HermiteBasis spanned(m);
    DegreeProfile out;
    out.geometry = geometry;
    for (Int d = 1; d <= cap; ++d) {
        for (const Vec& p : shells.shell(d).points)
            spanned.insert(p);
        while (out.minima.size() < spanned.rank())
            out.minima.push_back(d);
        if (spanned.rank() < m)
            continue;
        if (out.gamma == 0) {
            out.gamma = d;
            if (!through_beta)
                return out;
        }
        const Int sub_det = *spanned.determinant();
        if (sub_det % det != 0)
            throw Error(ErrorCode::internal, "spanned sublattice determinant is not a multiple of det L");
        const Int index = sub_det / det;
        out.indices.emplace_back(d, LatticeIndex::finite(index));
        if (index == 1) {
            out.beta = d;
            return out;
        }
    }
    throw Error(ErrorCode::internal,
                "degree search for G=" + support.group().describe() + ", S=" + support.describe()
                    + " reached the Noether cap " + std::to_string(cap) + " without generating the lattice");
}

void require_nonempty(const CharSupport& support)
{
    if (support.empty())
        throw Error(ErrorCode::trivial_representation,
                    "the support is empty: the representation is trivial");
}

} // namespace

DegreeProfile degree_profile(const CharSupport& support, Geometry geometry, const SearchOptions& opts)
{
    require_nonempty(support);
    return search(support, geometry, opts, true);
}

Int gamma_rational(const CharSupport& support, const SearchOptions& opts)
{
    require_nonempty(support);
    return search(support, Geometry::cross_polytope, opts, false).gamma;
}

Int beta_rational(const CharSupport& support, const SearchOptions& opts)
{
    return degree_profile(support, Geometry::cross_polytope, opts).beta;
}

Int gamma_poly(const CharSupport& support, const SearchOptions& opts)
{
    require_nonempty(support);
    return search(support, Geometry::simplex, opts, false).gamma;
}

Int beta_poly(const CharSupport& support, const SearchOptions& opts)
{
    return degree_profile(support, Geometry::simplex, opts).beta;
}

Vec successive_minima(const CharSupport& support, const SearchOptions& opts)
{
    require_nonempty(support);
    return search(support, Geometry::cross_polytope, opts, false).minima;
}

LatticeIndex extension_index(const CharSupport& support, Int degree, Geometry geometry, const SearchOptions& opts)
{
    const Lattice lattice = invariant_lattice(support);
    return index_of(span(ball_points(lattice, degree, geometry, opts.point_budget)), lattice);
}

Int root_lower_bound(Int effective_order, Int m)
{
    if (m < 1 || effective_order < 1)
        throw Error(ErrorCode::invalid_argument, "root_lower_bound needs m >= 1 and a positive order");
    Int lo = 1, hi = effective_order;
    while (lo < hi) {
        const Int mid = lo + (hi - lo) / 2;
        if (power_at_least(mid, m, effective_order))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

ExtremalCheck check_extremal(const CharSupport& support, Int gamma_r)
{
    require_nonempty(support);
    const Int eff = effective_order(support);
    const Int m = static_cast<Int>(support.size());
    const bool reaches = power_at_least(gamma_r, m, eff);
    const bool exceeds = power_at_least(gamma_r, m, eff + 1);
    if (!reaches)
        throw Error(ErrorCode::theory_violation,
                    "gamma_r^m < effective order for G=" + support.group().describe() + ", S=" + support.describe());
    if (exceeds)
        return {false, std::to_string(gamma_r) + "^" + std::to_string(m) + " exceeds the effective order "
                           + std::to_string(eff)};

    for (const Character& c : support.chars())
        if (character_order(c, support.group()) != gamma_r)
            throw Error(ErrorCode::theory_violation,
                        "gamma_r^m equals the effective order but character " + c.to_string()
                            + " does not have order " + std::to_string(gamma_r) + " (G="
                            + support.group().describe() + ", S=" + support.describe() + ")");
    // m characters of order d generating a group of order d^m form a basis.
    return {true, "effective group (Z/" + std::to_string(gamma_r) + ")^" + std::to_string(m)
                      + " with the support characters as a basis"};
}

Int hard_floor(const CharSupport& support)
{
    require_nonempty(support);
    for (const Character& c : support.chars())
        if (!is_involution(c, support.group()))
            return 3;
    return 2;
}

CharSupport family_support(Int n, Int m)
{
    if (n < 3 || m < 1 || m >= n)
        throw Error(ErrorCode::invalid_argument,
                    "family parameters need n >= 3 and 1 <= m < n, got n=" + std::to_string(n)
                        + ", m=" + std::to_string(m));
    Vec chars;
    for (Int k = 1; k <= m / 2; ++k) {
        chars.push_back(k);
        chars.push_back(-k);
    }
    if (m % 2 == 1)
        chars.push_back((m + 1) / 2);
    CharSupport s = reduce_support(make_group({n}), chars);
    if (static_cast<Int>(s.size()) != m)
        throw Error(ErrorCode::invalid_argument,
                    "S_m for n=" + std::to_string(n) + ", m=" + std::to_string(m)
                        + " does not consist of m distinct nontrivial characters");
    return s;
}

Int family_value(Int n, Int m)
{
    if (n < 3 || m < 1 || m >= n)
        throw Error(ErrorCode::invalid_argument, "family parameters need n >= 3 and 1 <= m < n");
    const Int half = (m + 1) / 2;
    return std::max<Int>(3, (n + half - 1) / half);
}

Rational minkowski_rhs(Int m, Int p)
{
    if (m < 1)
        throw Error(ErrorCode::invalid_argument, "minkowski_rhs needs m >= 1");
    if (!is_prime(p))
        throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
    Int num = p;
    for (Int k = 2; k <= m; ++k)
        num = checked_mul(num, k);
    const Int den = checked_mul(checked_pow(2, m / 2), checked_pow(3, (m + 1) / 2 - 1));
    return Rational::make(num, den);
}

std::string_view to_string(Mode m) noexcept
{
    switch (m) {
    case Mode::rational: return "rational";
    case Mode::polynomial: return "polynomial";
    case Mode::both: return "both";
    }
    return "both";
}

Mode parse_mode(std::string_view s)
{
    if (s == "rational")
        return Mode::rational;
    if (s == "polynomial")
        return Mode::polynomial;
    if (s == "both")
        return Mode::both;
    throw Error(ErrorCode::invalid_argument, "unknown mode '" + std::string(s) + "'");
}

namespace {

bool is_family_instance(const CharSupport& support)
{
    const AbelianGroup& g = support.group();
    const auto m = static_cast<Int>(support.size());
    if (!g.is_cyclic() || g.num_factors() != 1)
        return false;
    const Int n = g.order();
    if (n < 3 || m >= n)
        return false;
    std::vector<Character> want = family_support(n, m).chars();
    std::vector<Character> have = support.chars();
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    return want == have;
}

bool mutually_inverse(const CharSupport& s)
{
    if (s.size() != 2)
        return false;
    const auto& n = s.group().factor_orders();
    for (std::size_t j = 0; j < n.size(); ++j)
        if ((s[0][j] + s[1][j]) % n[j] != 0)
            return false;
    return true;
}

} // namespace

BoundsReport verify_all(const CharSupport& support, const VerifyOptions& opts)
{
    require_nonempty(support);
    const std::string instance = " [G=" + support.group().describe() + ", S=" + support.describe() + "]";
    auto require = [&](bool ok, const std::string& what) {
        if (!ok)
            throw Error(ErrorCode::theory_violation, what + instance);
    };

    BoundsReport r;
    r.group_factors = support.group().factor_orders();
    for (const Character& c : support.chars())
        r.support.push_back(c.residues());
    r.m = static_cast<Int>(support.size());
    r.effective_order = effective_order(support);
    r.mode = std::string(to_string(opts.mode));

    const Lattice lattice = invariant_lattice(support);
    const Int det = *lattice.determinant();
    require(det == r.effective_order, "det L(G,S) differs from the effective order");

    const Int m = r.m;
    const Int eff = r.effective_order;
    TheoreticalChecks& th = r.theoretical;
    th.noether_cap = eff;
    th.hard_floor = hard_floor(support);
    th.involution_only = th.hard_floor == 2;
    th.root_lower_bound = root_lower_bound(eff, m);

    const SearchOptions search_opts{opts.point_budget};
    if (is_prime(eff) && (m >= 3 || (m == 2 && !mutually_inverse(support))))
        th.prime_upper_bound = (eff + 3) / 2;

    if (opts.mode != Mode::polynomial) {
        const DegreeProfile cross = degree_profile(support, Geometry::cross_polytope, search_opts);
        r.gamma_r = cross.gamma;
        r.beta_r = cross.beta;
        r.extension_indices = cross.indices;
        r.successive_minima = Vec(cross.minima.begin(), cross.minima.begin() + m);
        const Int gamma = cross.gamma;
        const Int beta = cross.beta;
        const Vec& lambda = r.successive_minima;

        require(gamma <= beta, "gamma_r > beta_r");
        require(lambda.back() == gamma, "largest successive minimum differs from gamma_r");
        require(std::is_sorted(lambda.begin(), lambda.end()), "successive minima are not non-decreasing");
        require(gamma >= th.root_lower_bound, "gamma_r^m is below the effective order");
        require(gamma >= th.hard_floor, "gamma_r is below the hard floor");
        require((gamma == 2) == th.involution_only, "gamma_r = 2 does not match the all-involutions case");
        require(lambda.front() >= 2, "lattice point of degree 1");
        if (eff % 2 == 1)
            for (Int i = m / 2; i < m; ++i)
                require(lambda[static_cast<std::size_t>(i)] >= 3,
                        "more than floor(m/2) independent points of degree 2 in an odd-order group");
        require(beta <= eff, "beta_r exceeds the Noether bound");

        for (std::size_t k = 1; k < r.extension_indices.size(); ++k)
            require(r.extension_indices[k].second.value() <= r.extension_indices[k - 1].second.value(),
                    "extension index increased with the degree");
        require(!r.extension_indices.empty() && r.extension_indices.back().second == LatticeIndex::finite(1),
                "extension index at beta_r is not 1");

        const ExtremalCheck ex = check_extremal(support, gamma);
        th.extremal = ex.extremal;
        th.extremal_structure = ex.structure;

        th.minima_product = 1;
        for (Int l : lambda)
            th.minima_product = checked_mul(th.minima_product, l);
        th.minkowski_limit = det;
        for (Int k = 2; k <= m; ++k)
            th.minkowski_limit = checked_mul(th.minkowski_limit, k);
        require(th.minima_product <= th.minkowski_limit, "successive minima violate Minkowski's second theorem");

        if (th.prime_upper_bound)
            require(beta <= *th.prime_upper_bound, "beta_r exceeds (p+3)/2");
        if (is_prime(eff) && eff % 2 == 1) {
            th.minkowski_rhs = minkowski_rhs(m, eff);
            require(at_most(gamma, *th.minkowski_rhs), "gamma_r exceeds the successive-minima bound");
        }
        if (is_family_instance(support)) {
            th.family_value = family_value(support.group().order(), m);
            require(beta == *th.family_value && gamma == *th.family_value,
                    "S_m instance does not attain max(3, ceil(n / ceil(m/2)))");
        }
        if (opts.witnesses)
            r.rational_witness = generator_witness(support, beta, Geometry::cross_polytope, opts.point_budget);
    }

    if (opts.mode != Mode::rational) {
        const DegreeProfile simplex = degree_profile(support, Geometry::simplex, search_opts);
        r.gamma_poly = simplex.gamma;
        r.beta_poly = simplex.beta;
        require(simplex.gamma <= simplex.beta, "gamma_poly > beta_poly");
        require(simplex.beta <= eff, "beta_poly exceeds the Noether bound");
        if (th.prime_upper_bound)
            require(simplex.beta <= *th.prime_upper_bound, "beta_poly exceeds (p+3)/2");
        if (opts.witnesses)
            r.polynomial_witness = generator_witness(support, simplex.beta, Geometry::simplex, opts.point_budget);
    }

    if (opts.mode == Mode::both) {
        require(*r.gamma_r <= *r.gamma_poly, "gamma_r > gamma_poly");
        require(*r.beta_r <= *r.beta_poly, "beta_r > beta_poly");
        r.real_field_note = *r.beta_r < *r.beta_poly;
    }
    return r;
}

} // namespace invlat
