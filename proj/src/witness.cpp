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

#include "invlat/witness.hpp"

#include <algorithm>

#include "invlat/normal_form.hpp"

namespace invlat {

namespace {

std::string render_factors(std::span<const Int> a, std::span<const std::string> names, int sign,
                           std::size_t& count)
{
    std::string s;
    count = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Int e = sign > 0 ? a[i] : -a[i];
        if (e <= 0)
            continue;
        if (count++)
            s += '*';
        s += names[i];
        if (e != 1)
            s += '^' + std::to_string(e);
    }
    return s;
}

Int denominator_degree(const Vec& a)
{
    Int s = 0;
    for (Int x : a)
        if (x < 0)
            s = checked_sub(s, x);
    return s;
}

bool first_nonzero_positive(const Vec& a)
{
    for (Int x : a)
        if (x != 0)
            return x > 0;
    return false;
}

} // namespace

std::string monomial_string(std::span<const Int> a, std::span<const std::string> var_names)
{
    if (a.size() != var_names.size())
        throw Error(ErrorCode::dimension_mismatch,
                    "exponent vector of length " + std::to_string(a.size()) + " with "
                        + std::to_string(var_names.size()) + " variable names");
    std::size_t num_count = 0;
    std::size_t den_count = 0;
    const std::string num = render_factors(a, var_names, +1, num_count);
    const std::string den = render_factors(a, var_names, -1, den_count);
    if (den_count == 0)
        return num_count ? num : "1";
    const std::string top = num_count ? num : "1";
    return den_count > 1 ? top + "/(" + den + ")" : top + "/" + den;
}

std::vector<std::string> default_variable_names(const CharSupport& support)
{
    std::vector<std::string> names;
    names.reserve(support.size());
    for (std::size_t i = 0; i < support.size(); ++i)
        names.push_back(support.group().is_cyclic() ? "x" + support[i].to_string() : "x" + std::to_string(i + 1));
    return names;
}

bool GeneratorCertificate::verify(const Lattice& target) const
{
    if (target_basis != target.basis())
        return false;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators.degrees()[i] > degree || !target.contains(generators[i]))
            return false;
        if (geometry == Geometry::simplex
            && std::any_of(generators[i].begin(), generators[i].end(), [](Int x) { return x < 0; }))
            return false;
    }
    if (coefficients.size() != target_basis.size())
        return false;
    return multiply(coefficients, generators.points(), generators.ambient_dim()) == target_basis;
}

GeneratorCertificate generator_witness(const CharSupport& support, Int degree, Geometry geometry,
                                       std::uint64_t point_budget)
{
    const Lattice target = invariant_lattice(support);
    const std::size_t m = target.ambient_dim();
    const PointSet ball = ball_points(target, degree, geometry, point_budget);

    std::vector<Vec> candidates;
    for (const Vec& p : ball) {
        if (geometry == Geometry::cross_polytope && !first_nonzero_positive(p))
            continue;
        if (l1_norm(p) == 0)
            continue;
        candidates.push_back(p);
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const Vec& a, const Vec& b) {
        const Int da = l1_norm(a), db = l1_norm(b);
        if (da != db)
            return da < db;
        const Int na = denominator_degree(a), nb = denominator_degree(b);
        if (na != nb)
            return na < nb;
        return a < b;
    });

    HermiteBasis acc(m);
    GeneratorCertificate cert;
    cert.degree = degree;
    cert.geometry = geometry;
    cert.generators = PointSet(m);
    for (const Vec& c : candidates) {
        if (acc.insert(c))
            cert.generators.add(c);
        if (acc == target.hermite())
            break;
    }
    if (!(acc == target.hermite()))
        throw Error(ErrorCode::insufficient_degree,
                    "points of degree <= " + std::to_string(degree) + " (" + std::string(to_string(geometry))
                        + ") do not generate the invariant lattice");

    const HermiteTransform ht = hermite_with_transform(cert.generators.points(), m);
    cert.target_basis = target.basis();
    cert.coefficients.assign(ht.transform.begin(),
                             ht.transform.begin() + static_cast<std::ptrdiff_t>(ht.basis.size()));
    if (ht.basis != cert.target_basis || !cert.verify(target))
        throw Error(ErrorCode::internal, "generator certificate failed re-verification");
    return cert;
}

RatioDecomposition ratio_decomposition(const PointSet& numerators, const PointSet& denominators,
                                       const AbelianGroup& group, std::span<const Character> chars)
{
    if (numerators.empty() || denominators.empty())
        throw Error(ErrorCode::invalid_argument, "numerator and denominator need at least one monomial each");
    const std::size_t n = chars.size();
    if (numerators.ambient_dim() != n || denominators.ambient_dim() != n)
        throw Error(ErrorCode::dimension_mismatch, "monomials do not match the number of variables");
    for (const PointSet* set : {&numerators, &denominators})
        for (const Vec& p : *set)
            if (std::any_of(p.begin(), p.end(), [](Int x) { return x < 0; }))
                throw Error(ErrorCode::invalid_argument, "negative exponent in " + format_vector(p));

    RatioDecomposition out;
    out.numerator_monomials = numerators;
    out.denominator_monomials = denominators;
    out.common_weight = weight(group, chars, numerators[0]);
    for (const PointSet* set : {&numerators, &denominators})
        for (const Vec& p : *set) {
            const Weight w = weight(group, chars, p);
            if (w != out.common_weight)
                throw Error(ErrorCode::weight_mismatch,
                            "monomial " + format_vector(p) + " has weight " + w.to_string() + ", expected "
                                + out.common_weight.to_string());
        }

    const Lattice lattice = representation_lattice(group, chars);
    out.invariant_ratios = PointSet(n);
    for (std::size_t i = 0; i < numerators.size(); ++i)
        for (std::size_t j = 0; j < denominators.size(); ++j) {
            Vec r(n);
            for (std::size_t k = 0; k < n; ++k)
                r[k] = checked_sub(numerators[i][k], denominators[j][k]);
            if (!lattice.contains(r)
                || l1_norm(r) > checked_add(numerators.degrees()[i], denominators.degrees()[j]))
                throw Error(ErrorCode::internal, "ratio " + format_vector(r) + " failed its invariance check");
            out.invariant_ratios.add(std::move(r));
        }
    return out;
}

RatioDecomposition ratio_decomposition(const PointSet& numerators, const PointSet& denominators,
                                       const CharSupport& support)
{
    return ratio_decomposition(numerators, denominators, support.group(), support.chars());
}

} // namespace invlat
