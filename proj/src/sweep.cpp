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

#include "invlat/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

namespace invlat {

namespace {

Int parse_int(const std::string& s)
{
    Int v = 0;
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || p != end)
        throw Error(ErrorCode::invalid_argument, "not an integer: '" + s + "'");
    return v;
}

bool family_is_valid(Int n, Int m)
{
    if (m < 1 || m >= n)
        return false;
    std::set<Int> seen;
    for (Int k = 1; static_cast<Int>(seen.size()) < m; ++k) {
        for (Int s : {k, -k}) {
            if (static_cast<Int>(seen.size()) == m)
                break;
            const Int r = floor_mod(s, n);
            if (r == 0 || !seen.insert(r).second)
                return false;
        }
    }
    return true;
}

} // namespace

IntRange IntRange::parse(const std::string& s)
{
    IntRange r;
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
        r.lo = r.hi = parse_int(s);
    } else {
        r.lo = parse_int(s.substr(0, colon));
        r.hi = parse_int(s.substr(colon + 1));
    }
    if (r.lo > r.hi)
        throw Error(ErrorCode::invalid_argument, "empty range '" + s + "'");
    return r;
}

std::vector<FamilyRow> family_sweep(IntRange n, IntRange m, unsigned workers, std::uint64_t point_budget)
{
    if (n.lo < 2 || m.lo < 1)
        throw Error(ErrorCode::invalid_argument, "family sweep needs n >= 2 and m >= 1");
    std::vector<std::pair<Int, Int>> cells;
    for (Int nn = n.lo; nn <= n.hi; ++nn)
        for (Int mm = m.lo; mm <= m.hi; ++mm)
            if (family_is_valid(nn, mm))
                cells.emplace_back(nn, mm);

    const SearchOptions opts{point_budget};
    return parallel_map<FamilyRow>(cells.size(), workers, [&](std::size_t i) {
        const auto [nn, mm] = cells[i];
        const CharSupport s = family_support(nn, mm);
        FamilyRow row;
        row.n = nn;
        row.m = mm;
        row.predicted = family_value(nn, mm);
        const DegreeProfile p = degree_profile(s, Geometry::cross_polytope, opts);
        row.beta_r = p.beta;
        row.gamma_r = p.gamma;
        row.match = row.beta_r == row.predicted && row.gamma_r == row.predicted;
        return row;
    });
}

std::string family_csv(const std::vector<FamilyRow>& rows)
{
    std::ostringstream os;
    os << "n,m,predicted,computed_beta_r,computed_gamma_r,match\n";
    for (const FamilyRow& r : rows)
        os << r.n << ',' << r.m << ',' << r.predicted << ',' << r.beta_r << ',' << r.gamma_r << ','
           << (r.match ? "true" : "false") << '\n';
    return os.str();
}

std::string family_table(const std::vector<FamilyRow>& rows)
{
    std::ostringstream os;
    os << std::right << std::setw(4) << "n" << std::setw(4) << "m" << std::setw(11) << "predicted"
       << std::setw(8) << "beta_r" << std::setw(9) << "gamma_r" << "  match\n";
    for (const FamilyRow& r : rows)
        os << std::setw(4) << r.n << std::setw(4) << r.m << std::setw(11) << r.predicted << std::setw(8)
           << r.beta_r << std::setw(9) << r.gamma_r << "  " << (r.match ? "yes" : "NO") << '\n';
    return os.str();
}

std::vector<CharSupport> cyclic_supports(Int n, Int m)
{
    if (m < 1 || m >= n)
        return {};
    const AbelianGroup g = make_group({n});
    std::vector<CharSupport> out;
    Vec pick(static_cast<std::size_t>(m));
    for (Int i = 0; i < m; ++i)
        pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(reduce_support(g, std::span<const Int>(pick)));
        Int i = m - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - m + i)
            --i;
        if (i < 0)
            break;
        ++pick[static_cast<std::size_t>(i)];
        for (Int j = i + 1; j < m; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<CharSupport> random_cyclic_supports(std::size_t count, IntRange n, IntRange m, std::uint64_t seed)
{
    if (n.lo < 2 || m.lo < 1)
        throw Error(ErrorCode::invalid_argument, "random supports need n >= 2 and m >= 1");
    std::mt19937_64 rng(seed);
    std::vector<CharSupport> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const Int nn = std::uniform_int_distribution<Int>(n.lo, n.hi)(rng);
        const Int mm = std::min(std::uniform_int_distribution<Int>(m.lo, m.hi)(rng), nn - 1);
        Vec all(static_cast<std::size_t>(nn - 1));
        for (Int i = 0; i < nn - 1; ++i)
            all[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(static_cast<std::size_t>(mm));
        std::sort(all.begin(), all.end());
        out.push_back(reduce_support(make_group({nn}), std::span<const Int>(all)));
    }
    return out;
}

std::vector<VerifyOutcome> verify_sweep(const std::vector<CharSupport>& supports, const VerifyOptions& opts,
                                        unsigned workers)
{
    return parallel_map<VerifyOutcome>(supports.size(), workers, [&](std::size_t i) {
        VerifyOutcome out;
        out.support = supports[i];
        try {
            out.report = verify_all(supports[i], opts);
        } catch (const Error& e) {
            out.error = e.code();
            out.message = e.what();
        }
        return out;
    });
}

} // namespace invlat
