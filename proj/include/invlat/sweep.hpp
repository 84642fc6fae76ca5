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

#ifndef INVLAT_SWEEP_HPP
#define INVLAT_SWEEP_HPP

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "invlat/bounds.hpp"

namespace invlat {

// Runs task(i) for i in [0, count) on up to `workers` threads and returns the
// results in index order. The first exception by index is rethrown.
template <class R>
std::vector<R> parallel_map(std::size_t count, unsigned workers, const std::function<R(std::size_t)>& task)
{
    std::vector<std::optional<R>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i].emplace(task(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
    if (n <= 1) {
        run();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned w = 0; w < n; ++w)
            pool.emplace_back(run);
    }
    std::vector<R> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

struct IntRange {
    Int lo = 0;
    Int hi = 0;

    // "a:b" or a single integer.
    static IntRange parse(const std::string& s);
};

struct FamilyRow {
    Int n = 0;
    Int m = 0;
    Int predicted = 0;
    Int beta_r = 0;
    Int gamma_r = 0;
    bool match = false;
};

// Cells with m >= n are skipped, as are cells whose family support would
// repeat a character.
std::vector<FamilyRow> family_sweep(IntRange n, IntRange m, unsigned workers,
                                    std::uint64_t point_budget = default_point_budget);

std::string family_csv(const std::vector<FamilyRow>& rows);
std::string family_table(const std::vector<FamilyRow>& rows);

// Every m-subset of the nontrivial characters of Z/n, in lexicographic order.
std::vector<CharSupport> cyclic_supports(Int n, Int m);

// Random cyclic supports with n and m drawn uniformly from the ranges;
// m is clamped to n-1.
std::vector<CharSupport> random_cyclic_supports(std::size_t count, IntRange n, IntRange m, std::uint64_t seed);

struct VerifyOutcome {
    CharSupport support;
    std::optional<BoundsReport> report;
    std::optional<ErrorCode> error;
    std::string message;
};

// Runs verify_all on every support, capturing errors per instance.
std::vector<VerifyOutcome> verify_sweep(const std::vector<CharSupport>& supports, const VerifyOptions& opts,
                                        unsigned workers);

} // namespace invlat

#endif
