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

#ifndef INVLAT_ERROR_HPP
#define INVLAT_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace invlat {

// Every failure raised by the library carries one of these codes. The CLI
// maps them onto process exit codes (see exit_code_for).
enum class ErrorCode {
    invalid_argument,
    dimension_mismatch,
    trivial_representation,
    overflow,
    budget_exceeded,
    insufficient_degree,
    containment_violation,
    weight_mismatch,
    theory_violation,
    internal,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised by index_of when the putative sublattice is not contained in the
// superlattice; witness is a basis vector of sub that is not in super.
class ContainmentError : public Error {
public:
    ContainmentError(const std::string& what, std::vector<std::int64_t> witness)
        : Error(ErrorCode::containment_violation, what), witness_(std::move(witness)) {}

    const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

private:
    std::vector<std::int64_t> witness_;
};

} // namespace invlat

#endif
