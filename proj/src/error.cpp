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

#include "invlat/error.hpp"

namespace invlat {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::trivial_representation: return "trivial_representation";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::insufficient_degree: return "insufficient_degree";
    case ErrorCode::containment_violation: return "containment_violation";
    case ErrorCode::weight_mismatch: return "weight_mismatch";
    case ErrorCode::theory_violation: return "theory_violation";
    case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

} // namespace invlat
