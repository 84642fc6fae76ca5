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

#ifndef INVLAT_REPORT_IO_HPP
#define INVLAT_REPORT_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "invlat/bounds.hpp"

namespace invlat {

inline constexpr std::string_view report_schema = "invar-lattice/1";

nlohmann::ordered_json certificate_to_json(const GeneratorCertificate& cert, const std::vector<std::string>& names);
GeneratorCertificate certificate_from_json(const nlohmann::ordered_json& j);

// Stable field names mirroring BoundsReport, under a top-level "schema" key.
nlohmann::ordered_json report_to_json(const BoundsReport& report);

// Inverse of report_to_json; rejects documents with a different schema.
BoundsReport report_from_json(const nlohmann::ordered_json& j);

// Human-readable aligned key/value listing.
std::string report_to_table(const BoundsReport& report);

// Header row plus one data row with the headline numbers.
std::string report_to_csv(const BoundsReport& report);

// Rebuilds the CharSupport a report was computed for.
CharSupport report_support(const BoundsReport& report);

} // namespace invlat

#endif
