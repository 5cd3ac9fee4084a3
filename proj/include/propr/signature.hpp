/*
 * Copyright 2026 The propr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <string_view>

#include "propr/property_r.hpp"

namespace propr {

/// Ascending star sizes with caret exponents, e.g. "S0^4 S1".
std::string signature_to_string(const StarSignature& s);

/// Accepts the canonical form as well as factored products such as
/// "(S0 S2)^2" and "S0 S2 (S1)^3". Juxtaposition is disjoint union.
/// Throws ParseError on malformed input or a negative exponent.
StarSignature parse_signature(std::string_view text);

}  // namespace propr
