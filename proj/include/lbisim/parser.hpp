/*
 * Copyright 2026 The lbisim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string_view>

#include "lbisim/term.hpp"

namespace lbisim {

/// Grammar (ASCII, whitespace-insensitive):
///
///   P ::= 0 | NAME[P] | PREFIX.P | 'NAME | (nu NAME)P | P|P | S+S
///       | @IDENT | ?IDENT[P] | (P) | -        (hole, labels only)
///   PREFIX ::= tau | NAME | 'NAME | in NAME | out NAME | open NAME
///
/// Prefix binds tightest, then '+', then '|'. A restriction extends as far
/// to the right as possible.
Proc parse_proc(std::string_view text, bool allow_hole = false);

Term parse_term(std::string_view text, Calculus c);
Label parse_label(std::string_view text, Calculus c);

} // namespace lbisim
