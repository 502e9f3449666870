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

// Structural congruence taken literally: one axiom instance at a time,
// applied in either direction at any position. Independent of the
// normal-form code, used to cross-check it.

#include <cstddef>
#include <random>
#include <vector>

#include "lbisim/term.hpp"

namespace oracle {

/// Every term one axiom instance away from p. Growing rewrites (adding a
/// 0 or a vacuous restriction) are included only when `grow` is set.
std::vector<lbisim::Proc> rewrites(lbisim::Calculus c, const lbisim::Proc &p, bool grow);

/// Breadth-first closures of p and q under the axioms meet; terms at most `slack` nodes
/// larger than the bigger input, at most `max_states` terms.
bool congruent(lbisim::Calculus c, const lbisim::Proc &p, const lbisim::Proc &q,
               std::size_t slack = 2, std::size_t max_states = 20000);

/// A random walk of `steps` axiom applications.
lbisim::Proc scramble(lbisim::Calculus c, const lbisim::Proc &p, std::mt19937_64 &rng,
                      std::size_t steps);

std::size_t nodes(const lbisim::Proc &p);

} // namespace oracle
