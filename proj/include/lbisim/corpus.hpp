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

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lbisim/term.hpp"

namespace lbisim {

struct CorpusBounds {
    /// Empty: {a, b} for CCS/ACCS, {n, m} for MA.
    std::vector<std::string> names;
    /// Number of prefixes, particles, ambients and restrictions.
    std::size_t max_size = 3;
    /// Nesting of prefixes and ambients.
    std::size_t max_depth = 3;
    bool restrictions = true;
};

std::vector<std::string> default_names(Calculus c);

/// Nesting depth of prefixes and ambients.
std::size_t depth(const Proc &p);
/// Prefixes, particles, ambients and restrictions.
std::size_t size(const Proc &p);

/// Every term within the bounds, one per congruence class, in canonical
/// form, ordered by size then text.
std::vector<Term> enumerate_terms(Calculus c, const CorpusBounds &b);

/// A random pure term with exactly `size` constructors (before any
/// congruence), over `names`.
Term random_term(Calculus c, std::mt19937_64 &rng, std::size_t size,
                 const std::vector<std::string> &names);

/// All unordered pairs of `small` (diagonal included) followed by
/// `extra` pairs drawn with the seed from `large`.
std::vector<std::pair<Term, Term>> term_pairs(const std::vector<Term> &small,
                                              const std::vector<Term> &large, std::size_t extra,
                                              std::uint64_t seed);

} // namespace lbisim
