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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lbisim/corpus.hpp"
#include "lbisim/equivalence.hpp"

namespace lbisim {

/// Per-term checks. Each returns a description of every disagreement found,
/// empty when the term passes.

/// canonicalize is idempotent and printing then parsing gives back the same
/// canonical form.
std::vector<std::string> check_canonical(const Term &p);
/// CCS/ACCS: ordinary transitions and ITS transitions are in bijection
/// (tau with `-`, inputs with `-|'a.@X1` or `-|'a`, outputs with `-|a.@X1`).
std::vector<std::string> check_correspondence(const Term &p);
/// MA: P has barb n iff it has a `-|open n.@X1` transition, for every free
/// name of P and every default name.
std::vector<std::string> check_open_barbs(const Term &p);
/// MA: pred_open agrees with the `-|open n.@X1` transitions closed with each
/// T1, on every target reachable by some instantiated transition.
std::vector<std::string> check_pred_open(const Term &p, const std::vector<Term> &t1s);
/// CCS: pred_ccs agrees with the `-`, `-|'a.@X1` and `-|a.@X1` transitions.
std::vector<std::string> check_pred_ccs(const Term &p, const std::vector<Term> &t1s);

/// A corpus run. Terms come from the generator unless `pairs` is given.
///
/// JSON form:
///   { "calculus": "ccs", "names": ["a","b"], "max_size": 3, "max_depth": 3,
///     "restrictions": true, "pair_size": 2, "extra_pairs": 300, "seed": 1,
///     "max_pairs": 50000, "pairs": [["a.0", "b.0"]],
///     "checks": ["canonical", "correspondence", "strong == l-bisim:LCCS"] }
///
/// Term checks: canonical, correspondence, open-barbs, pred-open, pred-ccs,
/// capturing. Pair checks compare two relations, `rel[:labels] == rel[:labels]`.
struct SuiteSpec {
    Calculus calculus = Calculus::CCS;
    CorpusBounds bounds;
    /// Pairs: every pair of terms of at most this size, plus extra_pairs
    /// sampled from the whole corpus.
    std::size_t pair_size = 2;
    std::size_t extra_pairs = 300;
    std::uint64_t seed = 1;
    std::size_t max_pairs = default_max_pairs();
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> checks;
};

/// Throws Error on a malformed spec.
SuiteSpec parse_suite(std::string_view json_text);

struct CheckReport {
    std::string name;
    std::size_t cases = 0;
    std::size_t failed = 0;
    /// Pair checks whose games ran out of budget; not counted as failures.
    std::size_t budget_exceeded = 0;
    /// The first few failures.
    std::vector<std::string> examples;

    bool pass() const { return failed == 0 && budget_exceeded == 0; }
};

struct SuiteReport {
    Calculus calculus = Calculus::CCS;
    std::size_t terms = 0;
    std::size_t pairs = 0;
    std::vector<CheckReport> checks;

    bool pass() const;
};

SuiteReport run_suite(const SuiteSpec &spec);
std::string to_json(const SuiteReport &r);
std::string to_text(const SuiteReport &r);

} // namespace lbisim
