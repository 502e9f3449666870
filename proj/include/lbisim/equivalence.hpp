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

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lbisim/congruence.hpp"
#include "lbisim/labelset.hpp"
#include "lbisim/reduction.hpp"

namespace lbisim {

/// LBISIM_MAX_PAIRS if set, else 50000.
std::size_t default_max_pairs();

struct GameOptions {
    /// Bound on distinct state pairs (or states, for partition refinement).
    std::size_t max_pairs = default_max_pairs();
    /// Non-empty: play on instantiated transitions, label variables ranging
    /// over these terms and name variables over the free names in sight plus
    /// one fresh name. Empty: symbolic game with inert variables.
    std::vector<Term> pool;
};

/// One round of a refutation. `attacker` is "left" or "right"; `move` is a
/// label or an action. `left`/`right` are the states before the move.
struct WitnessStep {
    std::string attacker;
    std::string move;
    std::string left;
    std::string right;
    std::string target;
    std::size_t responses = 0;
    /// Set on the last step when the pair fails a local check (barbs).
    std::string note;
};

struct GameResult {
    bool verdict = false;
    std::vector<WitnessStep> witness;
    std::size_t explored = 0;
};

GameResult strong_bisim(const Term &p, const Term &q, const GameOptions &o = {});
GameResult async_bisim(const Term &p, const Term &q, const GameOptions &o = {});
GameResult l_bisim(const Term &p, const Term &q, const LabelSet &l, const GameOptions &o = {});
GameResult ipo_bisim(const Term &p, const Term &q, const GameOptions &o = {});
GameResult semi_saturated_bisim(const Term &p, const Term &q, const GameOptions &o = {});
/// Only the contextual-barb form is implemented; `contextual_barbs = false`
/// throws Unsupported.
GameResult barbed_semi_saturated_bisim(const Term &p, const Term &q, bool contextual_barbs = true,
                                       const GameOptions &o = {});

enum class Relation { Strong, Async, Ipo, SemiSat, BarbedSemiSat, LBisim };

/// strong, async, ipo, semi-sat, barbed-semi-sat, l-bisim.
Relation parse_relation(std::string_view text);
std::string_view to_string(Relation r);

/// Dispatches to the solver; `l` is only read by LBisim.
GameResult decide(Relation r, const Term &p, const Term &q, const LabelSet &l,
                  const GameOptions &o = {});

/// Game state normal form. Top-level process variables are erased, variables
/// under an ambient become the environment agent E, and name-variable
/// ambients are merged into one unknown ambient. In MA, parts that can
/// never act again are then dropped until nothing changes.
CanonicalForm game_state(Calculus c, const Proc &p);

/// p, -|open n.(m[0]|open m.T1) reaches P'' with P''|m, then `target`
/// without barb m; m is fresh.
bool pred_open(const Term &p, const Term &target, const std::string &n, const Term &t1);

enum class CcsPredicate { Out, In, Tau };
/// Out: context -|'a.('i.0|T1)|i.0; In: -|a.('i.0|T1)|i.0; Tau: one reduction.
bool pred_ccs(CcsPredicate kind, const Term &p, const Term &target, const std::string &a,
              const Term &t1);

struct CapturingReport {
    bool pass = true;
    /// Barb to the first label that captures it over the corpus.
    std::map<std::string, std::string> captured_by;
    std::vector<std::string> violations;
};

/// For every barb occurring in the corpus, looks for a label of `l` among the
/// corpus transitions whose presence coincides with the barb on every term.
CapturingReport is_capturing(const LabelSet &l, Calculus c, const std::vector<Term> &corpus);

} // namespace lbisim
