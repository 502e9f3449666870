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

#include <string>
#include <vector>

#include "lbisim/congruence.hpp"

namespace lbisim {

struct ReductionStep {
    CanonicalForm source;
    CanonicalForm target;
    /// In, Out, Open (MA); Tau, Com (CCS/ACCS).
    std::string rule;
    /// Ambient names enclosing the redex, outermost first.
    std::vector<std::string> position;
};

/// One-step reductions, one step per distinct target, sorted by target.
/// Process variables are inert.
std::vector<ReductionStep> reduction_steps(const CanonicalForm &p);
std::vector<ReductionStep> reduction_steps(const Term &p);

/// Just the targets of reduction_steps.
std::vector<CanonicalForm> reducts(const CanonicalForm &p);
std::vector<CanonicalForm> reducts(const Term &p);

/// `co` marks an output barb 'a; MA barbs are ambient names with co unset.
struct Barb {
    std::string name;
    bool co = false;

    std::string str() const { return co ? "'" + name : name; }
    friend auto operator<=>(const Barb &, const Barb &) = default;
};

std::vector<Barb> barbs(const CanonicalForm &p);
std::vector<Barb> barbs(const Term &p);
bool has_barb(const CanonicalForm &p, const Barb &b);

} // namespace lbisim
