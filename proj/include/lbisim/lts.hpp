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

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "lbisim/congruence.hpp"

namespace lbisim {

/// Ordinary action: tau, a (input) or 'a (output).
struct Action {
    Act act = Act::Tau;
    std::string name;

    std::string str() const;
    friend auto operator<=>(const Action &, const Action &) = default;
};

struct ActionTransition {
    CanonicalForm source;
    Action action;
    CanonicalForm target;
    std::string rule;
};

/// ITS transition. Labels and targets use the variables @X1, @X2 and ?x.
struct Transition {
    CanonicalForm source;
    Label label;
    CanonicalForm target;
    std::string rule;
};

/// Standard structural LTS of CCS/ACCS, computed on the syntax tree.
/// Throws Unsupported for MA.
std::vector<ActionTransition> ordinary_transitions(const CanonicalForm &p);
std::vector<ActionTransition> ordinary_transitions(const Term &p);

/// Transitions of the ITS of the calculus, deduplicated on (label, target)
/// and sorted. Process variables in the source are inert.
std::vector<Transition> its_transitions(const CanonicalForm &p);
std::vector<Transition> its_transitions(const Term &p);

/// Closes the label variables; the result has a pure label and target.
/// Throws IncompleteSubstitution if a label variable is left open.
Transition instantiate(const Transition &t, const Substitution &s);

/// Lazily grown ITS cache; concurrent lookups, serialised inserts.
class TransitionSystem {
public:
    explicit TransitionSystem(Calculus c) : calculus_(c) {}

    Calculus calculus() const { return calculus_; }
    std::shared_ptr<const std::vector<Transition>> transitions(const CanonicalForm &p);
    std::size_t size() const;

private:
    Calculus calculus_;
    mutable std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<const std::vector<Transition>>> cache_;
};

struct LtsEdge {
    std::string source;
    std::string label;
    std::string target;
    std::string rule;
};

struct LtsGraph {
    std::vector<std::string> nodes;
    std::vector<LtsEdge> edges;
    bool truncated = false;
};

enum class LtsKind { Ordinary, Its };

/// Breadth-first exploration from p, stopping after max_states states.
LtsGraph explore(const CanonicalForm &p, LtsKind kind, std::size_t max_states = 1000);
std::string to_json(const LtsGraph &g);
std::string to_dot(const LtsGraph &g);

} // namespace lbisim
