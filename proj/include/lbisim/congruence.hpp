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

#include <optional>
#include <string>
#include <vector>

#include "lbisim/term.hpp"

namespace lbisim {

/// Structural-congruence normal form.
///
/// Shape: a chain of restrictions over a parallel composition whose
/// components are sorted and contain no nested Par or Nil. Restrictions are
/// hoisted across parallel composition in every calculus and across ambients
/// and capabilities in MA; in CCS/ACCS a prefix body is a normal form of its
/// own. Vacuous restrictions are dropped and bound names are renamed to the
/// f0, f1, ... sequence avoiding the free names, so alpha-equivalent terms
/// print identically.
class CanonicalForm {
public:
    CanonicalForm() = default;

    Calculus calculus() const { return calculus_; }
    const Proc &proc() const { return proc_; }
    const std::string &str() const { return text_; }

    std::vector<std::string> binders() const;
    std::vector<Proc> components() const;

    Term term() const { return Term(calculus_, proc_); }

    friend bool operator==(const CanonicalForm &a, const CanonicalForm &b) {
        return a.calculus_ == b.calculus_ && a.text_ == b.text_;
    }
    friend bool operator<(const CanonicalForm &a, const CanonicalForm &b) {
        return a.text_ < b.text_;
    }

private:
    friend CanonicalForm canonicalize(Calculus c, const Proc &p);

    Calculus calculus_ = Calculus::CCS;
    Proc proc_;
    std::string text_;
};

CanonicalForm canonicalize(const Term &t);
/// Works on any tree, including ones with holes or repeated variables.
CanonicalForm canonicalize(Calculus c, const Proc &p);

bool equiv(const Term &a, const Term &b);

/// Splits a normal form level into its restriction prefix and its
/// components (a Nil level has none).
struct Level {
    std::vector<std::string> binders;
    std::vector<Proc> components;
};
Level peel(const Proc &level);
/// Components of a parallel composition (Par children, none for Nil).
std::vector<Proc> soup(const Proc &p);
/// Inverse of soup: Nil, the single component, or a Par.
Proc join(std::vector<Proc> components);
/// Restriction chain over join(components); not canonical.
Proc assemble(const std::vector<std::string> &binders, std::vector<Proc> components);
/// Summands of a component: the Sum's children, or the prefix itself.
std::vector<Proc> summands(const Proc &component);

/// Premise shapes of the reduction and transition rules:
///   Component  (nu A)(C | R)
///   Summand    (nu A)(mu.Q + M | R)
///   Nested     (nu A)(n[C | P2] | P3)
struct Pattern {
    enum class Shape { Component, Summand, Nested };
    Shape shape = Shape::Component;
    /// Filter on the selected element (the inner one for Nested).
    std::optional<Kind> kind;
    std::optional<Act> act;
    /// Side condition "name of the selected element is not in A". Ambients
    /// named by a variable never satisfy it.
    bool name_not_bound = false;
};

struct Decomposition {
    std::vector<std::string> binders;
    /// Selected component; for Summand the chosen summand; for Nested the
    /// enclosing ambient.
    Proc selected;
    /// Remaining summands (Summand shape), Nil if none.
    Proc other_summands;
    /// Nested shape: the chosen component inside the ambient and the rest.
    Proc inner;
    std::vector<Proc> inner_rest;
    /// Parallel remainder at top level.
    std::vector<Proc> rest;
};

std::vector<Decomposition> decompose(const CanonicalForm &c, const Pattern &pattern);
Proc recompose(const Decomposition &d, const Pattern &pattern);

} // namespace lbisim
