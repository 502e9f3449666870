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
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lbisim/error.hpp"

namespace lbisim {

enum class Calculus : std::uint8_t { CCS, ACCS, MA };

std::string_view to_string(Calculus c);
Calculus parse_calculus(std::string_view text);

/// Node constructors. The declaration order is the rank used by the total
/// order on terms, so holes sort first and parallel nodes last.
enum class Kind : std::uint8_t { Hole, Nil, Restrict, Ambient, Prefix, Sum, Particle, Var, Par };

/// Prefix actions: tau, a, 'a (CCS/ACCS) and in n, out n, open n (MA).
enum class Act : std::uint8_t { None, Tau, Input, Output, In, Out, Open };

using NameSet = std::set<std::string>;

/// Untyped syntax tree shared by the three calculi.
///
/// `name` holds the channel or ambient name, the restricted name, or the
/// identifier of a process variable. An ambient with `name_var` set is named
/// by a name variable (`?x[P]`).
struct Proc {
    Kind kind = Kind::Nil;
    Act act = Act::None;
    bool name_var = false;
    std::string name;
    std::vector<Proc> kids;

    static Proc nil();
    static Proc hole();
    static Proc var(std::string id);
    static Proc particle(std::string channel);
    static Proc prefix(Act act, std::string channel, Proc body);
    static Proc restrict(std::string name, Proc body);
    static Proc ambient(std::string name, Proc body, bool name_var = false);
    static Proc par(std::vector<Proc> kids);
    static Proc sum(std::vector<Proc> kids);

    const Proc &body() const { return kids.front(); }
};

int compare(const Proc &a, const Proc &b);
inline bool operator==(const Proc &a, const Proc &b) { return compare(a, b) == 0; }
inline bool operator<(const Proc &a, const Proc &b) { return compare(a, b) < 0; }

/// Concrete syntax, parseable back by parse_term/parse_label.
std::string print(const Proc &p);

NameSet free_names(const Proc &p);
/// Every name occurring in p, free or bound.
NameSet all_names(const Proc &p);
/// Process variable identifiers and name variable identifiers, in order of
/// first occurrence.
std::vector<std::string> process_vars(const Proc &p);
std::vector<std::string> name_vars(const Proc &p);
std::size_t count_holes(const Proc &p);
bool is_pure(const Proc &p);

/// The index-th name of the sequence f0, f1, ... that is not in `avoid`.
std::string fresh_name(const NameSet &avoid, std::size_t index = 0);

/// Renames free occurrences of `from` to `to`; does not look below a binder
/// for `from`. The caller guarantees `to` is not captured.
Proc rename_free(const Proc &p, const std::string &from, const std::string &to);

/// Throws MalformedTerm unless p is well formed for the calculus with exactly
/// `holes` holes.
void validate(const Proc &p, Calculus c, std::size_t holes);

/// A well-formed process term of one calculus, possibly containing process
/// and name variables.
class Term {
public:
    Term() = default;
    Term(Calculus calculus, Proc proc);

    Calculus calculus() const { return calculus_; }
    const Proc &proc() const { return proc_; }
    bool pure() const { return is_pure(proc_); }
    std::string str() const { return print(proc_); }

private:
    Calculus calculus_ = Calculus::CCS;
    Proc proc_;
};

/// A unary context, kept in canonical form. Equality of labels is equality
/// of their canonical text.
class Label {
public:
    Label() = default;
    Label(Calculus calculus, const Proc &body);

    Calculus calculus() const { return calculus_; }
    const Proc &body() const { return body_; }
    const std::string &str() const { return text_; }
    /// Process and name variables in first-use order.
    const std::vector<std::string> &variables() const { return variables_; }
    bool identity() const { return body_.kind == Kind::Hole; }

    friend bool operator==(const Label &a, const Label &b) {
        return a.calculus_ == b.calculus_ && a.text_ == b.text_;
    }
    friend bool operator<(const Label &a, const Label &b) { return a.text_ < b.text_; }

private:
    Calculus calculus_ = Calculus::CCS;
    Proc body_;
    std::string text_;
    std::vector<std::string> variables_;
};

struct Substitution {
    std::map<std::string, Term> procs;
    std::map<std::string, std::string> names;

    bool empty() const { return procs.empty() && names.empty(); }
};

/// Capture-avoiding substitution: restricted names that clash with a free
/// name of the substituted material are renamed to fresh names first.
Term apply_subst(const Term &t, const Substitution &s);
Proc apply_subst(const Proc &p, const std::map<std::string, Proc> &procs,
                 const std::map<std::string, std::string> &names);

/// Fills the hole of `context` with `filler`; binders of the context that
/// would capture a free name of the filler are renamed.
Proc plug(const Proc &context, const Proc &filler);
Term plug(const Label &l, const Term &t);

} // namespace lbisim
