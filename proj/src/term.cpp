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

#include "lbisim/term.hpp"

#include <algorithm>

namespace lbisim {

std::string_view to_string(Calculus c) {
    switch (c) {
    case Calculus::CCS:
        return "ccs";
    case Calculus::ACCS:
        return "accs";
    case Calculus::MA:
        return "ma";
    }
    return "?";
}

Calculus parse_calculus(std::string_view text) {
    if (text == "ccs" || text == "CCS")
        return Calculus::CCS;
    if (text == "accs" || text == "ACCS")
        return Calculus::ACCS;
    if (text == "ma" || text == "MA")
        return Calculus::MA;
    throw Error("unknown calculus '" + std::string(text) + "'");
}

Proc Proc::nil() { return Proc{}; }

Proc Proc::hole() {
    Proc p;
    p.kind = Kind::Hole;
    return p;
}

Proc Proc::var(std::string id) {
    Proc p;
    p.kind = Kind::Var;
    p.name = std::move(id);
    return p;
}

Proc Proc::particle(std::string channel) {
    Proc p;
    p.kind = Kind::Particle;
    p.name = std::move(channel);
    return p;
}

Proc Proc::prefix(Act act, std::string channel, Proc body) {
    Proc p;
    p.kind = Kind::Prefix;
    p.act = act;
    p.name = std::move(channel);
    p.kids.push_back(std::move(body));
    return p;
}

Proc Proc::restrict(std::string name, Proc body) {
    Proc p;
    p.kind = Kind::Restrict;
    p.name = std::move(name);
    p.kids.push_back(std::move(body));
    return p;
}

Proc Proc::ambient(std::string name, Proc body, bool name_var) {
    Proc p;
    p.kind = Kind::Ambient;
    p.name = std::move(name);
    p.name_var = name_var;
    p.kids.push_back(std::move(body));
    return p;
}

Proc Proc::par(std::vector<Proc> kids) {
    Proc p;
    p.kind = Kind::Par;
    p.kids = std::move(kids);
    return p;
}

Proc Proc::sum(std::vector<Proc> kids) {
    Proc p;
    p.kind = Kind::Sum;
    p.kids = std::move(kids);
    return p;
}

int compare(const Proc &a, const Proc &b) {
    if (a.kind != b.kind)
        return a.kind < b.kind ? -1 : 1;
    // Variable-named ambients sort before named ones.
    if (a.name_var != b.name_var)
        return a.name_var ? -1 : 1;
    if (a.act != b.act)
        return a.act < b.act ? -1 : 1;
    if (int c = a.name.compare(b.name); c != 0)
        return c < 0 ? -1 : 1;
    const std::size_t n = std::min(a.kids.size(), b.kids.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(a.kids[i], b.kids[i]); c != 0)
            return c;
    if (a.kids.size() != b.kids.size())
        return a.kids.size() < b.kids.size() ? -1 : 1;
    return 0;
}

namespace {

enum class Ctx { Top, ParChild, SumChild, PrefixBody };

std::string action_text(const Proc &p) {
    switch (p.act) {
    case Act::Tau:
        return "tau";
    case Act::Input:
        return p.name;
    case Act::Output:
        return "'" + p.name;
    case Act::In:
        return "in " + p.name;
    case Act::Out:
        return "out " + p.name;
    case Act::Open:
        return "open " + p.name;
    case Act::None:
        break;
    }
    return "?";
}

void print_to(const Proc &p, Ctx ctx, std::string &out) {
    switch (p.kind) {
    case Kind::Nil:
        out += '0';
        return;
    case Kind::Hole:
        out += '-';
        return;
    case Kind::Var:
        out += '@';
        out += p.name;
        return;
    case Kind::Particle:
        out += '\'';
        out += p.name;
        return;
    case Kind::Ambient:
        if (p.name_var)
            out += '?';
        out += p.name;
        out += '[';
        print_to(p.body(), Ctx::Top, out);
        out += ']';
        return;
    case Kind::Prefix:
        out += action_text(p);
        out += '.';
        print_to(p.body(), Ctx::PrefixBody, out);
        return;
    case Kind::Restrict: {
        // A restriction extends as far right as possible, so anywhere but the
        // top of a bracketed region it needs its own parentheses.
        const bool wrap = ctx != Ctx::Top;
        if (wrap)
            out += '(';
        out += "(nu ";
        out += p.name;
        out += ')';
        const Proc &b = p.body();
        if (b.kind == Kind::Par || b.kind == Kind::Sum) {
            out += '(';
            print_to(b, Ctx::Top, out);
            out += ')';
        } else {
            print_to(b, Ctx::Top, out);
        }
        if (wrap)
            out += ')';
        return;
    }
    case Kind::Par: {
        const bool wrap = ctx != Ctx::Top;
        if (wrap)
            out += '(';
        for (std::size_t i = 0; i < p.kids.size(); ++i) {
            if (i)
                out += '|';
            print_to(p.kids[i], Ctx::ParChild, out);
        }
        if (wrap)
            out += ')';
        return;
    }
    case Kind::Sum: {
        const bool wrap = ctx == Ctx::SumChild || ctx == Ctx::PrefixBody;
        if (wrap)
            out += '(';
        for (std::size_t i = 0; i < p.kids.size(); ++i) {
            if (i)
                out += '+';
            print_to(p.kids[i], Ctx::SumChild, out);
        }
        if (wrap)
            out += ')';
        return;
    }
    }
}

void free_into(const Proc &p, std::vector<std::string> &bound, NameSet &out) {
    auto add = [&](const std::string &n) {
        if (std::find(bound.begin(), bound.end(), n) == bound.end())
            out.insert(n);
    };
    switch (p.kind) {
    case Kind::Particle:
        add(p.name);
        return;
    case Kind::Prefix:
        if (p.act != Act::Tau)
            add(p.name);
        free_into(p.body(), bound, out);
        return;
    case Kind::Ambient:
        if (!p.name_var)
            add(p.name);
        free_into(p.body(), bound, out);
        return;
    case Kind::Restrict:
        bound.push_back(p.name);
        free_into(p.body(), bound, out);
        bound.pop_back();
        return;
    default:
        for (const Proc &k : p.kids)
            free_into(k, bound, out);
    }
}

void all_into(const Proc &p, NameSet &out) {
    switch (p.kind) {
    case Kind::Particle:
    case Kind::Restrict:
        out.insert(p.name);
        break;
    case Kind::Prefix:
        if (p.act != Act::Tau)
            out.insert(p.name);
        break;
    case Kind::Ambient:
        if (!p.name_var)
            out.insert(p.name);
        break;
    default:
        break;
    }
    for (const Proc &k : p.kids)
        all_into(k, out);
}

void vars_into(const Proc &p, bool names, std::vector<std::string> &out) {
    const bool hit = names ? (p.kind == Kind::Ambient && p.name_var) : p.kind == Kind::Var;
    if (hit && std::find(out.begin(), out.end(), p.name) == out.end())
        out.push_back(p.name);
    for (const Proc &k : p.kids)
        vars_into(k, names, out);
}

} // namespace

std::string print(const Proc &p) {
    std::string out;
    print_to(p, Ctx::Top, out);
    return out;
}

NameSet free_names(const Proc &p) {
    NameSet out;
    std::vector<std::string> bound;
    free_into(p, bound, out);
    return out;
}

NameSet all_names(const Proc &p) {
    NameSet out;
    all_into(p, out);
    return out;
}

std::vector<std::string> process_vars(const Proc &p) {
    std::vector<std::string> out;
    vars_into(p, false, out);
    return out;
}

std::vector<std::string> name_vars(const Proc &p) {
    std::vector<std::string> out;
    vars_into(p, true, out);
    return out;
}

std::size_t count_holes(const Proc &p) {
    std::size_t n = p.kind == Kind::Hole ? 1 : 0;
    for (const Proc &k : p.kids)
        n += count_holes(k);
    return n;
}

bool is_pure(const Proc &p) {
    if (p.kind == Kind::Var || (p.kind == Kind::Ambient && p.name_var))
        return false;
    return std::all_of(p.kids.begin(), p.kids.end(), [](const Proc &k) { return is_pure(k); });
}

std::string fresh_name(const NameSet &avoid, std::size_t index) {
    for (std::size_t i = 0;; ++i) {
        std::string candidate = "f" + std::to_string(i);
        if (avoid.count(candidate))
            continue;
        if (index == 0)
            return candidate;
        --index;
    }
}

Proc rename_free(const Proc &p, const std::string &from, const std::string &to) {
    if (p.kind == Kind::Restrict && p.name == from)
        return p;
    Proc out = p;
    switch (p.kind) {
    case Kind::Particle:
    case Kind::Prefix:
        if (p.act != Act::Tau && p.name == from)
            out.name = to;
        break;
    case Kind::Ambient:
        if (!p.name_var && p.name == from)
            out.name = to;
        break;
    default:
        break;
    }
    for (Proc &k : out.kids)
        k = rename_free(k, from, to);
    return out;
}

namespace {

bool act_allowed(Act a, Calculus c) {
    switch (c) {
    case Calculus::CCS:
        return a == Act::Tau || a == Act::Input || a == Act::Output;
    case Calculus::ACCS:
        return a == Act::Tau || a == Act::Input;
    case Calculus::MA:
        return a == Act::In || a == Act::Out || a == Act::Open;
    }
    return false;
}

void check_node(const Proc &p, Calculus c, std::set<std::string> &vars,
                std::set<std::string> &nvars) {
    const std::string where = " in '" + print(p) + "'";
    switch (p.kind) {
    case Kind::Sum:
        if (c == Calculus::MA)
            throw MalformedTerm("summation is not part of mobile ambients" + where);
        if (p.kids.size() < 2)
            throw MalformedTerm("summation needs two summands" + where);
        for (const Proc &k : p.kids)
            if (k.kind != Kind::Nil && k.kind != Kind::Prefix && k.kind != Kind::Sum)
                throw MalformedTerm("unguarded summand '" + print(k) + "'");
        break;
    case Kind::Par:
        if (p.kids.size() < 2)
            throw MalformedTerm("parallel composition needs two components" + where);
        break;
    case Kind::Prefix:
        if (!act_allowed(p.act, c))
            throw MalformedTerm("prefix not allowed in " + std::string(to_string(c)) + where);
        break;
    case Kind::Ambient:
        if (c != Calculus::MA)
            throw MalformedTerm("ambients only exist in mobile ambients" + where);
        if (p.name_var && !nvars.insert(p.name).second)
            throw MalformedTerm("name variable ?" + p.name + " occurs twice");
        break;
    case Kind::Particle:
        if (c != Calculus::ACCS)
            throw MalformedTerm("output particles only exist in asynchronous CCS" + where);
        break;
    case Kind::Var:
        if (!vars.insert(p.name).second)
            throw MalformedTerm("process variable @" + p.name + " occurs twice");
        break;
    default:
        break;
    }
    for (const Proc &k : p.kids)
        check_node(k, c, vars, nvars);
}

} // namespace

void validate(const Proc &p, Calculus c, std::size_t holes) {
    std::set<std::string> vars, nvars;
    check_node(p, c, vars, nvars);
    const std::size_t found = count_holes(p);
    if (found != holes)
        throw MalformedTerm("expected " + std::to_string(holes) + " hole(s), found " +
                            std::to_string(found));
}

Term::Term(Calculus calculus, Proc proc) : calculus_(calculus), proc_(std::move(proc)) {
    validate(proc_, calculus_, 0);
}

namespace {

struct SubstEnv {
    const std::map<std::string, Proc> &procs;
    const std::map<std::string, std::string> &names;
    NameSet range_names; // free names of the substituted material
    NameSet avoid;       // every name in sight
    std::size_t next = 0;
};

Proc subst_rec(const Proc &p, SubstEnv &env) {
    switch (p.kind) {
    case Kind::Var: {
        auto it = env.procs.find(p.name);
        return it == env.procs.end() ? p : it->second;
    }
    case Kind::Ambient: {
        Proc out = p;
        if (p.name_var) {
            auto it = env.names.find(p.name);
            if (it != env.names.end()) {
                out.name = it->second;
                out.name_var = false;
            }
        }
        out.kids[0] = subst_rec(p.body(), env);
        return out;
    }
    case Kind::Restrict: {
        if (!env.range_names.count(p.name)) {
            Proc out = p;
            out.kids[0] = subst_rec(p.body(), env);
            return out;
        }
        std::string fresh = fresh_name(env.avoid);
        env.avoid.insert(fresh);
        Proc renamed = rename_free(p.body(), p.name, fresh);
        return Proc::restrict(fresh, subst_rec(renamed, env));
    }
    default: {
        Proc out = p;
        for (Proc &k : out.kids)
            k = subst_rec(k, env);
        return out;
    }
    }
}

} // namespace

Proc apply_subst(const Proc &p, const std::map<std::string, Proc> &procs,
                 const std::map<std::string, std::string> &names) {
    SubstEnv env{procs, names, {}, all_names(p)};
    for (const auto &[id, q] : procs) {
        NameSet fn = free_names(q);
        env.range_names.insert(fn.begin(), fn.end());
        NameSet an = all_names(q);
        env.avoid.insert(an.begin(), an.end());
    }
    for (const auto &[id, n] : names) {
        env.range_names.insert(n);
        env.avoid.insert(n);
    }
    return subst_rec(p, env);
}

Term apply_subst(const Term &t, const Substitution &s) {
    std::map<std::string, Proc> procs;
    for (const auto &[id, q] : s.procs) {
        if (q.calculus() != t.calculus())
            throw CrossCalculus("substitution for @" + id + " is a " +
                                std::string(to_string(q.calculus())) + " term, expected " +
                                std::string(to_string(t.calculus())));
        procs.emplace(id, q.proc());
    }
    return Term(t.calculus(), apply_subst(t.proc(), procs, s.names));
}

namespace {

Proc plug_rec(const Proc &p, const Proc &filler, const NameSet &filler_fn, NameSet &avoid) {
    switch (p.kind) {
    case Kind::Hole:
        return filler;
    case Kind::Restrict: {
        if (count_holes(p) == 0)
            return p;
        if (filler_fn.count(p.name)) {
            std::string fresh = fresh_name(avoid);
            avoid.insert(fresh);
            return Proc::restrict(fresh, plug_rec(rename_free(p.body(), p.name, fresh), filler,
                                                  filler_fn, avoid));
        }
        return Proc::restrict(p.name, plug_rec(p.body(), filler, filler_fn, avoid));
    }
    default: {
        Proc out = p;
        for (Proc &k : out.kids)
            k = plug_rec(k, filler, filler_fn, avoid);
        return out;
    }
    }
}

} // namespace

Proc plug(const Proc &context, const Proc &filler) {
    NameSet fn = free_names(filler);
    NameSet avoid = all_names(context);
    NameSet fa = all_names(filler);
    avoid.insert(fa.begin(), fa.end());
    return plug_rec(context, filler, fn, avoid);
}

Term plug(const Label &l, const Term &t) {
    if (l.calculus() != t.calculus())
        throw CrossCalculus("cannot plug a " + std::string(to_string(t.calculus())) +
                            " term into a " + std::string(to_string(l.calculus())) + " context");
    return Term(t.calculus(), plug(l.body(), t.proc()));
}

} // namespace lbisim
