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

#include "lbisim/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lbisim {

Level peel(const Proc &level) {
    Level out;
    const Proc *p = &level;
    while (p->kind == Kind::Restrict) {
        out.binders.push_back(p->name);
        p = &p->body();
    }
    out.components = soup(*p);
    return out;
}

std::vector<Proc> soup(const Proc &p) {
    if (p.kind == Kind::Par)
        return p.kids;
    if (p.kind == Kind::Nil)
        return {};
    return {p};
}

Proc join(std::vector<Proc> components) {
    if (components.empty())
        return Proc::nil();
    if (components.size() == 1)
        return std::move(components.front());
    return Proc::par(std::move(components));
}

Proc assemble(const std::vector<std::string> &binders, std::vector<Proc> components) {
    Proc out = join(std::move(components));
    for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        out = Proc::restrict(*it, std::move(out));
    return out;
}

std::vector<Proc> summands(const Proc &component) {
    if (component.kind == Kind::Sum)
        return component.kids;
    if (component.kind == Kind::Prefix)
        return {component};
    return {};
}

namespace {

/// Largest binder group that is canonicalised by exhaustive permutation
/// search; larger groups keep their discovery order.
constexpr std::size_t kMaxPermutedBinders = 6;

Proc rename_map(const Proc &p, const std::map<std::string, std::string> &m) {
    Proc out = p;
    const bool has_name = (p.kind == Kind::Prefix && p.act != Act::Tau) ||
                          p.kind == Kind::Particle || p.kind == Kind::Restrict ||
                          (p.kind == Kind::Ambient && !p.name_var);
    if (has_name) {
        auto it = m.find(p.name);
        if (it != m.end())
            out.name = it->second;
    }
    for (Proc &k : out.kids)
        k = rename_map(k, m);
    return out;
}

class Canonicalizer {
public:
    Canonicalizer(Calculus c, NameSet free) : calculus_(c), free_(std::move(free)) {}

    Proc run(const Proc &p) {
        std::map<std::string, std::string> env;
        Level l = flatten(uniquify(p, env));
        return finalize_level(l.binders, l.components, 0);
    }

private:
    // Every binder gets a distinct temporary name that cannot clash with a
    // user name, so later hoisting never captures.
    Proc uniquify(const Proc &p, std::map<std::string, std::string> &env) {
        Proc out = p;
        auto lookup = [&](std::string &n) {
            auto it = env.find(n);
            if (it != env.end())
                n = it->second;
        };
        switch (p.kind) {
        case Kind::Restrict: {
            std::string temp = "#" + std::to_string(counter_++);
            auto saved = env.find(p.name);
            std::optional<std::string> old;
            if (saved != env.end())
                old = saved->second;
            env[p.name] = temp;
            out.name = temp;
            out.kids[0] = uniquify(p.body(), env);
            if (old)
                env[p.name] = *old;
            else
                env.erase(p.name);
            return out;
        }
        case Kind::Prefix:
            if (p.act != Act::Tau)
                lookup(out.name);
            break;
        case Kind::Particle:
            lookup(out.name);
            break;
        case Kind::Ambient:
            if (!p.name_var)
                lookup(out.name);
            break;
        default:
            break;
        }
        for (Proc &k : out.kids)
            k = uniquify(k, env);
        return out;
    }

    void collect_summands(const Proc &p, std::vector<Proc> &out) {
        switch (p.kind) {
        case Kind::Nil:
            return;
        case Kind::Sum:
            for (const Proc &k : p.kids)
                collect_summands(k, out);
            return;
        default: {
            Level l = flatten(p);
            for (Proc &c : l.components)
                out.push_back(std::move(c));
        }
        }
    }

    Level flatten(const Proc &p) {
        switch (p.kind) {
        case Kind::Nil:
            return {};
        case Kind::Par: {
            Level out;
            for (const Proc &k : p.kids) {
                Level l = flatten(k);
                out.binders.insert(out.binders.end(), l.binders.begin(), l.binders.end());
                for (Proc &c : l.components)
                    out.components.push_back(std::move(c));
            }
            return out;
        }
        case Kind::Restrict: {
            Level l = flatten(p.body());
            l.binders.push_back(p.name);
            return l;
        }
        case Kind::Ambient: {
            Level l = flatten(p.body());
            return {l.binders, {Proc::ambient(p.name, join(std::move(l.components)), p.name_var)}};
        }
        case Kind::Prefix: {
            Level l = flatten(p.body());
            if (calculus_ == Calculus::MA)
                return {l.binders, {Proc::prefix(p.act, p.name, join(std::move(l.components)))}};
            return {{}, {Proc::prefix(p.act, p.name, assemble(l.binders, std::move(l.components)))}};
        }
        case Kind::Sum: {
            std::vector<Proc> ss;
            collect_summands(p, ss);
            if (ss.empty())
                return {};
            if (ss.size() == 1)
                return {{}, {std::move(ss.front())}};
            return {{}, {Proc::sum(std::move(ss))}};
        }
        default:
            return {{}, {p}};
        }
    }

    std::vector<Proc> finalize_all(const std::vector<Proc> &comps, std::size_t offset) {
        std::vector<Proc> out;
        out.reserve(comps.size());
        for (const Proc &c : comps)
            out.push_back(finalize_comp(c, offset));
        std::sort(out.begin(), out.end());
        return out;
    }

    Proc finalize_comp(const Proc &c, std::size_t offset) {
        switch (c.kind) {
        case Kind::Ambient:
            return Proc::ambient(c.name, join(finalize_all(soup(c.body()), offset)), c.name_var);
        case Kind::Prefix:
            if (calculus_ == Calculus::MA)
                return Proc::prefix(c.act, c.name, join(finalize_all(soup(c.body()), offset)));
            else {
                Level l = peel(c.body());
                return Proc::prefix(c.act, c.name, finalize_level(l.binders, l.components, offset));
            }
        case Kind::Sum:
            return Proc::sum(finalize_all(c.kids, offset));
        default:
            return c;
        }
    }

    Proc finalize_level(const std::vector<std::string> &binders, const std::vector<Proc> &comps,
                        std::size_t offset) {
        NameSet used;
        for (const Proc &c : comps) {
            NameSet fn = free_names(c);
            used.insert(fn.begin(), fn.end());
        }
        std::vector<std::string> keep;
        for (const std::string &b : binders)
            if (used.count(b))
                keep.push_back(b);
        const std::size_t k = keep.size();
        if (k == 0)
            return join(finalize_all(comps, offset));

        std::vector<std::string> names;
        for (std::size_t i = 0; i < k; ++i)
            names.push_back(fresh_name(free_, offset + i));

        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        std::optional<Proc> best;
        do {
            std::map<std::string, std::string> m;
            for (std::size_t j = 0; j < k; ++j)
                m[keep[j]] = names[perm[j]];
            std::vector<Proc> renamed;
            renamed.reserve(comps.size());
            for (const Proc &c : comps)
                renamed.push_back(rename_map(c, m));
            Proc candidate = assemble(names, finalize_all(renamed, offset + k));
            if (!best || candidate < *best)
                best = std::move(candidate);
        } while (k <= kMaxPermutedBinders && std::next_permutation(perm.begin(), perm.end()));
        return std::move(*best);
    }

    Calculus calculus_;
    NameSet free_;
    std::size_t counter_ = 0;
};

bool matches(const Proc &p, const Pattern &pat) {
    if (pat.kind && p.kind != *pat.kind)
        return false;
    if (pat.act && p.act != *pat.act)
        return false;
    return true;
}

bool side_condition(const Proc &p, const Pattern &pat, const std::vector<std::string> &binders) {
    if (!pat.name_not_bound)
        return true;
    if (p.kind == Kind::Ambient && p.name_var)
        return false;
    return std::find(binders.begin(), binders.end(), p.name) == binders.end();
}

std::vector<Proc> without(const std::vector<Proc> &v, std::size_t i) {
    std::vector<Proc> out;
    out.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        if (k != i)
            out.push_back(v[k]);
    return out;
}

} // namespace

CanonicalForm canonicalize(Calculus c, const Proc &p) {
    CanonicalForm out;
    out.calculus_ = c;
    out.proc_ = Canonicalizer(c, free_names(p)).run(p);
    out.text_ = print(out.proc_);
    return out;
}

CanonicalForm canonicalize(const Term &t) { return canonicalize(t.calculus(), t.proc()); }

bool equiv(const Term &a, const Term &b) {
    if (a.calculus() != b.calculus())
        throw CrossCalculus("cannot compare a " + std::string(to_string(a.calculus())) +
                            " term with a " + std::string(to_string(b.calculus())) + " term");
    return canonicalize(a) == canonicalize(b);
}

std::vector<std::string> CanonicalForm::binders() const { return peel(proc_).binders; }

std::vector<Proc> CanonicalForm::components() const { return peel(proc_).components; }

std::vector<Decomposition> decompose(const CanonicalForm &c, const Pattern &pat) {
    std::vector<Decomposition> out;
    Level top = peel(c.proc());
    for (std::size_t i = 0; i < top.components.size(); ++i) {
        const Proc &comp = top.components[i];
        switch (pat.shape) {
        case Pattern::Shape::Component:
            if (matches(comp, pat) && side_condition(comp, pat, top.binders)) {
                Decomposition d;
                d.binders = top.binders;
                d.selected = comp;
                d.rest = without(top.components, i);
                out.push_back(std::move(d));
            }
            break;
        case Pattern::Shape::Summand: {
            std::vector<Proc> ss = summands(comp);
            for (std::size_t j = 0; j < ss.size(); ++j) {
                if (!matches(ss[j], pat) || !side_condition(ss[j], pat, top.binders))
                    continue;
                Decomposition d;
                d.binders = top.binders;
                d.selected = ss[j];
                std::vector<Proc> others = without(ss, j);
                d.other_summands = others.empty()      ? Proc::nil()
                                   : others.size() == 1 ? others.front()
                                                        : Proc::sum(std::move(others));
                d.rest = without(top.components, i);
                out.push_back(std::move(d));
            }
            break;
        }
        case Pattern::Shape::Nested: {
            if (comp.kind != Kind::Ambient)
                break;
            std::vector<Proc> inner = soup(comp.body());
            for (std::size_t j = 0; j < inner.size(); ++j) {
                if (!matches(inner[j], pat) || !side_condition(inner[j], pat, top.binders))
                    continue;
                Decomposition d;
                d.binders = top.binders;
                d.selected = comp;
                d.inner = inner[j];
                d.inner_rest = without(inner, j);
                d.rest = without(top.components, i);
                out.push_back(std::move(d));
            }
            break;
        }
        }
    }
    return out;
}

Proc recompose(const Decomposition &d, const Pattern &pat) {
    std::vector<Proc> comps = d.rest;
    switch (pat.shape) {
    case Pattern::Shape::Component:
        comps.push_back(d.selected);
        break;
    case Pattern::Shape::Summand:
        comps.push_back(d.other_summands.kind == Kind::Nil
                            ? d.selected
                            : Proc::sum({d.selected, d.other_summands}));
        break;
    case Pattern::Shape::Nested: {
        std::vector<Proc> inner = d.inner_rest;
        inner.push_back(d.inner);
        comps.push_back(Proc::ambient(d.selected.name, join(std::move(inner)), d.selected.name_var));
        break;
    }
    }
    return assemble(d.binders, std::move(comps));
}

namespace {

void label_vars(const Proc &p, std::vector<std::string> &out) {
    const bool hit = p.kind == Kind::Var || (p.kind == Kind::Ambient && p.name_var);
    if (hit && std::find(out.begin(), out.end(), p.name) == out.end())
        out.push_back(p.name);
    for (const Proc &k : p.kids)
        label_vars(k, out);
}

} // namespace

Label::Label(Calculus calculus, const Proc &body) : calculus_(calculus) {
    if (count_holes(body) != 1)
        throw MalformedTerm("a label needs exactly one hole: '" + print(body) + "'");
    CanonicalForm cf = canonicalize(calculus, body);
    body_ = cf.proc();
    text_ = cf.str();
    label_vars(body_, variables_);
}

} // namespace lbisim
