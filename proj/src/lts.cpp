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

#include "lbisim/lts.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lbisim/reduction.hpp"

namespace lbisim {

std::string Action::str() const {
    switch (act) {
    case Act::Tau:
        return "tau";
    case Act::Output:
        return "'" + name;
    default:
        return name;
    }
}

namespace {

struct Move {
    Action action;
    Proc target;
    const char *rule;
};

std::string channel_of(const Action &a) { return a.act == Act::Tau ? std::string() : a.name; }

// Structural operational semantics on the raw tree.
std::vector<Move> sos(const Proc &p) {
    std::vector<Move> out;
    switch (p.kind) {
    case Kind::Prefix:
        out.push_back({{p.act, p.act == Act::Tau ? "" : p.name}, p.body(), "Act"});
        break;
    case Kind::Particle:
        out.push_back({{Act::Output, p.name}, Proc::nil(), "Out"});
        break;
    case Kind::Sum:
        for (const Proc &k : p.kids)
            for (Move &m : sos(k))
                out.push_back(std::move(m));
        break;
    case Kind::Restrict:
        for (Move &m : sos(p.body()))
            if (channel_of(m.action) != p.name)
                out.push_back({m.action, Proc::restrict(p.name, std::move(m.target)), m.rule});
        break;
    case Kind::Par: {
        std::vector<std::vector<Move>> per;
        for (const Proc &k : p.kids)
            per.push_back(sos(k));
        for (std::size_t i = 0; i < p.kids.size(); ++i) {
            for (const Move &m : per[i]) {
                Proc t = p;
                t.kids[i] = m.target;
                out.push_back({m.action, std::move(t), m.rule});
            }
            for (std::size_t j = 0; j < p.kids.size(); ++j) {
                if (i == j)
                    continue;
                for (const Move &in : per[i]) {
                    if (in.action.act != Act::Input)
                        continue;
                    for (const Move &o : per[j]) {
                        if (o.action.act != Act::Output || o.action.name != in.action.name)
                            continue;
                        Proc t = p;
                        t.kids[i] = in.target;
                        t.kids[j] = o.target;
                        out.push_back({{Act::Tau, ""}, std::move(t), "Com"});
                    }
                }
            }
        }
        break;
    }
    default:
        break;
    }
    return out;
}

const Proc &x1() {
    static const Proc v = Proc::var("X1");
    return v;
}
const Proc &x2() {
    static const Proc v = Proc::var("X2");
    return v;
}

Proc with_hole(Proc p) { return Proc::par({Proc::hole(), std::move(p)}); }

std::vector<Proc> cat(std::vector<Proc> a, const Proc &b) {
    for (Proc &c : soup(b))
        a.push_back(std::move(c));
    return a;
}

std::vector<Proc> cat(std::vector<Proc> a, std::initializer_list<Proc> bs) {
    for (const Proc &b : bs)
        a = cat(std::move(a), b);
    return a;
}

Pattern pattern(Pattern::Shape shape, std::optional<Kind> kind, std::optional<Act> act) {
    Pattern p;
    p.shape = shape;
    p.kind = kind;
    p.act = act;
    p.name_not_bound = true;
    return p;
}

using Add = std::function<void(Proc label, Proc target, const char *rule)>;

void ccs_rules(const CanonicalForm &p, const Add &add) {
    const bool async = p.calculus() == Calculus::ACCS;
    const Pattern rcv = pattern(Pattern::Shape::Summand, Kind::Prefix, Act::Input);
    for (const Decomposition &d : decompose(p, rcv)) {
        const std::string &a = d.selected.name;
        if (async)
            add(with_hole(Proc::particle(a)), assemble(d.binders, cat(d.rest, d.selected.body())),
                "Rcv");
        else
            add(with_hole(Proc::prefix(Act::Output, a, x1())),
                assemble(d.binders, cat(d.rest, {d.selected.body(), x1()})), "Rcv");
    }
    if (async) {
        const Pattern snd = pattern(Pattern::Shape::Component, Kind::Particle, std::nullopt);
        for (const Decomposition &d : decompose(p, snd))
            add(with_hole(Proc::prefix(Act::Input, d.selected.name, x1())),
                assemble(d.binders, cat(d.rest, x1())), "Snd");
    } else {
        const Pattern snd = pattern(Pattern::Shape::Summand, Kind::Prefix, Act::Output);
        for (const Decomposition &d : decompose(p, snd))
            add(with_hole(Proc::prefix(Act::Input, d.selected.name, x1())),
                assemble(d.binders, cat(d.rest, {d.selected.body(), x1()})), "Snd");
    }
}

void ma_rules(const CanonicalForm &p, const Add &add) {
    using S = Pattern::Shape;
    const Proc xamb_hole = Proc::ambient("x", with_hole(x1()), true);

    for (const Decomposition &d : decompose(p, pattern(S::Component, Kind::Prefix, Act::Open))) {
        const std::string &n = d.selected.name;
        add(with_hole(Proc::ambient(n, x1())),
            assemble(d.binders, cat(cat(d.rest, d.selected.body()), x1())), "Open");
    }
    for (const Decomposition &d : decompose(p, pattern(S::Component, Kind::Ambient, std::nullopt))) {
        const std::string &n = d.selected.name;
        add(with_hole(Proc::prefix(Act::Open, n, x1())),
            assemble(d.binders, cat(d.rest, {d.selected.body(), x1()})), "CoOpen");
        add(with_hole(Proc::ambient(
                "x", Proc::par({Proc::prefix(Act::In, n, x1()), x2()}), true)),
            assemble(d.binders,
                     cat(d.rest, Proc::ambient(n, join(cat(soup(d.selected.body()),
                                                           Proc::ambient("x", Proc::par({x1(), x2()}),
                                                                         true)))))),
            "CoIn");
    }
    for (const Decomposition &d : decompose(p, pattern(S::Nested, Kind::Prefix, Act::In))) {
        const std::string &m = d.inner.name;
        Proc moved = Proc::ambient(d.selected.name, join(cat(d.inner_rest, d.inner.body())),
                                   d.selected.name_var);
        add(with_hole(Proc::ambient(m, x1())),
            assemble(d.binders, cat(d.rest, Proc::ambient(m, Proc::par({moved, x1()})))), "InAmb");
    }
    for (const Decomposition &d : decompose(p, pattern(S::Component, Kind::Prefix, Act::In))) {
        const std::string &m = d.selected.name;
        Proc inside = Proc::ambient("x", join(cat(cat(d.rest, d.selected.body()), x1())), true);
        add(Proc::par({xamb_hole, Proc::ambient(m, x2())}),
            assemble(d.binders, {Proc::ambient(m, Proc::par({inside, x2()}))}), "In");
    }
    for (const Decomposition &d : decompose(p, pattern(S::Nested, Kind::Prefix, Act::Out))) {
        const std::string &m = d.inner.name;
        Proc left = Proc::ambient(d.selected.name, join(cat(d.inner_rest, d.inner.body())),
                                  d.selected.name_var);
        add(Proc::ambient(m, with_hole(x1())),
            assemble(d.binders, {Proc::ambient(m, join(cat(d.rest, x1()))), left}),
            "OutAmb");
    }
    for (const Decomposition &d : decompose(p, pattern(S::Component, Kind::Prefix, Act::Out))) {
        const std::string &m = d.selected.name;
        Proc inside = Proc::ambient("x", join(cat(cat(d.rest, d.selected.body()), x1())), true);
        add(Proc::ambient(m, Proc::par({xamb_hole, x2()})),
            assemble(d.binders, {Proc::ambient(m, x2()), inside}), "Out");
    }
}

} // namespace

std::vector<ActionTransition> ordinary_transitions(const CanonicalForm &p) {
    if (p.calculus() == Calculus::MA)
        throw Unsupported("mobile ambients have no ordinary LTS");
    std::map<std::pair<Action, CanonicalForm>, std::string> found;
    for (Move &m : sos(p.proc()))
        found.emplace(std::make_pair(m.action, canonicalize(p.calculus(), m.target)), m.rule);
    std::vector<ActionTransition> out;
    for (auto &[key, rule] : found)
        out.push_back({p, key.first, key.second, rule});
    return out;
}

std::vector<ActionTransition> ordinary_transitions(const Term &p) {
    return ordinary_transitions(canonicalize(p));
}

std::vector<Transition> its_transitions(const CanonicalForm &p) {
    std::map<std::pair<std::string, std::string>, Transition> found;
    auto insert = [&](Label label, CanonicalForm target, std::string rule) {
        auto key = std::make_pair(label.str(), target.str());
        if (!found.count(key))
            found.emplace(key, Transition{p, std::move(label), std::move(target), std::move(rule)});
    };
    const Label id(p.calculus(), Proc::hole());
    for (ReductionStep &s : reduction_steps(p))
        insert(id, std::move(s.target), "Tau");
    Add add = [&](Proc label, Proc target, const char *rule) {
        insert(Label(p.calculus(), label), canonicalize(p.calculus(), target), rule);
    };
    if (p.calculus() == Calculus::MA)
        ma_rules(p, add);
    else
        ccs_rules(p, add);
    std::vector<Transition> out;
    out.reserve(found.size());
    for (auto &[key, t] : found)
        out.push_back(std::move(t));
    return out;
}

std::vector<Transition> its_transitions(const Term &p) { return its_transitions(canonicalize(p)); }

Transition instantiate(const Transition &t, const Substitution &s) {
    std::map<std::string, Proc> procs;
    for (const std::string &v : t.label.variables()) {
        bool name_var = false;
        std::function<void(const Proc &)> scan = [&](const Proc &q) {
            if (q.kind == Kind::Ambient && q.name_var && q.name == v)
                name_var = true;
            for (const Proc &k : q.kids)
                scan(k);
        };
        scan(t.label.body());
        if (name_var ? !s.names.count(v) : !s.procs.count(v))
            throw IncompleteSubstitution("no value for label variable " +
                                         std::string(name_var ? "?" : "@") + v);
    }
    for (const auto &[id, q] : s.procs) {
        if (q.calculus() != t.source.calculus())
            throw CrossCalculus("substitution for @" + id + " is a " +
                                std::string(to_string(q.calculus())) + " term");
        procs.emplace(id, q.proc());
    }
    const Calculus c = t.source.calculus();
    Transition out = t;
    out.label = Label(c, apply_subst(t.label.body(), procs, s.names));
    out.target = canonicalize(c, apply_subst(t.target.proc(), procs, s.names));
    return out;
}

std::shared_ptr<const std::vector<Transition>>
TransitionSystem::transitions(const CanonicalForm &p) {
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(p.str());
        if (it != cache_.end())
            return it->second;
    }
    auto ts = std::make_shared<const std::vector<Transition>>(its_transitions(p));
    std::unique_lock lock(mutex_);
    return cache_.emplace(p.str(), std::move(ts)).first->second;
}

std::size_t TransitionSystem::size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

LtsGraph explore(const CanonicalForm &p, LtsKind kind, std::size_t max_states) {
    LtsGraph g;
    std::set<std::string> seen{p.str()};
    std::deque<CanonicalForm> todo{p};
    while (!todo.empty()) {
        CanonicalForm s = std::move(todo.front());
        todo.pop_front();
        g.nodes.push_back(s.str());
        auto visit = [&](const CanonicalForm &t) {
            if (seen.count(t.str()))
                return;
            if (seen.size() >= max_states) {
                g.truncated = true;
                return;
            }
            seen.insert(t.str());
            todo.push_back(t);
        };
        if (kind == LtsKind::Ordinary) {
            for (const ActionTransition &t : ordinary_transitions(s)) {
                g.edges.push_back({s.str(), t.action.str(), t.target.str(), t.rule});
                visit(t.target);
            }
        } else {
            for (const Transition &t : its_transitions(s)) {
                g.edges.push_back({s.str(), t.label.str(), t.target.str(), t.rule});
                visit(t.target);
            }
        }
    }
    // Edges into states beyond the bound stay; their targets are listed.
    for (const LtsEdge &e : g.edges)
        seen.insert(e.target);
    g.nodes.assign(seen.begin(), seen.end());
    std::sort(g.edges.begin(), g.edges.end(), [](const LtsEdge &a, const LtsEdge &b) {
        return std::tie(a.source, a.label, a.target, a.rule) <
               std::tie(b.source, b.label, b.target, b.rule);
    });
    return g;
}

std::string to_json(const LtsGraph &g) {
    nlohmann::ordered_json j;
    j["nodes"] = g.nodes;
    j["edges"] = nlohmann::ordered_json::array();
    for (const LtsEdge &e : g.edges)
        j["edges"].push_back(
            {{"source", e.source}, {"label", e.label}, {"target", e.target}, {"rule", e.rule}});
    j["truncated"] = g.truncated;
    return j.dump(2);
}

std::string to_dot(const LtsGraph &g) {
    auto quote = [](const std::string &s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "digraph lts {\n";
    for (const std::string &n : g.nodes)
        os << "  " << quote(n) << ";\n";
    for (const LtsEdge &e : g.edges)
        os << "  " << quote(e.source) << " -> " << quote(e.target) << " [label=" << quote(e.label)
           << "];\n";
    os << "}\n";
    return os.str();
}

} // namespace lbisim
