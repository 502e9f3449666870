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

#include "lbisim/equivalence.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>
#include <unordered_map>

#include "lbisim/lts.hpp"

namespace lbisim {

std::size_t default_max_pairs() {
    if (const char *env = std::getenv("LBISIM_MAX_PAIRS")) {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return 50000;
}

namespace {

using State = CanonicalForm;

/// Name variables of the symbolic game all stand for one name that only the
/// environment knows.
const std::string kContextName = "?";
/// Environment code left inside an ambient by a label variable.
const std::string kEnvVar = "E";

using Soup = std::vector<Proc>;

bool has_env(const Soup &s) {
    return std::any_of(s.begin(), s.end(), [](const Proc &c) { return c.kind == Kind::Var; });
}

bool contains_var(const Proc &p) {
    return p.kind == Kind::Var ||
           std::any_of(p.kids.begin(), p.kids.end(), [](const Proc &k) { return contains_var(k); });
}

// Variables at top level vanish: the top level is the environment itself.
Proc mark_env(const Proc &p, bool inside) {
    if (p.kind == Kind::Var)
        return inside ? Proc::var(kEnvVar) : Proc::nil();
    Proc out = p;
    if (out.kind == Kind::Ambient && out.name_var) {
        out.name = kContextName;
        out.name_var = false;
    }
    for (Proc &k : out.kids)
        k = mark_env(k, inside || out.kind == Kind::Ambient);
    return out;
}

using Census = std::map<std::string, std::size_t>;

void census(const Proc &p, Census &ambients, Census &caps) {
    if (p.kind == Kind::Ambient && !p.name_var)
        ++ambients[p.name];
    if (p.kind == Kind::Prefix && p.act != Act::Tau)
        ++caps[p.name];
    for (const Proc &k : p.kids)
        census(k, ambients, caps);
}

bool stuck(const Proc &amb) {
    for (const Proc &c : soup(amb.body()))
        if (c.kind == Kind::Prefix && (c.act == Act::In || c.act == Act::Out))
            return false;
    return reducts(canonicalize(Calculus::MA, amb)).empty();
}

struct Scope {
    NameSet bound;
    Census ambients, caps;
};

// Nothing outside c mentions any of its names, and all of them are
// restricted: c can only ever interact with itself.
bool isolated(const Proc &c, const Scope &sc) {
    Census amb, cap;
    census(c, amb, cap);
    for (const auto &[n, k] : amb)
        if (!sc.bound.count(n) || sc.ambients.at(n) != k)
            return false;
    for (const auto &[n, k] : cap)
        if (!sc.bound.count(n) || sc.caps.at(n) != k)
            return false;
    return true;
}

bool env_only(const Proc &body) {
    for (const Proc &c : soup(body))
        if (c.kind != Kind::Var)
            return false;
    return true;
}

// Capabilities on known names ending in environment code: redundant next to
// the environment agent, which can exercise them itself.
bool env_code(const Proc &c, const NameSet &bound) {
    if (c.kind == Kind::Var)
        return true;
    if (c.kind != Kind::Prefix || c.act == Act::Tau || bound.count(c.name) || !contains_var(c))
        return false;
    for (const Proc &k : soup(c.body()))
        if (!env_code(k, bound))
            return false;
    return true;
}

// Unobservable material, dropped so that symbolic plays stay finite:
// capabilities on a restricted name no ambient carries; stuck ambients on a
// restricted name no capability mentions; stuck isolated components;
// environment ambients with nothing of the process inside. Repeated and
// redundant environment code is merged.
Proc drop_dead(const Proc &p, const Scope &sc, bool top) {
    Proc out = p;
    const bool below = top && (p.kind == Kind::Restrict || p.kind == Kind::Par);
    for (Proc &k : out.kids)
        k = drop_dead(k, sc, below);
    auto dead = [&](const Proc &c) {
        if (c.kind == Kind::Ambient && c.name == kContextName)
            return c.body().kind == Kind::Nil || (top && env_only(c.body()));
        if (c.kind == Kind::Prefix && sc.bound.count(c.name) && !sc.ambients.count(c.name))
            return true;
        if ((c.kind != Kind::Ambient && c.kind != Kind::Prefix) || contains_var(c))
            return false;
        if (c.kind == Kind::Ambient && sc.bound.count(c.name) && !sc.caps.count(c.name) && stuck(c))
            return true;
        return isolated(c, sc) && reducts(canonicalize(Calculus::MA, c)).empty();
    };
    if (out.kind != Kind::Par)
        return dead(out) ? Proc::nil() : out;
    std::vector<Proc> kept;
    const bool env = has_env(out.kids);
    for (const Proc &c : out.kids) {
        if (dead(c) || (env && c.kind == Kind::Prefix && env_code(c, sc.bound)))
            continue;
        const bool env_copy = c.kind == Kind::Var ||
                              (c.kind == Kind::Ambient && c.name == kContextName && env_only(c.body()));
        if (env_copy && std::find(kept.begin(), kept.end(), c) != kept.end())
            continue;
        kept.push_back(c);
    }
    return kept.size() == out.kids.size() ? out : join(std::move(kept));
}

Soup without(const Soup &s, std::size_t i, std::size_t k = SIZE_MAX) {
    Soup out;
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i && j != k)
            out.push_back(s[j]);
    return out;
}

using EnvEmit = std::function<void(Soup, std::string)>;

// Moves of environment code: it may open an ambient next to it, and move
// the ambient it sits in into a sibling or out of its parent, for any name
// it knows (every name that is not restricted). Ambients of the environment
// itself are left alone, which keeps the state space finite. Each move is described by
// where it happens and what it does; the other side has to make the same one.
void env_steps(const Soup &s, const NameSet &bound, const std::string &where, const EnvEmit &emit) {
    const bool env = has_env(s);
    auto known = [&](const Proc &c) {
        return c.kind == Kind::Ambient && !c.name_var && c.name != kContextName && !bound.count(c.name);
    };
    auto shown = [&](const Proc &c) { return bound.count(c.name) ? std::string("*") : c.name; };
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Proc &c = s[i];
        if (c.kind != Kind::Ambient)
            continue;
        const Soup body = soup(c.body());
        const std::string inside = where + shown(c) + "/";
        if (env && known(c)) {
            Soup out = without(s, i);
            out.insert(out.end(), body.begin(), body.end());
            emit(std::move(out), "env " + where + " open " + c.name);
        }
        if (has_env(body)) {
            for (std::size_t k = 0; k < s.size(); ++k) {
                if (k == i || !known(s[k]))
                    continue;
                Soup host = soup(s[k].body());
                host.push_back(c);
                Soup out = without(s, i, k);
                out.push_back(Proc::ambient(s[k].name, join(std::move(host))));
                emit(std::move(out), "env " + inside + " in " + s[k].name);
            }
        }
        if (known(c)) {
            for (std::size_t j = 0; j < body.size(); ++j) {
                if (body[j].kind != Kind::Ambient || !has_env(soup(body[j].body())))
                    continue;
                Soup out = without(s, i);
                out.push_back(Proc::ambient(c.name, join(without(body, j))));
                out.push_back(body[j]);
                emit(std::move(out), "env " + inside + shown(body[j]) + "/ out " + c.name);
            }
        }
        env_steps(body, bound, inside, [&](Soup inner, std::string what) {
            Soup out = without(s, i);
            out.push_back(Proc::ambient(c.name, join(std::move(inner)), c.name_var));
            emit(std::move(out), std::move(what));
        });
    }
}

std::vector<std::pair<std::string, Proc>> env_moves(const CanonicalForm &s) {
    std::vector<std::pair<std::string, Proc>> out;
    Level l = peel(s.proc());
    NameSet bound(l.binders.begin(), l.binders.end());
    env_steps(l.components, bound, "/", [&](Soup next, std::string what) {
        out.emplace_back(std::move(what), assemble(l.binders, std::move(next)));
    });
    return out;
}

} // namespace

CanonicalForm game_state(Calculus c, const Proc &p) {
    CanonicalForm cur = canonicalize(c, mark_env(p, false));
    if (c != Calculus::MA)
        return cur;
    for (;;) {
        Scope sc;
        const std::vector<std::string> binders = cur.binders();
        sc.bound.insert(binders.begin(), binders.end());
        census(cur.proc(), sc.ambients, sc.caps);
        CanonicalForm next = canonicalize(c, drop_dead(cur.proc(), sc, true));
        if (next == cur)
            return cur;
        cur = std::move(next);
    }
}

namespace {

/// `label` is the ITS label; `concrete` has its name variable replaced by the
/// environment name and is what gets plugged and compared.
struct ItsMove {
    Label label;
    Label concrete;
    State target;
    /// Moves are matched on this: the concrete label, or the description of
    /// an environment move.
    std::string key;
    bool env = false;

    const std::string &shown() const { return env ? key : label.str(); }
};

/// Move generation for the ITS-based games, symbolic or instantiated.
class Arena {
public:
    Arena(Calculus c, const GameOptions &o, const Term &p, const Term &q)
        : calculus_(c), ts_(c), pool_(o.pool) {
        if (!pool_.empty()) {
            NameSet avoid = all_names(p.proc());
            NameSet more = all_names(q.proc());
            avoid.insert(more.begin(), more.end());
            for (const Term &t : pool_) {
                if (t.calculus() != c)
                    throw CrossCalculus("pool term '" + t.str() + "' is not a " +
                                        std::string(to_string(c)) + " term");
                if (!t.pure())
                    throw MalformedTerm("pool term '" + t.str() + "' contains variables");
                NameSet an = all_names(t.proc());
                avoid.insert(an.begin(), an.end());
            }
            names_.assign(avoid.begin(), avoid.end());
            names_.push_back(fresh_name(avoid));
        }
    }

    bool instantiated() const { return !pool_.empty(); }

    State initial(const Term &t) const {
        return instantiated() ? canonicalize(t) : game_state(calculus_, t.proc());
    }

    State normalize(const Proc &p) const {
        return instantiated() ? canonicalize(calculus_, p) : game_state(calculus_, p);
    }

    const std::vector<ItsMove> &moves(const State &s) {
        auto it = moves_.find(s.str());
        if (it != moves_.end())
            return it->second;
        std::vector<ItsMove> out;
        std::set<std::pair<std::string, std::string>> seen;
        auto add = [&](const Label &l, Label c, State t) {
            if (seen.emplace(c.str(), t.str()).second) {
                std::string key = c.str();
                out.push_back({l, std::move(c), std::move(t), std::move(key)});
            }
        };
        for (const Transition &t : *ts_.transitions(s)) {
            if (!instantiated()) {
                std::map<std::string, std::string> names;
                for (const std::string &v : t.label.variables())
                    if (is_name_var(t.label.body(), v))
                        names[v] = kContextName;
                if (names.empty()) {
                    add(t.label, t.label, normalize(t.target.proc()));
                    continue;
                }
                add(t.label, Label(calculus_, apply_subst(t.label.body(), {}, names)),
                    normalize(apply_subst(t.target.proc(), {}, names)));
                continue;
            }
            for (const Substitution &sub : closings(t.label)) {
                Transition i = instantiate(t, sub);
                add(i.label, i.label, std::move(i.target));
            }
        }
        if (!instantiated() && calculus_ == Calculus::MA) {
            const Label tau(calculus_, Proc::hole());
            for (auto &[what, r] : env_moves(s)) {
                State t = normalize(r);
                if (seen.emplace(what, t.str()).second)
                    out.push_back({tau, tau, std::move(t), std::move(what), true});
            }
        }
        return moves_.emplace(s.str(), std::move(out)).first->second;
    }

    const std::vector<State> &plugged(const Label &l, const State &s) {
        std::string key = l.str() + '\x01' + s.str();
        auto it = plugged_.find(key);
        if (it != plugged_.end())
            return it->second;
        std::vector<State> out;
        std::set<std::string> seen;
        auto keep = [&](const Proc &r) {
            State n = normalize(r);
            if (seen.insert(n.str()).second)
                out.push_back(std::move(n));
        };
        const Proc filled = plug(l.body(), s.proc());
        for (const CanonicalForm &r : reducts(canonicalize(calculus_, filled)))
            keep(r.proc());
        return plugged_.emplace(std::move(key), std::move(out)).first->second;
    }

private:
    std::vector<Substitution> closings(const Label &l) const {
        std::vector<Substitution> out{Substitution{}};
        for (const std::string &v : l.variables()) {
            const bool name_var = is_name_var(l.body(), v);
            std::vector<Substitution> next;
            for (const Substitution &s : out) {
                if (name_var) {
                    for (const std::string &n : names_) {
                        Substitution e = s;
                        e.names[v] = n;
                        next.push_back(std::move(e));
                    }
                } else {
                    for (const Term &t : pool_) {
                        Substitution e = s;
                        e.procs.emplace(v, t);
                        next.push_back(std::move(e));
                    }
                }
            }
            out = std::move(next);
        }
        return out;
    }

    static bool is_name_var(const Proc &p, const std::string &v) {
        if (p.kind == Kind::Ambient && p.name_var && p.name == v)
            return true;
        return std::any_of(p.kids.begin(), p.kids.end(),
                           [&](const Proc &k) { return is_name_var(k, v); });
    }

    Calculus calculus_;
    TransitionSystem ts_;
    std::vector<Term> pool_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::vector<ItsMove>> moves_;
    std::unordered_map<std::string, std::vector<State>> plugged_;
};

using PairKey = std::pair<std::string, std::string>;

// Coinductive search: pairs are assumed related until a move is found that
// no response can match. Refutations never depend on assumptions, so the
// search is rerun until the refuted set stops growing.
class DfsGame {
public:
    DfsGame(Arena &a, const LabelSet &l, std::size_t budget) : arena_(a), labels_(l), budget_(budget) {}

    GameResult run(const State &p, const State &q) {
        GameResult r;
        for (;;) {
            std::size_t before = refuted_.size();
            assumed_.clear();
            r.verdict = related(p, q);
            if (refuted_.size() == before)
                break;
        }
        r.explored = visited_.size();
        if (!r.verdict)
            r.witness = witness(p, q);
        return r;
    }

private:
    struct Reason {
        bool left_attacks;
        std::string move;
        State target;
        std::vector<State> responses;
    };

    bool related(const State &p, const State &q) {
        if (p == q)
            return true;
        PairKey key{p.str(), q.str()};
        if (refuted_.count(key))
            return false;
        if (assumed_.count(key))
            return true;
        if (visited_.insert(key).second && visited_.size() > budget_)
            throw BudgetExceeded(budget_);
        assumed_.insert(key);
        for (int side = 0; side < 2; ++side) {
            const State &att = side == 0 ? p : q;
            const State &def = side == 0 ? q : p;
            // Copy: recursion may rehash the arena's cache. Moves in L go
            // first, so refutations prefer observable labels.
            std::vector<ItsMove> moves = arena_.moves(att);
            std::stable_partition(moves.begin(), moves.end(),
                                  [&](const ItsMove &m) { return m.env || labels_.contains(m.label); });
            for (const ItsMove &m : moves) {
                std::vector<State> responses = answers(m, def);
                bool matched = false;
                for (const State &r : responses) {
                    if (side == 0 ? related(m.target, r) : related(r, m.target)) {
                        matched = true;
                        break;
                    }
                }
                if (!matched) {
                    assumed_.erase(key);
                    refuted_.emplace(key, Reason{side == 0, m.shown(), m.target, std::move(responses)});
                    return false;
                }
            }
        }
        return true;
    }

    std::vector<State> answers(const ItsMove &att, const State &def) {
        if (!att.env && !labels_.contains(att.label))
            return arena_.plugged(att.concrete, def);
        std::vector<State> out;
        for (const ItsMove &m : arena_.moves(def))
            if (m.key == att.key)
                out.push_back(m.target);
        return out;
    }

    std::vector<WitnessStep> witness(State p, State q) const {
        std::vector<WitnessStep> out;
        for (std::size_t guard = 0; guard < 64; ++guard) {
            auto it = refuted_.find(PairKey{p.str(), q.str()});
            if (it == refuted_.end())
                break;
            const Reason &r = it->second;
            out.push_back({r.left_attacks ? "left" : "right", r.move, p.str(), q.str(),
                           r.target.str(), r.responses.size(), ""});
            if (r.responses.empty())
                break;
            if (r.left_attacks) {
                p = r.target;
                q = r.responses.front();
            } else {
                p = r.responses.front();
                q = r.target;
            }
        }
        return out;
    }

    Arena &arena_;
    const LabelSet &labels_;
    std::size_t budget_;
    std::map<PairKey, Reason> refuted_;
    std::set<PairKey> assumed_;
    std::set<PairKey> visited_;
};

struct GenMove {
    std::string key;
    State target;
    std::vector<State> responses;
};

using MoveGen = std::function<std::vector<GenMove>(const State &att, const State &def)>;
/// Empty string when the pair passes, else a description of the failure.
using LocalCheck = std::function<std::string(const State &, const State &)>;

// Local greatest fixpoint: pairs are expanded on demand and the defender
// keeps one chosen response per attacker move, moving on to the next only
// when the chosen pair is lost. Losses propagate back along the choices.
GameResult pair_graph(const State &p, const State &q, const MoveGen &gen, const LocalCheck &local,
                      std::size_t budget) {
    struct Edge {
        bool left_attacks;
        std::string key;
        std::string target;
        std::vector<std::pair<State, State>> responses;
        std::vector<std::size_t> ids;
        std::size_t choice = 0;
    };
    struct Node {
        State left, right;
        bool expanded = false;
        bool lost = false;
        std::size_t lost_at = 0;
        std::string note;
        std::vector<Edge> edges;
        /// Which losing edge, or none when the local check failed.
        std::size_t culprit = SIZE_MAX;
        std::vector<std::pair<std::size_t, std::size_t>> watchers;
    };
    std::vector<Node> nodes;
    std::map<PairKey, std::size_t> index;
    std::vector<std::size_t> stack;
    std::size_t clock = 0;

    auto intern = [&](const State &a, const State &b) {
        PairKey k{a.str(), b.str()};
        auto it = index.find(k);
        if (it != index.end())
            return it->second;
        if (nodes.size() >= budget)
            throw BudgetExceeded(budget);
        index.emplace(std::move(k), nodes.size());
        nodes.push_back({a, b});
        return nodes.size() - 1;
    };

    std::deque<std::pair<std::size_t, std::size_t>> losses;
    // Points edge e of n at its next live response, or records the loss.
    auto advance = [&](std::size_t n, std::size_t e) {
        // No references across intern: it may grow `nodes`.
        while (nodes[n].edges[e].choice < nodes[n].edges[e].responses.size()) {
            if (nodes[n].edges[e].ids.size() <= nodes[n].edges[e].choice) {
                auto [a, b] = nodes[n].edges[e].responses[nodes[n].edges[e].choice];
                const std::size_t id = intern(a, b);
                nodes[n].edges[e].ids.push_back(id);
            }
            Edge &cur = nodes[n].edges[e];
            const std::size_t id = cur.ids[cur.choice];
            if (!nodes[id].lost) {
                nodes[id].watchers.emplace_back(n, e);
                if (!nodes[id].expanded)
                    stack.push_back(id);
                return;
            }
            ++cur.choice;
        }
        losses.emplace_back(n, e);
    };
    auto settle = [&] {
        while (!losses.empty()) {
            auto [n, e] = losses.front();
            losses.pop_front();
            if (nodes[n].lost)
                continue;
            nodes[n].lost = true;
            nodes[n].lost_at = clock++;
            nodes[n].culprit = e;
            for (auto [m, f] : std::vector(nodes[n].watchers)) {
                Edge &edge = nodes[m].edges[f];
                if (nodes[m].lost || edge.choice >= edge.ids.size() || edge.ids[edge.choice] != n)
                    continue;
                ++edge.choice;
                advance(m, f);
            }
        }
    };

    stack.push_back(intern(p, q));
    while (!stack.empty() && !nodes[0].lost) {
        const std::size_t n = stack.back();
        stack.pop_back();
        if (nodes[n].expanded || nodes[n].lost)
            continue;
        nodes[n].expanded = true;
        const State a = nodes[n].left, b = nodes[n].right;
        // Every game here is reflexive: a state answers itself move for move.
        if (a == b)
            continue;
        if (local) {
            nodes[n].note = local(a, b);
            if (!nodes[n].note.empty()) {
                losses.emplace_back(n, SIZE_MAX);
                settle();
                continue;
            }
        }
        std::vector<Edge> edges;
        for (int side = 0; side < 2; ++side) {
            for (GenMove &m : gen(side == 0 ? a : b, side == 0 ? b : a)) {
                Edge e{side == 0, m.key, m.target.str(), {}, {}, 0};
                for (State &r : m.responses)
                    e.responses.emplace_back(side == 0 ? m.target : r, side == 0 ? r : m.target);
                edges.push_back(std::move(e));
            }
        }
        nodes[n].edges = std::move(edges);
        for (std::size_t e = 0; e < nodes[n].edges.size() && !nodes[n].lost; ++e)
            advance(n, e);
        settle();
    }

    GameResult r;
    r.explored = nodes.size();
    r.verdict = !nodes[0].lost;
    for (std::size_t n = 0; !r.verdict;) {
        const Node &node = nodes[n];
        if (node.culprit == SIZE_MAX) {
            WitnessStep w;
            w.left = node.left.str();
            w.right = node.right.str();
            w.note = node.note;
            r.witness.push_back(std::move(w));
            break;
        }
        const Edge &win = node.edges[node.culprit];
        r.witness.push_back({win.left_attacks ? "left" : "right", win.key, node.left.str(),
                             node.right.str(), win.target, win.responses.size(), ""});
        if (win.ids.empty())
            break;
        // Every response was lost, and earlier than this pair.
        n = *std::min_element(win.ids.begin(), win.ids.end(),
                              [&](std::size_t x, std::size_t y) { return nodes[x].lost_at < nodes[y].lost_at; });
    }
    return r;
}

MoveGen its_moves(Arena &arena, const LabelSet &l) {
    return [&arena, &l](const State &att, const State &def) {
        std::vector<GenMove> out;
        const std::vector<ItsMove> moves = arena.moves(att);
        for (const ItsMove &m : moves) {
            GenMove g{m.shown(), m.target, {}};
            if (m.env || l.contains(m.label)) {
                for (const ItsMove &d : arena.moves(def))
                    if (d.key == m.key)
                        g.responses.push_back(d.target);
            } else {
                g.responses = arena.plugged(m.concrete, def);
            }
            out.push_back(std::move(g));
        }
        return out;
    };
}

// Shared by the strong and asynchronous games.
class OrdinaryCache {
public:
    const std::vector<ActionTransition> &of(const State &s) {
        auto it = cache_.find(s.str());
        if (it == cache_.end())
            it = cache_.emplace(s.str(), ordinary_transitions(s)).first;
        return it->second;
    }

private:
    std::unordered_map<std::string, std::vector<ActionTransition>> cache_;
};

using Successors = std::function<std::vector<std::pair<std::string, State>>(const State &)>;

// Signature refinement over the states reachable from p and q.
GameResult refine(const State &p, const State &q, const Successors &succ, std::size_t budget) {
    std::map<std::string, std::size_t> index;
    std::vector<std::vector<std::pair<std::string, std::size_t>>> edges;
    std::deque<State> todo;
    auto intern = [&](const State &s) {
        auto it = index.find(s.str());
        if (it != index.end())
            return it->second;
        if (index.size() >= budget)
            throw BudgetExceeded(budget);
        index.emplace(s.str(), edges.size());
        edges.emplace_back();
        todo.push_back(s);
        return edges.size() - 1;
    };
    intern(p);
    intern(q);
    while (!todo.empty()) {
        State s = std::move(todo.front());
        todo.pop_front();
        std::size_t from = index.at(s.str());
        std::vector<std::pair<std::string, std::size_t>> out;
        for (auto &[label, t] : succ(s))
            out.emplace_back(label, intern(t));
        edges[from] = std::move(out);
    }

    std::vector<std::size_t> block(edges.size(), 0);
    std::size_t blocks = 1;
    for (;;) {
        using Sig = std::pair<std::size_t, std::set<std::pair<std::string, std::size_t>>>;
        std::map<Sig, std::size_t> ids;
        std::vector<std::size_t> next(edges.size());
        for (std::size_t n = 0; n < edges.size(); ++n) {
            Sig sig{block[n], {}};
            for (const auto &[label, t] : edges[n])
                sig.second.emplace(label, block[t]);
            next[n] = ids.emplace(std::move(sig), ids.size()).first->second;
        }
        block = std::move(next);
        if (ids.size() == blocks)
            break;
        blocks = ids.size();
    }
    GameResult r;
    r.explored = edges.size();
    r.verdict = block[index.at(p.str())] == block[index.at(q.str())];
    return r;
}

void require_same(const Term &p, const Term &q) {
    if (p.calculus() != q.calculus())
        throw CrossCalculus("cannot compare a " + std::string(to_string(p.calculus())) +
                            " term with a " + std::string(to_string(q.calculus())) + " term");
}

std::string barb_note(const State &a, const State &b) {
    std::vector<Barb> x = barbs(a), y = barbs(b);
    if (x == y)
        return "";
    for (const Barb &o : x)
        if (!std::binary_search(y.begin(), y.end(), o))
            return "barb " + o.str() + " only on the left";
    for (const Barb &o : y)
        if (!std::binary_search(x.begin(), x.end(), o))
            return "barb " + o.str() + " only on the right";
    return "";
}

GameResult its_pair_game(const Term &p, const Term &q, const LabelSet &l, bool with_barbs,
                         const GameOptions &o) {
    require_same(p, q);
    Arena arena(p.calculus(), o, p, q);
    return pair_graph(arena.initial(p), arena.initial(q), its_moves(arena, l),
                      with_barbs ? LocalCheck(barb_note) : LocalCheck(), o.max_pairs);
}

} // namespace

GameResult l_bisim(const Term &p, const Term &q, const LabelSet &l, const GameOptions &o) {
    require_same(p, q);
    Arena arena(p.calculus(), o, p, q);
    DfsGame game(arena, l, o.max_pairs);
    return game.run(arena.initial(p), arena.initial(q));
}

GameResult ipo_bisim(const Term &p, const Term &q, const GameOptions &o) {
    require_same(p, q);
    Arena arena(p.calculus(), o, p, q);
    Successors succ = [&](const State &s) {
        std::vector<std::pair<std::string, State>> out;
        for (const ItsMove &m : arena.moves(s))
            out.emplace_back(m.key, m.target);
        return out;
    };
    GameResult r = refine(arena.initial(p), arena.initial(q), succ, o.max_pairs);
    if (!r.verdict) {
        static const LabelSet everything = LabelSet::all();
        r.witness = pair_graph(arena.initial(p), arena.initial(q), its_moves(arena, everything),
                               LocalCheck(), o.max_pairs)
                        .witness;
    }
    return r;
}

GameResult semi_saturated_bisim(const Term &p, const Term &q, const GameOptions &o) {
    return its_pair_game(p, q, LabelSet::none(), false, o);
}

GameResult barbed_semi_saturated_bisim(const Term &p, const Term &q, bool contextual_barbs,
                                       const GameOptions &o) {
    if (!contextual_barbs)
        throw Unsupported("barbed semi-saturated bisimilarity is only implemented with "
                          "contextual barbs");
    return its_pair_game(p, q, LabelSet::none(), true, o);
}

GameResult strong_bisim(const Term &p, const Term &q, const GameOptions &o) {
    require_same(p, q);
    if (p.calculus() == Calculus::MA)
        throw Unsupported("strong bisimilarity needs an ordinary LTS; mobile ambients have none");
    OrdinaryCache lts;
    const State a = canonicalize(p), b = canonicalize(q);
    Successors succ = [&](const State &s) {
        std::vector<std::pair<std::string, State>> out;
        for (const ActionTransition &t : lts.of(s))
            out.emplace_back(t.action.str(), t.target);
        return out;
    };
    GameResult r = refine(a, b, succ, o.max_pairs);
    if (!r.verdict) {
        MoveGen gen = [&](const State &att, const State &def) {
            std::vector<GenMove> out;
            for (const ActionTransition &t : lts.of(att)) {
                GenMove g{t.action.str(), t.target, {}};
                for (const ActionTransition &d : lts.of(def))
                    if (d.action == t.action)
                        g.responses.push_back(d.target);
                out.push_back(std::move(g));
            }
            return out;
        };
        r.witness = pair_graph(a, b, gen, LocalCheck(), o.max_pairs).witness;
    }
    return r;
}

GameResult async_bisim(const Term &p, const Term &q, const GameOptions &o) {
    require_same(p, q);
    if (p.calculus() != Calculus::ACCS)
        throw Unsupported("asynchronous bisimilarity is defined for asynchronous CCS only");
    OrdinaryCache lts;
    MoveGen gen = [&](const State &att, const State &def) {
        std::vector<GenMove> out;
        for (const ActionTransition &t : lts.of(att)) {
            GenMove g{t.action.str(), t.target, {}};
            for (const ActionTransition &d : lts.of(def)) {
                if (d.action == t.action)
                    g.responses.push_back(d.target);
                else if (t.action.act == Act::Input && d.action.act == Act::Tau)
                    g.responses.push_back(canonicalize(
                        Calculus::ACCS, Proc::par({d.target.proc(), Proc::particle(t.action.name)})));
            }
            out.push_back(std::move(g));
        }
        return out;
    };
    return pair_graph(canonicalize(p), canonicalize(q), gen, LocalCheck(), o.max_pairs);
}

Relation parse_relation(std::string_view text) {
    static const std::pair<std::string_view, Relation> table[] = {
        {"strong", Relation::Strong},   {"async", Relation::Async},
        {"ipo", Relation::Ipo},         {"semi-sat", Relation::SemiSat},
        {"barbed-semi-sat", Relation::BarbedSemiSat}, {"l-bisim", Relation::LBisim}};
    for (const auto &[name, r] : table)
        if (name == text)
            return r;
    throw Error("unknown relation '" + std::string(text) + "'");
}

std::string_view to_string(Relation r) {
    switch (r) {
    case Relation::Strong:
        return "strong";
    case Relation::Async:
        return "async";
    case Relation::Ipo:
        return "ipo";
    case Relation::SemiSat:
        return "semi-sat";
    case Relation::BarbedSemiSat:
        return "barbed-semi-sat";
    case Relation::LBisim:
        return "l-bisim";
    }
    return "?";
}

GameResult decide(Relation r, const Term &p, const Term &q, const LabelSet &l, const GameOptions &o) {
    switch (r) {
    case Relation::Strong:
        return strong_bisim(p, q, o);
    case Relation::Async:
        return async_bisim(p, q, o);
    case Relation::Ipo:
        return ipo_bisim(p, q, o);
    case Relation::SemiSat:
        return semi_saturated_bisim(p, q, o);
    case Relation::BarbedSemiSat:
        return barbed_semi_saturated_bisim(p, q, true, o);
    case Relation::LBisim:
        return l_bisim(p, q, l, o);
    }
    throw Error("unknown relation");
}

} // namespace lbisim
