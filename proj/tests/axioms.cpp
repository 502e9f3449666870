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
#include "axioms.hpp"

#include <deque>
#include <functional>
#include <set>

using namespace lbisim;

namespace oracle {

namespace {

std::string unused_name(const Proc &p) {
    NameSet used = all_names(p);
    for (int i = 0;; ++i) {
        std::string n = "z" + std::to_string(i);
        if (!used.count(n))
            return n;
    }
}

bool free_in(const std::string &n, const Proc &p) { return free_names(p).count(n) > 0; }

Proc rest(const std::vector<Proc> &kids, std::size_t skip) {
    std::vector<Proc> out;
    for (std::size_t i = 0; i < kids.size(); ++i)
        if (i != skip)
            out.push_back(kids[i]);
    return out.size() == 1 ? out.front() : Proc::par(std::move(out));
}

// Commutativity, associativity and unit of an n-ary node.
void monoid(const Proc &p, std::vector<Proc> &out, bool grow) {
    const auto &k = p.kids;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        Proc s = p;
        std::swap(s.kids[i], s.kids[i + 1]);
        out.push_back(s);
    }
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i].kind == p.kind) {
            Proc f = p;
            f.kids.erase(f.kids.begin() + static_cast<long>(i));
            f.kids.insert(f.kids.begin() + static_cast<long>(i), k[i].kids.begin(), k[i].kids.end());
            out.push_back(f);
        }
        if (k[i].kind == Kind::Nil)
            out.push_back(k.size() == 2 ? k[1 - i] : [&] {
                Proc d = p;
                d.kids.erase(d.kids.begin() + static_cast<long>(i));
                return d;
            }());
    }
    if (k.size() > 2) {
        for (std::size_t i = 0; i + 1 < k.size(); ++i) {
            Proc g = p;
            Proc inner = p;
            inner.kids = {k[i], k[i + 1]};
            g.kids.erase(g.kids.begin() + static_cast<long>(i), g.kids.begin() + static_cast<long>(i) + 2);
            g.kids.insert(g.kids.begin() + static_cast<long>(i), inner);
            out.push_back(g);
        }
    }
    if (grow) {
        Proc z = p;
        z.kids.push_back(Proc::nil());
        out.push_back(z);
    }
}

// `summand`: p sits directly under a sum, where only prefixes, 0 and sums
// are allowed.
void at_root(Calculus c, const Proc &p, std::vector<Proc> &out, bool grow, bool summand) {
    if (grow && !summand && p.kind != Kind::Sum) {
        out.push_back(Proc::par({p, Proc::nil()}));
        out.push_back(Proc::restrict(unused_name(p), p));
    }
    if (grow && p.kind == Kind::Prefix && c != Calculus::MA)
        out.push_back(Proc::sum({p, Proc::nil()}));
    switch (p.kind) {
    case Kind::Par:
    case Kind::Sum:
        monoid(p, out, grow);
        break;
    default:
        break;
    }
    if (p.kind == Kind::Par) {
        // P | (nu n)Q = (nu n)(P | Q) when n is not free in P.
        for (std::size_t i = 0; i < p.kids.size(); ++i) {
            const Proc &k = p.kids[i];
            if (k.kind != Kind::Restrict)
                continue;
            Proc others = rest(p.kids, i);
            if (free_in(k.name, others))
                continue;
            out.push_back(Proc::restrict(k.name, Proc::par({others, k.body()})));
        }
    }
    if (p.kind == Kind::Restrict) {
        const std::string &n = p.name;
        const Proc &b = p.body();
        if (!free_in(n, b))
            out.push_back(b);
        if (b.kind == Kind::Restrict)
            out.push_back(Proc::restrict(b.name, Proc::restrict(n, b.body())));
        if (b.kind == Kind::Par) {
            for (std::size_t j = 0; j < b.kids.size(); ++j)
                if (!free_in(n, b.kids[j]))
                    out.push_back(Proc::par({b.kids[j], Proc::restrict(n, rest(b.kids, j))}));
        }
        const std::string m = unused_name(p);
        out.push_back(Proc::restrict(m, rename_free(b, n, m)));
        if (c == Calculus::MA) {
            if (b.kind == Kind::Ambient && !b.name_var && b.name != n)
                out.push_back(Proc::ambient(b.name, Proc::restrict(n, b.body())));
            if (b.kind == Kind::Prefix && b.name != n)
                out.push_back(Proc::prefix(b.act, b.name, Proc::restrict(n, b.body())));
        }
    }
    if (c == Calculus::MA && (p.kind == Kind::Ambient || p.kind == Kind::Prefix) &&
        p.body().kind == Kind::Restrict) {
        const Proc &r = p.body();
        if (r.name != p.name || p.name_var) {
            Proc moved = p;
            moved.kids[0] = r.body();
            out.push_back(Proc::restrict(r.name, moved));
        }
    }
}

void everywhere(Calculus c, const Proc &p, std::vector<Proc> &out, bool grow, bool summand) {
    at_root(c, p, out, grow, summand);
    for (std::size_t i = 0; i < p.kids.size(); ++i) {
        std::vector<Proc> inner;
        everywhere(c, p.kids[i], inner, grow, p.kind == Kind::Sum);
        for (Proc &r : inner) {
            Proc q = p;
            q.kids[i] = std::move(r);
            out.push_back(std::move(q));
        }
    }
}

} // namespace

std::size_t nodes(const Proc &p) {
    std::size_t n = 1;
    for (const Proc &k : p.kids)
        n += nodes(k);
    return n;
}

std::vector<Proc> rewrites(Calculus c, const Proc &p, bool grow) {
    std::vector<Proc> out;
    everywhere(c, p, out, grow, false);
    return out;
}

bool congruent(Calculus c, const Proc &p, const Proc &q, std::size_t slack, std::size_t max_states) {
    // Alpha conversion only introduces z<i> names, so search from both ends
    // and look for a common term.
    const std::size_t limit = std::max(nodes(p), nodes(q)) + slack;
    auto closure = [&](const Proc &start) {
        std::set<std::string> seen{print(start)};
        std::deque<Proc> todo{start};
        while (!todo.empty() && seen.size() < max_states) {
            Proc cur = std::move(todo.front());
            todo.pop_front();
            for (Proc &r : rewrites(c, cur, true)) {
                if (nodes(r) > limit)
                    continue;
                if (seen.insert(print(r)).second)
                    todo.push_back(std::move(r));
            }
        }
        return seen;
    };
    const std::set<std::string> from_p = closure(p);
    for (const std::string &t : closure(q))
        if (from_p.count(t))
            return true;
    return false;
}

Proc scramble(Calculus c, const Proc &p, std::mt19937_64 &rng, std::size_t steps) {
    Proc cur = p;
    const std::size_t limit = nodes(p) + 6;
    for (std::size_t i = 0; i < steps; ++i) {
        std::vector<Proc> next = rewrites(c, cur, nodes(cur) < limit);
        if (next.empty())
            break;
        cur = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
    }
    return cur;
}

} // namespace oracle
