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

#include "lbisim/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lbisim/congruence.hpp"

namespace lbisim {

std::vector<std::string> default_names(Calculus c) {
    if (c == Calculus::MA)
        return {"n", "m"};
    return {"a", "b"};
}

std::size_t depth(const Proc &p) {
    std::size_t d = 0;
    for (const Proc &k : p.kids)
        d = std::max(d, depth(k));
    return d + (p.kind == Kind::Prefix || p.kind == Kind::Ambient ? 1 : 0);
}

std::size_t size(const Proc &p) {
    std::size_t s = 0;
    for (const Proc &k : p.kids)
        s += size(k);
    switch (p.kind) {
    case Kind::Prefix:
    case Kind::Particle:
    case Kind::Ambient:
    case Kind::Restrict:
        return s + 1;
    default:
        return s;
    }
}

namespace {

std::vector<std::pair<Act, std::string>> prefixes(Calculus c, const std::vector<std::string> &names) {
    std::vector<std::pair<Act, std::string>> out;
    if (c != Calculus::MA)
        out.emplace_back(Act::Tau, "");
    for (const std::string &n : names) {
        switch (c) {
        case Calculus::CCS:
            out.emplace_back(Act::Input, n);
            out.emplace_back(Act::Output, n);
            break;
        case Calculus::ACCS:
            out.emplace_back(Act::Input, n);
            break;
        case Calculus::MA:
            out.emplace_back(Act::In, n);
            out.emplace_back(Act::Out, n);
            out.emplace_back(Act::Open, n);
            break;
        }
    }
    return out;
}

bool summable(const Proc &p) { return p.kind == Kind::Prefix || p.kind == Kind::Sum; }

} // namespace

std::vector<Term> enumerate_terms(Calculus c, const CorpusBounds &b) {
    const std::vector<std::string> names = b.names.empty() ? default_names(c) : b.names;
    const auto acts = prefixes(c, names);
    std::set<std::string> seen;
    std::vector<std::vector<Proc>> by_size(b.max_size + 1);
    auto add = [&](const Proc &p) {
        if (depth(p) > b.max_depth)
            return;
        CanonicalForm cf = canonicalize(c, p);
        if (!seen.insert(cf.str()).second)
            return;
        std::size_t s = size(cf.proc());
        if (s < by_size.size())
            by_size[s].push_back(cf.proc());
    };
    add(Proc::nil());
    for (std::size_t s = 1; s <= b.max_size; ++s) {
        for (const Proc &body : std::vector<Proc>(by_size[s - 1])) {
            for (const auto &[act, n] : acts)
                add(Proc::prefix(act, n, body));
            if (c == Calculus::MA)
                for (const std::string &n : names)
                    add(Proc::ambient(n, body));
            if (b.restrictions) {
                NameSet fn = free_names(body);
                for (const std::string &n : names)
                    if (fn.count(n))
                        add(Proc::restrict(n, body));
            }
        }
        if (s == 1 && c == Calculus::ACCS)
            for (const std::string &n : names)
                add(Proc::particle(n));
        for (std::size_t i = 1; i < s; ++i) {
            const std::vector<Proc> left = by_size[i], right = by_size[s - i];
            for (const Proc &x : left) {
                for (const Proc &y : right) {
                    add(Proc::par({x, y}));
                    if (c != Calculus::MA && summable(x) && summable(y))
                        add(Proc::sum({x, y}));
                }
            }
        }
    }
    std::vector<Term> out;
    for (const std::vector<Proc> &level : by_size) {
        std::vector<Proc> sorted = level;
        std::sort(sorted.begin(), sorted.end(),
                  [](const Proc &x, const Proc &y) { return print(x) < print(y); });
        for (Proc &p : sorted)
            out.emplace_back(c, std::move(p));
    }
    return out;
}

namespace {

Proc random_proc(Calculus c, std::mt19937_64 &rng, std::size_t size,
                 const std::vector<std::string> &names, bool guarded) {
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    auto name = [&] { return names[pick(names.size())]; };
    const auto acts = prefixes(c, names);
    auto prefix = [&](std::size_t body) {
        auto [act, n] = acts[pick(acts.size())];
        return Proc::prefix(act, n, random_proc(c, rng, body, names, false));
    };
    if (size == 0)
        return Proc::nil();
    if (guarded) {
        if (size >= 2 && pick(3) == 0) {
            std::size_t left = 1 + pick(size - 1);
            return Proc::sum({random_proc(c, rng, left, names, true),
                              random_proc(c, rng, size - left, names, true)});
        }
        return prefix(size - 1);
    }
    if (size >= 2 && pick(3) == 0) {
        std::size_t left = 1 + pick(size - 1);
        return Proc::par({random_proc(c, rng, left, names, false),
                          random_proc(c, rng, size - left, names, false)});
    }
    switch (pick(4)) {
    case 0:
        return Proc::restrict(name(), random_proc(c, rng, size - 1, names, false));
    case 1:
        if (c == Calculus::MA)
            return Proc::ambient(name(), random_proc(c, rng, size - 1, names, false));
        if (c == Calculus::ACCS && size == 1)
            return Proc::particle(name());
        [[fallthrough]];
    case 2:
        if (c != Calculus::MA && size >= 2)
            return random_proc(c, rng, size, names, true);
        [[fallthrough]];
    default:
        return prefix(size - 1);
    }
}

} // namespace

Term random_term(Calculus c, std::mt19937_64 &rng, std::size_t size,
                 const std::vector<std::string> &names) {
    return Term(c, random_proc(c, rng, size, names.empty() ? default_names(c) : names, false));
}

std::vector<std::pair<Term, Term>> term_pairs(const std::vector<Term> &small,
                                              const std::vector<Term> &large, std::size_t extra,
                                              std::uint64_t seed) {
    std::vector<std::pair<Term, Term>> out;
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i; j < small.size(); ++j)
            out.emplace_back(small[i], small[j]);
    if (large.empty())
        return out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, large.size() - 1);
    for (std::size_t k = 0; k < extra; ++k)
        out.emplace_back(large[pick(rng)], large[pick(rng)]);
    return out;
}

} // namespace lbisim
