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

#include "lbisim/reduction.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace lbisim {

namespace {

using Soup = std::vector<Proc>;
using Emit = std::function<void(Soup, const char *, const std::vector<std::string> &)>;

Soup minus(const Soup &s, std::size_t i, std::size_t k = SIZE_MAX) {
    Soup out;
    out.reserve(s.size());
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i && j != k)
            out.push_back(s[j]);
    return out;
}

void append(Soup &s, const Proc &p) {
    for (Proc &c : soup(p))
        s.push_back(std::move(c));
}

bool real_ambient(const Proc &p, const std::string &name) {
    return p.kind == Kind::Ambient && !p.name_var && p.name == name;
}

// Redexes of a restriction-free MA soup, recursing into ambient bodies.
void ma_steps(const Soup &s, std::vector<std::string> &path, const Emit &emit) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Proc &c = s[i];
        if (c.kind == Kind::Prefix && c.act == Act::Open) {
            for (std::size_t k = 0; k < s.size(); ++k) {
                if (k == i || !real_ambient(s[k], c.name))
                    continue;
                Soup out = minus(s, i, k);
                append(out, c.body());
                append(out, s[k].body());
                emit(std::move(out), "Open", path);
            }
        }
        if (c.kind != Kind::Ambient)
            continue;
        Soup body = soup(c.body());
        for (std::size_t j = 0; j < body.size(); ++j) {
            const Proc &cap = body[j];
            if (cap.kind != Kind::Prefix || cap.act != Act::In)
                continue;
            for (std::size_t k = 0; k < s.size(); ++k) {
                if (k == i || !real_ambient(s[k], cap.name))
                    continue;
                Soup moved = minus(body, j);
                append(moved, cap.body());
                Soup host = soup(s[k].body());
                host.push_back(Proc::ambient(c.name, join(std::move(moved)), c.name_var));
                Soup out = minus(s, i, k);
                out.push_back(Proc::ambient(s[k].name, join(std::move(host))));
                emit(std::move(out), "In", path);
            }
        }
        if (!c.name_var) {
            for (std::size_t k = 0; k < body.size(); ++k) {
                const Proc &inner = body[k];
                if (inner.kind != Kind::Ambient)
                    continue;
                Soup ib = soup(inner.body());
                for (std::size_t j = 0; j < ib.size(); ++j) {
                    const Proc &cap = ib[j];
                    if (cap.kind != Kind::Prefix || cap.act != Act::Out || cap.name != c.name)
                        continue;
                    Soup moved = minus(ib, j);
                    append(moved, cap.body());
                    Soup out = minus(s, i);
                    out.push_back(Proc::ambient(c.name, join(minus(body, k))));
                    out.push_back(Proc::ambient(inner.name, join(std::move(moved)), inner.name_var));
                    emit(std::move(out), "Out", path);
                }
            }
        }
        path.push_back(c.name_var ? "?" + c.name : c.name);
        ma_steps(body, path, [&](Soup inner, const char *rule, const std::vector<std::string> &at) {
            Soup out = minus(s, i);
            out.push_back(Proc::ambient(c.name, join(std::move(inner)), c.name_var));
            emit(std::move(out), rule, at);
        });
        path.pop_back();
    }
}

void ccs_steps(Calculus calc, const Soup &s, const Emit &emit) {
    static const std::vector<std::string> top;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (const Proc &m : summands(s[i])) {
            if (m.act == Act::Tau) {
                Soup out = minus(s, i);
                append(out, m.body());
                emit(std::move(out), "Tau", top);
                continue;
            }
            if (m.act != Act::Input)
                continue;
            for (std::size_t k = 0; k < s.size(); ++k) {
                if (k == i)
                    continue;
                if (calc == Calculus::ACCS) {
                    if (s[k].kind != Kind::Particle || s[k].name != m.name)
                        continue;
                    Soup out = minus(s, i, k);
                    append(out, m.body());
                    emit(std::move(out), "Com", top);
                    continue;
                }
                for (const Proc &n : summands(s[k])) {
                    if (n.act != Act::Output || n.name != m.name)
                        continue;
                    Soup out = minus(s, i, k);
                    append(out, m.body());
                    append(out, n.body());
                    emit(std::move(out), "Com", top);
                }
            }
        }
    }
}

} // namespace

std::vector<ReductionStep> reduction_steps(const CanonicalForm &p) {
    Level l = peel(p.proc());
    std::map<CanonicalForm, ReductionStep> found;
    Emit emit = [&](Soup s, const char *rule, const std::vector<std::string> &at) {
        CanonicalForm t = canonicalize(p.calculus(), assemble(l.binders, std::move(s)));
        if (found.count(t))
            return;
        found.emplace(t, ReductionStep{p, t, rule, at});
    };
    if (p.calculus() == Calculus::MA) {
        std::vector<std::string> path;
        ma_steps(l.components, path, emit);
    } else {
        ccs_steps(p.calculus(), l.components, emit);
    }
    std::vector<ReductionStep> out;
    out.reserve(found.size());
    for (auto &[t, step] : found)
        out.push_back(std::move(step));
    return out;
}

std::vector<ReductionStep> reduction_steps(const Term &p) { return reduction_steps(canonicalize(p)); }

std::vector<CanonicalForm> reducts(const CanonicalForm &p) {
    std::vector<CanonicalForm> out;
    for (ReductionStep &s : reduction_steps(p))
        out.push_back(std::move(s.target));
    return out;
}

std::vector<CanonicalForm> reducts(const Term &p) { return reducts(canonicalize(p)); }

std::vector<Barb> barbs(const CanonicalForm &p) {
    Level l = peel(p.proc());
    auto bound = [&](const std::string &n) {
        return std::find(l.binders.begin(), l.binders.end(), n) != l.binders.end();
    };
    std::vector<Barb> out;
    for (const Proc &c : l.components) {
        switch (p.calculus()) {
        case Calculus::MA:
            if (c.kind == Kind::Ambient && !c.name_var && !bound(c.name))
                out.push_back({c.name, false});
            break;
        case Calculus::ACCS:
            if (c.kind == Kind::Particle && !bound(c.name))
                out.push_back({c.name, true});
            break;
        case Calculus::CCS:
            for (const Proc &m : summands(c))
                if ((m.act == Act::Input || m.act == Act::Output) && !bound(m.name))
                    out.push_back({m.name, m.act == Act::Output});
            break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Barb> barbs(const Term &p) { return barbs(canonicalize(p)); }

bool has_barb(const CanonicalForm &p, const Barb &b) {
    std::vector<Barb> bs = barbs(p);
    return std::binary_search(bs.begin(), bs.end(), b);
}

} // namespace lbisim
