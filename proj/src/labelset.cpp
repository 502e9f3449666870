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

#include "lbisim/labelset.hpp"

#include <algorithm>
#include <sstream>

#include "lbisim/congruence.hpp"
#include "lbisim/parser.hpp"

namespace lbisim {

namespace {

bool hole_par(const Proc &b, Act a1, Act a2 = Act::None) {
    if (b.kind != Kind::Par || b.kids.size() != 2 || b.kids[0].kind != Kind::Hole)
        return false;
    const Proc &c = b.kids[1];
    return c.kind == Kind::Prefix && (c.act == a1 || c.act == a2);
}

bool match(const Proc &pat, const Proc &p);

bool match_multiset(const std::vector<Proc> &pats, const std::vector<Proc> &ps, std::size_t i,
                    std::vector<bool> &used) {
    if (i == pats.size())
        return true;
    for (std::size_t j = 0; j < ps.size(); ++j) {
        if (used[j] || !match(pats[i], ps[j]))
            continue;
        used[j] = true;
        if (match_multiset(pats, ps, i + 1, used))
            return true;
        used[j] = false;
    }
    return false;
}

bool match(const Proc &pat, const Proc &p) {
    if (pat.kind == Kind::Var)
        return count_holes(p) == 0;
    if (pat.kind != p.kind || pat.act != p.act || pat.name_var != p.name_var)
        return false;
    if (!pat.name_var && pat.name != p.name)
        return false;
    if (pat.kids.size() != p.kids.size())
        return false;
    if (pat.kind == Kind::Par || pat.kind == Kind::Sum) {
        std::vector<bool> used(p.kids.size(), false);
        return match_multiset(pat.kids, p.kids, 0, used);
    }
    for (std::size_t i = 0; i < pat.kids.size(); ++i)
        if (!match(pat.kids[i], p.kids[i]))
            return false;
    return true;
}

} // namespace

LabelSet LabelSet::lm() { return {Kind_::LM, "LM"}; }
LabelSet LabelSet::la() { return {Kind_::LA, "LA"}; }
LabelSet LabelSet::lccs() { return {Kind_::LCCS, "LCCS"}; }
LabelSet LabelSet::all() { return {Kind_::All, "ALL"}; }
LabelSet LabelSet::none() { return {Kind_::None, "EMPTY"}; }

LabelSet LabelSet::patterns(std::string name, Calculus c, const std::vector<Proc> &pats) {
    LabelSet out(Kind_::Patterns, std::move(name));
    for (const Proc &p : pats)
        out.patterns_.push_back(canonicalize(c, p).proc());
    return out;
}

bool LabelSet::contains(const Label &l) const {
    const Proc &b = l.body();
    switch (kind_) {
    case Kind_::LM:
        return hole_par(b, Act::Open);
    case Kind_::LA:
        return l.identity() || hole_par(b, Act::Input);
    case Kind_::LCCS:
        return l.identity() || hole_par(b, Act::Input, Act::Output);
    case Kind_::All:
        return true;
    case Kind_::None:
        return false;
    case Kind_::Patterns:
        return std::any_of(patterns_.begin(), patterns_.end(),
                           [&](const Proc &p) { return match(p, b); });
    }
    return false;
}

LabelSet builtin_label_set(const std::string &name) {
    std::string up = name;
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    if (up == "LM")
        return LabelSet::lm();
    if (up == "LA")
        return LabelSet::la();
    if (up == "LCCS")
        return LabelSet::lccs();
    if (up == "ALL")
        return LabelSet::all();
    if (up == "EMPTY")
        return LabelSet::none();
    throw Error("unknown label set '" + name + "' (expected LM, LA, LCCS, ALL, EMPTY or @file)");
}

LabelSet parse_label_set(const std::string &name, const std::string &text, Calculus c) {
    std::vector<Proc> pats;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        pats.push_back(parse_label(line, c).body());
    }
    return LabelSet::patterns(name, c, pats);
}

} // namespace lbisim
