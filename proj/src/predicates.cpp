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

#include <algorithm>
#include <set>

#include "lbisim/equivalence.hpp"
#include "lbisim/lts.hpp"

namespace lbisim {

namespace {

NameSet names_of(std::initializer_list<const Term *> terms) {
    NameSet out;
    for (const Term *t : terms) {
        NameSet n = all_names(t->proc());
        out.insert(n.begin(), n.end());
    }
    return out;
}

void expect(const Term &t, Calculus c, const char *what) {
    if (t.calculus() != c)
        throw CrossCalculus(std::string(what) + " must be a " + std::string(to_string(c)) + " term");
    if (!t.pure())
        throw MalformedTerm(std::string(what) + " must not contain variables");
}

bool contains(const std::vector<CanonicalForm> &v, const CanonicalForm &x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

// X | C ~> P' with P' showing `barb`, then P' ~> Y with the barb consumed.
bool two_steps(Calculus c, const Term &p, const Proc &context, const Term &target, const Barb &barb) {
    const CanonicalForm y = canonicalize(target);
    if (has_barb(y, barb))
        return false;
    const CanonicalForm start = canonicalize(c, Proc::par({p.proc(), context}));
    for (const CanonicalForm &mid : reducts(start))
        if (has_barb(mid, barb) && contains(reducts(mid), y))
            return true;
    return false;
}

} // namespace

bool pred_open(const Term &p, const Term &target, const std::string &n, const Term &t1) {
    expect(p, Calculus::MA, "the process");
    expect(target, Calculus::MA, "the target");
    expect(t1, Calculus::MA, "T1");
    NameSet avoid = names_of({&p, &target, &t1});
    avoid.insert(n);
    const std::string m = fresh_name(avoid);
    Proc context = Proc::prefix(
        Act::Open, n,
        Proc::par({Proc::ambient(m, Proc::nil()), Proc::prefix(Act::Open, m, t1.proc())}));
    return two_steps(Calculus::MA, p, context, target, Barb{m, false});
}

bool pred_ccs(CcsPredicate kind, const Term &p, const Term &target, const std::string &a,
              const Term &t1) {
    expect(p, Calculus::CCS, "the process");
    expect(target, Calculus::CCS, "the target");
    if (kind == CcsPredicate::Tau)
        return contains(reducts(p), canonicalize(target));
    expect(t1, Calculus::CCS, "T1");
    NameSet avoid = names_of({&p, &target, &t1});
    avoid.insert(a);
    const std::string i = fresh_name(avoid);
    Proc signal = Proc::par({Proc::prefix(Act::Output, i, Proc::nil()), t1.proc()});
    Proc context = Proc::par(
        {Proc::prefix(kind == CcsPredicate::Out ? Act::Output : Act::Input, a, std::move(signal)),
         Proc::prefix(Act::Input, i, Proc::nil())});
    return two_steps(Calculus::CCS, p, context, target, Barb{i, true});
}

CapturingReport is_capturing(const LabelSet &l, Calculus c, const std::vector<Term> &corpus) {
    std::vector<CanonicalForm> states;
    std::vector<std::set<std::string>> labels;
    std::set<Barb> observed;
    std::set<std::string> candidates;
    for (const Term &t : corpus) {
        if (t.calculus() != c)
            throw CrossCalculus("corpus term '" + t.str() + "' is not a " +
                                std::string(to_string(c)) + " term");
        states.push_back(canonicalize(t));
        std::set<std::string> ls;
        for (const Transition &tr : its_transitions(states.back())) {
            ls.insert(tr.label.str());
            if (l.contains(tr.label))
                candidates.insert(tr.label.str());
        }
        labels.push_back(std::move(ls));
        for (const Barb &b : barbs(states.back()))
            observed.insert(b);
    }
    CapturingReport r;
    for (const Barb &o : observed) {
        bool found = false;
        for (const std::string &cand : candidates) {
            bool agrees = true;
            for (std::size_t i = 0; i < states.size() && agrees; ++i)
                agrees = has_barb(states[i], o) == (labels[i].count(cand) > 0);
            if (agrees) {
                r.captured_by[o.str()] = cand;
                found = true;
                break;
            }
        }
        if (!found) {
            r.pass = false;
            r.violations.push_back("no label of " + l.name() + " captures barb " + o.str());
        }
    }
    return r;
}

} // namespace lbisim
