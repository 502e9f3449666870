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
#include "lbisim/suite.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lbisim/lts.hpp"
#include "lbisim/parser.hpp"

namespace lbisim {

namespace {

using json = nlohmann::json;

std::string label_text(Calculus c, const std::string &text) {
    return parse_label(text, c).str();
}

std::string with_var(Calculus c, const CanonicalForm &q) {
    return canonicalize(c, Proc::par({q.proc(), Proc::var("X1")})).str();
}

std::string edge(const std::string &label, const std::string &target) {
    return label + " => " + target;
}

bool is_name_var(const Label &l, const std::string &v) {
    const std::vector<std::string> names = name_vars(l.body());
    return std::find(names.begin(), names.end(), v) != names.end();
}

// Closes every variable of the label: process variables with t1, name
// variables with n.
Transition close(const Transition &t, const Term &t1, const std::string &n) {
    Substitution s;
    for (const std::string &v : t.label.variables()) {
        if (is_name_var(t.label, v))
            s.names[v] = n;
        else
            s.procs.emplace(v, t1);
    }
    return instantiate(t, s);
}

std::vector<std::string> names_for(const Term &p) {
    NameSet names = free_names(p.proc());
    for (const std::string &n : default_names(p.calculus()))
        names.insert(n);
    return {names.begin(), names.end()};
}

// Targets worth asking a predicate about: p, its reducts, and the target of
// every transition closed with t1.
std::vector<CanonicalForm> candidates(const CanonicalForm &p, const std::vector<Transition> &ts,
                                      const Term &t1, const std::string &n) {
    std::set<std::string> seen;
    std::vector<CanonicalForm> out;
    auto add = [&](CanonicalForm c) {
        if (seen.insert(c.str()).second)
            out.push_back(std::move(c));
    };
    add(p);
    for (const CanonicalForm &r : reducts(p))
        add(r);
    for (const Transition &t : ts)
        add(close(t, t1, n).target);
    return out;
}

struct RelationRef {
    Relation relation;
    LabelSet labels = LabelSet::none();
    std::string text;
};

RelationRef parse_ref(const std::string &text) {
    auto first = text.find_first_not_of(' ');
    auto last = text.find_last_not_of(' ');
    if (first == std::string::npos)
        throw Error("empty relation in check");
    std::string t = text.substr(first, last - first + 1);
    RelationRef r{Relation::Strong, LabelSet::none(), t};
    auto colon = t.find(':');
    r.relation = parse_relation(t.substr(0, colon));
    if (colon != std::string::npos)
        r.labels = builtin_label_set(t.substr(colon + 1));
    else if (r.relation == Relation::LBisim)
        throw Error("relation '" + t + "' needs a label set, as in l-bisim:LM");
    return r;
}

void note(CheckReport &r, const std::vector<std::string> &failures) {
    ++r.cases;
    if (failures.empty())
        return;
    ++r.failed;
    for (const std::string &f : failures)
        if (r.examples.size() < 5)
            r.examples.push_back(f);
}

LabelSet default_labels(Calculus c) {
    switch (c) {
    case Calculus::MA:
        return LabelSet::lm();
    case Calculus::ACCS:
        return LabelSet::la();
    case Calculus::CCS:
        break;
    }
    return LabelSet::lccs();
}

std::vector<Term> default_t1s(Calculus c) {
    if (c == Calculus::MA)
        return {parse_term("0", c), parse_term("n[0]", c), parse_term("open m.0", c)};
    if (c == Calculus::ACCS)
        return {parse_term("0", c), parse_term("'a", c)};
    return {parse_term("0", c), parse_term("'a.0", c), parse_term("b.0", c)};
}

} // namespace

std::vector<std::string> check_canonical(const Term &p) {
    std::vector<std::string> out;
    const CanonicalForm once = canonicalize(p);
    const CanonicalForm twice = canonicalize(p.calculus(), once.proc());
    if (!(once == twice))
        out.push_back(p.str() + ": canonical form " + once.str() + " is not stable, gives " +
                      twice.str());
    const Term back = parse_term(once.str(), p.calculus());
    if (back.str() != once.str())
        out.push_back(p.str() + ": " + once.str() + " reprints as " + back.str());
    if (!(canonicalize(back) == once))
        out.push_back(p.str() + ": reparsing " + once.str() + " changes its class");
    return out;
}

std::vector<std::string> check_correspondence(const Term &p) {
    const Calculus c = p.calculus();
    if (c == Calculus::MA)
        throw Unsupported("MA has no ordinary transition system");
    const CanonicalForm cf = canonicalize(p);
    std::set<std::string> expected, actual;
    for (const ActionTransition &t : ordinary_transitions(cf)) {
        switch (t.action.act) {
        case Act::Tau:
            expected.insert(edge(label_text(c, "-"), t.target.str()));
            break;
        case Act::Input:
            if (c == Calculus::ACCS)
                expected.insert(edge(label_text(c, "-|'" + t.action.name), t.target.str()));
            else
                expected.insert(edge(label_text(c, "-|'" + t.action.name + ".@X1"), with_var(c, t.target)));
            break;
        case Act::Output:
            expected.insert(edge(label_text(c, "-|" + t.action.name + ".@X1"), with_var(c, t.target)));
            break;
        default:
            break;
        }
    }
    for (const Transition &t : its_transitions(cf))
        actual.insert(edge(t.label.str(), t.target.str()));
    std::vector<std::string> out;
    for (const std::string &e : expected)
        if (!actual.count(e))
            out.push_back(p.str() + ": ordinary step without ITS match: " + e);
    for (const std::string &a : actual)
        if (!expected.count(a))
            out.push_back(p.str() + ": ITS step without ordinary match: " + a);
    return out;
}

std::vector<std::string> check_open_barbs(const Term &p) {
    if (p.calculus() != Calculus::MA)
        throw Unsupported("open barbs are an MA check");
    const CanonicalForm cf = canonicalize(p);
    std::set<std::string> labels;
    for (const Transition &t : its_transitions(cf))
        labels.insert(t.label.str());
    std::vector<std::string> out;
    for (const std::string &n : names_for(p)) {
        const bool barb = has_barb(cf, Barb{n, false});
        const bool move = labels.count(label_text(Calculus::MA, "-|open " + n + ".@X1")) > 0;
        if (barb != move)
            out.push_back(p.str() + ": barb " + n + " is " + (barb ? "present" : "absent") +
                          " but the open transition is " + (move ? "present" : "absent"));
    }
    return out;
}

std::vector<std::string> check_pred_open(const Term &p, const std::vector<Term> &t1s) {
    const Calculus c = Calculus::MA;
    const CanonicalForm cf = canonicalize(p);
    const std::vector<Transition> ts = its_transitions(cf);
    std::vector<std::string> out;
    for (const std::string &n : names_for(p)) {
        const std::string want = label_text(c, "-|open " + n + ".@X1");
        for (const Term &t1 : t1s) {
            std::set<std::string> hits;
            for (const Transition &t : ts)
                if (t.label.str() == want)
                    hits.insert(close(t, t1, n).target.str());
            for (const CanonicalForm &y : candidates(cf, ts, t1, n)) {
                const bool pred = pred_open(p, y.term(), n, t1);
                const bool trans = hits.count(y.str()) > 0;
                if (pred != trans)
                    out.push_back(p.str() + ": open " + n + " with T1=" + t1.str() + " to " + y.str() +
                                  ": predicate " + (pred ? "holds" : "fails") + ", transition " +
                                  (trans ? "exists" : "missing"));
            }
        }
    }
    return out;
}

std::vector<std::string> check_pred_ccs(const Term &p, const std::vector<Term> &t1s) {
    const Calculus c = Calculus::CCS;
    const CanonicalForm cf = canonicalize(p);
    const std::vector<Transition> ts = its_transitions(cf);
    std::vector<std::string> out;
    auto compare = [&](CcsPredicate kind, const std::string &label, const std::string &a,
                       const Term &t1) {
        std::set<std::string> hits;
        for (const Transition &t : ts)
            if (t.label.str() == label)
                hits.insert(close(t, t1, a).target.str());
        for (const CanonicalForm &y : candidates(cf, ts, t1, a)) {
            const bool pred = pred_ccs(kind, p, y.term(), a, t1);
            const bool trans = hits.count(y.str()) > 0;
            if (pred != trans)
                out.push_back(p.str() + ": " + label + " with T1=" + t1.str() + " to " + y.str() +
                              ": predicate " + (pred ? "holds" : "fails") + ", transition " +
                              (trans ? "exists" : "missing"));
        }
    };
    for (const Term &t1 : t1s) {
        compare(CcsPredicate::Tau, label_text(c, "-"), "a", t1);
        for (const std::string &a : names_for(p)) {
            compare(CcsPredicate::Out, label_text(c, "-|'" + a + ".@X1"), a, t1);
            compare(CcsPredicate::In, label_text(c, "-|" + a + ".@X1"), a, t1);
        }
    }
    return out;
}

SuiteSpec parse_suite(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception &e) {
        throw Error(std::string("suite spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw Error("suite spec must be a JSON object");
    static const std::set<std::string> known{"calculus", "names",       "max_size", "max_depth",
                                             "restrictions", "pair_size", "extra_pairs", "seed",
                                             "max_pairs", "pairs",      "checks"};
    for (const auto &[k, v] : j.items())
        if (!known.count(k))
            throw Error("unknown suite field '" + k + "'");
    SuiteSpec s;
    try {
        s.calculus = parse_calculus(j.at("calculus").get<std::string>());
        s.bounds.names = j.value("names", std::vector<std::string>{});
        s.bounds.max_size = j.value("max_size", s.bounds.max_size);
        s.bounds.max_depth = j.value("max_depth", s.bounds.max_depth);
        s.bounds.restrictions = j.value("restrictions", s.bounds.restrictions);
        s.pair_size = j.value("pair_size", s.pair_size);
        s.extra_pairs = j.value("extra_pairs", s.extra_pairs);
        s.seed = j.value("seed", s.seed);
        s.max_pairs = j.value("max_pairs", s.max_pairs);
        s.pairs = j.value("pairs", s.pairs);
        s.checks = j.at("checks").get<std::vector<std::string>>();
    } catch (const json::exception &e) {
        throw Error(std::string("bad suite spec: ") + e.what());
    }
    if (s.checks.empty())
        throw Error("suite spec lists no checks");
    if (s.pair_size > s.bounds.max_size)
        throw Error("pair_size exceeds max_size");
    return s;
}

bool SuiteReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport &c) { return c.pass(); });
}

SuiteReport run_suite(const SuiteSpec &spec) {
    const Calculus c = spec.calculus;
    std::vector<Term> terms;
    std::vector<std::pair<Term, Term>> pairs;
    if (!spec.pairs.empty()) {
        std::set<std::string> seen;
        for (const auto &[a, b] : spec.pairs) {
            pairs.emplace_back(parse_term(a, c), parse_term(b, c));
            for (const Term *t : {&pairs.back().first, &pairs.back().second})
                if (seen.insert(canonicalize(*t).str()).second)
                    terms.push_back(*t);
        }
    } else {
        terms = enumerate_terms(c, spec.bounds);
    }

    SuiteReport report;
    report.calculus = c;
    report.terms = terms.size();
    GameOptions opts;
    opts.max_pairs = spec.max_pairs;
    const std::vector<Term> t1s = default_t1s(c);

    for (const std::string &name : spec.checks) {
        CheckReport r;
        r.name = name;
        if (name.find("==") != std::string::npos) {
            const auto at = name.find("==");
            const RelationRef left = parse_ref(name.substr(0, at));
            const RelationRef right = parse_ref(name.substr(at + 2));
            if (pairs.empty()) {
                CorpusBounds small = spec.bounds;
                small.max_size = spec.pair_size;
                pairs = term_pairs(enumerate_terms(c, small), terms, spec.extra_pairs, spec.seed);
            }
            for (const auto &[p, q] : pairs) {
                ++r.cases;
                try {
                    const bool a = decide(left.relation, p, q, left.labels, opts).verdict;
                    const bool b = decide(right.relation, p, q, right.labels, opts).verdict;
                    if (a != b) {
                        ++r.failed;
                        if (r.examples.size() < 5)
                            r.examples.push_back(p.str() + " vs " + q.str() + ": " + left.text + " says " +
                                                 (a ? "yes" : "no") + ", " + right.text + " says " +
                                                 (b ? "yes" : "no"));
                    }
                } catch (const BudgetExceeded &) {
                    ++r.budget_exceeded;
                }
            }
        } else if (name == "capturing") {
            CapturingReport cr = is_capturing(default_labels(c), c, terms);
            r.cases = cr.captured_by.size() + cr.violations.size();
            r.failed = cr.violations.size();
            for (const std::string &v : cr.violations)
                if (r.examples.size() < 5)
                    r.examples.push_back(v);
        } else if (name == "canonical" || name == "correspondence" || name == "open-barbs" ||
                   name == "pred-open" || name == "pred-ccs") {
            const bool ma_only = name == "open-barbs" || name == "pred-open";
            if (ma_only && c != Calculus::MA)
                throw Error("check '" + name + "' needs an MA corpus");
            if (name == "correspondence" && c == Calculus::MA)
                throw Error("check 'correspondence' needs a CCS or ACCS corpus");
            if (name == "pred-ccs" && c != Calculus::CCS)
                throw Error("check 'pred-ccs' needs a CCS corpus");
            for (const Term &t : terms) {
                if (name == "canonical")
                    note(r, check_canonical(t));
                else if (name == "correspondence")
                    note(r, check_correspondence(t));
                else if (name == "open-barbs")
                    note(r, check_open_barbs(t));
                else if (name == "pred-open")
                    note(r, check_pred_open(t, t1s));
                else
                    note(r, check_pred_ccs(t, t1s));
            }
        } else {
            throw Error("unknown check '" + name + "'");
        }
        report.checks.push_back(std::move(r));
    }
    report.pairs = pairs.size();
    return report;
}

std::string to_json(const SuiteReport &r) {
    json j;
    j["calculus"] = std::string(to_string(r.calculus));
    j["terms"] = r.terms;
    j["pairs"] = r.pairs;
    j["pass"] = r.pass();
    j["checks"] = json::array();
    for (const CheckReport &c : r.checks)
        j["checks"].push_back({{"name", c.name},
                               {"cases", c.cases},
                               {"failed", c.failed},
                               {"budget_exceeded", c.budget_exceeded},
                               {"pass", c.pass()},
                               {"examples", c.examples}});
    return j.dump(2);
}

std::string to_text(const SuiteReport &r) {
    std::ostringstream out;
    out << to_string(r.calculus) << ": " << r.terms << " terms, " << r.pairs << " pairs\n";
    for (const CheckReport &c : r.checks) {
        out << (c.pass() ? "PASS " : "FAIL ") << c.name << "  cases=" << c.cases
            << " failed=" << c.failed;
        if (c.budget_exceeded)
            out << " budget_exceeded=" << c.budget_exceeded;
        out << '\n';
        for (const std::string &e : c.examples)
            out << "  " << e << '\n';
    }
    return out.str();
}

} // namespace lbisim
