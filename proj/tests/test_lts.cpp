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
#include <doctest.h>

#include <set>

#include <json.hpp>

#include "lbisim/lts.hpp"
#include "lbisim/parser.hpp"

using namespace lbisim;

namespace {

using Edges = std::set<std::pair<std::string, std::string>>;

Edges ordinary(const char *s, Calculus c) {
    Edges out;
    for (const ActionTransition &t : ordinary_transitions(parse_term(s, c)))
        out.emplace(t.action.str(), t.target.str());
    return out;
}

Edges its(const char *s, Calculus c) {
    Edges out;
    for (const Transition &t : its_transitions(parse_term(s, c)))
        out.emplace(t.label.str(), t.target.str());
    return out;
}

std::string label(const char *s, Calculus c) { return parse_label(s, c).str(); }
std::string canon(const char *s, Calculus c) { return canonicalize(parse_term(s, c)).str(); }

} // namespace

TEST_SUITE("lts") {

TEST_CASE("ordinary transitions") {
    const Calculus a = Calculus::ACCS;
    CHECK(ordinary("a.'a + tau.0", a) == Edges{{"a", "'a"}, {"tau", "0"}});
    CHECK(ordinary("'a", a) == Edges{{"'a", "0"}});
    CHECK(ordinary("(nu a)a.0", a).empty());
    CHECK(ordinary("a.0 | 'a", a) == Edges{{"a", "'a"}, {"'a", "a.0"}, {"tau", "0"}});
    CHECK_THROWS_AS(ordinary_transitions(parse_term("n[0]", Calculus::MA)), Unsupported);
}

TEST_CASE("ITS transitions of MA") {
    const Calculus c = Calculus::MA;
    CHECK(its("open n.0", c) == Edges{{label("-|n[@X1]", c), "@X1"}});
    CHECK(its("m[0]", c).count({label("-|?x[in m.@X1|@X2]", c), canon("m[?x[@X1|@X2]]", c)}));
    CHECK(its("m[0]", c).count({label("-|open m.@X1", c), "@X1"}));
    CHECK(its("(nu m)m[0]", c).empty());
    // A process inside an unknown ambient can leave it.
    CHECK(its("out m.0", c).count({label("m[?x[-|@X1]|@X2]", c), canon("?x[@X1]|m[@X2]", c)}));
}

TEST_CASE("ITS transitions of ACCS and CCS") {
    CHECK(its("'a | b.0", Calculus::ACCS).count({label("-|a.@X1", Calculus::ACCS), canon("b.0|@X1", Calculus::ACCS)}));
    CHECK(its("a.'a + tau.0", Calculus::ACCS) ==
          Edges{{"-", "0"}, {label("-|'a", Calculus::ACCS), "'a"}});
    CHECK(its("a.0", Calculus::CCS) == Edges{{label("-|'a.@X1", Calculus::CCS), "@X1"}});
}

TEST_CASE("instantiation") {
    auto open = its_transitions(parse_term("open n.0", Calculus::MA));
    REQUIRE(open.size() == 1);
    Transition t = instantiate(open[0], Substitution{{{"X1", parse_term("0", Calculus::MA)}}, {}});
    CHECK(t.label.str() == "-|n[0]");
    CHECK(t.target.str() == "0");
    CHECK_THROWS_AS(instantiate(open[0], Substitution{}), IncompleteSubstitution);

    auto rcv = its_transitions(parse_term("a.0", Calculus::CCS));
    REQUIRE(rcv.size() == 1);
    Transition r = instantiate(rcv[0], Substitution{{{"X1", parse_term("b.0", Calculus::CCS)}}, {}});
    CHECK(r.label.str() == "-|'a.b.0");
    CHECK(r.target.str() == "b.0");

    auto tau = its_transitions(parse_term("tau.0", Calculus::CCS));
    REQUIRE(tau.size() == 1);
    CHECK(instantiate(tau[0], Substitution{}).target == tau[0].target);
}

TEST_CASE("exploration and dumps") {
    LtsGraph g = explore(canonicalize(parse_term("open n.0", Calculus::MA)), LtsKind::Its);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].label == "-|n[@X1]");
    CHECK(explore(canonicalize(parse_term("0", Calculus::CCS)), LtsKind::Its).edges.empty());
    LtsGraph o = explore(canonicalize(parse_term("'a", Calculus::ACCS)), LtsKind::Ordinary);
    REQUIRE(o.edges.size() == 1);
    CHECK(o.edges[0].label == "'a");
    CHECK(o.edges[0].target == "0");

    auto j = nlohmann::json::parse(to_json(o));
    CHECK(j["nodes"].size() == 2);
    CHECK(j["edges"][0]["rule"].is_string());
    const std::string dot = to_dot(o);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("'a") != std::string::npos);
    CHECK(to_json(o) == to_json(explore(canonicalize(parse_term("'a|0", Calculus::ACCS)), LtsKind::Ordinary)));
}

TEST_CASE("exploration is bounded") {
    LtsGraph g = explore(canonicalize(parse_term("a.b.c.0 | 'a.'b.'c.0", Calculus::CCS)), LtsKind::Its, 2);
    CHECK(g.truncated);
    std::set<std::string> expanded;
    for (const LtsEdge &e : g.edges)
        expanded.insert(e.source);
    CHECK(expanded.size() <= 2);
    // Targets of the last expanded states are still listed.
    CHECK(g.nodes.size() > expanded.size());
}

} // TEST_SUITE
