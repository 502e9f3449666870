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

#include "lbisim/corpus.hpp"
#include "lbisim/equivalence.hpp"
#include "lbisim/parser.hpp"

using namespace lbisim;

namespace {

Term ccs(const char *s) { return parse_term(s, Calculus::CCS); }
Term accs(const char *s) { return parse_term(s, Calculus::ACCS); }
Term ma(const char *s) { return parse_term(s, Calculus::MA); }

} // namespace

TEST_SUITE("equivalence") {

TEST_CASE("asynchronous input absorption") {
    const Term p = accs("a.'a + tau.0"), q = accs("tau.0");
    CHECK(async_bisim(p, q).verdict);
    CHECK_FALSE(strong_bisim(p, q).verdict);
    CHECK(l_bisim(p, q, LabelSet::la()).verdict);

    GameResult ipo = ipo_bisim(p, q);
    CHECK_FALSE(ipo.verdict);
    REQUIRE_FALSE(ipo.witness.empty());
    CHECK(ipo.witness.front().move == "-|'a");
    CHECK(ipo.witness.front().attacker == "left");

    CHECK_FALSE(async_bisim(accs("a.'a"), accs("0")).verdict);
    CHECK_THROWS_AS(async_bisim(ccs("a.0"), ccs("a.0")), Unsupported);
}

TEST_CASE("strong bisimilarity on CCS") {
    CHECK(strong_bisim(ccs("a.0 | b.0"), ccs("a.b.0 + b.a.0")).verdict);
    CHECK(strong_bisim(ccs("a.0 + a.0"), ccs("a.0")).verdict);
    CHECK_FALSE(strong_bisim(ccs("a.b.0 + a.c.0"), ccs("a.(b.0 + c.0)")).verdict);
    CHECK_FALSE(strong_bisim(ccs("a.0 | 'a.0"), ccs("a.'a.0 + 'a.a.0")).verdict);
    CHECK(strong_bisim(ccs("(nu a)(a.0 | 'a.0)"), ccs("tau.0")).verdict);
    CHECK_THROWS_AS(strong_bisim(ma("n[0]"), ma("n[0]")), Unsupported);
    CHECK_THROWS_AS(strong_bisim(ccs("a.0"), accs("a.0")), CrossCalculus);
}

TEST_CASE("label sets pick the relation") {
    const Term p = ccs("a.b.0 + a.c.0"), q = ccs("a.(b.0 + c.0)");
    CHECK_FALSE(l_bisim(p, q, LabelSet::lccs()).verdict);
    CHECK_FALSE(l_bisim(p, q, LabelSet::all()).verdict);
    CHECK_FALSE(ipo_bisim(p, q).verdict);
    // Without labels only the reductions are compared, in every context.
    CHECK_FALSE(l_bisim(p, q, LabelSet::none()).verdict);
    CHECK(l_bisim(ccs("a.0 | b.0"), ccs("a.b.0 + b.a.0"), LabelSet::lccs()).verdict);
}

TEST_CASE("ambients") {
    CHECK(l_bisim(ma("(nu n)n[0]"), ma("0"), LabelSet::lm()).verdict);
    CHECK(ipo_bisim(ma("(nu n)n[0]"), ma("0")).verdict);
    CHECK(semi_saturated_bisim(ma("(nu n)n[0]"), ma("0")).verdict);

    GameResult r = l_bisim(ma("n[0]"), ma("(nu n)n[0]"), LabelSet::lm());
    CHECK_FALSE(r.verdict);
    REQUIRE_FALSE(r.witness.empty());
    CHECK(r.witness.front().move == "-|open n.@X1");

    // A capability outside any ambient still moves the ambient it is put in.
    CHECK_FALSE(l_bisim(ma("in m.0"), ma("0"), LabelSet::lm()).verdict);
    CHECK_FALSE(ipo_bisim(ma("in m.0"), ma("0")).verdict);
    CHECK_FALSE(barbed_semi_saturated_bisim(ma("in m.0"), ma("0")).verdict);
    CHECK(l_bisim(ma("n[0] | m[0]"), ma("m[0] | n[0]"), LabelSet::lm()).verdict);
}

TEST_CASE("relations agree on small pairs") {
    const std::vector<std::pair<const char *, const char *>> pairs = {
        {"a.0", "b.0"}, {"tau.a.0", "a.0"}, {"a.0 | 'a.0", "a.'a.0 + 'a.a.0 + tau.0"},
        {"(nu b)b.a.0", "0"}, {"tau.0 + tau.0", "tau.0"}, {"a.0 + tau.0", "tau.0 + a.0"}};
    for (auto [l, r] : pairs) {
        CAPTURE(l);
        CAPTURE(r);
        const bool s = strong_bisim(ccs(l), ccs(r)).verdict;
        CHECK(l_bisim(ccs(l), ccs(r), LabelSet::lccs()).verdict == s);
        CHECK(ipo_bisim(ccs(l), ccs(r)).verdict == l_bisim(ccs(l), ccs(r), LabelSet::all()).verdict);
        CHECK(semi_saturated_bisim(ccs(l), ccs(r)).verdict ==
              l_bisim(ccs(l), ccs(r), LabelSet::none()).verdict);
    }
    CHECK(strong_bisim(ccs("a.0 | 'a.0"), ccs("a.'a.0 + 'a.a.0 + tau.0")).verdict);
}

TEST_CASE("budget") {
    GameOptions o;
    o.max_pairs = 1;
    CHECK_THROWS_AS(ipo_bisim(ccs("a.b.0 | 'a.0"), ccs("a.b.0 | 'a.0 | 0 | (nu c)c.0"), o), BudgetExceeded);
    CHECK_THROWS_AS(l_bisim(ccs("a.b.c.0"), ccs("a.b.(c.0 | (nu d)d.0)"), LabelSet::lccs(), o),
                    BudgetExceeded);
}

TEST_CASE("instantiated game") {
    GameOptions o;
    o.pool = {ccs("0"), ccs("b.0")};
    CHECK(l_bisim(ccs("a.0 | b.0"), ccs("a.b.0 + b.a.0"), LabelSet::lccs(), o).verdict);
    CHECK_FALSE(l_bisim(ccs("a.b.0 + a.c.0"), ccs("a.(b.0 + c.0)"), LabelSet::lccs(), o).verdict);
}

TEST_CASE("decide dispatch") {
    CHECK(parse_relation("l-bisim") == Relation::LBisim);
    CHECK(parse_relation("semi-sat") == Relation::SemiSat);
    CHECK_THROWS_AS(parse_relation("weak"), Error);
    CHECK(decide(Relation::Async, accs("a.'a + tau.0"), accs("tau.0"), LabelSet::la()).verdict);
}

TEST_CASE("game states") {
    CHECK(game_state(Calculus::MA, parse_proc("@X1 | n[0]")).str() == "n[0]");
    CHECK(game_state(Calculus::MA, parse_proc("(nu m)in m.0 | n[0]")).str() == "n[0]");
    CHECK(game_state(Calculus::CCS, parse_proc("@X1 | a.0")).str() == "a.0");
}

TEST_CASE("predicates") {
    CHECK(pred_open(ma("n[k[0]]"), ma("k[0]"), "n", ma("0")));
    CHECK(pred_open(ma("n[k[0]]"), ma("k[0] | m[0]"), "n", ma("m[0]")));
    CHECK_FALSE(pred_open(ma("m[0]"), ma("0"), "n", ma("0")));
    CHECK_FALSE(pred_open(ma("n[0]"), ma("n[0]"), "n", ma("0")));
    CHECK_THROWS_AS(pred_open(ccs("a.0"), ma("0"), "n", ma("0")), CrossCalculus);

    CHECK(pred_ccs(CcsPredicate::Out, ccs("a.b.0"), ccs("b.0"), "a", ccs("0")));
    CHECK_FALSE(pred_ccs(CcsPredicate::In, ccs("a.b.0"), ccs("b.0"), "a", ccs("0")));
    CHECK(pred_ccs(CcsPredicate::In, ccs("'a.0"), ccs("c.0"), "a", ccs("c.0")));
    CHECK(pred_ccs(CcsPredicate::Tau, ccs("tau.a.0"), ccs("a.0"), "a", ccs("0")));
    CHECK_FALSE(pred_ccs(CcsPredicate::Tau, ccs("a.0"), ccs("0"), "a", ccs("0")));
}

TEST_CASE("barb capturing") {
    std::vector<Term> corpus = enumerate_terms(Calculus::MA, {{}, 2, 2, true});
    CapturingReport lm = is_capturing(LabelSet::lm(), Calculus::MA, corpus);
    CHECK(lm.pass);
    CHECK(lm.captured_by.at("n") == "-|open n.@X1");
    CapturingReport none = is_capturing(LabelSet::none(), Calculus::MA, corpus);
    CHECK_FALSE(none.pass);
    CHECK_FALSE(none.violations.empty());

    std::vector<Term> ccs_corpus = enumerate_terms(Calculus::CCS, {{}, 2, 2, true});
    CapturingReport lccs = is_capturing(LabelSet::lccs(), Calculus::CCS, ccs_corpus);
    CHECK(lccs.pass);
    CHECK(lccs.captured_by.at("'a") == "-|a.@X1");
}

} // TEST_SUITE
