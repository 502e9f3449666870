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

#include "lbisim/parser.hpp"

using namespace lbisim;

namespace {

Term ma(const char *s) { return parse_term(s, Calculus::MA); }
Term ccs(const char *s) { return parse_term(s, Calculus::CCS); }
Term accs(const char *s) { return parse_term(s, Calculus::ACCS); }

} // namespace

TEST_SUITE("terms") {

TEST_CASE("parser accepts each calculus' constructs") {
    CHECK(ma("in n.out m.open k.0").str() == "in n.out m.open k.0");
    CHECK(ma("n[m[0] | open m.0]").str() == "n[m[0]|open m.0]");
    CHECK(ccs("a.'b.0 + tau.0").str() == "a.'b.0+tau.0");
    CHECK(accs("'a | a.'b").str() == "'a|a.'b");
    CHECK(ccs("(nu a)(a.0 | 'a.0)").str() == "(nu a)(a.0|'a.0)");
}

TEST_CASE("precedence: prefix, then sum, then parallel; restriction extends right") {
    CHECK(ccs("a.0 + b.0 | c.0").proc().kind == Kind::Par);
    CHECK(ccs("(nu a) a.0 | b.0").proc().kind == Kind::Restrict);
}

TEST_CASE("calculus-specific syntax is enforced") {
    CHECK_THROWS_AS(accs("'a.0"), MalformedTerm);
    CHECK_THROWS_AS(ccs("n[0]"), MalformedTerm);
    CHECK_THROWS_AS(ma("a.0"), MalformedTerm);
    CHECK_THROWS_AS(ma("n[0] + m[0]"), MalformedTerm);
}

TEST_CASE("summands are guarded") {
    CHECK_THROWS_AS(ccs("a.0 + (b.0 | c.0)"), MalformedTerm);
    CHECK_NOTHROW(ccs("a.0 + 0"));
}

TEST_CASE("variables occur at most once") {
    CHECK_THROWS_AS(ma("@X1 | @X1"), MalformedTerm);
    CHECK_THROWS_AS(ma("?x[0] | ?x[0]"), MalformedTerm);
    CHECK(ma("@X1 | ?x[0]").pure() == false);
    CHECK(ma("n[0]").pure());
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_term("n[0", Calculus::MA);
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 4);
    }
    CHECK_THROWS_AS(parse_term("a.\n  .0", Calculus::CCS), ParseError);
    CHECK_THROWS_AS(parse_term("-", Calculus::CCS), ParseError);
}

TEST_CASE("free names") {
    CHECK(free_names(ma("(nu n)(n[0] | m[0])").proc()) == NameSet{"m"});
    CHECK(free_names(ma("open n.0").proc()) == NameSet{"n"});
    CHECK(free_names(ma("?x[in m.0]").proc()) == NameSet{"m"});
    CHECK(free_names(accs("(nu a)(a.'b | 'a)").proc()) == NameSet{"b"});
}

TEST_CASE("substitution closes a term") {
    Substitution s;
    s.names["x"] = "m";
    s.procs.emplace("X", ma("n[out m.0]"));
    Term t = apply_subst(ma("(nu n)(nu m)(@X | ?x[0])"), s);
    CHECK(t.pure());
    // The binders were renamed so that n and m stay free.
    CHECK(free_names(t.proc()) == NameSet{"m", "n"});
    Term back = apply_subst(ma("@X"), Substitution{{{"X", ma("0")}}, {}});
    CHECK(back.str() == "0");
}

TEST_CASE("substitution avoids capture") {
    Substitution s;
    s.procs.emplace("X", accs("'a"));
    Term t = apply_subst(accs("(nu a)@X"), s);
    CHECK(free_names(t.proc()) == NameSet{"a"});
    CHECK(t.proc().kind == Kind::Restrict);
    CHECK(t.proc().name != "a");
}

TEST_CASE("labels keep one hole and canonical variables") {
    CHECK_THROWS_AS(parse_label("n[0]", Calculus::MA), MalformedTerm);
    CHECK_THROWS_AS(parse_label("- | -", Calculus::MA), MalformedTerm);
    Label l = parse_label("-|n[@X1]", Calculus::MA);
    CHECK(l.variables() == std::vector<std::string>{"X1"});
    CHECK(parse_label("-", Calculus::CCS).identity());
}

TEST_CASE("plugging") {
    CHECK(plug(parse_label("-|n[@X1]", Calculus::MA), ma("open n.0")).str() == "open n.0|n[@X1]");
    CHECK(plug(parse_label("-", Calculus::CCS), ccs("a.0")).str() == "a.0");
    Term t = plug(parse_label("m[?x[-|@X1]|@X2]", Calculus::MA), ma("out m.0"));
    CHECK(t.str() == "m[?x[out m.0|@X1]|@X2]");
}

TEST_CASE("plugging renames context binders that would capture") {
    Term t = plug(parse_label("(nu a)(-|a.0)", Calculus::CCS), ccs("'a.0"));
    CHECK(free_names(t.proc()) == NameSet{"a"});
}

TEST_CASE("cross-calculus plugging is rejected") {
    CHECK_THROWS_AS(plug(parse_label("-|n[0]", Calculus::MA), ccs("a.0")), CrossCalculus);
}

} // TEST_SUITE
