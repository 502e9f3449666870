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
#include "lbisim/reduction.hpp"

using namespace lbisim;

namespace {

std::vector<std::string> targets(const char *s, Calculus c) {
    std::vector<std::string> out;
    for (const CanonicalForm &r : reducts(parse_term(s, c)))
        out.push_back(r.str());
    return out;
}

std::string canon(const char *s, Calculus c) { return canonicalize(parse_term(s, c)).str(); }

std::vector<std::string> barb_names(const char *s, Calculus c) {
    std::vector<std::string> out;
    for (const Barb &b : barbs(parse_term(s, c)))
        out.push_back(b.str());
    return out;
}

} // namespace

TEST_SUITE("reduction") {

TEST_CASE("the three ambient axioms") {
    const Calculus c = Calculus::MA;
    CHECK(targets("n[in m.k[0] | j[0]] | m[l[0]]", c) ==
          std::vector<std::string>{canon("m[n[k[0] | j[0]] | l[0]]", c)});
    CHECK(targets("m[n[out m.k[0] | j[0]] | l[0]]", c) ==
          std::vector<std::string>{canon("n[k[0] | j[0]] | m[l[0]]", c)});
    CHECK(targets("open n.k[0] | n[j[0]]", c) == std::vector<std::string>{canon("k[0] | j[0]", c)});
}

TEST_CASE("reduction under restriction and ambients") {
    const Calculus c = Calculus::MA;
    CHECK(targets("(nu n)(open n.0 | n[0])", c) == std::vector<std::string>{"0"});
    CHECK(targets("k[open n.0 | n[0]]", c) == std::vector<std::string>{"k[0]"});
    CHECK(targets("open n.0 | (nu n)n[0]", c).empty());
    CHECK(targets("in n.0", c).empty());
}

TEST_CASE("rule names and positions") {
    auto steps = reduction_steps(parse_term("k[open n.0 | n[0]]", Calculus::MA));
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].rule == "Open");
    CHECK(steps[0].position == std::vector<std::string>{"k"});
}

TEST_CASE("ACCS communication and tau") {
    const Calculus c = Calculus::ACCS;
    CHECK(targets("(a.b.0 + c.0) | 'a", c) == std::vector<std::string>{"b.0"});
    CHECK(targets("tau.'a + a.0", c) == std::vector<std::string>{"'a"});
    CHECK(targets("0", c).empty());
}

TEST_CASE("CCS communication") {
    const Calculus c = Calculus::CCS;
    CHECK(targets("a.b.0 | 'a.c.0", c) == std::vector<std::string>{canon("b.0|c.0", c)});
    CHECK(targets("(nu a)(a.0 | 'a.0)", c) == std::vector<std::string>{"0"});
}

TEST_CASE("one step per distinct target") {
    CHECK(targets("open n.0 | n[0] | n[0]", Calculus::MA).size() == 1);
    CHECK(targets("'a | 'a | a.0", Calculus::ACCS).size() == 1);
}

TEST_CASE("variables are inert") {
    CHECK(targets("open n.0 | @X1", Calculus::MA).empty());
    CHECK(targets("n[@X1] | m[in n.0]", Calculus::MA).size() == 1);
}

TEST_CASE("barbs") {
    CHECK(barb_names("(nu n)(n[0] | m[0])", Calculus::MA) == std::vector<std::string>{"m"});
    CHECK(barb_names("a.'a + tau.0", Calculus::ACCS).empty());
    CHECK(barb_names("'a | b.0", Calculus::ACCS) == std::vector<std::string>{"'a"});
    CHECK(barb_names("a.0 + 'b.0", Calculus::CCS) == std::vector<std::string>{"a", "'b"});
    CHECK(barb_names("(nu a)a.0", Calculus::CCS).empty());
}

} // TEST_SUITE
