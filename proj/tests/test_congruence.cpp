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

#include <random>

#include "axioms.hpp"
#include "lbisim/congruence.hpp"
#include "lbisim/corpus.hpp"
#include "lbisim/parser.hpp"

using namespace lbisim;

namespace {

std::string canon(const char *s, Calculus c) { return canonicalize(parse_term(s, c)).str(); }

bool same(const char *a, const char *b, Calculus c) {
    return equiv(parse_term(a, c), parse_term(b, c));
}

} // namespace

TEST_SUITE("congruence") {

TEST_CASE("unit and commutativity") {
    CHECK(canon("a.0 | 0", Calculus::CCS) == canon("a.0", Calculus::CCS));
    CHECK(same("a.0 | b.0", "b.0 | a.0", Calculus::CCS));
    CHECK(same("(a.0 | b.0) | c.0", "a.0 | (b.0 | c.0)", Calculus::CCS));
    CHECK_FALSE(same("a.0", "'a.0", Calculus::CCS));
}

TEST_CASE("scope extrusion and restriction order") {
    CHECK(same("(nu n)(m[0] | n[0])", "m[0] | (nu n)n[0]", Calculus::MA));
    CHECK(same("(nu a)(nu b)(a.b.0)", "(nu b)(nu a)(a.b.0)", Calculus::CCS));
    // Hoisted form: a single restriction prefix over the sorted components.
    CHECK(canon("b.0 | (nu a)(a.0)", Calculus::CCS).rfind("(nu ", 0) == 0);
}

TEST_CASE("restriction moves across ambients and capabilities in MA") {
    CHECK(same("(nu n)m[n[0]]", "m[(nu n)n[0]]", Calculus::MA));
    CHECK(same("(nu n)in m.n[0]", "in m.(nu n)n[0]", Calculus::MA));
    CHECK_FALSE(same("(nu n)n[0]", "n[(nu n)0]", Calculus::MA));
    CHECK_FALSE(same("(nu n)in n.0", "in n.(nu n)0", Calculus::MA));
}

TEST_CASE("restriction does not move under CCS prefixes") {
    CHECK_FALSE(same("(nu a)b.a.0", "b.(nu a)a.0", Calculus::CCS));
}

TEST_CASE("sums: commutativity, associativity, unit") {
    CHECK(canon("a.0 + 0", Calculus::ACCS) == canon("a.0", Calculus::ACCS));
    CHECK(same("a.0 + b.0", "b.0 + a.0", Calculus::ACCS));
    CHECK(same("a.0 + (b.0 + tau.0)", "(a.0 + b.0) + tau.0", Calculus::CCS));
}

TEST_CASE("vacuous restrictions and alpha conversion") {
    CHECK(same("(nu a)0", "0", Calculus::CCS));
    CHECK(same("(nu a)a.0", "(nu b)b.0", Calculus::CCS));
    CHECK(same("(nu n)(nu m)(n[m[0]])", "(nu m)(nu n)(m[n[0]])", Calculus::MA));
    CHECK_FALSE(same("(nu n)(nu m)(n[m[0]])", "(nu n)(n[n[0]])", Calculus::MA));
}

TEST_CASE("canonical forms agree with the literal axioms") {
    // Every pair of tiny terms: the normal forms coincide exactly when the
    // axioms connect the two terms.
    const char *terms[] = {"(nu a)0",          "0",           "a.0|0",         "a.0",
                           "(nu a)a.0",        "(nu b)b.0",   "(nu a)(a.0|b.0)", "b.0|(nu a)a.0",
                           "a.0+0",            "0+a.0",       "(nu a)(nu b)a.b.0", "(nu b)(nu a)a.b.0"};
    for (const char *x : terms)
        for (const char *y : terms) {
            const Proc px = parse_term(x, Calculus::CCS).proc();
            const Proc py = parse_term(y, Calculus::CCS).proc();
            const std::string sx = x, sy = y;
            CAPTURE(sx);
            CAPTURE(sy);
            CHECK(oracle::congruent(Calculus::CCS, px, py) == same(x, y, Calculus::CCS));
        }
}

TEST_CASE("scrambled terms keep their canonical form") {
    std::mt19937_64 rng(7);
    for (Calculus c : {Calculus::CCS, Calculus::ACCS, Calculus::MA}) {
        for (int i = 0; i < 200; ++i) {
            Term t = random_term(c, rng, 4, default_names(c));
            Term s(c, oracle::scramble(c, t.proc(), rng, 12));
            CAPTURE(t.str());
            CAPTURE(s.str());
            CHECK(canonicalize(t) == canonicalize(s));
        }
    }
}

TEST_CASE("decompose: open premise") {
    Pattern open{Pattern::Shape::Component, Kind::Prefix, Act::Open, true};
    auto ds = decompose(canonicalize(parse_term("open n.0 | m[0]", Calculus::MA)), open);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].binders.empty());
    CHECK(print(ds[0].selected.body()) == "0");
    REQUIRE(ds[0].rest.size() == 1);
    CHECK(print(ds[0].rest[0]) == "m[0]");
    CHECK(decompose(canonicalize(parse_term("(nu n)open n.0", Calculus::MA)), open).empty());
}

TEST_CASE("decompose: every summand is a candidate") {
    Pattern input{Pattern::Shape::Summand, Kind::Prefix, Act::Input, false};
    auto ds = decompose(canonicalize(parse_term("a.0 + a.b.0 + 'a.0 | c.0", Calculus::CCS)), input);
    // a.0, a.b.0 and the separate component c.0.
    CHECK(ds.size() == 3);
    for (const Decomposition &d : ds)
        CHECK(canonicalize(Calculus::CCS, recompose(d, input)) ==
              canonicalize(parse_term("a.0 + a.b.0 + 'a.0 | c.0", Calculus::CCS)));
}

} // TEST_SUITE
