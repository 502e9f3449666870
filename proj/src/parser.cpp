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

#include "lbisim/parser.hpp"

#include <cctype>
#include <vector>

namespace lbisim {

namespace {

enum class Tok { End, Zero, Name, Tau, Nu, In, Out, Open, Quote, At, Query, LParen, RParen,
                 LBrack, RBrack, Dot, Bar, Plus, Hole };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const std::size_t l = line, cl = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            std::string word(s.substr(i, j - i));
            Tok k = Tok::Name;
            if (word == "tau")
                k = Tok::Tau;
            else if (word == "nu")
                k = Tok::Nu;
            else if (word == "in")
                k = Tok::In;
            else if (word == "out")
                k = Tok::Out;
            else if (word == "open")
                k = Tok::Open;
            out.push_back({k, word, l, cl});
            advance(j - i);
            continue;
        }
        Tok k;
        switch (c) {
        case '0':
            k = Tok::Zero;
            break;
        case '\'':
            k = Tok::Quote;
            break;
        case '@':
            k = Tok::At;
            break;
        case '?':
            k = Tok::Query;
            break;
        case '(':
            k = Tok::LParen;
            break;
        case ')':
            k = Tok::RParen;
            break;
        case '[':
            k = Tok::LBrack;
            break;
        case ']':
            k = Tok::RBrack;
            break;
        case '.':
            k = Tok::Dot;
            break;
        case '|':
            k = Tok::Bar;
            break;
        case '+':
            k = Tok::Plus;
            break;
        case '-':
            k = Tok::Hole;
            break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
        }
        out.push_back({k, std::string(1, c), l, cl});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, bool allow_hole) : toks_(tokenize(text)), allow_hole_(allow_hole) {}

    Proc parse() {
        Proc p = parse_par();
        if (peek().kind != Tok::End)
            fail("unexpected '" + peek().text + "'");
        return p;
    }

private:
    const Token &peek(std::size_t k = 0) const {
        return toks_[std::min(pos_ + k, toks_.size() - 1)];
    }

    const Token &next() {
        const Token &t = peek();
        if (pos_ < toks_.size() - 1)
            ++pos_;
        return t;
    }

    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(msg, peek().line, peek().column);
    }

    void expect(Tok k, const char *what) {
        if (peek().kind != k)
            fail(std::string("expected ") + what +
                 (peek().kind == Tok::End ? " at end of input" : ", found '" + peek().text + "'"));
        next();
    }

    std::string expect_name() {
        if (peek().kind != Tok::Name)
            fail(peek().kind == Tok::End ? "expected a name at end of input"
                                         : "expected a name, found '" + peek().text + "'");
        return next().text;
    }

    Proc parse_par() {
        std::vector<Proc> items{parse_sum()};
        while (peek().kind == Tok::Bar) {
            next();
            items.push_back(parse_sum());
        }
        return items.size() == 1 ? std::move(items.front()) : Proc::par(std::move(items));
    }

    Proc parse_sum() {
        std::vector<Proc> items{parse_unary()};
        while (peek().kind == Tok::Plus) {
            next();
            items.push_back(parse_unary());
        }
        return items.size() == 1 ? std::move(items.front()) : Proc::sum(std::move(items));
    }

    bool at_prefix() const {
        switch (peek().kind) {
        case Tok::Tau:
        case Tok::In:
        case Tok::Out:
        case Tok::Open:
            return true;
        case Tok::Name:
            return peek(1).kind == Tok::Dot;
        case Tok::Quote:
            return peek(1).kind == Tok::Name && peek(2).kind == Tok::Dot;
        default:
            return false;
        }
    }

    Proc parse_unary() {
        if (peek().kind == Tok::LParen && peek(1).kind == Tok::Nu) {
            next();
            next();
            std::string n = expect_name();
            expect(Tok::RParen, "')'");
            return Proc::restrict(std::move(n), parse_par());
        }
        if (at_prefix()) {
            Act act;
            std::string channel;
            switch (next().kind) {
            case Tok::Tau:
                act = Act::Tau;
                break;
            case Tok::In:
                act = Act::In;
                channel = expect_name();
                break;
            case Tok::Out:
                act = Act::Out;
                channel = expect_name();
                break;
            case Tok::Open:
                act = Act::Open;
                channel = expect_name();
                break;
            case Tok::Quote:
                act = Act::Output;
                channel = next().text;
                break;
            default:
                act = Act::Input;
                channel = toks_[pos_ - 1].text;
                break;
            }
            expect(Tok::Dot, "'.'");
            return Proc::prefix(act, std::move(channel), parse_unary());
        }
        return parse_atom();
    }

    Proc parse_atom() {
        switch (peek().kind) {
        case Tok::Zero:
            next();
            return Proc::nil();
        case Tok::Hole:
            if (!allow_hole_)
                fail("a hole '-' is only allowed in contexts");
            next();
            return Proc::hole();
        case Tok::At: {
            next();
            return Proc::var(expect_name());
        }
        case Tok::Query: {
            next();
            std::string x = expect_name();
            expect(Tok::LBrack, "'['");
            Proc body = parse_par();
            expect(Tok::RBrack, "']'");
            return Proc::ambient(std::move(x), std::move(body), true);
        }
        case Tok::Name: {
            std::string n = next().text;
            if (peek().kind != Tok::LBrack)
                fail("expected '.' or '[' after name '" + n + "'");
            next();
            Proc body = parse_par();
            expect(Tok::RBrack, "']'");
            return Proc::ambient(std::move(n), std::move(body));
        }
        case Tok::Quote: {
            next();
            return Proc::particle(expect_name());
        }
        case Tok::LParen: {
            next();
            Proc p = parse_par();
            expect(Tok::RParen, "')'");
            return p;
        }
        case Tok::End:
            fail("unexpected end of input");
        default:
            fail("unexpected '" + peek().text + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    bool allow_hole_;
};

} // namespace

Proc parse_proc(std::string_view text, bool allow_hole) { return Parser(text, allow_hole).parse(); }

Term parse_term(std::string_view text, Calculus c) { return Term(c, parse_proc(text)); }

Label parse_label(std::string_view text, Calculus c) {
    Proc p = parse_proc(text, true);
    validate(p, c, 1);
    return Label(c, p);
}

} // namespace lbisim
