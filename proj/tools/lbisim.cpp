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
// Command-line front end. Exit status: 0 equivalent (or holds, or passes),
// 1 inequivalent, 2 usage or input error, 3 budget exceeded.

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lbisim/equivalence.hpp"
#include "lbisim/lts.hpp"
#include "lbisim/parser.hpp"
#include "lbisim/suite.hpp"

using namespace lbisim;
using json = nlohmann::json;

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kBudget = 3 };

std::string slurp(const std::string &path) {
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in)
        throw Error("cannot read '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// `@file` reads the argument from a file, `@-` from stdin.
std::string argument(const std::string &arg) {
    if (arg.empty() || arg[0] != '@')
        return arg;
    std::string text = slurp(arg.substr(1));
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.pop_back();
    return text;
}

Term term_arg(const std::string &arg, Calculus c) {
    return parse_term(argument(arg), c);
}

LabelSet labels_arg(const std::string &arg, Calculus c) {
    if (!arg.empty() && arg[0] == '@')
        return parse_label_set(arg.substr(1), slurp(arg.substr(1)), c);
    return builtin_label_set(arg);
}

std::string default_labels(Calculus c) {
    switch (c) {
    case Calculus::MA:
        return "LM";
    case Calculus::ACCS:
        return "LA";
    case Calculus::CCS:
        break;
    }
    return "LCCS";
}

std::vector<Term> pool_arg(const std::string &mode, Calculus c) {
    if (mode == "symbolic")
        return {};
    const std::string prefix = "instantiate:@";
    if (mode.rfind(prefix, 0) != 0)
        throw Error("--mode must be 'symbolic' or 'instantiate:@poolfile'");
    std::vector<Term> pool;
    std::istringstream lines(slurp(mode.substr(prefix.size())));
    for (std::string line; std::getline(lines, line);) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        pool.push_back(parse_term(line, c));
    }
    if (pool.empty())
        throw Error("pool file has no terms");
    return pool;
}

json witness_json(const std::vector<WitnessStep> &w) {
    json out = json::array();
    for (const WitnessStep &s : w) {
        json j{{"attacker", s.attacker}, {"move", s.move},           {"left", s.left},
               {"right", s.right},       {"target", s.target},       {"responses", s.responses}};
        if (!s.note.empty())
            j["note"] = s.note;
        out.push_back(std::move(j));
    }
    return out;
}

struct Common {
    std::string calculus = "ccs";
    std::string format = "text";
};

struct CheckArgs {
    std::string rel = "l-bisim";
    std::string labels;
    std::string mode = "symbolic";
    std::size_t max_pairs = default_max_pairs();
    std::string left, right;
};

int run_check(const Common &cm, const CheckArgs &a) {
    const Calculus c = parse_calculus(cm.calculus);
    const Relation r = parse_relation(a.rel);
    if (r != Relation::LBisim && !a.labels.empty())
        throw Error("--labels only applies to --rel l-bisim");
    const LabelSet labels = labels_arg(a.labels.empty() ? default_labels(c) : a.labels, c);
    GameOptions o;
    o.max_pairs = a.max_pairs;
    o.pool = pool_arg(a.mode, c);
    const Term p = term_arg(a.left, c);
    const Term q = term_arg(a.right, c);
    json j{{"calculus", std::string(to_string(c))},
           {"relation", std::string(to_string(r))},
           {"left", canonicalize(p).str()},
           {"right", canonicalize(q).str()}};
    if (r == Relation::LBisim)
        j["labels"] = labels.name();
    GameResult res;
    try {
        res = decide(r, p, q, labels, o);
    } catch (const BudgetExceeded &e) {
        j["error"] = e.what();
        if (cm.format == "json")
            std::cout << j.dump(2) << '\n';
        else
            std::cout << "unknown: " << e.what() << '\n';
        return kBudget;
    }
    j["equivalent"] = res.verdict;
    j["explored"] = res.explored;
    if (!res.verdict)
        j["witness"] = witness_json(res.witness);
    if (cm.format == "json") {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << (res.verdict ? "equivalent" : "not equivalent") << '\n';
        for (const WitnessStep &s : res.witness) {
            std::cout << "  " << s.attacker << " plays " << s.move << " from " << s.left << " vs "
                      << s.right << " to " << s.target << " (" << s.responses << " responses)";
            if (!s.note.empty())
                std::cout << ", " << s.note;
            std::cout << '\n';
        }
    }
    return res.verdict ? kYes : kNo;
}

int run_lts(const Common &cm, const std::string &term, bool ordinary, std::size_t max_states) {
    const Calculus c = parse_calculus(cm.calculus);
    const LtsGraph g = explore(canonicalize(term_arg(term, c)),
                               ordinary ? LtsKind::Ordinary : LtsKind::Its, max_states);
    if (cm.format == "dot") {
        std::cout << to_dot(g);
    } else if (cm.format == "json") {
        std::cout << to_json(g) << '\n';
    } else {
        for (const LtsEdge &e : g.edges)
            std::cout << e.source << " --" << e.label << "--> " << e.target << "  [" << e.rule << "]\n";
        if (g.truncated)
            std::cout << "(truncated at " << max_states << " states)\n";
    }
    return kYes;
}

int run_reduce(const Common &cm, const std::string &term) {
    const Calculus c = parse_calculus(cm.calculus);
    const CanonicalForm p = canonicalize(term_arg(term, c));
    const std::vector<ReductionStep> steps = reduction_steps(p);
    if (cm.format == "json") {
        json j{{"term", p.str()}, {"steps", json::array()}};
        for (const ReductionStep &s : steps)
            j["steps"].push_back({{"rule", s.rule}, {"target", s.target.str()}, {"position", s.position}});
        std::cout << j.dump(2) << '\n';
    } else {
        for (const ReductionStep &s : steps)
            std::cout << s.rule << "  " << s.target.str() << '\n';
    }
    return kYes;
}

int run_barbs(const Common &cm, const std::string &term) {
    const Calculus c = parse_calculus(cm.calculus);
    const CanonicalForm p = canonicalize(term_arg(term, c));
    std::vector<std::string> out;
    for (const Barb &b : barbs(p))
        out.push_back(b.str());
    if (cm.format == "json")
        std::cout << json{{"term", p.str()}, {"barbs", out}}.dump(2) << '\n';
    else
        for (const std::string &b : out)
            std::cout << b << '\n';
    return kYes;
}

int run_corpus(const Common &cm, const std::string &spec_file, const std::optional<std::uint64_t> &seed,
               const std::optional<std::size_t> &max_pairs) {
    SuiteSpec spec = parse_suite(slurp(spec_file));
    if (seed)
        spec.seed = *seed;
    if (max_pairs)
        spec.max_pairs = *max_pairs;
    const SuiteReport r = run_suite(spec);
    std::cout << (cm.format == "json" ? to_json(r) + "\n" : to_text(r));
    return r.pass() ? kYes : kNo;
}

int run_pred(const Common &cm, const std::string &kind, const std::vector<std::string> &args) {
    if (args.size() != 4)
        throw Error("pred takes KIND P Y NAME T1");
    bool holds = false;
    if (kind == "open") {
        const Calculus c = Calculus::MA;
        holds = pred_open(term_arg(args[0], c), term_arg(args[1], c), args[2], term_arg(args[3], c));
    } else {
        const Calculus c = Calculus::CCS;
        CcsPredicate k;
        if (kind == "out")
            k = CcsPredicate::Out;
        else if (kind == "in")
            k = CcsPredicate::In;
        else if (kind == "tau")
            k = CcsPredicate::Tau;
        else
            throw Error("unknown predicate '" + kind + "' (open, out, in, tau)");
        holds = pred_ccs(k, term_arg(args[0], c), term_arg(args[1], c), args[2], term_arg(args[3], c));
    }
    if (cm.format == "json")
        std::cout << json{{"predicate", kind}, {"holds", holds}}.dump(2) << '\n';
    else
        std::cout << (holds ? "true" : "false") << '\n';
    return holds ? kYes : kNo;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Behavioural equivalence checker for CCS, asynchronous CCS and mobile ambients"};
    app.require_subcommand(1);
    Common cm;
    auto common = [&](CLI::App *sub, std::vector<std::string> formats) {
        sub->add_option("--calculus", cm.calculus, "ccs, accs or ma")
            ->check(CLI::IsMember({"ccs", "accs", "ma"}, CLI::ignore_case));
        sub->add_option("--format", cm.format, "Output format")->check(CLI::IsMember(formats));
    };

    CheckArgs ca;
    CLI::App *check = app.add_subcommand("check", "Decide an equivalence between two terms");
    common(check, {"text", "json"});
    check->add_option("--rel", ca.rel, "strong, async, ipo, semi-sat, barbed-semi-sat or l-bisim");
    check->add_option("--labels", ca.labels, "LM, LA, LCCS, ALL, EMPTY or @patternfile");
    check->add_option("--mode", ca.mode, "symbolic or instantiate:@poolfile");
    check->add_option("--max-pairs", ca.max_pairs, "State pair budget");
    check->add_option("left", ca.left, "First term (or @file)")->required();
    check->add_option("right", ca.right, "Second term (or @file)")->required();

    std::string term;
    bool ordinary = false, its = false;
    std::size_t max_states = 1000;
    CLI::App *lts = app.add_subcommand("lts", "Dump the reachable transition system");
    common(lts, {"text", "json", "dot"});
    auto *ord_flag = lts->add_flag("--ordinary", ordinary, "Ordinary LTS (CCS/ACCS)");
    lts->add_flag("--its", its, "ITS (default)")->excludes(ord_flag);
    lts->add_option("--max-states", max_states, "Exploration bound");
    lts->add_option("term", term, "Term (or @file)")->required();

    CLI::App *reduce = app.add_subcommand("reduce", "List one-step reductions");
    common(reduce, {"text", "json"});
    reduce->add_option("term", term, "Term (or @file)")->required();

    CLI::App *barbs_cmd = app.add_subcommand("barbs", "List barbs");
    common(barbs_cmd, {"text", "json"});
    barbs_cmd->add_option("term", term, "Term (or @file)")->required();

    std::string spec_file;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> corpus_pairs;
    CLI::App *corpus = app.add_subcommand("corpus", "Run a corpus suite from a JSON spec");
    common(corpus, {"text", "json"});
    corpus->add_option("--seed", seed, "Override the spec's seed");
    corpus->add_option("--max-pairs", corpus_pairs, "Override the spec's state pair budget");
    corpus->add_option("spec", spec_file, "Suite spec file (JSON)")->required();

    std::string pred_kind;
    std::vector<std::string> pred_args;
    CLI::App *pred = app.add_subcommand("pred", "Evaluate a transition predicate: KIND P Y NAME T1");
    common(pred, {"text", "json"});
    pred->add_option("kind", pred_kind, "open (MA), or out, in, tau (CCS)")->required();
    pred->add_option("args", pred_args, "P Y NAME T1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    for (char &ch : cm.calculus)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    try {
        if (check->parsed())
            return run_check(cm, ca);
        if (lts->parsed())
            return run_lts(cm, term, ordinary, max_states);
        if (reduce->parsed())
            return run_reduce(cm, term);
        if (barbs_cmd->parsed())
            return run_barbs(cm, term);
        if (corpus->parsed())
            return run_corpus(cm, spec_file, seed, corpus_pairs);
        if (pred->parsed())
            return run_pred(cm, pred_kind, pred_args);
    } catch (const BudgetExceeded &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
