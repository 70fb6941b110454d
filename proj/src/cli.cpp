#include "mzv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mzv/cones.hpp"
#include "mzv/errors.hpp"
#include "mzv/numeric.hpp"
#include "mzv/oracles.hpp"
#include "mzv/serialize.hpp"
#include "mzv/upsilon.hpp"

namespace mzv::cli {

namespace {

constexpr long kTzvHorizon = 200;
constexpr long kMtHorizon = 2000;

Json read_json(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw parse_error("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("'" + path + "' is not valid JSON: " + e.what());
    }
}

long parse_long(const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw parse_error("bad integer '" + s + "'");
    return v;
}

// "s1,...,sr|s"
std::pair<std::vector<long>, long> parse_mt(const std::string& spec) {
    auto bar = spec.find('|');
    if (bar == std::string::npos) throw parse_error("expected \"s1,...,sr|s\", got '" + spec + "'");
    std::vector<long> s;
    std::stringstream left(spec.substr(0, bar));
    std::string tok;
    while (std::getline(left, tok, ',')) s.push_back(parse_long(tok));
    if (s.empty()) throw parse_error("no Mordell-Tornheim arguments in '" + spec + "'");
    return {s, parse_long(spec.substr(bar + 1))};
}

std::optional<long> horizon(const std::optional<long>& flag) {
    if (flag) return flag;
    if (const char* env = std::getenv("ZETA_FOREST_N")) return parse_long(env);
    return std::nullopt;
}

struct Printer {
    std::ostream& out;
    bool json;

    void words(const WordComb& c) const { out << (json ? to_json(c).dump() : format_words(c)) << "\n"; }
    void forests(const ForestComb& c) const { out << (json ? to_json(c).dump() : format_forests(c)) << "\n"; }
    void zeta(const WordComb& c) const { out << (json ? zeta_to_json(c).dump() : format_zeta(c)) << "\n"; }
    void numeric(const NumericResult& r) const { out << (json ? to_json(r).dump() : format_numeric(r)) << "\n"; }
};

std::string matrix_string(const BoolMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? "," : "") + std::string(m[i][j] ? "1" : "0");
        s += "]";
    }
    return s + "]";
}

int report_oracle(const OracleReport& r, const std::string& name, const Printer& p, std::ostream& err) {
    if (p.json) {
        p.out << Json{{"oracle", name}, {"ok", r.ok}, {"cases", r.cases}, {"counterexample", r.counterexample}}.dump()
              << "\n";
    } else if (r.ok) {
        p.out << "ok: " << r.cases << " cases\n";
    } else {
        p.out << "mismatch: " << r.counterexample << "\n";
    }
    if (r.ok) return Ok;
    err << "error: oracle " << name << " failed after " << r.cases << " cases\n";
    return OracleMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact words, forests and zeta-value reductions", "zeta-forest"};
    app.fallthrough();
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "JSON output");

    std::string a, b, lambda_str = "0", kind, route = "a", target;
    std::optional<long> N;
    std::optional<int> max_size;
    bool inverse = false, stuffle_basis = false;

    auto* c_shuffle = app.add_subcommand("shuffle", "shuffle product of two words");
    c_shuffle->add_option("u", a)->required();
    c_shuffle->add_option("v", b)->required();

    auto* c_stuffle = app.add_subcommand("stuffle", "lambda-shuffle of two Nat words (default lambda 1)");
    c_stuffle->add_option("u", a)->required();
    c_stuffle->add_option("v", b)->required();
    auto* o_stuffle_lambda = c_stuffle->add_option("--lambda", lambda_str, "rational weight");

    auto* c_fshuffle = app.add_subcommand("forest-shuffle", "lambda-shuffle of two forests");
    c_fshuffle->add_option("F", a)->required();
    c_fshuffle->add_option("G", b)->required();
    c_fshuffle->add_option("--lambda", lambda_str, "rational weight");

    auto* c_flatten = app.add_subcommand("flatten", "flattening map of weight lambda");
    c_flatten->add_option("F", a)->required();
    c_flatten->add_option("--lambda", lambda_str, "rational weight");

    auto* c_binarize = app.add_subcommand("binarize", "binarization of a word or branched binarization of a forest");
    c_binarize->add_option("kind", kind)->required()->check(CLI::IsMember({"word", "forest"}));
    c_binarize->add_option("X", a)->required();
    c_binarize->add_flag("--inverse", inverse, "debinarize instead");

    auto* c_yew = app.add_subcommand("yew", "Upsilon product of two Nat forests");
    c_yew->add_option("F", a)->required();
    c_yew->add_option("G", b)->required();

    auto* c_flyew = app.add_subcommand("fl-yew", "Upsilon flattening of a Nat forest");
    c_flyew->add_option("F", a)->required();

    auto* c_cone = app.add_subcommand("cone", "decorated cones");
    c_cone->add_option("action", kind)->required()->check(CLI::IsMember({"check", "reduce"}));
    c_cone->add_option("file", a, "cone JSON {\"A\":[[...]],\"s\":[...]}")->required();
    c_cone->add_option("--route", route, "a: Upsilon flattening, b: branched binarization")
        ->check(CLI::IsMember({"a", "b"}));

    auto* c_mt = app.add_subcommand("mt", "Mordell-Tornheim values");
    c_mt->add_option("action", kind)->required()->check(CLI::IsMember({"reduce"}));
    c_mt->add_option("spec", a, "\"s1,...,sr|s\"")->required();
    c_mt->add_flag("--stuffle-basis", stuffle_basis, "print in the stuffle MZV basis");

    auto* c_eval = app.add_subcommand("eval", "numeric evaluation");
    c_eval->add_option("kind", kind)->required()->check(CLI::IsMember({"mzv", "expr", "tzv", "mt"}));
    c_eval->add_option("target", target)->required();
    c_eval->add_option("--N", N, "truncation horizon (value is taken at 2N)");

    auto* c_oracle = app.add_subcommand("oracle", "exhaustive identity checks");
    c_oracle->add_option("kind", kind)->required()->check(CLI::IsMember({"flattening", "yew", "roundtrip"}));
    c_oracle->add_option("--max-size", max_size, "enumeration bound");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ParseFailure;
    }

    Printer p{out, json};
    try {
        Rational lambda = parse_rational(lambda_str);
        if (c_shuffle->parsed()) {
            p.words(shuffle(parse_word(a), parse_word(b)));
        } else if (c_stuffle->parsed()) {
            if (o_stuffle_lambda->count() == 0) lambda = 1;
            p.words(lambda_shuffle(parse_word(a), parse_word(b), lambda));
        } else if (c_fshuffle->parsed()) {
            p.forests(forest_shuffle(parse_forest(a), parse_forest(b), lambda));
        } else if (c_flatten->parsed()) {
            p.words(flatten(parse_forest(a), lambda));
        } else if (c_binarize->parsed()) {
            if (kind == "word") {
                Word w = parse_word(a);
                Word r = inverse ? debinarize(w) : binarize(w);
                out << (json ? word_to_json(r).dump() : to_string(r)) << "\n";
            } else {
                Forest f = parse_forest(a);
                Forest r = inverse ? branched_debinarize(f) : branched_binarize(f);
                out << (json ? Json(to_string(r)).dump() : to_string(r)) << "\n";
            }
        } else if (c_yew->parsed()) {
            p.forests(yew(parse_forest(a), parse_forest(b)));
        } else if (c_flyew->parsed()) {
            p.words(fl_yew(parse_forest(a)));
        } else if (c_cone->parsed()) {
            Cone c = cone_from_json(read_json(a));
            if (kind == "reduce") {
                p.zeta(czv_reduce(c, route == "a" ? Route::A : Route::B));
            } else {
                bool compatible = is_poset_compatible(c);
                bool tree_like = is_tree_like(c);
                BoolMatrix hasse = second_representing_matrix(c);
                std::string forest = tree_like ? to_string(psi(c)) : "";
                if (json) {
                    Json rows = Json::array();
                    for (const auto& r : hasse) {
                        Json row = Json::array();
                        for (bool b : r) row.push_back(b ? 1 : 0);
                        rows.push_back(row);
                    }
                    Json j{{"poset_compatible", compatible}, {"tree_like", tree_like}, {"hasse", rows}};
                    if (tree_like) j["forest"] = forest;
                    out << j.dump() << "\n";
                } else {
                    out << "poset compatible: " << (compatible ? "yes" : "no") << "\n";
                    out << "tree-like: " << (tree_like ? "yes" : "no") << "\n";
                    out << "hasse: " << matrix_string(hasse) << "\n";
                    if (tree_like) out << "forest: " << forest << "\n";
                }
            }
        } else if (c_mt->parsed()) {
            auto [s, s0] = parse_mt(a);
            MTReduction r = mt_reduce(s, s0);
            WordComb e = stuffle_basis ? debinarize(r.expr) : r.expr;
            if (json)
                out << Json{{"perm", r.perm}, {"expr", zeta_to_json(e)}}.dump() << "\n";
            else
                p.zeta(e);
        } else if (c_eval->parsed()) {
            std::optional<long> n = horizon(N);
            if (kind == "mzv") {
                Word w = parse_word(target);
                p.numeric(w.kind() == Kind::Bin ? eval_binary(w, n) : eval_mzv(w, n));
            } else if (kind == "expr") {
                p.numeric(eval_expr(zeta_from_json(read_json(target)), n));
            } else if (kind == "tzv") {
                p.numeric(eval_tzv_direct(parse_forest(target), n.value_or(kTzvHorizon)));
            } else {
                auto [s, s0] = parse_mt(target);
                p.numeric(eval_mt_direct(s, s0, n.value_or(kMtHorizon)));
            }
        } else if (c_oracle->parsed()) {
            if (kind == "flattening") return report_oracle(oracle_flattening(max_size.value_or(4)), kind, p, err);
            if (kind == "yew") return report_oracle(oracle_yew(max_size.value_or(6)), kind, p, err);
            return report_oracle(oracle_roundtrip(max_size.value_or(5)), kind, p, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Parse ? ParseFailure : DomainFailure;
    }
    return Ok;
}

}  // namespace mzv::cli
