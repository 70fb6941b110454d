#include "mzv/serialize.hpp"

#include <cstdio>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

template <class B, class F>
std::string format_comb(const LinComb<B>& c, F&& basis, const char* times) {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, q] : c) {
        Rational a = abs(q);
        if (first) {
            if (q < 0) out += "-";
        } else {
            out += q < 0 ? " - " : " + ";
        }
        if (a != 1) out += to_string(a) + times;
        out += basis(b);
        first = false;
    }
    return out;
}

template <class T>
T wrap_parse(const char* what, T (*f)(const std::string&), const std::string& s) {
    try {
        return f(s);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) throw;
        throw parse_error(std::string(what) + ": " + e.what());
    }
}

Rational coeff_from_json(const Json& t) {
    if (!t.is_object() || !t.contains("coeff")) throw parse_error("term without \"coeff\"");
    const Json& c = t.at("coeff");
    if (c.is_string()) return parse_rational(c.get<std::string>());
    if (c.is_number_integer()) return Rational(c.get<long>());
    throw parse_error("\"coeff\" must be a string \"p/q\" or an integer");
}

}  // namespace

std::string format_words(const WordComb& c) {
    return format_comb(c, [](const Word& w) { return to_string(w); }, " ");
}

std::string format_forests(const ForestComb& c) {
    // multi-tree forests are parenthesized so the coefficient cannot be read as a tree
    return format_comb(
        c, [](const Forest& f) { return f.num_trees() > 1 ? "(" + to_string(f) + ")" : to_string(f); }, " ");
}

std::string format_zeta(const WordComb& c) {
    return format_comb(
        c,
        [](const Word& w) {
            if (w.kind() == Kind::Bin) return "zeta_sh(" + to_string(w) + ")";
            std::string s = to_string(w);
            return "zeta(" + s.substr(1, s.size() - 2) + ")";
        },
        " * ");
}

std::string format_numeric(const NumericResult& r) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.12f \xC2\xB1 %.3e (N=%ld)", r.value, r.error, r.horizon);
    return buf;
}

Json word_to_json(const Word& w) {
    if (w.kind() == Kind::Bin) return to_string(w);
    Json a = Json::array();
    for (long v : w.values()) a.push_back(v);
    return a;
}

Word word_from_json(const Json& j) {
    if (j.is_string()) return parse_word(j.get<std::string>());
    if (!j.is_array()) throw parse_error("a word is an integer array or an {x,y} string");
    std::vector<long> vals;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long>() < 1) throw parse_error("Nat letters must be integers >= 1");
        vals.push_back(v.get<long>());
    }
    return Word::nat(vals);
}

Json to_json(const WordComb& c) {
    Json a = Json::array();
    for (const auto& [w, q] : c) a.push_back({{"coeff", to_string(q)}, {"basis", word_to_json(w)}});
    return a;
}

Json to_json(const ForestComb& c) {
    Json a = Json::array();
    for (const auto& [f, q] : c) a.push_back({{"coeff", to_string(q)}, {"basis", to_string(f)}});
    return a;
}

WordComb word_comb_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("a linear combination is a JSON array");
    WordComb c;
    Kind k = Kind::Empty;
    for (const auto& t : j) {
        if (!t.contains("basis")) throw parse_error("term without \"basis\"");
        Word w = word_from_json(t.at("basis"));
        try {
            k = common_kind(k, w.kind());
        } catch (const Error& e) {
            throw parse_error(e.what());
        }
        c.add(w, coeff_from_json(t));
    }
    return c;
}

ForestComb forest_comb_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("a linear combination is a JSON array");
    ForestComb c;
    for (const auto& t : j) {
        if (!t.contains("basis") || !t.at("basis").is_string()) throw parse_error("forest basis must be a string");
        c.add(wrap_parse("forest", parse_forest, t.at("basis").get<std::string>()), coeff_from_json(t));
    }
    return c;
}

Json zeta_to_json(const WordComb& c) {
    Json a = Json::array();
    for (const auto& [w, q] : c) {
        if (w.kind() == Kind::Bin)
            a.push_back({{"coeff", to_string(q)}, {"zeta_sh", to_string(w)}});
        else
            a.push_back({{"coeff", to_string(q)}, {"zeta", word_to_json(w)}});
    }
    return a;
}

WordComb zeta_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("an MZV expression is a JSON array");
    WordComb c;
    Kind k = Kind::Empty;
    for (const auto& t : j) {
        Word w;
        if (t.contains("zeta"))
            w = word_from_json(t.at("zeta"));
        else if (t.contains("zeta_sh") && t.at("zeta_sh").is_string())
            w = Word::bin(t.at("zeta_sh").get<std::string>());
        else if (t.contains("basis"))
            w = word_from_json(t.at("basis"));
        else
            throw parse_error("term needs \"zeta\", \"zeta_sh\" or \"basis\"");
        try {
            k = common_kind(k, w.kind());
        } catch (const Error& e) {
            throw parse_error(e.what());
        }
        c.add(w, coeff_from_json(t));
    }
    return c;
}

Json to_json(const Cone& c) { return {{"A", c.A}, {"s", c.s}}; }

Cone cone_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("s")) throw parse_error("cone JSON needs \"A\" and \"s\"");
    Cone c;
    try {
        c.A = j.at("A").get<IntMatrix>();
        c.s = j.at("s").get<std::vector<long>>();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("cone JSON: ") + e.what());
    }
    return c;
}

Json to_json(const NumericResult& r) { return {{"value", r.value}, {"error", r.error}, {"N", r.horizon}}; }

}  // namespace mzv
