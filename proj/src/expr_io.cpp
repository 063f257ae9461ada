#include "usteen/expr_io.hpp"

#include <cctype>
#include <charconv>

#include <json.hpp>

#include "usteen/checked.hpp"

namespace usteen {

namespace {

class Parser {
public:
    Parser(std::string_view src, const PrimeContext& ctx) : src_(src), ctx_(ctx) {}

    Poly parse() {
        std::vector<std::pair<Word, std::int64_t>> raw;
        std::int64_t sign = 1;
        skip_ws();
        if (try_consume('-'))
            sign = -1;
        parse_term(raw, sign);
        for (;;) {
            skip_ws();
            if (try_consume('+'))
                sign = 1;
            else if (try_consume('-'))
                sign = -1;
            else
                break;
            parse_term(raw, sign);
        }
        skip_ws();
        if (pos_ != src_.size())
            throw SyntaxError(pos_, "'+', '-' or end of input");
        return poly_from_terms(std::move(raw), ctx_);
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    bool try_consume(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!try_consume(c))
            throw SyntaxError(pos_, what);
    }

    std::int64_t parse_int(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '-')
            ++pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        std::int64_t value = 0;
        auto [ptr, ec] =
            std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (ec == std::errc::result_out_of_range)
            throw IndexOverflow("integer literal out of range");
        if (ec != std::errc() || ptr != src_.data() + pos_ || pos_ == start)
            throw SyntaxError(start, what);
        return value;
    }

    /* factor := 'z' '(' eps ',' int ')' | '1'; appends letters to w. */
    void parse_factor(Word& w) {
        skip_ws();
        if (try_consume('1'))
            return;
        if (!try_consume('z'))
            throw SyntaxError(pos_, "'z' or '1'");
        expect('(', "'('");
        std::int64_t eps = parse_int("epsilon digit");
        if (eps != 0 && eps != 1)
            throw BadEpsilon(eps);
        expect(',', "','");
        std::int64_t k = parse_int("integer index");
        expect(')', "')'");
        w.push_back(make_letter(eps, k, ctx_));
    }

    void parse_term(std::vector<std::pair<Word, std::int64_t>>& raw, std::int64_t sign) {
        skip_ws();
        std::int64_t coef = 1;
        bool have_coef = false;
        char c = peek();
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            /* '1' opening a factor list is the unit factor, not a coefficient;
               it is only a coefficient when no '*' factor chain follows, which
               the generic integer path below handles identically. */
            coef = parse_int("coefficient");
            have_coef = true;
        }
        Word w;
        if (have_coef) {
            if (try_consume('*'))
                parse_factor(w);
            else {
                raw.emplace_back(std::move(w), sign * coef);
                return;
            }
        } else {
            parse_factor(w);
        }
        while (try_consume('*'))
            parse_factor(w);
        raw.emplace_back(std::move(w), mod_p(sign * mod_p(coef, ctx_), ctx_));
        return;
    }

    std::string_view src_;
    const PrimeContext& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view src, const PrimeContext& ctx) {
    return Parser(src, ctx).parse();
}

std::string print_word(const Word& w) {
    if (w.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += '*';
        out += "z(" + std::to_string(w[i].eps) + "," + std::to_string(w[i].k) + ")";
    }
    return out;
}

std::string print_poly(const Poly& x, const PrimeContext&) {
    if (x.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < x.terms.size(); ++i) {
        const auto& [w, c] = x.terms[i];
        if (i)
            out += " + ";
        if (w.empty())
            out += std::to_string(c);
        else if (c == 1)
            out += print_word(w);
        else
            out += std::to_string(c) + "*" + print_word(w);
    }
    return out;
}

namespace {

nlohmann::json word_to_json(const Word& w) {
    auto arr = nlohmann::json::array();
    for (const Letter& l : w)
        arr.push_back({l.eps, l.k});
    return arr;
}

nlohmann::json poly_to_json(const Poly& x, const PrimeContext& ctx) {
    nlohmann::json j;
    j["p"] = ctx.p;
    auto terms = nlohmann::json::array();
    for (const auto& [w, c] : x.terms)
        terms.push_back({{"coef", c}, {"word", word_to_json(w)}});
    j["terms"] = std::move(terms);
    return j;
}

nlohmann::json relation_to_json(const RelationId& id) {
    return {{"family", id.family == RelFamily::R ? "R" : "S"},
            {"eps", id.eps},
            {"k", id.k},
            {"n", id.n}};
}

}  // namespace

std::string encode_json(const Poly& x, const PrimeContext& ctx) {
    return poly_to_json(x, ctx).dump();
}

std::string encode_json(const RelationId& id) {
    return relation_to_json(id).dump();
}

std::string encode_json(const std::vector<RelationId>& ids) {
    nlohmann::json j;
    auto arr = nlohmann::json::array();
    for (const RelationId& id : ids)
        arr.push_back(relation_to_json(id));
    j["relations"] = std::move(arr);
    return j.dump();
}

std::string encode_json(const std::vector<Word>& words, const PrimeContext& ctx) {
    nlohmann::json j;
    j["p"] = ctx.p;
    auto arr = nlohmann::json::array();
    for (const Word& w : words)
        arr.push_back(word_to_json(w));
    j["words"] = std::move(arr);
    return j.dump();
}

Poly decode_poly_json(std::string_view text, const PrimeContext& ctx) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("p") || !j.contains("terms"))
        throw Error("polynomial JSON needs \"p\" and \"terms\"");
    if (j["p"].get<std::int64_t>() != ctx.p)
        throw Error("polynomial JSON was encoded for a different prime");
    std::vector<std::pair<Word, std::int64_t>> raw;
    for (const auto& term : j["terms"]) {
        Word w;
        for (const auto& letter : term.at("word"))
            w.push_back(make_letter(letter.at(0).get<std::int64_t>(),
                                    letter.at(1).get<std::int64_t>(), ctx));
        raw.emplace_back(std::move(w), term.at("coef").get<std::int64_t>());
    }
    return poly_from_terms(std::move(raw), ctx);
}

}  // namespace usteen
