#include "qloop/serialize.hpp"

#include <cctype>
#include <stdexcept>

namespace qloop {
namespace {

std::string q_power(int halves) {
    if (halves == 2) return "q";
    if (halves % 2 == 0) return "q^" + std::to_string(halves / 2);
    return "q^{" + std::to_string(halves) + "/2}";
}

std::string var_power(VarId v, int e) {
    if (e == 1) return v.name();
    return v.name() + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const Monomial& m) {
    std::string out;
    for (const auto& [v, e] : m.entries()) {
        if (!out.empty()) out += "*";
        out += v == VarId::q() ? q_power(e) : var_power(v, e);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coeff;
        bool negative = c.sign() < 0;
        if (negative) c = -c;
        std::string body;
        if (t.monomial.is_one()) {
            body = c.str();
        } else if (c.is_one()) {
            body = to_string(t.monomial);
        } else {
            body = c.str() + "*" + to_string(t.monomial);
        }
        if (first) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
        first = false;
    }
    return out;
}

std::string to_string(const LinearBinomial& b) {
    std::string right = b.shift == 0 ? b.right.name() : q_power(b.shift) + "*" + b.right.name();
    return "(" + b.left.name() + " - " + right + ")";
}

std::string to_string(const RatFunc& f) {
    std::string num = to_string(f.numerator());
    if (f.denominator().empty() && f.qdiff_power() == 0) return num;
    std::string den;
    auto append = [&den](const std::string& factor, int mult) {
        if (!den.empty()) den += "*";
        den += factor;
        if (mult != 1) den += "^" + std::to_string(mult);
    };
    for (const auto& [b, m] : f.denominator()) append(to_string(b), m);
    if (f.qdiff_power() > 0) append("(q - q^-1)", f.qdiff_power());
    return "(" + num + ")/(" + den + ")";
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    LaurentPoly parse() {
        skip();
        if (s_.substr(pos_) == "0") return LaurentPoly();
        LaurentPoly sum;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        while (true) {
            LaurentPoly term = parse_term();
            sum += negative ? -term : term;
            skip();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_++];
            if (c == '+') {
                negative = false;
            } else if (c == '-') {
                negative = true;
            } else {
                fail("expected '+' or '-'");
            }
        }
        return sum;
    }

private:
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                    std::string(s_) + "'");
    }
    int parse_int() {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    LaurentPoly parse_term() {
        Rational coeff(1);
        Monomial mono;
        bool any = false;
        while (true) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
                coeff *= Rational::parse(s_.substr(start, pos_ - start));
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
                VarId v = VarId::parse(s_.substr(start, pos_ - start));
                int e = 1;
                bool half_units = false;
                if (peek() == '^') {
                    ++pos_;
                    if (peek() == '{') {
                        ++pos_;
                        e = parse_int();
                        if (peek() != '/') fail("expected '/'");
                        ++pos_;
                        if (parse_int() != 2) fail("only halves are supported");
                        if (peek() != '}') fail("expected '}'");
                        ++pos_;
                        half_units = true;
                    } else {
                        e = parse_int();
                    }
                }
                if (half_units && v != VarId::q()) fail("fractional exponent on " + v.name());
                if (v == VarId::q() && !half_units) e *= 2;
                mono = mono * Monomial::var(v, e);
            } else {
                fail("expected coefficient or variable");
            }
            any = true;
            if (peek() != '*') break;
            ++pos_;
        }
        if (!any) fail("empty term");
        return LaurentPoly(mono, coeff);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms()) {
        nlohmann::json exps = nlohmann::json::array();
        for (const auto& [v, e] : t.monomial.entries()) exps.push_back({v.name(), e});
        terms.push_back({{"coeffs", t.coeff.str()}, {"exps", exps}});
    }
    return {{"terms", terms}};
}

nlohmann::json to_json(const RatFunc& f) {
    nlohmann::json j = to_json(f.numerator());
    nlohmann::json denoms = nlohmann::json::array();
    for (const auto& [b, m] : f.denominator()) {
        denoms.push_back({{"left", b.left.name()}, {"right", b.right.name()}, {"shift", b.shift}, {"mult", m}});
    }
    j["denoms"] = denoms;
    j["qdiff"] = f.qdiff_power();
    return j;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        std::vector<Monomial::Entry> entries;
        for (const auto& e : t.at("exps")) entries.emplace_back(VarId::parse(e.at(0).get<std::string>()), e.at(1).get<int>());
        terms.push_back(Term{Monomial::from_entries(std::move(entries)), Rational::parse(t.at("coeffs").get<std::string>())});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

RatFunc ratfunc_from_json(const nlohmann::json& j) {
    RatFunc::Denominator den;
    if (j.contains("denoms")) {
        for (const auto& d : j.at("denoms")) {
            LinearBinomial b{VarId::parse(d.at("left").get<std::string>()), VarId::parse(d.at("right").get<std::string>()),
                             d.at("shift").get<int>()};
            if (!(b.left < b.right)) throw std::invalid_argument("ratfunc_from_json: binomial not normalized");
            den.emplace_back(b, d.at("mult").get<int>());
        }
    }
    return RatFunc(poly_from_json(j), den, j.value("qdiff", 0));
}

}  // namespace qloop
