#include "natree/textio.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace natree {

namespace {

class SeriesParser {
public:
    explicit SeriesParser(std::string_view text) : text_(text) {}

    Series series() {
        std::vector<std::pair<Rat, Rat>> pairs;
        int sign = leading_sign();
        pairs.push_back(term(sign));
        while (true) {
            skip_ws();
            if (done()) break;
            char c = text_[pos_];
            if (c == '+')
                sign = 1;
            else if (c == '-')
                sign = -1;
            else
                fail("expected '+' or '-'");
            ++pos_;
            pairs.push_back(term(sign));
        }
        return make_series(pairs);
    }

    Rat rational_only() {
        Rat r = rational();
        skip_ws();
        if (!done()) fail("trailing input after rational");
        return r;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool done() const { return pos_ >= text_.size(); }

    bool at(char c) {
        skip_ws();
        return !done() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!at(c)) return false;
        ++pos_;
        return true;
    }

    int leading_sign() {
        if (consume('-')) return -1;
        consume('+');
        return 1;
    }

    Int integer() {
        skip_ws();
        std::string digits;
        if (!done() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            if (text_[pos_] == '-') digits += '-';
            ++pos_;
            skip_ws();
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (pos_ == start) fail("expected digits");
        return Int(digits);
    }

    Rat rational() {
        Int num = integer();
        if (consume('/')) {
            skip_ws();
            std::size_t den_at = pos_;
            Int den = integer();
            if (den == 0) throw ZeroDenominator(den_at);
            return rat(num, den);
        }
        return rat(num, Int(1));
    }

    Rat exponent() {
        if (consume('(')) {
            Rat e = rational();
            if (!consume(')')) fail("expected ')'");
            return e;
        }
        return rat(integer(), Int(1));
    }

    // pair (exponent, signed coefficient)
    std::pair<Rat, Rat> term(int sign) {
        skip_ws();
        if (done()) fail("expected term");
        Rat coeff(sign);
        bool have_coeff = false;
        if (text_[pos_] != 'X') {
            coeff *= rational();
            have_coeff = true;
        }
        if (have_coeff && !at('*')) return {Rat(0), coeff};
        if (have_coeff) consume('*');
        if (!consume('X')) fail("expected 'X'");
        Rat exp(1);
        if (consume('^')) exp = exponent();
        return {exp, coeff};
    }
};

std::string format_exponent(const Rat& e) { return "X^(" + to_string(e) + ")"; }

std::string format_term_body(const Rat& coeff_abs, const Rat& exp) {
    if (exp == 0) return to_string(coeff_abs);
    std::string mono = exp == 1 ? "X" : format_exponent(exp);
    if (coeff_abs == 1) return mono;
    return to_string(coeff_abs) + "*" + mono;
}

std::string split_pair_left(std::string_view text, std::size_t& semi) {
    semi = text.find(';');
    if (semi == std::string_view::npos) throw SyntaxError("expected ';'", text.size());
    return std::string(text.substr(0, semi));
}

}  // namespace

Series parse_series(std::string_view text) { return SeriesParser(text).series(); }

Rat parse_rational(std::string_view text) { return SeriesParser(text).rational_only(); }

std::string format_series(const Series& s) {
    std::string out;
    for (const auto& t : s.terms()) {
        if (out.empty()) {
            if (t.coefficient < 0) out += "-";
        } else {
            out += t.coefficient < 0 ? " - " : " + ";
        }
        out += format_term_body(abs_value(t.coefficient), t.exponent);
    }
    if (!s.is_exact()) {
        if (!out.empty()) out += " + ";
        out += "O(" + format_exponent(*s.precision()) + ")";
    }
    if (out.empty()) out = "0";
    return out;
}

HPoint parse_point(std::string_view text) {
    std::size_t semi = 0;
    std::string left = split_pair_left(text, semi);
    Series x = parse_series(left);
    Series y = parse_series(text.substr(semi + 1));
    return HPoint(std::move(x), std::move(y));
}

std::string format_point(const HPoint& z) {
    return format_series(z.x()) + " ; " + format_series(z.y());
}

TreePoint parse_tree_point(std::string_view text) {
    std::size_t semi = 0;
    std::string left = split_pair_left(text, semi);
    Series u = parse_series(left);
    Rat t = parse_rational(text.substr(semi + 1));
    return TreePoint(u, std::move(t));
}

std::string format_tree_point(const TreePoint& p) {
    return format_series(p.u()) + " ; " + to_string(p.height());
}

std::string report_to_json(const Report& r) {
    nlohmann::ordered_json doc;
    doc["command"] = r.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    doc["params"] = std::move(params);
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json item;
        item["name"] = c.name;
        item["status"] = status_name(c.status);
        item["witness"] = c.witness;
        checks.push_back(std::move(item));
    }
    doc["checks"] = std::move(checks);
    doc["summary"] = {{"pass", r.count(Status::pass)},
                      {"fail", r.count(Status::fail)},
                      {"skip", r.count(Status::skip)}};
    return doc.dump(2) + "\n";
}

std::string report_to_text(const Report& r) {
    std::ostringstream out;
    out << "== " << r.command;
    for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
    out << "\n";
    for (const auto& c : r.checks) {
        out << "  ";
        switch (c.status) {
            case Status::pass: out << "PASS"; break;
            case Status::fail: out << "FAIL"; break;
            case Status::skip: out << "SKIP"; break;
        }
        out << " " << c.name;
        if (!c.witness.empty()) out << " (" << c.witness << ")";
        out << "\n";
    }
    out << "  summary: pass=" << r.count(Status::pass) << " fail=" << r.count(Status::fail)
        << " skip=" << r.count(Status::skip) << "\n";
    return out.str();
}

}  // namespace natree
