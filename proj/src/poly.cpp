#include "qtflows/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qtflows {

QTPolynomial QTPolynomial::monomial(Coeff c, int eq, int et) {
    QTPolynomial p;
    p.add_term(eq, et, c);
    return p;
}

QTPolynomial QTPolynomial::q() { return monomial(1, 1, 0); }
QTPolynomial QTPolynomial::t() { return monomial(1, 0, 1); }

Coeff QTPolynomial::coeff(int eq, int et) const {
    auto it = terms_.find({eq, et});
    return it == terms_.end() ? Coeff(0) : it->second;
}

int QTPolynomial::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& m = terms_.begin()->first;
    return m.eq + m.et;
}

void QTPolynomial::add_term(int eq, int et, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({eq, et}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m.eq, m.et, c);
    return *this;
}

QTPolynomial& QTPolynomial::operator-=(const QTPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m.eq, m.et, -c);
    return *this;
}

QTPolynomial operator+(QTPolynomial lhs, const QTPolynomial& rhs) {
    lhs += rhs;
    return lhs;
}

QTPolynomial operator-(QTPolynomial lhs, const QTPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
}

QTPolynomial operator*(const QTPolynomial& lhs, const QTPolynomial& rhs) {
    QTPolynomial out;
    for (const auto& [ml, cl] : lhs.terms_)
        for (const auto& [mr, cr] : rhs.terms_)
            out.add_term(ml.eq + mr.eq, ml.et + mr.et, cl * cr);
    return out;
}

QTPolynomial& QTPolynomial::operator*=(const QTPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

QTPolynomial QTPolynomial::operator-() const {
    QTPolynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

QTPolynomial QTPolynomial::pow(unsigned e) const {
    QTPolynomial out(1);
    QTPolynomial base = *this;
    while (e > 0) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

QTPolynomial QTPolynomial::swap_qt() const {
    QTPolynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.et, m.eq}, c);
    return out;
}

Coeff QTPolynomial::eval_one_one() const {
    Coeff s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

bool QTPolynomial::is_symmetric() const { return *this == swap_qt(); }

bool QTPolynomial::is_nonnegative() const {
    for (const auto& [m, c] : terms_)
        if (c < 0) return false;
    return true;
}

namespace {

// Appends "q^3*t" style monomial text; empty for the constant monomial.
std::string monomial_text(int eq, int et) {
    std::string s;
    auto var = [&s](char v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (e != 1) {
            s += '^';
            s += std::to_string(e);
        }
    };
    var('q', eq);
    var('t', et);
    return s;
}

void append_term(std::string& out, bool first, const Coeff& c, const std::string& mono) {
    const bool neg = c < 0;
    Coeff mag = neg ? Coeff(-c) : c;
    if (first) {
        if (neg) out += '-';
    } else {
        out += neg ? " - " : " + ";
    }
    if (mono.empty()) {
        out += mag.get_str();
    } else {
        if (mag != 1) {
            out += mag.get_str();
            out += '*';
        }
        out += mono;
    }
}

}  // namespace

std::string QTPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        append_term(out, first, c, monomial_text(m.eq, m.et));
        first = false;
    }
    return out;
}

QLaurent QLaurent::q_power(int e) {
    QLaurent p;
    p.add_term(e, 1);
    return p;
}

Coeff QLaurent::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
}

int QLaurent::min_exponent() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first;
}

void QLaurent::add_term(int e, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QLaurent& QLaurent::operator+=(const QLaurent& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

QLaurent operator+(QLaurent lhs, const QLaurent& rhs) {
    lhs += rhs;
    return lhs;
}

QLaurent operator-(QLaurent lhs, const QLaurent& rhs) {
    lhs -= rhs;
    return lhs;
}

QLaurent operator*(const QLaurent& lhs, const QLaurent& rhs) {
    QLaurent out;
    for (const auto& [el, cl] : lhs.terms_)
        for (const auto& [er, cr] : rhs.terms_) out.add_term(el + er, cl * cr);
    return out;
}

QLaurent& QLaurent::operator*=(const QLaurent& rhs) {
    *this = *this * rhs;
    return *this;
}

QLaurent QLaurent::operator-() const {
    QLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

bool QLaurent::is_polynomial() const { return terms_.empty() || min_exponent() >= 0; }

QTPolynomial QLaurent::to_qt() const {
    if (!is_polynomial()) throw std::domain_error("QLaurent with negative exponents is not a QTPolynomial");
    QTPolynomial out;
    for (const auto& [e, c] : terms_) out.add_term(e, 0, c);
    return out;
}

std::string QLaurent::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        if (e != 0) {
            mono = "q";
            if (e != 1) mono += "^" + std::to_string(e);
        }
        append_term(out, first, c, mono);
        first = false;
    }
    return out;
}

QTPolynomial qt_weight(long b) {
    if (b < 0) throw std::invalid_argument("qt_weight: negative argument");
    if (b == 0) return QTPolynomial(1);
    QTPolynomial out;
    for (long i = 0; i < b; ++i) out.add_term(static_cast<int>(i), static_cast<int>(b - 1 - i), 1);
    return out;
}

QTPolynomial q_bracket(long k, long base) {
    if (k < 0 || base < 1) throw std::invalid_argument("q_bracket: bad arguments");
    QTPolynomial out;
    for (long i = 0; i < k; ++i) out.add_term(static_cast<int>(i * base), 0, 1);
    return out;
}

QTPolynomial q_factorial(long n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    QTPolynomial out(1);
    for (long k = 1; k <= n; ++k) out *= q_bracket(k);
    return out;
}

QLaurent specialize(const QTPolynomial& p, SpecMode mode) {
    QLaurent out;
    for (const auto& [m, c] : p.terms()) {
        switch (mode) {
            case SpecMode::t_one:
                out.add_term(m.eq, c);
                break;
            case SpecMode::t_zero:
                if (m.et == 0) out.add_term(m.eq, c);
                break;
            case SpecMode::t_qinv:
                out.add_term(m.eq - m.et, c);
                break;
        }
    }
    return out;
}

PolyFlags check_flags(const QTPolynomial& p) { return {p.is_symmetric(), p.is_nonnegative()}; }

SlotValue SlotValue::parse(const std::string& tok) {
    if (tok == "q") return SlotValue::q();
    if (tok == "t") return SlotValue::t();
    try {
        return SlotValue::number(Coeff(tok));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("slot value must be q, t, or an integer: " + tok);
    }
}

QTPolynomial substitute(const QTPolynomial& p, const SlotValue& x, const SlotValue& y) {
    auto image = [](const SlotValue& s) {
        switch (s.kind) {
            case SlotValue::var_q:
                return QTPolynomial::q();
            case SlotValue::var_t:
                return QTPolynomial::t();
            default:
                return QTPolynomial(s.value);
        }
    };
    const QTPolynomial xi = image(x), yi = image(y);
    QTPolynomial out;
    for (const auto& [m, c] : p.terms())
        out += QTPolynomial(c) * xi.pow(static_cast<unsigned>(m.eq)) * yi.pow(static_cast<unsigned>(m.et));
    return out;
}

namespace {

// Shared parser for the polynomial grammar. With allow_t false, "t" is a
// parse error and negative exponents are accepted.
struct Parser {
    const std::string& s;
    size_t i = 0;
    bool allow_t;

    explicit Parser(const std::string& text, bool allow_t_) : s(text), allow_t(allow_t_) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(i) + ": " + what);
    }

    long parse_int() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected integer");
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return std::stol(s.substr(start, i - start));
    }

    Coeff parse_coeff_digits() {
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return Coeff(s.substr(start, i - start));
    }

    // term := coeff? monomial?  (at least one present)
    void parse_term(int sign, QTPolynomial& out) {
        skip_ws();
        Coeff coeff = 1;
        bool have_any = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = parse_coeff_digits();
            have_any = true;
        }
        int eq = 0, et = 0;
        for (;;) {
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i < s.size() && s[i] == 'q') {
                ++i;
                eq = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    eq = static_cast<int>(parse_int());
                }
                have_any = true;
            } else if (allow_t && i < s.size() && s[i] == 't') {
                ++i;
                et = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    et = static_cast<int>(parse_int());
                }
                have_any = true;
            } else {
                break;
            }
        }
        if (!have_any) fail("expected term");
        if (!allow_t && et != 0) fail("unexpected t");
        out.add_term(eq, et, sign < 0 ? Coeff(-coeff) : coeff);
    }

    QTPolynomial parse_poly() {
        QTPolynomial out;
        skip_ws();
        if (s.substr(i) == "0") return out;
        int sign = 1;
        if (i < s.size() && s[i] == '-') {
            sign = -1;
            ++i;
        }
        parse_term(sign, out);
        for (;;) {
            skip_ws();
            if (i >= s.size()) break;
            if (s[i] == '+')
                sign = 1;
            else if (s[i] == '-')
                sign = -1;
            else
                fail("expected + or -");
            ++i;
            parse_term(sign, out);
        }
        return out;
    }
};

}  // namespace

QTPolynomial QTPolynomial::parse(const std::string& text) {
    Parser p(text, /*allow_t=*/true);
    QTPolynomial out = p.parse_poly();
    for (const auto& [m, c] : out.terms())
        if (m.eq < 0 || m.et < 0)
            throw std::invalid_argument("QTPolynomial::parse: negative exponent");
    return out;
}

QLaurent QLaurent::parse(const std::string& text) {
    Parser p(text, /*allow_t=*/false);
    QTPolynomial qt = p.parse_poly();
    QLaurent out;
    for (const auto& [m, c] : qt.terms()) out.add_term(m.eq, c);
    return out;
}

}  // namespace qtflows
