#ifndef QTFLOWS_POLY_HPP
#define QTFLOWS_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qtflows {

using Coeff = mpz_class;

/// Exponent pair of a monomial q^eq * t^et. Ordered for canonical
/// serialization: descending total degree, then descending eq.
struct Monomial {
    int eq = 0;
    int et = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.eq + a.et, db = b.eq + b.et;
        if (da != db) return da > db;
        return a.eq > b.eq;
    }
};

/// Sparse bivariate polynomial in q and t with unbounded integer
/// coefficients. Zero coefficients are never stored, so operator== on the
/// term table is exact polynomial equality.
class QTPolynomial {
public:
    using Terms = std::map<Monomial, Coeff, MonomialOrder>;

    QTPolynomial() = default;
    QTPolynomial(long c) { add_term(0, 0, Coeff(c)); }
    explicit QTPolynomial(Coeff c) { add_term(0, 0, std::move(c)); }

    static QTPolynomial monomial(Coeff c, int eq, int et);
    static QTPolynomial q();
    static QTPolynomial t();

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Coeff coeff(int eq, int et) const;
    int total_degree() const;  // -1 for the zero polynomial

    void add_term(int eq, int et, const Coeff& c);

    QTPolynomial& operator+=(const QTPolynomial& rhs);
    QTPolynomial& operator-=(const QTPolynomial& rhs);
    friend QTPolynomial operator+(QTPolynomial lhs, const QTPolynomial& rhs);
    friend QTPolynomial operator-(QTPolynomial lhs, const QTPolynomial& rhs);
    friend QTPolynomial operator*(const QTPolynomial& lhs, const QTPolynomial& rhs);
    QTPolynomial& operator*=(const QTPolynomial& rhs);
    QTPolynomial operator-() const;
    QTPolynomial pow(unsigned e) const;

    friend bool operator==(const QTPolynomial&, const QTPolynomial&) = default;

    /// q <-> t exponent swap.
    QTPolynomial swap_qt() const;

    /// Sum of all coefficients, i.e. the evaluation at q = t = 1.
    Coeff eval_one_one() const;

    bool is_symmetric() const;
    /// True when every stored coefficient is positive (zero counts as
    /// nonnegative).
    bool is_nonnegative() const;

    /// Canonical text form per the polynomial grammar, e.g.
    /// "q^3*t + 2*q^2*t^2 - 3*q^3 - 1".
    std::string str() const;
    static QTPolynomial parse(const std::string& text);

private:
    Terms terms_;
};

/// Sparse Laurent polynomial in q alone; exponents may be negative.
class QLaurent {
public:
    using Terms = std::map<int, Coeff, std::greater<int>>;

    QLaurent() = default;
    QLaurent(long c) { add_term(0, Coeff(c)); }
    explicit QLaurent(Coeff c) { add_term(0, std::move(c)); }

    static QLaurent q_power(int e);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Coeff coeff(int e) const;
    int min_exponent() const;  // 0 for the zero polynomial

    void add_term(int e, const Coeff& c);

    QLaurent& operator+=(const QLaurent& rhs);
    QLaurent& operator-=(const QLaurent& rhs);
    friend QLaurent operator+(QLaurent lhs, const QLaurent& rhs);
    friend QLaurent operator-(QLaurent lhs, const QLaurent& rhs);
    friend QLaurent operator*(const QLaurent& lhs, const QLaurent& rhs);
    QLaurent& operator*=(const QLaurent& rhs);
    QLaurent operator-() const;

    friend bool operator==(const QLaurent&, const QLaurent&) = default;

    /// All exponents >= 0, so the value converts losslessly to a
    /// univariate QTPolynomial.
    bool is_polynomial() const;
    QTPolynomial to_qt() const;  // throws std::domain_error on negative exponents

    std::string str() const;
    static QLaurent parse(const std::string& text);

private:
    Terms terms_;
};

/// wt_{q,t}(b) = (q^b - t^b)/(q - t) for b > 0, i.e. sum_{i<b} q^i t^{b-1-i};
/// 1 for b = 0.
QTPolynomial qt_weight(long b);

/// [k]_{q^base} = sum_{i<k} q^{i*base}; [0] = 0.
QTPolynomial q_bracket(long k, long base = 1);

/// [n]_q! = [n]_q [n-1]_q ... [1]_q; [0]_q! = 1.
QTPolynomial q_factorial(long n);

enum class SpecMode { t_one, t_zero, t_qinv };

/// Substitutes t := 1, t := 0 or t := q^{-1} term by term.
QLaurent specialize(const QTPolynomial& p, SpecMode mode);

struct PolyFlags {
    bool symmetric;
    bool nonnegative;
};

PolyFlags check_flags(const QTPolynomial& p);

/// Value for one of the two variable slots under substitution: keep q,
/// keep t, or a constant.
struct SlotValue {
    enum Kind { var_q, var_t, constant } kind = var_q;
    Coeff value;

    static SlotValue q() { return {var_q, 0}; }
    static SlotValue t() { return {var_t, 0}; }
    static SlotValue number(Coeff v) { return {constant, std::move(v)}; }
    static SlotValue parse(const std::string& tok);
};

/// Substitutes the q slot by x and the t slot by y.
QTPolynomial substitute(const QTPolynomial& p, const SlotValue& x, const SlotValue& y);

}  // namespace qtflows

#endif
