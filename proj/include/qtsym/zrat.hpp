#pragma once

// ZRat: the field of rational functions in q, t, z_1..z_n with integer
// coefficients, n <= kMaxArity. Variable layout inside the underlying MPoly:
// index 0 = q, index 1 = t, index 2+i = z_{i+1}. Canonical form matches
// QTRat: reduced fraction, content 1, positive leading denominator
// coefficient.

#include <utility>
#include <vector>

#include "qtsym/error.hpp"
#include "qtsym/mpoly.hpp"
#include "qtsym/qt_poly.hpp"

namespace qtsym {

class ZRat {
public:
    static constexpr int kMaxArity = 8;

    ZRat() : arity_(0), num_(2), den_(2, 1) {}
    explicit ZRat(int arity) : arity_(checked(arity)), num_(2 + arity), den_(2 + arity, 1) {}
    ZRat(int arity, long c) : arity_(checked(arity)), num_(2 + arity, c), den_(2 + arity, 1) {}
    ZRat(int arity, MPoly n) : arity_(checked(arity)), num_(std::move(n)), den_(2 + arity, 1) {
        check_poly(num_);
    }
    ZRat(int arity, MPoly n, MPoly d) : arity_(checked(arity)), num_(std::move(n)), den_(std::move(d)) {
        check_poly(num_);
        check_poly(den_);
        normalize();
    }

    static ZRat z(int arity, int i) {  // z_i, 1-based
        if (i < 1 || i > arity) throw DomainError("ZRat::z index out of range");
        return ZRat(arity, MPoly::variable(2 + arity, 1 + i));
    }
    static ZRat q(int arity) { return ZRat(arity, MPoly::variable(2 + arity, 0)); }
    static ZRat t(int arity) { return ZRat(arity, MPoly::variable(2 + arity, 1)); }

    /// Embeds an element of Q(q,t).
    static ZRat from_qt(int arity, const QTRat& r) {
        return ZRat(arity, embed(arity, r.num()), embed(arity, r.den()));
    }

    int arity() const { return arity_; }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    friend ZRat operator+(const ZRat& a, const ZRat& b) {
        a.check(b);
        return ZRat(a.arity_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ZRat operator-(const ZRat& a, const ZRat& b) {
        a.check(b);
        return ZRat(a.arity_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ZRat operator*(const ZRat& a, const ZRat& b) {
        a.check(b);
        return ZRat(a.arity_, a.num_ * b.num_, a.den_ * b.den_);
    }
    friend ZRat operator/(const ZRat& a, const ZRat& b) {
        a.check(b);
        if (b.is_zero()) throw ArithmeticError("ZRat division by zero");
        return ZRat(a.arity_, a.num_ * b.den_, a.den_ * b.num_);
    }
    ZRat operator-() const {
        ZRat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    ZRat& operator+=(const ZRat& o) { return *this = *this + o; }
    ZRat& operator-=(const ZRat& o) { return *this = *this - o; }
    ZRat& operator*=(const ZRat& o) { return *this = *this * o; }
    ZRat& operator/=(const ZRat& o) { return *this = *this / o; }

    friend bool operator==(const ZRat& a, const ZRat& b) {
        return a.arity_ == b.arity_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ZRat& a, const ZRat& b) { return !(a == b); }

    ZRat pow(int n) const {
        if (n < 0) {
            if (is_zero()) throw ArithmeticError("ZRat inverse of zero");
            return ZRat(arity_, den_, num_).pow(-n);
        }
        ZRat r(arity_, 1), base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    /// Swaps z_i and z_j (1-based).
    ZRat z_swapped(int i, int j) const {
        return ZRat(arity_, num_.swapped(1 + i, 1 + j), den_.swapped(1 + i, 1 + j));
    }

    /// q -> q^k, t -> t^k, z_i -> z_i^k (the power-sum image of a scalar).
    ZRat powers_substituted(int k) const {
        return ZRat(arity_, num_.exponents_scaled(k), den_.exponents_scaled(k));
    }

    /// Substitutes z_i -> assignment[i-1] in Q(q,t); throws on a pole.
    QTRat substituted(const std::vector<QTRat>& assignment) const {
        if (static_cast<int>(assignment.size()) != arity_)
            throw DomainError("ZRat substitution arity mismatch");
        std::vector<QTRat> values;
        values.reserve(static_cast<size_t>(2 + arity_));
        values.push_back(QTRat::q());
        values.push_back(QTRat::t());
        for (const auto& a : assignment) values.push_back(a);
        QTRat d = den_.substituted(values);
        if (d.is_zero()) throw ArithmeticError("pole under z-substitution");
        return num_.substituted(values) / d;
    }

    Rat eval(const Rat& q0, const Rat& t0, const std::vector<Rat>& zs) const {
        if (static_cast<int>(zs.size()) != arity_) throw DomainError("ZRat eval arity mismatch");
        std::vector<Rat> values;
        values.push_back(q0);
        values.push_back(t0);
        for (const auto& z : zs) values.push_back(z);
        Rat d = den_.eval(values);
        if (d == 0) throw ArithmeticError("pole under rational evaluation");
        return num_.eval(values) / d;
    }

    std::string str() const {
        std::vector<std::string> names = {"q", "t"};
        for (int i = 1; i <= arity_; ++i) names.push_back("z" + std::to_string(i));
        if (den_ == MPoly(2 + arity_, 1)) return num_.str(names);
        std::string n = num_.str(names), d = den_.str(names);
        if (num_.terms().size() > 1) n = "(" + n + ")";
        if (den_.terms().size() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    static int checked(int arity) {
        if (arity < 0 || arity > kMaxArity) throw DomainError("ZRat arity out of range");
        return arity;
    }
    void check(const ZRat& o) const {
        if (arity_ != o.arity_) throw DomainError("ZRat arity mismatch");
    }
    void check_poly(const MPoly& p) const {
        if (p.nvars() != 2 + arity_) throw DomainError("ZRat polynomial arity mismatch");
    }

    static MPoly embed(int arity, const QTPoly& p) {
        MPoly r(2 + arity);
        for (const auto& [e, c] : p.terms()) {
            MPoly::Exp ne(static_cast<size_t>(2 + arity), 0);
            ne[0] = e[0];
            ne[1] = e[1];
            r.add_term(std::move(ne), c);
        }
        return r;
    }

    void normalize() {
        if (den_.is_zero()) throw ArithmeticError("ZRat zero denominator");
        if (num_.is_zero()) {
            den_ = MPoly(2 + arity_, 1);
            return;
        }
        MPoly g = qtsym::gcd(num_, den_);
        if (!(g.is_constant() && g.content() == 1)) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
        Int c = qtsym::gcd(num_.content(), den_.content());
        if (c > 1) {
            num_ = divexact(num_, MPoly(2 + arity_, c));
            den_ = divexact(den_, MPoly(2 + arity_, c));
        }
        if (den_.leading_coeff() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    int arity_;
    MPoly num_, den_;
};

}  // namespace qtsym
