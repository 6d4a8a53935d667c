#pragma once

// Exact arithmetic in Z[q,t] and its fraction field Q(q,t).
//
// QTPoly is a sparse bivariate polynomial with big-integer coefficients.
// QTRat is a canonical fraction of two QTPoly: gcd(num, den) is a unit,
// the pair has integer content 1, and the lexicographically leading
// coefficient of the denominator is positive. Equal values therefore have
// identical representations, so operator== is structural.

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qtsym/error.hpp"
#include "qtsym/ints.hpp"

namespace qtsym {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Int: the recursion base for gcd work and
// the carrier for one-variable limits (t = q^e followed by q -> 1).
// ---------------------------------------------------------------------------

using UPoly = std::vector<Int>;  // coefficient of x^i at index i, no trailing zeros

namespace upoly {

inline void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool is_zero(const UPoly& p) { return p.empty(); }
inline int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    trim(r);
    return r;
}

inline UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    trim(r);
    return r;
}

inline UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline UPoly scale(const UPoly& a, const Int& c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline Int content(const UPoly& a) {
    Int g = 0;
    for (const auto& c : a) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

inline UPoly divide_content(const UPoly& a, const Int& g) {
    if (g == 1) return a;
    UPoly r = a;
    for (auto& x : r) x /= g;
    return r;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
inline UPoly prem(UPoly a, const UPoly& b) {
    const int db = degree(b);
    const Int& lb = b.back();
    while (!a.empty() && degree(a) >= db) {
        const int shift = degree(a) - db;
        const Int la = a.back();
        for (auto& x : a) x *= lb;
        for (int i = 0; i <= db; ++i) a[static_cast<size_t>(i + shift)] -= la * b[static_cast<size_t>(i)];
        trim(a);
    }
    return a;
}

// gcd over Z[x], primitive PRS. Result is primitive with positive leading
// coefficient up to the shared integer content.
inline UPoly gcd(UPoly a, UPoly b) {
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    Int ca = content(a), cb = content(b);
    Int cg = qtsym::gcd(ca, cb);
    a = divide_content(a, ca);
    b = divide_content(b, cb);
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!is_zero(b)) {
        UPoly r = prem(a, b);
        a = std::move(b);
        Int cr = content(r);
        b = cr == 0 ? UPoly{} : divide_content(r, cr);
    }
    if (a.back() < 0)
        for (auto& x : a) x = -x;
    for (auto& x : a) x *= cg;
    return a;
}

// Exact division (throws if not exact).
inline UPoly divexact(UPoly a, const UPoly& b) {
    if (is_zero(b)) throw ArithmeticError("univariate division by zero");
    if (is_zero(a)) return {};
    const int db = degree(b);
    if (degree(a) < db) throw ConsistencyError("univariate division not exact");
    UPoly q(static_cast<size_t>(degree(a) - db) + 1);
    while (!is_zero(a)) {
        const int da = degree(a);
        if (da < db) throw ConsistencyError("univariate division not exact");
        Int c = a.back() / b.back();
        if (c * b.back() != a.back()) throw ConsistencyError("univariate division not exact");
        q[static_cast<size_t>(da - db)] = c;
        for (int i = 0; i <= db; ++i) a[static_cast<size_t>(da - db + i)] -= c * b[static_cast<size_t>(i)];
        trim(a);
    }
    return q;
}

inline Rat eval(const UPoly& p, const Rat& x) {
    Rat r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + Rat(*it);
    return r;
}

inline Int eval_at_one(const UPoly& p) {
    Int s = 0;
    for (const auto& c : p) s += c;
    return s;
}

// Synthetic division by (x - 1); requires p(1) == 0.
inline UPoly divide_by_x_minus_1(const UPoly& p) {
    if (is_zero(p)) return {};
    UPoly q(p.size() - 1);
    Int carry = 0;
    for (size_t i = p.size(); i-- > 1;) {
        carry += p[i];
        q[i - 1] = carry;
    }
    if (carry + p[0] != 0) throw ConsistencyError("polynomial does not vanish at 1");
    return q;
}

}  // namespace upoly

// ---------------------------------------------------------------------------
// QTPoly
// ---------------------------------------------------------------------------

class QTPoly {
public:
    using Exp = std::array<int32_t, 2>;  // (q-degree, t-degree)
    using TermMap = std::map<Exp, Int>;

    QTPoly() = default;
    QTPoly(long c) { if (c != 0) terms_[{0, 0}] = c; }  // NOLINT: implicit by design
    QTPoly(const Int& c) { if (c != 0) terms_[{0, 0}] = c; }  // NOLINT

    static QTPoly monomial(const Int& c, int qdeg, int tdeg) {
        QTPoly p;
        if (c != 0) {
            if (qdeg < 0 || tdeg < 0) throw DomainError("QTPoly exponents must be nonnegative");
            p.terms_[{qdeg, tdeg}] = c;
        }
        return p;
    }
    static QTPoly q() { return monomial(1, 1, 0); }
    static QTPoly t() { return monomial(1, 0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0} && terms_.begin()->second == 1;
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
    }
    bool is_monomial() const { return terms_.size() == 1; }

    int qdegree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[0]));
        return d;
    }
    int tdegree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[1]));
        return d;
    }

    // Leading coefficient under the (q-degree, t-degree) lexicographic order.
    const Int& leading_coeff() const {
        static const Int zero = 0;
        if (terms_.empty()) return zero;
        return terms_.rbegin()->second;
    }

    void add_term(int qdeg, int tdeg, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({qdeg, tdeg}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    QTPoly operator-() const {
        QTPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    QTPoly& operator+=(const QTPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e[0], e[1], c);
        return *this;
    }
    QTPoly& operator-=(const QTPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e[0], e[1], -c);
        return *this;
    }
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }

    friend QTPoly operator*(const QTPoly& a, const QTPoly& b) {
        QTPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea[0] + eb[0], ea[1] + eb[1], ca * cb);
        return r;
    }
    QTPoly& operator*=(const QTPoly& o) { return *this = *this * o; }

    QTPoly& operator*=(const Int& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend bool operator==(const QTPoly& a, const QTPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QTPoly& a, const QTPoly& b) { return !(a == b); }
    friend bool operator<(const QTPoly& a, const QTPoly& b) { return a.terms_ < b.terms_; }

    QTPoly pow(int n) const {
        if (n < 0) throw DomainError("QTPoly::pow negative exponent");
        QTPoly r(1), base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    Int content() const {
        Int g = 0;
        for (const auto& [e, c] : terms_) {
            g = qtsym::gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    Rat eval(const Rat& q0, const Rat& t0) const {
        Rat s = 0;
        for (const auto& [e, c] : terms_) {
            Rat m(c);
            for (int i = 0; i < e[0]; ++i) m *= q0;
            for (int i = 0; i < e[1]; ++i) m *= t0;
            s += m;
        }
        return s;
    }

    /// p(q,t) -> p(q^k, t^k).
    QTPoly substitute_powers(int k) const {
        if (k <= 0) throw DomainError("substitute_powers needs k >= 1");
        QTPoly r;
        for (const auto& [e, c] : terms_) r.terms_[{e[0] * k, e[1] * k}] = c;
        return r;
    }

    /// Partial substitution t -> t0 (exact rational), leaving a polynomial in
    /// q with rational coefficients represented over a common denominator.
    std::pair<UPoly, Int> substitute_t(const Rat& t0) const {
        Int den = 1;
        for (const auto& [e, c] : terms_) {
            Int d = 1;
            for (int i = 0; i < e[1]; ++i) d *= t0.get_den();
            den = den / qtsym::gcd(den, d) * d;
        }
        UPoly r;
        for (const auto& [e, c] : terms_) {
            Int v = c;
            for (int i = 0; i < e[1]; ++i) v *= t0.get_num();
            Int d = 1;
            for (int i = 0; i < e[1]; ++i) d *= t0.get_den();
            v *= den / d;
            if (r.size() <= static_cast<size_t>(e[0])) r.resize(static_cast<size_t>(e[0]) + 1);
            r[static_cast<size_t>(e[0])] += v;
        }
        upoly::trim(r);
        return {r, den};
    }

    /// Substitution t = q^e, producing a univariate polynomial in q.
    UPoly substitute_t_eq_q_power(int e) const {
        UPoly r;
        for (const auto& [ex, c] : terms_) {
            const size_t deg = static_cast<size_t>(ex[0] + e * ex[1]);
            if (r.size() <= deg) r.resize(deg + 1);
            r[deg] += c;
        }
        upoly::trim(r);
        return r;
    }

    QTPoly swap_qt() const {
        QTPoly r;
        for (const auto& [e, c] : terms_) r.terms_[{e[1], e[0]}] = c;
        return r;
    }

    /// q^A t^B * p(1/q, 1/t) where A, B are the maximal degrees: the
    /// coefficient-reversal used to implement the q,t-inversion on fractions.
    QTPoly reversed(int qmax, int tmax) const {
        QTPoly r;
        for (const auto& [e, c] : terms_) {
            if (e[0] > qmax || e[1] > tmax) throw ConsistencyError("reversed: degree bound too small");
            r.terms_[{qmax - e[0], tmax - e[1]}] = c;
        }
        return r;
    }

    std::string str() const;

private:
    TermMap terms_;
};

namespace detail {

// Bivariate gcd via primitive PRS on (Z[q])[t].
using TQPoly = std::map<int, UPoly>;  // t-exponent -> coefficient in Z[q]

inline TQPoly to_tq(const QTPoly& p) {
    TQPoly r;
    for (const auto& [e, c] : p.terms()) {
        UPoly& u = r[e[1]];
        if (u.size() <= static_cast<size_t>(e[0])) u.resize(static_cast<size_t>(e[0]) + 1);
        u[static_cast<size_t>(e[0])] += c;
    }
    for (auto it = r.begin(); it != r.end();) {
        upoly::trim(it->second);
        it = it->second.empty() ? r.erase(it) : std::next(it);
    }
    return r;
}

inline QTPoly from_tq(const TQPoly& p) {
    QTPoly r;
    for (const auto& [td, u] : p)
        for (size_t i = 0; i < u.size(); ++i)
            if (u[i] != 0) r.add_term(static_cast<int>(i), td, u[i]);
    return r;
}

inline int tq_degree(const TQPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }

inline UPoly tq_content(const TQPoly& p) {
    UPoly g;
    for (const auto& [td, u] : p) g = upoly::gcd(g, u);
    return g;
}

inline TQPoly tq_divide_by(const TQPoly& p, const UPoly& g) {
    TQPoly r;
    for (const auto& [td, u] : p) r[td] = upoly::divexact(u, g);
    return r;
}

inline TQPoly tq_scale(const TQPoly& p, const UPoly& g) {
    TQPoly r;
    for (const auto& [td, u] : p) r[td] = upoly::mul(u, g);
    return r;
}

inline TQPoly tq_sub(const TQPoly& a, const TQPoly& b) {
    TQPoly r = a;
    for (const auto& [td, u] : b) {
        UPoly s = upoly::sub(r.count(td) ? r[td] : UPoly{}, u);
        if (s.empty()) r.erase(td);
        else r[td] = std::move(s);
    }
    return r;
}

// Pseudo-remainder in (Z[q])[t].
inline TQPoly tq_prem(TQPoly a, const TQPoly& b) {
    const int db = tq_degree(b);
    const UPoly& lb = b.rbegin()->second;
    while (tq_degree(a) >= db) {
        const int shift = tq_degree(a) - db;
        UPoly la = a.rbegin()->second;
        a = tq_scale(a, lb);
        TQPoly sub_part;
        for (const auto& [td, u] : b) sub_part[td + shift] = upoly::mul(u, la);
        a = tq_sub(a, sub_part);
    }
    return a;
}

}  // namespace detail

/// gcd over Z[q,t]; primitive, lexicographically-leading coefficient positive.
inline QTPoly gcd(const QTPoly& a, const QTPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) {
        Int g = qtsym::gcd(a.content(), b.content());
        return QTPoly(g);
    }
    detail::TQPoly pa = detail::to_tq(a), pb = detail::to_tq(b);
    UPoly ca = detail::tq_content(pa), cb = detail::tq_content(pb);
    UPoly cg = upoly::gcd(ca, cb);
    pa = detail::tq_divide_by(pa, ca);
    pb = detail::tq_divide_by(pb, cb);
    if (detail::tq_degree(pa) < detail::tq_degree(pb)) std::swap(pa, pb);
    while (!pb.empty()) {
        detail::TQPoly r = detail::tq_prem(pa, pb);
        pa = std::move(pb);
        if (r.empty()) { pb = {}; break; }
        UPoly cr = detail::tq_content(r);
        pb = detail::tq_divide_by(r, cr);
    }
    UPoly cpa = detail::tq_content(pa);
    pa = detail::tq_divide_by(pa, cpa);
    detail::TQPoly cgp;
    cgp[0] = cg;  // restore shared content
    QTPoly result = detail::from_tq(pa) * detail::from_tq(cgp);
    if (result.leading_coeff() < 0) result = -result;
    return result;
}

/// Exact division in Z[q,t]; throws ConsistencyError if not exact.
inline QTPoly divexact(const QTPoly& a, const QTPoly& b) {
    if (b.is_zero()) throw ArithmeticError("QTPoly division by zero");
    if (a.is_zero()) return {};
    QTPoly rem = a, quot;
    // long division along the lexicographic leading term
    const auto& bt = *b.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rt = *rem.terms().rbegin();
        int dq = rt.first[0] - bt.first[0], dt = rt.first[1] - bt.first[1];
        if (dq < 0 || dt < 0) throw ConsistencyError("QTPoly division not exact");
        Int c = rt.second / bt.second;
        if (c * bt.second != rt.second) throw ConsistencyError("QTPoly division not exact");
        QTPoly m = QTPoly::monomial(c, dq, dt);
        quot += m;
        rem -= m * b;
    }
    return quot;
}

// ---------------------------------------------------------------------------
// QTRat
// ---------------------------------------------------------------------------

class QTRat {
public:
    QTRat() : num_(), den_(1) {}
    QTRat(long c) : num_(c), den_(1) {}             // NOLINT
    QTRat(const Int& c) : num_(c), den_(1) {}       // NOLINT
    QTRat(const Rat& r) : num_(r.get_num()), den_(r.get_den()) {}  // NOLINT
    QTRat(QTPoly n) : num_(std::move(n)), den_(1) {}  // NOLINT
    QTRat(QTPoly n, QTPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static QTRat q() { return QTRat(QTPoly::q()); }
    static QTRat t() { return QTRat(QTPoly::t()); }
    /// c * q^a t^b with possibly negative exponents.
    static QTRat laurent(const Int& c, int qdeg, int tdeg) {
        QTPoly n = QTPoly::monomial(c, std::max(qdeg, 0), std::max(tdeg, 0));
        QTPoly d = QTPoly::monomial(1, std::max(-qdeg, 0), std::max(-tdeg, 0));
        return QTRat(std::move(n), std::move(d));
    }

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_integer() const { return den_.is_one() && num_.is_constant(); }
    /// True when the denominator is a monomial q^a t^b (Laurent polynomial).
    bool is_laurent() const { return den_.is_monomial(); }

    friend QTRat operator+(const QTRat& a, const QTRat& b) {
        return QTRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QTRat operator-(const QTRat& a, const QTRat& b) {
        return QTRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QTRat operator*(const QTRat& a, const QTRat& b) {
        return QTRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QTRat operator/(const QTRat& a, const QTRat& b) {
        if (b.is_zero()) throw ArithmeticError("division by zero in Q(q,t)");
        return QTRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    QTRat operator-() const {
        QTRat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    QTRat& operator+=(const QTRat& o) { return *this = *this + o; }
    QTRat& operator-=(const QTRat& o) { return *this = *this - o; }
    QTRat& operator*=(const QTRat& o) { return *this = *this * o; }
    QTRat& operator/=(const QTRat& o) { return *this = *this / o; }

    friend bool operator==(const QTRat& a, const QTRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QTRat& a, const QTRat& b) { return !(a == b); }
    friend bool operator<(const QTRat& a, const QTRat& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    QTRat inverse() const {
        if (is_zero()) throw ArithmeticError("inverse of zero in Q(q,t)");
        return QTRat(den_, num_);
    }

    QTRat pow(int n) const {
        if (n < 0) return inverse().pow(-n);
        QTRat r(1), base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    /// Exact evaluation; throws ArithmeticError on a pole.
    Rat eval(const Rat& q0, const Rat& t0) const {
        Rat d = den_.eval(q0, t0);
        if (d == 0) throw ArithmeticError("pole of Q(q,t) element at evaluation point");
        return num_.eval(q0, t0) / d;
    }

    /// f(q,t) -> f(q^k, t^k).
    QTRat substitute_powers(int k) const {
        QTRat r;
        r.num_ = num_.substitute_powers(k);
        r.den_ = den_.substitute_powers(k);
        r.normalize();
        return r;
    }

    /// The q,t-inversion f(q,t) -> f(1/q, 1/t), canonicalized.
    QTRat reversed() const {
        int qn = num_.qdegree(), tn = num_.tdegree();
        int qd = den_.qdegree(), td = den_.tdegree();
        QTPoly n = num_.reversed(qn, tn);
        QTPoly d = den_.reversed(qd, td);
        // adjust by the monomial q^(qd-qn) t^(td-tn)
        QTRat mono = QTRat::laurent(1, qd - qn, td - tn);
        return QTRat(std::move(n), std::move(d)) * mono;
    }

    QTRat swap_qt() const { return QTRat(num_.swap_qt(), den_.swap_qt()); }

    /// Exact limit along t = q^e as q -> 1. Cancels (q-1) factors after the
    /// one-variable restriction; throws ArithmeticError on a genuine pole.
    Rat limit_qt1(int e = 1) const {
        UPoly n = num_.substitute_t_eq_q_power(e);
        UPoly d = den_.substitute_t_eq_q_power(e);
        if (upoly::is_zero(d)) throw ArithmeticError("zero denominator after t = q^e restriction");
        UPoly g = upoly::gcd(n, d);
        if (!upoly::is_zero(n)) {
            n = upoly::divexact(n, g);
            d = upoly::divexact(d, g);
        }
        Int dv = upoly::eval_at_one(d);
        Int nv = upoly::eval_at_one(n);
        while (dv == 0 && nv == 0) {
            n = upoly::divide_by_x_minus_1(n);
            d = upoly::divide_by_x_minus_1(d);
            dv = upoly::eval_at_one(d);
            nv = upoly::eval_at_one(n);
        }
        if (dv == 0) throw ArithmeticError("pole at q = t = 1");
        return Rat(nv) / Rat(dv);
    }

    /// Partial substitution t -> t0, returning a univariate rational function
    /// in q as a canonical QTRat that only involves q.
    QTRat substitute_t(const Rat& t0) const {
        auto [n, nden] = num_.substitute_t(t0);
        auto [d, dden] = den_.substitute_t(t0);
        QTPoly np, dp;
        for (size_t i = 0; i < n.size(); ++i)
            if (n[i] != 0) np.add_term(static_cast<int>(i), 0, n[i] * dden);
        for (size_t i = 0; i < d.size(); ++i)
            if (d[i] != 0) dp.add_term(static_cast<int>(i), 0, d[i] * nden);
        return QTRat(std::move(np), std::move(dp));
    }

    std::string str() const;

private:
    void normalize() {
        if (den_.is_zero()) throw ArithmeticError("zero denominator in Q(q,t)");
        if (num_.is_zero()) {
            den_ = QTPoly(1);
            return;
        }
        QTPoly g = qtsym::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
        Int c = qtsym::gcd(num_.content(), den_.content());
        if (c > 1) {
            num_ = divexact(num_, QTPoly(c));
            den_ = divexact(den_, QTPoly(c));
        }
        if (den_.leading_coeff() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    QTPoly num_, den_;
};

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

inline std::string QTPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // terms ordered by (q-degree, t-degree)
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        if (e[0] > 0) vars += "q" + (e[0] > 1 ? "^" + std::to_string(e[0]) : "");
        if (e[1] > 0) {
            if (!vars.empty()) vars += "*";
            vars += "t" + (e[1] > 1 ? "^" + std::to_string(e[1]) : "");
        }
        if (vars.empty()) os << a.get_str();
        else if (a == 1) os << vars;
        else os << a.get_str() << "*" << vars;
    }
    return os.str();
}

inline std::string QTRat::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str(), d = den_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    if (den_.terms().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

/// Convenience builders used throughout: M = (1-q)(1-t).
inline QTRat qt_M() {
    return QTRat((QTPoly(1) - QTPoly::q()) * (QTPoly(1) - QTPoly::t()));
}

}  // namespace qtsym
