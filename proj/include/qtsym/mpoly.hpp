#pragma once

// Sparse multivariate polynomials over Int, used for the calculus in the
// adjoined variables z_1..z_n (with q and t as the first two variables when
// needed). Supports exact division, variable permutation, substitution into
// Q(q,t), and a content-recursive primitive-PRS gcd. Intended for small
// arities; the fraction type ZRat below caps arity by construction.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qtsym/error.hpp"
#include "qtsym/ints.hpp"
#include "qtsym/qt_poly.hpp"

namespace qtsym {

class MPoly {
public:
    using Exp = std::vector<int32_t>;
    using TermMap = std::map<Exp, Int>;

    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}
    MPoly(int nvars, const Int& c) : nvars_(nvars) {
        if (c != 0) terms_[Exp(static_cast<size_t>(nvars), 0)] = c;
    }

    static MPoly variable(int nvars, int i, int power = 1) {
        if (i < 0 || i >= nvars) throw DomainError("MPoly::variable index out of range");
        MPoly p(nvars);
        Exp e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(i)] = power;
        p.terms_[std::move(e)] = 1;
        return p;
    }

    static MPoly monomial(int nvars, Exp e, const Int& c) {
        MPoly p(nvars);
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        for (int32_t e : terms_.begin()->first)
            if (e != 0) return false;
        return true;
    }

    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int32_t x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    int degree_in(int i) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<size_t>(i)]));
        return d;
    }

    void add_term(Exp e, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    MPoly& operator+=(const MPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_arity(b);
        MPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exp e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& operator*=(const Int& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
    friend bool operator<(const MPoly& a, const MPoly& b) {
        if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
        return a.terms_ < b.terms_;
    }

    Int content() const {
        Int g = 0;
        for (const auto& [e, c] : terms_) {
            g = qtsym::gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    /// Leading coefficient in the graded-lex term order used by the maps.
    const Int& leading_coeff() const {
        static const Int zero = 0;
        if (terms_.empty()) return zero;
        return terms_.rbegin()->second;
    }

    MPoly pow(int n) const {
        if (n < 0) throw DomainError("MPoly::pow negative exponent");
        MPoly r(nvars_, 1), base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    /// Applies a permutation of the variables: new exponent of variable
    /// perm[i] is the old exponent of variable i.
    MPoly permuted(const std::vector<int>& perm) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Exp ne(static_cast<size_t>(nvars_), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[static_cast<size_t>(perm[i])] = e[i];
            r.terms_[std::move(ne)] = c;
        }
        return r;
    }

    MPoly swapped(int i, int j) const {
        std::vector<int> perm(static_cast<size_t>(nvars_));
        for (int v = 0; v < nvars_; ++v) perm[static_cast<size_t>(v)] = v;
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
        return permuted(perm);
    }

    /// Raises every variable to the k-th power (exponent scaling).
    MPoly exponents_scaled(int k) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Exp ne = e;
            for (auto& x : ne) x *= k;
            r.terms_[std::move(ne)] = c;
        }
        return r;
    }

    /// Substitutes a QTRat for every variable. values[i] may be any element
    /// of Q(q,t).
    QTRat substituted(const std::vector<QTRat>& values) const {
        if (static_cast<int>(values.size()) != nvars_)
            throw DomainError("MPoly::substituted arity mismatch");
        QTRat s(0);
        for (const auto& [e, c] : terms_) {
            QTRat m{QTPoly(c)};
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) m *= values[i].pow(e[i]);
            s += m;
        }
        return s;
    }

    Rat eval(const std::vector<Rat>& values) const {
        if (static_cast<int>(values.size()) != nvars_)
            throw DomainError("MPoly::eval arity mismatch");
        Rat s = 0;
        for (const auto& [e, c] : terms_) {
            Rat m(c);
            for (size_t i = 0; i < e.size(); ++i)
                for (int32_t k = 0; k < e[i]; ++k) m *= values[i];
            s += m;
        }
        return s;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
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
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += names[i];
                if (e[i] > 1) vars += "^" + std::to_string(e[i]);
            }
            if (vars.empty()) os << a.get_str();
            else if (a == 1) os << vars;
            else os << a.get_str() << "*" << vars;
        }
        return os.str();
    }

private:
    void check_arity(const MPoly& o) const {
        if (nvars_ != o.nvars_) throw DomainError("MPoly arity mismatch");
    }

    int nvars_;
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Exact division and gcd
// ---------------------------------------------------------------------------

/// Exact division; throws ConsistencyError when the division does not come
/// out exact (used as a tripwire after algebraically-guaranteed divisions).
inline MPoly divexact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw ArithmeticError("MPoly division by zero");
    MPoly rem = a, quot(a.nvars());
    const auto& bl = *b.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms().rbegin();
        MPoly::Exp e = rl.first;
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] -= bl.first[i];
            if (e[i] < 0) throw ConsistencyError("MPoly division not exact (exponent)");
        }
        Int c = rl.second / bl.second;
        if (c * bl.second != rl.second) throw ConsistencyError("MPoly division not exact (coefficient)");
        MPoly m = MPoly::monomial(a.nvars(), std::move(e), c);
        quot += m;
        rem -= m * b;
    }
    return quot;
}

namespace detail {

// Recursive dense-in-main-variable view for the PRS gcd.
using RecPoly = std::map<int, MPoly>;  // exponent of main var -> coefficient poly

inline RecPoly to_rec(const MPoly& p, int var) {
    RecPoly r;
    for (const auto& [e, c] : p.terms()) {
        MPoly::Exp rest = e;
        int d = rest[static_cast<size_t>(var)];
        rest[static_cast<size_t>(var)] = 0;
        auto it = r.find(d);
        if (it == r.end()) it = r.emplace(d, MPoly(p.nvars())).first;
        it->second.add_term(std::move(rest), c);
    }
    return r;
}

inline MPoly from_rec(const RecPoly& r, int var, int nvars) {
    MPoly p(nvars);
    for (const auto& [d, coeff] : r)
        for (const auto& [e, c] : coeff.terms()) {
            MPoly::Exp ne = e;
            ne[static_cast<size_t>(var)] = d;
            p.add_term(std::move(ne), c);
        }
    return p;
}

inline int rec_degree(const RecPoly& r) { return r.empty() ? -1 : r.rbegin()->first; }

MPoly mgcd(const MPoly& a, const MPoly& b);

inline MPoly rec_content(const RecPoly& r) {
    MPoly g;
    bool first = true;
    for (const auto& [d, coeff] : r) {
        g = first ? coeff : mgcd(g, coeff);
        first = false;
    }
    return g;
}

inline RecPoly rec_divide(const RecPoly& r, const MPoly& g) {
    RecPoly out;
    for (const auto& [d, coeff] : r) out[d] = divexact(coeff, g);
    return out;
}

inline RecPoly rec_sub(const RecPoly& a, const RecPoly& b) {
    RecPoly r = a;
    for (const auto& [d, coeff] : b) {
        auto it = r.find(d);
        if (it == r.end()) r[d] = -coeff;
        else {
            it->second -= coeff;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

inline RecPoly rec_prem(RecPoly a, const RecPoly& b) {
    const int db = rec_degree(b);
    const MPoly& lb = b.rbegin()->second;
    while (rec_degree(a) >= db) {
        const int shift = rec_degree(a) - db;
        MPoly la = a.rbegin()->second;
        for (auto& [d, coeff] : a) coeff *= lb;
        RecPoly sub_part;
        for (const auto& [d, coeff] : b) sub_part[d + shift] = coeff * la;
        a = rec_sub(a, sub_part);
    }
    return a;
}

inline MPoly mgcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant())
        return MPoly(a.nvars(), qtsym::gcd(a.content(), b.content()));

    // main variable: one of highest degree occurring in both, else content split
    int var = -1;
    for (int v = 0; v < a.nvars(); ++v)
        if (a.degree_in(v) > 0 && b.degree_in(v) > 0) { var = v; break; }
    if (var < 0) {
        // no shared variable: gcd of contents only
        return MPoly(a.nvars(), qtsym::gcd(a.content(), b.content()));
    }

    RecPoly pa = to_rec(a, var), pb = to_rec(b, var);
    MPoly ca = rec_content(pa), cb = rec_content(pb);
    MPoly cg = mgcd(ca, cb);
    pa = rec_divide(pa, ca);
    pb = rec_divide(pb, cb);
    if (rec_degree(pa) < rec_degree(pb)) std::swap(pa, pb);
    while (!pb.empty()) {
        RecPoly r = rec_prem(pa, pb);
        pa = std::move(pb);
        if (r.empty()) { pb = {}; break; }
        MPoly cr = rec_content(r);
        pb = rec_divide(r, cr);
    }
    MPoly cpa = rec_content(pa);
    pa = rec_divide(pa, cpa);
    MPoly g = from_rec(pa, var, a.nvars()) * cg;
    if (g.leading_coeff() < 0) g = -g;
    return g;
}

}  // namespace detail

inline MPoly gcd(const MPoly& a, const MPoly& b) { return detail::mgcd(a, b); }

}  // namespace qtsym
