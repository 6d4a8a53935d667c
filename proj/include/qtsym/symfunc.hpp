#pragma once

// Symmetric functions over Q(q,t) in the classical bases m, h, e, p, s.
// Internal strategy: every conversion routes through the power-sum basis.
// Schur <-> p uses Murnaghan-Nakayama character values (memoized per degree),
// m <-> p uses the monomial-expansion matrix and its inverse, h and e are
// multiplicative. The modified Macdonald basis is handled by a separate
// module on top of this one.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "qtsym/error.hpp"
#include "qtsym/mpoly.hpp"
#include "qtsym/partition.hpp"
#include "qtsym/qt_poly.hpp"
#include "qtsym/zrat.hpp"

namespace qtsym {

enum class Basis { m, h, e, p, s, Htilde };

inline std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::h: return "h";
        case Basis::e: return "e";
        case Basis::p: return "p";
        case Basis::s: return "s";
        case Basis::Htilde: return "H";
    }
    return "?";
}

inline Basis parse_basis(const std::string& s) {
    if (s == "m") return Basis::m;
    if (s == "h") return Basis::h;
    if (s == "e") return Basis::e;
    if (s == "p") return Basis::p;
    if (s == "s") return Basis::s;
    if (s == "H" || s == "htilde") return Basis::Htilde;
    throw DomainError("unknown basis: " + s);
}

// ---------------------------------------------------------------------------
// Per-degree transition data
// ---------------------------------------------------------------------------

inline Int z_factor(const Partition& lam) {
    Int z = 1;
    int run = 0, prev = -1;
    for (int p : lam.parts()) {
        if (p == prev) ++run;
        else { prev = p; run = 1; }
        z *= p;
        z *= run;
    }
    return z;
}

namespace detail {

// Murnaghan-Nakayama character chi^lam(mu) via beta numbers.
inline Int mn_character(const Partition& lam, const Partition& mu,
                        std::map<std::pair<Partition, Partition>, Int>& memo) {
    if (lam.size() != mu.size()) throw DomainError("character needs |lam| = |mu|");
    if (lam.empty()) return 1;
    auto key = std::make_pair(lam, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int r = mu.parts()[0];
    Partition mu_rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    const int len = static_cast<int>(lam.length());
    std::vector<int> beta;
    for (int i = 1; i <= len; ++i) beta.push_back(lam.part(static_cast<size_t>(i - 1)) + len - i);

    Int total = 0;
    for (int idx = 0; idx < len; ++idx) {
        const int b = beta[static_cast<size_t>(idx)];
        if (b - r < 0) continue;
        bool occupied = false;
        int between = 0;
        for (int j = 0; j < len; ++j) {
            if (j == idx) continue;
            if (beta[static_cast<size_t>(j)] == b - r) occupied = true;
            if (beta[static_cast<size_t>(j)] > b - r && beta[static_cast<size_t>(j)] < b) ++between;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[static_cast<size_t>(idx)] = b - r;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> parts;
        for (int i = 0; i < len; ++i) {
            int part = nb[static_cast<size_t>(i)] - (len - 1 - i);
            if (part > 0) parts.push_back(part);
        }
        Int sign = (between % 2 == 0) ? 1 : -1;
        total += sign * mn_character(Partition(std::move(parts)), mu_rest, memo);
    }
    memo[key] = total;
    return total;
}

}  // namespace detail

/// All transition data for one homogeneous degree, built lazily and shared.
class DegreeTables {
public:
    static const DegreeTables& get(int degree) {
        static std::mutex mtx;
        static std::map<int, std::unique_ptr<DegreeTables>> cache;
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(degree);
        if (it == cache.end())
            it = cache.emplace(degree, std::unique_ptr<DegreeTables>(new DegreeTables(degree))).first;
        return *it->second;
    }

    const std::vector<Partition>& parts() const { return parts_; }
    int count() const { return static_cast<int>(parts_.size()); }
    int index(const Partition& lam) const {
        auto it = index_.find(lam);
        if (it == index_.end()) throw DomainError("partition of wrong size for degree tables");
        return it->second;
    }
    const Int& z(int i) const { return z_[static_cast<size_t>(i)]; }
    const Int& chi(int lam_i, int mu_i) const {
        return chi_[static_cast<size_t>(lam_i)][static_cast<size_t>(mu_i)];
    }
    const Rat& p_to_m(int p_i, int m_i) const {
        return p_to_m_[static_cast<size_t>(p_i)][static_cast<size_t>(m_i)];
    }
    const Rat& m_to_p(int m_i, int p_i) const {
        return m_to_p_[static_cast<size_t>(m_i)][static_cast<size_t>(p_i)];
    }

private:
    explicit DegreeTables(int degree) : degree_(degree) {
        parts_ = partitions_of(degree);
        std::sort(parts_.begin(), parts_.end());
        for (int i = 0; i < count(); ++i) index_[parts_[static_cast<size_t>(i)]] = i;
        for (const auto& lam : parts_) z_.push_back(z_factor(lam));

        std::map<std::pair<Partition, Partition>, Int> memo;
        chi_.resize(parts_.size());
        for (size_t i = 0; i < parts_.size(); ++i) {
            chi_[i].resize(parts_.size());
            for (size_t j = 0; j < parts_.size(); ++j)
                chi_[i][j] = detail::mn_character(parts_[i], parts_[j], memo);
        }

        build_pm_matrices();
    }

    // Monomial expansion of p_mu by explicit polynomial multiplication in
    // `degree` variables; faithful because #vars >= degree.
    void build_pm_matrices() {
        const int d = degree_, nv = std::max(degree_, 1);
        using Key = std::vector<int32_t>;
        p_to_m_.assign(parts_.size(), std::vector<Rat>(parts_.size(), Rat(0)));
        for (size_t pi = 0; pi < parts_.size(); ++pi) {
            std::map<Key, Int> poly;
            poly[Key(static_cast<size_t>(nv), 0)] = 1;
            for (int part : parts_[pi].parts()) {
                std::map<Key, Int> next;
                for (const auto& [e, c] : poly)
                    for (int v = 0; v < nv; ++v) {
                        Key ne = e;
                        ne[static_cast<size_t>(v)] += part;
                        next[std::move(ne)] += c;
                    }
                poly = std::move(next);
            }
            for (const auto& [e, c] : poly) {
                std::vector<int> sorted;
                for (int32_t x : e)
                    if (x > 0) sorted.push_back(x);
                std::sort(sorted.begin(), sorted.end(), std::greater<>());
                Partition nu(std::move(sorted));
                // m-coefficient = coefficient of the dominant monomial
                bool dominant = true;
                for (size_t v = 0; v + 1 < e.size(); ++v)
                    if (e[v] < e[v + 1]) { dominant = false; break; }
                if (dominant && nu.size() == d)
                    p_to_m_[pi][static_cast<size_t>(index(nu))] = Rat(c);
            }
        }
        // invert over Q
        const size_t n = parts_.size();
        std::vector<std::vector<Rat>> a = p_to_m_;
        m_to_p_.assign(n, std::vector<Rat>(n, Rat(0)));
        for (size_t i = 0; i < n; ++i) m_to_p_[i][i] = 1;
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            while (piv < n && a[piv][col] == 0) ++piv;
            QTSYM_CHECK(piv < n, "transition matrix is singular");
            std::swap(a[piv], a[col]);
            std::swap(m_to_p_[piv], m_to_p_[col]);
            Rat inv = Rat(1) / a[col][col];
            for (size_t j = 0; j < n; ++j) {
                a[col][j] *= inv;
                m_to_p_[col][j] *= inv;
            }
            for (size_t row = 0; row < n; ++row) {
                if (row == col || a[row][col] == 0) continue;
                Rat f = a[row][col];
                for (size_t j = 0; j < n; ++j) {
                    a[row][j] -= f * a[col][j];
                    m_to_p_[row][j] -= f * m_to_p_[col][j];
                }
            }
        }
        // m_to_p_ now holds rows indexed by m, columns by p... transpose logic:
        // we inverted the matrix whose (p,m) entry is p_to_m, acting on the
        // right; the inverse maps m-coordinates to p-coordinates directly.
    }

    int degree_;
    std::vector<Partition> parts_;
    std::map<Partition, int> index_;
    std::vector<Int> z_;
    std::vector<std::vector<Int>> chi_;
    std::vector<std::vector<Rat>> p_to_m_, m_to_p_;
};

// ---------------------------------------------------------------------------
// SymF
// ---------------------------------------------------------------------------

class SymF {
public:
    SymF() : basis_(Basis::s) {}
    explicit SymF(Basis b) : basis_(b) {}
    SymF(Basis b, std::map<Partition, QTRat> coeffs) : basis_(b), coeffs_(std::move(coeffs)) {
        prune();
    }

    static SymF basis_element(Basis b, const Partition& lam) {
        SymF f(b);
        f.coeffs_[lam] = QTRat(1);
        return f;
    }
    static SymF zero(Basis b) { return SymF(b); }
    static SymF one(Basis b) { return basis_element(b, Partition{}); }

    Basis basis() const { return basis_; }
    const std::map<Partition, QTRat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Maximum homogeneous degree present.
    int degree() const {
        int d = 0;
        for (const auto& [lam, c] : coeffs_) d = std::max(d, lam.size());
        return d;
    }
    bool is_homogeneous() const {
        if (coeffs_.empty()) return true;
        int d = coeffs_.begin()->first.size();
        for (const auto& [lam, c] : coeffs_)
            if (lam.size() != d) return false;
        return true;
    }

    QTRat coeff(const Partition& lam) const {
        auto it = coeffs_.find(lam);
        return it == coeffs_.end() ? QTRat(0) : it->second;
    }

    void set_coeff(const Partition& lam, QTRat c) {
        if (c.is_zero()) coeffs_.erase(lam);
        else coeffs_[lam] = std::move(c);
    }
    void add_coeff(const Partition& lam, const QTRat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(lam, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    SymF operator-() const {
        SymF r = *this;
        for (auto& [lam, c] : r.coeffs_) c = -c;
        return r;
    }
    friend SymF operator+(const SymF& a, const SymF& b) {
        if (a.basis_ != b.basis_) throw DomainError("SymF addition across bases");
        SymF r = a;
        for (const auto& [lam, c] : b.coeffs_) r.add_coeff(lam, c);
        return r;
    }
    friend SymF operator-(const SymF& a, const SymF& b) { return a + (-b); }
    friend SymF operator*(const QTRat& c, const SymF& f) {
        SymF r(f.basis_);
        if (c.is_zero()) return r;
        for (const auto& [lam, v] : f.coeffs_) r.coeffs_[lam] = c * v;
        return r;
    }
    SymF& operator+=(const SymF& o) { return *this = *this + o; }
    SymF& operator-=(const SymF& o) { return *this = *this - o; }

    friend bool operator==(const SymF& a, const SymF& b) {
        if (a.basis_ == b.basis_) return a.coeffs_ == b.coeffs_;
        return a.to_basis(Basis::p).coeffs_ == b.to_basis(Basis::p).coeffs_;
    }
    friend bool operator!=(const SymF& a, const SymF& b) { return !(a == b); }

    /// Applies fn to every coefficient (e.g. a substitution or reversal).
    SymF coeff_mapped(const std::function<QTRat(const QTRat&)>& fn) const {
        SymF r(basis_);
        for (const auto& [lam, c] : coeffs_) r.set_coeff(lam, fn(c));
        return r;
    }

    SymF to_basis(Basis target) const;

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // rendered in the map's canonical order: degree, then reverse-lex
        for (const auto& [lam, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            std::string cs = c.str();
            bool simple = c.num().terms().size() == 1 && c.den().terms().size() == 1;
            std::string idx;
            for (size_t i = 0; i < lam.parts().size(); ++i)
                idx += (i ? "," : "") + std::to_string(lam.parts()[i]);
            std::string base = basis_name(basis_) + "[" + idx + "]";
            if (c.is_one()) os << base;
            else if (simple) os << cs << "*" << base;
            else os << "(" << cs << ")*" << base;
        }
        return os.str();
    }

private:
    void prune() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
    }

    Basis basis_;
    std::map<Partition, QTRat> coeffs_;
};

namespace detail {

inline Partition merge_partitions(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

// h_n or e_n expanded in the power-sum basis.
inline std::map<Partition, Rat> he_in_p(int n, bool elementary) {
    std::map<Partition, Rat> out;
    const auto& tab = DegreeTables::get(n);
    for (int i = 0; i < tab.count(); ++i) {
        const Partition& lam = tab.parts()[static_cast<size_t>(i)];
        Rat c = Rat(1) / Rat(tab.z(i));
        if (elementary && (n - static_cast<int>(lam.length())) % 2 == 1) c = -c;
        out[lam] = c;
    }
    return out;
}

// Expands one basis element into the power-sum basis of its degree.
inline std::map<Partition, Rat> basis_element_in_p(Basis b, const Partition& lam) {
    std::map<Partition, Rat> out;
    switch (b) {
        case Basis::p:
            out[lam] = 1;
            break;
        case Basis::s: {
            const auto& tab = DegreeTables::get(lam.size());
            int li = tab.index(lam);
            for (int mi = 0; mi < tab.count(); ++mi) {
                Rat c = Rat(tab.chi(li, mi)) / Rat(tab.z(mi));
                if (c != 0) out[tab.parts()[static_cast<size_t>(mi)]] = c;
            }
            break;
        }
        case Basis::m: {
            const auto& tab = DegreeTables::get(lam.size());
            int li = tab.index(lam);
            for (int pi = 0; pi < tab.count(); ++pi) {
                const Rat& c = tab.m_to_p(li, pi);
                if (c != 0) out[tab.parts()[static_cast<size_t>(pi)]] = c;
            }
            break;
        }
        case Basis::h:
        case Basis::e: {
            out[Partition{}] = 1;
            for (int part : lam.parts()) {
                auto factor = he_in_p(part, b == Basis::e);
                std::map<Partition, Rat> next;
                for (const auto& [l1, c1] : out)
                    for (const auto& [l2, c2] : factor) next[merge_partitions(l1, l2)] += c1 * c2;
                out = std::move(next);
            }
            break;
        }
        case Basis::Htilde:
            throw DomainError("Htilde conversions are provided by the Macdonald layer");
    }
    return out;
}

}  // namespace detail

inline SymF SymF::to_basis(Basis target) const {
    if (target == Basis::Htilde || basis_ == Basis::Htilde)
        throw DomainError("Htilde conversions are provided by the Macdonald layer");
    if (target == basis_) return *this;

    // to p first
    SymF inp(Basis::p);
    if (basis_ == Basis::p) inp = *this;
    else
        for (const auto& [lam, c] : coeffs_)
            for (const auto& [mu, r] : detail::basis_element_in_p(basis_, lam))
                inp.add_coeff(mu, c * QTRat(r));
    if (target == Basis::p) return inp;

    SymF out(target);
    // group by degree
    std::map<int, std::vector<std::pair<Partition, QTRat>>> graded;
    for (const auto& [lam, c] : inp.coeffs()) graded[lam.size()].push_back({lam, c});
    for (const auto& [d, terms] : graded) {
        const auto& tab = DegreeTables::get(d);
        if (target == Basis::s) {
            // <f, s_lam> = sum_mu f_mu chi^lam(mu)
            for (int li = 0; li < tab.count(); ++li) {
                QTRat acc(0);
                for (const auto& [mu, c] : terms) acc += c * QTRat(Rat(tab.chi(li, tab.index(mu))));
                out.add_coeff(tab.parts()[static_cast<size_t>(li)], acc);
            }
        } else if (target == Basis::m) {
            for (const auto& [mu, c] : terms) {
                int pi = tab.index(mu);
                for (int mi = 0; mi < tab.count(); ++mi) {
                    const Rat& r = tab.p_to_m(pi, mi);
                    if (r != 0) out.add_coeff(tab.parts()[static_cast<size_t>(mi)], c * QTRat(r));
                }
            }
        } else {
            // h: [h_lam] f = <f, m_lam>; e: [e_lam] f = <omega f, m_lam>
            for (int li = 0; li < tab.count(); ++li) {
                const Partition& lam = tab.parts()[static_cast<size_t>(li)];
                auto mlam = detail::basis_element_in_p(Basis::m, lam);
                QTRat acc(0);
                for (const auto& [mu, c] : terms) {
                    auto it = mlam.find(mu);
                    if (it == mlam.end()) continue;
                    QTRat term = c * QTRat(it->second * Rat(tab.z(tab.index(mu))));
                    if (target == Basis::e && (mu.size() - static_cast<int>(mu.length())) % 2 == 1)
                        term = -term;
                    acc += term;
                }
                out.add_coeff(lam, acc);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Products and inner products
// ---------------------------------------------------------------------------

inline SymF mul(const SymF& f, const SymF& g) {
    SymF fp = f.to_basis(Basis::p), gp = g.to_basis(Basis::p);
    SymF r(Basis::p);
    for (const auto& [l1, c1] : fp.coeffs())
        for (const auto& [l2, c2] : gp.coeffs())
            r.add_coeff(detail::merge_partitions(l1, l2), c1 * c2);
    return r;
}

/// Hall inner product, diagonal in the power-sum basis.
inline QTRat hall(const SymF& f, const SymF& g) {
    SymF fp = f.to_basis(Basis::p), gp = g.to_basis(Basis::p);
    QTRat acc(0);
    for (const auto& [lam, c] : fp.coeffs()) {
        QTRat d = gp.coeff(lam);
        if (d.is_zero()) continue;
        acc += c * d * QTRat(Rat(z_factor(lam)));
    }
    return acc;
}

/// The deformed star inner product: diagonal in p with
/// (-1)^{|lam|-l(lam)} z_lam prod (1-q^{lam_i})(1-t^{lam_i}).
inline QTRat star_inner(const SymF& f, const SymF& g) {
    SymF fp = f.to_basis(Basis::p), gp = g.to_basis(Basis::p);
    QTRat acc(0);
    for (const auto& [lam, c] : fp.coeffs()) {
        QTRat d = gp.coeff(lam);
        if (d.is_zero()) continue;
        QTRat w(Rat(z_factor(lam)));
        if ((lam.size() - static_cast<int>(lam.length())) % 2 == 1) w = -w;
        for (int part : lam.parts()) {
            QTPoly fq = QTPoly(1) - QTPoly::monomial(1, part, 0);
            QTPoly ft = QTPoly(1) - QTPoly::monomial(1, 0, part);
            w *= QTRat(fq * ft);
        }
        acc += c * d * w;
    }
    return acc;
}

/// omega involution: p_k -> (-1)^{k-1} p_k.
inline SymF omega(const SymF& f) {
    SymF fp = f.to_basis(Basis::p);
    SymF r(Basis::p);
    for (const auto& [lam, c] : fp.coeffs()) {
        QTRat v = c;
        if ((lam.size() - static_cast<int>(lam.length())) % 2 == 1) v = -v;
        r.add_coeff(lam, v);
    }
    return r.to_basis(f.basis());
}

/// Coefficientwise q,t-inversion.
inline SymF rev(const SymF& f) {
    return f.coeff_mapped([](const QTRat& c) { return c.reversed(); });
}

/// Adjoint of multiplication by e_N: on Schur functions, removes vertical
/// N-strips.
inline SymF e_perp(int N, const SymF& f) {
    if (N < 0) throw DomainError("e_perp needs N >= 0");
    if (N == 0) return f;
    SymF fs = f.to_basis(Basis::s);
    SymF out(Basis::s);
    for (const auto& [lam, c] : fs.coeffs()) {
        // enumerate nu <= lam with lam/nu a vertical N-strip
        const int len = static_cast<int>(lam.length());
        std::vector<int> nu(static_cast<size_t>(len));
        std::function<void(int, int)> rec = [&](int row, int removed) {
            if (row == len) {
                if (removed != N) return;
                std::vector<int> parts;
                for (int x : nu)
                    if (x > 0) parts.push_back(x);
                out.add_coeff(Partition(std::move(parts)), c);
                return;
            }
            for (int take = 0; take <= 1 && removed + take <= N; ++take) {
                int val = lam.parts()[static_cast<size_t>(row)] - take;
                // keep nu a partition: nu_row >= nu_{row+1} checked forward
                if (row + 1 < len && val < lam.parts()[static_cast<size_t>(row + 1)] - 1) continue;
                if (row > 0 && val > nu[static_cast<size_t>(row - 1)]) continue;
                nu[static_cast<size_t>(row)] = val;
                rec(row + 1, removed + take);
            }
        };
        rec(0, 0);
    }
    return out.basis() == f.basis() ? out : out.to_basis(f.basis());
}

// ---------------------------------------------------------------------------
// Plethysm
// ---------------------------------------------------------------------------

/// A formal alphabet: sum of atoms with Q(q,t) coefficients. Atoms are the
/// main alphabet X, the sign alphabet eps (p_k -> (-1)^k), scalar summands in
/// Q(q,t), and scalar summands in the z-extension.
struct AlphabetExpr {
    struct Term {
        enum Kind { X, Eps, ScalarQT, ScalarZ } kind;
        QTRat coeff;     // multiplies the atom; for X: coeff(q^k,t^k) p_k
        QTRat scalar;    // for ScalarQT
        ZRat zscalar;    // for ScalarZ
    };
    std::vector<Term> terms;
    int zarity = 0;

    static AlphabetExpr x() {
        AlphabetExpr a;
        a.terms.push_back({Term::X, QTRat(1), QTRat(0), ZRat()});
        return a;
    }
    static AlphabetExpr eps() {
        AlphabetExpr a;
        a.terms.push_back({Term::Eps, QTRat(1), QTRat(0), ZRat()});
        return a;
    }
    static AlphabetExpr scalar(const QTRat& s) {
        AlphabetExpr a;
        a.terms.push_back({Term::ScalarQT, QTRat(1), s, ZRat()});
        return a;
    }
    static AlphabetExpr zscalar(const ZRat& s) {
        AlphabetExpr a;
        a.zarity = s.arity();
        a.terms.push_back({Term::ScalarZ, QTRat(1), QTRat(0), s});
        return a;
    }

    AlphabetExpr scaled(const QTRat& c) const {
        AlphabetExpr a = *this;
        for (auto& t : a.terms) t.coeff = c * t.coeff;
        return a;
    }
    friend AlphabetExpr operator+(AlphabetExpr a, const AlphabetExpr& b) {
        if (a.zarity == 0) a.zarity = b.zarity;
        else if (b.zarity != 0 && a.zarity != b.zarity)
            throw DomainError("alphabet z-arity mismatch");
        a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
        return a;
    }
    friend AlphabetExpr operator-(AlphabetExpr a, const AlphabetExpr& b) {
        return std::move(a) + b.scaled(QTRat(-1));
    }

    bool has_x() const {
        for (const auto& t : terms)
            if (t.kind == Term::X) return true;
        return false;
    }
    bool has_z() const {
        for (const auto& t : terms)
            if (t.kind == Term::ScalarZ) return true;
        return false;
    }

    /// Image of p_k: (coefficient of the symbol p_k, scalar part).
    std::pair<QTRat, ZRat> pk_image(int k) const {
        QTRat xcoeff(0);
        ZRat scal(zarity, 0);
        for (const auto& t : terms) {
            QTRat c = t.coeff.substitute_powers(k);
            switch (t.kind) {
                case Term::X: xcoeff += c; break;
                case Term::Eps: {
                    QTRat v = (k % 2 == 0) ? QTRat(1) : QTRat(-1);
                    scal += ZRat::from_qt(zarity, c * v);
                    break;
                }
                case Term::ScalarQT:
                    scal += ZRat::from_qt(zarity, c * t.scalar.substitute_powers(k));
                    break;
                case Term::ScalarZ:
                    scal += ZRat::from_qt(zarity, c) * t.zscalar.powers_substituted(k);
                    break;
            }
        }
        return {xcoeff, scal};
    }
};

/// Plethystic substitution f[A]. When A contains X the result is a SymF in
/// the p basis (possibly of mixed degree); otherwise a pure scalar, returned
/// as a ZRat of the alphabet's arity (arity 0 embeds Q(q,t)).
using PlethysmResult = std::variant<SymF, ZRat>;

inline PlethysmResult plethysm(const SymF& f, const AlphabetExpr& A) {
    SymF fp = f.to_basis(Basis::p);
    const bool with_x = A.has_x();
    if (with_x && A.has_z())
        throw DomainError("plethysm with X and z-scalars simultaneously is not supported");

    // cache p_k images
    std::map<int, std::pair<QTRat, ZRat>> images;
    auto image = [&](int k) -> const std::pair<QTRat, ZRat>& {
        auto it = images.find(k);
        if (it == images.end()) it = images.emplace(k, A.pk_image(k)).first;
        return it->second;
    };

    if (!with_x) {
        ZRat acc(A.zarity, 0);
        for (const auto& [lam, c] : fp.coeffs()) {
            ZRat prod = ZRat::from_qt(A.zarity, c);
            for (int part : lam.parts()) prod *= image(part).second;
            acc += prod;
        }
        return acc;
    }

    SymF out(Basis::p);
    for (const auto& [lam, c] : fp.coeffs()) {
        // expand prod_i (cx_i p_{lam_i} + s_i) over kept/dropped subsets
        std::vector<std::pair<std::vector<int>, QTRat>> partial = {{{}, c}};
        for (int part : lam.parts()) {
            const auto& [cx, sz] = image(part);
            QTRat s = sz.substituted({});  // z-free by the guard above
            std::vector<std::pair<std::vector<int>, QTRat>> next;
            for (const auto& [kept, coeff] : partial) {
                if (!cx.is_zero()) {
                    auto k2 = kept;
                    k2.push_back(part);
                    next.push_back({std::move(k2), coeff * cx});
                }
                if (!s.is_zero()) next.push_back({kept, coeff * s});
            }
            partial = std::move(next);
        }
        for (auto& [kept, coeff] : partial) {
            std::sort(kept.begin(), kept.end(), std::greater<>());
            out.add_coeff(Partition(std::move(kept)), coeff);
        }
    }
    return out;
}

/// Scalar plethysm convenience: f[A] for an X-free, z-free alphabet.
inline QTRat plethysm_scalar(const SymF& f, const AlphabetExpr& A) {
    if (A.has_x()) throw DomainError("plethysm_scalar needs an X-free alphabet");
    ZRat r = std::get<ZRat>(plethysm(f, A));
    return r.substituted(std::vector<QTRat>(static_cast<size_t>(r.arity()), QTRat(0)));
}

// ---------------------------------------------------------------------------
// Finite-variable Schur evaluation (semistandard tableau sum)
// ---------------------------------------------------------------------------

/// Evaluates s_lam(vals...) over any commutative ring with 0/1 constructed
/// from long, multiplication, and addition.
template <class R>
R schur_eval(const Partition& lam, const std::vector<R>& vals, const R& zero, const R& one) {
    const int m = static_cast<int>(vals.size());
    if (lam.empty()) return one;
    if (static_cast<int>(lam.length()) > m) return zero;
    // iterate over semistandard tableaux: fill rows top down; entries in a row
    // weakly increase, columns strictly increase
    const int rows = static_cast<int>(lam.length());
    std::vector<std::vector<int>> t(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i)
        t[static_cast<size_t>(i)].assign(static_cast<size_t>(lam.parts()[static_cast<size_t>(i)]), 0);
    R total = zero;
    std::function<void(int, int, R)> rec = [&](int i, int j, R acc) {
        if (i == rows) {
            total += acc;
            return;
        }
        int ni = i, nj = j + 1;
        if (nj >= lam.parts()[static_cast<size_t>(i)]) { ni = i + 1; nj = 0; }
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]);
        if (i > 0) lo = std::max(lo, t[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + 1);
        for (int v = lo; v <= m; ++v) {
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            rec(ni, nj, acc * vals[static_cast<size_t>(v - 1)]);
        }
    };
    rec(0, 0, one);
    return total;
}

inline QTRat schur_eval_qt(const Partition& lam, const std::vector<QTRat>& vals) {
    return schur_eval<QTRat>(lam, vals, QTRat(0), QTRat(1));
}

inline MPoly schur_eval_mpoly(const Partition& lam, const std::vector<MPoly>& vals, int nvars) {
    return schur_eval<MPoly>(lam, vals, MPoly(nvars), MPoly(nvars, 1));
}

/// s_lam in the listed z-variables of a ZRat environment.
inline ZRat schur_finite(const Partition& lam, int arity, const std::vector<int>& zvars) {
    std::vector<ZRat> vals;
    for (int i : zvars) vals.push_back(ZRat::z(arity, i));
    return schur_eval<ZRat>(lam, vals, ZRat(arity, 0), ZRat(arity, 1));
}

// ---------------------------------------------------------------------------
// Reconstruction from truncated x-expansions
// ---------------------------------------------------------------------------

/// A polynomial in x_1..x_m with Q(q,t) coefficients.
struct XPoly {
    int nvars = 0;
    std::map<std::vector<int32_t>, QTRat> terms;

    void add(const std::vector<int32_t>& e, const QTRat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

/// Reads a symmetric polynomial of homogeneous degree d in m >= d variables
/// off into the monomial basis. Throws if the input is not symmetric: this
/// check is the statistic-level tripwire used by the combinatorial formulas.
inline SymF from_x_polynomial(const XPoly& P, int degree) {
    if (P.nvars < degree) throw DomainError("from_x_polynomial needs at least `degree` variables");
    SymF out(Basis::m);
    for (const auto& [e, c] : P.terms) {
        int total = 0;
        std::vector<int> sorted;
        for (int32_t x : e) {
            total += x;
            if (x > 0) sorted.push_back(x);
        }
        if (total != degree) throw DomainError("from_x_polynomial: wrong homogeneous degree");
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        std::vector<int32_t> canon(e.size(), 0);
        for (size_t i = 0; i < sorted.size(); ++i) canon[i] = sorted[i];
        auto it = P.terms.find(canon);
        if (it == P.terms.end() || it->second != c)
            throw ConsistencyError("from_x_polynomial: input is not symmetric");
        if (std::equal(e.begin(), e.end(), canon.begin())) {
            // count the permutation orbit of this exponent pattern and check
            // it is fully present
            std::vector<int32_t> probe = canon;
            std::sort(probe.begin(), probe.end());
            do {
                if (!P.terms.count(probe))
                    throw ConsistencyError("from_x_polynomial: orbit incomplete");
            } while (std::next_permutation(probe.begin(), probe.end()));
            out.set_coeff(Partition(std::move(sorted)), c);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rectangle Schur orthogonality
// ---------------------------------------------------------------------------

/// Symbolically verifies
///   sum_S s_lam[z_S] s_mu[z_{S^c}] / prod_{i in S, j in S^c} (z_j - z_i)
///     = (-1)^{|lam|} [mu == tilde(lam)]
/// by clearing to the full Vandermonde determinant denominator, so no
/// rational-function arithmetic is needed.
inline bool schur_orthogonality_check(const Partition& lam, const Partition& mu, int n, int k) {
    if (!fits_in_rectangle(lam, n, k)) throw DomainError("lam not inside R(n,k)");
    if (mu.size() > k * (n - k) - lam.size()) throw DomainError("|mu| too large for the identity");
    MPoly sum(n);
    for (const auto& S : k_subsets(n, k)) {
        auto Sc = complement_subset(S, n);
        std::vector<MPoly> zs, zsc;
        for (int i : S) zs.push_back(MPoly::variable(n, i - 1));
        for (int j : Sc) zsc.push_back(MPoly::variable(n, j - 1));
        MPoly term = schur_eval_mpoly(lam, zs, n) * schur_eval_mpoly(mu, zsc, n);
        // multiply by V / denom_S: the within-S and within-S^c differences,
        // with a sign for cross pairs ordered the wrong way
        long flips = 0;
        for (int i : S)
            for (int j : Sc)
                if (j < i) ++flips;
        for (size_t a = 0; a < S.size(); ++a)
            for (size_t b = a + 1; b < S.size(); ++b)
                term *= MPoly::variable(n, S[b] - 1) - MPoly::variable(n, S[a] - 1);
        for (size_t a = 0; a < Sc.size(); ++a)
            for (size_t b = a + 1; b < Sc.size(); ++b)
                term *= MPoly::variable(n, Sc[b] - 1) - MPoly::variable(n, Sc[a] - 1);
        if (flips % 2 == 1) term = -term;
        sum += term;
    }
    MPoly vandermonde(n, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            vandermonde *= MPoly::variable(n, j - 1) - MPoly::variable(n, i - 1);
    MPoly expect(n);
    if (tilde(lam, n, k) == mu) {
        expect = vandermonde;
        if (lam.size() % 2 == 1) expect = -expect;
    }
    return sum == expect;
}

/// Randomized exact-rational specialization of the same identity, for sizes
/// where the symbolic sum is too wide.
inline bool schur_orthogonality_check_random(const Partition& lam, const Partition& mu, int n,
                                             int k, unsigned seed) {
    std::vector<Rat> z;
    // deterministic pseudo-random distinct rationals
    unsigned state = seed * 2654435761u + 17;
    auto next = [&]() {
        state = state * 1664525u + 1013904223u;
        return static_cast<long>(state % 4096) + 1;
    };
    for (int i = 0; i < n; ++i) {
        Rat v;
        do {
            v = Rat(next(), next());
            v.canonicalize();
        } while (std::find(z.begin(), z.end(), v) != z.end());
        z.push_back(v);
    }
    Rat sum = 0;
    for (const auto& S : k_subsets(n, k)) {
        auto Sc = complement_subset(S, n);
        std::vector<Rat> zs, zsc;
        for (int i : S) zs.push_back(z[static_cast<size_t>(i - 1)]);
        for (int j : Sc) zsc.push_back(z[static_cast<size_t>(j - 1)]);
        Rat numer = schur_eval<Rat>(lam, zs, Rat(0), Rat(1)) * schur_eval<Rat>(mu, zsc, Rat(0), Rat(1));
        Rat denom = 1;
        for (int i : S)
            for (int j : Sc) denom *= z[static_cast<size_t>(j - 1)] - z[static_cast<size_t>(i - 1)];
        sum += numer / denom;
    }
    Rat expect = 0;
    if (tilde(lam, n, k) == mu) expect = (lam.size() % 2 == 1) ? Rat(-1) : Rat(1);
    return sum == expect;
}

}  // namespace qtsym
