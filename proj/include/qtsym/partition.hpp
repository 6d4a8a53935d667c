#pragma once

// Partitions and per-shape statistics. French convention throughout: the
// diagram of mu is {(i,j) : 1 <= i, 1 <= j <= mu_i} with row 1 at the bottom,
// rows growing upward. arm/coarm count cells strictly right/left in the row,
// leg/coleg strictly above/below in the column.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qtsym/error.hpp"
#include "qtsym/qt_poly.hpp"

namespace qtsym {

struct Cell {
    int row = 1;  // 1-based, bottom row = 1
    int col = 1;  // 1-based

    friend bool operator==(const Cell& a, const Cell& b) { return a.row == b.row && a.col == b.col; }
    friend bool operator<(const Cell& a, const Cell& b) {
        if (a.row != b.row) return a.row < b.row;
        return a.col < b.col;
    }
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1]) throw DomainError("partition parts must be weakly decreasing");
        if (!parts_.empty() && parts_.back() < 0) throw DomainError("partition parts must be positive");
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }  // 0-based access
    size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool contains_cell(const Cell& u) const {
        return u.row >= 1 && u.col >= 1 && u.row <= static_cast<int>(parts_.size()) &&
               u.col <= parts_[static_cast<size_t>(u.row - 1)];
    }

    /// mu contains nu cellwise.
    bool contains(const Partition& nu) const {
        if (nu.length() > length()) return false;
        for (size_t i = 0; i < nu.length(); ++i)
            if (nu.parts_[i] > parts_[i]) return false;
        return true;
    }

    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> c(static_cast<size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
        return Partition(std::move(c));
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> r;
        for (size_t i = 0; i < parts_.size(); ++i)
            for (int j = 1; j <= parts_[i]; ++j) r.push_back({static_cast<int>(i) + 1, j});
        return r;
    }

    int arm(const Cell& u) const {
        require_cell(u);
        return parts_[static_cast<size_t>(u.row - 1)] - u.col;
    }
    int coarm(const Cell& u) const {
        require_cell(u);
        return u.col - 1;
    }
    int leg(const Cell& u) const {
        require_cell(u);
        int count = 0;
        for (size_t i = static_cast<size_t>(u.row); i < parts_.size(); ++i)
            if (parts_[i] >= u.col) ++count;
        return count;
    }
    int coleg(const Cell& u) const {
        require_cell(u);
        return u.row - 1;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) {
        // by size, then reverse-lexicographic on parts: a fixed total order
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                            a.parts_.begin(), a.parts_.end());
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ",";
            os << parts_[i];
        }
        os << "]";
        return os.str();
    }

private:
    void require_cell(const Cell& u) const {
        if (!contains_cell(u)) throw DomainError("cell " + std::to_string(u.row) + "," +
                                                 std::to_string(u.col) + " outside partition " + str());
    }

    std::vector<int> parts_;
};

// ---------------------------------------------------------------------------
// Corner data
// ---------------------------------------------------------------------------

struct Corner {
    Cell cell;
    QTRat zweight;  // q^{-coarm} t^{-coleg}
};

/// Removable corners listed top to bottom (decreasing row index), paired with
/// their weights z_i = q^{-coarm(c_i)} t^{-coleg(c_i)}.
inline std::vector<Corner> corners(const Partition& mu) {
    std::vector<Corner> r;
    const auto& p = mu.parts();
    for (int i = static_cast<int>(p.size()); i >= 1; --i) {
        int here = p[static_cast<size_t>(i - 1)];
        int above = (i < static_cast<int>(p.size())) ? p[static_cast<size_t>(i)] : 0;
        if (here > above) {
            Cell c{i, here};
            r.push_back({c, QTRat::laurent(1, -mu.coarm(c), -mu.coleg(c))});
        }
    }
    return r;
}

/// Deletes the corners indexed by S (1-based positions into corners(mu)).
inline Partition remove_corners(const Partition& mu, const std::vector<int>& S) {
    auto cs = corners(mu);
    std::vector<int> parts = mu.parts();
    for (int idx : S) {
        if (idx < 1 || idx > static_cast<int>(cs.size()))
            throw DomainError("corner index out of range");
        parts[static_cast<size_t>(cs[static_cast<size_t>(idx - 1)].cell.row - 1)] -= 1;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Weights T_mu, B_mu, D_mu and the Macdonald norm factors
// ---------------------------------------------------------------------------

/// T_mu = prod over cells of q^{j-1} t^{i-1}, a monomial.
inline QTRat t_weight(const Partition& mu) {
    int qd = 0, td = 0;
    for (const Cell& u : mu.cells()) {
        qd += u.col - 1;
        td += u.row - 1;
    }
    return QTRat(QTPoly::monomial(1, qd, td));
}

/// B_mu = sum over cells of q^{coarm} t^{coleg}.
inline QTRat b_sum(const Partition& mu) {
    QTPoly p;
    for (const Cell& u : mu.cells()) p.add_term(mu.coarm(u), mu.coleg(u), 1);
    return QTRat(std::move(p));
}

/// D_mu = M B_mu - 1 with M = (1-q)(1-t).
inline QTRat d_poly(const Partition& mu) { return qt_M() * b_sum(mu) - QTRat(1); }

/// htilde_mu = prod over cells of (q^{arm} - t^{leg+1}).
inline QTRat hnorm(const Partition& mu) {
    QTRat r(1);
    for (const Cell& u : mu.cells()) {
        QTPoly f = QTPoly::monomial(1, mu.arm(u), 0) - QTPoly::monomial(1, 0, mu.leg(u) + 1);
        r *= QTRat(std::move(f));
    }
    return r;
}

/// htilde'_mu = prod over cells of (t^{leg} - q^{arm+1}).
inline QTRat hnorm_prime(const Partition& mu) {
    QTRat r(1);
    for (const Cell& u : mu.cells()) {
        QTPoly f = QTPoly::monomial(1, 0, mu.leg(u)) - QTPoly::monomial(1, mu.arm(u) + 1, 0);
        r *= QTRat(std::move(f));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Staircases and rectangles
// ---------------------------------------------------------------------------

/// st_k = (k-1, k-2, ..., 1, 0); the zero part is dropped.
inline Partition staircase(int k) {
    std::vector<int> p;
    for (int i = k - 1; i >= 1; --i) p.push_back(i);
    return Partition(std::move(p));
}

/// delta_{n,N} = (n repeated N times, n-1, ..., 1); has exactly n corners.
inline Partition augmented_staircase(int n, int N) {
    if (n < 1 || N < 1) throw DomainError("augmented staircase needs n, N >= 1");
    std::vector<int> p(static_cast<size_t>(N), n);
    for (int i = n - 1; i >= 1; --i) p.push_back(i);
    return Partition(std::move(p));
}

/// The rectangle R(n,k) = ((n-k)^k).
inline Partition rectangle(int n, int k) {
    if (k < 0 || k > n) throw DomainError("rectangle R(n,k) needs 0 <= k <= n");
    if (k == 0 || n == k) return {};
    return Partition(std::vector<int>(static_cast<size_t>(k), n - k));
}

inline bool fits_in_rectangle(const Partition& lam, int n, int k) {
    if (static_cast<int>(lam.length()) > k) return false;
    return lam.empty() || lam.parts()[0] <= n - k;
}

/// Complement-conjugate inside R(n,k): the conjugate of
/// (n-k-lam_k, ..., n-k-lam_1).
inline Partition tilde(const Partition& lam, int n, int k) {
    if (!fits_in_rectangle(lam, n, k)) throw DomainError("tilde: partition not inside R(n,k)");
    std::vector<int> comp;
    for (int i = k; i >= 1; --i) comp.push_back(n - k - lam.part(static_cast<size_t>(i - 1)));
    return Partition(std::move(comp)).conjugate();
}

// ---------------------------------------------------------------------------
// Enumeration helpers
// ---------------------------------------------------------------------------

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// All partitions inside the rectangle R(n,k), the empty one included.
inline std::vector<Partition> partitions_in_rectangle(int n, int k) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int maxp) {
        out.emplace_back(std::vector<int>(cur));
        if (row == k) return;
        for (int p = maxp; p >= 1; --p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(0, n - k);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// All k-element subsets of {1..n}, each sorted increasing, in lex order.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

inline std::vector<int> complement_subset(const std::vector<int>& S, int n) {
    std::vector<int> r;
    size_t si = 0;
    for (int i = 1; i <= n; ++i) {
        if (si < S.size() && S[si] == i) ++si;
        else r.push_back(i);
    }
    return r;
}

inline Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

}  // namespace qtsym
