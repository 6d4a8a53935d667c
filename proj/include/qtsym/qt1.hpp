#pragma once

// Specializations at q = t = 1: the binomial-determinant coefficients, the
// h-expansion tables of nabla images, the two-route evaluation of piece
// polynomials, the relative dimension RD, and the observation suite for the
// RD table.

#include <map>
#include <sstream>
#include <vector>

#include "qtsym/piece.hpp"

namespace qtsym {

/// h-basis coefficients with exact rational values (the q = t = 1 shadow).
struct HExpansion {
    std::map<Partition, Rat> coeffs;

    friend bool operator==(const HExpansion& a, const HExpansion& b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const HExpansion& a, const HExpansion& b) { return !(a == b); }

    std::string str() const {
        if (coeffs.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [lam, c] : coeffs) {
            Rat v = c;
            if (first) {
                if (v < 0) { os << "-"; v = -v; }
            } else {
                os << (v < 0 ? " - " : " + ");
                if (v < 0) v = -v;
            }
            first = false;
            if (v != 1) os << to_string(v) << "*";
            os << "h" << lam.str();
        }
        return os.str();
    }
};

/// det(binom(lam_i + k - i, nu_j + k - j))_{1<=i,j<=k}: the change-of-basis
/// determinant between Schur polynomials in k variables and their shifted
/// versions. Integer valued; unitriangular on the diagonal.
inline Int d_coeff(const Partition& lam, const Partition& nu, int k) {
    if (static_cast<int>(lam.length()) > k || static_cast<int>(nu.length()) > k)
        throw DomainError("d_coeff needs l(lam), l(nu) <= k");
    std::vector<std::vector<Int>> m(static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(k)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                binomial(lam.part(static_cast<size_t>(i - 1)) + k - i,
                         nu.part(static_cast<size_t>(j - 1)) + k - j);
    // integer determinant by fraction-free elimination at tiny sizes
    std::function<Int(std::vector<std::vector<Int>>)> det = [&](std::vector<std::vector<Int>> a) {
        const size_t n = a.size();
        if (n == 0) return Int(1);
        Int sign = 1, denom = 1;
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            while (piv < n && a[piv][col] == 0) ++piv;
            if (piv == n) return Int(0);
            if (piv != col) {
                std::swap(a[piv], a[col]);
                sign = -sign;
            }
            for (size_t row = col + 1; row < n; ++row) {
                for (size_t j = col + 1; j < n; ++j)
                    a[row][j] = (a[row][j] * a[col][col] - a[row][col] * a[col][j]) / denom;
                a[row][col] = 0;
            }
            denom = a[col][col];
        }
        return Int(sign * a[n - 1][n - 1]);
    };
    return det(std::move(m));
}

/// Coefficientwise exact limit along t = q^path_exponent as q -> 1.
inline HExpansion h_expansion_at_qt1(const SymF& f, int path_exponent = 1) {
    HExpansion out;
    SymF fh = f.to_basis(Basis::h);
    for (const auto& [lam, c] : fh.coeffs()) {
        Rat v = c.limit_qt1(path_exponent);
        if (v != 0) out.coeffs[lam] = v;
    }
    return out;
}

/// W table of a shape: [h_tau](nabla s_lam at q = t = 1), computed through
/// the Macdonald expansion and the one-variable limit, with the t = q and
/// t = q^2 restrictions cross-checked against each other.
inline HExpansion w_table(const Partition& lam) {
    static std::mutex mtx;
    static std::map<Partition, HExpansion> memo;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(lam);
        if (it != memo.end()) return it->second;
    }
    SymF ns = nabla(SymF::basis_element(Basis::s, lam));
    HExpansion primary = h_expansion_at_qt1(ns, 1);
    HExpansion secondary = h_expansion_at_qt1(ns, 2);
    QTSYM_CHECK(primary == secondary, "w_table: the two limit paths disagree");
    std::lock_guard<std::mutex> lock(mtx);
    memo[lam] = primary;
    return primary;
}

inline Rat w_entry(const Partition& lam, const Partition& tau) {
    HExpansion t = w_table(lam);
    auto it = t.coeffs.find(tau);
    return it == t.coeffs.end() ? Rat(0) : it->second;
}

/// tau padded by m extra unit parts... precisely: add 1 to each of the first
/// m parts of (tau, 0, 0, ...) -- the partition (tau + 1^m).
inline Partition pad_plus_ones(const Partition& tau, int m) {
    if (static_cast<int>(tau.length()) > m)
        throw DomainError("pad_plus_ones: tau has more parts than the padding length");
    std::vector<int> parts;
    for (int i = 0; i < m; ++i) parts.push_back(tau.part(static_cast<size_t>(i)) + 1);
    return Partition(std::move(parts));
}

/// The assembled right side of the q = t = 1 evaluation: a signed
/// binomial-determinant combination of padded W-table rows.
inline HExpansion piece_qt1_assembled(const PieceInput& in) {
    PieceFrame f = piece_frame(in);
    HExpansion out;
    for (const auto& nu : partitions_in_rectangle(f.n, f.k)) {
        if (!f.lam.contains(nu)) continue;
        Int d = d_coeff(f.lam, nu, f.k);
        if (d == 0) continue;
        Rat sign = ((f.lam.size() - nu.size()) % 2 == 0) ? Rat(1) : Rat(-1);
        Partition tnu = tilde(nu, f.n, f.k);
        const int m = f.mu.size() - f.k - tnu.size();
        for (const auto& [tau, w] : w_table(tnu).coeffs) {
            Rat add = sign * Rat(d) * w;
            Partition idx = pad_plus_ones(tau, m);
            auto [it, fresh] = out.coeffs.try_emplace(idx, add);
            if (!fresh) {
                it->second += add;
                if (it->second == 0) out.coeffs.erase(it);
            }
        }
    }
    return out;
}

/// Direct route: evaluate the piece polynomial itself at q = t = 1.
inline HExpansion piece_qt1_direct(const PieceInput& in) {
    SymF piece = piece_poly(in);
    HExpansion a = h_expansion_at_qt1(piece, 1);
    HExpansion b = h_expansion_at_qt1(piece, 2);
    QTSYM_CHECK(a == b, "piece_qt1_direct: the two limit paths disagree");
    return a;
}

/// Both routes, equality asserted.
inline HExpansion piece_qt1(const PieceInput& in) {
    HExpansion direct = piece_qt1_direct(in);
    HExpansion assembled = piece_qt1_assembled(in);
    QTSYM_CHECK(direct == assembled, "piece_qt1: direct and assembled routes disagree");
    return direct;
}

// ---------------------------------------------------------------------------
// Relative dimension
// ---------------------------------------------------------------------------

/// <h_rho, e_{1^d}> / d! = 1 / prod(rho_i!).
inline Rat h_pairing_normalized(const Partition& rho) {
    Rat r = 1;
    for (int p : rho.parts()) r /= Rat(factorial(p));
    return r;
}

/// The frame used for RD(lam): k = l(lam), the smallest rectangle, and the
/// staircase-like mu with n corners (one more part than the staircase when
/// `second_choice` asks for an independence cross-check).
struct RDFrame {
    int n = 0, k = 0;
    Partition mu;
};

inline RDFrame rd_frame(const Partition& lam, bool second_choice = false) {
    if (lam.empty()) throw DomainError("rd: lam must be nonempty");
    RDFrame f;
    f.k = static_cast<int>(lam.length());
    f.n = f.k + lam.parts()[0];
    f.mu = second_choice ? augmented_staircase(f.n, 2) : augmented_staircase(f.n, 1);
    return f;
}

/// RD(lam): the normalized sign-free pairing of the projected deformation at
/// q = t = 1. Assembled entirely from the q = t = 1 piece expansions, so no
/// large Macdonald polynomial is ever materialized.
inline Rat rd_with_frame(const Partition& lam, const RDFrame& f) {
    auto cs = corners(f.mu);
    const int n = f.n, k = f.k;
    QTSYM_CHECK(static_cast<int>(cs.size()) == n, "rd: corner count mismatch");
    std::vector<int> S0(static_cast<size_t>(k));
    std::iota(S0.begin(), S0.end(), 1);
    std::vector<QTRat> weights;
    for (const auto& c : cs) weights.push_back(c.zweight);

    ZSymLinear def = h_mu_s_deformed(n, k, S0);
    Rat total = 0;
    for (const auto& [nu, zc] : def.coeffs) {
        ZRat projected = pi_seq(lam, S0, n, zc);
        if (projected.is_zero()) continue;
        Rat cval = projected.substituted(weights).limit_qt1();
        if (cval == 0) continue;
        HExpansion piece = piece_qt1_assembled({f.mu, nu, k});
        Rat pairing = 0;
        for (const auto& [rho, coeff] : piece.coeffs) pairing += coeff * h_pairing_normalized(rho);
        total += cval * pairing;
    }
    return total;
}

/// RD with the default minimal frame; independence across a second mu with
/// the same corner count is asserted.
inline Rat rd(const Partition& lam, bool check_mu_independence = true) {
    Rat primary = rd_with_frame(lam, rd_frame(lam, false));
    if (check_mu_independence) {
        Rat secondary = rd_with_frame(lam, rd_frame(lam, true));
        QTSYM_CHECK(primary == secondary, "rd: value depends on the choice of mu");
    }
    return primary;
}

// ---------------------------------------------------------------------------
// Observation suite over the RD table
// ---------------------------------------------------------------------------

struct ObservationReport {
    struct Line {
        std::string label;
        bool ok = false;
        std::string detail;
    };
    std::vector<Line> lines;
    bool all_ok = true;

    void add(std::string label, bool ok, std::string detail = "") {
        all_ok = all_ok && ok;
        lines.push_back({std::move(label), ok, std::move(detail)});
    }
};

/// Runs the four observations against computed RD values up to max_size:
/// the Pieri-type recursion, the one-column constants, the staircase halving
/// and the hook-sum complement.
inline ObservationReport observations_suite(int max_size) {
    ObservationReport rep;
    std::map<Partition, Rat> table;
    for (int sz = 1; sz <= max_size; ++sz)
        for (const auto& lam : partitions_of(sz)) table[lam] = rd(lam, false);

    // (1) Pieri: (|lam+| - 1/2) RD(lam) = sum over lam+ of RD
    for (int sz = 1; sz + 1 <= max_size; ++sz)
        for (const auto& lam : partitions_of(sz)) {
            std::vector<Partition> up;
            for (size_t row = 0; row <= lam.length(); ++row) {
                std::vector<int> parts = lam.parts();
                if (row == lam.length()) parts.push_back(1);
                else ++parts[row];
                if (row > 0 && parts[row] > parts[row - 1]) continue;  // not addable here
                Partition next(std::move(parts));
                if (std::find(up.begin(), up.end(), next) == up.end()) up.push_back(next);
            }
            Rat lhs = (Rat(static_cast<long>(up.size())) - Rat(1, 2)) * table[lam];
            Rat rhs = 0;
            for (const auto& m : up) rhs += table[m];
            rep.add("pieri at " + lam.str(), lhs == rhs,
                    to_string(lhs) + " vs " + to_string(rhs));
        }

    // (2) one-column shapes match the printed constants
    const std::vector<Rat> column = {Rat(1, 2), Rat(5, 12), Rat(3, 8), Rat(251, 720),
                                     Rat(95, 288), Rat(19087, 60480)};
    for (int m = 1; m <= max_size && m <= static_cast<int>(column.size()); ++m) {
        Partition ones(std::vector<int>(static_cast<size_t>(m), 1));
        rep.add("one-column " + ones.str(), table[ones] == column[static_cast<size_t>(m - 1)],
                to_string(table[ones]));
    }

    // (3) staircases halve: RD(st_n) = 1/2^{n-1}
    for (int n = 2; staircase(n).size() <= max_size; ++n) {
        Partition st = staircase(n);
        Rat expect = Rat(1) / Rat(Int(1) << (n - 1));
        rep.add("staircase " + st.str(), table[st] == expect, to_string(table[st]));
    }

    // (4) hooks sum to 1 - 1/2^n
    for (int n = 1; n <= max_size; ++n) {
        Rat sum = 0;
        for (const auto& lam : partitions_of(n))
            if (lam.length() <= 1 || lam.part(1) <= 1) sum += table[lam];
        Rat expect = Rat(1) - Rat(1) / Rat(Int(1) << n);
        rep.add("hooks of size " + std::to_string(n), sum == expect, to_string(sum));
    }
    return rep;
}

}  // namespace qtsym
