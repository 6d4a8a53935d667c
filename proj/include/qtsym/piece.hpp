#pragma once

// Macdonald piece polynomials: the signed corner-weighted combinations of
// corner-deleted Macdonald polynomials, the projection-operator calculus in
// the adjoined z variables, and the verification paths for the vanishing and
// nabla identities.

#include <optional>
#include <sstream>
#include <vector>

#include "qtsym/lw_frame.hpp"
#include "qtsym/macdonald.hpp"
#include "qtsym/partition.hpp"
#include "qtsym/symfunc.hpp"
#include "qtsym/zrat.hpp"

namespace qtsym {

struct PieceInput {
    Partition mu;
    Partition lam;
    int k = 1;
};

/// Validated corner data for a piece computation.
struct PieceFrame {
    Partition mu;
    Partition lam;
    int k = 0;
    int n = 0;                    // corner count of mu
    std::vector<Corner> corner;   // top to bottom
};

inline PieceFrame piece_frame(const PieceInput& in, bool allow_k_n = false) {
    PieceFrame f;
    f.mu = in.mu;
    f.lam = in.lam;
    f.k = in.k;
    f.corner = corners(in.mu);
    f.n = static_cast<int>(f.corner.size());
    if (f.n == 0) throw DomainError("piece: mu must be nonempty");
    const int kmax = allow_k_n ? f.n : f.n - 1;
    if (in.k < 1 || in.k > kmax)
        throw DomainError("piece: k must satisfy 1 <= k <= " + std::to_string(kmax) +
                          " for mu with " + std::to_string(f.n) + " corners");
    if (!fits_in_rectangle(in.lam, f.n, in.k))
        throw DomainError("piece: lambda must fit inside R(n,k)");
    return f;
}

/// T_{mu^{[n]}}: the weight of mu with every corner removed.
inline QTRat t_weight_all_corners_removed(const Partition& mu) {
    const int n = static_cast<int>(corners(mu).size());
    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    return t_weight(remove_corners(mu, all));
}

/// The piece polynomial: a signed sum over k-subsets of corners,
/// coefficients evaluated directly at the corner weights. Homogeneity of
/// degree |mu| - k and monomial denominators in every Schur coefficient are
/// asserted; a surviving pole would mean a corner-ordering bug.
inline SymF piece_poly(const PieceInput& in) {
    PieceFrame f = piece_frame(in);
    SymF acc(Basis::s);
    for (const auto& S : k_subsets(f.n, f.k)) {
        auto Sc = complement_subset(S, f.n);
        std::vector<QTRat> zS;
        for (int i : S) zS.push_back(f.corner[static_cast<size_t>(i - 1)].zweight);
        QTRat coeff = schur_eval_qt(f.lam, zS);
        for (int j : Sc) coeff *= f.corner[static_cast<size_t>(j - 1)].zweight;
        for (int i : S)
            for (int j : Sc) {
                QTRat diff = f.corner[static_cast<size_t>(j - 1)].zweight -
                             f.corner[static_cast<size_t>(i - 1)].zweight;
                if (diff.is_zero()) throw ArithmeticError("piece: coincident corner weights");
                coeff /= diff;
            }
        acc += coeff * htilde(remove_corners(f.mu, S));
    }
    if (f.lam.size() % 2 == 1) acc = -acc;
    for (const auto& [lam, c] : acc.coeffs()) {
        QTSYM_CHECK(lam.size() == f.mu.size() - f.k, "piece: inhomogeneous output");
        QTSYM_CHECK(c.is_laurent(), "piece: denominator survived the corner sum");
    }
    return acc;
}

/// Report of the vanishing identity e_N-perp I = 0 for every N strictly
/// above |mu| - |tilde(lam)| - k, up to the degree |mu| - k.
struct VanishingReport {
    std::vector<int> checked;
    bool all_zero = true;
};

inline VanishingReport verify_vanishing(const PieceInput& in) {
    PieceFrame f = piece_frame(in);
    SymF piece = piece_poly(in);
    const int threshold = f.mu.size() - tilde(f.lam, f.n, f.k).size() - f.k;
    VanishingReport rep;
    for (int N = threshold + 1; N <= f.mu.size() - f.k; ++N) {
        rep.checked.push_back(N);
        if (!e_perp(N, piece).is_zero()) rep.all_zero = false;
    }
    return rep;
}

/// (1 / T_{mu^{[n]}}) e_perp at the critical degree; per the nabla identity
/// this equals nabla(s_{tilde(lam)}) independently of mu.
inline SymF nabla_via_piece(const PieceInput& in) {
    PieceFrame f = piece_frame(in);
    SymF piece = piece_poly(in);
    const int critical = f.mu.size() - tilde(f.lam, f.n, f.k).size() - f.k;
    SymF skewed = e_perp(critical, piece);
    QTRat tall = t_weight_all_corners_removed(f.mu);
    return (QTRat(1) / tall) * skewed;
}

// ---------------------------------------------------------------------------
// The subset family S(lam)
// ---------------------------------------------------------------------------

/// All S' in C([n],k) reachable from S under lam: writing
/// S \ S' = {i_{a_1} < ... < i_{a_r}} (positions a in S) and
/// S' n S^c = {j_{b_1} > ... > j_{b_r}} (positions b in S^c, decreasing),
/// membership requires b_s <= lam_{a_s} for every s.
inline std::vector<std::vector<int>> s_lambda_set(const std::vector<int>& S, const Partition& lam,
                                                  int n, int k) {
    if (static_cast<int>(S.size()) != k) throw DomainError("s_lambda_set: |S| != k");
    if (!fits_in_rectangle(lam, n, k)) throw DomainError("s_lambda_set: lam not inside R(n,k)");
    auto Sc = complement_subset(S, n);
    std::vector<std::vector<int>> out;
    for (const auto& Sp : k_subsets(n, k)) {
        std::vector<int> removed_pos;  // positions (1-based) within S
        for (size_t a = 0; a < S.size(); ++a)
            if (!std::binary_search(Sp.begin(), Sp.end(), S[a])) removed_pos.push_back(static_cast<int>(a + 1));
        std::vector<int> added_pos;  // positions within S^c, decreasing j order
        for (size_t b = Sc.size(); b-- > 0;)
            if (std::binary_search(Sp.begin(), Sp.end(), Sc[b])) added_pos.push_back(static_cast<int>(b + 1));
        if (removed_pos.size() != added_pos.size()) continue;  // cannot happen, sizes match
        bool ok = true;
        for (size_t s = 0; s < removed_pos.size(); ++s)
            if (added_pos[s] > lam.part(static_cast<size_t>(removed_pos[s] - 1))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(Sp);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Projection operators in the z variables
// ---------------------------------------------------------------------------

/// pi_{i,j} f = (z_j f - z_i f|_{z_i <-> z_j}) / (z_j - z_i). Fixes functions
/// symmetric in z_i, z_j; idempotent on its image.
inline ZRat pi_op(int i, int j, const ZRat& f) {
    if (i == j) throw DomainError("pi_op needs i != j");
    const int n = f.arity();
    ZRat zi = ZRat::z(n, i), zj = ZRat::z(n, j);
    ZRat swapped = f.z_swapped(i, j);
    return (zj * f - zi * swapped) / (zj - zi);
}

/// The cellwise product of projections attached to lam relative to S:
/// cell (r,s) contributes pi_{i_r, j_s}. Cells apply in reading order along
/// rows (top row first, left to right), rightmost factor first.
inline ZRat pi_seq(const Partition& lam, const std::vector<int>& S, int n, const ZRat& f) {
    auto Sc = complement_subset(S, n);
    ZRat acc = f;
    for (int r = static_cast<int>(lam.length()); r >= 1; --r)
        for (int s = lam.parts()[static_cast<size_t>(r - 1)]; s >= 1; --s)
            acc = pi_op(S[static_cast<size_t>(r - 1)], Sc[static_cast<size_t>(s - 1)], acc);
    return acc;
}

// ---------------------------------------------------------------------------
// The z-deformed Macdonald polynomial and its projections
// ---------------------------------------------------------------------------

/// A z-rational linear combination of piece polynomials, keyed by the
/// rectangle partition indexing each piece.
struct ZSymLinear {
    int n = 0, k = 0;
    std::map<Partition, ZRat> coeffs;
};

/// The z-deformation of htilde(mu^S): coefficient of the nu-piece is
/// s_{tilde(nu)}[z_{S^c}] / prod_{j in S^c} z_j.
inline ZSymLinear h_mu_s_deformed(int n, int k, const std::vector<int>& S) {
    ZSymLinear out;
    out.n = n;
    out.k = k;
    auto Sc = complement_subset(S, n);
    ZRat denom(n, 1);
    for (int j : Sc) denom *= ZRat::z(n, j);
    for (const auto& nu : partitions_in_rectangle(n, k)) {
        ZRat c = schur_finite(tilde(nu, n, k), n, Sc) / denom;
        if (!c.is_zero()) out.coeffs[nu] = c;
    }
    return out;
}

/// Applies pi_{lam,S} coefficientwise, specializes z to the corner weights
/// of mu, and combines with the piece polynomials.
inline SymF h_lambda_mu_s(const Partition& mu, const std::vector<int>& S, const Partition& lam) {
    auto cs = corners(mu);
    const int n = static_cast<int>(cs.size());
    const int k = static_cast<int>(S.size());
    if (n > 5) throw DomainError("h_lambda_mu_s: z-arity cost limits corner count to 5");
    if (!fits_in_rectangle(lam, n, k)) throw DomainError("h_lambda_mu_s: lam not inside R(n,k)");
    ZSymLinear def = h_mu_s_deformed(n, k, S);
    std::vector<QTRat> weights;
    for (const auto& c : cs) weights.push_back(c.zweight);
    SymF acc(Basis::s);
    for (const auto& [nu, zc] : def.coeffs) {
        ZRat projected = pi_seq(lam, S, n, zc);
        QTRat c = projected.substituted(weights);  // throws on a pole
        if (c.is_zero()) continue;
        acc += c * piece_poly({mu, nu, k});
    }
    return acc;
}

/// Rebuilds htilde(mu^S) from the piece polynomials via the corner-weight
/// specialization of the deformation coefficients.
inline bool reconstruct_h(const Partition& mu, const std::vector<int>& S) {
    auto cs = corners(mu);
    const int n = static_cast<int>(cs.size());
    const int k = static_cast<int>(S.size());
    std::vector<QTRat> weights;
    for (const auto& c : cs) weights.push_back(c.zweight);
    auto Sc = complement_subset(S, n);
    SymF acc(Basis::s);
    for (const auto& nu : partitions_in_rectangle(n, k)) {
        std::vector<QTRat> zsc;
        for (int j : Sc) zsc.push_back(weights[static_cast<size_t>(j - 1)]);
        QTRat c = schur_eval_qt(tilde(nu, n, k), zsc);
        for (int j : Sc) c /= weights[static_cast<size_t>(j - 1)];
        if (c.is_zero()) continue;
        acc += c * piece_poly({mu, nu, k});
    }
    return acc == htilde(remove_corners(mu, S));
}

// ---------------------------------------------------------------------------
// Positivity dashboard (conjecture-level, never a hard failure)
// ---------------------------------------------------------------------------

struct DashboardLine {
    std::string label;
    bool positive = false;
    std::string detail;
};

struct DashboardReport {
    std::vector<DashboardLine> lines;
    int violations = 0;
};

/// True when every Schur coefficient is a Laurent polynomial in q,t with
/// coefficients all of one sign (nonnegative when `sign` = +1). Laurent
/// monomial factors are allowed: the signed pieces carry them, only the
/// projected deformations are honest polynomials.
inline bool schur_sign_status(const SymF& f, int sign, std::string* detail) {
    SymF fs = f.to_basis(Basis::s);
    for (const auto& [lam, c] : fs.coeffs()) {
        if (!c.is_laurent()) {
            if (detail) *detail = "coefficient of s" + lam.str() + " has a true denominator";
            return false;
        }
        for (const auto& [e, v] : c.num().terms())
            if ((sign > 0 && v < 0) || (sign < 0 && v > 0)) {
                if (detail) *detail = "mixed sign at s" + lam.str();
                return false;
            }
    }
    return true;
}

/// Reports the conjectured sign pattern of the signed pieces and of the
/// consecutive differences along a chain of nested shapes from the empty
/// partition to the full rectangle.
inline DashboardReport positivity_dashboard(const Partition& mu, int k,
                                            const std::vector<Partition>& chain) {
    auto cs = corners(mu);
    const int n = static_cast<int>(cs.size());
    DashboardReport rep;
    for (const auto& lam : chain) {
        PieceInput in{mu, lam, k};
        SymF piece = piece_poly(in);
        int adj_sign = lw_frame(tilde(lam, n, k), n, n - k).adj % 2 == 0 ? 1 : -1;
        SymF signed_piece = adj_sign > 0 ? piece : -piece;
        DashboardLine line;
        line.label = "piece mu=" + mu.str() + " lam=" + lam.str() + " k=" + std::to_string(k);
        line.positive = schur_sign_status(signed_piece, 1, &line.detail);
        if (!line.positive) ++rep.violations;
        rep.lines.push_back(std::move(line));
    }
    if (n <= 5 && chain.size() >= 2) {
        std::vector<int> S0(static_cast<size_t>(k));
        std::iota(S0.begin(), S0.end(), 1);
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            SymF diff = h_lambda_mu_s(mu, S0, chain[i]) - h_lambda_mu_s(mu, S0, chain[i + 1]);
            DashboardLine line;
            line.label = "difference " + chain[i].str() + " -> " + chain[i + 1].str() +
                         " at mu=" + mu.str();
            line.positive = schur_sign_status(diff, 1, &line.detail);
            if (!line.positive) ++rep.violations;
            rep.lines.push_back(std::move(line));
        }
    }
    return rep;
}

}  // namespace qtsym
