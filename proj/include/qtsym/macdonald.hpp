#pragma once

// Modified Macdonald polynomials through the inv/maj statistic on filled
// diagrams, the cycling and column-exchange moves, expansion in the Macdonald
// basis via the star inner product, Macdonald-Kostka coefficients, and the
// nabla operator.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <mutex>
#include <unordered_map>

#include "qtsym/diagram.hpp"
#include "qtsym/parallel.hpp"
#include "qtsym/partition.hpp"
#include "qtsym/serialize.hpp"
#include "qtsym/symfunc.hpp"
#include "qtsym/version.hpp"

namespace qtsym {

using Word = std::vector<int>;  // letters >= 1, in reading order

// ---------------------------------------------------------------------------
// The statistic
// ---------------------------------------------------------------------------

/// All attacking pairs (u,v) of a diagram: same row with u left of v, or u
/// one row above v and strictly to its right.
inline std::vector<std::pair<Cell, Cell>> attacking_pairs(const Diagram& d) {
    std::vector<std::pair<Cell, Cell>> out;
    auto cells = d.cells();
    for (const Cell& u : cells)
        for (const Cell& v : cells) {
            if (u.row == v.row && u.col < v.col) out.push_back({u, v});
            else if (u.row == v.row + 1 && u.col > v.col) out.push_back({u, v});
        }
    return out;
}

template <class R>
R stat(const FilledDiagramT<R>& fd, const Word& w, const R& one, const R& qval) {
    const Diagram& d = fd.diagram();
    auto order = d.reading_order();
    if (w.size() != order.size()) throw DomainError("word length must match diagram size");
    std::map<Cell, int> letter;
    for (size_t i = 0; i < order.size(); ++i) letter[order[i]] = w[i];
    long inv = 0;
    for (const auto& [u, v] : attacking_pairs(d))
        if (letter[u] > letter[v]) ++inv;
    R result = one;
    for (int e = 0; e < inv; ++e) result = result * qval;
    for (const Cell& u : d.cells()) {
        if (d.is_bottom(u)) continue;
        Cell below{u.row - 1, u.col};
        if (letter[u] > letter[below]) result = result * fd.value(u);
    }
    return result;
}

inline QTRat stat(const FilledDiagram& fd, const Word& w) {
    return stat<QTRat>(fd, w, QTRat(1), QTRat::q());
}

// ---------------------------------------------------------------------------
// Generating function over all words (generic filled diagram)
// ---------------------------------------------------------------------------

/// The Macdonald polynomial of a filled diagram: the statistic-weighted sum
/// over words in the alphabet {1..|D|}, reconstructed through the symmetry
/// tripwire. Intended for small diagrams; partitions go through htilde().
inline SymF htilde_filled(const FilledDiagram& fd) {
    const Diagram& d = fd.diagram();
    const int sz = d.size();
    if (sz == 0) return SymF::one(Basis::s);
    if (sz > 7) throw DomainError("htilde_filled: diagram too large for the generic path");
    auto order = d.reading_order();
    std::map<Cell, int> pos;
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> attack;
    for (const auto& [u, v] : attacking_pairs(d)) attack.push_back({pos[u], pos[v]});
    struct DescSlot {
        int above, below;
        QTRat value;
    };
    std::vector<DescSlot> descs;
    for (const Cell& u : d.cells()) {
        if (d.is_bottom(u)) continue;
        descs.push_back({pos[u], pos[Cell{u.row - 1, u.col}], fd.value(u)});
    }

    // group words by (inversion count, active descent set) so the exact
    // coefficient work happens once per class
    std::map<std::pair<long, std::vector<int>>, std::map<std::vector<int32_t>, long long>> classes;
    Word w(static_cast<size_t>(sz), 1);
    while (true) {
        long inv = 0;
        for (const auto& [a, b] : attack)
            if (w[static_cast<size_t>(a)] > w[static_cast<size_t>(b)]) ++inv;
        std::vector<int> active;
        for (size_t i = 0; i < descs.size(); ++i)
            if (w[static_cast<size_t>(descs[i].above)] > w[static_cast<size_t>(descs[i].below)])
                active.push_back(static_cast<int>(i));
        std::vector<int32_t> content(static_cast<size_t>(sz), 0);
        for (int letter : w) ++content[static_cast<size_t>(letter - 1)];
        ++classes[{inv, std::move(active)}][content];
        int p = sz - 1;
        while (p >= 0 && w[static_cast<size_t>(p)] == sz) {
            w[static_cast<size_t>(p)] = 1;
            --p;
        }
        if (p < 0) break;
        ++w[static_cast<size_t>(p)];
    }

    XPoly acc;
    acc.nvars = sz;
    for (const auto& [key, contents] : classes) {
        QTRat s = QTRat(QTPoly::monomial(1, static_cast<int>(key.first), 0));
        for (int i : key.second) s *= descs[static_cast<size_t>(i)].value;
        for (const auto& [content, count] : contents) acc.add(content, QTRat(Int(static_cast<long>(count))) * s);
    }
    return from_x_polynomial(acc, sz).to_basis(Basis::s);
}

// ---------------------------------------------------------------------------
// Fast path for partitions, with disk cache
// ---------------------------------------------------------------------------

namespace detail {

// Integer-exponent enumeration of the statistic over all |mu|^|mu| words.
// Exponent bookkeeping is incremental along an odometer; counts accumulate
// per (content, q-exponent, t-exponent).
inline std::unordered_map<uint64_t, long long> hhl_counts(const Partition& mu) {
    const int d = mu.size();
    Diagram dia = Diagram::from_partition(mu);
    auto order = dia.reading_order();
    std::map<Cell, int> pos;
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    // attacking pairs as position pairs
    std::vector<std::vector<std::pair<int, bool>>> pairs_of(static_cast<size_t>(d));
    for (const auto& [u, v] : attacking_pairs(dia)) {
        int pu = pos[u], pv = pos[v];
        pairs_of[static_cast<size_t>(pu)].push_back({pv, true});    // p is the u side
        pairs_of[static_cast<size_t>(pv)].push_back({pu, false});   // p is the v side
    }
    // descent data: for every non-bottom cell u, (pos(u), pos(below), -arm, leg+1)
    struct Desc {
        int above, below, qexp, texp;
    };
    std::vector<Desc> descs;
    std::vector<std::vector<int>> descs_of(static_cast<size_t>(d));
    for (const Cell& u : dia.cells()) {
        if (dia.is_bottom(u)) continue;
        Cell below{u.row - 1, u.col};
        Desc dd{pos[u], pos[below], -mu.arm(u), mu.leg(u) + 1};
        descs_of[static_cast<size_t>(dd.above)].push_back(static_cast<int>(descs.size()));
        descs_of[static_cast<size_t>(dd.below)].push_back(static_cast<int>(descs.size()));
        descs.push_back(dd);
    }

    std::vector<std::unordered_map<uint64_t, long long>> partial(static_cast<size_t>(d));
    auto worker = [&](int block) {
        // fix the first letter to block+1, enumerate the rest
        std::vector<int> w(static_cast<size_t>(d), 1);
        w[0] = block + 1;
        long inv = 0;
        long qmaj = 0, tmaj = 0;
        std::vector<int> content(static_cast<size_t>(d), 0);
        for (int letter : w) ++content[static_cast<size_t>(letter - 1)];
        auto recompute = [&]() {
            inv = 0;
            qmaj = tmaj = 0;
            for (int p = 0; p < d; ++p)
                for (const auto& [o, is_u] : pairs_of[static_cast<size_t>(p)])
                    if (is_u && w[static_cast<size_t>(p)] > w[static_cast<size_t>(o)]) ++inv;
            for (const auto& dd : descs)
                if (w[static_cast<size_t>(dd.above)] > w[static_cast<size_t>(dd.below)]) {
                    qmaj += dd.qexp;
                    tmaj += dd.texp;
                }
        };
        recompute();
        auto& out = partial[static_cast<size_t>(block)];
        auto remove_pos = [&](int p) {
            const int wp = w[static_cast<size_t>(p)];
            for (const auto& [o, is_u] : pairs_of[static_cast<size_t>(p)]) {
                const int wo = w[static_cast<size_t>(o)];
                if (is_u ? wp > wo : wo > wp) --inv;
            }
            for (int di : descs_of[static_cast<size_t>(p)]) {
                const auto& dd = descs[static_cast<size_t>(di)];
                if (w[static_cast<size_t>(dd.above)] > w[static_cast<size_t>(dd.below)]) {
                    qmaj -= dd.qexp;
                    tmaj -= dd.texp;
                }
            }
            --content[static_cast<size_t>(wp - 1)];
        };
        auto add_pos = [&](int p) {
            const int wp = w[static_cast<size_t>(p)];
            for (const auto& [o, is_u] : pairs_of[static_cast<size_t>(p)]) {
                const int wo = w[static_cast<size_t>(o)];
                if (is_u ? wp > wo : wo > wp) ++inv;
            }
            for (int di : descs_of[static_cast<size_t>(p)]) {
                const auto& dd = descs[static_cast<size_t>(di)];
                if (w[static_cast<size_t>(dd.above)] > w[static_cast<size_t>(dd.below)]) {
                    qmaj += dd.qexp;
                    tmaj += dd.texp;
                }
            }
            ++content[static_cast<size_t>(wp - 1)];
        };
        while (true) {
            // record
            uint64_t key = 0;
            for (int i = 0; i < d; ++i) key = key << 4 | static_cast<uint64_t>(content[static_cast<size_t>(i)]);
            long qexp = inv + qmaj;
            QTSYM_CHECK(qexp >= 0 && tmaj >= 0, "statistic exponent went negative");
            key = key << 14 | static_cast<uint64_t>(qexp) << 7 | static_cast<uint64_t>(tmaj);
            ++out[key];
            // odometer over positions 1..d-1
            int p = d - 1;
            while (p >= 1 && w[static_cast<size_t>(p)] == d) {
                remove_pos(p);
                w[static_cast<size_t>(p)] = 1;
                add_pos(p);
                --p;
            }
            if (p < 1) break;
            remove_pos(p);
            ++w[static_cast<size_t>(p)];
            add_pos(p);
        }
    };

    std::unordered_map<uint64_t, long long> total;
    parallel_blocks(d, worker, [&](int block) {
        for (const auto& [k, v] : partial[static_cast<size_t>(block)]) total[k] += v;
        partial[static_cast<size_t>(block)].clear();
    });
    return total;
}

inline SymF hhl_from_counts(const Partition& mu,
                            const std::unordered_map<uint64_t, long long>& counts) {
    const int d = mu.size();
    XPoly acc;
    acc.nvars = d;
    for (const auto& [key, count] : counts) {
        const long texp = static_cast<long>(key & 0x7f);
        const long qexp = static_cast<long>(key >> 7 & 0x7f);
        uint64_t rest = key >> 14;
        std::vector<int32_t> content(static_cast<size_t>(d), 0);
        for (int i = d - 1; i >= 0; --i) {
            content[static_cast<size_t>(i)] = static_cast<int32_t>(rest & 0xf);
            rest >>= 4;
        }
        acc.add(content, QTRat(QTPoly::monomial(Int(static_cast<long>(count)), static_cast<int>(qexp), static_cast<int>(texp))));
    }
    return from_x_polynomial(acc, d).to_basis(Basis::s);
}

}  // namespace detail

inline int htilde_size_bound() {
    if (const char* env = std::getenv("QTSYM_HTILDE_BOUND")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 8;
}

inline std::filesystem::path cache_dir() {
    if (const char* env = std::getenv("QTSYM_CACHE_DIR")) return env;
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "qtsym";
    return std::filesystem::path(".qtsym-cache");
}

/// Asserts that every Schur coefficient is a polynomial in q,t with
/// nonnegative integer coefficients.
inline void assert_schur_positive(const SymF& f, const std::string& what) {
    SymF fs = f.to_basis(Basis::s);
    for (const auto& [lam, c] : fs.coeffs()) {
        QTSYM_CHECK(c.is_polynomial(), what + ": Schur coefficient has a denominator");
        for (const auto& [e, v] : c.num().terms())
            QTSYM_CHECK(v > 0, what + ": negative Schur coefficient term");
    }
}

/// The modified Macdonald polynomial of a partition, Schur basis, cached in
/// memory and on disk (one JSON file per partition under the cache dir).
inline SymF htilde(const Partition& mu) {
    if (mu.size() > htilde_size_bound())
        throw DomainError("htilde: |mu| = " + std::to_string(mu.size()) +
                          " exceeds the configured bound " + std::to_string(htilde_size_bound()) +
                          " (raise QTSYM_HTILDE_BOUND if this is intended)");
    static std::mutex mtx;
    static std::map<Partition, SymF> memo;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(mu);
        if (it != memo.end()) return it->second;
    }

    std::filesystem::path dir = cache_dir();
    std::string name = "H";
    for (size_t i = 0; i < mu.parts().size(); ++i)
        name += (i ? "-" : "_") + std::to_string(mu.parts()[i]);
    std::filesystem::path file = dir / (name + ".json");
    if (std::filesystem::exists(file)) {
        try {
            Json j = Json::parse(read_file(file.string()));
            if (j.at("engine").get<std::string>() == kEngineStamp) {
                SymF f = symf_from_json(j.at("value"));
                std::lock_guard<std::mutex> lock(mtx);
                memo[mu] = f;
                return f;
            }
        } catch (const std::exception&) {
            // unreadable cache entries are recomputed
        }
    }

    SymF f = mu.empty() ? SymF::one(Basis::s)
                        : detail::hhl_from_counts(mu, detail::hhl_counts(mu));
    assert_schur_positive(f, "htilde" + mu.str());

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!ec) {
        Json j{{"engine", kEngineStamp}, {"mu", partition_to_json(mu)}, {"value", symf_to_json(f)}};
        try {
            write_file(file.string(), j.dump());
        } catch (const std::exception&) {
            // cache write failures are non-fatal
        }
    }
    std::lock_guard<std::mutex> lock(mtx);
    memo[mu] = f;
    return f;
}

// ---------------------------------------------------------------------------
// Cycling and column exchange
// ---------------------------------------------------------------------------

/// Moves the leftmost column to the right end, shifted up by one row; the
/// filling travels with its cells. Preserves the generating function.
template <class R>
FilledDiagramT<R> cycle(const FilledDiagramT<R>& fd) {
    const Diagram& d = fd.diagram();
    if (d.ncols() == 0) throw DomainError("cycle: empty diagram");
    auto cols = d.columns();
    std::vector<int> first = cols.front();
    cols.erase(cols.begin());
    for (int& r : first) ++r;
    cols.push_back(first);
    Diagram nd(std::move(cols));
    std::map<Cell, R> nf;
    const int ncols = d.ncols();
    for (const auto& [u, val] : fd.filling()) {
        Cell nu = u.col == 1 ? Cell{u.row + 1, ncols} : Cell{u.row, u.col - 1};
        nf[nu] = val;
    }
    // values on cells that became bottoms are dropped; cells that stopped
    // being bottoms never had values, but cycling only shifts the first
    // column up so its bottom stays a bottom
    std::map<Cell, R> pruned;
    for (const auto& [u, val] : nf)
        if (!nd.is_bottom(u)) pruned[u] = val;
    for (const Cell& u : nd.cells())
        if (!nd.is_bottom(u) && !pruned.count(u)) {
            // the cell above the moved column's old bottom needs its value;
            // this can only happen if the value was omitted on input
            throw DomainError("cycle: filling missing after shift");
        }
    return FilledDiagramT<R>(std::move(nd), std::move(pruned));
}

/// The column exchange move at column j. Requires column j to be the rows
/// 1..n, column j+1 the rows 1..m with n >= m, and the filling ratios
///   f(2,j)/f(2,j+1) = ... = f(m,j)/f(m,j+1)   (all of rows 2..m)
/// to agree, with the common value also equal to q^{-1} f(m+1,j) when n > m.
/// The image swaps the two columns and divides the value entering row m+1 of
/// the taller column by q.
template <class R>
FilledDiagramT<R> col_exchange(const FilledDiagramT<R>& fd, int j, const R& qinv) {
    const Diagram& d = fd.diagram();
    if (j < 1 || j + 1 > d.ncols()) throw DomainError("col_exchange: column index out of range");
    const auto& cj = d.columns()[static_cast<size_t>(j - 1)];
    const auto& cj1 = d.columns()[static_cast<size_t>(j)];
    auto is_interval = [](const std::vector<int>& c) {
        return c.empty() || (c.front() == 1 && c.back() == static_cast<int>(c.size()));
    };
    if (!is_interval(cj) || !is_interval(cj1))
        throw DomainError("col_exchange: columns must be bottom-justified intervals");
    const int n = static_cast<int>(cj.size()), m = static_cast<int>(cj1.size());
    if (n < m) throw DomainError("col_exchange: left column must not be shorter");

    // side conditions
    std::optional<R> ratio;
    for (int i = 2; i <= m; ++i) {
        R r = fd.value(Cell{i, j}) / fd.value(Cell{i, j + 1});
        if (!ratio) ratio = r;
        else if (*ratio != r)
            throw DomainError("col_exchange: ratio f(" + std::to_string(i) + "," +
                              std::to_string(j) + ")/f(" + std::to_string(i) + "," +
                              std::to_string(j + 1) + ") breaks the common-ratio condition");
    }
    if (n > m && m >= 1) {
        R anchor = qinv * fd.value(Cell{m + 1, j});
        if (ratio && *ratio != anchor)
            throw DomainError("col_exchange: common ratio does not match q^{-1} f(" +
                              std::to_string(m + 1) + "," + std::to_string(j) + ")");
    }

    auto cols = d.columns();
    std::swap(cols[static_cast<size_t>(j - 1)], cols[static_cast<size_t>(j)]);
    Diagram nd(std::move(cols));
    std::map<Cell, R> nf;
    for (const auto& [u, val] : fd.filling()) {
        if (u.col == j) {
            if (u.row == m + 1) nf[Cell{u.row, j + 1}] = qinv * val;
            else nf[Cell{u.row, j + 1}] = val;
        } else if (u.col == j + 1) {
            nf[Cell{u.row, j}] = val;
        } else {
            nf[u] = val;
        }
    }
    std::map<Cell, R> pruned;
    for (const auto& [u, val] : nf)
        if (!nd.is_bottom(u)) pruned[u] = val;
    return FilledDiagramT<R>(std::move(nd), std::move(pruned));
}

inline FilledDiagram col_exchange(const FilledDiagram& fd, int j) {
    return col_exchange<QTRat>(fd, j, QTRat::q().inverse());
}

inline FilledDiagramT<ZRat> col_exchange_z(const FilledDiagramT<ZRat>& fd, int j, int arity) {
    return col_exchange<ZRat>(fd, j, ZRat::q(arity).pow(-1));
}

// ---------------------------------------------------------------------------
// Macdonald-basis expansion, nabla, Kostka
// ---------------------------------------------------------------------------

struct MacExpansion {
    std::map<Partition, QTRat> coeffs;
};

/// Expands a homogeneous symmetric function in the Macdonald basis through
/// star-orthogonality; the reconstruction is asserted.
inline MacExpansion mac_expand(const SymF& f) {
    if (!f.is_homogeneous()) throw DomainError("mac_expand needs homogeneous input");
    MacExpansion out;
    const int d = f.degree();
    SymF check(Basis::s);
    SymF fs = f.to_basis(Basis::s);
    for (const auto& mu : partitions_of(d)) {
        SymF hmu = htilde(mu);
        QTRat c = star_inner(fs, hmu) / (hnorm(mu) * hnorm_prime(mu));
        if (c.is_zero()) continue;
        out.coeffs[mu] = c;
        check += c * hmu;
    }
    QTSYM_CHECK(check == fs, "Macdonald expansion does not reconstruct its input");
    return out;
}

/// From an expansion back to a symmetric function (Schur basis).
inline SymF mac_assemble(const MacExpansion& e) {
    SymF out(Basis::s);
    for (const auto& [mu, c] : e.coeffs) out += c * htilde(mu);
    return out;
}

/// The nabla eigenoperator (power +1) and its inverse (power -1).
inline SymF nabla(const SymF& f, int power = 1) {
    if (power != 1 && power != -1) throw DomainError("nabla power must be +1 or -1");
    if (f.is_zero()) return SymF(Basis::s);
    if (!f.is_homogeneous()) {
        // apply degree by degree
        std::map<int, SymF> graded;
        SymF fp = f.to_basis(Basis::p);
        for (const auto& [lam, c] : fp.coeffs()) {
            auto [it, fresh] = graded.try_emplace(lam.size(), SymF(Basis::p));
            it->second.add_coeff(lam, c);
        }
        SymF out(Basis::s);
        for (const auto& [d, comp] : graded) out += nabla(comp, power);
        return out;
    }
    MacExpansion e = mac_expand(f);
    SymF out(Basis::s);
    for (const auto& [mu, c] : e.coeffs) {
        QTRat tmu = t_weight(mu);
        out += (power == 1 ? c * tmu : c / tmu) * htilde(mu);
    }
    return out;
}

/// Macdonald-Kostka coefficient: the Schur coefficient of htilde(mu).
inline QTRat kostka(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw DomainError("kostka needs |lam| = |mu|");
    return htilde(mu).coeff(lam);
}

// ---------------------------------------------------------------------------
// Skewing identity cross-check
// ---------------------------------------------------------------------------

/// (nabla^{-1} f[X - eps]) evaluated plethystically at a scalar alphabet.
inline QTRat pi_prime_at(const SymF& f, const QTRat& scalar_alphabet) {
    AlphabetExpr XmE = AlphabetExpr::x() - AlphabetExpr::eps();
    SymF shifted = std::get<SymF>(plethysm(f, XmE));
    SymF ninv = nabla(shifted, -1);
    return plethysm_scalar(ninv, AlphabetExpr::scalar(scalar_alphabet));
}

/// Verifies the elementary-skewing expansion of a Macdonald polynomial:
///   e^perp_{n-m} htilde(mu) =
///     (qt)^m T_mu sum_{lam |- m} rev(Pi'_{htilde(lam)}[D_mu]) T_lam
///                htilde(lam) / (hnorm hnorm').
inline bool skew_macdonald_check(const Partition& mu, int m) {
    const int n = mu.size();
    if (m < 0 || m > n) throw DomainError("skew_macdonald_check needs 0 <= m <= |mu|");
    SymF lhs = e_perp(n - m, htilde(mu));
    QTRat dmu = d_poly(mu);
    SymF rhs(Basis::s);
    for (const auto& lam : partitions_of(m)) {
        QTRat w = pi_prime_at(htilde(lam), dmu).reversed();
        rhs += (w * t_weight(lam) / (hnorm(lam) * hnorm_prime(lam))) * htilde(lam);
    }
    rhs = ((QTRat::q() * QTRat::t()).pow(m) * t_weight(mu)) * rhs;
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Deformed staircase diagrams
// ---------------------------------------------------------------------------

struct DeltaFilled {
    FilledDiagram plain;           // (delta_S, f_S)
    FilledDiagramT<ZRat> zform;    // (delta_S, f^z_S)
    int zarity = 0;
};

/// The z-specialization that turns the z-deformed staircase filling back
/// into the plain one.
inline std::vector<QTRat> delta_z_values(int n, int N) {
    std::vector<QTRat> z;
    for (int j = 1; j <= N + n - 1; ++j) {
        if (j <= n) z.push_back(QTRat::laurent(1, 1 - j, j + 1 - N - n));
        else z.push_back(QTRat::laurent(1, -n, j + 1 - N - n));
    }
    return z;
}

/// Builds the cycled column rearrangement of the corner-deleted augmented
/// staircase together with its z-deformation. S is a subset of {1..n}
/// indexing deleted corners (top to bottom).
inline DeltaFilled build_delta_filled(int n, int N, const std::vector<int>& S) {
    if (N < 1 || n < 1) throw DomainError("build_delta_filled needs n, N >= 1");
    const int k = static_cast<int>(S.size());
    auto Sc = complement_subset(S, n);

    // column heights of delta^S, S-columns first, then the rest ascending
    std::vector<int> beta;
    for (int i : S) beta.push_back(N + n - i - 1);
    for (int j : Sc) beta.push_back(N + n - j);
    FilledDiagram fd = standard_filling(beta);
    for (int c = 0; c < k; ++c) fd = cycle(fd);

    // z-deformation on the same diagram
    const int arity = N + n - 1;
    std::map<Cell, ZRat> zf;
    const Diagram& dia = fd.diagram();
    ZRat qz = ZRat::q(arity);
    for (const Cell& u : dia.cells()) {
        if (dia.is_bottom(u)) continue;
        const int zrow = N + n + 1 - u.row;
        ZRat val = ZRat::z(arity, zrow);
        if (u.col <= n - k) {
            val = qz * val / ZRat::z(arity, Sc[static_cast<size_t>(u.col - 1)]);
        } else {
            int ib = S[static_cast<size_t>(u.col - (n - k) - 1)];
            val = val / ZRat::z(arity, ib);
            bool in_sc = std::find(Sc.begin(), Sc.end(), zrow) != Sc.end();
            if (!in_sc) val = qz * val;
        }
        zf[u] = val;
    }
    FilledDiagramT<ZRat> zform(dia, std::move(zf));
    return DeltaFilled{std::move(fd), std::move(zform), arity};
}

/// Specializes a z-filled diagram by the staircase z-values.
inline FilledDiagram specialize_delta(const FilledDiagramT<ZRat>& zfd, int n, int N) {
    auto z = delta_z_values(n, N);
    std::map<Cell, QTRat> f;
    for (const auto& [u, val] : zfd.filling()) f[u] = val.substituted(z);
    return FilledDiagram(zfd.diagram(), std::move(f));
}

}  // namespace qtsym
