#pragma once

// Verification orchestration: each suite runs one family of identities and
// returns a machine-readable report with stable ordering. Theorem-level
// checks are hard (a failing case fails the suite); the positivity dashboard
// is report-only.

#include <chrono>
#include <map>
#include <random>
#include <tuple>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qtsym/lw.hpp"
#include "qtsym/macdonald.hpp"
#include "qtsym/piece.hpp"
#include "qtsym/qt1.hpp"

namespace qtsym {

struct VerifyCase {
    std::string input;
    bool pass = false;
    std::string expected;
    std::string actual;
    long elapsed_ms = 0;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;
    bool report_only = false;

    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : cases)
            if (!c.pass) ++n;
        return n;
    }
};

namespace detail {

class CaseTimer {
public:
    CaseTimer() : start_(std::chrono::steady_clock::now()) {}
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline void run_case(VerifyReport& rep, const std::string& input,
                     const std::function<std::pair<bool, std::string>()>& body,
                     const std::string& expected = "identity holds") {
    CaseTimer timer;
    VerifyCase c;
    c.input = input;
    c.expected = expected;
    try {
        auto [ok, actual] = body();
        c.pass = ok;
        c.actual = actual;
    } catch (const std::exception& e) {
        c.pass = false;
        c.actual = std::string("exception: ") + e.what();
    }
    c.elapsed_ms = timer.ms();
    rep.cases.push_back(std::move(c));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// Star orthogonality of the Macdonald basis through degree max_n.
inline VerifyReport verify_orthogonality(int max_n = 6) {
    VerifyReport rep{"orthogonality", {}, false};
    for (int n = 1; n <= max_n; ++n) {
        auto parts = partitions_of(n);
        for (const auto& mu : parts)
            for (const auto& nu : parts)
                detail::run_case(rep, "mu=" + mu.str() + " nu=" + nu.str(), [&]() {
                    QTRat inner = star_inner(htilde(mu), htilde(nu));
                    QTRat expect = mu == nu ? hnorm(mu) * hnorm_prime(mu) : QTRat(0);
                    return std::make_pair(inner == expect, inner == expect ? "ok" : inner.str());
                });
    }
    return rep;
}

/// The vanishing identity, exhaustively over all admissible inputs.
inline VerifyReport verify_vanishing_suite(int max_cells = 7) {
    VerifyReport rep{"vanishing", {}, false};
    for (int size = 2; size <= max_cells; ++size)
        for (const auto& mu : partitions_of(size)) {
            const int n = static_cast<int>(corners(mu).size());
            for (int k = 1; k < n; ++k)
                for (const auto& lam : partitions_in_rectangle(n, k))
                    detail::run_case(
                        rep, "mu=" + mu.str() + " lam=" + lam.str() + " k=" + std::to_string(k),
                        [&]() {
                            VanishingReport r = verify_vanishing({mu, lam, k});
                            std::string what = std::to_string(r.checked.size()) + " degrees";
                            return std::make_pair(r.all_zero, what);
                        },
                        "all checked skews vanish");
        }
    return rep;
}

/// The nabla identity plus independence of the ambient shape.
inline VerifyReport verify_nabla_suite(int max_cells = 7) {
    VerifyReport rep{"nabla-via-piece", {}, false};
    std::map<std::tuple<int, int, Partition>, SymF> classes;
    for (int size = 2; size <= max_cells; ++size)
        for (const auto& mu : partitions_of(size)) {
            const int n = static_cast<int>(corners(mu).size());
            for (int k = 1; k < n; ++k)
                for (const auto& lam : partitions_in_rectangle(n, k))
                    detail::run_case(
                        rep, "mu=" + mu.str() + " lam=" + lam.str() + " k=" + std::to_string(k),
                        [&]() {
                            SymF got = nabla_via_piece({mu, lam, k});
                            SymF expect =
                                nabla(SymF::basis_element(Basis::s, tilde(lam, n, k)));
                            bool ok = got == expect;
                            auto key = std::make_tuple(n, k, lam);
                            auto it = classes.find(key);
                            if (it == classes.end()) classes.emplace(key, got);
                            else ok = ok && it->second == got;
                            return std::make_pair(ok, ok ? "ok" : got.str());
                        },
                        "nabla of the complement shape");
        }
    return rep;
}

/// Both routes to the tableau generating function against the nabla oracle.
inline VerifyReport verify_lw_suite(int max_cells = 4) {
    VerifyReport rep{"lw-equivalence", {}, false};
    for (int size = 0; size <= max_cells; ++size)
        for (const auto& lam : partitions_of(size)) {
            int k = std::max<int>(1, static_cast<int>(lam.length()));
            int n = std::max(k + 1, k + lam.part(0));
            detail::run_case(rep, "lam=" + lam.str() + " frame n=" + std::to_string(n) +
                                      " k=" + std::to_string(k),
                             [&]() {
                                 LWFrame f = lw_frame(lam, n, k);
                                 SymF direct = lw_direct(f);
                                 SymF det = lw_via_det(f);
                                 SymF oracle = nabla(SymF::basis_element(Basis::s, lam));
                                 if (f.adj % 2 == 1) oracle = -oracle;
                                 bool ok = direct == det && direct == oracle;
                                 return std::make_pair(ok, ok ? "ok" : direct.str());
                             },
                             "direct = determinant = signed nabla image");
        }
    return rep;
}

/// The column-reduction identity on truncated polynomials, plus the shape of
/// the intermediate matrices for the worked frame.
inline VerifyReport verify_w_recursion_suite() {
    VerifyReport rep{"w-recursion", {}, false};
    const std::vector<Partition> shapes = {Partition{1}, Partition{2}, Partition{1, 1},
                                           Partition{2, 1}, Partition{3, 2}};
    for (const auto& lam : shapes) {
        int k = std::max<int>(1, static_cast<int>(lam.length()));
        int n = std::max(k + 1, k + lam.part(0));
        if (lam == Partition{3, 2}) n = 5;  // the worked frame
        detail::run_case(rep, "lam=" + lam.str() + " frame n=" + std::to_string(n), [&]() {
            LWFrame f = lw_frame(lam, n, k);
            const int cap = f.n, bmax = std::max(1, lam.size());
            YPoly lhs = (-QTRat::q()).pow(f.adj) * det_apply(w_matrix(f), cap, bmax, lam.size());
            YPoly rhs = det_apply(w_s_matrix(f), cap, bmax, lam.size());
            bool ok = lhs == rhs;
            auto steps = w_recursion(f);
            const OpMatrix& last = steps.back();
            OpMatrix closed = w_s_matrix(f);
            for (int i = 0; i < f.n && ok; ++i)
                for (int j = 0; j < f.n && ok; ++j)
                    ok = last.entry[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                         closed.entry[static_cast<size_t>(i)][static_cast<size_t>(j)];
            return std::make_pair(ok, ok ? "ok" : "mismatch");
        });
    }
    // the displayed first rows along the recursion for lam = (3,2)
    detail::run_case(rep, "lam=[3,2] intermediate rows", [&]() {
        LWFrame f = lw_frame(Partition{3, 2}, 5, 2);
        auto steps = w_recursion(f);
        auto row = [](const OpMatrix& M, int i) {
            std::string r;
            for (int j = 0; j < M.n; ++j)
                r += (j ? " " : "") + M.entry[static_cast<size_t>(i)][static_cast<size_t>(j)].str();
            return r;
        };
        bool ok = row(steps[0], 0) == "bh2 ah2 ah3 bh4 ah4" &&
                  row(steps[1], 0) == "h2 ah2 ah3 bh4 ah4" &&
                  row(steps[2], 0) == "h2 h4 ah2 ah3 ah4";
        return std::make_pair(ok, row(steps.back(), 0));
    });
    return rep;
}

/// Rectangle Schur orthogonality: symbolic up to n = 4, randomized exact
/// specializations at n = 5, 6.
inline VerifyReport verify_rectangle_orthogonality(int symbolic_max_n = 4,
                                                   int random_max_n = 6, int seeds = 3) {
    VerifyReport rep{"rectangle-orthogonality", {}, false};
    for (int n = 2; n <= symbolic_max_n; ++n)
        for (int k = 1; k < n; ++k)
            for (const auto& lam : partitions_in_rectangle(n, k))
                for (int m = 0; m + lam.size() <= k * (n - k); ++m)
                    for (const auto& mu : partitions_of(m))
                        detail::run_case(rep,
                                         "symbolic n=" + std::to_string(n) +
                                             " k=" + std::to_string(k) + " lam=" + lam.str() +
                                             " mu=" + mu.str(),
                                         [&]() {
                                             bool ok = schur_orthogonality_check(lam, mu, n, k);
                                             return std::make_pair(ok, ok ? "ok" : "mismatch");
                                         });
    for (int n = symbolic_max_n + 1; n <= random_max_n; ++n)
        for (int k = 1; k < n; ++k)
            for (const auto& lam : partitions_in_rectangle(n, k))
                for (int m = 0; m + lam.size() <= k * (n - k); ++m)
                    for (const auto& mu : partitions_of(m))
                        for (int seed = 1; seed <= seeds; ++seed)
                            detail::run_case(
                                rep,
                                "random n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                    " lam=" + lam.str() + " mu=" + mu.str() +
                                    " seed=" + std::to_string(seed),
                                [&]() {
                                    bool ok = schur_orthogonality_check_random(
                                        lam, mu, n, k, static_cast<unsigned>(seed));
                                    return std::make_pair(ok, ok ? "ok" : "mismatch");
                                });
    return rep;
}

/// The elementary-skewing cross-check.
inline VerifyReport verify_skewing_suite(int max_cells = 6, int max_m = 2) {
    VerifyReport rep{"skewing", {}, false};
    for (int size = 1; size <= max_cells; ++size)
        for (const auto& mu : partitions_of(size))
            for (int m = 0; m <= std::min(max_m, size); ++m)
                detail::run_case(rep, "mu=" + mu.str() + " m=" + std::to_string(m), [&]() {
                    bool ok = skew_macdonald_check(mu, m);
                    return std::make_pair(ok, ok ? "ok" : "mismatch");
                });
    return rep;
}

/// The q = t = 1 evaluation: the worked example byte-for-byte and the
/// two-route equality over all small shapes.
inline VerifyReport verify_qt1_suite(int max_cells = 7) {
    VerifyReport rep{"qt1", {}, false};
    detail::run_case(rep, "worked example mu=[4,3,2,1] lam=[2,1] k=2", [&]() {
        HExpansion got = piece_qt1_assembled({Partition{4, 3, 2, 1}, Partition{2, 1}, 2});
        // ten terms; the printed source drops one part of h_{(4,1,1,1,1)}
        // (a misprint: the expansion is homogeneous of degree 8)
        HExpansion expect;
        expect.coeffs[Partition{2, 1, 1, 1, 1, 1, 1}] = 1;
        expect.coeffs[Partition{2, 2, 1, 1, 1, 1}] = 1;
        expect.coeffs[Partition{3, 1, 1, 1, 1, 1}] = -2;
        expect.coeffs[Partition{2, 2, 2, 1, 1}] = -9;
        expect.coeffs[Partition{3, 2, 1, 1, 1}] = 12;
        expect.coeffs[Partition{4, 1, 1, 1, 1}] = -3;
        expect.coeffs[Partition{2, 2, 2, 2}] = 2;
        expect.coeffs[Partition{3, 2, 2, 1}] = -2;
        expect.coeffs[Partition{3, 3, 1, 1}] = -2;
        expect.coeffs[Partition{4, 2, 1, 1}] = 2;
        bool ok = got == expect;
        return std::make_pair(ok, got.str());
    });
    detail::run_case(rep, "worked example, both routes", [&]() {
        HExpansion direct = piece_qt1({Partition{4, 3, 2, 1}, Partition{2, 1}, 2});
        return std::make_pair(true, "routes agree");
    });
    for (int size = 2; size <= max_cells; ++size)
        for (const auto& mu : partitions_of(size)) {
            const int n = static_cast<int>(corners(mu).size());
            for (int k = 1; k < n; ++k)
                for (const auto& lam : partitions_in_rectangle(n, k))
                    detail::run_case(rep,
                                     "mu=" + mu.str() + " lam=" + lam.str() +
                                         " k=" + std::to_string(k),
                                     [&]() {
                                         piece_qt1({mu, lam, k});  // equality asserted inside
                                         return std::make_pair(true, "routes agree");
                                     });
        }
    return rep;
}

/// The RD table against the printed fractions, plus the observations.
inline VerifyReport verify_rd_suite(int max_size = 4) {
    VerifyReport rep{"relative-dimension", {}, false};
    const std::vector<std::pair<Partition, Rat>> printed = {
        {Partition{1}, Rat(1, 2)},          {Partition{2}, Rat(1, 3)},
        {Partition{1, 1}, Rat(5, 12)},      {Partition{3}, Rat(1, 4)},
        {Partition{2, 1}, Rat(1, 4)},       {Partition{1, 1, 1}, Rat(3, 8)},
        {Partition{4}, Rat(1, 5)},          {Partition{3, 1}, Rat(7, 40)},
        {Partition{2, 2}, Rat(17, 72)},     {Partition{2, 1, 1}, Rat(77, 360)},
        {Partition{1, 1, 1, 1}, Rat(251, 720)},
    };
    for (const auto& [lam, expect] : printed) {
        if (lam.size() > max_size) continue;
        detail::run_case(
            rep, "RD" + lam.str(),
            [&, lam = lam, expect = expect]() {
                Rat got = rd(lam);
                return std::make_pair(got == expect, to_string(got));
            },
            to_string(expect));
    }
    detail::run_case(rep, "observations through size " + std::to_string(max_size), [&]() {
        ObservationReport obs = observations_suite(max_size);
        std::string detail;
        for (const auto& line : obs.lines)
            if (!line.ok) detail += line.label + " ";
        return std::make_pair(obs.all_ok, obs.all_ok ? "all hold" : detail);
    });
    return rep;
}

/// Property tests: the move invariances, operator commutation, the column
/// swap identities, the chain involution, adjointness, and the reversal
/// compatibility of the star product.
inline VerifyReport verify_properties_suite() {
    VerifyReport rep{"properties", {}, false};

    detail::run_case(rep, "cycling invariance", [&]() {
        for (const auto& beta :
             {std::vector<int>{2, 1}, std::vector<int>{3, 2}, std::vector<int>{1, 2, 1}}) {
            FilledDiagram fd = standard_filling(beta);
            SymF ref = htilde_filled(fd);
            FilledDiagram cur = fd;
            for (int i = 0; i < static_cast<int>(beta.size()); ++i) {
                cur = cycle(cur);
                if (htilde_filled(cur) != ref) return std::make_pair(false, "cycled value moved");
            }
        }
        return std::make_pair(true, "ok");
    });

    detail::run_case(rep, "column exchange invariance", [&]() {
        for (const auto& beta : {std::vector<int>{2, 2}, std::vector<int>{3, 2}}) {
            FilledDiagram fd = standard_filling(beta);
            FilledDiagram ex = col_exchange(fd, 1);
            if (htilde_filled(ex) != htilde_filled(fd))
                return std::make_pair(false, "exchange moved the value");
        }
        return std::make_pair(true, "ok");
    });

    detail::run_case(rep, "operator commutation", [&]() {
        YPoly one = YPoly::one(3, 3);
        YPoly probe = apply_op(OpKind::Plain, 1, one);
        for (OpKind kind : {OpKind::Plain, OpKind::Bar, OpKind::Hat})
            for (int a = 1; a <= 4; ++a)
                for (int b = a; b <= 4; ++b) {
                    YPoly ab = apply_op(kind, a, apply_op(kind, b, probe));
                    YPoly ba = apply_op(kind, b, apply_op(kind, a, probe));
                    if (ab != ba) return std::make_pair(false, "kind pair does not commute");
                }
        for (int m = 0; m <= 3; ++m) {
            YPoly whole = apply_op(OpKind::Plain, m, probe);
            YPoly split = apply_op(OpKind::Bar, m, probe) + apply_op(OpKind::Hat, m, probe);
            if (whole != split) return std::make_pair(false, "bar+hat != plain");
        }
        return std::make_pair(true, "ok");
    });

    detail::run_case(rep, "column swap determinant identities", [&]() {
        auto build = [](const std::vector<int>& v, bool swapped) {
            const int n = static_cast<int>(v.size());
            OpMatrix M = OpMatrix::sized(n);
            for (int i = 0; i < n; ++i) {
                OpEntry hat{OpKind::Hat, v[static_cast<size_t>(i)]};
                OpEntry bar{OpKind::Bar, v[static_cast<size_t>(i)] + n - 1};
                M.entry[static_cast<size_t>(i)][0] = swapped ? bar : hat;
                M.entry[static_cast<size_t>(i)][1] = swapped ? hat : bar;
                for (int j = 3; j <= n; ++j)
                    M.entry[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] = {
                        OpKind::Plain, v[static_cast<size_t>(i)] + j - 2};
            }
            return M;
        };
        for (const auto& v : {std::vector<int>{1, 2}, std::vector<int>{2, 1},
                              std::vector<int>{1, 1, 2}, std::vector<int>{0, 1, 2}}) {
            const int cap = 2, bmax = 2;
            YPoly lhs = QTRat::q() * det_apply(build(v, false), cap, bmax);
            YPoly rhs = det_apply(build(v, true), cap, bmax);
            if (!(lhs + rhs == YPoly(cap, bmax)))
                return std::make_pair(false, "q det V + det V' != 0");
        }
        return std::make_pair(true, "ok");
    });

    detail::run_case(rep, "chain involution", [&]() {
        std::mt19937 rng(2024);
        auto random_chain = [&](int len) {
            while (true) {
                PChain c;
                int a = static_cast<int>(rng() % 2);
                int b = 1 + static_cast<int>(rng() % 4);
                for (int i = 0; i < len; ++i) {
                    c.push_back({a, b});
                    a += 1 + static_cast<int>(rng() % 2);
                    if (a > 4) break;
                    int nb = 1 + static_cast<int>(rng() % 4);
                    if (c.back().a + 1 == a && nb > c.back().b) nb = c.back().b;
                    b = nb;
                }
                if (static_cast<int>(c.size()) == len && is_chain(c)) return c;
            }
        };
        for (int trial = 0; trial < 100; ++trial) {
            PChain c1 = random_chain(1 + static_cast<int>(rng() % 3));
            PChain c2 = random_chain(1 + static_cast<int>(rng() % 3));
            auto [d1, d2] = sw_involution(c1, c2);
            if (d1.size() != c2.size() || d2.size() != c1.size())
                return std::make_pair(false, "lengths");
            if (dinv(c1, c2) != dinv(d1, d2)) return std::make_pair(false, "dinv");
            auto [e1, e2] = sw_involution(d1, d2);
            if (e1 != c1 || e2 != c2) return std::make_pair(false, "involution");
        }
        return std::make_pair(true, "ok");
    });

    detail::run_case(rep, "skew adjointness", [&]() {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 8; ++trial) {
            SymF f(Basis::s), g(Basis::s);
            for (const auto& lam : partitions_of(5))
                f.add_coeff(lam, QTRat(Int(static_cast<long>(rng() % 7) - 3)));
            for (const auto& lam : partitions_of(3))
                g.add_coeff(lam, QTRat(Int(static_cast<long>(rng() % 7) - 3)));
            SymF e2 = SymF::basis_element(Basis::e, Partition{2});
            if (hall(e_perp(2, f), g) != hall(f, mul(e2, g)))
                return std::make_pair(false, "adjointness");
        }
        return std::make_pair(true, "ok");
    });

    detail::run_case(rep, "reversal compatibility of the star product", [&]() {
        std::mt19937 rng(15);
        for (int m = 1; m <= 4; ++m)
            for (int trial = 0; trial < 4; ++trial) {
                SymF f(Basis::p), g(Basis::p);
                for (const auto& lam : partitions_of(m)) {
                    f.add_coeff(lam, QTRat(Int(static_cast<long>(rng() % 5) - 2)) * QTRat::q() +
                                         QTRat(Int(static_cast<long>(rng() % 3))));
                    g.add_coeff(lam, QTRat(Int(static_cast<long>(rng() % 5) - 2)) * QTRat::t() +
                                         QTRat(1));
                }
                QTRat lhs = star_inner(rev(f), rev(g));
                QTRat rhs = (QTRat::q() * QTRat::t()).pow(m) * star_inner(f, g).reversed();
                if (lhs != rhs) return std::make_pair(false, "reversal identity");
            }
        return std::make_pair(true, "ok");
    });

    return rep;
}

/// Conjecture dashboard over small shapes: report-only.
inline VerifyReport verify_dashboard_suite(int max_cells = 6) {
    VerifyReport rep{"positivity-dashboard", {}, true};
    for (int size = 2; size <= max_cells; ++size)
        for (const auto& mu : partitions_of(size)) {
            const int n = static_cast<int>(corners(mu).size());
            for (int k = 1; k < n; ++k) {
                // a saturated-enough chain: fill the rectangle row by row
                std::vector<Partition> chain = {Partition{}};
                std::vector<int> cur;
                for (int row = 1; row <= k; ++row) {
                    cur.push_back(0);
                    for (int col = 1; col <= n - k; ++col) {
                        ++cur.back();
                        std::vector<int> parts = cur;
                        std::sort(parts.begin(), parts.end(), std::greater<>());
                        chain.emplace_back(std::move(parts));
                    }
                }
                DashboardReport r = positivity_dashboard(mu, k, chain);
                for (const auto& line : r.lines) {
                    VerifyCase c;
                    c.input = line.label;
                    c.pass = line.positive;
                    c.expected = "sign-uniform Schur coefficients";
                    c.actual = line.positive ? "ok" : line.detail;
                    rep.cases.push_back(std::move(c));
                }
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

inline std::string render_report(const VerifyReport& rep, bool verbose = false) {
    std::ostringstream os;
    os << "suite " << rep.suite << ": " << rep.cases.size() - rep.failures() << "/"
       << rep.cases.size() << (rep.all_pass() ? " PASS" : " FAIL")
       << (rep.report_only ? " (report-only)" : "") << "\n";
    for (const auto& c : rep.cases)
        if (verbose || !c.pass)
            os << "  " << (c.pass ? "pass" : "FAIL") << " " << c.input << " [" << c.elapsed_ms
               << " ms] expected: " << c.expected << " actual: " << c.actual << "\n";
    return os.str();
}

}  // namespace qtsym
