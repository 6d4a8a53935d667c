#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "qtsym/macdonald.hpp"

using namespace qtsym;

namespace {

SymF S(std::initializer_list<int> lam) { return SymF::basis_element(Basis::s, Partition(lam)); }

QTRat q() { return QTRat::q(); }
QTRat t() { return QTRat::t(); }

}  // namespace

TEST_CASE("statistic on small filled diagrams") {
    FilledDiagram single(Diagram::bottom_justified({1}), {});
    REQUIRE(stat(single, {1}) == QTRat(1));
    REQUIRE(stat(single, {5}) == QTRat(1));

    // one column of height 2, f(2,1) = t; reading order is top cell first
    FilledDiagram col2 = standard_filling({2});
    REQUIRE(stat(col2, {2, 1}) == t());
    REQUIRE(stat(col2, {1, 2}) == QTRat(1));
}

TEST_CASE("generating functions of small filled diagrams") {
    REQUIRE(htilde_filled(standard_filling({1, 1})) == S({2}) + q() * S({1, 1}));
    REQUIRE(htilde_filled(standard_filling({2})) == S({2}) + t() * S({1, 1}));
    REQUIRE(htilde_filled(standard_filling({1})) == S({1}));
}

TEST_CASE("htilde basics") {
    REQUIRE(htilde(Partition{1}) == S({1}));
    REQUIRE(htilde(Partition{2}) == S({2}) + q() * S({1, 1}));
    REQUIRE(htilde(Partition{1, 1}) == S({2}) + t() * S({1, 1}));
    REQUIRE(htilde(Partition{2, 1}) ==
            S({3}) + (q() + t()) * S({2, 1}) + (q() * t()) * S({1, 1, 1}));
}

TEST_CASE("htilde size bound is enforced") {
    REQUIRE_THROWS_AS(htilde(Partition{9}), DomainError);
}

TEST_CASE("star orthogonality of Macdonald polynomials") {
    for (int n = 1; n <= 4; ++n) {
        auto parts = partitions_of(n);
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                QTRat inner = star_inner(htilde(mu), htilde(nu));
                if (mu == nu) REQUIRE(inner == hnorm(mu) * hnorm_prime(mu));
                else REQUIRE(inner.is_zero());
            }
    }
}

TEST_CASE("column rearrangements give the same polynomial") {
    // mu = (2,1): column heights (2,1), rearranged (1,2)
    SymF ref = htilde(Partition{2, 1});
    REQUIRE(htilde_filled(standard_filling({2, 1})) == ref);
    REQUIRE(htilde_filled(standard_filling({1, 2})) == ref);
    // mu = (3,1): heights (2,1,1) in every order
    SymF ref31 = htilde(Partition{3, 1});
    REQUIRE(htilde_filled(standard_filling({2, 1, 1})) == ref31);
    REQUIRE(htilde_filled(standard_filling({1, 2, 1})) == ref31);
    REQUIRE(htilde_filled(standard_filling({1, 1, 2})) == ref31);
}

TEST_CASE("cycling preserves the generating function") {
    FilledDiagram one_col = standard_filling({3});
    SymF before = htilde_filled(one_col);
    REQUIRE(htilde_filled(cycle(one_col)) == before);

    FilledDiagram beta21 = standard_filling({2, 1});
    SymF ref = htilde_filled(beta21);
    FilledDiagram c1 = cycle(beta21);
    REQUIRE(htilde_filled(c1) == ref);
    // cycling ncols times is a vertical translate: still the same function
    FilledDiagram c2 = cycle(c1);
    REQUIRE(htilde_filled(c2) == ref);
}

TEST_CASE("column exchange on equal-height columns") {
    // equal heights with proportional fillings: the square (2,2)
    FilledDiagram sq = standard_filling({2, 2});
    FilledDiagram swapped = col_exchange(sq, 1);
    REQUIRE(htilde_filled(swapped) == htilde_filled(sq));
    // S_j then its inverse is the identity; for n = m the inverse is S_j again
    FilledDiagram back = col_exchange(swapped, 1);
    REQUIRE(back == sq);
}

TEST_CASE("column exchange on unequal heights") {
    // delta(2,2) = (2,2,1): columns (3,2); exchange needs the ratio anchor
    FilledDiagram fd = standard_filling({3, 2});
    FilledDiagram ex = col_exchange(fd, 1);
    REQUIRE(htilde_filled(ex) == htilde_filled(fd));
    REQUIRE(ex.diagram() == Diagram::bottom_justified({2, 3}));

    // a filling violating the side conditions is rejected with the ratio name
    std::map<Cell, QTRat> bad;
    Diagram d = Diagram::bottom_justified({2, 2});
    bad[Cell{2, 1}] = q();
    bad[Cell{2, 2}] = QTRat(1);
    std::map<Cell, QTRat> bad2 = bad;
    FilledDiagram fd_ok(d, std::move(bad));
    REQUIRE_NOTHROW(col_exchange(fd_ok, 1));  // single ratio, n = m, fine
    Diagram d3 = Diagram::bottom_justified({3, 2});
    std::map<Cell, QTRat> f3;
    f3[Cell{2, 1}] = q();
    f3[Cell{3, 1}] = q();
    f3[Cell{2, 2}] = QTRat(1);
    FilledDiagram fd_bad(d3, std::move(f3));
    REQUIRE_THROWS_WITH(col_exchange(fd_bad, 1),
                        Catch::Matchers::ContainsSubstring("q^{-1} f(3,1)"));
}

TEST_CASE("mac expansion") {
    MacExpansion e = mac_expand(htilde(Partition{2}));
    REQUIRE(e.coeffs.size() == 1);
    REQUIRE(e.coeffs.at(Partition{2}) == QTRat(1));

    MacExpansion e1 = mac_expand(S({1}));
    REQUIRE(e1.coeffs.size() == 1);
    REQUIRE(e1.coeffs.at(Partition{1}) == QTRat(1));

    // e_2 = s_{11}: solve against H(2), H(11) and reconstruct
    MacExpansion e2 = mac_expand(S({1, 1}));
    REQUIRE(mac_assemble(e2) == S({1, 1}));
    QTRat c2 = e2.coeffs.at(Partition{2});
    QTRat c11 = e2.coeffs.at(Partition{1, 1});
    // from H(2) = s2 + q s11, H(11) = s2 + t s11: c2 + c11 = 0, q c2 + t c11 = 1
    REQUIRE(c2 + c11 == QTRat(0));
    REQUIRE(q() * c2 + t() * c11 == QTRat(1));
}

TEST_CASE("nabla") {
    REQUIRE(nabla(htilde(Partition{2, 1})) == (q() * t()) * htilde(Partition{2, 1}));
    REQUIRE(nabla(S({1})) == S({1}));
    REQUIRE(nabla(nabla(S({2, 1})), -1) == S({2, 1}).to_basis(Basis::s));

    // q = t = 1 specialization of nabla s_{(1,1)} is 2h_{11} - h_2
    SymF ns = nabla(S({1, 1})).to_basis(Basis::h);
    SymF expect(Basis::h);
    expect.add_coeff(Partition{1, 1}, QTRat(2));
    expect.add_coeff(Partition{2}, QTRat(-1));
    SymF at11 = ns.coeff_mapped([](const QTRat& c) { return QTRat(c.limit_qt1()); });
    REQUIRE(at11 == expect);
}

TEST_CASE("kostka values") {
    REQUIRE(kostka(Partition{1, 1}, Partition{2}) == q());
    REQUIRE(kostka(Partition{1, 1}, Partition{1, 1}) == t());
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) REQUIRE(kostka(Partition{n}, mu) == QTRat(1));
}

TEST_CASE("omega-rev symmetry") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : partitions_of(n)) {
            SymF lhs = omega(htilde(mu)).to_basis(Basis::s);
            SymF rhs = t_weight(mu) * rev(htilde(mu));
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("skewing cross-check") {
    REQUIRE(skew_macdonald_check(Partition{2}, 1));
    REQUIRE(skew_macdonald_check(Partition{1}, 0));
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : partitions_of(n))
            for (int m = 0; m <= std::min(2, n); ++m) REQUIRE(skew_macdonald_check(mu, m));
    // the explicit (2)-case value: e_1^perp htilde(2) = (1+q) s_1
    REQUIRE(e_perp(1, htilde(Partition{2})) == (QTRat(1) + q()) * S({1}));
}

TEST_CASE("deformed staircase diagrams") {
    // shape for n=4, N=3, S={2,3} matches the worked construction
    DeltaFilled df = build_delta_filled(4, 3, {2, 3});
    const Diagram& d = df.plain.diagram();
    REQUIRE(d.ncols() == 4);
    REQUIRE(d.columns()[0] == std::vector<int>{1, 2, 3, 4, 5, 6});
    REQUIRE(d.columns()[1] == std::vector<int>{1, 2, 3});
    REQUIRE(d.columns()[2] == std::vector<int>{2, 3, 4, 5});
    REQUIRE(d.columns()[3] == std::vector<int>{2, 3, 4});

    // spot-check the z-deformed values against the construction rule
    const int ar = df.zarity;
    ZRat qz = ZRat::q(ar);
    REQUIRE(df.zform.value(Cell{6, 1}) == qz * ZRat::z(ar, 2) / ZRat::z(ar, 1));
    REQUIRE(df.zform.value(Cell{4, 3}) == ZRat::z(ar, 4) / ZRat::z(ar, 2));
    REQUIRE(df.zform.value(Cell{3, 3}) == qz * ZRat::z(ar, 5) / ZRat::z(ar, 2));
    REQUIRE(df.zform.value(Cell{4, 4}) == ZRat::z(ar, 4) / ZRat::z(ar, 3));

    // specializing the z's recovers the plain filling
    REQUIRE(specialize_delta(df.zform, 4, 3) == df.plain);

    // and the generating function equals htilde of the corner-deleted shape
    // at a size where brute force is feasible: n = 2, N = 1
    for (const auto& S2 : {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{1, 2}}) {
        DeltaFilled small = build_delta_filled(2, 1, S2);
        Partition target = remove_corners(augmented_staircase(2, 1), S2);
        REQUIRE(specialize_delta(small.zform, 2, 1) == small.plain);
        REQUIRE(htilde_filled(small.plain) == htilde(target));
    }
}

TEST_CASE("truncated staircase diagrams are column-equivalent across S") {
    // n = 2, N = 2: rows >= 2 of (delta_S, f^z_S) agree after column moves.
    // The S = {2} truncation needs one exchange to match the S = {1} one.
    DeltaFilled d1 = build_delta_filled(2, 2, {1});
    DeltaFilled d2 = build_delta_filled(2, 2, {2});

    auto truncate = [](const FilledDiagramT<ZRat>& fd) {
        std::vector<std::vector<int>> cols;
        std::map<Cell, ZRat> f;
        for (int c = 1; c <= fd.diagram().ncols(); ++c) {
            std::vector<int> rows;
            for (int r : fd.diagram().columns()[static_cast<size_t>(c - 1)])
                if (r >= 2) rows.push_back(r - 1);
            cols.push_back(rows);
        }
        Diagram nd(std::move(cols));
        for (const auto& [u, val] : fd.filling())
            if (u.row >= 2 && !nd.is_bottom(Cell{u.row - 1, u.col})) f[{u.row - 1, u.col}] = val;
        return FilledDiagramT<ZRat>(std::move(nd), std::move(f));
    };

    FilledDiagramT<ZRat> t1 = truncate(d1.zform);
    FilledDiagramT<ZRat> t2 = truncate(d2.zform);
    // t1 has columns of heights (3,2), t2 likewise; one exchange aligns them
    bool equal_directly = (t1 == t2);
    bool equal_after_move = false;
    if (!equal_directly) {
        for (int j = 1; j < t1.diagram().ncols() && !equal_after_move; ++j) {
            try {
                if (col_exchange_z(t1, j, d1.zarity) == t2) equal_after_move = true;
            } catch (const DomainError&) {
            }
            try {
                if (col_exchange_z(t2, j, d2.zarity) == t1) equal_after_move = true;
            } catch (const DomainError&) {
            }
        }
    }
    REQUIRE((equal_directly || equal_after_move));
}
