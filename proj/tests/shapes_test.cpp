#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "qtsym/diagram.hpp"
#include "qtsym/lw_frame.hpp"
#include "qtsym/partition.hpp"

using namespace qtsym;

TEST_CASE("corners are listed top to bottom with their weights") {
    auto cs = corners(Partition{2, 1});
    REQUIRE(cs.size() == 2);
    REQUIRE(cs[0].cell == Cell{2, 1});
    REQUIRE(cs[0].zweight == QTRat::t().inverse());
    REQUIRE(cs[1].cell == Cell{1, 2});
    REQUIRE(cs[1].zweight == QTRat::q().inverse());

    auto single = corners(Partition{1});
    REQUIRE(single.size() == 1);
    REQUIRE(single[0].cell == Cell{1, 1});
    REQUIRE(single[0].zweight == QTRat(1));

    REQUIRE(corners(Partition{}).empty());

    auto delta = augmented_staircase(4, 3);
    REQUIRE(delta == Partition{4, 4, 4, 3, 2, 1});
    auto dcs = corners(delta);
    REQUIRE(dcs.size() == 4);
    std::vector<int> rows;
    for (const auto& c : dcs) rows.push_back(c.cell.row);
    REQUIRE(rows == std::vector<int>{6, 5, 4, 3});
}

TEST_CASE("corner removal") {
    REQUIRE(remove_corners(Partition{2, 1}, {1}) == Partition{2});
    REQUIRE(remove_corners(Partition{2, 1}, {2}) == Partition{1, 1});
    REQUIRE(remove_corners(augmented_staircase(4, 3), {2, 3}) == Partition{4, 4, 4, 2, 1, 1});
    REQUIRE_THROWS_AS(remove_corners(Partition{2, 1}, {3}), DomainError);
}

TEST_CASE("cell statistics and weights") {
    Partition mu{2, 1};
    Cell u{1, 2};
    REQUIRE(mu.arm(u) == 0);
    REQUIRE(mu.coarm(u) == 1);
    REQUIRE(mu.leg(u) == 0);
    REQUIRE(mu.coleg(u) == 0);
    REQUIRE_THROWS_AS(mu.arm(Cell{2, 2}), DomainError);

    REQUIRE(t_weight(mu) == QTRat::q() * QTRat::t());
    REQUIRE(b_sum(Partition{1}) == QTRat(1));
    REQUIRE(d_poly(Partition{1}) == qt_M() - QTRat(1));
}

TEST_CASE("generalized arm and leg") {
    auto al = general_arm_leg({2, 2}, 1, 1);
    REQUIRE(al.leg == 1);
    REQUIRE(al.arm == 1);
    auto single = general_arm_leg({1}, 1, 1);
    REQUIRE(single.arm == 0);
    REQUIRE(single.leg == 0);
    REQUIRE_THROWS_AS(general_arm_leg({1}, 2, 1), DomainError);
}

TEST_CASE("standard fillings") {
    // one column of height 2: the top cell carries t
    FilledDiagram col2 = standard_filling({2});
    REQUIRE(col2.value(Cell{2, 1}) == QTRat::t());

    // square: q^{-1} t at (2,1), t at (2,2)
    FilledDiagram sq = standard_filling({2, 2});
    REQUIRE(sq.value(Cell{2, 1}) == QTRat::laurent(1, -1, 1));
    REQUIRE(sq.value(Cell{2, 2}) == QTRat::t());
}

TEST_CASE("tilde complement") {
    REQUIRE(tilde(Partition{3, 1}, 6, 3) == Partition{2, 2, 1});
    REQUIRE(tilde(rectangle(6, 3), 6, 3) == Partition{});
    REQUIRE(tilde(Partition{}, 2, 1) == Partition{1});
    REQUIRE_THROWS_AS(tilde(Partition{3}, 4, 2), DomainError);
}

TEST_CASE("staircases") {
    REQUIRE(staircase(3) == Partition{2, 1});
    REQUIRE(augmented_staircase(4, 3) == Partition{4, 4, 4, 3, 2, 1});
    for (int n = 2; n <= 5; ++n)
        REQUIRE(corners(augmented_staircase(n, 2)).size() == static_cast<size_t>(n));
}

TEST_CASE("staircase rearrangement invariant") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k < n; ++k)
            for (const auto& lam : partitions_in_rectangle(n, k)) {
                Partition tl = tilde(lam, n, k);
                REQUIRE(lam.size() + tl.size() == k * (n - k));
                std::vector<int> combined;
                for (int i = 1; i <= k; ++i)
                    combined.push_back(lam.part(static_cast<size_t>(i - 1)) + k - i);
                for (int i = 1; i <= n - k; ++i)
                    combined.push_back(tl.part(static_cast<size_t>(i - 1)) + (n - k) - i);
                std::sort(combined.begin(), combined.end(), std::greater<>());
                std::vector<int> expect;
                for (int i = n - 1; i >= 0; --i) expect.push_back(i);
                REQUIRE(combined == expect);
            }
}

TEST_CASE("conjugate and tilde are involutions") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& lam : partitions_of(n)) REQUIRE(lam.conjugate().conjugate() == lam);
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k < n; ++k)
            for (const auto& lam : partitions_in_rectangle(n, k))
                REQUIRE(tilde(tilde(lam, n, k), n, n - k) == lam);
}

TEST_CASE("corner weight product identity") {
    // T_{mu^{[n]}} = T_{mu^S} prod_{j in S^c} z_j
    for (const Partition& mu : {Partition{2, 1}, Partition{3, 1}, Partition{3, 2, 1}}) {
        auto cs = corners(mu);
        const int n = static_cast<int>(cs.size());
        std::vector<int> all(static_cast<size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        QTRat t_all = t_weight(remove_corners(mu, all));
        for (int k = 1; k < n; ++k)
            for (const auto& S : k_subsets(n, k)) {
                QTRat rhs = t_weight(remove_corners(mu, S));
                for (int j : complement_subset(S, n))
                    rhs *= cs[static_cast<size_t>(j - 1)].zweight;
                REQUIRE(t_all == rhs);
            }
    }
}

TEST_CASE("lw frame data") {
    LWFrame f = lw_frame(Partition{3, 2}, 5, 2);
    REQUIRE(f.s == 2);
    REQUIRE(f.adj == 2);
    REQUIRE(f.v == std::vector<int>{2, 2, 3, 4, 4});
    REQUIRE(f.bo == std::vector<int>{1, 2, 2, 2, 3});
    REQUIRE(f.piv == std::vector<int>{1, 4});
    REQUIRE(f.dlam == Diagram({{1, 2}, {2}, {2}, {2}, {}}));

    LWFrame e = lw_frame(Partition{}, 2, 1);
    REQUIRE(e.s == 0);
    REQUIRE(e.adj == 0);
    REQUIRE(e.piv.empty());
    REQUIRE(e.dlam.size() == 0);

    LWFrame g = lw_frame(Partition{1}, 2, 1);
    REQUIRE(g.s == 1);
    REQUIRE(g.adj == 0);
    REQUIRE(g.v == std::vector<int>{1, 1});
    REQUIRE(g.bo == std::vector<int>{1, 2});
    REQUIRE(g.piv == std::vector<int>{1});

    REQUIRE_THROWS_AS(lw_frame(Partition{4}, 4, 2), DomainError);
}

TEST_CASE("diagram reading order and bottoms") {
    Diagram d = Diagram::from_partition(Partition{2, 1});
    REQUIRE(d.size() == 3);
    auto ro = d.reading_order();
    REQUIRE(ro == std::vector<Cell>{{2, 1}, {1, 1}, {1, 2}});
    REQUIRE(d.is_bottom(Cell{1, 1}));
    REQUIRE(d.is_bottom(Cell{1, 2}));
    REQUIRE(!d.is_bottom(Cell{2, 1}));
}
