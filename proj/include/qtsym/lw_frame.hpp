#pragma once

// Frame data attached to a partition lam inside the rectangle R(n,k):
// the Durfee size s, the dinv adjustment adj, the sorted shift vector v,
// the bottom vector bo, the pivot indices, and the target diagram D(lam)
// whose column j holds rows bo_j..s (empty when bo_j > s).

#include <algorithm>
#include <vector>

#include "qtsym/diagram.hpp"
#include "qtsym/error.hpp"
#include "qtsym/partition.hpp"

namespace qtsym {

struct LWFrame {
    Partition lam;
    int n = 0;
    int k = 0;
    int s = 0;                 // Durfee size
    int adj = 0;               // sum of (lam_i - i) over i <= s
    std::vector<int> v;        // weakly increasing, length n
    std::vector<int> bo;       // length n
    std::vector<int> piv;      // length s
    Diagram dlam;
};

inline LWFrame lw_frame(const Partition& lam, int n, int k) {
    if (!fits_in_rectangle(lam, n, k)) throw DomainError("lw_frame: partition not inside R(n,k)");
    LWFrame f;
    f.lam = lam;
    f.n = n;
    f.k = k;
    for (int i = 1; i <= k; ++i)
        if (lam.part(static_cast<size_t>(i - 1)) >= i) f.s = i;
    for (int i = 1; i <= f.s; ++i) f.adj += lam.part(static_cast<size_t>(i - 1)) - i;

    for (int i = 1; i <= k; ++i) f.v.push_back(lam.part(static_cast<size_t>(i - 1)) + k - i);
    for (int c = k; c <= n - 1; ++c) f.v.push_back(c);
    std::stable_sort(f.v.begin(), f.v.end());

    for (int j = 1; j <= n; ++j) f.bo.push_back(f.s + j - f.v[static_cast<size_t>(j - 1)]);

    // piv_i is the index a with v_a = v_{a+1} = lam_{s+1-i} + k - (s+1-i).
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (int i = 1; i <= f.s; ++i) {
        const int target = lam.part(static_cast<size_t>(f.s - i)) + k - (f.s + 1 - i);
        int found = -1;
        for (int a = 1; a < n; ++a) {
            if (used[static_cast<size_t>(a - 1)]) continue;
            if (f.v[static_cast<size_t>(a - 1)] == target && f.v[static_cast<size_t>(a)] == target) {
                found = a;
                break;
            }
        }
        QTSYM_CHECK(found > 0, "lw_frame: pivot index not found");
        used[static_cast<size_t>(found - 1)] = true;
        f.piv.push_back(found);
    }

    std::vector<std::vector<int>> cols;
    for (int j = 1; j <= n; ++j) {
        std::vector<int> rows;
        for (int r = f.bo[static_cast<size_t>(j - 1)]; r <= f.s; ++r) rows.push_back(r);
        cols.push_back(std::move(rows));
    }
    f.dlam = Diagram(std::move(cols));
    QTSYM_CHECK(f.dlam.size() == lam.size(), "lw_frame: |D(lam)| != |lam|");
    return f;
}

}  // namespace qtsym
