#pragma once

// Diagrams (arbitrary cell collections given by column row-sets), filled
// diagrams, and the generalized arm/leg statistics for bottom-justified
// column arrangements. Fillings are templated over their value ring: the
// concrete instances used are Q(q,t) and the z-extended field.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qtsym/error.hpp"
#include "qtsym/partition.hpp"
#include "qtsym/qt_poly.hpp"

namespace qtsym {

class Diagram {
public:
    Diagram() = default;
    /// columns[j] lists the row indices present in column j+1 (1-based rows).
    explicit Diagram(std::vector<std::vector<int>> columns) : cols_(std::move(columns)) {
        for (auto& c : cols_) {
            std::sort(c.begin(), c.end());
            for (size_t i = 0; i < c.size(); ++i) {
                if (c[i] < 1) throw DomainError("diagram rows must be >= 1");
                if (i && c[i] == c[i - 1]) throw DomainError("duplicate cell in diagram column");
            }
        }
    }

    /// Bottom-justified columns of the given heights (height 0 = empty column).
    static Diagram bottom_justified(const std::vector<int>& heights) {
        std::vector<std::vector<int>> cols;
        for (int h : heights) {
            std::vector<int> c;
            for (int i = 1; i <= h; ++i) c.push_back(i);
            cols.push_back(std::move(c));
        }
        return Diagram(std::move(cols));
    }

    /// Column arrangement of a partition: column j holds rows 1..mu'_j.
    static Diagram from_partition(const Partition& mu) {
        return bottom_justified(mu.conjugate().parts());
    }

    const std::vector<std::vector<int>>& columns() const { return cols_; }
    int ncols() const { return static_cast<int>(cols_.size()); }
    int size() const {
        int s = 0;
        for (const auto& c : cols_) s += static_cast<int>(c.size());
        return s;
    }
    int max_row() const {
        int m = 0;
        for (const auto& c : cols_)
            if (!c.empty()) m = std::max(m, c.back());
        return m;
    }

    bool has_cell(int row, int col) const {
        if (col < 1 || col > ncols()) return false;
        const auto& c = cols_[static_cast<size_t>(col - 1)];
        return std::binary_search(c.begin(), c.end(), row);
    }
    bool has_cell(const Cell& u) const { return has_cell(u.row, u.col); }

    /// A bottom cell has no cell directly below it in the diagram.
    bool is_bottom(const Cell& u) const { return !has_cell(u.row - 1, u.col); }

    /// Cells in reading order: top row first, left to right within a row.
    std::vector<Cell> reading_order() const {
        std::vector<Cell> r;
        for (int row = max_row(); row >= 1; --row)
            for (int col = 1; col <= ncols(); ++col)
                if (has_cell(row, col)) r.push_back({row, col});
        return r;
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> r;
        for (int col = 1; col <= ncols(); ++col)
            for (int row : cols_[static_cast<size_t>(col - 1)]) r.push_back({row, col});
        return r;
    }

    friend bool operator==(const Diagram& a, const Diagram& b) { return a.cols_ == b.cols_; }
    friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (size_t j = 0; j < cols_.size(); ++j) {
            if (j) os << ",";
            os << "{";
            for (size_t i = 0; i < cols_[j].size(); ++i) {
                if (i) os << ",";
                os << cols_[j][i];
            }
            os << "}";
        }
        os << "]";
        return os.str();
    }

private:
    std::vector<std::vector<int>> cols_;
};

// ---------------------------------------------------------------------------
// Generalized arm/leg on bottom-justified column arrangements
// ---------------------------------------------------------------------------

struct ArmLeg {
    int arm = 0;
    int leg = 0;
};

/// arm/leg of the cell in row `row` of column `col` (both 1-based) for the
/// column-height sequence beta. The arm counts cells strictly right of u in
/// columns no taller than u's, plus cells strictly left of the cell below u
/// in strictly shorter columns; the leg counts cells strictly above.
inline ArmLeg general_arm_leg(const std::vector<int>& beta, int row, int col) {
    const int k = static_cast<int>(beta.size());
    if (col < 1 || col > k || row < 1 || row > beta[static_cast<size_t>(col - 1)])
        throw DomainError("general_arm_leg: cell outside diagram");
    const int bi = beta[static_cast<size_t>(col - 1)];
    ArmLeg r;
    r.leg = bi - row;
    for (int c = 1; c < col; ++c) {
        int h = beta[static_cast<size_t>(c - 1)];
        if (row - 1 <= h && h < bi) ++r.arm;
    }
    for (int c = col + 1; c <= k; ++c) {
        int h = beta[static_cast<size_t>(c - 1)];
        if (row <= h && h <= bi) ++r.arm;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Filled diagrams
// ---------------------------------------------------------------------------

template <class R>
class FilledDiagramT {
public:
    FilledDiagramT() = default;
    FilledDiagramT(Diagram d, std::map<Cell, R> filling)
        : diagram_(std::move(d)), filling_(std::move(filling)) {
        for (const Cell& u : diagram_.cells())
            if (!diagram_.is_bottom(u) && !filling_.count(u))
                throw DomainError("filling missing on non-bottom cell");
    }

    const Diagram& diagram() const { return diagram_; }
    const std::map<Cell, R>& filling() const { return filling_; }

    const R& value(const Cell& u) const {
        auto it = filling_.find(u);
        if (it == filling_.end()) throw DomainError("no filling value at cell");
        return it->second;
    }

    friend bool operator==(const FilledDiagramT& a, const FilledDiagramT& b) {
        if (a.diagram_ != b.diagram_) return false;
        // compare only on non-bottom cells; bottom values are redundant
        for (const Cell& u : a.diagram_.cells())
            if (!a.diagram_.is_bottom(u) && a.value(u) != b.value(u)) return false;
        return true;
    }
    friend bool operator!=(const FilledDiagramT& a, const FilledDiagramT& b) { return !(a == b); }

private:
    Diagram diagram_;
    std::map<Cell, R> filling_;
};

using FilledDiagram = FilledDiagramT<QTRat>;

/// The standard filling on a bottom-justified column arrangement beta:
/// every non-bottom cell u carries q^{-arm(u)} t^{leg(u)+1}.
inline FilledDiagram standard_filling(const std::vector<int>& beta) {
    Diagram d = Diagram::bottom_justified(beta);
    std::map<Cell, QTRat> f;
    for (const Cell& u : d.cells())
        if (!d.is_bottom(u)) {
            ArmLeg al = general_arm_leg(beta, u.row, u.col);
            f[u] = QTRat::laurent(1, -al.arm, al.leg + 1);
        }
    return FilledDiagram(std::move(d), std::move(f));
}

}  // namespace qtsym
