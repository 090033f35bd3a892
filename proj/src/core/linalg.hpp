#pragma once

#include <map>
#include <vector>

#include "rational.hpp"

namespace assoc {

// Sparse row over exact rationals: column index -> nonzero coefficient.
using SRow = std::map<int, Rat>;

inline void srow_axpy(SRow& r, const Rat& c, const SRow& s) {
    if (c == 0) return;
    for (const auto& [col, v] : s) {
        Rat& x = r[col];
        x += c * v;
        if (x == 0) r.erase(col);
    }
}

// A row space kept permanently in reduced row echelon form. Pivots are the
// smallest column of each row, rows are normalized to pivot coefficient 1,
// and pivot columns are eliminated from every other row, so the stored rows
// are the canonical RREF of the span regardless of insertion order.
class RowSpace {
  public:
    SRow reduce(SRow r) const {
        for (auto it = r.begin(); it != r.end();) {
            auto piv = rows_.find(it->first);
            if (piv == rows_.end()) {
                ++it;
                continue;
            }
            Rat c = -it->second;
            srow_axpy(r, c, piv->second);
            it = r.upper_bound(piv->first);
        }
        return r;
    }

    // Inserts the row's residual; returns true when the rank grew.
    bool add(SRow r) {
        r = reduce(std::move(r));
        if (r.empty()) return false;
        int p = r.begin()->first;
        Rat inv = 1 / r.begin()->second;
        for (auto& [col, v] : r) v *= inv;
        for (auto& [q, row] : rows_) {
            auto hit = row.find(p);
            if (hit == row.end()) continue;
            Rat c = -hit->second;
            srow_axpy(row, c, r);
        }
        rows_.emplace(p, std::move(r));
        return true;
    }

    bool has_pivot(int col) const { return rows_.count(col) != 0; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SRow>& rows() const { return rows_; }

  private:
    std::map<int, SRow> rows_;  // pivot column -> row
};

// Solution of an affine system. Each input row encodes the constraint
// sum_j row[j] * x_j + row[num_unknowns] = 0.
struct AffineSolution {
    bool consistent = true;
    std::map<int, Rat> x;        // particular solution, free unknowns set to zero
    std::vector<int> free_cols;  // unknowns not determined by the system
    int rank = 0;
};

inline AffineSolution solve_affine(const std::vector<SRow>& equations, int num_unknowns) {
    RowSpace rs;
    for (const auto& eq : equations) rs.add(eq);
    AffineSolution sol;
    sol.rank = 0;
    for (const auto& [p, row] : rs.rows()) {
        if (p == num_unknowns) {
            sol.consistent = false;
            return sol;
        }
        ++sol.rank;
        Rat rhs = 0;
        auto it = row.find(num_unknowns);
        if (it != row.end()) rhs = -it->second;
        if (rhs != 0) sol.x[p] = rhs;
    }
    for (int j = 0; j < num_unknowns; ++j)
        if (!rs.has_pivot(j)) sol.free_cols.push_back(j);
    return sol;
}

}  // namespace assoc
