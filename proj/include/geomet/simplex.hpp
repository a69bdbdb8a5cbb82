#pragma once

#include "geomet/rational.hpp"

#include <vector>

namespace geomet {

// maximize cost . lambda  s.t.  A lambda <= rhs, lambda >= 0, with rhs >= 0,
// so the all-slack basis is feasible from the start. Columns may be added
// after a solve; the next solve continues from the current basis.
// Exact arithmetic, Bland's rule.
class ColumnSimplex {
public:
    enum class Status { Optimal, Unbounded };

    explicit ColumnSimplex(std::vector<Rational> rhs);

    int add_column(const std::vector<Rational>& column, const Rational& cost);
    Status solve();

    int rows() const { return static_cast<int>(rhs_.size()); }
    int columns() const { return static_cast<int>(structural_.size()); }
    const Rational& objective() const { return objective_; }
    std::vector<Rational> primal() const;  // one value per added column
    std::vector<Rational> duals() const;   // one value per row, all >= 0 at optimum
    int pivots() const { return pivots_; }

private:
    // Tableau columns: 0..R-1 are slacks, R.. are the added columns.
    std::vector<std::vector<Rational>> tab_;  // R rows
    std::vector<Rational> beta_;              // basic values
    std::vector<Rational> reduced_;           // z_j - c_j per tableau column
    std::vector<int> basis_;                  // tableau column basic in each row
    std::vector<Rational> rhs_;
    std::vector<int> structural_;             // tableau column of each added column
    Rational objective_ = 0;
    int pivots_ = 0;

    void pivot(int row, int col);
};

}  // namespace geomet
