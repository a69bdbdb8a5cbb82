#include "geomet/simplex.hpp"

#include "geomet/error.hpp"

namespace geomet {

ColumnSimplex::ColumnSimplex(std::vector<Rational> rhs) : rhs_(std::move(rhs)) {
    const int R = rows();
    for (const Rational& b : rhs_)
        if (sgn(b) < 0) fail(ErrorCode::InvalidArgument, "right-hand side must be nonnegative");
    tab_.assign(R, std::vector<Rational>(R, Rational(0)));
    for (int r = 0; r < R; ++r) {
        tab_[r][r] = 1;
        basis_.push_back(r);
    }
    beta_ = rhs_;
    reduced_.assign(R, Rational(0));
}

int ColumnSimplex::add_column(const std::vector<Rational>& column, const Rational& cost) {
    const int R = rows();
    if (static_cast<int>(column.size()) != R) fail(ErrorCode::InvalidArgument, "column has wrong length");
    // Current representation B^-1 a; the slack block of the tableau is B^-1.
    Rational red = -cost;
    for (int k = 0; k < R; ++k)
        if (sgn(column[k]) != 0) red += reduced_[k] * column[k];
    for (int r = 0; r < R; ++r) {
        Rational v = 0;
        for (int k = 0; k < R; ++k)
            if (sgn(column[k]) != 0 && sgn(tab_[r][k]) != 0) v += tab_[r][k] * column[k];
        tab_[r].push_back(v);
    }
    reduced_.push_back(red);
    structural_.push_back(static_cast<int>(reduced_.size()) - 1);
    return columns() - 1;
}

void ColumnSimplex::pivot(int row, int col) {
    const int R = rows();
    const int C = static_cast<int>(reduced_.size());
    Rational piv = tab_[row][col];
    for (int j = 0; j < C; ++j)
        if (sgn(tab_[row][j]) != 0) tab_[row][j] /= piv;
    beta_[row] /= piv;
    for (int r = 0; r < R; ++r) {
        if (r == row || sgn(tab_[r][col]) == 0) continue;
        Rational f = tab_[r][col];
        for (int j = 0; j < C; ++j)
            if (sgn(tab_[row][j]) != 0) tab_[r][j] -= f * tab_[row][j];
        beta_[r] -= f * beta_[row];
    }
    if (sgn(reduced_[col]) != 0) {
        Rational f = reduced_[col];
        for (int j = 0; j < C; ++j)
            if (sgn(tab_[row][j]) != 0) reduced_[j] -= f * tab_[row][j];
        objective_ -= f * beta_[row];
    }
    basis_[row] = col;
    ++pivots_;
}

ColumnSimplex::Status ColumnSimplex::solve() {
    const int R = rows();
    while (true) {
        int enter = -1;
        for (int j = 0; j < static_cast<int>(reduced_.size()); ++j)
            if (sgn(reduced_[j]) < 0) {
                enter = j;
                break;
            }
        if (enter < 0) return Status::Optimal;
        int leave = -1;
        Rational best;
        for (int r = 0; r < R; ++r) {
            if (sgn(tab_[r][enter]) <= 0) continue;
            Rational ratio = beta_[r] / tab_[r][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) return Status::Unbounded;
        pivot(leave, enter);
    }
}

std::vector<Rational> ColumnSimplex::primal() const {
    std::vector<Rational> x(columns(), Rational(0));
    std::vector<int> where(reduced_.size(), -1);
    for (int r = 0; r < rows(); ++r) where[basis_[r]] = r;
    for (int j = 0; j < columns(); ++j)
        if (where[structural_[j]] >= 0) x[j] = beta_[where[structural_[j]]];
    return x;
}

std::vector<Rational> ColumnSimplex::duals() const {
    return std::vector<Rational>(reduced_.begin(), reduced_.begin() + rows());
}

}  // namespace geomet
