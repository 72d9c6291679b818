#pragma once

#include "rooks/errors.hpp"
#include "rooks/numeric.hpp"
#include "rooks/polynomial.hpp"

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace rooks {

/// Inclusive column range; empty when to < from.
struct ColumnInterval {
    int from = 1;
    int to = 0;

    bool empty() const noexcept { return to < from; }
    int length() const noexcept { return empty() ? 0 : to - from + 1; }
    friend bool operator==(const ColumnInterval&, const ColumnInterval&) = default;
};

/// A finite set of cells (row, column) in the positive quadrant. Rows are
/// numbered 1..m from the bottom; each row is a sorted list of disjoint,
/// non-adjacent column intervals.
class Board {
public:
    using Row = std::vector<ColumnInterval>;

    Board() = default;
    /// One interval per row, bottom row first.
    explicit Board(std::vector<ColumnInterval> rows);
    explicit Board(std::vector<Row> rows);
    /// Cells as (row, column) pairs; row_count is max(row_count, largest row).
    static Board from_cells(std::span<const std::pair<int, int>> cells, int row_count = 0);

    int row_count() const noexcept { return static_cast<int>(rows_.size()); }
    /// Row i, 1-based from the bottom.
    const Row& row(int i) const;
    const std::vector<Row>& rows() const noexcept { return rows_; }

    bool contains(int row, int column) const;
    std::vector<int> row_columns(int row) const;
    std::vector<std::pair<int, int>> cells() const;
    std::size_t cell_count() const;
    int max_column() const;

    /// Every row is a single (possibly empty) interval.
    bool is_interval_board() const;

    friend bool operator==(const Board&, const Board&) = default;

private:
    std::vector<Row> rows_;
};

/// r_0..r_m; r_0 = 1.
struct RookVector {
    std::vector<BigInt> counts;

    BigInt operator[](std::size_t k) const { return k < counts.size() ? counts[k] : BigInt(0); }
    std::size_t size() const noexcept { return counts.size(); }
    friend bool operator==(const RookVector&, const RookVector&) = default;
};

/// Young diagram of shape lambda/mu. The last part of lambda becomes row 1.
Board skew_ferrers(std::span<const int> lambda, std::span<const int> mu = {});

/// (n-1) x (n-2+t) rectangle.
Board catalan_board(int t, int n);
/// Row i = columns 1 .. n-2+t+i.
Board shi_board(int t, int n);
/// Row i = columns i+1 .. n-2+t+i.
Board linial_board(int t, int n);

/// Column-sweep DP over subsets of occupied rows.
RookVector rook_numbers(const Board& board, const Limits& limits = {});

/// R_m(x, B) = sum_k r_k(B) (x)_{m-k}.
IntegerPolynomial factorial_polynomial(const Board& board, int m);
IntegerPolynomial factorial_polynomial(const Board& board, const Limits& limits = {});
IntegerPolynomial factorial_polynomial(const RookVector& r, int m);

/// Number of columns occupied in every row of rows (1-based, nonempty).
int v_stat(const Board& board, std::span<const int> rows);

/// sum over set partitions sigma of [m] of mu(0, sigma) prod_{A in sigma} (x + v_B(A)).
IntegerPolynomial gjw_factorial_polynomial(const Board& board, const Limits& limits = {});
inline constexpr int kGjwMaxRows = 9;

/// 2^-n sum_j C(n, j) (t - 1 + j)^(n-1), as a polynomial in t. Throws
/// InternalConsistencyError if the result is not integral.
IntegerPolynomial linial_factorial_closed_form(int n);
Rational linial_factorial_closed_form(int n, const Rational& t);

/// A maximal placement: entry i-1 is the column of the rook in row i.
using Placement = std::vector<int>;

void for_each_max_placement(const Board& board, const std::function<void(const Placement&)>& visit,
                            const Limits& limits = {});
std::vector<Placement> enumerate_max_placements(const Board& board, const Limits& limits = {});

}  // namespace rooks
