#include "rooks/board.hpp"
#include "rooks/set_partition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace rooks {
namespace {

using Mask = std::uint64_t;
using Wide = unsigned __int128;

struct ColumnRun {
    Mask rows = 0;  // rows that contain every column of the run
    int length = 0;
};

// Splits the column axis into maximal runs on which the set of rows covering
// a column is constant. Columns covered by no row are dropped.
std::vector<ColumnRun> column_runs(const Board& board)
{
    std::vector<int> cuts;
    for (const auto& row : board.rows())
        for (const auto& iv : row) {
            cuts.push_back(iv.from);
            cuts.push_back(iv.to + 1);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<ColumnRun> runs;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const int column = cuts[c];
        Mask rows = 0;
        for (int r = 1; r <= board.row_count(); ++r)
            if (board.contains(r, column)) rows |= Mask{1} << (r - 1);
        if (rows != 0) runs.push_back({rows, cuts[c + 1] - cuts[c]});
    }
    return runs;
}

bool checked_add(Wide& target, Wide value)
{
    const Wide before = target;
    target += value;
    return target >= before;
}

bool checked_add(BigInt& target, const BigInt& value)
{
    target += value;
    return true;
}

// dp[s] = number of placements using exactly the rows in s among the columns
// swept so far. Processing masks in decreasing order lets the update run in
// place: s | bit > s has already been read as a source for this column.
template <class Count>
bool sweep(const std::vector<ColumnRun>& runs, std::vector<Count>& dp)
{
    const Mask states = dp.size();
    for (const auto& run : runs) {
        for (int repeat = 0; repeat < run.length; ++repeat) {
            for (Mask s = states; s-- > 0;) {
                if (dp[s] == 0) continue;
                Mask free_rows = run.rows & ~s;
                while (free_rows != 0) {
                    const Mask bit = free_rows & (~free_rows + 1);
                    free_rows ^= bit;
                    if (!checked_add(dp[s | bit], dp[s])) return false;
                }
            }
        }
    }
    return true;
}

template <class Count>
RookVector collect(const std::vector<Count>& dp, int m)
{
    RookVector out;
    out.counts.assign(static_cast<std::size_t>(m) + 1, BigInt(0));
    for (Mask s = 0; s < dp.size(); ++s) {
        if (dp[s] == 0) continue;
        BigInt value;
        if constexpr (std::is_same_v<Count, Wide>) {
            const auto hi = static_cast<std::uint64_t>(dp[s] >> 64);
            const auto lo = static_cast<std::uint64_t>(dp[s]);
            value = (BigInt(hi) << 64) | BigInt(lo);
        } else {
            value = dp[s];
        }
        out.counts[static_cast<std::size_t>(std::popcount(s))] += value;
    }
    return out;
}

}  // namespace

RookVector rook_numbers(const Board& board, const Limits& limits)
{
    const int m = board.row_count();
    if (m >= 63 || (Mask{1} << m) > limits.max_states)
        throw ResourceLimit("rook DP over " + std::to_string(m) + " rows exceeds the state cap of " +
                            std::to_string(limits.max_states));
    const auto runs = column_runs(board);
    const Mask states = Mask{1} << m;

    std::vector<Wide> fast(states, 0);
    fast[0] = 1;
    if (sweep(runs, fast)) return collect(fast, m);

    std::vector<BigInt> exact(states, BigInt(0));
    exact[0] = 1;
    sweep(runs, exact);
    return collect(exact, m);
}

IntegerPolynomial factorial_polynomial(const RookVector& r, int m)
{
    const int rows = static_cast<int>(r.size()) - 1;
    if (m < rows)
        throw InvalidArgument("m-factorial polynomial needs m >= number of rows (" + std::to_string(rows) + ")");
    IntegerPolynomial out;
    for (int k = 0; k <= rows; ++k) {
        const BigInt& rk = r.counts[static_cast<std::size_t>(k)];
        if (rk != 0) out += falling_factorial(static_cast<unsigned>(m - k)) * rk;
    }
    return out;
}

IntegerPolynomial factorial_polynomial(const Board& board, int m)
{
    if (m < board.row_count())
        throw InvalidArgument("m-factorial polynomial needs m >= number of rows (" +
                              std::to_string(board.row_count()) + ")");
    return factorial_polynomial(rook_numbers(board), m);
}

IntegerPolynomial factorial_polynomial(const Board& board, const Limits& limits)
{
    return factorial_polynomial(rook_numbers(board, limits), board.row_count());
}

IntegerPolynomial gjw_factorial_polynomial(const Board& board, const Limits& limits)
{
    const int m = board.row_count();
    if (m > kGjwMaxRows || m > limits.max_partition_size)
        throw ResourceLimit("partition-lattice expansion over " + std::to_string(m) + " rows exceeds the cap of " +
                            std::to_string(std::min(kGjwMaxRows, limits.max_partition_size)));
    if (m == 0) return IntegerPolynomial::constant(1);
    IntegerPolynomial sum;
    for_each_set_partition(m, [&](const SetPartition& sigma) {
        IntegerPolynomial term = IntegerPolynomial::constant(mobius_bottom(sigma));
        for (const auto& block : sigma.blocks()) term *= IntegerPolynomial::linear(v_stat(board, block));
        sum += term;
    }, limits);
    return sum;
}

IntegerPolynomial linial_factorial_closed_form(int n)
{
    if (n < 1) throw InvalidArgument("closed form needs n >= 1");
    IntegerPolynomial sum;
    for (int j = 0; j <= n; ++j)
        sum += power_of_linear(BigInt(1 - j), static_cast<unsigned>(n - 1)) *
               binomial(static_cast<unsigned>(n), static_cast<unsigned>(j));
    return divide_exact(sum, pow(BigInt(2), static_cast<unsigned>(n)));
}

Rational linial_factorial_closed_form(int n, const Rational& t)
{
    if (n < 1) throw InvalidArgument("closed form needs n >= 1");
    Rational sum = 0;
    for (int j = 0; j <= n; ++j)
        sum += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j))) * pow(t - 1 + j, n - 1);
    sum /= Rational(pow(BigInt(2), static_cast<unsigned>(n)));
    if (is_integer(t)) to_integer_checked(sum, "closed form at an integer point");
    return sum;
}

void for_each_max_placement(const Board& board, const std::function<void(const Placement&)>& visit,
                            const Limits& limits)
{
    const int m = board.row_count();
    const BigInt total = rook_numbers(board, limits)[static_cast<std::size_t>(m)];
    if (total > limits.max_enum)
        throw ResourceLimit(total.str() + " maximal placements exceed the enumeration cap of " +
                            std::to_string(limits.max_enum));
    std::vector<std::vector<int>> columns;
    for (int r = 1; r <= m; ++r) columns.push_back(board.row_columns(r));
    std::vector<char> used(static_cast<std::size_t>(board.max_column()) + 1, 0);
    Placement current(static_cast<std::size_t>(m), 0);
    const auto recurse = [&](auto&& self, std::size_t row) -> void {
        if (row == current.size()) {
            visit(current);
            return;
        }
        for (int c : columns[row]) {
            if (used[static_cast<std::size_t>(c)]) continue;
            used[static_cast<std::size_t>(c)] = 1;
            current[row] = c;
            self(self, row + 1);
            used[static_cast<std::size_t>(c)] = 0;
        }
    };
    recurse(recurse, 0);
}

std::vector<Placement> enumerate_max_placements(const Board& board, const Limits& limits)
{
    std::vector<Placement> out;
    for_each_max_placement(board, [&](const Placement& p) { out.push_back(p); }, limits);
    return out;
}

}  // namespace rooks
