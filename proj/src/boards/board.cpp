#include "rooks/board.hpp"

#include <algorithm>
#include <string>

namespace rooks {
namespace {

Board::Row normalize_row(Board::Row row)
{
    std::erase_if(row, [](const ColumnInterval& iv) { return iv.empty(); });
    for (const auto& iv : row)
        if (iv.from < 1) throw InvalidArgument("board columns must be >= 1");
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.from < b.from; });
    Board::Row merged;
    for (const auto& iv : row) {
        if (!merged.empty() && iv.from <= merged.back().to + 1)
            merged.back().to = std::max(merged.back().to, iv.to);
        else
            merged.push_back(iv);
    }
    return merged;
}

void check_family_args(int t, int n)
{
    if (n < 2) throw InvalidArgument("board families require n >= 2");
    if (t < 0) throw InvalidArgument("board families require t >= 0");
}

}  // namespace

Board::Board(std::vector<ColumnInterval> rows)
{
    rows_.reserve(rows.size());
    for (const auto& iv : rows) rows_.push_back(normalize_row({iv}));
}

Board::Board(std::vector<Row> rows)
{
    rows_.reserve(rows.size());
    for (auto& row : rows) rows_.push_back(normalize_row(std::move(row)));
}

Board Board::from_cells(std::span<const std::pair<int, int>> cells, int row_count)
{
    int m = row_count;
    for (const auto& [r, c] : cells) {
        if (r < 1 || c < 1) throw InvalidArgument("board cells must have positive coordinates");
        m = std::max(m, r);
    }
    std::vector<Row> rows(static_cast<std::size_t>(m));
    for (const auto& [r, c] : cells) rows[static_cast<std::size_t>(r - 1)].push_back({c, c});
    return Board(std::move(rows));
}

const Board::Row& Board::row(int i) const
{
    if (i < 1 || i > row_count()) throw InvalidArgument("row index out of range: " + std::to_string(i));
    return rows_[static_cast<std::size_t>(i - 1)];
}

bool Board::contains(int r, int column) const
{
    if (r < 1 || r > row_count()) return false;
    return std::any_of(rows_[static_cast<std::size_t>(r - 1)].begin(), rows_[static_cast<std::size_t>(r - 1)].end(),
                       [column](const ColumnInterval& iv) { return iv.from <= column && column <= iv.to; });
}

std::vector<int> Board::row_columns(int r) const
{
    std::vector<int> out;
    for (const auto& iv : row(r))
        for (int c = iv.from; c <= iv.to; ++c) out.push_back(c);
    return out;
}

std::vector<std::pair<int, int>> Board::cells() const
{
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= row_count(); ++r)
        for (int c : row_columns(r)) out.emplace_back(r, c);
    return out;
}

std::size_t Board::cell_count() const
{
    std::size_t total = 0;
    for (const auto& row : rows_)
        for (const auto& iv : row) total += static_cast<std::size_t>(iv.length());
    return total;
}

int Board::max_column() const
{
    int best = 0;
    for (const auto& row : rows_)
        if (!row.empty()) best = std::max(best, row.back().to);
    return best;
}

bool Board::is_interval_board() const
{
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& row) { return row.size() <= 1; });
}

Board skew_ferrers(std::span<const int> lambda, std::span<const int> mu)
{
    const auto m = lambda.size();
    if (mu.size() > m) throw InvalidArgument("invalid shape: mu has more parts than lambda");
    const auto weakly_decreasing = [](std::span<const int> parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0) return false;
            if (i > 0 && parts[i] > parts[i - 1]) return false;
        }
        return true;
    };
    if (!weakly_decreasing(lambda)) throw InvalidArgument("invalid shape: lambda is not a partition");
    if (!weakly_decreasing(mu)) throw InvalidArgument("invalid shape: mu is not a partition");
    std::vector<ColumnInterval> rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        // Board row i+1 is the (m-i)-th part, counting from the top of the diagram.
        const std::size_t part = m - 1 - i;
        const int mu_part = part < mu.size() ? mu[part] : 0;
        if (mu_part > lambda[part]) throw InvalidArgument("invalid shape: mu is not contained in lambda");
        rows[i] = {mu_part + 1, lambda[part]};
    }
    return Board(std::move(rows));
}

Board catalan_board(int t, int n)
{
    check_family_args(t, n);
    return Board(std::vector<ColumnInterval>(static_cast<std::size_t>(n - 1), ColumnInterval{1, n - 2 + t}));
}

Board shi_board(int t, int n)
{
    check_family_args(t, n);
    std::vector<ColumnInterval> rows;
    for (int i = 1; i <= n - 1; ++i) rows.push_back({1, n - 2 + t + i});
    return Board(std::move(rows));
}

Board linial_board(int t, int n)
{
    check_family_args(t, n);
    std::vector<ColumnInterval> rows;
    for (int i = 1; i <= n - 1; ++i) rows.push_back({i + 1, n - 2 + t + i});
    return Board(std::move(rows));
}

int v_stat(const Board& board, std::span<const int> rows)
{
    if (rows.empty()) throw InvalidArgument("v_stat needs a nonempty set of rows");
    for (int r : rows)
        if (r < 1 || r > board.row_count()) throw InvalidArgument("v_stat row out of range: " + std::to_string(r));
    Board::Row common = board.row(rows.front());
    for (std::size_t idx = 1; idx < rows.size() && !common.empty(); ++idx) {
        const Board::Row& other = board.row(rows[idx]);
        Board::Row next;
        std::size_t a = 0, b = 0;
        while (a < common.size() && b < other.size()) {
            const int lo = std::max(common[a].from, other[b].from);
            const int hi = std::min(common[a].to, other[b].to);
            if (lo <= hi) next.push_back({lo, hi});
            if (common[a].to < other[b].to) ++a;
            else ++b;
        }
        common = std::move(next);
    }
    int total = 0;
    for (const auto& iv : common) total += iv.length();
    return total;
}

}  // namespace rooks
