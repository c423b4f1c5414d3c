#include "uqrep/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace uqrep {

void validate_weight(const Weight& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i])
            throw std::invalid_argument("weight not non-increasing");
}

void Window::validate() const {
    if (interior_margin < 0 || upper_slack < 0 || lower_slack < 0)
        throw std::invalid_argument("window slacks must be non-negative");
    if (upper_slack < interior_margin || lower_slack < interior_margin)
        throw std::invalid_argument("window slack smaller than interior margin: empty interior");
}

GTTableau::GTTableau(std::vector<std::vector<long long>> rows) : rows_(std::move(rows)) {
    for (size_t j = 0; j < rows_.size(); ++j)
        if (rows_[j].size() != j + 1)
            throw std::invalid_argument("GT tableau row " + std::to_string(j + 1) +
                                        " has wrong length");
}

bool GTTableau::betweenness_ok() const {
    const int n = size();
    for (int j = 1; j < n; ++j)
        for (int i = 1; i <= j; ++i)
            if (!(at(i, j + 1) >= at(i, j) && at(i, j) >= at(i + 1, j + 1)))
                return false;
    return true;
}

std::vector<long long> GTTableau::flat_key() const {
    std::vector<long long> key;
    for (int j = size(); j >= 1; --j)
        key.insert(key.end(), rows_[j - 1].begin(), rows_[j - 1].end());
    return key;
}

namespace {

void fill_rows(std::vector<std::vector<long long>>& rows, int j,
               std::vector<GTTableau>& out) {
    if (j == 0) {
        std::vector<std::vector<long long>> ordered(rows.rbegin(), rows.rend());
        out.emplace_back(std::move(ordered));
        return;
    }
    // rows is kept top-first while recursing;  rows[k] = row (n-k).
    const std::vector<long long> above = rows.back();  // copy: rows may reallocate
    std::vector<long long> cur(j);
    // enumerate row j entries within [above[i+1], above[i]]
    auto rec = [&](auto&& self, int i) -> void {
        if (i == j) {
            rows.push_back(cur);
            fill_rows(rows, j - 1, out);
            rows.pop_back();
            return;
        }
        for (long long v = above[i]; v >= above[i + 1]; --v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

} // namespace

std::vector<GTTableau> enumerate_tableaux(const Weight& hw) {
    validate_weight(hw);
    const int n = static_cast<int>(hw.size());
    std::vector<GTTableau> out;
    if (n == 0) return out;
    std::vector<std::vector<long long>> rows{hw};
    fill_rows(rows, n - 1, out);
    std::sort(out.begin(), out.end(), [](const GTTableau& a, const GTTableau& b) {
        return a.flat_key() < b.flat_key();
    });
    return out;
}

std::optional<GTTableau> apply_shift(const GTTableau& M, int row, int pos, int sign) {
    if (row < 1 || row > M.size() || pos < 1 || pos > row)
        throw std::out_of_range("apply_shift: (row, pos) out of range");
    GTTableau shifted = M;
    shifted.at(pos, row) += (sign >= 0 ? 1 : -1);
    if (!shifted.betweenness_ok()) return std::nullopt;
    return shifted;
}

std::vector<Weight> branching(const Weight& hw) {
    validate_weight(hw);
    const int n = static_cast<int>(hw.size());
    std::vector<Weight> out;
    if (n == 0) return out;
    Weight cur(n - 1);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n - 1) {
            out.push_back(cur);
            return;
        }
        for (long long v = hw[i]; v >= hw[i + 1]; --v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> principal_weights(const Weight& m, const Window& win, long long anchor) {
    validate_weight(m);
    win.validate();
    const int n = static_cast<int>(m.size()) + 1;
    std::vector<Weight> out;
    Weight cur(n);
    // per-coordinate ranges: decoupled box
    std::vector<long long> lo(n), hi(n);
    if (n == 1) {
        lo[0] = anchor - win.lower_slack;
        hi[0] = anchor + win.upper_slack;
    } else {
        hi[0] = m[0] + win.upper_slack;
        lo[0] = m[0];
        for (int i = 1; i < n - 1; ++i) {
            hi[i] = m[i - 1];
            lo[i] = m[i];
        }
        hi[n - 1] = m[n - 2];
        lo[n - 1] = m[n - 2] - win.lower_slack;
    }
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (long long v = lo[i]; v <= hi[i]; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> l_row(const std::vector<long long>& row) {
    std::vector<long long> l(row.size());
    for (size_t i = 0; i < row.size(); ++i) l[i] = row[i] - static_cast<long long>(i) - 1;
    return l;
}

std::vector<long long> l_params(const Weight& m) {
    std::vector<long long> l(m.size());
    for (size_t i = 0; i < m.size(); ++i) l[i] = m[i] - static_cast<long long>(i) - 2;
    return l;
}

bool principal_weight_ok(const Weight& m, const Weight& mn) {
    const int n = static_cast<int>(mn.size());
    if (static_cast<int>(m.size()) != n - 1) return false;
    for (int i = 0; i < n - 1; ++i)
        if (!(mn[i] >= m[i] && m[i] >= mn[i + 1])) return false;
    return true;
}

} // namespace uqrep
