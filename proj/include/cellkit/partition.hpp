#pragma once

/**
 * @file partition.hpp
 * @brief Partitions and Young tableaux (English notation, rows top to bottom).
 */

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "cellkit/error.hpp"

namespace cellkit {

class Partition {
public:
    Partition() = default;

    /// Trailing zeros are dropped; the remaining parts must be positive and weakly decreasing.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw Error("InvalidPartition", "parts must be positive and weakly decreasing", to_string());
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    /// lambda_i for i >= 1, zero beyond the last part.
    int part(int i) const { return i >= 1 && i <= num_parts() ? parts_[i - 1] : 0; }

    Partition dual() const {
        std::vector<int> d(parts_.empty() ? 0 : parts_.front(), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++d[j];
        return Partition(std::move(d));
    }

    /// (sum lambda_i^2 - |lambda|) / 2 = sum_i binom(lambda_i, 2).
    int a_value() const {
        int a = 0;
        for (int p : parts_) a += p * (p - 1) / 2;
        return a;
    }

    /// The partition with its first column removed (every part decreased by one).
    Partition remove_first_column() const {
        std::vector<int> r;
        for (int p : parts_)
            if (p > 1) r.push_back(p - 1);
        return Partition(std::move(r));
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

private:
    std::vector<int> parts_;
};

/// All partitions of d, in reverse lexicographic order ((d) first).
inline std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

/// A filling of a Young diagram; rows[r][c] is the entry in row r, column c.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lens;
        for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
        shape_ = Partition(lens);
        if (shape_.num_parts() != static_cast<int>(rows_.size()))
            throw Error("InvalidTableau", "tableau has empty rows");
    }

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    const Partition& shape() const noexcept { return shape_; }
    int at(int r, int c) const { return rows_.at(r).at(c); }

    /// Entries strictly decrease down every column.
    bool columns_strictly_decreasing() const {
        for (std::size_t r = 1; r < rows_.size(); ++r)
            for (std::size_t c = 0; c < rows_[r].size(); ++c)
                if (rows_[r][c] >= rows_[r - 1][c]) return false;
        return true;
    }

    /// Column index (0-based) of the first box holding `label`, or -1.
    int column_of(int label) const {
        for (const auto& r : rows_)
            for (std::size_t c = 0; c < r.size(); ++c)
                if (r[c] == label) return static_cast<int>(c);
        return -1;
    }

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
    friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows_ < b.rows_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r) s += " / ";
            for (std::size_t c = 0; c < rows_[r].size(); ++c) s += (c ? " " : "") + std::to_string(rows_[r][c]);
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << t.to_string(); }

private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
};

}  // namespace cellkit
