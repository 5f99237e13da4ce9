#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mmc/base.hpp"

namespace mmc::partitions {

// A partition is a weakly decreasing sequence of positive integers. The empty
// partition is a first-class value with weight 0 and length 0. Trailing zeros
// are rejected rather than stripped, so equality is plain sequence equality.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw parse_error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw parse_error("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    // Accepts "4,2,1"; the empty string denotes the empty partition.
    static Partition parse(std::string_view s) {
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t comma = s.find(',', pos);
            std::string_view tok = s.substr(
                pos, comma == std::string_view::npos ? comma : comma - pos);
            if (tok.empty()) throw parse_error("empty part in partition string");
            int value = 0;
            for (char c : tok) {
                if (c < '0' || c > '9')
                    throw parse_error(std::string("bad character '") + c +
                                      "' in partition string");
                value = value * 10 + (c - '0');
                if (value > 1'000'000) throw parse_error("partition part too large");
            }
            parts.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
            if (pos == s.size()) throw parse_error("trailing comma in partition string");
        }
        return Partition(std::move(parts));
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    const std::vector<int>& parts() const { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition conjugate() const {
        std::vector<int> conj;
        if (!parts_.empty()) {
            conj.resize(parts_[0]);
            for (int j = 0; j < parts_[0]; ++j)
                conj[j] = static_cast<int>(std::count_if(
                    parts_.begin(), parts_.end(), [&](int p) { return p > j; }));
        }
        return Partition(std::move(conj));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
};

struct Cell {
    int content;  // j - i for the cell in row i, column j (1-indexed)
    int hook;

    friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellStats {
    std::vector<Cell> cells;  // row-major over the Young diagram
};

inline CellStats cell_stats(const Partition& lambda) {
    const auto& rows = lambda.parts();
    const Partition conj = lambda.conjugate();
    CellStats stats;
    stats.cells.reserve(static_cast<std::size_t>(lambda.weight()));
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < rows[i]; ++j)
            stats.cells.push_back(Cell{
                j - i, (rows[i] - j) + (conj[static_cast<std::size_t>(j)] - i) - 1});
    return stats;
}

// All partitions of n in reverse-lexicographic order, (n) first, (1^n) last.
inline std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    if (n < 0) throw parse_error("negative weight");
    rec(rec, n, n);
    return out;
}

// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of the class.
inline Int z_of(const Partition& lambda) {
    Int z = 1;
    const auto& p = lambda.parts();
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        const auto mult = static_cast<int>(j - i);
        for (int k = 0; k < mult; ++k) z *= p[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

inline Int hook_product(const Partition& lambda) {
    Int h = 1;
    for (const Cell& c : cell_stats(lambda).cells) h *= c.hook;
    return h;
}

// Dimension of the S_n irrep labelled by lambda, by the hook length formula.
inline Int sn_dimension(const Partition& lambda) {
    return factorial(lambda.weight()) / hook_product(lambda);
}

}  // namespace mmc::partitions

namespace mmc {
using partitions::Partition;
}
