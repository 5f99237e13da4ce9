#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "mmc/base.hpp"
#include "mmc/partitions.hpp"

namespace mmc::characters {

inline constexpr int kMaxWeight = 24;

// Irreducible S_n character values by the Murnaghan-Nakayama rule, run on
// beta-numbers (first-column hook lengths): removing a border strip of size r
// maps beta b -> b - r when the target is free, with sign (-1)^{number of
// betas passed over}. Memoized on (normalized beta set, remaining class parts).
class CharTable {
  public:
    Int character(const Partition& lambda, const Partition& mu) {
        if (lambda.weight() != mu.weight())
            throw parse_error("character requires |lambda| = |mu|");
        if (lambda.weight() > kMaxWeight)
            throw capacity_error("character table capped at weight 24");
        return eval(betas_of(lambda), mu.parts(), 0);
    }

    static CharTable& global() {
        static CharTable table;
        return table;
    }

  private:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    static std::vector<int> betas_of(const Partition& lambda) {
        const int l = lambda.length();
        std::vector<int> beta(static_cast<std::size_t>(l));
        for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + l - 1 - i;
        return beta;  // strictly decreasing, no zero staircase by construction
    }

    // beta is strictly decreasing with beta.back() >= 1 unless empty
    // (the all-zeros staircase is stripped after each removal).
    Int eval(std::vector<int> beta, const std::vector<int>& mu, std::size_t mi) {
        if (mi == mu.size()) return 1;
        Key key{beta, {mu.begin() + static_cast<std::ptrdiff_t>(mi), mu.end()}};
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        const int r = mu[mi];
        Int total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            const int nb = beta[i] - r;
            if (nb < 0) continue;
            bool occupied = false;
            int between = 0;
            for (std::size_t j = 0; j < beta.size(); ++j) {
                if (beta[j] == nb) { occupied = true; break; }
                if (nb < beta[j] && beta[j] < beta[i]) ++between;
            }
            if (occupied) continue;
            std::vector<int> next;
            next.reserve(beta.size());
            for (std::size_t j = 0; j < beta.size(); ++j)
                next.push_back(j == i ? nb : beta[j]);
            std::sort(next.begin(), next.end(), std::greater<>());
            while (!next.empty() && next.back() == 0) {
                next.pop_back();
                for (int& b : next) --b;
            }
            const Int sub = eval(std::move(next), mu, mi + 1);
            total += (between % 2 == 0) ? sub : -sub;
        }
        std::lock_guard<std::mutex> lock(mutex_);
        memo_.emplace(std::move(key), total);  // idempotent: value is unique
        return total;
    }

    std::map<Key, Int> memo_;
    std::mutex mutex_;
};

inline Int character(const Partition& lambda, const Partition& mu) {
    return CharTable::global().character(lambda, mu);
}

// p_mu = sum_lambda chi^lambda_mu s_lambda
inline std::map<Partition, Int> power_to_schur(const Partition& mu) {
    std::map<Partition, Int> out;
    for (const Partition& lambda : partitions::enumerate_partitions(mu.weight())) {
        Int chi = character(lambda, mu);
        if (chi != 0) out.emplace(lambda, std::move(chi));
    }
    return out;
}

// s_lambda = sum_mu (chi^lambda_mu / z_mu) p_mu
inline std::map<Partition, Rat> schur_to_power(const Partition& lambda) {
    std::map<Partition, Rat> out;
    for (const Partition& mu : partitions::enumerate_partitions(lambda.weight())) {
        Int chi = character(lambda, mu);
        if (chi != 0) out.emplace(mu, Rat(chi, partitions::z_of(mu)));
    }
    return out;
}

}  // namespace mmc::characters
