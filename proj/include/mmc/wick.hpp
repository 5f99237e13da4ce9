#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mmc/base.hpp"
#include "mmc/partitions.hpp"
#include "mmc/polyalg.hpp"

namespace mmc::wick {

inline constexpr int kMaxWeight = 16;

// Histogram of face counts over all fixed-point-free pairings of the 2n
// half-edges of the trace word of type lambda.
struct GluingCensus {
    Partition lambda{};
    std::map<int, Int> by_faces;
    int gs_exp = 0;

    nlohmann::json to_json() const {
        nlohmann::json faces = nlohmann::json::object();
        for (const auto& [f, c] : by_faces) faces[std::to_string(f)] = c.str();
        nlohmann::json j;
        j["lambda"] = lambda.str();
        j["gs_exp"] = gs_exp;
        j["by_faces"] = std::move(faces);
        return j;
    }
};

namespace detail {

// One cycle per part, laid out consecutively in the stored (descending) order.
inline std::vector<int> canonical_sigma(const Partition& lam) {
    std::vector<int> sigma(static_cast<std::size_t>(lam.weight()));
    int start = 0;
    for (int pi = 0; pi < lam.length(); ++pi) {
        const int len = lam[static_cast<std::size_t>(pi)];
        for (int i = 0; i < len; ++i)
            sigma[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
        start += len;
    }
    return sigma;
}

// Pairs the smallest unmatched point with each larger unmatched point in
// increasing order, tallying cycles(sigma ∘ tau) at each leaf.
class PairingCounter {
  public:
    explicit PairingCounter(const std::vector<int>& sigma)
        : sigma_(sigma), m_(static_cast<int>(sigma.size())),
          tau_(sigma.size(), -1), seen_(sigma.size(), 0) {}

    void run_all() {
        matched_ = 0;
        recurse();
    }

    void run_branch(int first_partner) {
        tau_[0] = first_partner;
        tau_[static_cast<std::size_t>(first_partner)] = 0;
        matched_ = 1u | (1u << first_partner);
        recurse();
    }

    std::map<int, Int>& counts() { return counts_; }

  private:
    void recurse() {
        int i = 0;
        while (i < m_ && ((matched_ >> i) & 1u)) ++i;
        if (i == m_) {
            leaf();
            return;
        }
        for (int j = i + 1; j < m_; ++j) {
            if ((matched_ >> j) & 1u) continue;
            tau_[static_cast<std::size_t>(i)] = j;
            tau_[static_cast<std::size_t>(j)] = i;
            const std::uint32_t bits = (1u << i) | (1u << j);
            matched_ |= bits;
            recurse();
            matched_ &= ~bits;
        }
    }

    void leaf() {
        std::fill(seen_.begin(), seen_.end(), 0);
        int cycles = 0;
        for (int s = 0; s < m_; ++s) {
            if (seen_[static_cast<std::size_t>(s)]) continue;
            ++cycles;
            int x = s;
            while (!seen_[static_cast<std::size_t>(x)]) {
                seen_[static_cast<std::size_t>(x)] = 1;
                x = sigma_[static_cast<std::size_t>(tau_[static_cast<std::size_t>(x)])];
            }
        }
        ++counts_[cycles];
    }

    const std::vector<int>& sigma_;
    int m_;
    std::vector<int> tau_;
    std::vector<char> seen_;
    std::map<int, Int> counts_;
    std::uint32_t matched_ = 0;
};

// Visits every set partition of {0..n-1}; blocks are built in the order the
// classic restricted-growth enumeration produces them.
template <class F>
void for_each_set_partition(int n, F&& visit) {
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            visit(static_cast<const std::vector<std::vector<int>>&>(blocks));
            return;
        }
        // Index-based: recursion below appends and removes blocks, so any
        // reference into `blocks` taken here would dangle after reallocation.
        const std::size_t existing = blocks.size();
        for (std::size_t i = 0; i < existing; ++i) {
            blocks[i].push_back(k);
            self(self, k + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({k});
        self(self, k + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
}

}  // namespace detail

inline GluingCensus genus_census(const Partition& lam, int threads = 1) {
    if (lam.weight() > kMaxWeight)
        throw capacity_error("pairing enumeration capped at weight 16");
    GluingCensus out{lam, {}, lam.weight() / 2 - lam.length()};
    const int m = lam.weight();
    if (m % 2 != 0) return out;
    const auto sigma = detail::canonical_sigma(lam);
    if (threads <= 1 || m < 4) {
        detail::PairingCounter counter(sigma);
        counter.run_all();
        out.by_faces = std::move(counter.counts());
        return out;
    }
    const int branches = m - 1;
    const int nthreads = std::min(threads, branches);
    std::vector<std::map<int, Int>> partial(static_cast<std::size_t>(nthreads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            detail::PairingCounter counter(sigma);
            for (int b = 1 + t; b <= branches; b += nthreads) counter.run_branch(b);
            partial[static_cast<std::size_t>(t)] = std::move(counter.counts());
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : partial)
        for (const auto& [f, c] : p) out.by_faces[f] += c;
    return out;
}

inline polyalg::Graded wick_correlator(const Partition& lam, int threads = 1) {
    if (lam.weight() % 2 != 0) return {};
    const GluingCensus census = genus_census(lam, threads);
    polyalg::NPoly poly;
    for (const auto& [f, c] : census.by_faces)
        poly += polyalg::NPoly::monomial(f, Rat(c));
    return {std::move(poly), census.gs_exp};
}

// Cumulant of the moment family by Möbius inversion over set partitions of
// the positions of the parts: Σ_P (−1)^{|P|−1}(|P|−1)! Π_B ⟨p_B⟩.
inline polyalg::Graded connected_correlator(const Partition& lam, int threads = 1) {
    if (lam.weight() > kMaxWeight)
        throw capacity_error("pairing enumeration capped at weight 16");
    if (lam.empty() || lam.weight() % 2 != 0) return {};
    if (lam.length() > 10)
        throw capacity_error("cumulant conversion capped at 10 trace factors");
    std::map<Partition, polyalg::Graded> moments;
    auto moment = [&](const std::vector<int>& positions) -> const polyalg::Graded& {
        std::vector<int> parts;
        parts.reserve(positions.size());
        for (int i : positions) parts.push_back(lam[static_cast<std::size_t>(i)]);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        Partition key(std::move(parts));
        auto it = moments.find(key);
        if (it == moments.end())
            it = moments.emplace(key, wick_correlator(key, threads)).first;
        return it->second;
    };
    polyalg::Graded acc{};
    detail::for_each_set_partition(lam.length(), [&](const std::vector<std::vector<int>>& blocks) {
        polyalg::Graded term{polyalg::NPoly(Rat(1)), 0};
        for (const auto& b : blocks) {
            term = term * moment(b);
            if (term.is_zero()) return;
        }
        const int nb = static_cast<int>(blocks.size());
        Rat weight(factorial(nb - 1));
        if (nb % 2 == 0) weight = -weight;
        acc = acc + weight * term;
    });
    return acc;
}

}  // namespace mmc::wick
