#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mmc/base.hpp"
#include "mmc/correlators.hpp"
#include "mmc/partitions.hpp"
#include "mmc/polyalg.hpp"
#include "mmc/wick.hpp"

namespace mmc::kp {

using polyalg::Graded;
using polyalg::NPoly;
using polyalg::TruncSeries;

// One term A_{q,p} ξ_a^{-pe} ξ_b^{-qe} of the two-variable kernel, with
// pe = p+1 and qe = q+1 (the first slot carries the p index).
struct ATerm {
    int pe;
    int qe;
    NPoly poly;
};

// All kernel terms with pe + qe ≤ cap_tot, ordered by ascending total degree.
inline std::vector<ATerm> a_terms(int cap_tot) {
    std::vector<ATerm> out;
    for (int n = 1; 2 * n + 1 <= cap_tot; ++n)
        for (int p = 0; p <= 2 * n - 1; ++p)
            out.push_back({p + 1, 2 * n - p, correlators::bogoliubov_entry(2 * n - 1 - p, p)});
    return out;
}

inline TruncSeries a_series(int cap) {
    if (cap < 2) throw parse_error("a_series needs cap >= 2");
    TruncSeries s(2, cap);
    for (const auto& t : a_terms(cap)) s.add_term({t.pe, t.qe}, Graded{t.poly, 0});
    return s;
}

// Two-variable kernel Â(ξ_i, ξ_j): the regular part A embedded into nvars
// variables, plus (for i ≠ j) the directional expansion of 1/(ξ_i − ξ_j),
// expanded where the smaller-index variable dominates:
//   sign · Σ_{k≥0} ξ_inv^{-1-k} ξ_pos^{k}, inv = min(i,j), pos = max(i,j),
//   sign = +1 when i < j and −1 when i > j.
struct Propagator {
    int i = 0;
    int j = 0;
    bool includes_rational_part = false;
    int rational_sign = 0;
    int inv_var = -1;
    int pos_var = -1;
    TruncSeries a_part{1, 0};
};

inline Propagator propagator(int i, int j, int nvars, int cap) {
    if (nvars < 1 || i < 0 || j < 0 || i >= nvars || j >= nvars)
        throw parse_error("variable index out of range");
    TruncSeries a(nvars, cap);
    for (const auto& t : a_terms(cap)) {
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] += t.pe;
        e[static_cast<std::size_t>(j)] += t.qe;
        a.add_term(std::move(e), Graded{t.poly, 0});
    }
    Propagator p;
    p.i = i;
    p.j = j;
    p.a_part = std::move(a);
    if (i != j) {
        p.includes_rational_part = true;
        p.rational_sign = i < j ? 1 : -1;
        p.inv_var = std::min(i, j);
        p.pos_var = std::max(i, j);
    }
    return p;
}

namespace detail {

using Lane = std::map<std::vector<int>, NPoly>;

inline void lane_add(Lane& dest, const std::vector<int>& e, const NPoly& p) {
    if (p.is_zero()) return;
    auto it = dest.find(e);
    if (it == dest.end()) {
        dest.emplace(e, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) dest.erase(it);
    }
}

// Accumulates one cyclic product, split by `mask` into kernel (bit set) and
// rational (bit clear) factor choices. Truncation discipline, checked per
// FINAL monomial so both members of any cancelling pair share one fate:
//   - total rule: every factor adds ≥ 1 to the exponent total, so partials
//     with tot + remaining > cap_tot are unreachable from retained monomials;
//   - close rule: a variable's exponent is final at its second incident
//     factor; final values outside [floor, u_close] are dropped;
//   - geometric indices are capped at kmax, high enough that every in-window
//     monomial keeps all contributing chains (they terminate at kernel
//     factors, whose exponents the total rule bounds).
// Monomials with all exponents ≥ 2 are exact results; everything else must
// cancel to zero across cycles and lands in the audit lane.
inline void accumulate_cycle(const std::vector<int>& order, unsigned mask, int cap_tot,
                             int floor_limit, int u_close, int kmax,
                             const std::vector<ATerm>& at, Lane& total, Lane& audit) {
    const int n = static_cast<int>(order.size());
    Lane part;
    part.emplace(std::vector<int>(static_cast<std::size_t>(n), 0), NPoly(Rat(1)));
    std::vector<int> touched(static_cast<std::size_t>(n), 0);
    for (int f = 0; f < n && !part.empty(); ++f) {
        const int a = order[static_cast<std::size_t>(f)];
        const int b = order[static_cast<std::size_t>((f + 1) % n)];
        const int remaining = n - f - 1;
        ++touched[static_cast<std::size_t>(a)];
        ++touched[static_cast<std::size_t>(b)];
        std::vector<int> closes;
        if (touched[static_cast<std::size_t>(a)] == 2) closes.push_back(a);
        if (b != a && touched[static_cast<std::size_t>(b)] == 2) closes.push_back(b);
        Lane next;
        auto push = [&](std::vector<int>&& e, const NPoly& p) {
            for (int v : closes) {
                const int ev = e[static_cast<std::size_t>(v)];
                if (ev < floor_limit || ev > u_close) return;
            }
            lane_add(next, e, p);
        };
        if ((mask >> f) & 1u) {
            for (const auto& [e, poly] : part) {
                int te = 0;
                for (int x : e) te += x;
                for (const auto& t : at) {
                    if (te + t.pe + t.qe + remaining > cap_tot) break;
                    std::vector<int> ne(e);
                    ne[static_cast<std::size_t>(a)] += t.pe;
                    ne[static_cast<std::size_t>(b)] += t.qe;
                    push(std::move(ne), poly * t.poly);
                }
            }
        } else {
            const int lo = std::min(a, b);
            const int hi = std::max(a, b);
            const bool lo_closes = std::find(closes.begin(), closes.end(), lo) != closes.end();
            const bool hi_closes = std::find(closes.begin(), closes.end(), hi) != closes.end();
            for (const auto& [e, poly] : part) {
                int te = 0;
                for (int x : e) te += x;
                if (te + 1 + remaining > cap_tot) continue;
                const NPoly spoly = a < b ? poly : -poly;
                for (int k = 0; k <= kmax; ++k) {
                    const int elo = e[static_cast<std::size_t>(lo)] + 1 + k;
                    const int ehi = e[static_cast<std::size_t>(hi)] - k;
                    if (hi_closes && ehi < floor_limit) break;
                    if (lo_closes && elo > u_close) break;
                    std::vector<int> ne(e);
                    ne[static_cast<std::size_t>(lo)] = elo;
                    ne[static_cast<std::size_t>(hi)] = ehi;
                    push(std::move(ne), spoly);
                }
            }
        }
        part = std::move(next);
    }
    const bool negate = (n - 1) % 2 != 0;
    for (const auto& [e, poly] : part) {
        const bool retained = std::all_of(e.begin(), e.end(), [](int x) { return x >= 2; });
        lane_add(retained ? total : audit, e, negate ? -poly : poly);
    }
}

}  // namespace detail

// G^(n) as a pure inverse-power series: (−1)^{n−1} Σ over the (n−1)! cyclic
// orders of the product of propagators along the cycle. The all-rational
// factor choice is omitted: for n = 2 it cancels against the double-pole
// subtraction, and for n ≥ 3 those products cancel among the cycles. `cap`
// bounds the total weight Σ j_i of retained coefficients of Πξ_i^{-j_i-1},
// so stored exponent vectors have total ≤ cap + n.
inline TruncSeries npoint(int n, int cap, int threads = 1) {
    if (n < 1) throw parse_error("npoint needs n >= 1");
    if (n > 8) throw capacity_error("npoint capped at 8 variables");
    if (cap < n + 1) throw parse_error("npoint needs cap >= n + 1");
    const int cap_tot = cap + n;
    const int floor_limit = -2;
    const int u_close = cap_tot + (n - 1) * 2;
    const int kmax = (n + 1) * (cap_tot + 2 * n + 2);
    const auto at = a_terms(cap_tot);

    std::vector<std::vector<int>> orders;
    {
        std::vector<int> tail;
        for (int v = 1; v < n; ++v) tail.push_back(v);
        do {
            std::vector<int> order{0};
            order.insert(order.end(), tail.begin(), tail.end());
            orders.push_back(std::move(order));
        } while (std::next_permutation(tail.begin(), tail.end()));
    }
    std::vector<std::pair<std::size_t, unsigned>> jobs;
    for (std::size_t c = 0; c < orders.size(); ++c)
        for (unsigned mask = 1; mask < (1u << n); ++mask) jobs.emplace_back(c, mask);

    detail::Lane total, audit;
    const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
    if (nthreads == 1) {
        for (const auto& [c, mask] : jobs)
            detail::accumulate_cycle(orders[c], mask, cap_tot, floor_limit, u_close, kmax, at,
                                     total, audit);
    } else {
        std::vector<detail::Lane> totals(static_cast<std::size_t>(nthreads));
        std::vector<detail::Lane> audits(static_cast<std::size_t>(nthreads));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t idx = static_cast<std::size_t>(t); idx < jobs.size();
                     idx += static_cast<std::size_t>(nthreads))
                    detail::accumulate_cycle(orders[jobs[idx].first], jobs[idx].second, cap_tot,
                                             floor_limit, u_close, kmax, at,
                                             totals[static_cast<std::size_t>(t)],
                                             audits[static_cast<std::size_t>(t)]);
            });
        }
        for (auto& th : pool) th.join();
        for (int t = 0; t < nthreads; ++t) {
            for (const auto& [e, p] : totals[static_cast<std::size_t>(t)]) detail::lane_add(total, e, p);
            for (const auto& [e, p] : audits[static_cast<std::size_t>(t)]) detail::lane_add(audit, e, p);
        }
    }

    if (!audit.empty())
        throw internal_error("signed exponent lane failed to cancel at " +
                             TruncSeries::exps_str(audit.begin()->first));
    TruncSeries out(n, cap_tot);
    for (const auto& [e, poly] : total) out.add_term(e, Graded{poly, 0});
    out.finalize();
    return out;
}

inline int default_npoint_cap(int n) {
    if (n <= 2) return 14;
    if (n == 3) return 10;
    return 8;
}

struct BridgeReport {
    bool agree = true;
    std::string detail;
};

// Cross-validates the cyclic-product series against cumulants of the pairing
// enumeration: the coefficient of Πξ_i^{-j_i-1} must equal the connected
// correlator of (j_1,…,j_n) at g_s = 1, and contracting the series back onto
// coupling monomials must reproduce the formal-logarithm free energy. The two
// sides share no code path above the polynomial layer.
inline BridgeReport npoint_vs_free_energy(int n, int cap, int threads = 1) {
    BridgeReport report;
    const TruncSeries g = npoint(n, cap, threads);
    auto coeff_at = [&](const std::vector<int>& e) -> NPoly {
        auto it = g.terms().find(e);
        return it == g.terms().end() ? NPoly{} : it->second.poly;
    };

    std::map<Partition, NPoly> kappa;
    auto kappa_of = [&](std::vector<int> js) -> const NPoly& {
        std::sort(js.begin(), js.end(), std::greater<>());
        Partition key(std::move(js));
        auto it = kappa.find(key);
        if (it == kappa.end())
            it = kappa.emplace(key, wick::connected_correlator(key, threads).poly).first;
        return it->second;
    };

    std::vector<int> e(static_cast<std::size_t>(n), 0);
    auto walk = [&](auto&& self, int pos, int used) -> bool {
        if (pos == n) {
            std::vector<int> js;
            js.reserve(e.size());
            for (int x : e) js.push_back(x - 1);
            const NPoly got = coeff_at(e);
            const NPoly& want = kappa_of(js);
            if (got != want) {
                std::ostringstream os;
                os << "coefficient at " << TruncSeries::exps_str(e) << ": series has "
                   << got.str() << ", cumulant gives " << want.str();
                report = {false, os.str()};
                return false;
            }
            return true;
        }
        for (int v = 2; used + v + 2 * (n - pos - 1) <= cap + n; ++v) {
            e[static_cast<std::size_t>(pos)] = v;
            if (!self(self, pos + 1, used + v)) return false;
        }
        return true;
    };
    if (!walk(walk, 0, 0)) return report;

    const auto fe = correlators::free_energy(cap).coeffs;
    for (int w = n; w <= cap; ++w) {
        for (const auto& lam : partitions::enumerate_partitions(w)) {
            if (lam.length() != n) continue;
            std::vector<int> js(lam.parts());
            std::sort(js.begin(), js.end());
            NPoly acc;
            do {
                std::vector<int> exps;
                exps.reserve(js.size());
                Int jprod = 1;
                for (int j : js) {
                    exps.push_back(j + 1);
                    jprod *= j;
                }
                acc += coeff_at(exps) * Rat(Int(1), jprod);
            } while (std::next_permutation(js.begin(), js.end()));
            acc *= Rat(Int(1), factorial(n));
            auto it = fe.find(lam);
            const NPoly want = it == fe.end() ? NPoly{} : it->second.poly;
            if (acc != want) {
                std::ostringstream os;
                os << "coupling monomial [" << lam.str() << "]: series gives " << acc.str()
                   << ", free energy has " << want.str();
                report = {false, os.str()};
                return report;
            }
        }
    }
    return report;
}

}  // namespace mmc::kp
