#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mmc/base.hpp"
#include "mmc/characters.hpp"
#include "mmc/partitions.hpp"
#include "mmc/polyalg.hpp"

namespace mmc::correlators {

using polyalg::Graded;
using polyalg::NPoly;

inline Partition two_column(int n) {
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 2));
}

// ⟨p_λ⟩ by the class-sum formula: g_s^{|λ|/2−l(λ)} Σ_μ N^{l(μ)}
// Σ_ν (2n)!/(z_{(2^n)} z_μ) χ^ν_{(2^n)} χ^ν_μ χ^ν_λ / dim(ν).
inline Graded char_correlator(const Partition& lam) {
    const int w = lam.weight();
    if (w % 2 != 0) return {};
    if (w == 0) return {NPoly(Rat(1)), 0};
    const int n = w / 2;
    const auto all = partitions::enumerate_partitions(w);
    const Partition twos = two_column(n);
    const Int z2 = partitions::z_of(twos);
    const Int f2n = factorial(w);
    std::vector<std::pair<const Partition*, Rat>> weights;
    for (const auto& nu : all) {
        const Int chi2 = characters::character(nu, twos);
        if (chi2 == 0) continue;
        const Int chil = characters::character(nu, lam);
        if (chil == 0) continue;
        weights.emplace_back(&nu, Rat(f2n * chi2 * chil, z2 * partitions::sn_dimension(nu)));
    }
    NPoly poly;
    for (const auto& mu : all) {
        Rat coef(0);
        for (const auto& [nu, wv] : weights) {
            const Int chim = characters::character(*nu, mu);
            if (chim != 0) coef += wv * Rat(chim);
        }
        if (coef == 0) continue;
        coef /= Rat(partitions::z_of(mu));
        poly += NPoly::monomial(mu.length(), coef);
    }
    return {std::move(poly), n - lam.length()};
}

// Π_{x∈λ}(N + content(x)) / hook(x), the U(N) irrep dimension as a polynomial.
inline NPoly un_dimension(const Partition& lam) {
    NPoly poly(Rat(1));
    Int hooks = 1;
    for (const auto& cell : partitions::cell_stats(lam).cells) {
        poly *= NPoly::variable() + NPoly(Rat(cell.content));
        hooks *= cell.hook;
    }
    poly *= Rat(Int(1), hooks);
    return poly;
}

// ⟨s_λ⟩ = ((2n−1)!!/(2n)!) χ^λ_{(2^n)} Π_{x∈λ}(N + content(x)).
inline NPoly schur_correlator(const Partition& lam) {
    const int w = lam.weight();
    if (w % 2 != 0) return {};
    if (w == 0) return NPoly(Rat(1));
    const Int chi = characters::character(lam, two_column(w / 2));
    if (chi == 0) return {};
    NPoly poly(Rat(1));
    for (const auto& cell : partitions::cell_stats(lam).cells)
        poly *= NPoly::variable() + NPoly(Rat(cell.content));
    poly *= Rat(chi * double_factorial(w - 1), factorial(w));
    return poly;
}

namespace detail {

// Shifted parts f_i = λ_i + 2n − i for i = 1..2n, λ zero-padded to length 2n.
inline void shifted_parts(const Partition& lam, std::vector<int>& odds, std::vector<int>& evens) {
    const int w = lam.weight();
    for (int i = 1; i <= w; ++i) {
        const int part = i <= lam.length() ? lam[static_cast<std::size_t>(i - 1)] : 0;
        const int f = part + w - i;
        (f % 2 != 0 ? odds : evens).push_back(f);
    }
}

}  // namespace detail

// A partition of even weight is "even" when its shifted parts split equally
// between odd and even values; only even partitions survive pairing.
inline bool is_even_partition(const Partition& lam) {
    if (lam.weight() % 2 != 0)
        throw parse_error("evenness classification needs even weight");
    std::vector<int> odds, evens;
    detail::shifted_parts(lam, odds, evens);
    return odds.size() == evens.size();
}

// Di Francesco–Itzykson invariant: ⟨s_λ⟩ = c(λ) · un_dimension(λ). Zero on
// odd partitions.
inline Rat dif_itz_c(const Partition& lam) {
    const int w = lam.weight();
    if (w % 2 != 0) throw parse_error("c(lambda) needs even weight");
    if (w == 0) return Rat(1);
    const int n = w / 2;
    std::vector<int> odds, evens;
    detail::shifted_parts(lam, odds, evens);
    if (odds.size() != evens.size()) return Rat(0);
    Int num = 1;
    for (int f : odds) num *= double_factorial(f);
    for (int f : evens) num *= double_factorial(f - 1);
    Int den = 1;
    for (int fo : odds)
        for (int fe : evens) den *= fo - fe;
    if ((n * (n - 1) / 2) % 2 != 0) num = -num;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

struct EvennessReport {
    int max_weight = 0;
    std::vector<Partition> odd_partitions;
    bool odd_iff_vanishing = true;       // odd class ⟺ χ^λ_{(2^n)} = 0
    bool even_parts_always_even = true;  // partitions with all parts even are even-class

    nlohmann::json to_json() const {
        nlohmann::json odd = nlohmann::json::array();
        for (const auto& p : odd_partitions) odd.push_back(p.str());
        nlohmann::json j;
        j["max_weight"] = max_weight;
        j["odd_partitions"] = std::move(odd);
        j["odd_count"] = odd_partitions.size();
        j["odd_iff_vanishing"] = odd_iff_vanishing;
        j["even_parts_always_even"] = even_parts_always_even;
        return j;
    }
};

// Scans every partition of even weight ≤ max_weight, reporting the odd ones
// (the claim that none exist is recorded as an observation, not enforced).
inline EvennessReport evenness_scan(int max_weight) {
    if (max_weight > characters::kMaxWeight)
        throw capacity_error("evenness scan capped at weight 24");
    EvennessReport report;
    report.max_weight = max_weight;
    for (int w = 2; w <= max_weight; w += 2) {
        const Partition twos = two_column(w / 2);
        for (const auto& lam : partitions::enumerate_partitions(w)) {
            const bool even_class = is_even_partition(lam);
            const bool vanishes = characters::character(lam, twos) == 0;
            if (!even_class) report.odd_partitions.push_back(lam);
            if (even_class == vanishes) report.odd_iff_vanishing = false;
            const bool all_parts_even = std::all_of(
                lam.parts().begin(), lam.parts().end(), [](int p) { return p % 2 == 0; });
            if (all_parts_even && !even_class) report.even_parts_always_even = false;
        }
    }
    return report;
}

// A_{q,p} = (−1)^{p+⌊(p+1)/2⌋} ((2n−1)!!/(2n)!) binom(n−1,⌊p/2⌋) [N]_{−p}^{2n−1−p}
// with p+q = 2n−1; zero when p+q is even.
inline NPoly bogoliubov_entry(int q, int p) {
    if (q < 0 || p < 0) throw parse_error("matrix indices must be nonnegative");
    if ((p + q) % 2 == 0) return {};
    const int n = (p + q + 1) / 2;
    NPoly poly = polyalg::rising_product(-p, 2 * n - 1 - p);
    Rat scale = Rat(double_factorial(2 * n - 1) * binomial(n - 1, p / 2), factorial(2 * n));
    if ((p + (p + 1) / 2) % 2 != 0) scale = -scale;
    poly *= scale;
    return poly;
}

struct BogoliubovMatrix {
    int n_max = 0;
    std::map<std::pair<int, int>, NPoly> entries;  // (q, p) → A_{q,p}, nonzero only

    NPoly entry(int q, int p) const {
        auto it = entries.find({q, p});
        return it == entries.end() ? NPoly{} : it->second;
    }
};

inline BogoliubovMatrix bogoliubov_matrix(int n_max) {
    if (n_max < 1) throw parse_error("matrix needs n_max >= 1");
    BogoliubovMatrix m;
    m.n_max = n_max;
    for (int s = 1; s <= 2 * n_max - 1; s += 2)
        for (int p = 0; p <= s; ++p) {
            NPoly e = bogoliubov_entry(s - p, p);
            if (!e.is_zero()) m.entries.emplace(std::make_pair(s - p, p), std::move(e));
        }
    return m;
}

enum class Basis { power, schur };

struct BasisExpansion {
    Basis basis = Basis::power;
    std::map<Partition, Graded> coeffs;

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [lam, value] : coeffs) {
            nlohmann::json t;
            t["lambda"] = lam.str();
            t["gs"] = value.gs_exp;
            t["poly"] = value.poly.to_json();
            arr.push_back(std::move(t));
        }
        return arr;
    }
};

inline constexpr int kMaxExpansionDegree = 16;

// Z = Σ_λ (1/z_λ)⟨p_λ⟩ g_λ in the power basis; Σ_λ ⟨s_λ⟩ s_λ at g_s = 1 in
// the Schur basis. Zero coefficients are omitted.
inline BasisExpansion partition_function(int max_degree, Basis basis) {
    if (max_degree < 0) throw parse_error("negative degree");
    if (max_degree > kMaxExpansionDegree)
        throw capacity_error("partition function capped at total degree 16");
    BasisExpansion out;
    out.basis = basis;
    for (int w = 0; w <= max_degree; ++w) {
        for (const auto& lam : partitions::enumerate_partitions(w)) {
            if (basis == Basis::power) {
                Graded g = char_correlator(lam);
                if (!g.is_zero())
                    out.coeffs.emplace(lam, Rat(Int(1), partitions::z_of(lam)) * g);
            } else {
                NPoly s = schur_correlator(lam);
                if (!s.is_zero()) out.coeffs.emplace(lam, Graded{std::move(s), 0});
            }
        }
    }
    return out;
}

namespace detail {

inline Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.parts().size() + b.parts().size());
    parts.insert(parts.end(), a.parts().begin(), a.parts().end());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

}  // namespace detail

// F = log Z as a power-basis expansion of connected coefficients: the g_λ
// coefficient is κ_λ/z_λ. Computed by expanding log(1+u), u = Z−1, truncated
// by total coupling weight.
inline BasisExpansion free_energy(int max_degree) {
    if (max_degree < 0) throw parse_error("negative degree");
    if (max_degree > kMaxExpansionDegree)
        throw capacity_error("free energy capped at total degree 16");
    std::map<Partition, Graded> u = partition_function(max_degree, Basis::power).coeffs;
    u.erase(Partition{});
    BasisExpansion out;
    out.basis = Basis::power;
    std::map<Partition, Graded> power = u;
    int k = 1;
    while (!power.empty()) {
        Rat factor(Int(k % 2 == 1 ? 1 : -1), Int(k));
        for (const auto& [lam, value] : power) {
            auto [it, fresh] = out.coeffs.emplace(lam, factor * value);
            if (!fresh) it->second = it->second + factor * value;
        }
        ++k;
        std::map<Partition, Graded> next;
        for (const auto& [lam1, v1] : power) {
            for (const auto& [lam2, v2] : u) {
                if (lam1.weight() + lam2.weight() > max_degree) continue;
                Partition key = detail::merge_parts(lam1, lam2);
                Graded prod = v1 * v2;
                auto [it, fresh] = next.emplace(std::move(key), prod);
                if (!fresh) it->second = it->second + prod;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        power = std::move(next);
    }
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = it->second.is_zero() ? out.coeffs.erase(it) : std::next(it);
    return out;
}

// Polynomial in the 't Hooft coupling t = N·g_s and g_s.
struct ThooftPoly {
    std::map<std::pair<int, int>, Rat> terms;  // (t degree, g_s exponent) → coeff

    bool operator==(const ThooftPoly&) const = default;

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            const auto& [key, coeff] = *it;
            const auto& [td, ge] = key;
            const bool negative = coeff < 0;
            Rat mag = negative ? Rat(-coeff) : coeff;
            if (first) {
                if (negative) os << '-';
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            std::vector<std::string> factors;
            if (mag != 1 || (td == 0 && ge == 0)) factors.push_back(mag.str());
            if (td == 1)
                factors.push_back("t");
            else if (td != 0)
                factors.push_back("t^" + std::to_string(td));
            std::string body;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) body += '*';
                body += factors[i];
            }
            if (ge != 0) {
                if (body.empty()) body = "1";
                body += "·g_s^" + std::to_string(ge);
            }
            os << body;
        }
        return os.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [key, coeff] : terms) {
            nlohmann::json t;
            t["t"] = key.first;
            t["gs"] = key.second;
            t["coeff"] = coeff.str();
            arr.push_back(std::move(t));
        }
        return arr;
    }
};

// N^d · g_s^e ↦ t^d · g_s^{e−d}.
inline ThooftPoly thooft_substitute(const Graded& x) {
    ThooftPoly out;
    for (const auto& [d, c] : x.poly.coeffs()) out.terms[{d, x.gs_exp - d}] += c;
    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = it->second == 0 ? out.terms.erase(it) : std::next(it);
    return out;
}

}  // namespace mmc::correlators
