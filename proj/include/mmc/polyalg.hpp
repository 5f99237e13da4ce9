#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mmc/base.hpp"

namespace mmc::polyalg {

// Polynomial in N with exact rational coefficients. No zero coefficients are
// stored, so equality is plain map equality.
class NPoly {
  public:
    NPoly() = default;

    explicit NPoly(Rat constant) {
        if (constant != 0) coeffs_[0] = std::move(constant);
    }

    static NPoly variable() { return monomial(1, Rat(1)); }

    static NPoly monomial(int degree, Rat coeff) {
        NPoly p;
        if (degree < 0) throw parse_error("NPoly degree must be nonnegative");
        if (coeff != 0) p.coeffs_[degree] = std::move(coeff);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is reported as -1.
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    const std::map<int, Rat>& coeffs() const { return coeffs_; }

    Rat coeff(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    NPoly& operator+=(const NPoly& o) {
        for (const auto& [d, c] : o.coeffs_) add(d, c);
        return *this;
    }

    NPoly& operator-=(const NPoly& o) {
        for (const auto& [d, c] : o.coeffs_) add(d, -c);
        return *this;
    }

    NPoly& operator*=(const Rat& r) {
        if (r == 0) {
            coeffs_.clear();
        } else {
            for (auto& [d, c] : coeffs_) c *= r;
        }
        return *this;
    }

    NPoly& operator*=(const NPoly& o) { return *this = *this * o; }

    friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
    friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
    friend NPoly operator*(NPoly a, const Rat& r) { return a *= r; }
    friend NPoly operator*(const Rat& r, NPoly a) { return a *= r; }

    friend NPoly operator*(const NPoly& a, const NPoly& b) {
        NPoly out;
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_) out.add(da + db, ca * cb);
        return out;
    }

    NPoly operator-() const {
        NPoly out(*this);
        for (auto& [d, c] : out.coeffs_) c = -c;
        return out;
    }

    bool operator==(const NPoly&) const = default;

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            int gap = (it == coeffs_.rbegin()) ? 0 : std::prev(it)->first - it->first;
            for (int k = 0; k < gap; ++k) acc *= x;
            acc += it->second;
        }
        if (!coeffs_.empty())
            for (int k = 0; k < coeffs_.begin()->first; ++k) acc *= x;
        return acc;
    }

    // Descending powers, e.g. "2*N^3 + N" or "-1/8*N^2 - 1".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [deg, coeff] = *it;
            const bool negative = coeff < 0;
            Rat mag = negative ? Rat(-coeff) : coeff;
            if (first) {
                if (negative) os << '-';
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            std::string cs = (mag == 1 && deg > 0) ? std::string() : mag.str();
            std::string vs;
            if (deg == 1)
                vs = "N";
            else if (deg > 1)
                vs = "N^" + std::to_string(deg);
            if (!cs.empty() && !vs.empty())
                os << cs << '*' << vs;
            else
                os << cs << vs;
        }
        return os.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [d, c] : coeffs_) j[std::to_string(d)] = c.str();
        return j;
    }

    static NPoly from_json(const nlohmann::json& j) {
        if (!j.is_object()) throw parse_error("NPoly JSON must be an object");
        NPoly p;
        for (const auto& [key, val] : j.items()) {
            int deg = 0;
            try {
                deg = std::stoi(key);
            } catch (const std::exception&) {
                throw parse_error("bad NPoly degree key: " + key);
            }
            p.add(deg, Rat(val.get<std::string>()));
        }
        return p;
    }

  private:
    void add(int degree, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = coeffs_.emplace(degree, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    std::map<int, Rat> coeffs_;
};

// poly * g_s^{gs_exp}. A zero polynomial compares equal regardless of the
// stored exponent.
struct Graded {
    NPoly poly;
    int gs_exp = 0;

    bool is_zero() const { return poly.is_zero(); }

    bool operator==(const Graded& o) const {
        if (poly.is_zero() && o.poly.is_zero()) return true;
        return gs_exp == o.gs_exp && poly == o.poly;
    }

    friend Graded operator*(const Graded& a, const Graded& b) {
        return {a.poly * b.poly, a.gs_exp + b.gs_exp};
    }

    friend Graded operator*(const Rat& r, const Graded& a) {
        return {a.poly * r, a.gs_exp};
    }

    friend Graded operator+(const Graded& a, const Graded& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.gs_exp != b.gs_exp)
            throw internal_error("adding Graded values of different g_s grade");
        return {a.poly + b.poly, a.gs_exp};
    }

    friend Graded operator-(const Graded& a, const Graded& b) {
        return a + Rat(-1) * b;
    }

    std::string str() const {
        if (poly.is_zero() || gs_exp == 0) return poly.str();
        std::string body = poly.str();
        if (poly.coeffs().size() > 1) body = "(" + body + ")";
        return body + "·g_s^" + std::to_string(gs_exp);
    }
};

// Total inverse-power content of an exponent vector: entries are powers of
// the inverse variables, so only positive entries count toward truncation.
inline int trunc_degree(const std::vector<int>& exps) {
    int s = 0;
    for (int e : exps)
        if (e > 0) s += e;
    return s;
}

// Truncated series in ξ_1^{-1}, …, ξ_n^{-1}. Exponent entry e means ξ^{-e}.
// Directional expansions may temporarily hold negative entries (positive
// powers); finalize() checks that this signed lane has fully cancelled.
class TruncSeries {
  public:
    using Terms = std::map<std::vector<int>, Graded>;

    TruncSeries(int nvars, int cap) : nvars_(nvars), cap_(cap) {
        if (nvars < 1) throw parse_error("TruncSeries needs at least one variable");
        if (cap < 0) throw parse_error("TruncSeries cap must be nonnegative");
    }

    static TruncSeries one(int nvars, int cap) {
        TruncSeries s(nvars, cap);
        s.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), Graded{NPoly(Rat(1)), 0});
        return s;
    }

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(std::vector<int> exps, const Graded& value) {
        if (static_cast<int>(exps.size()) != nvars_)
            throw parse_error("exponent vector length mismatch");
        if (value.is_zero() || trunc_degree(exps) > cap_) return;
        auto [it, fresh] = terms_.emplace(std::move(exps), value);
        if (!fresh) {
            it->second = it->second + value;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool finalized() const {
        for (const auto& [e, v] : terms_)
            for (int x : e)
                if (x < 0) return false;
        return true;
    }

    const TruncSeries& finalize() const {
        for (const auto& [e, v] : terms_)
            for (int x : e)
                if (x < 0)
                    throw internal_error("signed exponent lane failed to cancel at " + exps_str(e));
        return *this;
    }

    bool operator==(const TruncSeries&) const = default;

    static std::string exps_str(const std::vector<int>& e) {
        std::string s = "[";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(e[i]);
        }
        return s + "]";
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, v] : terms_) {
            if (!first) os << '\n';
            first = false;
            os << exps_str(e) << ' ' << v.str();
        }
        return os.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [e, v] : terms_) {
            nlohmann::json t;
            t["exps"] = e;
            t["poly"] = v.poly.to_json();
            t["gs"] = v.gs_exp;
            arr.push_back(std::move(t));
        }
        return arr;
    }

    static TruncSeries from_json(const nlohmann::json& arr, int nvars, int cap) {
        if (!arr.is_array()) throw parse_error("TruncSeries JSON must be an array");
        TruncSeries s(nvars, cap);
        for (const auto& t : arr) {
            std::vector<int> exps = t.at("exps").get<std::vector<int>>();
            Graded v{NPoly::from_json(t.at("poly")), t.at("gs").get<int>()};
            s.add_term(std::move(exps), v);
        }
        return s;
    }

  private:
    int nvars_;
    int cap_;
    Terms terms_;
};

// [N]_k^l = Π_{j=k}^{l} (N+j); k = l+1 gives the empty product.
inline NPoly rising_product(int k, int l) {
    if (k > l + 1) throw parse_error("rising_product requires k <= l+1");
    NPoly p(Rat(1));
    for (int j = k; j <= l; ++j)
        p *= NPoly::variable() + NPoly(Rat(j));
    return p;
}

inline void check_compatible(const TruncSeries& a, const TruncSeries& b) {
    if (a.nvars() != b.nvars())
        throw parse_error("series variable sets differ");
}

inline TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
    check_compatible(a, b);
    TruncSeries out(a.nvars(), std::min(a.cap(), b.cap()));
    for (const auto& [e, v] : a.terms()) out.add_term(e, v);
    for (const auto& [e, v] : b.terms()) out.add_term(e, v);
    return out;
}

inline TruncSeries series_scale(const TruncSeries& a, const Rat& r) {
    TruncSeries out(a.nvars(), a.cap());
    for (const auto& [e, v] : a.terms()) out.add_term(e, r * v);
    return out;
}

// Exact on all retained terms when both inputs are finalized (nonnegative
// exponents). Signed-lane inputs are combined with the same cap rule; callers
// doing directional contraction are responsible for window soundness.
inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    check_compatible(a, b);
    TruncSeries out(a.nvars(), std::min(a.cap(), b.cap()));
    for (const auto& [ea, va] : a.terms()) {
        for (const auto& [eb, vb] : b.terms()) {
            std::vector<int> e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(std::move(e), va * vb);
        }
    }
    return out;
}

// Expansion of 1/(ξ_i − ξ_j)^power in the region |ξ_i| > |ξ_j|:
//   Σ_{k≥0} binom(power+k−1, k) ξ_i^{−power−k} ξ_j^{k}.
// The ξ_j^{k} factors ride the signed lane as negative inverse exponents.
inline TruncSeries geometric_expand(int i, int j, int power, int cap) {
    if (i == j) throw parse_error("directional expansion needs distinct variables");
    if (i < 0 || j < 0) throw parse_error("variable indices must be nonnegative");
    if (power < 1) throw parse_error("expansion power must be positive");
    if (cap < power) throw parse_error("cap below leading inverse degree");
    const int nvars = std::max(i, j) + 1;
    TruncSeries out(nvars, cap);
    for (int k = 0; power + k <= cap; ++k) {
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = power + k;
        e[static_cast<std::size_t>(j)] = -k;
        out.add_term(std::move(e), Graded{NPoly(Rat(binomial(power + k - 1, k))), 0});
    }
    return out;
}

}  // namespace mmc::polyalg
