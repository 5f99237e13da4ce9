#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mmc/base.hpp"
#include "mmc/correlators.hpp"
#include "mmc/hz.hpp"
#include "mmc/kp.hpp"
#include "mmc/partitions.hpp"
#include "mmc/polyalg.hpp"
#include "mmc/wick.hpp"

namespace mmc::cli {

using polyalg::Graded;
using polyalg::NPoly;
using polyalg::TruncSeries;

enum class Engine { wick, character, kp, all };
enum class Format { table, json, csv };

struct RunConfig {
    std::string command;  // correlator|zfunction|free-energy|npoint|hz|verify|census
    std::string lambda;
    int degree = 6;
    int n = 1;
    int cap = -1;  // npoint weight cap; -1 picks the per-n default
    Engine engine = Engine::all;
    Format format = Format::table;
    correlators::Basis basis = correlators::Basis::power;
    bool thooft = false;
    int threads = 1;
    std::string suite = "all";
    int n_max = 6;
    int k_max = 8;
};

namespace detail {

inline std::string bracket(const Partition& lam) { return "[" + lam.str() + "]"; }

inline std::string exps_csv(const std::vector<int>& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(e[i]);
    }
    return s;
}

inline std::string parts_csv(const Partition& lam) {
    std::string s;
    for (int i = 0; i < lam.length(); ++i) {
        if (i) s += ' ';
        s += std::to_string(lam[i]);
    }
    return s;
}

// First coefficient at which two graded values differ, for disagreement
// messages. Assumes a != b.
inline std::string first_difference(const Graded& a, const Graded& b, const std::string& name_a,
                                    const std::string& name_b) {
    if (!a.is_zero() && !b.is_zero() && a.gs_exp != b.gs_exp)
        return "g_s exponent: " + name_a + " has " + std::to_string(a.gs_exp) + ", " + name_b +
               " has " + std::to_string(b.gs_exp);
    std::vector<int> degrees;
    for (const auto& [d, c] : a.poly.coeffs()) degrees.push_back(d);
    for (const auto& [d, c] : b.poly.coeffs()) degrees.push_back(d);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (int d : degrees) {
        const Rat ca = a.poly.coeff(d), cb = b.poly.coeff(d);
        if (ca != cb)
            return "N^" + std::to_string(d) + ": " + name_a + " has " + ca.str() + ", " + name_b +
                   " has " + cb.str();
    }
    return "values differ";
}

inline void emit_json(std::ostream& out, const nlohmann::json& doc) { out << doc.dump(2) << "\n"; }

struct CheckLine {
    std::string name;
    bool pass = true;
    bool informational = false;
    std::string detail;
};

inline void run_suite_hz(int n_max, std::vector<CheckLine>& lines) {
    const auto report = hz::verify_identities(std::min(n_max, 10));
    for (const auto& c : report.checks) {
        CheckLine line;
        line.name = "hz." + c.name;
        line.informational = c.informational;
        line.pass = c.informational ? true : c.pass;
        if (c.informational)
            line.detail = c.pass ? "holds" : "fails first at " + c.first_failure;
        else if (!c.pass)
            line.detail = c.first_failure;
        lines.push_back(std::move(line));
    }
}

inline void run_suite_engines(int n_max, int threads, std::vector<CheckLine>& lines) {
    const int w_max = std::min(2 * n_max, 12);
    for (int w = 1; w <= w_max; ++w) {
        CheckLine line;
        line.name = "engines.weight_" + std::to_string(w);
        for (const auto& lam : partitions::enumerate_partitions(w)) {
            const Graded by_wick = wick::wick_correlator(lam, threads);
            const Graded by_char = correlators::char_correlator(lam);
            if (by_wick != by_char) {
                line.pass = false;
                line.detail = "lambda " + bracket(lam) + ", " +
                              first_difference(by_wick, by_char, "wick", "char");
                break;
            }
        }
        lines.push_back(std::move(line));
    }
}

inline void run_suite_schur(int n_max, std::vector<CheckLine>& lines) {
    const int w_max = std::min(2 * n_max, 12);
    {
        CheckLine line;
        line.name = "schur.factorization";
        for (int w = 1; w <= w_max && line.pass; ++w) {
            for (const auto& lam : partitions::enumerate_partitions(w)) {
                const NPoly direct = correlators::schur_correlator(lam);
                if (w % 2 == 1) {
                    if (!direct.is_zero()) {
                        line.pass = false;
                        line.detail = "odd weight " + bracket(lam) + " gave " + direct.str();
                        break;
                    }
                    continue;
                }
                NPoly split = correlators::un_dimension(lam);
                split *= correlators::dif_itz_c(lam);
                if (direct != split) {
                    line.pass = false;
                    line.detail = "lambda " + bracket(lam) + ": " + direct.str() + " vs " +
                                  split.str();
                    break;
                }
            }
        }
        lines.push_back(std::move(line));
    }
    {
        CheckLine line;
        line.name = "schur.hook_relation";
        const int s_max = std::min(2 * n_max + 3, 15);
        for (int s = 1; s <= s_max && line.pass; s += 2) {
            for (int p = 0; p <= s; ++p) {
                const int q = s - p;
                NPoly lhs = correlators::bogoliubov_entry(q, p);
                if (p % 2 == 1) lhs = -lhs;
                std::vector<int> parts{q + 1};
                for (int i = 0; i < p; ++i) parts.push_back(1);
                const NPoly rhs = correlators::schur_correlator(Partition(std::move(parts)));
                if (lhs != rhs) {
                    line.pass = false;
                    line.detail = "q = " + std::to_string(q) + ", p = " + std::to_string(p);
                    break;
                }
            }
        }
        lines.push_back(std::move(line));
    }
}

inline void run_suite_kp(int n_max, int threads, std::vector<CheckLine>& lines) {
    for (int n = 1; n <= 3; ++n) {
        CheckLine line;
        line.name = "kp.bridge_n" + std::to_string(n);
        const auto report = kp::npoint_vs_free_energy(n, n_max + n, threads);
        line.pass = report.agree;
        line.detail = report.detail;
        lines.push_back(std::move(line));
    }
    {
        CheckLine line;
        line.name = "kp.two_point_slices";
        const TruncSeries g2 = kp::npoint(2, 2 * n_max, threads);
        for (int n = 1; n <= n_max && line.pass; ++n) {
            const auto it = g2.terms().find({2, 2 * n});
            const NPoly got = it == g2.terms().end() ? NPoly{} : it->second.poly;
            if (got != hz::two_point_xi2(n)) {
                line.pass = false;
                line.detail = "exponents [2," + std::to_string(2 * n) + "]";
                break;
            }
            if (n >= 2) {
                const auto it3 = g2.terms().find({3, 2 * n - 1});
                const NPoly got3 = it3 == g2.terms().end() ? NPoly{} : it3->second.poly;
                if (got3 != hz::two_point_xi3(n)) {
                    line.pass = false;
                    line.detail = "exponents [3," + std::to_string(2 * n - 1) + "]";
                }
            }
        }
        lines.push_back(std::move(line));
    }
}

inline void run_suite_evenness(int n_max, std::vector<CheckLine>& lines) {
    const auto report = correlators::evenness_scan(std::min(2 * n_max, 16));
    CheckLine line;
    line.name = "evenness.scan";
    line.informational = true;
    std::ostringstream os;
    os << "max_weight=" << report.max_weight << " odd_iff_vanishing="
       << (report.odd_iff_vanishing ? "yes" : "no") << " even_parts_always_even="
       << (report.even_parts_always_even ? "yes" : "no");
    line.detail = os.str();
    lines.push_back(std::move(line));
}

}  // namespace detail

// Executes one validated configuration, writing the document to `out` and
// diagnostics to `err`. Returns the process exit status: 0 success, 2 bad
// input, 3 capacity exceeded, 4 engine disagreement or failed verification,
// 70 internal invariant breakage.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const int threads = std::max(1, cfg.threads);
        if (cfg.command == "correlator") {
            const Partition lam = Partition::parse(cfg.lambda);
            Graded value;
            if (cfg.engine == Engine::kp)
                throw parse_error("engine kp computes connected n-point series, not correlators");
            if (cfg.engine == Engine::all) {
                const Graded by_wick = wick::wick_correlator(lam, threads);
                const Graded by_char = correlators::char_correlator(lam);
                if (by_wick != by_char)
                    throw disagreement_error(
                        "engines disagree at lambda " + detail::bracket(lam) + ", " +
                        detail::first_difference(by_wick, by_char, "wick", "char"));
                value = by_char;
            } else if (cfg.engine == Engine::wick) {
                value = wick::wick_correlator(lam, threads);
            } else {
                value = correlators::char_correlator(lam);
            }
            if (cfg.thooft) {
                const auto t = correlators::thooft_substitute(value);
                if (cfg.format == Format::csv)
                    throw parse_error("thooft output is not available as csv");
                if (cfg.format == Format::json)
                    detail::emit_json(out, {{"lambda", lam.str()}, {"thooft", t.to_json()}});
                else
                    out << t.str() << "\n";
            } else if (cfg.format == Format::json) {
                detail::emit_json(out, {{"lambda", lam.str()},
                                        {"gs", value.gs_exp},
                                        {"poly", value.poly.to_json()}});
            } else if (cfg.format == Format::csv) {
                out << "exponents,gs,poly\n"
                    << detail::parts_csv(lam) << "," << value.gs_exp << "," << value.poly.str()
                    << "\n";
            } else {
                out << value.str() << "\n";
            }
            return 0;
        }
        if (cfg.command == "zfunction" || cfg.command == "free-energy") {
            correlators::BasisExpansion expansion;
            if (cfg.command == "zfunction")
                expansion = correlators::partition_function(cfg.degree, cfg.basis);
            else
                expansion = correlators::free_energy(cfg.degree);
            if (cfg.thooft && cfg.format == Format::csv)
                throw parse_error("thooft output is not available as csv");
            if (cfg.format == Format::json) {
                nlohmann::json doc = expansion.to_json();
                if (cfg.thooft) {
                    nlohmann::json coeffs = nlohmann::json::array();
                    for (const auto& [lam, g] : expansion.coeffs)
                        coeffs.push_back({{"lambda", lam.str()},
                                          {"thooft", correlators::thooft_substitute(g).to_json()}});
                    doc["coeffs"] = std::move(coeffs);
                }
                detail::emit_json(out, doc);
            } else if (cfg.format == Format::csv) {
                out << "exponents,gs,poly\n";
                for (const auto& [lam, g] : expansion.coeffs)
                    out << detail::parts_csv(lam) << "," << g.gs_exp << "," << g.poly.str() << "\n";
            } else {
                for (const auto& [lam, g] : expansion.coeffs) {
                    out << detail::bracket(lam) << " ";
                    if (cfg.thooft)
                        out << correlators::thooft_substitute(g).str() << "\n";
                    else
                        out << g.str() << "\n";
                }
            }
            return 0;
        }
        if (cfg.command == "npoint") {
            const int cap = cfg.cap >= 0 ? cfg.cap : kp::default_npoint_cap(cfg.n);
            const TruncSeries g = kp::npoint(cfg.n, cap, threads);
            if (cfg.format == Format::json) {
                detail::emit_json(
                    out, {{"n", cfg.n}, {"cap", cap}, {"terms", g.to_json()}});
            } else if (cfg.format == Format::csv) {
                out << "exponents,gs,poly\n";
                for (const auto& [e, val] : g.terms())
                    out << detail::exps_csv(e) << "," << val.gs_exp << "," << val.poly.str()
                        << "\n";
            } else {
                // Symmetrized bracket classes: one row per sorted exponent
                // multiset, ordered by total then lexicographically.
                std::map<std::vector<int>, NPoly> classes;
                for (const auto& [e, val] : g.terms()) {
                    std::vector<int> key(e);
                    std::sort(key.begin(), key.end(), std::greater<>());
                    auto it = classes.find(key);
                    if (it == classes.end())
                        classes.emplace(std::move(key), val.poly);
                    else if (it->second != val.poly)
                        throw internal_error("series is not symmetric at " +
                                             TruncSeries::exps_str(e));
                }
                std::vector<std::pair<std::vector<int>, NPoly>> rows(classes.begin(),
                                                                     classes.end());
                std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
                    int ta = 0, tb = 0;
                    for (int x : a.first) ta += x;
                    for (int x : b.first) tb += x;
                    return ta != tb ? ta < tb : a.first < b.first;
                });
                for (const auto& [key, poly] : rows) {
                    std::string ks = "[";
                    for (std::size_t i = 0; i < key.size(); ++i) {
                        if (i) ks += ",";
                        ks += std::to_string(key[i]);
                    }
                    ks += "]";
                    out << ks << " " << poly.str() << "\n";
                }
            }
            return 0;
        }
        if (cfg.command == "hz") {
            if (cfg.n_max < 0 || cfg.k_max < 0)
                throw parse_error("hz table bounds must be nonnegative");
            if (cfg.format == Format::json) {
                nlohmann::json rows = nlohmann::json::array();
                for (int n = 0; n <= cfg.n_max; ++n) {
                    nlohmann::json row = nlohmann::json::array();
                    for (int k = 0; k <= cfg.k_max; ++k) row.push_back(hz::hz_c(n, k).str());
                    rows.push_back(std::move(row));
                }
                detail::emit_json(out,
                                  {{"n_max", cfg.n_max}, {"k_max", cfg.k_max}, {"c", rows}});
            } else if (cfg.format == Format::csv) {
                out << "n,k,c\n";
                for (int n = 0; n <= cfg.n_max; ++n)
                    for (int k = 0; k <= cfg.k_max; ++k)
                        out << n << "," << k << "," << hz::hz_c(n, k).str() << "\n";
            } else {
                for (int n = 0; n <= cfg.n_max; ++n) {
                    out << "n=" << n << ":";
                    for (int k = 0; k <= cfg.k_max; ++k) out << " " << hz::hz_c(n, k).str();
                    out << "\n";
                }
            }
            return 0;
        }
        if (cfg.command == "verify") {
            if (cfg.n_max < 1) throw parse_error("verify needs --n-max >= 1");
            std::vector<detail::CheckLine> lines;
            bool known = false;
            if (cfg.suite == "hz" || cfg.suite == "all") {
                detail::run_suite_hz(cfg.n_max, lines);
                known = true;
            }
            if (cfg.suite == "engines" || cfg.suite == "all") {
                detail::run_suite_engines(cfg.n_max, threads, lines);
                known = true;
            }
            if (cfg.suite == "schur" || cfg.suite == "all") {
                detail::run_suite_schur(cfg.n_max, lines);
                known = true;
            }
            if (cfg.suite == "kp" || cfg.suite == "all") {
                detail::run_suite_kp(cfg.n_max, threads, lines);
                known = true;
            }
            if (cfg.suite == "evenness" || cfg.suite == "all") {
                detail::run_suite_evenness(cfg.n_max, lines);
                known = true;
            }
            if (!known) throw parse_error("unknown verify suite: " + cfg.suite);
            int failed = 0;
            for (const auto& line : lines)
                if (!line.informational && !line.pass) ++failed;
            if (cfg.format == Format::json) {
                nlohmann::json checks = nlohmann::json::array();
                for (const auto& line : lines)
                    checks.push_back({{"name", line.name},
                                      {"pass", line.pass},
                                      {"informational", line.informational},
                                      {"detail", line.detail}});
                detail::emit_json(out, {{"suite", cfg.suite},
                                        {"n_max", cfg.n_max},
                                        {"checks", checks},
                                        {"all_pass", failed == 0}});
            } else {
                for (const auto& line : lines) {
                    if (line.informational)
                        out << "INFO " << line.name << " :: " << line.detail << "\n";
                    else if (line.pass)
                        out << "PASS " << line.name << "\n";
                    else
                        out << "FAIL " << line.name << " :: " << line.detail << "\n";
                }
                out << "verify: " << lines.size() << " checks, " << failed << " failed\n";
            }
            return failed == 0 ? 0 : 4;
        }
        if (cfg.command == "census") {
            const Partition lam = Partition::parse(cfg.lambda);
            const auto census = wick::genus_census(lam, threads);
            if (cfg.format == Format::json) {
                detail::emit_json(out, census.to_json());
            } else if (cfg.format == Format::csv) {
                out << "faces,count\n";
                for (const auto& [f, c] : census.by_faces)
                    out << f << "," << c.str() << "\n";
            } else {
                for (const auto& [f, c] : census.by_faces)
                    out << f << " " << c.str() << "\n";
            }
            return 0;
        }
        throw parse_error("unknown command: " + cfg.command);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const disagreement_error& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    }
}

}  // namespace mmc::cli
