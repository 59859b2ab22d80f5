#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "esbch/bch_code.hpp"
#include "esbch/bm_decoder.hpp"
#include "esbch/channel_sim.hpp"
#include "esbch/fault_analysis.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw esbch::Error("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

void write_header(std::ostream& os, const std::string& invocation,
                  const std::vector<std::pair<std::string, std::string>>& extras = {}) {
    os << "# invocation=" << invocation << "\n";
    os << "# esbch_version=" << kVersion << "\n";
    for (const auto& [k, v] : extras) os << "# " << k << "=" << v << "\n";
}

std::uint32_t parse_hex32(const std::string& s) {
    return static_cast<std::uint32_t>(std::stoul(s, nullptr, 16));
}

esbch::BitVec bits_from_hex(const std::string& hex, int n) {
    esbch::BitVec bits(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < hex.size(); ++i) {
        const char c = hex[hex.size() - 1 - i];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw esbch::Error("invalid hex digit in received word");
        for (int b = 0; b < 4; ++b) {
            if (!(v >> b & 1)) continue;
            const std::size_t bit = 4 * i + static_cast<std::size_t>(b);
            if (bit >= static_cast<std::size_t>(n))
                throw esbch::Error("received word longer than n bits");
            bits[bit] = 1;
        }
    }
    return bits;
}

esbch::StopCriterion make_criterion(const std::string& name, int kappa) {
    if (name == "full") return esbch::StopCriterion::full2t();
    if (name == "es1") return esbch::StopCriterion::es1();
    if (name == "es2") return esbch::StopCriterion::es2();
    if (name == "es3") return esbch::StopCriterion::es3(kappa);
    throw esbch::Error("unknown criterion: " + name);
}

std::string join_invocation(int argc, char** argv) {
    std::ostringstream ss;
    for (int i = 0; i < argc; ++i) {
        if (i) ss << ' ';
        ss << argv[i];
    }
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Early-stopped BCH decoding toolkit"};
    app.require_subcommand(1);
    const std::string invocation = join_invocation(argc, argv);

    // tables
    auto* tables = app.add_subcommand("tables", "Dump GF(2^m) exp/log tables as CSV");
    int tbl_m = 4;
    std::string tbl_poly, tbl_out;
    tables->add_option("--m", tbl_m, "Extension degree")->required();
    tables->add_option("--poly", tbl_poly, "Primitive polynomial (hex bitmask)");
    tables->add_option("--out", tbl_out, "Output CSV path (default stdout)");

    // codeinfo
    auto* codeinfo = app.add_subcommand("codeinfo", "Print BCH code parameters");
    int ci_m = 4, ci_t = 1;
    codeinfo->add_option("--m", ci_m)->required();
    codeinfo->add_option("--t", ci_t)->required();

    // decode
    auto* dec = app.add_subcommand("decode", "Decode one received word");
    int dc_m = 4, dc_t = 1, dc_kappa = 4;
    std::string dc_crit = "full", dc_hex;
    dec->add_option("--m", dc_m)->required();
    dec->add_option("--t", dc_t)->required();
    dec->add_option("--criterion", dc_crit, "full|es1|es2|es3")
        ->check(CLI::IsMember({"full", "es1", "es2", "es3"}));
    dec->add_option("--kappa", dc_kappa, "ES3 threshold");
    dec->add_option("--hex", dc_hex, "Received word, hex bitmask (bit i = coefficient of x^i)")
        ->required();

    // analyze pmf|pud
    auto* analyze = app.add_subcommand("analyze", "Probability sweeps over eps");
    analyze->require_subcommand(1);
    int an_m = 10, an_t = 17, an_kappa = 6, an_points = 200;
    double an_from = 1e-4, an_to = 1e-1;
    std::string an_method = "exponent", an_out;
    auto* pmf = analyze->add_subcommand("pmf", "Malfunction probability sweep");
    pmf->add_option("--m", an_m)->required();
    pmf->add_option("--t", an_t)->required();
    pmf->add_option("--kappa", an_kappa)->required();
    pmf->add_option("--method", an_method, "exponent|binomial")
        ->check(CLI::IsMember({"exponent", "binomial"}));
    pmf->add_option("--eps-from", an_from);
    pmf->add_option("--eps-to", an_to);
    pmf->add_option("--points", an_points);
    pmf->add_option("--out", an_out);
    auto* pud = analyze->add_subcommand("pud", "Undetected-error probability sweep");
    pud->add_option("--m", an_m)->required();
    pud->add_option("--t", an_t)->required();
    pud->add_option("--kappa", an_kappa);
    pud->add_option("--eps-from", an_from);
    pud->add_option("--eps-to", an_to);
    pud->add_option("--points", an_points);
    pud->add_option("--out", an_out);

    // complexity
    auto* cpx = app.add_subcommand("complexity", "Multiplicative complexity bounds table");
    std::int64_t cx_t = 72, cx_kappa = 6, cx_emax = 72;
    std::string cx_out;
    cpx->add_option("--t", cx_t)->required();
    cpx->add_option("--kappa", cx_kappa)->required();
    cpx->add_option("--e-max", cx_emax)->required();
    cpx->add_option("--out", cx_out);

    // simulate
    auto* sim = app.add_subcommand("simulate", "BSC Monte Carlo comparison vs Full2T");
    int sm_m = 5, sm_t = 3, sm_kappa = 4, sm_workers = 1;
    double sm_eps = 0.01;
    std::uint64_t sm_trials = 1000, sm_seed = 0;
    std::string sm_crit = "es3", sm_out;
    sim->add_option("--m", sm_m)->required();
    sim->add_option("--t", sm_t)->required();
    sim->add_option("--criterion", sm_crit)
        ->check(CLI::IsMember({"full", "es1", "es2", "es3"}));
    sim->add_option("--kappa", sm_kappa);
    sim->add_option("--eps", sm_eps)->required();
    sim->add_option("--trials", sm_trials)->required();
    sim->add_option("--seed", sm_seed);
    sim->add_option("--workers", sm_workers);
    sim->add_option("--out", sm_out);

    // exhaust
    auto* exh = app.add_subcommand("exhaust", "Exhaustive small-field oracle");
    int ex_m = 5, ex_t = 3, ex_kappa = 4, ex_maxw = 3;
    std::string ex_crit = "es3", ex_out;
    exh->add_option("--m", ex_m)->required();
    exh->add_option("--t", ex_t)->required();
    exh->add_option("--criterion", ex_crit)
        ->check(CLI::IsMember({"full", "es1", "es2", "es3"}));
    exh->add_option("--kappa", ex_kappa);
    exh->add_option("--max-weight", ex_maxw)->required();
    exh->add_option("--out", ex_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*tables) {
            const std::uint32_t poly = tbl_poly.empty()
                                           ? esbch::GaloisField::default_primitive_poly(tbl_m)
                                           : parse_hex32(tbl_poly);
            esbch::GaloisField gf(tbl_m, poly);
            Output out(tbl_out);
            char pbuf[16];
            std::snprintf(pbuf, sizeof pbuf, "%x", gf.primitive_poly());
            write_header(out.stream(), invocation, {{"m", std::to_string(tbl_m)}, {"poly_hex", pbuf}});
            out.stream() << "index,alpha_power_hex\n";
            for (std::uint32_t i = 0; i < gf.order(); ++i) {
                char buf[16];
                std::snprintf(buf, sizeof buf, "%x", gf.exp_table()[i]);
                out.stream() << i << ',' << buf << '\n';
            }
        } else if (*codeinfo) {
            esbch::BchCode code(ci_m, ci_t);
            std::cout << "n=" << code.n() << "\n"
                      << "k=" << code.k() << "\n"
                      << "deg_g=" << code.generator().degree() << "\n"
                      << "g_hex=" << code.generator().to_hex() << "\n";
        } else if (*dec) {
            esbch::BchCode code(dc_m, dc_t);
            const esbch::StopCriterion crit = make_criterion(dc_crit, dc_kappa);
            const esbch::BitVec rx = bits_from_hex(dc_hex, code.n());
            const esbch::DecodeOutcome out = esbch::decode(code, rx, crit);
            std::cout << "status=" << esbch::to_string(out.status) << "\n";
            std::cout << "positions=";
            for (std::size_t i = 0; i < out.error_locations.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << out.error_locations[i];
            }
            std::cout << "\n";
            std::cout << "iterations=" << out.iterations_used << "\n";
            std::cout << "muls=" << out.mul_count << "\n";
            std::cout << "stop=" << (out.early_stopped
                                         ? "early(" + std::to_string(out.stop_iteration) + ")"
                                         : "ran_full")
                      << "\n";
        } else if (*analyze) {
            const bool is_pmf = static_cast<bool>(*pmf);
            const auto grid = esbch::log_space(an_from, an_to, an_points);
            Output out(an_out);
            write_header(out.stream(), invocation,
                         {{"m", std::to_string(an_m)},
                          {"t", std::to_string(an_t)},
                          {"kappa", std::to_string(an_kappa)},
                          {"method", is_pmf ? an_method : "binomial"}});
            const char* col = is_pmf ? "pmf" : "pud";
            out.stream() << "eps,log2_" << col << ',' << col << "_sci\n";
            int skipped = 0;
            for (double eps : grid) {
                esbch::AnalysisPoint pt = esbch::AnalysisPoint::for_code(an_m, an_t, an_kappa, eps);
                try {
                    const esbch::Log2Prob p = is_pmf ? (an_method == "exponent"
                                                            ? esbch::p_mf_exponent(pt)
                                                            : esbch::p_mf_binomial(pt))
                                                     : esbch::p_ud(pt);
                    out.stream() << fmt_double(eps) << ','
                                 << (p.is_zero() ? "-inf" : fmt_double(p.log2_value())) << ','
                                 << p.to_scientific() << '\n';
                } catch (const esbch::BoundInvalid&) {
                    ++skipped;
                } catch (const esbch::NegativeProbability&) {
                    ++skipped;
                }
            }
            if (skipped) out.stream() << "# skipped=" << skipped << " (bound invalid at those eps)\n";
        } else if (*cpx) {
            Output out(cx_out);
            write_header(out.stream(), invocation,
                         {{"t", std::to_string(cx_t)}, {"kappa", std::to_string(cx_kappa)}});
            out.stream() << "e,c_esbm,c_hv,c_bm,c_es3,reduction_ratio\n";
            for (std::int64_t e = 1; e <= cx_emax; ++e) {
                const auto b = esbch::complexity_bounds(cx_t, e, cx_kappa);
                out.stream() << e << ',' << b.c_esbm << ',' << b.c_hv << ',' << b.c_bm << ','
                             << b.c_es3 << ',' << fmt_double(esbch::reduction_ratio(cx_t, e, cx_kappa))
                             << '\n';
            }
        } else if (*sim) {
            esbch::SimConfig cfg;
            cfg.m = sm_m;
            cfg.t = sm_t;
            cfg.criterion = make_criterion(sm_crit, sm_kappa);
            cfg.eps = sm_eps;
            cfg.trials = sm_trials;
            cfg.seed = sm_seed;
            cfg.workers = sm_workers;
            const esbch::SimSummary s = esbch::run_trials(cfg);
            Output out(sm_out);
            write_header(out.stream(), invocation,
                         {{"rng", esbch::kRngName},
                          {"seed", std::to_string(sm_seed)},
                          {"criterion", cfg.criterion.name()},
                          {"trials", std::to_string(sm_trials)},
                          {"malfunctions_total", std::to_string(s.totals.malfunction)},
                          {"detected_failures_total", std::to_string(s.totals.detected_failure)},
                          {"agreement_rate", fmt_double(s.agreement_rate())},
                          {"mean_iter_full", fmt_double(s.mean_iter_full())},
                          {"mean_iter_es", fmt_double(s.mean_iter_es())}});
            out.stream() << "e,count,agree,malfunction,detected_failure,mean_iter_full,"
                            "mean_iter_es,mean_muls_full,mean_muls_es\n";
            for (const auto& [e, b] : s.by_weight) {
                const double c = static_cast<double>(b.count);
                out.stream() << e << ',' << b.count << ',' << b.agree << ',' << b.malfunction
                             << ',' << b.detected_failure << ','
                             << fmt_double(static_cast<double>(b.sum_iter_full) / c) << ','
                             << fmt_double(static_cast<double>(b.sum_iter_es) / c) << ','
                             << fmt_double(static_cast<double>(b.sum_muls_full) / c) << ','
                             << fmt_double(static_cast<double>(b.sum_muls_es) / c) << '\n';
            }
        } else if (*exh) {
            const esbch::StopCriterion crit = make_criterion(ex_crit, ex_kappa);
            const esbch::OracleReport r = esbch::exhaustive_oracle(ex_m, ex_t, crit, ex_maxw);
            Output out(ex_out);
            write_header(out.stream(), invocation,
                         {{"criterion", crit.name()},
                          {"max_weight", std::to_string(ex_maxw)},
                          {"disagreements_total", std::to_string(r.total_disagreements())},
                          {"full_failures_within_t", std::to_string(r.full_failures_within_t)}});
            out.stream() << "weight,patterns,disagreements,es_malfunctions,"
                            "es_detected_failures,full_corrected,full_detected_failures,"
                            "full_miscorrections\n";
            for (const auto& [w, st] : r.by_weight) {
                out.stream() << w << ',' << st.patterns << ',' << st.disagreements << ','
                             << st.es_malfunctions << ',' << st.es_detected_failures << ','
                             << st.full_corrected << ',' << st.full_detected_failures << ','
                             << st.full_miscorrections << '\n';
            }
            for (const auto& d : r.disagreements) {
                out.stream() << "# disagreement weight=" << d.weight << " positions=";
                for (std::size_t i = 0; i < d.positions.size(); ++i) {
                    if (i) out.stream() << '+';
                    out.stream() << d.positions[i];
                }
                out.stream() << " full=" << esbch::to_string(d.full_status)
                             << " es=" << esbch::to_string(d.es_status)
                             << " es_stop=" << d.es_stop_iteration << " d_history=";
                for (std::size_t i = 0; i < d.es_discrepancies.size(); ++i) {
                    if (i) out.stream() << '+';
                    out.stream() << d.es_discrepancies[i];
                }
                out.stream() << '\n';
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
