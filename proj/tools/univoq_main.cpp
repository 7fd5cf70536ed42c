// univoq: certified dimension bounds for unique-expansion sets in
// non-integer bases, plus the digit, window-shift and base-interval tooling
// behind them.
#include <CLI11.hpp>

#include <univoq/dimension.hpp>
#include <univoq/measure.hpp>

#include <iostream>
#include <thread>

using namespace univoq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitTolerance = 4;

std::string seq_text(const PeriodicSeq& s) {
    std::string out = s.preperiod().to_string();
    if (s.eventually_zero()) {
        out += out.empty() ? "0^inf" : " 0^inf";
    } else {
        out += "(" + s.period().to_string() + ")^inf";
    }
    return out;
}

std::string digits_json(const Word& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + "]";
}

struct GridSpec {
    Rational lo, hi, step;
};

GridSpec parse_grid(const std::string& text) {
    auto a = text.find(':');
    auto b = text.rfind(':');
    if (a == std::string::npos || b == a)
        throw std::invalid_argument("grid must be lo:hi:step");
    GridSpec g{parse_rational(text.substr(0, a)), parse_rational(text.substr(a + 1, b - a - 1)),
               parse_rational(text.substr(b + 1))};
    if (g.step <= 0 || g.hi < g.lo) throw std::invalid_argument("grid must be increasing");
    return g;
}

std::vector<Rational> grid_points(const GridSpec& g) {
    std::vector<Rational> pts;
    for (Rational q = g.lo; q <= g.hi; q += g.step) pts.push_back(q);
    return pts;
}

int run_expand(const std::string& base, int M, size_t depth, const std::string& format) {
    AlgebraicNumber q = parse_base(base);
    Alphabet alphabet(M);
    DigitStream beta(q, alphabet, DigitStream::Mode::Greedy);
    Word prefix = beta.prefix(depth);
    ExpansionSeq alpha = quasi_greedy_expansion(q, alphabet, std::max<size_t>(depth, 256));
    if (format == "json") {
        std::cout << "{\"beta\":{\"prefix\":" << digits_json(prefix);
        if (auto m = beta.finite_at()) std::cout << ",\"finite_at\":" << *m;
        std::cout << "},\"alpha\":";
        if (alpha.exact) {
            std::cout << "{\"preperiod\":" << digits_json(alpha.periodic.preperiod())
                      << ",\"period\":" << digits_json(alpha.periodic.period()) << "}";
        } else {
            std::cout << "{\"prefix\":" << digits_json(alpha.prefix(depth)) << "}";
        }
        std::cout << "}\n";
        return kExitOk;
    }
    std::cout << "beta: " << prefix.to_string();
    if (auto m = beta.finite_at()) {
        std::cout << " (finite at " << *m << ")";
    } else if (auto cyc = beta.detected_cycle()) {
        std::cout << " (eventually periodic: " << seq_text(*cyc) << ")";
    }
    std::cout << "; alpha: ";
    if (alpha.exact)
        std::cout << seq_text(alpha.periodic);
    else
        std::cout << alpha.prefix(depth).to_string() << "... (aperiodic to depth "
                  << std::max<size_t>(depth, 256) << ")";
    std::cout << "\n";
    return kExitOk;
}

int emit_rows(const std::vector<SweepRow>& rows, const std::string& format, unsigned precision) {
    if (format == "json")
        std::cout << sweep_json(rows, precision) << "\n";
    else
        std::cout << sweep_csv(rows, precision);
    bool any_error = false, all_error = true, tol_missed = false;
    for (const auto& r : rows) {
        if (!r.error.empty()) {
            any_error = true;
        } else {
            all_error = false;
            if (!r.estimate.tol_reached) tol_missed = true;
        }
    }
    if (any_error && all_error) return kExitUsage;
    if (tol_missed) return kExitTolerance;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified Hausdorff dimension bounds for unique beta-expansions"};
    app.require_subcommand(1);

    int M = 1;
    std::string base = "2";
    std::string format = "csv";
    std::string grid_text;
    unsigned precision = 6;
    size_t depth_cap = 4096;
    std::string tol_text = "0.01", width_text = "1e-6";
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    uint64_t seed = 1;

    app.add_option("-M,--alphabet", M, "largest digit M (alphabet {0..M})")
        ->check(CLI::Range(1, 9));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--precision", precision, "decimal digits in output")->check(CLI::Range(1, 60));

    auto* expand = app.add_subcommand("expand", "greedy and quasi-greedy digits of 1");
    expand->fallthrough();
    expand->add_option("-q,--base", base,
                       "base (decimal, p/q, poly:[..];interval:[..], golden, tribonacci)");
    size_t expand_n = 16;
    expand->add_option("-n,--digits", expand_n, "digits to print");

    auto* dim = app.add_subcommand("dimension", "certified dimension enclosure at one base");
    dim->fallthrough();
    dim->add_option("-q,--base", base, "base");
    dim->add_option("--tol", tol_text, "target enclosure width");
    dim->add_option("--depth", depth_cap, "window depth cap");

    auto* sweep = app.add_subcommand("sweep", "dimension enclosures over a grid");
    sweep->fallthrough();
    sweep->add_option("--grid", grid_text, "grid lo:hi:step")->required();
    sweep->add_option("--tol", tol_text, "target enclosure width per point");
    sweep->add_option("--depth", depth_cap, "window depth cap");
    sweep->add_option("--jobs", jobs, "parallel workers");

    auto* kl = app.add_subcommand("kl", "smallest univoque base enclosure");
    kl->fallthrough();
    size_t kl_depth = 0;  // 0 = library default
    kl->add_option("--width", width_text, "target enclosure width");
    kl->add_option("--depth", kl_depth, "verification depth (0 = default)");

    auto* sigma = app.add_subcommand("sigma", "block-count dimension exponent sigma(N)");
    sigma->fallthrough();
    int sigma_n = 2;
    int sigma_n_hi = 0;
    sigma->add_option("-N", sigma_n, "block length N (>= 2)")->required();
    sigma->add_option("--to", sigma_n_hi, "emit a row per N up to this value");

    auto* intervals =
        app.add_subcommand("intervals", "greedy-prefix base intervals and ratio bound");
    intervals->fallthrough();
    std::string prefix_text = "11";
    unsigned t_zeros = 1;
    intervals->add_option("--prefix", prefix_text, "greedy-admissible digit prefix");
    intervals->add_option("-t,--zeros", t_zeros, "length of the appended zero block");

    auto* zeroruns = app.add_subcommand("zeroruns", "zero-run statistics of sampled bases");
    zeroruns->fallthrough();
    std::string r_text = "2";
    unsigned samples = 500;
    size_t zr_depth = 200;
    zeroruns->add_option("-r,--cap", r_text, "base range cap (samples drawn from (1, r))");
    zeroruns->add_option("--samples", samples, "number of sampled bases");
    zeroruns->add_option("--depth", zr_depth, "digits computed per sample");
    zeroruns->add_option("--seed", seed, "RNG seed");
    zeroruns->add_option("--jobs", jobs, "parallel workers");
    bool zr_csv_samples = false;
    zeroruns->add_flag("--per-sample", zr_csv_samples,
                       "emit per-sample CSV instead of the summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (expand->parsed()) return run_expand(base, M, expand_n, format);
        if (dim->parsed()) {
            DimensionOptions opts;
            opts.depth_cap = depth_cap;
            std::vector<SweepRow> rows(1);
            AlgebraicNumber q = parse_base(base);
            rows[0].estimate = dimension(q, Alphabet(M), parse_rational(tol_text), opts);
            if (q.is_rational()) {
                rows[0].q = q.rational_value();
            } else {
                AlgebraicNumber r = refine(q, make_rational(1, Int(1) << 40));
                rows[0].q = r.enclosure().midpoint();
            }
            return emit_rows(rows, format, precision);
        }
        if (sweep->parsed()) {
            DimensionOptions opts;
            opts.depth_cap = depth_cap;
            auto rows = staircase_sweep(Alphabet(M), grid_points(parse_grid(grid_text)),
                                        parse_rational(tol_text), jobs, opts);
            return emit_rows(rows, format, precision);
        }
        if (kl->parsed()) {
            KLConstant k = kl_constant(M, parse_rational(width_text), kl_depth);
            if (format == "json") {
                std::cout << "{\"M\":" << M
                          << ",\"lo\":" << decimal_string(k.enclosure.lo, precision)
                          << ",\"hi\":" << decimal_string(k.enclosure.hi, precision)
                          << ",\"certificate_depth\":" << k.certificate_depth
                          << ",\"lo_refuted_at\":" << k.lo_refuted_at
                          << ",\"hi_verified\":" << (k.hi_verified ? "true" : "false")
                          << ",\"tm_cross_checked\":" << (k.tm_cross_checked ? "true" : "false")
                          << "}\n";
            } else {
                std::cout << "M,kl_lo,kl_hi,certificate_depth,lo_refuted_at,hi_verified,tm_cross_"
                             "checked\n"
                          << M << "," << decimal_string(k.enclosure.lo, precision) << ","
                          << decimal_string(k.enclosure.hi, precision) << ","
                          << k.certificate_depth << "," << k.lo_refuted_at << ","
                          << (k.hi_verified ? "true" : "false") << ","
                          << (k.tm_cross_checked ? "true" : "false") << "\n";
            }
            return kExitOk;
        }
        if (sigma->parsed()) {
            int hi = std::max(sigma_n, sigma_n_hi);
            if (format == "json")
                std::cout << "[";
            else
                std::cout << "M,N,sigma_lo,sigma_hi,exact,c_lo,c_hi\n";
            for (int N = sigma_n; N <= hi; ++N) {
                SigmaBound s = sigma_lower_bound(M, N);
                if (format == "json") {
                    if (N > sigma_n) std::cout << ",";
                    std::cout << "{\"N\":" << N
                              << ",\"lo\":" << decimal_string(s.sigma.lo, precision)
                              << ",\"hi\":" << decimal_string(s.sigma.hi, precision)
                              << ",\"exact\":" << (s.exact ? "true" : "false") << "}";
                } else {
                    std::cout << M << "," << N << "," << decimal_string(s.sigma.lo, precision)
                              << "," << decimal_string(s.sigma.hi, precision) << ","
                              << (s.exact ? "true" : "false") << ","
                              << decimal_string(s.separation_c.lo, precision) << ","
                              << decimal_string(s.separation_c.hi, precision) << "\n";
                }
            }
            if (format == "json") std::cout << "]\n";
            return kExitOk;
        }
        if (intervals->parsed()) {
            std::vector<int> digits;
            for (char ch : prefix_text) {
                if (ch < '0' || ch > '9') throw std::invalid_argument("prefix must be digits");
                digits.push_back(ch - '0');
            }
            IntervalTriple tr = interval_triple(Alphabet(M), Word(digits, M), t_zeros);
            auto dec = [&](const AlgebraicNumber& x) {
                AlgebraicNumber r = refine(x, make_rational(1, Int(1) << 40));
                return decimal_string(r.enclosure().midpoint(), precision);
            };
            if (tr.boundary) {
                std::cout << "prefix,t,q1,q3,q2,boundary\n"
                          << prefix_text << "," << t_zeros << "," << dec(tr.q1) << ","
                          << dec(tr.q3) << "," << dec(tr.q2) << ",true\n";
                return kExitOk;
            }
            RatioBoundResult res = check_ratio_bound(tr);
            if (format == "json") {
                std::cout << "{\"prefix\":\"" << prefix_text << "\",\"t\":" << t_zeros
                          << ",\"q1\":" << dec(tr.q1) << ",\"q3\":" << dec(tr.q3)
                          << ",\"q2\":" << dec(tr.q2) << ",\"ratio\":["
                          << decimal_string(res.ratio.lo, precision) << ","
                          << decimal_string(res.ratio.hi, precision) << "],\"bound\":["
                          << decimal_string(res.bound.lo, precision) << ","
                          << decimal_string(res.bound.hi, precision)
                          << "],\"holds\":" << (res.holds ? "true" : "false") << "}\n";
            } else {
                std::cout << "prefix,t,q1,q3,q2,ratio_lo,ratio_hi,bound_lo,bound_hi,holds\n"
                          << prefix_text << "," << t_zeros << "," << dec(tr.q1) << ","
                          << dec(tr.q3) << "," << dec(tr.q2) << ","
                          << decimal_string(res.ratio.lo, precision) << ","
                          << decimal_string(res.ratio.hi, precision) << ","
                          << decimal_string(res.bound.lo, precision) << ","
                          << decimal_string(res.bound.hi, precision) << ","
                          << (res.holds ? "true" : "false") << "\n";
            }
            return kExitOk;
        }
        if (zeroruns->parsed()) {
            ZeroRunReport rep =
                zero_run_experiment(M, parse_rational(r_text), samples, zr_depth, seed, jobs);
            if (zr_csv_samples)
                std::cout << rep.to_csv(precision);
            else if (format == "json")
                std::cout << rep.to_json(precision) << "\n";
            else
                std::cout << "M,r,samples,depth,seed,successes,fraction\n"
                          << rep.M << "," << decimal_string(rep.r, precision) << ","
                          << rep.samples << "," << rep.depth << "," << rep.seed << ","
                          << rep.successes << "," << decimal_string(rep.fraction, precision)
                          << "\n";
            return kExitOk;
        }
    } catch (const UndecidedAtDepth& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const CertificateDepthExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
