// Command-line front end: exact censuses, character tables, asymptotic
// predictors, Monte Carlo estimates, and the generating-function identity
// suites.
//
// Exit codes: 0 success, 2 guard/usage violation, 3 verification failure,
// 4 I/O error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symchar/asymptotics.hpp"
#include "symchar/characters.hpp"
#include "symchar/classify.hpp"
#include "symchar/hooks.hpp"
#include "symchar/io.hpp"
#include "symchar/parallel.hpp"
#include "symchar/sampler.hpp"
#include "symchar/series.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGuard = 2;
constexpr int kExitVerify = 3;
constexpr int kExitIo = 4;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        symchar::io::write_text(out_path, text);
}

void print_error(const std::string& kind, const std::string& message) {
    symchar::io::json j;
    j["schema_version"] = symchar::io::kSchemaVersion;
    symchar::io::json err;
    err["kind"] = kind;
    err["message"] = message;
    j["error"] = err;
    std::cout << j.dump(2) << "\n";
}

struct Progress {
    bool enabled = false;
    void say(const std::string& msg) const {
        if (enabled) std::cerr << "[symchar] " << msg << "\n";
    }
};

int run_census(int n_single, int n_from, int n_to, bool with_characters, int workers,
               const std::string& format, const std::string& out_path, const Progress& progress) {
    std::vector<symchar::ZeroCensus> rows;
    int lo = n_single > 0 ? n_single : n_from;
    int hi = n_single > 0 ? n_single : n_to;
    for (int n = lo; n <= hi; ++n) {
        progress.say("census N=" + std::to_string(n));
        rows.push_back(symchar::census(n, with_characters, workers));
    }
    if (format == "csv") {
        emit(symchar::io::census_csv(rows), out_path);
    } else if (rows.size() == 1) {
        emit(symchar::io::census_json_string(rows.front()), out_path);
    } else {
        symchar::io::json arr = symchar::io::json::array();
        for (const auto& r : rows) arr.push_back(symchar::io::census_to_json(r));
        emit(arr.dump(2) + "\n", out_path);
    }
    return kExitOk;
}

int run_table(int n, int workers, const std::string& format, const std::string& out_path,
              const Progress& progress) {
    progress.say("table N=" + std::to_string(n));
    symchar::CharTable table = symchar::full_table(n, workers);
    if (format == "json")
        emit(symchar::io::table_to_json(table).dump(2) + "\n", out_path);
    else
        emit(symchar::io::table_to_csv(table), out_path);
    return kExitOk;
}

int run_predict(int n, const std::string& out_path, const Progress& progress) {
    progress.say("predict N=" + std::to_string(n));
    symchar::AsymptoticReport report = symchar::asymptotic_report(n);
    emit(symchar::io::report_to_json(report).dump(2) + "\n", out_path);
    return kExitOk;
}

int run_sample(int n, std::int64_t samples, std::uint64_t seed, int workers,
               const std::string& out_path, const Progress& progress) {
    progress.say("sampling " + std::to_string(samples) + " pairs at N=" + std::to_string(n));
    symchar::ZeroTypeEstimates est =
        symchar::estimate_zero_types(n, samples, symchar::SeedSpec{seed, 0}, workers);
    emit(symchar::io::estimates_to_json(est).dump(2) + "\n", out_path);
    return kExitOk;
}

// Identity suites. Each returns true on a clean pass and prints one line per
// check group; the first mismatch is reported with its witness.
bool verify_han(int nmax, int tmax, std::ostream& log) {
    std::vector<int> tset;
    for (int t : {2, 3, 4, 5, 7})
        if (t <= tmax) tset.push_back(t);
    for (int t : tset) {
        symchar::BivariateTable table = symchar::han_table(t, nmax);
        for (int n = 0; n <= nmax; ++n) {
            std::vector<symchar::BigInt> brute(static_cast<std::size_t>(n / t) + 1);
            symchar::for_each_partition(n, [&](const std::vector<int>& parts) {
                symchar::Partition la(parts);
                auto k = static_cast<std::size_t>(symchar::hooks_div(la, t));
                ++brute[k];
            });
            for (std::size_t k = 0; k < brute.size(); ++k) {
                if (table.at(n, static_cast<int>(k)) != brute[k]) {
                    log << "FAIL han: t=" << t << " N=" << n << " k=" << k << "\n";
                    return false;
                }
            }
        }
        log << "ok han identity t=" << t << " up to N=" << nmax << "\n";
    }
    return true;
}

bool verify_cores(int nmax, int tmax, std::ostream& log) {
    int nb = std::min(nmax, symchar::kCoreCountEnumerationGuard);
    for (int t = 1; t <= tmax; ++t) {
        symchar::IntSeries series = symchar::tcore_series(t, nmax);
        for (int n = 0; n <= nb; ++n) {
            if (series[n] != symchar::core_count_exact(n, t)) {
                log << "FAIL cores: t=" << t << " N=" << n << "\n";
                return false;
            }
        }
        log << "ok t-core series t=" << t << " up to N=" << nb << "\n";
    }
    // 2-cores are the staircases: c_2(n) = 1 iff n is triangular
    symchar::IntSeries c2 = symchar::tcore_series(2, 100);
    for (int n = 0; n <= 100; ++n) {
        bool triangular = false;
        for (int k = 0; k * (k + 1) / 2 <= n; ++k)
            if (k * (k + 1) / 2 == n) triangular = true;
        if ((c2[n] == 1) != triangular || (c2[n] != 0 && c2[n] != 1)) {
            log << "FAIL cores: c_2(" << n << ") = " << c2[n].get_str() << "\n";
            return false;
        }
    }
    log << "ok c_2 = triangular indicator up to N=100\n";
    return true;
}

bool verify_props(int nmax, int tmax, std::ostream& log) {
    for (int N = 1; N <= nmax; ++N) {
        int tcap = tmax > 0 ? std::min(tmax, N) : N;
        // #{mu : P_t(mu) = l} = p(l) a_t(N - t l)
        for (int t = 2; t <= tcap; ++t) {
            std::vector<symchar::BigInt> counts(static_cast<std::size_t>(N / t) + 1);
            symchar::for_each_partition(N, [&](const std::vector<int>& parts) {
                symchar::Partition mu(parts);
                auto l = static_cast<std::size_t>(symchar::parts_div_sum(mu, t));
                ++counts[l];
            });
            symchar::IntSeries at = symchar::nondiv_series(t, N);
            for (std::size_t l = 0; l < counts.size(); ++l) {
                symchar::BigInt expected =
                    symchar::partition_count(static_cast<int>(l)) * at[N - t * static_cast<int>(l)];
                if (counts[l] != expected) {
                    log << "FAIL props (8.6): N=" << N << " t=" << t << " l=" << l << "\n";
                    return false;
                }
            }
        }
        // #{mu |- N with a part t} = p(N - t)
        for (int t = 1; t <= N; ++t) {
            symchar::BigInt with_part = 0;
            symchar::for_each_partition(N, [&](const std::vector<int>& parts) {
                for (int v : parts)
                    if (v == t) {
                        ++with_part;
                        break;
                    }
            });
            if (with_part != symchar::partition_count(N - t)) {
                log << "FAIL props (part-t bijection): N=" << N << " t=" << t << "\n";
                return false;
            }
        }
    }
    log << "ok restricted-parts identity and part-t bijection up to N=" << nmax << "\n";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero structure of symmetric group character tables"};
    app.require_subcommand(1);

    int workers = 0;
    std::string out_path;
    std::string format = "json";
    Progress progress;
    app.add_option("--workers", workers, "worker threads (default: SYMCHAR_WORKERS or hardware)");
    app.add_flag("--progress", progress.enabled, "status lines on stderr");

    auto* census_cmd = app.add_subcommand("census", "exact zero census over all pairs");
    int census_n = 0, census_from = 0, census_to = 0;
    bool with_characters = false;
    std::string census_format = "json", census_out;
    census_cmd->add_option("--n", census_n, "partition size N");
    census_cmd->add_option("--n-from", census_from, "range start (with --n-to)");
    census_cmd->add_option("--n-to", census_to, "range end");
    census_cmd->add_flag("--with-characters", with_characters, "also count actual zeros");
    census_cmd->add_option("--format", census_format)->check(CLI::IsMember({"json", "csv"}));
    census_cmd->add_option("--out", census_out, "output path (default stdout)");

    auto* table_cmd = app.add_subcommand("table", "exact character table");
    int table_n = 0;
    std::string table_format = "csv", table_out;
    table_cmd->add_option("--n", table_n)->required();
    table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv"}));
    table_cmd->add_option("--out", table_out);

    auto* predict_cmd = app.add_subcommand("predict", "asymptotic predictor report");
    int predict_n = 0;
    std::string predict_out;
    predict_cmd->add_option("--n", predict_n)->required();
    predict_cmd->add_option("--out", predict_out);

    auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo zero-type estimates");
    int sample_n = 0;
    std::int64_t sample_count = 1000;
    std::uint64_t sample_seed = 1;
    std::string sample_out;
    sample_cmd->add_option("--n", sample_n)->required();
    sample_cmd->add_option("--samples", sample_count, "pair samples");
    sample_cmd->add_option("--seed", sample_seed, "master seed");
    sample_cmd->add_option("--out", sample_out);

    auto* verify_cmd = app.add_subcommand("verify", "generating-function identity suites");
    std::string suite;
    int verify_nmax = 24, verify_tmax = 0;
    verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember({"han", "cores", "props"}));
    verify_cmd->add_option("--nmax", verify_nmax);
    verify_cmd->add_option("--tmax", verify_tmax, "0 = suite default");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        print_error("guard", e.what());
        return kExitGuard;
    }

    try {
        if (census_cmd->parsed()) {
            bool ranged = census_from > 0 || census_to > 0;
            if ((census_n <= 0) == !ranged)
                throw symchar::guard_error("census: give --n, or --n-from with --n-to");
            if (ranged && (census_from < 1 || census_to < census_from))
                throw symchar::guard_error("census: bad range");
            return run_census(census_n, census_from, census_to, with_characters, workers,
                              census_format, census_out, progress);
        }
        if (table_cmd->parsed())
            return run_table(table_n, workers, table_format, table_out, progress);
        if (predict_cmd->parsed()) return run_predict(predict_n, predict_out, progress);
        if (sample_cmd->parsed())
            return run_sample(sample_n, sample_count, sample_seed, workers, sample_out, progress);
        if (verify_cmd->parsed()) {
            std::ostringstream log;
            bool ok = false;
            if (suite == "han")
                ok = verify_han(verify_nmax, verify_tmax > 0 ? verify_tmax : 7, log);
            else if (suite == "cores")
                ok = verify_cores(verify_nmax, verify_tmax > 0 ? verify_tmax : 7, log);
            else
                ok = verify_props(verify_nmax, verify_tmax, log);
            log << (ok ? "PASS" : "FAIL") << " suite " << suite << "\n";
            std::cout << log.str();
            return ok ? kExitOk : kExitVerify;
        }
    } catch (const symchar::guard_error& e) {
        print_error("guard", e.what());
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        print_error("guard", e.what());
        return kExitGuard;
    } catch (const symchar::io_error& e) {
        print_error("io", e.what());
        return kExitIo;
    } catch (const symchar::verification_error& e) {
        print_error("verification", e.what());
        return kExitVerify;
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return 1;
    }
    return kExitOk;
}
