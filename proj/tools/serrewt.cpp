// serrewt: command-line front end for the weight recipes and their checks.
//
// Exit codes: 0 success/pass, 1 verification counterexample,
//             2 usage or schema error, 3 internal invariant breach.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "serrewt/errors.hpp"
#include "serrewt/galois_params.hpp"
#include "serrewt/oracle.hpp"
#include "serrewt/recipes.hpp"
#include "serrewt/verify.hpp"
#include "serrewt/weights.hpp"

namespace {

using namespace serrewt;
using nlohmann::json;

enum ExitCode { kOk = 0, kCounterexample = 1, kUsage = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw UsageError(std::string("bad value for ") + name + ": " + v);
    }
}

std::string weight_text(const SerreWeight& w) {
    return "V(" + std::to_string(w.a()) + "," + std::to_string(w.b()) + ")";
}

std::string set_text(const WeightSet& s, const char* sep) {
    std::string out;
    for (const auto& w : s.weights) {
        if (!out.empty()) out += sep;
        out += weight_text(w);
    }
    return out;
}

// "3..47", "5", "3,5,7", "3..13,17". Ranges keep only primes; explicitly
// listed values must be odd primes.
std::vector<int> parse_primes(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string part;
    auto to_int = [&](const std::string& s) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(s, &pos);
        } catch (const std::exception&) {
            throw UsageError("malformed prime range \"" + spec + "\"");
        }
        if (pos != s.size()) throw UsageError("malformed prime range \"" + spec + "\"");
        return v;
    };
    while (std::getline(ss, part, ',')) {
        if (const auto dots = part.find(".."); dots != std::string::npos) {
            const int lo = to_int(part.substr(0, dots)), hi = to_int(part.substr(dots + 2));
            if (lo > hi) throw UsageError("empty prime range \"" + part + "\"");
            for (int p = lo; p <= hi; ++p)
                if (is_prime(p)) out.push_back(p);
        } else {
            out.push_back(to_int(part));
        }
    }
    if (out.empty()) throw UsageError("no primes in \"" + spec + "\"");
    for (int p : out) require_odd_prime(p);
    return out;
}

// ---------------------------------------------------------------------------

std::string render_decompose(int p, long long N, const std::string& format) {
    const auto d = decompose_sym(p, N);
    std::ostringstream os;
    if (format == "json") {
        os << decomposition_to_json(d).dump() << "\n";
    } else if (format == "csv") {
        for (std::size_t i = 0; i < d.size(); ++i)
            os << d[i].weight.a() << "," << d[i].weight.b() << "," << d[i].mult << (i + 1 < d.size() ? "\n" : "");
        os << "\n";
    } else {
        long long dim = 0;
        os << "Sym^" << N << " over GL2(F_" << p << "):\n";
        for (const auto& f : d) {
            os << "  " << weight_text(f.weight) << "  x" << f.mult << "  dim " << f.weight.dim() << "\n";
            dim += f.mult * f.weight.dim();
        }
        os << "dimension check: " << dim << " = N+1 = " << N + 1 << (dim == N + 1 ? "  ok" : "  MISMATCH")
           << "\n";
    }
    return os.str();
}

json table_row_json(const InertialParam& x, const SymPowerTable& table) {
    const long long ks = serre_k(x), km = k_min_of_set(x), kc = k_cris(x, MuTable(x), table);
    const auto w = bdj_weight_set(x), b = bm_set(x);
    return {{"param", param_to_json(x)},
            {"k_serre", ks},
            {"k_min", km},
            {"k_cris", kc},
            {"w_size", w.size()},
            {"W", weight_set_to_json(w)},
            {"B", weight_set_to_json(b)},
            {"k_equal", ks == km && km == kc},
            {"sets_equal", w == b}};
}

std::string csv_row(const InertialParam& x, const json& row) {
    std::ostringstream os;
    const auto& pj = row["param"];
    auto field = [&](const char* k) { return pj.contains(k) ? pj[k].dump() : std::string(); };
    std::string shape = pj.contains("shape") ? pj["shape"].get<std::string>() : "";
    const auto w = bdj_weight_set(x), b = bm_set(x);
    os << pj["type"].get<std::string>() << "," << field("a") << "," << field("b") << "," << field("twist") << ","
       << field("ratio") << "," << shape << "," << field("lambda_equal") << "," << row["k_serre"] << ","
       << row["k_min"] << "," << row["k_cris"] << "," << row["w_size"] << "," << set_text(w, ";") << ","
       << set_text(b, ";") << "," << row["k_equal"] << "," << row["sets_equal"];
    return os.str();
}

std::string render_table(int p, const std::string& format) {
    const auto params = enumerate_params(p);
    const SymPowerTable table(p, static_cast<long long>(p) * p - 2);
    std::ostringstream os;
    if (format == "json") {
        auto rows = json::array();
        for (const auto& x : params) rows.push_back(table_row_json(x, table));
        os << rows.dump() << "\n";
    } else if (format == "csv") {
        for (const auto& x : params) os << csv_row(x, table_row_json(x, table)) << "\n";
    } else {
        os << std::left;
        for (const auto& x : params) {
            const auto row = table_row_json(x, table);
            std::string param = describe(x);
            param.resize(std::max<std::size_t>(param.size(), 28), ' ');
            os << param << " k=" << row["k_serre"] << "/" << row["k_min"] << "/" << row["k_cris"]
               << "  |W|=" << row["w_size"] << "  W={" << set_text(bdj_weight_set(x), " ") << "}  B={"
               << set_text(bm_set(x), " ") << "}  "
               << (row["k_equal"].get<bool>() && row["sets_equal"].get<bool>() ? "equal" : "DIFFER") << "\n";
        }
    }
    return os.str();
}

std::string render_weights(const InertialParam& x, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        os << result_to_json(x).dump() << "\n";
        return os.str();
    }
    const SymPowerTable table(x.p(), static_cast<long long>(x.p()) * x.p() - 2);
    if (format == "csv") {
        os << csv_row(x, table_row_json(x, table)) << "\n";
        return os.str();
    }
    const auto r = result_to_json(x);
    os << "param   " << describe(x) << " (p=" << x.p() << ")\n"
       << "k_serre " << r["k_serre"] << "\n"
       << "k_min   " << r["k_min"] << "\n"
       << "k_cris  " << r["k_cris"] << "\n"
       << "W       {" << set_text(bdj_weight_set(x), " ") << "}\n"
       << "B       {" << set_text(bm_set(x), " ") << "}\n"
       << "mu      ";
    for (const auto& c : r["mu_nonzero"]) os << "(" << c["n"] << "," << c["m"] << ")=" << c["mu"] << " ";
    os << "\n";
    return os.str();
}

std::string render_suite(const SuiteReport& s, const std::string& format, bool timing) {
    std::ostringstream os;
    if (format == "json") {
        os << suite_to_json(s, timing).dump() << "\n";
    } else if (format == "csv") {
        for (const auto& r : s.runs) {
            os << r.p << "," << r.check << "," << r.params_checked << "," << r.failures.size();
            if (timing) os << "," << r.ms;
            os << "\n";
        }
    } else {
        for (const auto& r : s.runs) {
            os << "p=" << r.p << "\t" << r.check << "\t" << r.params_checked << " checked\t" << r.failures.size()
               << " failures";
            if (timing) os << "\t" << r.ms << " ms";
            os << "\t" << (r.pass() ? "PASS" : "FAIL") << "\n";
            for (const auto& f : r.failures)
                os << "    " << f.param.dump() << " expected " << f.expected.dump() << " actual "
                   << f.actual.dump() << "\n";
        }
        os << (s.pass() ? "ALL PASS" : "FAILURES") << "\n";
    }
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + out_path);
    f << text;
    if (!f) throw UsageError("write failed: " + out_path);
}

std::string read_param_text(const std::string& inline_json, const std::string& path) {
    if (!inline_json.empty()) return inline_json;
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read param file " + path);
    return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serre weights: k(rho), k_min(W(rho)), k_cris(rho) and exhaustive theorem checks"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "table";
    std::string out_path;
    int jobs = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--out", out_path, "Write output to PATH instead of stdout");
    app.add_option("--jobs", jobs, "Worker threads (env SERREWT_JOBS)")->check(CLI::PositiveNumber);

    int p = 0;
    long long N = 0;
    auto* decompose = app.add_subcommand("decompose", "Jordan-Holder factors of Sym^N");
    decompose->add_option("-p", p, "Odd prime")->required();
    decompose->add_option("-N", N, "Symmetric power")->required()->check(CLI::NonNegativeNumber);

    int ka = 0, kb = 0;
    bool search = false;
    auto* kmin = app.add_subcommand("kmin", "Least k with V(a,b) in Sym^{k-2}");
    kmin->add_option("-p", p, "Odd prime")->required();
    kmin->add_option("-a", ka, "Twist exponent, 0..p-2")->required();
    kmin->add_option("-b", kb, "Dimension, 1..p")->required();
    kmin->add_flag("--search", search, "Also run the scanning oracle");

    std::string param_json, param_file;
    auto* weights = app.add_subcommand("weights", "All three minimal weights and both weight sets");
    weights->add_option("param", param_json, "Param JSON");
    weights->add_option("--param-file", param_file, "Read param JSON from PATH ('-' for stdin)");

    std::string prime_spec, checks_spec = "all";
    int oracle_max_p = 31;
    bool no_timing = false;
    auto* verify = app.add_subcommand("verify", "Exhaustive theorem checks over primes");
    verify->add_option("-p,--primes", prime_spec, "Primes: 3..47, 5, 3,5,7 (default 3..SERREWT_MAX_P)");
    verify->add_option("--checks", checks_spec, "all or a comma list of main,bm,kmin,lemma,brauer");
    verify->add_option("--oracle-max-p", oracle_max_p, "Largest prime for the Brauer check");
    verify->add_flag("--no-timing", no_timing, "Omit timing fields");

    auto* table = app.add_subcommand("table", "Every enumerated param with its k values and weight sets");
    table->add_option("-p", p, "Odd prime")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (jobs == 0) jobs = env_int("SERREWT_JOBS", static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
        if (jobs < 1) throw UsageError("jobs must be >= 1");

        if (*decompose) {
            require_odd_prime(p);
            emit(render_decompose(p, N, format), out_path);
            return kOk;
        }
        if (*kmin) {
            require_odd_prime(p);
            if (ka < 0 || ka > p - 2 || kb < 1 || kb > p) throw UsageError("need 0 <= a <= p-2 and 1 <= b <= p");
            const auto w = SerreWeight::make(p, ka, kb);
            const long long closed = k_min_closed(w);
            const long long scanned = search ? oracle::k_min_search(p, w) : 0;
            std::ostringstream os;
            if (format == "json") {
                json j = {{"p", p}, {"a", ka}, {"b", kb}, {"k_min", closed}};
                if (search) {
                    j["k_search"] = scanned;
                    j["match"] = closed == scanned;
                }
                os << j.dump() << "\n";
            } else {
                const char* sep = format == "csv" ? "," : " ";
                os << closed;
                if (search) os << sep << scanned << sep << (closed == scanned ? "match" : "mismatch");
                os << "\n";
            }
            emit(os.str(), out_path);
            return search && closed != scanned ? kCounterexample : kOk;
        }
        if (*weights) {
            if (param_json.empty() == param_file.empty())
                throw UsageError("give exactly one of a param JSON argument or --param-file");
            const auto x = parse_param(read_param_text(param_json, param_file));
            emit(render_weights(x, format), out_path);
            return kOk;
        }
        if (*verify) {
            std::vector<int> primes;
            if (prime_spec.empty()) {
                primes = parse_primes("3.." + std::to_string(env_int("SERREWT_MAX_P", 47)));
            } else {
                primes = parse_primes(prime_spec);
            }
            std::vector<Check> checks;
            if (checks_spec == "all") {
                checks = all_checks();
            } else {
                std::stringstream ss(checks_spec);
                std::string name;
                while (std::getline(ss, name, ',')) checks.push_back(check_from_name(name));
            }
            SuiteOptions opts;
            opts.jobs = jobs;
            opts.oracle_max_p = oracle_max_p;
            const auto report = run_suite(primes, checks, opts);
            emit(render_suite(report, format, !no_timing), out_path);
            return report.pass() ? kOk : kCounterexample;
        }
        if (*table) {
            require_odd_prime(p);
            emit(render_table(p, format), out_path);
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const LevelOneError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
