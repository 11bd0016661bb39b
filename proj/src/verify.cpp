#include "serrewt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>

#include "serrewt/errors.hpp"
#include "serrewt/galois_params.hpp"
#include "serrewt/oracle.hpp"
#include "serrewt/recipes.hpp"
#include "serrewt/weights.hpp"

namespace serrewt {

namespace {

using Clock = std::chrono::steady_clock;

// Evaluates item(i) for i in [0, count) on up to `jobs` threads over
// contiguous blocks; results come back in index order whatever the split.
std::vector<Failure> collect(long long count, int jobs,
                             const std::function<std::optional<Failure>(long long)>& item) {
    std::vector<std::optional<Failure>> slots(static_cast<std::size_t>(count));
    const long long workers = std::clamp<long long>(jobs, 1, std::max<long long>(count, 1));
    const long long block = (count + workers - 1) / workers;
    {
        std::vector<std::jthread> pool;
        for (long long w = 1; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (long long i = w * block; i < std::min(count, (w + 1) * block); ++i) slots[i] = item(i);
            });
        for (long long i = 0; i < std::min(count, block); ++i) slots[i] = item(i);
    }
    std::vector<Failure> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

template <class F>
VerificationReport timed(int p, Check c, F&& body) {
    const auto start = Clock::now();
    VerificationReport r;
    r.p = p;
    r.check = std::string(check_name(c));
    body(r);
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return r;
}

}  // namespace

std::string_view check_name(Check c) {
    switch (c) {
        case Check::Main: return "main";
        case Check::BmEqualsBdj: return "bm";
        case Check::KminFormula: return "kmin";
        case Check::RecursionLemma: return "lemma";
        case Check::Brauer: return "brauer";
    }
    return "?";
}

Check check_from_name(std::string_view name) {
    for (Check c : all_checks())
        if (check_name(c) == name) return c;
    throw InvalidArgument("unknown check \"" + std::string(name) + "\"");
}

std::vector<Check> all_checks() {
    return {Check::Main, Check::BmEqualsBdj, Check::KminFormula, Check::RecursionLemma, Check::Brauer};
}

VerificationReport check_main_theorem(int p, int jobs) {
    require_odd_prime(p);
    return timed(p, Check::Main, [&](VerificationReport& r) {
        const auto params = enumerate_params(p);
        const SymPowerTable table(p, static_cast<long long>(p) * p - 2);
        r.params_checked = static_cast<long long>(params.size());
        r.failures = collect(r.params_checked, jobs, [&](long long i) -> std::optional<Failure> {
            const auto& x = params[static_cast<std::size_t>(i)];
            const long long ks = serre_k(x);
            const long long km = k_min_of_set(x);
            const long long kc = k_cris(x, MuTable(x), table);
            if (ks == km && km == kc) return std::nullopt;
            return Failure{param_to_json(x), {{"k_serre", ks}}, {{"k_min", km}, {"k_cris", kc}}};
        });
    });
}

VerificationReport check_bm_equals_bdj(int p, int jobs) {
    require_odd_prime(p);
    return timed(p, Check::BmEqualsBdj, [&](VerificationReport& r) {
        const auto params = enumerate_params(p);
        r.params_checked = static_cast<long long>(params.size());
        r.failures = collect(r.params_checked, jobs, [&](long long i) -> std::optional<Failure> {
            const auto& x = params[static_cast<std::size_t>(i)];
            const auto w = bdj_weight_set(x);
            const auto b = bm_set(x);
            if (w == b) return std::nullopt;
            return Failure{param_to_json(x), weight_set_to_json(w), weight_set_to_json(b)};
        });
    });
}

VerificationReport check_kmin_formula(int p, int jobs) {
    require_odd_prime(p);
    return timed(p, Check::KminFormula, [&](VerificationReport& r) {
        const auto scanned = oracle::k_min_search_all(p);
        r.params_checked = static_cast<long long>(p - 1) * p;
        r.failures = collect(r.params_checked, jobs, [&](long long i) -> std::optional<Failure> {
            const auto w = SerreWeight::make(p, i / p, static_cast<int>(i % p) + 1);
            const long long closed = k_min_closed(w);
            const long long scan = scanned[static_cast<std::size_t>(w.a())][static_cast<std::size_t>(w.b() - 1)];
            if (closed == scan) return std::nullopt;
            return Failure{weight_to_json(w), closed, scan};
        });
    });
}

VerificationReport check_recursion_lemma(int p, long long k_max, int jobs) {
    require_odd_prime(p);
    if (k_max < 1) throw InvalidArgument("lemma check needs k_max >= 1");
    return timed(p, Check::RecursionLemma, [&](VerificationReport& r) {
        const long long q = p - 1;
        const long long lemma_items = q * k_max;
        const long long lo = -2LL * p, hi = 4LL * p;
        r.params_checked = lemma_items + (hi - lo + 1);
        r.failures = collect(r.params_checked, jobs, [&](long long i) -> std::optional<Failure> {
            if (i < lemma_items) {
                const long long n = i / k_max + 1, k = i % k_max + 1;
                const auto lhs = sym_class(p, n + k * q);
                VirtualClass rhs = sym_class(p, n);
                rhs.add(SerreWeight::make(p, n, static_cast<int>(p - n)), 1);
                rhs += sym_class(p, n + (k - 1) * q - 2).twisted(1);
                if (lhs == rhs) return std::nullopt;
                return Failure{{{"n", n}, {"k", k}}, class_to_json(lhs), class_to_json(rhs)};
            }
            const long long n = lo + (i - lemma_items);
            const auto lhs = sym_class(p, n + p - 1) - sym_class(p, n);
            const auto rhs = (sym_class(p, n - 2) - sym_class(p, n - p - 1)).twisted(1);
            if (lhs == rhs) return std::nullopt;
            return Failure{{{"periodic_n", n}}, class_to_json(lhs), class_to_json(rhs)};
        });
    });
}

VerificationReport check_brauer(int p, long long n_max, int jobs) {
    require_odd_prime(p);
    if (n_max < 0) throw InvalidArgument("brauer check needs n_max >= 0");
    return timed(p, Check::Brauer, [&](VerificationReport& r) {
        const auto ctx = oracle::brauer_context(p);
        r.params_checked = n_max + 1;
        r.failures = collect(r.params_checked, jobs, [&](long long N) -> std::optional<Failure> {
            const auto rep = oracle::verify_decomposition(*ctx, decompose_sym(p, N), N);
            if (rep.pass()) return std::nullopt;
            return Failure{{{"N", N}}, rep.classes_checked, rep.failures};
        });
    });
}

bool SuiteReport::pass() const noexcept {
    return std::all_of(runs.begin(), runs.end(), [](const auto& r) { return r.pass(); });
}

SuiteReport run_suite(const std::vector<int>& primes, const std::vector<Check>& checks,
                      const SuiteOptions& opts) {
    for (int p : primes) require_odd_prime(p);
    if (opts.jobs < 1) throw InvalidArgument("jobs must be >= 1");
    SuiteReport out;
    for (int p : primes)
        for (Check c : checks) {
            switch (c) {
                case Check::Main: out.runs.push_back(check_main_theorem(p, opts.jobs)); break;
                case Check::BmEqualsBdj: out.runs.push_back(check_bm_equals_bdj(p, opts.jobs)); break;
                case Check::KminFormula: out.runs.push_back(check_kmin_formula(p, opts.jobs)); break;
                case Check::RecursionLemma:
                    out.runs.push_back(check_recursion_lemma(p, opts.lemma_k_max > 0 ? opts.lemma_k_max : 3LL * p,
                                                             opts.jobs));
                    break;
                case Check::Brauer:
                    if (p > opts.oracle_max_p) break;
                    out.runs.push_back(check_brauer(
                        p, opts.brauer_n_max > 0 ? opts.brauer_n_max : 3LL * p * p, opts.jobs));
                    break;
            }
        }
    return out;
}

nlohmann::json report_to_json(const VerificationReport& r, bool with_timing) {
    auto failures = nlohmann::json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"param", f.param}, {"expected", f.expected}, {"actual", f.actual}});
    nlohmann::json j = {{"p", r.p}, {"check", r.check}, {"params_checked", r.params_checked},
                        {"failures", failures}};
    if (with_timing) j["ms"] = r.ms;
    return j;
}

nlohmann::json suite_to_json(const SuiteReport& s, bool with_timing) {
    auto runs = nlohmann::json::array();
    for (const auto& r : s.runs) runs.push_back(report_to_json(r, with_timing));
    return {{"runs", runs}, {"pass", s.pass()}};
}

}  // namespace serrewt
