#include "serrewt/recipes.hpp"

#include <algorithm>
#include <string>

#include "serrewt/errors.hpp"

namespace serrewt {

namespace {

int reduce(long long x, long long mod) {
    long long r = x % mod;
    return static_cast<int>(r < 0 ? r + mod : r);
}

void check_cell(int p, int n, int m) {
    if (n < 0 || n > p - 1 || m < 0 || m > p - 2)
        throw InvalidArgument("cell (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                              ") outside [0,p-1] x [0,p-2]");
}

// Table rows for the reducible case before the twist by w^m. `bb` is the
// ratio exponent taken in [1, p-1].
std::vector<std::pair<int, int>> bdj_reducible_rows(int p, int bb, Shape shape) {
    const bool split = shape == Shape::Split;
    if (1 < bb && bb < p - 1 && !split) return {{0, bb}};
    if (1 < bb && bb < p - 2 && split) return {{0, bb}, {bb, p - 1 - bb}};
    if (bb == p - 2 && split && p > 3) return {{0, p - 2}, {p - 2, p}, {p - 2, 1}};
    if (bb == p - 1) return {{0, p - 1}};
    if (bb == 1 && shape == Shape::Tres) return {{0, p}};
    if (bb == 1 && split && p > 3) return {{0, p}, {0, 1}, {1, p - 2}};
    if (bb == 1 && split && p == 3) return {{0, 3}, {0, 1}, {1, 3}, {1, 1}};
    if (bb == 1) return {{0, p}, {0, 1}};
    throw InternalError("no BDJ row for ratio " + std::to_string(bb));
}

// Does w^m (x) (w^{n+1} mu_lambda, *; 0, mu_lambda') present the reducible
// record? Non-split records admit only their own ordering; split ones may
// also be read with the two characters swapped.
bool reducible_cell_matches(const Reducible& r, int n, int m) {
    const int q = r.p - 1;
    const bool direct = m == r.twist && reduce(n + 1 - r.ratio, q) == 0;
    if (direct || r.shape != Shape::Split) return direct;
    return m == reduce(r.twist + r.ratio, q) && reduce(n + 1 + r.ratio, q) == 0;
}

}  // namespace

// ---------------------------------------------------------------------------

WeightSet WeightSet::of(int p, std::vector<SerreWeight> ws) {
    for (const auto& w : ws)
        if (w.p() != p) throw InvalidArgument("weight set mixes primes");
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return WeightSet{p, std::move(ws)};
}

bool WeightSet::contains(const SerreWeight& w) const {
    return std::binary_search(weights.begin(), weights.end(), w);
}

WeightSet WeightSet::twisted(long long t) const {
    std::vector<SerreWeight> out;
    out.reserve(weights.size());
    for (const auto& w : weights) out.push_back(twist_weight(w, t));
    return of(p, std::move(out));
}

MuTable::MuTable(const InertialParam& x) : p_(x.p()) {
    entries_.resize(static_cast<std::size_t>(p_) * (p_ - 1));
    for (int n = 0; n <= p_ - 1; ++n)
        for (int m = 0; m <= p_ - 2; ++m) entries_[n * (p_ - 1) + m] = kisin_mu(x, n, m);
}

int MuTable::at(int n, int m) const {
    check_cell(p_, n, m);
    return entries_[n * (p_ - 1) + m];
}

// ---------------------------------------------------------------------------
// Serre

long long serre_k(const InertialParam& x) {
    const long long p = x.p();
    if (x.is_irreducible()) return p * x.irr().a + x.irr().b + 1;

    const auto& r = x.red();
    const long long alpha = r.twist;
    switch (r.shape) {
        case Shape::Tres:
            return p + 1 + alpha * (p + 1);
        case Shape::Peu:
            return 2 + alpha * (p + 1);
        case Shape::Split: {
            // Wild inertia trivial: both exponents taken in [0, p-2].
            const long long other = reduce(r.twist + r.ratio, p - 1);
            const long long a = std::min(alpha, other), b = std::max(alpha, other);
            if (a == 0 && b == 0) return p;
            return p * a + b + 1;
        }
        case Shape::NonsplitGeneric: {
            // Wild inertia non-trivial: the submodule exponent beta lies in [1, p-1].
            long long beta = reduce(r.twist + r.ratio, p - 1);
            if (beta == 0) beta = p - 1;
            const long long a = std::min(alpha, beta), b = std::max(alpha, beta);
            return p * a + b + 1;
        }
    }
    throw InternalError("unhandled shape in serre_k");
}

// ---------------------------------------------------------------------------
// BDJ

WeightSet bdj_weight_set(const InertialParam& x) {
    const int p = x.p();
    std::vector<SerreWeight> ws;
    if (x.is_irreducible()) {
        const auto& i = x.irr();
        const int s = i.b - i.a;
        ws.push_back(SerreWeight::make(p, i.a, s));
        ws.push_back(SerreWeight::make(p, i.a + s - 1, p + 1 - s));
    } else {
        const auto& r = x.red();
        const int bb = r.ratio >= 1 ? r.ratio : p - 1;
        for (const auto& [a, b] : bdj_reducible_rows(p, bb, r.shape))
            ws.push_back(SerreWeight::make(p, a + r.twist, b));
    }
    return WeightSet::of(p, std::move(ws));
}

long long k_min_of_set(const InertialParam& x) {
    const auto set = bdj_weight_set(x);
    long long best = k_min_closed(set.weights.front());
    for (const auto& w : set.weights) best = std::min(best, k_min_closed(w));
    return best;
}

// ---------------------------------------------------------------------------
// Kisin

int kisin_mu(const InertialParam& x, int n, int m) {
    const int p = x.p();
    check_cell(p, n, m);

    if (x.is_irreducible()) {
        // n+1 lies in [1, p], so the cell exponent is never divisible by p+1.
        const auto cell = normalize_level2(p, static_cast<long long>(m) * (p + 1) + n + 1);
        return cell == Level2Pair{x.irr().a, x.irr().b} ? 1 : 0;
    }

    const auto& r = x.red();
    if (!reducible_cell_matches(r, n, m)) return 0;
    if (n == p - 1 && r.lambda_equal && (r.shape == Shape::Split || r.shape == Shape::Peu))
        return 2;
    if (n == 0 && r.lambda_equal && r.shape == Shape::Tres) return 0;
    if (n == p - 2 && r.shape == Shape::Split) return r.lambda_equal ? 4 : 2;
    return 1;
}

WeightSet bm_set(const InertialParam& x) {
    const int p = x.p();
    std::vector<SerreWeight> ws;
    for (int n = 0; n <= p - 1; ++n)
        for (int m = 0; m <= p - 2; ++m)
            if (kisin_mu(x, n, m) > 0) ws.push_back(SerreWeight::sigma(p, n, m));
    return WeightSet::of(p, std::move(ws));
}

std::int64_t bm_multiplicity(const MuTable& mu, const Decomposition& sym) {
    std::int64_t total = 0;
    for (const auto& f : sym) total += f.mult * mu.at(f.weight);
    return total;
}

std::int64_t bm_multiplicity(const InertialParam& x, long long k) {
    if (k < 2) throw InvalidArgument("weight k must be >= 2, got " + std::to_string(k));
    return bm_multiplicity(MuTable(x), decompose_sym(x.p(), k - 2));
}

long long k_cris(const InertialParam& x, const MuTable& mu, const SymPowerTable& table) {
    const long long p = x.p();
    if (table.p() != p || mu.p() != p) throw InvalidArgument("k_cris: prime mismatch");
    const long long bound = p * p;
    if (table.max_n() < bound - 2) throw InvalidArgument("k_cris: table too short");
    for (long long k = 2; k <= bound; ++k)
        if (bm_multiplicity(mu, table.at(k - 2)) > 0) return k;
    throw InternalError("k_cris scan exhausted p^2 for " + describe(x));
}

long long k_cris(const InertialParam& x) {
    const long long p = x.p();
    const MuTable mu(x);
    for (long long k = 2; k <= p * p; ++k)
        if (bm_multiplicity(mu, decompose_sym(x.p(), k - 2)) > 0) return k;
    throw InternalError("k_cris scan exhausted p^2 for " + describe(x));
}

// ---------------------------------------------------------------------------

nlohmann::json weight_set_to_json(const WeightSet& s) {
    auto arr = nlohmann::json::array();
    for (const auto& w : s.weights) arr.push_back(weight_to_json(w));
    return arr;
}

nlohmann::json result_to_json(const InertialParam& x) {
    const int p = x.p();
    const MuTable mu(x);
    auto nonzero = nlohmann::json::array();
    for (int n = 0; n <= p - 1; ++n)
        for (int m = 0; m <= p - 2; ++m)
            if (const int v = mu.at(n, m); v != 0) nonzero.push_back({{"n", n}, {"m", m}, {"mu", v}});
    return {{"param", param_to_json(x)},
            {"k_serre", serre_k(x)},
            {"k_min", k_min_of_set(x)},
            {"k_cris", k_cris(x)},
            {"W", weight_set_to_json(bdj_weight_set(x))},
            {"B", weight_set_to_json(bm_set(x))},
            {"mu_nonzero", nonzero}};
}

}  // namespace serrewt
