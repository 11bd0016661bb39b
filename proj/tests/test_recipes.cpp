#include <doctest.h>

#include <algorithm>

#include "serrewt/errors.hpp"
#include "serrewt/recipes.hpp"

using namespace serrewt;

namespace {

SerreWeight V(int p, int a, int b) { return SerreWeight::make(p, a, b); }
WeightSet set_of(int p, std::vector<SerreWeight> ws) { return WeightSet::of(p, std::move(ws)); }
InertialParam red(int p, int m, int r, Shape s, bool eq) { return InertialParam::reducible(p, m, r, s, eq); }
InertialParam irr(int p, int a, int b) { return InertialParam::irreducible(p, a, b); }

const int kPrimes[] = {3, 5, 7, 11, 13};

// Breuil-Mezard sum straight from its definition: every cell, with a_cr from
// jh_multiplicity.
std::int64_t bm_sum_by_cells(const InertialParam& x, long long k) {
    const int p = x.p();
    std::int64_t total = 0;
    for (int n = 0; n <= p - 1; ++n)
        for (int m = 0; m <= p - 2; ++m) total += jh_multiplicity(p, k, SerreWeight::sigma(p, n, m)) * kisin_mu(x, n, m);
    return total;
}

}  // namespace

TEST_CASE("serre_k examples") {
    for (int p : kPrimes) {
        CHECK(serre_k(red(p, 0, 1, Shape::Tres, true)) == p + 1);
        CHECK(serre_k(red(p, 0, 0, Shape::Split, true)) == p);
    }
    CHECK(serre_k(irr(5, 0, 3)) == 4);
    CHECK(serre_k(red(5, 3, 3, Shape::NonsplitGeneric, false)) == 14);
    CHECK(k_min_closed(V(5, 3, 3)) == 14);
    // non-split with the submodule exponent wrapping to p-1
    CHECK(serre_k(red(5, 1, 3, Shape::NonsplitGeneric, true)) == 10);
    CHECK(serre_k(red(5, 1, 3, Shape::Split, true)) == 2);
}

TEST_CASE("serre_k stays within [2, p^2-1]") {
    for (int p : kPrimes)
        for (const auto& x : enumerate_params(p)) {
            CHECK(serre_k(x) >= 2);
            CHECK(serre_k(x) <= static_cast<long long>(p) * p - 1);
        }
}

TEST_CASE("bdj_weight_set examples") {
    for (int p : kPrimes)
        for (int s = 1; s <= p - 1; ++s)
            CHECK(bdj_weight_set(irr(p, 0, s)) == set_of(p, {V(p, 0, s), V(p, s - 1, p + 1 - s)}));
    CHECK(bdj_weight_set(red(3, 0, 1, Shape::Split, true)) ==
          set_of(3, {V(3, 0, 3), V(3, 0, 1), V(3, 1, 3), V(3, 1, 1)}));
    CHECK(bdj_weight_set(red(5, 2, 1, Shape::Tres, true)) == set_of(5, {V(5, 2, 5)}));
    CHECK(bdj_weight_set(red(5, 0, 1, Shape::Split, true)) == set_of(5, {V(5, 0, 5), V(5, 0, 1), V(5, 1, 3)}));
    CHECK(bdj_weight_set(red(7, 0, 5, Shape::Split, false)) ==
          set_of(7, {V(7, 0, 5), V(7, 5, 7), V(7, 5, 1)}));
    CHECK(bdj_weight_set(red(7, 0, 3, Shape::Split, false)) == set_of(7, {V(7, 0, 3), V(7, 3, 3)}));
    CHECK(bdj_weight_set(red(7, 0, 3, Shape::NonsplitGeneric, false)) == set_of(7, {V(7, 0, 3)}));
    CHECK(bdj_weight_set(red(7, 2, 0, Shape::NonsplitGeneric, true)) == set_of(7, {V(7, 2, 6)}));
    CHECK(bdj_weight_set(red(7, 0, 1, Shape::Peu, true)) == set_of(7, {V(7, 0, 7), V(7, 0, 1)}));
}

TEST_CASE("weight sets are non-empty for every param") {
    for (int p : kPrimes)
        for (const auto& x : enumerate_params(p)) {
            CHECK(bdj_weight_set(x).size() >= 1);
            CHECK(bm_set(x).size() >= 1);
        }
}

TEST_CASE("k_min_of_set examples") {
    for (int p : kPrimes) CHECK(k_min_of_set(red(p, 0, 1, Shape::Tres, true)) == p + 1);
    CHECK(k_min_of_set(red(5, 0, 1, Shape::Split, true)) == 2);
    CHECK(k_min_of_set(irr(5, 0, 3)) == 4);
}

TEST_CASE("k_min_of_set equals the least k whose Sym^{k-2} meets W") {
    for (int p : {3, 5, 7}) {
        for (const auto& x : enumerate_params(p)) {
            const auto w = bdj_weight_set(x);
            long long first = -1;
            for (long long k = 2; first < 0; ++k)
                for (const auto& f : decompose_sym(p, k - 2))
                    if (w.contains(f.weight)) first = k;
            CHECK(first == k_min_of_set(x));
        }
    }
}

TEST_CASE("kisin_mu examples") {
    for (int p : kPrimes) {
        CHECK(kisin_mu(red(p, 0, 0, Shape::Split, true), p - 2, 0) == 4);
        CHECK(kisin_mu(red(p, 0, 0, Shape::Split, false), p - 2, 0) == 2);
        CHECK(kisin_mu(red(p, 0, 1, Shape::Tres, true), 0, 0) == 0);
        CHECK(kisin_mu(red(p, 0, 1, Shape::Tres, true), p - 1, 0) == 1);
        CHECK(kisin_mu(red(p, 0, 1, Shape::Peu, true), p - 1, 0) == 2);
        CHECK(kisin_mu(red(p, 0, 1, Shape::Split, true), p - 1, 0) == 2);
        CHECK(kisin_mu(red(p, 0, 1, Shape::NonsplitGeneric, false), p - 1, 0) == 1);
        CHECK(kisin_mu(red(p, 0, 1, Shape::Tres, true), 1, 1) == 0);
    }
    CHECK(kisin_mu(irr(5, 0, 3), 2, 0) == 1);
    CHECK(kisin_mu(irr(5, 0, 3), 2, 1) == 0);
    CHECK_THROWS_AS(kisin_mu(irr(5, 0, 3), 5, 0), InvalidArgument);
    CHECK_THROWS_AS(kisin_mu(irr(5, 0, 3), 0, 4), InvalidArgument);
    CHECK_THROWS_AS(kisin_mu(irr(5, 0, 3), -1, 0), InvalidArgument);
}

TEST_CASE("irreducible cells never hit a level-one exponent") {
    for (int p : kPrimes)
        for (int n = 0; n <= p - 1; ++n)
            for (int m = 0; m <= p - 2; ++m)
                CHECK_NOTHROW(normalize_level2(p, static_cast<long long>(m) * (p + 1) + n + 1));
}

TEST_CASE("mu value profile") {
    for (int p : kPrimes)
        for (const auto& x : enumerate_params(p)) {
            const MuTable mu(x);
            for (int n = 0; n <= p - 1; ++n)
                for (int m = 0; m <= p - 2; ++m) {
                    const int v = mu.at(n, m);
                    CHECK((v == 0 || v == 1 || v == 2 || v == 4));
                    if (v == 4) {
                        REQUIRE_FALSE(x.is_irreducible());
                        CHECK(n == p - 2);
                        CHECK(x.red().shape == Shape::Split);
                        CHECK(x.red().lambda_equal);
                    }
                    if (v == 2) {
                        REQUIRE_FALSE(x.is_irreducible());
                        const auto& r = x.red();
                        const bool case1 = n == p - 1 && r.lambda_equal &&
                                           (r.shape == Shape::Split || r.shape == Shape::Peu);
                        const bool case3 = n == p - 2 && r.shape == Shape::Split && !r.lambda_equal;
                        CHECK((case1 || case3));
                    }
                    CHECK(v == kisin_mu(x, n, m));
                }
        }
}

TEST_CASE("bm_set examples") {
    for (int p : kPrimes) {
        for (int s = 1; s <= p - 1; ++s)
            CHECK(bm_set(irr(p, 0, s)) == set_of(p, {V(p, 0, s), V(p, s - 1, p + 1 - s)}));
        CHECK(bm_set(red(p, 0, 1, Shape::Tres, true)) == set_of(p, {V(p, 0, p)}));
    }
    CHECK(bm_set(red(3, 0, 1, Shape::Split, true)) == set_of(3, {V(3, 0, 1), V(3, 0, 3), V(3, 1, 1), V(3, 1, 3)}));
}

TEST_CASE("bm_multiplicity examples and definitional sum") {
    CHECK(bm_multiplicity(red(5, 0, 1, Shape::Split, false), 2) == 1);
    for (int p : kPrimes) CHECK(bm_multiplicity(red(p, 0, 1, Shape::Tres, true), 2) == 0);
    CHECK_THROWS_AS(bm_multiplicity(irr(5, 0, 3), 1), InvalidArgument);

    for (int p : {3, 5}) {
        for (const auto& x : enumerate_params(p)) {
            const auto b = bm_set(x);
            for (long long k = 2; k <= static_cast<long long>(p) * p; ++k) {
                const auto s = bm_multiplicity(x, k);
                CHECK(s == bm_sum_by_cells(x, k));
                bool meets = false;
                for (const auto& f : decompose_sym(p, k - 2)) meets = meets || b.contains(f.weight);
                CHECK((s > 0) == meets);
            }
        }
    }
}

TEST_CASE("k_cris examples") {
    for (int p : kPrimes) {
        CHECK(k_cris(red(p, 0, 1, Shape::Split, false)) == 2);
        CHECK(k_cris(red(p, 0, 1, Shape::Tres, true)) == p + 1);
    }
    CHECK(k_cris(irr(5, 0, 3)) == 4);
}

TEST_CASE("k_cris equals the least k_min_closed over B, and the table scan agrees") {
    for (int p : {3, 5, 7}) {
        const SymPowerTable table(p, static_cast<long long>(p) * p - 2);
        for (const auto& x : enumerate_params(p)) {
            const auto b = bm_set(x);
            long long best = k_min_closed(b.weights.front());
            for (const auto& w : b.weights) best = std::min(best, k_min_closed(w));
            CHECK(k_cris(x) == best);
            CHECK(k_cris(x, MuTable(x), table) == best);
        }
    }
    const SymPowerTable short_table(5, 10);
    const auto x = irr(5, 0, 3);
    CHECK_THROWS_AS(k_cris(x, MuTable(x), short_table), InvalidArgument);
}

TEST_CASE("main theorem and weight-set equality on small primes") {
    for (int p : kPrimes)
        for (const auto& x : enumerate_params(p)) {
            INFO(describe(x), " p=", p);
            CHECK(serre_k(x) == k_min_of_set(x));
            CHECK(k_min_of_set(x) == k_cris(x));
            CHECK(bm_set(x) == bdj_weight_set(x));
        }
}

TEST_CASE("twist equivariance of both weight-set recipes") {
    for (int p : {3, 5, 7, 11})
        for (const auto& x : enumerate_params(p))
            for (int t = 0; t <= p - 1; ++t) {
                const auto y = param_twist(x, t);
                CHECK(bdj_weight_set(y) == bdj_weight_set(x).twisted(t));
                CHECK(bm_set(y) == bm_set(x).twisted(t));
            }
}

TEST_CASE("k_min_of_set is attained by a constituent of Sym^{k-2}") {
    for (int p : {3, 5, 7, 11})
        for (const auto& x : enumerate_params(p)) {
            const long long k = k_min_of_set(x);
            const auto w = bdj_weight_set(x);
            CHECK(std::any_of(w.weights.begin(), w.weights.end(), [&](const SerreWeight& v) {
                return k_min_closed(v) == k && jh_multiplicity(p, k, v) > 0;
            }));
        }
}

TEST_CASE("peu value is reproduced by the generic formula for non-split r = 1") {
    for (int p : kPrimes)
        for (int m = 0; m <= p - 2; ++m) {
            const long long expected = static_cast<long long>(m) * (p + 1) + 2;
            CHECK(serre_k(red(p, m, 1, Shape::Peu, true)) == expected);
            CHECK(serre_k(red(p, m, 1, Shape::NonsplitGeneric, false)) == expected);
        }
}

TEST_CASE("minimal Serre weights are not unique") {
    for (int p : {5, 7, 11, 13}) {
        int cases = 0;
        for (int m = 1; m <= p - 2; ++m)
            for (int r = 2; r < p - 2; ++r) {
                if (m + r > p - 2) continue;
                for (bool eq : {true, false}) {
                    const auto x = red(p, m, r, Shape::Split, eq);
                    const auto w = bdj_weight_set(x);
                    REQUIRE(w.size() == 2);
                    CHECK(k_min_closed(w.weights[0]) == k_min_of_set(x));
                    CHECK(k_min_closed(w.weights[1]) == k_min_of_set(x));
                    ++cases;
                }
            }
        if (p >= 7) CHECK(cases > 0);
    }
}

TEST_CASE("result JSON") {
    const auto j = result_to_json(irr(5, 0, 3));
    CHECK(j["k_serre"] == 4);
    CHECK(j["k_min"] == 4);
    CHECK(j["k_cris"] == 4);
    CHECK(j["W"].dump() == R"([{"a":0,"b":3},{"a":2,"b":3}])");
    CHECK(j["B"] == j["W"]);
    CHECK(parse_param(j["param"].dump()) == irr(5, 0, 3));
    CHECK(j["mu_nonzero"].size() == 2);
}
