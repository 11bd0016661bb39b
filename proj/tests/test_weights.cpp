#include <doctest.h>

#include <map>

#include "serrewt/errors.hpp"
#include "serrewt/weights.hpp"

using namespace serrewt;

namespace {

SerreWeight V(int p, int a, int b) { return SerreWeight::make(p, a, b); }

const int kTestPrimes[] = {3, 5, 7, 11, 13};

// Independent route to [Sym^N]: only Serre's periodic relation
//   [S_{n+p-1}] = [S_n] + det (x) ([S_{n-2}] - [S_{n-p-1}]),
// seeded with the irreducible S_0..S_{p-2}, [S_{-1}] = 0 and the negative
// convention for S_{-2}..S_{-p-1}.
class PeriodicRoute {
public:
    explicit PeriodicRoute(int p) : p_(p) {}

    VirtualClass at(long long n) {
        if (auto it = memo_.find(n); it != memo_.end()) return it->second;
        VirtualClass v(p_);
        if (n >= 0 && n <= p_ - 2) {
            v.add(SerreWeight::make(p_, 0, static_cast<int>(n) + 1), 1);
        } else if (n == -1) {
        } else if (n < -1 && n >= -p_ - 1) {
            v.add(SerreWeight::make(p_, n + 1, static_cast<int>(-n - 2) + 1), -1);
        } else if (n >= p_ - 1) {
            const long long m = n - (p_ - 1);
            v = at(m) + (at(m - 2) - at(m - p_ - 1)).twisted(1);
        } else {
            throw std::logic_error("periodic route below -p-1 not needed");
        }
        memo_.emplace(n, v);
        return v;
    }

private:
    int p_;
    std::map<long long, VirtualClass> memo_;
};

}  // namespace

TEST_CASE("weight_dim and the central character") {
    CHECK(weight_dim(V(5, 0, 1)) == 1);
    CHECK(weight_dim(V(5, 2, 5)) == 5);
    CHECK(weight_dim(V(7, 3, 4)) == 4);
    CHECK(V(7, 3, 4).central_exponent() == (2 * 3 + 4 - 1) % 6);
}

TEST_CASE("SerreWeight validation") {
    CHECK_THROWS_AS(V(5, 0, 0), InvalidArgument);
    CHECK_THROWS_AS(V(5, 0, 6), InvalidArgument);
    CHECK_THROWS_AS(V(2, 0, 1), UnsupportedPrime);
    CHECK_THROWS_AS(V(9, 0, 1), UnsupportedPrime);
    // twist exponents are canonicalized mod p-1
    CHECK(V(5, 6, 3) == V(5, 2, 3));
    CHECK(V(5, -1, 3) == V(5, 3, 3));
    CHECK(SerreWeight::sigma(5, 3, 2) == V(5, 2, 4));
}

TEST_CASE("twist_weight") {
    CHECK(twist_weight(V(5, 1, 2), 1) == V(5, 2, 2));
    CHECK(twist_weight(V(5, 3, 4), 2) == V(5, 1, 4));
    CHECK(twist_weight(V(7, 2, 5), 6) == V(7, 2, 5));
    CHECK(twist_weight(V(7, 2, 5), -8) == V(7, 0, 5));
}

TEST_CASE("sym_class on small and negative indices") {
    CHECK(sym_class(5, -1).is_zero());

    VirtualClass s2(5);
    s2.add(V(5, 0, 3), 1);
    CHECK(sym_class(5, 2) == s2);

    // -[det^{-2} (x) Sym^1] and det^{-2} = det^2 when p-1 = 4.
    VirtualClass sm3(5);
    sm3.add(V(5, 2, 2), -1);
    CHECK(sym_class(5, -3) == sm3);

    // The periodic relation at n = -1 pins [S_{-3}] down.
    const auto lhs = sym_class(5, 3) - sym_class(5, -1);
    const auto rhs = (sym_class(5, -3) - sym_class(5, -7)).twisted(1);
    CHECK(lhs == rhs);
}

TEST_CASE("decompose_sym examples") {
    CHECK(decompose_sym(5, 5) == Decomposition{{V(5, 0, 2), 1}, {V(5, 1, 4), 1}});
    CHECK(decompose_sym(7, 3) == Decomposition{{V(7, 0, 4), 1}});
    // V_{2,1} at p=3 is V_{0,1} after reducing the twist mod 2.
    const auto d = decompose_sym(3, 4);
    CHECK(d == Decomposition{{V(3, 0, 1), 1}, {V(3, 0, 3), 1}, {V(3, 1, 1), 1}});
    long long dim = 0;
    for (const auto& f : d) dim += f.mult * f.weight.dim();
    CHECK(dim == 5);
    CHECK_THROWS_AS(decompose_sym(5, -1), InvalidArgument);
}

TEST_CASE("jh_multiplicity") {
    CHECK(jh_multiplicity(5, 7, V(5, 0, 2)) == 1);
    CHECK(jh_multiplicity(5, 7, V(5, 0, 5)) == 0);
    CHECK(jh_multiplicity(5, 3, V(5, 0, 2)) == 1);
    CHECK_THROWS_AS(jh_multiplicity(5, 1, V(5, 0, 2)), InvalidArgument);
}

TEST_CASE("k_min_closed anchored values") {
    for (int p : kTestPrimes) {
        for (int b = 1; b <= p; ++b) CHECK(k_min_closed(V(p, 0, b)) == b + 1);
        for (int a = 1; a <= p - 2; ++a) CHECK(k_min_closed(V(p, a, p - a)) == a + p + 1);
    }
    // scan Sym^{k-2} for k = 2..24 directly
    long long first = -1;
    for (long long k = 2; k <= 24 && first < 0; ++k)
        if (jh_multiplicity(5, k, V(5, 1, 2)) > 0) first = k;
    CHECK(first == 9);
    CHECK(k_min_closed(V(5, 1, 2)) == 9);
}

TEST_CASE("k_min_closed equals the least k containing the weight, on the full grid") {
    for (int p : {3, 5, 7, 11}) {
        std::map<SerreWeight, long long> first;
        for (long long k = 2; k <= static_cast<long long>(p) * p; ++k)
            for (const auto& f : decompose_sym(p, k - 2)) first.try_emplace(f.weight, k);
        for (int a = 0; a <= p - 2; ++a)
            for (int b = 1; b <= p; ++b) {
                const auto w = V(p, a, b);
                REQUIRE(first.contains(w));
                CHECK(first[w] == k_min_closed(w));
                CHECK(k_min_closed(w) >= 2);
                CHECK(k_min_closed(w) <= static_cast<long long>(p) * p - 1);
                CHECK((k_min_closed(w) - (2 * a + b + 1)) % (p - 1) == 0);
            }
    }
}

TEST_CASE("dimension conservation, central character and effectivity") {
    for (int p : kTestPrimes) {
        for (long long N = 0; N <= 5LL * p * p; ++N) {
            const auto d = decompose_sym(p, N);
            long long dim = 0;
            for (const auto& f : d) {
                CHECK(f.mult >= 1);
                dim += f.mult * f.weight.dim();
                CHECK((f.weight.central_exponent() - N) % (p - 1) == 0);
            }
            CHECK(dim == N + 1);
        }
    }
}

TEST_CASE("decompose_sym agrees with the periodic-relation route") {
    for (int p : kTestPrimes) {
        PeriodicRoute route(p);
        for (long long N = 0; N <= 3LL * p * p; ++N) CHECK(to_class(p, decompose_sym(p, N)) == route.at(N));
    }
}

TEST_CASE("periodic relation on all of [-2p, 4p]") {
    for (int p : kTestPrimes)
        for (long long n = -2LL * p; n <= 4LL * p; ++n) {
            const auto lhs = sym_class(p, n + p - 1) - sym_class(p, n);
            const auto rhs = (sym_class(p, n - 2) - sym_class(p, n - p - 1)).twisted(1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("recursion lemma") {
    for (int p : kTestPrimes)
        for (int n = 1; n <= p - 1; ++n)
            for (long long k = 1; k <= 3LL * p; ++k) {
                VirtualClass rhs = sym_class(p, n);
                rhs.add(V(p, n, p - n), 1);
                rhs += sym_class(p, n + (k - 1) * (p - 1) - 2).twisted(1);
                CHECK(sym_class(p, n + k * (p - 1)) == rhs);
            }
}

TEST_CASE("VirtualClass arithmetic") {
    VirtualClass v(5);
    v.add(V(5, 1, 2), 3);
    v.add(V(5, 1, 2), -3);
    CHECK(v.is_zero());
    v.add(V(5, 0, 1), 2);
    v.add(V(5, 2, 3), -1);
    CHECK_FALSE(v.is_effective());
    CHECK(v.dimension() == 2 - 3);
    CHECK((v - v).is_zero());
    CHECK((-v).coeff(V(5, 2, 3)) == 1);
    CHECK(v.twisted(4) == v);
    CHECK_THROWS_AS(v.add(V(7, 0, 1), 1), InvalidArgument);
}

TEST_CASE("JSON ordering is lexicographic in (a,b)") {
    VirtualClass v(5);
    v.add(V(5, 3, 1), 1);
    v.add(V(5, 0, 4), -2);
    v.add(V(5, 0, 2), 1);
    CHECK(class_to_json(v).dump() ==
          R"([{"a":0,"b":2,"mult":1},{"a":0,"b":4,"mult":-2},{"a":3,"b":1,"mult":1}])");
    CHECK(decomposition_to_json(decompose_sym(5, 5)).dump() == R"([{"a":0,"b":2,"mult":1},{"a":1,"b":4,"mult":1}])");
    CHECK(weight_from_json(5, weight_to_json(V(5, 3, 2))) == V(5, 3, 2));
    CHECK_THROWS_AS(weight_from_json(5, nlohmann::json{{"a", 4}, {"b", 1}}), InvalidArgument);
}

TEST_CASE("SymPowerTable matches decompose_sym") {
    const SymPowerTable t(7, 60);
    CHECK(t.max_n() == 60);
    for (long long N = 0; N <= 60; ++N) CHECK(t.at(N) == decompose_sym(7, N));
    CHECK_THROWS_AS(t.at(61), std::out_of_range);
}
