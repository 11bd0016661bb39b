#include "serrewt/errors.hpp"

#include <vector>

namespace serrewt {

namespace {

constexpr long long kMaxPrime = 46337;  // largest prime with p^2 < 2^31

const std::vector<bool>& small_prime_sieve() {
    static const std::vector<bool> sieve = [] {
        std::vector<bool> s(kMaxPrime + 1, true);
        s[0] = s[1] = false;
        for (long long i = 2; i * i <= kMaxPrime; ++i)
            if (s[i])
                for (long long j = i * i; j <= kMaxPrime; j += i) s[j] = false;
        return s;
    }();
    return sieve;
}

}  // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n <= kMaxPrime) return small_prime_sieve()[static_cast<std::size_t>(n)];
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_odd_prime(int p) {
    if (p == 2) throw UnsupportedPrime("p = 2 is not supported; only odd primes are");
    if (!is_prime(p)) throw UnsupportedPrime("not a prime: " + std::to_string(p));
    if (p > kMaxPrime) throw UnsupportedPrime("prime too large: " + std::to_string(p));
}

}  // namespace serrewt
