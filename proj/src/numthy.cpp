#include "settop/numthy.hpp"

#include <stdexcept>
#include <string>

namespace settop {

namespace {

void require_positive(int i, const char* what) {
    if (i < 1)
        throw std::invalid_argument(std::string(what) + ": argument must be >= 1, got " +
                                    std::to_string(i));
}

} // namespace

PrimeSieve::PrimeSieve(int limit) : limit_(limit) {
    require_positive(limit, "sieve");
    table_.assign(static_cast<std::size_t>(limit) + 1, true);
    table_[0] = false;
    table_[1] = false;
    for (long long p = 2; p * p <= limit; ++p) {
        if (!table_[p])
            continue;
        for (long long q = p * p; q <= limit; q += p)
            table_[q] = false;
    }
    for (int i = 2; i <= limit; ++i)
        if (table_[i])
            primes_.push_back(i);
}

bool PrimeSieve::is_prime(int i) const {
    if (i < 0 || i > limit_)
        throw std::out_of_range("PrimeSieve::is_prime: " + std::to_string(i) +
                                " outside [0, " + std::to_string(limit_) + "]");
    return table_[i];
}

PrimeSieve sieve(int limit) { return PrimeSieve(limit); }

int divisor_count(int i) {
    require_positive(i, "divisor_count");
    int count = 1;
    for (int p = 2; p * p <= i; ++p) {
        int e = 0;
        while (i % p == 0) {
            i /= p;
            ++e;
        }
        count *= e + 1;
    }
    if (i > 1)
        count *= 2;
    return count;
}

int totient(int i) {
    require_positive(i, "totient");
    int result = i;
    for (int p = 2; p * p <= i; ++p) {
        if (i % p != 0)
            continue;
        while (i % p == 0)
            i /= p;
        result -= result / p;
    }
    if (i > 1)
        result -= result / i;
    return result;
}

std::vector<int> prime_support(int i) {
    require_positive(i, "prime_support");
    std::vector<int> primes;
    for (int p = 2; p * p <= i; ++p) {
        if (i % p != 0)
            continue;
        primes.push_back(p);
        while (i % p == 0)
            i /= p;
    }
    if (i > 1)
        primes.push_back(i);
    return primes;
}

bool is_squarefree(int i) {
    require_positive(i, "is_squarefree");
    for (int p = 2; p * p <= i; ++p) {
        if (i % p != 0)
            continue;
        i /= p;
        if (i % p == 0)
            return false;
    }
    return true;
}

int chebyshev_count(int n) {
    if (n < 2)
        throw std::invalid_argument("chebyshev_count: n must be >= 2");
    PrimeSieve s(n);
    int count = 0;
    for (int p : s.primes())
        if (2 * p > n)
            ++count;
    return count;
}

int largest_prime_le(int n) {
    if (n < 2)
        throw std::invalid_argument("largest_prime_le: n must be >= 2");
    return PrimeSieve(n).primes().back();
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace settop
