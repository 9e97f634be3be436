#pragma once

#include <cstdint>
#include <vector>

namespace settop {

/// Primality table over [0, limit], built with the sieve of Eratosthenes.
class PrimeSieve {
public:
    explicit PrimeSieve(int limit);

    int limit() const { return limit_; }
    bool is_prime(int i) const;
    /// Primes in ascending order.
    const std::vector<int>& primes() const { return primes_; }

    friend bool operator==(const PrimeSieve& a, const PrimeSieve& b) {
        return a.limit_ == b.limit_ && a.table_ == b.table_;
    }

private:
    int limit_;
    std::vector<bool> table_;
    std::vector<int> primes_;
};

PrimeSieve sieve(int limit);

int divisor_count(int i);
int totient(int i);

/// Distinct prime divisors of i in ascending order; empty for i = 1.
std::vector<int> prime_support(int i);

bool is_squarefree(int i);

/// Number of primes p with n/2 < p <= n.
int chebyshev_count(int n);

int largest_prime_le(int n);

std::int64_t binomial(int n, int k);

} // namespace settop
