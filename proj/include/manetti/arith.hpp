#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace manetti {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// An argument violated a documented precondition.
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency assertion failed; either a bug or a violated
/// mathematical expectation worth halting on.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Input is mathematically fine but outside the range this implementation
/// handles exactly (e.g. an order whose factorization is out of reach).
struct unsupported_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int gcd_of(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw invalid_input("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

/// Floor of the k-th root, k >= 1.
inline Int kth_root_floor(const Int& n, unsigned k) {
    if (n < 0 || k == 0) throw invalid_input("kth_root_floor: bad arguments");
    if (n <= 1 || k == 1) return n;
    if (k == 2) return isqrt_floor(n);
    Int lo = 1, hi = 2;
    while (boost::multiprecision::pow(hi, k) <= n) hi <<= 1;
    while (lo + 1 < hi) {
        Int mid = (lo + hi) >> 1;
        if (boost::multiprecision::pow(mid, k) <= n) lo = mid;
        else hi = mid;
    }
    return lo;
}

namespace detail {

// Extended gcd on native integers; valid while intermediates fit (callers
// restrict the modulus to < 2^31 before using this path).
inline std::int64_t egcd_i64(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    x = x0; y = y0;
    return a;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline bool miller_rabin_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic for all 64-bit integers with this base set.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace detail

/// Inverse of a modulo n (n >= 1). For n == 1 returns 0.
/// Throws invalid_input if gcd(a, n) != 1.
inline Int mod_inverse(Int a, const Int& n) {
    if (n < 1) throw invalid_input("mod_inverse: modulus must be positive");
    if (n == 1) return 0;
    a %= n;
    if (a < 0) a += n;
    if (n < (Int(1) << 31)) {
        std::int64_t x, y;
        std::int64_t g = detail::egcd_i64(static_cast<std::int64_t>(a), static_cast<std::int64_t>(n), x, y);
        if (g != 1) throw invalid_input("mod_inverse: arguments are not coprime");
        std::int64_t nn = static_cast<std::int64_t>(n);
        x %= nn;
        if (x < 0) x += nn;
        return Int(x);
    }
    Int old_r = a, r = n, old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    if (old_r != 1) throw invalid_input("mod_inverse: arguments are not coprime");
    old_s %= n;
    if (old_s < 0) old_s += n;
    return old_s;
}

/// Primality test: deterministic for n < 2^64, strong probable-prime with
/// twelve fixed bases (deterministic below 3.3e24) above that.
inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        return detail::miller_rabin_u64(static_cast<std::uint64_t>(n));
    }
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> table = [] {
        constexpr std::uint32_t limit = 1u << 16;
        std::vector<bool> composite(limit, false);
        std::vector<std::uint32_t> primes;
        for (std::uint32_t i = 2; i < limit; ++i) {
            if (composite[i]) continue;
            primes.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < limit; j += i)
                composite[static_cast<std::size_t>(j)] = true;
        }
        return primes;
    }();
    return table;
}

struct PrimePower {
    Int prime;
    int exp = 0;
};

/// Complete factorization. Trial division over the sieve table, then
/// Miller-Rabin and perfect-power extraction on the cofactor; throws
/// unsupported_input if the cofactor resists both.
inline std::vector<PrimePower> factorize(Int n) {
    if (n < 1) throw invalid_input("factorize: argument must be positive");
    std::vector<PrimePower> out;
    bool cofactor_is_prime = false;
    for (std::uint32_t p : small_primes()) {
        if (Int(p) * p > n) { cofactor_is_prime = true; break; }
        if (n % p == 0) {
            int e = 0;
            do { n /= p; ++e; } while (n % p == 0);
            out.push_back({Int(p), e});
        }
    }
    if (n == 1) return out;
    if (cofactor_is_prime || is_probable_prime(n)) {
        out.push_back({n, 1});
        return out;
    }
    unsigned maxk = static_cast<unsigned>(boost::multiprecision::msb(n)) / 16 + 1;
    for (unsigned k = 2; k <= maxk; ++k) {
        Int r = kth_root_floor(n, k);
        if (boost::multiprecision::pow(r, k) == n) {
            auto sub = factorize(r);
            for (auto& pp : sub) pp.exp *= static_cast<int>(k);
            for (auto& pp : sub) out.push_back(pp);
            return out;
        }
    }
    throw unsupported_input("factorize: cannot completely factor " + n.str());
}

/// All m >= 1 with m^2 | n, ascending.
inline std::vector<Int> square_divisor_roots(const Int& n) {
    auto factors = factorize(n);
    std::vector<Int> roots{1};
    for (const auto& pp : factors) {
        int half = pp.exp / 2;
        if (half == 0) continue;
        std::size_t base = roots.size();
        Int pk = 1;
        for (int j = 1; j <= half; ++j) {
            pk *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) roots.push_back(roots[i] * pk);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace manetti
