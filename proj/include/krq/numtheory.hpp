#pragma once

#include "krq/exact.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace krq {

/// `Proved` verdicts are exact (deterministic Miller-Rabin below 2^64);
/// `Probable` verdicts come from a strong probable-prime test above that.
enum class Certainty { Proved, Probable };

std::string_view to_string(Certainty c);

struct PrimalityVerdict {
    bool prime;
    Certainty certainty;

    explicit operator bool() const { return prime; }
};

/// Deterministic for every 64-bit input.
bool is_prime_u64(std::uint64_t m);

/// Requires m >= 0. Exact below 2^64, Baillie-PSW plus Miller-Rabin above.
PrimalityVerdict is_prime(const Integer& m);

struct PrimePower {
    Integer prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of m >= 1, ascending by prime. Trial division handles
/// every cofactor up to 10^12; larger composites are split by Pollard-Brent rho.
std::vector<PrimePower> factorize(const Integer& m);

/// All odd divisors of an even two_n >= 2, ascending.
std::vector<Integer> odd_divisors(const Integer& two_n);

struct PsiBeta {
    Integer n;
    Integer psi;
    Rational beta;
};

/// psi(n) = min(2^(h+1), least odd prime factor) and
/// beta(n) = (2n/psi - psi - 1)/2 for n = 2^h * (odd part > 1);
/// psi = 0 and beta = -n when n is a power of two. Requires n >= 1.
PsiBeta psi_beta(const Integer& n);

/// n = 2^(h-1) * p with p an odd prime; k = 2^h - p, so n = p (p + k) / 2.
struct PhiDecomposition {
    Integer n;
    std::int64_t h;
    Integer p;
    Integer k;
    Certainty certainty;
};

/// The decomposition when the odd part of n (n >= 1) is an odd prime.
std::optional<PhiDecomposition> phi_decompose(const Integer& n);

/// Members of E_k with 1 <= h <= limit_h, ascending in h. Even k has none.
std::vector<PhiDecomposition> ek_members(const Integer& k, std::int64_t limit_h);

}  // namespace krq
