#include "krq/numtheory.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace krq {

std::string_view to_string(Certainty c)
{
    return c == Certainty::Proved ? "proved" : "probable";
}

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exponent, u64 m)
{
    u64 result = 1 % m;
    base %= m;
    while (exponent > 0) {
        if (exponent & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

// Miller-Rabin round; m odd, m > 2, m - 1 = d * 2^s.
bool strong_probable_prime(u64 m, u64 d, unsigned s, u64 witness)
{
    witness %= m;
    if (witness == 0) return true;
    u64 x = pow_mod(witness, d, m);
    if (x == 1 || x == m - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, m);
        if (x == m - 1) return true;
    }
    return false;
}

constexpr std::array<u64, 12> kSmallPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Jaeschke/Sinclair base set, deterministic for all 64-bit integers.
constexpr std::array<u64, 7> kWitnesses{2, 325, 9375, 28178, 450775, 9780504, 1795265022};

constexpr u64 kTrialDivisionLimit = 1'000'000;  // fully factors anything <= 10^12

Integer brent_rho(const Integer& m, unsigned long seed)
{
    // Pollard-Brent with x -> x^2 + c; gcds are batched over 128 steps.
    const Integer c = Integer(seed);
    Integer x = 2, y = 2, ys, q = 1, g = 1;
    auto step = [&](Integer& v) {
        v = v * v + c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    };
    unsigned long r = 1;
    constexpr unsigned long batch = 128;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            const unsigned long limit = std::min(batch, r - k);
            for (unsigned long i = 0; i < limit; ++i) {
                step(y);
                q *= abs(Integer(x - y));
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
            k += limit;
        }
        r *= 2;
    }
    if (g == m) {
        do {
            step(ys);
            const Integer diff = abs(Integer(x - ys));
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
        } while (g == 1);
    }
    return g;  // may equal m; the caller retries with another constant
}

void split_composite(const Integer& m, std::vector<Integer>& primes)
{
    if (m == 1) return;
    if (is_prime(m)) {
        primes.push_back(m);
        return;
    }
    for (unsigned long seed = 1;; ++seed) {
        const Integer d = brent_rho(m, seed);
        if (d != 1 && d != m) {
            split_composite(d, primes);
            split_composite(Integer(m / d), primes);
            return;
        }
    }
}

}  // namespace

bool is_prime_u64(std::uint64_t m)
{
    if (m < 2) return false;
    for (u64 p : kSmallPrimes) {
        if (m == p) return true;
        if (m % p == 0) return false;
    }
    u64 d = m - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 w : kWitnesses)
        if (!strong_probable_prime(m, d, s, w)) return false;
    return true;
}

PrimalityVerdict is_prime(const Integer& m)
{
    if (m < 0) throw std::invalid_argument("is_prime requires m >= 0");
    if (m.fits_ulong_p()) return {is_prime_u64(m.get_ui()), Certainty::Proved};
    const int verdict = mpz_probab_prime_p(m.get_mpz_t(), 25);
    if (verdict == 0) return {false, Certainty::Proved};
    return {true, verdict == 2 ? Certainty::Proved : Certainty::Probable};
}

std::vector<PrimePower> factorize(const Integer& m)
{
    if (m < 1) throw std::invalid_argument("factorize requires m >= 1");
    std::vector<Integer> primes;
    Integer rest = m;
    auto strip = [&](u64 d) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
            primes.emplace_back(static_cast<unsigned long>(d));
        }
    };
    strip(2);
    for (u64 d = 3; d <= kTrialDivisionLimit; d += 2) {
        if (rest == 1) break;
        if (Integer(static_cast<unsigned long>(d)) * d > rest) {
            primes.push_back(rest);  // no factor <= sqrt(rest) left
            rest = 1;
            break;
        }
        strip(d);
    }
    if (rest != 1) split_composite(rest, primes);

    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> out;
    for (auto& p : primes) {
        if (!out.empty() && out.back().prime == p) ++out.back().exponent;
        else out.push_back({std::move(p), 1});
    }
    return out;
}

std::vector<Integer> odd_divisors(const Integer& two_n)
{
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("odd_divisors requires an even argument >= 2");
    std::vector<Integer> divisors{1};
    for (const auto& [prime, exponent] : factorize(two_n)) {
        if (prime == 2) continue;
        const std::size_t base = divisors.size();
        Integer power = 1;
        for (unsigned e = 1; e <= exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

PsiBeta psi_beta(const Integer& n)
{
    if (n < 1) throw std::invalid_argument("psi_beta requires n >= 1");
    const auto h = mpz_scan1(n.get_mpz_t(), 0);
    Integer odd;
    mpz_tdiv_q_2exp(odd.get_mpz_t(), n.get_mpz_t(), h);
    if (odd == 1) return {n, 0, Rational(-n)};

    const Integer least_odd_prime = factorize(odd).front().prime;
    Integer two_part;
    mpz_ui_pow_ui(two_part.get_mpz_t(), 2, h + 1);
    const Integer psi = std::min(two_part, least_odd_prime);
    const Integer quotient = 2 * n / psi;  // exact: psi divides 2n
    return {n, psi, make_rational(quotient - psi - 1, 2)};
}

std::optional<PhiDecomposition> phi_decompose(const Integer& n)
{
    if (n < 1) throw std::invalid_argument("phi_decompose requires n >= 1");
    const auto a = mpz_scan1(n.get_mpz_t(), 0);
    Integer odd;
    mpz_tdiv_q_2exp(odd.get_mpz_t(), n.get_mpz_t(), a);
    if (odd < 3) return std::nullopt;
    const auto verdict = is_prime(odd);
    if (!verdict) return std::nullopt;
    const auto h = static_cast<std::int64_t>(a) + 1;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(h));
    return PhiDecomposition{n, h, odd, power - odd, verdict.certainty};
}

std::vector<PhiDecomposition> ek_members(const Integer& k, std::int64_t limit_h)
{
    if (limit_h < 1) throw std::invalid_argument("ek_members requires limit_h >= 1");
    std::vector<PhiDecomposition> out;
    if (mpz_even_p(k.get_mpz_t())) return out;
    Integer power = 1;
    for (std::int64_t h = 1; h <= limit_h; ++h) {
        power *= 2;
        const Integer p = power - k;
        if (p < 3) continue;
        const auto verdict = is_prime(p);
        if (!verdict) continue;
        Integer n;
        mpz_mul_2exp(n.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(h - 1));
        out.push_back({std::move(n), h, p, k, verdict.certainty});
    }
    return out;
}

}  // namespace krq
