#include "krq/numtheory.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace krq {
namespace {

using testing::uniform;

std::vector<Integer> ints(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

TEST(IsPrime, Examples)
{
    EXPECT_TRUE(is_prime(31));
    EXPECT_TRUE(is_prime(17));
    EXPECT_FALSE(is_prime(125));
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_EQ(is_prime(31).certainty, Certainty::Proved);
}

TEST(IsPrime, StrongPseudoprimesAreRejected)
{
    // Strong pseudoprimes to several small prime bases.
    for (std::uint64_t m : {2047ULL, 3215031751ULL, 2152302898747ULL, 3474749660383ULL, 341550071728321ULL,
                            3825123056546413051ULL})
        EXPECT_FALSE(is_prime_u64(m)) << m;
}

TEST(IsPrime, AgreesWithTrialDivisionBelowOneMillion)
{
    std::vector<bool> composite(1000001, false);
    for (std::uint64_t i = 2; i * i <= 1000000; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= 1000000; j += i) composite[j] = true;
    for (std::uint64_t m = 0; m <= 1000000; ++m) ASSERT_EQ(is_prime_u64(m), m >= 2 && !composite[m]) << m;
}

TEST(IsPrime, AgreesWithGmpOnRandom64BitValues)
{
    for (int trial = 0; trial < 20000; ++trial) {
        std::uint64_t m = testing::rng()();
        if (trial % 2) m |= 1;
        const Integer z(std::to_string(m));
        ASSERT_EQ(is_prime_u64(m), mpz_probab_prime_p(z.get_mpz_t(), 40) != 0) << m;
    }
    EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
    EXPECT_FALSE(is_prime_u64(18446744073709551615ULL));
}

TEST(IsPrime, LargeValuesAreProbable)
{
    const Integer m89 = pow(Integer(2), 89) - 1;
    const auto verdict = is_prime(m89);
    EXPECT_TRUE(verdict.prime);
    EXPECT_EQ(verdict.certainty, Certainty::Probable);
    EXPECT_FALSE(is_prime(pow(Integer(2), 67) - 1));
    EXPECT_FALSE(is_prime(Integer(pow(Integer(2), 61) - 1) * Integer(pow(Integer(2), 31) - 1)));
}

TEST(Factorize, SmallAndRho)
{
    EXPECT_EQ(factorize(1), std::vector<PrimePower>{});
    EXPECT_EQ(factorize(360), (std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}}));
    // Cole's factorization.
    EXPECT_EQ(factorize(pow(Integer(2), 67) - 1),
              (std::vector<PrimePower>{{Integer(193707721), 1}, {Integer("761838257287"), 1}}));
    const Integer p("1000000007"), q("998244353");
    EXPECT_EQ(factorize(p * p * q), (std::vector<PrimePower>{{q, 1}, {p, 2}}));
}

TEST(Factorize, ProductReconstructsInput)
{
    for (int trial = 0; trial < 300; ++trial) {
        const Integer m = Integer(std::to_string(uniform(1, 1L << 40))) * uniform(1, 1000);
        Integer product = 1;
        Integer previous = 1;
        for (const auto& [prime, exponent] : factorize(m)) {
            EXPECT_TRUE(is_prime(prime));
            EXPECT_GT(prime, previous);
            previous = prime;
            product *= pow(prime, exponent);
        }
        EXPECT_EQ(product, m);
    }
}

TEST(OddDivisors, Examples)
{
    EXPECT_EQ(odd_divisors(12), ints({1, 3}));
    EXPECT_EQ(odd_divisors(2), ints({1}));
    EXPECT_EQ(odd_divisors(90), ints({1, 3, 5, 9, 15, 45}));
    EXPECT_THROW(odd_divisors(9), std::invalid_argument);
    EXPECT_THROW(odd_divisors(0), std::invalid_argument);
}

TEST(OddDivisors, MatchNaiveEnumeration)
{
    for (long two_n = 2; two_n <= 3000; two_n += 2) {
        std::vector<Integer> expected;
        for (long r = 1; r <= two_n; r += 2)
            if (two_n % r == 0) expected.push_back(r);
        const auto divisors = odd_divisors(two_n);
        ASSERT_EQ(divisors, expected) << two_n;
        for (const auto& r : divisors) EXPECT_EQ(Integer(two_n / r) * r, two_n);
    }
}

TEST(PsiBeta, Examples)
{
    const auto b8 = psi_beta(8);
    EXPECT_EQ(b8.psi, 0);
    EXPECT_EQ(b8.beta, -8);
    const auto b6 = psi_beta(6);
    EXPECT_EQ(b6.psi, 3);
    EXPECT_EQ(b6.beta, 0);
    const auto b10 = psi_beta(10);
    EXPECT_EQ(b10.psi, 4);
    EXPECT_EQ(b10.beta, 0);
    EXPECT_EQ(psi_beta(1).beta, -1);

    // {n, psi, beta}, worked by hand from the definition.
    const long table[][3] = {{5, 2, 1},    {12, 3, 2},   {15, 2, 6},   {18, 3, 4},   {20, 5, 1},
                             {22, 4, 3},   {42, 3, 12},  {48, 3, 14},  {50, 4, 10},  {60, 3, 18},
                             {70, 4, 15},  {90, 3, 28},  {160, 5, 29}, {210, 3, 68}, {264, 3, 86}};
    for (const auto& [n, psi, beta] : table) {
        const auto pb = psi_beta(n);
        EXPECT_EQ(pb.psi, psi) << n;
        EXPECT_EQ(pb.beta, beta) << n;
    }
}

TEST(PsiBeta, MatchesNaiveDefinition)
{
    for (long n = 1; n <= 5000; ++n) {
        long h = 0, odd = n;
        while (odd % 2 == 0) odd /= 2, ++h;
        const auto pb = psi_beta(n);
        if (odd == 1) {
            EXPECT_EQ(pb.psi, 0);
            EXPECT_EQ(pb.beta, -n);
            continue;
        }
        long p1 = 3;
        while (odd % p1) p1 += 2;
        const long psi = std::min(2L << h, p1);
        ASSERT_EQ(pb.psi, psi) << n;
        ASSERT_EQ(pb.beta, make_rational(2 * n / psi - psi - 1, 2)) << n;
    }
}

TEST(PhiDecompose, Examples)
{
    const auto d6 = phi_decompose(6);
    ASSERT_TRUE(d6);
    EXPECT_EQ(d6->h, 2);
    EXPECT_EQ(d6->p, 3);
    EXPECT_EQ(d6->k, 1);
    const auto d3 = phi_decompose(3);
    ASSERT_TRUE(d3);
    EXPECT_EQ(d3->h, 1);
    EXPECT_EQ(d3->p, 3);
    EXPECT_EQ(d3->k, -1);
    EXPECT_FALSE(phi_decompose(8));
    EXPECT_FALSE(phi_decompose(1));
    EXPECT_FALSE(phi_decompose(2));
    EXPECT_FALSE(phi_decompose(45));
    const auto d104 = phi_decompose(104);
    ASSERT_TRUE(d104);
    EXPECT_EQ(d104->k, 3);
}

TEST(PhiDecompose, InvariantsOverARange)
{
    std::size_t members = 0;
    for (long n = 1; n <= 20000; ++n) {
        const auto d = phi_decompose(n);
        long odd = n;
        while (odd % 2 == 0) odd /= 2;
        ASSERT_EQ(d.has_value(), odd > 1 && is_prime_u64(odd)) << n;
        if (!d) continue;
        ++members;
        EXPECT_NE(Integer(d->k % 2), 0);
        EXPECT_EQ(d->p * (d->p + d->k), 2 * d->n);
        EXPECT_EQ(d->p + d->k, pow(Integer(2), static_cast<std::uint64_t>(d->h)));
        EXPECT_EQ(odd_divisors(2 * d->n), (std::vector<Integer>{1, d->p}));
    }
    EXPECT_GT(members, 0u);
}

TEST(EkMembers, Examples)
{
    auto ns = [](const std::vector<PhiDecomposition>& ds) {
        std::vector<Integer> out;
        for (const auto& d : ds) out.push_back(d.n);
        return out;
    };
    auto ps = [](const std::vector<PhiDecomposition>& ds) {
        std::vector<Integer> out;
        for (const auto& d : ds) out.push_back(d.p);
        return out;
    };
    EXPECT_EQ(ns(ek_members(1, 8)), ints({6, 28, 496, 8128}));
    EXPECT_EQ(ns(ek_members(-1, 9)), ints({3, 10, 136, 32896}));
    EXPECT_EQ(ps(ek_members(3, 9)), ints({5, 13, 29, 61, 509}));
    EXPECT_EQ(ps(ek_members(5, 12)), ints({3, 11, 59, 251, 1019, 4091}));
    EXPECT_TRUE(ek_members(4, 20).empty());
    EXPECT_TRUE(ek_members(0, 20).empty());
    EXPECT_THROW(ek_members(1, 0), std::invalid_argument);
}

TEST(EkMembers, MersenneExponentsUpTo130)
{
    std::vector<std::int64_t> hs;
    for (const auto& d : ek_members(1, 130)) hs.push_back(d.h);
    EXPECT_EQ(hs, (std::vector<std::int64_t>{2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127}));
}

// On E_k, beta(n) = (|k| - 1)/2 and (-1)^(2n/psi(n)) = sign(k).
TEST(EkMembers, BetaAndSignIdentities)
{
    for (long k = -41; k <= 41; k += 2) {
        for (const auto& d : ek_members(k, 40)) {
            EXPECT_EQ(d.k, k);
            const auto reparsed = phi_decompose(d.n);
            ASSERT_TRUE(reparsed);
            EXPECT_EQ(reparsed->k, k);
            EXPECT_EQ(reparsed->h, d.h);
            const auto pb = psi_beta(d.n);
            EXPECT_EQ(pb.beta, make_rational(std::abs(k) - 1, 2)) << d.n;
            const Integer quotient = 2 * d.n / pb.psi;
            EXPECT_EQ(Integer(2 * d.n % pb.psi), 0);
            EXPECT_EQ(mpz_even_p(quotient.get_mpz_t()) ? 1 : -1, k > 0 ? 1 : -1) << d.n;
        }
    }
}

}  // namespace
}  // namespace krq
