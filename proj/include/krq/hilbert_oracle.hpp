#pragma once

// Ground-truth count of codimension-n ideals of F_q[Z + Z] for tiny n and
// prime q. A codimension-n ideal is the same thing as an n-dimensional cyclic
// module over F_q[x, x^-1, y, y^-1], i.e. a pair of commuting invertible
// n x n matrices (A, B) together with a cyclic vector v, up to GL_n(F_q).

#include "krq/exact.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

namespace krq {

inline constexpr int kMaxOracleDimension = 3;

using FieldVector = std::array<std::uint8_t, kMaxOracleDimension>;

/// Row-major n x n matrix over F_q, n <= 3, entries reduced mod q.
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix(int n, int q);

    static PrimeFieldMatrix identity(int n, int q);
    /// The matrix whose entries are the base-q digits of index (row-major,
    /// least significant first); index < q^(n*n).
    static PrimeFieldMatrix from_index(int n, int q, std::uint64_t index);

    int dimension() const { return n_; }
    int modulus() const { return q_; }
    int at(int row, int col) const { return entries_[row * n_ + col]; }
    void set(int row, int col, int value);

    int determinant() const;
    bool invertible() const { return determinant() != 0; }
    /// Requires invertible().
    PrimeFieldMatrix inverse() const;
    FieldVector apply(const FieldVector& v) const;

    friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);
    friend PrimeFieldMatrix operator+(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);
    friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

private:
    int n_;
    int q_;
    std::array<std::uint8_t, kMaxOracleDimension * kMaxOracleDimension> entries_{};
};

/// True when the closure of {v} under A, B, A^-1, B^-1 spans F_q^n.
bool is_cyclic(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b, const FieldVector& v);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    /// Cap on the outer enumeration size q^(n*n).
    std::uint64_t budget = 20000;
    unsigned threads = 1;
};

struct OracleCount {
    Integer cyclic_triples;
    Integer group_order;  // |GL_n(F_q)|
    Integer ideals;       // cyclic_triples / group_order
};

/// Throws std::invalid_argument unless n in {1,2,3} and q in {2,3,5};
/// BudgetExceeded when q^(n*n) > options.budget. Throws std::logic_error if
/// the triple count is not divisible by |GL_n(F_q)|.
OracleCount count_cyclic_triples(int n, int q, const OracleOptions& options = {});

Integer count_ideals_bruteforce(int n, int q, const OracleOptions& options = {});

Integer general_linear_order(int n, int q);

}  // namespace krq
