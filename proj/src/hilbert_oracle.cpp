#include "krq/hilbert_oracle.hpp"

#include "krq/parallel.hpp"

#include <string>
#include <vector>

namespace krq {

namespace {

int mod(int value, int q)
{
    const int r = value % q;
    return r < 0 ? r + q : r;
}

int inverse_mod(int value, int q)
{
    // q is prime: value^(q-2).
    int result = 1;
    for (int i = 0; i < q - 2; ++i) result = result * value % q;
    return result;
}

void check_shape(int n, int q)
{
    if (n < 1 || n > kMaxOracleDimension) throw std::invalid_argument("oracle dimension must be 1..3");
    if (q != 2 && q != 3 && q != 5) throw std::invalid_argument("oracle field must be F_2, F_3 or F_5");
}

std::uint64_t int_pow(std::uint64_t base, int exponent)
{
    std::uint64_t out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

// Echelon basis of the span built so far; every stored row has pivot entry 1.
class SpanBuilder {
public:
    SpanBuilder(int n, int q) : n_(n), q_(q) {}

    int dimension() const { return static_cast<int>(rows_.size()); }

    // Adds v if it is outside the current span; returns whether it was added.
    bool insert(FieldVector v)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const int factor = v[pivots_[r]];
            if (factor == 0) continue;
            for (int c = 0; c < n_; ++c) v[c] = static_cast<std::uint8_t>(mod(v[c] - factor * rows_[r][c], q_));
        }
        for (int c = 0; c < n_; ++c) {
            if (v[c] == 0) continue;
            const int scale = inverse_mod(v[c], q_);
            for (int j = 0; j < n_; ++j) v[j] = static_cast<std::uint8_t>(v[j] * scale % q_);
            rows_.push_back(v);
            pivots_.push_back(c);
            return true;
        }
        return false;
    }

private:
    int n_;
    int q_;
    std::vector<FieldVector> rows_;
    std::vector<int> pivots_;
};

bool cyclic_with_inverses(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b,
                          const PrimeFieldMatrix& a_inv, const PrimeFieldMatrix& b_inv,
                          const FieldVector& v)
{
    const int n = a.dimension();
    SpanBuilder span(n, a.modulus());
    std::vector<FieldVector> pending{v};
    while (!pending.empty() && span.dimension() < n) {
        const FieldVector w = pending.back();
        pending.pop_back();
        if (!span.insert(w)) continue;
        for (const auto* g : {&a, &b, &a_inv, &b_inv}) pending.push_back(g->apply(w));
    }
    return span.dimension() == n;
}

// Basis of {X : AX = XA} as a nullspace computation over F_q.
std::vector<PrimeFieldMatrix> centralizer_basis(const PrimeFieldMatrix& a)
{
    const int n = a.dimension();
    const int q = a.modulus();
    const int unknowns = n * n;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(unknowns), std::vector<int>(unknowns, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto& row = rows[i * n + j];
            for (int k = 0; k < n; ++k) {
                row[k * n + j] += a.at(i, k);  // (AX)_ij
                row[i * n + k] -= a.at(k, j);  // (XA)_ij
            }
            for (auto& x : row) x = mod(x, q);
        }
    }
    // Reduced row echelon form.
    std::vector<int> pivot_of_column(unknowns, -1);
    int rank = 0;
    for (int col = 0; col < unknowns && rank < unknowns; ++col) {
        int pivot = -1;
        for (int r = rank; r < unknowns; ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[pivot], rows[rank]);
        const int scale = inverse_mod(rows[rank][col], q);
        for (auto& x : rows[rank]) x = x * scale % q;
        for (int r = 0; r < unknowns; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const int factor = rows[r][col];
            for (int c = 0; c < unknowns; ++c) rows[r][c] = mod(rows[r][c] - factor * rows[rank][c], q);
        }
        pivot_of_column[col] = rank++;
    }
    std::vector<PrimeFieldMatrix> basis;
    for (int free = 0; free < unknowns; ++free) {
        if (pivot_of_column[free] >= 0) continue;
        PrimeFieldMatrix x(n, q);
        x.set(free / n, free % n, 1);
        for (int col = 0; col < unknowns; ++col) {
            const int r = pivot_of_column[col];
            if (r >= 0) x.set(col / n, col % n, mod(-rows[r][free], q));
        }
        basis.push_back(x);
    }
    return basis;
}

std::uint64_t cyclic_triples_for(const PrimeFieldMatrix& a)
{
    const int n = a.dimension();
    const int q = a.modulus();
    const PrimeFieldMatrix a_inv = a.inverse();
    const auto basis = centralizer_basis(a);
    const std::uint64_t combos = int_pow(q, static_cast<int>(basis.size()));
    const std::uint64_t vectors = int_pow(q, n);

    std::uint64_t total = 0;
    for (std::uint64_t combo = 0; combo < combos; ++combo) {
        PrimeFieldMatrix b(n, q);
        std::uint64_t digits = combo;
        for (const auto& generator : basis) {
            const int c = static_cast<int>(digits % q);
            digits /= q;
            for (int t = 0; t < c; ++t) b = b + generator;
        }
        if (!b.invertible()) continue;
        const PrimeFieldMatrix b_inv = b.inverse();
        for (std::uint64_t code = 1; code < vectors; ++code) {
            FieldVector v{};
            std::uint64_t rest = code;
            for (int i = 0; i < n; ++i) {
                v[i] = static_cast<std::uint8_t>(rest % q);
                rest /= q;
            }
            if (cyclic_with_inverses(a, b, a_inv, b_inv, v)) ++total;
        }
    }
    return total;
}

}  // namespace

PrimeFieldMatrix::PrimeFieldMatrix(int n, int q) : n_(n), q_(q)
{
    if (n < 1 || n > kMaxOracleDimension || q < 2) throw std::invalid_argument("bad matrix shape");
}

PrimeFieldMatrix PrimeFieldMatrix::identity(int n, int q)
{
    PrimeFieldMatrix m(n, q);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

PrimeFieldMatrix PrimeFieldMatrix::from_index(int n, int q, std::uint64_t index)
{
    PrimeFieldMatrix m(n, q);
    for (int i = 0; i < n * n; ++i) {
        m.entries_[i] = static_cast<std::uint8_t>(index % q);
        index /= q;
    }
    return m;
}

void PrimeFieldMatrix::set(int row, int col, int value)
{
    entries_[row * n_ + col] = static_cast<std::uint8_t>(mod(value, q_));
}

int PrimeFieldMatrix::determinant() const
{
    switch (n_) {
    case 1: return at(0, 0);
    case 2: return mod(at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0), q_);
    default:
        return mod(at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                       at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                       at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0)),
                   q_);
    }
}

PrimeFieldMatrix PrimeFieldMatrix::inverse() const
{
    const int det = determinant();
    if (det == 0) throw std::domain_error("singular matrix");
    const int det_inv = inverse_mod(det, q_);
    PrimeFieldMatrix out(n_, q_);
    if (n_ == 1) {
        out.set(0, 0, det_inv);
        return out;
    }
    if (n_ == 2) {
        out.set(0, 0, at(1, 1) * det_inv);
        out.set(0, 1, -at(0, 1) * det_inv);
        out.set(1, 0, -at(1, 0) * det_inv);
        out.set(1, 1, at(0, 0) * det_inv);
        return out;
    }
    // Adjugate: inverse(i, j) = cofactor(j, i) / det.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            const int cofactor = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
            out.set(i, j, cofactor * det_inv);
        }
    }
    return out;
}

FieldVector PrimeFieldMatrix::apply(const FieldVector& v) const
{
    FieldVector out{};
    for (int i = 0; i < n_; ++i) {
        int acc = 0;
        for (int j = 0; j < n_; ++j) acc += at(i, j) * v[j];
        out[i] = static_cast<std::uint8_t>(acc % q_);
    }
    return out;
}

PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b)
{
    PrimeFieldMatrix out(a.n_, a.q_);
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) {
            int acc = 0;
            for (int k = 0; k < a.n_; ++k) acc += a.at(i, k) * b.at(k, j);
            out.set(i, j, acc);
        }
    return out;
}

PrimeFieldMatrix operator+(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b)
{
    PrimeFieldMatrix out(a.n_, a.q_);
    for (int i = 0; i < a.n_ * a.n_; ++i) out.entries_[i] = static_cast<std::uint8_t>((a.entries_[i] + b.entries_[i]) % a.q_);
    return out;
}

bool is_cyclic(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b, const FieldVector& v)
{
    return cyclic_with_inverses(a, b, a.inverse(), b.inverse(), v);
}

Integer general_linear_order(int n, int q)
{
    Integer order = 1;
    const Integer qn = pow(Integer(q), static_cast<std::uint64_t>(n));
    for (int j = 0; j < n; ++j) order *= qn - pow(Integer(q), static_cast<std::uint64_t>(j));
    return order;
}

OracleCount count_cyclic_triples(int n, int q, const OracleOptions& options)
{
    check_shape(n, q);
    const std::uint64_t space = int_pow(q, n * n);
    if (space > options.budget)
        throw BudgetExceeded("oracle enumeration size " + std::to_string(space) + " exceeds budget " +
                             std::to_string(options.budget));

    const auto partial = map_chunks<std::uint64_t>(
        0, static_cast<std::int64_t>(space) - 1, options.threads, [&](std::int64_t lo, std::int64_t hi) {
            std::uint64_t count = 0;
            for (std::int64_t index = lo; index <= hi; ++index) {
                const auto a = PrimeFieldMatrix::from_index(n, q, static_cast<std::uint64_t>(index));
                if (a.invertible()) count += cyclic_triples_for(a);
            }
            return count;
        });
    Integer triples = 0;
    for (auto c : partial) triples += static_cast<unsigned long>(c);

    OracleCount out{triples, general_linear_order(n, q), 0};
    if (triples % out.group_order != 0)
        throw std::logic_error("cyclic triple count not divisible by |GL_n(F_q)|");
    out.ideals = triples / out.group_order;
    return out;
}

Integer count_ideals_bruteforce(int n, int q, const OracleOptions& options)
{
    return count_cyclic_triples(n, q, options).ideals;
}

}  // namespace krq
