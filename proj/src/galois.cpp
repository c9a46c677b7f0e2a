#include "sni/galois.hpp"

#include <cassert>
#include <utility>

namespace sni {

namespace {

bool is_prime(std::uint32_t q) {
    if (q < 2) return false;
    for (std::uint32_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

} // namespace

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (!is_prime(q)) throw NotPrime("modulus " + std::to_string(q) + " is not prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    a %= q_;
    if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
    // Fermat: a^(q-2)
    std::uint64_t base = a, acc = 1, e = q_ - 2;
    while (e) {
        if (e & 1) acc = acc * base % q_;
        base = base * base % q_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

FieldMatrix FieldMatrix::identity(const PrimeField& f, std::size_t n) {
    FieldMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FieldMatrix FieldMatrix::from_rows(const PrimeField& f,
                                   std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
    std::vector<std::vector<std::uint32_t>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(f, v);
}

FieldMatrix FieldMatrix::from_rows(const PrimeField& f,
                                   const std::vector<std::vector<std::uint32_t>>& rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.front().size();
    FieldMatrix m(f, nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        if (rows[r].size() != nc) throw DimensionMismatch("ragged row list");
        for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

FieldMatrix FieldMatrix::select_rows(std::span<const std::size_t> idx) const {
    FieldMatrix m(field_, idx.size(), cols_);
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.set(r, c, at(idx[r], c));
    return m;
}

namespace {

// In-place reduced row echelon form on an augmented row-major buffer.
// Eliminates over the first `elim_cols` columns only; trailing columns ride
// along as right-hand sides. Returns the pivot columns in order.
std::vector<std::size_t> rref(std::vector<std::uint32_t>& v, std::size_t rows,
                              std::size_t cols, std::size_t elim_cols, const PrimeField& f) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < elim_cols && pr < rows; ++c) {
        std::size_t piv = pr;
        while (piv < rows && v[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != pr)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(v[pr * cols + j], v[piv * cols + j]);
        const std::uint32_t inv = f.inv(v[pr * cols + c]);
        if (inv != 1)
            for (std::size_t j = 0; j < cols; ++j)
                v[pr * cols + j] = f.mul(v[pr * cols + j], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr) continue;
            const std::uint32_t fac = v[r * cols + c];
            if (fac == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                v[r * cols + j] = f.sub(v[r * cols + j], f.mul(fac, v[pr * cols + j]));
        }
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

std::vector<std::uint32_t> flatten(const FieldMatrix& m, std::span<const std::uint32_t> rhs) {
    const std::size_t cols = m.cols() + 1;
    std::vector<std::uint32_t> v(m.rows() * cols);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) v[r * cols + c] = m.at(r, c);
        v[r * cols + m.cols()] = rhs[r];
    }
    return v;
}

} // namespace

std::size_t rank(FieldMatrix m) {
    std::vector<std::uint32_t> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
    return rref(v, m.rows(), m.cols(), m.cols(), m.field()).size();
}

std::vector<std::uint32_t> solve(const FieldMatrix& a, std::span<const std::uint32_t> y) {
    if (y.size() != a.rows()) throw DimensionMismatch("rhs length != row count");
    const std::size_t n = a.cols();
    const std::size_t cols = n + 1;
    auto v = flatten(a, y);
    const auto pivots = rref(v, a.rows(), cols, n, a.field());
    for (std::size_t r = pivots.size(); r < a.rows(); ++r)
        if (v[r * cols + n] != 0) throw InconsistentSystem("no solution");
    if (pivots.size() < n) throw SingularSystem("column rank deficient");
    std::vector<std::uint32_t> x(n, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = v[i * cols + n];
    return x;
}

std::vector<std::uint32_t> annihilator(const FieldMatrix& interference,
                                       std::span<const std::uint32_t> wanted) {
    const std::size_t n = wanted.size();
    if (interference.rows() > 0 && interference.cols() != n)
        throw DimensionMismatch("interference rows and wanted row differ in length");
    const PrimeField& f = interference.field();
    const std::size_t rows = interference.rows() + 1;
    const std::size_t cols = n + 1;
    std::vector<std::uint32_t> v(rows * cols, 0);
    for (std::size_t r = 0; r + 1 < rows; ++r)
        for (std::size_t c = 0; c < n; ++c) v[r * cols + c] = interference.at(r, c);
    for (std::size_t c = 0; c < n; ++c) v[(rows - 1) * cols + c] = f.reduce(wanted[c]);
    v[(rows - 1) * cols + n] = 1;

    const auto pivots = rref(v, rows, cols, n, f);
    for (std::size_t r = pivots.size(); r < rows; ++r)
        if (v[r * cols + n] != 0)
            throw NotDecodable("wanted row lies in the interference span");
    std::vector<std::uint32_t> phi(n, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) phi[pivots[i]] = v[i * cols + n];
    return phi;
}

std::uint32_t dot(const PrimeField& f, std::span<const std::uint32_t> a,
                  std::span<const std::uint32_t> b) {
    assert(a.size() == b.size());
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

} // namespace sni
