#include "sni/air.hpp"

#include <algorithm>
#include <numeric>

namespace sni {

FieldMatrix AirMatrix::over(const PrimeField& f) const {
    if (f == bits.field()) return bits;
    FieldMatrix out(f, m, n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) out.set(r, c, bits.at(r, c));
    return out;
}

FieldMatrix stacked_identity(std::size_t a, std::size_t b, const PrimeField& f) {
    if (b == 0 || a == 0)
        throw InvalidDims("stacked identity needs positive dimensions");
    if (a % b != 0)
        throw NotDivisible(std::to_string(b) + " does not divide " + std::to_string(a));
    FieldMatrix m(f, a, b);
    for (std::size_t r = 0; r < a; ++r) m.set(r, r % b, 1);
    return m;
}

EuclidChain euclid_chain(std::size_t m, std::size_t n) {
    if (m <= n || n < 1)
        throw InvalidDims("chain needs m > n >= 1");
    EuclidChain ch;
    // strip whole I_n blocks so the first division has a positive quotient
    std::uint64_t cur = (m - n - 1) % n + 1;
    std::uint64_t prev = n;
    ch.lambda.push_back(cur);
    while (true) {
        ch.beta.push_back(prev / cur);
        const std::uint64_t rem = prev % cur;
        if (rem == 0) break;
        ch.lambda.push_back(rem);
        prev = cur;
        cur = rem;
    }
    return ch;
}

namespace {

// Tall block: m = beta*n + rho; beta*n rows of stacked identities, then the
// wide block on the remaining rho rows.
void fill_tall(FieldMatrix& out, std::size_t r0, std::size_t c0, std::size_t m, std::size_t n);

// Wide block (r < c): c = beta*r + rho; identity repeated beta times on the
// left, then a tall r x rho block on the right.
void fill_wide(FieldMatrix& out, std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) {
    const std::size_t beta = c / r, rho = c % r;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < beta * r; j += r) out.set(r0 + i, c0 + j, 1);
    if (rho != 0) fill_tall(out, r0, c0 + beta * r, r, rho);
}

void fill_tall(FieldMatrix& out, std::size_t r0, std::size_t c0, std::size_t m, std::size_t n) {
    const std::size_t beta = m / n, rho = m % n;
    for (std::size_t r = 0; r < beta * n; ++r) out.set(r0 + r, c0 + r % n, 1);
    if (rho != 0) fill_wide(out, r0 + beta * n, c0, rho, n);
}

} // namespace

AirMatrix build_air(std::size_t m, std::size_t n) {
    if (n < 1 || m < n)
        throw InvalidDims("AIR matrix needs m >= n >= 1, got " + std::to_string(m) + " x " +
                          std::to_string(n));
    FieldMatrix bits(PrimeField(2), m, n);
    fill_tall(bits, 0, 0, m, n);
    return {m, n, bits};
}

bool check_adjacent_independence(const AirMatrix& air, bool cyclic,
                                 std::span<const PrimeField> fields) {
    const std::size_t m = air.m, n = air.n;
    std::vector<std::size_t> idx(n);
    for (const PrimeField& f : fields) {
        const FieldMatrix mat = air.over(f);
        const std::size_t starts = cyclic ? m : m - n + 1;
        for (std::size_t i = 0; i < starts; ++i) {
            for (std::size_t d = 0; d < n; ++d) idx[d] = (i + d) % m;
            if (rank(mat.select_rows(idx)) != n) return false;
        }
    }
    return true;
}

bool check_adjacent_independence(const AirMatrix& air, bool cyclic) {
    return check_adjacent_independence(air, cyclic, default_check_fields());
}

bool check_span_exclusion(const AirMatrix& air, std::span<const PrimeField> fields) {
    const std::size_t m = air.m, n = air.n;
    const std::size_t g = std::gcd(m, n);
    for (const PrimeField& f : fields) {
        const FieldMatrix mat = air.over(f);
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<std::size_t> idx;
            for (std::size_t s = 1; s < n; ++s) idx.push_back((k + m - s) % m);
            for (std::size_t s = 1; s < g; ++s) idx.push_back((k + s) % m);
            std::sort(idx.begin(), idx.end());
            idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
            const FieldMatrix span = mat.select_rows(idx);
            idx.push_back(k);
            if (rank(mat.select_rows(idx)) != rank(span) + 1) return false;
        }
    }
    return true;
}

bool check_span_exclusion(const AirMatrix& air) {
    return check_span_exclusion(air, default_check_fields());
}

std::span<const PrimeField> default_check_fields() {
    static const std::vector<PrimeField> fields{PrimeField(2), PrimeField(3)};
    return fields;
}

} // namespace sni
