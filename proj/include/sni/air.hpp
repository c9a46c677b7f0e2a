#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sni/galois.hpp"

namespace sni {

/// Remainder chain behind an m x n adjacent-independent-row matrix.
/// lambda[0] is the block height left after stripping whole stacked-identity
/// blocks off the top (so it sits in [1:n] even when m >= 2n); successive
/// divisions lambda[i-1] = beta[i]*lambda[i] + lambda[i+1] run down to
/// lambda.back() = gcd(m, n). All betas are positive.
struct EuclidChain {
    std::vector<std::uint64_t> lambda;
    std::vector<std::uint64_t> beta;

    std::size_t l() const { return lambda.size() - 1; }
};

/// Binary m x n matrix (m >= n) in which every n cyclically adjacent rows are
/// linearly independent over every field. Stored over GF(2); lift with over().
struct AirMatrix {
    std::size_t m;
    std::size_t n;
    FieldMatrix bits;

    FieldMatrix over(const PrimeField& f) const;
};

/// a x b stack of a/b identity blocks (requires b | a). The wide b x a form is
/// stacked_identity(a, b).transposed().
FieldMatrix stacked_identity(std::size_t a, std::size_t b, const PrimeField& f = PrimeField(2));

EuclidChain euclid_chain(std::size_t m, std::size_t n);

/// Deterministic construction; alternates stacked and repeated identity blocks
/// down the remainder chain of (m, n).
AirMatrix build_air(std::size_t m, std::size_t n);

/// True iff every window of n consecutive rows (wrapping mod m when cyclic)
/// has rank n over each of the given fields.
bool check_adjacent_independence(const AirMatrix& air, bool cyclic,
                                 std::span<const PrimeField> fields);
bool check_adjacent_independence(const AirMatrix& air, bool cyclic = true);

/// True iff no row k lies in the span of the n-1 rows preceding it plus the
/// gcd(m,n)-1 rows following it, indices cyclic mod m.
bool check_span_exclusion(const AirMatrix& air, std::span<const PrimeField> fields);
bool check_span_exclusion(const AirMatrix& air);

/// GF(2) and GF(3), the default property-check fields.
std::span<const PrimeField> default_check_fields();

} // namespace sni
