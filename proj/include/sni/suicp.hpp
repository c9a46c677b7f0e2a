#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sni/air.hpp"
#include "sni/rational.hpp"

namespace sni {

/// A single-unicast instance with symmetric neighboring interference:
/// receiver k wants message k and is interfered by the U messages before and
/// the D messages after it, indices cyclic mod K.
struct SniProblem {
    std::uint32_t K;
    std::uint32_t D;
    std::uint32_t U;

    SniProblem(std::uint32_t k, std::uint32_t d, std::uint32_t u);
};

std::vector<std::uint32_t> interference_set(const SniProblem& p, std::uint32_t k);
std::vector<std::uint32_t> side_info_set(const SniProblem& p, std::uint32_t k);

/// Membership in the feasible pair set: gcd(bK, b(D+1)+a) >= b(U+1).
bool in_feasible_set(const SniProblem& p, std::uint64_t a, std::uint64_t b);

/// A feasible (a, b) with its rate D+1+a/b.
struct RateFraction {
    std::uint64_t a;
    std::uint64_t b;
    Rational rate;
};

/// Exhaustive scan over b in [1 : K/(U+1)], a in [0 : b(K-D-1)] for the pair
/// minimizing a/b; ties broken by smallest b, then smallest a. Always succeeds
/// (a = b(K-D-1) is feasible for every b).
RateFraction min_rate_fraction(const SniProblem& p);

/// Parameters of the partition construction for a feasible (a, b):
/// tau = gcd(Kb, N) classes of t symbols, each encoded by a t x gamma AIR
/// matrix; gamma is also the per-symbol decode buffer bound.
struct PartitionScheme {
    std::uint64_t a, b;
    std::uint64_t c;      // tau - b(U+1)
    std::uint64_t tau;    // class count
    std::uint64_t t;      // symbols per class
    std::uint64_t gamma;  // code symbols per class
    std::uint64_t N;      // code length b(D+1)+a
    AirMatrix L;          // t x gamma
};

PartitionScheme partition_params(const SniProblem& p, std::uint64_t a, std::uint64_t b);

/// The tau arithmetic-progression classes {i, i+tau, ..., i+(t-1)tau} that
/// partition the flat symbol indices [0 : Kb-1]. Flat index w holds message
/// symbol (w / b, w mod b).
std::vector<std::vector<std::uint64_t>> partition_sets(const SniProblem& p,
                                                       const PartitionScheme& scheme);

/// Zero-padding parameters for the scalar code: gcd(K+a, D+1+a+b) >= U+1+a,
/// giving code length D+1+a+b via a (K+a) x (D+1+a+b) AIR matrix.
struct ScalarPadding {
    std::uint32_t a;
    std::uint32_t b;
    std::uint32_t length;  // D+1+a+b
};

/// Smallest a+b (ties: smallest a) satisfying the padding condition, searched
/// up to a+b <= U+D; beyond that the plain D+U+1 code is never beaten. May
/// find nothing inside the bound.
std::optional<ScalarPadding> find_scalar_padding(const SniProblem& p);

/// Smallest l >= 1 with D in D_l and U in U_l (the full-rate classes where the
/// best vector rate degenerates to K), or nothing.
std::optional<std::uint32_t> full_rate_class(const SniProblem& p);

/// D_l = [ lK/(l+1) : (l+1)K/(l+2) - 1 ], U_l = [ K/(l+2) : K/(l+1) - 1 ].
std::pair<std::int64_t, std::int64_t> d_interval(std::uint32_t K, std::uint32_t l);
std::pair<std::int64_t, std::int64_t> u_interval(std::uint32_t K, std::uint32_t l);

struct BoundsReport {
    std::uint32_t lower;                    // D+1
    RateFraction l1;                        // best vector rate
    std::optional<ScalarPadding> padding;   // witness for l2, when found
    std::uint32_t du1;                      // D+U+1
    Rational upper;                         // min of the candidates
    std::optional<std::uint32_t> full_rate; // diagnostic

    std::optional<std::uint32_t> l2() const {
        if (!padding) return std::nullopt;
        return padding->length;
    }
};

BoundsReport broadcast_rate_bounds(const SniProblem& p);

} // namespace sni
