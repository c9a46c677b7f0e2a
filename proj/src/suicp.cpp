#include "sni/suicp.hpp"

#include <algorithm>
#include <numeric>

namespace sni {

SniProblem::SniProblem(std::uint32_t k, std::uint32_t d, std::uint32_t u) : K(k), D(d), U(u) {
    if (K < 1) throw InvalidProblem("K must be positive");
    if (U > D) throw InvalidProblem("U <= D required");
    if (static_cast<std::uint64_t>(U) + D >= K)
        throw InvalidProblem("U + D < K required");
}

std::vector<std::uint32_t> interference_set(const SniProblem& p, std::uint32_t k) {
    std::vector<std::uint32_t> out;
    out.reserve(p.U + p.D);
    for (std::uint32_t s = 1; s <= p.U; ++s) out.push_back((k + p.K - s % p.K) % p.K);
    for (std::uint32_t s = 1; s <= p.D; ++s) out.push_back((k + s) % p.K);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> side_info_set(const SniProblem& p, std::uint32_t k) {
    std::vector<bool> excluded(p.K, false);
    excluded[k] = true;
    for (std::uint32_t m : interference_set(p, k)) excluded[m] = true;
    std::vector<std::uint32_t> out;
    out.reserve(p.K - p.U - p.D - 1);
    for (std::uint32_t m = 0; m < p.K; ++m)
        if (!excluded[m]) out.push_back(m);
    return out;
}

bool in_feasible_set(const SniProblem& p, std::uint64_t a, std::uint64_t b) {
    if (b < 1) return false;
    return std::gcd(b * p.K, b * (p.D + 1) + a) >= b * (p.U + 1);
}

RateFraction min_rate_fraction(const SniProblem& p) {
    const std::uint64_t b_max = p.K / (p.U + 1);
    // best a/b so far as a raw fraction, compared by cross multiplication
    std::uint64_t best_a = 0, best_b = 0;
    bool have = false;
    for (std::uint64_t b = 1; b <= b_max; ++b) {
        const std::uint64_t a_max = b * (p.K - p.D - 1);
        for (std::uint64_t a = 0; a <= a_max; ++a) {
            if (have && a * best_b >= best_a * b) break;  // cannot beat the best at this b
            if (in_feasible_set(p, a, b)) {
                best_a = a;
                best_b = b;
                have = true;
                break;  // larger a at the same b is worse
            }
        }
    }
    const Rational rate = Rational(p.D + 1) +
                          Rational(static_cast<std::int64_t>(best_a), static_cast<std::int64_t>(best_b));
    return {best_a, best_b, rate};
}

PartitionScheme partition_params(const SniProblem& p, std::uint64_t a, std::uint64_t b) {
    if (!in_feasible_set(p, a, b))
        throw NotInS("(a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                     ") fails the gcd condition");
    if (a > b * (p.K - p.D - 1))
        throw NotInS("rate above K, no partition scheme");
    const std::uint64_t N = b * (p.D + 1) + a;
    const std::uint64_t tau = std::gcd(b * p.K, N);
    const std::uint64_t t = b * p.K / tau;
    const std::uint64_t gamma = N / tau;
    return {a, b, tau - b * (p.U + 1), tau, t, gamma, N, build_air(t, gamma)};
}

std::vector<std::vector<std::uint64_t>> partition_sets(const SniProblem& p,
                                                       const PartitionScheme& scheme) {
    (void)p;
    std::vector<std::vector<std::uint64_t>> sets(scheme.tau);
    for (std::uint64_t i = 0; i < scheme.tau; ++i) {
        sets[i].reserve(scheme.t);
        for (std::uint64_t h = 0; h < scheme.t; ++h) sets[i].push_back(i + h * scheme.tau);
    }
    return sets;
}

std::optional<ScalarPadding> find_scalar_padding(const SniProblem& p) {
    for (std::uint32_t s = 0; s <= p.U + p.D; ++s)
        for (std::uint32_t a = 0; a <= s; ++a) {
            const std::uint32_t b = s - a;
            if (std::gcd<std::uint64_t>(p.K + a, p.D + 1 + a + b) >= std::uint64_t{p.U} + 1 + a)
                return ScalarPadding{a, b, p.D + 1 + s};
        }
    return std::nullopt;
}

std::pair<std::int64_t, std::int64_t> d_interval(std::uint32_t K, std::uint32_t l) {
    const std::int64_t k = K, ll = l;
    return {ll * k / (ll + 1), (ll + 1) * k / (ll + 2) - 1};
}

std::pair<std::int64_t, std::int64_t> u_interval(std::uint32_t K, std::uint32_t l) {
    const std::int64_t k = K, ll = l;
    return {k / (ll + 2), k / (ll + 1) - 1};
}

std::optional<std::uint32_t> full_rate_class(const SniProblem& p) {
    // D_l has empty gaps with nonempty intervals after them, so scan the whole
    // range; D_l stays empty from l = K-1 on.
    for (std::uint32_t l = 1; l <= p.K; ++l) {
        const auto [dlo, dhi] = d_interval(p.K, l);
        const auto [ulo, uhi] = u_interval(p.K, l);
        if (dlo <= p.D && p.D <= dhi && ulo <= p.U && p.U <= uhi) return l;
    }
    return std::nullopt;
}

BoundsReport broadcast_rate_bounds(const SniProblem& p) {
    BoundsReport r{p.D + 1, min_rate_fraction(p), find_scalar_padding(p), p.D + p.U + 1,
                   Rational(0), full_rate_class(p)};
    r.upper = r.l1.rate;
    if (Rational(r.du1) < r.upper) r.upper = Rational(r.du1);
    if (r.padding && Rational(r.padding->length) < r.upper) r.upper = Rational(r.padding->length);
    return r;
}

} // namespace sni
