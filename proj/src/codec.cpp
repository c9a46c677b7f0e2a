#include "sni/codec.hpp"

#include <numeric>

namespace sni {

std::string_view to_string(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::partitioned: return "partitioned";
        case SchemeKind::scalar_padded: return "scalar_padded";
        case SchemeKind::scalar_du: return "scalar_du";
    }
    return "?";
}

SchemeKind scheme_from_string(std::string_view s) {
    if (s == "partitioned") return SchemeKind::partitioned;
    if (s == "scalar_padded") return SchemeKind::scalar_padded;
    if (s == "scalar_du") return SchemeKind::scalar_du;
    throw SchemaError("unknown scheme '" + std::string(s) + "'");
}

MessageVector::MessageVector(const PrimeField& f, std::uint32_t k, std::uint32_t b_,
                             std::vector<std::uint32_t> syms)
    : field(f), K(k), b(b_), symbols(std::move(syms)) {
    if (symbols.size() != static_cast<std::size_t>(K) * b)
        throw DimensionMismatch("message needs K*b symbols");
    for (std::uint32_t& v : symbols)
        if (v >= field.modulus()) throw SchemaError("message symbol out of field range");
}

MessageVector MessageVector::zero(const PrimeField& f, std::uint32_t k, std::uint32_t b_) {
    return {f, k, b_, std::vector<std::uint32_t>(static_cast<std::size_t>(k) * b_, 0)};
}

MessageVector MessageVector::basis(const PrimeField& f, std::uint32_t k, std::uint32_t b_,
                                   std::uint64_t w) {
    MessageVector m = zero(f, k, b_);
    m.symbols.at(w) = 1;
    return m;
}

SideInfo side_info_for(const SniProblem& p, std::uint32_t k, const MessageVector& msg) {
    SideInfo si;
    for (std::uint32_t m : side_info_set(p, k)) {
        std::vector<std::uint32_t> syms(msg.b);
        for (std::uint32_t j = 0; j < msg.b; ++j) syms[j] = msg.symbol(m, j);
        si.emplace(m, std::move(syms));
    }
    return si;
}

namespace {

const std::vector<std::uint32_t>& lookup(const SideInfo& si, std::uint32_t m, std::uint32_t b) {
    const auto it = si.find(m);
    if (it == si.end())
        throw MissingSideInfo("message " + std::to_string(m) + " not in side information");
    if (it->second.size() != b) throw DimensionMismatch("side info entry has wrong width");
    return it->second;
}

} // namespace

Broadcast encode_partitioned(const PartitionScheme& scheme, const MessageVector& msg) {
    const std::uint64_t kb = scheme.t * scheme.tau;
    if (msg.symbols.size() != kb || msg.b != scheme.b)
        throw DimensionMismatch("message does not match scheme dimensions");
    const PrimeField& f = msg.field;
    std::vector<std::uint32_t> code(scheme.N, 0);
    for (std::uint64_t i = 0; i < scheme.tau; ++i)
        for (std::uint64_t s = 0; s < scheme.gamma; ++s) {
            std::uint32_t acc = 0;
            for (std::uint64_t h = 0; h < scheme.t; ++h) {
                const std::uint32_t lhs = scheme.L.bits.at(h, s);
                if (lhs) acc = f.add(acc, msg.symbols[i + h * scheme.tau]);
            }
            code[i + s * scheme.tau] = acc;
        }
    return {f, SchemeKind::partitioned, std::move(code)};
}

std::pair<std::uint32_t, DecodeTrace> decode_symbol_partitioned(
    const PartitionScheme& scheme, const SniProblem& p, const Broadcast& broadcast,
    std::uint32_t k, std::uint32_t j, const SideInfo& side_info) {
    (void)p;  // dimensions are fixed by the scheme; p documents the instance
    if (broadcast.length() != scheme.N || broadcast.scheme != SchemeKind::partitioned)
        throw DimensionMismatch("broadcast does not match scheme");
    const PrimeField& f = broadcast.field;
    const std::uint64_t w = static_cast<std::uint64_t>(k) * scheme.b + j;
    const std::uint64_t g = w % scheme.tau;
    const std::uint64_t h = w / scheme.tau;

    DecodeTrace trace{k, j, {}, {}};
    for (std::uint64_t s = 0; s < scheme.gamma; ++s) trace.code_indices.push_back(g + s * scheme.tau);

    // residual = class code symbols minus the known (side information) positions
    std::vector<std::uint32_t> resid(scheme.gamma);
    for (std::uint64_t s = 0; s < scheme.gamma; ++s) resid[s] = broadcast.symbols[g + s * scheme.tau];
    std::vector<bool> in_window(scheme.t, false);
    for (std::uint64_t r = 0; r < scheme.gamma; ++r) in_window[(h + r) % scheme.t] = true;
    for (std::uint64_t pos = 0; pos < scheme.t; ++pos) {
        if (in_window[pos]) continue;
        const std::uint64_t yw = g + pos * scheme.tau;
        const std::uint32_t msg = static_cast<std::uint32_t>(yw / scheme.b);
        const std::uint32_t slot = static_cast<std::uint32_t>(yw % scheme.b);
        const std::uint32_t v = lookup(side_info, msg, scheme.b)[slot];
        if (v == 0) continue;
        for (std::uint64_t s = 0; s < scheme.gamma; ++s)
            if (scheme.L.bits.at(pos, s)) resid[s] = f.sub(resid[s], v);
    }

    // gamma equations in the gamma cyclic-window unknowns
    FieldMatrix sys(f, scheme.gamma, scheme.gamma);
    for (std::uint64_t s = 0; s < scheme.gamma; ++s)
        for (std::uint64_t r = 0; r < scheme.gamma; ++r)
            sys.set(s, r, scheme.L.bits.at((h + r) % scheme.t, s));
    try {
        trace.solved = solve(sys, resid);
    } catch (const SingularSystem&) {
        throw SingularWindow("cyclic window of the class matrix is singular");
    }
    return {trace.solved[0], trace};
}

Broadcast encode_scalar_padded(const SniProblem& p, const ScalarPadding& pad,
                               const MessageVector& msg) {
    if (std::gcd<std::uint64_t>(p.K + pad.a, p.D + 1 + pad.a + pad.b) <
        std::uint64_t{p.U} + 1 + pad.a)
        throw ConditionViolated("padding pair fails the gcd condition");
    if (msg.b != 1 || msg.K != p.K) throw DimensionMismatch("scalar message expected");
    const PrimeField& f = msg.field;
    const std::uint32_t N = pad.length;
    const AirMatrix L = build_air(p.K + pad.a, N);
    std::vector<std::uint32_t> code(N, 0);
    for (std::uint32_t m = 0; m < p.K; ++m) {
        const std::uint32_t v = msg.symbols[m];
        if (v == 0) continue;
        for (std::uint32_t s = 0; s < N; ++s)
            if (L.bits.at(m, s)) code[s] = f.add(code[s], v);
    }
    return {f, SchemeKind::scalar_padded, std::move(code)};
}

std::uint32_t decode_scalar_padded(const SniProblem& p, const ScalarPadding& pad,
                                   const Broadcast& broadcast, std::uint32_t k,
                                   const SideInfo& side_info) {
    const std::uint32_t N = pad.length;
    if (broadcast.length() != N || broadcast.scheme != SchemeKind::scalar_padded)
        throw DimensionMismatch("broadcast does not match scheme");
    const PrimeField& f = broadcast.field;
    const AirMatrix L = build_air(p.K + pad.a, N);

    std::vector<std::uint32_t> resid(broadcast.symbols);
    for (std::uint32_t m : side_info_set(p, k)) {
        const std::uint32_t v = lookup(side_info, m, 1)[0];
        if (v == 0) continue;
        for (std::uint32_t s = 0; s < N; ++s)
            if (L.bits.at(m, s)) resid[s] = f.sub(resid[s], v);
    }

    const auto interf = interference_set(p, k);
    std::vector<std::size_t> idx(interf.begin(), interf.end());
    const FieldMatrix rows = L.over(f).select_rows(idx);
    const auto wanted = L.over(f).row_copy(k);
    const auto phi = annihilator(rows, wanted);
    return dot(f, phi, resid);
}

Broadcast encode_scalar_du(const SniProblem& p, const MessageVector& msg) {
    if (msg.b != 1 || msg.K != p.K) throw DimensionMismatch("scalar message expected");
    const PrimeField& f = msg.field;
    const std::uint32_t N = p.D + p.U + 1;
    const AirMatrix L = build_air(p.K, N);
    std::vector<std::uint32_t> code(N, 0);
    for (std::uint32_t m = 0; m < p.K; ++m) {
        const std::uint32_t v = msg.symbols[m];
        if (v == 0) continue;
        for (std::uint32_t s = 0; s < N; ++s)
            if (L.bits.at(m, s)) code[s] = f.add(code[s], v);
    }
    return {f, SchemeKind::scalar_du, std::move(code)};
}

std::uint32_t decode_scalar_du(const SniProblem& p, const Broadcast& broadcast, std::uint32_t k,
                               const SideInfo& side_info) {
    const std::uint32_t N = p.D + p.U + 1;
    if (broadcast.length() != N || broadcast.scheme != SchemeKind::scalar_du)
        throw DimensionMismatch("broadcast does not match scheme");
    const PrimeField& f = broadcast.field;
    const AirMatrix L = build_air(p.K, N);

    std::vector<std::uint32_t> resid(broadcast.symbols);
    for (std::uint32_t m : side_info_set(p, k)) {
        const std::uint32_t v = lookup(side_info, m, 1)[0];
        if (v == 0) continue;
        for (std::uint32_t s = 0; s < N; ++s)
            if (L.bits.at(m, s)) resid[s] = f.sub(resid[s], v);
    }

    // unknowns are the contiguous cyclic block k-U .. k+D; its rows form an
    // N-window of L, independent by the AIR property
    FieldMatrix sys(f, N, N);
    for (std::uint32_t s = 0; s < N; ++s)
        for (std::uint32_t r = 0; r < N; ++r)
            sys.set(s, r, L.bits.at((k + p.K - p.U + r) % p.K, s));
    std::vector<std::uint32_t> sol;
    try {
        sol = solve(sys, resid);
    } catch (const SingularSystem&) {
        throw SingularWindow("cyclic row window is singular");
    }
    return sol[p.U];
}

} // namespace sni
