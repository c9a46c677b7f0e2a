#include "sni/harness.hpp"

#include <fstream>
#include <sstream>

namespace sni {

namespace {

constexpr std::size_t kFailureCap = 8;

void record_failure(VerificationReport& rep, const std::string& what) {
    if (rep.failures.size() < kFailureCap) rep.failures.push_back(what);
    else if (rep.failures.size() == kFailureCap) rep.failures.push_back("...");
}

std::string urange(std::uint32_t lo, std::uint32_t hi) {
    return lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi);
}

} // namespace

VerificationReport verify_partitioned_scheme(const SniProblem& p, const PartitionScheme& scheme,
                                             const PrimeField& f) {
    VerificationReport rep{p, "partitioned", f.modulus(), 0, 0, {}, 0};
    const std::uint64_t kb = static_cast<std::uint64_t>(p.K) * scheme.b;
    for (std::uint64_t w = 0; w < kb; ++w) {
        const MessageVector msg = MessageVector::basis(f, p.K, static_cast<std::uint32_t>(scheme.b), w);
        const Broadcast bc = encode_partitioned(scheme, msg);
        ++rep.basis_checked;
        for (std::uint32_t k = 0; k < p.K; ++k) {
            const SideInfo si = side_info_for(p, k, msg);
            for (std::uint32_t j = 0; j < scheme.b; ++j) {
                ++rep.decodes;
                try {
                    const auto [value, trace] = decode_symbol_partitioned(scheme, p, bc, k, j, si);
                    if (trace.code_indices.size() > rep.max_code_symbols_touched)
                        rep.max_code_symbols_touched = trace.code_indices.size();
                    if (value != msg.symbol(k, j))
                        record_failure(rep, "basis " + std::to_string(w) + " receiver " +
                                                std::to_string(k) + " slot " + std::to_string(j) +
                                                ": wrong value");
                } catch (const Error& e) {
                    record_failure(rep, "basis " + std::to_string(w) + " receiver " +
                                            std::to_string(k) + " slot " + std::to_string(j) + ": " +
                                            e.what());
                }
            }
        }
    }
    return rep;
}

namespace {

template <typename EncodeFn, typename DecodeFn>
VerificationReport verify_scalar(const SniProblem& p, const PrimeField& f, const char* name,
                                 std::size_t n, EncodeFn encode, DecodeFn decode) {
    VerificationReport rep{p, name, f.modulus(), 0, 0, {}, 0};
    rep.max_code_symbols_touched = n;  // scalar decoders read the whole broadcast
    for (std::uint32_t w = 0; w < p.K; ++w) {
        const MessageVector msg = MessageVector::basis(f, p.K, 1, w);
        const Broadcast bc = encode(msg);
        ++rep.basis_checked;
        for (std::uint32_t k = 0; k < p.K; ++k) {
            ++rep.decodes;
            try {
                const std::uint32_t value = decode(bc, k, side_info_for(p, k, msg));
                if (value != msg.symbol(k, 0))
                    record_failure(rep, "basis " + std::to_string(w) + " receiver " +
                                            std::to_string(k) + ": wrong value");
            } catch (const Error& e) {
                record_failure(rep, "basis " + std::to_string(w) + " receiver " +
                                        std::to_string(k) + ": " + e.what());
            }
        }
    }
    return rep;
}

} // namespace

VerificationReport verify_scalar_padded_scheme(const SniProblem& p, const ScalarPadding& pad,
                                               const PrimeField& f) {
    return verify_scalar(
        p, f, "scalar_padded", pad.length,
        [&](const MessageVector& m) { return encode_scalar_padded(p, pad, m); },
        [&](const Broadcast& bc, std::uint32_t k, const SideInfo& si) {
            return decode_scalar_padded(p, pad, bc, k, si);
        });
}

VerificationReport verify_scalar_du_scheme(const SniProblem& p, const PrimeField& f) {
    return verify_scalar(
        p, f, "scalar_du", p.D + p.U + 1,
        [&](const MessageVector& m) { return encode_scalar_du(p, m); },
        [&](const Broadcast& bc, std::uint32_t k, const SideInfo& si) {
            return decode_scalar_du(p, bc, k, si);
        });
}

std::vector<RateTableRow> rate_table(std::uint32_t K, std::uint32_t d_max) {
    std::vector<RateTableRow> rows;
    for (std::uint32_t D = 1; D <= d_max; ++D) {
        for (std::uint32_t U = 1; U <= D; ++U) {
            const SniProblem p(K, D, U);
            const RateFraction rf = min_rate_fraction(p);
            const PartitionScheme sc = partition_params(p, rf.a, rf.b);
            if (!rows.empty()) {
                RateTableRow& last = rows.back();
                if (last.D == D && last.u_hi == U - 1 && last.a == rf.a && last.b == rf.b) {
                    last.u_hi = U;
                    continue;
                }
            }
            rows.push_back({K, D, U, U, rf.a, rf.b, D + 1, rf.rate.decimal4(), sc.t, sc.gamma,
                            sc.gamma == 1});
        }
    }
    return rows;
}

std::string rate_table_csv(const std::vector<RateTableRow>& rows) {
    std::ostringstream out;
    out << "K,D,U,a_min,b_min,lower,rate,dims,instant\n";
    for (const RateTableRow& r : rows)
        out << r.K << ',' << r.D << ',' << urange(r.u_lo, r.u_hi) << ',' << r.a << ',' << r.b
            << ',' << r.lower << ',' << r.rate << ',' << r.t << 'x' << r.gamma << ','
            << (r.instant ? "**" : "") << '\n';
    return out.str();
}

std::vector<ClassIntervalRow> class_intervals(std::uint32_t K, std::uint32_t l_max) {
    std::vector<ClassIntervalRow> rows;
    for (std::uint32_t l = 1; l <= l_max; ++l) {
        const auto [dlo, dhi] = d_interval(K, l);
        const auto [ulo, uhi] = u_interval(K, l);
        rows.push_back({l, dlo, dhi, ulo, uhi});
    }
    return rows;
}

std::string class_intervals_csv(const std::vector<ClassIntervalRow>& rows) {
    std::ostringstream out;
    out << "l,D_lo,D_hi,U_lo,U_hi\n";
    for (const ClassIntervalRow& r : rows)
        out << r.l << ',' << r.d_lo << ',' << r.d_hi << ',' << r.u_lo << ',' << r.u_hi << '\n';
    return out.str();
}

namespace {

std::optional<std::uint32_t> d_class(std::uint32_t K, std::uint32_t D) {
    for (std::uint32_t l = 1; l <= K; ++l) {
        const auto [lo, hi] = d_interval(K, l);
        if (lo <= D && D <= hi) return l;
    }
    return std::nullopt;
}

bool u_in_some_class(std::uint32_t K, std::uint32_t U, std::uint32_t l_max) {
    for (std::uint32_t l = 1; l <= l_max; ++l) {
        const auto [lo, hi] = u_interval(K, l);
        if (lo <= U && U <= hi) return true;
    }
    return false;
}

// The D_l intervals are disjoint, so a classified D fixes the l at which U is
// tested; an unclassified D leaves only the displayed interval range.
std::string remark_for(std::uint32_t K, std::uint32_t D, std::uint32_t u_lo, std::uint32_t u_hi,
                       std::uint32_t l_max) {
    const auto ld = d_class(K, D);
    bool u_in;
    if (ld) {
        const auto [lo, hi] = u_interval(K, *ld);
        u_in = lo <= u_lo && u_hi <= hi;
    } else {
        u_in = u_in_some_class(K, u_lo, l_max) && u_in_some_class(K, u_hi, l_max);
    }
    return std::string("D ") + (ld ? "in" : "not in") + " D_l; U " + (u_in ? "in" : "not in") +
           " U_l";
}

} // namespace

std::vector<BoundsTableRow> bounds_table(std::uint32_t K, std::uint32_t l_max) {
    if (K != 71) throw InvalidProblem("bounds sample table is defined for K = 71");
    static const std::uint32_t cells[][3] = {
        {44, 1, 5}, {44, 6, 22}, {44, 23, 26}, {45, 1, 2},  {45, 3, 22},
        {45, 23, 26}, {27, 27, 27}, {33, 25, 25}, {15, 2, 2}, {3, 1, 1},
    };
    std::vector<BoundsTableRow> rows;
    for (const auto& cell : cells) {
        const std::uint32_t D = cell[0], u_lo = cell[1], u_hi = cell[2];
        // one reference cell reaches U+D = K; evaluate over the valid part
        // only, keep the printed range
        const std::uint32_t u_eval_hi = std::min(u_hi, K - D - 1);
        const RateFraction first = min_rate_fraction(SniProblem(K, D, u_lo));
        for (std::uint32_t U = u_lo + 1; U <= u_eval_hi; ++U) {
            const RateFraction rf = min_rate_fraction(SniProblem(K, D, U));
            if (rf.a != first.a || rf.b != first.b)
                throw Error("bounds table cell is not constant across its U range");
        }
        rows.push_back({K, D, u_lo, u_hi, first.a, first.b, D + 1, first.rate.decimal4(),
                        remark_for(K, D, u_lo, u_hi, l_max)});
    }
    return rows;
}

std::string bounds_table_csv(const std::vector<BoundsTableRow>& rows) {
    std::ostringstream out;
    out << "K,D,U,a,b,lower,rate,remark\n";
    for (const BoundsTableRow& r : rows)
        out << r.K << ',' << r.D << ',' << urange(r.u_lo, r.u_hi) << ',' << r.a << ',' << r.b
            << ',' << r.lower << ',' << r.rate << ',' << r.remark << '\n';
    return out.str();
}

AirSweepReport sweep_air_properties(std::size_t m_max) {
    return sweep_air_properties(m_max, default_check_fields());
}

AirSweepReport sweep_air_properties(std::size_t m_max, std::span<const PrimeField> fields) {
    AirSweepReport rep;
    for (std::size_t m = 1; m <= m_max; ++m)
        for (std::size_t n = 1; n <= m; ++n) {
            const AirMatrix air = build_air(m, n);
            ++rep.checked;
            if (!check_adjacent_independence(air, true, fields))
                rep.violations.push_back(std::to_string(m) + "x" + std::to_string(n) +
                                         ": adjacent window dependent");
            if (!check_span_exclusion(air, fields))
                rep.violations.push_back(std::to_string(m) + "x" + std::to_string(n) +
                                         ": span exclusion fails");
        }
    return rep;
}

std::optional<std::string> first_diff(const std::string& got, const std::string& want) {
    std::istringstream g(got), w(want);
    std::string gl, wl;
    std::size_t line = 0;
    while (true) {
        ++line;
        const bool hg = static_cast<bool>(std::getline(g, gl));
        const bool hw = static_cast<bool>(std::getline(w, wl));
        if (!hg && !hw) return std::nullopt;
        if (hg != hw)
            return "line " + std::to_string(line) + ": " +
                   (hg ? "unexpected extra line '" + gl + "'" : "missing line '" + wl + "'");
        if (gl != wl)
            return "line " + std::to_string(line) + ": got '" + gl + "', want '" + wl + "'";
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace sni
