#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sni/codec.hpp"

namespace sni {

/// Outcome of a basis-vector round-trip campaign over one scheme. Every basis
/// message is encoded and every receiver decodes every wanted slot; by
/// linearity this certifies the whole message space.
struct VerificationReport {
    SniProblem problem;
    std::string scheme;
    std::uint32_t q = 2;
    std::uint64_t basis_checked = 0;
    std::uint64_t decodes = 0;
    std::vector<std::string> failures;  // capped at a few entries
    std::size_t max_code_symbols_touched = 0;

    bool verified() const { return failures.empty(); }
    bool instantly_decodable() const { return max_code_symbols_touched <= 1; }
};

VerificationReport verify_partitioned_scheme(const SniProblem& p, const PartitionScheme& scheme,
                                             const PrimeField& f = PrimeField(2));
VerificationReport verify_scalar_padded_scheme(const SniProblem& p, const ScalarPadding& pad,
                                               const PrimeField& f = PrimeField(2));
VerificationReport verify_scalar_du_scheme(const SniProblem& p,
                                           const PrimeField& f = PrimeField(2));

/// One row of the minimum-rate table: consecutive U values with identical
/// search results are merged into a range.
struct RateTableRow {
    std::uint32_t K, D, u_lo, u_hi;
    std::uint64_t a, b;
    std::uint32_t lower;    // D+1
    std::string rate;       // truncated 4-decimal string
    std::uint64_t t, gamma; // class matrix dimensions
    bool instant;           // gamma == 1
};

std::vector<RateTableRow> rate_table(std::uint32_t K = 71, std::uint32_t d_max = 10);
std::string rate_table_csv(const std::vector<RateTableRow>& rows);

struct ClassIntervalRow {
    std::uint32_t l;
    std::int64_t d_lo, d_hi, u_lo, u_hi;
};

std::vector<ClassIntervalRow> class_intervals(std::uint32_t K = 71, std::uint32_t l_max = 5);
std::string class_intervals_csv(const std::vector<ClassIntervalRow>& rows);

/// One row of the bounds sample table: a fixed (D, U-range) cell with the
/// minimum-rate result, verified constant across the range, plus the
/// interval-class remark.
struct BoundsTableRow {
    std::uint32_t K, D, u_lo, u_hi;
    std::uint64_t a, b;
    std::uint32_t lower;
    std::string rate;
    std::string remark;
};

/// The ten-cell sample for K=71. Throws InvalidProblem for other K.
std::vector<BoundsTableRow> bounds_table(std::uint32_t K = 71, std::uint32_t l_max = 5);
std::string bounds_table_csv(const std::vector<BoundsTableRow>& rows);

struct AirSweepReport {
    std::size_t checked = 0;
    std::vector<std::string> violations;

    bool clean() const { return violations.empty(); }
};

/// Both structural property checks for every 1 <= n <= m <= m_max.
AirSweepReport sweep_air_properties(std::size_t m_max);
AirSweepReport sweep_air_properties(std::size_t m_max, std::span<const PrimeField> fields);

/// First mismatching line between two texts, or nothing when equal.
std::optional<std::string> first_diff(const std::string& got, const std::string& want);

std::string read_text_file(const std::string& path);

} // namespace sni
