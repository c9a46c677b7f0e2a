#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "sni/suicp.hpp"

namespace sni {

enum class SchemeKind { partitioned, scalar_padded, scalar_du };

std::string_view to_string(SchemeKind kind);
SchemeKind scheme_from_string(std::string_view s);

/// Flat message symbols y_0 .. y_{Kb-1} over GF(q); y_w is symbol w mod b of
/// message w / b.
struct MessageVector {
    PrimeField field;
    std::uint32_t K;
    std::uint32_t b;
    std::vector<std::uint32_t> symbols;

    MessageVector(const PrimeField& f, std::uint32_t k, std::uint32_t b_,
                  std::vector<std::uint32_t> syms);

    static MessageVector zero(const PrimeField& f, std::uint32_t k, std::uint32_t b_);
    static MessageVector basis(const PrimeField& f, std::uint32_t k, std::uint32_t b_,
                               std::uint64_t w);

    std::uint32_t symbol(std::uint32_t msg, std::uint32_t slot) const {
        return symbols[static_cast<std::size_t>(msg) * b + slot];
    }
};

struct Broadcast {
    PrimeField field;
    SchemeKind scheme;
    std::vector<std::uint32_t> symbols;

    std::size_t length() const { return symbols.size(); }
};

/// What one partitioned decode touched: the gamma code indices of the class
/// window plus the solved window values.
struct DecodeTrace {
    std::uint32_t receiver;
    std::uint32_t slot;
    std::vector<std::uint64_t> code_indices;
    std::vector<std::uint32_t> solved;
};

/// Receiver-side knowledge: message index -> its b symbols. Decoders read
/// nothing else besides the broadcast.
using SideInfo = std::map<std::uint32_t, std::vector<std::uint32_t>>;

SideInfo side_info_for(const SniProblem& p, std::uint32_t k, const MessageVector& msg);

// --- partitioned vector code -------------------------------------------------

/// Per class i: [c_i c_{i+tau} ... c_{i+(gamma-1)tau}] =
/// [y_i y_{i+tau} ... y_{i+(t-1)tau}] L.
Broadcast encode_partitioned(const PartitionScheme& scheme, const MessageVector& msg);

/// Recovers y_{kb+j}. Solves the gamma x gamma system of the cyclic row window
/// of L starting at the wanted symbol's class position; every class position
/// outside the window is side information by construction.
std::pair<std::uint32_t, DecodeTrace> decode_symbol_partitioned(
    const PartitionScheme& scheme, const SniProblem& p, const Broadcast& broadcast,
    std::uint32_t k, std::uint32_t j, const SideInfo& side_info);

// --- zero-padded scalar code -------------------------------------------------

Broadcast encode_scalar_padded(const SniProblem& p, const ScalarPadding& pad,
                               const MessageVector& msg);

/// Subtracts side information, then applies the annihilator functional of the
/// receiver's interference rows. The padded rows are known zeros.
std::uint32_t decode_scalar_padded(const SniProblem& p, const ScalarPadding& pad,
                                   const Broadcast& broadcast, std::uint32_t k,
                                   const SideInfo& side_info);

// --- length D+U+1 scalar code ------------------------------------------------

Broadcast encode_scalar_du(const SniProblem& p, const MessageVector& msg);

/// Solves the (D+U+1)-row cyclic window covering rows k-U .. k+D after
/// substituting side information.
std::uint32_t decode_scalar_du(const SniProblem& p, const Broadcast& broadcast, std::uint32_t k,
                               const SideInfo& side_info);

} // namespace sni
