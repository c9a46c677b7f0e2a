#pragma once

#include <string>

#include "sni/harness.hpp"

namespace sni {

// Wire formats. All JSON is emitted with sorted keys and 2-space indentation,
// so identical inputs give byte-identical files.

std::string air_to_text(const AirMatrix& air);
std::string air_to_json(const AirMatrix& air);

std::string message_to_json(const MessageVector& msg);
MessageVector message_from_json(const std::string& text);

std::string broadcast_to_json(const Broadcast& bc);
Broadcast broadcast_from_json(const std::string& text);

std::string rate_result_to_json(const SniProblem& p, const RateFraction& rf,
                                const PartitionScheme& scheme);
std::string bounds_to_json(const SniProblem& p, const BoundsReport& report);
std::string report_to_json(const VerificationReport& rep);

void write_text_file(const std::string& path, const std::string& content);

} // namespace sni
