#include "sni/serialize.hpp"

#include <fstream>

#include <json.hpp>

namespace sni {

using nlohmann::json;

namespace {

json rational_json(const Rational& r) {
    return json{{"num", r.num()}, {"den", r.den()}, {"decimal", r.decimal4()}};
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("malformed JSON");
    return j;
}

std::uint32_t require_u32(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw SchemaError(std::string("missing or invalid field '") + key + "'");
    return j[key].get<std::uint32_t>();
}

std::vector<std::uint32_t> require_symbols(const json& j) {
    if (!j.contains("symbols") || !j["symbols"].is_array())
        throw SchemaError("missing 'symbols' array");
    std::vector<std::uint32_t> out;
    for (const auto& v : j["symbols"]) {
        if (!v.is_number_unsigned()) throw SchemaError("symbols must be non-negative integers");
        out.push_back(v.get<std::uint32_t>());
    }
    return out;
}

} // namespace

std::string air_to_text(const AirMatrix& air) {
    std::string out;
    for (std::size_t r = 0; r < air.m; ++r) {
        for (std::size_t c = 0; c < air.n; ++c) {
            if (c) out += ' ';
            out += static_cast<char>('0' + air.bits.at(r, c));
        }
        out += '\n';
    }
    return out;
}

std::string air_to_json(const AirMatrix& air) {
    json rows = json::array();
    for (std::size_t r = 0; r < air.m; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < air.n; ++c) row.push_back(air.bits.at(r, c));
        rows.push_back(std::move(row));
    }
    return json{{"m", air.m}, {"n", air.n}, {"rows", rows}}.dump(2) + "\n";
}

std::string message_to_json(const MessageVector& msg) {
    return json{{"q", msg.field.modulus()}, {"K", msg.K}, {"b", msg.b}, {"symbols", msg.symbols}}
               .dump(2) +
           "\n";
}

MessageVector message_from_json(const std::string& text) {
    const json j = parse(text);
    const std::uint32_t q = require_u32(j, "q");
    const std::uint32_t K = require_u32(j, "K");
    const std::uint32_t b = require_u32(j, "b");
    try {
        return {PrimeField(q), K, b, require_symbols(j)};
    } catch (const NotPrime& e) {
        throw SchemaError(e.what());
    } catch (const DimensionMismatch& e) {
        throw SchemaError(e.what());
    }
}

std::string broadcast_to_json(const Broadcast& bc) {
    return json{{"q", bc.field.modulus()},
                {"scheme", std::string(to_string(bc.scheme))},
                {"N", bc.length()},
                {"symbols", bc.symbols}}
               .dump(2) +
           "\n";
}

Broadcast broadcast_from_json(const std::string& text) {
    const json j = parse(text);
    const std::uint32_t q = require_u32(j, "q");
    if (!j.contains("scheme") || !j["scheme"].is_string())
        throw SchemaError("missing 'scheme' string");
    const SchemeKind kind = scheme_from_string(j["scheme"].get<std::string>());
    auto symbols = require_symbols(j);
    if (require_u32(j, "N") != symbols.size())
        throw SchemaError("N does not match symbol count");
    PrimeField f = [&] {
        try {
            return PrimeField(q);
        } catch (const NotPrime& e) {
            throw SchemaError(e.what());
        }
    }();
    for (std::uint32_t v : symbols)
        if (v >= q) throw SchemaError("broadcast symbol out of field range");
    return {f, kind, std::move(symbols)};
}

std::string rate_result_to_json(const SniProblem& p, const RateFraction& rf,
                                const PartitionScheme& scheme) {
    return json{{"K", p.K},
                {"D", p.D},
                {"U", p.U},
                {"a_min", rf.a},
                {"b_min", rf.b},
                {"l1", rational_json(rf.rate)},
                {"t", scheme.t},
                {"gamma", scheme.gamma},
                {"N", scheme.N},
                {"instant", scheme.gamma == 1}}
               .dump(2) +
           "\n";
}

std::string bounds_to_json(const SniProblem& p, const BoundsReport& rep) {
    json j{{"K", p.K},
           {"D", p.D},
           {"U", p.U},
           {"lower", rep.lower},
           {"l1", rational_json(rep.l1.rate)},
           {"l1_a", rep.l1.a},
           {"l1_b", rep.l1.b},
           {"du1", rep.du1},
           {"upper", rational_json(rep.upper)}};
    if (rep.padding) {
        j["l2"] = rep.padding->length;
        j["l2_a"] = rep.padding->a;
        j["l2_b"] = rep.padding->b;
    } else {
        j["l2"] = nullptr;
    }
    if (rep.full_rate) j["full_rate_class"] = *rep.full_rate;
    else j["full_rate_class"] = nullptr;
    return j.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& rep) {
    return json{{"K", rep.problem.K},
                {"D", rep.problem.D},
                {"U", rep.problem.U},
                {"scheme", rep.scheme},
                {"q", rep.q},
                {"basis_checked", rep.basis_checked},
                {"decodes", rep.decodes},
                {"max_code_symbols_touched", rep.max_code_symbols_touched},
                {"instantly_decodable", rep.instantly_decodable()},
                {"verified", rep.verified()},
                {"failures", rep.failures}}
               .dump(2) +
           "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot write " + path);
    out << content;
}

} // namespace sni
