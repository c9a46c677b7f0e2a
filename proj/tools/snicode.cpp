// Command-line surface: build AIR matrices, search rates, compute bounds,
// encode/decode, reproduce the reference tables, and verify schemes.
//
// Exit codes: 0 success / verified, 1 verification or golden-diff failure,
// 2 invalid parameters, 3 file schema mismatch, 4 not decodable.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sni/serialize.hpp"

namespace {

using namespace sni;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitSchema = 3;
constexpr int kExitNotDecodable = 4;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) std::cout << text;
    else write_text_file(out_path, text);
}

struct ProblemFlags {
    std::uint32_t K = 0, D = 0, U = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("-K,--messages", K, "message count K")->required();
        cmd->add_option("-D,--after", D, "interfering messages after the wanted one")->required();
        cmd->add_option("-U,--before", U, "interfering messages before the wanted one")->required();
    }
    SniProblem problem() const { return {K, D, U}; }
};

PrimeField field_flag(std::uint32_t q) {
    if (q > 97) throw InvalidProblem("q is limited to primes <= 97");
    return PrimeField(q);
}

int run_air(std::size_t m, std::size_t n, const std::string& format, const std::string& out,
            bool check) {
    const AirMatrix air = build_air(m, n);
    if (check) {
        const bool adj = check_adjacent_independence(air, true);
        const bool excl = check_span_exclusion(air);
        std::cout << "adjacent-independence: " << (adj ? "pass" : "FAIL") << "\n"
                  << "span-exclusion: " << (excl ? "pass" : "FAIL") << "\n";
        return adj && excl ? kExitOk : kExitFailure;
    }
    emit(format == "json" ? air_to_json(air) : air_to_text(air), out);
    return kExitOk;
}

int run_rate(const ProblemFlags& pf, const std::string& out) {
    const SniProblem p = pf.problem();
    const RateFraction rf = min_rate_fraction(p);
    emit(rate_result_to_json(p, rf, partition_params(p, rf.a, rf.b)), out);
    return kExitOk;
}

int run_bounds(const ProblemFlags& pf, const std::string& out) {
    const SniProblem p = pf.problem();
    emit(bounds_to_json(p, broadcast_rate_bounds(p)), out);
    return kExitOk;
}

ScalarPadding padding_for(const SniProblem& p, std::optional<std::uint32_t> a,
                          std::optional<std::uint32_t> b) {
    if (a && b) return {*a, *b, p.D + 1 + *a + *b};
    const auto found = find_scalar_padding(p);
    if (!found) throw ConditionViolated("no padding pair with a+b <= U+D; pass -a/-b explicitly");
    return *found;
}

int run_encode(const ProblemFlags& pf, const std::string& scheme_name,
               std::optional<std::uint32_t> a, std::optional<std::uint32_t> b,
               const std::string& in, const std::string& out) {
    const SniProblem p = pf.problem();
    const SchemeKind kind = scheme_from_string(scheme_name);
    const MessageVector msg = message_from_json(read_text_file(in));
    if (msg.K != p.K) throw SchemaError("message K does not match the problem");
    Broadcast bc{msg.field, kind, {}};
    if (kind == SchemeKind::partitioned) {
        std::uint64_t pa, pb;
        if (a && b) { pa = *a; pb = *b; }
        else { const RateFraction rf = min_rate_fraction(p); pa = rf.a; pb = rf.b; }
        if (msg.b != pb) throw SchemaError("message dimension b does not match the scheme");
        bc = encode_partitioned(partition_params(p, pa, pb), msg);
    } else if (kind == SchemeKind::scalar_padded) {
        bc = encode_scalar_padded(p, padding_for(p, a, b), msg);
    } else {
        bc = encode_scalar_du(p, msg);
    }
    emit(broadcast_to_json(bc), out);
    return kExitOk;
}

int run_decode(const ProblemFlags& pf, const std::string& scheme_name,
               std::optional<std::uint32_t> a, std::optional<std::uint32_t> b,
               const std::string& in, const std::string& side_path,
               std::optional<std::uint32_t> receiver, const std::string& out) {
    const SniProblem p = pf.problem();
    const SchemeKind kind = scheme_from_string(scheme_name);
    const Broadcast bc = broadcast_from_json(read_text_file(in));
    if (bc.scheme != kind) throw SchemaError("broadcast file carries a different scheme");
    const MessageVector ref = message_from_json(read_text_file(side_path));
    if (ref.K != p.K || !(ref.field == bc.field))
        throw SchemaError("side-info file does not match the problem/broadcast");

    nlohmann::json receivers = nlohmann::json::array();
    std::uint32_t k_lo = receiver.value_or(0);
    std::uint32_t k_hi = receiver.value_or(p.K - 1);
    for (std::uint32_t k = k_lo; k <= k_hi; ++k) {
        const SideInfo si = side_info_for(p, k, ref);
        nlohmann::json entry{{"k", k}};
        if (kind == SchemeKind::partitioned) {
            std::uint64_t pa, pb;
            if (a && b) { pa = *a; pb = *b; }
            else { const RateFraction rf = min_rate_fraction(p); pa = rf.a; pb = rf.b; }
            if (ref.b != pb) throw SchemaError("side-info dimension b does not match the scheme");
            const PartitionScheme scheme = partition_params(p, pa, pb);
            nlohmann::json symbols = nlohmann::json::array();
            nlohmann::json traces = nlohmann::json::array();
            for (std::uint32_t j = 0; j < scheme.b; ++j) {
                const auto [value, trace] = decode_symbol_partitioned(scheme, p, bc, k, j, si);
                symbols.push_back(value);
                traces.push_back({{"slot", j}, {"code_indices", trace.code_indices}});
            }
            entry["symbols"] = symbols;
            entry["traces"] = traces;
        } else {
            if (ref.b != 1) throw SchemaError("scalar schemes need b = 1 side info");
            std::uint32_t value;
            if (kind == SchemeKind::scalar_padded)
                value = decode_scalar_padded(p, padding_for(p, a, b), bc, k, si);
            else
                value = decode_scalar_du(p, bc, k, si);
            entry["symbols"] = nlohmann::json::array({value});
            nlohmann::json all = nlohmann::json::array();
            for (std::size_t s = 0; s < bc.length(); ++s) all.push_back(s);
            entry["traces"] =
                nlohmann::json::array({{{"slot", 0}, {"code_indices", all}}});
        }
        receivers.push_back(std::move(entry));
    }
    emit(nlohmann::json{{"scheme", scheme_name}, {"receivers", receivers}}.dump(2) + "\n", out);
    return kExitOk;
}

int run_table(const std::string& which, std::uint32_t K, std::uint32_t d_max,
              const std::string& golden, const std::string& out) {
    std::string csv;
    if (which == "rates") csv = rate_table_csv(rate_table(K, d_max));
    else if (which == "intervals") csv = class_intervals_csv(class_intervals(K));
    else if (which == "bounds") csv = bounds_table_csv(bounds_table(K));
    else throw InvalidProblem("unknown table '" + which + "'");
    if (!golden.empty()) {
        const auto diff = first_diff(csv, read_text_file(golden));
        if (diff) {
            std::cerr << "golden mismatch, " << *diff << "\n";
            return kExitFailure;
        }
        std::cout << "golden match: " << golden << "\n";
        return kExitOk;
    }
    emit(csv, out);
    return kExitOk;
}

int run_verify(const ProblemFlags& pf, const std::string& scheme_name, bool all_schemes,
               std::optional<std::uint32_t> a, std::optional<std::uint32_t> b, std::uint32_t q) {
    const SniProblem p = pf.problem();
    const PrimeField f = field_flag(q);
    std::vector<VerificationReport> reports;
    const auto run_partitioned = [&] {
        std::uint64_t pa, pb;
        if (a && b) { pa = *a; pb = *b; }
        else { const RateFraction rf = min_rate_fraction(p); pa = rf.a; pb = rf.b; }
        reports.push_back(verify_partitioned_scheme(p, partition_params(p, pa, pb), f));
    };
    if (all_schemes) {
        run_partitioned();
        reports.push_back(verify_scalar_du_scheme(p, f));
        if (const auto pad = find_scalar_padding(p))
            reports.push_back(verify_scalar_padded_scheme(p, *pad, f));
    } else {
        const SchemeKind kind = scheme_from_string(scheme_name);
        if (kind == SchemeKind::partitioned) run_partitioned();
        else if (kind == SchemeKind::scalar_du) reports.push_back(verify_scalar_du_scheme(p, f));
        else reports.push_back(verify_scalar_padded_scheme(p, padding_for(p, a, b), f));
    }
    bool ok = true;
    for (const VerificationReport& rep : reports) {
        std::cout << report_to_json(rep);
        ok = ok && rep.verified();
    }
    return ok ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"index codes for symmetric neighboring interference"};
    app.require_subcommand(1);

    // air
    auto* air = app.add_subcommand("air", "build an m x n AIR matrix");
    std::size_t m = 0, n = 0;
    std::string format = "text", out, golden;
    bool check = false;
    air->add_option("--m", m, "rows")->required();
    air->add_option("--n", n, "columns")->required();
    air->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    air->add_option("--out", out, "write to file instead of stdout");
    air->add_flag("--check", check, "run both structural property checks");

    // rate
    auto* rate = app.add_subcommand("rate", "minimum achievable vector rate");
    ProblemFlags rate_p; rate_p.attach(rate);
    std::string rate_out;
    rate->add_option("--out", rate_out);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "broadcast rate bounds");
    ProblemFlags bounds_p; bounds_p.attach(bounds);
    std::string bounds_out;
    bounds->add_option("--out", bounds_out);

    // encode / decode
    auto* encode = app.add_subcommand("encode", "encode a message file");
    ProblemFlags enc_p; enc_p.attach(encode);
    std::string enc_scheme = "partitioned", enc_in, enc_out;
    std::optional<std::uint32_t> enc_a, enc_b;
    encode->add_option("--scheme", enc_scheme)
        ->check(CLI::IsMember({"partitioned", "scalar_padded", "scalar_du"}));
    encode->add_option("-a", enc_a, "scheme parameter a");
    encode->add_option("-b", enc_b, "scheme parameter b");
    encode->add_option("--in", enc_in, "message JSON file")->required();
    encode->add_option("--out", enc_out, "broadcast JSON file");

    auto* decode = app.add_subcommand("decode", "decode a broadcast file");
    ProblemFlags dec_p; dec_p.attach(decode);
    std::string dec_scheme = "partitioned", dec_in, dec_side, dec_out;
    std::optional<std::uint32_t> dec_a, dec_b, dec_k;
    decode->add_option("--scheme", dec_scheme)
        ->check(CLI::IsMember({"partitioned", "scalar_padded", "scalar_du"}));
    decode->add_option("-a", dec_a, "scheme parameter a");
    decode->add_option("-b", dec_b, "scheme parameter b");
    decode->add_option("--in", dec_in, "broadcast JSON file")->required();
    decode->add_option("--side-info", dec_side, "message JSON file supplying side information")
        ->required();
    decode->add_option("--receiver", dec_k, "decode only this receiver");
    decode->add_option("--out", dec_out);

    // table
    auto* table = app.add_subcommand("table", "reproduce a reference table");
    std::string which = "rates", table_out;
    std::uint32_t table_K = 71, d_max = 10;
    table->add_option("--which", which)->check(CLI::IsMember({"rates", "intervals", "bounds"}));
    table->add_option("--K", table_K);
    table->add_option("--Dmax", d_max);
    table->add_option("--golden", golden, "diff against this CSV; nonzero exit on mismatch");
    table->add_option("--out", table_out);

    // verify
    auto* verify = app.add_subcommand("verify", "basis round-trip verification");
    ProblemFlags ver_p; ver_p.attach(verify);
    std::string ver_scheme = "partitioned";
    bool all_schemes = false;
    std::optional<std::uint32_t> ver_a, ver_b;
    std::uint32_t ver_q = 2;
    verify->add_option("--scheme", ver_scheme)
        ->check(CLI::IsMember({"partitioned", "scalar_padded", "scalar_du"}));
    verify->add_flag("--all-schemes", all_schemes);
    verify->add_option("-a", ver_a);
    verify->add_option("-b", ver_b);
    verify->add_option("--q", ver_q, "field modulus (prime <= 97)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadParams;
    }

    try {
        if (air->parsed()) return run_air(m, n, format, out, check);
        if (rate->parsed()) return run_rate(rate_p, rate_out);
        if (bounds->parsed()) return run_bounds(bounds_p, bounds_out);
        if (encode->parsed()) return run_encode(enc_p, enc_scheme, enc_a, enc_b, enc_in, enc_out);
        if (decode->parsed())
            return run_decode(dec_p, dec_scheme, dec_a, dec_b, dec_in, dec_side, dec_k, dec_out);
        if (table->parsed()) return run_table(which, table_K, d_max, golden, table_out);
        if (verify->parsed())
            return run_verify(ver_p, ver_scheme, all_schemes, ver_a, ver_b, ver_q);
    } catch (const NotDecodable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotDecodable;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const MissingSideInfo& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
    return kExitBadParams;
}
