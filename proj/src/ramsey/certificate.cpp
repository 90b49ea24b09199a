#include "planram/ramsey.hpp"

#include "planram/error.hpp"

#include "json.hpp"

namespace planram {

const char* toolkit_version() noexcept
{
    return PLANRAM_VERSION;
}

const char* verdict_name(Verdict v) noexcept
{
    switch (v) {
    case Verdict::verified:
        return "verified";
    case Verdict::refuted:
        return "refuted";
    case Verdict::infeasible:
        return "infeasible";
    }
    return "infeasible";
}

std::string to_json(const Certificate& c, bool with_runtime)
{
    // nlohmann::json objects keep keys in std::map order.
    nlohmann::json j;
    j["claim_id"] = c.claim_id;
    j["verdict"] = verdict_name(c.verdict);
    j["exhaustive"] = c.exhaustive;
    j["witnesses"] = c.witnesses;
    j["counts"] = nlohmann::json::object();
    for (const auto& [k, v] : c.counts)
        j["counts"][k] = v;
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : c.params)
        j["params"][k] = v;
    j["notes"] = nlohmann::json::object();
    for (const auto& [k, v] : c.notes)
        j["notes"][k] = v;
    if (with_runtime)
        j["runtime_ms"] = c.runtime_ms;
    j["version"] = c.version;
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("certificate is not JSON: ") + e.what());
    }
    try {
        Certificate c;
        c.claim_id = j.at("claim_id").get<std::string>();
        const std::string v = j.at("verdict").get<std::string>();
        if (v == "verified")
            c.verdict = Verdict::verified;
        else if (v == "refuted")
            c.verdict = Verdict::refuted;
        else if (v == "infeasible")
            c.verdict = Verdict::infeasible;
        else
            throw Error(ErrorKind::ParseError, "unknown verdict '" + v + "'");
        c.exhaustive = j.at("exhaustive").get<bool>();
        c.witnesses = j.at("witnesses").get<std::vector<std::string>>();
        c.counts = j.at("counts").get<std::map<std::string, std::int64_t>>();
        c.params = j.at("params").get<std::map<std::string, std::int64_t>>();
        if (j.contains("notes"))
            c.notes = j.at("notes").get<std::map<std::string, std::string>>();
        if (j.contains("runtime_ms"))
            c.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
        c.version = j.at("version").get<std::string>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed certificate: ") + e.what());
    }
}

int exit_code(std::span<const Certificate> certs)
{
    bool infeasible = false;
    for (const Certificate& c : certs) {
        if (c.verdict == Verdict::refuted)
            return 1;
        infeasible = infeasible || c.verdict == Verdict::infeasible;
    }
    return infeasible ? 2 : 0;
}

} // namespace planram
