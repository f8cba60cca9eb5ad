#include "vran/config.hpp"

#include "vran/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace vran {

using nlohmann::json;

namespace {

const std::vector<std::string> kModelKeys = {
    "mode",   "n_h",    "n_s",    "mttf_s", "mttr_s", "mttf_o", "mttr_o",       "mttf_h",
    "mttr_h", "mtfo",   "mtfo_o", "mtfo_h", "model_variant",
};

const std::vector<std::string> kSimulateKeys = {"seed", "horizon", "batches", "target"};

[[noreturn]] void fail(const std::string& field, const std::string& what)
{
    throw ValidationError("`" + field + "`: " + what);
}

std::string format_seconds(double s)
{
    std::ostringstream os;
    os.precision(17);
    os << s << "s";
    return os.str();
}

Duration read_duration(const json& j, const std::string& key, bool allow_afr = false)
{
    if (!j.contains(key))
        fail(key, "missing");
    const json& v = j.at(key);
    if (!v.is_string())
        fail(key, "expected a duration string such as \"10h\"");
    const std::string text = v.get<std::string>();
    try {
        if (allow_afr && !text.empty() && text.back() == '%') {
            const Duration percent = parse_duration(text.substr(0, text.size() - 1) + "s");
            return afr_to_mttf(percent.value() / 100.0);
        }
        const Duration d = parse_duration(text);
        if (!(d.in_seconds() > 0.0))
            fail(key, "must be strictly positive");
        return d;
    } catch (const ValidationError& e) {
        if (std::string(e.what()).starts_with("`"))
            throw;
        fail(key, e.what());
    }
}

int read_count(const json& j, const std::string& key, int fallback)
{
    if (!j.contains(key))
        return fallback;
    const json& v = j.at(key);
    if (!v.is_number_integer())
        fail(key, "expected an integer");
    const auto n = v.get<long long>();
    if (n < 1)
        fail(key, "must be >= 1, got " + std::to_string(n));
    if (n > 64)
        fail(key, "must be <= 64, got " + std::to_string(n));
    return static_cast<int>(n);
}

void reject_unknown(const json& j, const std::vector<std::string>& allowed,
                    const std::vector<std::string>& also = {})
{
    for (const auto& [key, value] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end() &&
            std::find(also.begin(), also.end(), key) == also.end())
            fail(key, "unknown field");
    }
}

double read_probability(const json& j, const std::string& key)
{
    const json& v = j.at(key);
    if (!v.is_number())
        fail(key, "expected a number");
    const double p = v.get<double>();
    if (!(p >= 0.0 && p <= 1.0))
        fail(key, "must lie in [0, 1], got " + std::to_string(p));
    return p;
}

// Returns (availability, outage) for one side of a network scenario.
std::pair<double, double> read_side(const json& j, const std::string& side)
{
    const std::string outage_key = side + "_outage";
    const std::string avail_key = "f_" + side;
    const int given = int(j.contains(outage_key)) + int(j.contains(avail_key)) + int(j.contains(side));
    if (given != 1)
        fail(side, "give exactly one of `" + outage_key + "`, `" + avail_key + "` or `" + side + "`");
    if (j.contains(outage_key)) {
        const double q = read_probability(j, outage_key);
        return {1.0 - q, q};
    }
    if (j.contains(avail_key)) {
        const double f = read_probability(j, avail_key);
        return {f, 1.0 - f};
    }
    const ModelConfig c = parse_model_config(j.at(side));
    const ClusterReport r = cluster_availability(c.params, c.spec, c.variant);
    return {r.f_cluster, r.outage_cluster};
}

}  // namespace

std::string provenance_line(const std::string& what)
{
    return std::string("# vran-avail ") + kToolVersion + " " + what +
           " canonical-unit=s month=30d year=365d";
}

const std::vector<std::string>& model_config_keys()
{
    return kModelKeys;
}

ModelVariant parse_variant(const std::string& text)
{
    if (text == "standard")
        return ModelVariant::kStandard;
    if (text == "drop-eq5")
        return ModelVariant::kDropTempFailedHwFailure;
    throw ValidationError("`model_variant`: expected standard or drop-eq5, got '" + text + "'");
}

std::string to_string(ModelVariant variant)
{
    return variant == ModelVariant::kStandard ? "standard" : "drop-eq5";
}

ModelConfig parse_model_config(const json& j)
{
    if (!j.is_object())
        throw ValidationError("model config must be a JSON object");
    reject_unknown(j, kModelKeys);

    ModelConfig c;
    if (j.contains("mode")) {
        if (!j.at("mode").is_string())
            fail("mode", "expected a string");
        try {
            c.spec.mode = parse_mode(j.at("mode").get<std::string>());
        } catch (const ValidationError& e) {
            fail("mode", e.what());
        }
    }
    if (!j.contains("n_h"))
        fail("n_h", "missing");
    c.spec.n_h = read_count(j, "n_h", 1);
    c.spec.n_s = read_count(j, "n_s", 1);

    c.params.mttf_s = read_duration(j, "mttf_s");
    c.params.mttr_s = read_duration(j, "mttr_s");
    c.params.mttf_o = read_duration(j, "mttf_o");
    c.params.mttr_o = read_duration(j, "mttr_o");
    c.params.mttf_h = read_duration(j, "mttf_h", true);
    c.params.mttr_h = read_duration(j, "mttr_h");

    const bool single = j.contains("mtfo");
    const bool split = j.contains("mtfo_o") || j.contains("mtfo_h");
    if (single && split)
        fail("mtfo", "give either `mtfo` or `mtfo_o`/`mtfo_h`, not both");
    if (single) {
        c.params.mtfo_o = c.params.mtfo_h = read_duration(j, "mtfo");
    } else if (split) {
        c.params.mtfo_o = read_duration(j, "mtfo_o");
        c.params.mtfo_h = read_duration(j, "mtfo_h");
    } else {
        c.params.mtfo_o = c.params.mtfo_h = Duration::seconds(10.0);
    }

    if (j.contains("model_variant")) {
        if (!j.at("model_variant").is_string())
            fail("model_variant", "expected a string");
        c.variant = parse_variant(j.at("model_variant").get<std::string>());
    }

    c.params.validate();
    c.spec.validate();
    return c;
}

json resolved_config(const ModelConfig& c)
{
    json j;
    j["mode"] = std::string(to_string(c.spec.mode));
    j["n_h"] = c.spec.n_h;
    j["n_s"] = c.spec.n_s;
    j["mttf_s"] = format_seconds(c.params.mttf_s.in_seconds());
    j["mttr_s"] = format_seconds(c.params.mttr_s.in_seconds());
    j["mttf_o"] = format_seconds(c.params.mttf_o.in_seconds());
    j["mttr_o"] = format_seconds(c.params.mttr_o.in_seconds());
    j["mttf_h"] = format_seconds(c.params.mttf_h.in_seconds());
    j["mttr_h"] = format_seconds(c.params.mttr_h.in_seconds());
    j["mtfo_o"] = format_seconds(c.params.mtfo_o.in_seconds());
    j["mtfo_h"] = format_seconds(c.params.mtfo_h.in_seconds());
    j["model_variant"] = to_string(c.variant);
    return j;
}

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open config file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("config file '" + path + "' is not valid JSON: " + e.what());
    }
}

SimulateConfig parse_simulate_config(const json& j)
{
    if (!j.is_object())
        throw ValidationError("simulate config must be a JSON object");
    reject_unknown(j, kModelKeys, kSimulateKeys);

    json model = j;
    for (const auto& k : kSimulateKeys)
        model.erase(k);

    SimulateConfig s;
    s.model = parse_model_config(model);
    if (j.contains("seed")) {
        const json& seed = j.at("seed");
        if (!seed.is_number_integer() || (!seed.is_number_unsigned() && seed.get<long long>() < 0))
            fail("seed", "expected a non-negative integer");
        s.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("horizon"))
        s.horizon_seconds = read_duration(j, "horizon").in_seconds();
    if (j.contains("batches")) {
        if (!j.at("batches").is_number_integer() || j.at("batches").get<long long>() < 10)
            fail("batches", "expected an integer >= 10");
        s.batches = j.at("batches").get<int>();
    }
    if (j.contains("target")) {
        const json& t = j.at("target");
        if (!t.is_string() || (t != "cluster" && t != "platform"))
            fail("target", "expected cluster or platform");
        s.cluster_target = t == "cluster";
    }
    return s;
}

std::vector<NetworkScenario> parse_network_config(const json& j)
{
    if (!j.is_object())
        throw ValidationError("network config must be a JSON object");

    int default_sites = 0;
    if (j.contains("n_c")) {
        if (!j.at("n_c").is_number_integer() || j.at("n_c").get<long long>() < 1)
            fail("n_c", "expected an integer >= 1");
        default_sites = j.at("n_c").get<int>();
    }

    std::vector<json> scenarios;
    if (j.contains("scenarios")) {
        reject_unknown(j, {"n_c", "scenarios"});
        if (!j.at("scenarios").is_array() || j.at("scenarios").empty())
            fail("scenarios", "expected a non-empty array");
        for (const auto& s : j.at("scenarios"))
            scenarios.push_back(s);
    } else {
        scenarios.push_back(j);
    }

    const std::vector<std::string> scenario_keys = {"n_c", "du_outage", "f_du", "du",
                                                    "cu_outage", "f_cu", "cu"};
    std::vector<NetworkScenario> out;
    for (const auto& s : scenarios) {
        if (!s.is_object())
            fail("scenarios", "each scenario must be an object");
        reject_unknown(s, scenario_keys);
        int sites = default_sites;
        if (s.contains("n_c")) {
            if (!s.at("n_c").is_number_integer() || s.at("n_c").get<long long>() < 1)
                fail("n_c", "expected an integer >= 1");
            sites = s.at("n_c").get<int>();
        }
        if (sites < 1)
            fail("n_c", "missing");
        const auto [f_du, du_outage] = read_side(s, "du");
        const auto [f_cu, cu_outage] = read_side(s, "cu");
        out.push_back(NetworkScenario::from_parts(sites, f_du, du_outage, f_cu, cu_outage));
    }
    return out;
}

}  // namespace vran
