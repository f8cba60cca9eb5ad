#include "vran/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace vran {

using nlohmann::json;

namespace {

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string display(const json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

std::vector<json> logspace_values(const std::string& param, const json& spec)
{
    if (!spec.is_object() || !spec.contains("from") || !spec.contains("to") ||
        !spec.contains("count"))
        throw ValidationError("`" + param + "`: logspace needs from, to and count");
    if (!spec.at("from").is_string() || !spec.at("to").is_string())
        throw ValidationError("`" + param + "`: logspace bounds must be duration strings");
    const double lo = parse_duration(spec.at("from").get<std::string>()).in_seconds();
    const double hi = parse_duration(spec.at("to").get<std::string>()).in_seconds();
    if (!spec.at("count").is_number_integer() || spec.at("count").get<long long>() < 2)
        throw ValidationError("`" + param + "`: logspace count must be an integer >= 2");
    const auto count = spec.at("count").get<long long>();
    if (!(lo > 0.0 && hi > lo))
        throw ValidationError("`" + param + "`: logspace needs 0 < from < to");
    if (count > static_cast<long long>(kMaxGridPoints))
        throw ValidationError("`" + param + "`: logspace count too large");

    std::vector<json> out;
    const double step = std::log10(hi / lo) / static_cast<double>(count - 1);
    for (long long i = 0; i < count; ++i) {
        const double v = i + 1 == count ? hi : lo * std::pow(10.0, step * static_cast<double>(i));
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.6gs", v);
        out.emplace_back(std::string(buf));
    }
    return out;
}

// Sets one field on a model config, keeping mtfo and mtfo_o/mtfo_h exclusive.
void assign(json& config, const std::string& param, const json& value)
{
    if (param == "mtfo") {
        config.erase("mtfo_o");
        config.erase("mtfo_h");
    } else if ((param == "mtfo_o" || param == "mtfo_h") && config.contains("mtfo")) {
        const json shared = config.at("mtfo");
        config.erase("mtfo");
        config["mtfo_o"] = shared;
        config["mtfo_h"] = shared;
    }
    config[param] = value;
}

std::vector<std::size_t> coordinates_of(std::size_t index, const SweepSpec& spec)
{
    std::vector<std::size_t> coords(spec.axes.size());
    for (std::size_t k = spec.axes.size(); k-- > 0;) {
        const std::size_t n = spec.axes[k].values.size();
        coords[k] = index % n;
        index /= n;
    }
    return coords;
}

}  // namespace

std::size_t SweepSpec::point_count() const
{
    std::size_t total = 1;
    for (const auto& axis : axes) {
        if (axis.values.empty())
            return 0;
        if (total > kMaxGridPoints)
            return total;
        total *= axis.values.size();
    }
    return total;
}

SweepSpec parse_sweep_spec(const json& j)
{
    if (!j.is_object())
        throw ValidationError("sweep file must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "base" && key != "grid")
            throw ValidationError("`" + key + "`: unknown field (expected base, grid)");

    SweepSpec spec;
    if (j.contains("base")) {
        if (!j.at("base").is_object())
            throw ValidationError("`base`: expected an object");
        spec.base = j.at("base");
    }
    if (j.contains("grid")) {
        if (!j.at("grid").is_array())
            throw ValidationError("`grid`: expected an array");
        const auto& known = model_config_keys();
        for (const auto& entry : j.at("grid")) {
            if (!entry.is_object() || !entry.contains("param") || !entry.at("param").is_string())
                throw ValidationError("`grid`: each axis needs a string `param`");
            SweepAxis axis;
            axis.param = entry.at("param").get<std::string>();
            if (std::find(known.begin(), known.end(), axis.param) == known.end())
                throw ValidationError("`" + axis.param + "`: not a model parameter");
            for (const auto& other : spec.axes)
                if (other.param == axis.param)
                    throw ValidationError("`" + axis.param + "`: listed twice in grid");
            const bool has_values = entry.contains("values");
            const bool has_logspace = entry.contains("logspace");
            if (has_values == has_logspace)
                throw ValidationError("`" + axis.param + "`: give exactly one of values or logspace");
            if (has_values) {
                if (!entry.at("values").is_array())
                    throw ValidationError("`" + axis.param + "`: values must be an array");
                for (const auto& v : entry.at("values"))
                    axis.values.push_back(v);
            } else {
                axis.values = logspace_values(axis.param, entry.at("logspace"));
            }
            if (axis.values.empty())
                throw ValidationError("`" + axis.param + "`: empty value list");
            spec.axes.push_back(std::move(axis));
        }
    }

    const std::size_t count = spec.point_count();
    if (count > kMaxGridPoints)
        throw ValidationError("grid has more than " + std::to_string(kMaxGridPoints) +
                              " points (at least " + std::to_string(count) + "); refusing");
    return spec;
}

unsigned default_thread_count()
{
    if (const char* env = std::getenv("VRAN_AVAIL_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepPoint> run_sweep(const SweepSpec& spec, unsigned threads)
{
    const std::size_t count = spec.point_count();
    std::vector<SweepPoint> points(count);
    for (std::size_t i = 0; i < count; ++i) {
        points[i].coordinates = coordinates_of(i, spec);
        json config = spec.base;
        for (std::size_t k = 0; k < spec.axes.size(); ++k)
            assign(config, spec.axes[k].param, spec.axes[k].values[points[i].coordinates[k]]);
        points[i].config = parse_model_config(config);
    }

    if (threads == 0)
        threads = default_thread_count();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                const ModelConfig& c = points[i].config;
                points[i].report = cluster_availability(c.params, c.spec, c.variant);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return points;
}

std::string csv_header()
{
    return "mode,n_h,n_s,mttf_s,mttr_s,mttf_o,mttr_o,mttf_h,mttr_h,mtfo_o,mtfo_h,model_variant,"
           "states,f_platform,f_app,f_cluster,outage_platform,outage_app,outage_cluster,"
           "nines,nines_p,nines_s";
}

std::string csv_row(const ModelConfig& c, const ClusterReport& r)
{
    const RateParams& p = c.params;
    std::ostringstream os;
    os << to_string(c.spec.mode) << ',' << c.spec.n_h << ',' << c.spec.n_s;
    for (const Duration* d : {&p.mttf_s, &p.mttr_s, &p.mttf_o, &p.mttr_o, &p.mttf_h, &p.mttr_h,
                              &p.mtfo_o, &p.mtfo_h})
        os << ',' << num(d->in_seconds());
    os << ',' << to_string(c.variant) << ',' << r.platform_states;
    for (double v : {r.f_platform, r.f_app, r.f_cluster, r.outage_platform, r.outage_app,
                     r.outage_cluster})
        os << ',' << num(v);
    os << ',' << r.nines_cluster << ',' << r.nines_platform << ',' << r.nines_app;
    return os.str();
}

void write_csv(std::ostream& os, const std::vector<SweepPoint>& points)
{
    os << provenance_line("csv-v1 durations-in-seconds") << '\n' << csv_header() << '\n';
    for (const auto& p : points)
        os << csv_row(p.config, p.report) << '\n';
}

namespace {

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        out.push_back(cell);
    return out;
}

void write_columns(std::ostream& os, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size())
                line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << line << '\n';
    }
}

}  // namespace

void write_aligned(std::ostream& os, const std::vector<SweepPoint>& points)
{
    std::vector<std::vector<std::string>> rows{split_csv(csv_header())};
    for (const auto& p : points)
        rows.push_back(split_csv(csv_row(p.config, p.report)));
    write_columns(os, rows);
}

std::vector<NinesGroup> group_by_nines(const SweepSpec& spec, const std::vector<SweepPoint>& points)
{
    struct Block {
        NinesGroup group;
        std::size_t first = 0;
    };
    std::vector<Block> blocks;
    blocks.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        Block b;
        b.group.nines = points[i].report.nines_cluster;
        b.group.nines_platform = points[i].report.nines_platform;
        b.group.nines_app = points[i].report.nines_app;
        for (std::size_t c : points[i].coordinates)
            b.group.values.push_back({c});
        b.group.point_count = 1;
        b.first = i;
        blocks.push_back(std::move(b));
    }

    // Two blocks with the same triple that agree on every axis but one
    // combine into a block that is still a full cartesian product.
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t axis = spec.axes.size(); axis-- > 0;) {
            std::map<std::vector<std::vector<std::size_t>>, std::size_t> seen;
            std::vector<Block> kept;
            for (auto& b : blocks) {
                auto key = b.group.values;
                key[axis].clear();
                key.push_back({static_cast<std::size_t>(b.group.nines),
                               static_cast<std::size_t>(b.group.nines_platform),
                               static_cast<std::size_t>(b.group.nines_app)});
                const auto it = seen.find(key);
                if (it == seen.end()) {
                    seen.emplace(std::move(key), kept.size());
                    kept.push_back(std::move(b));
                    continue;
                }
                Block& into = kept[it->second];
                auto& dst = into.group.values[axis];
                dst.insert(dst.end(), b.group.values[axis].begin(), b.group.values[axis].end());
                std::sort(dst.begin(), dst.end());
                dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
                into.group.point_count += b.group.point_count;
                into.first = std::min(into.first, b.first);
                merged = true;
            }
            blocks = std::move(kept);
        }
    }

    std::stable_sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
        const auto kx = std::tuple(x.group.nines, x.group.nines_platform, x.group.nines_app, x.first);
        const auto ky = std::tuple(y.group.nines, y.group.nines_platform, y.group.nines_app, y.first);
        return kx < ky;
    });
    std::vector<NinesGroup> out;
    for (auto& b : blocks)
        out.push_back(std::move(b.group));
    return out;
}

void write_nines_table(std::ostream& os, const SweepSpec& spec, const std::vector<NinesGroup>& groups)
{
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"#9s", "#9s_p", "#9s_s"};
    for (const auto& axis : spec.axes)
        header.push_back(axis.param);
    header.push_back("points");
    rows.push_back(header);
    for (const auto& g : groups) {
        std::vector<std::string> row{std::to_string(g.nines), std::to_string(g.nines_platform),
                                     std::to_string(g.nines_app)};
        for (std::size_t k = 0; k < spec.axes.size(); ++k) {
            std::string cell;
            for (std::size_t idx : g.values[k])
                cell += (cell.empty() ? "" : ", ") + display(spec.axes[k].values[idx]);
            row.push_back(cell);
        }
        row.push_back(std::to_string(g.point_count));
        rows.push_back(std::move(row));
    }
    write_columns(os, rows);

    std::string fixed;
    for (const auto& [key, value] : spec.base.items()) {
        const bool varied = std::any_of(spec.axes.begin(), spec.axes.end(),
                                        [&](const SweepAxis& a) { return a.param == key; });
        if (!varied)
            fixed += (fixed.empty() ? "" : ", ") + key + "=" + display(value);
    }
    if (!fixed.empty())
        os << "fixed: " << fixed << '\n';
}

}  // namespace vran
