#include "hardylab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "hardylab/error.hpp"

namespace hardylab {

using nlohmann::json;

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header) : os_(os), columns_(header.size()) {
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) throw ContractError("CsvWriter: wrong number of cells");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os_ << ',';
        os_ << cells[i];
    }
    os_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_double(v));
    row(cells);
}

namespace {

// nlohmann writes NaN as null; keep that, but make infinities explicit.
json num(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

json window_json(const Window& w) { return json::array({w.lo, w.hi}); }

}  // namespace

json to_json(const WeightPlan& plan) {
    json j{{"mode", to_string(plan.mode())}, {"m", plan.m()}};
    if (plan.mode() == WeightMode::ExactCesaro) j["r"] = plan.r();
    if (plan.mode() == WeightMode::Sigmoid) j["t_anchor"] = plan.t_anchor();
    return j;
}

json to_json(const ZeroList& list) {
    json tangent = json::array();
    for (bool b : list.tangent) tangent.push_back(b);
    return json{{"schema", "hardylab.zerolist/1"},
                {"label", list.label},
                {"interval", json::array({list.lo, list.hi})},
                {"step", list.step},
                {"tol", list.refine_tol},
                {"zeros", list.zeros},
                {"tangent", tangent}};
}

ZeroList zero_list_from_json(const json& j) {
    if (j.value("schema", "") != "hardylab.zerolist/1") throw CacheError("zero list: unexpected schema");
    ZeroList z;
    z.label = j.at("label").get<std::string>();
    z.lo = j.at("interval").at(0).get<double>();
    z.hi = j.at("interval").at(1).get<double>();
    z.step = j.at("step").get<double>();
    z.refine_tol = j.at("tol").get<double>();
    z.zeros = j.at("zeros").get<std::vector<double>>();
    z.tangent = j.at("tangent").get<std::vector<bool>>();
    return z;
}

json to_json(const DriftReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"j", r.j},
                        {"degenerate", r.degenerate},
                        {"q_zeros", r.q_zeros},
                        {"offsets", r.offsets},
                        {"mean_abs_offset", r.mean_abs_offset},
                        {"max_abs_offset", r.max_abs_offset},
                        {"amplitude", r.amplitude}});
    }
    return json{{"schema", "hardylab.qk_drift/1"},
                {"t_window", window_json(report.window)},
                {"plan", report.source},
                {"cos_zeros", report.cos_zeros},
                {"per_j", rows}};
}

json to_json(const NestingReport& report) {
    json intervals = json::array();
    for (const auto& iv : report.intervals) {
        json steps = json::array();
        for (const auto& s : iv.steps) {
            steps.push_back({{"k", s.k},
                             {"status", to_string(s.status)},
                             {"left", num(s.left)},
                             {"right", num(s.right)},
                             {"dominance_ratio", num(s.dominance_ratio)}});
        }
        intervals.push_back({{"z0_left", iv.z0_left}, {"z0_right", iv.z0_right}, {"steps", steps}});
    }
    const auto& s = report.summary;
    return json{{"schema", "hardylab.nesting/1"},
                {"t_window", window_json(report.window)},
                {"alpha", report.alpha},
                {"plan", report.source},
                {"per_interval", intervals},
                {"summary",
                 {{"intervals", s.intervals},
                  {"nested", s.nested},
                  {"violated", s.violated},
                  {"count_mismatch", s.mismatched},
                  {"fully_nested_intervals", s.fully_nested_intervals}}}};
}

json to_json(const SpacingReport& report) {
    return json{{"schema", "hardylab.spacing/1"},
                {"min_gap", {{"t_left", report.min_gap.t_left}, {"t_right", report.min_gap.t_right}, {"gap", report.min_gap.gap}}},
                {"normalized_gaps", report.normalized_gaps},
                {"bin_width", report.gap_histogram.bin_width},
                {"gap_histogram", report.gap_histogram.counts},
                {"pair_histogram", report.pair_histogram.counts},
                {"pair_density", report.pair_density},
                {"gue_reference", report.gue_reference}};
}

json to_json(const LehmerCandidates& report) {
    json cands = json::array();
    for (const auto& c : report.candidates) {
        cands.push_back({{"left", c.left},
                         {"right", c.right},
                         {"z0_sign", c.z0_sign},
                         {"q_sign_left", c.q_sign_left},
                         {"q_sign_right", c.q_sign_right}});
    }
    return json{{"schema", "hardylab.lehmer_candidates/1"},
                {"t_window", window_json(report.window)},
                {"threshold_n", report.threshold_n},
                {"intervals_checked", report.intervals_checked},
                {"candidates", cands}};
}

json to_json(const std::vector<PairRecord>& pairs) {
    json arr = json::array();
    for (const auto& p : pairs) {
        arr.push_back({{"i", p.i},
                       {"z0_left", p.z0_left},
                       {"z0_right", p.z0_right},
                       {"za_left", p.za_left},
                       {"za_right", p.za_right},
                       {"class", to_string(p.cls)},
                       {"gap", p.gap}});
    }
    return json{{"schema", "hardylab.pairs/1"}, {"pairs", arr}};
}

json to_json(const ExpansionEval& e) {
    return json{{"schema", "hardylab.sequence/1"}, {"t", e.t},     {"alpha", e.alpha},
                {"depth", e.depth},                {"q", e.q},     {"p", e.p},
                {"z_seq", e.z_seq}};
}

void write_zero_list_csv(std::ostream& os, const ZeroList& list) {
    CsvWriter w(os, {"i", "t", "tangent"});
    for (std::size_t i = 0; i < list.zeros.size(); ++i) {
        w.row({std::to_string(i), format_double(list.zeros[i]), list.tangent[i] ? "1" : "0"});
    }
}

void write_pairs_csv(std::ostream& os, const std::vector<PairRecord>& pairs) {
    CsvWriter w(os, {"i", "z0_left", "z0_right", "za_left", "za_right", "class", "gap"});
    for (const auto& p : pairs) {
        w.row({std::to_string(p.i), format_double(p.z0_left), format_double(p.z0_right), format_double(p.za_left),
               format_double(p.za_right), to_string(p.cls), format_double(p.gap)});
    }
}

void write_histogram_csv(std::ostream& os, const SpacingReport& report) {
    CsvWriter w(os, {"u", "gap_count", "pair_count", "pair_density", "gue"});
    for (std::size_t b = 0; b < report.pair_histogram.counts.size(); ++b) {
        w.row({format_double(report.pair_histogram.center(b)), std::to_string(report.gap_histogram.counts[b]),
               std::to_string(report.pair_histogram.counts[b]), format_double(report.pair_density[b]),
               format_double(report.gue_reference[b])});
    }
}

std::vector<double> read_number_column(std::istream& is) {
    std::vector<double> out;
    std::string line;
    while (std::getline(is, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const std::string cell = line.substr(first, line.find(',', first) - first);
        try {
            std::size_t used = 0;
            const double v = std::stod(cell, &used);
            out.push_back(v);
        } catch (const std::exception&) {
            if (!out.empty()) throw DomainError("unparseable number '" + cell + "'");
        }
    }
    return out;
}

std::vector<double> read_zeros(std::istream& is) {
    const std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return zero_list_from_json(json::parse(text)).zeros;
        } catch (const json::exception& e) {
            throw DomainError(std::string("bad zero list: ") + e.what());
        }
    }
    std::istringstream lines(text);
    std::string line;
    std::size_t column = 0;
    std::ostringstream picked;
    bool header_seen = false;
    while (std::getline(lines, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::vector<std::string> cells;
        std::istringstream row(line);
        for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
        if (!header_seen) {
            header_seen = true;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (cells[i] == "t") column = i;
            }
        }
        if (column < cells.size()) picked << cells[column] << '\n';
    }
    std::istringstream in(picked.str());
    return read_number_column(in);
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

ZeroCache::ZeroCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::string ZeroCache::request_key(const std::string& label, double lo, double hi, double step, double tol) {
    return label + "|" + format_double(lo) + "|" + format_double(hi) + "|" + format_double(step) + "|" +
           format_double(tol);
}

std::filesystem::path ZeroCache::path_for(const std::string& key) const {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a64(key)));
    return dir_ / name;
}

std::optional<ZeroList> ZeroCache::load(const std::string& key) const {
    const auto path = path_for(key);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    std::ifstream in(path);
    if (!in) throw CacheError("cannot read cache entry " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw CacheError("corrupt cache entry " + path.string() + ": " + e.what());
    }
    if (j.value("request", "") != key) return std::nullopt;
    return zero_list_from_json(j.at("zero_list"));
}

void ZeroCache::store(const std::string& key, const ZeroList& list) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw CacheError("cannot create cache directory " + dir_.string() + ": " + ec.message());
    const auto path = path_for(key);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw CacheError("cannot write cache entry " + tmp);
        out << json{{"request", key}, {"zero_list", to_json(list)}}.dump() << '\n';
        if (!out) throw CacheError("short write on " + tmp);
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CacheError("cannot finalize cache entry " + path.string() + ": " + ec.message());
}

}  // namespace hardylab
