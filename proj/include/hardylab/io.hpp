#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardylab/binom.hpp"
#include "hardylab/pairs.hpp"
#include "hardylab/roots.hpp"
#include "hardylab/weights.hpp"

namespace hardylab {

/// Round-trip decimal form of a double (%.17g); "nan"/"inf" spelled out.
std::string format_double(double x);

/// Minimal CSV writer: header once, then rows of preformatted cells.
class CsvWriter {
public:
    CsvWriter(std::ostream& os, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& cells);
    void row(const std::vector<double>& values);

private:
    std::ostream& os_;
    std::size_t columns_;
};

nlohmann::json to_json(const WeightPlan& plan);
nlohmann::json to_json(const ZeroList& list);
ZeroList zero_list_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DriftReport& report);
nlohmann::json to_json(const NestingReport& report);
nlohmann::json to_json(const SpacingReport& report);
nlohmann::json to_json(const LehmerCandidates& report);
nlohmann::json to_json(const std::vector<PairRecord>& pairs);
nlohmann::json to_json(const ExpansionEval& e);

void write_zero_list_csv(std::ostream& os, const ZeroList& list);
void write_pairs_csv(std::ostream& os, const std::vector<PairRecord>& pairs);
void write_histogram_csv(std::ostream& os, const SpacingReport& report);

/// Reads one number per line (first CSV column); blank lines, '#' comments
/// and a non-numeric header line are skipped.
std::vector<double> read_number_column(std::istream& is);

/// Zero ordinates from a zero-list JSON document, a CSV with a "t" column
/// (as written by write_zero_list_csv), or a bare one-number-per-line list.
std::vector<double> read_zeros(std::istream& is);

/// Content-addressed store of ZeroLists. The key is the full request
/// string; the file name is its 64-bit FNV-1a hash. A stored entry is only
/// returned when its recorded request matches exactly.
class ZeroCache {
public:
    explicit ZeroCache(std::filesystem::path dir);

    static std::string request_key(const std::string& label, double lo, double hi, double step, double tol);

    std::optional<ZeroList> load(const std::string& key) const;
    /// Throws CacheError on any filesystem failure.
    void store(const std::string& key, const ZeroList& list) const;

    std::filesystem::path path_for(const std::string& key) const;

private:
    std::filesystem::path dir_;
};

std::uint64_t fnv1a64(const std::string& s);

}  // namespace hardylab
