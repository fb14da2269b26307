#ifndef GRCODES_RECORDS_HPP
#define GRCODES_RECORDS_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grcodes/classify.hpp"
#include "grcodes/mindist.hpp"

namespace grc {

enum class Tier { normal, extended };

std::string to_string(Tier t);
Tier parse_tier(const std::string& s);

/**
 * One code of a table file.
 *
 * Block format:
 *
 *     [code]
 *     field = 5
 *     group = 6x6
 *     u = 0212...
 *     v = 1000...
 *     n = 36
 *     k = 28
 *     d = 6
 *     flags = R,C
 *     tier = normal
 *
 * `shorten = 1,2` makes n, k, d and flags describe F G u shortened on those
 * positions. `flags` may be empty; when the key is absent flags are not
 * compared.
 */
struct CodeRecord {
    std::string field;
    std::string group;
    std::string u;
    std::string v;
    int n = 0;
    int k = 0;
    std::optional<int> d;
    /// Normalized to "", "R", "C" or "R,C".
    std::optional<std::string> flags;
    std::vector<int> shorten;
    Tier tier = Tier::normal;

    /// Line of the `[code]` header; 0 for records built in memory.
    int line = 0;

    friend bool operator==(const CodeRecord& a, const CodeRecord& b) {
        return a.field == b.field && a.group == b.group && a.u == b.u && a.v == b.v && a.n == b.n && a.k == b.k &&
               a.d == b.d && a.flags == b.flags && a.shorten == b.shorten && a.tier == b.tier;
    }
};

/// Malformed record content. The message names the source, record and line.
class RecordError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The file could not be read.
class RecordIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<CodeRecord> parse_records(std::istream& in, const std::string& source = "<input>");
std::vector<CodeRecord> parse_record_file(const std::filesystem::path& path);

std::string format_record(const CodeRecord& r);

/// Flags string from the two predicates.
std::string format_flags(bool reversible, bool lcd);

enum class RowStatus { pass, fail, skip };

struct VerifyOptions {
    /// Extended-tier records are skipped after their structural checks
    /// unless the tier is extended.
    Tier tier = Tier::normal;
    DistanceOptions distance;
};

struct RowReport {
    const CodeRecord* record = nullptr;
    RowStatus status = RowStatus::pass;
    /// Short hyphenated token.
    std::string reason = "ok";
    std::vector<std::string> details;
    int n = 0;
    int k = 0;
    std::optional<int> d;
    std::optional<std::string> flags;
    std::optional<DistanceMethod> method;
    std::vector<Symbol> witness;
    double seconds = 0;

    /// `ROW n=.. k=.. d=.. status=.. reason=..` followed by extra fields.
    std::string line() const;
};

RowReport verify_record(const CodeRecord& r, const VerifyOptions& opts = {});

struct TableReport {
    std::vector<RowReport> rows;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    bool ok() const noexcept { return failed == 0; }
};

/// Rows are reported in input order.
TableReport verify_records(const std::vector<CodeRecord>& records, const VerifyOptions& opts = {});

/// The record's ring elements; throws RecordError when they do not parse.
struct RecordElements {
    GroupRingElement u;
    GroupRingElement v;
};
RecordElements record_elements(const CodeRecord& r);

}  // namespace grc

#endif  // GRCODES_RECORDS_HPP
