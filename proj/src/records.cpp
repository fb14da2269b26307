#include "grcodes/records.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

namespace grc {

std::string to_string(Tier t) { return t == Tier::normal ? "normal" : "extended"; }

Tier parse_tier(const std::string& s) {
    if (s == "normal") return Tier::normal;
    if (s == "extended") return Tier::extended;
    throw std::invalid_argument("unknown tier '" + s + "'");
}

std::string format_flags(bool reversible, bool lcd) {
    if (reversible && lcd) return "R,C";
    if (reversible) return "R";
    if (lcd) return "C";
    return "";
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

class Parser {
public:
    explicit Parser(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(int line, const std::string& what) const {
        std::ostringstream os;
        os << source_ << ":" << line << ": ";
        if (index_ > 0) os << "record " << index_ << ": ";
        os << what;
        throw RecordError(os.str());
    }

    std::vector<CodeRecord> run(std::istream& in) {
        std::vector<CodeRecord> out;
        std::string raw;
        int line = 0;
        while (std::getline(in, raw)) {
            ++line;
            std::string text = raw;
            if (const auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
            text = trim(text);
            if (text.empty()) {
                // Blank lines end a block; comment-only lines do not.
                if (trim(raw).empty() && open_) close(out);
                continue;
            }
            if (text == "[code]") {
                if (open_) close(out);
                open_ = true;
                ++index_;
                cur_ = CodeRecord{};
                cur_.line = line;
                seen_.clear();
                continue;
            }
            if (!open_) fail(line, "expected [code] before '" + text + "'");
            const auto eq = text.find('=');
            if (eq == std::string::npos) fail(line, "malformed line '" + text + "'");
            set(trim(text.substr(0, eq)), trim(text.substr(eq + 1)), line);
        }
        if (open_) close(out);
        return out;
    }

private:
    int to_int(const std::string& s, int line, const std::string& key) const {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(s, &pos);
            if (pos == s.size() && v >= 0) return v;
        } catch (const std::exception&) {
        }
        fail(line, "bad integer for " + key + ": '" + s + "'");
    }

    void set(const std::string& key, const std::string& value, int line) {
        if (std::find(seen_.begin(), seen_.end(), key) != seen_.end()) fail(line, "duplicate key '" + key + "'");
        seen_.push_back(key);
        lines_[key] = line;
        if (key == "field")
            cur_.field = value;
        else if (key == "group")
            cur_.group = value;
        else if (key == "u")
            cur_.u = value;
        else if (key == "v")
            cur_.v = value;
        else if (key == "n")
            cur_.n = to_int(value, line, key);
        else if (key == "k")
            cur_.k = to_int(value, line, key);
        else if (key == "d")
            cur_.d = to_int(value, line, key);
        else if (key == "flags") {
            bool r = false, c = false;
            for (const auto& f : value.empty() ? std::vector<std::string>{} : split_commas(value)) {
                if (f == "R")
                    r = true;
                else if (f == "C")
                    c = true;
                else
                    fail(line, "unknown flag '" + f + "'");
            }
            cur_.flags = format_flags(r, c);
        } else if (key == "shorten") {
            for (const auto& p : split_commas(value)) cur_.shorten.push_back(to_int(p, line, key));
        } else if (key == "tier") {
            try {
                cur_.tier = parse_tier(value);
            } catch (const std::invalid_argument& e) {
                fail(line, e.what());
            }
        } else
            fail(line, "unknown key '" + key + "'");
    }

    void close(std::vector<CodeRecord>& out) {
        open_ = false;
        const int head = cur_.line;
        auto at = [&](const char* key) { return lines_.count(key) ? lines_[key] : head; };
        for (const char* key : {"field", "group", "u", "v", "n", "k"})
            if (std::find(seen_.begin(), seen_.end(), key) == seen_.end())
                fail(head, std::string("missing key '") + key + "'");
        Field f = [&] {
            try {
                return Field::parse(cur_.field);
            } catch (const std::exception& e) {
                fail(at("field"), std::string("unknown field: ") + e.what());
            }
        }();
        AbelianGroup g = [&] {
            try {
                return AbelianGroup::parse(cur_.group);
            } catch (const std::exception& e) {
                fail(at("group"), std::string("bad group: ") + e.what());
            }
        }();
        const int order = g.order();
        for (const char* key : {"u", "v"}) {
            const std::string& s = key[0] == 'u' ? cur_.u : cur_.v;
            std::vector<Symbol> xs;
            try {
                xs = f.parse_vector(s);
            } catch (const std::exception& e) {
                fail(at(key), std::string(key) + ": " + e.what());
            }
            if (static_cast<int>(xs.size()) != order)
                fail(at(key), std::string(key) + " has " + std::to_string(xs.size()) + " coefficients, group order is " +
                                  std::to_string(order));
        }
        const int expected_n = order - static_cast<int>(cur_.shorten.size());
        if (cur_.n != expected_n)
            fail(at("n"), "n = " + std::to_string(cur_.n) + " but the group order gives " + std::to_string(expected_n));
        for (int p : cur_.shorten)
            if (p < 1 || p > order) fail(at("shorten"), "shortening position " + std::to_string(p) + " out of range");
        if (cur_.k > cur_.n) fail(at("k"), "k exceeds n");
        out.push_back(cur_);
        lines_.clear();
    }

    std::string source_;
    int index_ = 0;
    bool open_ = false;
    CodeRecord cur_;
    std::vector<std::string> seen_;
    std::map<std::string, int> lines_;
};

}  // namespace

std::vector<CodeRecord> parse_records(std::istream& in, const std::string& source) { return Parser(source).run(in); }

std::vector<CodeRecord> parse_record_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw RecordIoError("cannot open " + path.string());
    auto out = parse_records(in, path.string());
    if (in.bad()) throw RecordIoError("read error on " + path.string());
    return out;
}

std::string format_record(const CodeRecord& r) {
    std::ostringstream os;
    os << "[code]\n";
    os << "field = " << r.field << "\n";
    os << "group = " << r.group << "\n";
    os << "u = " << r.u << "\n";
    os << "v = " << r.v << "\n";
    if (!r.shorten.empty()) {
        os << "shorten = ";
        for (std::size_t i = 0; i < r.shorten.size(); ++i) os << (i ? "," : "") << r.shorten[i];
        os << "\n";
    }
    os << "n = " << r.n << "\n";
    os << "k = " << r.k << "\n";
    if (r.d) os << "d = " << *r.d << "\n";
    if (r.flags) os << "flags =" << (r.flags->empty() ? "" : " " + *r.flags) << "\n";
    if (r.tier != Tier::normal) os << "tier = " << to_string(r.tier) << "\n";
    return os.str();
}

RecordElements record_elements(const CodeRecord& r) {
    try {
        GroupRing ring(Field::parse(r.field), AbelianGroup::parse(r.group));
        return {ring.parse(r.u), ring.parse(r.v)};
    } catch (const std::exception& e) {
        throw RecordError("record at line " + std::to_string(r.line) + ": " + e.what());
    }
}

std::string RowReport::line() const {
    std::ostringstream os;
    const CodeRecord* rec = record;
    os << "ROW n=" << (rec ? rec->n : n) << " k=" << (rec ? rec->k : k) << " d=";
    if (rec && rec->d)
        os << *rec->d;
    else if (d)
        os << *d;
    else
        os << "?";
    static const char* names[] = {"PASS", "FAIL", "SKIP"};
    os << " status=" << names[static_cast<int>(status)] << " reason=" << reason;
    if (rec) os << " field=" << rec->field << " group=" << rec->group << " line=" << rec->line;
    if (flags) os << " flags=" << (flags->empty() ? "-" : *flags);
    if (method) os << " method=" << to_string(*method);
    os.setf(std::ios::fixed);
    os.precision(2);
    os << " seconds=" << seconds;
    return os.str();
}

namespace {

void verify_into(const CodeRecord& r, const VerifyOptions& opts, RowReport& rep) {
    auto fail = [&](std::string reason, std::string detail) {
        rep.status = RowStatus::fail;
        rep.reason = std::move(reason);
        rep.details.push_back(std::move(detail));
    };
    const auto [u, v] = record_elements(r);
    LinearCode code = code_from_generator_element(u);
    const int base_k = code.dimension();

    const CheckEvidence ev = verify_check_element(u, v);
    if (!ev.valid()) {
        std::ostringstream os;
        os << "check element rejected: uv=0 " << (ev.annihilates ? "yes" : "no") << ", rank(V)=" << ev.rank_v
           << " need " << u.size() - ev.rank_u << ", Ann(v)=FGu " << (ev.annihilator_matches ? "yes" : "no");
        rep.k = base_k;
        fail("check-element", os.str());
        return;
    }
    code = code.with_check_element(v);

    bool reversible = false;
    bool lcd = false;
    if (r.shorten.empty()) {
        reversible = is_reversible(code);
        lcd = is_lcd(code);
    } else {
        code = shorten(code, r.shorten);
        reversible = is_reversible_by_definition(code);
        lcd = is_lcd(code);
    }
    rep.n = code.length();
    rep.k = code.dimension();
    rep.flags = format_flags(reversible, lcd);
    if (rep.n != r.n || rep.k != r.k) {
        fail("dimension", "computed [" + std::to_string(rep.n) + "," + std::to_string(rep.k) + "], expected [" +
                              std::to_string(r.n) + "," + std::to_string(r.k) + "]");
        return;
    }
    if (r.flags && *r.flags != *rep.flags) {
        fail("flags", "computed flags '" + *rep.flags + "', expected '" + *r.flags + "'");
        return;
    }
    if (!r.d) return;
    if (r.tier == Tier::extended && opts.tier == Tier::normal) {
        rep.status = RowStatus::skip;
        rep.reason = "extended-tier";
        rep.details.push_back("distance certification runs with --tier extended");
        return;
    }
    if (rep.k == 0) {
        fail("distance", "zero code has no minimum distance");
        return;
    }
    try {
        const DistanceResult res = min_distance(code, opts.distance);
        rep.d = res.d;
        rep.method = res.method;
        rep.witness = res.witness;
        if (res.d < *r.d) {
            fail("distance", "codeword of weight " + std::to_string(res.d) + " < " + std::to_string(*r.d) + ": " +
                                 code.field().format_vector(res.witness));
        } else if (res.d > *r.d) {
            fail("distance", "no codeword of weight " + std::to_string(*r.d) + "; certified d = " + std::to_string(res.d));
        }
    } catch (const BudgetExceeded& e) {
        std::ostringstream os;
        os << e.what() << "; certified " << e.lower << " <= d";
        if (e.upper) os << " <= " << e.upper;
        fail("budget", os.str());
    }
}

}  // namespace

RowReport verify_record(const CodeRecord& r, const VerifyOptions& opts) {
    RowReport rep;
    rep.record = &r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        verify_into(r, opts, rep);
    } catch (const std::exception& e) {
        rep.status = RowStatus::fail;
        rep.reason = "error";
        rep.details.push_back(e.what());
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

TableReport verify_records(const std::vector<CodeRecord>& records, const VerifyOptions& opts) {
    TableReport t;
    for (const auto& r : records) {
        t.rows.push_back(verify_record(r, opts));
        switch (t.rows.back().status) {
            case RowStatus::pass: ++t.passed; break;
            case RowStatus::fail: ++t.failed; break;
            case RowStatus::skip: ++t.skipped; break;
        }
    }
    return t;
}

}  // namespace grc
