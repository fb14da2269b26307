// grcodes: build, classify and verify checkable group ring codes.
//
// Exit status: 0 on success, 1 when a verification fails, 2 on usage,
// parse or I/O errors.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "grcodes/classify.hpp"
#include "grcodes/records.hpp"

using namespace grc;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Common {
    std::string field;
    std::string group;
    std::string u;
    std::string v;
    std::string positions;
    std::string method = "auto";
    std::uint64_t seed = DistanceOptions{}.seed;
    std::uint64_t budget = 0;
    int target_weight = 0;
    unsigned threads = 0;
    bool record = false;
    bool no_distance = false;
};

void add_ring(CLI::App* sub, Common& c, bool need_u) {
    sub->add_option("--field", c.field, "Field order, p or p^m")->required();
    sub->add_option("--group", c.group, "Cyclic factors, e.g. 6x6")->required();
    auto* u = sub->add_option("--u", c.u, "Generator element coefficients");
    if (need_u) u->required();
}

void add_distance(CLI::App* sub, Common& c) {
    sub->add_option("--method", c.method, "exhaustive | dependence | isd | auto")
        ->check(CLI::IsMember({"exhaustive", "dependence", "column-dependence", "isd", "auto", "hybrid"}));
    sub->add_option("--seed", c.seed, "ISD seed");
    sub->add_option("--budget", c.budget, "Codeword budget (exhaustive) or subset budget (dependence)");
    sub->add_option("--threads", c.threads, "Worker threads, 0 = all cores");
}

DistanceOptions distance_options(const Common& c) {
    DistanceOptions o;
    o.seed = c.seed;
    o.threads = c.threads;
    if (c.budget) {
        const auto m = parse_distance_method(c.method);
        if (m == DistanceMethod::column_dependence)
            o.subset_budget = c.budget;
        else
            o.codeword_budget = c.budget;
    }
    return o;
}

std::vector<int> parse_positions(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const int p = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad position '" + item + "'");
        out.push_back(p);
    }
    return out;
}

GroupRing ring_of(const Common& c) { return GroupRing(Field::parse(c.field), AbelianGroup::parse(c.group)); }

void print_distance(const DistanceResult& r, const Field& f) {
    std::cout << "d               " << r.d << "\n";
    std::cout << "method          " << to_string(r.method) << " (" << r.work << " steps";
    if (r.seed) std::cout << ", seed " << *r.seed;
    std::cout << ")\n";
    std::cout << "witness         " << f.format_vector(r.witness) << "\n";
}

// Exact distance by the requested engine.
DistanceResult run_distance(const LinearCode& code, const Common& c) {
    const DistanceOptions o = distance_options(c);
    switch (parse_distance_method(c.method)) {
        case DistanceMethod::exhaustive: return min_distance_exhaustive(code, o);
        case DistanceMethod::column_dependence: {
            const int singleton = code.length() - code.dimension() + 1;
            const auto v = min_distance_column_dependence(code, singleton, o);
            if (!v.dependent) throw std::logic_error("no dependent column set up to the Singleton bound");
            DistanceResult r;
            r.d = v.size;
            r.witness = v.witness;
            r.method = DistanceMethod::column_dependence;
            r.work = v.subsets;
            return r;
        }
        default: return min_distance(code, o);
    }
}

int cmd_build(const Common& c, bool full_report) {
    const GroupRing ring = ring_of(c);
    const GroupRingElement u = ring.parse(c.u);
    std::optional<GroupRingElement> v;
    if (!c.v.empty()) v = ring.parse(c.v);
    ClassificationOptions opts;
    opts.compute_distance = !c.no_distance;
    opts.distance = distance_options(c);
    opts.check.seed = c.seed;
    const ClassificationReport rep = classify(u, v, opts);
    if (full_report) {
        std::cout << render_report(rep);
    } else {
        std::cout << "code            [" << rep.n << "," << rep.k;
        if (rep.distance) std::cout << "," << rep.distance->d;
        std::cout << "] over " << rep.ring << "\n";
        std::cout << "checkable       " << (rep.checkable ? "yes" : "no") << "\n";
        if (rep.check_element) std::cout << "check element   " << rep.check_element->to_string() << "\n";
        std::cout << "flags           " << (rep.flags().empty() ? "-" : rep.flags()) << "\n";
        std::cout << "standard generator matrix\n"
                  << format_matrix(standard_generator_matrix(code_from_generator_element(u)));
    }
    if (c.record) {
        CodeRecord r;
        r.field = c.field;
        r.group = AbelianGroup::parse(c.group).to_string();
        r.u = u.to_string();
        r.v = rep.check_element ? rep.check_element->to_string() : "";
        r.n = rep.n;
        r.k = rep.k;
        if (rep.distance) r.d = rep.distance->d;
        r.flags = rep.flags();
        std::cout << "\n" << format_record(r);
    }
    return 0;
}

int cmd_mindist(const Common& c) {
    const GroupRing ring = ring_of(c);
    LinearCode code = code_from_generator_element(ring.parse(c.u));
    if (!c.positions.empty()) code = shorten(code, parse_positions(c.positions));
    std::cout << "code            " << code.label() << " over " << code.field().name() << "\n";
    if (c.method == "isd") {
        const int target = c.target_weight ? c.target_weight : code.length() - code.dimension() + 1;
        const auto w = low_weight_search_isd(code, target, DistanceOptions{}.isd_iterations, c.seed);
        if (!w) {
            std::cout << "no codeword of weight <= " << target << " found (seed " << c.seed << ")\n";
            return 0;
        }
        std::cout << "weight          " << hamming_weight(*w) << " (upper bound on d, seed " << c.seed << ")\n";
        std::cout << "witness         " << code.field().format_vector(*w) << "\n";
        return 0;
    }
    print_distance(run_distance(code, c), code.field());
    return 0;
}

int cmd_dual(const Common& c) {
    const GroupRing ring = ring_of(c);
    const GroupRingElement u = ring.parse(c.u);
    const GroupRingElement v = ring.parse(c.v);
    const LinearCode code = code_from_generator_element(u).with_check_element(v);
    const LinearCode dual = dual_code(code);
    std::cout << "code            " << code.label() << "\n";
    std::cout << "dual            " << dual.label() << "\n";
    std::cout << "dual generator  " << dual.provenance()->generator.to_string() << "\n";
    std::cout << "dual check      " << dual.provenance()->check->to_string() << "\n";
    std::cout << "|FG|=|FGu||FGv| "
              << (ambient_cardinality(code.field(), code.length()) ==
                          code_cardinality(code) * code_cardinality(code_from_generator_element(v))
                      ? "yes"
                      : "no")
              << "\n";
    std::cout << "standard generator matrix\n" << format_matrix(standard_generator_matrix(dual));
    return 0;
}

int cmd_shorten(const Common& c) {
    const GroupRing ring = ring_of(c);
    const LinearCode code = code_from_generator_element(ring.parse(c.u));
    const LinearCode s = shorten(code, parse_positions(c.positions));
    std::cout << "code            " << code.label() << "\n";
    std::cout << "shortened       " << s.label() << "\n";
    if (!c.no_distance) print_distance(run_distance(s, c), s.field());
    return 0;
}

int cmd_find_check(const Common& c) {
    const GroupRing ring = ring_of(c);
    const GroupRingElement u = ring.parse(c.u);
    CheckSearchOptions o;
    o.seed = c.seed;
    if (c.budget) o.max_candidates = c.budget;
    const auto res = find_check_element(u, o);
    std::cout << "candidates      " << res.candidates << "\n";
    switch (res.status) {
        case CheckSearchStatus::found:
            std::cout << "check element   " << res.element->to_string() << "\n";
            return 0;
        case CheckSearchStatus::none_exists:
            std::cout << "no check element exists (all of Ann(u) tried)\n";
            return kExitFail;
        case CheckSearchStatus::cap_exhausted:
            std::cout << "candidate cap reached; the ring is code-checkable so a check element exists\n";
            return kExitFail;
        case CheckSearchStatus::not_found:
            std::cout << "candidate cap reached; the ring is not code-checkable\n";
            return kExitFail;
    }
    return kExitFail;
}

int cmd_mds(const Common& c) {
    const GroupRing ring = ring_of(c);
    const GroupRingElement u = ring.all_ones();
    const auto found = find_check_element(u);
    if (!found.element) {
        std::cout << "no check element for the all-ones element\n";
        return kExitFail;
    }
    const LinearCode rep = code_from_generator_element(u).with_check_element(*found.element);
    const LinearCode dual = dual_code(rep);
    for (const LinearCode* code : {&rep, &dual}) {
        const int d = min_distance(*code).d;
        std::cout << "[" << code->length() << "," << code->dimension() << "," << d << "]"
                  << "  mds=" << (mds_check(*code, d) ? "yes" : "no")
                  << " reversible=" << (is_reversible(*code) ? "yes" : "no")
                  << " lcd=" << (is_lcd(*code) ? "yes" : "no")
                  << " u=" << code->provenance()->generator.to_string() << "\n";
    }
    return 0;
}

int cmd_ideals(const Common& c) {
    const GroupRing ring = ring_of(c);
    const IdealScan scan = enumerate_ideals_bruteforce(ring);
    for (std::size_t i = 0; i < scan.ideals.size(); ++i)
        std::cout << scan.ideals[i].label() << (scan.checkable[i] ? "  checkable" : "  NOT checkable") << "\n";
    std::cout << "all non-trivial ideals checkable: " << (scan.all_nontrivial_checkable ? "yes" : "no") << "\n";
    std::cout << "Sylow criterion:                  " << (ring_is_code_checkable(ring) ? "yes" : "no") << "\n";
    if (scan.non_checkable_witness)
        std::cout << "witness\n" << format_matrix(scan.non_checkable_witness->generator_matrix());
    return 0;
}

int cmd_verify_table(const std::vector<std::string>& files, const std::string& tier, const Common& c, bool verbose) {
    VerifyOptions o;
    o.tier = parse_tier(tier);
    o.distance = distance_options(c);
    bool ok = true;
    for (const auto& path : files) {
        const auto records = parse_record_file(path);
        std::cout << "# " << path << ": " << records.size() << " records, tier " << tier << "\n";
        for (const auto& r : records) {
            const RowReport row = verify_record(r, o);
            std::cout << row.line() << "\n";
            if (verbose || row.status == RowStatus::fail)
                for (const auto& d : row.details) std::cout << "    " << d << "\n";
            std::cout.flush();
            if (row.status == RowStatus::fail) ok = false;
        }
    }
    return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checkable codes from abelian group rings"};
    app.require_subcommand(1);
    Common c;

    auto* verify = app.add_subcommand("verify-table", "Verify table record files");
    std::vector<std::string> files;
    std::string tier = "normal";
    bool verbose = false;
    verify->add_option("files", files, "Record files")->required();
    verify->add_option("--tier", tier, "normal | extended")->check(CLI::IsMember({"normal", "extended"}));
    verify->add_flag("--verbose", verbose, "Print details for every row");
    add_distance(verify, c);

    auto* build = app.add_subcommand("build", "Build F G u and print its parameters");
    add_ring(build, c, true);
    build->add_option("--v", c.v, "Check element to verify");
    build->add_flag("--record", c.record, "Also print a record block");
    build->add_flag("--no-distance", c.no_distance, "Skip the minimum distance");
    add_distance(build, c);

    auto* cls = app.add_subcommand("classify", "Full classification report");
    add_ring(cls, c, true);
    cls->add_option("--v", c.v, "Check element to verify");
    cls->add_flag("--record", c.record, "Also print a record block");
    cls->add_flag("--no-distance", c.no_distance, "Skip the minimum distance");
    add_distance(cls, c);

    auto* md = app.add_subcommand("mindist", "Minimum distance of F G u");
    add_ring(md, c, true);
    md->add_option("--positions", c.positions, "Shorten on these 1-based positions first");
    md->add_option("--target-weight", c.target_weight, "Target weight for --method isd");
    add_distance(md, c);

    auto* dual = app.add_subcommand("dual", "Dual of F G u given a check element");
    add_ring(dual, c, true);
    dual->add_option("--v", c.v, "Check element")->required();

    auto* sh = app.add_subcommand("shorten", "Shorten F G u");
    add_ring(sh, c, true);
    sh->add_option("--positions", c.positions, "1-based positions, e.g. 1,2")->required();
    sh->add_flag("--no-distance", c.no_distance, "Skip the minimum distance");
    add_distance(sh, c);

    auto* fc = app.add_subcommand("find-check", "Search for a check element of F G u");
    add_ring(fc, c, true);
    fc->add_option("--seed", c.seed, "Search seed");
    fc->add_option("--budget", c.budget, "Candidate cap");

    auto* mds = app.add_subcommand("mds", "The [n,1,n] code of the all-ones element and its dual");
    add_ring(mds, c, false);

    auto* ideals = app.add_subcommand("ideals", "Brute-force all ideals of a tiny group ring");
    add_ring(ideals, c, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    try {
        if (*verify) return cmd_verify_table(files, tier, c, verbose);
        if (*build) return cmd_build(c, false);
        if (*cls) return cmd_build(c, true);
        if (*md) return cmd_mindist(c);
        if (*dual) return cmd_dual(c);
        if (*sh) return cmd_shorten(c);
        if (*fc) return cmd_find_check(c);
        if (*mds) return cmd_mds(c);
        if (*ideals) return cmd_ideals(c);
    } catch (const std::exception& e) {
        std::cerr << "grcodes: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
