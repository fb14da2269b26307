#include "grcodes/classify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace grc {

bool ring_is_code_checkable(const GroupRing& ring) {
    return sylow_p_cyclic(ring.group(), ring.field().characteristic());
}

bool is_semisimple(const GroupRing& ring) { return ring.size() % ring.field().characteristic() != 0; }

CheckEvidence verify_check_element(const GroupRingElement& u, const GroupRingElement& v) {
    if (!(u.ring() == v.ring())) throw std::invalid_argument("elements of different group rings");
    CheckEvidence ev;
    ev.annihilates = (u * v).is_zero();
    const Matrix U = regular_matrix(u);
    ev.rank_u = rank(U);
    ev.rank_v = rank(regular_matrix(v));
    ev.rank_condition = ev.rank_v == u.size() - ev.rank_u;
    const LinearCode ann = annihilator_code(v);
    ev.annihilator_matches = row_space_equal(ann.generator_matrix(), U);
    return ev;
}

namespace {

std::uint64_t saturating_pow(int q, int k) {
    std::uint64_t x = 1;
    for (int i = 0; i < k; ++i) {
        if (x > (std::uint64_t{1} << 40)) return x * q;
        x *= static_cast<std::uint64_t>(q);
    }
    return x;
}

// Calls visit(coefficients) for every nonzero combination of the rows of
// `basis`, stopping early when visit returns true.
template <class Visit>
bool for_each_combination(const Matrix& basis, Visit visit) {
    const Field& f = basis.field();
    const int q = f.order();
    std::vector<Symbol> coeffs(basis.rows(), 0);
    for (;;) {
        int i = 0;
        while (i < basis.rows() && coeffs[i] == q - 1) coeffs[i++] = 0;
        if (i == basis.rows()) return false;
        ++coeffs[i];
        if (visit(vec_mul(coeffs, basis))) return true;
    }
}

}  // namespace

CheckSearchResult find_check_element(const GroupRingElement& u, const CheckSearchOptions& opts) {
    CheckSearchResult res;
    const GroupRing& ring = u.ring();
    const int n = u.size();
    const int k = rank(regular_matrix(u));
    const Matrix ann = left_null_space(regular_matrix(u));
    const int dim = ann.rows();
    const int target = n - k;

    auto try_candidate = [&](std::vector<Symbol> coeffs) {
        ++res.candidates;
        GroupRingElement v = ring.element(std::move(coeffs));
        if (rank(regular_matrix(v)) != target) return false;
        if (!verify_check_element(u, v).valid()) return false;
        res.element = std::move(v);
        res.status = CheckSearchStatus::found;
        return true;
    };

    if (dim == 0) {
        // u is a unit: F G u is everything and Ann(0) = F G.
        try_candidate(std::vector<Symbol>(n, 0));
        return res;
    }
    for (int i = 0; i < dim; ++i) {
        const auto row = ann.row(i);
        if (try_candidate({row.begin(), row.end()})) return res;
    }
    const int q = u.field().order();
    if (saturating_pow(q, dim) <= opts.max_candidates) {
        if (for_each_combination(ann, [&](std::vector<Symbol> c) { return try_candidate(std::move(c)); })) return res;
        res.status = CheckSearchStatus::none_exists;
        return res;
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> coef(0, q - 1);
    std::vector<Symbol> c(dim);
    while (res.candidates < opts.max_candidates) {
        for (auto& x : c) x = static_cast<Symbol>(coef(rng));
        if (try_candidate(vec_mul(c, ann))) return res;
    }
    res.status = ring_is_code_checkable(ring) ? CheckSearchStatus::cap_exhausted : CheckSearchStatus::not_found;
    return res;
}

bool is_reversible(const LinearCode& code) {
    const auto& prov = code.provenance();
    if (!prov) throw std::invalid_argument("reversibility test needs the code's generator element");
    return code.contains(involution(prov->generator).coeffs());
}

bool is_reversible_by_definition(const LinearCode& code) {
    const Matrix& g = code.generator_matrix();
    for (int i = 0; i < g.rows(); ++i) {
        std::vector<Symbol> rev(g.row(i).rbegin(), g.row(i).rend());
        if (!code.contains(rev)) return false;
    }
    return true;
}

int hull_dimension(const LinearCode& code) {
    const int k = code.dimension();
    const int n = code.length();
    if (k == 0 || k == n) return 0;
    const Matrix h = parity_check_matrix(code);
    return k + (n - k) - rank(vstack(code.generator_matrix(), h));
}

bool is_lcd(const LinearCode& code) { return hull_dimension(code) == 0; }

bool ReversibilityEvidence::agree() const noexcept {
    const bool x = u_code_reversible;
    return u_ideal_symmetric == x && u_inverse_in_u_ideal == x && v_inverse_in_v_ideal == x && v_ideal_symmetric == x &&
           v_code_reversible == x;
}

ReversibilityEvidence reversibility_equivalences(const GroupRingElement& u, const GroupRingElement& v) {
    if (!verify_check_element(u, v).valid()) throw std::invalid_argument("v is not a check element of F G u");
    const LinearCode cu = code_from_generator_element(u);
    const LinearCode cv = code_from_generator_element(v);
    const GroupRingElement u_inv = involution(u);
    const GroupRingElement v_inv = involution(v);
    ReversibilityEvidence ev;
    ev.u_code_reversible = is_reversible_by_definition(cu);
    ev.u_ideal_symmetric = cu == code_from_generator_element(u_inv);
    ev.u_inverse_in_u_ideal = cu.contains(u_inv.coeffs());
    ev.v_inverse_in_v_ideal = cv.contains(v_inv.coeffs());
    ev.v_ideal_symmetric = cv == code_from_generator_element(v_inv);
    ev.v_code_reversible = is_reversible_by_definition(cv);
    return ev;
}

int ideal_intersection_dimension(const GroupRingElement& u, const GroupRingElement& v) {
    return intersection_dimension(regular_matrix(u), regular_matrix(v));
}

bool nilpotent_intersection_check(const GroupRingElement& u, const GroupRingElement& v) {
    if (!verify_check_element(u, v).valid()) throw std::invalid_argument("v is not a check element of F G u");
    if (!is_semisimple(u.ring())) throw std::invalid_argument("group ring is not semisimple");
    return ideal_intersection_dimension(u, v) == 0;
}

bool mds_check(const LinearCode& code, int d) { return d == code.length() - code.dimension() + 1; }

IdealScan enumerate_ideals_bruteforce(const GroupRing& ring, std::uint64_t budget) {
    const int n = ring.size();
    const int q = ring.field().order();
    const std::uint64_t total = saturating_pow(q, n);
    if (total > budget)
        throw BudgetExceeded("ideal scan of " + std::to_string(q) + "^" + std::to_string(n) + " elements exceeds the budget", 0, 0);

    // Subspaces keyed by their canonical basis entries; dimension first.
    using Key = std::pair<int, std::vector<Symbol>>;
    auto key_of = [](const Matrix& basis) { return Key{basis.rows(), basis.entries()}; };
    std::map<Key, Matrix> ideals;
    std::set<Key> annihilators;

    IdealScan scan;
    std::vector<Symbol> c(n, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
        if (t) {
            int i = 0;
            while (c[i] == q - 1) c[i++] = 0;
            ++c[i];
        }
        ++scan.elements_scanned;
        const GroupRingElement x = ring.element(c);
        const Matrix X = regular_matrix(x);
        const Matrix principal = row_basis(X);
        ideals.emplace(key_of(principal), principal);
        annihilators.insert(key_of(row_basis(left_null_space(X))));
    }
    // Every ideal is a sum of principal ideals.
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Matrix> current;
        for (const auto& [k, m] : ideals) current.push_back(m);
        for (std::size_t a = 0; a < current.size(); ++a)
            for (std::size_t b = a + 1; b < current.size(); ++b) {
                Matrix sum = row_basis(vstack(current[a], current[b]));
                if (ideals.emplace(key_of(sum), sum).second) grew = true;
            }
    }
    for (const auto& [key, basis] : ideals) {
        scan.ideals.emplace_back(basis);
        const bool trivial = key.first == 0 || key.first == n;
        const bool ok = trivial || annihilators.count(key) > 0;
        scan.checkable.push_back(ok);
        if (!ok) {
            scan.all_nontrivial_checkable = false;
            if (!scan.non_checkable_witness) scan.non_checkable_witness = scan.ideals.back();
        }
    }
    return scan;
}

std::string ClassificationReport::flags() const {
    if (reversible && lcd) return "R,C";
    if (reversible) return "R";
    if (lcd) return "C";
    return "";
}

ClassificationReport classify(const GroupRingElement& u, const std::optional<GroupRingElement>& v,
                              const ClassificationOptions& opts) {
    ClassificationReport rep;
    const GroupRing& ring = u.ring();
    rep.ring = ring.name();
    LinearCode code = code_from_generator_element(u);
    rep.n = code.length();
    rep.k = code.dimension();
    rep.semisimple = is_semisimple(ring);
    rep.ring_code_checkable = ring_is_code_checkable(ring);

    if (v) {
        const CheckEvidence ev = verify_check_element(u, *v);
        std::ostringstream os;
        os << "given check element: uv=0 " << (ev.annihilates ? "yes" : "no") << ", rank(V)=" << ev.rank_v
           << " (need " << rep.n - rep.k << "), Ann(v)=FGu " << (ev.annihilator_matches ? "yes" : "no");
        rep.diagnostics.push_back(os.str());
        if (ev.valid()) rep.check_element = *v;
    }
    if (!rep.check_element) {
        const auto found = find_check_element(u, opts.check);
        if (found.element) {
            rep.check_element = found.element;
            rep.diagnostics.push_back("check element found after " + std::to_string(found.candidates) + " candidates");
        } else {
            static const char* why[] = {"found", "no element of Ann(u) is a check element",
                                        "candidate cap reached although the ring is code-checkable",
                                        "candidate cap reached"};
            rep.diagnostics.push_back(std::string("no check element: ") + why[static_cast<int>(found.status)]);
        }
    }
    rep.checkable = rep.check_element.has_value();
    if (rep.check_element) code = code.with_check_element(*rep.check_element);

    rep.reversible = is_reversible(code);
    rep.lcd = is_lcd(code);
    if (rep.semisimple && rep.checkable && rep.reversible != rep.lcd)
        rep.diagnostics.push_back("inconsistent: semisimple checkable code with reversible != lcd");
    if (rep.checkable) {
        const auto ev = reversibility_equivalences(u, *rep.check_element);
        rep.diagnostics.push_back(std::string("reversibility equivalences ") + (ev.agree() ? "agree" : "DISAGREE"));
        if (rep.semisimple)
            rep.diagnostics.push_back("dim(FGu ∩ FGv) = " + std::to_string(ideal_intersection_dimension(u, *rep.check_element)));
    }
    if (opts.compute_distance && rep.k > 0) {
        rep.distance = min_distance(code, opts.distance);
        rep.mds = mds_check(code, rep.distance->d);
    }
    return rep;
}

std::string render_report(const ClassificationReport& r) {
    std::ostringstream os;
    os << "ring            " << r.ring << "\n";
    os << "code            [" << r.n << "," << r.k;
    if (r.distance) os << "," << r.distance->d;
    os << "]\n";
    if (r.distance)
        os << "distance        " << r.distance->d << " via " << to_string(r.distance->method) << " (" << r.distance->work
           << " steps)\n";
    os << "checkable       " << (r.checkable ? "yes" : "no") << "\n";
    if (r.check_element) os << "check element   " << r.check_element->to_string() << "\n";
    os << "reversible      " << (r.reversible ? "yes" : "no") << "\n";
    os << "lcd             " << (r.lcd ? "yes" : "no") << "\n";
    if (r.mds) os << "mds             " << (*r.mds ? "yes" : "no") << "\n";
    os << "semisimple      " << (r.semisimple ? "yes" : "no") << "\n";
    os << "code-checkable  " << (r.ring_code_checkable ? "yes" : "no") << "\n";
    for (const auto& d : r.diagnostics) os << "note            " << d << "\n";
    return os.str();
}

std::string render_report_record(const ClassificationReport& r) {
    std::ostringstream os;
    os << "n = " << r.n << "\nk = " << r.k << "\n";
    if (r.distance) os << "d = " << r.distance->d << "\n";
    os << "checkable = " << (r.checkable ? "true" : "false") << "\n";
    if (r.check_element) os << "v = " << r.check_element->to_string() << "\n";
    os << "reversible = " << (r.reversible ? "true" : "false") << "\n";
    os << "lcd = " << (r.lcd ? "true" : "false") << "\n";
    if (r.mds) os << "mds = " << (*r.mds ? "true" : "false") << "\n";
    os << "semisimple = " << (r.semisimple ? "true" : "false") << "\n";
    os << "ring_code_checkable = " << (r.ring_code_checkable ? "true" : "false") << "\n";
    os << "flags = " << r.flags() << "\n";
    return os.str();
}

}  // namespace grc
