#include "grcodes/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace grc {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {
struct FieldTables {
    int p = 0;
    int m = 0;
    int q = 0;
    std::vector<int> modulus;  // c_0..c_m
    std::vector<Symbol> add;
    std::vector<Symbol> mul;
    std::vector<Symbol> neg;
    std::vector<Symbol> inv;
};
}  // namespace detail

using detail::FieldTables;

namespace {

using Poly = std::vector<int>;  // low degree first, over GF(p)

std::vector<int> digits(int x, int p, int m) {
    std::vector<int> out(m);
    for (int i = 0; i < m; ++i) {
        out[i] = x % p;
        x /= p;
    }
    return out;
}

int undigits(std::span<const int> d, int p) {
    int x = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) x = x * p + d[i];
    return x;
}

// Remainder of a modulo the monic polynomial b.
Poly poly_mod(Poly a, const Poly& b, int p) {
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        const int c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    a.resize(std::min<std::size_t>(a.size(), db));
    return a;
}

bool is_irreducible(const Poly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= deg / 2; ++d) {
        const int count = [&] {
            int c = 1;
            for (int i = 0; i < d; ++i) c *= p;
            return c;
        }();
        for (int low = 0; low < count; ++low) {
            Poly g = digits(low, p, d);
            g.push_back(1);
            const Poly r = poly_mod(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(int p, int m) {
    int count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
        Poly f = digits(low, p, m);
        f.push_back(1);
        if (m == 1 || is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

std::shared_ptr<const FieldTables> build_tables(int p, int m) {
    auto t = std::make_shared<FieldTables>();
    t->p = p;
    t->m = m;
    t->q = 1;
    for (int i = 0; i < m; ++i) t->q *= p;
    const int q = t->q;
    t->modulus = smallest_irreducible(p, m);
    t->add.resize(q * q);
    t->mul.resize(q * q);
    t->neg.resize(q);
    t->inv.assign(q, 0);
    for (int x = 0; x < q; ++x) {
        const auto dx = digits(x, p, m);
        std::vector<int> dn(m);
        for (int i = 0; i < m; ++i) dn[i] = (p - dx[i]) % p;
        t->neg[x] = static_cast<Symbol>(undigits(dn, p));
        for (int y = 0; y < q; ++y) {
            const auto dy = digits(y, p, m);
            std::vector<int> ds(m);
            for (int i = 0; i < m; ++i) ds[i] = (dx[i] + dy[i]) % p;
            t->add[x * q + y] = static_cast<Symbol>(undigits(ds, p));
            Poly prod(2 * m - 1, 0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p;
            Poly r = poly_mod(prod, t->modulus, p);
            r.resize(m, 0);
            t->mul[x * q + y] = static_cast<Symbol>(undigits(r, p));
        }
    }
    for (int x = 1; x < q; ++x)
        for (int y = 1; y < q; ++y)
            if (t->mul[x * q + y] == 1) {
                t->inv[x] = static_cast<Symbol>(y);
                break;
            }
    return t;
}

}  // namespace

Field::Field(std::shared_ptr<const FieldTables> t)
    : tables_(std::move(t)),
      add_(tables_->add.data()),
      mul_(tables_->mul.data()),
      neg_(tables_->neg.data()),
      q_(tables_->q) {}

Field Field::make(int p, int m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("field degree must be at least 1");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw std::invalid_argument("field order exceeds " + std::to_string(kMaxFieldOrder));
    }
    // Tables are shared so that fields built separately compare cheaply.
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const FieldTables>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{p, m}];
    if (!slot) slot = build_tables(p, m);
    return Field(slot);
}

Field Field::of_order(int q) {
    if (q < 2) throw std::invalid_argument("field order must be a prime power");
    int p = 2;
    while (q % p != 0) ++p;
    int m = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return make(p, m);
}

Field Field::parse(std::string_view text) {
    auto to_int = [&](std::string_view s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("malformed field '" + std::string(text) + "'");
        return std::stoi(std::string(s));
    };
    const auto caret = text.find('^');
    if (caret == std::string_view::npos) return of_order(to_int(text));
    return make(to_int(text.substr(0, caret)), to_int(text.substr(caret + 1)));
}

int Field::characteristic() const noexcept { return tables_->p; }
int Field::degree() const noexcept { return tables_->m; }
int Field::order() const noexcept { return q_; }
std::span<const int> Field::modulus() const noexcept { return tables_->modulus; }

Symbol Field::inv(Symbol x) const {
    if (x == 0) throw std::domain_error("inverse of zero");
    return tables_->inv[x];
}

std::vector<int> Field::coordinates(Symbol x) const { return digits(x, tables_->p, tables_->m); }

Symbol Field::from_coordinates(std::span<const int> coords) const {
    if (static_cast<int>(coords.size()) != tables_->m) throw std::invalid_argument("coordinate count differs from field degree");
    for (int c : coords)
        if (c < 0 || c >= tables_->p) throw std::invalid_argument("coordinate out of range");
    return static_cast<Symbol>(undigits(coords, tables_->p));
}

bool Field::compact_tokens() const noexcept { return (tables_->m == 1 && tables_->p < 10) || q_ == 4; }

std::string Field::token(Symbol x) const {
    if (q_ == 4) {
        static const char* names[] = {"0", "1", "a", "a^2"};
        return names[x];
    }
    return std::to_string(x);
}

Symbol Field::parse_token(std::string_view text, std::size_t& pos) const {
    if (pos >= text.size()) throw std::invalid_argument("missing field token");
    if (q_ == 4) {
        if (text.compare(pos, 3, "a^2") == 0) {
            pos += 3;
            return 3;
        }
        const char c = text[pos];
        if (c == 'a' || c == '0' || c == '1') {
            ++pos;
            return c == 'a' ? 2 : static_cast<Symbol>(c - '0');
        }
        throw std::invalid_argument(std::string("unknown GF(4) token '") + c + "'");
    }
    if (compact_tokens()) {
        const char c = text[pos];
        if (c >= '0' && c < '0' + q_) {
            ++pos;
            return static_cast<Symbol>(c - '0');
        }
        throw std::invalid_argument(std::string("unknown ") + name() + " token '" + c + "'");
    }
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) throw std::invalid_argument("unknown " + name() + " token at '" + std::string(text.substr(pos)) + "'");
    const int v = std::stoi(std::string(text.substr(pos, end - pos)));
    if (v >= q_) throw std::invalid_argument("token " + std::to_string(v) + " out of range for " + name());
    pos = end;
    return static_cast<Symbol>(v);
}

Symbol Field::parse_symbol(std::string_view text) const {
    std::size_t pos = 0;
    const Symbol s = parse_token(text, pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters in token '" + std::string(text) + "'");
    return s;
}

std::vector<Symbol> Field::parse_vector(std::string_view text) const {
    std::string clean;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) clean.push_back(c);
    if (!clean.empty() && clean.front() == '(' && clean.back() == ')') clean = clean.substr(1, clean.size() - 2);
    std::vector<Symbol> out;
    std::size_t pos = 0;
    while (pos < clean.size()) {
        if (!compact_tokens() && !out.empty()) {
            if (clean[pos] != ',') throw std::invalid_argument("expected ',' between " + name() + " tokens");
            ++pos;
        }
        out.push_back(parse_token(clean, pos));
    }
    return out;
}

std::string Field::format_vector(std::span<const Symbol> xs) const {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!compact_tokens() && i > 0) out.push_back(',');
        out += token(xs[i]);
    }
    return out;
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

bool operator==(const Field& a, const Field& b) noexcept {
    if (a.tables_ == b.tables_) return true;
    return a.tables_->p == b.tables_->p && a.tables_->modulus == b.tables_->modulus;
}

FieldElement::FieldElement(Field field, Symbol value) : field_(std::move(field)), value_(value) {
    if (value_ >= field_.order()) throw std::invalid_argument("symbol out of range for " + field_.name());
}

FieldElement FieldElement::parse(const Field& f, std::string_view token) { return {f, f.parse_symbol(token)}; }

FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("operands belong to different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.mul(a.value_, a.field_.inv(b.value_))};
}

}  // namespace grc
