#include "grcodes/abelian_group.hpp"

#include <cctype>
#include <stdexcept>

#include "grcodes/field.hpp"

namespace grc {

namespace {
constexpr int kMaxGroupOrder = 4096;
}

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
    n_ = 1;
    for (int f : factors_) {
        if (f < 1) throw std::invalid_argument("cyclic factor orders must be positive");
        n_ *= f;
        if (n_ > kMaxGroupOrder) throw std::invalid_argument("group order exceeds " + std::to_string(kMaxGroupOrder));
    }
    mul_.resize(static_cast<std::size_t>(n_) * n_);
    inv_.resize(n_);
    std::vector<int> ei(factors_.size()), ej(factors_.size()), ek(factors_.size());
    auto decode = [&](int idx, std::vector<int>& e) {
        for (std::size_t t = 0; t < factors_.size(); ++t) {
            e[t] = idx % factors_[t];
            idx /= factors_[t];
        }
    };
    auto encode = [&](const std::vector<int>& e) {
        int idx = 0;
        for (std::size_t t = factors_.size(); t-- > 0;) idx = idx * factors_[t] + e[t];
        return idx;
    };
    for (int i = 0; i < n_; ++i) {
        decode(i, ei);
        for (std::size_t t = 0; t < factors_.size(); ++t) ek[t] = (factors_[t] - ei[t]) % factors_[t];
        inv_[i] = encode(ek);
        for (int j = 0; j < n_; ++j) {
            decode(j, ej);
            for (std::size_t t = 0; t < factors_.size(); ++t) ek[t] = (ei[t] + ej[t]) % factors_[t];
            mul_[i * n_ + j] = encode(ek);
        }
    }
    if (!verify_list_property()) throw std::logic_error("element list violates g_{n+1-i} g_i = g_n");
}

AbelianGroup AbelianGroup::parse(std::string_view text) {
    std::vector<int> factors;
    std::string digits;
    auto flush = [&] {
        if (digits.empty()) throw std::invalid_argument("malformed group '" + std::string(text) + "'");
        factors.push_back(std::stoi(digits));
        digits.clear();
    };
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
        } else if (c == 'x' || c == 'X' || c == '*') {
            flush();
        } else if (c != 'C' && c != '_' && !std::isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed group '" + std::string(text) + "'");
        }
    }
    flush();
    return AbelianGroup(std::move(factors));
}

int AbelianGroup::index_of(std::span<const int> exponents) const {
    if (exponents.size() != factors_.size()) throw std::invalid_argument("exponent count differs from group rank");
    int idx = 0;
    for (std::size_t t = factors_.size(); t-- > 0;) {
        if (exponents[t] < 0 || exponents[t] >= factors_[t])
            throw std::out_of_range("exponent " + std::to_string(exponents[t]) + " out of range for C" +
                                    std::to_string(factors_[t]));
        idx = idx * factors_[t] + exponents[t];
    }
    return idx + 1;
}

std::vector<int> AbelianGroup::exponents_of(int index) const {
    if (index < 1 || index > n_) throw std::out_of_range("group index " + std::to_string(index) + " out of range");
    std::vector<int> e(factors_.size());
    int idx = index - 1;
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        e[t] = idx % factors_[t];
        idx /= factors_[t];
    }
    return e;
}

int AbelianGroup::mul_index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("group index out of range");
    return mul0(i - 1, j - 1) + 1;
}

int AbelianGroup::inverse_index(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("group index out of range");
    return inv0(i - 1) + 1;
}

bool AbelianGroup::verify_list_property() const {
    const int last = n_ - 1;
    for (int i = 0; i < n_; ++i)
        if (mul0(last - i, i) != last) return false;
    return true;
}

std::string AbelianGroup::to_string() const {
    std::string out;
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        if (t) out += 'x';
        out += std::to_string(factors_[t]);
    }
    return out;
}

bool sylow_p_cyclic(const AbelianGroup& g, int p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    int divisible = 0;
    for (int f : g.factors())
        if (f % p == 0) ++divisible;
    return divisible <= 1;
}

}  // namespace grc
