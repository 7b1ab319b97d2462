#include "bitstring.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"

namespace cvdj {

const char* to_string(PromiseClass c) {
    switch (c) {
        case PromiseClass::Constant: return "constant";
        case PromiseClass::Balanced: return "balanced";
        case PromiseClass::Neither: return "neither";
    }
    return "unknown";
}

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw std::invalid_argument("bit string must be non-empty");
    for (std::uint8_t b : bits_) {
        if (b > 1) throw std::invalid_argument("bit values must be 0 or 1");
    }
}

BitString BitString::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("bit string must be non-empty");
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit string may contain only '0' and '1'");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitString(std::move(bits));
}

BitString BitString::zeros(std::size_t n) {
    return BitString(std::vector<std::uint8_t>(n, 0));
}

BitString BitString::ones(std::size_t n) {
    return BitString(std::vector<std::uint8_t>(n, 1));
}

BitString BitString::complement() const {
    std::vector<std::uint8_t> flipped(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) flipped[i] = bits_[i] ? 0 : 1;
    return BitString(std::move(flipped));
}

std::string BitString::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

PromiseClass classify(const BitString& z) {
    const std::size_t ones = static_cast<std::size_t>(
        std::count(z.bits().begin(), z.bits().end(), std::uint8_t{1}));
    if (ones == 0 || ones == z.size()) return PromiseClass::Constant;
    if (z.size() % 2 == 0 && ones == z.size() / 2) return PromiseClass::Balanced;
    return PromiseClass::Neither;
}

BalancedEnumerator::BalancedEnumerator(std::size_t n, std::size_t cap) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("balanced enumeration requires an even length of at least 2");
    if (n > cap)
        throw LimitError("balanced enumeration refused: length " + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(cap));
    // Lexicographically smallest balanced string; next_permutation walks the rest.
    current_.assign(n, 0);
    std::fill(current_.begin() + static_cast<std::ptrdiff_t>(n / 2), current_.end(), 1);
}

std::optional<BitString> BalancedEnumerator::next() {
    if (exhausted_) return std::nullopt;
    if (first_) {
        first_ = false;
        return BitString(current_);
    }
    if (!std::next_permutation(current_.begin(), current_.end())) {
        exhausted_ = true;
        return std::nullopt;
    }
    return BitString(current_);
}

std::vector<BitString> enumerate_balanced(std::size_t n, std::size_t cap) {
    std::vector<BitString> out;
    BalancedEnumerator it(n, cap);
    while (auto z = it.next()) out.push_back(*z);
    return out;
}

void for_each_balanced(std::size_t n, const std::function<void(const BitString&)>& fn,
                       std::size_t cap) {
    BalancedEnumerator it(n, cap);
    while (auto z = it.next()) fn(*z);
}

std::pair<BitString, BitString> asb_pair(std::size_t n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("the block pair requires an even length of at least 2");
    std::vector<std::uint8_t> low(n, 0);
    std::fill(low.begin() + static_cast<std::ptrdiff_t>(n / 2), low.end(), 1);
    BitString first(std::move(low));
    BitString second = first.complement();
    return {std::move(first), std::move(second)};
}

}  // namespace cvdj
