#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cvdj {

enum class PromiseClass { Constant, Balanced, Neither };

const char* to_string(PromiseClass c);

// An oracle setting: the ordered list of function values z_0 ... z_{N-1}.
// Index i holds the value on the i-th input (0-based).
class BitString {
public:
    explicit BitString(std::vector<std::uint8_t> bits);

    // Accepts only strings over {'0','1'}; leftmost character is bit 0.
    static BitString parse(const std::string& text);
    static BitString zeros(std::size_t n);
    static BitString ones(std::size_t n);

    std::size_t size() const { return bits_.size(); }
    std::uint8_t bit(std::size_t i) const { return bits_[i]; }
    // (-1)^{z_i}
    double sign(std::size_t i) const { return bits_[i] ? -1.0 : 1.0; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    BitString complement() const;
    std::string str() const;

    bool operator==(const BitString& other) const = default;
    bool operator<(const BitString& other) const { return bits_ < other.bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

PromiseClass classify(const BitString& z);

// Enumerating all balanced strings costs C(N, N/2); refuse beyond this length.
inline constexpr std::size_t kEnumerationCap = 24;

// Yields every balanced N-bit string exactly once, in lexicographic order.
class BalancedEnumerator {
public:
    explicit BalancedEnumerator(std::size_t n, std::size_t cap = kEnumerationCap);
    std::optional<BitString> next();

private:
    std::vector<std::uint8_t> current_;
    bool exhausted_ = false;
    bool first_ = true;
};

std::vector<BitString> enumerate_balanced(std::size_t n, std::size_t cap = kEnumerationCap);
void for_each_balanced(std::size_t n, const std::function<void(const BitString&)>& fn,
                       std::size_t cap = kEnumerationCap);

// The two block strings 0^{N/2}1^{N/2} and 1^{N/2}0^{N/2} (complements of
// each other; the distinguished pair of the dominance theorem).
std::pair<BitString, BitString> asb_pair(std::size_t n);

}  // namespace cvdj
