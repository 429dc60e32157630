#pragma once

// Monomials in the free associative algebra on a_1..a_n, packed into a
// single 64-bit key: the top nibble holds the length, the remaining
// nibbles hold generator indices (1..15), first letter most significant.
// Comparison of keys is (degree, lexicographic) order.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace gtf {

inline constexpr int kMaxWordLength = 15;
inline constexpr int kMaxGenerators = 15;

class Word {
public:
    constexpr Word() = default;

    /// Builds a word from 1-based generator indices; throws DomainError on bad input.
    static Word from_letters(std::span<const int> letters);
    static Word from_letters(std::initializer_list<int> letters) {
        return from_letters(std::span<const int>(letters.begin(), letters.size()));
    }
    static Word letter(int generator) { return from_letters({generator}); }
    static constexpr Word from_bits(std::uint64_t bits) {
        Word w;
        w.bits_ = bits;
        return w;
    }

    constexpr int degree() const noexcept { return static_cast<int>(bits_ >> 60); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int operator[](int pos) const noexcept {
        return static_cast<int>((bits_ >> (4 * (degree() - 1 - pos))) & 0xF);
    }
    constexpr std::uint64_t bits() const noexcept { return bits_; }

    std::vector<int> letters() const;
    /// Letters [from, from + count).
    Word slice(int from, int count) const;
    Word rotated(int shift) const;
    Word reversed() const;
    int max_letter() const noexcept;

    friend Word operator*(Word lhs, Word rhs);
    friend constexpr auto operator<=>(Word, Word) = default;

    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

struct WordHash {
    std::size_t operator()(Word w) const noexcept { return std::hash<std::uint64_t>{}(w.bits()); }
};

}  // namespace gtf
