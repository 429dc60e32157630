#include "gtf/word.hpp"

#include "gtf/errors.hpp"

namespace gtf {

Word Word::from_letters(std::span<const int> letters) {
    if (letters.size() > static_cast<std::size_t>(kMaxWordLength))
        throw DomainError("word length " + std::to_string(letters.size()) + " exceeds the supported maximum of " +
                          std::to_string(kMaxWordLength));
    std::uint64_t bits = 0;
    for (int l : letters) {
        if (l < 1 || l > kMaxGenerators) throw DomainError("generator index " + std::to_string(l) + " out of range");
        bits = (bits << 4) | static_cast<std::uint64_t>(l);
    }
    return from_bits(bits | (static_cast<std::uint64_t>(letters.size()) << 60));
}

std::vector<int> Word::letters() const {
    std::vector<int> out(static_cast<std::size_t>(degree()));
    for (int i = 0; i < degree(); ++i) out[static_cast<std::size_t>(i)] = (*this)[i];
    return out;
}

Word Word::slice(int from, int count) const {
    if (count <= 0) return Word{};
    const int tail = degree() - from - count;
    const std::uint64_t mask = (count >= 15) ? ((std::uint64_t{1} << 60) - 1) : ((std::uint64_t{1} << (4 * count)) - 1);
    const std::uint64_t payload = (bits_ >> (4 * tail)) & mask;
    return from_bits(payload | (static_cast<std::uint64_t>(count) << 60));
}

Word Word::rotated(int shift) const {
    const int k = degree();
    if (k == 0) return *this;
    shift = ((shift % k) + k) % k;
    return slice(shift, k - shift) * slice(0, shift);
}

Word Word::reversed() const {
    std::uint64_t bits = 0;
    for (int i = degree() - 1; i >= 0; --i) bits = (bits << 4) | static_cast<std::uint64_t>((*this)[i]);
    return from_bits(bits | (static_cast<std::uint64_t>(degree()) << 60));
}

int Word::max_letter() const noexcept {
    int m = 0;
    for (int i = 0; i < degree(); ++i) m = std::max(m, (*this)[i]);
    return m;
}

Word operator*(Word lhs, Word rhs) {
    const int k = lhs.degree() + rhs.degree();
    if (k > kMaxWordLength) throw DomainError("word concatenation exceeds the supported maximum length");
    const std::uint64_t payload_mask = (std::uint64_t{1} << 60) - 1;
    const std::uint64_t l = lhs.bits_ & payload_mask;
    const std::uint64_t r = rhs.bits_ & payload_mask;
    return Word::from_bits((l << (4 * rhs.degree())) | r | (static_cast<std::uint64_t>(k) << 60));
}

std::string Word::to_string() const {
    if (empty()) return "1";
    std::string s;
    for (int i = 0; i < degree(); ++i) {
        if (i) s += ' ';
        s += 'a';
        s += std::to_string((*this)[i]);
    }
    return s;
}

}  // namespace gtf
