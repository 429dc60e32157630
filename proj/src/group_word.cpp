#include "gtf/group_word.hpp"

#include <algorithm>
#include <cstdlib>

#include "gtf/errors.hpp"
#include "gtf/necklace.hpp"

namespace gtf {

namespace {

std::vector<int> free_reduce(const std::vector<int>& in) {
    std::vector<int> out;
    out.reserve(in.size());
    for (int l : in) {
        if (l == 0) throw DomainError("group word letter 0 is not a generator");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

std::string letters_to_string(const std::vector<int>& ls) {
    if (ls.empty()) return "1";
    std::string s;
    for (int l : ls) {
        if (!s.empty()) s += ' ';
        s += "g" + std::to_string(std::abs(l));
        if (l < 0) s += "^-1";
    }
    return s;
}

int max_abs(const std::vector<int>& ls) {
    int m = 0;
    for (int l : ls) m = std::max(m, std::abs(l));
    return m;
}

}  // namespace

GroupWord GroupWord::reduce(std::vector<int> letters) {
    GroupWord w;
    w.letters_ = free_reduce(letters);
    return w;
}

int GroupWord::max_generator() const noexcept { return max_abs(letters_); }

GroupWord GroupWord::inverse() const {
    GroupWord w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    for (int& l : w.letters_) l = -l;
    return w;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    std::vector<int> ls = a.letters_;
    ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
    return GroupWord::reduce(std::move(ls));
}

std::string GroupWord::to_string() const { return letters_to_string(letters_); }

ConjClass ConjClass::of(std::vector<int> letters) {
    std::vector<int> w = free_reduce(letters);
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
        ++lo;
        --hi;
    }
    ConjClass c;
    if (hi > lo) {
        std::vector<int> core(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
        const int r = least_rotation(core);
        std::rotate(core.begin(), core.begin() + r, core.end());
        c.letters_ = std::move(core);
    }
    return c;
}

int ConjClass::max_generator() const noexcept { return max_abs(letters_); }

ConjClass ConjClass::inverse() const { return of(representative().inverse().letters()); }

std::string ConjClass::to_string() const { return "[" + letters_to_string(letters_) + "]"; }

void add_term(ClassCombination& c, const ConjClass& k, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = c.try_emplace(k, coeff);
    if (!inserted && (it->second += coeff) == 0) c.erase(it);
}

void add_term(ClassPairCombination& c, const ConjClass& a, const ConjClass& b, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = c.try_emplace(std::make_pair(a, b), coeff);
    if (!inserted && (it->second += coeff) == 0) c.erase(it);
}

}  // namespace gtf
