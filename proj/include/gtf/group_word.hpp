#pragma once

// Words in the free group on γ_1..γ_n (letter ±i stands for γ_i^{±1}) and
// conjugacy classes, the combinatorial side of loops in the punctured plane.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gtf {

/// Freely reduced group word.
class GroupWord {
public:
    GroupWord() = default;
    /// Reduces the given letters; zero letters are rejected.
    static GroupWord reduce(std::vector<int> letters);

    const std::vector<int>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool is_identity() const noexcept { return letters_.empty(); }
    int max_generator() const noexcept;

    GroupWord inverse() const;
    friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
    friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

    std::string to_string() const;

private:
    std::vector<int> letters_;
};

/// Cyclically reduced word stored as its least rotation.
class ConjClass {
public:
    ConjClass() = default;
    static ConjClass of(std::vector<int> letters);
    static ConjClass of(const GroupWord& w) { return of(w.letters()); }

    const std::vector<int>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool is_trivial() const noexcept { return letters_.empty(); }
    int max_generator() const noexcept;
    GroupWord representative() const { return GroupWord::reduce(letters_); }
    ConjClass inverse() const;

    friend auto operator<=>(const ConjClass&, const ConjClass&) = default;
    std::string to_string() const;

private:
    std::vector<int> letters_;
};

/// Integer combination of conjugacy classes.
using ClassCombination = std::map<ConjClass, long long>;
/// Integer combination of ordered pairs of conjugacy classes.
using ClassPairCombination = std::map<std::pair<ConjClass, ConjClass>, long long>;

void add_term(ClassCombination& c, const ConjClass& k, long long coeff);
void add_term(ClassPairCombination& c, const ConjClass& a, const ConjClass& b, long long coeff);

}  // namespace gtf
