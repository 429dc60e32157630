#include "gtf/necklace.hpp"

namespace gtf {

int least_rotation(std::span<const int> s) {
    const int n = static_cast<int>(s.size());
    if (n == 0) return 0;
    std::vector<int> f(static_cast<std::size_t>(2 * n), -1);
    auto at = [&](int i) { return s[static_cast<std::size_t>(i % n)]; };
    int k = 0;
    for (int j = 1; j < 2 * n; ++j) {
        int i = f[static_cast<std::size_t>(j - k - 1)];
        while (i != -1 && at(j) != at(k + i + 1)) {
            if (at(j) < at(k + i + 1)) k = j - i - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && at(j) != at(k + i + 1)) {
            if (at(j) < at(k + i + 1)) k = j;
            f[static_cast<std::size_t>(j - k)] = -1;
        } else {
            f[static_cast<std::size_t>(j - k)] = i + 1;
        }
    }
    return k;
}

CyclicWord CyclicWord::of(Word w) {
    if (w.degree() < 2) return CyclicWord(w);
    const auto letters = w.letters();
    return CyclicWord(w.rotated(least_rotation(letters)));
}

}  // namespace gtf
