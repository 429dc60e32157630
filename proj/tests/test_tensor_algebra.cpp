#include <map>

#include "doctest.h"
#include "gtf/free_series.hpp"
#include "support.hpp"

using namespace gtf;
using gtf::testing::Gen;
using gtf::testing::mono;
using gtf::testing::q;

namespace {

using R = Rational;
using Naive = std::map<std::vector<int>, R>;

// Independent reference arithmetic on plain letter vectors.
Naive naive_mul(const Naive& a, const Naive& b, int order) {
    Naive out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            if (static_cast<int>(wa.size() + wb.size()) > order) continue;
            auto w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out[w] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

Naive naive_from(const FreeSeries<R>& s) {
    Naive out;
    for (const auto& [w, c] : s.terms()) out[w.letters()] = c;
    return out;
}

FreeSeries<R> to_series(const Naive& a, int n, int order) {
    FreeSeries<R>::Builder b(n, order);
    for (const auto& [w, c] : a) b.add(Word::from_letters(w), c);
    return std::move(b).build();
}

}  // namespace

TEST_CASE("word packing and ordering") {
    const Word w = Word::from_letters({1, 2, 3});
    CHECK(w.degree() == 3);
    CHECK(w[0] == 1);
    CHECK(w[2] == 3);
    CHECK(w.slice(1, 2) == Word::from_letters({2, 3}));
    CHECK(w.rotated(1) == Word::from_letters({2, 3, 1}));
    CHECK(w.reversed() == Word::from_letters({3, 2, 1}));
    CHECK(Word::from_letters({2}) < Word::from_letters({1, 1}));
    CHECK(Word::from_letters({1, 2}) < Word::from_letters({2, 1}));
    CHECK(Word::from_letters({1}) * Word::from_letters({2, 2}) == Word::from_letters({1, 2, 2}));
    CHECK_THROWS_AS(Word::from_letters({0}), DomainError);
    CHECK_THROWS_AS(Word::from_letters({16}), DomainError);
}

TEST_CASE("mul: distributivity, unit, truncation") {
    const int n = 2, N = 3;
    const auto one = unit_series<R>(n, N);
    const auto a1 = mono(n, N, {1});
    const auto a2 = mono(n, N, {2});
    CHECK(mul(one + a1, one + a2) == one + a1 + a2 + mono(n, N, {1, 2}));
    Gen g(7);
    const auto v = g.series(n, N, 6);
    CHECK(mul(one, v) == v);
    CHECK(mul(v, one) == v);
    CHECK(mul(mono(2, 2, {1, 2}), mono(2, 2, {1})).is_zero());
}

TEST_CASE("mul rejects mismatched shapes") {
    CHECK_THROWS_AS(mul(unit_series<R>(2, 3), unit_series<R>(2, 4)), ContractError);
    CHECK_THROWS_AS(mul(unit_series<R>(2, 3), unit_series<R>(3, 3)), ContractError);
    CHECK_THROWS_AS(unit_series<R>(2, 3) + unit_series<R>(3, 3), ContractError);
}

TEST_CASE("exp and log") {
    const auto zero = FreeSeries<R>(2, 3);
    CHECK(exp(zero) == unit_series<R>(2, 3));
    const auto e = exp(mono(1, 3, {1}));
    const auto expected = unit_series<R>(1, 3) + mono(1, 3, {1}) + mono(1, 3, {1, 1}, q(1, 2)) +
                          mono(1, 3, {1, 1, 1}, q(1, 6));
    CHECK(e == expected);
    const auto s = mono(2, 4, {1}) + mono(2, 4, {2});
    CHECK(log(exp(s)) == s);
    CHECK(log(unit_series<R>(2, 4)).is_zero());
    CHECK_THROWS_AS(exp(unit_series<R>(2, 3)), DomainError);
    CHECK_THROWS_AS(log(mono(2, 3, {1})), DomainError);
}

TEST_CASE("bch degree-2 term against direct expansion") {
    const int n = 2, N = 2;
    // Oracle: exp(a1)exp(a2) has coefficient 1/(p! q!) on a1^p a2^q; log by explicit powers.
    Naive prod;
    const R fact[] = {R(1), R(1), R(2)};
    for (int p = 0; p <= N; ++p)
        for (int r = 0; p + r <= N; ++r) {
            std::vector<int> w(static_cast<std::size_t>(p), 1);
            w.insert(w.end(), static_cast<std::size_t>(r), 2);
            prod[w] = R(1) / (fact[p] * fact[r]);
        }
    Naive x = prod;
    x.erase(std::vector<int>{});
    Naive x2 = naive_mul(x, x, N);
    Naive log_oracle = x;
    for (const auto& [w, c] : x2) log_oracle[w] -= c / 2;
    std::erase_if(log_oracle, [](const auto& kv) { return sgn(kv.second) == 0; });

    const auto b = bch(mono(n, N, {1}), mono(n, N, {2}));
    CHECK(b == to_series(log_oracle, n, N));
    CHECK(b.degree_part(2) == mono(n, N, {1, 2}, q(1, 2)) - mono(n, N, {2, 1}, q(1, 2)));
    CHECK(b.degree_part(1) == mono(n, N, {1}) + mono(n, N, {2}));

    const auto u = mono(2, 4, {1}) + mono(2, 4, {1, 2}, q(3));
    CHECK(bch(u, FreeSeries<R>(2, 4)) == u);
    CHECK(bch(mono(2, 4, {1}), mono(2, 4, {1}, q(-1))).is_zero());
}

TEST_CASE("inverse") {
    CHECK(inverse(unit_series<R>(2, 3)) == unit_series<R>(2, 3));
    const auto a = mono(2, 4, {1});
    CHECK(inverse(exp(a)) == exp(-a));
    Gen g(11);
    for (int t = 0; t < 25; ++t) {
        const auto x = g.grouplike_candidate(3, 4, 5);
        CHECK(mul(x, inverse(x)) == unit_series<R>(3, 4));
        CHECK(mul(inverse(x), x) == unit_series<R>(3, 4));
    }
    CHECK_THROWS_AS(inverse(mono(2, 3, {1})), DomainError);
    // Non-unit constants are allowed.
    const auto y = unit_series<R>(2, 4) * q(2) + a;
    CHECK(mul(y, inverse(y)) == unit_series<R>(2, 4));
}

TEST_CASE("coproduct") {
    const int n = 2, N = 4;
    const auto d1 = coproduct(mono(n, N, {1}));
    TensorSquareSeries<R>::Builder e1(n, N);
    e1.add({Word::letter(1), Word{}}, R(1)).add({Word{}, Word::letter(1)}, R(1));
    CHECK(d1 == std::move(e1).build());

    // Oracle: product of the two primitive coproducts.
    const auto d12 = coproduct(mono(n, N, {1, 2}));
    CHECK(d12 == mul(coproduct(mono(n, N, {1})), coproduct(mono(n, N, {2}))));
    const Word w12 = Word::from_letters({1, 2});
    TensorSquareSeries<R>::Builder e12(n, N);
    e12.add({w12, Word{}}, R(1))
        .add({Word::letter(1), Word::letter(2)}, R(1))
        .add({Word::letter(2), Word::letter(1)}, R(1))
        .add({Word{}, w12}, R(1));
    CHECK(d12 == std::move(e12).build());
}

TEST_CASE("is_grouplike") {
    const int n = 2, N = 4;
    CHECK(is_grouplike(unit_series<R>(n, N)));
    CHECK(is_grouplike(exp(mono(n, N, {1}))));
    CHECK(is_grouplike(exp(mono(n, N, {1}) + commutator(mono(n, N, {1}), mono(n, N, {2})))));
    CHECK_FALSE(is_grouplike(unit_series<R>(n, N) + mono(n, N, {1, 2})));
    const auto c = to_complex(exp(mono(n, N, {2})));
    CHECK(is_grouplike(c, 1e-14));
}

TEST_CASE("substitute") {
    const int n = 2, N = 4;
    const auto x = mono(n, N, {1});
    const auto y = mono(n, N, {2});
    CHECK(substitute(mono(n, N, {1, 2}), {y, x}) == mono(n, N, {2, 1}));
    CHECK(substitute(exp(mono(1, N, {1})), {x + y}) == exp(x + y));
    const R c = q(3, 7);
    const auto phi = unit_series<R>(n, N) + (mono(n, N, {1, 2}) - mono(n, N, {2, 1})) * c;
    const auto img = substitute(phi, {x, -x - y});
    CHECK(img == unit_series<R>(n, N) - (mono(n, N, {1, 2}) - mono(n, N, {2, 1})) * c);
    CHECK_THROWS_AS(substitute(phi, {x + unit_series<R>(n, N), y}), DomainError);
    CHECK_THROWS_AS(substitute(phi, {x}), ContractError);
}

TEST_CASE("conjugate") {
    Gen g(5);
    const auto gg = g.grouplike_candidate(2, 4, 4);
    CHECK(conjugate(gg, unit_series<R>(2, 4)) == gg);
    const auto e = exp(mono(2, 4, {1}));
    CHECK(conjugate(e, e) == e);
    CHECK_THROWS_AS(conjugate(gg, mono(2, 4, {1})), DomainError);
}

TEST_CASE("property: associativity and unit of mul (n<=3, N<=5)") {
    Gen g(2024);
    for (int t = 0; t < 40; ++t) {
        const int n = g.uniform(1, 3), N = g.uniform(1, 5);
        const auto a = g.series(n, N, 4), b = g.series(n, N, 4), c = g.series(n, N, 4);
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, unit_series<R>(n, N)) == a);
        // matches the naive reference product
        CHECK(mul(a, b) == to_series(naive_mul(naive_from(a), naive_from(b), N), n, N));
    }
}

TEST_CASE("property: exp/log inverse, bch associativity, Δ morphism, substitution morphism") {
    Gen g(99);
    for (int t = 0; t < 15; ++t) {
        const int n = g.uniform(2, 3), N = g.uniform(2, 5);
        const auto u = g.series(n, N, 3, 1), v = g.series(n, N, 3, 1), w = g.series(n, N, 3, 1);
        CHECK(log(exp(u)) == u);
        const auto gl = g.grouplike_candidate(n, N, 4);
        CHECK(exp(log(gl)) == gl);
        CHECK(bch(bch(u, v), w) == bch(u, bch(v, w)));
        CHECK(coproduct(mul(u, v)) == mul(coproduct(u), coproduct(v)));
        const auto lie = g.lie_element(n, N, 3);
        CHECK(is_grouplike(exp(lie)));

        std::vector<FreeSeries<R>> images;
        for (int i = 0; i < n; ++i) images.push_back(g.series(n, N, 2, 1));
        const std::span<const FreeSeries<R>> im(images);
        CHECK(substitute(mul(u, v), im) == mul(substitute(u, im), substitute(v, im)));
        CHECK(substitute(exp(u), im) == exp(substitute(u, im)));
    }
}
