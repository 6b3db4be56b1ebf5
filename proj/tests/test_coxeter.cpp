#include <doctest.h>

#include "pseudotri/coxeter.hpp"
#include "pseudotri/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>

using namespace ptri;

namespace {

std::vector<std::vector<int>> all_coxeter_elements(int n)
{
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    std::vector<std::vector<int>> out;
    do
        out.push_back(c);
    while (std::next_permutation(c.begin(), c.end()));
    return out;
}

// Word lengths by breadth-first search on the Cayley graph.
std::map<SignedPerm, int> cayley_bfs(int n)
{
    std::map<SignedPerm, int> dist{{identity_perm(n), 0}};
    std::deque<SignedPerm> q{identity_perm(n)};
    while (!q.empty()) {
        SignedPerm w = q.front();
        q.pop_front();
        for (int s = 0; s < n; ++s) {
            SignedPerm v = apply_gen(w, s);
            if (dist.emplace(v, dist[w] + 1).second)
                q.push_back(v);
        }
    }
    return dist;
}

void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 1);
    for (;;) {
        f(s);
        int i = k - 1;
        while (i >= 0 && s[i] == m - k + i + 1)
            --i;
        if (i < 0)
            return;
        ++s[i];
        for (int j = i + 1; j < k; ++j)
            s[j] = s[j - 1] + 1;
    }
}

} // namespace

TEST_CASE("signed permutations")
{
    CHECK(longest_element(3) == SignedPerm{1, -2, -3});
    CHECK(longest_element(4) == SignedPerm{-1, -2, -3, -4});
    CHECK(length(identity_perm(5)) == 0);
    CHECK(length(longest_element(3)) == 6);
    CHECK(apply_gen(identity_perm(3), 0) == SignedPerm{-2, -1, 3});
    CHECK_THROWS_AS(check_signed_perm({-1, 2, 3}), InvalidInput);
    CHECK_THROWS_AS(check_signed_perm({1, 1, 3}), InvalidInput);
    check_signed_perm(longest_element(5));
}

TEST_CASE("length formula matches the Cayley graph")
{
    for (int n = 3; n <= 5; ++n) {
        auto dist = cayley_bfs(n);
        long order = 1L << (n - 1);
        for (int k = 2; k <= n; ++k)
            order *= k;
        CHECK(static_cast<long>(dist.size()) == order);
        int maxlen = 0;
        for (const auto& [w, l] : dist) {
            REQUIRE(length(w) == l);
            check_signed_perm(w);
            for (int s = 0; s < n; ++s)
                REQUIRE(std::abs(length(apply_gen(w, s)) - l) == 1);
            maxlen = std::max(maxlen, l);
        }
        CHECK(maxlen == n * (n - 1));
        CHECK(dist[longest_element(n)] == n * (n - 1));
    }
    std::mt19937 rng(1);
    SignedPerm w = identity_perm(6);
    for (int k = 0; k < 500; ++k) {
        SignedPerm v = apply_gen(w, std::uniform_int_distribution<int>(0, 5)(rng));
        REQUIRE(std::abs(length(v) - length(w)) == 1);
        w = v;
    }
}

TEST_CASE("Q_c")
{
    CHECK(build_Qc(3, {1, 2, 0}) == std::vector<int>{1, 2, 0, 1, 2, 0, 1, 2, 1});
    CHECK(sorting_suffix(3, {0, 1, 2}) == std::vector<int>{0, 1, 2, 0, 1, 2});
    CHECK(consecutive01(3, {0, 1, 2}));
    CHECK_FALSE(consecutive01(3, {1, 2, 0}));
    for (int n = 3; n <= 6; ++n)
        for (const auto& c : all_coxeter_elements(n)) {
            auto q = build_Qc(n, c);
            REQUIRE(static_cast<int>(q.size()) == n * n);
            std::vector<int> suf(q.begin() + n, q.end());
            REQUIRE(is_reduced(n, suf));
            REQUIRE(product(n, suf) == longest_element(n));
        }
    // the closed formula agrees with the sorting word for n = 3
    for (const auto& c : all_coxeter_elements(3))
        CHECK(closed_form_suffix(3, c) == sorting_suffix(3, c));
    // and is not reduced for this even case
    CHECK_FALSE(is_reduced(4, closed_form_suffix(4, {0, 2, 1, 3})));
    CHECK_THROWS_AS(build_Qc(3, {0, 0, 1}), InvalidInput);
}

TEST_CASE("table for c = 1 2 0")
{
    Dn d(3);
    SubwordComplex sc(d, {1, 2, 0});
    const char* want[] = {"2^L", "[0,2]", "0^L", "0^R", "[0,4]", "1^R", "1^L", "[1,5]", "2^R"};
    for (int i = 1; i <= 9; ++i)
        CHECK(d.pair_name(sc.pair_at(i)) == want[i - 1]);
    CHECK(sc.rotation(1) == 4);
    CHECK(sc.letter(9) == 1);
    int t = conj_w0(3, 1);
    CHECK(sc.rotation(9) == static_cast<int>(std::find(sc.word().begin(), sc.word().end(), t) - sc.word().begin()) + 1);
    PT img{sc.pair_at(1), sc.pair_at(7), sc.pair_at(8)};
    std::sort(img.begin(), img.end());
    CHECK(sc.facet_check({1, 7, 8}));
    CHECK(classify(d, img) == PTClass::TypeLeft);
    CHECK(sc.facet_check({1, 2, 3}));
}

TEST_CASE("rotation and position labels")
{
    for (int n = 3; n <= 6; ++n) {
        Dn d(n);
        for (const auto& c : all_coxeter_elements(n)) {
            SubwordComplex sc(d, c);
            std::vector<int> r, p;
            for (int i = 1; i <= sc.size(); ++i) {
                r.push_back(sc.rotation(i));
                p.push_back(sc.pair_at(i));
                REQUIRE(sc.pair_at(sc.rotation(i)) == rotate_pair(d, sc.pair_at(i)));
            }
            std::sort(r.begin(), r.end());
            std::sort(p.begin(), p.end());
            for (int i = 0; i < sc.size(); ++i) {
                REQUIRE(r[i] == i + 1);
                REQUIRE(p[i] == i);
            }
            REQUIRE(is_pseudotriangulation(d, sc.zc()));
        }
    }
}

TEST_CASE("facets: word side equals geometry side")
{
    for (int n = 3; n <= 4; ++n) {
        Dn d(n);
        for (const auto& c : all_coxeter_elements(n)) {
            SubwordComplex sc(d, c);
            int facets = 0, subsets = 0;
            for_each_subset(n * n, n, [&](const std::vector<int>& I) {
                facets += sc.facet_check(I);
                ++subsets;
            });
            CHECK(subsets == (n == 3 ? 84 : 1820));
            CHECK(facets == (n == 3 ? 14 : 50));
        }
    }
}

TEST_CASE("roots")
{
    for (int n = 3; n <= 6; ++n) {
        auto pos = positive_roots(n);
        CHECK(static_cast<int>(pos.size()) == n * (n - 1));
        Dn d(n);
        std::set<std::vector<int>> almost = pos;
        for (int i = 0; i < n; ++i) {
            std::vector<int> e(n, 0);
            e[i] = -1;
            almost.insert(e);
        }
        for (const auto& c : all_coxeter_elements(n)) {
            SubwordComplex sc(d, c);
            std::set<std::vector<int>> img;
            for (int p = 0; p < d.pair_count(); ++p)
                img.insert(sc.root_of(p));
            REQUIRE(img == almost);
        }
    }
    Dn d(3);
    SubwordComplex sc(d, {1, 2, 0});
    CHECK(sc.root_of(d.pair_index(d.straight(1, 5))) == std::vector<int>{1, 0, 1});
    CHECK(sc.root_of(sc.pair_at(1)) == std::vector<int>{0, -1, 0});
    CHECK(sc.root_of(sc.pair_at(7)) == std::vector<int>{0, 0, 1});
}
