#include "pseudotri/coxeter.hpp"

#include "pseudotri/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ptri {

SignedPerm identity_perm(int n)
{
    SignedPerm w(n);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

void check_signed_perm(const SignedPerm& w)
{
    int n = static_cast<int>(w.size());
    std::vector<bool> seen(n + 1, false);
    int neg = 0;
    for (int x : w) {
        int a = std::abs(x);
        if (a < 1 || a > n || seen[a])
            throw InvalidInput("not a signed permutation");
        seen[a] = true;
        neg += x < 0;
    }
    if (neg % 2)
        throw InvalidInput("odd number of negative entries (not type D)");
}

SignedPerm apply_gen(const SignedPerm& w, int gen)
{
    int n = static_cast<int>(w.size());
    if (gen < 0 || gen >= n)
        throw InvalidInput("generator out of range: " + std::to_string(gen));
    SignedPerm r = w;
    if (gen == 0) {
        r[0] = -w[1];
        r[1] = -w[0];
    } else {
        std::swap(r[gen - 1], r[gen]);
    }
    return r;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b)
{
    SignedPerm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] = (b[i] > 0 ? 1 : -1) * a.at(std::abs(b[i]) - 1);
    return r;
}

SignedPerm product(int n, const std::vector<int>& word)
{
    SignedPerm w = identity_perm(n);
    for (int s : word)
        w = apply_gen(w, s);
    return w;
}

int length(const SignedPerm& w)
{
    int n = static_cast<int>(w.size()), l = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            l += (w[i] > w[j]) + (w[i] + w[j] < 0);
    return l;
}

SignedPerm longest_element(int n)
{
    SignedPerm w(n);
    for (int i = 0; i < n; ++i)
        w[i] = -(i + 1);
    if (n % 2)
        w[0] = 1;
    return w;
}

bool is_reduced(int n, const std::vector<int>& word)
{
    SignedPerm w = identity_perm(n);
    int l = 0;
    for (int s : word) {
        w = apply_gen(w, s);
        if (length(w) != ++l)
            return false;
    }
    return true;
}

int conj_w0(int n, int s)
{
    SignedPerm w0 = longest_element(n);
    SignedPerm x = compose(compose(w0, apply_gen(identity_perm(n), s)), w0);
    for (int t = 0; t < n; ++t)
        if (apply_gen(identity_perm(n), t) == x)
            return t;
    throw ModelInconsistency("w0 conjugate of a generator is not a generator");
}

bool dynkin_adjacent(int n, int i, int j)
{
    if (i > j)
        std::swap(i, j);
    if (j >= n)
        return false;
    return (i == 0 && j == 2) || (i == 1 && j == 2) || (i >= 2 && j == i + 1);
}

std::vector<std::vector<int>> cartan(int n)
{
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = i == j ? 2 : dynkin_adjacent(n, i, j) ? -1 : 0;
    return a;
}

void check_coxeter_element(int n, const std::vector<int>& c)
{
    std::vector<int> s = c;
    std::sort(s.begin(), s.end());
    std::vector<int> want(n);
    std::iota(want.begin(), want.end(), 0);
    if (s != want)
        throw InvalidInput("a Coxeter element must list each generator 0..n-1 once");
}

bool consecutive01(int n, const std::vector<int>& c)
{
    check_coxeter_element(n, c);
    std::set<std::vector<int>> seen{c};
    std::vector<std::vector<int>> stack{c};
    while (!stack.empty()) {
        std::vector<int> w = stack.back();
        stack.pop_back();
        for (int k = 0; k + 1 < n; ++k) {
            if ((w[k] == 0 && w[k + 1] == 1) || (w[k] == 1 && w[k + 1] == 0))
                return true;
            if (dynkin_adjacent(n, w[k], w[k + 1]))
                continue;
            std::vector<int> v = w;
            std::swap(v[k], v[k + 1]);
            if (seen.insert(v).second)
                stack.push_back(v);
        }
    }
    return false;
}

std::vector<int> closed_form_suffix(int n, const std::vector<int>& c)
{
    std::vector<int> suf;
    for (int k = 0; k < n - 1; ++k)
        suf.insert(suf.end(), c.begin(), c.end());
    if (!consecutive01(n, c)) {
        auto pos0 = std::find(c.begin(), c.end(), 0) - c.begin();
        auto pos1 = std::find(c.begin(), c.end(), 1) - c.begin();
        int from = pos0 > pos1 ? 0 : 1;
        for (int i = static_cast<int>(suf.size()) - 1; i >= 0; --i)
            if (suf[i] == from) {
                suf[i] = 1 - from;
                break;
            }
    }
    return suf;
}

std::vector<int> sorting_suffix(int n, const std::vector<int>& c)
{
    check_coxeter_element(n, c);
    SignedPerm w = identity_perm(n), w0 = longest_element(n);
    std::vector<int> word;
    int l = 0;
    while (w != w0) {
        for (int s : c) {
            SignedPerm v = apply_gen(w, s);
            if (length(v) == l + 1) {
                w = v;
                ++l;
                word.push_back(s);
            }
        }
    }
    return word;
}

std::vector<int> build_Qc(int n, const std::vector<int>& c)
{
    std::vector<int> suf = sorting_suffix(n, c);
    if (static_cast<int>(suf.size()) != n * (n - 1) || !is_reduced(n, suf) ||
        product(n, suf) != longest_element(n))
        throw ModelInconsistency("w0(c) is not a reduced expression of w0");
    std::vector<int> q = c;
    q.insert(q.end(), suf.begin(), suf.end());
    return q;
}

int rotate_pair(const Dn& d, int pair)
{
    const Chord& c = d.pair(pair).rep;
    if (c.central())
        return d.pair_index(d.central(c.p + 1, other(c.side)));
    return d.pair_index(d.straight(c.p + 1, c.q + 1));
}

SubwordComplex::SubwordComplex(const Dn& d, std::vector<int> c) : d_(&d), n_(d.n()), c_(std::move(c))
{
    const int n = n_;
    word_ = build_Qc(n, c_);
    const int m = size();

    rot_.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        int next = -1;
        for (int j = i + 1; j < m; ++j)
            if (word_[j] == word_[i]) {
                next = j;
                break;
            }
        if (next < 0) {
            int t = conj_w0(n, word_[i]);
            next = static_cast<int>(std::find(word_.begin(), word_.end(), t) - word_.begin());
        }
        rot_[i] = next + 1;
    }
    {
        std::vector<int> s = rot_;
        std::sort(s.begin(), s.end());
        for (int i = 0; i < m; ++i)
            if (s[i] != i + 1)
                throw ModelInconsistency("rotation is not a bijection");
    }

    // positions of the generators in c
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i)
        pi[c_[i]] = i + 1;
    std::map<int, int> diag;
    diag[pi[0]] = pi[0] > pi[2] ? d.pair_index(d.central(0, Side::A))
                                : d.pair_index(d.central(n - 1, Side::B));
    diag[pi[1]] = pi[1] > pi[2] ? d.pair_index(d.central(0, Side::B))
                                : d.pair_index(d.central(n - 1, Side::A));
    for (int i = 2; i < n; ++i) {
        int p = 0, q = n - 1;
        for (int j = 2; j <= n - 2; ++j) {
            if (j >= i)
                break;
            if (pi[j] < pi[j + 1])
                ++p;
            else if (pi[j] > pi[j + 1])
                --q;
        }
        diag[pi[i]] = d.pair_index(d.straight(p, q));
    }
    // propagate along the rotation until every position is labelled
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 1; i <= m; ++i) {
            auto it = diag.find(i);
            if (it != diag.end() && !diag.count(rot_[i - 1])) {
                diag[rot_[i - 1]] = rotate_pair(d, it->second);
                grew = true;
            }
        }
    }
    diag_.assign(m, -1);
    for (auto [pos, pair] : diag)
        diag_[pos - 1] = pair;
    for (int i = 1; i <= m; ++i) {
        if (diag_[i - 1] < 0)
            throw ModelInconsistency("position " + std::to_string(i) + " left unlabelled");
        if (diag_[rot_[i - 1] - 1] != rotate_pair(d, diag_[i - 1]))
            throw ModelInconsistency("position labels do not commute with rotation");
    }
    std::vector<int> s = diag_;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end() || static_cast<int>(s.size()) != d.pair_count())
        throw ModelInconsistency("positions do not biject onto the centrally symmetric pairs");
    if (!is_pseudotriangulation(d, zc()))
        throw ModelInconsistency("the accordion Z_c is not a pseudotriangulation");
}

int SubwordComplex::position_of(int pair) const
{
    auto it = std::find(diag_.begin(), diag_.end(), pair);
    if (it == diag_.end())
        throw InvalidInput("pair has no position");
    return static_cast<int>(it - diag_.begin()) + 1;
}

PT SubwordComplex::zc() const
{
    PT t(diag_.begin(), diag_.begin() + n_);
    std::sort(t.begin(), t.end());
    return t;
}

int SubwordComplex::zc_pair(int s) const
{
    auto it = std::find(c_.begin(), c_.end(), s);
    return diag_.at(it - c_.begin());
}

bool SubwordComplex::word_facet(const std::vector<int>& positions) const
{
    std::vector<bool> skip(size() + 1, false);
    for (int p : positions) {
        if (p < 1 || p > size())
            throw InvalidInput("position out of range: " + std::to_string(p));
        skip[p] = true;
    }
    SignedPerm w = identity_perm(n_);
    int l = 0;
    for (int i = 1; i <= size(); ++i) {
        if (skip[i])
            continue;
        w = apply_gen(w, letter(i));
        if (length(w) != ++l)
            return false;
    }
    return w == longest_element(n_);
}

bool SubwordComplex::facet_check(const std::vector<int>& positions) const
{
    if (static_cast<int>(positions.size()) != n_)
        throw InvalidInput("a facet has exactly n positions");
    bool word = word_facet(positions);
    PT t;
    for (int p : positions)
        t.push_back(pair_at(p));
    std::sort(t.begin(), t.end());
    bool geo = is_pseudotriangulation(*d_, t);
    if (word != geo)
        throw ModelInconsistency("word and pseudotriangulation facet tests disagree");
    return word;
}

std::vector<int> SubwordComplex::root_of(int pair) const
{
    std::vector<int> r(n_, 0);
    for (int s = 0; s < n_; ++s)
        if (zc_pair(s) == pair) {
            r[s] = -1;
            return r;
        }
    for (int s = 0; s < n_; ++s)
        r[s] = d_->crossing_number(zc_pair(s), pair);
    return r;
}

std::set<std::vector<int>> positive_roots(int n)
{
    auto a = cartan(n);
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> stack;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        stack.push_back(e);
    }
    while (!stack.empty()) {
        std::vector<int> r = stack.back();
        stack.pop_back();
        for (int i = 0; i < n; ++i) {
            int k = 0;
            for (int j = 0; j < n; ++j)
                k += r[j] * a[j][i];
            std::vector<int> v = r;
            v[i] -= k;
            bool nonneg = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
            bool nonzero = std::any_of(v.begin(), v.end(), [](int x) { return x != 0; });
            if (nonneg && nonzero && roots.insert(v).second)
                stack.push_back(v);
        }
    }
    return roots;
}

} // namespace ptri
