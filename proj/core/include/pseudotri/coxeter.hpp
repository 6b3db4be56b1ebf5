#pragma once

#include "pseudotri/geometry.hpp"

#include <set>
#include <vector>

namespace ptri {

// Type D_n as signed permutations w(1..n) with an even number of negative entries.
// Generator 0 swaps positions 1, 2 and negates both; generator i swaps positions i, i+1.
using SignedPerm = std::vector<int>;

SignedPerm identity_perm(int n);
void check_signed_perm(const SignedPerm& w); // throws InvalidInput
SignedPerm apply_gen(const SignedPerm& w, int gen); // w * τ_gen
SignedPerm compose(const SignedPerm& a, const SignedPerm& b); // (a∘b)(i) = a(b(i))
SignedPerm product(int n, const std::vector<int>& word);
int length(const SignedPerm& w);
SignedPerm longest_element(int n);
bool is_reduced(int n, const std::vector<int>& word);
// The generator t with w0 τ_s w0 = τ_t.
int conj_w0(int n, int s);

bool dynkin_adjacent(int n, int i, int j);
std::vector<std::vector<int>> cartan(int n);
void check_coxeter_element(int n, const std::vector<int>& c);

// Whether τ0 and τ1 are adjacent in c up to commutations.
bool consecutive01(int n, const std::vector<int>& c);
// c^(n-1) with the one-letter substitution of the closed formula. Not always reduced for even n.
std::vector<int> closed_form_suffix(int n, const std::vector<int>& c);
// The c-sorting word of w0: letters of c^∞ kept whenever they increase length.
std::vector<int> sorting_suffix(int n, const std::vector<int>& c);
// c followed by the c-sorting word of w0; n² letters.
std::vector<int> build_Qc(int n, const std::vector<int>& c);

// Q_c with its rotation and position labels. Positions are 1-based throughout.
class SubwordComplex {
public:
    SubwordComplex(const Dn& d, std::vector<int> c);

    int n() const { return n_; }
    int size() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& c() const { return c_; }
    const std::vector<int>& word() const { return word_; }
    int letter(int pos) const { return word_.at(pos - 1); }
    int rotation(int pos) const { return rot_.at(pos - 1); }
    int pair_at(int pos) const { return diag_.at(pos - 1); }
    int position_of(int pair) const;

    // Accordion Z_c: the pairs at positions 1..n.
    PT zc() const;
    // Pair of Z_c labelled by generator s (the position of s in c).
    int zc_pair(int s) const;

    // Complement of I (1-based positions) is a reduced expression of w0.
    bool word_facet(const std::vector<int>& positions) const;
    // The image of I is a pseudotriangulation. Throws ModelInconsistency if the two disagree.
    bool facet_check(const std::vector<int>& positions) const;

    // −α_s for pairs of Z_c, otherwise crossing numbers against the pairs of Z_c.
    std::vector<int> root_of(int pair) const;

private:
    const Dn* d_;
    int n_;
    std::vector<int> c_;
    std::vector<int> word_;
    std::vector<int> rot_;
    std::vector<int> diag_;
};

// Rotation by π/n with the L/R exchange.
int rotate_pair(const Dn& d, int pair);

std::set<std::vector<int>> positive_roots(int n);

} // namespace ptri
