#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gens.hpp"
#include "rational.hpp"

namespace assoc {

using Word = std::vector<int>;  // letter indices into an Alphabet

// Basis key: (total weight, index of the Lyndon word within that weight).
using BKey = std::pair<int, int>;

// Lie element in the Lyndon basis of the free Lie algebra on an Alphabet.
// Zero coefficients are never stored.
using LiePoly = std::map<BKey, Rat>;

LiePoly lp_add(const LiePoly& a, const LiePoly& b);
LiePoly lp_sub(const LiePoly& a, const LiePoly& b);
LiePoly lp_scale(const LiePoly& a, const Rat& c);
bool lp_is_zero(const LiePoly& a);

// Free Lie algebra layer: Lyndon word tables per weight, standard
// factorization, and bracket rewriting into the Lyndon basis.
class FreeLie {
  public:
    explicit FreeLie(Alphabet alphabet);

    const Alphabet& alphabet() const { return alpha_; }

    // Makes all tables available through total weight d.
    void ensure_weight(int d);
    int max_weight() const { return max_weight_; }

    int dim(int weight) const;
    const std::vector<Word>& basis_words(int weight) const;
    const Word& word_of(BKey k) const { return basis_words(k.first)[k.second]; }
    BKey key_of(const Word& w) const;

    int word_weight(const Word& w) const;
    bool is_lyndon(const Word& w) const;
    // Standard factorization of a Lyndon word of length >= 2: the right factor
    // is the longest proper Lyndon suffix.
    std::pair<Word, Word> std_factorization(const Word& w) const;

    LiePoly letter(int letter_index) const;

    // Bracket of two basis elements, rewritten into the Lyndon basis.
    const LiePoly& bracket_basis(BKey a, BKey b);
    LiePoly bracket(const LiePoly& a, const LiePoly& b);

    // Expansion of a basis element in the tensor algebra (word -> coefficient),
    // used by oracle tests and for brute-force cross checks.
    std::map<Word, Rat> tensor_expand(BKey k);
    std::map<Word, Rat> tensor_expand(const LiePoly& p);

    std::string render_word(const Word& w) const;
    std::string render(const LiePoly& p) const;

  private:
    Alphabet alpha_;
    int max_weight_ = 0;
    std::vector<std::vector<Word>> by_weight_;  // [weight] -> lex-sorted Lyndon words
    std::map<Word, BKey> index_;
    std::map<std::pair<BKey, BKey>, LiePoly> bracket_memo_;
    std::map<BKey, std::map<Word, Rat>> tensor_memo_;
};

}  // namespace assoc
