#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cable.hpp"

namespace assoc {

// ------------------------------------------------------------------
// Parenthesized objects: full binary trees whose leaves carry a
// permutation of 1..n. These are the sources and targets of morphism
// words in the parenthesized braid groupoids.
// ------------------------------------------------------------------

struct PaNode {
    int leaf = 0;  // strand label when > 0; internal node otherwise
    std::vector<PaNode> kids;

    bool is_leaf() const { return leaf > 0; }
    bool operator==(const PaNode& o) const;
};

PaNode pa_leaf(int label);
PaNode pa_pair(PaNode l, PaNode r);
PaNode pa_left_comb(int n);  // ((..(12)3..)n), the standard source object

// Text form: juxtaposition with parentheses, e.g. "(12)3", "1(23)".
// Outermost parentheses may be omitted; multi-digit labels unsupported.
PaNode pa_parse(const std::string& text);
std::string pa_render(const PaNode& o);
std::vector<int> pa_leaves(const PaNode& o);

// ------------------------------------------------------------------
// Letters of morphism words. Each letter is a named generator with a
// superscript pattern (comma-separated strand groups, "0" the empty
// group) and an exponent of +-1. Generators with handle indexes (the
// genus letters) carry idx >= 1.
// ------------------------------------------------------------------

enum class LK { Id, R, Rt, F, Phi, A, B, At, Bt };

struct Letter {
    LK kind = LK::Id;
    int idx = 0;   // handle index for A/B/At/Bt letters
    int exp = 1;   // +1 or -1
    std::vector<std::vector<int>> groups;  // written digit order is kept

    int arity() const;  // strand slots of the bare generator (2 or 3)
    std::string pattern() const;
    std::string render() const;
    bool operator==(const Letter& o) const = default;
};

// Syntax: "R^{1,2}", "Phi^{2,1,3}", "F^{12}", "A1^{1,23}", "Bt2^{12,3}",
// "Id^{12,3}"; a trailing "!" inverts. Missing superscript means the
// identity pattern of the generator arity.
Letter letter_parse(const std::string& text);
Letter make_letter(LK kind, const std::string& pattern, int exp = 1, int idx = 0);

// One endpoint step: the object a letter produces when applied to obj,
// or nullopt when the superscript does not match any node of obj.
std::optional<PaNode> letter_apply(const PaNode& obj, const Letter& L);

// Words compose left to right on objects: the leftmost letter acts on
// the source. Construction validates every endpoint along the path.
struct BraidMorphism {
    int n = 0;
    PaNode source, target;
    std::vector<Letter> word;

    static BraidMorphism make(int n, const PaNode& source, std::vector<Letter> word);
    BraidMorphism inverse() const;
    std::string render() const;
};

std::vector<Letter> word_inverse(const std::vector<Letter>& w);
std::vector<Letter> word_concat(std::vector<Letter> a, const std::vector<Letter>& b);
// group commutator u v u^-1 v^-1 as a word
std::vector<Letter> word_commutator(const std::vector<Letter>& u,
                                    const std::vector<Letter>& v);

// Whitespace-separated letters, e.g. "Phi^{1,2,3} A1^{1,23} R^{1,23}".
BraidMorphism word_parse(int n, const PaNode& source, const std::string& text);

// ------------------------------------------------------------------
// Framed braid groups: an Artin word, its permutation, and integer
// framings. Multiplication composes words and transports framings
// along the first factor's permutation.
// ------------------------------------------------------------------

struct FramedBraid {
    int n = 0;
    std::vector<long> framing;  // framing[i] for strand position i+1
    std::vector<int> artin;     // k > 0 for sigma_k, k < 0 for sigma_k^-1
    std::vector<int> perm;      // position i+1 exits at perm[i]

    static FramedBraid id(int n);
    static FramedBraid make(int n, std::vector<long> framing, std::vector<int> artin);
    FramedBraid inverse() const;
};

FramedBraid framed_mul(const FramedBraid& a, const FramedBraid& b);

// ------------------------------------------------------------------
// Evaluation data: an associator candidate (mu, phi) and, for genus
// letters, a tuple of group-like series over the two-strand genus-g
// algebra. Series are group-like with constant term 1.
// ------------------------------------------------------------------

struct AssociatorCandidate {
    Rat mu;
    int N = 0;
    std::shared_ptr<GradedQuotient> f2;  // free Lie algebra on x, y
    Series<Rat> phi;

    static AssociatorCandidate trivial(const Rat& mu, int N);
};

struct GenusData {
    int g = 1;
    int N = 0;
    std::shared_ptr<GradedQuotient> base;  // framed genus-g two-strand algebra
    // Full handle generator series, indexed by handle, size g. trivial()
    // seeds them with exp(x_1^a) and exp(y_1^a).
    std::vector<Series<Rat>> A_plus, A_minus;

    static GenusData trivial(int g, int N);
};

// Shared quotient instances keyed by family; series returned by the
// evaluator point into the pool, which must outlive them.
class AlgebraPool {
  public:
    GradedQuotient& get(const FamilySpec& spec);

  private:
    std::vector<std::pair<FamilySpec, std::unique_ptr<GradedQuotient>>> pool_;
};

// Which infinitesimal algebras word evaluation lands in.
struct EvalTarget {
    bool framed = true;
    int genus = 0;  // 0 selects the chord-only families
    FamilySpec family(int strands) const;
};

// Evaluates words in the completed algebras. A word F_1 F_2 .. F_k maps
// to img(F_k) * .. * img(F_1): composition of diagrams stacks the
// earlier factor's image on the right.
class WordEvaluator {
  public:
    WordEvaluator(AlgebraPool& pool, AssociatorCandidate assoc, EvalTarget target,
                  int N, const GenusData* genus = nullptr);

    Series<Rat> eval(const BraidMorphism& w);
    Series<Rat> eval_word(const std::vector<Letter>& word, int n);
    Series<Rat> letter_image(const Letter& L, int n);
    GradedQuotient& algebra(int n);
    int truncation() const { return N_; }

  private:
    Series<Rat> base_image(LK kind, int idx);

    AlgebraPool& pool_;
    AssociatorCandidate assoc_;
    GenusData genus_;
    bool has_genus_ = false;
    EvalTarget target_;
    int N_ = 0;
    std::map<std::string, Series<Rat>> cache_;
};

// ------------------------------------------------------------------
// Relation catalogs. Word relations come as validated morphism pairs
// with common endpoints; the Grothendieck-Teichmueller system is kept
// as symbolic strings (profinite words are not evaluated here).
// ------------------------------------------------------------------

struct Relation {
    std::string name;
    BraidMorphism lhs, rhs;
};

struct SymbolicRelation {
    std::string name;
    std::string lhs, rhs;
};

struct Catalog {
    std::string name;
    EvalTarget target;
    std::vector<Relation> words;
    std::vector<SymbolicRelation> symbolic;
};

// Catalog ids: "PaBf", "PaBf_g", "PaBf_g_bis", "PaB_1", "LE1", "GT_g".
// The genus argument is required for the genus-parametrized ids.
Catalog relation_words(const std::string& id, int genus = 0);

// Standard generators of the pure braid group as parenthesized words:
// a conjugated double crossing of strands i < j on the left comb of n
// strands (n in {2, 3, 4}). The result is an automorphism of the comb.
BraidMorphism pure_braid_word(int i, int j, int n);

}  // namespace assoc
