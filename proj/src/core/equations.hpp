#pragma once

#include <memory>
#include <string>
#include <vector>

#include "words.hpp"

namespace assoc {

// ------------------------------------------------------------------
// Residual reports. Every checker returns one block per equation; a
// block lists, for each weight, the number of nonzero coordinates of
// the residual in that weight together with the first nonzero value.
// A block with no rows passed at every weight.
// ------------------------------------------------------------------

struct ResidualRow {
    int weight = 0;
    int dim = 0;        // nonzero coordinates of the residual at this weight
    std::string first;  // first nonzero coordinate, "0" when dim == 0
};

struct ResidualBlock {
    std::string name;
    std::vector<ResidualRow> rows;

    bool zero() const;
    std::string render() const;  // "name\nweight d: dim first\n..."
};

struct ResidualReport {
    std::vector<ResidualBlock> blocks;
    std::vector<std::string> notes;  // informational lines, not residuals

    bool all_zero() const;
    std::string render() const;
};

// ------------------------------------------------------------------
// Group-like substitution: replaces the letters of the base algebra
// of s by Lie elements of dst (not necessarily homogeneous) and
// re-exponentiates. Degree-N truncation throughout.
// ------------------------------------------------------------------
Series<Rat> subst_grouplike(const Series<Rat>& s, GradedQuotient& dst,
                            const std::vector<LiePoly>& images, int N);

// Image of a two-letter group-like series under x -> sum of chords
// t_pq (p in P, q in Q), y -> likewise for (Q, S), inside dst. The
// pattern lists the groups P,Q[,S] like a letter superscript.
Series<Rat> chord_subst(const Series<Rat>& s, GradedQuotient& dst,
                        const std::string& pattern, int N);

// ------------------------------------------------------------------
// Associator checking and solving over the unframed chord families
// on three and four strands.
// ------------------------------------------------------------------

ResidualReport check_associator(const AssociatorCandidate& c);

struct AssocSolveResult {
    bool ok = false;
    AssociatorCandidate cand;
    ResidualReport report;             // residuals of the solved candidate
    std::vector<int> free_params;      // free parameter count per weight 2..N
    int obstruction_weight = 0;        // 0 when consistent
};

// Solves the duality/hexagon/pentagon system degree by degree for phi
// with the given nonzero coupling. Free coefficients are set to zero.
AssocSolveResult solve_associator(const Rat& mu, int N);

// ------------------------------------------------------------------
// Genus-g associator data: checks of the five defining equation
// groups over the framed genus families, and the degree-by-degree
// solver producing handle generators from a genus-zero candidate.
// ------------------------------------------------------------------

ResidualReport check_genus(const AssociatorCandidate& c, const GenusData& d);

struct GenusSolveResult {
    bool ok = false;
    GenusData data;
    ResidualReport report;
    std::vector<int> free_params;  // per weight 1..N
    int obstruction_weight = 0;
    int rank_deficit = 0;          // inconsistent rows at the obstruction weight
};

GenusSolveResult solve_genus(const AssociatorCandidate& c, int genus, int N);

// ------------------------------------------------------------------
// Elliptic (genus one, unframed) checks. Two equivalent shapes of the
// defining equations; "bis" states them for the conjugate generators
//   At = R^{1,2} (A^{2,1})^{-1} (R^{1,2})^{-1},
// which the checker derives itself, verifying the transport along
// the way. A_plus/A_minus must live over the unframed genus-one
// two-strand family.
// ------------------------------------------------------------------

enum class EllipticForm { standard, bis };

ResidualReport check_elliptic(const AssociatorCandidate& c, const Series<Rat>& A_plus,
                              const Series<Rat>& A_minus, EllipticForm form);

// ------------------------------------------------------------------
// Graded symmetry elements. The genus-zero flavor is a pair
// (lambda, g) with g group-like in two letters; the genus flavor adds
// handle Lie elements over the framed genus two-strand family.
// ------------------------------------------------------------------

struct GRTElement {
    Rat lambda = Rat(1);
    int N = 0;
    std::shared_ptr<GradedQuotient> f2;
    Series<Rat> g;

    static GRTElement identity(int N);
};

ResidualReport grt_check(const GRTElement& e);
GRTElement grt_mul(const GRTElement& a, const GRTElement& b);
GRTElement grt_rescale(const GRTElement& e, const Rat& lambda);

struct GRTgElement {
    Rat mu = Rat(0);   // coupling carried along, unused by the relations
    int genus = 1;
    int N = 0;
    GRTElement base0;  // genus-zero part
    std::shared_ptr<GradedQuotient> base2;  // framed genus family, two strands
    std::vector<LiePoly> u_plus, u_minus;   // one Lie element per handle

    static GRTgElement identity(int genus, int N);
};

ResidualReport grt_g_check(const GRTgElement& e);

struct GTElement {
    Rat lambda = Rat(1);
    int N = 0;
    std::shared_ptr<GradedQuotient> f2;
    Series<Rat> f;

    static GTElement identity(int N);
};

// Checks the inversion, hexagon and pentagon relations with the
// generators realized through pure braid words on 3 and 4 strands
// evaluated against the given transport candidate.
ResidualReport gt_check(const GTElement& e, const AssociatorCandidate& transport);
GTElement gt_mul(const GTElement& a, const GTElement& b);

// ------------------------------------------------------------------
// Flatness of the universal connection sum_a t_a w_a: expands the
// curvature and checks membership of every coefficient in the span
// generated by the quadratic relations and the Arnold identities of
// the triple products of one-forms.
// ------------------------------------------------------------------

struct FlatnessProblem {
    int n = 2;
    bool framed = true;
    bool drop_four_term = false;  // negative control: omit the 4T relations
};

struct FlatnessReport {
    bool flat = false;
    std::vector<std::string> lines;  // surviving curvature coefficients

    std::string render() const;
};

FlatnessReport check_flatness(const FlatnessProblem& p);

}  // namespace assoc
