#pragma once

#include <string>
#include <vector>

#include "envelope.hpp"

namespace assoc {

// Distribution of n source strands over m target strands. Each source strand
// is sent to a finite (possibly empty) set of target strands; empty sets
// realize erasure, singleton permutations realize relabeling, larger sets
// realize doubling/cabling. Unassigned target strands are only allowed when
// the assignment is an explicit embedding into a larger algebra.
struct StrandAssignment {
    int n = 0;
    int m = 0;
    std::vector<std::vector<int>> sets;  // 1-based target strands per source strand
    bool embedding = false;

    // Pattern syntax: comma-separated groups of digits, "0" for the empty
    // group, parentheses ignored; e.g. "12,3", "1,23", "0,1", "2,1,3".
    static StrandAssignment from_pattern(const std::string& pattern, int target_m = 0,
                                         bool embedding = false);

    // Composition: apply this assignment (n -> m), then next (m -> p).
    StrandAssignment then(const StrandAssignment& next) const;

    void validate() const;
};

// Lie morphism by letter images, truncated by target weight. Each image must
// be homogeneous; a zero image erases every basis term containing the letter.
// Terms whose target weight exceeds max_weight are dropped before reduction.
LiePoly lie_map_filtered(const FreeLie& src, GradedQuotient& dst, const LiePoly& a,
                         const std::vector<LiePoly>& images, int max_weight);

// Group-like transport along a letter-image morphism: exp(map(log s)).
Series<Rat> map_grouplike(const Series<Rat>& s, GradedQuotient& dst,
                          const std::vector<LiePoly>& images, int N);

// Generator-wise substitution extended as a Lie morphism:
//   t_ij -> sum over S_i x S_j of t_pq,
//   t_ii -> sum over S_i x S_i of t_pq (cross terms twice),
//   x_i^a -> sum over S_i of x_p^a, likewise y.
// Computed through total target weight max_weight.
LiePoly cable_lie(GradedQuotient& src, GradedQuotient& dst, const LiePoly& a,
                  const StrandAssignment& sa, int max_weight);

// Group-like transport: exp(cable(log s)) at the same truncation.
Series<Rat> cable_series(const Series<Rat>& s, GradedQuotient& dst,
                         const StrandAssignment& sa);

// Pattern-driven transport into dst; the group count must match the source
// strand count, e.g. "12,3", "1,23", "2,1", "1,2,0".
Series<Rat> superscript_eval(const Series<Rat>& s, GradedQuotient& dst,
                             const std::string& pattern);

// Operadic coherence of iterated composition on all quotient basis elements
// through the given degree: cabling twice equals cabling once along the
// composed assignment, for both sequential and parallel nestings.
bool compose_assoc_check(const FamilySpec& fam, int size1, int size2, int size3,
                         int degree);

}  // namespace assoc
