#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "family.hpp"
#include "freelie.hpp"
#include "linalg.hpp"

namespace assoc {

// Quotient basis key: (weight, index within that weight's quotient basis).
using QKey = std::pair<int, int>;

// PBW monomial: a nondecreasing product of quotient-basis elements.
using PBW = std::vector<QKey>;

inline int pbw_weight(const PBW& m) {
    int w = 0;
    for (const auto& k : m) w += k.first;
    return w;
}

// A presented graded Lie algebra: free Lyndon layer modulo the homogeneous
// ideal generated by the family relations. Per-degree reduction data is
// computed on demand; reduced representatives are supported on non-pivot
// Lyndon words only, which makes them canonical.
class GradedQuotient {
  public:
    explicit GradedQuotient(FamilySpec spec);

    const FamilySpec& spec() const { return spec_; }
    FreeLie& free_lie() { return fl_; }
    const FreeLie& free_lie() const { return fl_; }
    const std::vector<LiePoly>& relations() const { return rels_; }

    void ensure_weight(int d);
    int max_weight() const { return built_weight_; }

    int dim(int weight) const;
    const std::vector<BKey>& basis(int weight) const;  // non-pivot Lyndon keys
    LiePoly basis_element(QKey q) const;

    LiePoly reduce(const LiePoly& a) const;
    bool is_zero_mod(const LiePoly& a) const { return lp_is_zero(reduce(a)); }
    LiePoly bracket_mod(const LiePoly& a, const LiePoly& b);

    // True iff [a, -] vanishes in the quotient against every generator, for
    // all bracket weights <= max_weight.
    bool is_central(const LiePoly& a, int max_weight);

    // Coordinates of a reduced element w.r.t. the quotient basis.
    std::map<QKey, Rat> coords(const LiePoly& reduced) const;
    LiePoly from_coords(const std::map<QKey, Rat>& c) const;

    // Structure constants on the quotient basis, memoized.
    const std::map<QKey, Rat>& qbracket(QKey a, QKey b);

    // Straightening of an arbitrary product of basis elements into PBW form
    // (e_i e_j = e_j e_i + [e_i, e_j] on adjacent inversions), memoized.
    const std::map<PBW, Rat>& pbw_normalize(const PBW& word);

    std::string dims_table(int max_weight) const;
    std::string render_pbw(const PBW& m) const;

  private:
    FamilySpec spec_;
    FreeLie fl_;
    std::vector<LiePoly> rels_;
    int built_weight_ = 0;
    std::map<int, RowSpace> ideal_;             // weight -> RREF of the ideal span
    std::map<int, std::vector<BKey>> qbasis_;   // weight -> non-pivot keys
    std::map<int, std::map<int, int>> qindex_;  // weight -> lyndon idx -> basis idx
    std::map<std::pair<QKey, QKey>, std::map<QKey, Rat>> qbracket_memo_;
    std::map<PBW, std::map<PBW, Rat>> pbw_memo_;
};

// A Lie algebra morphism given by generator images, applied by structural
// recursion on standard factorizations. Source and target may coincide.
class LieHom {
  public:
    LieHom(const FreeLie* src, GradedQuotient* dst, std::vector<LiePoly> images);

    const std::vector<LiePoly>& images() const { return images_; }
    LiePoly apply(const LiePoly& a);

    // True iff every relation of src maps to zero in dst through max_weight.
    static bool check_hom(GradedQuotient& src, GradedQuotient& dst,
                          std::vector<LiePoly> images, int max_weight);

  private:
    const LiePoly& apply_basis(BKey k);

    const FreeLie* src_;
    GradedQuotient* dst_;
    std::vector<LiePoly> images_;
    std::map<BKey, LiePoly> memo_;
};

}  // namespace assoc
