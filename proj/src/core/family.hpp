#pragma once

#include <string>
#include <vector>

#include "freelie.hpp"
#include "gens.hpp"

namespace assoc {

// The built-in presented Lie algebra families.
//
//   T      t_n            generators t_ij (i<j), weight 1
//   TF     t^f_n          adds central t_ii, weight 1
//   TG     t_{g,n}        x_i^a, y_i^a weight 1; t_ij weight 2
//   TFG    t^f_{g,n}      adds t_ii, weight 2
//   T1BAR  tbar_{1,n}     t_{1,n} modulo (sum_i x_i, sum_i y_i)
//   FREE   free Lie algebra on named weight-1 generators
enum class Family { T, TF, TG, TFG, T1BAR, FREE };

struct FamilySpec {
    Family fam = Family::FREE;
    int n = 0;
    int g = 0;
    std::vector<std::string> free_names;

    static FamilySpec t(int n) { return {Family::T, n, 0, {}}; }
    static FamilySpec tf(int n) { return {Family::TF, n, 0, {}}; }
    static FamilySpec tg(int g, int n) { return {Family::TG, n, g, {}}; }
    static FamilySpec tfg(int g, int n) { return {Family::TFG, n, g, {}}; }
    static FamilySpec t1bar(int n) { return {Family::T1BAR, n, 1, {}}; }
    static FamilySpec f2() { return {Family::FREE, 0, 0, {"x", "y"}}; }
    static FamilySpec fk(int k);

    bool operator==(const FamilySpec& o) const {
        return fam == o.fam && n == o.n && g == o.g && free_names == o.free_names;
    }

    // Literal family tag used in serialized headers.
    std::string tag() const;
    // Space-separated "key=value" parameter list (may be empty).
    std::string params() const;

    // Largest weight among this family's defining relations.
    int relation_max_weight() const;
};

// Generator order is part of the serialization contract:
//   genus-0:  t_11..t_nn (framed only), then t_ij by (i,j) lex;
//   genus-g:  x_i^a, y_i^a by (strand i, handle a), then the t block as above;
//   FREE:     the given names in order.
Alphabet family_alphabet(const FamilySpec& spec);

// Homogeneous defining relations, as elements of the free Lie algebra on
// family_alphabet(spec). Requires fl tables through relation_max_weight().
std::vector<LiePoly> family_relations(const FamilySpec& spec, FreeLie& fl);

}  // namespace assoc
