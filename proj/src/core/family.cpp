#include "family.hpp"

#include <sstream>
#include <stdexcept>

namespace assoc {

FamilySpec FamilySpec::fk(int k) {
    FamilySpec s{Family::FREE, 0, 0, {}};
    for (int i = 1; i <= k; ++i) {
        std::ostringstream os;
        os << "x" << i;
        s.free_names.push_back(os.str());
    }
    return s;
}

std::string FamilySpec::tag() const {
    switch (fam) {
        case Family::T: return "T_N";
        case Family::TF: return "TF_N";
        case Family::TG: return "T_G_N";
        case Family::TFG: return "TF_G_N";
        case Family::T1BAR: return "T1BAR_N";
        case Family::FREE:
            return free_names == std::vector<std::string>{"x", "y"} ? "FREE_F2" : "FREE_FG";
    }
    return "";
}

std::string FamilySpec::params() const {
    std::ostringstream os;
    switch (fam) {
        case Family::T:
        case Family::TF:
        case Family::T1BAR:
            os << "n=" << n;
            break;
        case Family::TG:
        case Family::TFG:
            os << "g=" << g << " n=" << n;
            break;
        case Family::FREE:
            if (tag() == "FREE_FG") os << "k=" << free_names.size();
            break;
    }
    return os.str();
}

int FamilySpec::relation_max_weight() const {
    switch (fam) {
        case Family::T:
        case Family::TF:
            return n >= 2 ? 2 : 0;
        case Family::TG:
        case Family::T1BAR:
            // weight 4: inherited [t_ij, t_ik+t_jk] (n>=3);
            // weight 3: [x_k^a, t_ij] and [x_i^a+x_j^a, t_ij] (n>=2);
            // weight 2: the [x,y] relations.
            return n >= 3 ? 4 : (n >= 2 ? 3 : 2);
        case Family::TFG:
            // the diagonal generators put [t_ii, t_ij] at weight 4 once n>=2
            return n >= 2 ? 4 : 3;
        case Family::FREE:
            return 0;
    }
    return 0;
}

Alphabet family_alphabet(const FamilySpec& spec) {
    Alphabet a;
    auto push = [&a](Gen g, int w) {
        a.gens.push_back(std::move(g));
        a.weights.push_back(w);
    };
    const bool genus = spec.fam == Family::TG || spec.fam == Family::TFG ||
                       spec.fam == Family::T1BAR;
    const bool framed = spec.fam == Family::TF || spec.fam == Family::TFG;
    const int tweight = genus ? 2 : 1;
    if (spec.fam == Family::FREE) {
        for (const auto& name : spec.free_names) push(Gen::free(name), 1);
        return a;
    }
    if (spec.n < 1) throw std::invalid_argument("strand count must be >= 1");
    if (genus && spec.g < 1) throw std::invalid_argument("genus must be >= 1");
    if (genus) {
        for (int i = 1; i <= spec.n; ++i)
            for (int h = 1; h <= spec.g; ++h) {
                push(Gen::xg(i, h), 1);
                push(Gen::yg(i, h), 1);
            }
    }
    if (framed)
        for (int i = 1; i <= spec.n; ++i) push(Gen::tii(i), tweight);
    for (int i = 1; i <= spec.n; ++i)
        for (int j = i + 1; j <= spec.n; ++j) push(Gen::tij(i, j), tweight);
    return a;
}

namespace {

LiePoly gen_poly(const FreeLie& fl, const Gen& g) {
    int idx = fl.alphabet().find(g);
    if (idx < 0) throw std::logic_error("generator missing from alphabet");
    return fl.letter(idx);
}

// t_{pq} with p=q allowed (framed families only for the diagonal).
LiePoly tpq(const FreeLie& fl, int p, int q) {
    return gen_poly(fl, p == q ? Gen::tii(p) : Gen::tij(p, q));
}

void push_nonzero(std::vector<LiePoly>& out, LiePoly p) {
    if (!lp_is_zero(p)) out.push_back(std::move(p));
}

}  // namespace

std::vector<LiePoly> family_relations(const FamilySpec& spec, FreeLie& fl) {
    std::vector<LiePoly> rels;
    if (spec.fam == Family::FREE) return rels;
    const int n = spec.n;
    const int g = spec.g;
    const bool genus = spec.fam == Family::TG || spec.fam == Family::TFG ||
                       spec.fam == Family::T1BAR;
    const bool framed = spec.fam == Family::TF || spec.fam == Family::TFG;

    // Unordered index pairs {i,j}, diagonal included only when framed.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (i != j || framed) pairs.push_back({i, j});

    // Commuting chords: [t_P, t_Q] = 0 for disjoint index pairs.
    for (size_t p = 0; p < pairs.size(); ++p)
        for (size_t q = p + 1; q < pairs.size(); ++q) {
            auto [i, j] = pairs[p];
            auto [k, l] = pairs[q];
            if (i == k || i == l || j == k || j == l) continue;
            push_nonzero(rels, fl.bracket(tpq(fl, i, j), tpq(fl, k, l)));
        }

    // Four-term relation [t_ij, t_ik + t_jk] = 0; i = j permitted when framed,
    // which makes the diagonal generators central.
    for (auto [i, j] : pairs)
        for (int k = 1; k <= n; ++k) {
            if (k == i || k == j) continue;
            push_nonzero(rels,
                         fl.bracket(tpq(fl, i, j), lp_add(tpq(fl, i, k), tpq(fl, j, k))));
        }

    if (genus) {
        auto X = [&](int i, int h) { return gen_poly(fl, Gen::xg(i, h)); };
        auto Y = [&](int i, int h) { return gen_poly(fl, Gen::yg(i, h)); };

        // [x_i^a, y_j^b] = delta_ab t_ij for i != j.
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                for (int a = 1; a <= g; ++a)
                    for (int b = 1; b <= g; ++b) {
                        LiePoly r = fl.bracket(X(i, a), Y(j, b));
                        if (a == b) r = lp_sub(r, tpq(fl, i, j));
                        push_nonzero(rels, r);
                    }
            }

        // [x_i^a, x_j^b] = [y_i^a, y_j^b] = 0 for i != j.
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int a = 1; a <= g; ++a)
                    for (int b = 1; b <= g; ++b) {
                        push_nonzero(rels, fl.bracket(X(i, a), X(j, b)));
                        push_nonzero(rels, fl.bracket(Y(i, a), Y(j, b)));
                    }

        // sum_a [x_i^a, y_i^a] + sum_{j != i} t_ij (+ 2(g-1) t_ii framed) = 0.
        for (int i = 1; i <= n; ++i) {
            LiePoly r;
            for (int a = 1; a <= g; ++a) r = lp_add(r, fl.bracket(X(i, a), Y(i, a)));
            for (int j = 1; j <= n; ++j)
                if (j != i) r = lp_add(r, tpq(fl, i, j));
            if (framed) r = lp_add(r, lp_scale(tpq(fl, i, i), Rat(2 * (g - 1))));
            push_nonzero(rels, r);
        }

        // [x_k^a, t_ij] = [y_k^a, t_ij] = 0 for k outside {i,j}.
        for (auto [i, j] : pairs)
            for (int k = 1; k <= n; ++k) {
                if (k == i || k == j) continue;
                for (int a = 1; a <= g; ++a) {
                    push_nonzero(rels, fl.bracket(X(k, a), tpq(fl, i, j)));
                    push_nonzero(rels, fl.bracket(Y(k, a), tpq(fl, i, j)));
                }
            }

        // [x_i^a + x_j^a, t_ij] = [y_i^a + y_j^a, t_ij] = 0; with i = j this is
        // [x_i^a, t_ii] = 0 in the framed case.
        for (auto [i, j] : pairs)
            for (int a = 1; a <= g; ++a) {
                LiePoly xs = i == j ? X(i, a) : lp_add(X(i, a), X(j, a));
                LiePoly ys = i == j ? Y(i, a) : lp_add(Y(i, a), Y(j, a));
                push_nonzero(rels, fl.bracket(xs, tpq(fl, i, j)));
                push_nonzero(rels, fl.bracket(ys, tpq(fl, i, j)));
            }
    }

    if (spec.fam == Family::T1BAR) {
        LiePoly sx, sy;
        for (int i = 1; i <= n; ++i) {
            sx = lp_add(sx, gen_poly(fl, Gen::xg(i, 1)));
            sy = lp_add(sy, gen_poly(fl, Gen::yg(i, 1)));
        }
        push_nonzero(rels, sx);
        push_nonzero(rels, sy);
    }

    return rels;
}

}  // namespace assoc
