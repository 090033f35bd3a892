#include "cable.hpp"

#include <algorithm>
#include <stdexcept>

namespace assoc {

StrandAssignment StrandAssignment::from_pattern(const std::string& pattern, int target_m,
                                                bool embedding) {
    StrandAssignment sa;
    sa.embedding = embedding;
    std::vector<int> current;
    bool saw_zero = false;
    auto flush = [&]() {
        if (saw_zero && !current.empty())
            throw std::invalid_argument("0 must stand alone in a group");
        sa.sets.push_back(current);
        current.clear();
        saw_zero = false;
    };
    for (char ch : pattern) {
        if (ch == '(' || ch == ')' || ch == ' ') continue;
        if (ch == ',') {
            flush();
        } else if (ch == '0') {
            saw_zero = true;
        } else if (ch >= '1' && ch <= '9') {
            current.push_back(ch - '0');
        } else {
            throw std::invalid_argument("invalid character in strand pattern");
        }
    }
    flush();
    sa.n = static_cast<int>(sa.sets.size());
    int mx = 0;
    for (const auto& s : sa.sets)
        for (int p : s) mx = std::max(mx, p);
    sa.m = std::max(mx, target_m);
    sa.validate();
    return sa;
}

StrandAssignment StrandAssignment::then(const StrandAssignment& next) const {
    if (m != next.n) throw std::invalid_argument("assignment sizes do not compose");
    StrandAssignment r;
    r.n = n;
    r.m = next.m;
    r.embedding = embedding || next.embedding;
    for (const auto& s : sets) {
        std::vector<int> img;
        for (int q : s)
            for (int p : next.sets[q - 1]) img.push_back(p);
        std::sort(img.begin(), img.end());
        r.sets.push_back(img);
    }
    r.validate();
    return r;
}

void StrandAssignment::validate() const {
    if (static_cast<int>(sets.size()) != n) throw std::invalid_argument("set count mismatch");
    std::vector<int> seen(m + 1, 0);
    for (const auto& s : sets)
        for (int p : s) {
            if (p < 1 || p > m) throw std::invalid_argument("target strand out of range");
            if (seen[p]++) throw std::invalid_argument("target strand assigned twice");
        }
    if (!embedding)
        for (int p = 1; p <= m; ++p)
            if (!seen[p]) throw std::invalid_argument("unassigned target strand without embedding flag");
}

namespace {

LiePoly image_of(const Gen& g, const StrandAssignment& sa, GradedQuotient& dst) {
    const Alphabet& alpha = dst.free_lie().alphabet();
    auto letter = [&](const Gen& t) {
        int idx = alpha.find(t);
        if (idx < 0) throw std::invalid_argument("target family lacks generator " + t.name());
        return dst.free_lie().letter(idx);
    };
    auto strands = [&](int i) -> const std::vector<int>& {
        if (i < 1 || i > sa.n) throw std::invalid_argument("source strand out of range");
        return sa.sets[i - 1];
    };
    LiePoly out;
    switch (g.kind) {
        case GenKind::TIJ:
            for (int p : strands(g.i))
                for (int q : strands(g.j)) out = lp_add(out, letter(Gen::tij(p, q)));
            break;
        case GenKind::TII:
            for (int p : strands(g.i))
                for (int q : strands(g.i))
                    out = lp_add(out, letter(p == q ? Gen::tii(p) : Gen::tij(p, q)));
            break;
        case GenKind::XG:
            for (int p : strands(g.i)) out = lp_add(out, letter(Gen::xg(p, g.a)));
            break;
        case GenKind::YG:
            for (int p : strands(g.i)) out = lp_add(out, letter(Gen::yg(p, g.a)));
            break;
        case GenKind::FREE:
            throw std::invalid_argument("free generators carry no strands to cable");
    }
    return out;
}

}  // namespace

LiePoly lie_map_filtered(const FreeLie& src, GradedQuotient& dst, const LiePoly& a,
                         const std::vector<LiePoly>& images, int max_weight) {
    if (static_cast<int>(images.size()) != src.alphabet().size())
        throw std::invalid_argument("one image per source letter required");
    std::vector<int> img_w(images.size(), -1);  // -1 marks erased letters
    for (size_t i = 0; i < images.size(); ++i)
        if (!lp_is_zero(images[i])) img_w[i] = images[i].begin()->first.first;
    // Letter images are homogeneous, so each basis term has a definite target
    // weight. Terms that land beyond the truncation (or touch an erased
    // letter) are dropped before the morphism reduces anything.
    LiePoly kept;
    int need = 1;
    for (const auto& [k, c] : a) {
        if (c == 0) continue;
        int tw = 0;
        bool erased = false;
        for (int letter : src.word_of(k)) {
            if (img_w[letter] < 0) {
                erased = true;
                break;
            }
            tw += img_w[letter];
        }
        if (erased || tw > max_weight) continue;
        kept[k] = c;
        need = std::max(need, tw);
    }
    dst.ensure_weight(need);
    LieHom h(&src, &dst, images);
    return h.apply(kept);
}

Series<Rat> map_grouplike(const Series<Rat>& s, GradedQuotient& dst,
                          const std::vector<LiePoly>& images, int N) {
    LiePoly lg = s_lie_part(s_log(s));
    LiePoly img = lie_map_filtered(s.base->free_lie(), dst, lg, images, N);
    return s_exp<Rat>(&dst, img, N);
}

LiePoly cable_lie(GradedQuotient& src, GradedQuotient& dst, const LiePoly& a,
                  const StrandAssignment& sa, int max_weight) {
    sa.validate();
    const Alphabet& alpha = src.free_lie().alphabet();
    std::vector<LiePoly> images;
    for (int i = 0; i < alpha.size(); ++i)
        images.push_back(image_of(alpha.gens[i], sa, dst));
    return lie_map_filtered(src.free_lie(), dst, a, images, max_weight);
}

Series<Rat> cable_series(const Series<Rat>& s, GradedQuotient& dst, const StrandAssignment& sa) {
    LiePoly lg = s_lie_part(s_log(s));
    LiePoly img = cable_lie(*s.base, dst, lg, sa, s.N);
    return s_exp<Rat>(&dst, img, s.N);
}

Series<Rat> superscript_eval(const Series<Rat>& s, GradedQuotient& dst,
                             const std::string& pattern) {
    StrandAssignment sa = StrandAssignment::from_pattern(pattern, dst.spec().n);
    if (sa.n != s.base->spec().n)
        throw std::invalid_argument("pattern group count does not match source strands");
    return cable_series(s, dst, sa);
}

namespace {

// insert `inner` strands in place of strand `pos` of an `outer`-strand object
StrandAssignment insertion(int outer, int pos, int inner) {
    StrandAssignment sa;
    sa.n = outer;
    sa.m = outer + inner - 1;
    for (int i = 1; i <= outer; ++i) {
        std::vector<int> s;
        if (i < pos)
            s = {i};
        else if (i == pos)
            for (int q = 0; q < inner; ++q) s.push_back(pos + q);
        else
            s = {i + inner - 1};
        sa.sets.push_back(s);
    }
    sa.validate();
    return sa;
}

StrandAssignment embed_at(int n, int offset, int m) {
    StrandAssignment sa;
    sa.n = n;
    sa.m = m;
    sa.embedding = true;
    for (int q = 1; q <= n; ++q) sa.sets.push_back({q + offset});
    sa.validate();
    return sa;
}

bool cables_agree(GradedQuotient& src, GradedQuotient& dst, const StrandAssignment& a,
                  const StrandAssignment& b, int degree, int max_weight) {
    src.ensure_weight(degree);
    for (int w = 1; w <= degree; ++w)
        for (int i = 0; i < src.dim(w); ++i) {
            LiePoly e = src.basis_element({w, i});
            if (!(cable_lie(src, dst, e, a, max_weight) ==
                  cable_lie(src, dst, e, b, max_weight)))
                return false;
        }
    return true;
}

}  // namespace

bool compose_assoc_check(const FamilySpec& fam, int size1, int size2, int size3, int degree) {
    auto outer = [&fam](int n) {
        switch (fam.fam) {
            case Family::T: return FamilySpec::t(n);
            case Family::TF: return FamilySpec::tf(n);
            case Family::TG: return FamilySpec::tg(fam.g, n);
            case Family::TFG: return FamilySpec::tfg(fam.g, n);
            default: throw std::invalid_argument("composition check needs a strand family");
        }
    };
    // genus objects compose with chord-only factors; chord families with themselves
    const bool genus = fam.fam == Family::TG || fam.fam == Family::TFG;
    const bool framed = fam.fam == Family::TF || fam.fam == Family::TFG;
    auto inner = [framed](int n) { return framed ? FamilySpec::tf(n) : FamilySpec::t(n); };
    const int n1 = size1, n2 = size2, n3 = size3;
    const int total = n1 + n2 + n3 - 2;
    // inner-factor chords double in weight inside a genus target
    const int inner_scale = genus ? 2 : 1;

    for (int i = 1; i <= n1; ++i) {
        // nest a third object inside the inserted one vs composing in one step
        for (int j = 1; j <= n2; ++j) {
            StrandAssignment a1 = insertion(n1, i, n2);
            StrandAssignment a2 = insertion(n1 + n2 - 1, i + j - 1, n3);
            StrandAssignment seq = a1.then(a2);
            StrandAssignment direct = insertion(n1, i, n2 + n3 - 1);
            GradedQuotient src(outer(n1)), dst(outer(total));
            if (!cables_agree(src, dst, seq, direct, degree, degree)) return false;

            // path of the inserted factor through both association orders
            StrandAssignment lhs_b = embed_at(n2, i - 1, n1 + n2 - 1).then(a2);
            StrandAssignment rhs_b =
                insertion(n2, j, n3).then(embed_at(n2 + n3 - 1, i - 1, total));
            GradedQuotient srcb(inner(n2));
            if (!cables_agree(srcb, dst, lhs_b, rhs_b, degree, inner_scale * degree))
                return false;
        }
        // disjoint insertions commute
        for (int k = i + 1; k <= n1; ++k) {
            StrandAssignment first =
                insertion(n1, i, n2).then(insertion(n1 + n2 - 1, k + n2 - 1, n3));
            StrandAssignment second =
                insertion(n1, k, n3).then(insertion(n1 + n3 - 1, i, n2));
            GradedQuotient src(outer(n1)), dst(outer(total));
            if (!cables_agree(src, dst, first, second, degree, degree)) return false;
        }
    }
    return true;
}

}  // namespace assoc
