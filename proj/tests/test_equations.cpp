#include <stdexcept>

#include "core/equations.hpp"
#include "doctest.h"

using namespace assoc;

namespace {

LiePoly gen_of(GradedQuotient& q, const Gen& g) {
    int k = q.free_lie().alphabet().find(g);
    REQUIRE(k >= 0);
    return q.free_lie().letter(k);
}

bool series_eq(const Series<Rat>& a, const Series<Rat>& b) {
    return s_sub(a, b).is_zero();
}

// same series on independently built bases of one family
bool series_eq_rebased(const Series<Rat>& a, const Series<Rat>& b) {
    return a.base && b.base && a.base->spec() == b.base->spec() && a.N == b.N && a.c == b.c;
}

bool relation_holds(WordEvaluator& ev, const Relation& r) {
    return series_eq(ev.eval(r.lhs), ev.eval(r.rhs));
}

const ResidualBlock& block(const ResidualReport& rep, const std::string& name) {
    for (const auto& b : rep.blocks)
        if (b.name == name) return b;
    REQUIRE(false);
    return rep.blocks.front();
}

int dim_at(const ResidualBlock& b, int w) {
    for (const auto& r : b.rows)
        if (r.weight == w) return r.dim;
    return 0;
}

// forget framings: self-chords map to zero, everything else keeps its name
Series<Rat> strip_framing(const Series<Rat>& s, GradedQuotient& dst) {
    const Alphabet& alpha = s.base->free_lie().alphabet();
    std::vector<LiePoly> images;
    for (int i = 0; i < alpha.size(); ++i) {
        const Gen& g = alpha.gens[i];
        images.push_back(g.kind == GenKind::TII ? LiePoly{} : gen_of(dst, g));
    }
    return map_grouplike(s, dst, images, s.N);
}

Series<Rat> random_grouplike(GradedQuotient& q, int N, unsigned seed) {
    unsigned state = seed * 2654435761u + 1013904223u;
    auto next = [&]() {
        state = state * 1664525u + 1013904223u;
        return static_cast<int>((state >> 16) % 7) - 3;
    };
    LiePoly lg;
    for (int w = 1; w <= N; ++w)
        for (const auto& k : q.basis(w)) {
            int c = next();
            if (c != 0) lg[k] = Rat(c, 1 + static_cast<int>(state % 3));
        }
    return s_exp<Rat>(&q, lg, N);
}

}  // namespace

TEST_CASE("residual reports render one line per weight") {
    AssociatorCandidate c = AssociatorCandidate::trivial(Rat(0), 2);
    ResidualReport rep = check_associator(c);
    CHECK(rep.all_zero());
    CHECK(rep.blocks.size() == 3);
    std::string text = rep.render();
    CHECK(text.find("duality\n") != std::string::npos);
    CHECK(text.find("weight 1: 0 0") != std::string::npos);
    CHECK(text.find("weight 2: 0 0") != std::string::npos);
}

TEST_CASE("grouplike substitution maps letters and respects truncation") {
    AssociatorCandidate c = AssociatorCandidate::trivial(Rat(1), 3);
    GradedQuotient& f2 = *c.f2;
    f2.ensure_weight(3);
    LiePoly x = f2.free_lie().letter(0);
    LiePoly y = f2.free_lie().letter(1);
    Series<Rat> s = s_exp<Rat>(&f2, lp_add(x, y), 3);

    GradedQuotient q3(FamilySpec::t(3));
    q3.ensure_weight(3);
    LiePoly t12 = gen_of(q3, Gen::tij(1, 2));
    LiePoly t23 = gen_of(q3, Gen::tij(2, 3));
    Series<Rat> img = subst_grouplike(s, q3, {t12, t23}, 3);
    CHECK(series_eq(img, s_exp<Rat>(&q3, lp_add(t12, t23), 3)));

    Series<Rat> img2 = subst_grouplike(s, q3, {t12, t23}, 2);
    CHECK(series_eq(img2, s_truncate(img, 2)));

    // inhomogeneous images exponentiate through the same truncation
    LiePoly mixed = lp_add(t12, q3.bracket_mod(t12, t23));
    Series<Rat> inh = subst_grouplike(s, q3, {mixed, t23}, 3);
    CHECK(s_is_grouplike(inh));
    CHECK_THROWS_AS(subst_grouplike(s, q3, {t12}, 3), std::invalid_argument);
}

TEST_CASE("chord substitution realizes superscript insertions") {
    GradedQuotient f2(FamilySpec::f2());
    f2.ensure_weight(2);
    LiePoly x = f2.free_lie().letter(0);
    LiePoly y = f2.free_lie().letter(1);
    Series<Rat> phi = s_exp<Rat>(&f2, f2.bracket_mod(x, y), 2);

    GradedQuotient q3(FamilySpec::t(3));
    q3.ensure_weight(2);
    LiePoly t12 = gen_of(q3, Gen::tij(1, 2));
    LiePoly t23 = gen_of(q3, Gen::tij(2, 3));
    Series<Rat> img = chord_subst(phi, q3, "1,2,3", 2);
    CHECK(series_eq(img, s_exp<Rat>(&q3, q3.bracket_mod(t12, t23), 2)));

    GradedQuotient q4(FamilySpec::t(4));
    q4.ensure_weight(2);
    Series<Rat> blocked = chord_subst(phi, q4, "12,3,4", 2);
    LiePoly u = lp_add(gen_of(q4, Gen::tij(1, 3)), gen_of(q4, Gen::tij(2, 3)));
    LiePoly v = gen_of(q4, Gen::tij(3, 4));
    CHECK(series_eq(blocked, s_exp<Rat>(&q4, q4.bracket_mod(u, v), 2)));
    CHECK_THROWS_AS(chord_subst(phi, q3, "1,2", 2), std::invalid_argument);
}

TEST_CASE("trivial candidates separate the three associator blocks") {
    AssociatorCandidate zero = AssociatorCandidate::trivial(Rat(0), 3);
    CHECK(check_associator(zero).all_zero());

    AssociatorCandidate one = AssociatorCandidate::trivial(Rat(1), 2);
    ResidualReport rep = check_associator(one);
    CHECK_FALSE(rep.all_zero());
    CHECK(block(rep, "duality").zero());
    CHECK(block(rep, "pentagon").zero());
    CHECK(dim_at(block(rep, "hexagon"), 2) > 0);
}

TEST_CASE("associator solving pins the quadratic coefficient") {
    AssocSolveResult r = solve_associator(Rat(1), 2);
    CHECK(r.ok);
    CHECK(r.report.all_zero());
    CHECK(r.free_params == std::vector<int>{0});
    LiePoly lg = s_lie_part(s_log(r.cand.phi));
    CHECK(lg[BKey{2, 0}] == Rat(1, 24));

    AssocSolveResult r2 = solve_associator(Rat(2), 2);
    LiePoly lg2 = s_lie_part(s_log(r2.cand.phi));
    CHECK(lg2[BKey{2, 0}] == Rat(1, 6));

    CHECK_THROWS_AS(solve_associator(Rat(0), 3), std::invalid_argument);
}

TEST_CASE("associator solving is deterministic through weight three") {
    AssocSolveResult a = solve_associator(Rat(1), 3);
    AssocSolveResult b = solve_associator(Rat(1), 3);
    CHECK(a.ok);
    CHECK(a.report.all_zero());
    CHECK(a.free_params.size() == 2);
    CHECK(series_eq_rebased(a.cand.phi, b.cand.phi));
    CHECK(a.report.render() == b.report.render());
}

TEST_CASE("degenerate genus tuples and unit handles") {
    AssociatorCandidate zero = AssociatorCandidate::trivial(Rat(0), 2);
    GenusData units;
    units.g = 1;
    units.N = 2;
    units.base = std::make_shared<GradedQuotient>(FamilySpec::tfg(1, 2));
    units.base->ensure_weight(2);
    units.A_plus.push_back(Series<Rat>::unit(units.base.get(), 2));
    units.A_minus.push_back(Series<Rat>::unit(units.base.get(), 2));
    CHECK(check_genus(zero, units).all_zero());

    AssociatorCandidate one = solve_associator(Rat(1), 2).cand;
    ResidualReport rep = check_genus(one, units);
    CHECK_FALSE(rep.all_zero());
    CHECK(dim_at(block(rep, "handles"), 2) > 0);
    CHECK_FALSE(rep.notes.empty());

    GenusData bad = units;
    bad.A_minus.clear();
    CHECK_THROWS_AS(check_genus(one, bad), std::invalid_argument);
}

TEST_CASE("genus solving at weight two produces the seeded handles") {
    AssociatorCandidate c = solve_associator(Rat(1), 2).cand;
    GenusSolveResult r = solve_genus(c, 1, 2);
    CHECK(r.ok);
    CHECK(r.obstruction_weight == 0);
    CHECK(r.report.all_zero());
    GradedQuotient& q2 = *r.data.base;
    const Alphabet& alpha = q2.free_lie().alphabet();
    LiePoly lp = s_lie_part(s_log(r.data.A_plus[0]));
    LiePoly lm = s_lie_part(s_log(r.data.A_minus[0]));
    CHECK(lp[BKey{1, alpha.find(Gen::xg(1, 1))}] == 1);
    CHECK(lm[BKey{1, alpha.find(Gen::yg(1, 1))}] == -1);

    AssociatorCandidate c0 = AssociatorCandidate::trivial(Rat(0), 2);
    GenusSolveResult r0 = solve_genus(c0, 1, 2);
    CHECK(r0.ok);
    CHECK(series_eq(r0.data.A_plus[0], Series<Rat>::unit(r0.data.base.get(), 2)));
    CHECK(series_eq(r0.data.A_minus[0], Series<Rat>::unit(r0.data.base.get(), 2)));

    CHECK_THROWS_AS(solve_genus(c, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(solve_genus(c, 1, 3), std::invalid_argument);
}

TEST_CASE("genus one data transports onto every word relation") {
    AssociatorCandidate c = solve_associator(Rat(1), 3).cand;
    GenusSolveResult r = solve_genus(c, 1, 3);
    CHECK(r.ok);
    CHECK(r.report.all_zero());

    AlgebraPool pool;
    for (const char* id : {"PaBf_g", "PaBf_g_bis", "LE1"}) {
        Catalog cat = relation_words(id, 1);
        WordEvaluator ev(pool, c, cat.target, 3, &r.data);
        for (const auto& rel : cat.words) {
            INFO(id, " ", rel.name);
            CHECK(relation_holds(ev, rel));
        }
    }
    {
        Catalog cat = relation_words("PaBf");
        WordEvaluator ev(pool, c, cat.target, 3);
        for (const auto& rel : cat.words) {
            INFO("PaBf ", rel.name);
            CHECK(relation_holds(ev, rel));
        }
    }
    {
        Catalog cat = relation_words("PaB_1");
        WordEvaluator ev(pool, c, cat.target, 3, &r.data);
        for (const auto& rel : cat.words) {
            INFO("PaB_1 ", rel.name);
            CHECK(relation_holds(ev, rel));
        }
    }
}

TEST_CASE("genus two meets the expected weight-two obstruction") {
    AssociatorCandidate c = solve_associator(Rat(1), 2).cand;
    GenusSolveResult r = solve_genus(c, 2, 2);
    CHECK_FALSE(r.ok);
    CHECK(r.obstruction_weight == 2);
    CHECK(r.rank_deficit >= 1);
    CHECK_FALSE(r.report.all_zero());
}

TEST_CASE("elliptic checks accept stripped genus-one solutions") {
    AssociatorCandidate c = solve_associator(Rat(1), 3).cand;
    GenusSolveResult r = solve_genus(c, 1, 3);
    REQUIRE(r.ok);
    GradedQuotient unframed(FamilySpec::tg(1, 2));
    unframed.ensure_weight(3);
    Series<Rat> ap = strip_framing(r.data.A_plus[0], unframed);
    Series<Rat> am = strip_framing(r.data.A_minus[0], unframed);
    CHECK(check_elliptic(c, ap, am, EllipticForm::standard).all_zero());
    CHECK(check_elliptic(c, ap, am, EllipticForm::bis).all_zero());
}

TEST_CASE("elliptic degenerate tuples and validation") {
    GradedQuotient unframed(FamilySpec::tg(1, 2));
    unframed.ensure_weight(2);
    Series<Rat> unit = Series<Rat>::unit(&unframed, 2);
    AssociatorCandidate zero = AssociatorCandidate::trivial(Rat(0), 2);
    CHECK(check_elliptic(zero, unit, unit, EllipticForm::standard).all_zero());
    CHECK(check_elliptic(zero, unit, unit, EllipticForm::bis).all_zero());

    AssociatorCandidate one = solve_associator(Rat(1), 2).cand;
    ResidualReport rep = check_elliptic(one, unit, unit, EllipticForm::standard);
    CHECK(dim_at(block(rep, "handles"), 2) > 0);
    ResidualReport repb = check_elliptic(one, unit, unit, EllipticForm::bis);
    CHECK(dim_at(block(repb, "handles(At)"), 2) > 0);

    GradedQuotient framed(FamilySpec::tfg(1, 2));
    framed.ensure_weight(2);
    Series<Rat> funit = Series<Rat>::unit(&framed, 2);
    CHECK_THROWS_AS(check_elliptic(one, funit, funit, EllipticForm::standard),
                    std::invalid_argument);
}

TEST_CASE("graded symmetry elements compose as a group") {
    GRTElement id3 = GRTElement::identity(3);
    CHECK(grt_check(id3).all_zero());

    GradedQuotient& f2 = *id3.f2;
    GRTElement bad = id3;
    bad.g = s_exp<Rat>(&f2, f2.free_lie().letter(0), 3);
    CHECK_FALSE(grt_check(bad).all_zero());

    GRTElement a = id3, b = id3, c = id3;
    a.g = random_grouplike(f2, 3, 11);
    a.lambda = Rat(2);
    b.g = random_grouplike(f2, 3, 22);
    b.lambda = Rat(3, 2);
    c.g = random_grouplike(f2, 3, 33);
    c.lambda = Rat(-1);
    GRTElement ab_c = grt_mul(grt_mul(a, b), c);
    GRTElement a_bc = grt_mul(a, grt_mul(b, c));
    CHECK(ab_c.lambda == a_bc.lambda);
    CHECK(series_eq(ab_c.g, a_bc.g));
    CHECK(series_eq(grt_mul(id3, a).g, a.g));
    CHECK(series_eq(grt_mul(a, id3).g, a.g));

    GRTElement scaled = grt_rescale(id3, Rat(2));
    CHECK(grt_check(scaled).all_zero());
    CHECK(scaled.lambda == Rat(2));
    CHECK_THROWS_AS(grt_rescale(id3, Rat(0)), std::invalid_argument);
    GRTElement id2 = GRTElement::identity(2);
    CHECK_THROWS_AS(grt_mul(id3, id2), std::invalid_argument);
}

TEST_CASE("genus graded symmetry identities vanish") {
    for (int g : {1, 2}) {
        GRTgElement e = GRTgElement::identity(g, 3);
        CHECK(grt_g_check(e).all_zero());
    }
    GRTgElement e = GRTgElement::identity(1, 2);
    e.u_plus[0] = lp_scale(e.u_plus[0], Rat(2));
    CHECK_FALSE(grt_g_check(e).all_zero());
}

TEST_CASE("braid symmetry elements check against a transport") {
    AssociatorCandidate transport = solve_associator(Rat(1), 3).cand;
    GTElement id3 = GTElement::identity(3);
    CHECK(gt_check(id3, transport).all_zero());

    GradedQuotient& f2 = *id3.f2;
    GTElement bad = id3;
    bad.f = s_exp<Rat>(&f2, f2.free_lie().letter(0), 3);
    ResidualReport rep = gt_check(bad, transport);
    CHECK_FALSE(rep.all_zero());
    CHECK(dim_at(block(rep, "inversion"), 1) > 0);

    GTElement a = id3, b = id3, c = id3;
    a.f = random_grouplike(f2, 3, 5);
    a.lambda = Rat(3);
    b.f = random_grouplike(f2, 3, 6);
    b.lambda = Rat(1, 2);
    c.f = random_grouplike(f2, 3, 7);
    c.lambda = Rat(5);
    GTElement ab_c = gt_mul(gt_mul(a, b), c);
    GTElement a_bc = gt_mul(a, gt_mul(b, c));
    CHECK(ab_c.lambda == a_bc.lambda);
    CHECK(series_eq(ab_c.f, a_bc.f));
    CHECK(series_eq(gt_mul(id3, a).f, a.f));
    CHECK(series_eq(gt_mul(a, id3).f, a.f));
    CHECK_THROWS_AS(gt_mul(id3, GTElement::identity(2)), std::invalid_argument);
}

TEST_CASE("universal connections are flat exactly with the elbow relations") {
    for (int n : {2, 3, 4})
        for (bool framed : {true, false}) {
            FlatnessProblem p{n, framed, false};
            FlatnessReport rep = check_flatness(p);
            INFO("n=", n, " framed=", framed);
            CHECK(rep.flat);
            CHECK(rep.lines.empty());
        }
    FlatnessReport mutant = check_flatness({2, true, true});
    CHECK_FALSE(mutant.flat);
    CHECK_FALSE(mutant.lines.empty());
    FlatnessReport mutant3 = check_flatness({3, false, true});
    CHECK_FALSE(mutant3.flat);
    CHECK(check_flatness({2, false, true}).flat);
    CHECK_THROWS_AS(check_flatness({1, true, false}), std::invalid_argument);
}

TEST_CASE("transported single-group letters abbreviate the second slot") {
    AlgebraPool pool;
    AssociatorCandidate cand = AssociatorCandidate::trivial(Rat(1), 3);
    GenusData triv = GenusData::trivial(1, 3);
    WordEvaluator ev(pool, cand, {true, 1}, 3, &triv);
    GradedQuotient& q3 = ev.algebra(3);

    Series<Rat> at = ev.letter_image(letter_parse("At1^{123}"), 3);
    Series<Rat> total = superscript_eval(s_truncate(triv.A_plus[0], 3), q3, "123,0");
    CHECK(series_eq(at, s_inverse(total)));

    Series<Rat> bt = ev.letter_image(letter_parse("Bt1^{123}"), 3);
    Series<Rat> totalb = superscript_eval(s_truncate(triv.A_minus[0], 3), q3, "123,0");
    CHECK(series_eq(bt, s_inverse(totalb)));
}
