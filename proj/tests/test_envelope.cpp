#include <map>
#include <random>

#include "core/envelope.hpp"
#include "doctest.h"

using namespace assoc;

namespace {

using Tensor = std::map<Word, Rat>;

Tensor t_mul(const Tensor& a, const Tensor& b, int maxw, const FreeLie& fl) {
    Tensor r;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            if (fl.word_weight(uv) > maxw) continue;
            Rat& x = r[uv];
            x += cu * cv;
            if (x == 0) r.erase(uv);
        }
    return r;
}

Tensor t_add(Tensor a, const Tensor& b, const Rat& k) {
    for (const auto& [w, c] : b) {
        Rat& x = a[w];
        x += k * c;
        if (x == 0) a.erase(w);
    }
    return a;
}

Tensor t_exp(const Tensor& a, int maxw, const FreeLie& fl) {
    Tensor unit{{Word{}, Rat(1)}};
    Tensor term = unit, sum = unit;
    for (int k = 1; k <= maxw; ++k) {
        term = t_mul(term, a, maxw, fl);
        for (auto& [w, c] : term) c /= k;
        if (term.empty()) break;
        sum = t_add(sum, term, Rat(1));
    }
    return sum;
}

Tensor t_inv(const Tensor& s, int maxw, const FreeLie& fl) {
    Tensor u = s;
    u.erase(Word{});
    Tensor unit{{Word{}, Rat(1)}};
    Tensor pw = unit, sum = unit;
    for (int k = 1; k <= maxw; ++k) {
        pw = t_mul(pw, u, maxw, fl);
        if (pw.empty()) break;
        sum = t_add(sum, pw, k % 2 ? Rat(-1) : Rat(1));
    }
    return sum;
}

// PBW series over a free family, expanded into the tensor algebra.
Tensor expand_series(const Series<Rat>& s, FreeLie& fl) {
    Tensor out;
    for (const auto& [m, v] : s.c) {
        Tensor prod{{Word{}, Rat(1)}};
        for (const auto& q : m) {
            BKey k = s.base->basis(q.first)[q.second];
            prod = t_mul(prod, fl.tensor_expand(k), s.N, fl);
        }
        out = t_add(out, prod, v);
    }
    return out;
}

LiePoly random_lie(FreeLie& fl, int max_weight, std::mt19937& rng) {
    LiePoly p;
    std::uniform_int_distribution<int> cd(-3, 3);
    for (int w = 1; w <= max_weight; ++w)
        for (int i = 0; i < fl.dim(w); ++i)
            if (int c = cd(rng)) p = lp_add(p, LiePoly{{{w, i}, Rat(c)}});
    return p;
}

}  // namespace

TEST_CASE("series multiplication, unit, and direct expansion") {
    GradedQuotient f2(FamilySpec::f2());
    f2.ensure_weight(4);
    LiePoly x = f2.free_lie().letter(0), y = f2.free_lie().letter(1);

    Series<Rat> ex = s_exp<Rat>(&f2, x, 2);
    Series<Rat> ey = s_exp<Rat>(&f2, y, 2);
    Series<Rat> one = Series<Rat>::unit(&f2, 2);
    CHECK(s_mul(one, ex).c == ex.c);
    CHECK(s_mul(ex, one).c == ex.c);

    Series<Rat> p = s_mul(ex, ey);
    QKey qx = f2.coords(x).begin()->first;
    QKey qy = f2.coords(y).begin()->first;
    CHECK(p.coeff({}) == 1);
    CHECK(p.coeff({qx}) == 1);
    CHECK(p.coeff({qy}) == 1);
    CHECK(p.coeff({qx, qx}) == Rat(1, 2));
    CHECK(p.coeff({qx, qy}) == 1);
    CHECK(p.coeff({qy, qy}) == Rat(1, 2));
    QKey qxy = f2.coords(f2.free_lie().bracket(x, y)).begin()->first;
    CHECK(p.coeff({qxy}) == 0);

    GradedQuotient t3(FamilySpec::t(3));
    t3.ensure_weight(3);
    LiePoly t12 = t3.free_lie().letter(0);
    Series<Rat> a = s_exp<Rat>(&t3, t12, 3);
    Series<Rat> b = s_exp<Rat>(&t3, lp_scale(t12, Rat(-1)), 3);
    CHECK(s_mul(a, b).c == Series<Rat>::unit(&t3, 3).c);
}

TEST_CASE("exp and log are mutually inverse") {
    GradedQuotient f2(FamilySpec::f2());
    f2.ensure_weight(5);
    LiePoly x = f2.free_lie().letter(0), y = f2.free_lie().letter(1);
    CHECK(s_exp<Rat>(&f2, LiePoly{}, 4).c == Series<Rat>::unit(&f2, 4).c);
    CHECK(s_lie_part(s_log(s_exp<Rat>(&f2, x, 4))) == f2.reduce(x));

    LiePoly bch = s_lie_part(s_log(s_mul(s_exp<Rat>(&f2, x, 2), s_exp<Rat>(&f2, y, 2))));
    LiePoly expected = lp_add(lp_add(x, y), lp_scale(f2.free_lie().bracket(x, y), Rat(1, 2)));
    CHECK(bch == f2.reduce(expected));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        LiePoly u = random_lie(f2.free_lie(), 2, rng);
        Series<Rat> s = s_exp<Rat>(&f2, u, 5);
        CHECK(s_is_grouplike(s));
        CHECK(s_lie_part(s_log(s)) == f2.reduce(u));
    }
}

TEST_CASE("group commutator and adjoint") {
    GradedQuotient f2(FamilySpec::f2());
    f2.ensure_weight(4);
    LiePoly x = f2.free_lie().letter(0), y = f2.free_lie().letter(1);
    Series<Rat> u = s_exp<Rat>(&f2, x, 4), v = s_exp<Rat>(&f2, y, 4);
    Series<Rat> one = Series<Rat>::unit(&f2, 4);

    CHECK(s_commutator(u, one).c == one.c);
    LiePoly logc = s_lie_part(s_log(s_commutator(u, v)));
    LiePoly xy = f2.free_lie().bracket(x, y);
    for (const auto& [k, c] : f2.coords(f2.reduce(xy)))
        CHECK(f2.coords(logc)[k] == c);
    CHECK(s_mul(s_commutator(u, v), s_commutator(v, u)).c == one.c);

    CHECK(s_adjoint(one, u).c == u.c);
    CHECK(s_adjoint_lie(u, x) == f2.reduce(x));
    LiePoly ad = s_adjoint_lie(s_exp<Rat>(&f2, x, 2), y);
    CHECK(ad == f2.reduce(lp_add(y, xy)));

    // adjoint is an algebra automorphism
    std::mt19937 rng(19);
    LiePoly g = random_lie(f2.free_lie(), 2, rng);
    Series<Rat> G = s_exp<Rat>(&f2, g, 4);
    Series<Rat> A = s_exp<Rat>(&f2, random_lie(f2.free_lie(), 2, rng), 4);
    Series<Rat> B = s_exp<Rat>(&f2, random_lie(f2.free_lie(), 2, rng), 4);
    CHECK(s_adjoint(G, s_mul(A, B)).c == s_mul(s_adjoint(G, A), s_adjoint(G, B)).c);
}

TEST_CASE("group operations agree with the tensor word algebra") {
    GradedQuotient f2(FamilySpec::f2());
    f2.ensure_weight(5);
    FreeLie& fl = f2.free_lie();
    std::mt19937 rng(23);
    const int N = 5;
    for (int trial = 0; trial < 6; ++trial) {
        LiePoly u = random_lie(fl, 2, rng);
        LiePoly v = random_lie(fl, 2, rng);
        Series<Rat> cu = s_exp<Rat>(&f2, u, N), cv = s_exp<Rat>(&f2, v, N);
        Series<Rat> comm = s_commutator(cu, cv);

        Tensor tu = t_exp(fl.tensor_expand(u), N, fl);
        Tensor tv = t_exp(fl.tensor_expand(v), N, fl);
        Tensor tc = t_mul(t_mul(tu, tv, N, fl),
                          t_mul(t_inv(tu, N, fl), t_inv(tv, N, fl), N, fl), N, fl);
        CHECK(expand_series(comm, fl) == tc);
    }
}

TEST_CASE("multiplication is associative and powers compose") {
    GradedQuotient tf2(FamilySpec::tf(2));
    tf2.ensure_weight(4);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        Series<Rat> a = s_exp<Rat>(&tf2, random_lie(tf2.free_lie(), 2, rng), 4);
        Series<Rat> b = s_exp<Rat>(&tf2, random_lie(tf2.free_lie(), 2, rng), 4);
        Series<Rat> c = s_exp<Rat>(&tf2, random_lie(tf2.free_lie(), 2, rng), 4);
        CHECK(s_mul(s_mul(a, b), c).c == s_mul(a, s_mul(b, c)).c);
        CHECK(s_mul(a, s_inverse(a)).c == Series<Rat>::unit(&tf2, 4).c);
        CHECK(s_pow_int(a, 3).c == s_mul(a, s_mul(a, a)).c);
        CHECK(s_pow_int(a, -2).c == s_inverse(s_mul(a, a)).c);
    }
}

TEST_CASE("group-likeness criterion and serialization") {
    GradedQuotient f2(FamilySpec::f2());
    f2.ensure_weight(3);
    LiePoly x = f2.free_lie().letter(0), y = f2.free_lie().letter(1);
    QKey qx = f2.coords(x).begin()->first;
    QKey qy = f2.coords(y).begin()->first;

    Series<Rat> bad = Series<Rat>::unit(&f2, 3);
    bad.set({qx, qy}, Rat(1));
    CHECK_FALSE(s_is_grouplike(bad));
    CHECK(s_is_grouplike(s_mul(s_exp<Rat>(&f2, x, 3), s_exp<Rat>(&f2, y, 3))));

    Series<Rat> p = s_mul(s_exp<Rat>(&f2, x, 2), s_exp<Rat>(&f2, y, 2));
    CHECK(s_serialize(p) ==
          "# family=FREE_F2 N=2\n"
          "1 1\n"
          "x 1\n"
          "x*x 1/2\n"
          "x*y 1\n"
          "y 1\n"
          "y*y 1/2\n");

    GradedQuotient t3(FamilySpec::t(3));
    t3.ensure_weight(2);
    Series<Rat> q = s_exp<Rat>(&t3, t3.free_lie().letter(0), 1);
    CHECK(s_serialize(q) ==
          "# family=T_N n=3 N=1\n"
          "1 1\n"
          "t12 1\n");
}
