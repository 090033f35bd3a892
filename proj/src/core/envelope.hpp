#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "algebra.hpp"

namespace assoc {

// Coefficient embedding used by the series template. Exact series use Rat
// itself; the numeric validation layer specializes this for complex floats.
template <class C>
C coeff_from_rat(const Rat& r);

template <>
inline Rat coeff_from_rat<Rat>(const Rat& r) {
    return r;
}

// Truncated element of the enveloping algebra of a GradedQuotient in PBW
// coordinates. Monomials of weight > N are dropped by every operation.
template <class C>
struct Series {
    GradedQuotient* base = nullptr;
    int N = 0;
    std::map<PBW, C> c;

    static Series unit(GradedQuotient* b, int n) {
        Series s{b, n, {}};
        s.c[{}] = coeff_from_rat<C>(Rat(1));
        return s;
    }
    static Series zero(GradedQuotient* b, int n) { return Series{b, n, {}}; }

    C coeff(const PBW& m) const {
        auto it = c.find(m);
        return it == c.end() ? C{} : it->second;
    }
    void set(const PBW& m, C v) {
        if (v == C{})
            c.erase(m);
        else
            c[m] = std::move(v);
    }
    bool is_zero() const { return c.empty(); }
};

template <class C>
void check_compat(const Series<C>& a, const Series<C>& b) {
    if (a.base != b.base || a.N != b.N)
        throw std::invalid_argument("series base/truncation mismatch");
}

template <class C>
Series<C> s_add(const Series<C>& a, const Series<C>& b) {
    check_compat(a, b);
    Series<C> r = a;
    for (const auto& [m, v] : b.c) r.set(m, r.coeff(m) + v);
    return r;
}

template <class C>
Series<C> s_sub(const Series<C>& a, const Series<C>& b) {
    check_compat(a, b);
    Series<C> r = a;
    for (const auto& [m, v] : b.c) r.set(m, r.coeff(m) - v);
    return r;
}

template <class C>
Series<C> s_scale(const Series<C>& a, const C& k) {
    Series<C> r{a.base, a.N, {}};
    for (const auto& [m, v] : a.c) r.set(m, v * k);
    return r;
}

// Re-truncate to a lower order; raising the order would fabricate zeros.
template <class C>
Series<C> s_truncate(const Series<C>& a, int n) {
    if (n > a.N) throw std::invalid_argument("cannot extend a truncated series");
    Series<C> r{a.base, n, {}};
    for (const auto& [m, v] : a.c)
        if (pbw_weight(m) <= n) r.set(m, v);
    return r;
}

template <class C>
Series<C> s_mul(const Series<C>& a, const Series<C>& b) {
    check_compat(a, b);
    Series<C> r{a.base, a.N, {}};
    for (const auto& [ma, va] : a.c) {
        int wa = pbw_weight(ma);
        for (const auto& [mb, vb] : b.c) {
            if (wa + pbw_weight(mb) > a.N) continue;
            PBW concat = ma;
            concat.insert(concat.end(), mb.begin(), mb.end());
            C prod = va * vb;
            for (const auto& [m, cr] : a.base->pbw_normalize(concat))
                r.set(m, r.coeff(m) + prod * coeff_from_rat<C>(cr));
        }
    }
    return r;
}

// Lie element (reduced representative) as a weight-graded series.
template <class C>
Series<C> s_from_lie(GradedQuotient* base, const LiePoly& a, int n) {
    base->ensure_weight(n);
    LiePoly capped;
    for (const auto& [k, v] : a)
        if (k.first <= n) capped[k] = v;
    Series<C> r{base, n, {}};
    for (const auto& [q, v] : base->coords(base->reduce(capped))) r.set(PBW{q}, coeff_from_rat<C>(v));
    return r;
}

// Length-one part of a series as a Lie element.
template <class C>
std::map<QKey, C> s_linear_part(const Series<C>& s) {
    std::map<QKey, C> out;
    for (const auto& [m, v] : s.c)
        if (m.size() == 1) out[m[0]] = v;
    return out;
}

inline LiePoly s_lie_part(const Series<Rat>& s) {
    std::map<QKey, Rat> coords;
    for (const auto& [m, v] : s.c)
        if (m.size() == 1) coords[m[0]] = v;
    return s.base->from_coords(coords);
}

template <class C>
Series<C> s_exp(GradedQuotient* base, const LiePoly& a, int n) {
    Series<C> term = Series<C>::unit(base, n);
    Series<C> sum = term;
    Series<C> x = s_from_lie<C>(base, a, n);
    for (int k = 1; k <= n; ++k) {
        term = s_scale(s_mul(term, x), coeff_from_rat<C>(Rat(1, k)));
        if (term.is_zero()) break;
        sum = s_add(sum, term);
    }
    return sum;
}

template <class C>
Series<C> s_log(const Series<C>& s) {
    if (s.coeff({}) != coeff_from_rat<C>(Rat(1)))
        throw std::invalid_argument("log requires constant term 1");
    Series<C> u = s;
    u.set({}, C{});
    Series<C> pw = u;
    Series<C> sum = Series<C>::zero(s.base, s.N);
    for (int k = 1; k <= s.N; ++k) {
        Rat sign = (k % 2) ? Rat(1, k) : Rat(-1, k);
        sum = s_add(sum, s_scale(pw, coeff_from_rat<C>(sign)));
        pw = s_mul(pw, u);
        if (pw.is_zero()) break;
    }
    return sum;
}

template <class C>
Series<C> s_inverse(const Series<C>& s) {
    if (s.coeff({}) != coeff_from_rat<C>(Rat(1)))
        throw std::invalid_argument("inverse requires constant term 1");
    Series<C> u = s;
    u.set({}, C{});
    Series<C> pw = Series<C>::unit(s.base, s.N);
    Series<C> sum = pw;
    for (int k = 1; k <= s.N; ++k) {
        pw = s_mul(pw, u);
        if (pw.is_zero()) break;
        Rat sign = (k % 2) ? Rat(-1) : Rat(1);
        sum = s_add(sum, s_scale(pw, coeff_from_rat<C>(sign)));
    }
    return sum;
}

template <class C>
Series<C> s_commutator(const Series<C>& u, const Series<C>& v) {
    return s_mul(s_mul(u, v), s_mul(s_inverse(u), s_inverse(v)));
}

template <class C>
Series<C> s_adjoint(const Series<C>& g, const Series<C>& a) {
    return s_mul(s_mul(g, a), s_inverse(g));
}

inline LiePoly s_adjoint_lie(const Series<Rat>& g, const LiePoly& a) {
    Series<Rat> conj = s_adjoint(g, s_from_lie<Rat>(g.base, a, g.N));
    for (const auto& [m, v] : conj.c)
        if (m.size() != 1) throw std::logic_error("conjugate of a Lie element left the Lie part");
    return s_lie_part(conj);
}

inline bool s_is_grouplike(const Series<Rat>& s) {
    if (s.coeff({}) != 1) return false;
    for (const auto& [m, v] : s_log(s).c)
        if (m.size() >= 2 && v != 0) return false;
    return true;
}

inline Series<Rat> s_pow_int(const Series<Rat>& s, long e) {
    Series<Rat> b = e < 0 ? s_inverse(s) : s;
    long n = e < 0 ? -e : e;
    Series<Rat> r = Series<Rat>::unit(s.base, s.N);
    for (long i = 0; i < n; ++i) r = s_mul(r, b);
    return r;
}

inline std::string s_serialize(const Series<Rat>& s) {
    std::ostringstream os;
    os << "# family=" << s.base->spec().tag();
    std::string p = s.base->spec().params();
    if (!p.empty()) os << " " << p;
    os << " N=" << s.N << "\n";
    for (const auto& [m, v] : s.c) os << s.base->render_pbw(m) << " " << rat_str(v) << "\n";
    return os.str();
}

}  // namespace assoc
