#include "equations.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "linalg.hpp"

namespace assoc {

// ------------------------------------------------------------- reports

bool ResidualBlock::zero() const {
    for (const auto& r : rows)
        if (r.dim != 0) return false;
    return true;
}

std::string ResidualBlock::render() const {
    std::ostringstream os;
    os << name << "\n";
    for (const auto& r : rows)
        os << "weight " << r.weight << ": " << r.dim << " " << r.first << "\n";
    return os.str();
}

bool ResidualReport::all_zero() const {
    for (const auto& b : blocks)
        if (!b.zero()) return false;
    return true;
}

std::string ResidualReport::render() const {
    std::ostringstream os;
    for (const auto& b : blocks) os << b.render();
    for (const auto& n : notes) os << "note: " << n << "\n";
    return os.str();
}

namespace {

int pbw_weight(const PBW& m) {
    int w = 0;
    for (const auto& q : m) w += q.first;
    return w;
}

// generator of a family algebra as a Lie element
LiePoly fam_letter(GradedQuotient& q, const Gen& g) {
    int k = q.free_lie().alphabet().find(g);
    if (k < 0) throw std::invalid_argument("generator not present: " + g.name());
    return q.free_lie().letter(k);
}

Series<Rat> exp_lie(GradedQuotient& q, const LiePoly& a, int n) { return s_exp<Rat>(&q, a, n); }

// Evaluated image of a printed product F_1 F_2 .. F_k: composition stacks
// the earlier factor's image on the right, so the printed order folds as
// img(F_k) * .. * img(F_1).
Series<Rat> prodR(const std::vector<Series<Rat>>& fs) {
    if (fs.empty()) throw std::invalid_argument("empty product");
    Series<Rat> acc = Series<Rat>::unit(fs[0].base, fs[0].N);
    for (const auto& f : fs) acc = s_mul(f, acc);
    return acc;
}

// Evaluated image of a printed group commutator (u, v) = u v u^-1 v^-1,
// where slot_u/slot_v are the images of the printed slot contents.
Series<Rat> comm_printed(const Series<Rat>& slot_u, const Series<Rat>& slot_v) {
    return s_commutator(s_inverse(slot_v), s_inverse(slot_u));
}

// Bracket of two reduced Lie elements dropping every term above weight cap,
// so the ambient quotient never needs tables beyond cap.
LiePoly bracket_capped(GradedQuotient& q, const LiePoly& a, const LiePoly& b, int cap) {
    q.ensure_weight(cap);
    FreeLie& fl = q.free_lie();
    LiePoly out;
    for (const auto& [ka, ca] : a) {
        if (ca == 0) continue;
        for (const auto& [kb, cb] : b) {
            if (cb == 0 || ka.first + kb.first > cap) continue;
            out = lp_add(out, lp_scale(fl.bracket_basis(ka, kb), ca * cb));
        }
    }
    return q.reduce(out);
}

void push_block(ResidualReport& rep, const std::string& name, const Series<Rat>& resid,
                int N) {
    ResidualBlock b;
    b.name = name;
    std::map<int, std::pair<int, std::string>> acc;  // weight -> (count, first value)
    for (const auto& [m, v] : resid.c) {
        if (v == 0) continue;
        int w = pbw_weight(m);
        auto [it, fresh] = acc.emplace(w, std::make_pair(0, rat_str(v)));
        ++it->second.first;
        (void)fresh;
    }
    for (int w = 1; w <= N; ++w) {
        auto it = acc.find(w);
        ResidualRow row;
        row.weight = w;
        row.dim = it == acc.end() ? 0 : it->second.first;
        row.first = it == acc.end() ? "0" : it->second.second;
        b.rows.push_back(row);
    }
    rep.blocks.push_back(std::move(b));
}

void push_block_lie(ResidualReport& rep, const std::string& name, const LiePoly& resid,
                    GradedQuotient& q, int N) {
    ResidualBlock b;
    b.name = name;
    std::map<int, std::pair<int, std::string>> acc;
    for (const auto& [k, v] : q.coords(q.reduce(resid))) {
        if (v == 0) continue;
        auto [it, fresh] = acc.emplace(k.first, std::make_pair(0, rat_str(v)));
        ++it->second.first;
        (void)fresh;
    }
    for (int w = 1; w <= N; ++w) {
        auto it = acc.find(w);
        ResidualRow row;
        row.weight = w;
        row.dim = it == acc.end() ? 0 : it->second.first;
        row.first = it == acc.end() ? "0" : it->second.second;
        b.rows.push_back(row);
    }
    rep.blocks.push_back(std::move(b));
}

// Weight-capped application of the Lie morphism sending the source letters
// to the given (possibly inhomogeneous) images. Unlike the generic hom
// application this never builds target tables beyond cap.
LiePoly key_image_capped(const FreeLie& src, GradedQuotient& dst,
                         const std::vector<LiePoly>& images, BKey k, int cap,
                         std::map<BKey, LiePoly>& memo) {
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    const Word& w = src.word_of(k);
    LiePoly out;
    if (w.size() == 1) {
        LiePoly filt;
        for (const auto& [kk, c] : images[w[0]])
            if (c != 0 && kk.first <= cap) filt[kk] = c;
        out = dst.reduce(filt);
    } else {
        auto fact = src.std_factorization(w);
        LiePoly l = key_image_capped(src, dst, images, src.key_of(fact.first), cap, memo);
        LiePoly r = key_image_capped(src, dst, images, src.key_of(fact.second), cap, memo);
        out = bracket_capped(dst, l, r, cap);
    }
    memo.emplace(k, out);
    return out;
}

}  // namespace

// ------------------------------------------------------- substitutions

Series<Rat> subst_grouplike(const Series<Rat>& s, GradedQuotient& dst,
                            const std::vector<LiePoly>& images, int N) {
    if (!s.base) throw std::invalid_argument("series without base");
    dst.ensure_weight(N);
    const FreeLie& src = s.base->free_lie();
    if (static_cast<int>(images.size()) != src.alphabet().size())
        throw std::invalid_argument("one image per source letter required");
    LiePoly lg = s_lie_part(s_log(s_truncate(s, std::min(N, s.N))));
    std::map<BKey, LiePoly> memo;
    LiePoly out;
    for (const auto& [k, c] : lg)
        out = lp_add(out, lp_scale(key_image_capped(src, dst, images, k, N, memo), c));
    return s_exp<Rat>(&dst, dst.reduce(out), N);
}

Series<Rat> chord_subst(const Series<Rat>& s, GradedQuotient& dst,
                        const std::string& pattern, int N) {
    if (!s.base) throw std::invalid_argument("series without base");
    dst.ensure_weight(N);
    StrandAssignment sa = StrandAssignment::from_pattern(pattern, dst.spec().n, true);
    if (static_cast<int>(sa.sets.size()) != 3)
        throw std::invalid_argument("three strand groups required");
    if (s.base->free_lie().alphabet().size() != 2)
        throw std::invalid_argument("two-letter source required");
    auto chord_sum = [&](const std::vector<int>& P, const std::vector<int>& Q) {
        LiePoly out;
        for (int p : P)
            for (int q : Q) out = lp_add(out, fam_letter(dst, Gen::tij(p, q)));
        return out;
    };
    std::vector<LiePoly> images = {chord_sum(sa.sets[0], sa.sets[1]),
                                   chord_sum(sa.sets[1], sa.sets[2])};
    return map_grouplike(s_truncate(s, std::min(N, s.N)), dst, images, N);
}

// -------------------------------------------------- associator system

namespace {

void validate_candidate(const AssociatorCandidate& c) {
    if (!c.f2) throw std::invalid_argument("candidate without base algebra");
    if (c.phi.base != c.f2.get()) throw std::invalid_argument("candidate series off base");
    if (c.phi.N != c.N) throw std::invalid_argument("candidate truncation mismatch");
    if (c.phi.coeff({}) != 1) throw std::invalid_argument("candidate must be group-like");
}

// The three genus-zero blocks at truncation n. q3/q4 must be built to n.
std::vector<std::pair<std::string, Series<Rat>>> assoc_blocks(const Series<Rat>& phi,
                                                              const Rat& mu,
                                                              GradedQuotient& q3,
                                                              GradedQuotient& q4, int n) {
    std::vector<std::pair<std::string, Series<Rat>>> out;
    auto ph3 = [&](const std::string& pat) { return chord_subst(phi, q3, pat, n); };
    auto ph4 = [&](const std::string& pat) { return chord_subst(phi, q4, pat, n); };
    LiePoly t12 = fam_letter(q3, Gen::tij(1, 2));
    LiePoly t13 = fam_letter(q3, Gen::tij(1, 3));
    LiePoly t23 = fam_letter(q3, Gen::tij(2, 3));
    Rat h = mu / 2;

    out.emplace_back("duality", s_sub(ph3("3,2,1"), s_inverse(ph3("1,2,3"))));

    Series<Rat> hex_lhs = prodR({ph3("1,2,3"), exp_lie(q3, lp_scale(t23, h), n),
                                 ph3("2,3,1"), exp_lie(q3, lp_scale(t13, h), n),
                                 ph3("3,1,2"), exp_lie(q3, lp_scale(t12, h), n)});
    Series<Rat> hex_rhs = exp_lie(q3, lp_scale(lp_add(t12, lp_add(t13, t23)), h), n);
    out.emplace_back("hexagon", s_sub(hex_lhs, hex_rhs));

    Series<Rat> pent_lhs = prodR({ph4("12,3,4"), ph4("1,2,34")});
    Series<Rat> pent_rhs = prodR({ph4("1,2,3"), ph4("1,23,4"), ph4("2,3,4")});
    out.emplace_back("pentagon", s_sub(pent_lhs, pent_rhs));
    return out;
}

using CoordKey = std::pair<int, PBW>;

std::map<CoordKey, Rat> weight_coords(
    const std::vector<std::pair<std::string, Series<Rat>>>& blocks, int w) {
    std::map<CoordKey, Rat> out;
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        for (const auto& [m, v] : blocks[b].second.c)
            if (v != 0 && pbw_weight(m) == w) out[{b, m}] = v;
    return out;
}

// Affine solve that also exposes the reduced row space, so callers can
// recover solution directions and rank data.
struct AffineFull {
    AffineSolution sol;
    RowSpace rs;
};

AffineFull solve_affine_full(const std::vector<SRow>& rows, int num_unknowns) {
    AffineFull out;
    out.sol = solve_affine(rows, num_unknowns);
    for (const auto& r : rows) out.rs.add(r);
    return out;
}

}  // namespace

ResidualReport check_associator(const AssociatorCandidate& c) {
    validate_candidate(c);
    int N = c.N;
    GradedQuotient q3(FamilySpec::t(3)), q4(FamilySpec::t(4));
    q3.ensure_weight(N);
    q4.ensure_weight(N);
    ResidualReport rep;
    for (auto& [name, resid] : assoc_blocks(c.phi, c.mu, q3, q4, N))
        push_block(rep, name, resid, N);
    return rep;
}

AssocSolveResult solve_associator(const Rat& mu, int N) {
    if (mu == 0) throw std::invalid_argument("coupling must be nonzero");
    if (N < 1) throw std::invalid_argument("positive truncation required");
    AssocSolveResult res;
    res.cand = AssociatorCandidate::trivial(mu, N);
    GradedQuotient& f2 = *res.cand.f2;
    f2.ensure_weight(N);
    GradedQuotient q3(FamilySpec::t(3)), q4(FamilySpec::t(4));
    q3.ensure_weight(N);
    q4.ensure_weight(N);

    LiePoly logphi;
    auto coords_at = [&](int d) {
        Series<Rat> phi = s_exp<Rat>(&f2, logphi, d);
        return weight_coords(assoc_blocks(phi, mu, q3, q4, d), d);
    };
    for (int d = 2; d <= N; ++d) {
        auto bas = f2.basis(d);
        int B = static_cast<int>(bas.size());
        auto r0 = coords_at(d);
        std::vector<std::map<CoordKey, Rat>> cols(B);
        for (int j = 0; j < B; ++j) {
            logphi[bas[j]] += 1;
            auto rj = coords_at(d);
            logphi[bas[j]] -= 1;
            if (logphi[bas[j]] == 0) logphi.erase(bas[j]);
            for (const auto& [k, v] : rj) {
                Rat dlt = v - (r0.count(k) ? r0.at(k) : Rat(0));
                if (dlt != 0) cols[j][k] = dlt;
            }
            for (const auto& [k, v] : r0)
                if (!rj.count(k) && v != 0) cols[j][k] = -v;
        }
        std::set<CoordKey> keys;
        for (const auto& [k, v] : r0) keys.insert(k);
        for (const auto& col : cols)
            for (const auto& [k, v] : col) keys.insert(k);
        std::vector<SRow> rows;
        for (const auto& k : keys) {
            SRow row;
            for (int j = 0; j < B; ++j)
                if (cols[j].count(k)) row[j] = cols[j].at(k);
            if (r0.count(k)) row[B] = r0.at(k);
            if (!row.empty()) rows.push_back(std::move(row));
        }
        auto sol = solve_affine(rows, B);
        if (!sol.consistent) {
            res.obstruction_weight = d;
            res.cand.phi = s_exp<Rat>(&f2, logphi, N);
            res.report = check_associator(res.cand);
            return res;
        }
        for (const auto& [j, v] : sol.x) logphi[bas[j]] += v;
        res.free_params.push_back(static_cast<int>(sol.free_cols.size()));
    }
    res.cand.phi = s_exp<Rat>(&f2, logphi, N);
    res.report = check_associator(res.cand);
    res.ok = res.report.all_zero();
    return res;
}

// ------------------------------------------------------- genus system

namespace {

std::string handle_name(int a, bool plus) {
    return "A" + std::to_string(a) + (plus ? "+" : "-");
}

// All defining blocks of a genus tuple at truncation n. Every quotient must
// be built to n; the series arguments live over q2.
std::vector<std::pair<std::string, Series<Rat>>> genus_blocks(
    const Series<Rat>& phi, const Rat& mu, const std::vector<Series<Rat>>& Ap,
    const std::vector<Series<Rat>>& Am, int g, GradedQuotient& q1, GradedQuotient& q2,
    GradedQuotient& q3, int n) {
    std::vector<std::pair<std::string, Series<Rat>>> out;
    auto S = [&](const Series<Rat>& A) { return s_truncate(A, n); };
    auto side = [&](int a, bool plus) { return S(plus ? Ap[a - 1] : Am[a - 1]); };

    Series<Rat> unit1 = Series<Rat>::unit(&q1, n);
    Series<Rat> unit3 = Series<Rat>::unit(&q3, n);
    Series<Rat> p123 = chord_subst(phi, q3, "1,2,3", n);
    Series<Rat> p213 = chord_subst(phi, q3, "2,1,3", n);
    Series<Rat> ip123 = s_inverse(p123);
    Series<Rat> ip213 = s_inverse(p213);
    LiePoly t12_3 = fam_letter(q3, Gen::tij(1, 2));
    Series<Rat> r3 = exp_lie(q3, lp_scale(t12_3, mu / 2), n);
    Series<Rat> e12 = exp_lie(q3, lp_scale(t12_3, mu), n);

    // handle erased on the remaining strand
    for (int a = 1; a <= g; ++a)
        for (bool plus : {true, false})
            out.emplace_back("erasure(" + handle_name(a, plus) + ")",
                             s_sub(superscript_eval(side(a, plus), q1, "0,1"), unit1));

    // cyclic triple product against the doubled handle
    auto alpha = [&](const Series<Rat>& A, int i, int j, int k) {
        std::string pat3 =
            std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
        std::string pat2 = std::to_string(i) + "," + std::to_string(j) + std::to_string(k);
        LiePoly tt = lp_add(fam_letter(q3, Gen::tij(i, j)), fam_letter(q3, Gen::tij(i, k)));
        return prodR({chord_subst(phi, q3, pat3, n), superscript_eval(A, q3, pat2),
                      exp_lie(q3, lp_scale(tt, mu / 2), n)});
    };
    for (int a = 1; a <= g; ++a)
        for (bool plus : {true, false}) {
            Series<Rat> A = side(a, plus);
            Series<Rat> lhs = prodR({alpha(A, 1, 2, 3), alpha(A, 2, 3, 1), alpha(A, 3, 1, 2)});
            Series<Rat> rhs = superscript_eval(A, q3, "123,0");
            out.emplace_back("triple(" + handle_name(a, plus) + ")", s_sub(lhs, rhs));
        }

    // braiding as a commutator of the two signs of one handle
    for (int a = 1; a <= g; ++a) {
        Series<Rat> U = prodR({r3, p213, superscript_eval(side(a, true), q3, "2,13"),
                               ip213, r3});
        Series<Rat> V = prodR({p123, superscript_eval(side(a, false), q3, "1,23"), ip123});
        out.emplace_back("pairing(a=" + std::to_string(a) + ")",
                         s_sub(e12, comm_printed(U, V)));
    }

    // distinct handles commute after transport
    for (int b = 1; b <= g; ++b)
        for (int a = b + 1; a <= g; ++a)
            for (bool plus : {true, false}) {
                Series<Rat> U =
                    prodR({p123, superscript_eval(side(a, plus), q3, "1,23"), ip123});
                Series<Rat> V = prodR({r3, p213, superscript_eval(side(b, plus), q3, "2,13"),
                                       ip213, r3});
                out.emplace_back("cross(a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                                     "," + (plus ? "+" : "-") + ")",
                                 s_sub(unit3, comm_printed(U, V)));
            }

    // product of all handle commutators
    LiePoly t12_2 = fam_letter(q2, Gen::tij(1, 2));
    LiePoly t11_2 = fam_letter(q2, Gen::tii(1));
    Series<Rat> lhs4 =
        exp_lie(q2, lp_add(lp_scale(t12_2, mu), lp_scale(t11_2, mu * (g - 1))), n);
    Series<Rat> rhs4 = Series<Rat>::unit(&q2, n);
    std::vector<Series<Rat>> factors;
    for (int a = 1; a <= g; ++a)
        factors.push_back(comm_printed(s_inverse(side(a, true)), side(a, false)));
    rhs4 = prodR(factors);
    out.emplace_back("handles", s_sub(lhs4, rhs4));
    return out;
}

void validate_genus(const AssociatorCandidate& c, const GenusData& d) {
    validate_candidate(c);
    if (!d.base) throw std::invalid_argument("genus data without base algebra");
    if (d.g < 1) throw std::invalid_argument("genus must be at least 1");
    if (!(d.base->spec() == FamilySpec::tfg(d.g, 2)))
        throw std::invalid_argument("wrong base family for genus data");
    if (static_cast<int>(d.A_plus.size()) != d.g ||
        static_cast<int>(d.A_minus.size()) != d.g)
        throw std::invalid_argument("one series pair per handle required");
    for (const auto& A : d.A_plus)
        if (A.base != d.base.get()) throw std::invalid_argument("handle series off base");
    for (const auto& A : d.A_minus)
        if (A.base != d.base.get()) throw std::invalid_argument("handle series off base");
}

std::string framing_note(const Rat& mu, int g) {
    std::ostringstream os;
    os << "framing scale: the framed two-strand image is exp((mu/2) t11); the "
          "paired-handles target is exp(mu (t12 + "
       << (g - 1) << " t11))";
    (void)mu;
    return os.str();
}

}  // namespace

ResidualReport check_genus(const AssociatorCandidate& c, const GenusData& d) {
    validate_genus(c, d);
    int N = std::min(c.N, d.N);
    GradedQuotient& q2 = *d.base;
    q2.ensure_weight(N);
    GradedQuotient q1(FamilySpec::tfg(d.g, 1)), q3(FamilySpec::tfg(d.g, 3));
    q1.ensure_weight(N);
    q3.ensure_weight(N);
    Series<Rat> phi = s_truncate(c.phi, N);
    ResidualReport rep;
    for (auto& [name, resid] : genus_blocks(phi, c.mu, d.A_plus, d.A_minus, d.g, q1, q2,
                                            q3, N))
        push_block(rep, name, resid, N);
    rep.notes.push_back(framing_note(c.mu, d.g));
    return rep;
}

GenusSolveResult solve_genus(const AssociatorCandidate& c, int genus, int N) {
    validate_candidate(c);
    if (genus < 1) throw std::invalid_argument("genus must be at least 1");
    if (N < 1) throw std::invalid_argument("positive truncation required");
    if (c.N < N) throw std::invalid_argument("candidate truncation too small");

    GenusSolveResult res;
    GenusData d;
    d.g = genus;
    d.N = N;
    d.base = std::make_shared<GradedQuotient>(FamilySpec::tfg(genus, 2));
    GradedQuotient& q2 = *d.base;
    q2.ensure_weight(N);
    GradedQuotient q1(FamilySpec::tfg(genus, 1)), q3(FamilySpec::tfg(genus, 3));
    q1.ensure_weight(N);
    q3.ensure_weight(N);
    const Alphabet& alpha = q2.free_lie().alphabet();

    // Weight 1. The commutator blocks constrain the weight-1 coefficients
    // quadratically, not linearly, so this stage is solved in closed form:
    // the first-strand pair (x_1^a, -mu y_1^a) meets every weight-2
    // constraint that the weight-1 data can meet, and a vanishing coupling
    // forces the trivial tuple.
    std::vector<LiePoly> lp(genus), lm(genus);
    if (c.mu != 0) {
        for (int a = 1; a <= genus; ++a) {
            lp[a - 1] = q2.free_lie().letter(alpha.find(Gen::xg(1, a)));
            lm[a - 1] = lp_scale(q2.free_lie().letter(alpha.find(Gen::yg(1, a))), -c.mu);
        }
    }
    res.free_params.push_back(0);

    Series<Rat> phiN = s_truncate(c.phi, N);
    auto build = [&](int n) {
        std::pair<std::vector<Series<Rat>>, std::vector<Series<Rat>>> out;
        for (int a = 0; a < genus; ++a) {
            out.first.push_back(s_exp<Rat>(&q2, lp[a], n));
            out.second.push_back(s_exp<Rat>(&q2, lm[a], n));
        }
        return out;
    };
    auto coords_at = [&](int dg) {
        auto [Ap, Am] = build(dg);
        return weight_coords(
            genus_blocks(s_truncate(phiN, dg), c.mu, Ap, Am, genus, q1, q2, q3, dg), dg);
    };

    for (int dg = 2; dg <= N; ++dg) {
        auto bas = q2.basis(dg);
        int B = static_cast<int>(bas.size());
        int U = 2 * genus * B;
        auto r0 = coords_at(dg);
        std::vector<std::map<CoordKey, Rat>> cols(U);
        int u = 0;
        for (int a = 0; a < genus; ++a)
            for (int sgn = 0; sgn < 2; ++sgn)
                for (int j = 0; j < B; ++j, ++u) {
                    LiePoly& target = sgn == 0 ? lp[a] : lm[a];
                    target[bas[j]] += 1;
                    auto rj = coords_at(dg);
                    target[bas[j]] -= 1;
                    if (target[bas[j]] == 0) target.erase(bas[j]);
                    for (const auto& [k, v] : rj) {
                        Rat dlt = v - (r0.count(k) ? r0.at(k) : Rat(0));
                        if (dlt != 0) cols[u][k] = dlt;
                    }
                    for (const auto& [k, v] : r0)
                        if (!rj.count(k) && v != 0) cols[u][k] = -v;
                }
        std::set<CoordKey> keys;
        for (const auto& [k, v] : r0) keys.insert(k);
        for (const auto& col : cols)
            for (const auto& [k, v] : col) keys.insert(k);
        std::vector<SRow> rows;
        for (const auto& k : keys) {
            SRow row;
            for (int j = 0; j < U; ++j)
                if (cols[j].count(k)) row[j] = cols[j].at(k);
            if (r0.count(k)) row[U] = r0.at(k);
            if (!row.empty()) rows.push_back(std::move(row));
        }
        auto full = solve_affine_full(rows, U);
        if (!full.sol.consistent) {
            RowSpace hom;
            for (const auto& r : rows) {
                SRow h = r;
                h.erase(U);
                hom.add(std::move(h));
            }
            res.obstruction_weight = dg;
            res.rank_deficit = full.rs.rank() - hom.rank();
            break;
        }
        for (const auto& [j, v] : full.sol.x) {
            int a = j / (2 * B);
            int rem = j % (2 * B);
            LiePoly& target = rem / B == 0 ? lp[a] : lm[a];
            target[bas[rem % B]] += v;
            if (target[bas[rem % B]] == 0) target.erase(bas[rem % B]);
        }
        res.free_params.push_back(static_cast<int>(full.sol.free_cols.size()));
    }

    auto [Ap, Am] = build(N);
    d.A_plus = std::move(Ap);
    d.A_minus = std::move(Am);
    res.data = d;
    res.report = check_genus(c, d);
    res.ok = res.obstruction_weight == 0 && res.report.all_zero();
    return res;
}

// ---------------------------------------------------- elliptic checks

ResidualReport check_elliptic(const AssociatorCandidate& c, const Series<Rat>& A_plus,
                              const Series<Rat>& A_minus, EllipticForm form) {
    validate_candidate(c);
    if (!A_plus.base || A_plus.base != A_minus.base)
        throw std::invalid_argument("handle series must share one base");
    GradedQuotient& q2 = *A_plus.base;
    if (!(q2.spec() == FamilySpec::tg(1, 2)))
        throw std::invalid_argument("wrong base family");
    int N = std::min(c.N, std::min(A_plus.N, A_minus.N));
    q2.ensure_weight(N);
    GradedQuotient e1(FamilySpec::tg(1, 1)), e3(FamilySpec::tg(1, 3));
    e1.ensure_weight(N);
    e3.ensure_weight(N);

    Series<Rat> phi = s_truncate(c.phi, N);
    Series<Rat> Ap = s_truncate(A_plus, N);
    Series<Rat> Am = s_truncate(A_minus, N);
    Rat mu = c.mu;

    Series<Rat> unit1 = Series<Rat>::unit(&e1, N);
    Series<Rat> unit2 = Series<Rat>::unit(&q2, N);
    Series<Rat> p123 = chord_subst(phi, e3, "1,2,3", N);
    Series<Rat> p213 = chord_subst(phi, e3, "2,1,3", N);
    Series<Rat> ip123 = s_inverse(p123);
    Series<Rat> ip213 = s_inverse(p213);
    LiePoly t12_3 = fam_letter(e3, Gen::tij(1, 2));
    LiePoly t23_3 = fam_letter(e3, Gen::tij(2, 3));
    LiePoly t12_2 = fam_letter(q2, Gen::tij(1, 2));
    Series<Rat> r3 = exp_lie(e3, lp_scale(t12_3, mu / 2), N);
    Series<Rat> e12_3 = exp_lie(e3, lp_scale(t12_3, mu), N);
    Series<Rat> e12_2 = exp_lie(q2, lp_scale(t12_2, mu), N);

    ResidualReport rep;
    if (form == EllipticForm::standard) {
        for (bool plus : {true, false}) {
            const Series<Rat>& A = plus ? Ap : Am;
            std::string nm = plus ? "A+" : "A-";
            push_block(rep, "erasure(" + nm + ")",
                       s_sub(superscript_eval(A, e1, "0,1"), unit1), N);
            auto alpha = [&](int i, int j, int k) {
                std::string pat3 =
                    std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
                std::string pat2 =
                    std::to_string(i) + "," + std::to_string(j) + std::to_string(k);
                LiePoly tt =
                    lp_add(fam_letter(e3, Gen::tij(i, j)), fam_letter(e3, Gen::tij(i, k)));
                return prodR({chord_subst(phi, e3, pat3, N), superscript_eval(A, e3, pat2),
                              exp_lie(e3, lp_scale(tt, mu / 2), N)});
            };
            Series<Rat> lhs = prodR({alpha(1, 2, 3), alpha(2, 3, 1), alpha(3, 1, 2)});
            push_block(rep, "triple(" + nm + ")",
                       s_sub(lhs, superscript_eval(A, e3, "123,0")), N);
        }
        Series<Rat> U = prodR({r3, p213, superscript_eval(Ap, e3, "2,13"), ip213, r3});
        Series<Rat> V = prodR({p123, superscript_eval(Am, e3, "1,23"), ip123});
        push_block(rep, "pairing", s_sub(e12_3, comm_printed(U, V)), N);
        push_block(rep, "handles", s_sub(e12_2, comm_printed(s_inverse(Ap), Am)), N);
        return rep;
    }

    // conjugate shape: the checker transports the generators itself
    Series<Rat> r2 = exp_lie(q2, lp_scale(t12_2, mu / 2), N);
    auto tilde = [&](const Series<Rat>& A) {
        return s_mul(s_mul(s_inverse(r2), s_inverse(superscript_eval(A, q2, "2,1"))), r2);
    };
    Series<Rat> Tp = tilde(Ap);
    Series<Rat> Tm = tilde(Am);
    Series<Rat> em = s_inverse(r3);
    for (bool plus : {true, false}) {
        const Series<Rat>& T = plus ? Tp : Tm;
        std::string nm = plus ? "At+" : "At-";
        push_block(rep, "erasure(" + nm + ")",
                   s_sub(superscript_eval(T, e1, "1,0"), unit1), N);
        Series<Rat> lhs =
            prodR({superscript_eval(T, e3, "12,3"), superscript_eval(T, e3, "0,123")});
        Series<Rat> rhs = prodR({p123, superscript_eval(T, e3, "1,23"), ip123, em, p213,
                                 superscript_eval(T, e3, "2,13"), ip213, em});
        push_block(rep, "triple(" + nm + ")", s_sub(lhs, rhs), N);
    }
    Series<Rat> slot_u = s_inverse(superscript_eval(Tp, e3, "12,3"));
    Series<Rat> slot_v = prodR({s_inverse(superscript_eval(Tm, e3, "12,3")), ip123,
                                superscript_eval(Tm, e3, "1,23"), p123});
    Series<Rat> rhs3 = prodR({p123, exp_lie(e3, lp_scale(t23_3, mu), N), ip123});
    push_block(rep, "cross(At)", s_sub(comm_printed(slot_u, slot_v), rhs3), N);
    push_block(rep, "handles(At)", s_sub(e12_2, comm_printed(Tp, s_inverse(Tm))), N);
    return rep;
}

// ------------------------------------------------ graded symmetries

namespace {

Series<Rat> rebase_series(const Series<Rat>& s, GradedQuotient& dst, int N) {
    if (s.base == &dst) return s_truncate(s, N);
    if (!(s.base->spec() == dst.spec()))
        throw std::invalid_argument("incompatible series bases");
    dst.ensure_weight(N);
    Series<Rat> out = Series<Rat>::zero(&dst, N);
    for (const auto& [m, v] : s.c)
        if (pbw_weight(m) <= N) out.set(m, v);
    return out;
}

void validate_grt(const GRTElement& e) {
    if (!e.f2) throw std::invalid_argument("element without base algebra");
    if (e.g.base != e.f2.get()) throw std::invalid_argument("element series off base");
    if (e.g.N != e.N) throw std::invalid_argument("element truncation mismatch");
    if (e.g.coeff({}) != 1) throw std::invalid_argument("element must be group-like");
}

}  // namespace

GRTElement GRTElement::identity(int N) {
    GRTElement e;
    e.N = N;
    e.f2 = std::make_shared<GradedQuotient>(FamilySpec::f2());
    e.f2->ensure_weight(N);
    e.g = Series<Rat>::unit(e.f2.get(), N);
    return e;
}

ResidualReport grt_check(const GRTElement& e) {
    validate_grt(e);
    int N = e.N;
    GradedQuotient q3(FamilySpec::t(3)), q4(FamilySpec::t(4));
    q3.ensure_weight(N);
    q4.ensure_weight(N);
    auto g3 = [&](const std::string& pat) { return chord_subst(e.g, q3, pat, N); };
    auto g4 = [&](const std::string& pat) { return chord_subst(e.g, q4, pat, N); };
    LiePoly t13 = fam_letter(q3, Gen::tij(1, 3));
    LiePoly t23 = fam_letter(q3, Gen::tij(2, 3));

    ResidualReport rep;
    push_block(rep, "duality", s_sub(g3("3,2,1"), s_inverse(g3("1,2,3"))), N);
    push_block(rep, "triple",
               s_sub(prodR({g3("1,2,3"), g3("2,3,1"), g3("3,1,2")}),
                     Series<Rat>::unit(&q3, N)),
               N);
    LiePoly hex = lp_add(lp_sub(s_adjoint_lie(g3("1,2,3"), t23), t23),
                         lp_sub(s_adjoint_lie(g3("2,1,3"), t13), t13));
    push_block_lie(rep, "chord hexagon", hex, q3, N);
    push_block(rep, "pentagon",
               s_sub(prodR({g4("12,3,4"), g4("1,2,34")}),
                     prodR({g4("1,2,3"), g4("1,23,4"), g4("2,3,4")})),
               N);
    return rep;
}

GRTElement grt_mul(const GRTElement& a, const GRTElement& b) {
    validate_grt(a);
    validate_grt(b);
    if (a.N != b.N) throw std::invalid_argument("level mismatch");
    int N = a.N;
    GRTElement r;
    r.N = N;
    r.lambda = a.lambda * b.lambda;
    r.f2 = a.f2;
    GradedQuotient& f2 = *r.f2;
    Series<Rat> gb = rebase_series(b.g, f2, N);
    LiePoly X = f2.free_lie().letter(0);
    LiePoly Y = f2.free_lie().letter(1);
    r.g = s_mul(gb, subst_grouplike(a.g, f2, {X, s_adjoint_lie(gb, Y)}, N));
    return r;
}

GRTElement grt_rescale(const GRTElement& e, const Rat& lambda) {
    validate_grt(e);
    if (lambda == 0) throw std::invalid_argument("rescaling by zero");
    GRTElement r = e;
    GradedQuotient& f2 = *r.f2;
    LiePoly X = f2.free_lie().letter(0);
    LiePoly Y = f2.free_lie().letter(1);
    r.g = subst_grouplike(e.g, f2, {lp_scale(X, lambda), lp_scale(Y, lambda)}, e.N);
    r.lambda = e.lambda * lambda;
    return r;
}

GRTgElement GRTgElement::identity(int genus, int N) {
    if (genus < 1) throw std::invalid_argument("genus must be at least 1");
    GRTgElement e;
    e.genus = genus;
    e.N = N;
    e.base0 = GRTElement::identity(N);
    e.base2 = std::make_shared<GradedQuotient>(FamilySpec::tfg(genus, 2));
    e.base2->ensure_weight(N);
    const Alphabet& alpha = e.base2->free_lie().alphabet();
    for (int a = 1; a <= genus; ++a) {
        e.u_plus.push_back(e.base2->free_lie().letter(alpha.find(Gen::xg(1, a))));
        e.u_minus.push_back(e.base2->free_lie().letter(alpha.find(Gen::yg(1, a))));
    }
    return e;
}

ResidualReport grt_g_check(const GRTgElement& e) {
    validate_grt(e.base0);
    if (e.genus < 1) throw std::invalid_argument("genus must be at least 1");
    if (!e.base2 || !(e.base2->spec() == FamilySpec::tfg(e.genus, 2)))
        throw std::invalid_argument("wrong base family for handle data");
    if (static_cast<int>(e.u_plus.size()) != e.genus ||
        static_cast<int>(e.u_minus.size()) != e.genus)
        throw std::invalid_argument("one Lie element pair per handle required");
    if (e.base0.N != e.N) throw std::invalid_argument("level mismatch");
    int N = e.N;
    int g = e.genus;
    GradedQuotient& q2 = *e.base2;
    q2.ensure_weight(N);
    GradedQuotient q1(FamilySpec::tfg(g, 1)), q3(FamilySpec::tfg(g, 3));
    q1.ensure_weight(N);
    q3.ensure_weight(N);
    Series<Rat> G123 = chord_subst(e.base0.g, q3, "1,2,3", N);
    Series<Rat> G213 = chord_subst(e.base0.g, q3, "2,1,3", N);
    auto cab = [&](const LiePoly& u, const std::string& pat, GradedQuotient& dst) {
        StrandAssignment sa = StrandAssignment::from_pattern(pat, dst.spec().n, true);
        return cable_lie(q2, dst, u, sa, N);
    };
    auto uname = [&](int a, bool plus) {
        return std::string("u") + std::to_string(a) + (plus ? "+" : "-");
    };
    auto uside = [&](int a, bool plus) { return plus ? e.u_plus[a - 1] : e.u_minus[a - 1]; };

    ResidualReport rep;
    for (int a = 1; a <= g; ++a)
        for (bool plus : {true, false})
            push_block_lie(rep, "erasure(" + uname(a, plus) + ")",
                           cab(uside(a, plus), "0,1", q1), q1, N);
    for (int a = 1; a <= g; ++a)
        for (bool plus : {true, false}) {
            const LiePoly& u = uside(a, plus);
            LiePoly total;
            for (int i = 1; i <= 3; ++i)
                total = lp_add(total, fam_letter(q3, plus ? Gen::xg(i, a) : Gen::yg(i, a)));
            LiePoly resid = lp_add(s_adjoint_lie(G123, cab(u, "1,23", q3)),
                                   s_adjoint_lie(G213, cab(u, "2,13", q3)));
            resid = lp_add(resid, cab(u, "3,12", q3));
            resid = lp_sub(resid, total);
            push_block_lie(rep, "triple(" + uname(a, plus) + ")", resid, q3, N);
        }
    for (int a = 1; a <= g; ++a)
        for (bool plus : {true, false}) {
            const LiePoly& u = uside(a, plus);
            LiePoly resid = bracket_capped(q3, s_adjoint_lie(G123, cab(u, "1,23", q3)),
                                           cab(u, "3,12", q3), N);
            push_block_lie(rep, "disjoint(" + uname(a, plus) + ")", resid, q3, N);
        }
    for (int b = 1; b <= g; ++b)
        for (int a = b + 1; a <= g; ++a)
            for (bool s1 : {true, false})
                for (bool s2 : {true, false}) {
                    LiePoly resid = bracket_capped(
                        q3, s_adjoint_lie(G213, cab(uside(a, s1), "2,13", q3)),
                        s_adjoint_lie(G123, cab(uside(b, s2), "1,23", q3)), N);
                    push_block_lie(rep,
                                   "cross(a=" + std::to_string(a) + (s1 ? "+" : "-") +
                                       ",b=" + std::to_string(b) + (s2 ? "+" : "-") + ")",
                                   resid, q3, N);
                }
    LiePoly t12_3 = fam_letter(q3, Gen::tij(1, 2));
    for (int a = 1; a <= g; ++a) {
        LiePoly resid = bracket_capped(q3, s_adjoint_lie(G213, cab(uside(a, true), "2,13", q3)),
                                       s_adjoint_lie(G123, cab(uside(a, false), "1,23", q3)),
                                       N);
        resid = lp_sub(resid, t12_3);
        push_block_lie(rep, "pairing(a=" + std::to_string(a) + ")", resid, q3, N);
    }
    LiePoly sum;
    for (int a = 1; a <= g; ++a)
        sum = lp_add(sum, bracket_capped(q2, e.u_plus[a - 1], e.u_minus[a - 1], N));
    sum = lp_add(sum, fam_letter(q2, Gen::tij(1, 2)));
    sum = lp_add(sum, lp_scale(fam_letter(q2, Gen::tii(1)), Rat(2 * (g - 1))));
    push_block_lie(rep, "handles", sum, q2, N);
    return rep;
}

// ------------------------------------------------------------ GT side

namespace {

void validate_gt(const GTElement& e) {
    if (!e.f2) throw std::invalid_argument("element without base algebra");
    if (e.f.base != e.f2.get()) throw std::invalid_argument("element series off base");
    if (e.f.N != e.N) throw std::invalid_argument("element truncation mismatch");
    if (e.f.coeff({}) != 1) throw std::invalid_argument("element must be group-like");
}

}  // namespace

GTElement GTElement::identity(int N) {
    GTElement e;
    e.N = N;
    e.f2 = std::make_shared<GradedQuotient>(FamilySpec::f2());
    e.f2->ensure_weight(N);
    e.f = Series<Rat>::unit(e.f2.get(), N);
    return e;
}

ResidualReport gt_check(const GTElement& e, const AssociatorCandidate& transport) {
    validate_gt(e);
    validate_candidate(transport);
    int N = e.N;
    if (transport.N < N) throw std::invalid_argument("transport truncation too small");

    AlgebraPool pool;
    EvalTarget target{false, 0};
    WordEvaluator ev(pool, transport, target, N);
    auto X = [&](int i, int j, int n) { return ev.eval(pure_braid_word(i, j, n)); };
    auto F = [&](GradedQuotient& q, const Series<Rat>& A, const Series<Rat>& B) {
        return subst_grouplike(e.f, q,
                               {s_lie_part(s_log(A)), s_lie_part(s_log(B))}, N);
    };
    Rat nu = (e.lambda - 1) / 2;
    auto pw = [&](GradedQuotient& q, const Series<Rat>& A) {
        return exp_lie(q, lp_scale(s_lie_part(s_log(A)), nu), N);
    };

    ResidualReport rep;
    GradedQuotient& f2 = *e.f2;
    LiePoly Xl = f2.free_lie().letter(0);
    LiePoly Yl = f2.free_lie().letter(1);
    push_block(rep, "inversion",
               s_sub(e.f, s_inverse(subst_grouplike(e.f, f2, {Yl, Xl}, N))), N);

    GradedQuotient& q3 = ev.algebra(3);
    Series<Rat> x12 = X(1, 2, 3), x23 = X(2, 3, 3), x13 = X(1, 3, 3);
    Series<Rat> hex = prodR({pw(q3, x12), F(q3, x12, x23), pw(q3, x23), F(q3, x23, x13),
                             pw(q3, x13), F(q3, x13, x12)});
    push_block(rep, "hexagon", s_sub(hex, Series<Rat>::unit(&q3, N)), N);

    GradedQuotient& q4 = ev.algebra(4);
    Series<Rat> y12 = X(1, 2, 4), y13 = X(1, 3, 4), y14 = X(1, 4, 4);
    Series<Rat> y23 = X(2, 3, 4), y24 = X(2, 4, 4), y34 = X(3, 4, 4);
    Series<Rat> lhs = prodR({F(q4, s_mul(y23, y13), y34), F(q4, y12, s_mul(y24, y23))});
    Series<Rat> rhs = prodR({F(q4, y12, y23), F(q4, s_mul(y13, y12), s_mul(y34, y24)),
                             F(q4, y23, y34)});
    push_block(rep, "pentagon", s_sub(lhs, rhs), N);
    return rep;
}

GTElement gt_mul(const GTElement& a, const GTElement& b) {
    validate_gt(a);
    validate_gt(b);
    if (a.N != b.N) throw std::invalid_argument("level mismatch");
    int N = a.N;
    GTElement r;
    r.N = N;
    r.lambda = a.lambda * b.lambda;
    r.f2 = a.f2;
    GradedQuotient& f2 = *r.f2;
    Series<Rat> bf = rebase_series(b.f, f2, N);
    LiePoly X = f2.free_lie().letter(0);
    LiePoly Y = f2.free_lie().letter(1);
    Series<Rat> conj =
        prodR({bf, exp_lie(f2, lp_scale(Y, b.lambda), N), s_inverse(bf)});
    r.f = s_mul(bf, subst_grouplike(a.f, f2,
                                    {lp_scale(X, b.lambda), s_lie_part(s_log(conj))}, N));
    return r;
}

// ----------------------------------------------------------- flatness

std::string FlatnessReport::render() const {
    std::ostringstream os;
    os << (flat ? "flat" : "not flat") << "\n";
    for (const auto& l : lines) os << l << "\n";
    return os.str();
}

FlatnessReport check_flatness(const FlatnessProblem& p) {
    if (p.n < 2) throw std::invalid_argument("at least two strands required");
    FamilySpec spec = p.framed ? FamilySpec::tf(p.n) : FamilySpec::t(p.n);
    FreeLie fl(family_alphabet(spec));
    fl.ensure_weight(2);
    const Alphabet& alpha = fl.alphabet();
    int F = alpha.size();

    // quadratic relation span: disjoint chords commute, and each chord
    // brackets to zero against the sum of its elbow partners (the diagonal
    // letters are the degenerate elbow case)
    std::vector<LiePoly> rels;
    auto support = [&](int k) {
        const Gen& g = alpha.gens[k];
        return std::set<int>{g.i, g.j};
    };
    for (int a = 0; a < F; ++a)
        for (int b = a + 1; b < F; ++b) {
            std::set<int> sa = support(a), sb = support(b);
            bool meet = false;
            for (int s : sa)
                if (sb.count(s)) meet = true;
            if (!meet) rels.push_back(fl.bracket(fl.letter(a), fl.letter(b)));
        }
    if (!p.drop_four_term) {
        auto chord = [&](int i, int k) { return fl.letter(alpha.find(Gen::tij(i, k))); };
        for (int a = 0; a < F; ++a) {
            const Gen& g = alpha.gens[a];
            for (int k = 1; k <= p.n; ++k) {
                if (k == g.i || k == g.j) continue;
                rels.push_back(fl.bracket(fl.letter(a), lp_add(chord(g.i, k), chord(g.j, k))));
            }
        }
    }

    // wedge coordinates and the triple-pole identities among them
    std::map<std::pair<int, int>, int> pid;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < F; ++a)
        for (int b = a + 1; b < F; ++b) {
            pid[{a, b}] = static_cast<int>(pairs.size());
            pairs.emplace_back(a, b);
        }
    RowSpace arnold;
    for (int i = 1; i <= p.n; ++i)
        for (int j = i + 1; j <= p.n; ++j)
            for (int k = j + 1; k <= p.n; ++k) {
                int fij = alpha.find(Gen::tij(i, j));
                int fik = alpha.find(Gen::tij(i, k));
                int fjk = alpha.find(Gen::tij(j, k));
                SRow v;
                v[pid.at({std::min(fij, fjk), std::max(fij, fjk)})] += 1;
                v[pid.at({std::min(fik, fjk), std::max(fik, fjk)})] -= 1;
                v[pid.at({std::min(fij, fik), std::max(fij, fik)})] -= 1;
                arnold.add(std::move(v));
            }

    RowSpace relspan;
    auto to_srow = [&](const LiePoly& q) {
        SRow r;
        for (const auto& [k, v] : q)
            if (v != 0) r[k.second] = v;
        return r;
    };
    for (const auto& q : rels) relspan.add(to_srow(q));

    // curvature coefficients, reduced first along the relation span and
    // then along the wedge identities
    std::map<int, SRow> rows_by_coord;  // weight-2 basis index -> row over pairs
    for (int pidx = 0; pidx < static_cast<int>(pairs.size()); ++pidx) {
        auto [a, b] = pairs[pidx];
        SRow col = relspan.reduce(to_srow(fl.bracket(fl.letter(a), fl.letter(b))));
        for (const auto& [coord, v] : col) rows_by_coord[coord][pidx] = v;
    }
    FlatnessReport rep;
    rep.flat = true;
    for (auto& [coord, row] : rows_by_coord) {
        SRow resid = arnold.reduce(row);
        if (resid.empty()) continue;
        rep.flat = false;
        for (const auto& [pidx, v] : resid) {
            auto [a, b] = pairs[pidx];
            std::ostringstream os;
            os << rat_str(v) << " * "
               << fl.render(LiePoly{{BKey{2, coord}, Rat(1)}}) << " @ ("
               << alpha.gens[a].name() << "," << alpha.gens[b].name() << ")";
            rep.lines.push_back(os.str());
        }
    }
    return rep;
}

}  // namespace assoc
