#include "words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace assoc {

// ---------------------------------------------------------------- objects

bool PaNode::operator==(const PaNode& o) const {
    return leaf == o.leaf && kids == o.kids;
}

PaNode pa_leaf(int label) {
    if (label < 1) throw std::invalid_argument("leaf labels start at 1");
    PaNode n;
    n.leaf = label;
    return n;
}

PaNode pa_pair(PaNode l, PaNode r) {
    PaNode n;
    n.kids.push_back(std::move(l));
    n.kids.push_back(std::move(r));
    return n;
}

PaNode pa_left_comb(int n) {
    if (n < 1) throw std::invalid_argument("objects need at least one strand");
    PaNode cur = pa_leaf(1);
    for (int i = 2; i <= n; ++i) cur = pa_pair(std::move(cur), pa_leaf(i));
    return cur;
}

namespace {

PaNode pa_parse_seq(const std::string& s, size_t& pos) {
    std::vector<PaNode> items;
    while (pos < s.size() && s[pos] != ')') {
        char ch = s[pos];
        if (ch == ' ') {
            ++pos;
        } else if (ch == '(') {
            ++pos;
            items.push_back(pa_parse_seq(s, pos));
            if (pos >= s.size() || s[pos] != ')')
                throw std::invalid_argument("unbalanced parenthesis in object");
            ++pos;
        } else if (ch >= '1' && ch <= '9') {
            items.push_back(pa_leaf(ch - '0'));
            ++pos;
        } else {
            throw std::invalid_argument(std::string("invalid character '") + ch +
                                        "' in object");
        }
    }
    if (items.empty()) throw std::invalid_argument("empty object group");
    PaNode cur = items[0];
    for (size_t i = 1; i < items.size(); ++i)
        cur = pa_pair(std::move(cur), std::move(items[i]));
    return cur;
}

void pa_collect(const PaNode& o, std::vector<int>& out) {
    if (o.is_leaf()) {
        out.push_back(o.leaf);
        return;
    }
    for (const auto& k : o.kids) pa_collect(k, out);
}

}  // namespace

PaNode pa_parse(const std::string& text) {
    size_t pos = 0;
    PaNode r = pa_parse_seq(text, pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters in object");
    return r;
}

std::string pa_render(const PaNode& o) {
    if (o.is_leaf()) return std::string(1, static_cast<char>('0' + o.leaf));
    std::string l = pa_render(o.kids[0]);
    std::string r = pa_render(o.kids[1]);
    if (!o.kids[0].is_leaf()) l = "(" + l + ")";
    if (!o.kids[1].is_leaf()) r = "(" + r + ")";
    return l + r;
}

std::vector<int> pa_leaves(const PaNode& o) {
    std::vector<int> out;
    pa_collect(o, out);
    return out;
}

// ---------------------------------------------------------------- letters

namespace {

struct KindInfo {
    const char* name;
    LK kind;
    bool indexed;
};

constexpr KindInfo kKinds[] = {
    {"Id", LK::Id, false}, {"Rt", LK::Rt, false}, {"R", LK::R, false},
    {"F", LK::F, false},   {"Phi", LK::Phi, false}, {"At", LK::At, true},
    {"Bt", LK::Bt, true},  {"A", LK::A, true},    {"B", LK::B, true},
};

const KindInfo& kind_info(LK k) {
    for (const auto& ki : kKinds)
        if (ki.kind == k) return ki;
    throw std::logic_error("unknown letter kind");
}

std::vector<std::vector<int>> parse_groups(const std::string& pattern) {
    std::vector<std::vector<int>> groups;
    std::vector<int> cur;
    bool saw_zero = false;
    auto flush = [&]() {
        if (saw_zero && !cur.empty())
            throw std::invalid_argument("0 must stand alone in a superscript group");
        groups.push_back(cur);
        cur.clear();
        saw_zero = false;
    };
    for (char ch : pattern) {
        if (ch == '(' || ch == ')' || ch == ' ') continue;
        if (ch == ',') {
            flush();
        } else if (ch == '0') {
            saw_zero = true;
        } else if (ch >= '1' && ch <= '9') {
            cur.push_back(ch - '0');
        } else {
            throw std::invalid_argument("invalid character in superscript");
        }
    }
    flush();
    std::vector<int> seen;
    for (const auto& g : groups)
        for (int p : g) seen.push_back(p);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("strand repeated in superscript");
    return groups;
}

}  // namespace

int Letter::arity() const { return kind == LK::Phi ? 3 : 2; }

std::string Letter::pattern() const {
    std::string out;
    for (size_t i = 0; i < groups.size(); ++i) {
        if (i) out += ',';
        if (groups[i].empty())
            out += '0';
        else
            for (int p : groups[i]) out += static_cast<char>('0' + p);
    }
    return out;
}

std::string Letter::render() const {
    std::string out = kind_info(kind).name;
    if (idx > 0) out += std::to_string(idx);
    out += "^{" + pattern() + "}";
    if (exp < 0) out += "!";
    return out;
}

Letter make_letter(LK kind, const std::string& pattern, int exp, int idx) {
    Letter L;
    L.kind = kind;
    L.exp = exp;
    L.idx = idx;
    L.groups = parse_groups(pattern);
    if (exp != 1 && exp != -1) throw std::invalid_argument("letter exponent must be +-1");
    if (kind_info(kind).indexed) {
        if (idx < 1) throw std::invalid_argument("genus letters need a handle index");
    } else if (idx != 0) {
        throw std::invalid_argument("only genus letters carry a handle index");
    }
    if (static_cast<int>(L.groups.size()) > L.arity())
        throw std::invalid_argument("too many superscript groups for letter");
    return L;
}

Letter letter_parse(const std::string& text) {
    std::string s = text;
    int exp = 1;
    if (!s.empty() && s.back() == '!') {
        exp = -1;
        s.pop_back();
    }
    std::string name = s, pattern;
    bool had_pattern = false;
    if (auto caret = s.find('^'); caret != std::string::npos) {
        name = s.substr(0, caret);
        std::string rest = s.substr(caret + 1);
        if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
            throw std::invalid_argument("superscript must be braced: " + text);
        pattern = rest.substr(1, rest.size() - 2);
        had_pattern = true;
    }
    const KindInfo* info = nullptr;
    std::string digits;
    for (const auto& ki : kKinds) {
        std::string kn = ki.name;
        if (name.rfind(kn, 0) == 0) {
            std::string tail = name.substr(kn.size());
            if (std::all_of(tail.begin(), tail.end(),
                            [](char c) { return c >= '0' && c <= '9'; })) {
                info = &ki;
                digits = tail;
                break;
            }
        }
    }
    if (!info) throw std::invalid_argument("unknown letter: " + text);
    int idx = 0;
    if (info->indexed) {
        if (digits.empty())
            throw std::invalid_argument("genus letter needs a handle index: " + text);
        idx = std::stoi(digits);
    } else if (!digits.empty()) {
        throw std::invalid_argument("letter takes no index: " + text);
    }
    if (!had_pattern) pattern = info->kind == LK::Phi ? "1,2,3" : (info->kind == LK::Id ? "1" : "1,2");
    return make_letter(info->kind, pattern, exp, idx);
}

// ---------------------------------------------------------------- endpoints

namespace {

std::vector<int> flat(const std::vector<std::vector<int>>& groups) {
    std::vector<int> out;
    for (const auto& g : groups)
        for (int p : g) out.push_back(p);
    return out;
}

bool subtree_present(const PaNode& o, const std::vector<int>& seq) {
    if (pa_leaves(o) == seq) return true;
    if (o.is_leaf()) return false;
    return subtree_present(o.kids[0], seq) || subtree_present(o.kids[1], seq);
}

// rewrite the unique node whose two children carry leaf sequences (p, q)
std::optional<PaNode> rewrite_pair(const PaNode& o, const std::vector<int>& p,
                                   const std::vector<int>& q, bool swap) {
    if (!o.is_leaf()) {
        if (pa_leaves(o.kids[0]) == p && pa_leaves(o.kids[1]) == q) {
            PaNode r = o;
            if (swap) std::swap(r.kids[0], r.kids[1]);
            return r;
        }
        for (int side = 0; side < 2; ++side)
            if (auto sub = rewrite_pair(o.kids[side], p, q, swap)) {
                PaNode r = o;
                r.kids[side] = *sub;
                return r;
            }
    }
    return std::nullopt;
}

// ((P Q) S) -> (P (Q S)) when fwd, the reverse otherwise
std::optional<PaNode> rewrite_assoc(const PaNode& o, const std::vector<int>& p,
                                    const std::vector<int>& q, const std::vector<int>& s,
                                    bool fwd) {
    if (!o.is_leaf()) {
        const PaNode& inner = fwd ? o.kids[0] : o.kids[1];
        const PaNode& outer = fwd ? o.kids[1] : o.kids[0];
        if (!inner.is_leaf()) {
            bool match = fwd ? (pa_leaves(inner.kids[0]) == p &&
                                pa_leaves(inner.kids[1]) == q && pa_leaves(outer) == s)
                             : (pa_leaves(outer) == p && pa_leaves(inner.kids[0]) == q &&
                                pa_leaves(inner.kids[1]) == s);
            if (match) {
                if (fwd)
                    return pa_pair(inner.kids[0], pa_pair(inner.kids[1], o.kids[1]));
                return pa_pair(pa_pair(o.kids[0], inner.kids[0]), inner.kids[1]);
            }
        }
        for (int side = 0; side < 2; ++side)
            if (auto sub = rewrite_assoc(o.kids[side], p, q, s, fwd)) {
                PaNode r = o;
                r.kids[side] = *sub;
                return r;
            }
    }
    return std::nullopt;
}

}  // namespace

std::optional<PaNode> letter_apply(const PaNode& obj, const Letter& L) {
    std::vector<std::vector<int>> blocks;
    for (const auto& g : L.groups)
        if (!g.empty()) blocks.push_back(g);
    // degenerate and single-group letters never move strands; they only
    // require their support to form a subtree of the object
    bool degenerate = blocks.size() < L.groups.size() || blocks.size() < 2;
    if (degenerate) {
        std::vector<int> seq = flat(blocks);
        if (seq.empty()) return obj;
        if (subtree_present(obj, seq)) return obj;
        return std::nullopt;
    }
    switch (L.kind) {
        case LK::Id:
        case LK::F:
        case LK::A:
        case LK::B:
        case LK::At:
        case LK::Bt:
            if (blocks.size() != 2) return std::nullopt;
            return rewrite_pair(obj, blocks[0], blocks[1], false);
        case LK::R:
        case LK::Rt:
            if (blocks.size() != 2) return std::nullopt;
            if (L.exp > 0) return rewrite_pair(obj, blocks[0], blocks[1], true);
            return rewrite_pair(obj, blocks[1], blocks[0], true);
        case LK::Phi:
            if (blocks.size() != 3) return std::nullopt;
            return rewrite_assoc(obj, blocks[0], blocks[1], blocks[2], L.exp > 0);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- words

BraidMorphism BraidMorphism::make(int n, const PaNode& source, std::vector<Letter> word) {
    std::vector<int> labels = pa_leaves(source);
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (i >= static_cast<int>(sorted.size()) || sorted[i] != i + 1)
            throw std::invalid_argument("source labels must be a permutation of 1..n");
    if (static_cast<int>(sorted.size()) != n)
        throw std::invalid_argument("source has the wrong number of strands");
    BraidMorphism m;
    m.n = n;
    m.source = source;
    PaNode cur = source;
    for (const auto& L : word) {
        auto nxt = letter_apply(cur, L);
        if (!nxt)
            throw std::invalid_argument("letter " + L.render() + " does not apply to " +
                                        pa_render(cur));
        cur = *nxt;
    }
    m.target = cur;
    m.word = std::move(word);
    return m;
}

BraidMorphism BraidMorphism::inverse() const {
    return make(n, target, word_inverse(word));
}

std::string BraidMorphism::render() const {
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += word[i].render();
    }
    return out;
}

std::vector<Letter> word_inverse(const std::vector<Letter>& w) {
    std::vector<Letter> out(w.rbegin(), w.rend());
    for (auto& L : out) L.exp = -L.exp;
    return out;
}

std::vector<Letter> word_concat(std::vector<Letter> a, const std::vector<Letter>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<Letter> word_commutator(const std::vector<Letter>& u,
                                    const std::vector<Letter>& v) {
    return word_concat(word_concat(u, v), word_concat(word_inverse(u), word_inverse(v)));
}

BraidMorphism word_parse(int n, const PaNode& source, const std::string& text) {
    std::vector<Letter> word;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) word.push_back(letter_parse(tok));
    return BraidMorphism::make(n, source, std::move(word));
}

// ---------------------------------------------------------------- framed braids

FramedBraid FramedBraid::id(int n) {
    FramedBraid b;
    b.n = n;
    b.framing.assign(n, 0);
    b.perm.resize(n);
    for (int i = 0; i < n; ++i) b.perm[i] = i + 1;
    return b;
}

FramedBraid FramedBraid::make(int n, std::vector<long> framing, std::vector<int> artin) {
    if (static_cast<int>(framing.size()) != n)
        throw std::invalid_argument("framing vector must have one entry per strand");
    FramedBraid b = id(n);
    b.framing = std::move(framing);
    for (int k : artin) {
        int a = std::abs(k);
        if (a < 1 || a >= n) throw std::invalid_argument("crossing index out of range");
        for (int i = 0; i < n; ++i) {
            if (b.perm[i] == a)
                b.perm[i] = a + 1;
            else if (b.perm[i] == a + 1)
                b.perm[i] = a;
        }
    }
    b.artin = std::move(artin);
    return b;
}

FramedBraid FramedBraid::inverse() const {
    FramedBraid r;
    r.n = n;
    r.artin.assign(artin.rbegin(), artin.rend());
    for (auto& k : r.artin) k = -k;
    r.perm.resize(n);
    r.framing.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        r.perm[perm[i] - 1] = i + 1;
        r.framing[perm[i] - 1] = -framing[i];
    }
    return r;
}

FramedBraid framed_mul(const FramedBraid& a, const FramedBraid& b) {
    if (a.n != b.n) throw std::invalid_argument("braid sizes differ");
    FramedBraid r;
    r.n = a.n;
    r.artin = a.artin;
    r.artin.insert(r.artin.end(), b.artin.begin(), b.artin.end());
    r.perm.resize(a.n);
    r.framing.resize(a.n);
    for (int i = 0; i < a.n; ++i) {
        r.perm[i] = b.perm[a.perm[i] - 1];
        r.framing[i] = a.framing[i] + b.framing[a.perm[i] - 1];
    }
    return r;
}

// ---------------------------------------------------------------- data

AssociatorCandidate AssociatorCandidate::trivial(const Rat& mu, int N) {
    AssociatorCandidate c;
    c.mu = mu;
    c.N = N;
    c.f2 = std::make_shared<GradedQuotient>(FamilySpec::f2());
    c.f2->ensure_weight(N);
    c.phi = Series<Rat>::unit(c.f2.get(), N);
    return c;
}

GenusData GenusData::trivial(int g, int N) {
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
    GenusData d;
    d.g = g;
    d.N = N;
    d.base = std::make_shared<GradedQuotient>(FamilySpec::tfg(g, 2));
    d.base->ensure_weight(N);
    const Alphabet& alpha = d.base->free_lie().alphabet();
    for (int a = 1; a <= g; ++a) {
        LiePoly x = d.base->free_lie().letter(alpha.find(Gen::xg(1, a)));
        LiePoly y = d.base->free_lie().letter(alpha.find(Gen::yg(1, a)));
        d.A_plus.push_back(s_exp<Rat>(d.base.get(), x, N));
        d.A_minus.push_back(s_exp<Rat>(d.base.get(), y, N));
    }
    return d;
}

GradedQuotient& AlgebraPool::get(const FamilySpec& spec) {
    for (auto& [s, q] : pool_)
        if (s == spec) return *q;
    pool_.emplace_back(spec, std::make_unique<GradedQuotient>(spec));
    return *pool_.back().second;
}

FamilySpec EvalTarget::family(int strands) const {
    if (genus > 0) return framed ? FamilySpec::tfg(genus, strands) : FamilySpec::tg(genus, strands);
    return framed ? FamilySpec::tf(strands) : FamilySpec::t(strands);
}

// ---------------------------------------------------------------- evaluator

WordEvaluator::WordEvaluator(AlgebraPool& pool, AssociatorCandidate assoc,
                             EvalTarget target, int N, const GenusData* genus)
    : pool_(pool), assoc_(std::move(assoc)), target_(target), N_(N) {
    if (N_ < 1) throw std::invalid_argument("truncation order must be positive");
    if (assoc_.N < N_) throw std::invalid_argument("associator data truncated below N");
    if (genus) {
        if (genus->N < N_) throw std::invalid_argument("genus data truncated below N");
        if (static_cast<int>(genus->A_plus.size()) != genus->g ||
            static_cast<int>(genus->A_minus.size()) != genus->g)
            throw std::invalid_argument("genus data needs one series pair per handle");
        genus_ = *genus;
        has_genus_ = true;
        if (target_.genus > 0 && target_.genus != genus_.g)
            throw std::invalid_argument("genus of data and target disagree");
    }
}

GradedQuotient& WordEvaluator::algebra(int n) { return pool_.get(target_.family(n)); }

namespace {

LiePoly letter_of(GradedQuotient& q, const Gen& g) {
    int i = q.free_lie().alphabet().find(g);
    if (i < 0)
        throw std::invalid_argument("target family lacks generator " + g.name());
    return q.free_lie().letter(i);
}

}  // namespace

Series<Rat> WordEvaluator::base_image(LK kind, int idx) {
    std::string key = "base:" + std::string(kind_info(kind).name) + std::to_string(idx);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Series<Rat> img;
    const Rat half = assoc_.mu / Rat(2);
    switch (kind) {
        case LK::R:
        case LK::Rt: {
            GradedQuotient& q2 = algebra(2);
            LiePoly t = lp_scale(letter_of(q2, Gen::tij(1, 2)), kind == LK::R ? half : -half);
            img = s_exp<Rat>(&q2, t, N_);
            break;
        }
        case LK::F: {
            if (!target_.framed)
                throw std::invalid_argument("framing letter needs a framed target");
            GradedQuotient& q2 = algebra(2);
            img = s_exp<Rat>(&q2, lp_scale(letter_of(q2, Gen::tii(1)), half), N_);
            break;
        }
        case LK::Phi: {
            GradedQuotient& q3 = algebra(3);
            std::vector<LiePoly> images = {letter_of(q3, Gen::tij(1, 2)),
                                           letter_of(q3, Gen::tij(2, 3))};
            img = map_grouplike(s_truncate(assoc_.phi, N_), q3, images, N_);
            break;
        }
        case LK::A:
        case LK::B: {
            if (!has_genus_) throw std::invalid_argument("genus letters need genus data");
            if (idx < 1 || idx > genus_.g)
                throw std::invalid_argument("handle index out of range");
            GradedQuotient& src = *genus_.base;
            Series<Rat> framed = s_truncate(
                kind == LK::A ? genus_.A_plus[idx - 1] : genus_.A_minus[idx - 1], N_);
            if (target_.framed) {
                img = framed;
            } else {
                // strip framings: chords keep their names, self-chords die
                GradedQuotient& dst = pool_.get(FamilySpec::tg(genus_.g, 2));
                const Alphabet& alpha = src.free_lie().alphabet();
                std::vector<LiePoly> images;
                for (int i = 0; i < alpha.size(); ++i) {
                    const Gen& gn = alpha.gens[i];
                    images.push_back(gn.kind == GenKind::TII ? LiePoly{}
                                                             : letter_of(dst, gn));
                }
                img = map_grouplike(framed, dst, images, N_);
            }
            break;
        }
        default:
            throw std::logic_error("letter kind has no stored image");
    }
    cache_.emplace(key, img);
    return img;
}

Series<Rat> WordEvaluator::letter_image(const Letter& L, int n) {
    std::string key = L.render() + "@" + std::to_string(n);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    GradedQuotient& q = algebra(n);
    q.ensure_weight(N_);
    Series<Rat> img;
    if (L.kind == LK::Id) {
        img = Series<Rat>::unit(&q, N_);
    } else if (L.kind == LK::At || L.kind == LK::Bt) {
        // transported handle letters: r^-1 z^-1 r for r the braiding of the
        // two blocks and z the bare letter on the swapped blocks.  A single
        // superscript group here abbreviates the second slot, so missing
        // groups pad at the front (At^{12} = At^{0,12}), unlike plain letters
        // which pad at the back.
        std::vector<std::vector<int>> gs = L.groups;
        while (gs.size() < 2) gs.insert(gs.begin(), std::vector<int>{});
        Letter r;
        r.kind = LK::R;
        r.groups = gs;
        Letter z;
        z.kind = L.kind == LK::At ? LK::A : LK::B;
        z.idx = L.idx;
        z.groups = {gs[1], gs[0]};
        Series<Rat> ri = letter_image(r, n);
        Series<Rat> zi = letter_image(z, n);
        img = s_mul(s_mul(s_inverse(ri), s_inverse(zi)), ri);
        if (L.exp < 0) img = s_inverse(img);
    } else {
        Series<Rat> base = base_image(L.kind, L.idx);
        StrandAssignment sa;
        sa.n = L.arity();
        sa.m = n;
        sa.embedding = true;
        sa.sets = L.groups;
        sa.sets.resize(sa.n);
        for (auto& s : sa.sets) std::sort(s.begin(), s.end());
        sa.validate();
        img = cable_series(base, q, sa);
        if (L.exp < 0) img = s_inverse(img);
    }
    cache_.emplace(key, img);
    return img;
}

Series<Rat> WordEvaluator::eval_word(const std::vector<Letter>& word, int n) {
    GradedQuotient& q = algebra(n);
    q.ensure_weight(N_);
    Series<Rat> acc = Series<Rat>::unit(&q, N_);
    for (const auto& L : word) acc = s_mul(letter_image(L, n), acc);
    return acc;
}

Series<Rat> WordEvaluator::eval(const BraidMorphism& w) { return eval_word(w.word, w.n); }

// ---------------------------------------------------------------- catalogs

namespace {

std::vector<Letter> W(const std::string& text) {
    std::vector<Letter> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) out.push_back(letter_parse(tok));
    return out;
}

std::vector<Letter> repeated(const std::vector<Letter>& w, int k) {
    std::vector<Letter> out;
    for (int i = 0; i < k; ++i) out = word_concat(std::move(out), w);
    return out;
}

Relation make_relation(const std::string& name, int n, const std::string& src,
                       std::vector<Letter> lhs, std::vector<Letter> rhs) {
    PaNode s = pa_parse(src);
    Relation r;
    r.name = name;
    r.lhs = BraidMorphism::make(n, s, std::move(lhs));
    r.rhs = BraidMorphism::make(n, s, std::move(rhs));
    if (!(r.lhs.target == r.rhs.target))
        throw std::logic_error("relation " + name + " has mismatched endpoints");
    return r;
}

std::string zname(LK z, int a) {
    return std::string(kind_info(z).name) + std::to_string(a);
}

Catalog catalog_pabf() {
    Catalog c;
    c.name = "PaBf";
    c.target = {true, 0};
    c.words.push_back(make_relation("R1", 1, "1", W("F^{0,1}"), {}));
    c.words.push_back(make_relation("R2a", 2, "12", W("Phi^{0,1,2}"), {}));
    c.words.push_back(make_relation("R2b", 2, "12", W("Phi^{1,0,2}"), {}));
    c.words.push_back(make_relation("R2c", 2, "12", W("Phi^{1,2,0}"), {}));
    c.words.push_back(make_relation("F", 2, "12",
                                    W("F^{1,2} R^{1,2} F^{2,1} R^{2,1}"), W("F^{12}")));
    c.words.push_back(make_relation("H1", 3, "(12)3", W("R^{1,2} Phi^{2,1,3} R^{1,3}"),
                                    W("Phi^{1,2,3} R^{1,23} Phi^{2,3,1}")));
    c.words.push_back(make_relation("H2", 3, "(12)3", W("Rt^{1,2} Phi^{2,1,3} Rt^{1,3}"),
                                    W("Phi^{1,2,3} Rt^{1,23} Phi^{2,3,1}")));
    c.words.push_back(make_relation("P", 4, "((12)3)4", W("Phi^{12,3,4} Phi^{1,2,34}"),
                                    W("Phi^{1,2,3} Phi^{1,23,4} Phi^{2,3,4}")));
    return c;
}

Catalog catalog_pabf_g(int g) {
    Catalog c;
    c.name = "PaBf_g";
    c.target = {true, g};
    for (LK z : {LK::A, LK::B})
        for (int a = 1; a <= g; ++a) {
            std::string za = zname(z, a);
            c.words.push_back(
                make_relation("Rg." + za, 1, "1", W(za + "^{0,1}"), {}));
            c.words.push_back(make_relation(
                "Dg." + za, 3, "(12)3", W(za + "^{123}"),
                W("Phi^{1,2,3} " + za + "^{1,23} R^{1,23} Phi^{2,3,1} " + za +
                  "^{2,31} R^{2,31} Phi^{3,1,2} " + za + "^{3,12} R^{3,12}")));
        }
    for (LK z : {LK::A, LK::B})
        for (int a = 1; a <= g; ++a)
            for (int b = a + 1; b <= g; ++b) {
                std::string za = zname(z, a), zb = zname(z, b);
                c.words.push_back(make_relation(
                    "Ng." + std::string(kind_info(z).name) + std::to_string(a) +
                        std::to_string(b),
                    3, "(12)3", {},
                    word_commutator(W("Phi^{1,2,3} " + zb + "^{1,23} Phi^{1,2,3}!"),
                                    W("R^{1,2} Phi^{2,1,3} " + za +
                                      "^{2,13} Phi^{2,1,3}! R^{2,1}"))));
            }
    for (int a = 1; a <= g; ++a)
        c.words.push_back(make_relation(
            "E1g." + std::to_string(a), 3, "(12)3", W("R^{1,2} R^{2,1}"),
            word_commutator(
                W("R^{1,2} Phi^{2,1,3} A" + std::to_string(a) + "^{2,13} Phi^{2,1,3}! R^{2,1}"),
                W("Phi^{1,2,3} B" + std::to_string(a) + "^{1,23} Phi^{1,2,3}!"))));
    {
        std::vector<Letter> rhs;
        for (int a = 1; a <= g; ++a)
            rhs = word_concat(std::move(rhs),
                              word_commutator(W("A" + std::to_string(a) + "^{1,2}!"),
                                              W("B" + std::to_string(a) + "^{1,2}")));
        c.words.push_back(make_relation(
            "E2g", 2, "12",
            word_concat(W("R^{1,2} R^{2,1}"), repeated(W("F^{1,2}"), 2 * (g - 1))),
            rhs));
    }
    return c;
}

Catalog catalog_pabf_g_bis(int g) {
    Catalog c;
    c.name = "PaBf_g_bis";
    c.target = {true, g};
    for (LK z : {LK::At, LK::Bt})
        for (int a = 1; a <= g; ++a) {
            std::string za = zname(z, a);
            c.words.push_back(
                make_relation("gRbis." + za, 1, "1", W(za + "^{1,0}"), {}));
            c.words.push_back(make_relation(
                "gDbis." + za, 3, "(12)3", W(za + "^{123} " + za + "^{12,3}"),
                W("Phi^{1,2,3} " + za + "^{1,23} Phi^{1,2,3}! R^{2,1}! Phi^{2,1,3} " +
                  za + "^{2,13} Phi^{2,1,3}! R^{1,2}!")));
        }
    for (LK z : {LK::At, LK::Bt})
        for (int a = 1; a <= g; ++a)
            for (int b = a + 1; b <= g; ++b) {
                std::string za = zname(z, a), zb = zname(z, b);
                c.words.push_back(make_relation(
                    "gNbis." + std::string(kind_info(z).name) + std::to_string(a) +
                        std::to_string(b),
                    3, "(12)3", {},
                    word_commutator(W(za + "^{12,3}"),
                                    W(zb + "^{12,3}! Phi^{1,2,3} " + zb +
                                      "^{1,23} R^{2,3} R^{3,2} Phi^{1,2,3}!"))));
            }
    for (int a = 1; a <= g; ++a)
        c.words.push_back(make_relation(
            "gE1bis." + std::to_string(a), 3, "(12)3",
            W("Phi^{1,2,3} R^{2,3} R^{3,2} Phi^{1,2,3}!"),
            word_commutator(W("At" + std::to_string(a) + "^{12,3}!"),
                            W("Bt" + std::to_string(a) + "^{12,3} Phi^{1,2,3} Bt" +
                              std::to_string(a) + "^{1,23}! Phi^{1,2,3}!"))));
    {
        std::vector<Letter> rhs;
        for (int a = 1; a <= g; ++a)
            rhs = word_concat(std::move(rhs),
                              word_commutator(W("At" + std::to_string(a) + "^{1,2}"),
                                              W("Bt" + std::to_string(a) + "^{1,2}!")));
        c.words.push_back(make_relation(
            "gE2bis", 2, "12",
            word_concat(W("R^{1,2} R^{2,1}"), repeated(W("F^{1,2}"), 2 * (g - 1))),
            rhs));
    }
    return c;
}

Catalog catalog_pab_1() {
    Catalog c;
    c.name = "PaB_1";
    c.target = {false, 1};
    for (LK z : {LK::A, LK::B}) {
        std::string za = zname(z, 1);
        c.words.push_back(make_relation("P1.0" + std::string(kind_info(z).name), 1, "1",
                                        W(za + "^{0,1}"), {}));
        c.words.push_back(make_relation(
            "P1.D" + std::string(kind_info(z).name), 3, "(12)3", W(za + "^{123}"),
            W("Phi^{1,2,3} " + za + "^{1,23} R^{1,23} Phi^{2,3,1} " + za +
              "^{2,31} R^{2,31} Phi^{3,1,2} " + za + "^{3,12} R^{3,12}")));
    }
    c.words.push_back(make_relation(
        "P1.3", 3, "(12)3", W("R^{1,2} R^{2,1}"),
        word_commutator(W("R^{1,2} Phi^{2,1,3} A1^{2,13} Phi^{2,1,3}! R^{2,1}"),
                        W("Phi^{1,2,3} B1^{1,23} Phi^{1,2,3}!"))));
    c.words.push_back(make_relation("P1.4", 2, "12", W("R^{1,2} R^{2,1}"),
                                    word_commutator(W("A1^{1,2}!"), W("B1^{1,2}"))));
    return c;
}

Catalog catalog_le1(int g) {
    Catalog c;
    c.name = "LE1";
    c.target = {true, g};
    for (LK z : {LK::A, LK::B})
        for (int a = 1; a <= g; ++a) {
            std::string za = zname(z, a);
            c.words.push_back(make_relation(
                "LE1." + za, 3, "(12)3", W(za + "^{12,3}"),
                W("Phi^{1,2,3} " + za + "^{1,23} Phi^{1,2,3}! R^{1,2} Phi^{2,1,3} " +
                  za + "^{2,13} Phi^{2,1,3}! R^{2,1}")));
        }
    return c;
}

Catalog catalog_gt_g(int g) {
    Catalog c;
    c.name = "GT_g";
    c.target = {true, g};
    const std::string u = "f(T1^2,T2^2)^{-1} T1^L f(T1^2,T2^2)";
    c.symbolic.push_back({"GTg.0", "g_a^{0,1} ; h_a^{0,1}", "1"});
    c.symbolic.push_back(
        {"GTg.1",
         "( f(T1^2,T2^2) g_a^{1,2} (T1 T2^2 T1)^{(L-1)/2} T2 T1 )^3",
         "g_a^{(12)3}"});
    c.symbolic.push_back(
        {"GTg.2",
         "( f(T1^2,T2^2) h_a^{1,2} (T1 T2^2 T1)^{(L-1)/2} T2 T1 )^3",
         "h_a^{(12)3}"});
    c.symbolic.push_back({"GTg.3", "u^2 with u = " + u,
                          "( u g_a^{1,2} u , h_a^{1,2} )"});
    c.symbolic.push_back({"GTg.N", "1",
                          "( z_a , u w_b u ) for z,w in {g,h} and a < b, u = " + u});
    c.symbolic.push_back({"GTg.4", "T1^{2L} f_1^{2L(g-1)}",
                          "prod_{a=1..g} ( (g_a^{1,2})^{-1} , h_a^{1,2} )"});
    return c;
}

}  // namespace

Catalog relation_words(const std::string& id, int genus) {
    if (id == "PaBf") return catalog_pabf();
    if (id == "PaB_1") return catalog_pab_1();
    if (id == "PaBf_g" || id == "PaBf_g_bis" || id == "LE1" || id == "GT_g") {
        if (genus < 1) throw std::invalid_argument("catalog " + id + " needs a genus >= 1");
        if (id == "PaBf_g") return catalog_pabf_g(genus);
        if (id == "PaBf_g_bis") return catalog_pabf_g_bis(genus);
        if (id == "LE1") return catalog_le1(genus);
        return catalog_gt_g(genus);
    }
    throw std::invalid_argument("unknown catalog: " + id);
}

// ---------------------------------------------------------------- pure braids

BraidMorphism pure_braid_word(int i, int j, int n) {
    if (n < 2 || n > 4) throw std::invalid_argument("pure braid words cover 2 to 4 strands");
    if (i < 1 || j <= i || j > n) throw std::invalid_argument("need 1 <= i < j <= n");
    auto key = [&](int a, int b) { return a * 10 + b; };
    std::string conj;
    switch (key(i, j)) {
        case 12: conj = ""; break;
        case 23: conj = "Phi^{1,2,3}"; break;
        case 13: conj = "Phi^{1,2,3} R^{2,3} Phi^{1,3,2}!"; break;
        case 34: conj = "Phi^{12,3,4}"; break;
        case 24: conj = "Phi^{12,3,4} R^{3,4} Phi^{12,4,3}! Phi^{1,2,4}"; break;
        case 14: conj = "R^{123,4} Phi^{4,12,3}! Phi^{4,1,2}! R^{4,1}"; break;
        default: throw std::invalid_argument("unsupported strand pair");
    }
    if ((j == 3 && n < 3) || (j == 4 && n < 4))
        throw std::invalid_argument("strand pair exceeds braid size");
    std::vector<Letter> c = W(conj);
    std::string ij = std::to_string(i) + "," + std::to_string(j);
    std::string ji = std::to_string(j) + "," + std::to_string(i);
    std::vector<Letter> w = word_concat(
        c, word_concat(W("R^{" + ij + "} R^{" + ji + "}"), word_inverse(c)));
    BraidMorphism m = BraidMorphism::make(n, pa_left_comb(n), std::move(w));
    if (!(m.target == m.source)) throw std::logic_error("pure braid word is not pure");
    return m;
}

}  // namespace assoc
