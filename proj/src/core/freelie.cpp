#include "freelie.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace assoc {

LiePoly lp_add(const LiePoly& a, const LiePoly& b) {
    LiePoly r = a;
    for (const auto& [k, c] : b) {
        Rat& v = r[k];
        v += c;
        if (v == 0) r.erase(k);
    }
    return r;
}

LiePoly lp_sub(const LiePoly& a, const LiePoly& b) {
    LiePoly r = a;
    for (const auto& [k, c] : b) {
        Rat& v = r[k];
        v -= c;
        if (v == 0) r.erase(k);
    }
    return r;
}

LiePoly lp_scale(const LiePoly& a, const Rat& c) {
    LiePoly r;
    if (c == 0) return r;
    for (const auto& [k, v] : a) r[k] = v * c;
    return r;
}

bool lp_is_zero(const LiePoly& a) { return a.empty(); }

FreeLie::FreeLie(Alphabet alphabet) : alpha_(std::move(alphabet)) {
    by_weight_.resize(1);
}

int FreeLie::word_weight(const Word& w) const {
    int s = 0;
    for (int l : w) s += alpha_.weight(l);
    return s;
}

bool FreeLie::is_lyndon(const Word& w) const {
    if (w.empty()) return false;
    const int n = static_cast<int>(w.size());
    for (int s = 1; s < n; ++s) {
        Word rot(w.begin() + s, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + s);
        if (!(w < rot)) return false;
    }
    return true;
}

void FreeLie::ensure_weight(int d) {
    if (d <= max_weight_) return;
    // Duval's generation of all Lyndon words of length <= d in lex order,
    // filtered by total weight. Letter weights are >= 1 so length <= weight.
    std::vector<std::vector<Word>> table(d + 1);
    const int k = alpha_.size();
    if (k > 0) {
        Word w{0};
        while (true) {
            int wt = word_weight(w);
            if (wt <= d) table[wt].push_back(w);
            // extend periodically to length d, then increment the last letter
            Word t;
            t.reserve(d);
            for (int i = 0; i < d; ++i) t.push_back(w[i % w.size()]);
            while (!t.empty() && t.back() == k - 1) t.pop_back();
            if (t.empty()) break;
            ++t.back();
            w = std::move(t);
        }
    }
    for (auto& v : table) std::sort(v.begin(), v.end());
    by_weight_ = std::move(table);
    max_weight_ = d;
    index_.clear();
    for (int wt = 0; wt <= d; ++wt)
        for (int i = 0; i < static_cast<int>(by_weight_[wt].size()); ++i)
            index_[by_weight_[wt][i]] = {wt, i};
}

int FreeLie::dim(int weight) const {
    if (weight < 0 || weight > max_weight_) throw std::out_of_range("weight beyond computed bound");
    return static_cast<int>(by_weight_[weight].size());
}

const std::vector<Word>& FreeLie::basis_words(int weight) const {
    if (weight < 0 || weight > max_weight_) throw std::out_of_range("weight beyond computed bound");
    return by_weight_[weight];
}

BKey FreeLie::key_of(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("not a Lyndon basis word of this algebra");
    return it->second;
}

std::pair<Word, Word> FreeLie::std_factorization(const Word& w) const {
    if (w.size() < 2) throw std::invalid_argument("letters have no factorization");
    // Longest proper Lyndon suffix = lexicographically least proper suffix.
    // Proper suffixes of one word are pairwise distinct, so the argmin is unique.
    int best = 1;
    const int n = static_cast<int>(w.size());
    for (int s = 2; s < n; ++s) {
        if (std::lexicographical_compare(w.begin() + s, w.end(), w.begin() + best, w.end()))
            best = s;
    }
    return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
}

LiePoly FreeLie::letter(int letter_index) const {
    Word w{letter_index};
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("letter table not built; call ensure_weight");
    LiePoly p;
    p[it->second] = 1;
    return p;
}

const LiePoly& FreeLie::bracket_basis(BKey a, BKey b) {
    static const LiePoly kZero;
    // Beyond-truncation products vanish; not memoized so that a later
    // ensure_weight keeps every cached entry valid.
    if (a.first + b.first > max_weight_) return kZero;

    auto memo = bracket_memo_.find({a, b});
    if (memo != bracket_memo_.end()) return memo->second;

    LiePoly result;
    const Word& u = word_of(a);
    const Word& v = word_of(b);
    if (u == v) {
        // zero
    } else if (v < u) {
        result = lp_scale(bracket_basis(b, a), Rat(-1));
    } else {
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        auto fact = std_factorization(uv);
        if (fact.first == u && fact.second == v) {
            result[key_of(uv)] = 1;
        } else {
            // u is not a letter here; split by its own standard factorization
            // and use [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]].
            auto uf = std_factorization(u);
            BKey u1 = key_of(uf.first), u2 = key_of(uf.second);
            LiePoly inner1 = bracket_basis(u2, b);
            LiePoly inner2 = bracket_basis(u1, b);
            LiePoly p1, p2;
            for (const auto& [k, c] : inner1) p1 = lp_add(p1, lp_scale(bracket_basis(u1, k), c));
            for (const auto& [k, c] : inner2) p2 = lp_add(p2, lp_scale(bracket_basis(u2, k), c));
            result = lp_sub(p1, p2);
        }
    }
    auto [it, ok] = bracket_memo_.emplace(std::make_pair(a, b), std::move(result));
    (void)ok;
    return it->second;
}

LiePoly FreeLie::bracket(const LiePoly& a, const LiePoly& b) {
    LiePoly r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            if (ka.first + kb.first > max_weight_) continue;
            r = lp_add(r, lp_scale(bracket_basis(ka, kb), ca * cb));
        }
    return r;
}

std::map<Word, Rat> FreeLie::tensor_expand(BKey k) {
    auto memo = tensor_memo_.find(k);
    if (memo != tensor_memo_.end()) return memo->second;
    std::map<Word, Rat> r;
    const Word& w = word_of(k);
    if (w.size() == 1) {
        r[w] = 1;
    } else {
        auto fact = std_factorization(w);
        auto eu = tensor_expand(key_of(fact.first));
        auto ev = tensor_expand(key_of(fact.second));
        for (const auto& [wu, cu] : eu)
            for (const auto& [wv, cv] : ev) {
                Word uv = wu;
                uv.insert(uv.end(), wv.begin(), wv.end());
                Word vu = wv;
                vu.insert(vu.end(), wu.begin(), wu.end());
                Rat c = cu * cv;
                auto& x = r[uv];
                x += c;
                if (x == 0) r.erase(uv);
                auto& y = r[vu];
                y -= c;
                if (y == 0) r.erase(vu);
            }
    }
    tensor_memo_[k] = r;
    return r;
}

std::map<Word, Rat> FreeLie::tensor_expand(const LiePoly& p) {
    std::map<Word, Rat> r;
    for (const auto& [k, c] : p) {
        for (const auto& [w, cw] : tensor_expand(k)) {
            auto& x = r[w];
            x += c * cw;
            if (x == 0) r.erase(w);
        }
    }
    return r;
}

std::string FreeLie::render_word(const Word& w) const {
    std::ostringstream os;
    bool dots = !alpha_.all_single_char();
    for (size_t i = 0; i < w.size(); ++i) {
        if (i && dots) os << ".";
        os << alpha_.gens[w[i]].name();
    }
    return os.str();
}

std::string FreeLie::render(const LiePoly& p) const {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : p) {
        if (!first) os << "\n";
        first = false;
        os << render_word(word_of(k)) << " " << rat_str(c);
    }
    return os.str();
}

}  // namespace assoc
