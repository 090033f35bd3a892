#include "algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace assoc {

namespace {

SRow weight_slice(const LiePoly& p, int weight) {
    SRow r;
    for (const auto& [k, c] : p)
        if (k.first == weight) r[k.second] = c;
    return r;
}

LiePoly row_to_poly(const SRow& r, int weight) {
    LiePoly p;
    for (const auto& [col, c] : r) p[{weight, col}] = c;
    return p;
}

}  // namespace

GradedQuotient::GradedQuotient(FamilySpec spec)
    : spec_(std::move(spec)), fl_(family_alphabet(spec_)) {
    fl_.ensure_weight(std::max(1, spec_.relation_max_weight()));
    rels_ = family_relations(spec_, fl_);
    for (const auto& r : rels_) {
        int w = -1;
        for (const auto& [k, c] : r) {
            if (w < 0) w = k.first;
            if (k.first != w) throw std::logic_error("inhomogeneous relation");
        }
    }
}

void GradedQuotient::ensure_weight(int d) {
    if (d <= built_weight_) return;
    fl_.ensure_weight(d);
    for (int w = built_weight_ + 1; w <= d; ++w) {
        RowSpace& rs = ideal_[w];
        for (const auto& r : rels_) {
            SRow row = weight_slice(r, w);
            if (!row.empty() && row.size() == r.size()) rs.add(row);
        }
        // Lie ideal closure: bracket lower-weight ideal rows with generators.
        // With complete lower degrees one pass is exact; the stability of the
        // result is asserted by the test suite.
        for (int gidx = 0; gidx < fl_.alphabet().size(); ++gidx) {
            int gw = fl_.alphabet().weight(gidx);
            auto lower = ideal_.find(w - gw);
            if (lower == ideal_.end()) continue;
            LiePoly gp = fl_.letter(gidx);
            for (const auto& [piv, row] : lower->second.rows()) {
                LiePoly br = fl_.bracket(gp, row_to_poly(row, w - gw));
                SRow srow = weight_slice(br, w);
                if (!srow.empty()) rs.add(srow);
            }
        }
        auto& qb = qbasis_[w];
        auto& qi = qindex_[w];
        for (int i = 0; i < fl_.dim(w); ++i) {
            if (rs.has_pivot(i)) continue;
            qi[i] = static_cast<int>(qb.size());
            qb.push_back({w, i});
        }
    }
    built_weight_ = d;
}

int GradedQuotient::dim(int weight) const {
    if (weight < 1 || weight > built_weight_) {
        if (weight == 0) return 0;
        throw std::out_of_range("weight beyond computed bound");
    }
    return static_cast<int>(qbasis_.at(weight).size());
}

const std::vector<BKey>& GradedQuotient::basis(int weight) const {
    return qbasis_.at(weight);
}

LiePoly GradedQuotient::basis_element(QKey q) const {
    LiePoly p;
    p[qbasis_.at(q.first).at(q.second)] = 1;
    return p;
}

LiePoly GradedQuotient::reduce(const LiePoly& a) const {
    LiePoly out;
    std::map<int, SRow> by_w;
    for (const auto& [k, c] : a) {
        if (k.first > built_weight_) throw std::out_of_range("weight beyond computed bound");
        by_w[k.first][k.second] = c;
    }
    for (auto& [w, row] : by_w) {
        auto it = ideal_.find(w);
        SRow red = it == ideal_.end() ? row : it->second.reduce(std::move(row));
        for (const auto& [col, c] : red) out[{w, col}] = c;
    }
    return out;
}

LiePoly GradedQuotient::bracket_mod(const LiePoly& a, const LiePoly& b) {
    int wa = 0, wb = 0;
    for (const auto& [k, c] : a)
        if (c != 0) wa = std::max(wa, k.first);
    for (const auto& [k, c] : b)
        if (c != 0) wb = std::max(wb, k.first);
    if (wa == 0 || wb == 0) return {};
    ensure_weight(wa + wb);
    return reduce(fl_.bracket(a, b));
}

bool GradedQuotient::is_central(const LiePoly& a, int max_weight) {
    ensure_weight(max_weight);
    for (int gidx = 0; gidx < fl_.alphabet().size(); ++gidx) {
        LiePoly br = fl_.bracket(fl_.letter(gidx), a);
        LiePoly capped;
        for (const auto& [k, c] : br)
            if (k.first <= max_weight) capped[k] = c;
        if (!lp_is_zero(reduce(capped))) return false;
    }
    return true;
}

std::map<QKey, Rat> GradedQuotient::coords(const LiePoly& reduced) const {
    std::map<QKey, Rat> out;
    for (const auto& [k, c] : reduced) {
        const auto& qi = qindex_.at(k.first);
        auto it = qi.find(k.second);
        if (it == qi.end()) throw std::invalid_argument("element is not reduced");
        out[{k.first, it->second}] = c;
    }
    return out;
}

LiePoly GradedQuotient::from_coords(const std::map<QKey, Rat>& c) const {
    LiePoly p;
    for (const auto& [q, v] : c) p[qbasis_.at(q.first).at(q.second)] = v;
    return p;
}

const std::map<QKey, Rat>& GradedQuotient::qbracket(QKey a, QKey b) {
    auto it = qbracket_memo_.find({a, b});
    if (it != qbracket_memo_.end()) return it->second;
    ensure_weight(a.first + b.first);
    LiePoly br = bracket_mod(basis_element(a), basis_element(b));
    return qbracket_memo_.emplace(std::make_pair(a, b), coords(br)).first->second;
}

const std::map<PBW, Rat>& GradedQuotient::pbw_normalize(const PBW& word) {
    auto it = pbw_memo_.find(word);
    if (it != pbw_memo_.end()) return it->second;
    std::map<PBW, Rat> out;
    size_t inv = word.size();
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i + 1] < word[i]) {
            inv = i;
            break;
        }
    if (inv == word.size()) {
        out[word] = 1;
    } else {
        PBW swapped = word;
        std::swap(swapped[inv], swapped[inv + 1]);
        for (const auto& [m, c] : pbw_normalize(swapped)) {
            Rat& x = out[m];
            x += c;
            if (x == 0) out.erase(m);
        }
        for (const auto& [k, c] : qbracket(word[inv], word[inv + 1])) {
            PBW shorter;
            shorter.reserve(word.size() - 1);
            shorter.insert(shorter.end(), word.begin(), word.begin() + inv);
            shorter.push_back(k);
            shorter.insert(shorter.end(), word.begin() + inv + 2, word.end());
            for (const auto& [m, cm] : pbw_normalize(shorter)) {
                Rat& x = out[m];
                x += c * cm;
                if (x == 0) out.erase(m);
            }
        }
    }
    return pbw_memo_.emplace(word, std::move(out)).first->second;
}

std::string GradedQuotient::render_pbw(const PBW& m) const {
    if (m.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) os << "*";
        os << fl_.render_word(fl_.word_of(qbasis_.at(m[i].first).at(m[i].second)));
    }
    return os.str();
}

std::string GradedQuotient::dims_table(int max_weight) const {
    std::ostringstream os;
    for (int w = 1; w <= max_weight; ++w) os << w << "\t" << dim(w) << "\n";
    return os.str();
}

LieHom::LieHom(const FreeLie* src, GradedQuotient* dst, std::vector<LiePoly> images)
    : src_(src), dst_(dst), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != src_->alphabet().size())
        throw std::invalid_argument("one image per source generator required");
}

const LiePoly& LieHom::apply_basis(BKey k) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    const Word& w = src_->word_of(k);
    LiePoly out;
    if (w.size() == 1) {
        out = dst_->reduce(images_[w[0]]);
    } else {
        auto fact = src_->std_factorization(w);
        LiePoly lhs = apply_basis(src_->key_of(fact.first));
        LiePoly rhs = apply_basis(src_->key_of(fact.second));
        out = dst_->bracket_mod(lhs, rhs);
    }
    return memo_.emplace(k, std::move(out)).first->second;
}

LiePoly LieHom::apply(const LiePoly& a) {
    LiePoly out;
    for (const auto& [k, c] : a) out = lp_add(out, lp_scale(apply_basis(k), c));
    return dst_->reduce(out);
}

bool LieHom::check_hom(GradedQuotient& src, GradedQuotient& dst,
                       std::vector<LiePoly> images, int max_weight) {
    src.ensure_weight(max_weight);
    dst.ensure_weight(max_weight);
    for (size_t i = 0; i < images.size(); ++i) {
        int gw = src.free_lie().alphabet().weight(static_cast<int>(i));
        for (const auto& [k, c] : images[i])
            if (k.first != gw) throw std::invalid_argument("generator image weight mismatch");
    }
    LieHom h(&src.free_lie(), &dst, std::move(images));
    for (const auto& r : src.relations()) {
        if (r.begin()->first.first > max_weight) continue;
        if (!lp_is_zero(h.apply(r))) return false;
    }
    return true;
}

}  // namespace assoc
