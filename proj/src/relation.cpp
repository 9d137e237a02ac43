#include "linord/relation.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <unordered_map>

#include "linord/coloured.hpp"
#include "linord/parse.hpp"
#include "linord/zcalculus.hpp"

namespace linord {

namespace {

constexpr int kInf = INT_MAX;
constexpr std::uint64_t kFinBoundCap = 12;

std::string key_of(const Word& w) { return word_term(w).str(); }

bool is_fin(const Term& x) { return x.is<FiniteChain>(); }
std::uint64_t fin_n(const Term& x) { return x.as<FiniteChain>().n; }

Word w1(const Term& x) { return Word{x}; }

Word cat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::uint64_t max_fin(const Word& w) {
    std::uint64_t m = 0;
    for (const auto& x : w) {
        if (is_fin(x)) m = std::max(m, fin_n(x));
        if (x.is<Shuffle>() && !x.as<Shuffle>().labels.is_periodic())
            for (const auto& l : x.as<Shuffle>().labels.labels()) m = std::max(m, max_fin(normal_word(l)));
    }
    return m;
}

// Labels of a shuffle letter, with periodic sets cut off at a finite horizon.
std::vector<Term> label_list(const Term& x, std::uint64_t horizon, bool& truncated) {
    const LabelSet& ls = x.as<Shuffle>().labels;
    if (!ls.is_periodic()) return ls.labels();
    truncated = true;
    std::vector<Term> out;
    for (std::uint64_t n = 1; n <= horizon; ++n)
        if (ls.contains_fin(n)) out.push_back(Term::fin(n));
    return out;
}

// ---------------------------------------------------------------------------
// Target side: representative cut points and the convex segments between them.
//
// Positions are totally preordered by how much of the target remains after them,
// so each placement question has a single best answer (the earliest end).

class TargetTable {
public:
    struct LabelInfo {
        std::vector<Word> all, prefixes, suffixes;
        bool incomplete = false;
    };

    TargetTable(Word w, std::uint64_t bound, std::size_t max_raw) : w_(std::move(w)), b_(bound), max_raw_(max_raw) {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            first_.push_back(static_cast<int>(subs_.size()));
            const Term& x = w_[i];
            int count = 1;
            switch (letter_kind(x)) {
                case LetterKind::Fin: count = static_cast<int>(fin_n(x)); break;
                case LetterKind::OmegaStar:
                case LetterKind::Zeta: count = 2; break;
                case LetterKind::Omega: break;
                case LetterKind::Shuffle: {
                    bool trunc = false;
                    labels_.emplace(i, label_info(label_list(x, 2 * b_ + 4, trunc)));
                    if (trunc || labels_.at(i).incomplete) incomplete_ = true;
                    break;
                }
                default: incomplete_ = true; break;
            }
            for (int s = 0; s < count; ++s) subs_.emplace_back(i, s);
        }
        first_.push_back(static_cast<int>(subs_.size()));
        enumerate();
        finalize();
    }

    int end_index() const { return static_cast<int>(subs_.size()); }
    bool incomplete() const { return incomplete_; }

    // Earliest (end, start) of a convex segment of the given type starting at or after `from`.
    std::optional<std::pair<int, int>> place(int from, const std::string& key) const {
        auto it = best_.find(key);
        if (it == best_.end() || from > end_index()) return std::nullopt;
        const auto& v = it->second[from];
        if (v.first == kInf) return std::nullopt;
        return v;
    }

    // Earliest end after an increasing (omega) or decreasing (omega*) sequence of points.
    std::optional<std::pair<int, int>> fan(int from, bool omega) const {
        for (int s = from; s < end_index(); ++s) {
            const auto [i, sub] = subs_[s];
            switch (letter_kind(w_[i])) {
                case LetterKind::Omega:
                    if (omega) return std::pair{first_[i + 1], s};
                    break;
                case LetterKind::Zeta:
                    if (omega) return std::pair{first_[i + 1], s};
                    if (sub == 0) return std::pair{s + 1, s};
                    break;
                case LetterKind::OmegaStar:
                    if (!omega && sub == 0) return std::pair{s + 1, s};
                    break;
                case LetterKind::Shuffle: return std::pair{s, s};
                default: break;
            }
        }
        return std::nullopt;
    }

    bool has_segment(const std::string& key, int start, int end) const { return raw_.count({key, start, end}) > 0; }

    const std::vector<Word>& all_words() const { return all_words_; }
    const std::vector<Word>& prefix_words() const { return prefix_words_; }
    const std::vector<Word>& suffix_words() const { return suffix_words_; }

    std::string pos_str(int p) const {
        if (p >= end_index()) return "end";
        const auto [i, sub] = subs_[p];
        return std::to_string(i) + (sub ? "." + std::to_string(sub) : "");
    }

private:
    LabelInfo label_info(const std::vector<Term>& labels) const {
        LabelInfo info;
        std::set<std::string> seen_all, seen_pre, seen_suf;
        for (const auto& l : labels) {
            const Word lw = normal_word(l);
            TargetTable sub(lw, b_, lw.size() + 2);
            info.incomplete = info.incomplete || sub.incomplete();
            for (const auto& x : sub.all_words_)
                if (seen_all.insert(key_of(x)).second) info.all.push_back(x);
            for (const auto& x : sub.prefix_words_)
                if (seen_pre.insert(key_of(x)).second) info.prefixes.push_back(x);
            for (const auto& x : sub.suffix_words_)
                if (seen_suf.insert(key_of(x)).second) info.suffixes.push_back(x);
        }
        return info;
    }

    int idx(std::size_t letter, int sub) const { return first_[letter] + sub; }

    void emit(int start, const Word& acc, int end, bool initial) {
        Word r = reduce(acc);
        std::string k = key_of(r);
        auto& v = raw_best_[k];
        if (v.empty()) v.assign(subs_.size() + 1, {kInf, -1});
        if (end < v[start].first) v[start] = {end, start};
        if (raw_.insert({k, start, end}).second) {
            if (seen_.insert(k).second) all_words_.push_back(r);
            if (initial && seen_prefix_.insert(k).second) prefix_words_.push_back(r);
            if (end == end_index() && seen_suffix_.insert(k).second) suffix_words_.push_back(r);
        }
    }

    void walk(std::size_t j, const Word& acc, int start, bool initial) {
        emit(start, acc, idx(j, 0), initial);
        if (j >= w_.size() || acc.size() >= max_raw_) return;
        const Term& y = w_[j];
        switch (letter_kind(y)) {
            case LetterKind::Fin:
                for (std::uint64_t t = 1; t < fin_n(y); ++t)
                    emit(start, cat(acc, w1(Term::fin(t))), idx(j, static_cast<int>(t)), initial);
                walk(j + 1, cat(acc, w1(y)), start, initial);
                break;
            case LetterKind::Omega:
                for (std::uint64_t t = 1; t <= b_; ++t) emit(start, cat(acc, w1(Term::fin(t))), idx(j, 0), initial);
                walk(j + 1, cat(acc, w1(y)), start, initial);
                break;
            case LetterKind::OmegaStar:
            case LetterKind::Zeta:
                emit(start, cat(acc, w1(Term::omega_star())), idx(j, 1), initial);
                walk(j + 1, cat(acc, w1(y)), start, initial);
                break;
            case LetterKind::Shuffle: {
                const LabelInfo& li = labels_.at(j);
                const Word core = cat(acc, w1(y));
                emit(start, core, idx(j, 0), initial);
                for (const auto& tr : li.prefixes) emit(start, cat(core, tr), idx(j, 0), initial);
                walk(j + 1, core, start, initial);
                break;
            }
            default: break;
        }
    }

    void enumerate() {
        for (int s = 0; s < end_index(); ++s) {
            const auto [i, sub] = subs_[s];
            const Term& x = w_[i];
            const bool first_letter = i == 0;
            switch (letter_kind(x)) {
                case LetterKind::Fin: {
                    const auto n = fin_n(x);
                    const auto o = static_cast<std::uint64_t>(sub);
                    for (std::uint64_t t = 1; o + t < n; ++t)
                        emit(s, w1(Term::fin(t)), idx(i, static_cast<int>(o + t)), first_letter && o == 0);
                    walk(i + 1, w1(Term::fin(n - o)), s, first_letter && o == 0);
                    break;
                }
                case LetterKind::Omega:
                    for (std::uint64_t t = 1; t <= b_; ++t) emit(s, w1(Term::fin(t)), s, first_letter);
                    walk(i + 1, w1(x), s, first_letter);
                    break;
                case LetterKind::OmegaStar:
                    if (sub == 0) {
                        emit(s, w1(x), s + 1, first_letter);
                        walk(i + 1, w1(x), s, first_letter);
                    } else {
                        for (std::uint64_t t = 1; t <= b_; ++t) {
                            emit(s, w1(Term::fin(t)), s, false);
                            walk(i + 1, w1(Term::fin(t)), s, false);
                        }
                    }
                    break;
                case LetterKind::Zeta:
                    if (sub == 0) {
                        emit(s, w1(Term::omega_star()), s + 1, first_letter);
                        walk(i + 1, w1(x), s, first_letter);
                    } else {
                        for (std::uint64_t t = 1; t <= b_; ++t) emit(s, w1(Term::fin(t)), s, false);
                        walk(i + 1, w1(Term::omega()), s, false);
                    }
                    break;
                case LetterKind::Shuffle: {
                    const LabelInfo& li = labels_.at(i);
                    for (const auto& a : li.all) emit(s, a, s, false);
                    std::vector<Word> leads{Word{}};
                    leads.insert(leads.end(), li.suffixes.begin(), li.suffixes.end());
                    for (std::size_t k = 0; k < leads.size(); ++k) {
                        const Word core = cat(leads[k], w1(x));
                        const bool init = first_letter && k == 0;
                        emit(s, core, s, init);
                        for (const auto& tr : li.prefixes) emit(s, cat(core, tr), s, init);
                        walk(i + 1, core, s, init);
                    }
                    break;
                }
                default: break;
            }
        }
    }

    void finalize() {
        for (auto& [k, v] : raw_best_) {
            for (int s = end_index() - 1; s >= 0; --s)
                if (v[s + 1].first < v[s].first) v[s] = v[s + 1];
            best_.emplace(k, std::move(v));
        }
        raw_best_.clear();
    }

    Word w_;
    std::uint64_t b_;
    std::size_t max_raw_;
    std::vector<std::pair<std::size_t, int>> subs_;
    std::vector<int> first_;
    std::map<std::size_t, LabelInfo> labels_;
    bool incomplete_ = false;
    std::unordered_map<std::string, std::vector<std::pair<int, int>>> raw_best_, best_;
    std::set<std::tuple<std::string, int, int>> raw_;
    std::set<std::string> seen_, seen_prefix_, seen_suffix_;
    std::vector<Word> all_words_, prefix_words_, suffix_words_;
};

// ---------------------------------------------------------------------------
// Source side: letters split into atoms with representative inner cuts.

struct Atom {
    enum class Kind { Fin, Omega, OmegaStar, Dense, Copy };
    Kind kind;
    std::uint64_t n = 0;  // Fin size
    bool cuttable = true;
    Term letter;          // Dense: the shuffle letter; Copy: the label
};

struct Source {
    std::vector<Atom> atoms;
    bool incomplete = false;
};

std::optional<Source> build_source(const Word& w, std::uint64_t bound, std::size_t copies) {
    Source src;
    for (const auto& x : w) {
        switch (letter_kind(x)) {
            case LetterKind::Fin: src.atoms.push_back({Atom::Kind::Fin, fin_n(x), true, x}); break;
            case LetterKind::Omega: src.atoms.push_back({Atom::Kind::Omega, 0, true, x}); break;
            case LetterKind::OmegaStar: src.atoms.push_back({Atom::Kind::OmegaStar, 0, true, x}); break;
            case LetterKind::Zeta:
                src.atoms.push_back({Atom::Kind::OmegaStar, 0, false, Term::omega_star()});
                src.atoms.push_back({Atom::Kind::Omega, 0, false, Term::omega()});
                break;
            case LetterKind::Shuffle: {
                // eta^S = eta^S + l + eta^S + ... for labels l in S, so finitely many cuts
                // inside the letter see a fixed alternating expansion.
                src.atoms.push_back({Atom::Kind::Dense, 0, true, x});
                const LabelSet& ls = x.as<Shuffle>().labels;
                if (ls.is_periodic()) {
                    src.incomplete = src.incomplete || copies > 0;
                    break;
                }
                for (std::size_t r = 0; r < copies; ++r) {
                    for (const auto& l : ls.labels()) {
                        const Word lw = normal_word(l);
                        if (lw.size() == 1 && is_fin(lw[0])) {
                            src.atoms.push_back({Atom::Kind::Fin, fin_n(lw[0]), true, lw[0]});
                        } else {
                            src.atoms.push_back({Atom::Kind::Copy, 0, false, word_term(lw)});
                            src.incomplete = true;
                        }
                        src.atoms.push_back({Atom::Kind::Dense, 0, true, x});
                    }
                }
                break;
            }
            default: return std::nullopt;
        }
    }
    (void)bound;
    return src;
}

int inner_cuts(const Atom& a, std::uint64_t bound) {
    if (!a.cuttable) return 0;
    switch (a.kind) {
        case Atom::Kind::Fin: return static_cast<int>(a.n) - 1;
        case Atom::Kind::Omega:
        case Atom::Kind::OmegaStar: return static_cast<int>(bound);
        case Atom::Kind::Dense: return 1;
        default: return 0;
    }
}

// Type of atom `a` between inner offsets lo and hi (hi = full for the atom's end).
Word atom_part(const Atom& a, int lo, int hi, int full, std::uint64_t bound) {
    switch (a.kind) {
        case Atom::Kind::Fin: return w1(Term::fin(static_cast<std::uint64_t>((hi == full ? static_cast<int>(a.n) : hi) - lo)));
        case Atom::Kind::Omega:
            if (hi == full) return w1(Term::omega());
            return w1(Term::fin(static_cast<std::uint64_t>(hi - lo)));
        case Atom::Kind::OmegaStar: {
            // offset j leaves bound + 1 - j elements to its right
            if (lo == 0) return w1(Term::omega_star());
            const int left = static_cast<int>(bound) + 1 - lo;
            const int right = hi == full ? 0 : static_cast<int>(bound) + 1 - hi;
            return w1(Term::fin(static_cast<std::uint64_t>(left - right)));
        }
        case Atom::Kind::Dense: return w1(a.letter);
        case Atom::Kind::Copy: return normal_word(a.letter);
    }
    return {};
}

struct Cut {
    std::size_t atom;
    int off;  // 0: before the atom
};

enum class Step { Block, OmegaFan, OmegaStarFan };

struct State {
    int pos = 0;
    Word k;
    int prev_cut = -1;
    std::string prev_key;
    Step step = Step::Block;
    int seg_start = 0;
    std::string type;
};

struct Search {
    const ClassId* cls = nullptr;  // null: any index order (plain embeddability)
    bool allow_omega = true, allow_omega_star = true;
};

class BlockSearch {
public:
    BlockSearch(const Word& a, const Word& b, const Search& opt, std::size_t copies) : opt_(opt) {
        bound_ = std::min<std::uint64_t>(kFinBoundCap, max_fin(a) + max_fin(b) + 2);
        auto src = build_source(a, bound_, copies);
        if (!src) return;
        src_ = std::move(*src);
        tgt_.emplace(b, bound_, src_.atoms.size() + 4);
        applicable_ = true;
        for (std::size_t t = 0; t < src_.atoms.size(); ++t) {
            cuts_.push_back({t, 0});
            for (int o = 1; o <= inner_cuts(src_.atoms[t], bound_); ++o) cuts_.push_back({t, o});
        }
        cuts_.push_back({src_.atoms.size(), 0});
    }

    bool applicable() const { return applicable_; }

    Verdict run(const std::string& rule) {
        const int n = static_cast<int>(cuts_.size());
        std::vector<std::map<std::string, State>> st(n);
        st[0].emplace("", State{});
        bool unknown_member = false;
        for (int a = 0; a + 1 < n; ++a) {
            for (const auto& [key, s] : st[a]) {
                for (int b = a + 1; b < n; ++b) {
                    const auto& [type_word, type_key] = piece(a, b);
                    if (auto e = tgt_->place(s.pos, type_key))
                        relax(st, b, a, key, s, Step::Block, *e, type_key, unknown_member);
                    if (auto f = fan_kind(a, b)) {
                        if (auto e = tgt_->fan(s.pos, *f == Step::OmegaFan))
                            relax(st, b, a, key, s, *f, *e, *f == Step::OmegaFan ? "w" : "w*", unknown_member);
                    }
                }
            }
        }
        const auto& fin = st[n - 1];
        for (const auto& [key, s] : fin) {
            if (index_ok(s.k) == Tri::True) return Verdict::holds(rule, "partition found with K = " + key, witness(st, n - 1, key));
        }
        const bool complete = !tgt_->incomplete() && !src_.incomplete && !unknown_member;
        if (!fin.empty() || !complete) return Verdict::unknown(rule, "no certified partition within the searched shapes");
        return Verdict::fails(rule, "exhaustive search over convex partitions and placements found none");
    }

private:
    Tri index_ok(const Word& k) {
        if (!opt_.cls) return Tri::True;
        const std::string key = key_of(k);
        auto it = member_cache_.find(key);
        if (it != member_cache_.end()) return it->second;
        const Tri t = member_word(*opt_.cls, k).tri();
        member_cache_.emplace(key, t);
        return t;
    }

    void relax(std::vector<std::map<std::string, State>>& st, int b, int a, const std::string& key, const State& s,
               Step step, std::pair<int, int> placed, const std::string& type, bool& unknown_member) {
        Word k = s.k;
        k.push_back(step == Step::Block ? Term::fin(1) : step == Step::OmegaFan ? Term::omega() : Term::omega_star());
        k = reduce(std::move(k));
        if (opt_.cls) {
            const Tri ok = index_ok(k);
            if (ok == Tri::False) return;
            if (ok == Tri::Unknown) unknown_member = true;
        }
        const std::string nk = opt_.cls ? key_of(k) : std::string("*");
        auto it = st[b].find(nk);
        if (it != st[b].end() && it->second.pos <= placed.first) return;
        st[b][nk] = State{placed.first, std::move(k), a, key, step, placed.second, type};
    }

    std::optional<Step> fan_kind(int a, int b) const {
        const Cut ca = cuts_[a], cb = cuts_[b];
        const bool b_is_end = cb.off == 0 && cb.atom == ca.atom + 1;
        if (ca.atom >= src_.atoms.size()) return std::nullopt;
        const Atom& at = src_.atoms[ca.atom];
        if (at.kind == Atom::Kind::Omega && opt_.allow_omega && b_is_end) return Step::OmegaFan;
        if (at.kind == Atom::Kind::OmegaStar && opt_.allow_omega_star && ca.off == 0 && (b_is_end || cb.atom == ca.atom))
            return Step::OmegaStarFan;
        return std::nullopt;
    }

    const std::pair<Word, std::string>& piece(int a, int b) {
        auto it = pieces_.find({a, b});
        if (it != pieces_.end()) return it->second;
        const Cut ca = cuts_[a], cb = cuts_[b];
        Word w;
        // The piece runs from cut a to cut b; cb.off == 0 means it stops before atom cb.atom.
        const std::size_t last = cb.off == 0 ? cb.atom - 1 : cb.atom;
        for (std::size_t t = ca.atom; t <= last; ++t) {
            const Atom& at = src_.atoms[t];
            const int full = inner_cuts(at, bound_) + 1;
            const int lo = t == ca.atom ? ca.off : 0;
            const int hi = (t == cb.atom) ? cb.off : full;
            const Word part = atom_part(at, lo, hi, full, bound_);
            w.insert(w.end(), part.begin(), part.end());
        }
        w = reduce(std::move(w));
        std::string k = key_of(w);
        return pieces_.emplace(std::pair{a, b}, std::pair{std::move(w), std::move(k)}).first->second;
    }

    std::string cut_str(int c) const {
        const Cut x = cuts_[c];
        if (x.atom >= src_.atoms.size()) return "end";
        return std::to_string(x.atom) + (x.off ? "." + std::to_string(x.off) : "");
    }

    Witness witness(const std::vector<std::map<std::string, State>>& st, int n, const std::string& key) const {
        std::vector<Piece> rev;
        int c = n;
        std::string k = key;
        Term index = Term::fin(1);
        bool index_set = false;
        while (c > 0) {
            const State& s = st[c].at(k);
            if (!index_set) {
                index = word_term(s.k.empty() ? Word{Term::fin(1)} : s.k);
                index_set = true;
            }
            Piece p;
            p.kind = s.step == Step::Block ? Piece::Kind::Block : Piece::Kind::Fan;
            p.src = "[" + cut_str(s.prev_cut) + "," + cut_str(c) + ")";
            p.dst = "[" + std::to_string(s.seg_start) + "," + std::to_string(s.pos) + ")";
            p.src_type = s.type;
            p.dst_type = s.step == Step::Block ? s.type : "points";
            rev.push_back(std::move(p));
            k = s.prev_key;
            c = s.prev_cut;
        }
        std::reverse(rev.begin(), rev.end());
        return Witness{index, std::move(rev), {}, {}, {}};
    }

    Search opt_;
    std::uint64_t bound_ = 0;
    Source src_;
    std::optional<TargetTable> tgt_;
    std::vector<Cut> cuts_;
    bool applicable_ = false;
    std::map<std::pair<int, int>, std::pair<Word, std::string>> pieces_;
    std::unordered_map<std::string, Tri> member_cache_;
};

std::size_t copies_for(const ClassId& c) {
    using K = ClassId::Kind;
    if (c.kind == K::One) return 0;
    if (c.kind == K::LeN) return static_cast<std::size_t>(std::min<std::uint64_t>(c.n, 4) - 1);
    return 2;
}

bool copies_exhaustive(const ClassId& c) { return c.kind == ClassId::Kind::One || (c.kind == ClassId::Kind::LeN && c.n <= 4); }

bool has_shuffle(const Word& w) {
    return std::any_of(w.begin(), w.end(), [](const Term& x) { return x.is<Shuffle>(); });
}

std::optional<Word> zeta_form(const Word& w) {
    if (w.size() == 1 && letter_kind(w[0]) == LetterKind::ZetaTimes) return zeta_index(w[0]);
    if (!w.empty() && std::all_of(w.begin(), w.end(), [](const Term& x) { return x.is<Zeta>(); }))
        return Word{Term::fin(w.size())};
    return std::nullopt;
}

Verdict relabel(Verdict v, const std::string& prefix) {
    v.rule = prefix + "/" + v.rule;
    return v;
}

bool is_eta_word(const Word& w) { return w.size() == 1 && w[0] == Term::eta(); }

std::optional<Ordinal> safe_rank(const Term& t) {
    try {
        return hausdorff_rank(t);
    } catch (const ZError&) {
        return std::nullopt;
    }
}

// (alpha eta + eta + L0 + eta) * X with the same block on both sides.
std::optional<std::pair<Term, Term>> fractal_pair(const Term& a, const Term& b) {
    if (!a.is<Product>() || !b.is<Product>()) return std::nullopt;
    const Term& la = a.as<Product>().left;
    if (!(la == b.as<Product>().left) || !la.is<Sum>()) return std::nullopt;
    const auto& parts = la.as<Sum>().parts;
    if (parts.size() != 4 || !parts[0].is<Shuffle>() || !(parts[1] == Term::eta()) || !(parts[3] == Term::eta()))
        return std::nullopt;
    const LabelSet& ls = parts[0].as<Shuffle>().labels;
    if (ls.is_periodic() || ls.labels().size() != 1) return std::nullopt;
    if (!convex_embeds(ls.labels()[0], parts[2]).is_fails()) return std::nullopt;
    return std::pair{a.as<Product>().right, b.as<Product>().right};
}

// Sum of single-label shuffles eta^{n}, no two neighbours alike: the colour sequence.
std::optional<ColouredFinite> shuffle_colours(const Word& w) {
    ColouredFinite out;
    for (const auto& x : w) {
        if (!x.is<Shuffle>()) return std::nullopt;
        const LabelSet& ls = x.as<Shuffle>().labels;
        if (ls.is_periodic() || ls.labels().size() != 1 || !is_fin(ls.labels()[0])) return std::nullopt;
        const int col = static_cast<int>(fin_n(ls.labels()[0]));
        if (!out.colours.empty() && out.colours.back() == col) return std::nullopt;
        out.colours.push_back(col);
    }
    return out;
}

// (1 + zL + 1) M on both sides with the same M; yields (L, L', M).
std::optional<std::tuple<Term, Term, Term>> cong_pair(const Term& a, const Term& b) {
    const auto split = [](const Term& t) -> std::optional<std::pair<Term, Term>> {
        if (!t.is<Product>()) return std::nullopt;
        const Term& l = t.as<Product>().left;
        if (!l.is<Sum>()) return std::nullopt;
        const auto& p = l.as<Sum>().parts;
        if (p.size() != 3 || !(p[0] == Term::fin(1)) || !(p[2] == Term::fin(1)) || !p[1].is<Product>() ||
            !(p[1].as<Product>().left == Term::zeta()))
            return std::nullopt;
        return std::pair{p[1].as<Product>().right, t.as<Product>().right};
    };
    const auto x = split(a), y = split(b);
    if (!x || !y || !(x->second == y->second)) return std::nullopt;
    return std::tuple{x->first, y->first, x->second};
}

}  // namespace

Verdict embeds(const Term& a, const Term& b) {
    const Word wa = normal_word(a), wb = normal_word(b);
    const std::string what = word_term(wa).str() + " into " + word_term(wb).str();
    if (wa == wb) return Verdict::holds("reflexive", what + ": same normal form");
    const Tri sa = scattered_word(wa), sb = scattered_word(wb);
    if (sa == Tri::False) {
        if (sb == Tri::False) return Verdict::holds("dense-source", what + ": both contain eta, and a <= eta <= b");
        if (sb == Tri::True) return Verdict::fails("dense-source", what + ": eta does not embed into a scattered order");
        return Verdict::unknown("dense-source", what + ": scatteredness of the target undecided");
    }
    if (sa == Tri::True && sb == Tri::False) return Verdict::holds("universal-eta", what + ": eta is universal");
    if (auto x = ordinal_value(wa)) {
        if (auto y = ordinal_value(wb))
            return *x <= *y ? Verdict::holds("ordinal-compare", what) : Verdict::fails("ordinal-compare", what);
    }
    if (auto x = reverse_ordinal_value(wa)) {
        if (auto y = reverse_ordinal_value(wb))
            return *x <= *y ? Verdict::holds("ordinal-compare", what) : Verdict::fails("ordinal-compare", what);
    }
    if (sa == Tri::True && sb == Tri::True) {
        const auto ra = safe_rank(word_term(wa)), rb = safe_rank(word_term(wb));
        if (ra && rb && *ra > *rb)
            return Verdict::fails("rank", what + ": rank " + ra->str() + " exceeds " + rb->str());
    }
    if (auto za = zeta_form(wa)) {
        if (auto zb = zeta_form(wb)) return relabel(embeds(word_term(*za), word_term(*zb)), "zeta-peel");
    }
    BlockSearch bs(wa, wb, Search{}, 0);
    if (bs.applicable()) {
        Verdict v = bs.run("block-dp");
        if (v.decided()) return v;
    }
    return Verdict::unknown("outside-fragment", what + ": no rule applies");
}

Verdict convex_embeds(const Term& a, const Term& b) { return l_convex_embeds(ClassId::one(), a, b); }

Verdict l_convex_embeds(const ClassId& c, const Term& a, const Term& b) {
    const bool sub_scat = class_subset(c, ClassId::scat()) == Tri::True;
    if (sub_scat && ccs_check(c).is_holds()) {
        if (auto fp = fractal_pair(a, b))
            return relabel(l_convex_embeds(c, fp->first, fp->second), "fractal");
    }
    if (auto cp = cong_pair(a, b)) {
        const auto& [l, lp, m] = *cp;
        if (member(c, m).is_fails()) {
            const Verdict iso = iso_check(l, lp);
            if (iso.decided())
                return iso.is_holds() ? Verdict::holds("cong", "inner orders are isomorphic")
                                      : Verdict::fails("cong", "multiplier outside the class and inner orders " +
                                                                   l.str() + ", " + lp.str() + " differ");
        }
    }
    const Word wa = normal_word(a), wb = normal_word(b);
    const std::string what = word_term(wa).str() + " into " + word_term(wb).str() + " over " + c.str();
    if (wa == wb) return Verdict::holds("reflexive", what + ": same normal form, one piece", Witness{Term::fin(1), {}, {}, {}, {}});
    const Verdict m = member_word(c, wa);
    if (m.is_holds()) return relabel(embeds(a, b), "member-embeds");
    const Verdict e = embeds(a, b);
    if (e.is_fails()) return relabel(e, "not-embeddable");

    if (auto x = ordinal_value(wa)) {
        if (auto y = ordinal_value(wb))
            return *x <= *y ? Verdict::holds("ordinal-compare", what + ": initial segment")
                            : Verdict::fails("ordinal-compare", what + ": too long");
    }
    if (auto x = reverse_ordinal_value(wa)) {
        if (auto y = reverse_ordinal_value(wb))
            return *x <= *y ? Verdict::holds("ordinal-compare", what + ": final segment")
                            : Verdict::fails("ordinal-compare", what + ": too long");
    }
    if (sub_scat && wa.size() == 1 && wb.size() == 1 && wa[0].is<IntervalShuffle>() && wb[0].is<IntervalShuffle>()) {
        const auto& x = wa[0].as<IntervalShuffle>();
        const auto& y = wb[0].as<IntervalShuffle>();
        return (y.lo <= x.lo && x.hi <= y.hi) ? Verdict::holds("interval-inclusion", what)
                                                : Verdict::fails("interval-inclusion", what + ": intervals not nested");
    }
    if (sub_scat && wa.size() == 1 && wb.size() == 1 && wa[0].is<Shuffle>() && wb[0].is<Shuffle>()) {
        const LabelSet& x = wa[0].as<Shuffle>().labels;
        const LabelSet& y = wb[0].as<Shuffle>().labels;
        if (x == y) return Verdict::holds("shuffle-labels", what + ": same labels");
        bool canon = true;
        for (const LabelSet* ls : {&x, &y})
            if (!ls->is_periodic())
                for (const auto& l : ls->labels()) canon = canon && canonical(normal_word(l));
        if (canon) return Verdict::fails("shuffle-labels", what + ": label sets differ");
        return Verdict::unknown("shuffle-labels", what + ": labels outside the canonical fragment");
    }
    if (sub_scat) {
        const auto ca = shuffle_colours(wa), cb = shuffle_colours(wb);
        if (ca && cb && ccs_check(c).is_holds()) {
            Verdict v = coloured_l_convex_embeds(c, *ca, *cb);
            v.witness.reset();
            return relabel(v, "shuffle-sum");
        }
    }
    if (sub_scat && c.kind != ClassId::Kind::One && wa.size() == 1 && wa[0].is<Shuffle>())
        return relabel(convex_embeds(a, b), "dense-piece");
    if (scattered_word(wa) == Tri::True && is_eta_word(wb) && m.decided())
        return m.is_holds() ? Verdict::holds("scattered-into-eta", what + ": member of the class")
                            : Verdict::fails("scattered-into-eta", what + ": scattered and not in the class");
    if (auto za = zeta_form(wa)) {
        if (auto zb = zeta_form(wb)) return relabel(l_convex_embeds(c, word_term(*za), word_term(*zb)), "zeta-peel");
    }

    Search opt{&c, !member_word(c, {Term::omega()}).is_fails(), !member_word(c, {Term::omega_star()}).is_fails()};
    BlockSearch bs(wa, wb, opt, copies_for(c));
    if (bs.applicable()) {
        Verdict v = bs.run("block-dp");
        if (v.is_fails() && has_shuffle(wa) && !copies_exhaustive(c))
            return Verdict::unknown("block-dp", what + ": dense pieces beyond the searched expansion");
        if (v.decided()) {
            v.message = what + ": " + v.message;
            return v;
        }
    }
    return Verdict::unknown("outside-fragment", what + ": no rule applies");
}

Verdict biembeds(const ClassId& c, const Term& a, const Term& b) {
    const Verdict x = l_convex_embeds(c, a, b);
    if (x.is_fails()) return relabel(x, "forward");
    const Verdict y = l_convex_embeds(c, b, a);
    if (y.is_fails()) return relabel(y, "backward");
    if (x.is_holds() && y.is_holds()) return Verdict::holds("both", "both directions hold");
    return Verdict::unknown("both", "at least one direction undecided");
}

std::vector<Triple> transitivity_probe(const ClassId& c, const std::vector<Term>& corpus) {
    const std::size_t n = corpus.size();
    std::vector<std::vector<Verdict::Status>> r(n, std::vector<Verdict::Status>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = l_convex_embeds(c, corpus[i], corpus[j]).status;
    std::vector<Triple> out;
    using S = Verdict::Status;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (r[i][j] != S::Holds) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (r[j][k] == S::Holds && r[i][k] == S::Fails) out.push_back({corpus[i], corpus[j], corpus[k]});
        }
    return out;
}

Verdict verify_relation_witness(const ClassId& c, const Term& a, const Term& b, const Witness& w) {
    const auto bad = [](const std::string& why) { return Verdict::fails("witness", why); };
    if (w.pieces.empty()) {
        // one-piece certificate: the source is literally the target
        if (normal_word(a) == normal_word(b)) return Verdict::holds("witness", "identical normal forms");
        return bad("empty piece list");
    }
    Word assembled, index;
    int last_end = 0;
    const Word wa = normal_word(a), wb = normal_word(b);
    TargetTable tgt(wb, std::min<std::uint64_t>(kFinBoundCap, max_fin(wa) + max_fin(wb) + 2), wa.size() * 8 + 8);
    for (const auto& p : w.pieces) {
        Term t = Term::fin(1);
        try {
            t = parse_term(p.src_type);
        } catch (const ParseError&) {
            return bad("unparsable piece type '" + p.src_type + "'");
        }
        const Word pw = normal_word(t);
        assembled.insert(assembled.end(), pw.begin(), pw.end());
        int s = 0, e = 0;
        if (std::sscanf(p.dst.c_str(), "[%d,%d)", &s, &e) != 2) return bad("malformed target span " + p.dst);
        if (s < last_end || e < s) return bad("target spans not increasing at " + p.dst);
        last_end = e;
        if (p.kind == Piece::Kind::Block) {
            index.push_back(Term::fin(1));
            if (!tgt.has_segment(key_of(pw), s, e)) return bad("no convex segment of type " + p.src_type + " at " + p.dst);
        } else {
            index.push_back(t);
            const auto f = tgt.fan(s, t == Term::omega());
            if (!f || f->first > e) return bad("no sequence of points of type " + p.src_type + " at " + p.dst);
        }
    }
    if (!iso_check(word_term(reduce(assembled)), a).is_holds()) return bad("pieces do not reassemble the source");
    const Term k = word_term(reduce(index));
    if (!iso_check(k, w.index_order).is_holds()) return bad("index order differs from the piece count");
    if (!member(c, k).is_holds()) return bad("index order " + k.str() + " is not in " + c.str());
    return Verdict::holds("witness", "verified " + std::to_string(w.pieces.size()) + " pieces over K = " + k.str());
}

}  // namespace linord
