#include "coxred/engine.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "coxred/errors.hpp"
#include "coxred/smith.hpp"

namespace coxred {

ElementTable ElementTable::enumerate(const std::vector<FqMat>& generators, size_t cap,
                                     Normalizer normalizer, std::shared_ptr<const Fq> field,
                                     int dim) {
    ElementTable t;
    t.ngens_ = static_cast<int>(generators.size());
    t.normalizer_ = std::move(normalizer);
    if (generators.empty() && !field)
        throw std::invalid_argument("enumerate of an empty list needs the ambient field and dimension");

    auto norm = [&](FqMat m) {
        if (t.normalizer_) t.normalizer_(m);
        return m;
    };
    std::vector<FqMat> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(norm(g));

    FqMat id = norm(generators.empty() ? FqMat::identity(field, dim)
                                       : FqMat::identity(generators[0].field_ptr(), generators[0].rows()));
    t.elems_.push_back(id);
    t.index_[id.key()] = 0;
    t.parent_.push_back(-1);
    t.letter_.push_back(-1);

    for (size_t head = 0; head < t.elems_.size(); ++head) {
        t.mult_.emplace_back(t.ngens_, -1);
        for (int g = 0; g < t.ngens_; ++g) {
            FqMat prod = norm(t.elems_[head] * gens[g]);
            std::string key = prod.key();
            auto it = t.index_.find(key);
            int idx;
            if (it == t.index_.end()) {
                idx = static_cast<int>(t.elems_.size());
                if (t.elems_.size() >= cap)
                    throw CapExceeded("group enumeration exceeded cap of " + std::to_string(cap));
                t.index_.emplace(std::move(key), idx);
                t.elems_.push_back(std::move(prod));
                t.parent_.push_back(static_cast<int>(head));
                t.letter_.push_back(g);
            } else {
                idx = it->second;
            }
            t.mult_[head][g] = idx;
        }
    }

    t.inv_.resize(t.elems_.size());
    for (size_t i = 0; i < t.elems_.size(); ++i) {
        FqMat inv = norm(t.elems_[i].inverse());
        auto it = t.index_.find(inv.key());
        if (it == t.index_.end()) throw std::logic_error("inverse escaped the enumerated group");
        t.inv_[i] = it->second;
    }
    return t;
}

int ElementTable::index_of(const FqMat& m) const {
    FqMat c = m;
    if (normalizer_) normalizer_(c);
    auto it = index_.find(c.key());
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> ElementTable::word_of(int i) const {
    std::vector<int> w;
    while (i > 0) {
        w.push_back(letter_[i]);
        i = parent_[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

int ElementTable::compose(int i, int j) const {
    for (int g : word_of(j)) i = mult_[i][g];
    return i;
}

Integer subgroup_order(const ElementTable& table, const std::vector<int>& generator_subset) {
    std::vector<char> seen(table.order(), 0);
    std::vector<int> frontier{0};
    seen[0] = 1;
    size_t count = 1;
    while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (int g : generator_subset) {
            int y = table.mult(x, g);
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                frontier.push_back(y);
            }
        }
    }
    return Integer(static_cast<unsigned long>(count));
}

CosetTable schreier_coset_table(const Presentation& pres, const ElementTable& image,
                                const std::vector<int>& images) {
    if (static_cast<int>(images.size()) != pres.generator_count)
        throw std::invalid_argument("one image per presentation generator required");
    CosetTable t;
    t.ncosets = static_cast<int>(image.order());
    t.ngens = pres.generator_count;
    t.next.assign(t.ncosets, std::vector<int>(2 * t.ngens, -1));
    for (int c = 0; c < t.ncosets; ++c)
        for (int g = 0; g < t.ngens; ++g) {
            t.next[c][g] = image.compose(c, images[g]);
            t.next[c][t.ngens + g] = image.compose(c, image.inverse(images[g]));
        }
    return t;
}

RewriteResult reidemeister_schreier(const Presentation& pres, const CosetTable& table) {
    int n = table.ncosets;
    int m = table.ngens;

    // breadth-first transversal over the columns in input order
    std::vector<Word> transversal(n);
    std::vector<char> visited(n, 0);
    // tree[c][g] = 1 when coset edge (c, g+1) -> act is part of the tree
    std::vector<std::vector<char>> tree(n, std::vector<char>(m, 0));
    std::deque<int> queue{0};
    visited[0] = 1;
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (int col = 0; col < 2 * m; ++col) {
            int d = table.next[c][col];
            if (visited[d]) continue;
            visited[d] = 1;
            int letter = col < m ? col + 1 : -(col - m + 1);
            transversal[d] = concat(transversal[c], {letter});
            if (letter > 0)
                tree[c][letter - 1] = 1;
            else
                tree[d][-letter - 1] = 1;
            queue.push_back(d);
        }
    }
    for (int c = 0; c < n; ++c)
        if (!visited[c]) throw std::invalid_argument("coset table is not transitive");

    // Schreier generators from the non-tree edges
    std::vector<std::vector<int>> sg_index(n, std::vector<int>(m, 0));
    RewriteResult out;
    for (int c = 0; c < n; ++c)
        for (int g = 0; g < m; ++g) {
            if (tree[c][g]) { sg_index[c][g] = 0; continue; }
            out.schreier.push_back({c, g + 1});
            sg_index[c][g] = static_cast<int>(out.schreier.size());  // 1-based
        }

    out.pres.generator_count = static_cast<int>(out.schreier.size());
    for (int c = 0; c < n; ++c) {
        for (const Word& r : pres.relators) {
            Word rew;
            int cur = c;
            for (int letter : r) {
                if (letter > 0) {
                    int k = sg_index[cur][letter - 1];
                    if (k) rew.push_back(k);
                    cur = table.act(cur, letter);
                } else {
                    int prev = table.act(cur, letter);
                    int k = sg_index[prev][-letter - 1];
                    if (k) rew.push_back(-k);
                    cur = prev;
                }
            }
            if (cur != c) throw std::logic_error("relator does not act trivially on cosets");
            rew = cyclic_reduce(std::move(rew));
            if (!rew.empty()) out.pres.relators.push_back(std::move(rew));
        }
    }
    out.transversal = std::move(transversal);
    return out;
}

namespace {

Word canonical_cyclic(const Word& w) {
    if (w.empty()) return w;
    Word best = w;
    Word rot = w;
    for (int pass = 0; pass < 2; ++pass) {
        for (size_t i = 0; i < rot.size(); ++i) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < best) best = rot;
        }
        rot = inverse_word(rot);
        if (rot < best) best = rot;
    }
    return best;
}

// replace every occurrence of generator g by w (and -g by w^{-1})
Word substitute(const Word& r, int g, const Word& w) {
    Word winv = inverse_word(w);
    Word out;
    for (int letter : r) {
        if (letter == g)
            out.insert(out.end(), w.begin(), w.end());
        else if (letter == -g)
            out.insert(out.end(), winv.begin(), winv.end());
        else
            out.push_back(letter);
    }
    return free_reduce(std::move(out));
}

void normalize_relators(Presentation& p) {
    std::set<Word> seen;
    std::vector<Word> out;
    for (auto& r : p.relators) {
        Word c = cyclic_reduce(std::move(r));
        if (c.empty()) continue;
        Word key = canonical_cyclic(c);
        if (seen.insert(key).second) out.push_back(std::move(c));
    }
    p.relators = std::move(out);
}

// one subword-substitution sweep; true when some relator got shorter
bool shorten_by_overlaps(Presentation& p) {
    bool changed = false;
    std::vector<size_t> order(p.relators.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return p.relators[a].size() < p.relators[b].size();
    });
    for (size_t oi : order) {
        const Word rule = p.relators[oi];
        size_t L = rule.size();
        if (L < 2 || L > 64) continue;
        size_t h = L / 2 + 1;
        // all rotations of the rule and its inverse give patterns u with
        // group identity u = v^{-1}, |v| = L - h < h
        std::vector<std::pair<Word, Word>> rules;
        Word r2 = rule;
        for (int inv = 0; inv < 2; ++inv) {
            for (size_t s = 0; s < L; ++s) {
                std::rotate(r2.begin(), r2.begin() + 1, r2.end());
                Word u(r2.begin(), r2.begin() + h);
                Word v(r2.begin() + h, r2.end());
                rules.emplace_back(std::move(u), inverse_word(v));
            }
            r2 = inverse_word(r2);
        }
        for (size_t ti = 0; ti < p.relators.size(); ++ti) {
            if (ti == oi) continue;
            Word& t = p.relators[ti];
            if (t.size() < h) continue;
            bool local = true;
            while (local) {
                local = false;
                for (const auto& [u, repl] : rules) {
                    if (t.size() < u.size()) continue;
                    auto it = std::search(t.begin(), t.end(), u.begin(), u.end());
                    if (it == t.end()) continue;
                    Word nt(t.begin(), it);
                    nt.insert(nt.end(), repl.begin(), repl.end());
                    nt.insert(nt.end(), it + u.size(), t.end());
                    nt = free_reduce(std::move(nt));
                    if (nt.size() < t.size()) {
                        t = std::move(nt);
                        changed = true;
                        local = true;
                        break;
                    }
                }
            }
        }
    }
    return changed;
}

struct AbelianInvariants {
    Integer rank;
    std::vector<Integer> factors;
    bool operator==(const AbelianInvariants& o) const = default;
};

AbelianInvariants abelian_invariants(const Presentation& p) {
    SnfResult s = abelianization(p);
    return {Integer(s.free_rank), s.factors};
}

} // namespace

SimplifyResult tietze_simplify(const Presentation& pres, const SimplifyOptions& opt) {
    SimplifyResult res;
    res.pres = pres;
    res.kept.resize(pres.generator_count);
    for (int i = 0; i < pres.generator_count; ++i) res.kept[i] = i;

    AbelianInvariants ref;
    if (opt.check_abelianization) ref = abelian_invariants(res.pres);
    auto check = [&](const char* stage) {
        if (!opt.check_abelianization) return;
        if (!(abelian_invariants(res.pres) == ref))
            throw std::logic_error(std::string("Tietze move changed the abelianization during ") + stage);
    };

    normalize_relators(res.pres);
    check("normalize");

    for (int pass = 0; pass < opt.max_passes; ++pass) {
        bool changed = false;

        while (res.pres.generator_count > opt.target_generators) {
            // pick the generator with a single occurrence in the shortest relator
            int best_rel = -1, best_gen = 0;
            for (size_t ri = 0; ri < res.pres.relators.size(); ++ri) {
                const Word& r = res.pres.relators[ri];
                if (best_rel >= 0 && r.size() >= res.pres.relators[best_rel].size()) continue;
                std::unordered_map<int, int> occ;
                for (int letter : r) ++occ[std::abs(letter)];
                for (auto [g, cnt] : occ)
                    if (cnt == 1) {
                        if (best_rel < 0 || r.size() < res.pres.relators[best_rel].size()) {
                            best_rel = static_cast<int>(ri);
                            best_gen = g;
                        }
                        break;
                    }
            }
            if (best_rel < 0) break;
            // rotate the relator so that +-g is in front: g = w
            Word r = res.pres.relators[best_rel];
            size_t at = 0;
            while (std::abs(r[at]) != best_gen) ++at;
            std::rotate(r.begin(), r.begin() + at, r.end());
            Word w(r.begin() + 1, r.end());
            w = inverse_word(w);
            if (r[0] < 0) w = inverse_word(w);
            // g = w holds in the group; drop the relator, substitute everywhere
            res.pres.relators.erase(res.pres.relators.begin() + best_rel);
            for (auto& rel : res.pres.relators) rel = substitute(rel, best_gen, w);
            // renumber generators above g
            for (auto& rel : res.pres.relators)
                for (auto& letter : rel) {
                    int a = std::abs(letter);
                    if (a > best_gen) letter = letter > 0 ? letter - 1 : letter + 1;
                }
            res.pres.generator_count -= 1;
            res.kept.erase(res.kept.begin() + (best_gen - 1));
            normalize_relators(res.pres);
            check("elimination");
            changed = true;
        }

        if (shorten_by_overlaps(res.pres)) {
            normalize_relators(res.pres);
            check("overlap substitution");
            changed = true;
        }
        if (!changed) break;
        if (res.pres.generator_count <= opt.target_generators) break;
    }
    normalize_relators(res.pres);
    check("final");
    return res;
}

} // namespace coxred
