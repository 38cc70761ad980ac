#include "coxred/lattice.hpp"

#include <algorithm>

#include "coxred/errors.hpp"
#include "coxred/exact_linalg.hpp"

namespace coxred {

namespace {

// adjacency by nonzero Gram entries
std::vector<std::vector<int>> neighbours(const CoxeterDiagram& d) {
    int n = d.node_count();
    std::vector<std::vector<int>> adj(n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && d.edge(i, j)) adj[i].push_back(j);
    for (auto& v : adj) std::sort(v.begin(), v.end());
    return adj;
}

MultiQuad entry(const CoxeterDiagram& d, int i, int j) {
    if (i == j) return MultiQuad(2);
    return gram_entry(d.edge(i, j));
}

MultiQuad walk_coefficient(const CoxeterDiagram& d, const BasisWord& w) {
    MultiQuad c(1);
    int prev = 1;
    for (int node : w.walk) {
        c *= entry(d, prev, node);
        prev = node;
    }
    return c;
}

} // namespace

std::optional<unsigned> cycle_field(const CoxeterDiagram& d) {
    if (!d.is_connected()) throw Disconnected("cycle field requires a connected diagram");
    std::vector<MultiQuad> gens;
    for (const auto& [pair, label] : d.edges()) {
        MultiQuad a = gram_entry(&label);
        gens.push_back(a * a);
    }
    // fundamental cycles from a BFS tree
    auto adj = neighbours(d);
    int n = d.node_count();
    std::vector<int> parent(n + 1, 0);
    std::vector<int> seen(n + 1, 0);
    std::vector<int> order{1};
    seen[1] = 1;
    for (size_t h = 0; h < order.size(); ++h) {
        int u = order[h];
        for (int v : adj[u])
            if (!seen[v]) { seen[v] = 1; parent[v] = u; order.push_back(v); }
    }
    auto tree_path = [&](int u) {
        std::vector<int> path{u};
        while (path.back() != 1) path.push_back(parent[path.back()]);
        return path;  // u ... 1
    };
    for (const auto& [pair, label] : d.edges()) {
        auto [u, v] = pair;
        if (parent[u] == v || parent[v] == u) continue;  // tree edge
        // product along the cycle: u -> ... -> 1 -> ... -> v -> u
        auto pu = tree_path(u), pv = tree_path(v);
        MultiQuad prod(1);
        for (size_t i = 0; i + 1 < pu.size(); ++i) prod *= entry(d, pu[i], pu[i + 1]);
        for (size_t i = 0; i + 1 < pv.size(); ++i) prod *= entry(d, pv[i], pv[i + 1]);
        prod *= gram_entry(&label);
        gens.push_back(prod);
    }

    std::optional<unsigned> D;
    for (const auto& g : gens) {
        if (g.is_rational()) continue;
        auto slot = g.single_radical_slot();
        if (!slot)
            throw UnsupportedField("cycle products generate a field of degree > 2: " + g.str());
        unsigned rad = static_cast<unsigned>(MultiQuad::radicands()[*slot]);
        if (D && *D != rad)
            throw UnsupportedField("cycle products mix sqrt(" + std::to_string(*D) + ") and sqrt(" +
                                   std::to_string(rad) + ")");
        D = rad;
    }
    return D;
}

std::vector<BasisWord> spanning_sequence(const CoxeterDiagram& d) {
    if (!d.is_connected()) throw Disconnected("spanning sequence requires a connected diagram");
    int n = d.node_count();
    if (n == 1) return {BasisWord{}};

    auto adj = neighbours(d);
    std::vector<BasisWord> words;
    std::vector<int> covered(n + 1, 0);
    covered[1] = 1;

    // Depth-first walk from the base: on reaching a new node, its tree path
    // becomes the word.  The base itself is covered by returning along the
    // first edge, which keeps all word coefficients plain edge products.
    std::vector<int> path;  // current walk, excluding the base
    bool base_word_emitted = false;
    struct Frame { int node; size_t next = 0; };
    std::vector<Frame> frames{{1, 0}};
    while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.next >= adj[f.node].size()) {
            frames.pop_back();
            if (!path.empty()) path.pop_back();
            continue;
        }
        int v = adj[f.node][f.next++];
        if (covered[v]) continue;
        covered[v] = 1;
        path.push_back(v);
        words.push_back(BasisWord{path});
        if (!base_word_emitted) {
            // out-and-back word for the base node
            words.push_back(BasisWord{{v, 1}});
            base_word_emitted = true;
        }
        frames.push_back({v, 0});
    }
    return words;
}

QuadElem word_pairing(const CoxeterDiagram& d, const BasisWord& w, const BasisWord& u,
                      std::optional<unsigned> D) {
    MultiQuad prod = walk_coefficient(d, w) * entry(d, w.final_node(), u.final_node()) *
                     walk_coefficient(d, u);
    return coerce_to_quadratic(prod, D);
}

ReflectionLattice ReflectionLattice::build(const CoxeterDiagram& d) {
    ReflectionLattice L;
    L.diagram_ = d;
    L.field_D_ = cycle_field(d);
    auto words = spanning_sequence(d);
    int m = static_cast<int>(words.size());

    // full word pairing matrix over the cycle field
    QuadMat full(m, std::vector<QuadElem>(m));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            full[i][j] = word_pairing(d, words[i], words[j], L.field_D_);
            full[j][i] = full[i][j];
        }

    // Greedy selection keeping the pairing submatrix invertible: a symmetric
    // matrix of rank r always has an invertible r-by-r principal submatrix,
    // so the first words whose principal minor keeps full rank form a basis
    // on which the form is nondegenerate.
    auto rank_of = [](const QuadMat& a) {
        auto [pos, neg, zero] = symmetric_signature(a);
        return pos + neg;
    };
    std::vector<int> keep;
    for (int w = 0; w < m; ++w) {
        std::vector<int> trial = keep;
        trial.push_back(w);
        QuadMat sub(trial.size(), std::vector<QuadElem>(trial.size()));
        for (size_t i = 0; i < trial.size(); ++i)
            for (size_t j = 0; j < trial.size(); ++j) sub[i][j] = full[trial[i]][trial[j]];
        if (rank_of(sub) == static_cast<int>(trial.size())) keep.push_back(w);
    }
    int dim = static_cast<int>(keep.size());
    for (int idx : keep) L.basis_.push_back(words[idx]);

    L.gram_.assign(dim, std::vector<QuadElem>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            L.gram_[i][j] = full[keep[i]][keep[j]];
            if (!L.gram_[i][j].is_integral())
                throw NonIntegralEntry("basis pairing " + L.gram_[i][j].str() +
                                       " is not an algebraic integer");
        }

    // words beyond the basis must still lie in the integral span
    std::vector<int> kept_mask(m, 0);
    for (int idx : keep) kept_mask[idx] = 1;
    for (int w = 0; w < m; ++w) {
        if (kept_mask[w]) continue;
        std::vector<QuadElem> rhs(dim);
        for (int t = 0; t < dim; ++t) rhs[t] = full[w][keep[t]];
        auto x = field_solve(L.gram_, rhs);
        for (const auto& xi : x)
            if (!xi.is_integral())
                throw NotFreeLattice("spanning word " + std::to_string(w) +
                                     " has non-integral coordinate " + xi.str());
    }

    // reflection matrices: r_i(v_w) = v_w - v_{w.i}, the appended word
    // expressed in basis coordinates through the pairing system
    int n = d.node_count();
    L.reflections_.reserve(n);
    for (int node = 1; node <= n; ++node) {
        QuadMat R(dim, std::vector<QuadElem>(dim));
        for (int col = 0; col < dim; ++col) {
            BasisWord ext = L.basis_[col];
            ext.walk.push_back(node);
            std::vector<QuadElem> rhs(dim);
            for (int t = 0; t < dim; ++t)
                rhs[t] = word_pairing(d, ext, L.basis_[t], L.field_D_);
            auto y = field_solve(L.gram_, rhs);
            for (int rrow = 0; rrow < dim; ++rrow) {
                QuadElem val = -y[rrow];
                if (rrow == col) val += QuadElem(1);
                if (!val.is_integral())
                    throw NotFreeLattice("reflection entry " + val.str() +
                                         " is not an algebraic integer");
                R[rrow][col] = val;
            }
        }
        L.reflections_.push_back(std::move(R));
    }

    L.signature_ = symmetric_signature(L.gram_);

    // e-basis availability: one word per node, unit coefficients in the field
    if (dim == n) {
        std::vector<int> word_of_node(n + 1, -1);
        bool ok = true;
        for (int i = 0; i < dim && ok; ++i) {
            int fn = L.basis_[i].final_node();
            if (word_of_node[fn] >= 0) ok = false;
            word_of_node[fn] = i;
        }
        if (ok) {
            std::vector<QuadElem> coeff(n);
            for (int nodei = 1; nodei <= n && ok; ++nodei) {
                MultiQuad c = walk_coefficient(d, L.basis_[word_of_node[nodei]]);
                QuadElem ck;
                try {
                    ck = coerce_to_quadratic(c, L.field_D_);
                } catch (const NotInField&) {
                    ok = false;
                    break;
                }
                if (!ck.is_integral() || abs(ck.norm()) != 1) ok = false;
                coeff[nodei - 1] = ck;
            }
            if (ok) {
                L.unit_e_basis_ = true;
                L.e_coeff_ = std::move(coeff);
            }
        }
    }
    return L;
}

QuadMat ReflectionLattice::e_gram() const {
    if (!unit_e_basis_) throw std::logic_error("lattice has no unit e-basis");
    int n = diagram_.node_count();
    QuadMat g(n, std::vector<QuadElem>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g[i][j] = coerce_to_quadratic(entry(diagram_, i + 1, j + 1), field_D_);
    return g;
}

std::vector<QuadMat> ReflectionLattice::e_reflections() const {
    if (!unit_e_basis_) throw std::logic_error("lattice has no unit e-basis");
    int n = diagram_.node_count();
    QuadMat g = e_gram();
    std::vector<QuadMat> out;
    out.reserve(n);
    for (int node = 0; node < n; ++node) {
        QuadMat R(n, std::vector<QuadElem>(n));
        for (int c = 0; c < n; ++c) {
            R[c][c] = QuadElem(1);
            R[node][c] -= g[node][c];  // e_c -> e_c - a_{node,c} e_node
        }
        out.push_back(std::move(R));
    }
    return out;
}

} // namespace coxred
