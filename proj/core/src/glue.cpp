#include "coxred/glue.hpp"

#include "coxred/errors.hpp"

namespace coxred {

namespace {

MultiQuad entry(const CoxeterDiagram& d, int i, int j) {
    if (i == j) return MultiQuad(2);
    return gram_entry(d.edge(i, j));
}

} // namespace

FaceSystem double_at_face(const CoxeterDiagram& d, int i) {
    int n = d.node_count();
    if (i < 1 || i > n) throw std::invalid_argument("face index out of range");
    FaceSystem fs;
    for (int j = 1; j <= n; ++j)
        if (j != i) fs.faces.push_back({j, false});
    for (int j = 1; j <= n; ++j)
        if (j != i && d.edge(i, j)) fs.faces.push_back({j, true});  // r_i fixes e_j when a_ij = 0

    auto pair_entry = [&](const Face& x, const Face& y) -> MultiQuad {
        if (x.reflected == y.reflected) return entry(d, x.node, y.node);
        // B(r_i e_j, e_k) = a_jk - a_ij a_ik
        int j = x.reflected ? x.node : y.node;
        int k = x.reflected ? y.node : x.node;
        return entry(d, j, k) - entry(d, i, j) * entry(d, i, k);
    };

    size_t m = fs.faces.size();
    fs.gram.assign(m, std::vector<MultiQuad>(m));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            fs.gram[a][b] = a == b ? MultiQuad(2) : pair_entry(fs.faces[a], fs.faces[b]);
    return fs;
}

Recognition recognize(const FaceSystem& fs) {
    int n = static_cast<int>(fs.faces.size());
    CoxeterDiagram d(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const MultiQuad& v = fs.gram[a][b];
            if (v.is_zero()) continue;
            bool matched = false;
            for (int m = 3; m <= 6; ++m) {
                if (v == gram_entry_for_angle(m)) {
                    d.set_edge(a + 1, b + 1, AngleLabel{m});
                    matched = true;
                    break;
                }
            }
            if (matched) continue;
            if (v == MultiQuad(-2)) {
                d.set_edge(a + 1, b + 1, InfinityLabel{});
            } else if ((v + MultiQuad(2)).sign() < 0) {
                d.set_edge(a + 1, b + 1, GramLabel{v});
            } else {
                return {std::nullopt, v};
            }
        }
    return {d, std::nullopt};
}

CoxeterDiagram recognize_or_throw(const FaceSystem& fs) {
    Recognition r = recognize(fs);
    if (!r.diagram)
        throw NotCoxeter("Gram entry " + r.offending_entry->str() + " admits no diagram label");
    return *r.diagram;
}

Rational index_relation(const CoxeterDiagram& d_big, const CoxeterDiagram& d_small) {
    Rational big = euler_characteristic(d_big);
    Rational small = euler_characteristic(d_small);
    if (big == 0 || small == 0)
        throw ZeroEulerCharacteristic("index relation needs nonzero Euler characteristics");
    Rational r = big / small;
    r.canonicalize();
    return r;
}

} // namespace coxred
