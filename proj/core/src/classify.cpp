#include "coxred/classify.hpp"

#include <algorithm>
#include <functional>

#include "coxred/errors.hpp"
#include "coxred/exact_linalg.hpp"

namespace coxred {

namespace {

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer pow2(int n) {
    Integer f = 1;
    f <<= n;
    return f;
}

// Recognize one connected component (nodes of `d` restricted to `nodes`).
// Returns nullopt when not finite.
std::optional<FiniteComponent> classify_component(const CoxeterDiagram& d, const std::vector<int>& nodes) {
    int n = static_cast<int>(nodes.size());
    FiniteComponent out;
    out.nodes = nodes;

    // gram/infinity bonds never occur in a finite group
    int edge_count = 0;
    std::vector<int> degree(n, 0);
    std::vector<std::vector<int>> adj(n);
    std::vector<std::vector<int>> label(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const EdgeLabel* l = d.edge(nodes[i], nodes[j]);
            if (!l) continue;
            if (!std::holds_alternative<AngleLabel>(*l)) return std::nullopt;
            int m = std::get<AngleLabel>(*l).m;
            if (m == 2) continue;
            ++edge_count;
            ++degree[i];
            ++degree[j];
            adj[i].push_back(j);
            adj[j].push_back(i);
            label[i][j] = label[j][i] = m;
        }

    if (n == 1) {
        out.type = "A1";
        out.order = 2;
        return out;
    }
    if (n == 2) {
        int m = label[0][1];
        out.order = 2 * m;
        if (m == 3) out.type = "A2";
        else if (m == 4) out.type = "B2";
        else if (m == 6) out.type = "G2";
        else out.type = "I2(" + std::to_string(m) + ")";
        return out;
    }

    if (edge_count != n - 1) return std::nullopt;  // a cycle is affine or worse

    int branch = -1;
    for (int i = 0; i < n; ++i) {
        if (degree[i] >= 4) return std::nullopt;
        if (degree[i] == 3) {
            if (branch >= 0) return std::nullopt;
            branch = i;
        }
    }

    std::vector<int> high;  // labels > 3
    for (int i = 0; i < n; ++i)
        for (int j : adj[i])
            if (i < j && label[i][j] > 3) high.push_back(label[i][j]);

    if (branch >= 0) {
        // D_n or E_6, E_7, E_8: one trivalent node, every bond simple
        if (!high.empty()) return std::nullopt;
        std::vector<int> arms;
        for (int s : adj[branch]) {
            int len = 1, prev = branch, cur = s;
            while (degree[cur] == 2) {
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) {
            out.type = "D" + std::to_string(n);
            out.order = pow2(n - 1) * factorial(n);
            return out;
        }
        if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
            int which = arms[2] + 4;  // 6, 7, 8
            out.type = "E" + std::to_string(which);
            out.order = which == 6 ? Integer(51840) : which == 7 ? Integer(2903040) : Integer(696729600);
            return out;
        }
        return std::nullopt;
    }

    // path: read labels end to end
    if (high.size() >= 2) return std::nullopt;
    if (high.empty()) {
        out.type = "A" + std::to_string(n);
        out.order = factorial(n + 1);
        return out;
    }
    int end = -1;
    for (int i = 0; i < n; ++i)
        if (degree[i] == 1) { end = i; break; }
    std::vector<int> seq;  // labels along the path
    int prev = -1, cur = end;
    while (true) {
        int nxt = -1;
        for (int v : adj[cur])
            if (v != prev) { nxt = v; break; }
        if (nxt < 0) break;
        seq.push_back(label[cur][nxt]);
        prev = cur;
        cur = nxt;
    }
    int m = high[0];
    bool at_end = seq.front() == m || seq.back() == m;
    if (m == 4) {
        if (at_end) {
            out.type = "B" + std::to_string(n);
            out.order = pow2(n) * factorial(n);
            return out;
        }
        if (n == 4 && seq[1] == 4) {
            out.type = "F4";
            out.order = 1152;
            return out;
        }
        return std::nullopt;
    }
    if (m == 5 && at_end && (n == 3 || n == 4)) {
        out.type = "H" + std::to_string(n);
        out.order = n == 3 ? Integer(120) : Integer(14400);
        return out;
    }
    return std::nullopt;
}

} // namespace

std::optional<FiniteTypeReport> finite_type(const CoxeterDiagram& d) {
    FiniteTypeReport report;
    for (const auto& comp : d.components()) {
        auto c = classify_component(d, comp);
        if (!c) return std::nullopt;
        report.total_order *= c->order;
        report.components.push_back(std::move(*c));
    }
    return report;
}

bool component_is_affine(const CoxeterDiagram& component) {
    if (finite_type(component)) return false;
    auto [pos, neg, zero] = symmetric_signature(gram_matrix(component));
    return neg == 0 && zero >= 1;
}

std::vector<bool> affine_type(const CoxeterDiagram& d) {
    std::vector<bool> out;
    for (const auto& comp : d.components())
        out.push_back(component_is_affine(d.induced(comp)));
    return out;
}

Rational euler_characteristic(const CoxeterDiagram& d) {
    int n = d.node_count();
    if (n > 24)
        throw UnclassifiableSubdiagram("Euler characteristic limited to 24 nodes");
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    Rational chi = 0;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask & (1ul << i)) subset.push_back(i + 1);
        auto ft = finite_type(d.induced(subset));
        if (!ft) continue;
        Rational term(1);
        term /= Rational(ft->total_order);
        if (subset.size() % 2) term = -term;
        chi += term;
    }
    chi.canonicalize();
    return chi;
}

std::vector<Subdiagram> parabolic_subdiagrams(const CoxeterDiagram& d, int corank) {
    int n = d.node_count();
    if (corank < 0 || corank > n)
        throw std::invalid_argument("corank out of range");
    int size = n - corank;
    std::vector<Subdiagram> out;
    std::vector<int> pick(size);
    // lexicographic enumeration of ascending index tuples
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == size) {
            std::vector<int> nodes(pick.begin(), pick.end());
            out.push_back({nodes, d.induced(nodes)});
            return;
        }
        for (int v = start; v <= n; ++v) {
            pick[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(1, 0);
    return out;
}

} // namespace coxred
