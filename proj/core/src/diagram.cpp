#include "coxred/diagram.hpp"

#include <algorithm>
#include <cctype>

#include "coxred/errors.hpp"

namespace coxred {

bool operator==(const EdgeLabel& a, const EdgeLabel& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<AngleLabel>(a))
        return std::get<AngleLabel>(a).m == std::get<AngleLabel>(b).m;
    if (std::holds_alternative<GramLabel>(a))
        return std::get<GramLabel>(a).value == std::get<GramLabel>(b).value;
    return true;
}

std::string label_str(const EdgeLabel& l) {
    if (const auto* a = std::get_if<AngleLabel>(&l)) return std::to_string(a->m);
    if (std::holds_alternative<InfinityLabel>(l)) return "inf";
    return "g=" + std::get<GramLabel>(l).value.str();
}

void CoxeterDiagram::set_edge(int i, int j, EdgeLabel label) {
    if (i == j) throw LabelError("self-edge at node " + std::to_string(i));
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw ParseError("node index out of range: " + std::to_string(std::max(i, j)));
    if (i > j) std::swap(i, j);
    edges_[{i, j}] = std::move(label);
}

const EdgeLabel* CoxeterDiagram::edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = edges_.find({i, j});
    return it == edges_.end() ? nullptr : &it->second;
}

int CoxeterDiagram::angle_label(int i, int j) const {
    const EdgeLabel* l = edge(i, j);
    if (!l) return 2;
    if (const auto* a = std::get_if<AngleLabel>(l)) return a->m;
    return 0;
}

bool CoxeterDiagram::is_connected() const {
    return n_ == 0 || components().size() == 1;
}

std::vector<std::vector<int>> CoxeterDiagram::components() const {
    std::vector<int> comp(n_ + 1, 0);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= n_; ++s) {
        if (comp[s]) continue;
        std::vector<int> stack{s}, nodes;
        comp[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            nodes.push_back(u);
            for (int v = 1; v <= n_; ++v)
                if (!comp[v] && edge(u, v)) { comp[v] = 1; stack.push_back(v); }
        }
        std::sort(nodes.begin(), nodes.end());
        out.push_back(std::move(nodes));
    }
    return out;
}

CoxeterDiagram CoxeterDiagram::induced(const std::vector<int>& nodes) const {
    CoxeterDiagram d(static_cast<int>(nodes.size()));
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = i + 1; j < nodes.size(); ++j)
            if (const EdgeLabel* l = edge(nodes[i], nodes[j]))
                d.set_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1, *l);
    return d;
}

std::string CoxeterDiagram::str() const {
    std::string s = "nodes=" + std::to_string(n_);
    for (const auto& [pair, label] : edges_)
        s += "; " + std::to_string(pair.first) + "-" + std::to_string(pair.second) + ":" + label_str(label);
    return s;
}

namespace {

struct Scan {
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    bool eat_word(const char* w) {
        skip();
        size_t n = std::string(w).size();
        if (s.compare(pos, n, w) == 0) { pos += n; return true; }
        return false;
    }
    long integer() {
        skip();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }
    bool done() {
        skip();
        return pos >= s.size();
    }
};

EdgeLabel make_angle_label(long m, Scan& sc) {
    if (m < 2 || m > 6)
        throw LabelError("edge label " + std::to_string(m) +
                         " unsupported (angle labels are limited to 2..6; use inf or g=...)" +
                         " near position " + std::to_string(sc.pos));
    return AngleLabel{static_cast<int>(m)};
}

} // namespace

CoxeterDiagram parse_diagram(const std::string& text) {
    Scan sc{text};
    if (sc.eat('[')) {
        std::vector<long> labels;
        labels.push_back(sc.integer());
        while (sc.eat(',')) labels.push_back(sc.integer());
        if (!sc.eat(']')) sc.fail("expected ']'");
        if (!sc.done()) sc.fail("trailing input");
        CoxeterDiagram d(static_cast<int>(labels.size()) + 1);
        for (size_t i = 0; i < labels.size(); ++i) {
            EdgeLabel l = make_angle_label(labels[i], sc);
            if (labels[i] != 2) d.set_edge(static_cast<int>(i) + 1, static_cast<int>(i) + 2, l);
        }
        return d;
    }
    if (!sc.eat_word("nodes=")) sc.fail("expected '[' or 'nodes='");
    long n = sc.integer();
    if (n < 1) sc.fail("node count must be positive");
    CoxeterDiagram d(static_cast<int>(n));
    while (sc.eat(';')) {
        if (sc.done()) break;
        long i = sc.integer();
        if (!sc.eat('-')) sc.fail("expected '-'");
        long j = sc.integer();
        if (!sc.eat(':')) sc.fail("expected ':'");
        sc.skip();
        if (sc.eat_word("inf")) {
            d.set_edge(static_cast<int>(i), static_cast<int>(j), InfinityLabel{});
        } else if (sc.eat_word("g=")) {
            size_t start = sc.pos;
            while (sc.pos < sc.s.size() && sc.s[sc.pos] != ';') ++sc.pos;
            MultiQuad v = MultiQuad::parse(sc.s.substr(start, sc.pos - start));
            if (!((v + MultiQuad(2)).sign() < 0))
                throw LabelError("explicit Gram entry must be < -2, got " + v.str());
            d.set_edge(static_cast<int>(i), static_cast<int>(j), GramLabel{v});
        } else {
            long m = sc.integer();
            EdgeLabel l = make_angle_label(m, sc);
            if (m != 2) d.set_edge(static_cast<int>(i), static_cast<int>(j), l);
        }
    }
    if (!sc.done()) sc.fail("trailing input");
    return d;
}

MultiQuad gram_entry_for_angle(int m) {
    switch (m) {
        case 2: return MultiQuad(0);
        case 3: return MultiQuad(-1);
        case 4: return -MultiQuad::sqrt_of(2);                          // -2cos(pi/4)
        case 5: {                                                       // -2cos(pi/5) = -(1+sqrt5)/2
            MultiQuad v(Rational(-1, 2));
            v.set_coeff(MultiQuad::slot_of(5), Rational(-1, 2));
            return v;
        }
        case 6: return -MultiQuad::sqrt_of(3);                          // -2cos(pi/6)
        default: throw LabelError("unsupported angle label " + std::to_string(m));
    }
}

MultiQuad gram_entry(const EdgeLabel* label) {
    if (!label) return MultiQuad(0);
    if (const auto* a = std::get_if<AngleLabel>(label)) return gram_entry_for_angle(a->m);
    if (std::holds_alternative<InfinityLabel>(*label)) return MultiQuad(-2);
    return std::get<GramLabel>(*label).value;
}

std::vector<std::vector<MultiQuad>> gram_matrix(const CoxeterDiagram& d) {
    int n = d.node_count();
    std::vector<std::vector<MultiQuad>> g(n, std::vector<MultiQuad>(n));
    for (int i = 0; i < n; ++i) {
        g[i][i] = MultiQuad(2);
        for (int j = i + 1; j < n; ++j) {
            g[i][j] = gram_entry(d.edge(i + 1, j + 1));
            g[j][i] = g[i][j];
        }
    }
    return g;
}

CoxeterDiagram delta2() { return parse_diagram("[5,3,3,4]"); }
CoxeterDiagram delta3() { return parse_diagram("[5,3,3,5]"); }

} // namespace coxred
