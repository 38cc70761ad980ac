#include "coxred/presentation.hpp"

namespace coxred {

Word free_reduce(Word w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word cyclic_reduce(Word w) {
    w = free_reduce(std::move(w));
    size_t i = 0, j = w.size();
    while (j > i + 1 && w[i] == -w[j - 1]) { ++i; --j; }
    return Word(w.begin() + i, w.begin() + j);
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(std::move(out));
}

std::string word_str(const Word& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(w[i]);
    }
    return s + "]";
}

std::string Presentation::str() const {
    std::string s = "<" + std::to_string(generator_count) + " gens |";
    for (const auto& r : relators) s += " " + word_str(r);
    return s + ">";
}

size_t Presentation::total_relator_length() const {
    size_t n = 0;
    for (const auto& r : relators) n += r.size();
    return n;
}

Presentation coxeter_presentation(const CoxeterDiagram& d) {
    Presentation p;
    p.generator_count = d.node_count();
    for (int i = 1; i <= d.node_count(); ++i)
        p.relators.push_back({i, i});
    for (int i = 1; i <= d.node_count(); ++i)
        for (int j = i + 1; j <= d.node_count(); ++j) {
            int m = d.angle_label(i, j);
            if (m == 0) continue;  // infinity or explicit Gram bond
            Word rel;
            for (int k = 0; k < m; ++k) { rel.push_back(i); rel.push_back(j); }
            p.relators.push_back(std::move(rel));
        }
    return p;
}

} // namespace coxred
