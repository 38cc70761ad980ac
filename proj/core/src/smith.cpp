#include "coxred/smith.hpp"

#include <cstdlib>

namespace coxred {

namespace {

// Position of the nonzero entry with smallest absolute value in the
// trailing block starting at (t, t); (-1, -1) when the block is zero.
std::pair<int, int> smallest_pivot(const IntMat& m, int t) {
    int bi = -1, bj = -1;
    for (int i = t; i < m.rows; ++i)
        for (int j = t; j < m.cols; ++j) {
            const Integer& x = m.at(i, j);
            if (x == 0) continue;
            if (bi < 0 || cmp(abs(x), abs(m.at(bi, bj))) < 0) { bi = i; bj = j; }
        }
    return {bi, bj};
}

} // namespace

SnfResult smith_normal_form(IntMat m) {
    SnfResult out;
    int t = 0;
    int bound = std::min(m.rows, m.cols);
    while (t < bound) {
        auto [pi, pj] = smallest_pivot(m, t);
        if (pi < 0) break;
        // move pivot to (t, t)
        if (pi != t)
            for (int j = 0; j < m.cols; ++j) swap(m.at(pi, j), m.at(t, j));
        if (pj != t)
            for (int i = 0; i < m.rows; ++i) swap(m.at(i, pj), m.at(i, t));

        bool clean = true;
        // clear column t
        for (int i = t + 1; i < m.rows; ++i) {
            if (m.at(i, t) == 0) continue;
            Integer q = m.at(i, t) / m.at(t, t);  // truncated division keeps |remainder| < |pivot|
            if (q != 0)
                for (int j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
            if (m.at(i, t) != 0) clean = false;
        }
        // clear row t
        for (int j = t + 1; j < m.cols; ++j) {
            if (m.at(t, j) == 0) continue;
            Integer q = m.at(t, j) / m.at(t, t);
            if (q != 0)
                for (int i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
            if (m.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; repick the pivot

        // divisibility: the pivot must divide the whole trailing block
        bool divides_all = true;
        for (int i = t + 1; i < m.rows && divides_all; ++i)
            for (int j = t + 1; j < m.cols; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    // fold that row into row t and restart the step
                    for (int jj = t; jj < m.cols; ++jj) m.at(t, jj) += m.at(i, jj);
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;

        if (m.at(t, t) < 0) m.at(t, t) = -m.at(t, t);
        out.factors.push_back(m.at(t, t));
        ++t;
    }
    out.free_rank = m.cols - static_cast<long>(out.factors.size());
    return out;
}

SnfResult abelianization(const Presentation& p) {
    IntMat m(static_cast<int>(p.relators.size()), p.generator_count);
    for (int i = 0; i < m.rows; ++i)
        for (int letter : p.relators[i]) {
            int g = std::abs(letter) - 1;
            m.at(i, g) += letter > 0 ? 1 : -1;
        }
    SnfResult s = smith_normal_form(std::move(m));
    // a presentation with no relators still presents a free group
    s.free_rank = p.generator_count - static_cast<long>(s.factors.size());
    std::vector<Integer> nontrivial = s.nontrivial_factors();
    s.factors = std::move(nontrivial);
    return s;
}

} // namespace coxred
