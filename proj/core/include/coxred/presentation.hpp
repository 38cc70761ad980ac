#pragma once

#include <string>
#include <vector>

#include "coxred/diagram.hpp"

namespace coxred {

// A word in free-group letters: +g means generator g, -g its inverse
// (generators numbered from 1).
using Word = std::vector<int>;

Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);
std::string word_str(const Word& w);

struct Presentation {
    int generator_count = 0;
    std::vector<Word> relators;  // freely reduced

    std::string str() const;
    size_t total_relator_length() const;
};

// Standard Coxeter presentation of a diagram: involutions r_i^2 plus
// (r_i r_j)^{m_ij} for every finite label m_ij >= 2; infinite and explicit
// Gram bonds contribute no braid relator.
Presentation coxeter_presentation(const CoxeterDiagram& d);

} // namespace coxred
