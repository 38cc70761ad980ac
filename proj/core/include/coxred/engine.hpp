#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxred/fq.hpp"
#include "coxred/presentation.hpp"

namespace coxred {

// Breadth-first closure of a finite matrix group: canonical byte keys map
// elements to dense indices (0 = identity), with per-generator
// multiplication recorded.  The optional normalizer canonicalizes elements
// after every product (used for projective groups); it must be a
// homomorphism-compatible choice of coset representatives.
class ElementTable {
public:
    using Normalizer = std::function<void(FqMat&)>;

    // For an empty generator list the ambient field and dimension must be
    // supplied; the result is the trivial group.
    static ElementTable enumerate(const std::vector<FqMat>& generators, size_t cap = 1000000,
                                  Normalizer normalizer = nullptr,
                                  std::shared_ptr<const Fq> field = nullptr, int dim = 0);

    size_t order() const { return elems_.size(); }
    int generator_count() const { return ngens_; }
    const FqMat& element(int i) const { return elems_[i]; }
    int mult(int i, int gen) const { return mult_[i][gen]; }  // index of elems_[i] * generator
    int inverse(int i) const { return inv_[i]; }
    int index_of(const FqMat& m) const;                       // -1 when absent

    // multiply two table elements (by following the generator word of j)
    int compose(int i, int j) const;
    // a word of generator indices reaching element i from the identity
    std::vector<int> word_of(int i) const;

private:
    std::vector<FqMat> elems_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> mult_;
    std::vector<int> inv_;
    std::vector<int> parent_, letter_;  // BFS tree for word reconstruction
    int ngens_ = 0;
    Normalizer normalizer_;
};

// Order of the subgroup generated by a subset of the table's generators
// (0-based generator indices), by closure inside the index space.
Integer subgroup_order(const ElementTable& table, const std::vector<int>& generator_subset);

// Rows are cosets of a finite-index subgroup, columns are the presentation
// generators followed by their inverses; entries are image cosets.  Row 0 is
// the subgroup itself.
struct CosetTable {
    int ncosets = 0;
    int ngens = 0;
    std::vector<std::vector<int>> next;  // [coset][2*ngens]: g_1..g_m, g_1^-1..g_m^-1

    int act(int coset, int letter) const {  // letter as in Word: +g or -g
        return letter > 0 ? next[coset][letter - 1] : next[coset][ngens + (-letter) - 1];
    }
};

// Coset table of the kernel-containing subgroup whose cosets are exactly the
// elements of the finite image: images[i] is the table element index of
// generator i+1.
CosetTable schreier_coset_table(const Presentation& pres, const ElementTable& image,
                                const std::vector<int>& images);

struct SchreierGenerator {
    int coset;
    int gen;  // 1-based presentation generator
};

struct RewriteResult {
    Presentation pres;
    std::vector<SchreierGenerator> schreier;  // one per new generator
    std::vector<Word> transversal;            // word (in old generators) reaching each coset
};

// Subgroup presentation on the Schreier generators of a complete coset
// table: transversal from a breadth-first tree over the generator columns in
// input order, relators rewritten at every coset and freely reduced.
RewriteResult reidemeister_schreier(const Presentation& pres, const CosetTable& table);

struct SimplifyResult {
    Presentation pres;
    std::vector<int> kept;  // for each surviving generator, its original 0-based index
};

struct SimplifyOptions {
    int target_generators = 0;     // stop when at most this many remain
    int max_passes = 200;
    bool check_abelianization = false;  // assert invariants after every move (slow)
};

// Generator elimination (single-occurrence relators), free/cyclic reduction,
// and replacement of long subwords through shorter overlapping relators.
SimplifyResult tietze_simplify(const Presentation& pres, const SimplifyOptions& opt = {});

} // namespace coxred
