#include "coxred/reduction.hpp"

#include <cmath>
#include <stdexcept>

#include "coxred/errors.hpp"

namespace coxred {

std::string FormClass::str() const {
    std::string s = "dim " + std::to_string(dim) + ", witt " + std::to_string(witt_index);
    if (dim % 2 == 0)
        s += std::string(", type ") + epsilon;
    else if (disc_square)
        s += std::string(", disc ") + (*disc_square ? "square" : "nonsquare");
    return s;
}

namespace {

FqMat residue_matrix(const QuadMat& m, const PrimeIdeal& P) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    FqMat out(P.field(), rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.set(i, j, P.residue_code(m[i][j]));
    return out;
}

void verify_orthogonal(const FqMat& g, const FqMat& form, const char* what) {
    if (!(g.transposed() * form * g == form))
        throw std::logic_error(std::string("reduced generator fails g^T F g = F (") + what + ")");
}

} // namespace

FiniteRep reduce(const ReflectionLattice& lattice, const PrimeIdeal& P) {
    if (lattice.field_D() && P.D() && *lattice.field_D() != *P.D())
        throw NotInField("prime ideal lies in a different field than the lattice");
    if (lattice.field_D() && !P.D())
        throw NotInField("lattice over Q(sqrt" + std::to_string(*lattice.field_D()) +
                         ") reduced at a rational prime; use splitting()");

    FiniteRep rep;
    rep.field = P.field();
    rep.dim = lattice.dim();
    if (lattice.has_unit_e_basis()) {
        rep.basis = "e";
        rep.form = residue_matrix(lattice.e_gram(), P);
        for (const auto& R : lattice.e_reflections()) rep.generators.push_back(residue_matrix(R, P));
    } else {
        rep.basis = "words";
        rep.form = residue_matrix(lattice.basis_gram(), P);
        for (const auto& R : lattice.reflections()) rep.generators.push_back(residue_matrix(R, P));
    }
    for (const auto& g : rep.generators) verify_orthogonal(g, rep.form, "reduce");

    // radical in reduced row echelon form, its pivot columns, and the
    // coordinate complement W
    const Fq& F = *rep.field;
    rep.radical = rep.form.kernel();
    std::vector<int> pivot_col(rep.radical.rows(), -1);
    {
        FqMat& rad = rep.radical;
        int rank = 0;
        for (int col = 0; col < rep.dim && rank < rad.rows(); ++col) {
            int piv = -1;
            for (int r = rank; r < rad.rows(); ++r)
                if (rad.at(r, col) != 0) { piv = r; break; }
            if (piv < 0) continue;
            if (piv != rank)
                for (int j = 0; j < rep.dim; ++j) {
                    auto t = rad.at(piv, j);
                    rad.set(piv, j, rad.at(rank, j));
                    rad.set(rank, j, t);
                }
            uint16_t d = F.inv(rad.at(rank, col));
            for (int j = 0; j < rep.dim; ++j) rad.set(rank, j, F.mul(rad.at(rank, j), d));
            for (int r = 0; r < rad.rows(); ++r) {
                if (r == rank) continue;
                uint16_t f = rad.at(r, col);
                if (f == 0) continue;
                for (int j = 0; j < rep.dim; ++j)
                    rad.set(r, j, F.sub(rad.at(r, j), F.mul(f, rad.at(rank, j))));
            }
            pivot_col[rank] = col;
            ++rank;
        }
    }
    std::vector<int> is_radical_pivot(rep.dim, 0);
    for (int pc : pivot_col)
        if (pc >= 0) is_radical_pivot[pc] = 1;
    for (int c = 0; c < rep.dim; ++c)
        if (!is_radical_pivot[c]) rep.complement_cols.push_back(c);

    int wd = static_cast<int>(rep.complement_cols.size());
    rep.form_w = FqMat(rep.field, wd, wd);
    for (int i = 0; i < wd; ++i)
        for (int j = 0; j < wd; ++j)
            rep.form_w.set(i, j, rep.form.at(rep.complement_cols[i], rep.complement_cols[j]));

    // projection N -> W along the radical: subtract radical rows to clear
    // the radical-pivot coordinates
    auto project = [&](std::vector<uint16_t> x) {
        for (int r = 0; r < rep.radical.rows(); ++r) {
            uint16_t t = x[pivot_col[r]];
            if (t == 0) continue;
            for (int c = 0; c < rep.dim; ++c)
                x[c] = F.sub(x[c], F.mul(t, rep.radical.at(r, c)));
        }
        std::vector<uint16_t> w(wd);
        for (int i = 0; i < wd; ++i) w[i] = x[rep.complement_cols[i]];
        return w;
    };

    for (const auto& g : rep.generators) {
        FqMat gw(rep.field, wd, wd);
        for (int col = 0; col < wd; ++col) {
            std::vector<uint16_t> x(rep.dim, 0);
            for (int r = 0; r < rep.dim; ++r) x[r] = g.at(r, rep.complement_cols[col]);
            auto w = project(std::move(x));
            for (int r = 0; r < wd; ++r) gw.set(r, col, w[r]);
        }
        verify_orthogonal(gw, rep.form_w, "quotient");
        rep.generators_w.push_back(std::move(gw));
    }
    return rep;
}

uint16_t quadratic_value(const FqMat& form, const std::vector<uint16_t>& v) {
    const Fq& F = form.field();
    uint16_t acc = 0;
    int n = form.rows();
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (v[j] == 0) continue;
            acc = F.add(acc, F.mul(F.mul(v[i], v[j]), form.at(i, j)));
        }
    }
    return F.mul(acc, F.inv(F.from_int(2)));  // q odd
}

namespace {

uint16_t bilinear(const FqMat& form, const std::vector<uint16_t>& x, const std::vector<uint16_t>& y) {
    const Fq& F = form.field();
    uint16_t acc = 0;
    int n = form.rows();
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            acc = F.add(acc, F.mul(F.mul(x[i], y[j]), form.at(i, j)));
    }
    return acc;
}

// first isotropic vector of the restriction of `form` to span(basis), in
// projective scan order; empty when none exists
std::vector<uint16_t> find_isotropic(const FqMat& form, const std::vector<std::vector<uint16_t>>& basis,
                                     long cap) {
    const Fq& F = form.field();
    int k = static_cast<int>(basis.size());
    int n = form.rows();
    double size = 0;
    for (int lead = 0; lead < k; ++lead) size += std::pow(static_cast<double>(F.q()), k - lead - 1);
    if (size > static_cast<double>(cap))
        throw CapExceeded("isotropic search space exceeds cap");
    std::vector<uint16_t> coeff(k, 0);
    // scan vectors with first nonzero coefficient normalized to 1
    for (int lead = k - 1; lead >= 0; --lead) {
        coeff.assign(k, 0);
        coeff[lead] = 1;
        for (;;) {
            std::vector<uint16_t> v(n, 0);
            for (int i = lead; i < k; ++i) {
                if (coeff[i] == 0) continue;
                for (int j = 0; j < n; ++j) v[j] = F.add(v[j], F.mul(coeff[i], basis[i][j]));
            }
            if (quadratic_value(form, v) == 0) return v;
            // odometer over coefficients after the leading 1
            int pos = k - 1;
            while (pos > lead) {
                coeff[pos] = static_cast<uint16_t>((coeff[pos] + 1) % F.q());
                if (coeff[pos] != 0) break;
                --pos;
            }
            if (pos == lead) break;
        }
    }
    return {};
}

} // namespace

long count_isotropic(const FqMat& form) {
    const Fq& F = form.field();
    int n = form.rows();
    long count = 0;
    std::vector<uint16_t> v(n, 0);
    for (;;) {
        if (quadratic_value(form, v) == 0) ++count;
        int pos = n - 1;
        while (pos >= 0) {
            v[pos] = static_cast<uint16_t>((v[pos] + 1) % F.q());
            if (v[pos] != 0) break;
            --pos;
        }
        if (pos < 0) break;
    }
    return count;
}

FormClass classify_form(const FqMat& form, long projective_cap) {
    const Fq& F = form.field();
    if (F.p() == 2)
        throw std::invalid_argument("characteristic-2 forms are not classified");
    int n = form.rows();
    {
        FqMat k = form.kernel();
        if (k.rows() != 0) throw std::invalid_argument("classify_form requires a nondegenerate form");
    }

    FormClass cls;
    cls.dim = n;

    // current orthogonal complement, as a basis of row vectors
    std::vector<std::vector<uint16_t>> basis;
    for (int i = 0; i < n; ++i) {
        std::vector<uint16_t> e(n, 0);
        e[i] = 1;
        basis.push_back(std::move(e));
    }

    while (static_cast<int>(basis.size()) >= 2) {
        auto v = find_isotropic(form, basis, projective_cap);
        if (v.empty()) break;
        // partner u with B(v,u) = 1, then adjust to q(u) = 0
        std::vector<uint16_t> u;
        for (const auto& b : basis) {
            if (bilinear(form, v, b) != 0) { u = b; break; }
        }
        if (u.empty()) throw std::logic_error("isotropic vector with no pairing partner");
        uint16_t s = F.inv(bilinear(form, v, u));
        for (auto& x : u) x = F.mul(x, s);
        uint16_t qu = quadratic_value(form, u);
        for (int i = 0; i < n; ++i) u[i] = F.sub(u[i], F.mul(qu, v[i]));
        ++cls.witt_index;
        // pass to the orthogonal complement of the hyperbolic plane <v, u>
        std::vector<std::vector<uint16_t>> next;
        for (const auto& b : basis) {
            uint16_t bv = bilinear(form, b, v);
            uint16_t bu = bilinear(form, b, u);
            std::vector<uint16_t> w = b;
            for (int i = 0; i < n; ++i) {
                w[i] = F.sub(w[i], F.mul(bv, u[i]));
                w[i] = F.sub(w[i], F.mul(bu, v[i]));
            }
            next.push_back(std::move(w));
        }
        // reduce to an independent spanning set of the complement
        std::vector<std::vector<uint16_t>> indep;
        for (auto& w : next) {
            std::vector<uint16_t> r = w;
            for (const auto& row : indep) {
                int lead = -1;
                for (int c = 0; c < n; ++c)
                    if (row[c] != 0) { lead = c; break; }
                uint16_t f = F.mul(r[lead], F.inv(row[lead]));
                if (f != 0)
                    for (int c = 0; c < n; ++c) r[c] = F.sub(r[c], F.mul(f, row[c]));
            }
            bool zero = true;
            for (int c = 0; c < n; ++c)
                if (r[c] != 0) { zero = false; break; }
            if (!zero) indep.push_back(std::move(r));
        }
        basis = std::move(indep);
    }

    if (n % 2 == 0) {
        cls.epsilon = (2 * cls.witt_index == n) ? '+' : '-';
    } else {
        uint16_t det = form.determinant();
        cls.disc_square = F.is_square(det);
    }
    return cls;
}

Integer orthogonal_group_order(int dim, unsigned q, char epsilon) {
    Integer Q(static_cast<long>(q));
    if (dim <= 0) return 1;
    if (dim % 2 == 0) {
        int m = dim / 2;
        Integer order = 2;
        Integer qp;
        mpz_pow_ui(qp.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(m) * (m - 1));
        order *= qp;
        Integer qm;
        mpz_pow_ui(qm.get_mpz_t(), Q.get_mpz_t(), m);
        order *= epsilon == '+' ? Integer(qm - 1) : Integer(qm + 1);
        for (int i = 1; i <= m - 1; ++i) {
            Integer q2i;
            mpz_pow_ui(q2i.get_mpz_t(), Q.get_mpz_t(), 2u * i);
            order *= q2i - 1;
        }
        return order;
    }
    int m = (dim - 1) / 2;
    Integer order = 2;
    Integer qp;
    mpz_pow_ui(qp.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(m) * m);
    order *= qp;
    for (int i = 1; i <= m; ++i) {
        Integer q2i;
        mpz_pow_ui(q2i.get_mpz_t(), Q.get_mpz_t(), 2u * i);
        order *= q2i - 1;
    }
    return order;
}

Integer orthogonal_group_order(const FormClass& cls, unsigned q) {
    return orthogonal_group_order(cls.dim, q, cls.dim % 2 == 0 ? cls.epsilon : '+');
}

} // namespace coxred
