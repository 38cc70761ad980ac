#include "coxred/tensor.hpp"

#include "coxred/errors.hpp"

namespace coxred {

void normalize_mod_sign(FqMat& m) {
    const Fq& F = m.field();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            uint16_t x = m.at(i, j);
            if (x == 0) continue;
            unsigned p = F.p();
            if (x > p / 2) {
                for (int a = 0; a < m.rows(); ++a)
                    for (int b = 0; b < m.cols(); ++b) m.set(a, b, F.neg(m.at(a, b)));
            }
            return;
        }
}

MatrixPair canonical_pair(FqMat sigma, FqMat tau) {
    const Fq& F = sigma.field();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            uint16_t x = sigma.at(i, j);
            if (x == 0) continue;
            if (x > F.p() / 2) {
                sigma = sigma.negated();
                tau = tau.negated();
            }
            return {std::move(sigma), std::move(tau)};
        }
    throw std::invalid_argument("zero matrix in pair");
}

FqMat tensor_action(const MatrixPair& pair) {
    auto field = pair.sigma.field_ptr();
    const Fq& F = *field;
    FqMat out(field, 4, 4);
    // basis order (11, 12, 21, 22): row (i,j), column (k,l)
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out.set(2 * i + j, 2 * k + l, F.mul(pair.sigma.at(i, k), pair.tau.at(j, l)));
    return out;
}

FqMat swap_rho(const std::shared_ptr<const Fq>& f5) {
    FqMat r(f5, 4, 4);
    r.set(0, 0, 1);
    r.set(1, 2, 1);
    r.set(2, 1, 1);
    r.set(3, 3, 1);
    return r;
}

FqMat tensor_form(const std::shared_ptr<const Fq>& f5) {
    FqMat g(f5, 4, 4);
    uint16_t one = 1, minus = f5->neg(1);
    g.set(0, 3, one);
    g.set(3, 0, one);
    g.set(1, 2, minus);
    g.set(2, 1, minus);
    return g;
}

std::optional<MatrixPair> decompose(const FqMat& m) {
    auto field = m.field_ptr();
    const Fq& F = *field;
    // blocks B(i,k) = sigma_{ik} * tau
    auto block = [&](int i, int k) {
        FqMat b(field, 2, 2);
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) b.set(j, l, m.at(2 * i + j, 2 * k + l));
        return b;
    };
    int bi = -1, bk = -1;
    FqMat lead;
    for (int i = 0; i < 2 && bi < 0; ++i)
        for (int k = 0; k < 2; ++k) {
            FqMat b = block(i, k);
            bool zero = true;
            for (int j = 0; j < 2 && zero; ++j)
                for (int l = 0; l < 2; ++l)
                    if (b.at(j, l) != 0) { zero = false; break; }
            if (!zero) { bi = i; bk = k; lead = b; break; }
        }
    if (bi < 0) return std::nullopt;

    // lead = sigma_{bi,bk} tau with det tau = 1, so det lead must be a square
    uint16_t det = lead.determinant();
    if (det == 0) return std::nullopt;
    uint16_t s = 0;
    for (unsigned x = 1; x < F.q(); ++x)
        if (F.mul(static_cast<uint16_t>(x), static_cast<uint16_t>(x)) == det) { s = static_cast<uint16_t>(x); break; }
    if (s == 0) return std::nullopt;

    uint16_t sinv = F.inv(s);
    FqMat tau(field, 2, 2);
    for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) tau.set(j, l, F.mul(lead.at(j, l), sinv));

    FqMat tau_inv = tau.inverse();
    FqMat sigma(field, 2, 2);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            FqMat scalar = block(i, k) * tau_inv;  // must be sigma_{ik} * I
            if (scalar.at(0, 1) != 0 || scalar.at(1, 0) != 0 || scalar.at(0, 0) != scalar.at(1, 1))
                return std::nullopt;
            sigma.set(i, k, scalar.at(0, 0));
        }
    if (sigma.determinant() != 1) return std::nullopt;
    MatrixPair pair = canonical_pair(std::move(sigma), std::move(tau));
    if (!(tensor_action(pair) == m)) return std::nullopt;
    return pair;
}

std::optional<TensorFrame> TensorFrame::davis_frame(const FiniteRep& rep) {
    if (!rep.field || rep.field->q() != 5 || rep.dim != 5 || rep.basis != "e") return std::nullopt;
    if (rep.radical_dim() != 1 || rep.quotient_dim() != 4) return std::nullopt;

    const Fq& F = *rep.field;
    // hyperbolic frame from the unit-normal basis: g1 = e1 - e2,
    // h1 = -e1 + e2 + e3, g2 = e1 + 2 e5, h2 = -e1 + 2 e5, projected to W
    auto project = [&](std::vector<uint16_t> x) -> std::optional<std::vector<uint16_t>> {
        // subtract radical rows to clear the radical pivots
        for (int r = 0; r < rep.radical.rows(); ++r) {
            int pc = -1;
            for (int c = 0; c < rep.dim; ++c)
                if (rep.radical.at(r, c) != 0) { pc = c; break; }
            uint16_t t = x[pc];
            if (t == 0) continue;
            for (int c = 0; c < rep.dim; ++c) x[c] = F.sub(x[c], F.mul(t, rep.radical.at(r, c)));
        }
        std::vector<uint16_t> w(rep.quotient_dim());
        for (size_t i = 0; i < rep.complement_cols.size(); ++i) w[i] = x[rep.complement_cols[i]];
        return w;
    };
    auto vec = [&](std::initializer_list<int> coords) {
        std::vector<uint16_t> x;
        for (int c : coords) x.push_back(F.from_int(c));
        return x;
    };
    auto g1 = project(vec({1, -1, 0, 0, 0}));
    auto h1 = project(vec({-1, 1, 1, 0, 0}));
    auto g2 = project(vec({1, 0, 0, 0, 2}));
    auto h2 = project(vec({-1, 0, 0, 0, 2}));
    if (!g1 || !h1 || !g2 || !h2) return std::nullopt;

    FqMat t(rep.field, 4, 4);
    std::vector<std::vector<uint16_t>> cols{*g1, *g2, *h2, *h1};
    for (auto& x : cols[2]) x = F.neg(x);  // third column is -h2
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) t.set(r, c, cols[c][r]);

    // the frame must pull the reduced form back to the tensor form
    if (!(t.transposed() * rep.form_w * t == tensor_form(rep.field))) return std::nullopt;
    return TensorFrame(std::move(t));
}

TensorFrame TensorFrame::extracted_frame(const FiniteRep& rep) {
    if (!rep.field || rep.field->q() != 5 || rep.quotient_dim() != 4)
        throw DecompositionFailure("tensor identification needs a 4-dimensional quotient over F_5");
    const Fq& F = *rep.field;
    const FqMat& form = rep.form_w;

    // extract two hyperbolic pairs (g1, h1), (g2, h2)
    auto bilinear = [&](const std::vector<uint16_t>& x, const std::vector<uint16_t>& y) {
        uint16_t acc = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) acc = F.add(acc, F.mul(F.mul(x[i], y[j]), form.at(i, j)));
        return acc;
    };
    std::vector<std::vector<uint16_t>> basis;
    for (int i = 0; i < 4; ++i) {
        std::vector<uint16_t> e(4, 0);
        e[i] = 1;
        basis.push_back(e);
    }
    std::vector<std::vector<uint16_t>> pairs;
    for (int round = 0; round < 2; ++round) {
        std::vector<uint16_t> v;
        // scan the current space for an isotropic vector
        int k = static_cast<int>(basis.size());
        std::vector<uint16_t> coeff(k, 0);
        bool found = false;
        for (int lead = 0; lead < k && !found; ++lead) {
            coeff.assign(k, 0);
            coeff[lead] = 1;
            for (;;) {
                std::vector<uint16_t> x(4, 0);
                for (int i = lead; i < k; ++i)
                    for (int j = 0; j < 4; ++j) x[j] = F.add(x[j], F.mul(coeff[i], basis[i][j]));
                if (quadratic_value(form, x) == 0) { v = x; found = true; break; }
                int pos = k - 1;
                while (pos > lead) {
                    coeff[pos] = static_cast<uint16_t>((coeff[pos] + 1) % F.q());
                    if (coeff[pos] != 0) break;
                    --pos;
                }
                if (pos == lead) break;
            }
        }
        if (!found) throw DecompositionFailure("quotient form is not of plus type");
        std::vector<uint16_t> u;
        for (const auto& b : basis)
            if (bilinear(v, b) != 0) { u = b; break; }
        uint16_t s = F.inv(bilinear(v, u));
        for (auto& x : u) x = F.mul(x, s);
        uint16_t qu = quadratic_value(form, u);
        for (int i = 0; i < 4; ++i) u[i] = F.sub(u[i], F.mul(qu, v[i]));
        pairs.push_back(v);
        pairs.push_back(u);
        // orthogonal complement of <v, u> inside the current space
        std::vector<std::vector<uint16_t>> next;
        for (const auto& b : basis) {
            uint16_t bv = bilinear(b, v), bu = bilinear(b, u);
            std::vector<uint16_t> w = b;
            for (int i = 0; i < 4; ++i) {
                w[i] = F.sub(w[i], F.mul(bv, u[i]));
                w[i] = F.sub(w[i], F.mul(bu, v[i]));
            }
            bool zero = true;
            for (int i = 0; i < 4; ++i)
                if (w[i] != 0) { zero = false; break; }
            if (zero) continue;
            bool dup = false;
            for (const auto& prev : next)
                if (prev == w) { dup = true; break; }
            if (!dup) next.push_back(w);
        }
        // keep an independent pair
        std::vector<std::vector<uint16_t>> indep;
        for (auto& w : next) {
            std::vector<uint16_t> r = w;
            for (const auto& row : indep) {
                int lead = -1;
                for (int c = 0; c < 4; ++c)
                    if (row[c] != 0) { lead = c; break; }
                uint16_t f = F.mul(r[lead], F.inv(row[lead]));
                if (f != 0)
                    for (int c = 0; c < 4; ++c) r[c] = F.sub(r[c], F.mul(f, row[c]));
            }
            bool zero = true;
            for (int c = 0; c < 4; ++c)
                if (r[c] != 0) { zero = false; break; }
            if (!zero) indep.push_back(std::move(r));
        }
        basis = std::move(indep);
    }

    FqMat t(rep.field, 4, 4);
    // columns (g1, g2, -h2, h1)
    std::vector<std::vector<uint16_t>> cols{pairs[0], pairs[2], pairs[3], pairs[1]};
    for (auto& x : cols[2]) x = F.neg(x);
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) t.set(r, c, cols[c][r]);
    if (!(t.transposed() * form * t == tensor_form(rep.field)))
        throw std::logic_error("extracted frame is not an isometry");
    return TensorFrame(std::move(t));
}

FqMat TensorFrame::conjugate_into_tensor(const FqMat& w_matrix) const {
    return tinv_ * w_matrix * t_;
}

FqMat TensorFrame::projective_first(const MatrixPair& pair) {
    FqMat s = pair.sigma;
    normalize_mod_sign(s);
    return s;
}

FqMat TensorFrame::second_factor(const MatrixPair& pair) {
    const Fq& F = pair.sigma.field();
    FqMat id = FqMat::identity(pair.sigma.field_ptr(), 2);
    if (pair.sigma == id) return pair.tau;
    if (pair.sigma == id.negated()) return pair.tau.negated();
    throw DecompositionFailure("second factor requested for a pair with nontrivial first factor");
}

} // namespace coxred
