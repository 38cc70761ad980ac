#pragma once

#include <optional>
#include <vector>

#include "coxred/fq.hpp"
#include "coxred/reduction.hpp"

namespace coxred {

// A pair of determinant-1 matrices over F_5 acting on the tensor square,
// taken modulo simultaneous negation.  The canonical representative has the
// first nonzero entry of the first matrix in {1, 2}.
struct MatrixPair {
    FqMat sigma, tau;

    bool operator==(const MatrixPair& o) const { return sigma == o.sigma && tau == o.tau; }
};

MatrixPair canonical_pair(FqMat sigma, FqMat tau);

// The 4x4 action of (sigma, tau) on the ordered tensor basis
// (n1&n1, n1&n2, n2&n1, n2&n2): the Kronecker product.  Preserves the
// induced form and has determinant 1.
FqMat tensor_action(const MatrixPair& pair);

// The basis swap v&w -> w&v: exchanges the middle basis vectors, preserves
// the form, determinant -1.
FqMat swap_rho(const std::shared_ptr<const Fq>& f5);

// The symmetric form g on the tensor square induced by the symplectic form
// with f(n1, n2) = 1: the antidiagonal (1, -1, -1, 1).
FqMat tensor_form(const std::shared_ptr<const Fq>& f5);

// Invert the Kronecker structure: the canonical pair with
// tensor_action(pair) == m, or nullopt when m has no such factorization
// (exactly the elements outside the tensor-product subgroup).
std::optional<MatrixPair> decompose(const FqMat& m);

// The identification of the tensor square with the quotient space W of a
// reduction: a 4x4 change of basis T with T^{-1} (.) T carrying the W-action
// into the tensor picture.  The frame columns are a hyperbolic basis
// (g1, g2, -h2, h1) of the reduced form.
class TensorFrame {
public:
    // Frame adapted to the reduced 120-cell form: the fixed hyperbolic basis
    // under which the final diagram reflection acts as the plain swap.
    // Returns nullopt when the representation does not carry that form.
    static std::optional<TensorFrame> davis_frame(const FiniteRep& rep);
    // Generic frame from hyperbolic-pair extraction, for any plus-type
    // 4-dimensional quotient over F_5.
    static TensorFrame extracted_frame(const FiniteRep& rep);

    const FqMat& matrix() const { return t_; }        // columns = frame vectors in W
    FqMat conjugate_into_tensor(const FqMat& w_matrix) const;  // T^{-1} m T

    // first-factor map: sigma modulo sign (canonicalized 2x2 matrix)
    static FqMat projective_first(const MatrixPair& pair);
    // second-factor map on pairs with sigma = +-identity: the representative
    // with sigma = +identity
    static FqMat second_factor(const MatrixPair& pair);

private:
    explicit TensorFrame(FqMat t) : t_(std::move(t)), tinv_(t_.inverse()) {}
    FqMat t_, tinv_;
};

// Canonicalize a 2x2 matrix modulo global sign: first nonzero entry in
// {1, 2} over F_5.
void normalize_mod_sign(FqMat& m);

} // namespace coxred
