#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace coxred {

// A small finite field F_q with q = p or p^2, with all arithmetic
// table-driven.  Elements are codes 0..q-1; for q = p^2 the code c0 + p*c1
// denotes c0 + c1*t where t is a root of the fixed irreducible quadratic
// t^2 + mod_b*t + mod_c.  The modulus is the lexicographically smallest
// (mod_b, mod_c) irreducible monic, so residue tables are reproducible.
class Fq {
public:
    static std::shared_ptr<const Fq> make(unsigned p, unsigned degree);

    unsigned p() const { return p_; }
    unsigned degree() const { return f_; }
    unsigned q() const { return q_; }
    unsigned mod_b() const { return mod_b_; }
    unsigned mod_c() const { return mod_c_; }

    uint16_t add(uint16_t a, uint16_t b) const { return add_[a * q_ + b]; }
    uint16_t sub(uint16_t a, uint16_t b) const { return add_[a * q_ + neg_[b]]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_[a * q_ + b]; }
    uint16_t neg(uint16_t a) const { return neg_[a]; }
    uint16_t inv(uint16_t a) const;
    uint16_t from_int(long n) const;               // image of a rational integer
    uint16_t encode(unsigned c0, unsigned c1) const { return static_cast<uint16_t>(c0 + p_ * c1); }
    unsigned c0(uint16_t a) const { return a % p_; }
    unsigned c1(uint16_t a) const { return a / p_; }
    bool is_square(uint16_t a) const;

    std::string str(uint16_t a) const;

private:
    Fq(unsigned p, unsigned degree);

    unsigned p_, f_, q_;
    unsigned mod_b_ = 0, mod_c_ = 0;
    std::vector<uint16_t> add_, mul_, neg_, inv_;
};

// Dense matrix over a shared Fq, row-major codes.
class FqMat {
public:
    FqMat() = default;
    FqMat(std::shared_ptr<const Fq> field, int rows, int cols);
    static FqMat identity(std::shared_ptr<const Fq> field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Fq& field() const { return *field_; }
    std::shared_ptr<const Fq> field_ptr() const { return field_; }

    uint16_t at(int r, int c) const { return v_[r * cols_ + c]; }
    void set(int r, int c, uint16_t x) { v_[r * cols_ + c] = x; }

    FqMat operator*(const FqMat& o) const;
    bool operator==(const FqMat& o) const { return v_ == o.v_; }
    FqMat transposed() const;
    FqMat inverse() const;                    // square, invertible
    uint16_t determinant() const;             // square
    FqMat negated() const;

    // canonical byte key for hashing in the group engine
    std::string key() const;

    // kernel of this matrix (viewed as a linear map on column vectors),
    // returned as a matrix whose rows are a reduced-echelon kernel basis
    FqMat kernel() const;

    std::string str() const;

private:
    std::shared_ptr<const Fq> field_;
    int rows_ = 0, cols_ = 0;
    std::vector<uint16_t> v_;
};

// Solve a x = b for square invertible a; b may have several columns.
FqMat fq_solve(const FqMat& a, const FqMat& b);

} // namespace coxred
