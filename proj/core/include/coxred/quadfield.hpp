#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxred/fq.hpp"
#include "coxred/multiquad.hpp"

namespace coxred {

// Element a + b*sqrt(D) of a real quadratic field Q(sqrt(D)), or a plain
// rational when D is absent.  Elements with b == 0 are canonicalized to the
// rational form so that equality is component-wise.
class QuadElem {
public:
    QuadElem() = default;
    explicit QuadElem(const Rational& a) : a_(a) { a_.canonicalize(); }
    explicit QuadElem(long n) : a_(n) {}
    QuadElem(const Rational& a, const Rational& b, std::optional<unsigned> D);
    static QuadElem sqrt_of(unsigned D) { return QuadElem(0, 1, D); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    std::optional<unsigned> D() const { return D_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadElem operator-() const;
    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator*(const QuadElem& o) const;
    QuadElem operator/(const QuadElem& o) const;
    QuadElem& operator+=(const QuadElem& o) { return *this = *this + o; }
    QuadElem& operator-=(const QuadElem& o) { return *this = *this - o; }
    QuadElem& operator*=(const QuadElem& o) { return *this = *this * o; }
    bool operator==(const QuadElem& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadElem& o) const { return !(*this == o); }

    QuadElem galois_conjugate() const { return QuadElem(a_, -b_, D_); }
    Rational norm() const {
        if (b_ == 0) return Rational(a_ * a_);
        return Rational(a_ * a_ - Rational(static_cast<long>(*D_)) * b_ * b_);
    }
    QuadElem inverse() const;

    // Exact sign under the real embedding sqrt(D) -> +sqrt(D): when a and b
    // disagree in sign the dominant term is decided by comparing a^2 with
    // D*b^2.
    int sign() const;

    // Membership in the ring of integers: writing (u + v sqrt D)/2, D = 1
    // (mod 4) requires u = v (mod 2), otherwise u and v must both be even.
    bool is_integral() const;

    MultiQuad to_multiquad() const;
    std::string str() const;

private:
    Rational a_, b_;
    std::optional<unsigned> D_;

    static std::optional<unsigned> merge_fields(const QuadElem& x, const QuadElem& y);
};

// Projection of a multiquadratic value into Q(sqrt(D)) (or Q when D is
// absent); throws NotInField if any coordinate outside {1, sqrt(D)} is
// nonzero.
QuadElem coerce_to_quadratic(const MultiQuad& x, std::optional<unsigned> D);

// true iff beta/alpha is an algebraic integer (alpha, beta integral, alpha != 0)
bool divides(const QuadElem& alpha, const QuadElem& beta);

enum class SplitKind { Ramified, Split, Inert, Rational };

std::string to_string(SplitKind k);

// Squarefree D with class number one, for which principal generators of
// prime ideals are searched.
bool field_is_pid(unsigned D);

// A prime ideal of the ring of integers of Q(sqrt(D)) above the rational
// prime p, together with its residue field and the image of the module
// generator omega (= (1+sqrt D)/2 or sqrt D).  For a rational base field the
// ideal is (p) with kind Rational.
class PrimeIdeal {
public:
    unsigned p() const { return p_; }
    std::optional<unsigned> D() const { return D_; }
    SplitKind kind() const { return kind_; }
    unsigned residue_q() const { return field_->q(); }
    const std::optional<QuadElem>& generator() const { return generator_; }
    std::shared_ptr<const Fq> field() const { return field_; }
    uint16_t omega_image() const { return omega_code_; }

    // the residue-ring homomorphism O -> F_q; throws NotIntegral
    uint16_t residue_code(const QuadElem& x) const;

    static PrimeIdeal rational_prime(unsigned p);

    friend PrimeIdeal splitting(unsigned p, unsigned D);

private:
    PrimeIdeal() = default;
    unsigned p_ = 0;
    std::optional<unsigned> D_;
    SplitKind kind_ = SplitKind::Rational;
    std::optional<QuadElem> generator_;
    std::shared_ptr<const Fq> field_;
    uint16_t omega_code_ = 0;
};

// Decide how the rational prime p behaves in Q(sqrt(D)) and fix the ideal
// data.  Throws NotPID when a principal generator is needed but D is not on
// the class-number-one allowlist.
PrimeIdeal splitting(unsigned p, unsigned D);

// Residue element carrying its field, for code that wants value semantics.
struct ResidueElement {
    uint16_t code = 0;
    std::shared_ptr<const Fq> field;

    ResidueElement operator+(const ResidueElement& o) const { return {field->add(code, o.code), field}; }
    ResidueElement operator*(const ResidueElement& o) const { return {field->mul(code, o.code), field}; }
    bool operator==(const ResidueElement& o) const { return code == o.code; }
};

ResidueElement residue(const QuadElem& x, const PrimeIdeal& P);

} // namespace coxred
