#pragma once

#include <array>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace coxred {

using Rational = mpq_class;
using Integer = mpz_class;

// Element of the multiquadratic field Q(sqrt2, sqrt3, sqrt5), stored as eight
// rational coordinates over the basis {1, sqrt2, sqrt3, sqrt6, sqrt5, sqrt10,
// sqrt15, sqrt30}.  Basis slot m (0..7) holds the radical sqrt(2^b0 3^b1 5^b2)
// where b0,b1,b2 are the bits of m.  This is where every Gram-matrix entry of
// a supported diagram lives.
class MultiQuad {
public:
    static constexpr int kBasisSize = 8;
    // radicand of each basis slot: 1,2,3,6,5,10,15,30
    static const std::array<long, kBasisSize>& radicands();
    // slot of a given radicand, -1 if not representable
    static int slot_of(long radicand);

    MultiQuad();                       // zero
    explicit MultiQuad(const Rational& r);
    explicit MultiQuad(long n);
    static MultiQuad sqrt_of(long radicand);  // radicand in {2,3,5,6,10,15,30}

    const Rational& coeff(int slot) const { return c_[slot]; }
    void set_coeff(int slot, const Rational& v);

    bool is_zero() const;
    bool is_rational() const;
    // the unique slot with a nonzero irrational coefficient, if exactly one
    std::optional<int> single_radical_slot() const;

    MultiQuad operator-() const;
    MultiQuad operator+(const MultiQuad& o) const;
    MultiQuad operator-(const MultiQuad& o) const;
    MultiQuad operator*(const MultiQuad& o) const;
    MultiQuad& operator+=(const MultiQuad& o) { return *this = *this + o; }
    MultiQuad& operator-=(const MultiQuad& o) { return *this = *this - o; }
    MultiQuad& operator*=(const MultiQuad& o) { return *this = *this * o; }
    bool operator==(const MultiQuad& o) const;
    bool operator!=(const MultiQuad& o) const { return !(*this == o); }

    // Galois conjugate flipping the sign of the radicals selected by mask
    // (bit0 = sqrt2, bit1 = sqrt3, bit2 = sqrt5).
    MultiQuad conjugate(int mask) const;
    // multiplicative inverse (product of conjugates over the field norm)
    MultiQuad inverse() const;
    MultiQuad operator/(const MultiQuad& o) const { return *this * o.inverse(); }

    // Exact sign of the real embedding (all radicals positive): -1, 0, +1.
    int sign() const;
    bool operator<(const MultiQuad& o) const { return (*this - o).sign() < 0; }
    bool operator>(const MultiQuad& o) const { return (*this - o).sign() > 0; }

    // Canonical text form following the shared field-element grammar, e.g.
    // "3/2 + 1/2*sqrt(5)" or "-2".
    std::string str() const;
    // Inverse of str(); throws ParseError on malformed input.
    static MultiQuad parse(const std::string& text);

    // double-precision value, for diagnostics only
    double approx() const;

private:
    std::array<Rational, kBasisSize> c_;
};

MultiQuad operator*(const Rational& r, const MultiQuad& x);

} // namespace coxred
