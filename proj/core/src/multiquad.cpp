#include "coxred/multiquad.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "coxred/errors.hpp"

namespace coxred {

namespace {

constexpr std::array<long, MultiQuad::kBasisSize> kRadicands = {1, 2, 3, 6, 5, 10, 15, 30};

int popcount3(int m) { return (m & 1) + ((m >> 1) & 1) + ((m >> 2) & 1); }

} // namespace

const std::array<long, MultiQuad::kBasisSize>& MultiQuad::radicands() { return kRadicands; }

int MultiQuad::slot_of(long radicand) {
    for (int i = 0; i < kBasisSize; ++i)
        if (kRadicands[i] == radicand) return i;
    return -1;
}

MultiQuad::MultiQuad() = default;

MultiQuad::MultiQuad(const Rational& r) { c_[0] = r; c_[0].canonicalize(); }

MultiQuad::MultiQuad(long n) { c_[0] = n; }

MultiQuad MultiQuad::sqrt_of(long radicand) {
    int s = slot_of(radicand);
    if (s < 0) throw NotInField("sqrt(" + std::to_string(radicand) + ") is outside Q(sqrt2,sqrt3,sqrt5)");
    MultiQuad x;
    x.c_[s] = 1;
    return x;
}

void MultiQuad::set_coeff(int slot, const Rational& v) {
    c_[slot] = v;
    c_[slot].canonicalize();
}

bool MultiQuad::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool MultiQuad::is_rational() const {
    for (int i = 1; i < kBasisSize; ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<int> MultiQuad::single_radical_slot() const {
    int found = -1;
    for (int i = 1; i < kBasisSize; ++i) {
        if (c_[i] != 0) {
            if (found >= 0) return std::nullopt;
            found = i;
        }
    }
    if (found < 0) return std::nullopt;
    return found;
}

MultiQuad MultiQuad::operator-() const {
    MultiQuad r;
    for (int i = 0; i < kBasisSize; ++i) r.c_[i] = -c_[i];
    return r;
}

MultiQuad MultiQuad::operator+(const MultiQuad& o) const {
    MultiQuad r;
    for (int i = 0; i < kBasisSize; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

MultiQuad MultiQuad::operator-(const MultiQuad& o) const {
    MultiQuad r;
    for (int i = 0; i < kBasisSize; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

MultiQuad MultiQuad::operator*(const MultiQuad& o) const {
    // sqrt(d1)*sqrt(d2) = g*sqrt(d1 xor d2) with g the product of the shared
    // prime radicals, so the basis is closed under multiplication.
    MultiQuad r;
    for (int i = 0; i < kBasisSize; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < kBasisSize; ++j) {
            if (o.c_[j] == 0) continue;
            long g = kRadicands[i & j];
            r.c_[i ^ j] += c_[i] * o.c_[j] * g;
        }
    }
    return r;
}

bool MultiQuad::operator==(const MultiQuad& o) const {
    for (int i = 0; i < kBasisSize; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

MultiQuad MultiQuad::conjugate(int mask) const {
    MultiQuad r;
    for (int i = 0; i < kBasisSize; ++i)
        r.c_[i] = (popcount3(i & mask) & 1) ? -c_[i] : c_[i];
    return r;
}

MultiQuad MultiQuad::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(sqrt2,sqrt3,sqrt5)");
    MultiQuad prod(Rational(1));
    for (int mask = 1; mask < 8; ++mask) prod *= conjugate(mask);
    MultiQuad norm = *this * prod;  // the field norm, a nonzero rational
    if (!norm.is_rational() || norm.c_[0] == 0)
        throw std::logic_error("norm computation failed");
    MultiQuad r;
    Rational inv_norm = 1 / norm.c_[0];
    for (int i = 0; i < kBasisSize; ++i) r.c_[i] = prod.c_[i] * inv_norm;
    return r;
}

namespace {

// rational interval [lo,hi] containing sqrt(n), width <= 1/2^bits
void sqrt_bounds(long n, int bits, Rational& lo, Rational& hi) {
    Integer isq = sqrt(Integer(n));
    lo = Rational(isq);
    hi = Rational(isq + 1);
    for (int i = 0; i < bits; ++i) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= n)
            lo = mid;
        else
            hi = mid;
    }
}

} // namespace

int MultiQuad::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(c_[0]);
    // Interval refinement: terminates because the value is exactly nonzero.
    for (int bits = 8;; bits *= 2) {
        Rational lo = 0, hi = 0;
        for (int i = 0; i < kBasisSize; ++i) {
            if (c_[i] == 0) continue;
            if (i == 0) {
                lo += c_[0];
                hi += c_[0];
                continue;
            }
            Rational rlo, rhi;
            sqrt_bounds(kRadicands[i], bits, rlo, rhi);
            if (c_[i] > 0) {
                lo += c_[i] * rlo;
                hi += c_[i] * rhi;
            } else {
                lo += c_[i] * rhi;
                hi += c_[i] * rlo;
            }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
}

std::string MultiQuad::str() const {
    std::string out;
    auto rat_str = [](const Rational& q) {
        return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
    };
    // emit with radicands ascending: 1, 2, 3, 5, 6, 10, 15, 30
    static constexpr std::array<int, kBasisSize> kByRadicand = {0, 1, 2, 4, 3, 5, 6, 7};
    bool first = true;
    for (int i : kByRadicand) {
        if (c_[i] == 0) continue;
        Rational q = c_[i];
        if (first) {
            if (q < 0) { out += "-"; q = -q; }
        } else {
            out += q < 0 ? " - " : " + ";
            if (q < 0) q = -q;
        }
        if (i == 0)
            out += rat_str(q);
        else
            out += rat_str(q) + "*sqrt(" + std::to_string(kRadicands[i]) + ")";
        first = false;
    }
    if (first) out = "0";
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    void skip_space() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_space();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }
};

Rational parse_rational(Cursor& c) {
    c.skip_space();
    size_t start = c.pos;
    if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-')) ++c.pos;
    size_t digits = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    if (c.pos == digits) c.fail("expected number");
    std::string num = c.s.substr(start, c.pos - start);
    std::string den = "1";
    size_t mark = c.pos;
    if (c.eat('/')) {
        c.skip_space();
        size_t dstart = c.pos;
        while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
        if (c.pos == dstart) { c.pos = mark; }
        else den = c.s.substr(dstart, c.pos - dstart);
    }
    Integer n(num), d(den);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

} // namespace

MultiQuad MultiQuad::parse(const std::string& text) {
    Cursor c{text};
    MultiQuad out;
    bool first = true;
    while (true) {
        c.skip_space();
        if (c.pos >= c.s.size()) break;
        int sign = 1;
        if (!first) {
            if (c.eat('+')) sign = 1;
            else if (c.eat('-')) sign = -1;
            else c.fail("expected '+' or '-'");
        }
        Rational q = parse_rational(c);
        int slot = 0;
        size_t mark = c.pos;
        if (c.eat('*')) {
            c.skip_space();
            if (c.s.compare(c.pos, 5, "sqrt(") != 0) { c.pos = mark; }
            else {
                c.pos += 5;
                Rational rad = parse_rational(c);
                if (!c.eat(')')) c.fail("expected ')'");
                if (rad.get_den() != 1 || !rad.get_num().fits_slong_p() || rad < 2)
                    c.fail("bad radicand");
                slot = slot_of(rad.get_num().get_si());
                if (slot < 0)
                    throw NotInField("sqrt(" + rad.get_num().get_str() + ") is outside Q(sqrt2,sqrt3,sqrt5)");
            }
        }
        out.c_[slot] += sign * q;
        first = false;
    }
    if (first) Cursor{text}.fail("empty field element");
    for (auto& q : out.c_) q.canonicalize();
    return out;
}

double MultiQuad::approx() const {
    double v = 0;
    for (int i = 0; i < kBasisSize; ++i)
        v += c_[i].get_d() * std::sqrt(static_cast<double>(kRadicands[i]));
    return v;
}

MultiQuad operator*(const Rational& r, const MultiQuad& x) {
    return MultiQuad(r) * x;
}

} // namespace coxred
