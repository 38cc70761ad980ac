#include "coxred/quadfield.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "coxred/errors.hpp"

namespace coxred {

namespace {

bool is_prime_u(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_squarefree(unsigned n) {
    if (n == 0) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

uint16_t mpz_mod_p(const Integer& z, unsigned p) {
    Integer r = z % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return static_cast<uint16_t>(r.get_ui());
}

} // namespace

QuadElem::QuadElem(const Rational& a, const Rational& b, std::optional<unsigned> D) : a_(a), b_(b) {
    a_.canonicalize();
    b_.canonicalize();
    if (b_ != 0) {
        if (!D) throw std::invalid_argument("irrational element requires a field D");
        if (!is_squarefree(*D) || *D < 2)
            throw std::invalid_argument("D must be squarefree and >= 2");
        D_ = D;
    }
}

std::optional<unsigned> QuadElem::merge_fields(const QuadElem& x, const QuadElem& y) {
    if (x.D_ && y.D_ && *x.D_ != *y.D_)
        throw NotInField("mixing elements of Q(sqrt" + std::to_string(*x.D_) + ") and Q(sqrt" +
                         std::to_string(*y.D_) + ")");
    return x.D_ ? x.D_ : y.D_;
}

QuadElem QuadElem::operator-() const { return QuadElem(-a_, -b_, D_); }

QuadElem QuadElem::operator+(const QuadElem& o) const {
    return QuadElem(a_ + o.a_, b_ + o.b_, merge_fields(*this, o));
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
    return QuadElem(a_ - o.a_, b_ - o.b_, merge_fields(*this, o));
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
    auto D = merge_fields(*this, o);
    Rational d = D ? Rational(static_cast<long>(*D)) : Rational(0);
    return QuadElem(a_ * o.a_ + d * b_ * o.b_, a_ * o.b_ + b_ * o.a_, D);
}

QuadElem QuadElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in quadratic field");
    Rational n = norm();
    return QuadElem(a_ / n, -b_ / n, D_);
}

QuadElem QuadElem::operator/(const QuadElem& o) const { return *this * o.inverse(); }

int QuadElem::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    // opposite signs: compare a^2 against D b^2 and keep the dominant term
    Rational lhs = a_ * a_, rhs = Rational(static_cast<long>(*D_)) * b_ * b_;
    if (lhs == rhs) return 0;  // cannot happen for squarefree D >= 2, kept for safety
    return lhs > rhs ? sa : sb;
}

bool QuadElem::is_integral() const {
    Rational u = 2 * a_, v = 2 * b_;
    if (u.get_den() != 1 || v.get_den() != 1) return false;
    Integer ui = u.get_num(), vi = v.get_num();
    if (!D_) return ui % 2 == 0;
    if (*D_ % 4 == 1) return (ui - vi) % 2 == 0;
    return ui % 2 == 0 && vi % 2 == 0;
}

MultiQuad QuadElem::to_multiquad() const {
    MultiQuad out(a_);
    if (b_ != 0) {
        int slot = MultiQuad::slot_of(static_cast<long>(*D_));
        if (slot < 0)
            throw NotInField("sqrt(" + std::to_string(*D_) + ") is outside Q(sqrt2,sqrt3,sqrt5)");
        out.set_coeff(slot, b_);
    }
    return out;
}

std::string QuadElem::str() const {
    auto rat_str = [](const Rational& q) {
        return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
    };
    if (b_ == 0) return rat_str(a_);
    std::string s = rat_str(a_);
    Rational b = b_;
    s += b < 0 ? " - " : " + ";
    if (b < 0) b = -b;
    s += rat_str(b) + "*sqrt(" + std::to_string(*D_) + ")";
    return s;
}

QuadElem coerce_to_quadratic(const MultiQuad& x, std::optional<unsigned> D) {
    int slot = -1;
    if (D) {
        slot = MultiQuad::slot_of(static_cast<long>(*D));
        if (slot <= 0)
            throw NotInField("unsupported field Q(sqrt" + std::to_string(*D) + ") for multiquadratic values");
    }
    Rational a = x.coeff(0), b = 0;
    for (int i = 1; i < MultiQuad::kBasisSize; ++i) {
        if (x.coeff(i) == 0) continue;
        if (i != slot)
            throw NotInField(x.str() + " does not lie in the requested field");
        b = x.coeff(i);
    }
    if (b == 0) return QuadElem(a);
    return QuadElem(a, b, D);
}

bool divides(const QuadElem& alpha, const QuadElem& beta) {
    if (alpha.is_zero()) throw std::domain_error("divisibility by zero");
    return (beta / alpha).is_integral();
}

std::string to_string(SplitKind k) {
    switch (k) {
        case SplitKind::Ramified: return "ramified";
        case SplitKind::Split: return "split";
        case SplitKind::Inert: return "inert";
        case SplitKind::Rational: return "rational";
    }
    return "?";
}

bool field_is_pid(unsigned D) {
    static const std::array<unsigned, 14> kPid = {2, 3, 5, 6, 7, 11, 13, 17, 19, 21, 29, 33, 37, 41};
    return std::find(kPid.begin(), kPid.end(), D) != kPid.end();
}

namespace {

// All roots of the minimal polynomial of omega reduced mod p, inside F.
std::vector<uint16_t> omega_roots(const Fq& F, unsigned D) {
    // omega = (1+sqrt D)/2 with t^2 - t - (D-1)/4 when D = 1 (mod 4),
    // otherwise omega = sqrt D with t^2 - D.
    uint16_t b, c;
    if (D % 4 == 1) {
        b = F.neg(F.from_int(1));
        c = F.neg(F.from_int(static_cast<long>((D - 1) / 4)));
    } else {
        b = 0;
        c = F.neg(F.from_int(static_cast<long>(D)));
    }
    std::vector<uint16_t> roots;
    for (unsigned t = 0; t < F.q(); ++t) {
        uint16_t tt = static_cast<uint16_t>(t);
        uint16_t val = F.add(F.add(F.mul(tt, tt), F.mul(b, tt)), c);
        if (val == 0) roots.push_back(tt);
    }
    return roots;
}

// (m, n) with x = m + n*omega, both rational integers; requires x integral
std::pair<Integer, Integer> omega_coordinates(const QuadElem& x) {
    Integer u = Rational(2 * x.a()).get_num();
    Integer v = Rational(2 * x.b()).get_num();
    if (!x.D() || *x.D() % 4 != 1) return {u / 2, v / 2};
    return {(u - v) / 2, v};
}

// Deterministic principal generator with |norm| = p: scan (u, v) boxes and
// pick the candidate minimizing (max(|u|,|v|), |v|, |u|, v<0, u<0).
QuadElem find_generator(unsigned p, unsigned D) {
    bool half_integral = D % 4 == 1;
    using Key = std::tuple<long, long, long, int, int>;
    std::optional<Key> best_key;
    QuadElem best;
    for (long box = 4; box <= 1 << 20; box *= 4) {
        for (long v = -box; v <= box; ++v) {
            for (long u = -box; u <= box; ++u) {
                if (half_integral && (u - v) % 2 != 0) continue;
                Integer num = Integer(u) * u - Integer(static_cast<long>(D)) * v * v;
                if (half_integral && num % 4 != 0) continue;
                Integer nrm = half_integral ? num / 4 : num;
                if (abs(nrm) != static_cast<long>(p)) continue;
                Key key{std::max(std::labs(u), std::labs(v)), std::labs(v), std::labs(u), v < 0, u < 0};
                if (!best_key || key < *best_key) {
                    best_key = key;
                    Rational den(half_integral ? 2 : 1);
                    best = QuadElem(Rational(u) / den, Rational(v) / den, D);
                }
            }
        }
        if (best_key) return best;
    }
    throw std::logic_error("no principal generator found in search box");
}

} // namespace

PrimeIdeal PrimeIdeal::rational_prime(unsigned p) {
    if (!is_prime_u(p)) throw std::invalid_argument("p must be prime");
    PrimeIdeal P;
    P.p_ = p;
    P.kind_ = SplitKind::Rational;
    P.generator_ = QuadElem(static_cast<long>(p));
    P.field_ = Fq::make(p, 1);
    P.omega_code_ = 0;
    return P;
}

PrimeIdeal splitting(unsigned p, unsigned D) {
    if (!is_prime_u(p)) throw std::invalid_argument("p must be prime");
    if (!is_squarefree(D) || D < 2) throw std::invalid_argument("D must be squarefree and >= 2");

    PrimeIdeal P;
    P.p_ = p;
    P.D_ = D;
    if (p == 2) {
        if (D % 4 == 1)
            P.kind_ = (D % 8 == 1) ? SplitKind::Split : SplitKind::Inert;
        else
            P.kind_ = SplitKind::Ramified;  // 2 divides disc = 4D
    } else if (D % p == 0) {
        P.kind_ = SplitKind::Ramified;
    } else {
        bool qr = false;
        for (unsigned x = 1; x < p; ++x)
            if (x * x % p == D % p) { qr = true; break; }
        P.kind_ = qr ? SplitKind::Split : SplitKind::Inert;
    }

    if (P.kind_ == SplitKind::Inert) {
        P.generator_ = QuadElem(static_cast<long>(p));
        P.field_ = Fq::make(p, 2);
    } else {
        if (!field_is_pid(D))
            throw NotPID("no principal generator: Q(sqrt" + std::to_string(D) +
                         ") is not on the class-number-one allowlist");
        P.generator_ = find_generator(p, D);
        P.field_ = Fq::make(p, 1);
    }

    auto roots = omega_roots(*P.field_, D);
    if (P.kind_ == SplitKind::Inert || P.kind_ == SplitKind::Ramified) {
        if (roots.empty()) throw std::logic_error("missing omega root");
        P.omega_code_ = roots.front();
    } else {
        // pick the root that kills the chosen generator
        auto [m, n] = omega_coordinates(*P.generator_);
        bool found = false;
        for (uint16_t r : roots) {
            uint16_t val = P.field_->add(mpz_mod_p(m, p), P.field_->mul(mpz_mod_p(n, p), r));
            if (val == 0) { P.omega_code_ = r; found = true; break; }
        }
        if (!found) throw std::logic_error("no omega root annihilates the generator");
    }
    return P;
}

uint16_t PrimeIdeal::residue_code(const QuadElem& x) const {
    if (!x.is_integral())
        throw NotIntegral(x.str() + " is not an algebraic integer");
    if (x.D() && D_ && *x.D() != *D_)
        throw NotInField("residue of an element from a different field");
    if (x.D() && !D_)
        throw NotInField("irrational element over a rational prime");
    if (!x.D()) {
        Integer m = Rational(x.a()).get_num();
        return mpz_mod_p(m, p_);
    }
    auto [m, n] = omega_coordinates(x);
    return field_->add(mpz_mod_p(m, p_), field_->mul(mpz_mod_p(n, p_), omega_code_));
}

ResidueElement residue(const QuadElem& x, const PrimeIdeal& P) {
    return {P.residue_code(x), P.field()};
}

} // namespace coxred
