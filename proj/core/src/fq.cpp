#include "coxred/fq.hpp"

#include <map>
#include <stdexcept>

#include "coxred/errors.hpp"

namespace coxred {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

std::shared_ptr<const Fq> Fq::make(unsigned p, unsigned degree) {
    // cache: residue fields are shared across reductions of the same ideal
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Fq>> cache;
    auto key = std::make_pair(p, degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<const Fq>(new Fq(p, degree));
    cache[key] = f;
    return f;
}

Fq::Fq(unsigned p, unsigned degree) : p_(p), f_(degree), q_(degree == 1 ? p : p * p) {
    if (!is_prime(p)) throw std::invalid_argument("Fq: p must be prime");
    if (degree != 1 && degree != 2) throw std::invalid_argument("Fq: degree must be 1 or 2");
    if (degree == 1 && p > 251) throw CapExceeded("residue field F_p supported only for p <= 251");
    if (degree == 2 && p > 31) throw CapExceeded("residue field F_{p^2} supported only for p <= 31");

    if (f_ == 2) {
        // smallest lexicographic (b, c) with t^2 + b t + c irreducible over F_p
        bool found = false;
        for (unsigned b = 0; b < p_ && !found; ++b) {
            for (unsigned c = 0; c < p_ && !found; ++c) {
                bool has_root = false;
                for (unsigned t = 0; t < p_; ++t)
                    if ((t * t + b * t + c) % p_ == 0) { has_root = true; break; }
                if (!has_root) {
                    mod_b_ = b;
                    mod_c_ = c;
                    found = true;
                }
            }
        }
        if (!found) throw std::logic_error("no irreducible quadratic found");
    }

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
        unsigned a0 = a % p_, a1 = a / p_;
        neg_[a] = static_cast<uint16_t>(((p_ - a0) % p_) + p_ * ((p_ - a1) % p_));
        for (unsigned b = 0; b < q_; ++b) {
            unsigned b0 = b % p_, b1 = b / p_;
            add_[a * q_ + b] = static_cast<uint16_t>((a0 + b0) % p_ + p_ * ((a1 + b1) % p_));
            if (f_ == 1) {
                mul_[a * q_ + b] = static_cast<uint16_t>((a0 * b0) % p_);
            } else {
                // (a0 + a1 t)(b0 + b1 t) with t^2 = -mod_b t - mod_c
                unsigned t2_coeff = a1 * b1 % p_;
                unsigned c0 = (a0 * b0 + t2_coeff * (p_ - mod_c_ % p_)) % p_;
                unsigned c1 = (a0 * b1 + a1 * b0 + t2_coeff * (p_ - mod_b_ % p_)) % p_;
                mul_[a * q_ + b] = static_cast<uint16_t>(c0 + p_ * c1);
            }
        }
    }
    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) { inv_[a] = static_cast<uint16_t>(b); break; }
}

uint16_t Fq::inv(uint16_t a) const {
    if (a == 0) throw std::domain_error("division by zero in F_q");
    return inv_[a];
}

uint16_t Fq::from_int(long n) const {
    long r = n % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<uint16_t>(r);
}

bool Fq::is_square(uint16_t a) const {
    for (unsigned x = 0; x < q_; ++x)
        if (mul(static_cast<uint16_t>(x), static_cast<uint16_t>(x)) == a) return true;
    return false;
}

std::string Fq::str(uint16_t a) const {
    if (f_ == 1) return std::to_string(a);
    unsigned lo = c0(a), hi = c1(a);
    if (hi == 0) return std::to_string(lo);
    std::string s;
    if (lo != 0) s += std::to_string(lo) + "+";
    if (hi != 1) s += std::to_string(hi) + "*";
    s += "t";
    return s;
}

FqMat::FqMat(std::shared_ptr<const Fq> field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), v_(rows * cols, 0) {}

FqMat FqMat::identity(std::shared_ptr<const Fq> field, int n) {
    FqMat m(std::move(field), n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMat FqMat::operator*(const FqMat& o) const {
    const Fq& F = *field_;
    FqMat r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            uint16_t a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                uint16_t prod = F.mul(a, o.at(k, j));
                r.set(i, j, F.add(r.at(i, j), prod));
            }
        }
    return r;
}

FqMat FqMat::transposed() const {
    FqMat r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

FqMat FqMat::negated() const {
    FqMat r = *this;
    for (auto& x : r.v_) x = field_->neg(x);
    return r;
}

std::string FqMat::key() const {
    return std::string(reinterpret_cast<const char*>(v_.data()), v_.size() * sizeof(uint16_t));
}

namespace {

// Gauss-Jordan on [a | rhs]; returns rank.  a and rhs are modified in place.
int gauss_jordan(const Fq& F, FqMat& a, FqMat* rhs) {
    int rank = 0;
    for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
        int piv = -1;
        for (int r = rank; r < a.rows(); ++r)
            if (a.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank) {
            for (int j = 0; j < a.cols(); ++j) { auto t = a.at(piv, j); a.set(piv, j, a.at(rank, j)); a.set(rank, j, t); }
            if (rhs)
                for (int j = 0; j < rhs->cols(); ++j) { auto t = rhs->at(piv, j); rhs->set(piv, j, rhs->at(rank, j)); rhs->set(rank, j, t); }
        }
        uint16_t d = F.inv(a.at(rank, col));
        for (int j = 0; j < a.cols(); ++j) a.set(rank, j, F.mul(a.at(rank, j), d));
        if (rhs)
            for (int j = 0; j < rhs->cols(); ++j) rhs->set(rank, j, F.mul(rhs->at(rank, j), d));
        for (int r = 0; r < a.rows(); ++r) {
            if (r == rank) continue;
            uint16_t f = a.at(r, col);
            if (f == 0) continue;
            for (int j = 0; j < a.cols(); ++j)
                a.set(r, j, F.sub(a.at(r, j), F.mul(f, a.at(rank, j))));
            if (rhs)
                for (int j = 0; j < rhs->cols(); ++j)
                    rhs->set(r, j, F.sub(rhs->at(r, j), F.mul(f, rhs->at(rank, j))));
        }
        ++rank;
    }
    return rank;
}

} // namespace

FqMat FqMat::inverse() const {
    FqMat a = *this;
    FqMat rhs = identity(field_, rows_);
    int rank = gauss_jordan(*field_, a, &rhs);
    if (rank != rows_) throw std::domain_error("matrix not invertible over F_q");
    return rhs;
}

uint16_t FqMat::determinant() const {
    const Fq& F = *field_;
    FqMat a = *this;
    uint16_t det = 1;
    int n = rows_;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) { auto t = a.at(piv, j); a.set(piv, j, a.at(col, j)); a.set(col, j, t); }
            det = F.neg(det);
        }
        det = F.mul(det, a.at(col, col));
        uint16_t d = F.inv(a.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            uint16_t f = F.mul(a.at(r, col), d);
            if (f == 0) continue;
            for (int j = col; j < n; ++j)
                a.set(r, j, F.sub(a.at(r, j), F.mul(f, a.at(col, j))));
        }
    }
    return det;
}

FqMat FqMat::kernel() const {
    const Fq& F = *field_;
    FqMat a = *this;
    std::vector<int> pivot_row(a.cols(), -1);
    int rank = 0;
    for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
        int piv = -1;
        for (int r = rank; r < a.rows(); ++r)
            if (a.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < a.cols(); ++j) { auto t = a.at(piv, j); a.set(piv, j, a.at(rank, j)); a.set(rank, j, t); }
        uint16_t d = F.inv(a.at(rank, col));
        for (int j = 0; j < a.cols(); ++j) a.set(rank, j, F.mul(a.at(rank, j), d));
        for (int r = 0; r < a.rows(); ++r) {
            if (r == rank) continue;
            uint16_t f = a.at(r, col);
            if (f == 0) continue;
            for (int j = 0; j < a.cols(); ++j)
                a.set(r, j, F.sub(a.at(r, j), F.mul(f, a.at(rank, j))));
        }
        pivot_row[col] = rank;
        ++rank;
    }
    std::vector<int> freecols;
    for (int c = 0; c < a.cols(); ++c)
        if (pivot_row[c] < 0) freecols.push_back(c);
    FqMat ker(field_, static_cast<int>(freecols.size()), a.cols());
    for (size_t i = 0; i < freecols.size(); ++i) {
        int fc = freecols[i];
        ker.set(static_cast<int>(i), fc, 1);
        for (int c = 0; c < a.cols(); ++c)
            if (pivot_row[c] >= 0) ker.set(static_cast<int>(i), c, F.neg(a.at(pivot_row[c], fc)));
    }
    return ker;
}

std::string FqMat::str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
        s += i == 0 ? "[" : " [";
        for (int j = 0; j < cols_; ++j) {
            s += field_->str(at(i, j));
            if (j + 1 < cols_) s += " ";
        }
        s += "]";
        if (i + 1 < rows_) s += "\n";
    }
    return s;
}

FqMat fq_solve(const FqMat& a, const FqMat& b) {
    FqMat lhs = a;
    FqMat rhs = b;
    int rank = gauss_jordan(a.field(), lhs, &rhs);
    if (rank != a.rows()) throw std::domain_error("singular system over F_q");
    return rhs;
}

} // namespace coxred
