/*
 * rational.hpp
 * ------------
 * Exact rational arithmetic for the desing library.
 *
 * Rat wraps a GMP rational kept in lowest terms with a positive
 * denominator.  MaybeInf<T> adjoins a distinguished infinity to an
 * ordered value type; infinity compares greater than every finite
 * value.  Orders of vanishing and the invariant entries nu_r live in
 * MaybeInf<long> and MaybeInf<Rat> respectively.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace desing {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class dim_error : public error {
public:
    using error::error;
};

// Exponent arithmetic fails loudly instead of wrapping.
inline int checked_add(int a, int b) {
    long long r = static_cast<long long>(a) + b;
    if (r > std::numeric_limits<int>::max() || r < std::numeric_limits<int>::min())
        throw error("exponent overflow in addition");
    return static_cast<int>(r);
}

inline int checked_mul(int a, int b) {
    long long r = static_cast<long long>(a) * b;
    if (r > std::numeric_limits<int>::max() || r < std::numeric_limits<int>::min())
        throw error("exponent overflow in multiplication");
    return static_cast<int>(r);
}

class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}          // NOLINT: implicit by design
    Rat(int n) : v_(n) {}           // NOLINT
    Rat(long num, long den) {
        if (den == 0) throw error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const mpz_class& z) : v_(z) {}

    static Rat from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw error("bad rational literal: " + s);
        q.canonicalize();
        return Rat(q);
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    // Valid only when is_integer() and the value fits in long.
    long to_long() const {
        if (!is_integer()) throw error("non-integer rational: " + to_string());
        if (!v_.get_num().fits_slong_p()) throw error("rational too large for long");
        return v_.get_num().get_si();
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw error("rational division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    Rat pow(int k) const {
        if (k < 0) throw error("negative exponent in Rat::pow");
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(k));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(k));
        mpq_class r(n, d);
        r.canonicalize();
        return Rat(r);
    }

    // Canonical form "p" or "p/q", q > 1.
    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.is_negative() ? -r : r; }

// Least positive integer e with e / mu in N for every mu in the list.
// For mu = p/q in lowest terms, e must be divisible by p, so e = lcm of
// the numerators.
inline mpz_class common_multiplicity(const std::vector<Rat>& mus) {
    mpz_class e = 1;
    for (const auto& m : mus) {
        if (!m.is_positive()) throw error("nonpositive assigned multiplicity");
        mpz_class num = m.num();
        mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), num.get_mpz_t());
    }
    return e;
}

// Does q divide m! ?  Decided prime by prime via Legendre's formula,
// without materializing m!.
inline bool divides_factorial(mpz_class q, const mpz_class& m) {
    if (q < 0) q = -q;
    if (q == 0) return false;
    if (q == 1) return true;
    mpz_class p = 2;
    while (q > 1) {
        if (p * p > q) p = q;  // remaining q is prime
        if (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) {
            unsigned long need = 0;
            while (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) {
                q /= p;
                ++need;
            }
            // v_p(m!) = sum_k floor(m / p^k); stop once we have enough.
            mpz_class have = 0, pk = p;
            while (pk <= m && have < static_cast<long>(need)) {
                have += m / pk;
                pk *= p;
            }
            if (have < static_cast<long>(need)) return false;
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    return true;
}

// A totally ordered value type extended with +infinity.
template <class T>
class MaybeInf {
public:
    MaybeInf() : inf_(false), v_() {}
    MaybeInf(T v) : inf_(false), v_(std::move(v)) {}  // NOLINT
    static MaybeInf infinity() {
        MaybeInf m;
        m.inf_ = true;
        return m;
    }

    bool is_infinite() const { return inf_; }
    const T& value() const {
        if (inf_) throw error("infinite value has no finite part");
        return v_;
    }

    bool operator==(const MaybeInf& o) const {
        if (inf_ || o.inf_) return inf_ == o.inf_;
        return v_ == o.v_;
    }
    bool operator!=(const MaybeInf& o) const { return !(*this == o); }
    bool operator<(const MaybeInf& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator<=(const MaybeInf& o) const { return *this < o || *this == o; }
    bool operator>(const MaybeInf& o) const { return o < *this; }
    bool operator>=(const MaybeInf& o) const { return o <= *this; }

private:
    bool inf_;
    T v_;
};

using OrdVal = MaybeInf<long>;  // order of vanishing
using RatVal = MaybeInf<Rat>;   // mu / nu quantities

inline std::string to_string(const OrdVal& o) {
    return o.is_infinite() ? "inf" : std::to_string(o.value());
}

inline std::string to_string(const RatVal& r) {
    return r.is_infinite() ? "inf" : r.value().to_string();
}

}  // namespace desing
