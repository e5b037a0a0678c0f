#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include <mpfr.h>

#include "onesys/errors.hpp"

// Self-validating scalar types.  DBall is a double midpoint plus an absolute
// error radius with generous cushions for libm slop; MpIv is an MPFR interval
// with directed rounding, correctly rounded at every precision.  Predicates
// throw NeedMorePrecision when an enclosure straddles a decision boundary and
// certified() retries the whole unit on the next precision rung.

namespace onesys::num {

int precision_cap_digits();
void set_precision_cap_digits(int digits);
int precision_cap_bits();

int current_bits();

class ScopedBits {
  public:
    explicit ScopedBits(int bits);
    ~ScopedBits();
    ScopedBits(const ScopedBits&) = delete;
    ScopedBits& operator=(const ScopedBits&) = delete;

  private:
    int saved_;
};

// --------------------------------------------------------------------------
// DBall

class DBall {
  public:
    DBall() : m_(0.0), r_(0.0) {}
    DBall(long v) : m_(static_cast<double>(v)), r_(0.0) {}
    DBall(int v) : m_(v), r_(0.0) {}
    explicit DBall(double mid, double rad = 0.0) : m_(mid), r_(rad) { check(); }

    static DBall from_decimal(const std::string& s);
    static DBall pi();

    double mid() const { return m_; }
    double rad() const { return r_; }
    double lo() const { return m_ - r_; }
    double hi() const { return m_ + r_; }

    DBall operator-() const { return DBall(-m_, r_); }

    friend DBall operator+(const DBall& a, const DBall& b);
    friend DBall operator-(const DBall& a, const DBall& b);
    friend DBall operator*(const DBall& a, const DBall& b);
    friend DBall operator/(const DBall& a, const DBall& b);

    DBall& operator+=(const DBall& b) { return *this = *this + b; }
    DBall& operator-=(const DBall& b) { return *this = *this - b; }
    DBall& operator*=(const DBall& b) { return *this = *this * b; }
    DBall& operator/=(const DBall& b) { return *this = *this / b; }

  private:
    void check() const {
        if (!std::isfinite(m_) || !std::isfinite(r_))
            throw NeedMorePrecision{"dball-overflow"};
    }

    double m_, r_;
};

DBall sqrt(const DBall& a);
DBall exp(const DBall& a);
DBall log(const DBall& a);
DBall cosh(const DBall& a);
DBall sinh(const DBall& a);
DBall acosh_ge1(const DBall& a); // caller guarantees the true value is >= 1
DBall acos_clamped(const DBall& a); // caller guarantees |true value| <= 1
DBall atan(const DBall& a);
DBall asinh(const DBall& a);
DBall abs(const DBall& a);

// --------------------------------------------------------------------------
// MpIv

class MpIv {
  public:
    MpIv();
    MpIv(long v);
    MpIv(int v);
    explicit MpIv(double v);
    MpIv(const MpIv& o);
    MpIv(MpIv&& o) noexcept;
    MpIv& operator=(const MpIv& o);
    MpIv& operator=(MpIv&& o) noexcept;
    ~MpIv();

    static MpIv from_decimal(const std::string& s);
    static MpIv pi();

    double mid() const;
    double rad() const;
    double lo_d() const;
    double hi_d() const;

    // decimal rendering of the endpoints at a fixed digit count; output is a
    // pure function of the stored value, independent of platform locale
    std::string lo_string(int digits) const;
    std::string hi_string(int digits) const;

    MpIv operator-() const;

    friend MpIv operator+(const MpIv& a, const MpIv& b);
    friend MpIv operator-(const MpIv& a, const MpIv& b);
    friend MpIv operator*(const MpIv& a, const MpIv& b);
    friend MpIv operator/(const MpIv& a, const MpIv& b);

    MpIv& operator+=(const MpIv& b) { return *this = *this + b; }
    MpIv& operator-=(const MpIv& b) { return *this = *this - b; }
    MpIv& operator*=(const MpIv& b) { return *this = *this * b; }
    MpIv& operator/=(const MpIv& b) { return *this = *this / b; }

    friend MpIv sqrt(const MpIv& a);
    friend MpIv exp(const MpIv& a);
    friend MpIv log(const MpIv& a);
    friend MpIv cosh(const MpIv& a);
    friend MpIv sinh(const MpIv& a);
    friend MpIv acosh_ge1(const MpIv& a);
    friend MpIv acos_clamped(const MpIv& a);
    friend MpIv atan(const MpIv& a);
    friend MpIv asinh(const MpIv& a);
    friend MpIv abs(const MpIv& a);
    friend int raw_sign(const MpIv& a);

  private:
    mpfr_t lo_, hi_;
};

MpIv sqrt(const MpIv& a);
MpIv exp(const MpIv& a);
MpIv log(const MpIv& a);
MpIv cosh(const MpIv& a);
MpIv sinh(const MpIv& a);
MpIv acosh_ge1(const MpIv& a);
MpIv acos_clamped(const MpIv& a);
MpIv atan(const MpIv& a);
MpIv asinh(const MpIv& a);
MpIv abs(const MpIv& a);

// --------------------------------------------------------------------------
// Shared predicates.  raw_sign returns +1/-1/0 for certain results and 2 when
// the enclosure straddles zero without being exactly zero.

inline int raw_sign(const DBall& a) {
    if (a.mid() - a.rad() > 0.0) return 1;
    if (a.mid() + a.rad() < 0.0) return -1;
    if (a.mid() == 0.0 && a.rad() == 0.0) return 0;
    return 2;
}

int raw_sign(const MpIv& a);

template <class B> int sign(const B& a) {
    int s = raw_sign(a);
    if (s == 2) throw NeedMorePrecision{"sign"};
    return s;
}

template <class B> bool certainly_positive(const B& a) { return raw_sign(a) == 1; }
template <class B> bool certainly_negative(const B& a) { return raw_sign(a) == -1; }

template <class B> bool lt(const B& a, const B& b) { return sign(b - a) == 1; }
template <class B> bool gt(const B& a, const B& b) { return sign(a - b) == 1; }

// true unless a > b is certain; used where overcounting is later filtered
template <class B> bool possibly_le(const B& a, const B& b) {
    return raw_sign(a - b) != 1;
}

template <class B> B min(const B& a, const B& b) {
    int s = raw_sign(a - b);
    if (s == 1) return b;
    if (s == -1 || s == 0) return a;
    // overlapping enclosures: either is a valid upper witness, keep tighter mid
    return a.mid() < b.mid() ? a : b;
}

template <class B> B max(const B& a, const B& b) {
    int s = raw_sign(a - b);
    if (s == -1) return b;
    if (s == 1 || s == 0) return a;
    return a.mid() > b.mid() ? a : b;
}

template <class B> B sq(const B& a) { return a * a; }

// --------------------------------------------------------------------------
// Retry driver.  fn receives a zero ball of the rung's type and must
// recompute everything from combinatorial inputs; on NeedMorePrecision the
// next rung re-runs it from scratch.

template <class Fn> auto certified(Fn&& fn) {
    try {
        return fn(DBall{});
    } catch (const NeedMorePrecision&) {
    }
    int cap = precision_cap_bits();
    int bits = cap < 128 ? cap : 128;
    for (;;) {
        ScopedBits scope(bits);
        try {
            return fn(MpIv{});
        } catch (const NeedMorePrecision& n) {
            if (bits >= cap)
                throw PrecisionExhausted(std::string("at ") +
                                         std::to_string(bits) + " bits near " +
                                         n.where);
        }
        bits = bits * 2 < cap ? bits * 2 : cap;
    }
}

} // namespace onesys::num
