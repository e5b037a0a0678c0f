#include "onesys/numeric.hpp"

#include <cfloat>
#include <cstring>
#include <stdexcept>

namespace onesys::num {

namespace {

thread_local int g_bits = 128;
int g_cap_digits = 512;

double ulp(double x) {
    double a = std::fabs(x);
    double u = std::nextafter(a, std::numeric_limits<double>::infinity()) - a;
    return u > 0 ? u : DBL_MIN;
}

// cushion absorbs the final rounding plus libm slop (glibc stays well under
// 4 ulp on these functions; 16 is deliberately fat)
double cush(double x) { return 16.0 * ulp(x) + DBL_MIN; }

DBall hull(double lo, double hi) {
    double m = 0.5 * (lo + hi);
    double r = (hi - m > m - lo ? hi - m : m - lo) + cush(m) + cush(hi);
    return DBall(m, r);
}

template <class F> DBall monotone(const DBall& a, F f) {
    double lo = f(a.lo()), hi = f(a.hi());
    if (lo > hi) std::swap(lo, hi);
    return hull(lo, hi);
}

} // namespace

int precision_cap_digits() { return g_cap_digits; }

void set_precision_cap_digits(int digits) {
    if (digits < 16) digits = 16;
    g_cap_digits = digits;
}

int precision_cap_bits() {
    return static_cast<int>(g_cap_digits * 3.3219281) + 16;
}

int current_bits() { return g_bits; }

ScopedBits::ScopedBits(int bits) : saved_(g_bits) { g_bits = bits; }
ScopedBits::~ScopedBits() { g_bits = saved_; }

// --------------------------------------------------------------------------
// DBall

DBall DBall::from_decimal(const std::string& s) {
    double m = std::strtod(s.c_str(), nullptr);
    if (!std::isfinite(m)) throw std::invalid_argument("bad decimal: " + s);
    return DBall(m, 2.0 * ulp(m));
}

DBall DBall::pi() { return DBall(3.14159265358979323846, 4.0 * ulp(3.15)); }

// error-free transforms keep dyadic arithmetic at radius zero, so structural
// zeros (matrix entries built from integer literals) survive as exact zeros
DBall operator+(const DBall& a, const DBall& b) {
    double m = a.m_ + b.m_;
    double t = m - a.m_;
    double err = (a.m_ - (m - t)) + (b.m_ - t);
    return DBall(m, a.r_ + b.r_ + std::fabs(err));
}

DBall operator-(const DBall& a, const DBall& b) { return a + (-b); }

DBall operator*(const DBall& a, const DBall& b) {
    double m = a.m_ * b.m_;
    double err = std::fma(a.m_, b.m_, -m);
    double r = std::fabs(a.m_) * b.r_ + std::fabs(b.m_) * a.r_ + a.r_ * b.r_ +
               std::fabs(err);
    if (r != 0.0) r += cush(m);
    return DBall(m, r);
}

DBall operator/(const DBall& a, const DBall& b) {
    double bb = std::fabs(b.m_);
    if (!(bb > b.r_)) throw NeedMorePrecision{"div"};
    double m = a.m_ / b.m_;
    double resid = std::fabs(std::fma(m, b.m_, -a.m_)); // |a - m b|, exact
    double r = (a.r_ + std::fabs(m) * b.r_ + resid) / (bb - b.r_);
    if (r != 0.0) r += cush(m);
    return DBall(m, r);
}

namespace {
// enclosure that may not dip below zero (ranges of sqrt, acos, acosh)
DBall nonneg(const DBall& a) {
    if (a.lo() >= 0) return a;
    double hi = a.hi() > 0 ? a.hi() : 0.0;
    return DBall(0.5 * hi, 0.5 * hi);
}
} // namespace

DBall sqrt(const DBall& a) {
    if (a.hi() < 0) throw std::logic_error("sqrt of certainly negative ball");
    double lo = a.lo() > 0 ? std::sqrt(a.lo()) : 0.0;
    double hi = std::sqrt(a.hi() > 0 ? a.hi() : 0.0);
    return nonneg(hull(lo, hi));
}

DBall exp(const DBall& a) {
    return monotone(a, [](double x) { return std::exp(x); });
}

DBall log(const DBall& a) {
    if (!(a.lo() > 0)) throw NeedMorePrecision{"log-domain"};
    return monotone(a, [](double x) { return std::log(x); });
}

DBall cosh(const DBall& a) {
    DBall m = abs(a);
    double lo = std::cosh(m.lo()), hi = std::cosh(m.hi());
    return hull(lo, hi);
}

DBall sinh(const DBall& a) {
    return monotone(a, [](double x) { return std::sinh(x); });
}

DBall acosh_ge1(const DBall& a) {
    if (a.hi() < 1.0) throw std::logic_error("acosh_ge1: ball below 1");
    double lo = a.lo() > 1.0 ? std::acosh(a.lo()) : 0.0;
    double hi = std::acosh(a.hi() > 1.0 ? a.hi() : 1.0);
    return nonneg(hull(lo, hi));
}

DBall acos_clamped(const DBall& a) {
    if (a.lo() > 1.0 || a.hi() < -1.0)
        throw std::logic_error("acos_clamped: ball outside [-1,1]");
    double lo = a.hi() < 1.0 ? std::acos(a.hi()) : 0.0;
    double hi = a.lo() > -1.0 ? std::acos(a.lo()) : std::acos(-1.0);
    return nonneg(hull(lo, hi));
}

DBall atan(const DBall& a) {
    return monotone(a, [](double x) { return std::atan(x); });
}

DBall asinh(const DBall& a) {
    return monotone(a, [](double x) { return std::asinh(x); });
}

DBall abs(const DBall& a) {
    if (a.lo() >= 0) return a;
    if (a.hi() <= 0) return -a;
    double hi = a.hi() > -a.lo() ? a.hi() : -a.lo();
    return DBall(0.5 * hi, 0.5 * hi + cush(hi));
}

// --------------------------------------------------------------------------
// MpIv

MpIv::MpIv() {
    mpfr_init2(lo_, g_bits);
    mpfr_init2(hi_, g_bits);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

MpIv::MpIv(long v) {
    mpfr_init2(lo_, g_bits);
    mpfr_init2(hi_, g_bits);
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

MpIv::MpIv(int v) : MpIv(static_cast<long>(v)) {}

MpIv::MpIv(double v) {
    mpfr_init2(lo_, g_bits);
    mpfr_init2(hi_, g_bits);
    mpfr_set_d(lo_, v, MPFR_RNDD);
    mpfr_set_d(hi_, v, MPFR_RNDU);
}

MpIv::MpIv(const MpIv& o) {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

MpIv::MpIv(MpIv&& o) noexcept {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

MpIv& MpIv::operator=(const MpIv& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
        mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

MpIv& MpIv::operator=(MpIv&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    return *this;
}

MpIv::~MpIv() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

MpIv MpIv::from_decimal(const std::string& s) {
    MpIv r;
    if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 &&
        mpfr_nan_p(r.lo_))
        throw std::invalid_argument("bad decimal: " + s);
    mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
    return r;
}

MpIv MpIv::pi() {
    MpIv r;
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

double MpIv::mid() const {
    double l = mpfr_get_d(lo_, MPFR_RNDN), h = mpfr_get_d(hi_, MPFR_RNDN);
    return 0.5 * (l + h);
}

double MpIv::rad() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double r = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return 0.5 * r;
}

double MpIv::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double MpIv::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

namespace {
std::string mpfr_decimal(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
    if (digits < 1) digits = 1;
    int need = mpfr_snprintf(nullptr, 0, "%.*R*e", digits - 1, rnd, v);
    std::string out(static_cast<size_t>(need), '\0');
    mpfr_snprintf(out.data(), out.size() + 1, "%.*R*e", digits - 1, rnd, v);
    return out;
}
} // namespace

std::string MpIv::lo_string(int digits) const {
    return mpfr_decimal(lo_, digits, MPFR_RNDD);
}
std::string MpIv::hi_string(int digits) const {
    return mpfr_decimal(hi_, digits, MPFR_RNDU);
}

MpIv MpIv::operator-() const {
    MpIv r;
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

MpIv operator+(const MpIv& a, const MpIv& b) {
    MpIv r;
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

MpIv operator-(const MpIv& a, const MpIv& b) {
    MpIv r;
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

MpIv operator*(const MpIv& a, const MpIv& b) {
    MpIv r;
    mpfr_t t;
    mpfr_init2(t, g_bits);
    // min over the four corner products, rounded down
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // max over the four, rounded up
    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

MpIv operator/(const MpIv& a, const MpIv& b) {
    if (!(mpfr_sgn(b.lo_) > 0 || mpfr_sgn(b.hi_) < 0))
        throw NeedMorePrecision{"div"};
    MpIv r;
    mpfr_t t;
    mpfr_init2(t, g_bits);
    mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

MpIv sqrt(const MpIv& a) {
    if (mpfr_sgn(a.hi_) < 0)
        throw std::logic_error("sqrt of certainly negative interval");
    MpIv r;
    if (mpfr_sgn(a.lo_) > 0)
        mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    else
        mpfr_set_zero(r.lo_, 1);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

MpIv exp(const MpIv& a) {
    MpIv r;
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

MpIv log(const MpIv& a) {
    if (!(mpfr_sgn(a.lo_) > 0)) throw NeedMorePrecision{"log-domain"};
    MpIv r;
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

MpIv cosh(const MpIv& a) {
    MpIv m = abs(a);
    MpIv r;
    mpfr_cosh(r.lo_, m.lo_, MPFR_RNDD);
    mpfr_cosh(r.hi_, m.hi_, MPFR_RNDU);
    return r;
}

MpIv sinh(const MpIv& a) {
    MpIv r;
    mpfr_sinh(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sinh(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

MpIv acosh_ge1(const MpIv& a) {
    if (mpfr_cmp_ui(a.hi_, 1) < 0)
        throw std::logic_error("acosh_ge1: interval below 1");
    MpIv r;
    if (mpfr_cmp_ui(a.lo_, 1) > 0)
        mpfr_acosh(r.lo_, a.lo_, MPFR_RNDD);
    else
        mpfr_set_zero(r.lo_, 1);
    mpfr_acosh(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

MpIv acos_clamped(const MpIv& a) {
    if (mpfr_cmp_si(a.lo_, 1) > 0 || mpfr_cmp_si(a.hi_, -1) < 0)
        throw std::logic_error("acos_clamped: interval outside [-1,1]");
    MpIv r;
    if (mpfr_cmp_si(a.hi_, 1) < 0)
        mpfr_acos(r.lo_, a.hi_, MPFR_RNDD);
    else
        mpfr_set_zero(r.lo_, 1);
    if (mpfr_cmp_si(a.lo_, -1) > 0)
        mpfr_acos(r.hi_, a.lo_, MPFR_RNDU);
    else
        mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

MpIv atan(const MpIv& a) {
    MpIv r;
    mpfr_atan(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_atan(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

MpIv asinh(const MpIv& a) {
    MpIv r;
    mpfr_asinh(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_asinh(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

MpIv abs(const MpIv& a) {
    if (mpfr_sgn(a.lo_) >= 0) return a;
    if (mpfr_sgn(a.hi_) <= 0) return -a;
    MpIv r;
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

int raw_sign(const MpIv& a) {
    if (mpfr_sgn(a.lo_) > 0) return 1;
    if (mpfr_sgn(a.hi_) < 0) return -1;
    if (mpfr_zero_p(a.lo_) && mpfr_zero_p(a.hi_)) return 0;
    return 2;
}

} // namespace onesys::num
