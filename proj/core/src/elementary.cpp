#include "transcert/elementary.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "transcert/errors.hpp"

namespace transcert {

namespace {

// Stop a series once its latest term drops below 2^-(w + kSeriesSlack).
constexpr long kSeriesSlack = 4;

bool negligible(const RInterval& term, long w) { return term.mag().exponent() < -(w + kSeriesSlack); }

RInterval interval_sqrt(const RInterval& x, long w) {
  if (x.lo().sign() < 0) throw DomainError("DomainError: sqrt of an interval reaching below 0");
  return RInterval(sqrt(x.lo(), w, Round::Down), sqrt(x.hi(), w, Round::Up), w);
}

// e^x for a point x, relative error about 2^-w.
RInterval exp_point(const BigFloat& x, long w) {
  if (x.is_zero()) return RInterval::from_int(1, w);
  const long e = x.exponent();
  if (e > 40) throw DomainError("DomainError: exp argument out of range");
  // Halve the argument until |y| < 2^-10, then square back.
  const long halvings = std::max<long>(0, e + 10);
  const long wk = w + halvings + 8;
  const RInterval y = RInterval::point(scale_by_power_of_two(x, -halvings), wk);

  RInterval sum = RInterval::from_int(1, wk);
  RInterval term = sum;
  for (long k = 1;; ++k) {
    term = div(mul(term, y, wk), RInterval::from_int(k, wk), wk);
    sum = add(sum, term, wk);
    if (negligible(term, wk)) break;
  }
  // With |y| < 2^-10 the tail after term k is below |term_k|.
  sum = inflate(sum, term.mag());
  for (long i = 0; i < halvings; ++i) sum = sqr(sum, wk);
  return sum;
}

// 2 * atanh(u) series, valid for |u| <= 1/3.
RInterval two_atanh_series(const RInterval& u, long wk) {
  const RInterval u2 = sqr(u, wk);
  RInterval sum = u;
  RInterval power = u;
  RInterval term = u;
  for (long k = 1;; ++k) {
    power = mul(power, u2, wk);
    term = div(power, RInterval::from_int(2 * k + 1, wk), wk);
    sum = add(sum, term, wk);
    if (negligible(term, wk)) break;
  }
  // Tail <= |term| * u^2 / (1 - u^2) <= |term| for u^2 <= 1/9.
  sum = inflate(sum, term.mag());
  return scale_by_power_of_two(sum, 1);
}

RInterval ln2_uncached(long w) {
  const long wk = w + 8;
  const RInterval third = div(RInterval::from_int(1, wk), RInterval::from_int(3, wk), wk);
  return two_atanh_series(third, wk);
}

RInterval ln_point(const BigFloat& x, long w) {
  if (x.sign() <= 0) throw DomainError("DomainError: ln of a non-positive number");
  if (x == BigFloat::from_int(1)) return RInterval::from_int(0, w);
  long e = x.exponent();
  BigFloat m = scale_by_power_of_two(x, -e);  // m in [1/2, 1)
  if (m < BigFloat::from_double(0.70710678118654752)) {
    m = scale_by_power_of_two(m, 1);
    e -= 1;
  }
  const long wk = w + 8 + static_cast<long>(std::bit_width(static_cast<unsigned long>(e < 0 ? -e : e)));
  const RInterval mi = RInterval::point(m, wk);
  const RInterval one = RInterval::from_int(1, wk);
  const RInterval u = div(sub(mi, one, wk), add(mi, one, wk), wk);  // |u| <= 0.1716
  RInterval result = two_atanh_series(u, wk);
  if (e != 0) result = add(result, mul(RInterval::from_int(e, wk), const_ln2(wk), wk), wk);
  return result;
}

// atan on an enclosure inside [0, 1 + tiny].
RInterval atan_reduced(RInterval a, long wk) {
  constexpr long kHalvings = 4;
  const RInterval one = RInterval::from_int(1, wk);
  for (long i = 0; i < kHalvings; ++i) {
    // atan(a) = 2 atan(a / (1 + sqrt(1 + a^2)))
    a = div(a, add(one, interval_sqrt(add(one, sqr(a, wk), wk), wk), wk), wk);
  }
  const RInterval a2 = sqr(a, wk);
  RInterval sum = a;
  RInterval power = a;
  RInterval term = a;
  for (long k = 1;; ++k) {
    power = mul(power, a2, wk);
    term = div(power, RInterval::from_int(2 * k + 1, wk), wk);
    sum = (k % 2 == 1) ? sub(sum, term, wk) : add(sum, term, wk);
    if (negligible(term, wk)) break;
  }
  // Alternating series with decreasing terms: the tail is below the last term.
  sum = inflate(sum, term.mag());
  return scale_by_power_of_two(sum, kHalvings);
}

RInterval atan_of(const RInterval& a, long w) {
  // a is a narrow enclosure; reduce |a| > 1 through atan(a) = pi/2 - atan(1/a).
  const long wk = w + 10;
  if (a.contains_zero() && a.is_point()) return RInterval::from_int(0, w);
  const bool negative = a.hi().sign() <= 0;
  RInterval m = negative ? neg(a) : a;
  if (m.lo().sign() < 0) {
    // Straddles zero: atan is 1-Lipschitz so atan(m) is inside m.
    return m.with_precision(w);
  }
  RInterval r;
  if (m.lo() > BigFloat::from_int(1)) {
    r = sub(scale_by_power_of_two(const_pi(wk), -1), atan_reduced(div(RInterval::from_int(1, wk), m, wk), wk), wk);
  } else if (m.hi() <= BigFloat::from_int(1)) {
    r = atan_reduced(m, wk);
  } else {
    r = hull(atan_reduced(RInterval(m.lo(), BigFloat::from_int(1), wk), wk),
             sub(scale_by_power_of_two(const_pi(wk), -1),
                 atan_reduced(div(RInterval::from_int(1, wk), RInterval(BigFloat::from_int(1), m.hi(), wk), wk), wk),
                 wk));
  }
  return negative ? neg(r) : r;
}

RInterval sin_series(const RInterval& r, long wk) {
  const RInterval r2 = sqr(r, wk);
  RInterval sum = r;
  RInterval term = r;
  for (long k = 1;; ++k) {
    term = div(mul(term, r2, wk), RInterval::from_int((2 * k) * (2 * k + 1), wk), wk);
    sum = (k % 2 == 1) ? sub(sum, term, wk) : add(sum, term, wk);
    if (negligible(term, wk)) break;
  }
  return inflate(sum, term.mag());
}

RInterval cos_series(const RInterval& r, long wk) {
  const RInterval r2 = sqr(r, wk);
  RInterval sum = RInterval::from_int(1, wk);
  RInterval term = sum;
  for (long k = 1;; ++k) {
    term = div(mul(term, r2, wk), RInterval::from_int((2 * k - 1) * (2 * k), wk), wk);
    sum = (k % 2 == 1) ? sub(sum, term, wk) : add(sum, term, wk);
    if (negligible(term, wk)) break;
  }
  return inflate(sum, term.mag());
}

enum class Trig { Sin, Cos };

RInterval trig_point(const BigFloat& x, Trig which, long w) {
  if (x.is_zero()) return RInterval::from_int(which == Trig::Sin ? 0 : 1, w);
  const long e = std::max<long>(0, x.exponent());
  if (e > 60) return RInterval(BigFloat::from_int(-1, w), BigFloat::from_int(1, w), w);
  const long wk = w + e + 8;
  const RInterval half_pi = scale_by_power_of_two(const_pi(wk + e + 8), -1);

  mpz_class k;
  {
    BigFloat q = div(x, half_pi.midpoint(), 64 + e, Round::Nearest);
    mpfr_get_z(k.get_mpz_t(), q.get(), MPFR_RNDN);
  }
  const long kbits = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) + 2;
  const RInterval kk = RInterval::point(BigFloat::from_mpz(k, kbits, Round::Nearest), kbits);
  const RInterval r = sub(RInterval::point(x, wk), mul(kk, half_pi, wk + kbits), wk);

  mpz_class q4 = k % 4;
  if (q4 < 0) q4 += 4;
  long quadrant = q4.get_si();
  if (which == Trig::Cos) quadrant = (quadrant + 1) % 4;  // cos(x) = sin(x + pi/2)
  switch (quadrant) {
    case 0:
      return sin_series(r, wk);
    case 1:
      return cos_series(r, wk);
    case 2:
      return neg(sin_series(r, wk));
    default:
      return neg(cos_series(r, wk));
  }
}

// True when some integer j may satisfy offset + 2j in t (t = x / pi).
bool may_hit(const RInterval& t, long offset_halves, long w) {
  const BigFloat offset = scale_by_power_of_two(BigFloat::from_int(offset_halves), -1);
  const BigFloat lo = scale_by_power_of_two(sub(t.lo(), offset, w, Round::Down), -1);
  const BigFloat hi = scale_by_power_of_two(sub(t.hi(), offset, w, Round::Up), -1);
  return lo.ceil_integer() <= hi.floor_integer();
}

RInterval trig(const RInterval& x, Trig which) {
  const long p = x.precision();
  const long w = p + kGuardBits;
  const RInterval unit(BigFloat::from_int(-1, p), BigFloat::from_int(1, p), p);
  if (x.width() > BigFloat::from_int(6)) return unit;

  RInterval r = trig_point(x.lo(), which, w);
  if (!x.is_point()) {
    r = hull(r, trig_point(x.hi(), which, w));
    const RInterval t = div(x.with_precision(w), const_pi(w), w);
    // sin peaks at t = 1/2 + 2j and bottoms at t = -1/2 + 2j; cos at 2j and 1 + 2j.
    const long max_at = which == Trig::Sin ? 1 : 0;
    const long min_at = which == Trig::Sin ? -1 : 2;
    BigFloat lo = r.lo();
    BigFloat hi = r.hi();
    if (may_hit(t, max_at, w)) hi = BigFloat::from_int(1, w);
    if (may_hit(t, min_at, w)) lo = BigFloat::from_int(-1, w);
    r = RInterval(std::move(lo), std::move(hi), w);
  }
  BigFloat lo = max(r.lo(), unit.lo());
  BigFloat hi = min(r.hi(), unit.hi());
  return RInterval(std::move(lo), std::move(hi), w).rounded(p);
}

RInterval machin_pi(long w) {
  // pi = 16 atan(1/5) - 4 atan(1/239)
  auto atan_inverse = [w](long n) {
    const RInterval n2 = RInterval::from_int(n * n, w);
    RInterval power = div(RInterval::from_int(1, w), RInterval::from_int(n, w), w);
    RInterval sum = power;
    RInterval term = power;
    for (long k = 1;; ++k) {
      power = div(power, n2, w);
      term = div(power, RInterval::from_int(2 * k + 1, w), w);
      sum = (k % 2 == 1) ? sub(sum, term, w) : add(sum, term, w);
      if (negligible(term, w)) break;
    }
    return inflate(sum, term.mag());
  };
  return sub(mul(RInterval::from_int(16, w), atan_inverse(5), w), mul(RInterval::from_int(4, w), atan_inverse(239), w),
             w);
}

template <typename Compute>
RInterval cached_constant(std::map<long, RInterval>& cache, long precision, Compute compute) {
  if (auto it = cache.find(precision); it != cache.end()) return it->second;
  RInterval value = compute();
  cache.emplace(precision, value);
  return value;
}

}  // namespace

RInterval const_pi(long precision) {
  thread_local std::map<long, RInterval> cache;
  return cached_constant(cache, precision, [precision] {
    return machin_pi(precision + kGuardBits).with_precision(precision);
  });
}

RInterval const_e(long precision) {
  thread_local std::map<long, RInterval> cache;
  return cached_constant(cache, precision, [precision] {
    const long w = precision + kGuardBits;
    // Smallest n with 2/(n+1)! < 2^-(w+8).
    long n = 1;
    double log2_fact = 0.0;  // log2((n+1)!)
    for (; log2_fact < static_cast<double>(w + 9); ++n) log2_fact += std::log2(static_cast<double>(n + 1));
    // sum_{k=0}^{n} 1/k! = T / n!, with T = sum n!/k!
    mpz_class t = 1;
    mpz_class total = 1;
    for (long k = n - 1; k >= 0; --k) {
      t *= (k + 1);
      total += t;
    }
    mpz_class n_fact = t;  // n!
    const BigRational partial(total, n_fact);
    const BigRational tail(mpz_class(2), n_fact * (n + 1));
    return RInterval::from_rationals(partial, partial + tail, w).with_precision(precision);
  });
}

RInterval const_ln2(long precision) {
  thread_local std::map<long, RInterval> cache;
  return cached_constant(cache, precision, [precision] {
    return ln2_uncached(precision + kGuardBits).with_precision(precision);
  });
}

RInterval exp(const RInterval& x) {
  const long p = x.precision();
  const long w = p + kGuardBits;
  const RInterval lo = exp_point(x.lo(), w);
  if (x.is_point()) return lo.rounded(p);
  return RInterval(lo.lo(), exp_point(x.hi(), w).hi(), w).rounded(p);
}

RInterval ln(const RInterval& x) {
  if (x.lo().sign() <= 0) throw DomainError("DomainError: ln of an interval touching (-inf, 0]");
  const long p = x.precision();
  const long w = p + kGuardBits;
  const RInterval lo = ln_point(x.lo(), w);
  if (x.is_point()) return lo.rounded(p);
  return RInterval(lo.lo(), ln_point(x.hi(), w).hi(), w).rounded(p);
}

RInterval sqrt(const RInterval& x) {
  if (x.lo().sign() < 0) throw DomainError("DomainError: sqrt of an interval reaching below 0");
  return interval_sqrt(x, x.precision());
}

RInterval sin(const RInterval& x) { return trig(x, Trig::Sin); }

RInterval cos(const RInterval& x) { return trig(x, Trig::Cos); }

RInterval atan(const RInterval& x) {
  const long p = x.precision();
  const long w = p + kGuardBits;
  const RInterval lo = atan_of(RInterval::point(x.lo(), w), w);
  if (x.is_point()) return lo.rounded(p);
  return RInterval(lo.lo(), atan_of(RInterval::point(x.hi(), w), w).hi(), w).rounded(p);
}

RInterval acos(const RInterval& x) {
  const BigFloat one = BigFloat::from_int(1);
  if (x.lo() < neg(one) || x.hi() > one) throw DomainError("DomainError: acos outside [-1, 1]");
  const long p = x.precision();
  const long w = p + kGuardBits;
  // acos(c) = 2 atan(sqrt(1 - c^2) / (1 + c)); decreasing in c.
  auto acos_point = [w, &one](const BigFloat& c) {
    if (c == neg(one)) return const_pi(w);
    const RInterval ci = RInterval::point(c, w);
    const RInterval onei = RInterval::from_int(1, w);
    const RInterval ratio = div(interval_sqrt(sub(onei, sqr(ci, w), w), w), add(onei, ci, w), w);
    return scale_by_power_of_two(atan(ratio.with_precision(w)), 1);
  };
  const RInterval at_hi = acos_point(x.hi());
  if (x.is_point()) return at_hi.rounded(p);
  return RInterval(at_hi.lo(), acos_point(x.lo()).hi(), w).rounded(p);
}

RInterval sinh(const RInterval& x) {
  const long p = x.precision();
  const long w = p + kGuardBits;
  // Monotone; evaluate at the endpoints.
  auto at = [w](const BigFloat& v) {
    const RInterval ev = exp_point(v, w);
    return scale_by_power_of_two(sub(ev, div(RInterval::from_int(1, w), ev, w), w), -1);
  };
  const RInterval lo = at(x.lo());
  if (x.is_point()) return lo.rounded(p);
  return RInterval(lo.lo(), at(x.hi()).hi(), w).rounded(p);
}

RInterval cosh(const RInterval& x) {
  const long p = x.precision();
  const long w = p + kGuardBits;
  auto at = [w](const BigFloat& v) {
    const RInterval ev = exp_point(v, w);
    return scale_by_power_of_two(add(ev, div(RInterval::from_int(1, w), ev, w), w), -1);
  };
  // Even, increasing in |x|.
  const RInterval top = at(x.mag());
  const RInterval bottom = at(x.mig());
  return RInterval(bottom.lo(), top.hi(), w).rounded(p);
}

RInterval pow(const RInterval& base, const RInterval& exponent) {
  const long p = std::max(base.precision(), exponent.precision());
  const long w = p + kGuardBits;
  return exp(mul(exponent.with_precision(w), ln(base.with_precision(w)), w)).rounded(p).with_precision(p);
}

RInterval elem(const RInterval& x, Elementary f) {
  switch (f) {
    case Elementary::Exp:
      return exp(x);
    case Elementary::Ln:
      return ln(x);
    case Elementary::Sqrt:
      return sqrt(x);
    case Elementary::Sin:
      return sin(x);
    case Elementary::Cos:
      return cos(x);
    case Elementary::Atan:
      break;
  }
  return atan(x);
}

}  // namespace transcert
