#include "weilcert/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace weilcert {

namespace {

class Mpf {
 public:
  explicit Mpf(long prec) {
    mpfr_init2(v, prec);
    mpfr_set_zero(v, 1);
  }
  Mpf(const Mpf& o) {
    mpfr_init2(v, mpfr_get_prec(o.v));
    mpfr_set(v, o.v, MPFR_RNDN);
  }
  Mpf(Mpf&& o) noexcept {
    mpfr_init2(v, mpfr_get_prec(o.v));
    mpfr_swap(v, o.v);
  }
  Mpf& operator=(const Mpf& o) {
    if (this != &o) {
      mpfr_set_prec(v, mpfr_get_prec(o.v));
      mpfr_set(v, o.v, MPFR_RNDN);
    }
    return *this;
  }
  Mpf& operator=(Mpf&& o) noexcept {
    mpfr_swap(v, o.v);
    return *this;
  }
  ~Mpf() { mpfr_clear(v); }

  void set_prec(long prec) { mpfr_prec_round(v, prec, MPFR_RNDN); }

  mpfr_t v;
};

struct Cx {
  explicit Cx(long prec) : re(prec), im(prec) {}
  Mpf re, im;
  void set_prec(long prec) {
    re.set_prec(prec);
    im.set_prec(prec);
  }
};

// Scratch-based complex arithmetic at a fixed precision, round-to-nearest.
class Arith {
 public:
  explicit Arith(long prec) : t1(prec), t2(prec), t3(prec), t4(prec) {}

  void mul(Cx& r, const Cx& a, const Cx& b) {
    mpfr_mul(t1.v, a.re.v, b.re.v, MPFR_RNDN);
    mpfr_mul(t2.v, a.im.v, b.im.v, MPFR_RNDN);
    mpfr_mul(t3.v, a.re.v, b.im.v, MPFR_RNDN);
    mpfr_mul(t4.v, a.im.v, b.re.v, MPFR_RNDN);
    mpfr_sub(r.re.v, t1.v, t2.v, MPFR_RNDN);
    mpfr_add(r.im.v, t3.v, t4.v, MPFR_RNDN);
  }
  void div(Cx& r, const Cx& a, const Cx& b) {
    // (a.re + i a.im) / (b.re + i b.im)
    mpfr_sqr(t1.v, b.re.v, MPFR_RNDN);
    mpfr_sqr(t2.v, b.im.v, MPFR_RNDN);
    mpfr_add(t1.v, t1.v, t2.v, MPFR_RNDN);  // |b|^2
    mpfr_mul(t2.v, a.re.v, b.re.v, MPFR_RNDN);
    mpfr_mul(t3.v, a.im.v, b.im.v, MPFR_RNDN);
    mpfr_add(t2.v, t2.v, t3.v, MPFR_RNDN);
    mpfr_mul(t3.v, a.im.v, b.re.v, MPFR_RNDN);
    mpfr_mul(t4.v, a.re.v, b.im.v, MPFR_RNDN);
    mpfr_sub(t3.v, t3.v, t4.v, MPFR_RNDN);
    mpfr_div(r.re.v, t2.v, t1.v, MPFR_RNDN);
    mpfr_div(r.im.v, t3.v, t1.v, MPFR_RNDN);
  }
  void abs(Mpf& r, const Cx& a) { mpfr_hypot(r.v, a.re.v, a.im.v, MPFR_RNDN); }

 private:
  Mpf t1, t2, t3, t4;
};

std::vector<std::complex<double>> aberth_double(const IntPolynomial& f) {
  const int d = f.degree();
  std::vector<double> c(d + 1);
  for (int i = 0; i <= d; ++i) c[i] = f.coeffs()[i].get_d();
  for (double v : c)
    if (!std::isfinite(v)) return {};

  // Fujiwara-type bound on root moduli for the starting circle.
  double bound = 0;
  for (int k = 1; k <= d; ++k) bound = std::max(bound, std::pow(std::abs(c[d - k] / c[d]), 1.0 / k));
  bound = std::max(bound, 1e-3);
  const std::complex<double> shift = -c[d - 1] / (d * c[d]);

  std::vector<std::complex<double>> z(d);
  for (int k = 0; k < d; ++k) {
    const double angle = 2 * std::numbers::pi * k / d + 0.7;
    z[k] = shift + bound * std::polar(1.0, angle);
  }
  auto eval = [&](std::complex<double> x, std::complex<double>& fx, std::complex<double>& dfx) {
    fx = c[d];
    dfx = 0;
    for (int i = d - 1; i >= 0; --i) {
      dfx = dfx * x + fx;
      fx = fx * x + c[i];
    }
  };
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0;
    for (int i = 0; i < d; ++i) {
      std::complex<double> fx, dfx;
      eval(z[i], fx, dfx);
      if (fx == 0.0) continue;
      const std::complex<double> ratio = fx / dfx;
      std::complex<double> s = 0;
      for (int j = 0; j < d; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      const std::complex<double> w = ratio / (1.0 - ratio * s);
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[i])));
    }
    if (!(worst == worst)) return {};
    if (worst < 1e-15) break;
  }
  for (const auto& v : z)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return {};
  return z;
}

class Isolator {
 public:
  Isolator(const IntPolynomial& f, long prec) : f_(f), d_(f.degree()), prec_(prec) {
    std::vector<std::complex<double>> start = aberth_double(f);
    if (start.empty()) {
      start.resize(d_);
      for (int k = 0; k < d_; ++k) start[k] = std::polar(1.0, 2 * std::numbers::pi * k / d_ + 0.7);
    }
    for (const auto& s : start) {
      Cx z(prec_);
      mpfr_set_d(z.re.v, s.real(), MPFR_RNDN);
      mpfr_set_d(z.im.v, s.imag(), MPFR_RNDN);
      z_.push_back(std::move(z));
    }
  }

  long precision() const { return prec_; }

  void raise_precision(long prec) {
    prec_ = prec;
    for (auto& z : z_) z.set_prec(prec_);
  }

  // Aberth-Ehrlich sweeps at the current precision until corrections reach
  // the rounding level or stop shrinking.
  void polish() {
    Arith A(prec_);
    Cx fx(prec_), dfx(prec_), ratio(prec_), s(prec_), diff(prec_), inv(prec_), w(prec_), one(prec_), den(prec_);
    mpfr_set_ui(one.re.v, 1, MPFR_RNDN);
    Mpf mag(prec_), zmag(prec_), rel(prec_), tol(prec_);
    mpfr_set_ui(tol.v, 1, MPFR_RNDN);
    mpfr_div_2si(tol.v, tol.v, prec_ - 12, MPFR_RNDN);
    for (int iter = 0; iter < 200; ++iter) {
      bool converged = true;
      for (int i = 0; i < d_; ++i) {
        horner(A, z_[i], fx, dfx);
        if (mpfr_zero_p(fx.re.v) && mpfr_zero_p(fx.im.v)) continue;
        A.div(ratio, fx, dfx);
        mpfr_set_zero(s.re.v, 1);
        mpfr_set_zero(s.im.v, 1);
        for (int j = 0; j < d_; ++j) {
          if (j == i) continue;
          mpfr_sub(diff.re.v, z_[i].re.v, z_[j].re.v, MPFR_RNDN);
          mpfr_sub(diff.im.v, z_[i].im.v, z_[j].im.v, MPFR_RNDN);
          A.div(inv, one, diff);
          mpfr_add(s.re.v, s.re.v, inv.re.v, MPFR_RNDN);
          mpfr_add(s.im.v, s.im.v, inv.im.v, MPFR_RNDN);
        }
        A.mul(den, ratio, s);
        mpfr_ui_sub(den.re.v, 1, den.re.v, MPFR_RNDN);
        mpfr_neg(den.im.v, den.im.v, MPFR_RNDN);
        A.div(w, ratio, den);
        if (!mpfr_number_p(w.re.v) || !mpfr_number_p(w.im.v)) continue;
        mpfr_sub(z_[i].re.v, z_[i].re.v, w.re.v, MPFR_RNDN);
        mpfr_sub(z_[i].im.v, z_[i].im.v, w.im.v, MPFR_RNDN);
        A.abs(mag, w);
        A.abs(zmag, z_[i]);
        if (mpfr_cmp_ui(zmag.v, 1) < 0) mpfr_set_ui(zmag.v, 1, MPFR_RNDN);
        mpfr_div(rel.v, mag.v, zmag.v, MPFR_RNDN);
        if (mpfr_greater_p(rel.v, tol.v)) converged = false;
      }
      if (converged) break;
    }
  }

  // Snap near-real approximations onto the real axis and make the remaining
  // ones exact conjugate pairs. Returns false if the pairing is inconsistent.
  bool symmetrize() {
    Mpf t(prec_), zmag(prec_);
    Arith A(prec_);
    std::vector<int> upper, lower;
    for (int i = 0; i < d_; ++i) {
      A.abs(zmag, z_[i]);
      if (mpfr_cmp_ui(zmag.v, 1) < 0) mpfr_set_ui(zmag.v, 1, MPFR_RNDN);
      mpfr_mul_2si(t.v, zmag.v, -(prec_ / 2), MPFR_RNDN);
      if (mpfr_cmpabs(z_[i].im.v, t.v) <= 0) {
        mpfr_set_zero(z_[i].im.v, 1);
      } else if (mpfr_sgn(z_[i].im.v) > 0) {
        upper.push_back(i);
      } else {
        lower.push_back(i);
      }
    }
    if (upper.size() != lower.size()) return false;
    std::vector<char> used(lower.size(), 0);
    Mpf dist(prec_), best(prec_);
    Cx diff(prec_);
    for (int u : upper) {
      int pick = -1;
      for (std::size_t k = 0; k < lower.size(); ++k) {
        if (used[k]) continue;
        mpfr_sub(diff.re.v, z_[u].re.v, z_[lower[k]].re.v, MPFR_RNDN);
        mpfr_add(diff.im.v, z_[u].im.v, z_[lower[k]].im.v, MPFR_RNDN);
        A.abs(dist, diff);
        if (pick < 0 || mpfr_less_p(dist.v, best.v)) {
          pick = static_cast<int>(k);
          mpfr_set(best.v, dist.v, MPFR_RNDN);
        }
      }
      used[pick] = 1;
      Cx& a = z_[u];
      Cx& b = z_[lower[pick]];
      mpfr_add(t.v, a.re.v, b.re.v, MPFR_RNDN);
      mpfr_div_2ui(a.re.v, t.v, 1, MPFR_RNDN);
      mpfr_set(b.re.v, a.re.v, MPFR_RNDN);
      mpfr_sub(t.v, a.im.v, b.im.v, MPFR_RNDN);
      mpfr_div_2ui(a.im.v, t.v, 1, MPFR_RNDN);
      mpfr_neg(b.im.v, a.im.v, MPFR_RNDN);
    }
    return true;
  }

  // Rigorous inclusion radii around the current centres, or an empty vector
  // if the disks are not pairwise disjoint.
  std::vector<ComplexBox> certify() const {
    const long P = prec_;
    std::vector<ComplexEnclosure> c;
    c.reserve(d_);
    for (const auto& z : z_)
      c.emplace_back(RealEnclosure::between(z.re.v, z.re.v, P), RealEnclosure::between(z.im.v, z.im.v, P));
    const RealEnclosure lead = abs(RealEnclosure::from_integer(f_.leading(), P));
    const RealEnclosure deg = RealEnclosure::from_integer(d_, P);

    // |c_i - c_j| lower bounds, symmetric
    std::vector<std::vector<RealEnclosure>> dist(d_, std::vector<RealEnclosure>(d_, RealEnclosure(P)));
    for (int i = 0; i < d_; ++i)
      for (int j = i + 1; j < d_; ++j) {
        RealEnclosure n = (c[i] - c[j]).norm();
        if (mpfr_sgn(n.lo()) <= 0) return {};
        dist[i][j] = dist[j][i] = sqrt(n);
      }

    std::vector<RealEnclosure> radius;
    radius.reserve(d_);
    for (int i = 0; i < d_; ++i) {
      RealEnclosure den = lead;
      for (int j = 0; j < d_; ++j)
        if (j != i) den = den * dist[i][j];
      const RealEnclosure num = evaluate(f_, c[i]).abs() * deg;
      RealEnclosure r = num / den;
      // only the upper endpoint carries meaning
      radius.push_back(RealEnclosure::between(r.hi(), r.hi(), P));
    }
    for (int i = 0; i < d_; ++i)
      for (int j = i + 1; j < d_; ++j)
        if (compare(radius[i] + radius[j], dist[i][j]) != Ordering::Less) return {};

    std::vector<ComplexBox> boxes;
    boxes.reserve(d_);
    for (int i = 0; i < d_; ++i) {
      ComplexBox b;
      b.center = c[i];
      b.radius = radius[i];
      const RealEnclosure spread = hull(-radius[i], radius[i]);
      b.re = c[i].re + spread;
      b.real = mpfr_zero_p(z_[i].im.v) != 0;
      b.im = b.real ? RealEnclosure(P) : c[i].im + spread;
      boxes.push_back(std::move(b));
    }
    return boxes;
  }

 private:
  void horner(Arith& A, const Cx& x, Cx& fx, Cx& dfx) const {
    mpfr_set_z(fx.re.v, f_.leading().get_mpz_t(), MPFR_RNDN);
    mpfr_set_zero(fx.im.v, 1);
    mpfr_set_zero(dfx.re.v, 1);
    mpfr_set_zero(dfx.im.v, 1);
    Cx t(prec_);
    for (int i = d_ - 1; i >= 0; --i) {
      A.mul(t, dfx, x);
      mpfr_add(dfx.re.v, t.re.v, fx.re.v, MPFR_RNDN);
      mpfr_add(dfx.im.v, t.im.v, fx.im.v, MPFR_RNDN);
      A.mul(t, fx, x);
      mpfr_add_z(fx.re.v, t.re.v, f_.coeffs()[i].get_mpz_t(), MPFR_RNDN);
      mpfr_set(fx.im.v, t.im.v, MPFR_RNDN);
    }
  }

  IntPolynomial f_;
  int d_;
  long prec_;
  std::vector<Cx> z_;
};

}  // namespace

double ComplexBox::width() const { return std::max(re.width(), im.width()); }

std::vector<ComplexBox> isolate_roots(const IntPolynomial& f, double target_width, const RootOptions& options) {
  if (f.is_constant()) throw DomainError("isolate_roots: constant polynomial");
  if (!squarefree_check(f)) throw DomainError("isolate_roots: non-squarefree input");
  if (!(target_width > 0)) throw DomainError("isolate_roots: target width must be positive");

  Isolator iso(f, options.precision);
  for (long prec = options.precision; prec <= options.precision_cap; prec *= 2) {
    if (prec != iso.precision()) iso.raise_precision(prec);
    iso.polish();
    if (!iso.symmetrize()) continue;
    std::vector<ComplexBox> boxes = iso.certify();
    if (boxes.empty()) continue;
    const bool narrow = std::all_of(boxes.begin(), boxes.end(), [&](const ComplexBox& b) { return b.width() <= target_width; });
    if (!narrow) continue;
    std::sort(boxes.begin(), boxes.end(), [](const ComplexBox& a, const ComplexBox& b) {
      const int by_re = mpfr_cmp(a.center.re.lo(), b.center.re.lo());
      if (by_re != 0) return by_re < 0;
      return mpfr_cmp(a.center.im.lo(), b.center.im.lo()) < 0;
    });
    return boxes;
  }
  throw IndeterminateError("isolate_roots: precision cap reached before certification");
}

namespace {

// [|c| - r, |c| + r] clipped at 0
RealEnclosure modulus_range(const ComplexBox& box) {
  const RealEnclosure c = box.center.abs();
  const long P = c.precision();
  RealEnclosure lo = c - box.radius;
  RealEnclosure hi = c + box.radius;
  RealEnclosure zero(P);
  RealEnclosure out = RealEnclosure::between(max(lo, zero).lo(), hi.hi(), P);
  return out;
}

}  // namespace

RealEnclosure log_plus_abs(const ComplexBox& box) {
  const RealEnclosure m = modulus_range(box);
  const long P = m.precision();
  if (mpfr_cmp_ui(m.hi(), 1) <= 0) return RealEnclosure(P);
  const RealEnclosure one = RealEnclosure::from_integer(1, P);
  return max(log(max(m, one)), RealEnclosure(P));
}

RealEnclosure log_abs(const ComplexBox& box) { return log(modulus_range(box)); }

}  // namespace weilcert
