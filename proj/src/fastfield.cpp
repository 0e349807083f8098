#include "kantor/fastfield.hpp"

namespace kantor {

namespace {

Fp reduce_rational(const Rational& r) {
  if (r.is_small()) {
    Fp n(static_cast<long long>(r.small_num()));
    if (r.small_den() == 1) return n;
    Fp d(static_cast<long long>(r.small_den()));
    if (d.is_zero()) throw BadReduction("denominator divisible by the reduction prime");
    return n / d;
  }
  mpz_class p(static_cast<unsigned long>(Fp::kPrime));
  mpz_class n = r.numerator() % p;
  if (n < 0) n += p;
  mpz_class d = r.denominator() % p;
  if (d == 0) throw BadReduction("denominator divisible by the reduction prime");
  return Fp::raw(n.get_ui()) / Fp::raw(d.get_ui());
}

long long exact_ll(const mpz_class& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) throw IntegerOverflow();
  return z.get_si();
}

}  // namespace

Fp reduce_mod_p(const GaussianRational& z) {
  Fp re = reduce_rational(z.re());
  if (z.im().is_zero()) return re;
  return re + Fp::i() * reduce_rational(z.im());
}

GaussInt scaled_to_gauss_int(const GaussianRational& z, const mpz_class& scale) {
  mpq_class re = z.re().to_mpq() * scale;
  mpq_class im = z.im().to_mpq() * scale;
  re.canonicalize();
  im.canonicalize();
  if (re.get_den() != 1 || im.get_den() != 1) throw std::invalid_argument("scale does not clear denominators");
  return GaussInt(exact_ll(re.get_num()), exact_ll(im.get_num()));
}

}  // namespace kantor
