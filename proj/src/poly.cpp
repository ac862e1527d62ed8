#include "stt/poly.hpp"

#include <algorithm>

namespace stt {

Scalar poly_eval(const Poly& p, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

// positive divisors of |n| by trial division; gives up (empty) past the bound
std::vector<mpz_class> divisors(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  std::vector<mpz_class> small, large;
  const long kBound = 1'000'000;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (d > kBound) return {};  // caller treats as "unknown"
    if (n % d == 0) {
      small.push_back(d);
      large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Scalar> poly_roots_in_field(const Poly& p_in) {
  Poly p = p_in;
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  if (p.size() <= 1) return {};
  const FieldSpec& f = p[0].field();
  std::vector<Scalar> roots;

  if (f.kind == FieldKind::PrimeField) {
    if (f.p >= (1 << 20))
      throw compute_error("root scan over F_p limited to p < 2^20");
    for (std::int64_t r = 0; r < f.p; ++r) {
      Scalar x = Scalar::of_int(f, r);
      if (poly_eval(p, x).is_zero()) roots.push_back(x);
    }
    return roots;
  }

  // over Q: strip roots at 0, clear denominators, rational root theorem
  std::size_t low = 0;
  while (low < p.size() && p[low].is_zero()) ++low;
  if (low > 0) {
    roots.push_back(Scalar::zero(f));
    p.erase(p.begin(), p.begin() + low);
  }
  if (p.size() <= 1) return roots;

  mpz_class lcm_den = 1;
  for (const auto& c : p) lcm_den = lcm(lcm_den, c.rat().get_den());
  std::vector<mpz_class> ic;
  for (const auto& c : p) {
    mpq_class q = c.rat() * mpq_class(lcm_den);
    ic.push_back(q.get_num());
  }
  auto ps = divisors(ic.front());
  auto qs = divisors(ic.back());
  if (ps.empty() || qs.empty())
    throw compute_error("rational root search: constant/leading term too hard to factor");
  for (const auto& num : ps)
    for (const auto& den : qs) {
      if (gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        mpq_class cand(sign * num, den);
        cand.canonicalize();
        Scalar x = Scalar::of_mpq(f, cand);
        if (poly_eval(p, x).is_zero()) roots.push_back(x);
      }
    }
  std::sort(roots.begin(), roots.end(),
            [](const Scalar& a, const Scalar& b) { return a.cmp(b) < 0; });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace stt
