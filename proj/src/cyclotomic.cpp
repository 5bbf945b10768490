#include "repdec/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace repdec {

namespace {

// p^nu exactly divides the order; m = n / p^nu and w = m^{-1} mod p^nu are
// what component extraction needs: the basis exponent with components (b_p)
// is sum_p b_p * m_p mod n.
struct PrimePower {
  long p;
  int nu;
  long np;  // p^nu
  long q;   // p^(nu-1)
  long m;   // n / np
  long w;   // m^{-1} mod np
};

struct OrderInfo {
  long n = 1;
  long phi = 1;
  std::vector<PrimePower> primes;

  long comp(long j, const PrimePower& pp) const {
    return (j % pp.np) * pp.w % pp.np;
  }
  static bool component_ok(const PrimePower& pp, long b) {
    return pp.p == 2 ? b < pp.q : b >= pp.q;
  }
};

long mod_inverse(long a, long m) {
  if (m == 1) return 0;
  long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += m;
  return t;
}

const OrderInfo& order_info(long n) {
  thread_local std::unordered_map<long, std::unique_ptr<OrderInfo>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto info = std::make_unique<OrderInfo>();
  info->n = n;
  long rem = n;
  for (long p = 2; p * p <= rem; p += (p == 2 ? 1 : 2)) {
    if (rem % p != 0) continue;
    PrimePower pp{p, 0, 1, 1, 1, 1};
    while (rem % p == 0) {
      rem /= p;
      pp.nu++;
      pp.np *= p;
    }
    pp.q = pp.np / p;
    info->primes.push_back(pp);
  }
  if (rem > 1) info->primes.push_back(PrimePower{rem, 1, rem, 1, 1, 1});
  for (auto& pp : info->primes) {
    pp.m = n / pp.np;
    pp.w = mod_inverse(pp.m % pp.np, pp.np);
    info->phi *= (pp.p - 1) * pp.q;
  }
  auto& slot = cache[n];
  slot = std::move(info);
  return *slot;
}

long lcm_long(long a, long b) {
  long g = std::gcd(a, b);
  return a / g * b;
}

using TermMap = std::map<long, Rational>;

// Sorts by exponent and combines duplicates in place; drops zeros.
void sort_merge(Cyclotomic::Terms& v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < v.size();) {
    long e = v[i].first;
    Rational acc = std::move(v[i].second);
    for (++i; i < v.size() && v[i].first == e; ++i) acc += v[i].second;
    if (!acc.is_zero()) v[w++] = {e, std::move(acc)};
  }
  v.resize(w);
}

}  // namespace

struct CycloInternals {
  static Cyclotomic make_canonical(long n, Cyclotomic::Terms terms) {
    // Terms are trusted to be canonical basis coordinates, sorted, no zeros.
    Cyclotomic z;
    z.n_ = n;
    z.c_ = std::move(terms);
    return z;
  }

  static Cyclotomic::Terms canonicalize(long n, const Cyclotomic::Terms& raw) {
    const OrderInfo& info = order_info(n);
    // Pre-merge duplicates so the rewrite worklist starts minimal.
    Cyclotomic::Terms merged;
    merged.reserve(raw.size());
    for (const auto& [e, c] : raw) {
      if (c.is_zero()) continue;
      long j = e % n;
      if (j < 0) j += n;
      merged.emplace_back(j, c);
    }
    sort_merge(merged);
    Cyclotomic::Terms out;
    out.reserve(merged.size());
    struct Item {
      long j;
      Rational c;
      std::size_t prime_idx;
    };
    std::vector<Item> work;
    work.reserve(merged.size());
    for (auto& [j, c] : merged) work.push_back({j, std::move(c), 0});
    while (!work.empty()) {
      Item it = std::move(work.back());
      work.pop_back();
      bool expanded = false;
      while (it.prime_idx < info.primes.size()) {
        const PrimePower& pp = info.primes[it.prime_idx];
        long b = info.comp(it.j, pp);
        if (pp.p == 2) {
          if (b >= pp.q) {
            // zeta_{2^nu}^b = -zeta_{2^nu}^{b - 2^(nu-1)}
            long delta = pp.q * pp.m % n;
            it.j = (it.j - delta % n + n) % n;
            it.c = -it.c;
          }
          it.prime_idx++;
        } else if (b < pp.q) {
          // zeta_{p^nu}^b = -sum_{k=1}^{p-1} zeta_{p^nu}^{b + k p^(nu-1)}
          long step = pp.q * pp.m % n;
          long j2 = it.j;
          for (long k = 1; k < pp.p; ++k) {
            j2 = (j2 + step) % n;
            work.push_back({j2, -it.c, it.prime_idx + 1});
          }
          expanded = true;
          break;
        } else {
          it.prime_idx++;
        }
      }
      if (!expanded) out.emplace_back(it.j, std::move(it.c));
    }
    sort_merge(out);
    return out;
  }

  // Attempts to write z (order n, >= 2 prime factors) as a product of a pure
  // Q(zeta_{p^nu}) element and an element of the complementary field. Used to
  // multiply large decomposable elements (Gauss-sum products) in time
  // proportional to the factors rather than the expanded supports.
  static bool try_split(const Cyclotomic& z, const PrimePower& pp,
                        Cyclotomic::Terms* p_part, Cyclotomic* rest) {
    const OrderInfo& info = order_info(z.n_);
    // Group terms by the exponent with the p-component removed.
    struct Entry {
      long r;
      long b;
      const Rational* c;
    };
    std::vector<Entry> entries;
    entries.reserve(z.c_.size());
    for (const auto& [j, c] : z.c_) {
      long b = info.comp(j, pp);
      long r = (j - b % z.n_ * (pp.m % z.n_) % z.n_ + z.n_) % z.n_;
      entries.push_back({r, b, &c});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
      return x.r != y.r ? x.r < y.r : x.b < y.b;
    });
    // The first group fixes the p-part support and the rational ratios.
    std::size_t glen = 0;
    while (glen < entries.size() && entries[glen].r == entries[0].r) ++glen;
    if (entries.size() % glen != 0) return false;
    const Rational& ref = *entries[0].c;
    std::vector<Rational> lambda;
    lambda.reserve(glen);
    for (std::size_t i = 0; i < glen; ++i) lambda.push_back(*entries[i].c / ref);

    Cyclotomic::Terms rest_terms;
    rest_terms.reserve(entries.size() / glen);
    for (std::size_t g = 0; g < entries.size(); g += glen) {
      if (entries[g].r % pp.np != 0) return false;  // cannot happen for canonical data
      const Rational w = *entries[g].c / lambda.front();
      for (std::size_t i = 0; i < glen; ++i) {
        const Entry& e = entries[g + i];
        if (e.r != entries[g].r || e.b != entries[i].b) return false;
        if (*e.c != lambda[i] * w) return false;
      }
      rest_terms.emplace_back(entries[g].r / pp.np, w);
    }
    p_part->clear();
    for (std::size_t i = 0; i < glen; ++i) p_part->emplace_back(entries[i].b, lambda[i]);
    *rest = make_canonical(z.n_ / pp.np, std::move(rest_terms));
    return true;
  }

  // Rebuilds a term's exponent after dropping or shrinking one prime power.
  static Cyclotomic remap_components(const Cyclotomic& z, long new_n,
                                     const std::function<long(const PrimePower&, long)>& comp_map) {
    const OrderInfo& info = order_info(z.n_);
    const OrderInfo& target = order_info(new_n);
    Cyclotomic::Terms raw;
    raw.reserve(z.c_.size());
    for (const auto& [j, c] : z.c_) {
      long e = 0;
      for (const auto& tp : target.primes) {
        // Find matching prime in the source factorisation.
        long b = 0;
        for (const auto& sp : info.primes) {
          if (sp.p == tp.p) {
            b = comp_map(sp, info.comp(j, sp));
            break;
          }
        }
        e = (e + b % tp.np * (tp.m % new_n)) % new_n;
      }
      raw.emplace_back(e, c);
    }
    return Cyclotomic(new_n, std::move(raw));
  }
};

Cyclotomic::Cyclotomic(long order, Terms raw_terms) {
  if (order <= 0) throw Error("Cyclotomic: order must be positive");
  n_ = order;
  c_ = CycloInternals::canonicalize(order, raw_terms);
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  return Cyclotomic(n, {{k, Rational(1)}});
}

bool Cyclotomic::is_one() const {
  if (n_ == 1) return c_.size() == 1 && c_[0].second.is_one();
  auto r = rational_value();
  return r && r->is_one();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& [e, c] : out.c_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  if (r.is_zero()) return CycloInternals::make_canonical(n_, {});
  Cyclotomic out = *this;
  for (auto& [e, c] : out.c_) c *= r;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  long n = lcm_long(n_, o.n_);
  const Cyclotomic b = (o.n_ == n) ? o : o.embedded(n);
  Cyclotomic a = (n_ == n) ? std::move(*this) : embedded(n);
  // Canonical coordinates at a common order add componentwise.
  Terms out;
  out.reserve(a.c_.size() + b.c_.size());
  std::size_t i = 0, j = 0;
  while (i < a.c_.size() || j < b.c_.size()) {
    if (j == b.c_.size() || (i < a.c_.size() && a.c_[i].first < b.c_[j].first)) {
      out.push_back(std::move(a.c_[i++]));
    } else if (i == a.c_.size() || b.c_[j].first < a.c_[i].first) {
      out.push_back(b.c_[j++]);
    } else {
      Rational s = a.c_[i].second + b.c_[j].second;
      if (!s.is_zero()) out.emplace_back(a.c_[i].first, std::move(s));
      ++i, ++j;
    }
  }
  *this = CycloInternals::make_canonical(n, std::move(out));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero())
    return CycloInternals::make_canonical(lcm_long(a.order(), b.order()), {});
  long n = lcm_long(a.order(), b.order());
  // Coprime orders: zeta_na^i * zeta_nb^j = zeta_n^{i*nb + j*na} maps pairs of
  // basis exponents to distinct basis exponents, so the outer product is
  // already canonical.
  if (std::gcd(a.order(), b.order()) == 1) {
    long na = a.order(), nb = b.order();
    Cyclotomic::Terms out;
    out.reserve(a.coeffs().size() * b.coeffs().size());
    for (const auto& [e1, c1] : a.coeffs()) {
      for (const auto& [e2, c2] : b.coeffs()) {
        out.emplace_back((e1 * nb + e2 * na) % n, c1 * c2);
      }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return CycloInternals::make_canonical(n, std::move(out));
  }
  const Cyclotomic ae = (a.order() == n) ? a : a.embedded(n);
  const Cyclotomic be = (b.order() == n) ? b : b.embedded(n);
  const OrderInfo& info = order_info(n);

  // Decomposable-element fast path: when both operands split as
  // (p-power part) x (rest) over the same prime, multiply the parts.
  constexpr std::size_t kFactorThreshold = 4096;
  if (info.primes.size() >= 2 &&
      ae.coeffs().size() * be.coeffs().size() >= kFactorThreshold) {
    for (const auto& pp : info.primes) {
      Cyclotomic::Terms pa, pb;
      Cyclotomic ra, rb;
      if (CycloInternals::try_split(ae, pp, &pa, &ra) &&
          CycloInternals::try_split(be, pp, &pb, &rb)) {
        Cyclotomic fp = Cyclotomic(pp.np, pa) * Cyclotomic(pp.np, pb);
        Cyclotomic fr = ra * rb;
        if (fp.is_zero() || fr.is_zero()) return CycloInternals::make_canonical(n, {});
        // Combine: component exponents recombine as b*m_p + r*np, already
        // canonical at order n.
        Cyclotomic::Terms out;
        out.reserve(fp.coeffs().size() * fr.coeffs().size());
        const OrderInfo& pinfo = order_info(pp.np);
        for (const auto& [bp, cp] : fp.coeffs()) {
          long bcomp = pinfo.comp(bp, pinfo.primes[0]);
          for (const auto& [r, cr] : fr.coeffs()) {
            long e = (bcomp % n * (pp.m % n) + r % (n / pp.np) * pp.np) % n;
            out.emplace_back(e, cp * cr);
          }
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return CycloInternals::make_canonical(n, std::move(out));
      }
    }
  }

  Cyclotomic::Terms acc;
  acc.reserve(ae.coeffs().size() * be.coeffs().size());
  for (const auto& [e1, c1] : ae.coeffs()) {
    for (const auto& [e2, c2] : be.coeffs()) {
      acc.emplace_back((e1 + e2) % n, c1 * c2);
    }
  }
  return Cyclotomic(n, std::move(acc));
}

Cyclotomic Cyclotomic::conj() const {
  Terms raw;
  raw.reserve(c_.size());
  for (const auto& [e, c] : c_) raw.emplace_back(e == 0 ? 0 : n_ - e, c);
  return Cyclotomic(n_, std::move(raw));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic acc = Cyclotomic::one();
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() == b.order()) return a.coeffs() == b.coeffs();
  long n = lcm_long(a.order(), b.order());
  return a.embedded(n).coeffs() == b.embedded(n).coeffs();
}

Cyclotomic Cyclotomic::embedded(long m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw Error("Cyclotomic: embedding target must be a multiple of the order");
  long k = m / n_;
  Terms out;
  out.reserve(c_.size());
  for (const auto& [e, c] : c_) out.emplace_back(e * k, c);
  // Components at shared primes stay valid, but primes new to the target
  // order carry component 0, which the odd-prime basis rewrites.
  return Cyclotomic(m, std::move(out));
}

Cyclotomic Cyclotomic::reduced() const {
  if (c_.empty()) return Cyclotomic();
  Cyclotomic z = *this;
  bool changed = true;
  while (changed && z.n_ > 1) {
    changed = false;
    const OrderInfo info = order_info(z.n_);
    for (const auto& pp : info.primes) {
      if (pp.p == 2 && pp.nu == 1) {
        // Order 2 mod 4: the 2-component is always 0; drop the factor 2.
        z = CycloInternals::remap_components(z, z.n_ / 2,
                                             [](const PrimePower&, long b) { return b; });
        changed = true;
        break;
      }
      if (pp.p == 2 && pp.nu == 2) {
        bool all_zero = true;
        for (const auto& [j, c] : z.c_) {
          if (info.comp(j, pp) != 0) { all_zero = false; break; }
        }
        if (all_zero) {
          z = CycloInternals::remap_components(z, z.n_ / 4,
                                               [](const PrimePower&, long b) { return b; });
          changed = true;
          break;
        }
        continue;
      }
      if (pp.nu >= 2) {
        bool all_div = true;
        for (const auto& [j, c] : z.c_) {
          if (info.comp(j, pp) % pp.p != 0) { all_div = false; break; }
        }
        if (all_div) {
          long p = pp.p;
          z = CycloInternals::remap_components(
              z, z.n_ / p,
              [p](const PrimePower& sp, long b) { return sp.p == p ? b / p : b; });
          changed = true;
          break;
        }
        continue;
      }
      // Odd p, nu = 1: reducible iff every rest-class carries all of
      // zeta_p^1..zeta_p^{p-1} with one shared coefficient; then the shared
      // block is -1 times an element of the smaller field.
      {
        std::map<long, std::pair<long, Rational>> seen;  // rest -> (count, coeff)
        bool ok = true;
        for (const auto& [j, c] : z.c_) {
          long b = info.comp(j, pp);
          long r = (j - b % z.n_ * (pp.m % z.n_) % z.n_ + z.n_) % z.n_;
          auto it = seen.find(r);
          if (it == seen.end()) {
            seen.emplace(r, std::make_pair(1L, c));
          } else {
            if (it->second.second != c) { ok = false; break; }
            it->second.first++;
          }
        }
        if (ok) {
          for (auto& [r, pc] : seen) {
            if (pc.first != pp.p - 1) { ok = false; break; }
          }
        }
        if (ok) {
          long new_n = z.n_ / pp.p;
          Terms raw;
          raw.reserve(seen.size());
          for (auto& [r, pc] : seen) {
            if (r % pp.np != 0) { ok = false; break; }
            raw.emplace_back(r / pp.np, -pc.second);
          }
          if (ok) {
            z = Cyclotomic(new_n, std::move(raw));
            changed = true;
            break;
          }
        }
      }
    }
  }
  return z;
}

std::optional<Rational> Cyclotomic::rational_value() const {
  Cyclotomic r = reduced();
  if (r.n_ != 1) return std::nullopt;
  if (r.c_.empty()) return Rational(0);
  return r.c_[0].second;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("Cyclotomic: inverse of zero");
  Cyclotomic z = reduced();
  if (z.c_.size() == 1) {
    const auto& [e, c] = z.c_[0];
    Cyclotomic inv = Cyclotomic(z.n_, {{e == 0 ? 0 : z.n_ - e, c.inverse()}});
    return n_ % inv.order() == 0 ? inv.embedded(n_) : inv;
  }
  // Minimal polynomial by iterated powers: the first linear dependence
  // sum mu_i z^i = 0 has mu_0 != 0, giving z^{-1} directly.
  long phi = order_info(z.n_).phi;
  std::vector<Cyclotomic> powers{Cyclotomic::one().embedded(1)};
  struct Row {
    long pivot;
    TermMap row;
    std::vector<Rational> comb;
  };
  std::vector<Row> echelon;
  for (long k = 0;; ++k) {
    if (k > phi) throw Error("Cyclotomic: inverse failed to terminate");
    TermMap row;
    const Cyclotomic pk = powers[k].embedded(z.n_);
    for (const auto& [e, c] : pk.coeffs()) row[e] = c;
    std::vector<Rational> comb(k + 1, Rational(0));
    comb[k] = Rational(1);
    for (const Row& er : echelon) {
      auto it = row.find(er.pivot);
      if (it == row.end()) continue;
      Rational f = it->second;
      for (const auto& [e, c] : er.row) {
        auto [pos, inserted] = row.try_emplace(e, Rational(0));
        pos->second -= f * c;
        if (pos->second.is_zero()) row.erase(pos);
      }
      for (std::size_t i = 0; i < er.comb.size(); ++i) comb[i] -= f * er.comb[i];
    }
    if (row.empty()) {
      const Rational& mu0 = comb[0];
      if (mu0.is_zero()) throw Error("Cyclotomic: inverse internal error (mu0 = 0)");
      Cyclotomic inv;
      for (long i = 1; i <= k; ++i) {
        inv += powers[i - 1].scaled(-comb[i] / mu0);
      }
      inv = inv.embedded(lcm_long(inv.order(), z.n_));
      return n_ % inv.order() == 0 ? inv.embedded(n_) : inv;
    }
    long pivot = row.begin()->first;
    Rational lead = row.begin()->second;
    for (auto& [e, c] : row) c /= lead;
    for (auto& c : comb) c /= lead;
    echelon.push_back(Row{pivot, std::move(row), std::move(comb)});
    powers.push_back(powers[k] * z);
  }
}

std::complex<double> Cyclotomic::evalf() const {
  long double re = 0, im = 0;
  const long double tau = 6.283185307179586476925286766559L;
  for (const auto& [e, c] : c_) {
    long double x = c.to_double();
    long double ang = tau * static_cast<long double>(e) / static_cast<long double>(n_);
    re += x * std::cos(ang);
    im += x * std::sin(ang);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclotomic::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c;
    } else {
      os << c << "*E(" << n_ << ")";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::size_t Cyclotomic::hash() const {
  Cyclotomic r = reduced();
  const std::size_t kPrime = 1099511628211ull;
  std::size_t h = 14695981039346656037ull;
  h = (h ^ static_cast<std::size_t>(r.n_)) * kPrime;
  for (const auto& [e, c] : r.c_) {
    h = (h ^ static_cast<std::size_t>(e)) * kPrime;
    h = (h ^ c.hash()) * kPrime;
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.str(); }

namespace {

long powmod(long b, long e, long m) {
  long long acc = 1, base = b % m;
  while (e > 0) {
    if (e & 1) acc = acc * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<long>(acc);
}

int legendre(long k, long p) {
  long r = powmod(k % p, (p - 1) / 2, p);
  return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

// Positive square root of a prime, via the quadratic Gauss sum
// g_p = sum_k (k|p) zeta_p^k, which equals sqrt(p) for p = 1 mod 4 and
// i*sqrt(p) for p = 3 mod 4.
Cyclotomic sqrt_prime(long p) {
  if (p == 2) return Cyclotomic(8, {{1, Rational(1)}, {3, Rational(-1)}});
  Cyclotomic::Terms terms;
  terms.reserve(p - 1);
  for (long k = 1; k < p; ++k) terms.emplace_back(k, Rational(legendre(k, p)));
  Cyclotomic g(p, std::move(terms));
  if (p % 4 == 1) return g;
  return Cyclotomic(4, {{1, Rational(-1)}}) * g;  // -i * g
}

}  // namespace

Cyclotomic sqrt_rational(const Rational& r) {
  if (r.sign() <= 0) throw Error("sqrt_rational: radicand must be positive");
  mpz_class n = r.numerator() * r.denominator();
  // Factor by trial division, with a primality check for a large cofactor.
  std::vector<std::pair<long, long>> factors;  // (prime, exponent)
  mpz_class rem = n;
  for (long p = 2; p <= 1000000 && mpz_cmp_ui(rem.get_mpz_t(), 1) > 0; p += (p == 2 ? 1 : 2)) {
    if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
    long e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
      ++e;
    }
    factors.emplace_back(p, e);
    if (mpz_cmp_ui(rem.get_mpz_t(), 1) > 0 && mpz_sizeinbase(rem.get_mpz_t(), 2) <= 62 &&
        mpz_probab_prime_p(rem.get_mpz_t(), 32) > 0) {
      factors.emplace_back(rem.get_si(), 1);
      rem = 1;
      break;
    }
  }
  if (mpz_cmp_ui(rem.get_mpz_t(), 1) > 0) {
    if (mpz_sizeinbase(rem.get_mpz_t(), 2) <= 62 && mpz_probab_prime_p(rem.get_mpz_t(), 32) > 0) {
      factors.emplace_back(rem.get_si(), 1);
    } else {
      throw Error("sqrt_rational: cannot factor radicand " + n.get_str());
    }
  }
  mpz_class square_part = 1;
  std::vector<long> radical;
  for (auto [p, e] : factors) {
    for (long i = 0; i < e / 2; ++i) square_part *= p;
    if (e % 2 == 1) radical.push_back(p);
  }
  Cyclotomic out{Rational(mpq_class(square_part, r.denominator()))};
  for (long p : radical) out = out * sqrt_prime(p);
  return out;
}

}  // namespace repdec
