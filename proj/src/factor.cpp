#include "recgeo/factor.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>

#include "recgeo/errors.hpp"

namespace recgeo {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1u) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool fits_u64(const Integer& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Integer& n) {
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

Integer from_u64(u64 v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Brent's cycle-finding variant of Pollard rho on 64-bit moduli.  Returns a
// nontrivial factor of the odd composite n.
u64 rho_u64(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto step = [&](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + c) % n); };
    u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
    constexpr u64 m = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// Brent rho on arbitrary-size n with an iteration budget shared across
// polynomial constants.  Returns 0 when the budget is exhausted.
Integer rho_mpz(const Integer& n, u64 budget) {
  u64 spent = 0;
  auto exhausted = [&] { return budget != 0 && spent >= budget; };
  for (unsigned long c = 1; !exhausted(); ++c) {
    auto step = [&](Integer& v) {
      v *= v;
      v += c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
      ++spent;
    };
    Integer y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
    constexpr u64 m = 128;
    for (u64 r = 1; g == 1 && !exhausted(); r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) step(y);
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          diff = x - y;
          q *= diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        if (exhausted()) break;
      }
    }
    if (g == 1) break;
    if (g == n) {
      do {
        step(ys);
        diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return 0;
}

void split(const Integer& n, const FactorOptions& options, Factorization& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.primes.push_back(n);
    return;
  }
  Integer d;
  if (fits_u64(n)) {
    d = from_u64(rho_u64(to_u64(n)));
  } else {
    d = rho_mpz(n, options.rho_budget);
    if (d == 0) {
      out.unfactored.push_back(n);
      return;
    }
  }
  split(d, options, out);
  split(n / d, options, out);
}

}  // namespace

const std::vector<std::uint32_t>& small_primes(std::uint32_t bound) {
  static std::mutex lock;
  static std::map<std::uint32_t, std::vector<std::uint32_t>> cache;
  std::lock_guard guard(lock);
  auto [it, inserted] = cache.try_emplace(bound);
  if (inserted && bound > 2) {
    std::vector<bool> composite(bound, false);
    for (std::uint32_t i = 2; i < bound; ++i) {
      if (composite[i]) continue;
      it->second.push_back(i);
      for (u64 j = static_cast<u64>(i) * i; j < bound; j += i) composite[j] = true;
    }
  }
  return it->second;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s && witness; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

bool is_strong_probable_prime(const Integer& n, const Integer& base) {
  if (n < 2 || mpz_even_p(n.get_mpz_t())) return n == 2;
  const Integer n1 = n - 1;
  Integer d = n1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x;
  const Integer a = mod(base, n);
  if (a == 0) return true;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    x *= x;
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

bool is_strong_lucas_probable_prime(const Integer& n) {
  if (n < 2) return false;
  if (n == 2) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;

  // Selfridge's method A: first D in 5, -7, 9, -11, ... with (D/n) = -1.
  long dval = 5;
  while (true) {
    const Integer dd(dval);
    const int j = mpz_jacobi(dd.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && abs(dd) != n) return false;
    dval = dval > 0 ? -(dval + 2) : -dval + 2;
  }
  const Integer D(dval);
  const Integer P = 1;
  const Integer Q = (1 - D) / 4;

  // n + 1 = d * 2^s with d odd.
  Integer d = n + 1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  auto half = [&](Integer v) {
    if (mpz_odd_p(v.get_mpz_t())) v += n;
    mpz_tdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), 1);
    return mod(v, n);
  };

  Integer U = 1, V = P, Qk = mod(Q, n);
  const Integer Qm = mod(Q, n);
  for (auto bit = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
    U = mod(U * V, n);
    V = mod(V * V - 2 * Qk, n);
    Qk = mod(Qk * Qk, n);
    if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      const Integer u2 = half(P * U + V);
      V = half(D * U + P * V);
      U = u2;
      Qk = mod(Qk * Qm, n);
    }
  }
  if (U == 0 || V == 0) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    V = mod(V * V - 2 * Qk, n);
    if (V == 0) return true;
    Qk = mod(Qk * Qk, n);
  }
  return false;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  for (std::uint32_t p : small_primes(1000)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  return is_strong_probable_prime(n, 2) && is_strong_lucas_probable_prime(n);
}

Factorization factor(const Integer& n, const FactorOptions& options) {
  if (n == 0) throw ZeroInput("cannot factor zero");
  Factorization out;
  Integer rest = abs(n);

  for (std::uint32_t p : small_primes(options.trial_bound)) {
    if (rest == 1) break;
    if (rest < static_cast<u64>(p) * p) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      out.primes.emplace_back(static_cast<unsigned long>(p));
    }
  }
  split(rest, options, out);
  std::sort(out.primes.begin(), out.primes.end());
  std::sort(out.unfactored.begin(), out.unfactored.end());
  return out;
}

}  // namespace recgeo
