#include "orthoconvex/rat.hpp"

#include "big_rat.hpp"

#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace oc {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  auto hi = static_cast<std::uint64_t>(u >> 64);
  auto lo = static_cast<std::uint64_t>(u);
  mpz_class r = hi;
  r <<= 64;
  r += mpz_class(static_cast<unsigned long>(lo));
  if (neg) r = -r;
  return r;
}

mpq_class to_mpq(const Rat& r) { return as_mpq(r); }

}  // namespace

Rat Rat::from_big(BigRat&& v) {
  v.q.canonicalize();
  const mpz_class& n = v.q.get_num();
  const mpz_class& d = v.q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
    Rat r;
    r.num_ = n.get_si();
    r.den_ = d.get_si();
    return r;
  }
  Rat r;
  r.big_ = std::make_shared<const BigRat>(std::move(v));
  return r;
}

namespace {

// n/d with d != 0, both in i128 range, reduced to canonical form.
Rat make_from128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits(n) && fits(d)) return Rat(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
  BigRat b{mpq_class(to_mpz(n), to_mpz(d))};
  return Rat::from_big(std::move(b));
}

}  // namespace

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min()) {
    *this = make_from128(num, den);
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = gcd64(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("Rat: empty string");
  auto check_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  BigRat b;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    trim(n);
    trim(d);
    if (!check_int(n, true) || !check_int(d, true)) throw std::invalid_argument("Rat: bad rational '" + s + "'");
    if (n[0] == '+') n.erase(0, 1);
    if (d[0] == '+') d.erase(0, 1);
    mpz_class dn(d);
    if (dn == 0) throw std::domain_error("Rat: zero denominator");
    b.q = mpq_class(mpz_class(n), dn);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.erase(0, 1);
    if (ip.empty()) ip = "0";
    if (!check_int(ip, false) || (!fp.empty() && !check_int(fp, false)))
      throw std::invalid_argument("Rat: bad decimal '" + s + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    mpz_class num = mpz_class(ip) * scale + (fp.empty() ? mpz_class(0) : mpz_class(fp));
    if (neg) num = -num;
    b.q = mpq_class(num, scale);
  } else {
    if (!check_int(s, true)) throw std::invalid_argument("Rat: bad integer '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    b.q = mpq_class(mpz_class(s), 1);
  }
  return from_big(std::move(b));
}

bool Rat::is_integer() const { return big_ ? big_->q.get_den() == 1 : den_ == 1; }

int Rat::sign() const {
  if (big_) return sgn(big_->q);
  return (num_ > 0) - (num_ < 0);
}

std::string Rat::num_str() const { return big_ ? big_->q.get_num().get_str() : std::to_string(num_); }
std::string Rat::den_str() const { return big_ ? big_->q.get_den().get_str() : std::to_string(den_); }

std::string Rat::str() const {
  if (is_integer()) return num_str();
  return num_str() + "/" + den_str();
}

double Rat::to_double() const {
  if (big_) return big_->q.get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rat Rat::floor() const {
  if (!big_) {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return Rat(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), big_->q.get_num_mpz_t(), big_->q.get_den_mpz_t());
  return from_big(BigRat{mpq_class(q)});
}

Rat Rat::ceil() const { return -((-*this).floor()); }

std::int64_t Rat::to_int64() const {
  if (!is_integer() || !is_small()) throw std::overflow_error("Rat: not an int64 integer: " + str());
  return num_;
}

Rat Rat::operator-() const {
  if (!big_) {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_big(BigRat{-big_->q});
}

Rat operator+(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits(s)) return Rat(static_cast<long>(s));
      return make_from128(s, 1);
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return make_from128(n, d);
  }
  return Rat::from_big(BigRat{to_mpq(a) + to_mpq(b)});
}

Rat operator-(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) - b.num_;
      if (fits(s)) return Rat(static_cast<long>(s));
      return make_from128(s, 1);
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return make_from128(n, d);
  }
  return Rat::from_big(BigRat{to_mpq(a) - to_mpq(b)});
}

Rat operator*(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 p = static_cast<i128>(a.num_) * b.num_;
      if (fits(p)) return Rat(static_cast<long>(p));
      return make_from128(p, 1);
    }
    std::int64_t g1 = gcd64(a.num_, b.den_);
    std::int64_t g2 = gcd64(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (fits(n) && fits(d)) {
      Rat r;
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      if (r.num_ == 0) r.den_ = 1;
      return r;
    }
    return make_from128(n, d);
  }
  return Rat::from_big(BigRat{to_mpq(a) * to_mpq(b)});
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.sign() == 0) throw std::domain_error("Rat: division by zero");
  if (!a.big_ && !b.big_) {
    Rat inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
  }
  return Rat::from_big(BigRat{to_mpq(a) / to_mpq(b)});
}

bool operator==(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return a.big_->q == b.big_->q;
  return false;  // canonical forms differ in storage class only when values differ
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(to_mpq(a), to_mpq(b));
  return c <=> 0;
}

std::size_t Rat::hash() const {
  if (!big_) {
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
  return std::hash<std::string>{}(big_->q.get_str());
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace oc
