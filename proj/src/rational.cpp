#include "qloop/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace qloop {
namespace {

using i128 = __int128;

constexpr i128 kMax = INT64_MAX;
constexpr i128 kMin = -static_cast<i128>(INT64_MAX);  // keep -num representable

bool fits(i128 v) { return v <= kMax && v >= kMin; }

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpq_class to_mpq_128(i128 n, i128 d) {
    auto conv = [](i128 v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
        mpz_class z(static_cast<unsigned long>(u >> 64));
        z <<= 64;
        z += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
        return neg ? mpz_class(-z) : z;
    };
    mpq_class q(conv(n), conv(d));
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    i128 nn = n, dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    i128 g = gcd128(nn, dd);
    if (g > 1) {
        nn /= g;
        dd /= g;
    }
    if (fits(nn) && fits(dd)) {
        num_ = static_cast<std::int64_t>(nn);
        den_ = static_cast<std::int64_t>(dd);
    } else {
        assign(to_mpq_128(nn, dd));
    }
}

Rational::Rational(const mpq_class& q) { assign(q); }

void Rational::assign(const mpq_class& q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != INT64_MIN) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const mpq_class>(q);
    }
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign(-*big_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            i128 s = static_cast<i128>(num_) + o.num_;
            if (fits(s)) {
                num_ = static_cast<std::int64_t>(s);
                return *this;
            }
            assign(to_mpq_128(s, 1));
            return *this;
        }
        i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
        i128 d = static_cast<i128>(den_) * o.den_;
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) d = 1;
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        assign(to_mpq_128(n, d));
        return *this;
    }
    assign(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            i128 p = static_cast<i128>(num_) * o.num_;
            if (fits(p)) {
                num_ = static_cast<std::int64_t>(p);
                return *this;
            }
            assign(to_mpq_128(p, 1));
            return *this;
        }
        i128 n = static_cast<i128>(num_) * o.num_;
        i128 d = static_cast<i128>(den_) * o.den_;
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) d = 1;
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        assign(to_mpq_128(n, d));
        return *this;
    }
    assign(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!o.big_) {
        Rational inv;
        inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
        inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
        return *this *= inv;
    }
    assign(to_mpq() / o.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) return pow(Rational(1) / base, -exponent);
    Rational result(1), b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

}  // namespace qloop
