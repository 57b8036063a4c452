#include "congruent6/rat.hpp"

#include <cctype>
#include <vector>

namespace congruent6 {

Rat::Rat(long n, long d) : q_(Int(n), Int(d)) {
    if (d == 0) throw math_error("rational with zero denominator");
    q_.canonicalize();
}

Rat::Rat(const Int& n, const Int& d) : q_(n, d) {
    if (sgn(d) == 0) throw math_error("rational with zero denominator");
    q_.canonicalize();
}

namespace {

bool valid_int_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    std::string ns = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string ds = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!valid_int_token(ns) || !valid_int_token(ds))
        throw parse_error("malformed fraction: \"" + s + "\"");
    Int n(ns), d(ds);
    if (sgn(d) == 0) throw parse_error("zero denominator: \"" + s + "\"");
    return Rat(n, d);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw math_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::pow(unsigned e) const {
    Rat base = *this, acc = 1;
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

Rat Rat::inv() const {
    if (is_zero()) throw math_error("inverse of zero");
    return Rat(1) / *this;
}

std::string Rat::to_string() const {
    std::string s = q_.get_num().get_str();
    if (q_.get_den() != 1) s += "/" + q_.get_den().get_str();
    return s;
}

long valuation(const Int& n, long p) {
    if (sgn(n) == 0) throw math_error("valuation of zero");
    Int m = ::abs(n), q, r;
    long v = 0;
    for (;;) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
        if (sgn(r) != 0) return v;
        m = q;
        ++v;
    }
}

long valuation(const Rat& r, long p) {
    return valuation(r.num(), p) - valuation(r.den(), p);
}

int legendre(const Int& n, long p) {
    Int pp(p);
    return mpz_legendre(n.get_mpz_t(), pp.get_mpz_t());
}

long mod_p(const Rat& r, long p) {
    unsigned long dp = mpz_fdiv_ui(r.den().get_mpz_t(), static_cast<unsigned long>(p));
    if (dp == 0) throw bad_prime_error("prime " + std::to_string(p) + " divides a denominator");
    unsigned long np = mpz_fdiv_ui(r.num().get_mpz_t(), static_cast<unsigned long>(p));
    // invert dp mod p by extended Euclid on machine words
    long t = 0, newt = 1, a = p, b = static_cast<long>(dp);
    while (b != 0) {
        long quo = a / b;
        long tmp = t - quo * newt;
        t = newt; newt = tmp;
        tmp = a - quo * b;
        a = b; b = tmp;
    }
    long inv = ((t % p) + p) % p;
    return static_cast<long>((static_cast<unsigned long long>(np) * inv) % p);
}

std::optional<Int> exact_root(const Int& n, unsigned k) {
    if (k == 0) throw math_error("0th root");
    if (sgn(n) < 0 && k % 2 == 0) return std::nullopt;
    Int r;
    int exactp = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exactp) return std::nullopt;
    return r;
}

std::optional<Rat> exact_root(const Rat& r, unsigned k) {
    auto rn = exact_root(r.num(), k);
    if (!rn) return std::nullopt;
    auto rd = exact_root(r.den(), k);
    if (!rd) return std::nullopt;
    return Rat(*rn, *rd);
}

bool is_prime(long n) {
    if (n < 2) return false;
    Int nn(n);
    return mpz_probab_prime_p(nn.get_mpz_t(), 30) != 0;
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<char> comp(static_cast<std::size_t>(bound) + 1, 0);
    for (long i = 2; i <= bound; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (long j = i * i; j <= bound; j += i) comp[j] = 1;
    }
    return out;
}

}  // namespace congruent6
