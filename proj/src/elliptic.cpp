#include "congruent6/elliptic.hpp"

#include <algorithm>
#include <sstream>

#include "congruent6/errors.hpp"
#include "congruent6/qmatrix.hpp"

namespace congruent6 {

Curve::Curve(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
    if (discriminant().is_zero())
        throw singular_curve_error("singular curve: a=" + a_.to_string() + ", b=" + b_.to_string());
}

Rat Curve::discriminant() const {
    return Rat(-16) * (Rat(4) * a_.pow(3) + Rat(27) * b_.pow(2));
}

Rat Curve::j_invariant() const { return (Rat(-48) * a_).pow(3) / discriminant(); }

namespace {

std::string coeff_term(const Rat& c, const std::string& mono, bool leading) {
    std::string out;
    Rat cc = c;
    if (leading) {
        if (cc.sign() < 0) {
            out += "-";
            cc = -cc;
        }
    } else {
        out += cc.sign() < 0 ? " - " : " + ";
        if (cc.sign() < 0) cc = -cc;
    }
    if (mono.empty()) return out + cc.to_string();
    if (cc == Rat(1)) return out + mono;
    return out + cc.to_string() + "*" + mono;
}

}  // namespace

std::string Curve::to_string() const {
    std::string s = "y^2 = x^3";
    if (!a_.is_zero()) s += coeff_term(a_, "x", false);
    if (!b_.is_zero()) s += coeff_term(b_, "", false);
    return s;
}

Rat discriminant(const Curve& e) { return e.discriminant(); }
Rat j_invariant(const Curve& e) { return e.j_invariant(); }

Rat Quartic::eval(const Rat& lam, const Rat& mu) const {
    return c4 * lam.pow(4) + c3 * lam.pow(3) * mu + c2 * lam.pow(2) * mu.pow(2) +
           c1 * lam * mu.pow(3) + c0 * mu.pow(4);
}

Quartic Quartic::scaled(const Rat& c) const { return {c4 * c, c3 * c, c2 * c, c1 * c, c0 * c}; }

bool Quartic::is_zero() const {
    return c4.is_zero() && c3.is_zero() && c2.is_zero() && c1.is_zero() && c0.is_zero();
}

std::string Quartic::to_string() const {
    const Rat* cs[5] = {&c4, &c3, &c2, &c1, &c0};
    const char* monos[5] = {"lambda^4", "lambda^3*mu", "lambda^2*mu^2", "lambda*mu^3", "mu^4"};
    std::string s = "y^2 = ";
    bool leading = true;
    for (int i = 0; i < 5; ++i) {
        if (cs[i]->is_zero()) continue;
        s += coeff_term(*cs[i], monos[i], leading);
        leading = false;
    }
    if (leading) s += "0";
    return s;
}

bool is_good_prime(const Curve& e, long p) {
    if (p < 3 || !is_prime(p)) return false;
    if (mpz_fdiv_ui(e.a().den().get_mpz_t(), p) == 0) return false;
    if (mpz_fdiv_ui(e.b().den().get_mpz_t(), p) == 0) return false;
    Rat d = e.discriminant();
    if (mpz_fdiv_ui(d.num().get_mpz_t(), p) == 0) return false;
    return true;
}

long weierstrass_count(const Curve& e, long p) {
    long a = mod_p(e.a(), p), b = mod_p(e.b(), p);
    std::vector<char> sq(p, 0);
    for (long t = 0; t < p; ++t) sq[(t * t) % p] = 1;
    long count = 1;  // point at infinity
    for (long x = 0; x < p; ++x) {
        long v = (((x * x) % p) * x + a * x + b) % p;
        if (v == 0)
            count += 1;
        else if (sq[v])
            count += 2;
    }
    return count;
}

ApReport ap(const Curve& e, long p) {
    if (p < 3) throw bad_prime_error("point counting requires an odd prime");
    if (!is_good_prime(e, p))
        throw bad_prime_error("bad reduction at p=" + std::to_string(p) + " for " + e.to_string());
    ApReport r;
    r.p = p;
    r.count = weierstrass_count(e, p);
    r.ap = p + 1 - r.count;
    if (r.ap * r.ap > 4 * p) throw math_error("Hasse bound violated; counting bug");
    return r;
}

std::vector<long> good_primes(std::span<const Curve> curves, long bound) {
    std::vector<long> out;
    for (long p : primes_up_to(bound)) {
        if (p == 2 || p == 3) continue;
        bool ok = true;
        for (const Curve& e : curves)
            if (!is_good_prime(e, p)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(p);
    }
    return out;
}

std::pair<Rat, Rat> quartic_invariants(const Quartic& q) {
    Rat I = Rat(12) * q.c4 * q.c0 - Rat(3) * q.c3 * q.c1 + q.c2 * q.c2;
    Rat J = Rat(72) * q.c4 * q.c2 * q.c0 + Rat(9) * q.c3 * q.c2 * q.c1 -
            Rat(27) * q.c4 * q.c1 * q.c1 - Rat(27) * q.c0 * q.c3 * q.c3 - Rat(2) * q.c2.pow(3);
    return {I, J};
}

bool has_repeated_root(const Quartic& q) {
    if (q.is_zero()) return true;
    if (q.c4.is_zero() && q.c3.is_zero()) return true;  // (1:0) at least a double root
    std::vector<Rat> f = {q.c0, q.c1, q.c2, q.c3, q.c4};
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    if (f.size() <= 2) return false;  // degree <= 1 after the infinity check
    std::vector<Rat> df(f.size() - 1);
    for (std::size_t k = 1; k < f.size(); ++k) df[k - 1] = f[k] * Rat(long(k));
    return resultant(f, df).is_zero();
}

Curve jacobian_of_quartic(const Quartic& q) {
    if (has_repeated_root(q))
        throw degenerate_fiber_error("quartic has a repeated root; no smooth Jacobian");
    auto [I, J] = quartic_invariants(q);
    return Curve(Rat(-27) * I, Rat(-27) * J);
}

namespace {

// u with u^k = r, if any (r != 0; positive root preferred, negative root
// returned for odd k and negative r).
std::optional<Rat> rational_kth_root(const Rat& r, unsigned k) { return exact_root(r, k); }

}  // namespace

std::optional<Rat> is_Q_isomorphic(const Curve& e, const Curve& f) {
    const bool ea0 = e.a().is_zero(), fa0 = f.a().is_zero();
    const bool eb0 = e.b().is_zero(), fb0 = f.b().is_zero();
    if (ea0 != fa0 || eb0 != fb0) return std::nullopt;
    if (!ea0 && !eb0) {
        Rat r4 = f.a() / e.a();
        Rat r6 = f.b() / e.b();
        Rat u2 = r6 / r4;
        if (u2.sign() <= 0) return std::nullopt;
        if (u2 * u2 != r4 || u2.pow(3) != r6) return std::nullopt;
        auto u = rational_kth_root(u2, 2);
        if (!u) return std::nullopt;
        return *u;
    }
    if (!ea0) {  // b = 0 on both sides
        Rat r4 = f.a() / e.a();
        auto u = rational_kth_root(r4, 4);
        if (!u) return std::nullopt;
        return *u;
    }
    // a = 0 on both sides
    Rat r6 = f.b() / e.b();
    auto u = rational_kth_root(r6, 6);
    if (!u) return std::nullopt;
    return *u;
}

Curve quadratic_twist(const Curve& e, const Rat& d) {
    if (d.is_zero()) throw math_error("twist by zero");
    return Curve(d.pow(2) * e.a(), d.pow(3) * e.b());
}

std::vector<int> cubic_splitting_type(const Curve& e, long p) {
    if (!is_good_prime(e, p))
        throw bad_prime_error("bad reduction at p=" + std::to_string(p));
    long a = mod_p(e.a(), p), b = mod_p(e.b(), p);
    long roots = 0;
    for (long x = 0; x < p; ++x)
        if ((((x * x) % p) * x + a * x + b) % p == 0) ++roots;
    // good reduction makes the cubic squarefree mod p, so roots is 0, 1 or 3
    if (roots == 3) return {1, 1, 1};
    if (roots == 1) return {1, 2};
    if (roots == 0) return {3};
    throw math_error("cubic mod p has unexpected root count");
}

namespace {

Int eval_int_poly(const std::vector<Int>& f, const Int& x) {
    Int acc = 0;
    for (std::size_t k = f.size(); k-- > 0;) acc = acc * x + f[k];
    return acc;
}

bool qp_square(const Int& v, long p) {
    if (sgn(v) == 0) return true;
    long e = valuation(v, p);
    if (e % 2 != 0) return false;
    Int u = v;
    Int pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    u /= pe;
    if (p == 2) {
        long m = mpz_fdiv_ui(u.get_mpz_t(), 8);
        return m == 1;
    }
    return legendre(u, p) == 1;
}

// f(c + p^k * t) as a polynomial in t, where step = p^k.
std::vector<Int> shift_poly(const std::vector<Int>& f, const Int& c, const Int& step) {
    std::size_t n = f.size();
    std::vector<Int> g(n, Int(0));
    // binomial expansion: g_j = sum_{i>=j} f_i * C(i,j) * c^(i-j) * step^j
    std::vector<std::vector<Int>> binom(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + ((j <= i - 1) ? binom[i - 1][j] : Int(0));
    }
    for (std::size_t j = 0; j < n; ++j) {
        Int acc = 0;
        Int cpow = 1;
        for (std::size_t i = j; i < n; ++i) {
            acc += f[i] * binom[i][j] * cpow;
            cpow *= c;
        }
        Int sp = 1;
        for (std::size_t k = 0; k < j; ++k) sp *= step;
        g[j] = acc * sp;
    }
    return g;
}

// Decides whether some x in c + p^k Z_p makes f(x) a p-adic square. Classes
// whose value valuation is pinned below the current precision are decided
// outright; only undecided classes recurse, up to max_depth.
bool zp_class_search(const std::vector<Int>& f, long p, const Int& c, long k, long max_depth) {
    Int v = eval_int_poly(f, c);
    if (sgn(v) == 0) return true;  // exact root, y = 0
    if (qp_square(v, p)) return true;
    long e = valuation(v, p);
    long pin = (p == 2) ? k - 3 : k - 1;  // valuation+unit class fixed when e <= pin
    if (e <= pin) return false;
    if (k >= max_depth) return false;
    Int step;
    mpz_ui_pow_ui(step.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    for (long s = 0; s < p; ++s)
        if (zp_class_search(f, p, c + Int(s) * step, k + 1, max_depth)) return true;
    return false;
}

bool zp_soluble(const std::vector<Int>& f, long p, long max_depth, bool restrict_to_pZp) {
    if (!restrict_to_pZp) {
        for (long c = 0; c < p; ++c)
            if (zp_class_search(f, p, Int(c), 1, max_depth)) return true;
        return false;
    }
    return zp_class_search(f, p, Int(0), 1, max_depth);
}

}  // namespace

bool locally_soluble_at(const Quartic& q, long p) {
    if (q.is_zero()) return true;
    if (!is_prime(p)) throw bad_prime_error("local solubility requires a prime");
    // clear denominators by the square of the lcm so the curve is unchanged
    Int lcm = 1;
    for (const Rat* c : {&q.c4, &q.c3, &q.c2, &q.c1, &q.c0})
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c->den().get_mpz_t());
    Rat scale = Rat(lcm * lcm);
    std::vector<Int> f;
    for (const Rat* c : {&q.c0, &q.c1, &q.c2, &q.c3, &q.c4}) {
        Rat cc = *c * scale;
        f.push_back(cc.num());
    }
    auto [I, J] = quartic_invariants(q.scaled(scale));
    Rat disc = (Rat(4) * I.pow(3) - J * J) / Rat(27);
    long depth = disc.is_zero() ? 16 : 2 * std::max<long>(0, valuation(disc, p)) + 3;
    if (zp_soluble(f, p, depth, false)) return true;
    // chart at infinity: x = 1/x' with x' in pZ_p, y scaled by x'^2
    std::vector<Int> rev(f.rbegin(), f.rend());
    return zp_soluble(rev, p, depth, true);
}

long quartic_count(const Quartic& q, long p) {
    if (p < 3) throw bad_prime_error("quartic count requires an odd prime");
    long c[5];
    c[0] = mod_p(q.c0, p);
    c[1] = mod_p(q.c1, p);
    c[2] = mod_p(q.c2, p);
    c[3] = mod_p(q.c3, p);
    c[4] = mod_p(q.c4, p);
    std::vector<char> sq(p, 0);
    for (long t = 0; t < p; ++t) sq[(t * t) % p] = 1;
    long count = 0;
    for (long x = 0; x < p; ++x) {
        long v = 0;
        for (int k = 4; k >= 0; --k) v = (v * x + c[k]) % p;
        if (v == 0)
            count += 1;
        else if (sq[v])
            count += 2;
    }
    // points above (1:0): y^2 = c4 in the weighted model
    if (c[4] == 0)
        count += 1;
    else if (sq[c[4]])
        count += 2;
    return count;
}

}  // namespace congruent6
