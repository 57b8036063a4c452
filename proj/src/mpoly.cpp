#include "congruent6/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace congruent6 {

namespace sym {

namespace {
const char* kNames[COUNT] = {
    "a", "b", "D", "u", "v", "lambda", "mu", "x", "y",
    "x1", "x2", "x3", "x4", "x5", "x6",
    "X1", "X2", "X3", "X4", "X5", "X6",
};
}

const char* name(int s) { return kNames[s]; }

int index_of(const std::string& name) {
    for (int i = 0; i < COUNT; ++i)
        if (name == kNames[i]) return i;
    return -1;
}

}  // namespace sym

namespace {
Exps zero_exps() {
    Exps e{};
    e.fill(0);
    return e;
}
}  // namespace

MPoly::MPoly(const Rat& c) {
    if (!c.is_zero()) terms_.emplace(zero_exps(), c);
}

MPoly MPoly::var(int symbol, unsigned exp) {
    MPoly p;
    if (exp == 0) return MPoly(Rat(1));
    Exps e = zero_exps();
    e[symbol] = static_cast<std::uint8_t>(exp);
    p.terms_.emplace(e, Rat(1));
    return p;
}

void MPoly::add_term(const Exps& e, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& p, const MPoly& q) {
    MPoly r;
    for (const auto& [ep, cp] : p.terms_) {
        for (const auto& [eq, cq] : q.terms_) {
            Exps e;
            for (int i = 0; i < sym::COUNT; ++i) {
                unsigned s = unsigned(ep[i]) + unsigned(eq[i]);
                if (s > 255) throw math_error("exponent overflow in polynomial product");
                e[i] = static_cast<std::uint8_t>(s);
            }
            r.add_term(e, cp * cq);
        }
    }
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly acc(Rat(1)), base = *this;
    while (e) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return acc;
}

MPoly MPoly::derivative(int symbol) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[symbol] == 0) continue;
        Exps d = e;
        d[symbol] -= 1;
        r.add_term(d, c * Rat(long(e[symbol])));
    }
    return r;
}

unsigned MPoly::degree(int symbol) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[symbol]);
    return d;
}

unsigned MPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (int i = 0; i < sym::COUNT; ++i) t += e[i];
        d = std::max(d, t);
    }
    return d;
}

MPoly MPoly::coeff_of(int symbol, unsigned k) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[symbol] != k) continue;
        Exps d = e;
        d[symbol] = 0;
        r.add_term(d, c);
    }
    return r;
}

Rat MPoly::eval(const std::map<int, Rat>& bindings) const {
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < sym::COUNT; ++i) {
            if (e[i] == 0) continue;
            auto it = bindings.find(i);
            if (it == bindings.end())
                throw math_error(std::string("unbound variable ") + sym::name(i));
            t *= it->second.pow(e[i]);
        }
        acc += t;
    }
    return acc;
}

MPoly MPoly::subst(int symbol, const Rat& value) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        Exps d = e;
        unsigned k = d[symbol];
        d[symbol] = 0;
        r.add_term(d, c * value.pow(k));
    }
    return r;
}

MPoly MPoly::subst(int symbol, const MPoly& value) const {
    unsigned dmax = degree(symbol);
    std::vector<MPoly> powers(dmax + 1);
    powers[0] = MPoly(Rat(1));
    for (unsigned k = 1; k <= dmax; ++k) powers[k] = powers[k - 1] * value;
    MPoly r;
    for (const auto& [e, c] : terms_) {
        Exps d = e;
        unsigned k = d[symbol];
        d[symbol] = 0;
        MPoly rest;
        rest.add_term(d, c);
        r += rest * powers[k];
    }
    return r;
}

Rat MPoly::constant_term() const {
    auto it = terms_.find(zero_exps());
    return it == terms_.end() ? Rat(0) : it->second;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    // print highest-degree terms first for readability
    std::vector<std::pair<Exps, Rat>> ts(terms_.begin(), terms_.end());
    std::reverse(ts.begin(), ts.end());
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        Rat cc = c;
        if (first) {
            if (cc.sign() < 0) { os << "-"; cc = -cc; }
        } else {
            os << (cc.sign() < 0 ? " - " : " + ");
            if (cc.sign() < 0) cc = -cc;
        }
        first = false;
        bool has_var = false;
        std::ostringstream vars;
        for (int i = 0; i < sym::COUNT; ++i) {
            if (e[i] == 0) continue;
            if (has_var) vars << "*";
            vars << sym::name(i);
            if (e[i] > 1) vars << "^" << unsigned(e[i]);
            has_var = true;
        }
        if (!has_var) {
            os << cc.to_string();
        } else if (cc == Rat(1)) {
            os << vars.str();
        } else {
            os << cc.to_string() << "*" << vars.str();
        }
    }
    return os.str();
}

MPoly mpoly_arith(const MPoly& p, const MPoly& q, MPolyOp op) {
    switch (op) {
        case MPolyOp::add: return p + q;
        case MPolyOp::sub: return p - q;
        case MPolyOp::mul: return p * q;
    }
    throw math_error("unknown polynomial operation");
}

MPoly reduce_var_square(const MPoly& p, int yvar, const MPoly& rhs) {
    if (rhs.depends_on(yvar)) throw math_error("reduction rhs depends on the reduced variable");
    unsigned dy = p.degree(yvar);
    if (dy <= 1) return p;
    std::vector<MPoly> rhs_pow(dy / 2 + 1);
    rhs_pow[0] = MPoly(Rat(1));
    for (unsigned k = 1; k <= dy / 2; ++k) rhs_pow[k] = rhs_pow[k - 1] * rhs;
    MPoly r;
    for (unsigned k = 0; k <= dy; ++k) {
        MPoly ck = p.coeff_of(yvar, k);
        if (ck.is_zero()) continue;
        MPoly piece = ck * rhs_pow[k / 2];
        if (k % 2 == 1) piece *= MPoly::var(yvar);
        r += piece;
    }
    return r;
}

MPoly reduce_mod_weierstrass(const MPoly& p, const MPoly& rhs_in_x) {
    if (rhs_in_x.depends_on(sym::y))
        throw math_error("Weierstrass rhs must be a polynomial in x only");
    return reduce_var_square(p, sym::y, rhs_in_x);
}

std::vector<Rat> univariate_coeffs(const MPoly& p, int symbol) {
    std::vector<Rat> out(p.degree(symbol) + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) {
        for (int i = 0; i < sym::COUNT; ++i)
            if (i != symbol && e[i] != 0)
                throw math_error(std::string("polynomial is not univariate in ") + sym::name(symbol));
        out[e[symbol]] = c;
    }
    return out;
}

}  // namespace congruent6
