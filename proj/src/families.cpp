#include "congruent6/families.hpp"

#include "congruent6/errors.hpp"

namespace congruent6 {

Curve family2(const Curve& e, const Rat& u, const Rat& v) {
    const Rat &a = e.a(), &b = e.b();
    Rat cubic = v.pow(3) + a * u * u * v + b * u.pow(3);
    if (cubic.is_zero())
        throw degenerate_fiber_error("degenerate 2-congruent fiber at (u:v) = (" + u.to_string() +
                                     ":" + v.to_string() + ")");
    Rat A = Rat(3) * (Rat(3) * a * v * v + Rat(9) * b * u * v - a * a * u * u);
    Rat B = Rat(27) * b * v.pow(3) - Rat(18) * a * a * u * v * v - Rat(27) * a * b * u * u * v -
            (Rat(2) * a.pow(3) + Rat(27) * b * b) * u.pow(3);
    return Curve(A, B);
}

std::pair<Rat, Rat> frak_coeffs(const Curve& e, const Rat& lam, const Rat& mu,
                                Congruence3 variant) {
    Rat c4 = -e.a() / Rat(27);
    Rat c6 = -e.b() / Rat(54);
    Rat l = lam, m = mu;
    Rat f4 = c4 * l.pow(4) + Rat(4) * c6 * l.pow(3) * m + Rat(6) * c4 * c4 * l * l * m * m +
             Rat(4) * c4 * c6 * l * m.pow(3) - (Rat(3) * c4.pow(3) - Rat(4) * c6 * c6) * m.pow(4);
    Rat f6 = c6 * l.pow(6) + Rat(6) * c4 * c4 * l.pow(5) * m +
             Rat(15) * c4 * c6 * l.pow(4) * m * m + Rat(20) * c6 * c6 * l.pow(3) * m.pow(3) +
             Rat(15) * c4 * c4 * c6 * l * l * m.pow(4) +
             Rat(6) * (Rat(3) * c4.pow(4) - Rat(2) * c4 * c6 * c6) * l * m.pow(5) +
             (Rat(9) * c4.pow(3) * c6 - Rat(8) * c6.pow(3)) * m.pow(6);
    if (variant == Congruence3::direct) return {f4, f6};
    Rat disc_c = c4.pow(3) - c6 * c6;  // = discriminant / 1259712, nonzero on a Curve
    Rat g4 = l.pow(4) - Rat(6) * c4 * l * l * m * m - Rat(8) * c6 * l * m.pow(3) -
             Rat(3) * c4 * c4 * m.pow(4);
    Rat f4s = Rat(-4) * g4 / disc_c;
    Rat f6s = Rat(-8) * f6 / (disc_c * disc_c);
    return {f4s, f6s};
}

Curve family3(const Curve& e, const Rat& lam, const Rat& mu, Congruence3 variant) {
    auto [f4, f6] = frak_coeffs(e, lam, mu, variant);
    Rat A = Rat(-27) * f4;
    Rat B = Rat(-54) * f6;
    Rat disc = Rat(-16) * (Rat(4) * A.pow(3) + Rat(27) * B * B);
    if (disc.is_zero())
        throw degenerate_fiber_error(
            "degenerate 3-congruent fiber at (lambda:mu) = (" + lam.to_string() + ":" +
            mu.to_string() + "): discriminant " + disc.to_string());
    return Curve(A, B);
}

MPoly family2_A_sym() {
    MPoly a = MPoly::var(sym::a), b = MPoly::var(sym::b);
    MPoly u = MPoly::var(sym::u), v = MPoly::var(sym::v);
    return (a * v * v * 3 + b * u * v * 9 - a * a * u * u).scaled(Rat(3));
}

MPoly family2_B_sym() {
    MPoly a = MPoly::var(sym::a), b = MPoly::var(sym::b);
    MPoly u = MPoly::var(sym::u), v = MPoly::var(sym::v);
    return b * v.pow(3) * 27 - a * a * u * v * v * 18 - a * b * u * u * v * 27 -
           (a.pow(3) * 2 + b * b * 27) * u.pow(3);
}

MPoly discriminant_sym(const MPoly& A, const MPoly& B) {
    return (A.pow(3) * 4 + B * B * 27).scaled(Rat(-16));
}

MPoly frak_c4_sym() {
    MPoly a = MPoly::var(sym::a), b = MPoly::var(sym::b);
    MPoly l = MPoly::var(sym::lam), m = MPoly::var(sym::mu);
    MPoly c4 = a.scaled(Rat(-1, 27));
    MPoly c6 = b.scaled(Rat(-1, 54));
    return c4 * l.pow(4) + c6 * l.pow(3) * m * 4 + c4 * c4 * l * l * m * m * 6 +
           c4 * c6 * l * m.pow(3) * 4 - (c4.pow(3) * 3 - c6 * c6 * 4) * m.pow(4);
}

MPoly frak_c6_sym() {
    MPoly a = MPoly::var(sym::a), b = MPoly::var(sym::b);
    MPoly l = MPoly::var(sym::lam), m = MPoly::var(sym::mu);
    MPoly c4 = a.scaled(Rat(-1, 27));
    MPoly c6 = b.scaled(Rat(-1, 54));
    return c6 * l.pow(6) + c4 * c4 * l.pow(5) * m * 6 + c4 * c6 * l.pow(4) * m * m * 15 +
           c6 * c6 * l.pow(3) * m.pow(3) * 20 + c4 * c4 * c6 * l * l * m.pow(4) * 15 +
           (c4.pow(4) * 3 - c4 * c6 * c6 * 2) * l * m.pow(5) * 6 +
           (c4.pow(3) * c6 * 9 - c6.pow(3) * 8) * m.pow(6);
}

bool disc_identity_suite() {
    MPoly a = MPoly::var(sym::a), b = MPoly::var(sym::b);
    MPoly u = MPoly::var(sym::u), v = MPoly::var(sym::v);
    MPoly l = MPoly::var(sym::lam), m = MPoly::var(sym::mu);
    MPoly dE = discriminant_sym(a, b);

    // 2-congruent family: disc(F_{u,v}) = 3^6 (v^3 + a u^2 v + b u^3)^2 disc(E)
    MPoly dF = discriminant_sym(family2_A_sym(), family2_B_sym());
    MPoly cubic = v.pow(3) + a * u * u * v + b * u.pow(3);
    MPoly lhs2 = dF - cubic.pow(2).scaled(Rat(729)) * dE;
    if (!lhs2.is_zero()) return false;

    // 3-congruent family: disc fiber = disc(E) * (quartic in lambda, mu)^3
    MPoly dFiber = discriminant_sym(frak_c4_sym().scaled(Rat(-27)), frak_c6_sym().scaled(Rat(-54)));
    MPoly quart = l.pow(4) + a.scaled(Rat(2, 9)) * l * l * m * m +
                  b.scaled(Rat(4, 27)) * l * m.pow(3) - (a * a).scaled(Rat(1, 243)) * m.pow(4);
    MPoly lhs3 = dFiber - dE * quart.pow(3);
    return lhs3.is_zero();
}

}  // namespace congruent6
