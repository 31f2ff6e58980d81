#include <random>

#include "doctest.h"
#include "permcf/poly.hpp"

using namespace permcf;
using F = Family;

namespace {

Poly random_poly(std::mt19937& rng) {
    static const std::vector<Var> vars{Var(F::lambda), Var(F::x1), Var(F::a, 0), Var(F::b, 1, 0), Var(F::e, 2)};
    std::uniform_int_distribution<int> nterms(0, 4), coef(-3, 3), ex(0, 2), pick(0, 4);
    Poly p;
    for (int t = nterms(rng); t > 0; --t) {
        std::vector<std::pair<Var, unsigned>> pw;
        for (int k = 0; k < 2; ++k) pw.push_back({vars[static_cast<std::size_t>(pick(rng))], static_cast<unsigned>(ex(rng))});
        p += Poly(static_cast<long>(coef(rng))) * Poly::from_powers(pw);
    }
    return p;
}

// Schoolbook product via explicit term lists.
Poly naive_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(monomial_mul(ma, mb), ca * cb);
    return r;
}

}  // namespace

TEST_CASE("family arity and names") {
    CHECK(family_arity(F::a) == 1);
    CHECK(family_arity(F::e) == 1);
    CHECK(family_arity(F::w) == 1);
    CHECK(family_arity(F::b) == 2);
    CHECK(family_arity(F::d) == 2);
    CHECK(family_arity(F::x1) == 0);
    CHECK(family_from_name("lambda") == F::lambda);
    CHECK(family_from_name("λ") == F::lambda);
    CHECK_FALSE(family_from_name("nope").has_value());
}

TEST_CASE("basic arithmetic") {
    Poly x1 = Poly::var(F::x1), lam = Poly::var(F::lambda);
    CHECK(((x1 + lam) * Poly(0L)).is_zero());
    Poly a0 = Poly::var(F::a, 0), b00 = Poly::var(F::b, 0, 0);
    CHECK((a0 + b00).pow(2) == a0 * a0 + Poly(2L) * a0 * b00 + b00 * b00);
    CHECK((x1 - x1).is_zero());
    CHECK(Poly(5L).is_constant());
    CHECK(Poly(5L).constant_term() == 5);
    CHECK((x1 + Poly(3L)).constant_term() == 3);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == naive_mul(p, q));
        CHECK((p - p).is_zero());
        CHECK(p + (-p) == Poly());
    }
}

TEST_CASE("substitution") {
    Poly x1 = Poly::var(F::x1), y1 = Poly::var(F::y1), lam = Poly::var(F::lambda);
    CHECK((x1 * y1).substitute(std::map<Var, Poly>{{Var(F::x1), y1}}) == y1.pow(2));
    Poly p = lam.pow(3) * x1 + lam * y1;
    CHECK(p.substitute(std::map<Var, Poly>{{Var(F::lambda), Poly(1L)}}) == x1 + y1);

    std::mt19937 rng(11);
    auto img = [](Var v) { return v.family() == F::x1 ? Poly::var(F::u1) + Poly(2L) : Poly(v); };
    for (int it = 0; it < 100; ++it) {
        Poly p1 = random_poly(rng), q1 = random_poly(rng);
        CHECK((p1 * q1).substitute(img) == p1.substitute(img) * q1.substitute(img));
    }
}

TEST_CASE("coefficient extraction") {
    Poly lam = Poly::var(F::lambda);
    Poly p = lam.pow(2) * Poly::var(F::e, 0) * Poly::var(F::f, 0) + lam * Poly::var(F::a, 0) * Poly::var(F::b, 0, 0);
    CHECK(p.coefficient_of(Var(F::lambda), 1) == Poly::var(F::a, 0) * Poly::var(F::b, 0, 0));
    CHECK(Poly::var(F::x1).coefficient_of(Var(F::lambda), 0) == Poly::var(F::x1));
    CHECK(p.degree_in(Var(F::lambda)) == 2);
}

TEST_CASE("print and parse") {
    Poly p = Poly(3L) * Poly::var(F::a, 1) * Poly::var(F::b, 0, 1) + Poly::var(F::lambda).pow(2) * Poly::var(F::e, 0).pow(2);
    CHECK(p.to_string() == "λ^2*e[0]^2 + 3*a[1]*b[0,1]");
    CHECK(Poly().to_string() == "0");
    CHECK(Poly::parse(p.to_string()) == p);
    CHECK(Poly::parse("(x1 + y1)^2") == (Poly::var(F::x1) + Poly::var(F::y1)).pow(2));
    CHECK(Poly::parse("lambda*w[0] - 2") == Poly::var(F::lambda) * Poly::var(F::w, 0) - Poly(2L));
    CHECK_THROWS_AS(Poly::parse("x1 +"), std::invalid_argument);
    CHECK_THROWS_AS(Poly::parse("b[1]"), std::invalid_argument);

    std::mt19937 rng(3);
    for (int it = 0; it < 100; ++it) {
        Poly q = random_poly(rng);
        CHECK(Poly::parse(q.to_string()) == q);
        CHECK(Poly::from_json(q.to_json()) == q);
    }
}

TEST_CASE("big coefficients stay exact") {
    Poly p = (Poly::var(F::x1) + Poly(1L)).pow(80);
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), 80, 40);
    CHECK(p.coefficient_of(Var(F::x1), 40).constant_term() == binom);
}

TEST_CASE("pq bracket") {
    Poly p = Poly::var(F::pp1), q = Poly::var(F::qp1);
    CHECK(pq_bracket(0, p, q).is_zero());
    CHECK(pq_bracket(1, p, q) == Poly(1L));
    CHECK(pq_bracket(3, p, q) == p * p + p * q + q * q);
    CHECK(pq_bracket(4, Poly(1L), Poly(1L)) == Poly(4L));
}

TEST_CASE("series inverse") {
    Series s(5);
    s[0] = Poly(1L);
    s[1] = Poly::var(F::x1);
    Series inv = s.inverse();
    Series prod = s * inv;
    CHECK(prod[0] == Poly(1L));
    for (int k = 1; k <= 5; ++k) CHECK(prod[k].is_zero());
    CHECK(inv[3] == -Poly::var(F::x1).pow(3));
    Series bad(2);
    bad[0] = Poly(2L);
    CHECK_THROWS(bad.inverse());
}
