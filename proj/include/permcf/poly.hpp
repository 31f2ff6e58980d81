#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include "json.hpp"

namespace permcf {

// Indeterminate families. Declaration order is the canonical variable order.
enum class Family : std::uint8_t {
    lambda,
    x1, x2, y1, y2, u1, u2, v1, v2,
    w_e, w_o, z_e, z_o,
    yt1, vt1,
    pp1, pp2, pm1, pm2,
    qp1, qp2, qm1, qm2,
    s, s_e, s_o,
    x, y, xb, yb,
    a, b, c, d, e, f, w,
};

inline constexpr int kFamilyCount = static_cast<int>(Family::w) + 1;

// Number of indices a family carries (0, 1 or 2).
int family_arity(Family f);
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// A single indeterminate, e.g. b[1,0] or x1. Packed into 48 bits so that
// ordering on the packed key is lexicographic on (family, indices).
class Var {
public:
    Var() = default;
    explicit Var(Family f, std::uint32_t i = 0, std::uint32_t j = 0);

    Family family() const { return static_cast<Family>(key_ >> 40); }
    std::uint32_t i() const { return static_cast<std::uint32_t>((key_ >> 20) & kIndexMask); }
    std::uint32_t j() const { return static_cast<std::uint32_t>(key_ & kIndexMask); }
    std::uint64_t key() const { return key_; }
    std::string to_string() const;

    static Var from_key(std::uint64_t key);

    friend bool operator==(Var a, Var b) { return a.key_ == b.key_; }
    friend bool operator<(Var a, Var b) { return a.key_ < b.key_; }

    static constexpr std::uint32_t kMaxIndex = (1u << 20) - 1;

private:
    static constexpr std::uint64_t kIndexMask = (1ull << 20) - 1;
    std::uint64_t key_ = 0;
};

// Sorted list of (var key << 16 | exponent) words; exponent >= 1.
using Monomial = std::vector<std::uint64_t>;

class Poly {
public:
    using TermMap = std::map<Monomial, mpz_class>;

    Poly() = default;
    Poly(long c);  // NOLINT: implicit integer constants are convenient in formulas
    explicit Poly(const mpz_class& c);
    explicit Poly(Var v, unsigned exponent = 1);

    static Poly var(Family f) { return Poly(Var(f)); }
    static Poly var(Family f, std::uint32_t i) { return Poly(Var(f, i)); }
    static Poly var(Family f, std::uint32_t i, std::uint32_t j) { return Poly(Var(f, i, j)); }
    // Single monomial with coefficient 1; zero exponents are skipped and repeats merged.
    static Poly from_powers(const std::vector<std::pair<Var, unsigned>>& powers);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    mpz_class constant_term() const;
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly pow(unsigned k) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Adds c * m, dropping the term if it cancels.
    void add_term(const Monomial& m, const mpz_class& c);

    // Ring homomorphism sending each variable v to image(v).
    Poly substitute(const std::function<Poly(Var)>& image) const;
    Poly substitute(const std::map<Var, Poly>& assignment) const;
    // Polynomial multiplying v^k (terms with v-degree exactly k, v removed).
    Poly coefficient_of(Var v, unsigned k) const;
    unsigned degree_in(Var v) const;
    std::vector<Var> variables() const;
    mpz_class evaluate(const std::function<mpz_class(Var)>& value) const;

    std::string to_string() const;
    static Poly parse(std::string_view text);

    nlohmann::json to_json() const;
    static Poly from_json(const nlohmann::json& j);

private:
    TermMap terms_;
};

Monomial monomial_mul(const Monomial& a, const Monomial& b);
std::string monomial_to_string(const Monomial& m);

// [m]_{p,q} = sum_{i=0}^{m-1} p^{m-1-i} q^i.
Poly pq_bracket(unsigned m, const Poly& p, const Poly& q);

// Truncated power series in t with polynomial coefficients, t^0..t^order.
class Series {
public:
    explicit Series(int order = 0) : c_(static_cast<std::size_t>(order) + 1) {}
    Series(int order, std::vector<Poly> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Poly& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    Poly& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<Poly>& coeffs() const { return c_; }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    Series scaled(const Poly& p) const;
    // Multiplies by t^k, dropping coefficients past the order.
    Series shifted(int k) const;
    // Requires constant term +1 or -1.
    Series inverse() const;

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    std::vector<Poly> c_;
};

}  // namespace permcf
