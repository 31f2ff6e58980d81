#include "permcf/poly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace permcf {

namespace {

struct FamilyInfo {
    std::string_view name;
    int arity;
};

constexpr std::array<FamilyInfo, kFamilyCount> kFamilies{{
    {"λ", 0},
    {"x1", 0}, {"x2", 0}, {"y1", 0}, {"y2", 0},
    {"u1", 0}, {"u2", 0}, {"v1", 0}, {"v2", 0},
    {"w_e", 0}, {"w_o", 0}, {"z_e", 0}, {"z_o", 0},
    {"yt1", 0}, {"vt1", 0},
    {"pp1", 0}, {"pp2", 0}, {"pm1", 0}, {"pm2", 0},
    {"qp1", 0}, {"qp2", 0}, {"qm1", 0}, {"qm2", 0},
    {"s", 0}, {"s_e", 0}, {"s_o", 0},
    {"x", 0}, {"y", 0}, {"xb", 0}, {"yb", 0},
    {"a", 1}, {"b", 2}, {"c", 2}, {"d", 2}, {"e", 1}, {"f", 1}, {"w", 1},
}};

constexpr std::uint64_t kExpMask = 0xFFFF;

std::uint64_t word_key(std::uint64_t w) { return w >> 16; }
unsigned word_exp(std::uint64_t w) { return static_cast<unsigned>(w & kExpMask); }
std::uint64_t make_word(std::uint64_t key, unsigned e) {
    if (e > kExpMask) throw std::overflow_error("monomial exponent overflow");
    return (key << 16) | e;
}

}  // namespace

int family_arity(Family f) { return kFamilies.at(static_cast<std::size_t>(f)).arity; }

std::string_view family_name(Family f) { return kFamilies.at(static_cast<std::size_t>(f)).name; }

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "lambda") return Family::lambda;
    for (int k = 0; k < kFamilyCount; ++k) {
        if (kFamilies[static_cast<std::size_t>(k)].name == name) return static_cast<Family>(k);
    }
    return std::nullopt;
}

Var::Var(Family f, std::uint32_t i, std::uint32_t j) {
    if (i > kMaxIndex || j > kMaxIndex) throw std::out_of_range("variable index too large");
    int ar = family_arity(f);
    if ((ar < 1 && i != 0) || (ar < 2 && j != 0))
        throw std::invalid_argument("index given to a family that does not take one");
    key_ = (static_cast<std::uint64_t>(f) << 40) | (static_cast<std::uint64_t>(i) << 20) | j;
}

Var Var::from_key(std::uint64_t key) {
    Var v;
    v.key_ = key;
    return v;
}

std::string Var::to_string() const {
    std::string s(family_name(family()));
    switch (family_arity(family())) {
        case 1: s += "[" + std::to_string(i()) + "]"; break;
        case 2: s += "[" + std::to_string(i()) + "," + std::to_string(j()) + "]"; break;
        default: break;
    }
    return s;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto ka = word_key(a[i]), kb = word_key(b[j]);
        if (ka < kb) {
            r.push_back(a[i++]);
        } else if (kb < ka) {
            r.push_back(b[j++]);
        } else {
            r.push_back(make_word(ka, word_exp(a[i]) + word_exp(b[j])));
            ++i;
            ++j;
        }
    }
    r.insert(r.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    r.insert(r.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return r;
}

std::string monomial_to_string(const Monomial& m) {
    std::string s;
    for (auto w : m) {
        if (!s.empty()) s += "*";
        s += Var::from_key(word_key(w)).to_string();
        if (word_exp(w) != 1) s += "^" + std::to_string(word_exp(w));
    }
    return s;
}

Poly::Poly(long c) {
    if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

Poly::Poly(const mpz_class& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly::Poly(Var v, unsigned exponent) {
    if (exponent == 0)
        terms_.emplace(Monomial{}, mpz_class(1));
    else
        terms_.emplace(Monomial{make_word(v.key(), exponent)}, mpz_class(1));
}

Poly Poly::from_powers(const std::vector<std::pair<Var, unsigned>>& powers) {
    std::map<std::uint64_t, unsigned> merged;
    for (const auto& [v, e] : powers)
        if (e) merged[v.key()] += e;
    Monomial m;
    for (const auto& [k, e] : merged) m.push_back(make_word(k, e));
    Poly r;
    r.terms_.emplace(std::move(m), mpz_class(1));
    return r;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

mpz_class Poly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void Poly::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
    }
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly result(1L), base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

Poly Poly::substitute(const std::function<Poly(Var)>& image) const {
    std::map<std::uint64_t, Poly> cache;
    auto img = [&](std::uint64_t key) -> const Poly& {
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, image(Var::from_key(key))).first;
        return it->second;
    };
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly t(c);
        for (auto w : m) {
            t *= img(word_key(w)).pow(word_exp(w));
            if (t.is_zero()) break;
        }
        r += t;
    }
    return r;
}

Poly Poly::substitute(const std::map<Var, Poly>& assignment) const {
    return substitute([&](Var v) {
        auto it = assignment.find(v);
        return it == assignment.end() ? Poly(v) : it->second;
    });
}

Poly Poly::coefficient_of(Var v, unsigned k) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        auto it = std::find_if(m.begin(), m.end(), [&](std::uint64_t w) { return word_key(w) == v.key(); });
        unsigned e = it == m.end() ? 0 : word_exp(*it);
        if (e != k) continue;
        Monomial rest;
        for (auto w : m)
            if (word_key(w) != v.key()) rest.push_back(w);
        r.add_term(rest, c);
    }
    return r;
}

unsigned Poly::degree_in(Var v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        for (auto w : m)
            if (word_key(w) == v.key()) d = std::max(d, word_exp(w));
    return d;
}

std::vector<Var> Poly::variables() const {
    std::vector<std::uint64_t> keys;
    for (const auto& [m, c] : terms_)
        for (auto w : m) keys.push_back(word_key(w));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Var> vs;
    for (auto k : keys) vs.push_back(Var::from_key(k));
    return vs;
}

mpz_class Poly::evaluate(const std::function<mpz_class(Var)>& value) const {
    mpz_class total = 0;
    for (const auto& [m, c] : terms_) {
        mpz_class t = c;
        for (auto w : m) {
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), value(Var::from_key(word_key(w))).get_mpz_t(), word_exp(w));
            t *= p;
        }
        total += t;
    }
    return total;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c < 0;
        mpz_class mag = neg ? mpz_class(-c) : c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        if (m.empty()) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str() + "*";
            s += monomial_to_string(m);
        }
    }
    return s;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view t) : t_(t) {}

    Poly parse() {
        skip();
        if (pos_ == t_.size()) fail("empty polynomial");
        Poly r;
        bool first = true;
        while (true) {
            skip();
            if (pos_ == t_.size()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected + or -");
            }
            first = false;
            Poly term = parse_term();
            if (sign < 0) term = -term;
            r += term;
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
    void skip() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }
    unsigned long number() {
        std::size_t start = pos_;
        while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::stoul(std::string(t_.substr(start, pos_ - start)));
    }

    Poly parse_term() {
        Poly term(1L);
        while (true) {
            skip();
            term *= parse_factor();
            skip();
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            return term;
        }
    }

    Poly parse_factor() {
        skip();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
            return Poly(mpz_class(std::string(t_.substr(start, pos_ - start))));
        }
        if (peek() == '(') {
            ++pos_;
            std::size_t depth = 1, start = pos_;
            while (pos_ < t_.size() && depth) {
                if (t_[pos_] == '(') ++depth;
                if (t_[pos_] == ')') --depth;
                ++pos_;
            }
            if (depth) fail("unbalanced parenthesis");
            Poly inner = PolyParser(t_.substr(start, pos_ - 1 - start)).parse();
            return inner.pow(exponent());
        }
        std::size_t start = pos_;
        if (t_.substr(pos_).rfind("λ", 0) == 0) {
            pos_ += std::string_view("λ").size();
        } else {
            while (pos_ < t_.size() &&
                   (std::isalnum(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '_'))
                ++pos_;
        }
        if (start == pos_) fail("expected a factor");
        auto fam = family_from_name(t_.substr(start, pos_ - start));
        if (!fam) fail("unknown variable '" + std::string(t_.substr(start, pos_ - start)) + "'");
        std::uint32_t idx[2] = {0, 0};
        int arity = family_arity(*fam);
        if (arity > 0) {
            if (peek() != '[') fail("missing index");
            ++pos_;
            for (int k = 0; k < arity; ++k) {
                skip();
                idx[k] = static_cast<std::uint32_t>(number());
                skip();
                if (k + 1 < arity) {
                    if (peek() != ',') fail("expected ,");
                    ++pos_;
                }
            }
            if (peek() != ']') fail("expected ]");
            ++pos_;
        }
        return Poly(Var(*fam, idx[0], idx[1]), exponent());
    }

    unsigned exponent() {
        skip();
        if (peek() != '^') return 1;
        ++pos_;
        skip();
        return static_cast<unsigned>(number());
    }

    std::string_view t_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

nlohmann::json Poly::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        auto mono = nlohmann::json::array();
        for (auto w : m) {
            Var v = Var::from_key(word_key(w));
            auto idx = nlohmann::json::array();
            int ar = family_arity(v.family());
            if (ar >= 1) idx.push_back(v.i());
            if (ar >= 2) idx.push_back(v.j());
            mono.push_back({{"family", std::string(family_name(v.family()))},
                            {"indices", idx},
                            {"exponent", word_exp(w)}});
        }
        arr.push_back({{"coefficient", c.get_str()}, {"monomial", mono}});
    }
    return arr;
}

Poly Poly::from_json(const nlohmann::json& j) {
    Poly r;
    for (const auto& term : j) {
        Poly t(mpz_class(term.at("coefficient").get<std::string>()));
        for (const auto& f : term.at("monomial")) {
            auto fam = family_from_name(f.at("family").get<std::string>());
            if (!fam) throw std::invalid_argument("unknown variable family in JSON");
            auto idx = f.at("indices").get<std::vector<std::uint32_t>>();
            if (static_cast<int>(idx.size()) != family_arity(*fam))
                throw std::invalid_argument("wrong index arity in JSON");
            idx.resize(2, 0);
            t *= Poly(Var(*fam, idx[0], idx[1]), f.at("exponent").get<unsigned>());
        }
        r += t;
    }
    return r;
}

Poly pq_bracket(unsigned m, const Poly& p, const Poly& q) {
    Poly r;
    for (unsigned i = 0; i < m; ++i) r += p.pow(m - 1 - i) * q.pow(i);
    return r;
}

Series::Series(int order, std::vector<Poly> coeffs) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(order) + 1);
}

Series& Series::operator+=(const Series& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    Series r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= a.order(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series Series::scaled(const Poly& p) const {
    Series r(order());
    for (int k = 0; k <= order(); ++k) r[k] = c_[static_cast<std::size_t>(k)] * p;
    return r;
}

Series Series::shifted(int k) const {
    Series r(order());
    for (int i = 0; i + k <= order(); ++i) r[i + k] = (*this)[i];
    return r;
}

Series Series::inverse() const {
    mpz_class c0 = c_[0].constant_term();
    if (!c_[0].is_constant() || (c0 != 1 && c0 != -1))
        throw std::domain_error("series inverse needs constant term +1 or -1");
    Poly inv0(c0);  // 1/c0 == c0 for c0 = ±1
    Series r(order());
    r[0] = inv0;
    for (int k = 1; k <= order(); ++k) {
        Poly acc;
        for (int i = 1; i <= k; ++i) acc += (*this)[i] * r[k - i];
        r[k] = -(acc * inv0);
    }
    return r;
}

}  // namespace permcf
