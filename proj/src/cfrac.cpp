#include "permcf/cfrac.hpp"

#include <stdexcept>

namespace permcf {

std::string_view to_string(CFKind k) {
    switch (k) {
        case CFKind::S: return "S";
        case CFKind::J: return "J";
        case CFKind::T: return "T";
    }
    return "?";
}

CFKind cf_kind_from_string(std::string_view s) {
    if (s == "S") return CFKind::S;
    if (s == "J") return CFKind::J;
    if (s == "T") return CFKind::T;
    throw std::invalid_argument("unknown continued-fraction kind '" + std::string(s) + "'");
}

CFSpec::CFSpec(CFKind k, int d)
    : kind(k),
      depth(d),
      alpha(static_cast<std::size_t>(d) + 1),
      beta(static_cast<std::size_t>(d) + 1),
      gamma(static_cast<std::size_t>(d) + 1),
      delta(static_cast<std::size_t>(d) + 1) {
    if (d < 0) throw std::invalid_argument("negative depth");
}

namespace {

Poly at(const std::vector<Poly>& v, int k, int lo, int depth) {
    if (k < lo || k > depth || k >= static_cast<int>(v.size())) return Poly();
    return v[static_cast<std::size_t>(k)];
}

}  // namespace

Poly CFSpec::a(int k) const { return at(alpha, k, 1, depth); }
Poly CFSpec::b(int k) const { return at(beta, k, 1, depth); }
Poly CFSpec::g(int k) const { return at(gamma, k, 0, depth); }
Poly CFSpec::dl(int k) const { return at(delta, k, 1, depth); }

Series expand(const CFSpec& cf, int N) {
    if (N < 0) throw std::invalid_argument("negative order");
    Series out(N);
    // Units: steps for J, half-steps for S and T (a long level takes two).
    const int units = cf.kind == CFKind::J ? N : 2 * N;
    const int hmax = std::min(cf.depth, units);
    std::vector<std::vector<Poly>> dp(static_cast<std::size_t>(units) + 1,
                                      std::vector<Poly>(static_cast<std::size_t>(hmax) + 1));
    dp[0][0] = Poly(1L);
    for (int u = 0; u <= units; ++u) {
        for (int h = 0; h <= hmax; ++h) {
            const Poly& cur = dp[static_cast<std::size_t>(u)][static_cast<std::size_t>(h)];
            if (cur.is_zero()) continue;
            auto add = [&](int u2, int h2, const Poly& w) {
                if (u2 > units || h2 < 0 || h2 > hmax || h2 > units - u2) return;
                if (w.is_zero()) return;
                dp[static_cast<std::size_t>(u2)][static_cast<std::size_t>(h2)] += cur * w;
            };
            add(u + 1, h + 1, Poly(1L));
            switch (cf.kind) {
                case CFKind::S:
                    if (h >= 1) add(u + 1, h - 1, cf.a(h));
                    break;
                case CFKind::J:
                    if (h >= 1) add(u + 1, h - 1, cf.b(h));
                    add(u + 1, h, cf.g(h));
                    break;
                case CFKind::T:
                    if (h >= 1) add(u + 1, h - 1, cf.a(h));
                    add(u + 2, h, cf.dl(h + 1));
                    break;
            }
        }
    }
    for (int k = 0; k <= N; ++k) {
        int u = cf.kind == CFKind::J ? k : 2 * k;
        out[k] = dp[static_cast<std::size_t>(u)][0];
    }
    return out;
}

Series expand_recursive(const CFSpec& cf, int N) {
    if (N < 0) throw std::invalid_argument("negative order");
    const Poly one(1L);
    // f_k = 1 / (1 - ... f_{k+1}) only matters up to t^(N - step*k).
    const int step = cf.kind == CFKind::J ? 2 : 1;
    auto order_at = [&](int k) { return N - step * k; };
    auto unit = [&](int order) {
        Series u(order);
        u[0] = one;
        return u;
    };
    auto t_times = [&](int order, const Poly& p) {
        Series s(order);
        if (order >= 1) s[1] = p;
        return s;
    };
    auto resized = [](const Series& a, int order) {
        Series r(order);
        for (int i = 0; i <= std::min(order, a.order()); ++i) r[i] = a[i];
        return r;
    };
    int k = std::min(cf.depth, N / step + 1);
    Series f = unit(std::max(order_at(k), 0));
    if (cf.kind == CFKind::J && k == cf.depth) f = (unit(f.order()) - t_times(f.order(), cf.g(k))).inverse();
    for (--k; k >= 0; --k) {
        const int ord = order_at(k);
        Series next = resized(f, ord);
        Series denom = unit(ord);
        switch (cf.kind) {
            case CFKind::S: denom -= next.shifted(1).scaled(cf.a(k + 1)); break;
            case CFKind::J: denom -= t_times(ord, cf.g(k)) + next.shifted(2).scaled(cf.b(k + 1)); break;
            case CFKind::T: denom -= t_times(ord, cf.dl(k + 1)) + next.shifted(1).scaled(cf.a(k + 1)); break;
        }
        f = denom.inverse();
    }
    return resized(f, N);
}

PathKind path_kind_for(CFKind k) {
    switch (k) {
        case CFKind::S: return PathKind::Dyck;
        case CFKind::J: return PathKind::Motzkin;
        case CFKind::T: return PathKind::Schroder;
    }
    return PathKind::Dyck;
}

WeightScheme to_weight_scheme(const CFSpec& cf) {
    WeightScheme w;
    w.rise = [](int) { return Poly(1L); };
    w.level = [](int) { return Poly(); };
    w.long_level = [](int) { return Poly(); };
    switch (cf.kind) {
        case CFKind::S:
            w.fall = [cf](int h) { return cf.a(h); };
            break;
        case CFKind::J:
            w.fall = [cf](int h) { return cf.b(h); };
            w.level = [cf](int h) { return cf.g(h); };
            break;
        case CFKind::T:
            w.fall = [cf](int h) { return cf.a(h); };
            w.long_level = [cf](int h) { return cf.dl(h + 1); };
            break;
    }
    return w;
}

namespace {

int path_length_for(PathKind kind, int k) {
    return kind == PathKind::Motzkin || kind == PathKind::ColouredMotzkin ? k : 2 * k;
}

Poly step_weight(const WeightScheme& w, Step s, int h) {
    switch (s) {
        case Step::Rise: return w.rise(h);
        case Step::Fall: return w.fall(h);
        case Step::LongLevel: return w.long_level(h);
        default: return w.level(h);
    }
}

}  // namespace

Series path_sum(PathKind kind, const WeightScheme& w, int N) {
    Series out(N);
    for (int k = 0; k <= N; ++k) {
        enumerate_paths(kind, path_length_for(kind, k), [&](const StepSeq& p) {
            auto h = heights(p);
            Poly prod(1L);
            for (std::size_t i = 0; i < p.steps.size() && !prod.is_zero(); ++i)
                prod *= step_weight(w, p.steps[i], h[i]);
            out[k] += prod;
        });
    }
    return out;
}

Series path_sum_labelled(PathKind kind, const LabelledWeightScheme& w, int N) {
    Series out(N);
    for (int k = 0; k <= N; ++k) {
        enumerate_paths(kind, path_length_for(kind, k), [&](const StepSeq& p) {
            auto h = heights(p);
            const std::size_t m = p.steps.size();
            std::vector<int> count(m), label(m, 0);
            for (std::size_t i = 0; i < m; ++i) {
                count[i] = w.label_count(p.steps[i], h[i]);
                if (count[i] <= 0) return;
            }
            while (true) {
                Poly prod(1L);
                for (std::size_t i = 0; i < m; ++i) prod *= w.weight(p.steps[i], h[i], label[i]);
                out[k] += prod;
                std::size_t i = 0;
                while (i < m && label[i] == count[i] - 1) label[i++] = 0;
                if (i == m) return;
                ++label[i];
            }
        });
    }
    return out;
}

LabelledWeightScheme split_by_terms(const WeightScheme& w) {
    LabelledWeightScheme lw;
    lw.label_count = [w](Step s, int h) { return static_cast<int>(step_weight(w, s, h).size()); };
    lw.weight = [w](Step s, int h, int xi) {
        Poly full = step_weight(w, s, h);
        auto it = full.terms().begin();
        std::advance(it, xi);
        Poly term;
        term.add_term(it->first, it->second);
        return term;
    };
    return lw;
}

std::vector<mpz_class> series_integers(const Series& s) {
    std::vector<mpz_class> out;
    for (const auto& p : s.coeffs()) {
        if (!p.is_constant()) throw std::invalid_argument("series has non-constant coefficients");
        out.push_back(p.constant_term());
    }
    return out;
}

CFSpec factorial_cf(int depth) {
    CFSpec cf(CFKind::S, depth);
    for (int m = 1; m <= depth; ++m) cf.alpha[static_cast<std::size_t>(m)] = Poly(static_cast<long>((m + 1) / 2));
    return cf;
}

CFSpec genocchi_cf(int depth) {
    CFSpec cf(CFKind::S, depth);
    for (int m = 1; m <= depth; ++m) {
        long k = (m + 1) / 2;
        cf.alpha[static_cast<std::size_t>(m)] = Poly(m % 2 == 1 ? k * k : k * (k + 1));
    }
    return cf;
}

CFSpec median_genocchi_cf(int depth) {
    CFSpec cf(CFKind::S, depth);
    for (int m = 1; m <= depth; ++m) {
        long k = (m + 1) / 2;
        cf.alpha[static_cast<std::size_t>(m)] = Poly(k * k);
    }
    return cf;
}

std::vector<mpz_class> factorials(int N) { return series_integers(expand(factorial_cf(2 * N + 2), N)); }
std::vector<mpz_class> genocchi(int N) { return series_integers(expand(genocchi_cf(2 * N + 2), N)); }
std::vector<mpz_class> median_genocchi(int N) { return series_integers(expand(median_genocchi_cf(2 * N + 2), N)); }

std::vector<mpz_class> median_from_genocchi(int N) {
    auto g = genocchi(N);
    std::vector<mpz_class> h{1};
    for (int n = 1; n <= N; ++n) {
        mpz_class sum = 0;
        for (int i = 0; 2 * i + 1 <= n; ++i) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(2 * i + 1));
            mpz_class term = binom * g[static_cast<std::size_t>(n - 1 - i)];
            sum += i % 2 == 0 ? term : mpz_class(-term);
        }
        h.push_back(sum);
    }
    h.resize(static_cast<std::size_t>(N) + 1);
    return h;
}

}  // namespace permcf
