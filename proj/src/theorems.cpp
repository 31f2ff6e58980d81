#include "permcf/theorems.hpp"

#include <stdexcept>

#include "permcf/stats.hpp"

namespace permcf {

namespace {

using F = Family;
using Powers = std::vector<std::pair<Var, unsigned>>;

Var V(F f) { return Var(f); }
Poly P(F f) { return Poly::var(f); }
unsigned u(int x) { return static_cast<unsigned>(x); }

}  // namespace

std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::PermMaster: return "PermMaster";
        case TheoremId::PermPQ: return "PermPQ";
        case TheoremId::PermSZ: return "PermSZ";
        case TheoremId::DpermMaster: return "DpermMaster";
        case TheoremId::DpermPQ: return "DpermPQ";
        case TheoremId::DpermDS: return "DpermDS";
        case TheoremId::DpermMasterPrime: return "DpermMasterPrime";
        case TheoremId::DpermPQPrime: return "DpermPQPrime";
        case TheoremId::DpermPrime: return "DpermPrime";
        case TheoremId::DCycle: return "DCycle";
        case TheoremId::Minval: return "Minval";
        case TheoremId::MinvalPrime: return "MinvalPrime";
        case TheoremId::RZ: return "RZ";
    }
    return "?";
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids{
        TheoremId::PermMaster,       TheoremId::PermPQ,       TheoremId::PermSZ,     TheoremId::DpermMaster,
        TheoremId::DpermPQ,          TheoremId::DpermDS,      TheoremId::DpermMasterPrime,
        TheoremId::DpermPQPrime,     TheoremId::DpermPrime,   TheoremId::DCycle,     TheoremId::Minval,
        TheoremId::MinvalPrime,      TheoremId::RZ,
    };
    return ids;
}

TheoremId theorem_from_string(std::string_view s) {
    for (auto id : all_theorems())
        if (to_string(id) == s) return id;
    throw std::invalid_argument("unknown theorem '" + std::string(s) + "'");
}

Poly weight_perm_master(const Permutation& s) {
    Powers pw{{V(F::lambda), u(cyc(s))}};
    for (int i = 1; i <= s.size(); ++i) {
        switch (cycle_class(s, i)) {
            case CycleClass::Cval: pw.push_back({Var(F::a, u(ucross(s, i) + unest(s, i))), 1}); break;
            case CycleClass::Cpeak: pw.push_back({Var(F::b, u(lcross(s, i)), u(lnest(s, i))), 1}); break;
            case CycleClass::Cdfall: pw.push_back({Var(F::c, u(lcross(s, i)), u(lnest(s, i))), 1}); break;
            case CycleClass::Cdrise: pw.push_back({Var(F::d, u(ucross(s, i)), u(unest(s, i))), 1}); break;
            case CycleClass::Fix: pw.push_back({Var(F::e, u(psnest(s, i))), 1}); break;
        }
    }
    return Poly::from_powers(pw);
}

Poly weight_dperm_master(const Permutation& s) {
    Powers pw{{V(F::lambda), u(cyc(s))}};
    for (int i = 1; i <= s.size(); ++i) {
        switch (cycle_class(s, i)) {
            case CycleClass::Cval: pw.push_back({Var(F::a, u(ucross(s, i) + unest(s, i))), 1}); break;
            case CycleClass::Cpeak: pw.push_back({Var(F::b, u(lcross(s, i)), u(lnest(s, i))), 1}); break;
            case CycleClass::Cdfall: pw.push_back({Var(F::c, u(lcross(s, i)), u(lnest(s, i))), 1}); break;
            case CycleClass::Cdrise: pw.push_back({Var(F::d, u(ucross(s, i)), u(unest(s, i))), 1}); break;
            case CycleClass::Fix: pw.push_back({Var(i % 2 == 0 ? F::e : F::f, u(psnest(s, i))), 1}); break;
        }
    }
    return Poly::from_powers(pw);
}

Poly weight_dperm_master_prime(const Permutation& s) {
    Powers pw{{V(F::lambda), u(cyc(s))}};
    for (int i = 1; i <= s.size(); ++i) {
        switch (cycle_class(s, i)) {
            case CycleClass::Cval: pw.push_back({Var(F::a, u(lcross_p(s, i) + lnest_p(s, i))), 1}); break;
            case CycleClass::Cpeak: pw.push_back({Var(F::b, u(ucross_p(s, i)), u(unest_p(s, i))), 1}); break;
            case CycleClass::Cdfall: pw.push_back({Var(F::c, u(lcross_p(s, i)), u(lnest_p(s, i))), 1}); break;
            case CycleClass::Cdrise: pw.push_back({Var(F::d, u(ucross_p(s, i)), u(unest_p(s, i))), 1}); break;
            case CycleClass::Fix: pw.push_back({Var(i % 2 == 0 ? F::e : F::f, u(psnest(s, i))), 1}); break;
        }
    }
    return Poly::from_powers(pw);
}

namespace {

void add_record_cycle(Powers& pw, const StatVector& sv, bool prime) {
    if (!prime) {
        pw.insert(pw.end(), {{V(F::x1), u(sv.get("eareccpeak"))},
                             {V(F::x2), u(sv.get("eareccdfall"))},
                             {V(F::y1), u(sv.get("ereccval"))},
                             {V(F::y2), u(sv.get("ereccdrise"))},
                             {V(F::u1), u(sv.get("nrcpeak"))},
                             {V(F::u2), u(sv.get("nrcdfall"))},
                             {V(F::v1), u(sv.get("nrcval"))},
                             {V(F::v2), u(sv.get("nrcdrise"))}});
    } else {
        pw.insert(pw.end(), {{V(F::x1), u(sv.get("ereccpeak'"))},
                             {V(F::x2), u(sv.get("eareccdfall'"))},
                             {V(F::y1), u(sv.get("eareccval'"))},
                             {V(F::y2), u(sv.get("ereccdrise'"))},
                             {V(F::u1), u(sv.get("nrcpeak'"))},
                             {V(F::u2), u(sv.get("nrcdfall'"))},
                             {V(F::v1), u(sv.get("nrcval'"))},
                             {V(F::v2), u(sv.get("nrcdrise'"))}});
    }
}

void add_parity_fix(Powers& pw, const StatVector& sv) {
    pw.insert(pw.end(), {{V(F::w_e), u(sv.get("evennrfix"))},
                         {V(F::w_o), u(sv.get("oddnrfix"))},
                         {V(F::z_e), u(sv.get("evenrar"))},
                         {V(F::z_o), u(sv.get("oddrar"))}});
}

void add_crossings(Powers& pw, const StatVector& sv, bool prime) {
    if (!prime) {
        pw.insert(pw.end(), {{V(F::pp1), u(sv.get("ucrosscval"))},
                             {V(F::pp2), u(sv.get("ucrosscdrise"))},
                             {V(F::pm1), u(sv.get("lcrosscpeak"))},
                             {V(F::pm2), u(sv.get("lcrosscdfall"))},
                             {V(F::qp1), u(sv.get("unestcval"))},
                             {V(F::qp2), u(sv.get("unestcdrise"))},
                             {V(F::qm1), u(sv.get("lnestcpeak"))},
                             {V(F::qm2), u(sv.get("lnestcdfall"))}});
    } else {
        pw.insert(pw.end(), {{V(F::pp1), u(sv.get("lcrosscval'"))},
                             {V(F::pp2), u(sv.get("ucrosscdrise'"))},
                             {V(F::pm1), u(sv.get("ucrosscpeak'"))},
                             {V(F::pm2), u(sv.get("lcrosscdfall'"))},
                             {V(F::qp1), u(sv.get("lnestcval'"))},
                             {V(F::qp2), u(sv.get("unestcdrise'"))},
                             {V(F::qm1), u(sv.get("unestcpeak'"))},
                             {V(F::qm2), u(sv.get("lnestcdfall'"))}});
    }
}

}  // namespace

Poly weight_perm_named(const Permutation& s, bool pq) {
    StatVector sv = stat_vector(s);
    Powers pw{{V(F::lambda), u(sv.get("cyc"))}};
    add_record_cycle(pw, sv, false);
    for (int i = 1; i <= s.size(); ++i)
        if (s(i) == i) pw.push_back({Var(F::w, u(psnest(s, i))), 1});
    if (pq) {
        add_crossings(pw, sv, false);
        pw.push_back({V(F::s), u(sv.get("psnest"))});
    }
    return Poly::from_powers(pw);
}

Poly weight_dperm_named(const Permutation& s, bool pq, bool prime) {
    StatVector sv = stat_vector(s);
    Powers pw{{V(F::lambda), u(sv.get("cyc"))}};
    add_record_cycle(pw, sv, prime);
    add_parity_fix(pw, sv);
    if (pq) {
        add_crossings(pw, sv, prime);
        pw.push_back({V(F::s_e), u(sv.get("epsnest"))});
        pw.push_back({V(F::s_o), u(sv.get("opsnest"))});
    }
    return Poly::from_powers(pw);
}

Poly weight_minval(const Permutation& s, bool prime) {
    StatVector sv = stat_vector(s);
    Powers pw;
    add_record_cycle(pw, sv, prime);
    // The valley variables are replaced by the cycle-valley-minimum split.
    std::erase_if(pw, [](const auto& p) { return p.first == V(F::y1) || p.first == V(F::v1); });
    pw.push_back({V(F::yt1), u(sv.get("minval"))});
    pw.push_back({V(F::vt1), u(sv.get("nminval"))});
    add_parity_fix(pw, sv);
    return Poly::from_powers(pw);
}

Poly weight_dcycle(const Permutation& s) {
    StatVector sv = stat_vector(s);
    Powers pw;
    add_record_cycle(pw, sv, false);
    return Poly::from_powers(pw);
}

Poly weight_rz_g(const Permutation& s) {
    StatVector sv = stat_vector(s);
    return Poly::from_powers({{V(F::x), u(sv.get("minval"))},
                              {V(F::y), u(sv.get("ereccpeak'"))},
                              {V(F::xb), u(sv.get("evennrfix"))},
                              {V(F::yb), u(sv.get("eareccdfall'"))}});
}

Poly weight_rz_r(const Permutation& s) {
    unsigned lema = 0, romi = 0, remi = 0, fix = 0;
    for (int i = 1; i <= s.size(); ++i) {
        if (is_record(s, i) && s(i) % 2 == 0) ++lema;
        if (is_antirecord(s, i)) ++(s(i) % 2 == 1 ? romi : remi);
        if (s(i) == i) ++fix;
    }
    return Poly::from_powers({{V(F::x), lema}, {V(F::y), romi}, {V(F::xb), fix}, {V(F::yb), remi}});
}

namespace {

Poly lam() { return P(F::lambda); }

Poly anti_diagonal(F fam, int k) {
    Poly r;
    for (int xi = 0; xi <= k - 1; ++xi) r += Poly::var(fam, u(k - 1 - xi), u(xi));
    return r;
}

Poly lin(F base, long k, F step) { return P(base) + Poly(k) * P(step); }

}  // namespace

CFSpec cf_perm_master(int depth) {
    CFSpec cf(CFKind::J, depth);
    cf.gamma[0] = lam() * Poly::var(F::e, 0);
    for (int n = 1; n <= depth; ++n) {
        auto k = static_cast<std::size_t>(n);
        cf.gamma[k] = anti_diagonal(F::c, n) + anti_diagonal(F::d, n) + lam() * Poly::var(F::e, u(n));
        cf.beta[k] = (lam() + Poly(n - 1L)) * Poly::var(F::a, u(n - 1)) * anti_diagonal(F::b, n);
    }
    return cf;
}

CFSpec cf_perm_pq(int depth) {
    CFSpec cf(CFKind::J, depth);
    cf.gamma[0] = lam() * Poly::var(F::w, 0);
    for (int n = 1; n <= depth; ++n) {
        auto k = static_cast<std::size_t>(n);
        unsigned m = u(n - 1);
        cf.gamma[k] = P(F::pm2).pow(m) * P(F::x2) + P(F::qm2) * pq_bracket(m, P(F::pm2), P(F::qm2)) * P(F::u2) +
                      P(F::pp2).pow(m) * P(F::y2) + P(F::qp2) * pq_bracket(m, P(F::pp2), P(F::qp2)) * P(F::v2) +
                      lam() * P(F::s).pow(u(n)) * Poly::var(F::w, u(n));
        cf.beta[k] = (lam() + Poly(n - 1L)) *
                     (P(F::pm1).pow(m) * P(F::x1) + P(F::qm1) * pq_bracket(m, P(F::pm1), P(F::qm1)) * P(F::u1)) *
                     P(F::pp1).pow(m) * P(F::y1);
    }
    return cf;
}

CFSpec cf_perm_sz(int depth) {
    CFSpec cf(CFKind::J, depth);
    cf.gamma[0] = lam() * Poly::var(F::w, 0);
    for (int n = 1; n <= depth; ++n) {
        auto k = static_cast<std::size_t>(n);
        cf.gamma[k] = lin(F::x2, n - 1, F::u2) + lin(F::y2, n - 1, F::v2) + lam() * Poly::var(F::w, u(n));
        cf.beta[k] = (lam() + Poly(n - 1L)) * lin(F::x1, n - 1, F::u1) * P(F::y1);
    }
    return cf;
}

CFSpec cf_dperm_master(int depth) {
    CFSpec cf(CFKind::T, depth);
    if (depth >= 1) cf.delta[1] = lam().pow(2) * Poly::var(F::e, 0) * Poly::var(F::f, 0);
    for (int m = 1; m <= depth; ++m) {
        int k = (m + 1) / 2;
        auto idx = static_cast<std::size_t>(m);
        if (m % 2 == 1)
            cf.alpha[idx] = (lam() + Poly(k - 1L)) * Poly::var(F::a, u(k - 1)) * anti_diagonal(F::b, k);
        else
            cf.alpha[idx] = (lam() * Poly::var(F::e, u(k)) + anti_diagonal(F::c, k)) *
                            (lam() * Poly::var(F::f, u(k)) + anti_diagonal(F::d, k));
    }
    return cf;
}

CFSpec cf_dperm_pq(int depth) {
    CFSpec cf(CFKind::T, depth);
    if (depth >= 1) cf.delta[1] = lam().pow(2) * P(F::z_e) * P(F::z_o);
    for (int m = 1; m <= depth; ++m) {
        int k = (m + 1) / 2;
        unsigned j = u(k - 1);
        auto idx = static_cast<std::size_t>(m);
        if (m % 2 == 1) {
            cf.alpha[idx] = (lam() + Poly(k - 1L)) * P(F::pp1).pow(j) * P(F::y1) *
                            (P(F::pm1).pow(j) * P(F::x1) + P(F::qm1) * pq_bracket(j, P(F::pm1), P(F::qm1)) * P(F::u1));
        } else {
            cf.alpha[idx] = (P(F::pm2).pow(j) * P(F::x2) + P(F::qm2) * pq_bracket(j, P(F::pm2), P(F::qm2)) * P(F::u2) +
                             lam() * P(F::s_e).pow(u(k)) * P(F::w_e)) *
                            (P(F::pp2).pow(j) * P(F::y2) + P(F::qp2) * pq_bracket(j, P(F::pp2), P(F::qp2)) * P(F::v2) +
                             lam() * P(F::s_o).pow(u(k)) * P(F::w_o));
        }
    }
    return cf;
}

CFSpec cf_dperm_ds(int depth) {
    CFSpec cf(CFKind::T, depth);
    if (depth >= 1) cf.delta[1] = lam().pow(2) * P(F::z_e) * P(F::z_o);
    for (int m = 1; m <= depth; ++m) {
        int k = (m + 1) / 2;
        auto idx = static_cast<std::size_t>(m);
        if (m % 2 == 1)
            cf.alpha[idx] = (lam() + Poly(k - 1L)) * lin(F::x1, k - 1, F::u1) * P(F::y1);
        else
            cf.alpha[idx] = (lin(F::x2, k - 1, F::u2) + lam() * P(F::w_e)) * (lin(F::y2, k - 1, F::v2) + lam() * P(F::w_o));
    }
    return cf;
}

CFSpec cf_minval(int depth) {
    CFSpec cf(CFKind::T, depth);
    if (depth >= 1) cf.delta[1] = P(F::z_e) * P(F::z_o);
    for (int m = 1; m <= depth; ++m) {
        int k = (m + 1) / 2;
        auto idx = static_cast<std::size_t>(m);
        if (m % 2 == 1)
            cf.alpha[idx] = lin(F::x1, k - 1, F::u1) * lin(F::yt1, k - 1, F::vt1);
        else
            cf.alpha[idx] = (lin(F::x2, k - 1, F::u2) + P(F::w_e)) * (lin(F::y2, k - 1, F::v2) + P(F::w_o));
    }
    return cf;
}

CFSpec cf_dcycle(int depth) {
    CFSpec cf(CFKind::S, depth);
    for (int m = 1; m <= depth; ++m) {
        int k = (m + 1) / 2;
        auto idx = static_cast<std::size_t>(m);
        if (m % 2 == 1)
            cf.alpha[idx] = lin(F::x2, k - 1, F::u2) * lin(F::y2, k - 1, F::v2);
        else
            cf.alpha[idx] = lin(F::x1, k, F::u1) * Poly(static_cast<long>(k)) * P(F::y1);
    }
    return cf;
}

CFSpec cf_rz(int depth) {
    CFSpec cf(CFKind::S, depth);
    for (int m = 1; m <= depth; ++m) {
        int k = (m + 1) / 2;
        auto idx = static_cast<std::size_t>(m);
        if (m % 2 == 1)
            cf.alpha[idx] = (P(F::x) + Poly(k - 1L)) * (P(F::y) + Poly(k - 1L));
        else
            cf.alpha[idx] = Poly(static_cast<long>(k)) * (P(F::xb) + P(F::yb) + Poly(k - 1L));
    }
    return cf;
}

namespace {

std::map<Var, Poly> v1_is_y1() { return {{V(F::v1), P(F::y1)}}; }
std::map<Var, Poly> v1_is_y1_and_q_is_p() { return {{V(F::v1), P(F::y1)}, {V(F::qp1), P(F::pp1)}}; }

std::vector<Theorem> build_registry() {
    using T = TheoremId;
    std::vector<Theorem> r;
    auto add = [&](T id, Domain d, std::function<Poly(const Permutation&)> w, std::map<Var, Poly> forced,
                   std::function<CFSpec(int)> cf) {
        r.push_back(Theorem{id, d, 0, std::move(w), std::move(forced), std::move(cf), Poly(1L)});
    };
    add(T::PermMaster, Domain::Permutations, weight_perm_master, {}, cf_perm_master);
    add(T::PermPQ, Domain::Permutations, [](const Permutation& s) { return weight_perm_named(s, true); },
        v1_is_y1_and_q_is_p(), cf_perm_pq);
    add(T::PermSZ, Domain::Permutations, [](const Permutation& s) { return weight_perm_named(s, false); },
        v1_is_y1(), cf_perm_sz);
    add(T::DpermMaster, Domain::DPermutations, weight_dperm_master, {}, cf_dperm_master);
    add(T::DpermPQ, Domain::DPermutations, [](const Permutation& s) { return weight_dperm_named(s, true, false); },
        v1_is_y1_and_q_is_p(), cf_dperm_pq);
    add(T::DpermDS, Domain::DPermutations, [](const Permutation& s) { return weight_dperm_named(s, false, false); },
        v1_is_y1(), cf_dperm_ds);
    add(T::DpermMasterPrime, Domain::DPermutations, weight_dperm_master_prime, {}, cf_dperm_master);
    add(T::DpermPQPrime, Domain::DPermutations,
        [](const Permutation& s) { return weight_dperm_named(s, true, true); }, v1_is_y1_and_q_is_p(), cf_dperm_pq);
    add(T::DpermPrime, Domain::DPermutations, [](const Permutation& s) { return weight_dperm_named(s, false, true); },
        v1_is_y1(), cf_dperm_ds);
    add(T::DCycle, Domain::DCycles, weight_dcycle, v1_is_y1(), cf_dcycle);
    r.back().size_offset = 1;
    r.back().prefactor = P(F::x1) * P(F::y1);
    add(T::Minval, Domain::DPermutations, [](const Permutation& s) { return weight_minval(s, false); }, {}, cf_minval);
    add(T::MinvalPrime, Domain::DPermutations, [](const Permutation& s) { return weight_minval(s, true); }, {},
        cf_minval);
    add(T::RZ, Domain::DOSemiderangements, weight_rz_g, {}, cf_rz);
    return r;
}

}  // namespace

const Theorem& theorem(TheoremId id) {
    static const std::vector<Theorem> registry = build_registry();
    for (const auto& t : registry)
        if (t.id == id) return t;
    throw std::logic_error("theorem missing from registry");
}

void for_each_in_domain(Domain d, int n, const std::function<void(const Permutation&)>& fn) {
    switch (d) {
        case Domain::Permutations: for_each_permutation(n, fn); break;
        case Domain::DPermutations: for_each_dpermutation(2 * n, DPermClass::All, fn); break;
        case Domain::DOSemiderangements: for_each_dpermutation(2 * n, DPermClass::OSemiderangement, fn); break;
        case Domain::DCycles: for_each_dpermutation(2 * n, DPermClass::Cycle, fn); break;
    }
}

Poly brute_sum_raw(TheoremId id, int n) {
    const Theorem& t = theorem(id);
    Poly sum;
    for_each_in_domain(t.domain, n + t.size_offset, [&](const Permutation& s) { sum += t.weight(s); });
    return sum;
}

Poly brute_sum(TheoremId id, int n) {
    const Theorem& t = theorem(id);
    Poly raw = brute_sum_raw(id, n);
    return t.forced.empty() ? raw : raw.substitute(t.forced);
}

Series fraction_series(TheoremId id, int n_max) {
    const Theorem& t = theorem(id);
    return expand(t.fraction(n_max + 2), n_max).scaled(t.prefactor);
}

namespace {

Poly master_image(Var v, TheoremId target) {
    const bool pq = target == TheoremId::PermPQ || target == TheoremId::DpermPQ;
    const bool dperm = target == TheoremId::DpermPQ || target == TheoremId::DpermDS;
    auto pw = [&](F fam, std::uint32_t k) { return pq ? P(fam).pow(k) : Poly(1L); };
    const std::uint32_t i = v.i(), j = v.j();
    switch (v.family()) {
        case F::a: return pw(F::pp1, i) * P(F::y1);
        case F::b: return pw(F::pm1, i) * pw(F::qm1, j) * P(j == 0 ? F::x1 : F::u1);
        case F::c: return pw(F::pm2, i) * pw(F::qm2, j) * P(j == 0 ? F::x2 : F::u2);
        case F::d: return pw(F::pp2, i) * pw(F::qp2, j) * P(j == 0 ? F::y2 : F::v2);
        case F::e:
            if (!dperm) return pw(F::s, i) * Poly::var(F::w, i);
            return i == 0 ? P(F::z_e) : pw(F::s_e, i) * P(F::w_e);
        case F::f:
            if (!dperm) throw std::invalid_argument("f variables only occur for D-permutations");
            return i == 0 ? P(F::z_o) : pw(F::s_o, i) * P(F::w_o);
        default: return Poly(v);
    }
}

void check_specialisation_target(TheoremId target) {
    if (target != TheoremId::PermPQ && target != TheoremId::PermSZ && target != TheoremId::DpermPQ &&
        target != TheoremId::DpermDS)
        throw std::invalid_argument("no master specialisation for " + std::string(to_string(target)));
}

}  // namespace

std::map<Var, Poly> specialise_master_to(TheoremId target, int max_index) {
    check_specialisation_target(target);
    const bool dperm = target == TheoremId::DpermPQ || target == TheoremId::DpermDS;
    std::map<Var, Poly> m;
    for (std::uint32_t i = 0; i <= u(max_index); ++i) {
        m[Var(F::a, i)] = master_image(Var(F::a, i), target);
        m[Var(F::e, i)] = master_image(Var(F::e, i), target);
        if (dperm) m[Var(F::f, i)] = master_image(Var(F::f, i), target);
        for (std::uint32_t j = 0; i + j <= u(max_index); ++j)
            for (F fam : {F::b, F::c, F::d}) m[Var(fam, i, j)] = master_image(Var(fam, i, j), target);
    }
    return m;
}

Poly apply_master_specialisation(const Poly& master, TheoremId target) {
    check_specialisation_target(target);
    return master.substitute([target](Var v) { return master_image(v, target); });
}

nlohmann::ordered_json VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["theorem"] = std::string(to_string(theorem));
    j["n_checked"] = n_checked;
    j["status"] = pass ? "pass" : "fail";
    if (first_discrepancy) {
        j["first_discrepancy"] = {{"n", first_discrepancy->n},
                                  {"lhs", first_discrepancy->lhs.to_string()},
                                  {"rhs", first_discrepancy->rhs.to_string()}};
    } else {
        j["first_discrepancy"] = nullptr;
    }
    return j;
}

VerifyReport verify(TheoremId id, int n_max) {
    if (n_max < 0) throw std::invalid_argument("negative n_max");
    VerifyReport rep;
    rep.theorem = id;
    Series cf = fraction_series(id, n_max);
    for (int n = 0; n <= n_max; ++n) {
        Poly lhs = brute_sum(id, n);
        ++rep.n_checked;
        if (lhs != cf[n]) {
            rep.pass = false;
            rep.first_discrepancy = VerifyReport::Discrepancy{n, lhs, cf[n]};
            break;
        }
    }
    return rep;
}

}  // namespace permcf
