// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "checks.hpp"
#include "oracles.hpp"
#include "permcf/cfrac.hpp"
#include "permcf/cli.hpp"
#include "permcf/theorems.hpp"

using namespace permcf;
using T = TheoremId;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

bool equal_ints(const std::vector<mpz_class>& got, std::initializer_list<long> want) {
    if (got.size() != want.size()) return false;
    return std::equal(got.begin(), got.end(), want.begin(), [](const mpz_class& a, long b) { return a == b; });
}

// Criterion 1.
Outcome sequences() {
    Outcome o;
    if (!equal_ints(series_integers(expand(factorial_cf(9), 7)), {1, 1, 2, 6, 24, 120, 720, 5040}))
        o.fail("factorials");
    if (!equal_ints(series_integers(expand(genocchi_cf(8), 6)), {1, 1, 3, 17, 155, 2073, 38227})) o.fail("genocchi");
    if (!equal_ints(series_integers(expand(median_genocchi_cf(8), 6)), {1, 1, 2, 8, 56, 608, 9440}))
        o.fail("median genocchi");
    return o;
}

// Literal filter of S_{2n} for the D-permutation inequalities.
std::uint64_t filter_count(int two_n) {
    std::vector<int> w(static_cast<std::size_t>(two_n));
    std::iota(w.begin(), w.end(), 1);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int i = 1; i <= two_n && ok; ++i) {
            int v = w[static_cast<std::size_t>(i - 1)];
            ok = i % 2 == 1 ? v >= i : v <= i;
        }
        if (ok) ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    return count;
}

// Criterion 2.
Outcome cardinalities() {
    Outcome o;
    auto g = genocchi(6);
    auto h = median_genocchi(7);
    for (int n = 0; n <= 6; ++n) {
        std::uint64_t gen = 0;
        for_each_dpermutation(2 * n, DPermClass::All, [&](const Permutation&) { ++gen; });
        std::uint64_t lit = filter_count(2 * n);
        if (gen != lit) o.fail("generator and S_" + std::to_string(2 * n) + " filter disagree");
        if (mpz_class(static_cast<unsigned long>(lit)) != h[static_cast<std::size_t>(n + 1)])
            o.fail("|D_" + std::to_string(2 * n) + "| = " + std::to_string(lit));
    }
    for (int n = 1; n <= 5; ++n) {
        std::map<std::string, std::uint64_t> by_class;
        for (const auto& w : oracle::dperms_by_filter(2 * n, "all"))
            for (const char* c : {"e", "o", "eo", "cycle"})
                if (oracle::in_class(w, c)) ++by_class[c];
        auto expect = [&](const char* c, DPermClass cls, const mpz_class& want) {
            std::uint64_t gen = 0;
            for_each_dpermutation(2 * n, cls, [&](const Permutation&) { ++gen; });
            if (gen != by_class[c] || mpz_class(static_cast<unsigned long>(gen)) != want)
                o.fail(std::string("class ") + c + " at 2n=" + std::to_string(2 * n));
        };
        auto un = static_cast<std::size_t>(n);
        expect("e", DPermClass::ESemiderangement, g[un]);
        expect("o", DPermClass::OSemiderangement, g[un]);
        expect("eo", DPermClass::Derangement, h[un]);
        expect("cycle", DPermClass::Cycle, g[un - 1]);
    }
    return o;
}

void check_equal(Outcome& o, T id, int n_max) {
    VerifyReport r = verify(id, n_max);
    if (!r.pass) o.fail(std::string(to_string(id)) + " differs at n=" + std::to_string(r.first_discrepancy->n));
}

// Criteria 3 to 5.
Outcome perm_master() {
    Outcome o;
    check_equal(o, T::PermMaster, 6);
    return o;
}

Outcome perm_named() {
    Outcome o;
    check_equal(o, T::PermPQ, 6);
    check_equal(o, T::PermSZ, 6);
    for (int n = 0; n <= 5; ++n) {
        Poly m = brute_sum(T::PermMaster, n);
        for (T target : {T::PermPQ, T::PermSZ})
            if (m.substitute(specialise_master_to(target, n)) != brute_sum(target, n))
                o.fail("specialised master differs from " + std::string(to_string(target)) + " at n=" + std::to_string(n));
    }
    return o;
}

Outcome dperm() {
    Outcome o;
    for (T id : {T::DpermMaster, T::DpermPQ, T::DpermDS, T::Minval}) check_equal(o, id, 5);
    for (int n = 0; n <= 4; ++n) {
        Poly m = brute_sum(T::DpermMaster, n);
        for (T target : {T::DpermPQ, T::DpermDS})
            if (m.substitute(specialise_master_to(target, n)) != brute_sum(target, n))
                o.fail("specialised master differs from " + std::string(to_string(target)) + " at n=" + std::to_string(n));
    }
    return o;
}

// Criterion 6.
Outcome primed() {
    Outcome o;
    for (int n = 0; n <= 5; ++n) {
        if (brute_sum(T::DpermMasterPrime, n) != brute_sum(T::DpermMaster, n)) o.fail("primed master sum");
        if (brute_sum(T::DpermPQPrime, n) != brute_sum(T::DpermPQ, n)) o.fail("primed pq sum");
        if (brute_sum(T::DpermPrime, n) != brute_sum(T::DpermDS, n)) o.fail("primed named sum");
    }
    for (T id : {T::DpermMasterPrime, T::DpermPQPrime, T::DpermPrime, T::MinvalPrime}) check_equal(o, id, 5);
    return o;
}

// Criterion 7.
Outcome dcycle() {
    Outcome o;
    const Var lambda(Family::lambda);
    for (int n = 0; n <= 3; ++n) {
        Poly one_cycle = brute_sum(T::DpermDS, n + 1).coefficient_of(lambda, 1);
        if (one_cycle != brute_sum(T::DCycle, n)) o.fail("lambda-linear part at 2n=" + std::to_string(2 * n + 2));
    }
    check_equal(o, T::DCycle, 3);
    return o;
}

// Criterion 8.
Outcome rz() {
    Outcome o;
    for (int n = 0; n <= 4; ++n) {
        Poly r;
        for_each_in_domain(Domain::DOSemiderangements, n, [&](const Permutation& s) { r += weight_rz_r(s); });
        if (r != brute_sum(T::RZ, n)) o.fail("G and R differ at n=" + std::to_string(n));
    }
    check_equal(o, T::RZ, 4);
    return o;
}

void for_criterion_range(const std::function<void(Bijection, const Permutation&)>& fn) {
    for (int n = 0; n <= 6; ++n) for_each_permutation(n, [&](const Permutation& s) { fn(Bijection::FZ, s); });
    for (Bijection b : {Bijection::DS, Bijection::DSVariant})
        for (int two_n = 0; two_n <= 10; two_n += 2)
            for_each_dpermutation(two_n, DPermClass::All, [&](const Permutation& s) { fn(b, s); });
}

// Criterion 9.
Outcome round_trips() {
    Outcome o;
    std::uint64_t count = 0;
    for_criterion_range([&](Bijection b, const Permutation& s) {
        ++count;
        if (auto why = checks::roundtrip_from_perm(b, s); !why.empty()) o.fail(why);
    });
    for (int len = 0; len <= 6; ++len)
        enumerate_labelled(Ruleset::Permutation, len, [&](const LabelledPath& lp) {
            ++count;
            if (auto why = checks::roundtrip_from_path(Bijection::FZ, lp); !why.empty()) o.fail(why);
        });
    for (Bijection b : {Bijection::DS, Bijection::DSVariant})
        for (int len = 0; len <= 8; len += 2)
            enumerate_labelled(Ruleset::DPermutation, len, [&](const LabelledPath& lp) {
                ++count;
                if (auto why = checks::roundtrip_from_path(b, lp); !why.empty()) o.fail(why);
            });
    if (o.ok) o.detail = std::to_string(count) + " cases";
    return o;
}

// Criteria 10 and 11.
Outcome histories() {
    Outcome o;
    for_criterion_range([&](Bijection b, const Permutation& s) {
        if (s.size() == 0) return;
        if (auto why = checks::history_properties(b, s); !why.empty()) o.fail(why);
    });
    return o;
}

Outcome labels() {
    Outcome o;
    for_criterion_range([&](Bijection b, const Permutation& s) {
        if (auto why = checks::label_identities(b, s); !why.empty()) o.fail(why);
    });
    return o;
}

// Criterion 12.
Outcome cross_algorithms() {
    Outcome o;
    const int N = 6;
    std::vector<std::pair<std::string, CFSpec>> specs{
        {"factorial", factorial_cf(N + 2)}, {"genocchi", genocchi_cf(N + 2)}, {"median", median_genocchi_cf(N + 2)}};
    for (T id : all_theorems()) specs.emplace_back(std::string(to_string(id)), theorem(id).fraction(N + 2));
    for (const auto& [name, cf] : specs) {
        Series e = expand(cf, N);
        if (e != expand_recursive(cf, N)) o.fail(name + ": expand and recursion differ");
        if (e != path_sum(path_kind_for(cf.kind), to_weight_scheme(cf), N)) o.fail(name + ": expand and path sum differ");
    }
    return o;
}

// Criterion 13.
Outcome goldens() {
    Outcome o;
    std::ifstream cases(std::string(PERMCF_GOLDEN_DIR) + "/cases.txt");
    if (!cases) {
        o.fail("cannot read cases.txt");
        return o;
    }
    int checked = 0;
    for (std::string line; std::getline(cases, line);) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> parts;
        std::stringstream ss(line);
        for (std::string p; std::getline(ss, p, '|');) parts.push_back(p);
        std::string name = parts.front();
        std::vector<std::string> args(parts.begin() + 1, parts.end());
        std::ifstream f(std::string(PERMCF_GOLDEN_DIR) + "/" + name + ".json", std::ios::binary);
        std::stringstream want;
        want << f.rdbuf();
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        if (!f || code != 0 || out.str() != want.str()) o.fail(name + " differs from its golden");
        ++checked;
    }
    if (checked == 0) o.fail("no golden cases");
    if (o.ok) o.detail = std::to_string(checked) + " files";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"sequence reproduction", sequences},
        {"D-permutation cardinalities", cardinalities},
        {"permutation master fraction, n <= 6", perm_master},
        {"named permutation fractions and specialisation", perm_named},
        {"D-permutation fractions, 2n <= 10", dperm},
        {"primed statistics", primed},
        {"D-cycle fraction", dcycle},
        {"G_n = R_n and its S-fraction", rz},
        {"bijection round trips", round_trips},
        {"Laguerre history properties", histories},
        {"label and statistic identities", labels},
        {"expand, path sum and recursion agree", cross_algorithms},
        {"running-example goldens", goldens},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.ok) ++failed;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.ok ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first << " (" << secs << " s)";
        if (!o.detail.empty()) line << ": " << o.detail;
        std::cout << line.str() << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
