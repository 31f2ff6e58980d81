#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "permcf/cfrac.hpp"
#include "permcf/perm.hpp"
#include "permcf/poly.hpp"

namespace permcf {

enum class TheoremId {
    PermMaster, PermPQ, PermSZ,
    DpermMaster, DpermPQ, DpermDS,
    DpermMasterPrime, DpermPQPrime, DpermPrime,
    DCycle, Minval, MinvalPrime, RZ,
};

std::string_view to_string(TheoremId id);
TheoremId theorem_from_string(std::string_view s);
const std::vector<TheoremId>& all_theorems();

enum class Domain { Permutations, DPermutations, DOSemiderangements, DCycles };

// One registry record: where to sum, what each permutation contributes, which
// substitutions the statement forces, and the continued fraction it claims.
struct Theorem {
    TheoremId id;
    Domain domain;
    // Coefficient n of the fraction corresponds to size n + size_offset.
    int size_offset = 0;
    std::function<Poly(const Permutation&)> weight;
    std::map<Var, Poly> forced;
    std::function<CFSpec(int depth)> fraction;
    Poly prefactor = Poly(1L);
};

const Theorem& theorem(TheoremId id);

// Members of the domain for coefficient n.
void for_each_in_domain(Domain d, int n, const std::function<void(const Permutation&)>& fn);

// Sum of the weights over the domain, with the forced substitution applied.
Poly brute_sum(TheoremId id, int n);
// The same sum before the forced substitution.
Poly brute_sum_raw(TheoremId id, int n);
// prefactor * expansion of the fraction at depth n_max + 2.
Series fraction_series(TheoremId id, int n_max);

// Monomial weights, usable directly.
Poly weight_perm_master(const Permutation& s);
Poly weight_dperm_master(const Permutation& s);
Poly weight_dperm_master_prime(const Permutation& s);
Poly weight_perm_named(const Permutation& s, bool pq);
Poly weight_dperm_named(const Permutation& s, bool pq, bool prime);
Poly weight_minval(const Permutation& s, bool prime);
Poly weight_dcycle(const Permutation& s);
Poly weight_rz_g(const Permutation& s);
// R_n weight from the raw record/minimum definitions.
Poly weight_rz_r(const Permutation& s);

// Fractions.
CFSpec cf_perm_master(int depth);
CFSpec cf_perm_pq(int depth);
CFSpec cf_perm_sz(int depth);
CFSpec cf_dperm_master(int depth);
CFSpec cf_dperm_pq(int depth);
CFSpec cf_dperm_ds(int depth);
CFSpec cf_minval(int depth);
CFSpec cf_dcycle(int depth);
CFSpec cf_rz(int depth);

// Substitution taking the master polynomial to a named flavour. Valid targets:
// PermPQ, PermSZ (from PermMaster) and DpermPQ, DpermDS (from DpermMaster).
std::map<Var, Poly> specialise_master_to(TheoremId target, int max_index);
// Applies the substitution lazily, for any index.
Poly apply_master_specialisation(const Poly& master, TheoremId target);

struct VerifyReport {
    TheoremId theorem;
    int n_checked = 0;
    bool pass = true;
    struct Discrepancy {
        int n;
        Poly lhs, rhs;
    };
    std::optional<Discrepancy> first_discrepancy;
    nlohmann::ordered_json to_json() const;
};

VerifyReport verify(TheoremId id, int n_max);

}  // namespace permcf
