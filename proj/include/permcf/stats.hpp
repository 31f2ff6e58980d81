#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "permcf/perm.hpp"

namespace permcf {

enum class CycleClass { Cpeak, Cval, Cdrise, Cdfall, Fix };
enum class RecordClass { Erec, Earec, Rar, Nrar };

// The ten record-and-cycle categories. Plain names classify index i by the
// record class of position i; the primed scheme classifies value i by the
// record class of position inv(i).
enum class RecordCycleClass {
    Ereccval, Ereccdrise, Eareccpeak, Eareccdfall, Rar,
    Nrcpeak, Nrcval, Nrcdrise, Nrcdfall, Nrfix,
};
enum class VariantRecordCycleClass {
    Ereccpeak, Ereccdrise, Eareccval, Eareccdfall, Rar,
    Nrcpeak, Nrcval, Nrcdrise, Nrcdfall, Nrfix,
};

std::string_view to_string(CycleClass c);
std::string_view to_string(RecordClass c);
std::string_view to_string(RecordCycleClass c);
// Includes the trailing prime, e.g. "ereccpeak'".
std::string_view to_string(VariantRecordCycleClass c);

CycleClass cycle_class(const Permutation& s, int i);
bool is_record(const Permutation& s, int i);
bool is_antirecord(const Permutation& s, int i);
RecordClass record_class(const Permutation& s, int i);
// Record class of value i, i.e. of position inv(i).
RecordClass variant_record_class(const Permutation& s, int i);
RecordCycleClass record_cycle_class(const Permutation& s, int i);
VariantRecordCycleClass variant_record_cycle_class(const Permutation& s, int i);

// Index-refined crossings and nestings over quadruplets i<j<k<l.
int ucross(const Permutation& s, int j);  // k = s(i), l = s(j)
int unest(const Permutation& s, int j);   // k = s(j), l = s(i)
int lcross(const Permutation& s, int k);  // i = s(k), j = s(l)
int lnest(const Permutation& s, int k);   // i = s(l), j = s(k)
// Same patterns with the other inner index distinguished.
int ucross_p(const Permutation& s, int k);
int unest_p(const Permutation& s, int k);
int lcross_p(const Permutation& s, int j);
int lnest_p(const Permutation& s, int j);

// Arcs passing over the fixed point i; throws std::domain_error otherwise.
int psnest(const Permutation& s, int i);
int upsnest(const Permutation& s);
int lpsnest(const Permutation& s);

bool is_minval(const Permutation& s, int i);
bool is_maxpeak(const Permutation& s, int i);

// Flat name -> count record, in a fixed order.
class StatVector {
public:
    void set(std::string name, int value);
    int get(std::string_view name) const;
    bool has(std::string_view name) const;
    const std::vector<std::pair<std::string, int>>& entries() const { return entries_; }
    nlohmann::ordered_json to_json() const;

private:
    std::vector<std::pair<std::string, int>> entries_;
};

StatVector stat_vector(const Permutation& s);

struct RZStats {
    int lema = 0, romi = 0, remi = 0, fix = 0, comi = 0, cemi = 0;
};
// Only for D-o-semiderangements; throws std::domain_error otherwise.
RZStats rz_stats(const Permutation& s);

}  // namespace permcf
