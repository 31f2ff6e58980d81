#include "permcf/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace permcf {

namespace {

void check_index(const Permutation& s, int i) {
    if (i < 1 || i > s.size()) throw std::out_of_range("index out of range");
}

}  // namespace

std::string_view to_string(CycleClass c) {
    switch (c) {
        case CycleClass::Cpeak: return "cpeak";
        case CycleClass::Cval: return "cval";
        case CycleClass::Cdrise: return "cdrise";
        case CycleClass::Cdfall: return "cdfall";
        case CycleClass::Fix: return "fix";
    }
    return "?";
}

std::string_view to_string(RecordClass c) {
    switch (c) {
        case RecordClass::Erec: return "erec";
        case RecordClass::Earec: return "earec";
        case RecordClass::Rar: return "rar";
        case RecordClass::Nrar: return "nrar";
    }
    return "?";
}

std::string_view to_string(RecordCycleClass c) {
    switch (c) {
        case RecordCycleClass::Ereccval: return "ereccval";
        case RecordCycleClass::Ereccdrise: return "ereccdrise";
        case RecordCycleClass::Eareccpeak: return "eareccpeak";
        case RecordCycleClass::Eareccdfall: return "eareccdfall";
        case RecordCycleClass::Rar: return "rar";
        case RecordCycleClass::Nrcpeak: return "nrcpeak";
        case RecordCycleClass::Nrcval: return "nrcval";
        case RecordCycleClass::Nrcdrise: return "nrcdrise";
        case RecordCycleClass::Nrcdfall: return "nrcdfall";
        case RecordCycleClass::Nrfix: return "nrfix";
    }
    return "?";
}

std::string_view to_string(VariantRecordCycleClass c) {
    switch (c) {
        case VariantRecordCycleClass::Ereccpeak: return "ereccpeak'";
        case VariantRecordCycleClass::Ereccdrise: return "ereccdrise'";
        case VariantRecordCycleClass::Eareccval: return "eareccval'";
        case VariantRecordCycleClass::Eareccdfall: return "eareccdfall'";
        case VariantRecordCycleClass::Rar: return "rar'";
        case VariantRecordCycleClass::Nrcpeak: return "nrcpeak'";
        case VariantRecordCycleClass::Nrcval: return "nrcval'";
        case VariantRecordCycleClass::Nrcdrise: return "nrcdrise'";
        case VariantRecordCycleClass::Nrcdfall: return "nrcdfall'";
        case VariantRecordCycleClass::Nrfix: return "nrfix'";
    }
    return "?";
}

CycleClass cycle_class(const Permutation& s, int i) {
    check_index(s, i);
    int before = s.inv(i), after = s(i);
    if (after == i) return CycleClass::Fix;
    if (before < i && after < i) return CycleClass::Cpeak;
    if (before > i && after > i) return CycleClass::Cval;
    if (before < i) return CycleClass::Cdrise;
    return CycleClass::Cdfall;
}

bool is_record(const Permutation& s, int i) {
    check_index(s, i);
    for (int j = 1; j < i; ++j)
        if (s(j) > s(i)) return false;
    return true;
}

bool is_antirecord(const Permutation& s, int i) {
    check_index(s, i);
    for (int j = i + 1; j <= s.size(); ++j)
        if (s(j) < s(i)) return false;
    return true;
}

RecordClass record_class(const Permutation& s, int i) {
    bool r = is_record(s, i), a = is_antirecord(s, i);
    if (r && a) return RecordClass::Rar;
    if (r) return RecordClass::Erec;
    if (a) return RecordClass::Earec;
    return RecordClass::Nrar;
}

RecordClass variant_record_class(const Permutation& s, int i) {
    check_index(s, i);
    return record_class(s, s.inv(i));
}

namespace {

[[noreturn]] void impossible_combination(int i) {
    throw std::logic_error("impossible record/cycle combination at index " + std::to_string(i));
}

}  // namespace

RecordCycleClass record_cycle_class(const Permutation& s, int i) {
    CycleClass c = cycle_class(s, i);
    switch (record_class(s, i)) {
        case RecordClass::Erec:
            if (c == CycleClass::Cval) return RecordCycleClass::Ereccval;
            if (c == CycleClass::Cdrise) return RecordCycleClass::Ereccdrise;
            break;
        case RecordClass::Earec:
            if (c == CycleClass::Cpeak) return RecordCycleClass::Eareccpeak;
            if (c == CycleClass::Cdfall) return RecordCycleClass::Eareccdfall;
            break;
        case RecordClass::Rar:
            if (c == CycleClass::Fix) return RecordCycleClass::Rar;
            break;
        case RecordClass::Nrar:
            switch (c) {
                case CycleClass::Cpeak: return RecordCycleClass::Nrcpeak;
                case CycleClass::Cval: return RecordCycleClass::Nrcval;
                case CycleClass::Cdrise: return RecordCycleClass::Nrcdrise;
                case CycleClass::Cdfall: return RecordCycleClass::Nrcdfall;
                case CycleClass::Fix: return RecordCycleClass::Nrfix;
            }
            break;
    }
    impossible_combination(i);
}

VariantRecordCycleClass variant_record_cycle_class(const Permutation& s, int i) {
    CycleClass c = cycle_class(s, i);
    switch (variant_record_class(s, i)) {
        case RecordClass::Erec:
            if (c == CycleClass::Cpeak) return VariantRecordCycleClass::Ereccpeak;
            if (c == CycleClass::Cdrise) return VariantRecordCycleClass::Ereccdrise;
            break;
        case RecordClass::Earec:
            if (c == CycleClass::Cval) return VariantRecordCycleClass::Eareccval;
            if (c == CycleClass::Cdfall) return VariantRecordCycleClass::Eareccdfall;
            break;
        case RecordClass::Rar:
            if (c == CycleClass::Fix) return VariantRecordCycleClass::Rar;
            break;
        case RecordClass::Nrar:
            switch (c) {
                case CycleClass::Cpeak: return VariantRecordCycleClass::Nrcpeak;
                case CycleClass::Cval: return VariantRecordCycleClass::Nrcval;
                case CycleClass::Cdrise: return VariantRecordCycleClass::Nrcdrise;
                case CycleClass::Cdfall: return VariantRecordCycleClass::Nrcdfall;
                case CycleClass::Fix: return VariantRecordCycleClass::Nrfix;
            }
            break;
    }
    impossible_combination(i);
}

int ucross(const Permutation& s, int j) {
    check_index(s, j);
    int l = s(j), count = 0;
    for (int i = 1; i < j; ++i)
        if (s(i) > j && s(i) < l) ++count;
    return count;
}

int unest(const Permutation& s, int j) {
    check_index(s, j);
    int k = s(j), count = 0;
    if (k <= j) return 0;
    for (int i = 1; i < j; ++i)
        if (s(i) > k) ++count;
    return count;
}

int lcross(const Permutation& s, int k) {
    check_index(s, k);
    int i = s(k), count = 0;
    for (int l = k + 1; l <= s.size(); ++l)
        if (s(l) > i && s(l) < k) ++count;
    return count;
}

int lnest(const Permutation& s, int k) {
    check_index(s, k);
    int j = s(k), count = 0;
    if (j >= k) return 0;
    for (int l = k + 1; l <= s.size(); ++l)
        if (s(l) < j) ++count;
    return count;
}

int ucross_p(const Permutation& s, int k) {
    check_index(s, k);
    int i = s.inv(k), count = 0;
    for (int j = i + 1; j < k; ++j)
        if (s(j) > k) ++count;
    return count;
}

int unest_p(const Permutation& s, int k) {
    check_index(s, k);
    int j = s.inv(k), count = 0;
    if (j >= k) return 0;
    for (int i = 1; i < j; ++i)
        if (s(i) > k) ++count;
    return count;
}

int lcross_p(const Permutation& s, int j) {
    check_index(s, j);
    int l = s.inv(j), count = 0;
    for (int k = j + 1; k < l; ++k)
        if (s(k) < j) ++count;
    return count;
}

int lnest_p(const Permutation& s, int j) {
    check_index(s, j);
    int k = s.inv(j), count = 0;
    if (k <= j) return 0;
    for (int l = k + 1; l <= s.size(); ++l)
        if (s(l) < j) ++count;
    return count;
}

int psnest(const Permutation& s, int i) {
    check_index(s, i);
    if (s(i) != i) throw std::domain_error("psnest needs a fixed point");
    int count = 0;
    for (int j = 1; j < i; ++j)
        if (s(j) > i) ++count;
    return count;
}

int upsnest(const Permutation& s) {
    int count = 0;
    for (int i = 1; i <= s.size(); ++i)
        for (int j = i + 1; j < s(i); ++j)
            if (s(j) == j) ++count;
    return count;
}

int lpsnest(const Permutation& s) {
    int count = 0;
    for (int l = 1; l <= s.size(); ++l)
        for (int j = s(l) + 1; j < l; ++j)
            if (s(j) == j) ++count;
    return count;
}

bool is_minval(const Permutation& s, int i) {
    if (cycle_class(s, i) != CycleClass::Cval) return false;
    for (int u = s(i); u != i; u = s(u))
        if (u < i) return false;
    return true;
}

bool is_maxpeak(const Permutation& s, int i) {
    if (cycle_class(s, i) != CycleClass::Cpeak) return false;
    for (int u = s(i); u != i; u = s(u))
        if (u > i) return false;
    return true;
}

void StatVector::set(std::string name, int value) {
    for (auto& [k, v] : entries_) {
        if (k == name) {
            v = value;
            return;
        }
    }
    entries_.emplace_back(std::move(name), value);
}

int StatVector::get(std::string_view name) const {
    for (const auto& [k, v] : entries_)
        if (k == name) return v;
    throw std::out_of_range("unknown statistic '" + std::string(name) + "'");
}

bool StatVector::has(std::string_view name) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == name; });
}

nlohmann::ordered_json StatVector::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : entries_) j[k] = v;
    return j;
}

StatVector stat_vector(const Permutation& s) {
    const int n = s.size();
    int cls[5] = {}, rcls[4] = {}, rc[10] = {}, vrc[10] = {};
    int evenrar = 0, oddrar = 0, evennrfix = 0, oddnrfix = 0;
    int evenrar_p = 0, oddrar_p = 0, evennrfix_p = 0, oddnrfix_p = 0;
    int minval = 0, maxpeak = 0, ps = 0, eps = 0, ops = 0;
    int ucrosscval = 0, ucrosscdrise = 0, unestcval = 0, unestcdrise = 0;
    int lcrosscpeak = 0, lcrosscdfall = 0, lnestcpeak = 0, lnestcdfall = 0;
    int ucrosscpeak_p = 0, ucrosscdrise_p = 0, unestcpeak_p = 0, unestcdrise_p = 0;
    int lcrosscval_p = 0, lcrosscdfall_p = 0, lnestcval_p = 0, lnestcdfall_p = 0;

    for (int i = 1; i <= n; ++i) {
        CycleClass c = cycle_class(s, i);
        ++cls[static_cast<int>(c)];
        ++rcls[static_cast<int>(record_class(s, i))];
        RecordCycleClass r = record_cycle_class(s, i);
        VariantRecordCycleClass v = variant_record_cycle_class(s, i);
        ++rc[static_cast<int>(r)];
        ++vrc[static_cast<int>(v)];
        bool even = i % 2 == 0;
        if (r == RecordCycleClass::Rar) ++(even ? evenrar : oddrar);
        if (r == RecordCycleClass::Nrfix) ++(even ? evennrfix : oddnrfix);
        if (v == VariantRecordCycleClass::Rar) ++(even ? evenrar_p : oddrar_p);
        if (v == VariantRecordCycleClass::Nrfix) ++(even ? evennrfix_p : oddnrfix_p);
        if (is_minval(s, i)) ++minval;
        if (is_maxpeak(s, i)) ++maxpeak;
        switch (c) {
            case CycleClass::Fix: {
                int p = psnest(s, i);
                ps += p;
                (even ? eps : ops) += p;
                break;
            }
            case CycleClass::Cval:
                ucrosscval += ucross(s, i);
                unestcval += unest(s, i);
                lcrosscval_p += lcross_p(s, i);
                lnestcval_p += lnest_p(s, i);
                break;
            case CycleClass::Cdrise:
                ucrosscdrise += ucross(s, i);
                unestcdrise += unest(s, i);
                ucrosscdrise_p += ucross_p(s, i);
                unestcdrise_p += unest_p(s, i);
                break;
            case CycleClass::Cpeak:
                lcrosscpeak += lcross(s, i);
                lnestcpeak += lnest(s, i);
                ucrosscpeak_p += ucross_p(s, i);
                unestcpeak_p += unest_p(s, i);
                break;
            case CycleClass::Cdfall:
                lcrosscdfall += lcross(s, i);
                lnestcdfall += lnest(s, i);
                lcrosscdfall_p += lcross_p(s, i);
                lnestcdfall_p += lnest_p(s, i);
                break;
        }
    }

    StatVector sv;
    sv.set("n", n);
    for (auto c : {CycleClass::Cpeak, CycleClass::Cval, CycleClass::Cdrise, CycleClass::Cdfall, CycleClass::Fix})
        sv.set(std::string(to_string(c)), cls[static_cast<int>(c)]);
    // rar is omitted here: rar positions are fixed points, so the count is the rar category below.
    for (auto c : {RecordClass::Erec, RecordClass::Earec, RecordClass::Nrar})
        sv.set(std::string(to_string(c)), rcls[static_cast<int>(c)]);
    for (int k = 0; k < 10; ++k) sv.set(std::string(to_string(static_cast<RecordCycleClass>(k))), rc[k]);
    for (int k = 0; k < 10; ++k)
        sv.set(std::string(to_string(static_cast<VariantRecordCycleClass>(k))), vrc[k]);
    sv.set("evenrar", evenrar);
    sv.set("oddrar", oddrar);
    sv.set("evennrfix", evennrfix);
    sv.set("oddnrfix", oddnrfix);
    sv.set("evenrar'", evenrar_p);
    sv.set("oddrar'", oddrar_p);
    sv.set("evennrfix'", evennrfix_p);
    sv.set("oddnrfix'", oddnrfix_p);
    sv.set("minval", minval);
    sv.set("nminval", cls[static_cast<int>(CycleClass::Cval)] - minval);
    sv.set("maxpeak", maxpeak);
    sv.set("nmaxpeak", cls[static_cast<int>(CycleClass::Cpeak)] - maxpeak);
    sv.set("cyc", cyc(s));
    sv.set("psnest", ps);
    sv.set("epsnest", eps);
    sv.set("opsnest", ops);
    sv.set("upsnest", upsnest(s));
    sv.set("lpsnest", lpsnest(s));
    sv.set("ucrosscval", ucrosscval);
    sv.set("ucrosscdrise", ucrosscdrise);
    sv.set("unestcval", unestcval);
    sv.set("unestcdrise", unestcdrise);
    sv.set("lcrosscpeak", lcrosscpeak);
    sv.set("lcrosscdfall", lcrosscdfall);
    sv.set("lnestcpeak", lnestcpeak);
    sv.set("lnestcdfall", lnestcdfall);
    sv.set("ucrosscpeak'", ucrosscpeak_p);
    sv.set("ucrosscdrise'", ucrosscdrise_p);
    sv.set("unestcpeak'", unestcpeak_p);
    sv.set("unestcdrise'", unestcdrise_p);
    sv.set("lcrosscval'", lcrosscval_p);
    sv.set("lcrosscdfall'", lcrosscdfall_p);
    sv.set("lnestcval'", lnestcval_p);
    sv.set("lnestcdfall'", lnestcdfall_p);
    return sv;
}

RZStats rz_stats(const Permutation& s) {
    if (s.size() % 2 != 0 || !in_dperm_class(s, DPermClass::OSemiderangement))
        throw std::domain_error("rz_stats needs a D-o-semiderangement");
    RZStats r;
    for (int i = 1; i <= s.size(); ++i) {
        switch (variant_record_cycle_class(s, i)) {
            case VariantRecordCycleClass::Ereccpeak: ++r.lema; break;
            case VariantRecordCycleClass::Eareccdfall: ++r.remi; break;
            case VariantRecordCycleClass::Eareccval: ++r.romi; break;
            default: break;
        }
        if (is_minval(s, i)) ++r.comi;
        if (record_cycle_class(s, i) == RecordCycleClass::Nrfix && i % 2 == 0) {
            ++r.fix;
            ++r.cemi;
        }
    }
    return r;
}

}  // namespace permcf
