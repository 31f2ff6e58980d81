#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "permcf/stats.hpp"

using namespace permcf;

namespace {
const Permutation kEx1 = Permutation::parse("9 3 7 4 6 11 5 8 10 1 2");
const Permutation kEx2 = Permutation::parse("7 1 9 2 5 4 8 6 10 3 11 12 14 13");

std::map<std::string, int> as_map(const StatVector& sv) {
    std::map<std::string, int> m;
    for (const auto& [k, v] : sv.entries()) m[k] = v;
    return m;
}
}  // namespace

TEST_CASE("cycle and record classes on the running examples") {
    CHECK(cycle_class(kEx1, 7) == CycleClass::Cpeak);
    CHECK(cycle_class(kEx1, 4) == CycleClass::Fix);
    for (int i = 1; i <= 4; ++i) CHECK(cycle_class(Permutation::identity(4), i) == CycleClass::Fix);
    CHECK(record_class(kEx1, 1) == RecordClass::Erec);
    CHECK(record_class(kEx2, 11) == RecordClass::Rar);
    CHECK(record_class(Permutation::identity(1), 1) == RecordClass::Rar);
    Permutation dec = Permutation::parse("5 4 3 2 1");
    CHECK(record_class(dec, 1) == RecordClass::Erec);
    for (int i = 1; i <= 5; ++i) CHECK(record_class(dec, i) != RecordClass::Rar);
}

TEST_CASE("crossing and nesting values") {
    CHECK(unest(kEx1, 5) == 2);
    CHECK(ucross(kEx1, 5) == 0);
    for (int j : {4, 8}) {
        CHECK(ucross(kEx1, j) == 0);
        CHECK(unest(kEx1, j) == 0);
        CHECK(lcross(kEx1, j) == 0);
        CHECK(lnest(kEx1, j) == 0);
    }
    CHECK(lnest_p(kEx2, 1) == lnest(kEx2, 2));
    CHECK(psnest(kEx1, 4) == 2);
    CHECK(psnest(kEx2, 11) == 0);
    CHECK_THROWS_AS(psnest(kEx1, 1), std::domain_error);
    Permutation id = Permutation::identity(6);
    for (int i = 1; i <= 6; ++i) {
        CHECK(psnest(id, i) == 0);
        CHECK(ucross_p(id, i) + unest_p(id, i) + lcross_p(id, i) + lnest_p(id, i) == 0);
    }
}

TEST_CASE("index-refined statistics match the quadruplet scans") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& w : oracle::all_words(n)) {
            Permutation s(w);
            for (int i = 1; i <= n; ++i) {
                REQUIRE(ucross(s, i) == oracle::ucross(w, i));
                REQUIRE(unest(s, i) == oracle::unest(w, i));
                REQUIRE(lcross(s, i) == oracle::lcross(w, i));
                REQUIRE(lnest(s, i) == oracle::lnest(w, i));
                REQUIRE(ucross_p(s, i) == oracle::ucross_p(w, i));
                REQUIRE(unest_p(s, i) == oracle::unest_p(w, i));
                REQUIRE(lcross_p(s, i) == oracle::lcross_p(w, i));
                REQUIRE(lnest_p(s, i) == oracle::lnest_p(w, i));
                REQUIRE(unest_p(s, i) == unest(s, s.inv(i)));
                REQUIRE(lnest_p(s, i) == lnest(s, s.inv(i)));
            }
        }
    }
}

TEST_CASE("stat vector matches the definitions on all of S_n, n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& w : oracle::all_words(n)) {
            auto got = as_map(stat_vector(Permutation(w)));
            auto want = oracle::stat_map(w);
            REQUIRE(got == want);
        }
    }
}

TEST_CASE("stat vector matches the definitions on D-permutations of size 8 and 10") {
    for (int two_n : {8, 10}) {
        for_each_dpermutation(two_n, DPermClass::All, [](const Permutation& s) {
            REQUIRE(as_map(stat_vector(s)) == oracle::stat_map(s.word()));
        });
    }
}

TEST_CASE("stat vector on the running examples") {
    auto m1 = as_map(stat_vector(kEx1));
    CHECK(m1["eareccpeak"] == 2);
    CHECK(m1["nrcpeak"] == 1);
    CHECK(m1["ereccval"] == 1);
    CHECK(m1["nrcval"] == 2);
    CHECK(m1["ereccdrise"] == 1);
    CHECK(m1["nrcdrise"] == 2);
    CHECK(m1["eareccdfall"] == 0);
    CHECK(m1["nrcdfall"] == 0);
    CHECK(m1["rar"] == 0);
    CHECK(m1["nrfix"] == 2);
    auto m2 = as_map(stat_vector(kEx2));
    CHECK(m2["rar"] == 2);
    CHECK(m2["nrfix"] == 1);
    CHECK(m2["eareccdfall"] == 2);
    CHECK(m2["nrcdfall"] == 1);
    auto m3 = as_map(stat_vector(Permutation::identity(3)));
    CHECK(m3["rar"] == 3);
    CHECK(m3["fix"] == 3);
    CHECK(m3["cyc"] == 3);
    CHECK(m3["nrfix"] == 0);
    CHECK(m3["cpeak"] + m3["cval"] + m3["cdrise"] + m3["cdfall"] == 0);
}

TEST_CASE("statistic invariants") {
    for (int n = 1; n <= 7; ++n) {
        for_each_permutation(n, [&](const Permutation& s) {
            StatVector sv = stat_vector(s);
            CHECK(sv.get("psnest") == sv.get("upsnest"));
            CHECK(sv.get("upsnest") == sv.get("lpsnest"));
            CHECK(sv.get("cyc") == sv.get("minval") + sv.get("fix"));
            CHECK(sv.get("minval") == sv.get("maxpeak"));
            for (int i = 1; i <= n; ++i) {
                auto c = cycle_class(s, i);
                bool up = c == CycleClass::Cval || c == CycleClass::Cdrise;
                bool down = c == CycleClass::Cpeak || c == CycleClass::Cdfall;
                if (!up) CHECK(ucross(s, i) + unest(s, i) == 0);
                if (!down) CHECK(lcross(s, i) + lnest(s, i) == 0);
            }
        });
    }
}

TEST_CASE("D-permutation parity of cycle classes") {
    for_each_dpermutation(10, DPermClass::All, [](const Permutation& s) {
        for (int i = 1; i <= s.size(); ++i) {
            auto c = cycle_class(s, i);
            if (c == CycleClass::Fix) continue;
            if (i % 2 == 0)
                CHECK((c == CycleClass::Cpeak || c == CycleClass::Cdfall));
            else
                CHECK((c == CycleClass::Cval || c == CycleClass::Cdrise));
        }
    });
}

TEST_CASE("RZ statistics") {
    RZStats r = rz_stats(Permutation::parse("2 1"));
    CHECK(r.lema == 1);
    CHECK(r.romi == 1);
    CHECK(r.comi == 1);
    CHECK(r.cemi == 0);
    CHECK(r.remi == 0);
    CHECK(rz_stats(Permutation::parse("2 1 4 3")).comi == 2);
    CHECK_THROWS_AS(rz_stats(Permutation::parse("1 2")), std::domain_error);
    for (int two_n = 2; two_n <= 10; two_n += 2) {
        for_each_dpermutation(two_n, DPermClass::OSemiderangement, [](const Permutation& s) {
            RZStats got = rz_stats(s);
            oracle::RZ want = oracle::rz(s.word());
            CHECK(got.lema == want.lema);
            CHECK(got.romi == want.romi);
            CHECK(got.remi == want.remi);
            CHECK(got.fix == want.fix);
            CHECK(got.comi == want.comi);
            CHECK(got.cemi == want.cemi);
            CHECK(got.comi + got.cemi == cyc(s));
        });
    }
}

TEST_CASE("stat vector JSON keeps insertion order") {
    auto j = stat_vector(kEx1).to_json();
    REQUIRE(j.is_object());
    CHECK(j.begin().key() == "n");
    CHECK(j["n"] == 11);
}
