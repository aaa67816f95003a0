#include <doctest.h>

#include <cstdlib>
#include <map>

#include "orthoseq/ortho.hpp"

using namespace orthoseq;
using gf2::Field;

TEST_SUITE_BEGIN("ortho");

namespace {

SetFamily family3() { return construction1(3, 1, 2, Field(2, 0x7)); }
SetFamily family6() { return construction3(6, 2, Field(2, 0x7)); }

}  // namespace

TEST_CASE("a set is orthogonal within itself") {
    SetFamily fam = family3();
    for (const SetId& id : fam.ids()) {
        OrthogonalSet s = fam.set(id);
        OrthoReport rep = sets_orthogonal_bruteforce(s, s);
        CHECK(rep.orthogonal);
        CHECK(rep.max_abs_correlation == 0);
    }
}

TEST_CASE("closed form (c1) agrees with brute force on every m=3 pair") {
    SetFamily fam = family3();
    std::vector<SetId> ids = fam.ids();
    for (const SetId& a : ids) {
        for (const SetId& b : ids) {
            if (a == b) continue;
            bool closed = sets_orthogonal_closed_c1(fam.field(), fam.s(), a.c, a.alpha, b.c, b.alpha);
            bool brute = sets_orthogonal_bruteforce(fam.set(a), fam.set(b)).orthogonal;
            CHECK(closed == brute);
        }
    }
    SetId id = ids.front();
    CHECK_THROWS_AS(sets_orthogonal_closed_c1(fam.field(), 1, id.c, id.alpha, id.c, id.alpha),
                    SamePair);
}

TEST_CASE("closed form (c1) special cases") {
    Field f(3, 0xb);
    // same c, different alpha: always orthogonal
    CHECK(sets_orthogonal_closed_c1(f, 2, BitVec::parse("011"), BitVec::parse("000"),
                               BitVec::parse("011"), BitVec::parse("100")));
    // different c, same alpha: always orthogonal
    CHECK(sets_orthogonal_closed_c1(f, 2, BitVec::parse("011"), BitVec::parse("101"),
                               BitVec::parse("111"), BitVec::parse("101")));
    // the worked m=5 instance: S_{011,101} vs S_{010,100} orthogonal,
    // vs S_{111,100} not (row f_100 of the m=5 grid is blank at H_001)
    CHECK(sets_orthogonal_closed_c1(f, 2, BitVec::parse("011"), BitVec::parse("101"),
                               BitVec::parse("010"), BitVec::parse("100")));
    CHECK_FALSE(sets_orthogonal_closed_c1(f, 2, BitVec::parse("011"), BitVec::parse("101"),
                                     BitVec::parse("111"), BitVec::parse("100")));
}

TEST_CASE("closed form (c3) agrees with brute force on every m=6 d=2 pair") {
    SetFamily fam = family6();
    std::vector<SetId> ids = fam.ids();
    for (const SetId& a : ids) {
        for (const SetId& b : ids) {
            if (a == b) continue;
            bool closed = sets_orthogonal_closed_c3(a.c, a.alpha, b.c, b.alpha, 2);
            bool brute = sets_orthogonal_bruteforce(fam.set(a), fam.set(b)).orthogonal;
            CHECK(closed == brute);
        }
    }
}

TEST_CASE("closed form (c3), d=3: only the last two coordinates decide") {
    // alpha=010, delta=110, c != e: last two coords equal -> not orthogonal
    CHECK_FALSE(sets_orthogonal_closed_c3(BitVec::parse("01"), BitVec::parse("010"),
                                     BitVec::parse("10"), BitVec::parse("110"), 3));
    CHECK(sets_orthogonal_closed_c3(BitVec::parse("01"), BitVec::parse("010"), BitVec::parse("10"),
                               BitVec::parse("011"), 3));
    // same c: any alpha difference counts
    CHECK(sets_orthogonal_closed_c3(BitVec::parse("01"), BitVec::parse("010"), BitVec::parse("01"),
                               BitVec::parse("110"), 3));
}

TEST_CASE("count_orthogonal: m=3 closed form and brute force give 9") {
    SetFamily fam = family3();
    for (const SetId& id : fam.ids()) {
        CHECK(count_orthogonal(fam, id) == 9);  // 2^3 + 2^1 - 1
        CHECK(count_orthogonal(fam, id, CheckMethod::brute_force) == 9);
    }
}

TEST_CASE("count_orthogonal: m=6 d=2 gives 12") {
    SetFamily fam = family6();
    SetId id{BitVec::parse("01"), BitVec::parse("10")};
    CHECK(count_orthogonal(fam, id) == 12);  // 3*2^2 + 1 - 1
    CHECK(count_orthogonal(fam, id, CheckMethod::brute_force) == 12);
}

TEST_CASE("count formulas hold at m=7 (C1) and m=8 (C3), spot-checked by brute force") {
    SetFamily f7 = construction1(7, 3, 4, Field::with_default_poly(4));
    SetId id7{BitVec::parse("0110"), BitVec::parse("1011")};
    CHECK(count_orthogonal(f7, id7) == 135);  // 2^7 + 2^3 - 1
    CHECK(count_orthogonal(f7, id7, CheckMethod::brute_force) == 135);

    SetFamily f8 = construction3(8, 2, Field::with_default_poly(3));
    SetId id8{BitVec::parse("101"), BitVec::parse("01")};
    CHECK(count_orthogonal(f8, id8) == 24);  // 3*2^3 + 2^0 - 1
    CHECK(count_orthogonal(f8, id8, CheckMethod::brute_force) == 24);
}

TEST_CASE("check_pair cross-validates and reports witnesses") {
    SetFamily fam = family3();
    SetId a{BitVec::parse("10"), BitVec::parse("01")};
    SetId b{BitVec::parse("01"), BitVec::parse("10")};  // diff c, diff alpha, dc == da -> orthogonal
    OrthoReport rep = check_pair(fam, a, b, CheckMethod::both);
    CHECK(rep.method == CheckMethod::both);
    CHECK(rep.orthogonal);

    // a non-orthogonal pair carries a witness with |corr| = 2^{floor((m+2)/2)}
    SetId nb{BitVec::parse("01"), BitVec::parse("11")};  // dc=11, da=10: not orthogonal
    OrthoReport bad = check_pair(fam, a, nb, CheckMethod::brute_force);
    CHECK_FALSE(bad.orthogonal);
    CHECK(bad.max_abs_correlation == 4);
    REQUIRE(bad.witness.has_value());
    int v = inner_product(fam.set(a).sequences[bad.witness->i],
                          fam.set(nb).sequences[bad.witness->j]);
    CHECK(std::abs(v) == 4);
}

TEST_CASE("reduction identity: S_{c,a} orth S_{c',a'} iff cell[c+c'][a+a']") {
    for (const SetFamily& fam :
         {family3(), construction1(5, 2, 3, Field(3, 0xb)), family6()}) {
        OrthoTable tbl = ortho_table(fam);
        std::vector<SetId> ids = fam.ids();
        std::map<std::pair<SetId, SetId>, bool> cache;
        for (const SetId& a : ids)
            for (const SetId& b : ids) {
                if (!(a < b)) continue;
                bool brute = sets_orthogonal_bruteforce(fam.set(a), fam.set(b)).orthogonal;
                CHECK(brute == tbl.at(a.c ^ b.c, a.alpha ^ b.alpha));
            }
    }
}

TEST_CASE("the m=5 worked pair, by exhaustive inner products") {
    // the printed sequences force S_{011,101} vs S_{111,100} non-orthogonal
    // at correlation 8 = 2^{floor((5+2)/2)}, and S_{010,100} orthogonal
    SetFamily fam = construction1(5, 2, 3, Field(3, 0xb));
    SetId target{BitVec::parse("011"), BitVec::parse("101")};
    OrthoReport r1 = sets_orthogonal_bruteforce(fam.set(target),
                                                fam.set({BitVec::parse("111"), BitVec::parse("100")}));
    CHECK_FALSE(r1.orthogonal);
    CHECK(r1.max_abs_correlation == 8);
    OrthoReport r2 = sets_orthogonal_bruteforce(fam.set(target),
                                                fam.set({BitVec::parse("010"), BitVec::parse("100")}));
    CHECK(r2.orthogonal);
}

TEST_CASE("ortho_table reproduces the m=3 grid") {
    SetFamily fam = family3();
    OrthoTable tbl = ortho_table(fam, /*cyclic_order=*/true);
    // cyclic order rows/cols: 00, 10, 01, 11
    std::vector<std::string> order = {"00", "10", "01", "11"};
    for (std::size_t i = 0; i < 4; ++i) CHECK(tbl.rows[i].str() == order[i]);
    bool expected[4][4] = {
        {false, true, true, true},   // f_00
        {true, true, false, false},  // f_10
        {true, false, true, false},  // f_01
        {true, false, false, true},  // f_11
    };
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(tbl.cell[i][j] == expected[i][j]);

    // zero-row invariant: f_0 fails only against H_0
    CHECK_FALSE(tbl.at(BitVec::parse("00"), BitVec::parse("00")));
}

TEST_CASE("table export formats") {
    SetFamily fam = family3();
    OrthoTable tbl = ortho_table(fam, true);
    std::string csv = to_csv(tbl);
    CHECK(csv.find("c,H_00,H_10,H_01,H_11") == 0);
    CHECK(csv.find("f_00,0,1,1,1") != std::string::npos);
    std::string grid = to_grid(tbl, false);
    CHECK(grid.find('x') != std::string::npos);
    std::string ugrid = to_grid(tbl, true);
    CHECK(ugrid.find("⊥") != std::string::npos);
}

TEST_CASE("max_cross_correlation") {
    SetFamily fam = family3();
    SetId a{BitVec::parse("10"), BitVec::parse("01")};
    SetId o{BitVec::parse("10"), BitVec::parse("11")};  // same c: orthogonal
    CHECK(max_cross_correlation(fam.set(a), fam.set(o)) == 0);
    SetId nb{BitVec::parse("01"), BitVec::parse("11")};
    CHECK(max_cross_correlation(fam.set(a), fam.set(nb)) == 4);
}

TEST_SUITE_END();
