#include <doctest.h>

#include <algorithm>

#include "gspzeta/cosets.hpp"
#include "gspzeta/errors.hpp"

using namespace gspzeta;
using namespace gspzeta::cosets;

TEST_CASE("group orders") {
    CHECK(gl4_order(2) == 15u * 14 * 12 * 8);
    CHECK(gl4_order(3) == 24261120u);
    CHECK(gsp4_order(2) == 720u);
    CHECK(gsp4_order(3) == 81u * 8 * 80 * 2);
    CHECK_THROWS_AS(double_coset_partition(5, PartitionMethod::Quotient), Unsupported);
}

TEST_CASE("generators close up to the full subgroups") {
    for (int p : {2, 3}) {
        CHECK(generated_group(gsp4_generators(p)).size() == gsp4_order(p));
        CHECK(generated_group(p4_generators(p)).size() == p4_order(p));
        for (const auto& g : gsp4_generators(p)) CHECK(similitude(g).has_value());
        for (const auto& g : p4_generators(p)) CHECK(in_p4(g));
    }
}

TEST_CASE("GL4(F_2) enumeration and filters") {
    const GroupEnumeration gl = enumerate_gl4(2);
    CHECK(gl.size() == 20160u);
    const auto id = gl.index_of(Mat4::identity(2));
    REQUIRE(id);
    CHECK(gl.element(*id) * gl.element(*id) == Mat4::identity(2));

    const auto gsp = filter_gsp4(gl);
    CHECK(gsp.size() == 720u);
    const Mat4 J = symplectic_form(2);
    for (std::size_t k : gsp) {
        const Mat4 g = gl.element(k);
        const auto mu = similitude(g);
        REQUIRE(mu);
        Mat4 muJ = J;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) muJ.set(r, c, *mu * J.at(r, c));
        CHECK(g.transpose() * J * g == muJ);
    }
    CHECK(filter_p4(gl).size() == p4_order(2));
    // Generated and filtered subgroups coincide.
    std::vector<std::uint32_t> filtered;
    for (std::size_t k : gsp) filtered.push_back(gl.element(k).pack());
    std::sort(filtered.begin(), filtered.end());
    CHECK(filtered == generated_group(gsp4_generators(2)));
}

TEST_CASE("membership of the special elements") {
    for (int p : {2, 3}) {
        CHECK(similitude(symplectic_form(p)) == std::optional<int>(1));
        CHECK(in_p4(t2(p)));
        CHECK_FALSE(in_p4(t1(p)));
        Mat4 diag = Mat4::identity(p);
        diag.set(2, 2, p - 1);
        CHECK(in_p4(diag));
    }
}

TEST_CASE("packing round-trips") {
    const Mat4 m(3, {1, 2, 0, 1, 0, 1, 2, 2, 1, 1, 1, 0, 2, 0, 0, 1});
    CHECK(Mat4::unpack(3, m.pack()) == m);
    CHECK(Mat4::identity(3).det() == 1);
}

TEST_CASE("two double cosets at p = 2 by full enumeration") {
    const auto r = double_coset_partition(2, PartitionMethod::Full);
    CHECK(r.class_count == 2);
    std::uint64_t total = 0;
    for (auto s : r.class_sizes) total += s;
    CHECK(total == 20160u);
    CHECK(r.identity_t1_distinct);
    CHECK(r.identity_class_contains_subgroups);
    CHECK(r.closure_verified);
}

TEST_CASE("quotient method agrees with full enumeration at p = 2") {
    const auto full = double_coset_partition(2, PartitionMethod::Full);
    const auto quot = double_coset_partition(2, PartitionMethod::Quotient);
    CHECK(quot.class_count == 2);
    CHECK(quot.quotient_size == 20160u / p4_order(2));
    auto a = full.class_sizes, b = quot.class_sizes;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("quotient method at p = 3") {
    const auto r = double_coset_partition(3, PartitionMethod::Quotient);
    CHECK(r.class_count == 2);
    CHECK(r.quotient_size == 520u);
    std::uint64_t total = 0;
    for (auto s : r.class_sizes) total += s;
    CHECK(total == gl4_order(3));
    CHECK(r.identity_t1_distinct);
    CHECK_THROWS_AS(double_coset_partition(3, PartitionMethod::Full), Infeasible);
}
