#include <doctest.h>

#include "orbitdual/error.hpp"
#include "orbitdual/partition.hpp"
#include "orbitdual/partition_oracle.hpp"

using namespace orbitdual;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const DomainError& e) {
        return e.kind();
    }
    FAIL("expected a DomainError");
    return ErrorKind::InvalidPartition;
}

} // namespace

TEST_CASE("construction validates order and positivity")
{
    CHECK(Partition{3, 1, 1}.size() == 5);
    CHECK(Partition{3, 1, 1}.length() == 3);
    CHECK(Partition{}.size() == 0);
    CHECK(kind_of([] { Partition{1, 2}; }) == ErrorKind::InvalidPartition);
    CHECK(kind_of([] { Partition{2, 0}; }) == ErrorKind::InvalidPartition);
    CHECK(Partition::from_unsorted({1, 0, 3, 2}) == Partition{3, 2, 1});
    CHECK(Partition::parse("9,1") == Partition{9, 1});
    CHECK(Partition::parse("") == Partition{});
    CHECK(kind_of([] { Partition::parse("3,x"); }) == ErrorKind::InvalidPartition);
    CHECK(Partition{6, 4}.to_string() == "[6,4]");
}

TEST_CASE("multiplicity and height")
{
    CHECK(multiplicity({5, 5}, 5) == 2);
    CHECK(multiplicity({9, 1}, 5) == 0);
    CHECK(multiplicity({3, 1, 1}, 1) == 2);
    CHECK(height({3, 1, 1}, 1) == 3);
    CHECK(height({3, 1, 1}, 3) == 1);
    CHECK(height({6, 4}, 5) == 1);
}

TEST_CASE("transpose")
{
    CHECK(transpose({2, 1, 1}) == Partition{3, 1});
    CHECK(transpose({}) == Partition{});
    CHECK(transpose({10}) == Partition(std::vector<int>(10, 1)));
    for (int n = 0; n <= 20; ++n)
        for (const auto& p : all_partitions(n)) REQUIRE(transpose(transpose(p)) == p);
}

TEST_CASE("dominance")
{
    CHECK(dominates({6, 4}, {5, 5}));
    CHECK_FALSE(dominates({5, 5}, {6, 4}));
    CHECK(dominates({9, 1}, {5, 5}));
    CHECK(kind_of([] { dominates({2}, {1}); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("dominance is a partial order up to 14")
{
    for (int n = 1; n <= 14; ++n) {
        const auto ps = all_partitions(n);
        for (const auto& p : ps) {
            REQUIRE(dominates(p, p));
            for (const auto& q : ps) {
                if (p != q && dominates(p, q)) REQUIRE_FALSE(dominates(q, p));
            }
        }
        if (n > 9) continue; // transitivity is cubic; keep it to smaller n
        for (const auto& a : ps)
            for (const auto& b : ps)
                if (dominates(a, b))
                    for (const auto& c : ps)
                        if (dominates(b, c)) REQUIRE(dominates(a, c));
    }
}

TEST_CASE("epsilon partitions and special classes")
{
    CHECK(is_eps_partition({2, 2}, 1));
    CHECK_FALSE(is_eps_partition({3, 1}, 1));
    CHECK_FALSE(is_eps_partition({6, 4}, 0));
    CHECK(is_special_class({9, 1}, 0, 0));
    CHECK(is_special_class({6, 4}, 1, 1));
    // epsilon = 1 tests heights at odd parts only; [2,2] has none, so both classes hold.
    CHECK(is_special_class({2, 2}, 1, 1));
    CHECK(is_special_class({2, 2}, 1, 0));
    for (int n = 1; n <= 14; ++n) {
        for (const auto& d : all_partitions(n)) {
            if (is_special_class(d, 0, 1)) REQUIRE(n % 2 == 1);
            for (int e = 0; e <= 1; ++e)
                for (int ep = 0; ep <= 1; ++ep)
                    if (is_special_class(d, e, ep)) REQUIRE(is_eps_partition(d, e));
        }
    }
}

TEST_CASE("collapse")
{
    CHECK(collapse({3, 2}, Family::B) == Partition{3, 1, 1});
    CHECK(collapse({6, 4}, Family::D) == Partition{5, 5});
    CHECK(collapse({2, 2}, Family::C) == Partition{2, 2});
    CHECK(collapse({3, 1}, Family::C) == Partition{2, 2});
    CHECK(kind_of([] { collapse({2, 2}, Family::B); }) == ErrorKind::ParityMismatch);
    CHECK(kind_of([] { collapse({3}, Family::C); }) == ErrorKind::ParityMismatch);
}

TEST_CASE("collapse matches the brute-force oracle up to 14")
{
    for (int n = 1; n <= 14; ++n) {
        for (const auto x : {Family::B, Family::C, Family::D}) {
            if ((n % 2 == 1) != (x == Family::B)) continue;
            for (const auto& d : all_partitions(n)) {
                const Partition c = collapse(d, x);
                INFO(d.to_string(), " ", family_letter(x));
                REQUIRE(is_family_partition(c, x));
                REQUIRE(dominates(d, c));
                REQUIRE(collapse(c, x) == c);
                REQUIRE(c == brute_collapse_oracle(d, x));
            }
        }
    }
}

TEST_CASE("plus and minus modifications")
{
    CHECK(d_plus({9, 1}) == Partition{10, 1});
    CHECK(d_minus({10, 1}) == Partition{10});
    CHECK(d_plus({5, 5}) == Partition{6, 5});
    CHECK(d_plus({}) == Partition{1});
    CHECK(kind_of([] { d_minus({}); }) == ErrorKind::EmptyPartition);
}

TEST_CASE("brute collapse oracle")
{
    CHECK(brute_collapse_oracle({3, 2}, Family::B) == Partition{3, 1, 1});
    CHECK(brute_collapse_oracle({10}, Family::C) == Partition{10});
    CHECK(brute_collapse_oracle({2}, Family::D) == Partition{1, 1});
    CHECK(kind_of([] { brute_collapse_oracle({21}, Family::B); }) == ErrorKind::BoundExceeded);
    CHECK(kind_of([] { brute_collapse_oracle({4}, Family::B); }) == ErrorKind::ParityMismatch);
}

TEST_CASE("partition enumeration")
{
    CHECK(all_partitions(5).size() == 7);
    CHECK(all_partitions(5).front() == Partition{5});
    CHECK(all_partitions(0).size() == 1);
    CHECK(family_partitions(4, Family::C).size() == 4); // [4], [2,2], [2,1,1], [1^4]
    CHECK(family_partitions(5, Family::B).size() == 4); // [5], [3,1,1], [2,2,1], [1^5]
}
