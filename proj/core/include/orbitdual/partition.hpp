#pragma once

#include "orbitdual/lie_type.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitdual {

/// A weakly decreasing sequence of positive integers. Canonical values never
/// store zero parts; the empty partition (size 0) is valid.
class Partition {
public:
    Partition() = default;
    /// Validates: parts must be positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts into decreasing order and drops zeros. Negative parts are rejected.
    static Partition from_unsorted(std::vector<int> parts);
    /// Parses "a,b,c" (descending). An empty string is the empty partition.
    static Partition parse(std::string_view text);

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] int size() const; // |d|
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); } // #d
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Multiplicity m_d(s): number of parts equal to s.
int multiplicity(const Partition& d, int s);
/// Height h_d(s): number of parts >= s. h_d(0) is the number of parts.
int height(const Partition& d, int s);
Partition transpose(const Partition& d);

/// True iff q is dominated by p (prefix sums of q never exceed those of p).
/// Throws SizeMismatch if |p| != |q|.
bool dominates(const Partition& p, const Partition& q);

/// Parts congruent to epsilon mod 2 occur with even multiplicity.
bool is_eps_partition(const Partition& d, int epsilon);

/// Membership in P_{epsilon, epsilon'}(|d|): d is an epsilon-partition and
/// h_d(s) = epsilon' mod 2 for every part s = epsilon mod 2, where for
/// epsilon = 0 the zero part s = 0 is always tested.
bool is_special_class(const Partition& d, int epsilon, int eps_prime);

/// epsilon attached to the orbit family: 0 for B and D, 1 for C.
int family_epsilon(Family x);
bool is_family_partition(const Partition& d, Family x);

/// X-collapse: the largest X-partition dominated by d. X in {B, C, D}.
Partition collapse(const Partition& d, Family x);

/// d+ adds one to the largest part (the empty partition becomes [1]).
Partition d_plus(const Partition& d);
/// d- subtracts one from the smallest part, dropping it if it reaches zero.
Partition d_minus(const Partition& d);

/// Concatenation as multisets, sorted.
Partition join(const Partition& a, const Partition& b);

/// All partitions of n in reverse lexicographic order ([n] first).
std::vector<Partition> all_partitions(int n);

/// Partitions of n lying in P_X(n).
std::vector<Partition> family_partitions(int n, Family x);

} // namespace orbitdual
