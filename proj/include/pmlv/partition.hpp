#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "pmlv/rational.hpp"

namespace pmlv {

// Weakly decreasing sequence of positive integers. The empty partition is the
// unique partition of 0.
class Partition {
public:
    Partition() = default;
    // Parts are sorted into decreasing order; zero parts are dropped. Negative
    // parts throw DomainError.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    // m_i: number of parts equal to i.
    int multiplicity(int i) const;
    // Zero when i is past the last part.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    bool is_even() const;

    // "[4,2,2,1,1,1]"
    std::string json() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// An ordered sequence of positive integers; order matters.
using Composition = std::vector<int>;

struct PartitionGuards {
    int max_weight = 60;
    std::size_t max_permutation_length = 10;
};

// All partitions of k in reverse-lexicographic order, (k) first and 1^k last.
std::vector<Partition> enumerate_partitions(int k, const PartitionGuards& guards = {});

// z_mu = prod_i i^{m_i} m_i!
Rational z_mu(const Partition& mu);

Partition scale(const Partition& mu, int q);

// mu with every part equal to 1 removed.
Partition strip_ones(const Partition& mu);

// lambda_i - mu_i in {0, 1} for every i, with zero padding.
bool is_vertical_strip(const Partition& lambda, const Partition& mu);

// The unique mu |- |lambda| with strip_ones(mu) even and lambda/strip_ones(mu)
// a vertical strip: mu = 1^{m1+m3+m5+...} 2^{m2+m3} 4^{m4+m5} 6^{m6+m7} ...
Partition unique_even_mu(const Partition& lambda);

// Every distinct ordering of the parts of lambda, starting from lambda itself
// and proceeding in reverse-lexicographic order.
std::vector<Composition> distinct_permutations(const Partition& lambda,
                                               const PartitionGuards& guards = {});

} // namespace pmlv
