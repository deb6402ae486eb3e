#include "pmlv/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "pmlv/errors.hpp"

namespace pmlv {

Partition::Partition(std::vector<int> parts)
{
    for (int p : parts) {
        if (p < 0) {
            throw DomainError("partition parts must be nonnegative");
        }
    }
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts_ = std::move(parts);
}

int Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int i) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

bool Partition::is_even() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

std::string Partition::json() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) {
            os << ',';
        }
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << p.json();
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate_into(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int k, const PartitionGuards& guards)
{
    if (k < 0) {
        throw DomainError("cannot partition a negative integer");
    }
    if (k > guards.max_weight) {
        throw CapacityError("partition enumeration of " + std::to_string(k) + " exceeds guard "
                            + std::to_string(guards.max_weight));
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_into(k, k, prefix, out);
    return out;
}

Rational z_mu(const Partition& mu)
{
    BigInt z = 1;
    const auto& parts = mu.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        const auto m = static_cast<unsigned long>(j - i);
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
        z *= power * factorial(m);
        i = j;
    }
    return Rational(z);
}

Partition scale(const Partition& mu, int q)
{
    if (q < 1) {
        throw DomainError("partition scale factor must be positive");
    }
    std::vector<int> parts = mu.parts();
    for (int& p : parts) {
        p *= q;
    }
    return Partition(std::move(parts));
}

Partition strip_ones(const Partition& mu)
{
    std::vector<int> parts = mu.parts();
    std::erase(parts, 1);
    return Partition(std::move(parts));
}

bool is_vertical_strip(const Partition& lambda, const Partition& mu)
{
    const std::size_t len = std::max(lambda.length(), mu.length());
    for (std::size_t i = 0; i < len; ++i) {
        const int d = lambda.part(i) - mu.part(i);
        if (d != 0 && d != 1) {
            return false;
        }
    }
    return true;
}

Partition unique_even_mu(const Partition& lambda)
{
    std::vector<int> parts;
    const int top = lambda.empty() ? 0 : lambda.parts().front();
    int ones = 0;
    for (int i = 1; i <= top; i += 2) {
        ones += lambda.multiplicity(i);
    }
    // part 2e collects m_{2e} and m_{2e+1}
    for (int e = 2; e <= top + 1; e += 2) {
        const int count = lambda.multiplicity(e) + lambda.multiplicity(e + 1);
        parts.insert(parts.end(), static_cast<std::size_t>(count), e);
    }
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    Partition mu(std::move(parts));

    const Partition core = strip_ones(mu);
    if (mu.weight() != lambda.weight() || !core.is_even() || !is_vertical_strip(lambda, core)) {
        throw ConsistencyError("unique_even_mu postcondition failed for " + lambda.json());
    }
    return mu;
}

std::vector<Composition> distinct_permutations(const Partition& lambda, const PartitionGuards& guards)
{
    if (lambda.length() > guards.max_permutation_length) {
        throw CapacityError("permutations of a partition of length "
                            + std::to_string(lambda.length()) + " exceed guard "
                            + std::to_string(guards.max_permutation_length));
    }
    Composition c = lambda.parts();
    std::vector<Composition> out;
    do {
        out.push_back(c);
    } while (std::prev_permutation(c.begin(), c.end()));
    return out;
}

} // namespace pmlv
