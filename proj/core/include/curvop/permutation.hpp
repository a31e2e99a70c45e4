#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace curvop {

/// A permutation of {1..n}, stored by its images: sigma(i) = images()[i-1].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// Swaps a and b (1-based), fixing everything else.
    static Permutation transposition(int n, int a, int b);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    /// (this * other)(i) = this(other(i)).
    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;
    bool is_identity() const;

    auto operator<=>(const Permutation&) const = default;

    std::string to_string() const;

private:
    std::vector<int> images_;
};

/// +1 or -1.
class Sign {
public:
    constexpr Sign() = default;
    static constexpr Sign plus() { return Sign(1); }
    static constexpr Sign minus() { return Sign(-1); }
    /// (-1)^exponent.
    static constexpr Sign parity(long exponent) { return exponent % 2 == 0 ? plus() : minus(); }

    constexpr int value() const { return value_; }
    constexpr Sign operator*(Sign o) const { return Sign(value_ * o.value_); }
    constexpr Sign& operator*=(Sign o) { value_ *= o.value_; return *this; }
    constexpr bool operator==(const Sign&) const = default;

private:
    constexpr explicit Sign(int v) : value_(v) {}
    int value_ = 1;
};

/// Inverses of the (p,q)-shuffles, i.e. of the permutations of {1..p+q}
/// that are increasing on {1..p} and on {p+1..p+q}; sorted lexicographically.
std::vector<Permutation> enumerate_inverse_shuffles(int p, int q);

/// Sign picked up when objects x_1..x_n of the given degrees are moved so that
/// x_i lands in position sigma(i): the product of (-1)^{d_i d_j} over inverted pairs.
Sign koszul_sign(const Permutation& sigma, std::span<const int> degrees);

/// Degrees rearranged along sigma: result[sigma(i)-1] = degrees[i-1].
std::vector<int> permute_degrees(const Permutation& sigma, std::span<const int> degrees);

}  // namespace curvop
