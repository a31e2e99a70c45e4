#include "curvop/permutation.hpp"

#include "curvop/errors.hpp"

#include <algorithm>
#include <numeric>

namespace curvop {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int a, int b) {
    auto v = identity(n).images_;
    std::swap(v[static_cast<std::size_t>(a - 1)], v[static_cast<std::size_t>(b - 1)]);
    return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (size() != other.size()) throw ArityMismatch("composing permutations of different sizes");
    std::vector<int> v(images_.size());
    for (int i = 1; i <= size(); ++i) v[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(images_.size());
    for (int i = 1; i <= size(); ++i) v[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(images_[i]);
    }
    return s + "]";
}

std::vector<Permutation> enumerate_inverse_shuffles(int p, int q) {
    if (p < 0 || q < 0) throw InvalidArgument("negative shuffle block size");
    const int n = p + q;
    std::vector<Permutation> out;
    // A (p,q)-shuffle is determined by the image set of {1..p}.
    std::vector<bool> mask(static_cast<std::size_t>(n), false);
    std::fill(mask.begin(), mask.begin() + p, true);
    do {
        std::vector<int> images;
        images.reserve(static_cast<std::size_t>(n));
        for (int pos = 1; pos <= n; ++pos)
            if (mask[static_cast<std::size_t>(pos - 1)]) images.push_back(pos);
        for (int pos = 1; pos <= n; ++pos)
            if (!mask[static_cast<std::size_t>(pos - 1)]) images.push_back(pos);
        out.push_back(Permutation(std::move(images)).inverse());
    } while (std::prev_permutation(mask.begin(), mask.end()));
    std::sort(out.begin(), out.end());
    return out;
}

Sign koszul_sign(const Permutation& sigma, std::span<const int> degrees) {
    if (static_cast<int>(degrees.size()) != sigma.size())
        throw ArityMismatch("koszul_sign: " + std::to_string(degrees.size()) + " degrees for a permutation of " +
                            std::to_string(sigma.size()));
    long odd_inversions = 0;
    for (int i = 1; i <= sigma.size(); ++i)
        for (int j = i + 1; j <= sigma.size(); ++j)
            if (sigma(i) > sigma(j) && degrees[static_cast<std::size_t>(i - 1)] % 2 != 0 &&
                degrees[static_cast<std::size_t>(j - 1)] % 2 != 0)
                ++odd_inversions;
    return Sign::parity(odd_inversions);
}

std::vector<int> permute_degrees(const Permutation& sigma, std::span<const int> degrees) {
    std::vector<int> out(degrees.size());
    for (int i = 1; i <= sigma.size(); ++i)
        out[static_cast<std::size_t>(sigma(i) - 1)] = degrees[static_cast<std::size_t>(i - 1)];
    return out;
}

}  // namespace curvop
