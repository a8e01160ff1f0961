#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tropbund {

/// Permutation of {0,...,n-1}, stored as the image list: p[i] = sigma(i).
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Perm(std::vector<int> img) : img_(std::move(img)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("Perm: not a permutation");
            seen[v] = 1;
        }
    }

    std::size_t size() const { return img_.size(); }
    int operator()(int i) const { return img_[i]; }
    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    /// (a*b)(i) = a(b(i)).
    friend Perm operator*(const Perm& a, const Perm& b) {
        std::vector<int> r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a.img_[b.img_[i]];
        return Perm(std::move(r));
    }
    Perm inverse() const {
        std::vector<int> r(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) r[img_[i]] = static_cast<int>(i);
        return Perm(std::move(r));
    }
    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    const std::vector<int>& images() const { return img_; }

    static std::vector<Perm> all(std::size_t n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        std::vector<Perm> out;
        do out.emplace_back(img);
        while (std::next_permutation(img.begin(), img.end()));
        return out;
    }

  private:
    std::vector<int> img_;
};

}  // namespace tropbund
