#include "braidforge/permutation.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace braidforge {

Perm Perm::transposition(int n, int i) {
    Perm p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Perm Perm::reversal(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p.img_[i] = n - 1 - i;
    return p;
}

Perm Perm::from_one_line(const std::vector<int>& image) {
    const int n = static_cast<int>(image.size());
    Perm p(n);
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = image[i];
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("not a one-line permutation image");
        seen[v - 1] = 1;
        p.img_[i] = v - 1;
    }
    return p;
}

Perm Perm::then(const Perm& b) const {
    Perm r(size());
    for (int i = 0; i < size(); ++i) r.img_[i] = b.img_[img_[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r(size());
    for (int i = 0; i < size(); ++i) r.img_[img_[i]] = i;
    return r;
}

bool Perm::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

int Perm::inversions() const {
    int n = size(), count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (img_[i] > img_[j]) ++count;
    return count;
}

int Perm::cycle_count() const {
    int n = size(), count = 0;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++count;
        for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
    }
    return count;
}

std::vector<int> Perm::descents() const {
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
        if (img_[i - 1] > img_[i]) d.push_back(i);
    return d;
}

void Perm::swap_values(int i) {
    for (auto& v : img_) {
        if (v == i - 1)
            v = i;
        else if (v == i)
            v = i - 1;
    }
}

void Perm::swap_positions(int i) { std::swap(img_[i - 1], img_[i]); }

std::string Perm::one_line() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(img_[i] + 1);
    }
    return s;
}

}  // namespace braidforge
