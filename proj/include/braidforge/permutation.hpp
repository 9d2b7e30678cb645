#pragma once

#include <string>
#include <vector>

namespace braidforge {

// Permutation of {1..n}, stored 0-based internally. For braid words the
// convention is: position x at the top of the braid, img(x) at the bottom,
// and composition is left-to-right along the word (first letter acts first).
class Perm {
public:
    Perm() = default;
    explicit Perm(int n) : img_(n) {
        for (int i = 0; i < n; ++i) img_[i] = i;
    }

    static Perm identity(int n) { return Perm(n); }

    // adjacent transposition (i, i+1), i is 1-based
    static Perm transposition(int n, int i);

    // order reversal x -> n+1-x (underlies the half twist)
    static Perm reversal(int n);

    // from a 1-based one-line image list; validates bijectivity
    static Perm from_one_line(const std::vector<int>& image);

    int size() const { return static_cast<int>(img_.size()); }

    // 1-based application
    int apply(int x) const { return img_[x - 1] + 1; }

    // this first, then b
    Perm then(const Perm& b) const;
    Perm inverse() const;

    bool is_identity() const;
    int inversions() const;
    int cycle_count() const;

    // descent set: 1-based positions i with img(i) > img(i+1)
    std::vector<int> descents() const;
    bool has_descent(int i) const { return img_[i - 1] > img_[i]; }

    // swap the values i, i+1 wherever they occur (i 1-based); this is
    // post-composition with the transposition
    void swap_values(int i);
    // swap the entries at positions i, i+1 (i 1-based); pre-composition
    void swap_positions(int i);

    // one-line image notation, 1-based: "2 1 3"
    std::string one_line() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return !(*this == o); }

private:
    std::vector<int> img_;
};

}  // namespace braidforge
