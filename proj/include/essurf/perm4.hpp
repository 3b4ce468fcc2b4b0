#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace essurf {

/// Permutation of {0,1,2,3}, the vertex relabelling attached to a face gluing.
/// Stored by image table; indexable into the lexicographically ordered list of
/// all 24 permutations (the ordering used by census isomorphism signatures).
class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d) : img_{static_cast<uint8_t>(a), static_cast<uint8_t>(b), static_cast<uint8_t>(c), static_cast<uint8_t>(d)} {}

    constexpr int operator[](int i) const { return img_[i]; }

    constexpr bool operator==(const Perm4& o) const { return img_ == o.img_; }
    constexpr bool operator!=(const Perm4& o) const { return img_ != o.img_; }
    constexpr bool operator<(const Perm4& o) const { return img_ < o.img_; }

    constexpr Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
        return r;
    }

    /// Composition: (*this).then_apply... result(i) = (*this)[other[i]].
    constexpr Perm4 after(const Perm4& other) const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[i] = img_[other.img_[i]];
        return r;
    }

    /// +1 for even permutations, -1 for odd.
    constexpr int sign() const {
        int s = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[i] > img_[j]) s = -s;
        return s;
    }

    constexpr bool is_identity() const { return img_[0] == 0 && img_[1] == 1 && img_[2] == 2 && img_[3] == 3; }

    /// Index in the lexicographic ordering of all 24 permutations.
    constexpr int ordered_index() const {
        int idx = 0;
        for (int i = 0; i < 4; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < 4; ++j)
                if (img_[j] < img_[i]) ++smaller;
            int fact = 1;
            for (int k = 2; k <= 3 - i; ++k) fact *= k;
            idx += smaller * fact;
        }
        return idx;
    }

    static Perm4 from_ordered_index(int idx);

    /// Transposition swapping a and b.
    static constexpr Perm4 transposition(int a, int b) {
        Perm4 r;
        r.img_[a] = static_cast<uint8_t>(b);
        r.img_[b] = static_cast<uint8_t>(a);
        return r;
    }

    std::string str() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + img_[i]);
        return s;
    }

private:
    std::array<uint8_t, 4> img_;
};

inline Perm4 Perm4::from_ordered_index(int idx) {
    std::array<int, 4> pool{0, 1, 2, 3};
    std::array<int, 4> img{};
    int fact[4] = {6, 2, 1, 1};
    for (int i = 0; i < 4; ++i) {
        int f = (i < 3) ? fact[i] : 1;
        int k = idx / f;
        idx %= f;
        img[i] = pool[k];
        for (int j = k; j < 3 - i; ++j) pool[j] = pool[j + 1];
    }
    return Perm4(img[0], img[1], img[2], img[3]);
}

}  // namespace essurf
