#ifndef CENSUS_PERM_HPP
#define CENSUS_PERM_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace census {

// Permutation of {0,1,2,3}, used both for tetrahedron corner relabelings
// and for face gluing maps.
struct Perm4 {
    std::array<uint8_t, 4> img{0, 1, 2, 3};

    constexpr Perm4() = default;
    constexpr Perm4(int a, int b, int c, int d) : img{uint8_t(a), uint8_t(b), uint8_t(c), uint8_t(d)} {}

    constexpr uint8_t operator[](int i) const { return img[i]; }

    constexpr bool operator==(const Perm4&) const = default;
    constexpr auto operator<=>(const Perm4&) const = default;

    constexpr Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img[img[i]] = uint8_t(i);
        return r;
    }

    // (*this) after `other`: result[i] = this[other[i]]
    constexpr Perm4 after(const Perm4& other) const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img[i] = img[other.img[i]];
        return r;
    }

    constexpr bool is_identity() const { return img == std::array<uint8_t, 4>{0, 1, 2, 3}; }

    constexpr bool odd() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img[i] > img[j]) ++inv;
        return inv % 2 == 1;
    }

    std::string digits() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[i] = char('0' + img[i]);
        return s;
    }

    static Perm4 from_digits(const std::string& s) {
        Perm4 p;
        for (int i = 0; i < 4; ++i) p.img[i] = uint8_t(s[i] - '0');
        return p;
    }
};

inline const std::vector<Perm4>& all_perms4() {
    static const std::vector<Perm4> perms = [] {
        std::vector<Perm4> v;
        std::array<uint8_t, 4> a{0, 1, 2, 3};
        do {
            Perm4 p;
            p.img = a;
            v.push_back(p);
        } while (std::next_permutation(a.begin(), a.end()));
        return v;
    }();
    return perms;
}

// The three odd permutations taking face f1 of one tetrahedron onto face f2
// of another.  A face gluing of an oriented triangulation must be odd, and
// must map the corner opposite f1 to the corner opposite f2.
inline const std::vector<Perm4>& odd_gluings(int f1, int f2) {
    static const std::array<std::array<std::vector<Perm4>, 4>, 4> table = [] {
        std::array<std::array<std::vector<Perm4>, 4>, 4> t{};
        for (const Perm4& p : all_perms4())
            if (p.odd())
                for (int a = 0; a < 4; ++a) t[a][p[a]].push_back(p);
        return t;
    }();
    return table[f1][f2];
}

}  // namespace census

#endif
