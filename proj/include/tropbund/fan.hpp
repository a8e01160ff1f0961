#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropbund/zlinalg.hpp"

namespace tropbund {

/// Rational polyhedral fan given by ray generators; cones listed by their
/// rays (the zero cone is implicit).
struct Fan {
    int rank = 0;
    std::vector<ZVec> rays;                 // primitive integer generators
    std::vector<std::vector<int>> cones;    // maximal cones as ray-index lists
    std::string name;

    /// rays shared by two maximal cones (their common face, for the fans here)
    std::vector<int> shared_rays(int a, int b) const {
        std::set<int> sa(cones[a].begin(), cones[a].end());
        std::vector<int> out;
        for (int r : cones[b])
            if (sa.count(r)) out.push_back(r);
        return out;
    }
    std::vector<int> shared_rays3(int a, int b, int c) const {
        std::set<int> sc(cones[c].begin(), cones[c].end());
        std::vector<int> out;
        for (int r : shared_rays(a, b))
            if (sc.count(r)) out.push_back(r);
        return out;
    }
};

inline ZVec zv(std::initializer_list<long> v) {
    ZVec r;
    for (long x : v) r.push_back(Z(x));
    return r;
}

inline Fan fan_p1() {
    Fan f;
    f.rank = 1;
    f.rays = {zv({1}), zv({-1})};
    f.cones = {{0}, {1}};
    f.name = "P1";
    return f;
}

inline Fan fan_p2() {
    Fan f;
    f.rank = 2;
    f.rays = {zv({1, 0}), zv({0, 1}), zv({-1, -1})};
    f.cones = {{0, 1}, {1, 2}, {2, 0}};
    f.name = "P2";
    return f;
}

inline Fan fan_p1xp1() {
    Fan f;
    f.rank = 2;
    f.rays = {zv({1, 0}), zv({0, 1}), zv({-1, 0}), zv({0, -1})};
    f.cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    f.name = "P1xP1";
    return f;
}

inline Fan fan_an(int n) {
    Fan f;
    f.rank = n;
    for (int i = 0; i < n; ++i) {
        ZVec e(n, Z(0));
        e[i] = 1;
        f.rays.push_back(e);
    }
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    f.cones = {all};
    f.name = "A" + std::to_string(n);
    return f;
}

/// Hirzebruch surface F_a.
inline Fan fan_hirzebruch(int a) {
    Fan f;
    f.rank = 2;
    f.rays = {zv({1, 0}), zv({0, 1}), zv({-1, a}), zv({0, -1})};
    f.cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    f.name = "F" + std::to_string(a);
    return f;
}

inline Fan fan_preset(const std::string& name) {
    if (name == "P1") return fan_p1();
    if (name == "P2") return fan_p2();
    if (name == "P1xP1") return fan_p1xp1();
    if (name.size() > 1 && name[0] == 'A') return fan_an(std::stoi(name.substr(1)));
    if (name.size() > 4 && name.rfind("Fa(", 0) == 0 && name.back() == ')')
        return fan_hirzebruch(std::stoi(name.substr(3, name.size() - 4)));
    throw std::invalid_argument("unknown fan preset: " + name);
}

}  // namespace tropbund
