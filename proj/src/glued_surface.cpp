#include "fillpair/glued_surface.hpp"

#include "fillpair/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fillpair {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

void GluedSurface::analyze() {
    const int F = static_cast<int>(faces.size());

    // flat indexing of sides and corners
    std::vector<int> face_offset(F + 1, 0);
    for (int f = 0; f < F; ++f)
        face_offset[f + 1] = face_offset[f] + static_cast<int>(faces[f].size());
    const int total_sides = face_offset[F];
    auto sid = [&](int f, int p) { return face_offset[f] + p; };

    // group side occurrences by segment
    std::map<int64_t, std::vector<int>> occ;
    for (int f = 0; f < F; ++f)
        for (int p = 0; p < static_cast<int>(faces[f].size()); ++p)
            occ[faces[f][p].segment].push_back(sid(f, p));

    std::vector<int> twin(total_sides, -1);
    orientable_ = true;
    for (auto& [seg, sides] : occ) {
        (void)seg;
        if (sides.size() > 2)
            throw Error("GluedSurface: segment occurs more than twice");
        if (sides.size() == 2) {
            twin[sides[0]] = sides[1];
            twin[sides[1]] = sides[0];
        }
    }

    std::vector<int> side_face(total_sides), side_pos(total_sides);
    for (int f = 0; f < F; ++f)
        for (int p = 0; p < static_cast<int>(faces[f].size()); ++p) {
            side_face[sid(f, p)] = f;
            side_pos[sid(f, p)] = p;
        }
    auto fwd = [&](int s) { return faces[side_face[s]][side_pos[s]].forward; };
    auto next_side = [&](int s) {
        int f = side_face[s];
        int n = static_cast<int>(faces[f].size());
        return sid(f, (side_pos[s] + 1) % n);
    };
    // corner c(s): the corner at the END of side s (between s and next(s)).
    // corner at the START of s is c(prev(s)).
    auto prev_side = [&](int s) {
        int f = side_face[s];
        int n = static_cast<int>(faces[f].size());
        return sid(f, (side_pos[s] + n - 1) % n);
    };

    // identify corners across gluings
    UnionFind corners(total_sides);
    UnionFind comps(std::max(F, 1));
    for (auto& [seg, sides] : occ) {
        (void)seg;
        if (sides.size() != 2) continue;
        int a = sides[0], b = sides[1];
        comps.unite(side_face[a], side_face[b]);
        if (fwd(a) != fwd(b)) {
            // opposite traversal: start(a) = end(b), end(a) = start(b)
            corners.unite(prev_side(a), b);
            corners.unite(a, prev_side(b));
        } else {
            // same traversal direction: a non-orientable identification
            orientable_ = false;
            corners.unite(prev_side(a), prev_side(b));
            corners.unite(a, b);
        }
    }

    int boundary_sides = 0;
    for (int s = 0; s < total_sides; ++s)
        if (twin[s] < 0) ++boundary_sides;

    // V, E, F
    std::vector<char> corner_root_seen(total_sides, 0);
    vertex_count_ = 0;
    for (int s = 0; s < total_sides; ++s) {
        int r = corners.find(s);
        if (!corner_root_seen[r]) {
            corner_root_seen[r] = 1;
            ++vertex_count_;
        }
    }
    edge_count_ = (total_sides - boundary_sides) / 2 + boundary_sides;

    component_count_ = 0;
    face_component_.assign(F, -1);
    std::map<int, int> comp_id;
    for (int f = 0; f < F; ++f) {
        int r = comps.find(f);
        auto it = comp_id.find(r);
        if (it == comp_id.end()) {
            it = comp_id.emplace(r, component_count_++).first;
        }
        face_component_[f] = it->second;
    }

    // boundary cycles: from a boundary side, rotate around its end corner
    // through glued sides until the next boundary side is found
    boundary_cycles_.clear();
    std::vector<char> used(total_sides, 0);
    for (int s0 = 0; s0 < total_sides; ++s0) {
        if (twin[s0] >= 0 || used[s0]) continue;
        std::vector<std::pair<int, int>> cycle;
        int s = s0;
        do {
            used[s] = 1;
            cycle.emplace_back(side_face[s], side_pos[s]);
            // successor: first boundary side starting at end(s)
            int g = next_side(s);
            while (twin[g] >= 0) {
                if (!orientable_)
                    throw Error("GluedSurface: boundary tracing requires orientable gluing");
                g = next_side(twin[g]);
            }
            s = g;
        } while (s != s0);
        boundary_cycles_.push_back(std::move(cycle));
    }

    analyzed_ = true;
}

} // namespace fillpair
