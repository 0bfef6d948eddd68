#include "fillpair/complex.hpp"

#include "fillpair/errors.hpp"
#include "fillpair/glued_surface.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace fillpair {

int FillingPairComplex::edge_tail(int e) const {
    return is_alpha_edge(e) ? walk_[e] : e - k_;
}

int FillingPairComplex::edge_head(int e) const {
    return is_alpha_edge(e) ? walk_[(e + 1) % k_] : (e - k_ + 1) % k_;
}

void FillingPairComplex::compute_rotation() {
    rot_next_.assign(4 * k_, -1);
    rot_prev_.assign(4 * k_, -1);
    for (int v = 0; v < k_; ++v) {
        int ao = alpha_out(v), ai = alpha_in(v), bo = beta_out(v), bi = beta_in(v);
        // counterclockwise order around v, by crossing sign
        std::vector<int> cyc = (sign_[v] > 0) ? std::vector<int>{ao, bo, ai, bi}
                                              : std::vector<int>{ao, bi, ai, bo};
        for (int i = 0; i < 4; ++i) {
            rot_next_[cyc[i]] = cyc[(i + 1) % 4];
            rot_prev_[cyc[(i + 1) % 4]] = cyc[i];
        }
    }
}

void FillingPairComplex::compute_faces() {
    faces_.clear();
    face_of_dart_.assign(4 * k_, -1);
    pos_in_face_.assign(4 * k_, -1);
    for (int d0 = 0; d0 < 4 * k_; ++d0) {
        if (face_of_dart_[d0] >= 0) continue;
        std::vector<int> orbit;
        int d = d0;
        do {
            face_of_dart_[d] = static_cast<int>(faces_.size());
            pos_in_face_[d] = static_cast<int>(orbit.size());
            orbit.push_back(d);
            d = rot_prev_[other_end(d)];  // phi: face kept on the left
        } while (d != d0);
        faces_.push_back(std::move(orbit));
    }
}

void FillingPairComplex::compute_plus_sides() {
    // At vertex 0 the alpha strand runs from the plus side of beta to the
    // minus side; the minus side is the one holding the corner flanked by
    // alpha_out and beta_out.
    {
        int ao = alpha_out(0), bo = beta_out(0);
        Side minus;
        if (rot_next_[ao] == bo) {
            minus = corner_side_of_second(bo);  // corner (ao, bo), side of edge(bo)
        } else {
            assert(rot_next_[bo] == ao);
            minus = corner_side_of_first(bo);   // corner (bo, ao), side of edge(bo)
        }
        beta_plus_ = opposite(minus);
    }
    // Same convention with roles swapped, anchored at alpha's first vertex.
    {
        int v = walk_[0];
        int bo = beta_out(v), ao = alpha_out(v);
        Side minus;
        if (rot_next_[bo] == ao) {
            minus = corner_side_of_second(ao);
        } else {
            assert(rot_next_[ao] == bo);
            minus = corner_side_of_first(ao);
        }
        alpha_plus_ = opposite(minus);
    }
}

int FillingPairComplex::alpha_end_on_beta_side(int v, Side side_of_beta) const {
    // beta_out(v) is a tail dart; the corner (beta_out, rot_next(beta_out))
    // lies Left of beta, the corner (rot_prev(beta_out), beta_out) Right.
    int nxt = rot_next_[beta_out(v)];
    int prv = rot_prev_[beta_out(v)];
    // rotation alternates alpha/beta ends, so both neighbours are alpha ends
    int left_end = nxt, right_end = prv;
    return side_of_beta == Side::Left ? left_end : right_end;
}

int FillingPairComplex::beta_end_on_alpha_side(int v, Side side_of_alpha) const {
    int nxt = rot_next_[alpha_out(v)];
    int prv = rot_prev_[alpha_out(v)];
    return side_of_alpha == Side::Left ? nxt : prv;
}

FillingPairComplex FillingPairComplex::build_from_gluing(int k, const std::vector<WalkEntry>& alpha_walk) {
    if (k < 1 || static_cast<int>(alpha_walk.size()) != k)
        throw Error("build_from_gluing: walk length must equal k");

    FillingPairComplex X;
    X.k_ = k;
    X.walk_.resize(k);
    X.walk_pos_.assign(k, -1);
    X.sign_.assign(k, 0);
    for (int j = 0; j < k; ++j) {
        int v = alpha_walk[j].vertex;
        int s = alpha_walk[j].sign;
        if (v < 0 || v >= k)
            throw Error("build_from_gluing: vertex out of range");
        if (s != +1 && s != -1)
            throw Error("build_from_gluing: sign must be +1 or -1");
        if (X.walk_pos_[v] >= 0)
            throw Error("build_from_gluing: walk visits a vertex twice");
        X.walk_[j] = v;
        X.walk_pos_[v] = j;
        X.sign_[v] = s;
    }

    X.compute_rotation();
    X.compute_faces();

    for (const auto& f : X.faces_) {
        if (f.size() == 2)
            throw BigonFaceError("bigon face: the pair is not in minimal position");
        assert(f.size() % 2 == 0 && f.size() >= 4);
    }

    // The 1-skeleton is connected (alpha passes every vertex), but keep the
    // check for defence against future constructors.
    {
        std::vector<char> seen(k, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int n = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : {X.edge_head(X.dart_edge(X.alpha_out(v))),
                          X.edge_tail(X.dart_edge(X.alpha_in(v))),
                          (v + 1) % k, (v + k - 1) % k}) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++n;
                    stack.push_back(w);
                }
            }
        }
        if (n != k)
            throw DisconnectedComplexError("complex is disconnected");
    }

    int chi = k - 2 * k + X.face_count();
    if (chi % 2 != 0)
        throw NonOrientableGluingError("odd Euler characteristic");
    X.genus_ = (2 - chi) / 2;
    if (X.genus_ < 2)
        throw GenusBelowTwoError("genus " + std::to_string(X.genus_) + " is below two");

    X.compute_plus_sides();
    return X;
}

std::map<int, int> FillingPairComplex::face_census() const {
    std::map<int, int> census;
    for (const auto& f : faces_) census[static_cast<int>(f.size())]++;
    return census;
}

bool FillingPairComplex::has_hexagons() const {
    for (const auto& f : faces_)
        if (f.size() == 6) return true;
    return false;
}

std::vector<std::string> FillingPairComplex::validate() const {
    std::vector<std::string> bad;

    // every edge has exactly two face incidences
    std::vector<int> incidences(2 * k_, 0);
    for (const auto& f : faces_)
        for (int d : f) incidences[dart_edge(d)]++;
    for (int e = 0; e < 2 * k_; ++e)
        if (incidences[e] != 2)
            bad.push_back("edge " + std::to_string(e) + " has " +
                          std::to_string(incidences[e]) + " face incidences");

    // faces alternate colors, have even size >= 4
    for (int fi = 0; fi < face_count(); ++fi) {
        const auto& f = faces_[fi];
        if (f.size() < 4 || f.size() % 2 != 0)
            bad.push_back("face " + std::to_string(fi) + " has size " + std::to_string(f.size()));
        for (size_t i = 0; i < f.size(); ++i) {
            bool a1 = is_alpha_edge(dart_edge(f[i]));
            bool a2 = is_alpha_edge(dart_edge(f[(i + 1) % f.size()]));
            if (a1 == a2) {
                bad.push_back("face " + std::to_string(fi) + " does not alternate edge colors");
                break;
            }
        }
    }

    // Euler characteristic and orientability via the gluing utility
    {
        GluedSurface g;
        for (const auto& f : faces_) {
            std::vector<GluedSurface::Side> sides;
            for (int d : f) sides.push_back({dart_edge(d), !dart_is_head(d)});
            g.add_face(std::move(sides));
        }
        try {
            g.analyze();
            if (!g.orientable_gluing()) bad.push_back("gluing is not orientable");
            if (g.component_count() != 1) bad.push_back("complex is disconnected");
            if (!g.boundary_cycles().empty()) bad.push_back("complex has boundary");
            if (g.vertex_count() != k_)
                bad.push_back("vertex count " + std::to_string(g.vertex_count()) +
                              " != k = " + std::to_string(k_));
            if (g.chi() != 2 - 2 * genus_)
                bad.push_back("Euler characteristic mismatch: chi = " + std::to_string(g.chi()) +
                              ", 2-2g = " + std::to_string(2 - 2 * genus_));
        } catch (const Error& e) {
            bad.push_back(std::string("gluing analysis failed: ") + e.what());
        }
    }

    // total face size = 4k
    {
        size_t total = 0;
        for (const auto& f : faces_) total += f.size();
        if (total != static_cast<size_t>(4 * k_))
            bad.push_back("face sizes sum to " + std::to_string(total) + ", expected 4k");
    }

    if (genus_ < 2) bad.push_back("genus below two");

    return bad;
}

} // namespace fillpair
