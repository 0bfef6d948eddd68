#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fillpair {

// Side of a directed edge, with respect to the global orientation.
enum class Side : uint8_t { Left = 0, Right = 1 };
inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// The CW complex cut out of a closed orientable surface by a filling pair
// (alpha, beta) in minimal position.
//
// Vertices are the k crossing points, labelled 0..k-1 along beta's
// orientation (the external format is 1-based).  Beta edge i runs from
// vertex i to vertex i+1 (mod k).  Alpha is given by the order in which it
// visits the vertices together with a crossing sign per vertex; alpha edge j
// runs from alpha_walk[j] to alpha_walk[j+1].
//
// Edge ids: alpha edges are 0..k-1, beta edges are k..2k-1.
// Darts: 2*e is the tail end of edge e, 2*e+1 the head end.  The rotation
// (counterclockwise dart order around each vertex) is determined by the
// crossing sign, faces are the orbits of phi(d) = rot_prev(other_end(d)),
// and the face containing a tail dart lies on the Left of that edge.
class FillingPairComplex {
public:
    struct WalkEntry {
        int vertex = 0;  // 0-based
        int sign = +1;   // +1 or -1, crossing orientation of alpha over beta
    };

    static FillingPairComplex build_from_gluing(int k, const std::vector<WalkEntry>& alpha_walk);

    int k() const { return k_; }
    int genus() const { return genus_; }
    int chi() const { return k_ - 2 * k_ + face_count(); }
    int vertex_count() const { return k_; }
    int edge_count() const { return 2 * k_; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<int>& alpha_walk() const { return walk_; }
    int sign_at(int vertex) const { return sign_[vertex]; }
    std::string name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    // ---- edges and darts ----
    bool is_alpha_edge(int e) const { return e < k_; }
    int alpha_edge(int j) const { return j; }            // alpha_walk[j] -> alpha_walk[j+1]
    int beta_edge(int i) const { return k_ + i; }        // vertex i -> i+1
    int edge_tail(int e) const;
    int edge_head(int e) const;
    static int dart(int e, bool head) { return 2 * e + (head ? 1 : 0); }
    static int dart_edge(int d) { return d / 2; }
    static bool dart_is_head(int d) { return d & 1; }
    static int other_end(int d) { return d ^ 1; }
    int dart_vertex(int d) const { return dart_is_head(d) ? edge_head(dart_edge(d)) : edge_tail(dart_edge(d)); }

    // per-vertex edge ends
    int alpha_out(int v) const { return dart(walk_pos_[v], false); }
    int alpha_in(int v) const { return dart((walk_pos_[v] + k_ - 1) % k_, true); }
    int beta_out(int v) const { return dart(k_ + v, false); }
    int beta_in(int v) const { return dart(k_ + (v + k_ - 1) % k_, true); }

    int rot_next(int d) const { return rot_next_[d]; }  // counterclockwise
    int rot_prev(int d) const { return rot_prev_[d]; }

    // ---- faces ----
    const std::vector<std::vector<int>>& faces() const { return faces_; }  // dart orbits
    int face_of_dart(int d) const { return face_of_dart_[d]; }
    int pos_in_face(int d) const { return pos_in_face_[d]; }
    int face_size(int f) const { return static_cast<int>(faces_[f].size()); }
    int face_side(int e, Side s) const { return face_of_dart_[dart(e, s == Side::Right)]; }

    // Side of edge(d) on which the corner (d, rot_next(d)) lies.
    static Side corner_side_of_first(int d) { return dart_is_head(d) ? Side::Right : Side::Left; }
    // Side of edge(rot_next(d)) on which the corner (d, rot_next(d)) lies.
    static Side corner_side_of_second(int d2) { return dart_is_head(d2) ? Side::Left : Side::Right; }
    // Face containing the corner (d, rot_next(d)).
    int corner_face(int d) const { return face_of_dart_[d]; }

    // The side of beta on which the top buckets live: alpha's strand at
    // vertex 0 crosses from the plus side to the minus side.
    Side beta_plus_side() const { return beta_plus_; }
    // The side of alpha analogous to the above, fixed by the same convention
    // (beta's strand at alpha's first walk vertex goes plus -> minus).
    Side alpha_plus_side() const { return alpha_plus_; }

    // alpha end on a given side of beta at vertex v (in or out dart)
    int alpha_end_on_beta_side(int v, Side side_of_beta) const;
    // beta end on a given side of alpha at vertex v
    int beta_end_on_alpha_side(int v, Side side_of_alpha) const;

    // ---- queries ----
    std::map<int, int> face_census() const;  // face size (2n) -> count
    bool has_hexagons() const;

    // Re-checks all structural invariants; returns human-readable violations
    // (empty iff valid).  Never throws.
    std::vector<std::string> validate() const;

private:
    int k_ = 0;
    std::string name_ = "surface";
    std::vector<int> walk_;      // vertex visited at walk position j
    std::vector<int> walk_pos_;  // inverse of walk_
    std::vector<int> sign_;      // per vertex
    std::vector<int> rot_next_, rot_prev_;
    std::vector<std::vector<int>> faces_;
    std::vector<int> face_of_dart_, pos_in_face_;
    int genus_ = 0;
    Side beta_plus_ = Side::Left;
    Side alpha_plus_ = Side::Left;

    void compute_rotation();
    void compute_faces();
    void compute_plus_sides();
};

} // namespace fillpair
