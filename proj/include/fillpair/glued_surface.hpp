#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fillpair {

// A compact combinatorial surface: polygonal faces glued along shared
// segments.  A segment appearing on exactly two face sides is interior and
// the two sides are identified; a segment appearing once is a boundary
// segment.  Orientation convention: all face boundaries are listed with the
// same handedness, so an orientable gluing pairs sides that traverse their
// segment in opposite directions.
//
// This is the workhorse behind complex validation and the region engine:
// it answers Euler characteristic, boundary structure and connectivity
// questions for anything that can be cut into polygons.
class GluedSurface {
public:
    struct Side {
        int64_t segment = 0;
        bool forward = true;
    };

    // face -> cyclic side list, in boundary order
    std::vector<std::vector<Side>> faces;

    void add_face(std::vector<Side> sides) { faces.push_back(std::move(sides)); }

    // Runs the gluing analysis. Requires every segment to occur once or twice.
    void analyze();

    bool analyzed() const { return analyzed_; }
    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return edge_count_; }
    int face_count() const { return static_cast<int>(faces.size()); }
    int chi() const { return vertex_count_ - edge_count_ + face_count(); }
    int component_count() const { return component_count_; }
    bool orientable_gluing() const { return orientable_; }

    // Each boundary cycle is a cyclic list of (face, position) sides walked
    // head-to-tail along the boundary of the glued surface.
    const std::vector<std::vector<std::pair<int, int>>>& boundary_cycles() const {
        return boundary_cycles_;
    }

    // component index per face (0-based), valid after analyze()
    const std::vector<int>& face_component() const { return face_component_; }

private:
    bool analyzed_ = false;
    int vertex_count_ = 0;
    int edge_count_ = 0;
    int component_count_ = 0;
    bool orientable_ = true;
    std::vector<std::vector<std::pair<int, int>>> boundary_cycles_;
    std::vector<int> face_component_;
};

} // namespace fillpair
