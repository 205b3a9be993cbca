#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plateau/errors.hpp"

namespace plateau {

using Vec3 = Eigen::Vector3d;

enum class LocalModel { P, Y, T, Boundary };

struct Triangle {
    std::array<int, 3> v{-1, -1, -1};
    int patch = -1;
};

// A maximal polyline of valence-3 edges.  Exactly three sheets (patches)
// are incident along the whole curve; sheet slots are sorted by patch id.
struct JunctionCurve {
    std::vector<int> verts;  // ordered; for closed curves the wrap edge verts.back()->verts.front() is implied
    bool closed = false;
    std::array<int, 3> patches{-1, -1, -1};
    std::array<int, 2> end_tpoint{-1, -1};  // t_points index at front/back ends, -1 = boundary endpoint
};

struct TPoint {
    int vertex = -1;
    std::array<int, 4> curves{-1, -1, -1, -1};  // incident junction curves, sorted
    // patch between curve slots (a,b), a<b, indexed by pair_slot(a,b)
    std::array<int, 6> pair_patch{-1, -1, -1, -1, -1, -1};

    static int pair_slot(int a, int b) {
        static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
        return table[a][b];
    }
};

// One scalar degree of freedom per (patch, vertex) incidence.  Junction
// vertices carry three dofs, T-points six, matching per-sheet fields.
struct Dof {
    int vertex = -1;
    int patch = -1;
};

struct PlateauComplex {
    std::vector<Vec3> vertices;
    std::vector<Triangle> triangles;
    int patch_count = 0;
    std::vector<std::string> patch_names;  // original labels from file (index = dense patch id)
    std::vector<int> normal_side;          // per patch, +1/-1 flag applied on top of propagated winding

    // filled by finalize()
    std::vector<uint8_t> flipped;  // per triangle: 1 if winding reversed to orient its patch
    std::vector<JunctionCurve> junction_curves;
    std::vector<TPoint> t_points;
    std::vector<std::vector<int>> boundary_loops;

    std::vector<uint8_t> vertex_on_boundary;  // touches a valence-1 edge
    std::vector<int> vertex_curve;            // junction curve index or -1 (T-points stay -1)
    std::vector<int> vertex_tpoint;           // index into t_points or -1
    std::vector<LocalModel> vertex_model;

    // artificial (truncation) boundary edges; by default every valence-1
    // edge, unless the file carries an explicit `extends` list
    std::vector<std::pair<int, int>> artificial_edges;

    // adjacency
    std::vector<std::vector<int>> vertex_triangles;  // incident triangle ids per vertex

    // dof table, sorted by (vertex, patch)
    std::vector<Dof> dofs;
    std::vector<int> vertex_dof_begin;              // size V+1
    std::vector<uint8_t> dof_on_boundary;           // dof's vertex touches artificial boundary
    std::map<std::pair<int, int>, int> dof_lookup;  // (patch, vertex) -> dof

    double tol_geom_override = -1.0;  // <0: use default 1e-8 * bbox diameter

    // --- geometry helpers -------------------------------------------------
    // oriented triangle corners (winding after patch orientation + normal_side)
    std::array<int, 3> oriented(int t) const;
    Vec3 tri_normal(int t) const;  // unit, oriented
    double tri_area(int t) const;
    Eigen::AlignedBox3d bounding_box() const;
    double bbox_diameter() const;
    double tol_geom() const;
    double mean_edge_length() const;
    double total_area() const;

    int dof_index(int patch, int vertex) const;           // -1 if absent
    int checked_dof(int patch, int vertex) const;         // throws StructureError if absent
    std::vector<int> vertex_dofs(int vertex) const;       // dof ids at a vertex
    std::vector<int> patch_triangles(int patch) const;    // triangle ids of a patch
    // triangles of `patch` incident to `vertex`
    std::vector<int> fan(int vertex, int patch) const;
    // distinct patches incident to a vertex (sorted)
    std::vector<int> vertex_patches(int vertex) const;

    bool finalized() const { return !vertex_dof_begin.empty(); }
};

// Structural report produced by validation; all counts/residuals the CLI prints.
struct StructureReport {
    int n_vertices = 0, n_triangles = 0, n_patches = 0;
    int n_junction_curves = 0, n_t_points = 0, n_boundary_loops = 0;
    int n_edges_interior = 0, n_edges_junction = 0, n_edges_boundary = 0;
    double max_sign_residual = 0.0;  // max over junction vertices of ||sum sign^i nu^i||
    double tol_geom = 0.0;
};

// Validates structure, infers labels, orients patches, traces junction
// curves / T-points / boundary loops and builds the dof table.  Throws
// StructureError / OrientabilityError.  Called by load_complex; call it
// directly on programmatically built complexes.
void finalize_complex(PlateauComplex& c);

StructureReport structure_report(const PlateauComplex& c);

LocalModel classify_local_model(const PlateauComplex& c, int vertex);

// --- sign assignment -------------------------------------------------------

// Per (junction curve, sheet slot) orientation sign: +1 iff the curve
// orientation agrees with the boundary orientation induced by the sheet and
// its unit normal.  Curve orientation is fixed deterministically by
// finalize_complex (lexicographically smallest endpoint first).
struct SignAssignment {
    std::vector<std::array<int, 3>> curve_signs;   // aligned with junction_curves
    std::vector<double> vertex_residual;           // per junction/T vertex id order of residual_vertices
    std::vector<int> residual_vertices;            // vertex ids the residuals refer to
    double max_residual = 0.0;                     // max || sum_i sign^i nu^i ||

    int sign(int curve, int patch, const PlateauComplex& c) const;
    // sign^{ij} at a T-point: the sign of sheet pair_patch(i,j) on curve slot j
    int tpoint_sign(const PlateauComplex& c, int tp, int i, int j) const;
};

SignAssignment assign_signs(const PlateauComplex& c);

// --- complement regions ------------------------------------------------------

struct RegionLabels {
    int count = 0;
    // per patch: region id seen from the +normal side / -normal side
    std::vector<std::array<int, 2>> patch_sides;
    Eigen::AlignedBox3d box;
    int grid = 0;
};

// Labels the connected components of box \ Sigma by flood fill on a
// background voxel grid and records which region each side of each patch
// faces.  Requires an embedded complex (checked).
RegionLabels complement_regions(const PlateauComplex& c, const Eigen::AlignedBox3d& box, int grid = 64);

// Embedding pre-check used by complement_regions; throws EmbeddingError.
void check_embedded(const PlateauComplex& c);

}  // namespace plateau
