#include "lghodge/face_lattice.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace lghodge {

namespace {

bool is_subset(const std::vector<std::size_t> &small, const std::vector<std::size_t> &big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace

FaceLattice::FaceLattice(LatticePolytope polytope) : polytope_(std::move(polytope)) {
    const auto &verts = polytope_.vertices();
    const auto &facets = polytope_.facets();

    std::vector<std::vector<std::size_t>> vertex_facets(verts.size());
    std::vector<std::vector<std::size_t>> facet_vertices(facets.size());
    for (std::size_t v = 0; v < verts.size(); ++v)
        for (std::size_t f = 0; f < facets.size(); ++f)
            if (facets[f].on_boundary(verts[v])) {
                vertex_facets[v].push_back(f);
                facet_vertices[f].push_back(v);
            }

    for (std::size_t v = 0; v < verts.size(); ++v)
        faces_[0].push_back(Face{0, {v}, vertex_facets[v], 0, 0});

    for (std::size_t f1 = 0; f1 < facets.size(); ++f1) {
        for (std::size_t f2 = f1 + 1; f2 < facets.size(); ++f2) {
            std::vector<std::size_t> common;
            std::set_intersection(facet_vertices[f1].begin(), facet_vertices[f1].end(), facet_vertices[f2].begin(),
                                  facet_vertices[f2].end(), std::back_inserter(common));
            if (common.size() < 2) continue;
            if (common.size() > 2) throw std::logic_error("FaceLattice: two facets share more than an edge");
            faces_[1].push_back(Face{1, common, {f1, f2}, 0, 0});
        }
    }
    std::sort(faces_[1].begin(), faces_[1].end(),
              [](const Face &a, const Face &b) { return a.vertex_ids < b.vertex_ids; });

    for (std::size_t f = 0; f < facets.size(); ++f)
        faces_[2].push_back(Face{2, facet_vertices[f], {f}, 0, 0});

    point_facets_.reserve(polytope_.lattice_points().size());
    for (const auto &p : polytope_.lattice_points()) {
        std::vector<std::size_t> through;
        for (std::size_t f = 0; f < facets.size(); ++f)
            if (facets[f].on_boundary(p)) through.push_back(f);
        point_facets_.push_back(std::move(through));
    }

    for (auto &group : faces_) {
        for (auto &face : group) {
            for (const auto &through : point_facets_) {
                if (!is_subset(face.facet_ids, through)) continue;
                ++face.lattice_point_count;
                if (through == face.facet_ids) ++face.interior_point_count;
            }
        }
    }

    for (int d = 0; d < 2; ++d) {
        auto &table = cofaces_[static_cast<std::size_t>(d)];
        const auto &lower = faces_[static_cast<std::size_t>(d)];
        const auto &upper = faces_[static_cast<std::size_t>(d + 1)];
        table.resize(lower.size());
        for (std::size_t i = 0; i < lower.size(); ++i)
            for (std::size_t j = 0; j < upper.size(); ++j)
                if (is_subset(lower[i].vertex_ids, upper[j].vertex_ids)) table[i].push_back(j);
    }
}

const std::vector<std::size_t> &FaceLattice::cofaces(int dim, std::size_t index) const {
    if (dim < 0 || dim > 1) throw std::out_of_range("FaceLattice::cofaces: dim must be 0 or 1");
    return cofaces_[static_cast<std::size_t>(dim)].at(index);
}

const Face *FaceLattice::find(int dim, const std::vector<std::size_t> &vertex_ids) const {
    if (dim < 0 || dim > 2) return nullptr;
    for (const auto &face : faces_[static_cast<std::size_t>(dim)])
        if (face.vertex_ids == vertex_ids) return &face;
    return nullptr;
}

std::vector<std::size_t> FaceLattice::facets_through(const Point3 &x) const {
    std::vector<std::size_t> out;
    const auto &facets = polytope_.facets();
    for (std::size_t f = 0; f < facets.size(); ++f)
        if (facets[f].on_boundary(x)) out.push_back(f);
    return out;
}

std::vector<Point3> FaceLattice::boundary_points() const {
    std::vector<Point3> out;
    const auto &pts = polytope_.lattice_points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!point_facets_[i].empty()) out.push_back(pts[i]);
    return out;
}

std::vector<Point3> FaceLattice::points_of(const Face &face) const {
    std::vector<Point3> out;
    const auto &pts = polytope_.lattice_points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (is_subset(face.facet_ids, point_facets_[i])) out.push_back(pts[i]);
    return out;
}

std::vector<Point3> FaceLattice::interior_points_of(const Face &face) const {
    std::vector<Point3> out;
    const auto &pts = polytope_.lattice_points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (point_facets_[i] == face.facet_ids) out.push_back(pts[i]);
    return out;
}

std::int64_t FaceLattice::euler_characteristic() const {
    return static_cast<std::int64_t>(faces_[0].size()) - static_cast<std::int64_t>(faces_[1].size()) +
           static_cast<std::int64_t>(faces_[2].size());
}

FaceLattice enumerate_faces(const LatticePolytope &polytope) {
    if (!is_reflexive(polytope)) throw Error(ErrorCode::NotReflexive, "face enumeration requires a reflexive polytope");
    return FaceLattice(polytope);
}

DualPair::DualPair(const LatticePolytope &primal)
    : DualPair(std::make_shared<const FaceLattice>(enumerate_faces(primal)),
               std::make_shared<const FaceLattice>(enumerate_faces(polar_dual(primal)))) {}

DualPair::DualPair(const LatticePolytope &primal, const LatticePolytope &dual)
    : DualPair([&] {
          if (!is_reflexive(primal)) throw Error(ErrorCode::NotReflexive, "primal polytope is not reflexive");
          if (!(polar_dual(primal) == dual)) throw Error(ErrorCode::InvalidPair, "second polytope is not the polar dual");
          return DualPair(primal);
      }()) {}

const Face &dual_face(const DualPair &pair, const Face &face) {
    const auto &dual_vertices = pair.dual().vertices();
    const auto &primal_vertices = pair.primal().vertices();
    if (face.dim < 0 || face.dim > 2 || face.vertex_ids.empty())
        throw Error(ErrorCode::InvalidPair, "not a proper face of the dual polytope");
    for (std::size_t id : face.vertex_ids)
        if (id >= dual_vertices.size()) throw Error(ErrorCode::InvalidPair, "face vertex index out of range");
    const Face *own = pair.dual_faces().find(face.dim, face.vertex_ids);
    if (own == nullptr || !(*own == face))
        throw Error(ErrorCode::InvalidPair, "face does not belong to the dual polytope of this pair");

    std::vector<std::size_t> ids;
    for (std::size_t s = 0; s < primal_vertices.size(); ++s) {
        const bool on_all = std::all_of(face.vertex_ids.begin(), face.vertex_ids.end(), [&](std::size_t v) {
            return dot(dual_vertices[v], primal_vertices[s]) == -1;
        });
        if (on_all) ids.push_back(s);
    }
    const Face *found = pair.primal_faces().find(2 - face.dim, ids);
    if (found == nullptr) throw Error(ErrorCode::InvalidPair, "face does not belong to the dual polytope of this pair");
    return *found;
}

const Face &minimal_face_containing(const FaceLattice &lattice, const Point3 &x) {
    if (!lattice.polytope().contains(x)) throw Error(ErrorCode::NotOnBoundary, "point lies outside the polytope");
    const auto through = lattice.facets_through(x);
    if (through.empty()) throw Error(ErrorCode::NotOnBoundary, "point lies in the interior");
    if (through.size() == 1) return lattice.facets()[through.front()];
    const auto &verts = lattice.polytope().vertices();
    const auto &facets = lattice.polytope().facets();
    std::vector<std::size_t> ids;
    for (std::size_t v = 0; v < verts.size(); ++v)
        if (std::all_of(through.begin(), through.end(), [&](std::size_t f) { return facets[f].on_boundary(verts[v]); }))
            ids.push_back(v);
    const Face *found = lattice.find(ids.size() == 1 ? 0 : 1, ids);
    if (found == nullptr) throw std::logic_error("minimal_face_containing: face not in lattice");
    return *found;
}

Face minimal_face_containing(const LatticePolytope &polytope, const Point3 &x) {
    return minimal_face_containing(FaceLattice(polytope), x);
}

} // namespace lghodge
