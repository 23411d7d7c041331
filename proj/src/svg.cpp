#include "tropifacet/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

namespace tropifacet {

namespace {

using PlanePoint = CellComplex::PlanePoint;

PointRat to_projective(const PlanePoint& q) {
    return PointRat({Rat(0), q[0], q[1]});
}

PlanePoint to_plane(const PointRat& p) { return {p[1], p[2]}; }

std::vector<Rat> sorted_unique(std::vector<Rat> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

std::vector<Rat> midpoints(const std::vector<Rat>& xs) {
    std::vector<Rat> out;
    for (size_t i = 0; i + 1 < xs.size(); ++i) out.push_back((xs[i] + xs[i + 1]) / 2);
    return out;
}

struct TypeLess {
    bool operator()(const TypeVector& a, const TypeVector& b) const {
        std::vector<std::uint64_t> ma, mb;
        for (auto s : a.sets) ma.push_back(s.mask());
        for (auto s : b.sets) mb.push_back(s.mask());
        return ma < mb;
    }
};

bool is_bounded(const TypeVector& S) {
    for (auto s : S.sets)
        if (s.empty()) return false;
    return true;
}

// Counterclockwise order around the (interior) centroid, by exact
// half-plane classification and cross products.
void sort_convex_ccw(std::vector<PlanePoint>& pts) {
    Rat cy(0), cz(0);
    for (const auto& p : pts) {
        cy += p[0];
        cz += p[1];
    }
    const Rat k(static_cast<long long>(pts.size()));
    cy /= k;
    cz /= k;
    auto lower_half = [&](const PlanePoint& p) {
        const Rat dz = p[1] - cz;
        return dz < 0 || (dz == 0 && p[0] - cy < 0);
    };
    std::sort(pts.begin(), pts.end(), [&](const PlanePoint& a, const PlanePoint& b) {
        const bool ha = lower_half(a), hb = lower_half(b);
        if (ha != hb) return !ha;  // upper half first
        const Rat cross = (a[0] - cy) * (b[1] - cz) - (a[1] - cz) * (b[0] - cy);
        return cross > 0;
    });
}

}  // namespace

CellComplex enumerate_plane_cells(const PolytopeRat& P, const Budget& budget) {
    if (P.dimension() != 3)
        throw DimensionError("cell enumeration in the plane needs dimension 3");
    const int p = P.generator_count();

    CellComplex out;
    const auto pseudovertices = enumerate_pseudovertices(P, budget);
    std::map<TypeVector, PlanePoint, TypeLess> vertex_of_type;
    for (const auto& v : pseudovertices) {
        out.vertices.push_back(to_plane(v));
        vertex_of_type.emplace(type_of(P, v), to_plane(v));
    }

    // The decomposition's skeleton lies on the lines y = A_r, z = B_r and
    // z - y = C_r induced by the generators.
    std::vector<Rat> A, B, C;
    for (int r = 0; r < p; ++r) {
        A.push_back(P.generator(r)[1]);
        B.push_back(P.generator(r)[2]);
        C.push_back(P.generator(r)[2] - P.generator(r)[1]);
    }
    const auto ymin = *std::min_element(A.begin(), A.end());
    const auto ymax = *std::max_element(A.begin(), A.end());

    // Breakpoints of the z-order along a vertical line at y.
    auto z_breaks = [&](const Rat& y) {
        std::vector<Rat> zs = B;
        for (const auto& c : C) zs.push_back(y + c);
        return sorted_unique(std::move(zs));
    };

    std::set<TypeVector, TypeLess> face_types, edge_types;
    auto classify = [&](const Rat& y, const Rat& z) {
        const TypeVector S = type_of(P, to_projective({y, z}));
        if (!is_bounded(S)) return;
        const int d = cell_dimension(S);
        if (d == 2) face_types.insert(S);
        if (d == 1) edge_types.insert(S);
    };

    // Faces: vertical decomposition of the arrangement. Strip abscissas are
    // generator verticals plus horizontal/diagonal crossings.
    std::vector<Rat> ybreaks = A;
    for (const auto& b : B)
        for (const auto& c : C) ybreaks.push_back(b - c);
    ybreaks = sorted_unique(std::move(ybreaks));
    std::erase_if(ybreaks, [&](const Rat& y) { return y < ymin || y > ymax; });
    for (const auto& ym : midpoints(ybreaks))
        for (const auto& zm : midpoints(z_breaks(ym))) classify(ym, zm);

    // Edges on vertical lines.
    for (const auto& a : sorted_unique(A))
        for (const auto& zm : midpoints(z_breaks(a))) classify(a, zm);
    // Edges on horizontal lines: crossings with verticals and diagonals.
    for (const auto& b : sorted_unique(B)) {
        std::vector<Rat> ys = A;
        for (const auto& c : C) ys.push_back(b - c);
        for (const auto& ym : midpoints(sorted_unique(std::move(ys)))) classify(ym, b);
    }
    // Edges on diagonals z = y + c.
    for (const auto& c : sorted_unique(C)) {
        std::vector<Rat> ys = A;
        for (const auto& b : B) ys.push_back(b - c);
        for (const auto& ym : midpoints(sorted_unique(std::move(ys)))) classify(ym, ym + c);
    }

    for (const auto& S : edge_types) {
        std::vector<PlanePoint> ends;
        for (const auto& [T, q] : vertex_of_type)
            if (S.subset_of(T)) ends.push_back(q);
        if (ends.size() != 2)
            throw InternalError("bounded 1-cell without exactly two endpoints");
        out.edges.push_back({S, {ends[0], ends[1]}});
    }
    for (const auto& S : face_types) {
        std::vector<PlanePoint> corners;
        for (const auto& [T, q] : vertex_of_type)
            if (S.subset_of(T)) corners.push_back(q);
        if (corners.size() < 3) throw InternalError("bounded 2-cell with fewer than three corners");
        sort_convex_ccw(corners);
        out.faces.push_back({S, std::move(corners)});
    }
    return out;
}

namespace {

double approx(const Rat& r) { return static_cast<double>(r); }

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

struct Frame {
    double ox, oy, scale, height;
    std::string x(const Rat& y) const { return num((approx(y) - ox) * scale); }
    std::string y(const Rat& z) const { return num(height - (approx(z) - oy) * scale); }
    std::string at(const Rat& py, const Rat& pz) const { return x(py) + "," + y(pz); }
};

}  // namespace

std::string render_svg(const PolytopeRat& P, const SvgOptions& options, const Budget& budget) {
    const CellComplex cells = enumerate_plane_cells(P, budget);

    Rat ymin = P.generator(0)[1], ymax = ymin, zmin = P.generator(0)[2], zmax = zmin;
    for (const auto& g : P.generators()) {
        ymin = std::min(ymin, g[1]);
        ymax = std::max(ymax, g[1]);
        zmin = std::min(zmin, g[2]);
        zmax = std::max(zmax, g[2]);
    }
    const double margin = 1.5, scale = 40.0;
    Frame f;
    f.ox = approx(ymin) - margin;
    f.oy = approx(zmin) - margin;
    const double w = (approx(ymax) + margin - f.ox) * scale;
    f.height = (approx(zmax) + margin - f.oy) * scale;
    f.scale = scale;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(w) +
           "\" height=\"" + num(f.height) + "\" viewBox=\"0 0 " + num(w) + " " + num(f.height) +
           "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const auto& face : cells.faces) {
        svg += "<polygon points=\"";
        for (size_t i = 0; i < face.polygon.size(); ++i)
            svg += (i ? " " : "") + f.at(face.polygon[i][0], face.polygon[i][1]);
        svg += "\" fill=\"#d3d3d3\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& e : cells.edges)
        svg += "<polyline points=\"" + f.at(e.segment[0][0], e.segment[0][1]) + " " +
               f.at(e.segment[1][0], e.segment[1][1]) +
               "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"2.5\"/>\n";

    if (options.halfspaces && is_pure(P)) {
        const long long reach = static_cast<long long>((w + f.height) / scale) + 2;
        for (const auto& H : canonical_representation(P, budget)) {
            // The boundary consists of the two rays bounding the singleton
            // side of the half-space.
            const int k = H.indices().size() == 1 ? H.indices().to_vector()[0]
                                                  : complement(H.indices(), 3).to_vector()[0];
            const Rat ay = H.apex()[1], az = H.apex()[2];
            const std::array<std::array<int, 2>, 2> dirs =
                k == 0   ? std::array<std::array<int, 2>, 2>{{{-1, 0}, {0, -1}}}
                : k == 1 ? std::array<std::array<int, 2>, 2>{{{0, -1}, {1, 1}}}
                         : std::array<std::array<int, 2>, 2>{{{-1, 0}, {1, 1}}};
            for (const auto& d : dirs) {
                const Rat ey = ay + Rat(reach * d[0]);
                const Rat ez = az + Rat(reach * d[1]);
                svg += "<polyline points=\"" + f.at(ay, az) + " " + f.at(ey, ez) +
                       "\" fill=\"none\" stroke=\"#2e8b57\" stroke-width=\"1.5\" "
                       "stroke-dasharray=\"7,4\"/>\n";
            }
        }
    }

    for (const auto& q : cells.vertices)
        svg += "<circle cx=\"" + f.x(q[0]) + "\" cy=\"" + f.y(q[1]) +
               "\" r=\"3.5\" fill=\"#c24a4a\"/>\n";
    for (int r = 0; r < P.generator_count(); ++r) {
        const auto& g = P.generator(r);
        svg += "<circle cx=\"" + f.x(g[1]) + "\" cy=\"" + f.y(g[2]) +
               "\" r=\"4.5\" fill=\"#4a6fc2\"/>\n";
        svg += "<text x=\"" + f.x(g[1]) + "\" y=\"" + f.y(g[2]) +
               "\" dx=\"7\" dy=\"-6\" font-size=\"13\" fill=\"#24407e\">v" + std::to_string(r + 1) +
               "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace tropifacet
