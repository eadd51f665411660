#include "hbasis/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

#include "hbasis/errors.hpp"

namespace hbasis {

double euclidean_metric(std::span<const double> a, std::span<const double> b)
{
    double sq = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

double linf_metric(std::span<const double> a, std::span<const double> b)
{
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

DistanceEvaluator DistanceEvaluator::graph_distance(const SimplicialComplex& k)
{
    return DistanceEvaluator(DistanceKind::Graph, k, nullptr);
}

DistanceEvaluator DistanceEvaluator::function_distance(const SimplicialComplex& k,
                                                       PointMetric metric)
{
    if (!k.vertex_function())
        throw ValidateError("function distance requires a vertex_function");
    return DistanceEvaluator(DistanceKind::Function, k, std::move(metric));
}

double DistanceEvaluator::vertex_term(VertexId root, VertexId v) const
{
    const auto& f = *complex_->vertex_function();
    return metric_(f[static_cast<std::size_t>(root)], f[static_cast<std::size_t>(v)]);
}

double DistanceEvaluator::extend(VertexId root, double label, std::size_t edge, VertexId to) const
{
    if (kind_ == DistanceKind::Graph)
        return label + complex_->edges()[edge].weight;
    return std::max(label, vertex_term(root, to));
}

std::vector<std::size_t> ShortestPathTree::path_edges(VertexId v) const
{
    std::vector<std::size_t> out;
    while (parent[static_cast<std::size_t>(v)] != -1) {
        out.push_back(static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(v)]));
        v = parent[static_cast<std::size_t>(v)];
    }
    return out;
}

std::vector<VertexId> ShortestPathTree::path_vertices(VertexId v) const
{
    std::vector<VertexId> out{v};
    while (parent[static_cast<std::size_t>(v)] != -1) {
        v = parent[static_cast<std::size_t>(v)];
        out.push_back(v);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

VertexId ShortestPathTree::meet(VertexId u, VertexId v) const
{
    while (u != v) {
        if (hop_len[static_cast<std::size_t>(u)] >= hop_len[static_cast<std::size_t>(v)])
            u = parent[static_cast<std::size_t>(u)];
        else
            v = parent[static_cast<std::size_t>(v)];
    }
    return u;
}

std::vector<std::size_t> ShortestPathTree::path_between(VertexId u, VertexId v) const
{
    const VertexId m = meet(u, v);
    std::vector<std::size_t> out;
    for (VertexId x = u; x != m; x = parent[static_cast<std::size_t>(x)])
        out.push_back(static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(x)]));
    for (VertexId x = v; x != m; x = parent[static_cast<std::size_t>(x)])
        out.push_back(static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(x)]));
    return out;
}

namespace {

// min(vert(a) \ vert(b)) < min(vert(b) \ vert(a)) on sorted vertex lists;
// false when the sets coincide.
bool vertex_set_less(const std::vector<VertexId>& a, const std::vector<VertexId>& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else {
            return a[i] < b[j];
        }
    }
    return i < a.size();
}

} // namespace

ShortestPathTree build_spt(const DistanceEvaluator& d, VertexId root)
{
    const SimplicialComplex& k = d.complex();
    const std::size_t n = k.n_vertices();
    constexpr double kInf = std::numeric_limits<double>::infinity();

    ShortestPathTree tree;
    tree.root = root;
    tree.parent.assign(n, -1);
    tree.parent_edge.assign(n, -1);
    tree.dist.assign(n, kInf);
    tree.hop_len.assign(n, std::numeric_limits<int>::max());
    tree.depth.assign(n, 0);
    tree.order.reserve(n);

    // Sorted vertex set of the current best path to each vertex; kept
    // exact so ties resolve by the smallest differing vertex.
    std::vector<std::vector<VertexId>> path_verts(n);

    tree.dist[static_cast<std::size_t>(root)] = 0;
    tree.hop_len[static_cast<std::size_t>(root)] = 0;
    path_verts[static_cast<std::size_t>(root)] = {root};

    using QueueKey = std::tuple<double, int, VertexId>;
    std::priority_queue<QueueKey, std::vector<QueueKey>, std::greater<>> queue;
    queue.push({0.0, 0, root});
    std::vector<char> done(n, 0);

    while (!queue.empty()) {
        const auto [qd, qh, q] = queue.top();
        queue.pop();
        const auto qi = static_cast<std::size_t>(q);
        if (done[qi] || qd != tree.dist[qi] || qh != tree.hop_len[qi])
            continue;
        done[qi] = 1;
        tree.order.push_back(q);

        for (const auto& [w, e] : k.neighbors(q)) {
            const auto wi = static_cast<std::size_t>(w);
            if (done[wi])
                continue;
            const double nd = d.extend(root, tree.dist[qi], e, w);
            const int nh = tree.hop_len[qi] + 1;
            bool better = false;
            if (nd < tree.dist[wi] || (nd == tree.dist[wi] && nh < tree.hop_len[wi])) {
                better = true;
            } else if (nd == tree.dist[wi] && nh == tree.hop_len[wi]) {
                std::vector<VertexId> candidate = path_verts[qi];
                candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), w), w);
                better = vertex_set_less(candidate, path_verts[wi]);
            }
            if (better) {
                tree.dist[wi] = nd;
                tree.hop_len[wi] = nh;
                tree.parent[wi] = q;
                tree.parent_edge[wi] = static_cast<int>(e);
                tree.depth[wi] = tree.depth[qi] + k.edges()[e].weight;
                path_verts[wi] = path_verts[qi];
                path_verts[wi].insert(
                    std::upper_bound(path_verts[wi].begin(), path_verts[wi].end(), w), w);
                queue.push({nd, nh, w});
            }
        }
    }

    if (tree.order.size() != n)
        throw ValidateError("build_spt: 1-skeleton is not connected");
    return tree;
}

SubComplex ball(const ShortestPathTree& tree, double r, const SimplicialComplex& k)
{
    SubComplex sub;
    sub.vertices = BitVector(k.n_vertices());
    for (std::size_t v = 0; v < k.n_vertices(); ++v)
        if (tree.dist[v] <= r)
            sub.vertices.set(v);

    auto all_in = [&](const std::vector<VertexId>& verts) {
        for (VertexId v : verts)
            if (!sub.vertices.get(static_cast<std::size_t>(v)))
                return false;
        return true;
    };

    sub.edges = BitVector(k.n_edges());
    for (std::size_t e = 0; e < k.n_edges(); ++e)
        if (all_in({k.edges()[e].u, k.edges()[e].v}))
            sub.edges.set(e);
    sub.triangles = BitVector(k.n_triangles());
    for (std::size_t t = 0; t < k.n_triangles(); ++t) {
        const auto& tri = k.triangles()[t].v;
        if (all_in({tri[0], tri[1], tri[2]}))
            sub.triangles.set(t);
    }
    for (const auto& [dim, list] : k.higher_simplices()) {
        BitVector bits(list.size());
        for (std::size_t i = 0; i < list.size(); ++i)
            if (all_in(list[i]))
                bits.set(i);
        sub.higher.emplace(dim, std::move(bits));
    }
    return sub;
}

SubComplex ball(const DistanceEvaluator& d, VertexId p, double r, const SimplicialComplex& k)
{
    return ball(build_spt(d, p), r, k);
}

std::vector<std::vector<double>> all_pairs_distances(const DistanceEvaluator& d)
{
    const std::size_t n = d.complex().n_vertices();
    std::vector<std::vector<double>> table;
    table.reserve(n);
    for (std::size_t p = 0; p < n; ++p)
        table.push_back(build_spt(d, static_cast<VertexId>(p)).dist);
    return table;
}

} // namespace hbasis
