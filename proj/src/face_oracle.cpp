#include "hyperfv/face_oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

namespace hyperfv::oracle {

namespace {

constexpr int kDefaultGuard = 8;
constexpr int kHardLimit = 63; // vertices are stored as 64-bit coordinate masks

void require_spec(int n, int k) {
    if (n < 1 || k < 1 || k > n || n > kHardLimit) {
        throw std::invalid_argument("face oracle requires 1 <= k <= n <= " +
                                    std::to_string(kHardLimit) + ", got n=" +
                                    std::to_string(n) + " k=" + std::to_string(k));
    }
}

void require_within_guard(int n, int k) {
    require_spec(n, k);
    int guard = size_guard();
    if (n > guard) {
        throw ResourceLimitError("face lattice for n=" + std::to_string(n) +
                                 " exceeds the size guard (" + std::to_string(guard) +
                                 "); set HYPERFV_MAX_N to raise it");
    }
}

// Masks of fixed popcount c in increasing numeric order (Gosper's hack).
void append_level_masks(int n, int c, std::vector<std::uint64_t>& out) {
    if (c < 0 || c > n) return;
    if (c == 0) {
        out.push_back(0);
        return;
    }
    std::uint64_t limit = (n == 63) ? ~0ull : ((1ull << n) - 1);
    std::uint64_t m = (1ull << c) - 1;
    while (m <= limit) {
        out.push_back(m);
        std::uint64_t lowest = m & (~m + 1);
        std::uint64_t ripple = m + lowest;
        std::uint64_t ones = ((m ^ ripple) >> 2) / lowest;
        if (ripple > limit || ripple < m) break;
        m = ripple | ones;
    }
}

// The saturating vertex sets of the 2n+2 supporting constraints:
// x_i = 0 and x_i = 1 for each coordinate, sum = k, and sum = k-1.
std::vector<VertexSet> constraint_sets(int n, int k, const std::vector<Vertex>& verts) {
    const std::size_t nv = verts.size();
    std::vector<VertexSet> gens;
    gens.reserve(2 * static_cast<std::size_t>(n) + 2);
    for (int i = 0; i < n; ++i) {
        VertexSet zero(nv), one(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            if (verts[v].bits & (1ull << i)) one.set(v); else zero.set(v);
        }
        gens.push_back(std::move(zero));
        gens.push_back(std::move(one));
    }
    VertexSet upper(nv), lower(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        if (verts[v].level == k) upper.set(v);
        if (verts[v].level == k - 1) lower.set(v);
    }
    gens.push_back(std::move(upper));
    gens.push_back(std::move(lower));
    return gens;
}

// Exact affine dimension of a face from its vertex coordinates.
int face_dimension(const VertexSet& face, const std::vector<Vertex>& verts, int n) {
    std::vector<std::vector<Integer>> pts;
    pts.reserve(face.count());
    for (std::size_t v = face.find_first(); v != VertexSet::npos; v = face.find_next(v)) {
        std::vector<Integer> p(n);
        for (int i = 0; i < n; ++i) p[i] = (verts[v].bits >> i) & 1;
        pts.push_back(std::move(p));
    }
    return affine_dimension(pts);
}

std::vector<Face> finalize(std::set<VertexSet>&& seen, const std::vector<Vertex>& verts,
                           int n, bool parallel) {
    std::vector<Face> faces;
    faces.reserve(seen.size());
    for (auto& vs : seen) faces.push_back(Face{vs, -1});
    seen.clear();
    const std::int64_t count = static_cast<std::int64_t>(faces.size());
    // Dimension is computed once per face; faces are independent.
    #pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::int64_t i = 0; i < count; ++i) {
        faces[i].dim = face_dimension(faces[i].vertices, verts, n);
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertices < b.vertices;
    });
    return faces;
}

} // namespace

int size_guard() {
    if (const char* env = std::getenv("HYPERFV_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= kHardLimit) {
            return static_cast<int>(v);
        }
    }
    return kDefaultGuard;
}

std::vector<Vertex> enumerate_vertices(int n, int k) {
    require_spec(n, k);
    std::vector<std::uint64_t> lower_masks, upper_masks;
    append_level_masks(n, k - 1, lower_masks);
    append_level_masks(n, k, upper_masks);
    std::vector<std::uint64_t> masks;
    masks.reserve(lower_masks.size() + upper_masks.size());
    std::merge(lower_masks.begin(), lower_masks.end(), upper_masks.begin(), upper_masks.end(),
               std::back_inserter(masks));
    std::vector<Vertex> verts;
    verts.reserve(masks.size());
    for (auto m : masks) {
        verts.push_back(Vertex{m, static_cast<int>(__builtin_popcountll(m))});
    }
    return verts;
}

std::vector<Face> face_lattice(int n, int k) {
    require_within_guard(n, k);
    const auto verts = enumerate_vertices(n, k);
    const auto gens = constraint_sets(n, k, verts);
    VertexSet full(verts.size());
    full.set();

    std::set<VertexSet> seen;
    seen.insert(full);
    std::vector<VertexSet> frontier{full};

    // Round-based fixpoint: intersect the whole frontier with every
    // generator in parallel, then merge serially.
    const int nthreads = omp_get_max_threads();
    while (!frontier.empty()) {
        std::vector<std::vector<VertexSet>> buckets(nthreads);
        const std::int64_t work = static_cast<std::int64_t>(frontier.size() * gens.size());
        #pragma omp parallel for schedule(static)
        for (std::int64_t w = 0; w < work; ++w) {
            const VertexSet& f = frontier[static_cast<std::size_t>(w) / gens.size()];
            const VertexSet& g = gens[static_cast<std::size_t>(w) % gens.size()];
            VertexSet h = f & g;
            if (h.any() && h != f) {
                buckets[omp_get_thread_num()].push_back(std::move(h));
            }
        }
        std::vector<VertexSet> next;
        for (auto& bucket : buckets) {
            for (auto& h : bucket) {
                if (seen.insert(h).second) next.push_back(std::move(h));
            }
        }
        frontier = std::move(next);
    }
    return finalize(std::move(seen), verts, n, /*parallel=*/true);
}

std::vector<Face> face_lattice_serial(int n, int k) {
    require_within_guard(n, k);
    const auto verts = enumerate_vertices(n, k);
    const auto gens = constraint_sets(n, k, verts);
    VertexSet full(verts.size());
    full.set();

    std::set<VertexSet> seen;
    std::deque<VertexSet> work;
    seen.insert(full);
    work.push_back(full);
    while (!work.empty()) {
        VertexSet f = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            VertexSet h = f & g;
            if (h.any() && seen.insert(h).second) work.push_back(std::move(h));
        }
    }
    return finalize(std::move(seen), verts, n, /*parallel=*/false);
}

FVector f_vector_closed_oracle(int n, int k) {
    FVector fv(static_cast<std::size_t>(n) + 1, Integer(0));
    for (const auto& face : face_lattice(n, k)) fv[face.dim] += 1;
    return fv;
}

FVector f_vector_half_open_oracle(int n, int k) {
    const auto verts = enumerate_vertices(n, k);
    VertexSet removed_plane(verts.size());
    for (std::size_t v = 0; v < verts.size(); ++v) {
        if (verts[v].level == k - 1) removed_plane.set(v);
    }
    FVector fv(static_cast<std::size_t>(n) + 1, Integer(0));
    for (const auto& face : face_lattice(n, k)) {
        if (!face.vertices.is_subset_of(removed_plane)) fv[face.dim] += 1;
    }
    return fv;
}

FVector cube_decomposition_f(int n) {
    if (n < 1) throw std::invalid_argument("cube_decomposition_f requires n >= 1");
    FVector total(static_cast<std::size_t>(n) + 1, Integer(0));
    for (int k = 1; k <= n; ++k) {
        FVector cell = f_vector_half_open_oracle(n, k);
        for (std::size_t j = 0; j < total.size(); ++j) total[j] += cell[j];
    }
    return total;
}

} // namespace hyperfv::oracle
