#pragma once

#include "hyperfv/exact.hpp"
#include "hyperfv/hypersimplex.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <vector>

namespace hyperfv::oracle {

/// A 0/1 point of the ambient cube: bit i-1 of `bits` is coordinate x_i.
struct Vertex {
    std::uint64_t bits = 0;
    int level = 0; // coordinate sum
};

/// Set of vertex indices into the vertex list of one polytope instance.
using VertexSet = boost::dynamic_bitset<>;

/// A face, keyed by its (canonical) vertex set, with its exact affine
/// dimension attached.
struct Face {
    VertexSet vertices;
    int dim = 0;

    friend bool operator==(const Face&, const Face&) = default;
};

/// Size guard for the brute-force lattice enumeration. Defaults to 8;
/// the HYPERFV_MAX_N environment variable overrides it.
int size_guard();

/// The 0/1 vectors with coordinate sum k-1 or k, in increasing order of the
/// binary encoding with x_1 as the lowest bit. Count = C(n,k) + C(n,k-1).
std::vector<Vertex> enumerate_vertices(int n, int k);

/// All non-empty faces of the closed hypersimplex, as the closure under
/// pairwise intersection of the 2n+2 supporting-constraint vertex sets
/// together with the full vertex set. Sorted by (dim, vertex set), so the
/// output is deterministic. Inner loops run under OpenMP.
/// Throws ResourceLimitError when n exceeds size_guard().
std::vector<Face> face_lattice(int n, int k);

/// Single-threaded worklist version of face_lattice, kept as the reference
/// implementation for testing and benchmarking the parallel one.
std::vector<Face> face_lattice_serial(int n, int k);

/// Tabulates face_lattice by dimension.
FVector f_vector_closed_oracle(int n, int k);

/// Half-open counts: a face of the closed polytope survives iff its vertex
/// set is not entirely at level k-1 (i.e. it is not contained in the removed
/// hyperplane).
FVector f_vector_half_open_oracle(int n, int k);

/// Entry j = sum over k of f_vector_half_open_oracle(n, k)[j]: the face
/// counts of the decomposition of the unit cube into the n half-open cells.
FVector cube_decomposition_f(int n);

} // namespace hyperfv::oracle
