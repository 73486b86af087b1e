#pragma once

#include <cstdint>
#include <random>

#include "qrec/recollement.hpp"
#include "qrec/report.hpp"

namespace qrec {

struct AxiomOptions {
  std::size_t samples = 50;
  std::uint64_t seed = 42;
  std::size_t max_dim = 2;  // per-vertex dimension of sampled objects
};

/// Per-check tallies; a failure keeps a printable counterexample.
struct AxiomReport : CheckList {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Checks on sampled objects and morphisms:
///   adjoint pairs (Hom dimensions), full faithfulness of i_*, j_!, j_*,
///   the isomorphisms i^*i_*, i^!i_*, j^*j_!, j^*j_* ~ id via units/counits,
///   j^*i_* = 0 and Ker j^* = Im i_* (support),
///   exactness of 0 -> i_*i^!M -> M -> j_*j^*M and j_!j^*M -> M -> i_*i^*M -> 0
///   with outer terms supported on the i-side,
///   functoriality, naturality of units/counits,
///   i^*j_!* = 0, i^!j_!* = 0, j^*j_!* ~ id.
/// Exceptions raised inside a check count as failures of that check.
AxiomReport verify_axioms(const Recollement& r, const AxiomOptions& opts = {});

/// Uniformly random representation with each vertex dimension in [0, max_dim].
Rep random_rep(const QuiverPtr& q, Prime p, std::mt19937_64& rng, std::size_t max_dim);

/// Random linear combination of a Hom basis (the zero map when Hom = 0).
RepMor random_morphism(const Rep& m, const Rep& n, std::mt19937_64& rng);

/// Random acyclic quiver on 2..max_vertices vertices with a split whose
/// crossing arrows all point the same way (at least one of them). Vertices
/// are labelled v0, v1, ...; parallel arrows may occur.
RecollementPtr random_split(std::mt19937_64& rng, std::size_t max_vertices, Prime p);

}  // namespace qrec
