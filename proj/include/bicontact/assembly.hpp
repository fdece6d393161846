#pragma once

// Gluing compatible plugs into closed models, the figure-eight family, the
// mixed-cover graph-manifold models, and classification of the resulting
// flows by boundary-slope invariants.

#include "bicontact/plug.hpp"

#include <string>
#include <vector>

namespace bct {

// Integer change of basis from one boundary torus to another. Determinant -1:
// orientation-reversing on the torus so the glued manifold is oriented.
struct GluingMap {
    H1Matrix matrix;

    Int det() const { return matrix.det(); }
    H1Class apply_to(const H1Class& v, const std::string& target_basis) const {
        H1Class w = matrix.apply(v);
        w.basis_tag = target_basis;
        return w;
    }
};

struct IncompatibleGluing : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Gluing {
    int from_piece;
    std::string from_boundary;
    int to_piece;
    std::string to_boundary;
    GluingMap map;
};

struct ModelPiece {
    Plug plug;
    std::string tag;  // topology tag entering the flow invariant
};

struct ClosedModel {
    std::vector<ModelPiece> pieces;
    std::vector<Gluing> gluings;
};

// Boundary tori are compatible when they carry the same number of tangent
// orbits.
bool compatible(const BoundaryTorus& b1, const BoundaryTorus& b2);

// Checks every boundary torus is matched exactly once and every gluing map
// has determinant -1, sends orbit classes to orbit classes and Reeb classes
// to Reeb classes (up to the per-torus sign ambiguity of the bases).
void validate_model(const ClosedModel& m);

// The collar gluing in bases ([w],[theta]): [w] -> [w], [theta] -> -[theta].
// Rejects incompatible boundaries or maps that fail the orbit/Reeb checks.
GluingMap standard_gluing(const BoundaryTorus& b1, const BoundaryTorus& b2);

// Two figure-eight complement pieces with cat-map monodromy and twistings
// n, m (n + m even, k = (n+m)/2), boundary orbit classes (1,n), (1,m) in the
// (mu,lambda) basis, Reeb orbits parallel to lambda, glued by
// [mu] -> -[mu] - 2k[lambda], [lambda] -> [lambda].
ClosedModel fig8_model(const Int& n, const Int& m);

// The gluing matrix of the figure-eight family, determinant -1.
GluingMap fig8_gluing(const Int& k);

// Mixed-cover graph-manifold model: a k-cover and an h-cover of the
// once-punctured-torus piece, boundary surgery on both sides so the Reeb
// orbits become [theta], then glued orbit-to-orbit.
ClosedModel ht_model(const Int& k, const Int& h);

// Canonical serialization of the slope invariant: per piece the topology tag
// and the sorted boundary orbit classes, normalized up to a simultaneous
// basis sign flip; pieces sorted.
std::string flow_invariant(const ClosedModel& m);

// Groups models by flow-invariant equality; returns the partition as index
// lists, each sorted, ordered by first member.
std::vector<std::vector<int>> classify(const std::vector<ClosedModel>& models);

}  // namespace bct
