#pragma once

#include "cuspgroup/modular_units.hpp"
#include "cuspgroup/smith.hpp"

#include <memory>
#include <vector>

namespace cuspgroup {

// full:  basis P_i - Q_{n-1} (i < n), Q_j - Q_{n-1} (j < n-1).
// infty: basis P_i - P_{n-1} (i < n-1).
enum class Lattice { Full, Infty };

/// Finite abelian group as a chain d_1 | d_2 | ... with every d_i >= 2.
struct AbelianGroupStructure {
    IntVector invariant_factors;
    Integer order = 1;
    friend bool operator==(const AbelianGroupStructure&, const AbelianGroupStructure&) = default;
};

/// One column per unit, holding the lattice coordinates of its divisor.
/// Throws WrongLattice if a unit fails the lattice's unit criterion or its
/// divisor leaves the lattice.
IntMatrix divisor_matrix(const CurveContext& ctx, const std::vector<UnitExponents>& units, Lattice lattice);

/// Lattice coordinates of an integral degree-0 divisor.
/// Throws NotDegreeZero, NonIntegerEntry, or WrongLattice (infty lattice, Q
/// part nonzero).
IntVector lattice_coordinates(const CurveContext& ctx, const CuspDivisor& d, Lattice lattice);

enum class ClassNumberMethod { Snf, Circulant };

/// Order of the full cuspidal group. Snf: |det| of the full divisor matrix.
/// Circulant: (6p det(C) / n)^2 with C = circ(a_i - 1/12).
Integer class_number(const CurveContext& ctx, ClassNumberMethod method);

AbelianGroupStructure group_structure(const CurveContext& ctx);
AbelianGroupStructure rational_group_structure(const CurveContext& ctx);

/// Cokernel of the divisor matrix of the lattice's standard basis, shared
/// through a process-wide cache safe for concurrent readers.
std::shared_ptr<const Cokernel> cuspidal_cokernel(const CurveContext& ctx, Lattice lattice, bool with_coordinates);
void clear_group_cache();

/// Residues of [D] in each invariant factor of the full group.
IntVector class_coordinates(const CurveContext& ctx, const CuspDivisor& d);

/// Order of [D] in the full cuspidal group.
Integer order_in_group(const CurveContext& ctx, const CuspDivisor& d);

struct GenerationReport {
    bool generates = false;   // the classes generate the group
    bool direct = false;      // the sum of the cyclic subgroups is direct
    IntVector orders;         // order of each class
    Integer subgroup_order;   // order of the generated subgroup
    Integer group_order;
    bool ok() const { return generates && direct; }
};

GenerationReport verify_generating_set(const CurveContext& ctx, const std::vector<CuspDivisor>& divisors);

} // namespace cuspgroup
