#pragma once

#include <span>
#include <string>
#include <vector>

#include "bei/poly.hpp"

namespace bei {

/// One coordinate per slot; reuses the monomial exponent layout.
using DegreeKey = Monomial;

/// A grading of S by a free abelian group, each variable having a 0/1 weight
/// vector. Every grading here refines the total degree.
class Grading {
 public:
  enum class Kind {
    Fine,      // Z^{2n}: one slot per variable
    VertexXY,  // Z^n x Z: slot t-1 counts x_t and y_t, slot n counts the x's
    Standard,  // Z: total degree
  };

  Grading(Kind kind, int num_vertices);

  Kind kind() const { return kind_; }
  int slots() const { return slots_; }
  DegreeKey degree(const Monomial& m) const;
  /// Slots touched by the given variable.
  const std::vector<int>& slots_of(int var) const { return var_slots_[var]; }
  std::string name() const;

 private:
  Kind kind_;
  int num_vertices_;
  int slots_;
  std::vector<std::vector<int>> var_slots_;
};

bool is_homogeneous(const Poly& f, const Grading& grading);

/// The finest of the three gradings in which every polynomial is homogeneous.
/// Throws InputError if none applies.
Grading finest_grading(std::span<const Poly> polys, int num_vertices);

}  // namespace bei
