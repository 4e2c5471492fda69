#include "bei/grading.hpp"

#include "bei/errors.hpp"

namespace bei {

Grading::Grading(Kind kind, int num_vertices) : kind_(kind), num_vertices_(num_vertices) {
  const int vars = 2 * num_vertices;
  var_slots_.resize(vars);
  switch (kind) {
    case Kind::Fine:
      slots_ = vars;
      for (int v = 0; v < vars; ++v) var_slots_[v] = {v};
      break;
    case Kind::VertexXY:
      slots_ = num_vertices + 1;
      for (int t = 0; t < num_vertices; ++t) {
        var_slots_[t] = {t, num_vertices};
        var_slots_[num_vertices + t] = {t};
      }
      break;
    case Kind::Standard:
      slots_ = 1;
      for (int v = 0; v < vars; ++v) var_slots_[v] = {0};
      break;
  }
}

DegreeKey Grading::degree(const Monomial& m) const {
  DegreeKey key;
  for (std::size_t v = 0; v < var_slots_.size(); ++v) {
    if (m.exp[v] == 0) continue;
    for (int s : var_slots_[v]) {
      int d = key.exp[s] + m.exp[v];
      if (d > 255) throw InputError("degree too large for the grading key");
      key.exp[s] = static_cast<std::uint8_t>(d);
    }
  }
  return key;
}

std::string Grading::name() const {
  switch (kind_) {
    case Kind::Fine: return "fine";
    case Kind::VertexXY: return "vertex-xy";
    case Kind::Standard: return "standard";
  }
  return "unknown";
}

bool is_homogeneous(const Poly& f, const Grading& grading) {
  if (f.is_zero()) return true;
  DegreeKey d = grading.degree(f.leading_monomial());
  for (const auto& t : f.terms())
    if (grading.degree(t.mono) != d) return false;
  return true;
}

Grading finest_grading(std::span<const Poly> polys, int num_vertices) {
  for (auto kind : {Grading::Kind::Fine, Grading::Kind::VertexXY, Grading::Kind::Standard}) {
    Grading g(kind, num_vertices);
    bool ok = true;
    for (const auto& f : polys) {
      if (!is_homogeneous(f, g)) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InputError("the ideal is not homogeneous");
}

}  // namespace bei
