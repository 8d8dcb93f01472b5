#pragma once

#include "extremal/complexgen.hpp"
#include "extremal/construct.hpp"
#include "extremal/homology.hpp"

#include <iosfwd>
#include <string>

namespace extremal {

/// Round-trip text for a double (17 significant digits, "inf" for infinity).
std::string format_double(double v);
/// Parses the output of format_double. Throws InvalidArgument.
double parse_double(const std::string& text);

// Point file:
//   # kind,d,k,n,delta,h
//   # <kind>,<d>,<k>,<n>,<delta>,<h>
//   circle_id,index_on_circle,x_1,...,x_d
void write_points(std::ostream& out, const PointSet& ps);
PointSet read_points(std::istream& in);

// Filtration file: one simplex per line, `value dim v_0 ... v_dim touch short`.
// Simplices without a class carry `- -` in the last two fields.
void write_filtration(std::ostream& out, const FilteredComplex& fc);
FilteredComplex read_filtration(std::istream& in);

// Diagram file: `dim,birth,death` header, then rows sorted by (dim, birth, death).
void write_diagram(std::ostream& out, const PersistenceDiagram& pd);
PersistenceDiagram read_diagram(std::istream& in, bool reduced = true);

/// Birth/death scatter, one colour per dimension. Essential classes sit on a
/// dashed line above the finite range.
void write_diagram_svg(std::ostream& out, const PersistenceDiagram& pd);

} // namespace extremal
