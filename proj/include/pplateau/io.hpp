#ifndef PPLATEAU_IO_HPP
#define PPLATEAU_IO_HPP

#include "pplateau/complex.hpp"
#include "pplateau/functionals.hpp"

#include <string>
#include <string_view>

namespace pplateau {

// Text formats. Blank lines and '#' comments are ignored everywhere.
//
// Complex:
//   pplateau-complex v1
//   dim <n>
//   cells <d>                          -- starts the block for dimension d
//   cell <id> measure <number> [label] -- label is the rest of the line
//   face <d-cell> <(d-1)-cell> <sign>  -- inside block d, after both cells
//   coord <vertex-id> <number>...       -- optional vertex coordinates
//
// Chain:    "chain <dim>" then "<cell-id> <integer>" lines.
// Cochain:  "cochain <dim>" then "<cell-id> <number>" lines.
// Integrand: "integrand identity" | "integrand alpha <number>" |
//            "integrand table" then "<theta> <H(theta)>" lines.
//
// <number> is an integer, p/q, an exact decimal (1.25, 3e-2), or ~<double>
// for a floating value. Writers emit canonical text that reads back to an
// identical object.

ComplexPtr parse_complex(std::string_view text, std::string_view source = "<complex>");
std::string write_complex(const CellComplex& complex);

Chain parse_chain(std::string_view text, const ComplexPtr& complex, std::string_view source = "<chain>");
std::string write_chain(const Chain& chain);

Cochain parse_cochain(std::string_view text, const ComplexPtr& complex, std::string_view source = "<cochain>");
std::string write_cochain(const Cochain& cochain);

Integrand parse_integrand(std::string_view text, std::string_view source = "<integrand>");
std::string write_integrand(const Integrand& h);

/// Whole file as a string; ParseError naming the path when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pplateau

#endif
