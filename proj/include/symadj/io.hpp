#pragma once

#include <iosfwd>
#include <string>

#include "symadj/geometry.hpp"
#include "symadj/maps.hpp"
#include "symadj/minkowski.hpp"

namespace symadj {
namespace io {

// Shared text formats. Matrices: "sym <n>" or "mat <rows> <cols>" followed
// by whitespace-separated rationals written p/q or p; symmetry is validated
// on load for "sym". Vectors: "vec <n>". Chains: "chain <count>" followed by
// blank-line-separated sym blocks. Lorentz: "lorentz" + 3x3 block. Weyl:
// "weyl <alpha>" + Lorentz block + vec block.
//
// pretty pads columns for alignment; compact uses single spaces. The two
// differ in whitespace only.
enum class Style { compact, pretty };

std::string format(const Rat& r);
std::string format(const Vec& v, Style s = Style::pretty);
std::string format(const Mat& m, Style s = Style::pretty);
std::string format(const SymMat& m, Style s = Style::pretty);
std::string format(const geometry::Chain& c, Style s = Style::pretty);
std::string format(const geometry::CrossedChain& c, Style s = Style::pretty);
std::string format(const minkowski::LorentzMat& l, Style s = Style::pretty);
std::string format(const minkowski::WeylMap& w, Style s = Style::pretty);
std::string format(const maps::MapSpec& spec, Style s = Style::pretty);
std::string format_oracle(const maps::MapOracle& o, Style s = Style::pretty);

Rat read_rat(std::istream& in);
Vec read_vec(std::istream& in);
Mat read_mat(std::istream& in);          // accepts only "mat"
SymMat read_sym(std::istream& in);       // accepts only "sym"
Mat read_any_matrix(std::istream& in);   // "mat" or "sym"
geometry::Chain read_chain(std::istream& in);
minkowski::LorentzMat read_lorentz(std::istream& in);
minkowski::WeylMap read_weyl(std::istream& in);

// Map-spec formats:
//   standard c=<+1|-1> n=<n> m=<m>   + m x n "mat" block
//                                    [+ "translation" + sym block]
//   degenerate m=<m> f=<trace|scaled:<k>|table> + sym block for B
//                                    [+ "table <count>" + (sym block, value) pairs]
//   tabulated n=<n> m=<m> <count>    + count (input, output) sym block pairs
maps::MapOracle read_oracle(std::istream& in);

}  // namespace io
}  // namespace symadj
