#pragma once

#include <iosfwd>
#include <string>

#include "nilcone/exotic.hpp"
#include "nilcone/matf.hpp"

namespace nilcone {

/// Text matrix format: one row per line, entries as base-10 field element
/// indices separated by single spaces.
std::string matrix_to_text(const MatF& m);

/// Parsed contents of a point file.
///
/// Enhanced format:          Exotic format:
///   enhanced n q              exotic n q
///   v_1 ... v_n               w_1 ... w_2n
///   <n matrix rows>           <2n matrix rows>
struct PointFile {
    bool exotic = false;
    int n = 0;
    int q = 0;
    std::vector<FqElem> vec;
    MatF mat;
};

PointFile parse_point_file(std::istream& in);
PointFile parse_point_file_text(const std::string& text);

std::string write_enhanced_point(const std::vector<FqElem>& v, const MatF& x);
std::string write_exotic_point(const std::vector<FqElem>& w, const MatF& y);

} // namespace nilcone
