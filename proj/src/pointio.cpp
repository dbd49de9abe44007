#include "nilcone/pointio.hpp"

#include <sstream>

#include "nilcone/error.hpp"

namespace nilcone {

std::string matrix_to_text(const MatF& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << static_cast<int>(m.at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

namespace {

std::vector<int> parse_int_line(std::istream& in, const std::string& what) {
    std::string line;
    if (!std::getline(in, line)) throw input_error("point file: missing " + what);
    std::istringstream ls(line);
    std::vector<int> out;
    int v;
    while (ls >> v) out.push_back(v);
    if (!ls.eof()) throw input_error("point file: malformed " + what);
    return out;
}

} // namespace

PointFile parse_point_file(std::istream& in) {
    PointFile pf;
    std::string kind;
    if (!(in >> kind >> pf.n >> pf.q)) throw input_error("point file: malformed header line");
    if (kind == "enhanced")
        pf.exotic = false;
    else if (kind == "exotic")
        pf.exotic = true;
    else
        throw input_error("point file: unknown kind '" + kind + "'");
    if (pf.n < 1) throw input_error("point file: n must be at least 1");
    const FieldDesc& fd = make_field(pf.q);
    std::string rest;
    std::getline(in, rest); // end of header line
    const int dim = pf.exotic ? 2 * pf.n : pf.n;

    auto check_entries = [&](const std::vector<int>& xs, const std::string& what) {
        for (int x : xs)
            if (x < 0 || x >= pf.q)
                throw input_error("point file: " + what + " entry out of range for q="
                                  + std::to_string(pf.q));
    };

    auto vec = parse_int_line(in, "vector line");
    if (static_cast<int>(vec.size()) != dim)
        throw input_error("point file: vector length must be " + std::to_string(dim));
    check_entries(vec, "vector");
    pf.vec.assign(vec.begin(), vec.end());

    pf.mat = MatF(dim, dim, fd);
    for (int i = 0; i < dim; ++i) {
        auto row = parse_int_line(in, "matrix row " + std::to_string(i + 1));
        if (static_cast<int>(row.size()) != dim)
            throw input_error("point file: matrix row " + std::to_string(i + 1)
                              + " must have " + std::to_string(dim) + " entries");
        check_entries(row, "matrix");
        for (int j = 0; j < dim; ++j) pf.mat.set(i, j, static_cast<FqElem>(row[j]));
    }
    return pf;
}

PointFile parse_point_file_text(const std::string& text) {
    std::istringstream is(text);
    return parse_point_file(is);
}

namespace {
std::string write_point(const char* kind, int n, const std::vector<FqElem>& v, const MatF& m) {
    std::ostringstream os;
    os << kind << ' ' << n << ' ' << m.field().q << '\n';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << static_cast<int>(v[i]);
    }
    os << '\n' << matrix_to_text(m);
    return os.str();
}
} // namespace

std::string write_enhanced_point(const std::vector<FqElem>& v, const MatF& x) {
    return write_point("enhanced", x.rows(), v, x);
}

std::string write_exotic_point(const std::vector<FqElem>& w, const MatF& y) {
    return write_point("exotic", y.rows() / 2, w, y);
}

} // namespace nilcone
