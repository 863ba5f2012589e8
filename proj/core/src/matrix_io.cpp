#include "eigenflow/matrix_io.hpp"

#include "eigenflow/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace eigenflow {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json data = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            data.push_back({m(i, j).real(), m(i, j).imag()});
        }
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
        throw ParseError("matrix json: expected object with rows, cols, data");
    }
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    if (rows < 0 || cols < 0) throw ParseError("matrix json: negative dimension");
    const auto& data = j.at("data");
    if (!data.is_array() || data.size() != static_cast<std::size_t>(rows * cols)) {
        throw ParseError("matrix json: data length must equal rows*cols");
    }
    ComplexMatrix m(rows, cols);
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index jj = 0; jj < cols; ++jj, ++k) {
            const auto& entry = data[k];
            if (!entry.is_array() || entry.size() != 2) {
                throw ParseError("matrix json: entries must be [re, im] pairs");
            }
            const double re = entry[0].get<double>();
            const double im = entry[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im)) {
                throw ParseError("matrix json: non-finite entry");
            }
            m(i, jj) = ComplexScalar(re, im);
        }
    }
    return m;
}

void write_matrix_text(std::ostream& os, const ComplexMatrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    os.precision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            os << m(i, j).real() << ' ' << m(i, j).imag() << '\n';
        }
    }
}

ComplexMatrix read_matrix_text(std::istream& is) {
    Eigen::Index rows = -1, cols = -1;
    if (!(is >> rows >> cols) || rows < 0 || cols < 0) {
        throw ParseError("matrix text: expected header line \"rows cols\"");
    }
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            double re = 0.0, im = 0.0;
            if (!(is >> re >> im)) throw ParseError("matrix text: truncated data");
            if (!std::isfinite(re) || !std::isfinite(im)) {
                throw ParseError("matrix text: non-finite entry");
            }
            m(i, j) = ComplexScalar(re, im);
        }
    }
    return m;
}

ComplexMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string content = buffer.str();
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty matrix file: " + path);
    if (content[first] == '{') {
        nlohmann::json j = nlohmann::json::parse(content, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded()) throw ParseError("invalid json in matrix file: " + path);
        return matrix_from_json(j);
    }
    std::istringstream text(content);
    return read_matrix_text(text);
}

void save_matrix_json(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << matrix_to_json(m).dump(2) << '\n';
}

}  // namespace eigenflow
