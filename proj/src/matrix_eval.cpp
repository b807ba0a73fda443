#include "sigmainv/matrix_eval.hpp"

namespace sigmainv {

Matrix<Rational> random_matrix(unsigned n, std::uint64_t seed, unsigned bound) {
    if (n == 0) throw std::invalid_argument("random_matrix: n must be positive");
    std::mt19937_64 gen(seed);
    const std::uint64_t span = 2 * std::uint64_t{bound} + 1;
    Matrix<Rational> m(n, n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            m(i, j) = static_cast<long long>(gen() % span) - static_cast<long long>(bound);
        }
    }
    return m;
}

Matrix<Rational> random_symmetric_matrix(unsigned n, std::uint64_t seed, unsigned bound) {
    const auto m = random_matrix(n, seed, bound);
    return m + m.transpose();
}

Matrix<Fp> reduce_mod(const Matrix<Rational>& m, std::uint64_t p) {
    Matrix<Fp> out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Fp::from_rational(m(i, j), p);
    }
    return out;
}

MatrixAssignment<Fp> reduce_mod(const MatrixAssignment<Rational>& a, std::uint64_t p) {
    MatrixAssignment<Fp> out;
    for (const auto& [k, m] : a) out.emplace(k, reduce_mod(m, p));
    return out;
}

Matrix<CommPoly> generic_matrix(unsigned n, std::size_t offset) {
    Matrix<CommPoly> m(n, n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) m(i, j) = CommPoly::variable(offset + i * n + j);
    }
    return m;
}

nlohmann::json matrix_to_json(const Matrix<Rational>& m) {
    auto rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"n", m.rows()}, {"field", "Q"}, {"entries", std::move(rows)}};
}

nlohmann::json matrix_to_json(const Matrix<Fp>& m) {
    auto rows = nlohmann::json::array();
    std::uint64_t p = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(std::to_string(m(i, j).value()));
            p = m(i, j).modulus();
        }
        rows.push_back(std::move(row));
    }
    return {{"n", m.rows()}, {"field", "Fp"}, {"p", p}, {"entries", std::move(rows)}};
}

FieldSpec parse_field(const std::string& text) {
    if (text == "Q" || text == "q") return {};
    const std::string prefix = "fp:";
    if (text.rfind(prefix, 0) != 0) {
        throw std::invalid_argument("unknown field '" + text + "' (expected Q or fp:<p>)");
    }
    const auto digits = text.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 18) {
        throw std::invalid_argument("malformed modulus in '" + text + "'");
    }
    const auto p = std::stoull(digits);
    require_odd_prime(p);
    return FieldSpec{p};
}

Matrix<Rational> matrix_from_json(const nlohmann::json& j, FieldSpec* field) {
    FieldSpec spec;
    if (j.contains("field")) {
        const auto tag = j.at("field").get<std::string>();
        if (tag == "Fp") {
            const auto p = j.at("p").get<std::uint64_t>();
            require_odd_prime(p);
            spec.p = p;
        } else if (tag != "Q") {
            throw std::invalid_argument("matrix: unknown field tag '" + tag + "'");
        }
    }
    const auto& rows = j.at("entries");
    const auto n = rows.size();
    if (n == 0) throw std::invalid_argument("matrix: no entries");
    if (j.contains("n") && j.at("n").get<std::size_t>() != n) {
        throw std::invalid_argument("matrix: 'n' disagrees with the entry rows");
    }
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("matrix: row " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k < n; ++k) {
            const auto& e = rows[i][k];
            m(i, k) = e.is_string() ? parse_rational(e.get<std::string>()) : Rational(e.get<long long>());
        }
    }
    if (field) *field = spec;
    return m;
}

std::string to_string(const Matrix<Rational>& m) {
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out += "[";
        for (Eigen::Index j = 0; j < m.cols(); ++j) out += (j ? " " : "") + to_string(m(i, j));
        out += "]";
        if (i + 1 < m.rows()) out += "\n";
    }
    return out;
}

}  // namespace sigmainv
