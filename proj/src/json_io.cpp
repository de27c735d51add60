#include "mubforge/json_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace mubforge::json_io {

using nlohmann::json;

std::string to_json(const PhaseMatrix& m, int indent) {
    bool scale = m.sqrt_den() != 1;
    if (scale && m.sqrt_den() != m.dim())
        throw std::domain_error("to_json: only the 1/sqrt(d) scale is representable in the schema");
    json entries = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) {
            auto e = m.exponent_at(i, j);
            if (e) row.push_back(*e);
            else row.push_back(nullptr);
        }
        entries.push_back(std::move(row));
    }
    json out{{"dim", m.dim()}, {"order", m.order()}, {"scale_inv_sqrt_d", scale}, {"entries", std::move(entries)}};
    return out.dump(indent);
}

PhaseMatrix phase_matrix_from_json(const std::string& text) {
    json in = json::parse(text);
    int dim = in.at("dim").get<int>();
    long long order = in.at("order").get<long long>();
    bool scale = in.at("scale_inv_sqrt_d").get<bool>();
    PhaseMatrix m(dim, order, scale ? dim : 1);
    const json& entries = in.at("entries");
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const json& cell = entries.at(i).at(j);
            if (!cell.is_null()) m.set(i, j, cell.get<long long>());
        }
    return m;
}

std::string format_complex(cdouble v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g,%.15g", v.real(), v.imag());
    return buf;
}

std::string to_json(const CMatrix& m, int indent) {
    json entries = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back({m.at(i, j).real(), m.at(i, j).imag()});
        entries.push_back(std::move(row));
    }
    json out{{"dim", m.dim()}, {"entries", std::move(entries)}};
    return out.dump(indent);
}

CMatrix cmatrix_from_json(const std::string& text) {
    json in = json::parse(text);
    int dim = in.at("dim").get<int>();
    CMatrix m(dim);
    const json& entries = in.at("entries");
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m.at(i, j) = cdouble(entries.at(i).at(j).at(0).get<double>(), entries.at(i).at(j).at(1).get<double>());
    return m;
}

std::string to_csv(const CMatrix& m) {
    std::ostringstream out;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out << ',';
            out << format_complex(m.at(i, j));
        }
        out << '\n';
    }
    return out.str();
}

std::string to_pretty(const PhaseMatrix& m) {
    PhaseMatrix r = m.reduced();
    std::ostringstream out;
    out << "dim " << r.dim() << ", q = exp(2*pi*i/" << r.order() << ")";
    if (r.sqrt_den() != 1) out << ", global scale 1/sqrt(" << r.sqrt_den() << ")";
    out << '\n';
    std::vector<std::string> cells(static_cast<size_t>(r.dim()) * r.dim());
    size_t width = 1;
    for (int i = 0; i < r.dim(); ++i)
        for (int j = 0; j < r.dim(); ++j) {
            auto e = r.exponent_at(i, j);
            std::string s = !e ? "0" : (*e == 0 ? "1" : "q^" + std::to_string(*e));
            width = std::max(width, s.size());
            cells[static_cast<size_t>(i) * r.dim() + j] = std::move(s);
        }
    for (int i = 0; i < r.dim(); ++i) {
        for (int j = 0; j < r.dim(); ++j) {
            const std::string& s = cells[static_cast<size_t>(i) * r.dim() + j];
            out << std::string(width - s.size() + (j ? 2 : 0), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace mubforge::json_io
