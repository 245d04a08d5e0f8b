#include "bellforge/io.hpp"

#include <json.hpp>

namespace bellforge {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError(std::string(what) + ": malformed JSON");
    return doc;
}

std::vector<double> real_array(const json& node, const char* what) {
    if (!node.is_array()) throw ValidationError(std::string(what) + " must be an array");
    std::vector<double> out;
    out.reserve(node.size());
    for (const auto& v : node) {
        if (!v.is_number()) throw ValidationError(std::string(what) + " must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

json amps_to_json(const Vec& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(json::array({v(i).real(), v(i).imag()}));
    return out;
}

Vec amps_from_json(const json& node, const char* what) {
    if (!node.is_array()) throw ValidationError(std::string(what) + " must be an array");
    Vec v(Eigen::Index(node.size()));
    Eigen::Index i = 0;
    for (const auto& pair : node) {
        if (!pair.is_array() || pair.size() != 2)
            throw ValidationError(std::string(what) + " entries must be [re, im] pairs");
        v(i++) = cdouble(pair[0].get<double>(), pair[1].get<double>());
    }
    return v;
}

json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat matrix_from_json(const json& node, Eigen::Index dim, const char* what) {
    if (!node.is_array() || Eigen::Index(node.size()) != dim)
        throw ValidationError(std::string(what) + ": bad matrix row count");
    Mat m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto& row = node[size_t(i)];
        if (!row.is_array() || Eigen::Index(row.size()) != dim)
            throw ValidationError(std::string(what) + ": bad matrix column count");
        for (Eigen::Index j = 0; j < dim; ++j) {
            const auto& cell = row[size_t(j)];
            if (!cell.is_array() || cell.size() != 2)
                throw ValidationError(std::string(what) + ": matrix entries must be [re, im]");
            m(i, j) = cdouble(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return m;
}

std::vector<std::vector<Mat>> meas_from_json(const json& node, Eigen::Index dim,
                                             const char* what) {
    if (!node.is_array()) throw ValidationError(std::string(what) + " must be an array");
    std::vector<std::vector<Mat>> meas;
    for (const auto& row : node) {
        if (!row.is_array()) throw ValidationError(std::string(what) + " rows must be arrays");
        std::vector<Mat> ops;
        for (const auto& op : row) ops.push_back(matrix_from_json(op, dim, what));
        meas.push_back(std::move(ops));
    }
    return meas;
}

}  // namespace

NonlocalGame game_from_json(const std::string& text) {
    const json doc = parse(text, "game definition");
    for (const char* key : {"name", "nx", "ny", "na", "nb", "dist", "score"})
        if (!doc.contains(key))
            throw ValidationError(std::string("game definition: missing field '") + key + "'");
    NonlocalGame g;
    g.name = doc["name"].get<std::string>();
    g.nx = doc["nx"].get<int>();
    g.ny = doc["ny"].get<int>();
    g.na = doc["na"].get<int>();
    g.nb = doc["nb"].get<int>();
    g.dist = real_array(doc["dist"], "game definition: dist");
    g.score = real_array(doc["score"], "game definition: score");
    g.validate();
    return g;
}

std::string game_to_json(const NonlocalGame& g) {
    json doc;
    doc["name"] = g.name;
    doc["nx"] = g.nx;
    doc["ny"] = g.ny;
    doc["na"] = g.na;
    doc["nb"] = g.nb;
    doc["dist"] = g.dist;
    doc["score"] = g.score;
    return doc.dump(2);
}

QuantumStrategy strategy_from_json(const std::string& text) {
    const json doc = parse(text, "strategy");
    for (const char* key : {"dim_a", "dim_b", "state", "meas_a", "meas_b"})
        if (!doc.contains(key))
            throw ValidationError(std::string("strategy: missing field '") + key + "'");
    QuantumStrategy s;
    s.dim_a = doc["dim_a"].get<Eigen::Index>();
    s.dim_b = doc["dim_b"].get<Eigen::Index>();
    s.state = make_state({s.dim_a, s.dim_b}, amps_from_json(doc["state"], "strategy: state"));
    s.meas_a = meas_from_json(doc["meas_a"], s.dim_a, "strategy: meas_a");
    s.meas_b = meas_from_json(doc["meas_b"], s.dim_b, "strategy: meas_b");
    return s;
}

std::string strategy_to_json(const QuantumStrategy& s) {
    json doc;
    doc["dim_a"] = s.dim_a;
    doc["dim_b"] = s.dim_b;
    doc["state"] = amps_to_json(s.state.amps);
    json ma = json::array();
    for (const auto& row : s.meas_a) {
        json r = json::array();
        for (const Mat& op : row) r.push_back(matrix_to_json(op));
        ma.push_back(std::move(r));
    }
    doc["meas_a"] = std::move(ma);
    json mb = json::array();
    for (const auto& row : s.meas_b) {
        json r = json::array();
        for (const Mat& op : row) r.push_back(matrix_to_json(op));
        mb.push_back(std::move(r));
    }
    doc["meas_b"] = std::move(mb);
    return doc.dump();
}

NonlocalGame builtin_three_chsh() {
    NonlocalGame g = game_from_json(builtin_three_chsh_json());
    validate_three_chsh(g);
    return g;
}

}  // namespace bellforge
