#include "qz/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace qz {

Representation::Representation(std::vector<Vertex> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    validate();
}

void Representation::validate() const {
    std::vector<std::string> errors;
    std::map<std::string, int> seen;
    for (size_t v = 0; v < vertices_.size(); ++v) {
        if (vertices_[v].id.empty())
            errors.push_back("vertex " + std::to_string(v) + ": empty id");
        if (vertices_[v].rank < 0)
            errors.push_back("vertex '" + vertices_[v].id + "': negative rank");
        if (!seen.emplace(vertices_[v].id, static_cast<int>(v)).second)
            errors.push_back("vertex id '" + vertices_[v].id + "' is not unique");
    }
    std::map<std::string, int> arrow_seen;
    for (size_t a = 0; a < arrows_.size(); ++a) {
        const Arrow& ar = arrows_[a];
        std::string label = "arrow '" + ar.id + "'";
        if (ar.id.empty()) {
            errors.push_back("arrow " + std::to_string(a) + ": empty id");
            label = "arrow " + std::to_string(a);
        } else if (!arrow_seen.emplace(ar.id, static_cast<int>(a)).second) {
            errors.push_back("arrow id '" + ar.id + "' is not unique");
        }
        if (ar.tail < 0 || ar.tail >= num_vertices()) {
            errors.push_back(label + ": tail index out of range");
            continue;
        }
        if (ar.head < 0 || ar.head >= num_vertices()) {
            errors.push_back(label + ": head index out of range");
            continue;
        }
        if (ar.matrix.rows != vertices_[ar.tail].rank ||
            ar.matrix.cols != vertices_[ar.head].rank)
            errors.push_back(label + ": matrix is " + std::to_string(ar.matrix.rows) + "x" +
                             std::to_string(ar.matrix.cols) + " but endpoint ranks are " +
                             std::to_string(vertices_[ar.tail].rank) + "x" +
                             std::to_string(vertices_[ar.head].rank));
    }
    if (!errors.empty()) {
        std::string msg = "invalid representation:";
        for (const auto& e : errors) msg += "\n  - " + e;
        throw Error(msg);
    }
}

int Representation::total_rank() const {
    int n = 0;
    for (const auto& v : vertices_) n += v.rank;
    return n;
}

int Representation::vertex_index(const std::string& id) const {
    for (size_t v = 0; v < vertices_.size(); ++v)
        if (vertices_[v].id == id) return static_cast<int>(v);
    throw Error("unknown vertex id '" + id + "'");
}

std::vector<int> Representation::block_offsets() const {
    std::vector<int> off(vertices_.size() + 1, 0);
    for (size_t v = 0; v < vertices_.size(); ++v) off[v + 1] = off[v] + vertices_[v].rank;
    return off;
}

MatZ Representation::path_matrix(const std::vector<int>& arrow_indices) const {
    if (arrow_indices.empty()) throw Error("path_matrix: empty path");
    for (int a : arrow_indices)
        if (a < 0 || a >= num_arrows()) throw Error("path_matrix: arrow index out of range");
    for (size_t k = 0; k + 1 < arrow_indices.size(); ++k)
        if (arrows_[arrow_indices[k]].head != arrows_[arrow_indices[k + 1]].tail)
            throw Error("path_matrix: arrows do not chain (head of step " +
                        std::to_string(k) + " differs from next tail)");
    MatZ acc = arrows_[arrow_indices[0]].matrix;
    for (size_t k = 1; k < arrow_indices.size(); ++k)
        acc = acc * arrows_[arrow_indices[k]].matrix;
    return acc;
}

std::vector<MatZ> Representation::extended_arrow_matrices() const {
    std::vector<int> off = block_offsets();
    int n = total_rank();
    std::vector<MatZ> out;
    out.reserve(arrows_.size());
    for (const auto& ar : arrows_) {
        MatZ e(n, n);
        for (int i = 0; i < ar.matrix.rows; ++i)
            for (int j = 0; j < ar.matrix.cols; ++j)
                e.at(off[ar.tail] + i, off[ar.head] + j) = ar.matrix.at(i, j);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<MatZ> Representation::to_submodule_instance() const {
    std::vector<int> off = block_offsets();
    int n = total_rank();
    std::vector<MatZ> out;
    for (size_t v = 0; v < vertices_.size(); ++v) {
        MatZ pi(n, n);
        for (int i = 0; i < vertices_[v].rank; ++i) pi.at(off[v] + i, off[v] + i) = 1;
        out.push_back(std::move(pi));
    }
    std::vector<MatZ> exts = extended_arrow_matrices();
    out.insert(out.end(), exts.begin(), exts.end());
    return out;
}

std::string Representation::to_json() const {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : vertices_) j["vertices"].push_back({{"id", v.id}, {"rank", v.rank}});
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : arrows_) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < a.matrix.rows; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int k = 0; k < a.matrix.cols; ++k) {
                // Entries of file representations are ordinary machine ints.
                row.push_back(static_cast<long long>(a.matrix.at(i, k)));
            }
            rows.push_back(std::move(row));
        }
        j["arrows"].push_back({{"id", a.id},
                               {"tail", vertices_[a.tail].id},
                               {"head", vertices_[a.head].id},
                               {"matrix", std::move(rows)}});
    }
    return j.dump(2);
}

Representation Representation::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("representation JSON is malformed: ") + e.what());
    }
    std::vector<std::string> errors;
    std::vector<Vertex> vertices;
    std::vector<Arrow> arrows;
    if (!j.contains("vertices") || !j["vertices"].is_array()) {
        errors.push_back("missing 'vertices' array");
    } else {
        for (size_t i = 0; i < j["vertices"].size(); ++i) {
            const auto& v = j["vertices"][i];
            Vertex vert;
            if (!v.contains("id") || !v["id"].is_string())
                errors.push_back("vertices[" + std::to_string(i) + "]: missing string 'id'");
            else
                vert.id = v["id"].get<std::string>();
            if (!v.contains("rank") || !v["rank"].is_number_integer())
                errors.push_back("vertices[" + std::to_string(i) +
                                 "]: missing integer 'rank'");
            else
                vert.rank = v["rank"].get<int>();
            vertices.push_back(std::move(vert));
        }
    }
    auto find_vertex = [&](const std::string& id) -> int {
        for (size_t v = 0; v < vertices.size(); ++v)
            if (vertices[v].id == id) return static_cast<int>(v);
        return -1;
    };
    if (j.contains("arrows")) {
        if (!j["arrows"].is_array()) {
            errors.push_back("'arrows' is not an array");
        } else {
            for (size_t i = 0; i < j["arrows"].size(); ++i) {
                const auto& a = j["arrows"][i];
                std::string where = "arrows[" + std::to_string(i) + "]";
                Arrow ar;
                if (!a.contains("id") || !a["id"].is_string())
                    errors.push_back(where + ": missing string 'id'");
                else
                    ar.id = a["id"].get<std::string>();
                for (const char* endpoint : {"tail", "head"}) {
                    if (!a.contains(endpoint) || !a[endpoint].is_string()) {
                        errors.push_back(where + ": missing string '" + endpoint + "'");
                        continue;
                    }
                    int idx = find_vertex(a[endpoint].get<std::string>());
                    if (idx < 0)
                        errors.push_back(where + ": unknown " + endpoint + " vertex '" +
                                         a[endpoint].get<std::string>() + "'");
                    else
                        (endpoint[0] == 't' ? ar.tail : ar.head) = idx;
                }
                if (!a.contains("matrix") || !a["matrix"].is_array()) {
                    errors.push_back(where + ": missing 'matrix' array of rows");
                } else {
                    std::vector<std::vector<long long>> rows;
                    bool ok = true;
                    for (const auto& r : a["matrix"]) {
                        if (!r.is_array()) {
                            errors.push_back(where + ": matrix row is not an array");
                            ok = false;
                            break;
                        }
                        std::vector<long long> row;
                        for (const auto& e : r) {
                            if (!e.is_number_integer()) {
                                errors.push_back(where + ": matrix entry is not an integer");
                                ok = false;
                                break;
                            }
                            row.push_back(e.get<long long>());
                        }
                        if (!ok) break;
                        rows.push_back(std::move(row));
                    }
                    if (ok) {
                        size_t width = rows.empty() ? 0 : rows[0].size();
                        for (const auto& r : rows)
                            if (r.size() != width) {
                                errors.push_back(where + ": ragged matrix rows");
                                ok = false;
                                break;
                            }
                        if (ok) {
                            ar.matrix = MatZ(static_cast<int>(rows.size()),
                                             static_cast<int>(width));
                            for (int ri = 0; ri < ar.matrix.rows; ++ri)
                                for (int ci = 0; ci < ar.matrix.cols; ++ci)
                                    ar.matrix.at(ri, ci) = rows[ri][ci];
                        }
                    }
                }
                arrows.push_back(std::move(ar));
            }
        }
    }
    if (!errors.empty()) {
        std::string msg = "invalid representation file:";
        for (const auto& e : errors) msg += "\n  - " + e;
        throw Error(msg);
    }
    return Representation(std::move(vertices), std::move(arrows));
}

namespace {

MatZ single_entry(int rows, int cols, int i, int j, const Int& v) {
    MatZ m(rows, cols);
    m.at(i, j) = v;
    return m;
}

Representation make_loop_rep(int rank, std::vector<std::pair<std::string, MatZ>> maps) {
    std::vector<Vertex> vs{{"v1", rank}};
    std::vector<Arrow> as;
    for (auto& [id, m] : maps) as.push_back({id, 0, 0, std::move(m)});
    return Representation(std::move(vs), std::move(as));
}

long get_param(const std::map<std::string, long>& params, const std::string& key,
               std::optional<long> fallback = std::nullopt) {
    auto it = params.find(key);
    if (it != params.end()) return it->second;
    if (fallback) return *fallback;
    throw Error("builtin_rep: missing parameter '" + key + "'");
}

MatZ fil4_ad_x1() {
    MatZ f(5, 5);
    f.at(1, 2) = -1;
    f.at(2, 3) = -1;
    f.at(3, 4) = -1;
    return f;
}

}  // namespace

Representation graded_quiver_rep(const std::vector<MatZ>& operators,
                                 const std::vector<int>& layer_ranks) {
    int n = 0;
    for (int r : layer_ranks) {
        if (r < 0) throw Error("graded_quiver_rep: negative layer rank");
        n += r;
    }
    std::vector<int> off(layer_ranks.size() + 1, 0);
    for (size_t i = 0; i < layer_ranks.size(); ++i) off[i + 1] = off[i] + layer_ranks[i];
    std::vector<Vertex> vs;
    for (size_t i = 0; i < layer_ranks.size(); ++i)
        vs.push_back({"v" + std::to_string(i + 1), layer_ranks[i]});
    std::vector<Arrow> as;
    for (size_t k = 0; k < operators.size(); ++k) {
        const MatZ& op = operators[k];
        if (op.rows != n || op.cols != n)
            throw Error("graded_quiver_rep: operator " + std::to_string(k) + " is not " +
                        std::to_string(n) + "x" + std::to_string(n));
        for (size_t i = 0; i < layer_ranks.size(); ++i) {
            for (size_t j = 0; j < layer_ranks.size(); ++j) {
                MatZ block(layer_ranks[i], layer_ranks[j]);
                for (int r = 0; r < block.rows; ++r)
                    for (int c = 0; c < block.cols; ++c)
                        block.at(r, c) = op.at(off[i] + r, off[j] + c);
                if (block.is_zero()) continue;
                as.push_back({"a" + std::to_string(k + 1) + "_L" + std::to_string(i + 1) +
                                  "L" + std::to_string(j + 1),
                              static_cast<int>(i), static_cast<int>(j), std::move(block)});
            }
        }
    }
    return Representation(std::move(vs), std::move(as));
}

std::vector<std::string> builtin_rep_names() {
    return {"heisenberg", "graded_heisenberg", "fil4",      "fil4_graded", "m4",
            "m4_graded",  "free_nilpotent",    "l_lambda",  "star",        "dual_star",
            "d4",         "kron2",             "elliptic"};
}

Representation builtin_rep(const std::string& name,
                           const std::map<std::string, long>& params) {
    if (name == "heisenberg") {
        return make_loop_rep(3, {{"ad_x1", single_entry(3, 3, 1, 2, -1)},
                                 {"ad_x2", single_entry(3, 3, 0, 2, 1)}});
    }
    if (name == "graded_heisenberg") {
        std::vector<Vertex> vs{{"v1", 2}, {"v2", 1}};
        MatZ f1(2, 1), f2(2, 1);
        f1.at(1, 0) = -1;  // x2 -> [x2, x1] = -y
        f2.at(0, 0) = 1;   // x1 -> [x1, x2] = +y
        std::vector<Arrow> as{{"ad_x1", 0, 1, f1}, {"ad_x2", 0, 1, f2}};
        return Representation(std::move(vs), std::move(as));
    }
    if (name == "fil4" || name == "m4") {
        MatZ f2(5, 5);
        f2.at(0, 2) = 1;                     // x1 -> [x1, x2] = x3
        if (name == "fil4") f2.at(2, 4) = -1;  // x3 -> [x3, x2] = -x5
        return make_loop_rep(5, {{"ad_x1", fil4_ad_x1()}, {"ad_x2", f2}});
    }
    if (name == "fil4_graded" || name == "m4_graded") {
        Representation loop = builtin_rep(name == "fil4_graded" ? "fil4" : "m4");
        return graded_quiver_rep(
            {loop.arrows()[0].matrix, loop.arrows()[1].matrix}, {2, 1, 1, 1});
    }
    if (name == "free_nilpotent") {
        long c = get_param(params, "c");
        long d = get_param(params, "d");
        if (c < 1 || c > 2)
            throw Error("builtin_rep: free_nilpotent supports class c in {1, 2} only");
        if (d < 1) throw Error("builtin_rep: free_nilpotent needs d >= 1");
        if (c == 1 || d == 1) {
            std::vector<Vertex> vs{{"v1", static_cast<int>(d)}};
            return Representation(std::move(vs), {});
        }
        int dd = static_cast<int>(d);
        int pairs = dd * (dd - 1) / 2;
        auto pair_col = [&](int a, int b) {  // a < b, both 0-based
            int col = 0;
            for (int x = 0; x < a; ++x) col += dd - 1 - x;
            return col + (b - a - 1);
        };
        std::vector<Vertex> vs{{"v1", dd}, {"v2", pairs}};
        std::vector<Arrow> as;
        for (int k = 0; k < dd; ++k) {
            MatZ f(dd, pairs);
            for (int i = 0; i < dd; ++i) {
                if (i == k) continue;
                // x_i -> [x_i, x_k] = e_{(i,k)} when i < k, else -e_{(k,i)}.
                if (i < k)
                    f.at(i, pair_col(i, k)) = 1;
                else
                    f.at(i, pair_col(k, i)) = -1;
            }
            as.push_back({"ad_x" + std::to_string(k + 1), 0, 1, std::move(f)});
        }
        return Representation(std::move(vs), std::move(as));
    }
    if (name == "l_lambda") {
        long c = get_param(params, "c");
        long r1 = get_param(params, "r1");
        long r2 = get_param(params, "r2", 0);
        if (c < 2 || r1 < 1 || r2 < 0)
            throw Error("builtin_rep: l_lambda needs c >= 2, r1 >= 1, r2 >= 0");
        int n1 = static_cast<int>(1 + r1 + r2);
        std::vector<Vertex> vs{{"v1", n1}};
        for (long j = 2; j <= c; ++j)
            vs.push_back({"v" + std::to_string(j), static_cast<int>(r1)});
        std::vector<Arrow> as;
        MatZ ad0(n1, static_cast<int>(r1));  // x_{i,1} -> [x_{i,1}, x0] = -x_{i,2}
        for (long i = 0; i < r1; ++i) ad0.at(static_cast<int>(1 + i), static_cast<int>(i)) = -1;
        as.push_back({"ad_x0", 0, 1, std::move(ad0)});
        for (long i = 0; i < r1; ++i) {
            MatZ adi(n1, static_cast<int>(r1));  // x0 -> [x0, x_{i,1}] = +x_{i,2}
            adi.at(0, static_cast<int>(i)) = 1;
            as.push_back({"ad_x" + std::to_string(i + 1) + "_1", 0, 1, std::move(adi)});
        }
        for (long j = 2; j < c; ++j) {
            MatZ m = Int(-1) * MatZ::identity(static_cast<int>(r1));
            as.push_back({"ad_x0_d" + std::to_string(j), static_cast<int>(j - 1),
                          static_cast<int>(j), std::move(m)});
        }
        return Representation(std::move(vs), std::move(as));
    }
    if (name == "star" || name == "dual_star") {
        long m = get_param(params, "m");
        long a = get_param(params, "a");
        if (m < 1 || a < 1) throw Error("builtin_rep: star needs m >= 1, a >= 1");
        std::vector<Vertex> vs;
        for (long j = 1; j <= a; ++j)
            vs.push_back({"v" + std::to_string(j), static_cast<int>(m)});
        std::vector<Arrow> as;
        for (long j = 2; j <= a; ++j) {
            int tail = name == "star" ? 0 : static_cast<int>(j - 1);
            int head = name == "star" ? static_cast<int>(j - 1) : 0;
            as.push_back({"e" + std::to_string(j), tail, head,
                          MatZ::identity(static_cast<int>(m))});
        }
        return Representation(std::move(vs), std::move(as));
    }
    if (name == "d4") {
        std::vector<Vertex> vs{{"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 2}};
        MatZ b(1, 2), l(1, 2), r(1, 2);
        b.at(0, 0) = 1;
        b.at(0, 1) = 1;
        l.at(0, 1) = 1;
        r.at(0, 0) = 1;
        std::vector<Arrow> as{{"e1", 0, 3, b}, {"e2", 1, 3, l}, {"e3", 2, 3, r}};
        return Representation(std::move(vs), std::move(as));
    }
    if (name == "kron2") {
        std::vector<Vertex> vs{{"v1", 2}, {"v2", 2}};
        MatZ rot(2, 2);
        rot.at(0, 1) = 1;
        rot.at(1, 0) = -1;
        std::vector<Arrow> as{{"f1", 0, 1, MatZ::identity(2)}, {"f2", 0, 1, rot}};
        return Representation(std::move(vs), std::move(as));
    }
    if (name == "elliptic") {
        long D = get_param(params, "D", 1);
        if (D == 0) throw Error("builtin_rep: elliptic needs D != 0");
        std::vector<Vertex> vs{{"v1", 3}, {"v2", 3}};
        MatZ f1(3, 3), f2(3, 3), f3(3, 3);
        f1.at(0, 2) = D;
        f1.at(1, 0) = 1;
        f1.at(2, 1) = 1;
        f2.at(0, 0) = 1;
        f2.at(1, 2) = 1;
        f3.at(0, 1) = 1;
        f3.at(2, 0) = 1;
        std::vector<Arrow> as{{"f1", 0, 1, f1}, {"f2", 0, 1, f2}, {"f3", 0, 1, f3}};
        return Representation(std::move(vs), std::move(as));
    }
    std::string names;
    for (const auto& n : builtin_rep_names()) names += (names.empty() ? "" : ", ") + n;
    throw Error("builtin_rep: unknown name '" + name + "' (supported: " + names + ")");
}

}  // namespace qz
