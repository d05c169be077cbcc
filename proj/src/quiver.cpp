#include "quiverdt/quiver.hpp"

#include <nlohmann/json.hpp>

namespace quiverdt {

Quiver Quiver::loop_quiver(int g) {
    return Quiver{1, {{g}}};
}

Quiver Quiver::two_vertex(int loops, int k) {
    return Quiver{2, {{loops, k}, {k, loops}}};
}

void Quiver::validate() const {
    if (r < 1) throw std::invalid_argument("quiver needs at least one vertex");
    if (int(arrows.size()) != r) throw std::invalid_argument("arrow matrix must be r x r");
    for (const auto& row : arrows) {
        if (int(row.size()) != r) throw std::invalid_argument("arrow matrix must be r x r");
        for (int m : row)
            if (m < 0) throw std::invalid_argument("arrow multiplicities must be non-negative");
    }
}

long Quiver::euler_form(const DimVector& a, const DimVector& b) const {
    if (int(a.size()) != r || int(b.size()) != r)
        throw std::invalid_argument("dimension vector length mismatch");
    long s = 0;
    for (int i = 0; i < r; ++i) s += long(a[i]) * b[i];
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) s -= long(arrows[i][j]) * a[i] * b[j];
    return s;
}

long Quiver::tits_form(const DimVector& a) const {
    return euler_form(a, a);
}

long Quiver::antisym_form(const DimVector& a, const DimVector& b) const {
    return euler_form(a, b) - euler_form(b, a);
}

bool Quiver::is_symmetric() const {
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (arrows[i][j] != arrows[j][i]) return false;
    return true;
}

bool Quiver::has_enough_loops() const {
    for (int i = 0; i < r; ++i)
        if (arrows[i][i] < 1) return false;
    return true;
}

IntMatrix Quiver::euler_matrix() const {
    IntMatrix e(r, std::vector<int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) e[i][j] = (i == j ? 1 : 0) - arrows[i][j];
    return e;
}

IntMatrix Quiver::antisym_matrix() const {
    IntMatrix e = euler_matrix();
    IntMatrix l(r, std::vector<int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) l[i][j] = e[i][j] - e[j][i];
    return l;
}

Rat slope(const Stability& st, const DimVector& a) {
    if (a.size() != st.theta.size())
        throw std::invalid_argument("dimension vector length mismatch");
    if (dim_is_zero(a)) throw std::invalid_argument("slope of the zero dimension vector");
    Rat num = 0;
    long den = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        num += st.theta[i] * a[i];
        den += a[i];
    }
    return num / Rat(den);
}

Quiver quiver_from_json_text(const std::string& text, std::optional<Stability>* st) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed quiver JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("arrow_matrix"))
        throw std::invalid_argument("quiver JSON needs \"vertices\" and \"arrow_matrix\"");
    Quiver q;
    q.r = j.at("vertices").get<int>();
    q.arrows = j.at("arrow_matrix").get<IntMatrix>();
    q.validate();
    if (st) {
        *st = std::nullopt;
        if (j.contains("theta")) {
            Stability s;
            for (const auto& t : j.at("theta")) {
                if (t.is_string())
                    s.theta.push_back(rat_from_string(t.get<std::string>()));
                else
                    s.theta.push_back(Rat(t.get<long>()));
            }
            if (int(s.theta.size()) != q.r)
                throw std::invalid_argument("theta length must equal the vertex count");
            *st = s;
        }
    }
    return q;
}

std::string quiver_to_json_text(const Quiver& q, const std::optional<Stability>& st) {
    nlohmann::json j;
    j["vertices"] = q.r;
    j["arrow_matrix"] = q.arrows;
    if (st) {
        std::vector<std::string> t;
        for (const auto& x : st->theta) t.push_back(rat_to_string(x));
        j["theta"] = t;
    }
    return j.dump(2);
}

}  // namespace quiverdt
