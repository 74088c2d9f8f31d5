#include "quadwalk/model.hpp"

#include <json.hpp>

namespace quadwalk {

Rat WalkModel::weight(int i, int j) const {
    auto it = weights.find({i, j});
    return it == weights.end() ? Rat(0) : it->second;
}

bool WalkModel::has_step(int i, int j) const {
    auto it = weights.find({i, j});
    return it != weights.end() && !is_zero(it->second);
}

Poly2 WalkModel::step_polynomial_xy() const {
    Poly2 p('x', 'y');
    for (const auto& [s, d] : weights)
        p.set(s.first + 1, s.second + 1, d);
    return p;
}

Rat LaurentPoly::eval(const Rat& x) const {
    Rat v = poly.eval(x);
    if (shift == 0) return v;
    return v * rat_pow(x, shift);
}

std::complex<double> LaurentPoly::eval(std::complex<double> x) const {
    std::complex<double> v = poly.eval(x);
    for (int k = 0; k < -shift; ++k) v /= x;
    return v;
}

WalkModel make_model(const std::string& name, const std::map<Step, Rat>& raw) {
    WalkModel m;
    m.name = name;
    Rat total(0);
    for (const auto& [s, w] : raw) {
        if (s.first < -1 || s.first > 1 || s.second < -1 || s.second > 1 ||
            (s.first == 0 && s.second == 0))
            throw InvalidStep("invalid step (" + std::to_string(s.first) + "," +
                              std::to_string(s.second) + ")");
        if (sgn(w) < 0)
            throw NegativeWeight("negative weight on step (" + std::to_string(s.first) + "," +
                                 std::to_string(s.second) + ")");
        total += w;
    }
    if (is_zero(total)) throw AllZero("all weights are zero");
    m.original_total = total;
    for (const auto& [s, w] : raw)
        if (!is_zero(w)) m.weights[s] = w / total;
    return m;
}

WalkModel load_model(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("model JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("model document must be a JSON object");
    std::string name = "model";
    std::map<Step, Rat> raw;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.key() == "name") {
            if (!it.value().is_string()) throw ParseError("\"name\" must be a string");
            name = it.value().get<std::string>();
        } else if (it.key() == "weights") {
            if (!it.value().is_object()) throw ParseError("\"weights\" must be an object");
            for (auto w = it.value().begin(); w != it.value().end(); ++w) {
                const std::string& key = w.key();
                std::size_t comma = key.find(',');
                if (comma == std::string::npos) throw InvalidStep("step key '" + key + "'");
                int i, j;
                try {
                    i = std::stoi(key.substr(0, comma));
                    j = std::stoi(key.substr(comma + 1));
                } catch (const std::exception&) {
                    throw InvalidStep("step key '" + key + "'");
                }
                Rat value;
                if (w.value().is_string()) value = rat_from_string(w.value().get<std::string>());
                else if (w.value().is_number_integer()) value = Rat(w.value().get<long>());
                else throw ParseError("weight for '" + key + "' must be a string or integer");
                raw[{i, j}] = value;
            }
        } else {
            throw ParseError("unknown key '" + it.key() + "' in model document");
        }
    }
    if (raw.empty()) throw AllZero("model has no weights");
    return make_model(name, raw);
}

WalkModel builtin_model(const std::string& name) {
    auto u = [](std::initializer_list<Step> steps) {
        std::map<Step, Rat> w;
        for (Step s : steps) w[s] = Rat(1);
        return w;
    };
    std::map<Step, Rat> w;
    if (name == "simple") w = u({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    else if (name == "kreweras") w = u({{1, 1}, {-1, 0}, {0, -1}});
    else if (name == "gessel") w = u({{1, 0}, {-1, 0}, {1, 1}, {-1, -1}});
    else if (name == "single-ne") w = u({{1, 1}});
    else if (name == "fig2-1")
        w = {{{1, 1}, Rat(15)}, {{1, 0}, Rat(9)},  {{1, -1}, Rat(6)}, {{0, 1}, Rat(13)},
             {{-1, 1}, Rat(5)}, {{-1, 0}, Rat(3)}, {{-1, -1}, Rat(2)}};
    else if (name == "fig2-2")
        w = {{{0, 1}, Rat(7)}, {{1, 1}, Rat(7)},  {{1, 0}, Rat(5)},
             {{1, -1}, Rat(1)}, {{0, -1}, Rat(2)}, {{-1, -1}, Rat(1)}};
    else if (name == "fig2-3")
        w = {{{1, 1}, Rat(4)}, {{1, 0}, Rat(2)}, {{-1, 0}, Rat(6)}, {{-1, -1}, Rat(3)}};
    else if (name == "fig2-4")
        w = {{{1, 1}, Rat(1)}, {{1, 0}, Rat(2)},  {{0, -1}, Rat(1)}, {{-1, 0}, Rat(1)},
             {{0, 1}, Rat(2)}, {{-1, 1}, Rat(1)}, {{1, -1}, Rat(1)}};
    else
        throw ParseError("unknown builtin model '" + name + "'");
    return make_model(name, w);
}

std::vector<std::string> builtin_model_names() {
    return {"simple", "kreweras", "gessel", "single-ne", "fig2-1", "fig2-2", "fig2-3", "fig2-4"};
}

JumpDecomposition jump_decomposition(const WalkModel& m) {
    JumpDecomposition d;
    for (int j = -1; j <= 1; ++j) {
        // A_j(x) = (d_{-1,j} + d_{0,j} x + d_{1,j} x^2) / x
        d.A[j + 1].shift = -1;
        d.A[j + 1].poly = Poly1('x', {m.weight(-1, j), m.weight(0, j), m.weight(1, j)});
    }
    for (int i = -1; i <= 1; ++i) {
        d.B[i + 1].shift = -1;
        d.B[i + 1].poly = Poly1('y', {m.weight(i, -1), m.weight(i, 0), m.weight(i, 1)});
    }
    return d;
}

} // namespace quadwalk
