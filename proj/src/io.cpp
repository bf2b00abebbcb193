#include "imtl/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace imtl {

using nlohmann::json;

namespace {

json set_to_json(WorldSet s) { return json(s.to_vector()); }

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw ModelFormatError(std::string("missing field '") + key + "'");
    return obj.at(key);
}

WorldSet set_from_json(const json& j, std::size_t worlds, const std::string& where) {
    if (!j.is_array()) throw ModelFormatError(where + ": expected an array of world indices");
    WorldSet out;
    for (const auto& e : j) {
        if (!e.is_number_unsigned()) throw ModelFormatError(where + ": world index must be a nonnegative integer");
        const auto w = e.get<std::uint64_t>();
        if (w >= worlds) {
            throw ModelFormatError(where + ": world " + std::to_string(w) + " out of range (worlds = " +
                                   std::to_string(worlds) + ")");
        }
        out.insert(static_cast<World>(w));
    }
    return out;
}

json valuation_to_json(const Valuation& v) {
    json out = json::object();
    for (const auto& [name, set] : v) out[name] = set_to_json(set);
    return out;
}

Valuation valuation_from_json(const json& j, std::size_t worlds) {
    if (!j.is_object()) throw ModelFormatError("valuation: expected an object");
    Valuation out;
    for (const auto& [name, set] : j.items()) {
        // Reuse the formula lexer's notion of a variable name.
        try {
            const Formula f = parse(name);
            if (f.kind() != Connective::Var) throw ParseError("not a variable", 0);
        } catch (const ParseError&) {
            throw ModelFormatError("valuation: '" + name + "' is not a variable name");
        }
        out[name] = set_from_json(set, worlds, "valuation." + name);
    }
    return out;
}

json topology_to_json(const FiniteTopology& t) {
    json opens = json::array();
    for (WorldSet o : t.opens()) opens.push_back(set_to_json(o));
    return json{{"universe", set_to_json(t.universe())}, {"opens", opens}};
}

FiniteTopology topology_from_json(const json& j, std::size_t worlds, const std::string& where) {
    const WorldSet universe = set_from_json(field(j, "universe"), worlds, where + ".universe");
    const json& opens_j = field(j, "opens");
    if (!opens_j.is_array()) throw ModelFormatError(where + ".opens: expected an array");
    std::vector<WorldSet> opens;
    for (const auto& o : opens_j) opens.push_back(set_from_json(o, worlds, where + ".opens"));
    return FiniteTopology(universe, std::move(opens));
}

json model_to_json(const NimModel& m) {
    json min = json::array();
    json max = json::array();
    for (World w = 0; w < m.worlds(); ++w) {
        min.push_back(set_to_json(m.frame.min[w]));
        max.push_back(set_to_json(m.frame.max[w]));
    }
    return json{{"kind", "nim"},       {"worlds", m.worlds()}, {"t_condition", m.frame.t_condition},
                {"min", min},          {"max", max},           {"valuation", valuation_to_json(m.valuation)}};
}

json model_to_json(const Mt1Model& m) {
    json spaces = json::array();
    for (const auto& s : m.spaces) {
        json j = topology_to_json(s.topology);
        j["distinguished"] = set_to_json(s.distinguished);
        spaces.push_back(j);
    }
    return json{{"kind", "mt1"}, {"worlds", m.worlds}, {"spaces", spaces}, {"valuation", valuation_to_json(m.valuation)}};
}

template <typename Model>
json spaces_model_to_json(const Model& m, const char* kind) {
    json spaces = json::array();
    for (const auto& t : m.spaces) spaces.push_back(topology_to_json(t));
    return json{{"kind", kind}, {"worlds", m.worlds}, {"spaces", spaces}, {"valuation", valuation_to_json(m.valuation)}};
}

json model_to_json(const Mt2Model& m) { return spaces_model_to_json(m, "mt2"); }
json model_to_json(const Mt3Model& m) { return spaces_model_to_json(m, "mt3"); }

std::size_t worlds_from_json(const json& j) {
    const json& w = field(j, "worlds");
    if (!w.is_number_unsigned()) throw ModelFormatError("worlds: expected a nonnegative integer");
    const auto n = w.get<std::uint64_t>();
    if (n == 0) throw ModelFormatError("worlds: a model needs at least one world");
    if (n > kMaxWorlds) throw ModelFormatError("worlds: at most " + std::to_string(kMaxWorlds) + " supported");
    return static_cast<std::size_t>(n);
}

NimModel nim_from_json(const json& j, std::size_t n) {
    const json& min_j = field(j, "min");
    const json& max_j = field(j, "max");
    if (!min_j.is_array() || !max_j.is_array() || min_j.size() != n || max_j.size() != n) {
        throw ModelFormatError("min/max: expected one array per world");
    }
    std::vector<WorldSet> min, max;
    for (std::size_t w = 0; w < n; ++w) {
        min.push_back(set_from_json(min_j[w], n, "min[" + std::to_string(w) + "]"));
        max.push_back(set_from_json(max_j[w], n, "max[" + std::to_string(w) + "]"));
    }
    bool t_condition = true;
    if (j.contains("t_condition")) {
        if (!j.at("t_condition").is_boolean()) throw ModelFormatError("t_condition: expected a boolean");
        t_condition = j.at("t_condition").get<bool>();
    }
    NimModel m;
    m.frame = NimFrame(n, std::move(min), std::move(max), t_condition);
    m.valuation = valuation_from_json(field(j, "valuation"), n);
    return m;
}

template <typename Model>
Model spaces_model_from_json(const json& j, std::size_t n) {
    const json& spaces = field(j, "spaces");
    if (!spaces.is_array()) throw ModelFormatError("spaces: expected an array");
    Model m;
    m.worlds = n;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        m.spaces.push_back(topology_from_json(spaces[i], n, "spaces[" + std::to_string(i) + "]"));
    }
    m.valuation = valuation_from_json(field(j, "valuation"), n);
    return m;
}

Mt1Model mt1_from_json(const json& j, std::size_t n) {
    const json& spaces = field(j, "spaces");
    if (!spaces.is_array()) throw ModelFormatError("spaces: expected an array");
    Mt1Model m;
    m.worlds = n;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        const std::string where = "spaces[" + std::to_string(i) + "]";
        m.spaces.push_back({topology_from_json(spaces[i], n, where),
                            set_from_json(field(spaces[i], "distinguished"), n, where + ".distinguished")});
    }
    m.valuation = valuation_from_json(field(j, "valuation"), n);
    return m;
}

bool is_flat(const json& j) {
    for (const auto& e : j) {
        if (e.is_structured()) return false;
    }
    return true;
}

bool is_flat_nested(const json& j) {
    for (const auto& e : j) {
        if (!e.is_array() || !is_flat(e)) return false;
    }
    return true;
}

// Like json::dump(2), except that arrays of scalars stay on one line and an
// array of such arrays does too when it is short.
void render(const json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + json(key).dump() + ": ";
            render(value, indent + 2, out);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
        return;
    }
    if (j.is_array() && (is_flat(j) || is_flat_nested(j))) {
        std::string line = "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i > 0) line += ", ";
            std::string item;
            render(j[i], indent + 2, item);
            line += item;
        }
        line += "]";
        if (is_flat(j) || line.size() + static_cast<std::size_t>(indent) <= 80) {
            out += line;
            return;
        }
    }
    if (j.is_array() && !j.empty()) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i > 0) out += ",\n";
            out += pad;
            render(j[i], indent + 2, out);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
        return;
    }
    out += j.dump();
}

}  // namespace

std::string kind_name(const AnyModel& m) {
    static const char* names[] = {"nim", "mt1", "mt2", "mt3"};
    return names[m.index()];
}

std::size_t world_count(const AnyModel& m) {
    return std::visit(
        [](const auto& x) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, NimModel>) {
                return x.worlds();
            } else {
                return x.worlds;
            }
        },
        m);
}

std::string save_model(const AnyModel& m) {
    json j = std::visit([](const auto& x) { return model_to_json(x); }, m);
    j["format"] = kFormatVersion;
    std::string out;
    render(j, 0, out);
    return out + "\n";
}

AnyModel load_model(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ModelFormatError(std::string("not valid JSON: ") + e.what());
    }
    const json& version = field(j, "format");
    if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
        throw ModelFormatError("format: unsupported version " + version.dump());
    }
    const json& kind_j = field(j, "kind");
    if (!kind_j.is_string()) throw ModelFormatError("kind: expected a string");
    const std::string kind = kind_j.get<std::string>();
    const std::size_t n = worlds_from_json(j);
    try {
        if (kind == "nim") return nim_from_json(j, n);
        if (kind == "mt1") return mt1_from_json(j, n);
        if (kind == "mt2") return spaces_model_from_json<Mt2Model>(j, n);
        if (kind == "mt3") return spaces_model_from_json<Mt3Model>(j, n);
    } catch (const json::exception& e) {
        throw ModelFormatError(e.what());
    }
    throw ModelFormatError("kind: unknown model kind '" + kind + "'");
}

AnyModel load_model_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ModelFormatError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_model(buf.str());
}

void save_model_file(const std::filesystem::path& path, const AnyModel& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << save_model(m);
}

std::vector<std::string> validate(const AnyModel& m) {
    std::vector<std::string> out;
    auto add = [&](const auto& violations) {
        for (const auto& v : violations) out.push_back(v.describe());
    };
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NimModel>) add(validate_model(x));
            if constexpr (std::is_same_v<T, Mt1Model>) add(validate_mt1(x));
            if constexpr (std::is_same_v<T, Mt2Model>) add(validate_mt2(x));
            if constexpr (std::is_same_v<T, Mt3Model>) add(validate_mt3(x));
        },
        m);
    return out;
}

}  // namespace imtl
