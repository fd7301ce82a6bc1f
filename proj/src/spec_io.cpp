#include "toric/spec_io.hpp"

#include "toric/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <regex>
#include <set>
#include <sstream>

namespace toric {

namespace {

int line_of(const YAML::Node& n) { return n.Mark().is_null() ? 0 : n.Mark().line + 1; }
int column_of(const YAML::Node& n) { return n.Mark().is_null() ? 0 : n.Mark().column + 1; }

[[noreturn]] void schema(const YAML::Node& at, const std::string& message) {
    throw SchemaError(message, line_of(at), column_of(at));
}

Integer parse_integer(const YAML::Node& n, const std::string& field) {
    static const std::regex pattern("[+-]?[0-9]+");
    if (!n.IsScalar() || !std::regex_match(n.Scalar(), pattern))
        schema(n, field + ": expected an integer");
    std::string s = n.Scalar();
    if (s.front() == '+')
        s.erase(s.begin());
    return Integer(s);
}

std::size_t parse_index(const YAML::Node& n, const std::string& field, std::size_t bound) {
    Integer v = parse_integer(n, field);
    if (v < 0 || v >= bound)
        schema(n, field + ": index " + v.str() + " out of range [0, " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(v);
}

void expect_sequence(const YAML::Node& n, const std::string& field) {
    if (!n.IsSequence())
        schema(n, field + ": expected a list");
}

std::vector<LatticeVector> parse_vectors(const YAML::Node& n, const std::string& field, std::size_t dim) {
    expect_sequence(n, field);
    std::vector<LatticeVector> out;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const YAML::Node& v = n[i];
        const std::string where = field + "[" + std::to_string(i) + "]";
        expect_sequence(v, where);
        if (v.size() != dim)
            throw DimensionMismatch(where + " has " + std::to_string(v.size()) + " entries, dim is " +
                                        std::to_string(dim),
                                    line_of(v), column_of(v));
        LatticeVector x;
        for (std::size_t j = 0; j < v.size(); ++j)
            x.push_back(parse_integer(v[j], where));
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace

FanSpec parse_spec(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw SyntaxError(e.msg, e.mark.line + 1, e.mark.column + 1);
    }
    if (!root.IsMap())
        throw SchemaError("document must be a mapping", line_of(root), column_of(root));

    static const std::set<std::string> known{"dim", "rays", "maximal_cones", "support", "polytope"};
    for (const auto& kv : root) {
        if (!kv.first.IsScalar() || !known.count(kv.first.Scalar()))
            schema(kv.first, "unknown field '" + (kv.first.IsScalar() ? kv.first.Scalar() : "?") + "'");
    }

    FanSpec spec;
    if (!root["dim"])
        throw SchemaError("missing field 'dim'", 1, 1);
    Integer dim = parse_integer(root["dim"], "dim");
    if (dim < 1 || dim > 64)
        schema(root["dim"], "dim must lie in 1..64");
    spec.dim = static_cast<std::size_t>(dim);

    const bool fan_form = root["rays"] || root["maximal_cones"] || root["support"];
    if (root["polytope"]) {
        if (fan_form)
            schema(root["polytope"], "'polytope' excludes 'rays', 'maximal_cones' and 'support'");
        spec.polytope = parse_vectors(root["polytope"], "polytope", spec.dim);
        if (spec.polytope->empty())
            schema(root["polytope"], "polytope: at least one vertex required");
        return spec;
    }
    if (!root["rays"] || !root["maximal_cones"])
        throw SchemaError("need either 'polytope' or both 'rays' and 'maximal_cones'", 1, 1);

    spec.rays = parse_vectors(root["rays"], "rays", spec.dim);
    const YAML::Node cones = root["maximal_cones"];
    expect_sequence(cones, "maximal_cones");
    for (std::size_t i = 0; i < cones.size(); ++i) {
        const std::string where = "maximal_cones[" + std::to_string(i) + "]";
        expect_sequence(cones[i], where);
        std::vector<std::size_t> ids;
        for (std::size_t j = 0; j < cones[i].size(); ++j)
            ids.push_back(parse_index(cones[i][j], where, spec.rays.size()));
        spec.maximal_cones.push_back(std::move(ids));
    }
    if (const YAML::Node support = root["support"]) {
        expect_sequence(support, "support");
        if (support.size() != spec.rays.size())
            schema(support, "support has " + std::to_string(support.size()) + " values for " +
                                std::to_string(spec.rays.size()) + " rays");
        std::vector<Integer> values;
        for (std::size_t i = 0; i < support.size(); ++i)
            values.push_back(parse_integer(support[i], "support"));
        spec.support = std::move(values);
    }
    return spec;
}

namespace {

template <typename T, typename F>
void list(std::ostream& out, const std::vector<T>& xs, F&& item) {
    out << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out << ',';
        item(xs[i]);
    }
    out << ']';
}

void vectors(std::ostream& out, const std::vector<LatticeVector>& vs) {
    list(out, vs, [&](const LatticeVector& v) { list(out, v, [&](const Integer& x) { out << x; }); });
}

} // namespace

std::string emit_spec(const FanSpec& spec) {
    std::ostringstream out;
    out << "dim: " << spec.dim << '\n';
    if (spec.polytope) {
        out << "polytope: ";
        vectors(out, *spec.polytope);
        out << '\n';
        return out.str();
    }
    out << "rays: ";
    vectors(out, spec.rays);
    out << "\nmaximal_cones: ";
    list(out, spec.maximal_cones, [&](const auto& c) { list(out, c, [&](std::size_t i) { out << i; }); });
    out << '\n';
    if (spec.support) {
        out << "support: ";
        list(out, *spec.support, [&](const Integer& x) { out << x; });
        out << '\n';
    }
    return out.str();
}

} // namespace toric
