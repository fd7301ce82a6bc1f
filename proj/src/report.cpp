#include "toric/report.hpp"

#include "toric/errors.hpp"
#include "toric/genfun.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace toric {

using nlohmann::json;

Command parse_command(const std::string& name) {
    if (name == "validate")
        return Command::validate;
    if (name == "cohomology")
        return Command::cohomology;
    if (name == "brion")
        return Command::brion;
    if (name == "polytope")
        return Command::polytope;
    throw InvalidArgument("unknown command '" + name + "'");
}

std::string command_name(Command c) {
    switch (c) {
    case Command::validate:
        return "validate";
    case Command::cohomology:
        return "cohomology";
    case Command::brion:
        return "brion";
    case Command::polytope:
        return "polytope";
    }
    return "?";
}

int Report::exit_code() const {
    if (command == Command::validate && !fan.complete)
        return 3;
    if (identity_holds && !*identity_holds)
        return 3;
    bool checks_pass = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    return checks_pass ? 0 : 3;
}

// ---------------------------------------------------------------- run

namespace {

struct Prepared {
    std::shared_ptr<const Fan> fan;
    std::optional<SupportFunction> h;
};

Prepared prepare(const FanSpec& spec) {
    if (spec.is_polytope()) {
        NormalFan nf = normal_fan_of_polytope(LatticePolytope(spec.dim, *spec.polytope));
        return {nf.fan, nf.support};
    }
    auto fan = std::make_shared<const Fan>(build_fan(spec.dim, spec.rays, spec.maximal_cones));
    Prepared p{fan, std::nullopt};
    if (spec.support)
        p.h = support_from_ray_values(fan, *spec.support);
    return p;
}

FanSummary summarize(const Fan& fan) {
    FanSummary s;
    s.dim = fan.ambient_dim();
    s.rays = fan.rays();
    for (auto id : fan.maximal_ids())
        s.maximal_cones.push_back(fan.cone(id).ray_ids);
    s.f_vector = fan.f_vector();
    CompletenessReport c = check_complete(fan);
    s.complete = c.complete;
    s.witness = c.witness;
    return s;
}

CohomologySection section(const CohomologyTable& t) { return {t.region, t.shell_checked, t.entries}; }

void run_oracles(const SupportFunction& h, const Report& r, std::vector<CheckResult>& checks) {
    const Fan& fan = *h.fan;
    const std::size_t n = fan.ambient_dim();

    CheckResult series{"series_oracle", true, ""};
    for (std::size_t i = 0; i < fan.maximal_ids().size(); ++i) {
        const auto id = fan.maximal_ids()[i];
        const LatticeVector apex = negate(h.h_sigma[id]);
        Box box{apex, apex};
        for (std::size_t j = 0; j < n; ++j) {
            box.lo[j] -= 2;
            box.hi[j] += 3;
        }
        Cone dual = dual_cone(fan.cone(id).cone);
        if (!(expand_series(r.terms[i], box) == truncated_series(apex, dual, box)) && series.passed) {
            series.passed = false;
            series.witness = "maximal cone " + std::to_string(i);
        }
    }
    checks.push_back(series);

    // Pointwise alternating sum of shifted dual cones over every cone.
    CheckResult counted{"cone_sum_oracle", true, ""};
    const Box& region = r.cohomology->region;
    std::map<LatticeVector, Integer> total;
    for (std::size_t id = 0; id < fan.size(); ++id) {
        const Integer sign = (n - fan.cone(id).dim()) % 2 == 0 ? 1 : -1;
        SeriesBox s = truncated_series(negate(h.h_sigma[id]), dual_cone(fan.cone(id).cone), region);
        for (const auto& [e, c] : s.coefficients)
            total[e] += sign * c;
    }
    region.for_each_point([&](const LatticeVector& a) {
        auto it = total.find(a);
        Integer c = it == total.end() ? Integer(0) : it->second;
        if (c != r.chi_polynomial->coefficient(a) && counted.passed) {
            counted.passed = false;
            counted.witness = "degree " + to_string(a);
        }
    });
    checks.push_back(counted);
}

} // namespace

Report run(Command command, const FanSpec& spec, const RunOptions& options) {
    if (command == Command::polytope && !spec.is_polytope())
        throw InvalidArgument("the polytope command needs a 'polytope' document");
    Prepared p = prepare(spec);

    Report r;
    r.command = command;
    r.fan = summarize(*p.fan);
    r.polytope = spec.polytope;
    if (p.h)
        r.support = p.h->ray_values;
    if (command == Command::validate) {
        r.checks.push_back({"complete", r.fan.complete, r.fan.witness});
        return r;
    }

    if (!r.fan.complete)
        throw IncompleteFan(r.fan.witness);
    if (!p.h)
        throw InvalidArgument("command '" + command_name(command) + "' needs support values");
    const SupportFunction& h = *p.h;
    TableOptions table_options{options.box, options.coefficients};

    if (command == Command::cohomology) {
        CohomologyEngine engine(h, options.coefficients);
        if (options.degree) {
            if (options.degree->size() != spec.dim)
                throw InvalidArgument("degree " + to_string(*options.degree) + " has the wrong dimension");
            CohomologySection s{Box{*options.degree, *options.degree}, false, {}};
            const auto& c = engine.cohomology(*options.degree);
            if (!c.is_zero())
                s.entries.emplace(*options.degree, c);
            r.cohomology = std::move(s);
            return r;
        }
        CohomologyTable table = cohomology_table(engine, table_options);
        r.chi_polynomial = chi_polynomial(table, engine);
        r.cohomology = section(table);
        return r;
    }

    VerificationReport v = verify_identity(h, table_options);
    r.cohomology = section(v.table);
    r.chi_polynomial = v.chi_polynomial;
    r.terms = v.terms;
    r.identity_holds = v.identity_holds;
    r.checks = v.checks;
    r.notes = v.notes;
    if (options.oracle)
        run_oracles(h, r, r.checks);
    return r;
}

// ---------------------------------------------------------------- formatting

bool graded_before(const LatticeVector& a, const LatticeVector& b) {
    Integer da = 0, db = 0;
    for (const auto& x : a)
        da += x;
    for (const auto& x : b)
        db += x;
    if (da != db) {
        if ((da >= 0) != (db >= 0))
            return da >= 0;
        return da >= 0 ? da < db : da > db;
    }
    return b < a;
}

std::string format_monomial(const LatticeVector& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += "x" + std::to_string(i + 1);
        if (e[i] != 1)
            out += "^" + e[i].str();
    }
    return out.empty() ? "1" : out;
}

std::string format_polynomial(const LaurentPolynomial& p) {
    if (p.is_zero())
        return "0";
    auto terms = p.terms();
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return graded_before(a.first, b.first); });
    std::string out;
    for (const auto& [e, c] : terms) {
        const bool negative = c < 0;
        const Integer magnitude = negative ? Integer(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const std::string m = format_monomial(e);
        if (is_zero(e))
            out += magnitude.str();
        else if (magnitude == 1)
            out += m;
        else
            out += magnitude.str() + "*" + m;
    }
    return out;
}

std::string format_rational(const RationalGF& f) {
    std::string num = format_polynomial(f.numerator);
    if (f.denominator.empty())
        return num;
    std::string den;
    for (const auto& g : f.denominator)
        den += (den.empty() ? "" : "*") + std::string("(1 - ") + format_monomial(g) + ")";
    if (f.numerator.size() > 1)
        num = "(" + num + ")";
    if (f.denominator.size() > 1)
        den = "(" + den + ")";
    return num + " / " + den;
}

namespace {

std::string dims_text(const DegreeCohomology& c) {
    std::string out;
    for (std::size_t k = 0; k < c.dims.size(); ++k) {
        if (c.dims[k] == 0 && c.torsion[k].empty())
            continue;
        if (!out.empty())
            out += ", ";
        out += "H^" + std::to_string(k) + "=" + std::to_string(c.dims[k]);
        for (const auto& t : c.torsion[k])
            out += " + Z/" + t.str();
    }
    return out;
}

std::string box_text(const Box& b) {
    std::string out;
    for (std::size_t i = 0; i < b.dim(); ++i)
        out += (i ? " x " : "") + std::string("[") + b.lo[i].str() + "," + b.hi[i].str() + "]";
    return out;
}

std::string emit_text(const Report& r) {
    std::ostringstream out;
    out << "command: " << command_name(r.command) << '\n';
    out << "fan: dim " << r.fan.dim << ", " << r.fan.rays.size() << " rays, " << r.fan.maximal_cones.size()
        << " maximal cones, f-vector";
    for (auto f : r.fan.f_vector)
        out << ' ' << f;
    out << '\n';
    out << "complete: " << (r.fan.complete ? "yes" : "no (" + r.fan.witness + ")") << '\n';
    if (r.polytope) {
        out << "polytope vertices:";
        for (const auto& v : *r.polytope)
            out << ' ' << to_string(v);
        out << '\n';
    }
    if (r.support) {
        out << "support:";
        for (std::size_t i = 0; i < r.support->size(); ++i)
            out << ' ' << to_string(r.fan.rays[i]) << "->" << (*r.support)[i];
        out << '\n';
    }
    if (r.cohomology) {
        out << "degree_region: " << box_text(r.cohomology->region)
            << (r.cohomology->shell_checked ? " (shell checked)" : "") << '\n';
        out << "cohomology:";
        if (r.cohomology->entries.empty())
            out << " zero";
        out << '\n';
        std::vector<LatticeVector> degrees;
        for (const auto& [b, c] : r.cohomology->entries)
            degrees.push_back(b);
        std::sort(degrees.begin(), degrees.end(), graded_before);
        for (const auto& b : degrees)
            out << "  " << to_string(b) << ": " << dims_text(r.cohomology->entries.at(b)) << '\n';
    }
    if (r.chi_polynomial)
        out << "chi_polynomial: " << format_polynomial(*r.chi_polynomial) << '\n';
    if (!r.terms.empty()) {
        out << "brion_terms:\n";
        for (std::size_t i = 0; i < r.terms.size(); ++i)
            out << "  cone " << i << ": " << format_rational(r.terms[i]) << '\n';
    }
    if (r.identity_holds)
        out << "identity_holds: " << (*r.identity_holds ? "true" : "false") << '\n';
    for (const auto& c : r.checks)
        out << "check " << c.name << ": " << (c.passed ? "pass" : "FAIL at " + c.witness) << '\n';
    for (const auto& n : r.notes)
        out << "note: " << n << '\n';
    if (r.elapsed_ms)
        out << "elapsed_ms: " << *r.elapsed_ms << '\n';
    return out.str();
}

// ---------------------------------------------------------------- JSON

json int_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

Integer int_from(const json& j) {
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw SchemaError("expected an integer, got " + j.dump());
}

json vec_json(const LatticeVector& v) {
    json a = json::array();
    for (const auto& x : v)
        a.push_back(int_json(x));
    return a;
}

LatticeVector vec_from(const json& j) {
    LatticeVector v;
    for (const auto& x : j)
        v.push_back(int_from(x));
    return v;
}

json vecs_json(const std::vector<LatticeVector>& vs) {
    json a = json::array();
    for (const auto& v : vs)
        a.push_back(vec_json(v));
    return a;
}

std::vector<LatticeVector> vecs_from(const json& j) {
    std::vector<LatticeVector> vs;
    for (const auto& v : j)
        vs.push_back(vec_from(v));
    return vs;
}

json poly_json(const LaurentPolynomial& p) {
    auto terms = p.terms();
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return graded_before(a.first, b.first); });
    json a = json::array();
    for (const auto& [e, c] : terms)
        a.push_back({{"exponent", vec_json(e)}, {"coefficient", int_json(c)}});
    return a;
}

LaurentPolynomial poly_from(const json& j, std::size_t dim) {
    std::vector<LaurentPolynomial::Term> terms;
    for (const auto& t : j)
        terms.emplace_back(vec_from(t.at("exponent")), int_from(t.at("coefficient")));
    return LaurentPolynomial::from_terms(dim, std::move(terms));
}

std::string emit_machine(const Report& r) {
    json j;
    j["command"] = command_name(r.command);
    json maximal = json::array();
    for (const auto& c : r.fan.maximal_cones)
        maximal.push_back(c);
    j["fan"] = {{"dim", r.fan.dim},           {"rays", vecs_json(r.fan.rays)},
                {"maximal_cones", maximal},   {"f_vector", r.fan.f_vector},
                {"complete", r.fan.complete}, {"witness", r.fan.witness}};
    if (r.support)
        j["support"] = vec_json(*r.support);
    if (r.polytope)
        j["polytope"] = vecs_json(*r.polytope);
    if (r.cohomology) {
        std::vector<LatticeVector> degrees;
        for (const auto& entry : r.cohomology->entries)
            degrees.push_back(entry.first);
        std::sort(degrees.begin(), degrees.end(), graded_before);
        json entries = json::array();
        for (const auto& b : degrees) {
            const DegreeCohomology& c = r.cohomology->entries.at(b);
            json torsion = json::array();
            for (const auto& t : c.torsion)
                torsion.push_back(vec_json(t));
            entries.push_back(
                {{"degree", vec_json(b)}, {"dims", c.dims}, {"torsion", torsion}, {"chi", int_json(c.chi)}});
        }
        j["cohomology"] = {{"region", {{"lo", vec_json(r.cohomology->region.lo)},
                                       {"hi", vec_json(r.cohomology->region.hi)}}},
                           {"shell_checked", r.cohomology->shell_checked},
                           {"entries", entries}};
    }
    if (r.chi_polynomial)
        j["chi_polynomial"] = poly_json(*r.chi_polynomial);
    json terms = json::array();
    for (const auto& t : r.terms)
        terms.push_back({{"numerator", poly_json(t.numerator)}, {"denominator", vecs_json(t.denominator)}});
    j["terms"] = terms;
    if (r.identity_holds)
        j["identity_holds"] = *r.identity_holds;
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
    j["checks"] = checks;
    j["notes"] = r.notes;
    return j.dump(2) + "\n";
}

} // namespace

std::string emit_report(const Report& r, Format format) {
    return format == Format::text ? emit_text(r) : emit_machine(r);
}

Report parse_report(const std::string& machine) {
    json j;
    try {
        j = json::parse(machine);
    } catch (const json::parse_error& e) {
        throw SyntaxError(e.what());
    }
    try {
        Report r;
        r.command = parse_command(j.at("command").get<std::string>());
        const json& fan = j.at("fan");
        r.fan.dim = fan.at("dim").get<std::size_t>();
        r.fan.rays = vecs_from(fan.at("rays"));
        r.fan.maximal_cones = fan.at("maximal_cones").get<std::vector<std::vector<std::size_t>>>();
        r.fan.f_vector = fan.at("f_vector").get<std::vector<std::size_t>>();
        r.fan.complete = fan.at("complete").get<bool>();
        r.fan.witness = fan.at("witness").get<std::string>();
        const std::size_t n = r.fan.dim;
        if (j.contains("support"))
            r.support = vec_from(j["support"]);
        if (j.contains("polytope"))
            r.polytope = vecs_from(j["polytope"]);
        if (j.contains("cohomology")) {
            const json& c = j["cohomology"];
            CohomologySection s;
            s.region = Box{vec_from(c.at("region").at("lo")), vec_from(c.at("region").at("hi"))};
            s.shell_checked = c.at("shell_checked").get<bool>();
            for (const auto& e : c.at("entries")) {
                DegreeCohomology d;
                d.dims = e.at("dims").get<std::vector<std::size_t>>();
                for (const auto& t : e.at("torsion"))
                    d.torsion.push_back(vec_from(t));
                d.chi = int_from(e.at("chi"));
                s.entries.emplace(vec_from(e.at("degree")), std::move(d));
            }
            r.cohomology = std::move(s);
        }
        if (j.contains("chi_polynomial"))
            r.chi_polynomial = poly_from(j["chi_polynomial"], n);
        for (const auto& t : j.at("terms"))
            r.terms.push_back({poly_from(t.at("numerator"), n), vecs_from(t.at("denominator"))});
        if (j.contains("identity_holds"))
            r.identity_holds = j["identity_holds"].get<bool>();
        for (const auto& c : j.at("checks"))
            r.checks.push_back(
                {c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("witness").get<std::string>()});
        r.notes = j.at("notes").get<std::vector<std::string>>();
        return r;
    } catch (const json::exception& e) {
        throw SchemaError(e.what());
    }
}

} // namespace toric
