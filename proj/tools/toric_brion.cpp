#include "toric/errors.hpp"
#include "toric/report.hpp"
#include "toric/spec_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in)
        throw toric::InvalidArgument("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        out.push_back(item);
    return out;
}

toric::Integer integer_arg(const std::string& s, const std::string& flag) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw toric::InvalidArgument(flag + ": '" + s + "' is not an integer");
    }
}

toric::LatticeVector degree_arg(const std::string& s) {
    toric::LatticeVector v;
    for (const auto& part : split(s, ','))
        v.push_back(integer_arg(part, "--degree"));
    return v;
}

toric::Box box_arg(const std::string& s) {
    toric::Box box;
    for (const auto& range : split(s, ',')) {
        auto ends = split(range, ':');
        if (ends.size() != 2)
            throw toric::InvalidArgument("--box: expected lo:hi, got '" + range + "'");
        box.lo.push_back(integer_arg(ends[0], "--box"));
        box.hi.push_back(integer_arg(ends[1], "--box"));
    }
    return box;
}

toric::Coefficients coefficients_arg(const std::string& s) {
    if (s == "rational")
        return toric::Coefficients::rational();
    if (s.rfind("modp:", 0) == 0) {
        toric::Integer p = integer_arg(s.substr(5), "--coefficients");
        bool prime = p >= 2;
        for (toric::Integer d = 2; prime && d * d <= p; ++d)
            prime = p % d != 0;
        if (!prime)
            throw toric::InvalidArgument("--coefficients: " + p.str() + " is not prime");
        return toric::Coefficients::modp(p);
    }
    throw toric::InvalidArgument("--coefficients: expected rational or modp:<p>");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded line bundle cohomology and Brion sums of complete fans"};
    std::string command, path, degree, box, format = "text", coefficients = "rational";
    bool oracle = false;
    app.add_option("command", command, "validate | cohomology | brion | polytope")
        ->required()
        ->check(CLI::IsMember({"validate", "cohomology", "brion", "polytope"}));
    app.add_option("input", path, "input document, or - for stdin")->required();
    app.add_option("--degree", degree, "single degree a1,a2,...");
    app.add_option("--box", box, "degree box lo1:hi1,lo2:hi2,...");
    app.add_flag("--oracle", oracle, "cross-check series against membership scans");
    app.add_option("--format", format, "text | machine")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--coefficients", coefficients, "rational | modp:<p>");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    toric::RunOptions options;
    try {
        if (!degree.empty())
            options.degree = degree_arg(degree);
        if (!box.empty())
            options.box = box_arg(box);
        options.oracle = oracle;
        options.coefficients = coefficients_arg(coefficients);
    } catch (const toric::InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        toric::FanSpec spec = toric::parse_spec(read_input(path));
        toric::Report report = toric::run(toric::parse_command(command), spec, options);
        const auto stop = std::chrono::steady_clock::now();
        report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        std::cout << toric::emit_report(report, format == "machine" ? toric::Format::machine : toric::Format::text);
        return report.exit_code();
    } catch (const toric::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const toric::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
