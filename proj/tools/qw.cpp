#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qw/bijections.hpp"
#include "qw/characters.hpp"
#include "qw/clword.hpp"
#include "qw/json_io.hpp"
#include "qw/lattice.hpp"
#include "qw/splice.hpp"
#include "qw/verify.hpp"

namespace {

using qw::json;

qw::Partition parse_shape(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            parts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw qw::ParseError("shape: expected comma-separated integers");
        }
    }
    try {
        return qw::Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw qw::ParseError(std::string("shape: ") + e.what());
    }
}

json read_input(const std::string& path) {
    json j;
    try {
        if (path.empty() || path == "-") {
            std::cin >> j;
        } else {
            std::ifstream in(path);
            if (!in) throw qw::ParseError("cannot open input file: " + path);
            in >> j;
        }
    } catch (const json::parse_error& e) {
        throw qw::ParseError(std::string("invalid JSON: ") + e.what());
    }
    return j;
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        if (!data.empty() && data.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << data;
}

std::string poly_output(const qw::QXPoly& p, const std::string& format) {
    if (format == "json") return qw::to_json(p).dump(2);
    return qw::polynomial_text(p);
}

int cmd_expand(const std::string& shape, int n, const std::string& method,
               const std::string& format, const std::string& out) {
    qw::Partition lambda = parse_shape(shape);
    qw::QXPoly p(n);
    if (method == "inv") {
        p = qw::whittaker(lambda, n, qw::WhittakerMethod::Inv);
    } else if (method == "quinv") {
        p = qw::whittaker(lambda, n, qw::WhittakerMethod::Quinv);
    } else if (method == "fermionic") {
        p = qw::whittaker(lambda, n, qw::WhittakerMethod::Fermionic);
    } else if (method == "schur") {
        p = qw::schur(lambda, n);
    } else if (method == "macdonald-inv") {
        p = qw::modified_macdonald(lambda, n, true);
    } else if (method == "macdonald-quinv") {
        p = qw::modified_macdonald(lambda, n, false);
    } else {
        throw qw::ParseError("unknown method: " + method);
    }
    write_output(out, poly_output(p, format));
    return 0;
}

int cmd_bijection(const std::string& stat, const std::string& dir, const std::string& input,
                  const std::string& out) {
    json j = read_input(input);
    if (stat == "omega") {
        qw::Filling f = qw::filling_from_json(j);
        write_output(out, qw::to_json(qw::omega(f)).dump(2));
        return 0;
    }
    bool use_inv = stat == "inv";
    if (!use_inv && stat != "quinv") throw qw::ParseError("unknown stat: " + stat);
    if (dir == "forward") {
        qw::Filling f = qw::filling_from_json(j);
        write_output(out, qw::to_json(qw::psi(f, use_inv)).dump(2));
    } else if (dir == "inverse") {
        qw::POP p = qw::pop_from_json(j);
        write_output(out, qw::to_json(qw::psi_inverse(p, use_inv)).dump(2));
    } else {
        throw qw::ParseError("unknown direction: " + dir);
    }
    return 0;
}

int cmd_dsplice(const std::string& input, bool trace, const std::string& out) {
    qw::Filling f = qw::filling_from_json(read_input(input));
    std::vector<qw::DspliceStep> steps;
    qw::Filling d = qw::dsplice_traced(f, steps);
    if (!trace) {
        write_output(out, qw::to_json(d).dump(2));
        return 0;
    }
    json jtrace = json::array();
    for (const auto& s : steps)
        jtrace.push_back(json{{"splice_at", s.index}, {"shape_after", s.shape_after}});
    write_output(out, json{{"result", qw::to_json(d)}, {"trace", jtrace}}.dump(2));
    return 0;
}

int cmd_clword(const std::string& stat, const std::string& input, const std::string& format,
               const std::string& out) {
    qw::Filling f = qw::filling_from_json(read_input(input));
    bool use_inv = stat == "inv";
    if (!use_inv && stat != "quinv") throw qw::ParseError("unknown stat: " + stat);
    qw::CLWord w = qw::b_stat(f, use_inv);
    write_output(out, format == "json" ? qw::to_json(w).dump(2) : w.to_string());
    return 0;
}

int cmd_render(const std::string& input, const std::string& format, const std::string& out) {
    qw::Filling f = qw::filling_from_json(read_input(input));
    if (format == "svg") {
        write_output(out, qw::render(f, qw::RenderFormat::Svg));
    } else if (format == "text") {
        write_output(out, qw::render(f, qw::RenderFormat::Text));
    } else {
        throw qw::ParseError("unsupported render format: " + format);
    }
    return 0;
}

int cmd_limit(const std::string& shape, int n, int qmax, int kmax, const std::string& format,
              const std::string& out) {
    qw::Partition lambda = parse_shape(shape);
    int K = kmax >= 0 ? kmax : qw::stabilized_K(lambda, n, qmax);
    qw::QXPoly csf_side = qw::chi_via_csf(lambda, n, K, qmax);
    std::ostringstream os;
    if (lambda.empty()) {
        qw::QXPoly theta_side = qw::chi_lambda0_truncated(n, qmax);
        bool equal = csf_side == theta_side;
        if (format == "json") {
            os << json{{"csf", qw::to_json(csf_side)},
                       {"theta_eta", qw::to_json(theta_side)},
                       {"k", K},
                       {"equal", equal}}
                      .dump(2);
        } else {
            os << "csf side       (K=" << K << "): " << qw::polynomial_text(csf_side) << "\n";
            os << "theta/eta side        : " << qw::polynomial_text(theta_side) << "\n";
            os << "diff                  : "
               << (equal ? "0" : qw::polynomial_text(csf_side - theta_side)) << "\n";
        }
        write_output(out, os.str());
        return equal ? 0 : 1;
    }
    if (format == "json")
        os << json{{"csf", qw::to_json(csf_side)}, {"k", K}}.dump(2);
    else
        os << "csf side (K=" << K << "): " << qw::polynomial_text(csf_side) << "\n";
    write_output(out, os.str());
    return 0;
}

int cmd_verify(const std::string& suite, int max_cells, int max_n, int qmax) {
    std::vector<qw::VerifyResult> results;
    if (suite == "all") {
        results = qw::verify_all(max_cells, max_n, qmax);
    } else {
        try {
            results.push_back(qw::run_suite(suite, max_cells, max_n, qmax));
        } catch (const std::invalid_argument& e) {
            throw qw::ParseError(e.what());
        }
    }
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.suite << " (" << r.cases_checked
                  << " cases)\n";
        if (!r.passed) {
            ok = false;
            std::cerr << r.counterexample << "\n";
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-Whittaker combinatorics toolkit"};
    app.require_subcommand(1);

    std::string shape, method = "inv", stat = "quinv", dir = "forward";
    std::string format = "text", input, out;
    int n = 2, qmax = 4, kmax = -1, max_cells = 6, max_n = 4;
    bool trace = false;
    std::string suite = "all";

    auto* expand = app.add_subcommand("expand", "print a polynomial expansion");
    expand->add_option("--shape", shape, "partition, comma-separated parts")->required();
    expand->add_option("--n", n, "number of variables")->required();
    expand->add_option("--method", method, "inv|quinv|fermionic|schur|macdonald-inv|macdonald-quinv");
    expand->add_option("--format", format, "text|json");
    expand->add_option("--out", out, "output file (default stdout)");

    auto* bijection = app.add_subcommand("bijection", "apply a bijection to JSON input");
    bijection->add_option("--stat", stat, "inv|quinv|omega");
    bijection->add_option("--dir", dir, "forward|inverse");
    bijection->add_option("--input", input, "input file (default stdin)");
    bijection->add_option("--out", out, "output file (default stdout)");

    auto* dspl = app.add_subcommand("dsplice", "delete-and-splice branching of a filling");
    dspl->add_option("--input", input, "input file (default stdin)");
    dspl->add_flag("--trace", trace, "include intermediate shapes and splice indices");
    dspl->add_option("--out", out, "output file (default stdout)");

    auto* clw = app.add_subcommand("clword", "print the current-algebra word of a filling");
    clw->add_option("--stat", stat, "inv|quinv");
    clw->add_option("--input", input, "input file (default stdin)");
    clw->add_option("--format", format, "text|json");
    clw->add_option("--out", out, "output file (default stdout)");

    auto* rend = app.add_subcommand("render", "draw the lattice-path diagram of a filling");
    rend->add_option("--input", input, "input file (default stdin)");
    rend->add_option("--format", format, "text|svg");
    rend->add_option("--out", out, "output file (default stdout)");

    auto* limit = app.add_subcommand("limit", "character truncations from both constructions");
    limit->add_option("--shape", shape, "partition, comma-separated parts (default empty)");
    limit->add_option("--n", n, "number of variables")->required();
    limit->add_option("--qmax", qmax, "truncation degree");
    limit->add_option("--kmax", kmax, "fixed K (default: stabilize automatically)");
    limit->add_option("--format", format, "text|json");
    limit->add_option("--out", out, "output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "run identity suites");
    ver->add_option("--suite", suite, "suite name or 'all'");
    ver->add_option("--max-cells", max_cells, "largest shape size");
    ver->add_option("--max-n", max_n, "largest entry bound");
    ver->add_option("--qmax", qmax, "truncation degree for the limit suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed()) return cmd_expand(shape, n, method, format, out);
        if (bijection->parsed()) return cmd_bijection(stat, dir, input, out);
        if (dspl->parsed()) return cmd_dsplice(input, trace, out);
        if (clw->parsed()) return cmd_clword(stat, input, format, out);
        if (rend->parsed()) return cmd_render(input, format, out);
        if (limit->parsed()) return cmd_limit(shape, n, qmax, kmax, format, out);
        if (ver->parsed()) return cmd_verify(suite, max_cells, max_n, qmax);
    } catch (const qw::ParseError& e) {
        std::cerr << qw::json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        // domain precondition violations count as malformed input
        std::cerr << qw::json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << qw::json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
