#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "paracalc/embedded_sessions.hpp"
#include "paracalc/runner.hpp"

namespace {

int run_check(const std::string& path, const std::string& format, const paracalc::RunConfig& cfg,
              const std::string& out_path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();

    paracalc::Session session;
    try {
        session = paracalc::parse_session(ss.str(), path);
    } catch (const paracalc::ParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return 2;
    } catch (const paracalc::Error& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return 2;
    }

    paracalc::RunResult result = paracalc::run_session(session, cfg);
    std::string rendered = format == "json" ? paracalc::emit_json(session, result, cfg)
                                            : paracalc::emit_text(session, result, cfg);
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 2;
        }
        out << rendered;
    }
    return result.exit_code;
}

int run_parse(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        paracalc::Session s = paracalc::parse_session(ss.str(), path);
        std::cout << path << ": ok (" << s.directives.size() << " directives)\n";
        return 0;
    } catch (const paracalc::Error& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return 2;
    }
}

int run_catalog(const std::string& dir) {
    std::cout << "built-in structures on chart R3(x, y, z):\n";
    std::cout << "  S0  flat:          phi: dx <-> dy, phi dz = 0; eta = dz; g = diag(1,-1,1)\n";
    std::cout << "  S1  contact-type:  eta = dz - y dx; phi dy = dx + y dz; normal\n";
    std::cout << "  S2  z-dependent:   phi dx = exp(z) dy; not normal (L_xi phi != 0)\n";
    std::cout << "  neg_phi_sq, neg_eta_xi: single-axiom negatives for failure-path tests\n";

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        std::cerr << "error: cannot create directory '" << dir << "'\n";
        return 2;
    }
    for (const auto& s : paracalc::embedded_sessions()) {
        std::filesystem::path p = std::filesystem::path(dir) / s.name;
        std::ofstream out(p, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << p.string() << "'\n";
            return 2;
        }
        out << s.text;
        std::cout << "wrote " << p.string() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"paracalc - symbolic checks for paracontact structures on TM+T*M"};
    app.require_subcommand(1);

    std::string file, format = "text", out_path;
    paracalc::RunConfig cfg;

    auto* check = app.add_subcommand("check", "parse a session file and run its check directives");
    check->add_option("file", file, "session file")->required();
    check->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    check->add_option("--seed", cfg.sampler.seed, "sampling seed");
    check->add_option("--samples", cfg.sampler.samples, "numeric sample count");
    check->add_option("--tolerance", cfg.sampler.tolerance, "numeric zero tolerance");
    check->add_flag("--strict", cfg.strict, "treat numeric-pass as failure");
    check->add_option("--out", out_path, "write the report to a file instead of stdout");

    std::string parse_file;
    auto* parse = app.add_subcommand("parse", "syntax-check a session file");
    parse->add_option("file", parse_file, "session file")->required();

    std::string catalog_dir = "catalog";
    auto* catalog = app.add_subcommand("catalog",
                                       "list built-in structures and write the session corpus");
    catalog->add_option("dir", catalog_dir, "output directory (default: catalog)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (check->parsed()) return run_check(file, format, cfg, out_path);
    if (parse->parsed()) return run_parse(parse_file);
    return run_catalog(catalog_dir);
}
