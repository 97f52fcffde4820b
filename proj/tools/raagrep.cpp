#include "raagrep/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace raagrep;

namespace {

FieldElement parse_value(const std::string& text) {
    const auto rpos = text.find('r');
    if (rpos == std::string::npos) return FieldElement(parse_rational(text));
    const Rational coeff = parse_rational(text.substr(0, rpos));
    const Integer prime = parse_integer(text.substr(rpos + 1));
    return FieldElement::term(coeff, {prime.convert_to<std::int64_t>()});
}

// "default" or "c:<q>[r<p>],s:<q>[r<p>][,rad:<p>]"; rad multiplies sin by sqrt(p).
RotationParam parse_rotation(Axis axis, const std::string& spec, const RotationParam& fallback) {
    if (spec == "default") return fallback;
    FieldElement c, s;
    bool have_c = false, have_s = false;
    FieldElement rad(1L);
    std::istringstream is(spec);
    std::string item;
    while (std::getline(is, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("rotation token needs key:value: " + item);
        const std::string key = item.substr(0, colon);
        const std::string value = item.substr(colon + 1);
        if (key == "c") {
            c = parse_value(value);
            have_c = true;
        } else if (key == "s") {
            s = parse_value(value);
            have_s = true;
        } else if (key == "rad") {
            rad = FieldElement::radical(parse_integer(value).convert_to<std::int64_t>());
        } else {
            throw ParseError("rotation token has unknown key: " + key);
        }
    }
    if (!have_c || !have_s) throw ParseError("rotation token needs both c: and s:");
    return RotationParam(axis, c, s * rad);
}

std::vector<long> parse_exps(const std::string& spec, int vertex_count) {
    std::vector<long> exps;
    std::istringstream is(spec);
    std::string item;
    while (std::getline(is, item, ',')) exps.push_back(std::stol(item));
    if (exps.size() == 1) exps.assign(std::size_t(vertex_count), exps[0]);
    if (static_cast<int>(exps.size()) != vertex_count)
        throw ParseError("--exps wants one value or one per vertex");
    return exps;
}

void emit(const json& j, const std::string& path) {
    const std::string text = dump_canonical(j);
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << text;
}

Configuration load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open configuration file: " + path);
    json j;
    in >> j;
    return configuration_from_json(j);
}

int emit_certificate(const Configuration& c, const std::string& out_path) {
    const Certificate cert = certify_configuration(c);
    emit(to_json(cert), out_path);
    return cert.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and certification of right-angled Artin group "
                 "representations into SL(3,R), SO(3,2) and SL(5,Z)"};
    app.require_subcommand(1);

    std::string r1_spec = "default", r2_spec = "default", r3_spec = "default";
    std::string exps_spec, out_path, config_path;
    long n = 2;
    std::int64_t p = 3;
    bool run_certify = false;
    int max_syllables = 4;
    long exponent_bound = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--exps", exps_spec, "power scaling: one exponent or a comma list");
        cmd->add_flag("--certify", run_certify, "certify and emit the certificate");
        cmd->add_option("--emit", out_path, "output path (default: stdout)");
    };

    CLI::App* build_sl3_cmd = app.add_subcommand("build-sl3", "five-cycle in SL(3,R)");
    build_sl3_cmd->add_option("--r1", r1_spec, "x-rotation: default or c:...,s:...");
    build_sl3_cmd->add_option("--r2", r2_spec, "y-rotation: default or c:...,s:...");
    add_common(build_sl3_cmd);

    CLI::App* build_so32_cmd = app.add_subcommand("build-so32", "six-cycle in SO(3,2)");
    build_so32_cmd->add_option("--r1", r1_spec, "first y-rotation");
    build_so32_cmd->add_option("--r2", r2_spec, "x-rotation");
    build_so32_cmd->add_option("--r3", r3_spec, "second y-rotation");
    add_common(build_so32_cmd);

    CLI::App* build_sl5z_cmd = app.add_subcommand("build-sl5z", "five-cycle in SL(5,Z)");
    build_sl5z_cmd->add_option("--n", n, "block parameter, n >= 2");
    add_common(build_sl5z_cmd);

    CLI::App* certify_cmd = app.add_subcommand("certify", "certify a configuration file");
    certify_cmd->add_option("--config", config_path, "configuration JSON")->required();
    certify_cmd->add_option("--emit", out_path, "output path (default: stdout)");

    CLI::App* smoke_cmd = app.add_subcommand("smoke", "faithfulness smoke test");
    smoke_cmd->add_option("--config", config_path, "configuration JSON")->required();
    smoke_cmd->add_option("--max-syllables", max_syllables, "syllable bound");
    smoke_cmd->add_option("--exponent-bound", exponent_bound, "exponent bound");
    smoke_cmd->add_option("--emit", out_path, "output path (default: stdout)");

    CLI::App* fingerprint_cmd = app.add_subcommand("fingerprint", "conjugacy fingerprints");
    fingerprint_cmd->add_option("--config", config_path, "configuration JSON")->required();
    fingerprint_cmd->add_option("--emit", out_path, "output path (default: stdout)");

    CLI::App* congruence_cmd = app.add_subcommand("congruence", "orders mod p of the SL(5,Z) generators");
    congruence_cmd->add_option("--n", n, "block parameter, n >= 2");
    congruence_cmd->add_option("--p", p, "prime modulus")->required();
    congruence_cmd->add_option("--emit", out_path, "output path (default: stdout)");

    CLI::App* emit_cmd = app.add_subcommand("emit", "reload and re-emit a configuration");
    emit_cmd->add_option("--config", config_path, "configuration JSON")->required();
    emit_cmd->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build_sl3_cmd->parsed()) {
            Configuration c = build_sl3(parse_rotation(Axis::x, r1_spec, sl3_default_r1()),
                                        parse_rotation(Axis::y, r2_spec, sl3_default_r2()));
            if (!exps_spec.empty()) c = power_scale(c, parse_exps(exps_spec, 5));
            if (run_certify) return emit_certificate(c, out_path);
            emit(to_json(c), out_path);
            return 0;
        }
        if (build_so32_cmd->parsed()) {
            Configuration c = build_so32(parse_rotation(Axis::y, r1_spec, so32_default_r1()),
                                         parse_rotation(Axis::x, r2_spec, so32_default_r2()),
                                         parse_rotation(Axis::y, r3_spec, so32_default_r3()));
            if (!exps_spec.empty()) c = power_scale(c, parse_exps(exps_spec, 6));
            if (run_certify) return emit_certificate(c, out_path);
            emit(to_json(c), out_path);
            return 0;
        }
        if (build_sl5z_cmd->parsed()) {
            Configuration c = build_sl5z(n);
            if (!exps_spec.empty()) c = power_scale(c, parse_exps(exps_spec, 5));
            if (run_certify) return emit_certificate(c, out_path);
            emit(to_json(c), out_path);
            return 0;
        }
        if (certify_cmd->parsed()) return emit_certificate(load_config(config_path), out_path);
        if (smoke_cmd->parsed()) {
            const SmokeReport report =
                faithfulness_smoke(load_config(config_path), max_syllables, exponent_bound);
            emit(to_json(report), out_path);
            return report.all_nonidentity ? 0 : 1;
        }
        if (fingerprint_cmd->parsed()) {
            emit(fingerprint_json(load_config(config_path)), out_path);
            return 0;
        }
        if (congruence_cmd->parsed()) {
            json orders = json::array();
            Integer lcm_order = 1;
            for (int i = 1; i <= 5; ++i) {
                const Integer e = congruence_order(sl5z_generator(i, n), p);
                orders.push_back(e.str());
                lcm_order = boost::multiprecision::lcm(lcm_order, e);
            }
            emit({{"n", n}, {"p", p}, {"orders", orders}, {"lcm", lcm_order.str()}}, out_path);
            return 0;
        }
        if (emit_cmd->parsed()) {
            emit(to_json(load_config(config_path)), out_path);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
