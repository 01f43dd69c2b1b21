#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "charcodes/decode_dbch.hpp"
#include "charcodes/decode_qr.hpp"
#include "charcodes/io.hpp"
#include "charcodes/oracle.hpp"

namespace charcodes::cli {

namespace {

struct CommonOpts {
    std::string field_spec;
    std::string field_file;
    std::string input;   // word or poly file; empty = stdin
    std::string output;  // empty = stdout
};

std::string slurp(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string read_input(const CommonOpts& c, std::istream& in) {
    if (c.input.empty()) return slurp(in);
    std::ifstream is(c.input);
    if (!is) throw ParseError("cannot open input file: " + c.input);
    return slurp(is);
}

void write_output(const CommonOpts& c, std::ostream& out, const std::string& text) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream os(c.output);
    if (!os) throw ParseError("cannot open output file: " + c.output);
    os << text;
}

FieldRef field_from_opts(const CommonOpts& c) {
    if (!c.field_spec.empty()) return parse_field_spec(c.field_spec);
    std::string path = c.field_file;
    if (path.empty()) {
        if (const char* env = std::getenv("CHARCODES_FIELD")) path = env;
    }
    if (path.empty()) throw ParseError("no field given: use --field, --field-file or CHARCODES_FIELD");
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open field spec file: " + path);
    std::string line;
    std::getline(is, line);
    return parse_field_spec(line);
}

Family parse_family(const std::string& s) {
    if (s == "qr") return Family::qr;
    if (s == "dbch") return Family::dbch;
    if (s == "mth") return Family::mth;
    if (s == "addp") return Family::addp;
    throw ParseError("unknown family: " + s);
}

Rational parse_eps(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) throw ParseError("eps must be of the form a/b");
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

struct DecodeOpts {
    std::string family = "qr";
    uint64_t m = 3;
    uint64_t d = 1, e = 0;
    std::string eps = "1/16";
    uint64_t seed = 0;
    bool lab = false;
    std::optional<uint64_t> M, c, h, u, D;
};

void add_decode_params(CLI::App* cmd, DecodeOpts& o) {
    cmd->set_help_flag("--help", "print help");  // frees -h for the h override
    cmd->add_option("--family", o.family, "code family: qr|dbch|mth|addp");
    cmd->add_option("--m", o.m, "power-residue order (mth family)");
    cmd->add_option("--d", o.d, "degree bound")->required();
    cmd->add_option("--e", o.e, "error bound");
    cmd->add_option("--eps", o.eps, "slack as a rational a/b");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_flag("--lab", o.lab, "bypass theorem-mode parameter validation");
    cmd->add_option("--M", o.M, "override M");
    cmd->add_option("--c", o.c, "override c");
    cmd->add_option("--h", o.h, "override h");
    cmd->add_option("--u", o.u, "override u");
    cmd->add_option("--D", o.D, "override D (qr/mth)");
}

QRDecoderParams qr_params(const DecodeOpts& o) {
    QRDecoderParams p;
    p.d = o.d;
    p.e = o.e;
    p.eps = parse_eps(o.eps);
    p.lab = o.lab;
    p.M = o.M;
    p.c = o.c;
    p.h = o.h;
    p.u = o.u;
    p.D = o.D;
    return p;
}

DBCHDecoderParams dbch_params(const DecodeOpts& o) {
    DBCHDecoderParams p;
    p.d = o.d;
    p.e = o.e;
    p.eps = parse_eps(o.eps);
    p.lab = o.lab;
    p.M = o.M;
    p.c = o.c;
    p.h = o.h;
    p.u = o.u;
    return p;
}

Poly decode_any(const FieldRef& f, const ReceivedWord& w, const DecodeOpts& o, std::string& diag) {
    switch (parse_family(o.family)) {
        case Family::qr: {
            auto res = decode_qr(f, w, qr_params(o), o.seed);
            diag = res.diag.text();
            return res.g;
        }
        case Family::mth: {
            auto res = decode_mth(f, o.m, w, qr_params(o), o.seed);
            diag = res.diag.text();
            return res.g;
        }
        case Family::dbch: {
            auto res = decode_dbch(f, w, dbch_params(o), o.seed);
            diag = res.diag.text();
            return res.g;
        }
        case Family::addp: {
            auto res = decode_addp(f, w, dbch_params(o), o.seed);
            diag = res.diag.text();
            return res.g;
        }
    }
    throw ParseError("unknown family");
}

ReceivedWord encode_any(const FieldRef& f, Family fam, uint64_t m, const Poly& g, Validation v) {
    switch (fam) {
        case Family::qr: return encode_qr(f, g, v);
        case Family::dbch: return encode_dbch(f, g, v);
        case Family::mth: return encode_mth(f, m, g, v);
        case Family::addp: return encode_addp(f, g, v);
    }
    throw ParseError("unknown family");
}

int run_impl(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"decoders for character-valued polynomial codes"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    CommonOpts common;
    app.add_option("--field", common.field_spec, "field spec, e.g. 'p=5 b=2 mod=1,1,1'");
    app.add_option("--field-file", common.field_file, "path to a field spec file");

    auto* cmd_info = app.add_subcommand("field-info", "print the resolved field");

    auto* cmd_encode = app.add_subcommand("encode", "encode a message polynomial");
    std::string enc_family = "qr";
    uint64_t enc_m = 3;
    bool enc_lab = false;
    std::string g_file;
    cmd_encode->add_option("--family", enc_family, "qr|dbch|mth|addp");
    cmd_encode->add_option("--m", enc_m, "power-residue order (mth)");
    cmd_encode->add_option("--g", g_file, "message polynomial file")->required();
    cmd_encode->add_flag("--lab", enc_lab, "skip message-class validation");
    cmd_encode->add_option("-o,--output", common.output, "output word file");

    auto* cmd_corrupt = app.add_subcommand("corrupt", "inject symbol errors into a word");
    uint64_t cor_e = 0, cor_seed = 0;
    cmd_corrupt->add_option("--e", cor_e, "number of errors")->required();
    cmd_corrupt->add_option("--seed", cor_seed, "random seed");
    cmd_corrupt->add_option("-i,--input", common.input, "input word file (default stdin)");
    cmd_corrupt->add_option("-o,--output", common.output, "output word file");

    auto* cmd_decode = app.add_subcommand("decode", "decode a received word");
    DecodeOpts dec;
    add_decode_params(cmd_decode, dec);
    cmd_decode->add_option("-i,--input", common.input, "input word file (default stdin)");
    cmd_decode->add_option("-o,--output", common.output, "recovered polynomial file");

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force nearest codeword");
    std::string ora_family = "qr";
    uint64_t ora_m = 3, ora_d = 1;
    cmd_oracle->add_option("--family", ora_family, "qr|dbch|mth|addp");
    cmd_oracle->add_option("--m", ora_m, "power-residue order (mth)");
    cmd_oracle->add_option("--d", ora_d, "degree bound")->required();
    cmd_oracle->add_option("-i,--input", common.input, "input word file (default stdin)");

    auto* cmd_weil = app.add_subcommand("weil", "empirical character-sum bound check");
    std::string weil_family = "mult";
    std::string f_file;
    cmd_weil->add_option("--family", weil_family, "mult|add");
    cmd_weil->add_option("--f", f_file, "polynomial file")->required();

    auto* cmd_minweight = app.add_subcommand("minweight", "dual-BCH minimum weight");
    uint64_t mw_d = 1;
    cmd_minweight->add_option("--d", mw_d, "degree bound")->required();

    auto* cmd_bench = app.add_subcommand("bench", "timing table for decoder presets");
    std::string bench_suite = "qr";
    cmd_bench->add_option("--suite", bench_suite, "qr|dbch");

    auto* cmd_roundtrip = app.add_subcommand("roundtrip", "encode-corrupt-decode Monte Carlo");
    DecodeOpts rt;
    uint64_t rt_trials = 10;
    add_decode_params(cmd_roundtrip, rt);
    cmd_roundtrip->add_option("--trials", rt_trials, "number of trials");

    std::vector<std::string> rargs(args.rbegin(), args.rend());
    try {
        app.parse(rargs);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << '\n';
        return 2;
    }

    if (*cmd_info) {
        FieldRef f = field_from_opts(common);
        out << "field: " << format_field_spec(*f) << '\n';
        out << "q=" << f->q() << '\n';
        return 0;
    }
    if (*cmd_encode) {
        FieldRef f = field_from_opts(common);
        std::ifstream is(g_file);
        if (!is) throw ParseError("cannot open message file: " + g_file);
        Poly g = parse_poly(f, slurp(is));
        ReceivedWord w = encode_any(f, parse_family(enc_family), enc_m, g,
                                    enc_lab ? Validation::lab : Validation::strict);
        write_output(common, out, format_word(w));
        return 0;
    }
    if (*cmd_corrupt) {
        ReceivedWord w = parse_word(read_input(common, in));
        write_output(common, out, format_word(corrupt(w, cor_e, cor_seed)));
        return 0;
    }
    if (*cmd_decode) {
        ReceivedWord w = parse_word(read_input(common, in));
        std::string diag;
        try {
            Poly g = decode_any(w.ctx, w, dec, diag);
            if (!common.output.empty()) {
                write_output(common, out, format_poly(g) + "\n");
                out << diag;
            } else {
                out << format_poly(g) << '\n' << diag;
            }
            return 0;
        } catch (const NoNonzeroSolution& e) {
            out << "error=" << e.what() << '\n';
            return 1;
        } catch (const AllSolutionsZeroF& e) {
            out << "error=" << e.what() << '\n';
            return 1;
        } catch (const NoConsistentMu& e) {
            out << "error=" << e.what() << '\n';
            return 1;
        }
    }
    if (*cmd_oracle) {
        ReceivedWord w = parse_word(read_input(common, in));
        CodeSpec spec{parse_family(ora_family), ora_m, ora_d};
        BruteForceResult res = brute_force_decode(w.ctx, spec, w);
        out << "g=" << format_poly(res.g) << '\n';
        out << "dist=" << res.dist << '\n';
        out << "unique=" << (res.unique ? 1 : 0) << '\n';
        return 0;
    }
    if (*cmd_weil) {
        FieldRef f = field_from_opts(common);
        std::ifstream is(f_file);
        if (!is) throw ParseError("cannot open polynomial file: " + f_file);
        Poly poly = parse_poly(f, slurp(is));
        WeilSum ws = weil_family == "mult" ? weil_sum_mult(f, poly) : weil_sum_add(f, poly);
        out << "sum=" << ws.sum << '\n';
        out << "magnitude=" << ws.magnitude << '\n';
        out << "bound=" << ws.bound << '\n';
        out << "applicable=" << (ws.applicable ? 1 : 0) << '\n';
        out << (ws.applicable ? (ws.within_bound() ? "PASS" : "FAIL") : "SKIP") << '\n';
        return ws.applicable && !ws.within_bound() ? 1 : 0;
    }
    if (*cmd_minweight) {
        FieldRef f = field_from_opts(common);
        out << "minweight=" << min_weight_dbch(f, mw_d) << '\n';
        return 0;
    }
    if (*cmd_bench) {
        out << "q,d,e,rows,cols,ms\n";
        struct Preset {
            uint64_t p, b, d, e, M;
            std::optional<uint64_t> u;
        };
        std::vector<Preset> presets;
        if (bench_suite == "qr")
            presets = {{5, 2, 1, 0, 4, {}}, {5, 2, 1, 1, 4, {}}, {101, 1, 2, 2, 6, {}}};
        else if (bench_suite == "dbch")
            presets = {{2, 4, 3, 0, 4, 7}, {2, 6, 3, 0, 4, {}}, {2, 6, 3, 2, 4, {}}};
        else
            throw ParseError("unknown bench suite: " + bench_suite);
        for (const Preset& ps : presets) {
            FieldRef f = make_field(ps.p, ps.b);
            Rng rng(1);
            size_t rows = 0, cols = 0;
            auto t0 = std::chrono::steady_clock::now();
            if (bench_suite == "qr") {
                CodeSpec spec{Family::qr, 2, ps.d};
                Poly g = random_message(f, spec, rng);
                ReceivedWord w = corrupt(encode_qr(f, g), ps.e, 1);
                QRDecoderParams params;
                params.d = ps.d;
                params.e = ps.e;
                params.M = ps.M;
                params.u = ps.u;
                params.lab = true;
                try {
                    auto res = decode_qr(f, w, params, 1);
                    rows = res.diag.rows;
                    cols = res.diag.cols;
                } catch (const Error&) {
                }
            } else {
                CodeSpec spec{Family::dbch, 2, ps.d};
                Poly g = random_message(f, spec, rng);
                ReceivedWord w = corrupt(encode_dbch(f, g), ps.e, 1);
                DBCHDecoderParams params;
                params.d = ps.d;
                params.e = ps.e;
                params.M = ps.M;
                params.u = ps.u;
                params.lab = true;
                try {
                    auto res = decode_dbch(f, w, params, 1);
                    if (!res.diag.iterations.empty()) {
                        rows = res.diag.iterations.front().step.rows;
                        cols = res.diag.iterations.front().step.cols;
                    }
                } catch (const Error&) {
                }
            }
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            out << f->q() << ',' << ps.d << ',' << ps.e << ',' << rows << ',' << cols << ','
                << ms << '\n';
        }
        return 0;
    }
    if (*cmd_roundtrip) {
        FieldRef f = field_from_opts(common);
        Family fam = parse_family(rt.family);
        CodeSpec spec{fam, rt.m, rt.d};
        uint64_t ok = 0;
        for (uint64_t t = 0; t < rt_trials; ++t) {
            Rng rng(rt.seed + t);
            Poly g = random_message(f, spec, rng);
            ReceivedWord w = corrupt(encode_any(f, fam, rt.m, g, Validation::strict), rt.e,
                                     rt.seed + t);
            std::string diag;
            DecodeOpts per = rt;
            per.seed = rt.seed + t;
            try {
                Poly rec = decode_any(f, w, per, diag);
                if (rec == g) ++ok;
            } catch (const Error&) {
            }
        }
        out << "trials=" << rt_trials << '\n';
        out << "successes=" << ok << '\n';
        std::ostringstream rate;
        rate << (rt_trials ? 100.0 * double(ok) / double(rt_trials) : 0.0);
        out << "rate=" << rate.str() << "%\n";
        return 0;
    }
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    try {
        return run_impl(args, in, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace charcodes::cli
